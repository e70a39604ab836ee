//! Bounds on the fair coalition number from fair domination.

use serde::Serialize;
use thiserror::Error;

use super::verify::{is_fair_coalition, verify_fc_partition};
use crate::fair_domination::{fair_domatic_number, gamma_f, min_fd_subset};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// `n - gamma_f + 2`, an upper bound on the fair coalition number.
pub fn upper_bound(g: &Graph) -> usize {
    g.order() - gamma_f(g) + 2
}

/// `n - gamma_f`, the sharper bound sometimes claimed for connected graphs of
/// order at least 3. It fails on `P_4`; it is reported, never used to prune.
pub fn upper_bound_connected_claim(g: &Graph) -> usize {
    g.order() - gamma_f(g)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LowerBoundError {
    #[error("graph order {0} is below 3")]
    OrderTooSmall(usize),
    #[error("vertex {0} is adjacent to every other vertex")]
    FullVertex(usize),
    #[error("no arrangement of the split fair domatic classes verified")]
    ConstructionFailed,
}

/// How the leftover vertices of the last domatic class were placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBoundRoute {
    /// Nothing was left over; every class was split in two.
    SplitOnly,
    /// Leftovers formed an extra class with a coalition partner.
    ExtraClass,
    /// Leftovers were merged into the second half of the last split class.
    MergedIntoLast,
    /// The two placements above failed verification; leftovers were merged
    /// into the class at `index` instead.
    MergedInto { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DomaticLowerBound {
    /// Number of classes in the witness.
    pub bound: usize,
    pub witness: Partition,
    /// The fair domatic number the construction started from.
    pub domatic: usize,
    pub route: LowerBoundRoute,
}

/// Builds an fc-partition with at least `2 d_f(G)` classes from a maximum
/// fair domatic partition.
///
/// Every domatic class but the last is shrunk to a minimum fair dominating
/// subset, with the removed vertices moved to the last class; the last class
/// is then shrunk the same way. Each shrunk class is split into its first
/// vertex and the rest. Both halves are non-FD (a proper FD subset would
/// contradict minimum size) and their union is FD, so they are partners.
/// The leftover vertices of the last class become their own class when they
/// have a coalition partner among the halves, and otherwise join the second
/// half of the last class.
pub fn lower_bound_from_domatic(g: &Graph) -> Result<DomaticLowerBound, LowerBoundError> {
    let n = g.order();
    if n < 3 {
        return Err(LowerBoundError::OrderTooSmall(n));
    }
    if let Some(v) = g.full_vertices().first() {
        return Err(LowerBoundError::FullVertex(v));
    }
    let domatic = fair_domatic_number(g);
    let k = domatic.value;
    let mut classes: Vec<VertexSet> = domatic.witness.into_classes();

    let mut leftover = VertexSet::EMPTY;
    for class in classes.iter_mut().take(k - 1) {
        let core = min_fd_subset(g, *class).expect("domatic classes are FD");
        leftover = leftover.union(class.difference(core));
        *class = core;
    }
    let last = classes[k - 1].union(leftover);
    // the original last class is an FD subset, so a core exists
    let last_core = min_fd_subset(g, last).expect("contains an FD subset");
    classes[k - 1] = last_core;
    let remainder = last.difference(last_core);

    let mut halves = Vec::with_capacity(2 * k + 1);
    for &c in &classes {
        let first = VertexSet::singleton(c.first().expect("FD classes are nonempty"));
        halves.push(first);
        halves.push(c.difference(first));
    }

    let finish = |witness: Partition, route| {
        verify_fc_partition(g, &witness).ok().map(|_| DomaticLowerBound {
            bound: witness.len(),
            witness,
            domatic: k,
            route,
        })
    };

    if remainder.is_empty() {
        return finish(Partition::new(halves), LowerBoundRoute::SplitOnly)
            .ok_or(LowerBoundError::ConstructionFailed);
    }

    let has_partner = halves.iter().any(|&h| {
        is_fair_coalition(g, remainder, h).is_ok_and(|c| c.is_coalition())
    });
    if has_partner {
        let mut with_extra = halves.clone();
        with_extra.push(remainder);
        if let Some(r) = finish(Partition::new(with_extra), LowerBoundRoute::ExtraClass) {
            return Ok(r);
        }
    }

    let merged_into = |index: usize| {
        let mut merged = halves.clone();
        merged[index] = merged[index].union(remainder);
        Partition::new(merged)
    };
    let last_half = halves.len() - 1;
    if let Some(r) = finish(merged_into(last_half), LowerBoundRoute::MergedIntoLast) {
        return Ok(r);
    }
    (0..last_half)
        .find_map(|i| finish(merged_into(i), LowerBoundRoute::MergedInto { index: i }))
        .ok_or(LowerBoundError::ConstructionFailed)
}

/// The constructive bound when it applies, for seeding the exact search.
pub(crate) fn constructive_lower_bound(g: &Graph) -> Option<DomaticLowerBound> {
    lower_bound_from_domatic(g).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::cf_solve;
    use crate::graph::{gen_complete, gen_complete_bipartite, gen_cycle, gen_empty, gen_path};

    #[test]
    fn upper_bound_examples() {
        assert_eq!(upper_bound(&gen_path(4).unwrap()), 4);
        assert_eq!(upper_bound(&gen_empty(5).unwrap()), 2);
        let t = crate::graph::corona_k1(&gen_path(3).unwrap()).unwrap();
        assert_eq!(upper_bound(&t), 5);
        assert_eq!(upper_bound_connected_claim(&gen_path(4).unwrap()), 2);
    }

    #[test]
    fn lower_bound_preconditions() {
        assert_eq!(
            lower_bound_from_domatic(&gen_path(2).unwrap()),
            Err(LowerBoundError::OrderTooSmall(2))
        );
        assert_eq!(
            lower_bound_from_domatic(&gen_complete(4).unwrap()),
            Err(LowerBoundError::FullVertex(0))
        );
        assert_eq!(
            lower_bound_from_domatic(&gen_path(3).unwrap()),
            Err(LowerBoundError::FullVertex(1))
        );
    }

    #[test]
    fn lower_bound_c6() {
        let g = gen_cycle(6).unwrap();
        let lb = lower_bound_from_domatic(&g).unwrap();
        assert_eq!(lb.domatic, fair_domatic_number(&g).value);
        assert!(lb.bound >= 2 * lb.domatic);
        assert!(lb.bound >= 4);
        assert!(verify_fc_partition(&g, &lb.witness).is_ok());
    }

    #[test]
    fn lower_bound_p4() {
        let g = gen_path(4).unwrap();
        let lb = lower_bound_from_domatic(&g).unwrap();
        assert_eq!(lb.domatic, 2);
        assert!(lb.bound >= 4);
    }

    #[test]
    fn lower_bound_prism_and_k33() {
        let prism = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        for g in [prism, gen_complete_bipartite(3, 3).unwrap()] {
            let lb = lower_bound_from_domatic(&g).unwrap();
            assert!(lb.bound >= 2 * lb.domatic);
            assert!(cf_solve(&g).unwrap().value >= lb.bound);
        }
    }

    #[test]
    fn lower_bound_edgeless() {
        let g = gen_empty(3).unwrap();
        let lb = lower_bound_from_domatic(&g).unwrap();
        assert_eq!(lb.domatic, 1);
        assert!(lb.bound >= 2);
    }
}
