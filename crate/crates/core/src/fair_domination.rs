//! Fair dominating sets: recognition, the minimum-size invariants
//! `gamma`, `gamma_f` and `fd_i`, and the fair domatic number.
//!
//! A set `D` is a `k`-fair dominating set when every vertex outside `D` has
//! exactly `k >= 1` neighbors in `D`. The whole vertex set qualifies
//! vacuously, which makes every invariant here total on nonempty graphs.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FdError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("fairness constant must be at least 1")]
    ZeroFairness,
}

/// Outcome of checking whether a set is fair dominating.
///
/// Outside vertices are scanned in increasing order and the first defect
/// found is reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FdStatus {
    /// `vertex` lies outside the set and has no neighbor in it.
    NotDominating { vertex: usize },
    /// Two outside vertices see different, nonzero numbers of set members.
    NotFair {
        first: usize,
        first_count: usize,
        second: usize,
        second_count: usize,
    },
    /// Every outside vertex has exactly `k` neighbors in the set.
    Fair { k: usize },
    /// The set is the whole vertex set.
    FairVacuous,
}

impl FdStatus {
    /// True for `Fair` and `FairVacuous`.
    #[inline]
    pub fn is_fd(self) -> bool {
        matches!(self, FdStatus::Fair { .. } | FdStatus::FairVacuous)
    }
}

impl std::fmt::Display for FdStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            FdStatus::NotDominating { vertex } => {
                write!(f, "not dominating: vertex {vertex} has no neighbor in the set")
            }
            FdStatus::NotFair {
                first,
                first_count,
                second,
                second_count,
            } => write!(
                f,
                "not fair: vertex {first} has {first_count} neighbors in the set, vertex {second} has {second_count}"
            ),
            FdStatus::Fair { k } => write!(f, "{k}-fair dominating"),
            FdStatus::FairVacuous => f.write_str("fair dominating (whole vertex set)"),
        }
    }
}

/// `|N(v) ∩ d|`.
pub fn domination_count(g: &Graph, d: VertexSet, v: usize) -> Result<usize, FdError> {
    if v >= g.order() {
        return Err(FdError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(g.neighbors(v).intersection(d).len())
}

pub fn fd_status(g: &Graph, d: VertexSet) -> FdStatus {
    let outside = g.vertices().difference(d);
    if outside.is_empty() {
        return FdStatus::FairVacuous;
    }
    let mut reference: Option<(usize, usize)> = None;
    for v in outside {
        let count = g.neighbors(v).intersection(d).len();
        if count == 0 {
            return FdStatus::NotDominating { vertex: v };
        }
        match reference {
            None => reference = Some((v, count)),
            Some((first, first_count)) if first_count != count => {
                return FdStatus::NotFair {
                    first,
                    first_count,
                    second: v,
                    second_count: count,
                }
            }
            Some(_) => {}
        }
    }
    FdStatus::Fair {
        k: reference.expect("outside is nonempty").1,
    }
}

/// Fast form of `fd_status(g, d).is_fd()`.
#[inline]
pub fn is_fd(g: &Graph, d: VertexSet) -> bool {
    let mut outside = g.vertices().difference(d).bits();
    if outside == 0 {
        return true;
    }
    let first = outside.trailing_zeros() as usize;
    let k = g.neighbors(first).intersection(d).len();
    if k == 0 {
        return false;
    }
    outside &= outside - 1;
    while outside != 0 {
        let v = outside.trailing_zeros() as usize;
        if g.neighbors(v).intersection(d).len() != k {
            return false;
        }
        outside &= outside - 1;
    }
    true
}

pub fn is_dominating(g: &Graph, d: VertexSet) -> bool {
    g.vertices()
        .difference(d)
        .iter()
        .all(|v| !g.neighbors(v).is_disjoint(d))
}

/// First subset of `ground` (by size, then lexicographically) satisfying `pred`.
fn smallest_subset(ground: VertexSet, pred: impl Fn(VertexSet) -> bool) -> Option<VertexSet> {
    (1..=ground.len()).find_map(|k| ground.subsets_of_size(k).find(|&s| pred(s)))
}

/// A minimum dominating set (lexicographically first among minimum ones).
pub fn min_dominating_set(g: &Graph) -> VertexSet {
    smallest_subset(g.vertices(), |s| is_dominating(g, s)).expect("V dominates")
}

/// Domination number.
pub fn gamma(g: &Graph) -> usize {
    min_dominating_set(g).len()
}

/// A minimum fair dominating set.
pub fn min_fd_set(g: &Graph) -> VertexSet {
    min_fd_subset(g, g.vertices()).expect("V is fair dominating")
}

/// Fair domination number.
pub fn gamma_f(g: &Graph) -> usize {
    min_fd_set(g).len()
}

/// Minimum `i`-fair dominating set. `V` counts as `i`-fair for every `i`.
pub fn min_ifd_set(g: &Graph, i: usize) -> Result<VertexSet, FdError> {
    if i == 0 {
        return Err(FdError::ZeroFairness);
    }
    let all = g.vertices();
    Ok(smallest_subset(all, |s| {
        s == all || fd_status(g, s) == FdStatus::Fair { k: i }
    })
    .expect("V qualifies"))
}

/// `fd_i(G)`: minimum size of an `i`-fair dominating set.
pub fn fd_i(g: &Graph, i: usize) -> Result<usize, FdError> {
    min_ifd_set(g, i).map(|s| s.len())
}

/// A minimum-cardinality fair dominating set contained in `s`, or `None` if
/// no subset of `s` is fair dominating. Minimum cardinality implies that no
/// proper subset of the result is fair dominating.
pub fn min_fd_subset(g: &Graph, s: VertexSet) -> Option<VertexSet> {
    smallest_subset(s, |d| is_fd(g, d))
}

/// A maximum partition of `V` into fair dominating sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FairDomaticResult {
    pub value: usize,
    pub witness: Partition,
}

/// Exact fair domatic number by branch and bound over class assignments.
pub fn fair_domatic_number(g: &Graph) -> FairDomaticResult {
    let n = g.order();
    let mut search = DomaticSearch {
        g,
        // with two or more classes each one dominates a minimum-degree vertex
        cap: g.min_degree() + 1,
        finish_at: finish_positions(g),
        labels: vec![0; n],
        classes: Vec::with_capacity(n),
        best: 1,
        best_labels: vec![0; n],
    };
    if search.cap > 1 {
        search.descend(0);
    }
    FairDomaticResult {
        value: search.best,
        witness: Partition::from_labels(&search.best_labels),
    }
}

/// For each assignment position `p`, the vertices whose closed neighborhood
/// lies entirely within `0..p`.
pub(crate) fn finish_positions(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    (0..=n)
        .map(|p| {
            (0..n)
                .filter(|&w| g.closed_neighbors(w).last().is_some_and(|m| m < p))
                .collect()
        })
        .collect()
}

struct DomaticSearch<'a> {
    g: &'a Graph,
    cap: usize,
    finish_at: Vec<VertexSet>,
    labels: Vec<usize>,
    classes: Vec<VertexSet>,
    best: usize,
    best_labels: Vec<usize>,
}

impl DomaticSearch<'_> {
    fn descend(&mut self, pos: usize) {
        let n = self.g.order();
        if self.best >= self.cap || self.classes.len() + (n - pos) <= self.best {
            return;
        }
        if !self.prefix_feasible(pos) {
            return;
        }
        if pos == n {
            if self.classes.iter().all(|&c| is_fd(self.g, c)) {
                self.best = self.classes.len();
                self.best_labels.clone_from(&self.labels);
            }
            return;
        }
        let open = self.classes.len();
        for c in 0..=open {
            if c == self.cap {
                break;
            }
            if c == open {
                self.classes.push(VertexSet::EMPTY);
            }
            self.classes[c].insert(pos);
            self.labels[pos] = c;
            self.descend(pos + 1);
            self.classes[c].remove(pos);
            if c == open {
                self.classes.pop();
            }
        }
    }

    /// Finished vertices have final neighbor counts in every class; each class
    /// must already see them all with one common nonzero count.
    fn prefix_feasible(&self, pos: usize) -> bool {
        let finished = self.finish_at[pos];
        self.classes.iter().all(|&c| {
            let mut k = None;
            finished.difference(c).iter().all(|w| {
                let count = self.g.neighbors(w).intersection(c).len();
                count > 0 && *k.get_or_insert(count) == count
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{corona_k1, gen_complete, gen_cycle, gen_empty, gen_path};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn domination_count_examples() {
        let c4 = gen_cycle(4).unwrap();
        assert_eq!(domination_count(&c4, set(&[0, 2]), 1), Ok(2));
        assert_eq!(domination_count(&c4, VertexSet::EMPTY, 3), Ok(0));
        let p4 = gen_path(4).unwrap();
        assert_eq!(domination_count(&p4, set(&[0, 3]), 1), Ok(1));
        assert_eq!(
            domination_count(&p4, set(&[0]), 4),
            Err(FdError::VertexOutOfRange { vertex: 4, order: 4 })
        );
    }

    #[test]
    fn fd_status_examples() {
        let p4 = gen_path(4).unwrap();
        assert_eq!(fd_status(&p4, set(&[0, 3])), FdStatus::Fair { k: 1 });
        assert_eq!(fd_status(&p4, p4.vertices()), FdStatus::FairVacuous);
        let c4 = gen_cycle(4).unwrap();
        assert_eq!(fd_status(&c4, set(&[0, 1])), FdStatus::Fair { k: 1 });
        let p5 = gen_path(5).unwrap();
        assert_eq!(
            fd_status(&p5, set(&[0, 2])),
            FdStatus::NotFair {
                first: 1,
                first_count: 2,
                second: 3,
                second_count: 1
            }
        );
        assert_eq!(
            fd_status(&p5, VertexSet::EMPTY),
            FdStatus::NotDominating { vertex: 0 }
        );
        assert_eq!(fd_status(&p5, set(&[1])), FdStatus::NotDominating { vertex: 3 });
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&gen_complete(5).unwrap()), 1);
        assert_eq!(gamma(&gen_path(5).unwrap()), 2);
        assert_eq!(gamma(&gen_empty(4).unwrap()), 4);
    }

    #[test]
    fn gamma_f_examples() {
        assert_eq!(gamma_f(&gen_empty(4).unwrap()), 4);
        assert_eq!(gamma_f(&gen_path(4).unwrap()), 2);
        let t = corona_k1(&gen_path(3).unwrap()).unwrap();
        assert_eq!(gamma_f(&t), 3);
    }

    #[test]
    fn fd_i_examples() {
        assert_eq!(fd_i(&gen_path(4).unwrap(), 1), Ok(2));
        assert_eq!(fd_i(&gen_cycle(4).unwrap(), 2), Ok(2));
        let k1 = gen_path(1).unwrap();
        for i in 1..5 {
            assert_eq!(fd_i(&k1, i), Ok(1));
        }
        assert_eq!(fd_i(&k1, 0), Err(FdError::ZeroFairness));
        // P_3 has no 3-fair proper subset
        assert_eq!(fd_i(&gen_path(3).unwrap(), 3), Ok(3));
    }

    #[test]
    fn min_fd_subset_examples() {
        let k3 = gen_complete(3).unwrap();
        assert_eq!(min_fd_subset(&k3, k3.vertices()).unwrap().len(), 1);
        let p4 = gen_path(4).unwrap();
        assert_eq!(min_fd_subset(&p4, set(&[0, 3])), Some(set(&[0, 3])));
        let p5 = gen_path(5).unwrap();
        assert_eq!(min_fd_subset(&p5, set(&[1])), None);
    }

    #[test]
    fn fair_domatic_examples() {
        let e3 = gen_empty(3).unwrap();
        let r = fair_domatic_number(&e3);
        assert_eq!(r.value, 1);
        assert_eq!(r.witness, Partition::new(vec![e3.vertices()]));

        let c4 = gen_cycle(4).unwrap();
        let r = fair_domatic_number(&c4);
        assert_eq!(r.value, 2);
        assert!(r.witness.classes().iter().all(|&c| fd_status(&c4, c).is_fd()));
        assert_eq!(fd_status(&c4, set(&[0, 2])), FdStatus::Fair { k: 2 });

        let t = corona_k1(&gen_path(3).unwrap()).unwrap();
        let r = fair_domatic_number(&t);
        assert_eq!(r.value, 2);
        for &c in r.witness.classes() {
            assert!(fd_status(&t, c).is_fd());
        }

        assert_eq!(fair_domatic_number(&gen_complete(4).unwrap()).value, 4);
    }

    #[test]
    fn is_fd_agrees_with_status() {
        let g = gen_path(6).unwrap();
        for bits in 0..64u64 {
            let d = VertexSet::from_bits(bits);
            assert_eq!(is_fd(&g, d), fd_status(&g, d).is_fd(), "{d}");
        }
    }
}
