use std::time::Instant;

use super::verify::{is_fc_partition, verify_fc_partition};
use super::{SolveError, SolveReport};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`cf_bruteforce`] (Bell(11) = 678 570 partitions).
pub const BRUTEFORCE_MAX_ORDER: usize = 11;

/// Restricted growth strings of length `n`: `a[0] = 0` and
/// `a[i] <= 1 + max(a[..i])`. Each one encodes a distinct set partition.
pub struct RestrictedGrowth {
    labels: Vec<usize>,
    // prefix maxima: max[i] = max(labels[..=i])
    max: Vec<usize>,
    started: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            labels: vec![0; n],
            max: vec![0; n],
            started: false,
        }
    }

    /// Advances to the next string; returns `false` when exhausted.
    pub fn advance(&mut self) -> bool {
        let n = self.labels.len();
        if !self.started {
            self.started = true;
            return n > 0;
        }
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.labels[i] <= self.max[i - 1] {
                self.labels[i] += 1;
                self.max[i] = self.max[i - 1].max(self.labels[i]);
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.max[j] = self.max[i];
                }
                return true;
            }
        }
        false
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn class_count(&self) -> usize {
        self.max.last().map_or(0, |m| m + 1)
    }
}

/// Exact fair coalition number by enumerating every set partition of `V`.
/// Among partitions of maximum size, the first in restricted-growth order is
/// reported. Returns value 0 when no fc-partition exists.
pub fn cf_bruteforce(g: &Graph) -> Result<SolveReport, SolveError> {
    let n = g.order();
    if n > BRUTEFORCE_MAX_ORDER {
        return Err(SolveError::OrderAboveCap {
            order: n,
            cap: BRUTEFORCE_MAX_ORDER,
        });
    }
    let start = Instant::now();
    let mut rgs = RestrictedGrowth::new(n);
    let mut best: Option<Vec<usize>> = None;
    let mut best_len = 0;
    let mut examined = 0u64;
    let mut classes = Vec::with_capacity(n);
    while rgs.advance() {
        examined += 1;
        let k = rgs.class_count();
        if k <= best_len {
            continue;
        }
        classes.clear();
        classes.resize(k, VertexSet::EMPTY);
        for (v, &c) in rgs.labels().iter().enumerate() {
            classes[c].insert(v);
        }
        if is_fc_partition(g, &classes) {
            best_len = k;
            best = Some(rgs.labels().to_vec());
        }
    }
    let witness = best.map_or_else(Partition::default, |l| Partition::from_labels(&l));
    let certificate = if witness.is_empty() {
        Default::default()
    } else {
        verify_fc_partition(g, &witness).expect("accepted by the fast check")
    };
    Ok(SolveReport {
        value: witness.len(),
        witness,
        certificate,
        upper_bound: n,
        lower_bound: 0,
        nodes: examined,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_cycle, gen_empty, gen_path};

    #[test]
    fn bell_numbers() {
        let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate().skip(1) {
            let mut r = RestrictedGrowth::new(n);
            let mut count = 0;
            while r.advance() {
                count += 1;
            }
            assert_eq!(count, b, "n = {n}");
        }
    }

    #[test]
    fn rgs_order() {
        let mut r = RestrictedGrowth::new(3);
        let mut all = Vec::new();
        while r.advance() {
            all.push(r.labels().to_vec());
        }
        assert_eq!(
            all,
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1], vec![0, 1, 2]]
        );
    }

    #[test]
    fn p2_all_singletons() {
        let r = cf_bruteforce(&gen_path(2).unwrap()).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness, Partition::singletons(2));
    }

    #[test]
    fn c4_is_four() {
        let r = cf_bruteforce(&gen_cycle(4).unwrap()).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.witness, Partition::singletons(4));
    }

    #[test]
    fn edgeless_three() {
        assert_eq!(cf_bruteforce(&gen_empty(3).unwrap()).unwrap().value, 2);
    }

    #[test]
    fn cap_enforced() {
        assert_eq!(
            cf_bruteforce(&gen_path(12).unwrap()).unwrap_err(),
            SolveError::OrderAboveCap { order: 12, cap: 11 }
        );
    }
}
