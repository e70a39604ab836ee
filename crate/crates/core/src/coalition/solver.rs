//! Branch and bound for the fair coalition number.
//!
//! Vertices are assigned in index order. Vertex `v` joins one of the open
//! classes or opens exactly one new class, so class labels always form a
//! restricted growth string and no two branches describe the same partition.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use super::bounds::{constructive_lower_bound, upper_bound};
use super::verify::{is_fc_partition, verify_fc_partition};
use super::{SolveError, SolveReport};
use crate::fair_domination::finish_positions;
use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// Orders above this are refused outright.
pub const SOLVER_MAX_ORDER: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Split the search over independent subtrees on the rayon pool. The
    /// value is unaffected; the witness may differ from sequential mode.
    pub parallel: bool,
    /// Prune partial assignments in which some class can no longer find a
    /// coalition partner.
    pub fairness_pruning: bool,
    /// Start from the constructive `2 d_f` partition when it applies.
    pub seed_lower_bound: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            parallel: false,
            fairness_pruning: true,
            seed_lower_bound: true,
        }
    }
}

impl SolveOptions {
    pub fn sequential() -> Self {
        Self::default()
    }

    pub fn parallel() -> Self {
        SolveOptions {
            parallel: true,
            ..Self::default()
        }
    }
}

/// Exact fair coalition number with default (sequential) options.
pub fn cf_solve(g: &Graph) -> Result<SolveReport, SolveError> {
    cf_solve_with(g, &SolveOptions::default())
}

pub fn cf_solve_with(g: &Graph, opts: &SolveOptions) -> Result<SolveReport, SolveError> {
    let n = g.order();
    if n > SOLVER_MAX_ORDER {
        return Err(SolveError::OrderAboveCap {
            order: n,
            cap: SOLVER_MAX_ORDER,
        });
    }
    let start = Instant::now();
    let ub = upper_bound(g).min(n);

    let seed = if opts.seed_lower_bound {
        constructive_lower_bound(g).map(|lb| lb.witness)
    } else {
        None
    };
    let lower_bound = seed.as_ref().map_or(0, Partition::len);

    let ctx = Context {
        g,
        n,
        ub,
        finish_at: finish_positions(g),
        full: g.full_vertices(),
        fairness_pruning: opts.fairness_pruning,
        best: AtomicUsize::new(lower_bound),
    };

    let (found, nodes) = if opts.parallel {
        ctx.run_parallel()
    } else {
        let mut w = Worker::new(&ctx);
        w.descend(0);
        (w.found, w.nodes)
    };

    let witness = match found {
        Some(labels) => Partition::from_labels(&labels),
        None => seed.unwrap_or_default(),
    };
    let certificate = if witness.is_empty() {
        Default::default()
    } else {
        verify_fc_partition(g, &witness).expect("solver witnesses are verified")
    };
    Ok(SolveReport {
        value: witness.len(),
        witness,
        certificate,
        upper_bound: ub,
        lower_bound,
        nodes,
        elapsed: start.elapsed(),
    })
}

struct Context<'a> {
    g: &'a Graph,
    n: usize,
    ub: usize,
    finish_at: Vec<VertexSet>,
    full: VertexSet,
    fairness_pruning: bool,
    /// Size of the best verified partition known to any worker.
    best: AtomicUsize,
}

impl Context<'_> {
    /// Enumerates restricted-growth prefixes of a fixed depth and solves each
    /// subtree independently. Ties are broken by prefix order.
    fn run_parallel(&self) -> (Option<Vec<usize>>, u64) {
        let depth = self.n.min(7);
        let mut prefixes = Vec::new();
        let mut labels = Vec::with_capacity(depth);
        collect_prefixes(depth, self.ub, &mut labels, 0, &mut prefixes);

        let results: Mutex<Vec<(usize, usize, Vec<usize>)>> = Mutex::new(Vec::new());
        let nodes: u64 = prefixes
            .par_iter()
            .enumerate()
            .map(|(idx, prefix)| {
                let mut w = Worker::new(self);
                if w.load_prefix(prefix) {
                    w.descend(prefix.len());
                }
                if let Some(labels) = w.found.take() {
                    let k = labels.iter().max().map_or(0, |m| m + 1);
                    results.lock().expect("no poisoned lock").push((k, idx, labels));
                }
                w.nodes
            })
            .sum();
        let results = results.into_inner().expect("no poisoned lock");
        let best = results
            .into_iter()
            .min_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)))
            .map(|(_, _, l)| l);
        (best, nodes)
    }
}

fn collect_prefixes(
    depth: usize,
    cap: usize,
    labels: &mut Vec<usize>,
    open: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if labels.len() == depth {
        out.push(labels.clone());
        return;
    }
    for c in 0..=open.min(cap.saturating_sub(1)) {
        labels.push(c);
        collect_prefixes(depth, cap, labels, open.max(c + 1), out);
        labels.pop();
    }
}

struct Worker<'c, 'g> {
    ctx: &'c Context<'g>,
    labels: Vec<usize>,
    classes: Vec<VertexSet>,
    found: Option<Vec<usize>>,
    nodes: u64,
}

impl<'c, 'g> Worker<'c, 'g> {
    fn new(ctx: &'c Context<'g>) -> Self {
        Worker {
            ctx,
            labels: vec![0; ctx.n],
            classes: Vec::with_capacity(ctx.n),
            found: None,
            nodes: 0,
        }
    }

    fn load_prefix(&mut self, prefix: &[usize]) -> bool {
        for (v, &c) in prefix.iter().enumerate() {
            if c == self.classes.len() {
                self.classes.push(VertexSet::EMPTY);
            }
            self.classes[c].insert(v);
            self.labels[v] = c;
            if !self.viable(v + 1) {
                return false;
            }
        }
        true
    }

    fn best(&self) -> usize {
        self.ctx.best.load(Ordering::Relaxed)
    }

    fn viable(&self, pos: usize) -> bool {
        let best = self.best();
        if best >= self.ctx.ub || self.classes.len() + (self.ctx.n - pos) <= best {
            return false;
        }
        !self.ctx.fairness_pruning || self.partners_possible(pos)
    }

    fn descend(&mut self, pos: usize) {
        self.nodes += 1;
        if !self.viable(pos) {
            return;
        }
        if pos == self.ctx.n {
            self.leaf();
            return;
        }
        let open = self.classes.len();
        // opening a class first reaches large partitions early
        let order = std::iter::once(open).chain(0..open);
        for c in order {
            if c == self.ctx.ub {
                continue;
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

    fn leaf(&mut self) {
        let k = self.classes.len();
        if k > self.best() && is_fc_partition(self.ctx.g, &self.classes) {
            // k beats the global best, hence everything this worker found before
            self.ctx.best.fetch_max(k, Ordering::Relaxed);
            self.found = Some(self.labels.clone());
        }
    }

    /// Every class that is not a lone full vertex needs some partner `B` (an
    /// open class, or a class opened later from unassigned vertices) such
    /// that all finished vertices outside the union already see it with one
    /// common nonzero count. Finished vertices have every neighbor assigned,
    /// so these counts can no longer change.
    fn partners_possible(&self, pos: usize) -> bool {
        let g = self.ctx.g;
        let finished = self.ctx.finish_at[pos];
        let can_open = pos < self.ctx.n && self.classes.len() < self.ctx.ub;
        let fair_on_finished = |m: VertexSet| -> bool {
            let mut k = 0;
            for w in finished.difference(m) {
                let c = g.neighbors(w).intersection(m).len();
                if c == 0 || (k != 0 && c != k) {
                    return false;
                }
                k = c;
            }
            true
        };
        let c = self.classes.len();
        (0..c).all(|a| {
            let ca = self.classes[a];
            if ca.len() == 1 && ca.is_subset(self.ctx.full) {
                return true;
            }
            (0..c).any(|b| b != a && fair_on_finished(ca.union(self.classes[b])))
                || (can_open && fair_on_finished(ca))
        })
    }
}
