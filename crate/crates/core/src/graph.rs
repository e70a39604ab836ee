//! Simple undirected graphs on at most 64 vertices.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("graph order must be at least {min} for this family, got {got}")]
    OrderTooSmall { min: usize, got: usize },
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
}

/// A simple undirected graph stored as one neighbor bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        if n == 0 {
            return Err(GraphError::OrderTooSmall { min: 1, got: 0 });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, order: n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Removes the edge `uv` if present.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.order() && v < self.order() {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.order()).all(|v| self.degree(v) == d)
    }

    /// Vertices adjacent to every other vertex.
    pub fn full_vertices(&self) -> VertexSet {
        let n = self.order();
        (0..n).filter(|&v| self.degree(v) == n - 1).collect()
    }

    pub fn has_full_vertex(&self) -> bool {
        !self.full_vertices().is_empty()
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length must equal order");
        let mut adj = vec![VertexSet::EMPTY; self.order()];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj }
    }

    /// Vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.order();
        let mut g = Graph::empty(n + other.order())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + n, v + n)?;
        }
        Ok(g)
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        for s in 0..n {
            // BFS from s; a non-tree edge closing at depths du, dv gives a cycle of length <= du+dv+1
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::from([s]);
            dist[s] = 0;
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// Path `P_n` on vertices `0 - 1 - ... - (n-1)`.
pub fn gen_path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::OrderTooSmall { min: 1, got: 0 });
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// Cycle `C_n` on vertices `0..n` in order.
pub fn gen_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::OrderTooSmall { min: 3, got: n });
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn gen_complete(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn gen_empty(n: usize) -> Result<Graph, GraphError> {
    Graph::empty(n)
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
pub fn gen_petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("petersen construction is valid")
}

/// Attaches a new pendant vertex `v + n` to every vertex `v` of `g`.
pub fn corona_k1(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.order();
    let mut h = Graph::empty(2 * n)?;
    for (u, v) in g.edges() {
        h.add_edge(u, v)?;
    }
    for v in 0..n {
        h.add_edge(v, v + n)?;
    }
    Ok(h)
}

/// Uniform random labeled tree from a seeded Prüfer sequence.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    if n == 1 {
        return Ok(g);
    }
    if n == 2 {
        g.add_edge(0, 1)?;
        return Ok(g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &prufer {
        degree[v] += 1;
    }
    for &v in &prufer {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        g.add_edge(leaf, v)?;
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    g.add_edge(rest[0], rest[1])?;
    Ok(g)
}

/// Erdős–Rényi `G(n, p)` with a seeded generator.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// A uniformly random vertex permutation, seeded.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    perm
}
