//! Exhaustive generators used as oracles: all graphs of a small order up to
//! isomorphism, and all cubic graphs of a given order.

use std::collections::{HashMap, HashSet};

use crate::graph::Graph;
use crate::iso::is_isomorphic;

/// Largest order accepted by [`all_graphs`].
pub const ALL_GRAPHS_MAX_ORDER: usize = 7;

/// Edge bits of `g` under the relabeling `perm` (old -> new), upper triangle
/// column-major, as a single integer.
fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for (u, v) in g.edges() {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        code |= 1u64 << (b * (b - 1) / 2 + a);
    }
    code
}

/// Canonical integer code of `g`: the minimum edge code over all vertex
/// relabelings that keep vertices sorted by degree. Intended for n <= 8.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| g.degree(v));
    // cells of equal degree occupy consecutive target positions
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut perm = vec![0usize; n];
    let mut best = u64::MAX;
    permute_cells(g, &cells, 0, 0, &mut perm, &mut best);
    best
}

fn permute_cells(
    g: &Graph,
    cells: &[Vec<usize>],
    cell: usize,
    offset: usize,
    perm: &mut Vec<usize>,
    best: &mut u64,
) {
    if cell == cells.len() {
        *best = (*best).min(code_under(g, perm));
        return;
    }
    let mut members = cells[cell].clone();
    heap_permutations(&mut members, &mut |order: &[usize]| {
        for (i, &v) in order.iter().enumerate() {
            perm[v] = offset + i;
        }
        permute_cells(g, cells, cell + 1, offset + order.len(), perm, best);
    });
}

fn heap_permutations(items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    fn rec(k: usize, items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            visit(items);
            return;
        }
        for i in 0..k - 1 {
            rec(k - 1, items, visit);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
        rec(k - 1, items, visit);
    }
    let k = items.len();
    rec(k, items, visit);
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n).expect("order in range");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (code >> k) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            k += 1;
        }
    }
    g
}

/// One representative of every isomorphism class of simple graphs on `n`
/// vertices, sorted by canonical code. Counts for n = 1..=7 are
/// 1, 2, 4, 11, 34, 156, 1044.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=ALL_GRAPHS_MAX_ORDER).contains(&n),
        "all_graphs supports 1 <= n <= {ALL_GRAPHS_MAX_ORDER}"
    );
    let nbits = n * (n - 1) / 2;
    let mut seen = HashSet::new();
    for code in 0..(1u64 << nbits) {
        let g = graph_from_code(n, code);
        seen.insert(canonical_code(&g));
    }
    let mut codes: Vec<u64> = seen.into_iter().collect();
    codes.sort_unstable();
    codes.into_iter().map(|c| graph_from_code(n, c)).collect()
}

/// All graphs of order `1..=max_n` up to isomorphism.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).collect()
}

/// All trees on `n` vertices up to isomorphism, `1 <= n <= 7`.
pub fn all_trees(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(|g| g.size() + 1 == n && g.is_connected())
        .collect()
}

/// Keeps the first representative of each isomorphism class, preserving order.
pub fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut out: Vec<Graph> = Vec::new();
    for g in graphs {
        let key = invariant_key(&g);
        let bucket = buckets.entry(key).or_default();
        if bucket.iter().any(|&i| is_isomorphic(&out[i], &g)) {
            continue;
        }
        bucket.push(out.len());
        out.push(g);
    }
    out
}

/// Cheap isomorphism invariant: per-vertex (triangles, 2-step walk counts)
/// sorted, prefixed by the degree sequence.
fn invariant_key(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut key = g.degree_sequence();
    let mut per_vertex: Vec<(usize, usize, usize)> = (0..n)
        .map(|v| {
            let nb = g.neighbors(v);
            let tri: usize = nb.iter().map(|u| g.neighbors(u).intersection(nb).len()).sum();
            let mut second = crate::VertexSet::EMPTY;
            for u in nb {
                second = second.union(g.neighbors(u));
            }
            let second = second.difference(g.closed_neighbors(v)).len();
            (g.degree(v), tri, second)
        })
        .collect();
    per_vertex.sort_unstable();
    for (d, t, s) in per_vertex {
        key.extend([d, t, s]);
    }
    key
}

/// All connected 3-regular graphs on `n` vertices, up to isomorphism.
///
/// Labelings are generated in breadth-first order from vertex 0: a vertex is
/// filled to degree three before any later vertex, and new vertices are only
/// introduced as the next unused label, so every connected cubic graph is
/// reached while most relabelings are never produced.
pub fn connected_cubic_graphs(n: usize) -> Vec<Graph> {
    if n < 4 || n % 2 == 1 {
        return Vec::new();
    }
    let mut found = Vec::new();
    let mut g = Graph::empty(n).expect("order in range");
    grow_cubic(&mut g, 1, &mut found);
    dedup_isomorphic(found)
}

fn grow_cubic(g: &mut Graph, introduced: usize, found: &mut Vec<Graph>) {
    let n = g.order();
    let Some(v) = (0..n).find(|&v| g.degree(v) < 3) else {
        if introduced == n {
            found.push(g.clone());
        }
        return;
    };
    if v >= introduced {
        // every introduced vertex is saturated: the component closed early
        return;
    }
    // neighbors added while filling v must be increasing
    let floor = g.neighbors(v).iter().filter(|&u| u > v).max().map_or(v + 1, |u| u + 1);
    let limit = introduced.min(n - 1);
    for u in floor..=limit {
        if g.degree(u) >= 3 || g.has_edge(v, u) {
            continue;
        }
        g.add_edge(v, u).expect("valid edge");
        let next_introduced = if u == introduced { introduced + 1 } else { introduced };
        grow_cubic(g, next_introduced, found);
        g.remove_edge(v, u);
    }
}

/// All 3-regular graphs on `n` vertices up to isomorphism, connected graphs
/// first, then disjoint unions of smaller connected cubic graphs.
pub fn cubic_graphs(n: usize) -> Vec<Graph> {
    let mut out = connected_cubic_graphs(n);
    let mut parts = Vec::new();
    collect_unions(n, n - 1, &mut parts, &mut out);
    out
}

/// Disjoint unions with at least two components; component orders are
/// non-increasing and each strictly smaller than `n`.
fn collect_unions(remaining: usize, max_part: usize, parts: &mut Vec<usize>, out: &mut Vec<Graph>) {
    if remaining == 0 {
        if parts.len() < 2 {
            return;
        }
        let choices: Vec<Vec<Graph>> = parts.iter().map(|&p| connected_cubic_graphs(p)).collect();
        let mut picks = Vec::new();
        union_products(&choices, parts, 0, &mut picks, out);
        return;
    }
    let mut p = max_part.min(remaining);
    while p >= 4 {
        if p % 2 == 0 {
            parts.push(p);
            collect_unions(remaining - p, p, parts, out);
            parts.pop();
        }
        p -= 1;
    }
}

fn union_products(
    choices: &[Vec<Graph>],
    parts: &[usize],
    i: usize,
    picks: &mut Vec<usize>,
    out: &mut Vec<Graph>,
) {
    if i == choices.len() {
        let mut g = choices[0][picks[0]].clone();
        for k in 1..choices.len() {
            g = g.disjoint_union(&choices[k][picks[k]]).expect("order within cap");
        }
        out.push(g);
        return;
    }
    // equal consecutive part sizes take non-decreasing picks to avoid repeats
    let start = if i > 0 && parts[i] == parts[i - 1] { picks[i - 1] } else { 0 };
    for c in start..choices[i].len() {
        picks.push(c);
        union_products(choices, parts, i + 1, picks, out);
        picks.pop();
    }
}
