//! Backtracking isomorphism test for small graphs.

use crate::graph::Graph;

/// Per-vertex invariant: degree followed by the sorted neighbor degrees.
fn vertex_signature(g: &Graph, v: usize) -> Vec<usize> {
    let mut sig: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
    sig.sort_unstable();
    sig.insert(0, g.degree(v));
    sig
}

/// True iff some bijection of vertices maps the edges of `g` exactly onto
/// the edges of `h`.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let gsig: Vec<Vec<usize>> = (0..n).map(|v| vertex_signature(g, v)).collect();
    let hsig: Vec<Vec<usize>> = (0..n).map(|v| vertex_signature(h, v)).collect();
    let mut a = gsig.clone();
    let mut b = hsig.clone();
    a.sort();
    b.sort();
    if a != b {
        return false;
    }

    // Map g's vertices in BFS-ish order (most constrained first): each next
    // vertex is the unmapped one with the most already-mapped neighbors.
    let mut order = Vec::with_capacity(n);
    let mut placed = crate::VertexSet::EMPTY;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (g.neighbors(v).intersection(placed).len(), g.degree(v)))
            .expect("unplaced vertex exists");
        order.push(next);
        placed.insert(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = crate::VertexSet::EMPTY;
    extend(g, h, &gsig, &hsig, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    gsig: &[Vec<usize>],
    hsig: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut crate::VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.order() {
        if used.contains(w) || gsig[v] != hsig[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend(g, h, gsig, hsig, order, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        gen_complete_bipartite, gen_cycle, gen_path, gen_petersen, random_permutation,
    };

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    #[test]
    fn relabeled_cycle_is_isomorphic() {
        let c6 = gen_cycle(6).unwrap();
        let perm = [3, 0, 5, 1, 4, 2];
        assert!(is_isomorphic(&c6, &c6.permuted(&perm)));
    }

    #[test]
    fn k33_is_not_prism() {
        assert!(!is_isomorphic(&gen_complete_bipartite(3, 3).unwrap(), &prism()));
    }

    #[test]
    fn same_degree_sequence_different_graphs() {
        // C_6 vs two disjoint triangles
        let two_k3 = gen_cycle(3).unwrap().disjoint_union(&gen_cycle(3).unwrap()).unwrap();
        assert!(!is_isomorphic(&gen_cycle(6).unwrap(), &two_k3));
        assert!(!is_isomorphic(&gen_path(4).unwrap(), &gen_path(5).unwrap()));
    }

    #[test]
    fn petersen_under_random_relabelings() {
        let p = gen_petersen();
        for seed in 0..20 {
            let perm = random_permutation(10, seed);
            assert!(is_isomorphic(&p, &p.permuted(&perm)));
        }
    }
}
