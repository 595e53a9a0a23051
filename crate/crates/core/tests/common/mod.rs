#![allow(dead_code)]

use std::collections::HashMap;

use frame_graphs::graph::{is_isomorphic, Multigraph, SimpleGraph};

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts == 1
}

/// Connected loopy multigraphs on `1..=max_n` vertices with at most
/// `max_edges` edges, one per isomorphism class.
pub fn connected_multigraphs(max_n: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        let perms = permutations(n);
        let mut seen = std::collections::HashSet::new();
        let mut chosen: Vec<usize> = Vec::new();
        // multisets of pair indices, nondecreasing
        #[allow(clippy::too_many_arguments)]
        fn walk(
            start: usize,
            left: usize,
            n: usize,
            pairs: &[(usize, usize)],
            perms: &[Vec<usize>],
            chosen: &mut Vec<usize>,
            seen: &mut std::collections::HashSet<Vec<(usize, usize)>>,
            out: &mut Vec<Multigraph>,
        ) {
            let edges: Vec<(usize, usize)> = chosen.iter().map(|&i| pairs[i]).collect();
            if connected(n, &edges) {
                let canon = perms
                    .iter()
                    .map(|p| {
                        let mut e: Vec<(usize, usize)> = edges
                            .iter()
                            .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                            .collect();
                        e.sort_unstable();
                        e
                    })
                    .min()
                    .unwrap();
                if seen.insert(canon.clone()) {
                    out.push(Multigraph::from_edges(n, canon).unwrap());
                }
            }
            if left == 0 {
                return;
            }
            for i in start..pairs.len() {
                chosen.push(i);
                walk(i, left - 1, n, pairs, perms, chosen, seen, out);
                chosen.pop();
            }
        }
        walk(0, max_edges, n, &pairs, &perms, &mut chosen, &mut seen, &mut out);
    }
    out
}

fn invariant(g: &SimpleGraph) -> Vec<(usize, Vec<usize>)> {
    let mut inv: Vec<(usize, Vec<usize>)> = (0..g.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    inv.sort();
    inv
}

fn triangle_free(g: &SimpleGraph) -> bool {
    g.edges().iter().all(|&(u, v)| !g.neighbors(u).iter().any(|w| g.neighbors(v).contains(w)))
}

/// Connected triangle-free simple graphs on `1..=max_n` vertices, one per
/// isomorphism class, grown by attaching a vertex to a nonempty stable set.
pub fn connected_triangle_free(max_n: usize) -> Vec<SimpleGraph> {
    let mut layer = vec![SimpleGraph::new(1)];
    let mut out = layer.clone();
    for n in 2..=max_n {
        let mut classes: HashMap<Vec<(usize, Vec<usize>)>, Vec<SimpleGraph>> = HashMap::new();
        let mut next = Vec::new();
        for g in &layer {
            for mask in 1u32..(1 << (n - 1)) {
                let set: Vec<usize> = (0..n - 1).filter(|&i| mask >> i & 1 == 1).collect();
                if set.iter().enumerate().any(|(i, &a)| set[i + 1..].iter().any(|&b| g.has_edge(a, b))) {
                    continue;
                }
                let mut h = g.clone();
                let v = h.add_vertex();
                for &x in &set {
                    h.add_edge(v, x).unwrap();
                }
                debug_assert!(triangle_free(&h));
                let bucket = classes.entry(invariant(&h)).or_default();
                if bucket.iter().all(|k| !is_isomorphic(k, &h)) {
                    bucket.push(h.clone());
                    next.push(h);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Vertices whose closed neighbourhood is a cutset, by direct search.
pub fn star_cutset_centers(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    (0..n)
        .filter(|&u| {
            let gone = |x: usize| x == u || g.has_edge(u, x);
            let rest: Vec<usize> = (0..n).filter(|&x| !gone(x)).collect();
            let edges: Vec<(usize, usize)> = g
                .edges()
                .into_iter()
                .filter(|&(a, b)| !gone(a) && !gone(b))
                .map(|(a, b)| (rest.binary_search(&a).unwrap(), rest.binary_search(&b).unwrap()))
                .collect();
            !rest.is_empty() && !connected(rest.len(), &edges)
        })
        .collect()
}

pub fn is_tree(g: &SimpleGraph) -> bool {
    g.edge_count() + 1 == g.vertex_count() && g.is_connected()
}

pub fn is_path(g: &SimpleGraph) -> bool {
    is_tree(g) && (0..g.vertex_count()).all(|v| g.degree(v) <= 2)
}

/// `Some(luxury)` when `g - pivot` is a tree on at least two vertices whose
/// leaves are exactly the neighbours of `pivot`; `luxury` when every leaf's
/// tree neighbour has tree degree 2.
pub fn chandelier_at(g: &SimpleGraph, pivot: usize) -> Option<bool> {
    let n = g.vertex_count();
    let rest: Vec<usize> = (0..n).filter(|&x| x != pivot).collect();
    if rest.len() < 2 {
        return None;
    }
    let t = g.induced(&rest);
    if !is_tree(&t) {
        return None;
    }
    let leaves: Vec<usize> = (0..t.vertex_count()).filter(|&i| t.degree(i) == 1).map(|i| rest[i]).collect();
    let mut nb = g.neighbors(pivot).to_vec();
    nb.sort_unstable();
    if nb != leaves {
        return None;
    }
    Some((0..t.vertex_count()).filter(|&i| t.degree(i) == 1).all(|i| t.degree(t.neighbors(i)[0]) == 2))
}

/// Graph on the vertices of `g` with the edge `(u, v)` replaced by a path
/// through one new vertex.
pub fn subdivide_once(g: &SimpleGraph, u: usize, v: usize) -> SimpleGraph {
    let mut h = g.clone();
    h.remove_edge(u, v);
    let w = h.add_vertex();
    h.add_edge(u, w).unwrap();
    h.add_edge(w, v).unwrap();
    h
}
