//! Named graphs and seeded random families used by tests, fixtures and the CLI.

use rand::seq::SliceRandom;
use rand::RngExt;

use crate::graph::{Multigraph, SimpleGraph};

fn simple(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> SimpleGraph {
    SimpleGraph::from_edges(n, edges).expect("generator edges are simple")
}

fn multi(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Multigraph {
    Multigraph::from_edges(n, edges).expect("generator edges are in range")
}

pub fn cycle(n: usize) -> SimpleGraph {
    assert!(n >= 3, "cycles need three vertices");
    simple(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> SimpleGraph {
    simple(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> SimpleGraph {
    simple(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    simple(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn petersen() -> SimpleGraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    simple(10, outer.chain(spokes).chain(inner))
}

/// Triangular prism, the cartesian product of K3 and K2.
pub fn prism() -> SimpleGraph {
    simple(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> SimpleGraph {
    simple(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> Multigraph {
    multi(2, [(0, 1), (0, 1), (0, 1)])
}

pub fn digon() -> Multigraph {
    multi(2, [(0, 1), (0, 1)])
}

/// Digon 0-1, edge 1-2, digon 2-3.
pub fn digon_edge_digon() -> Multigraph {
    multi(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3)])
}

/// Multigraph cycle on `n` vertices; `n = 1` is a loop and `n = 2` a digon.
pub fn cycle_multigraph(n: usize) -> Multigraph {
    assert!(n >= 1);
    multi(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Uniform random labelled tree (via a random Prüfer-free attachment order).
pub fn random_tree<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> SimpleGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = SimpleGraph::new(n);
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        g.add_edge(order[i], parent).expect("fresh tree edge");
    }
    g
}

/// Random connected multigraph: a random spanning tree plus `extra` random
/// edges, loops allowed when `loops` is set.
pub fn random_connected_multigraph<R: rand::Rng + ?Sized>(n: usize, extra: usize, loops: bool, rng: &mut R) -> Multigraph {
    assert!(n >= 1);
    let mut g = Multigraph::new(n);
    for v in 1..n {
        let u = rng.random_range(0..v);
        g.add_edge(u, v).expect("in range");
    }
    let mut added = 0;
    while added < extra {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v && !loops {
            if n == 1 {
                break;
            }
            continue;
        }
        g.add_edge(u, v).expect("in range");
        added += 1;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

/// Random connected simple graph on `n` vertices with edge probability `p`
/// on top of a spanning tree.
pub fn random_connected_simple<R: rand::Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let mut g = random_tree(n, rng);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                let _ = g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn named_sizes() {
        assert_eq!(petersen().edge_count(), 15);
        assert!((0..10).all(|v| petersen().degree(v) == 3));
        assert_eq!(prism().edge_count(), 9);
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
    }

    #[test]
    fn random_families_are_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..20 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.edge_count(), n.saturating_sub(1));
            assert!(t.is_connected());
            let g = random_connected_multigraph(n, 5, true, &mut rng);
            assert!(g.is_connected());
        }
    }
}
