use std::collections::HashMap;

use super::SimpleGraph;
use crate::error::{Error, Result};

/// Search for an induced embedding of `small` into `big`: an injection
/// preserving adjacency and non-adjacency. Aborts with
/// [`Error::BudgetExceeded`] after `budget` candidate placements.
pub fn is_induced_subgraph(small: &SimpleGraph, big: &SimpleGraph, budget: u64) -> Result<Option<Vec<usize>>> {
    if small.vertex_count() > big.vertex_count() {
        return Ok(None);
    }
    induced_subgraph_where(small, big, budget, &|_| true)
}

/// Like [`is_induced_subgraph`], but every partial map (`usize::MAX` for
/// unplaced vertices) must also pass `keep`.
pub(crate) fn induced_subgraph_where(
    small: &SimpleGraph,
    big: &SimpleGraph,
    budget: u64,
    keep: &dyn Fn(&[usize]) -> bool,
) -> Result<Option<Vec<usize>>> {
    if small.vertex_count() > big.vertex_count() {
        return Ok(None);
    }
    let allowed = |u: usize, c: usize| small.degree(u) <= big.degree(c);
    let mut m = Matcher::new(small, big, &allowed, budget);
    m.keep = keep;
    m.run()
}

/// An isomorphism `a -> b` (as a vertex map), if one exists.
pub fn find_isomorphism(a: &SimpleGraph, b: &SimpleGraph, budget: u64) -> Result<Option<Vec<usize>>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let (ca, cb) = refine_colors(a, b);
    let mut ha: Vec<usize> = ca.clone();
    let mut hb: Vec<usize> = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return Ok(None);
    }
    let allowed = |u: usize, c: usize| ca[u] == cb[c];
    Matcher::new(a, b, &allowed, budget).run()
}

/// Isomorphism test with a generous search budget; panics never, treats an
/// exhausted budget as "not shown isomorphic".
pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    matches!(find_isomorphism(a, b, 50_000_000), Ok(Some(_)))
}

/// Joint colour refinement of two graphs with a shared palette.
fn refine_colors(a: &SimpleGraph, b: &SimpleGraph) -> (Vec<usize>, Vec<usize>) {
    let mut ca: Vec<usize> = (0..a.vertex_count()).map(|v| a.degree(v)).collect();
    let mut cb: Vec<usize> = (0..b.vertex_count()).map(|v| b.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let mut palette: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut recolor = |g: &SimpleGraph, c: &[usize]| -> Vec<usize> {
            (0..g.vertex_count())
                .map(|v| {
                    let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&w| c[w]).collect();
                    sig.sort_unstable();
                    let next = palette.len();
                    *palette.entry((c[v], sig)).or_insert(next)
                })
                .collect()
        };
        let na = recolor(a, &ca);
        let nb = recolor(b, &cb);
        let count = palette.len();
        ca = na;
        cb = nb;
        if count == classes {
            return (ca, cb);
        }
        classes = count;
    }
}

fn accept_all(_: &[usize]) -> bool {
    true
}

struct Matcher<'a> {
    small: &'a SimpleGraph,
    big: &'a SimpleGraph,
    allowed: &'a dyn Fn(usize, usize) -> bool,
    keep: &'a dyn Fn(&[usize]) -> bool,
    budget: u64,
    nodes: u64,
    order: Vec<usize>,
    anchor: Vec<Option<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(small: &'a SimpleGraph, big: &'a SimpleGraph, allowed: &'a dyn Fn(usize, usize) -> bool, budget: u64) -> Self {
        let n = small.vertex_count();
        let mut placed = vec![false; n];
        let mut weight = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        let mut anchor = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (weight[v], small.degree(v), std::cmp::Reverse(v)))
                .unwrap();
            placed[v] = true;
            anchor.push(small.neighbors(v).iter().copied().find(|&w| placed[w]));
            order.push(v);
            for &w in small.neighbors(v) {
                weight[w] += 1;
            }
        }
        Matcher {
            small,
            big,
            allowed,
            keep: &accept_all,
            budget,
            nodes: 0,
            order,
            anchor,
            map: vec![usize::MAX; n],
            used: vec![false; big.vertex_count()],
        }
    }

    fn run(mut self) -> Result<Option<Vec<usize>>> {
        if self.extend(0)? {
            Ok(Some(self.map))
        } else {
            Ok(None)
        }
    }

    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[depth] {
            Some(a) => self.big.neighbors(self.map[a]).to_vec(),
            None => (0..self.big.vertex_count()).collect(),
        };
        let mapped_neighbors = self.small.neighbors(v).iter().filter(|&&w| self.map[w] != usize::MAX).count();
        for c in candidates {
            if self.used[c] || !(self.allowed)(v, c) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            let ok = self
                .small
                .neighbors(v)
                .iter()
                .all(|&w| self.map[w] == usize::MAX || self.big.has_edge(c, self.map[w]))
                && self.big.neighbors(c).iter().filter(|&&x| self.used[x]).count() == mapped_neighbors;
            if !ok {
                continue;
            }
            self.map[v] = c;
            self.used[c] = true;
            if (self.keep)(&self.map) && self.extend(depth + 1)? {
                return Ok(true);
            }
            self.map[v] = usize::MAX;
            self.used[c] = false;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn induced_examples() {
        let p3 = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let emb = is_induced_subgraph(&p3, &cycle(5), 1000).unwrap().unwrap();
        assert!(cycle(5).has_edge(emb[0], emb[1]) && !cycle(5).has_edge(emb[0], emb[2]));
        assert!(is_induced_subgraph(&cycle(3), &cycle(5), 1000).unwrap().is_none());
        assert!(is_induced_subgraph(&cycle(4), &cycle(6), 1000).unwrap().is_none());
    }

    #[test]
    fn isomorphism_under_relabel() {
        let g = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let h = g.relabel(&[5, 3, 1, 0, 2, 4]);
        let m = find_isomorphism(&g, &h, 1000).unwrap().unwrap();
        for (u, v) in g.edges() {
            assert!(h.has_edge(m[u], m[v]));
        }
        assert!(!is_isomorphic(&cycle(6), &g));
    }

    #[test]
    fn budget_is_reported() {
        let big = SimpleGraph::new(12);
        let small = cycle(3);
        assert!(matches!(is_induced_subgraph(&small, &big, 5), Ok(None) | Err(Error::BudgetExceeded { .. })));
    }
}
