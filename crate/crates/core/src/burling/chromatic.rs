use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Greedy DSATUR coloring; colors are `0..k`.
pub fn dsatur_coloring(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        color[v] = c;
        for &w in g.neighbors(v) {
            if seen[w].len() <= c {
                seen[w].resize(c + 1, false);
            }
            if !seen[w][c] {
                seen[w][c] = true;
                sat[w] += 1;
            }
        }
    }
    color
}

struct Search<'a> {
    g: &'a SimpleGraph,
    k: usize,
    color: Vec<usize>,
    /// `count[v * k + c]`: colored neighbors of `v` with color `c`.
    count: Vec<u32>,
    sat: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        let mut dead = false;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.count[w * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[w] += 1;
                if self.sat[w] == self.k && self.color[w] == usize::MAX {
                    dead = true;
                }
            }
        }
        !dead
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = usize::MAX;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.count[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn solve(&mut self, colored: usize, used: usize) -> Result<bool> {
        let n = self.g.vertex_count();
        if colored == n {
            return Ok(true);
        }
        let v = (0..n)
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| (self.sat[v], self.g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        // colors beyond the first unused one are symmetric
        for c in 0..self.k.min(used + 1) {
            if self.count[v * self.k + c] > 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            let alive = self.assign(v, c);
            if alive && self.solve(colored + 1, used.max(c + 1))? {
                return Ok(true);
            }
            self.unassign(v, c);
        }
        Ok(false)
    }
}

fn colorable(g: &SimpleGraph, k: usize, budget: u64) -> Result<(bool, u64)> {
    let n = g.vertex_count();
    let mut s = Search { g, k, color: vec![usize::MAX; n], count: vec![0; n * k], sat: vec![0; n], nodes: 0, budget };
    let ok = s.solve(0, 0)?;
    Ok((ok, s.nodes))
}

fn has_triangle(g: &SimpleGraph) -> bool {
    g.edges().iter().any(|&(u, v)| g.neighbors(u).iter().any(|&w| g.has_edge(v, w)))
}

/// Exact chromatic number: a DSATUR upper bound, then backtracking
/// k-colorability tests for decreasing k. `budget` caps the total number
/// of search nodes; running out yields the bounds established so far.
pub fn chromatic_number(g: &SimpleGraph, budget: u64) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let lower = if g.edge_count() == 0 {
        1
    } else if has_triangle(g) {
        3
    } else {
        2
    };
    let mut upper = dsatur_coloring(g).into_iter().max().unwrap() + 1;
    let mut spent = 0u64;
    while upper > lower {
        let k = upper - 1;
        match colorable(g, k, budget - spent) {
            Ok((true, nodes)) => {
                spent += nodes;
                upper = k;
            }
            Ok((false, _)) => break,
            Err(Error::BudgetExceeded { .. }) => {
                return Err(Error::ChromaticBudget { lower, upper });
            }
            Err(e) => return Err(e),
        }
        log::debug!("{k}-colorable after {spent} search nodes");
    }
    Ok(upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn small_graphs() {
        assert_eq!(chromatic_number(&SimpleGraph::new(1), 100).unwrap(), 1);
        assert_eq!(chromatic_number(&generators::cycle(5), 1000).unwrap(), 3);
        assert_eq!(chromatic_number(&generators::cycle(6), 1000).unwrap(), 2);
        assert_eq!(chromatic_number(&generators::complete(5), 1000).unwrap(), 5);
        assert_eq!(chromatic_number(&generators::petersen(), 10_000).unwrap(), 3);
    }

    #[test]
    fn greedy_is_proper() {
        let g = generators::petersen();
        let c = dsatur_coloring(&g);
        assert!(g.edges().iter().all(|&(u, v)| c[u] != c[v]));
    }
}
