use super::Multigraph;
use crate::error::Result;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    /// Makes `x` a singleton class again. Only sound once every element
    /// that may point at `x` has been reset too.
    pub fn reset(&mut self, x: usize) {
        self.parent[x] = x;
        self.size[x] = 1;
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// True iff `g` has no cycle. Loops and parallel pairs are cycles.
pub fn is_forest(g: &Multigraph) -> bool {
    acyclic_without(g, None)
}

/// True iff `g - v` has no cycle.
pub fn is_feedback_vertex(g: &Multigraph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(acyclic_without(g, Some(v)))
}

fn acyclic_without(g: &Multigraph, skip: Option<usize>) -> bool {
    let mut uf = UnionFind::new(g.vertex_count());
    g.edges()
        .iter()
        .filter(|&&(a, b)| Some(a) != skip && Some(b) != skip)
        .all(|&(a, b)| uf.union(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn cycle_minus_vertex_is_path() {
        let c5 = cycle(5);
        assert!(!is_forest(&c5));
        assert!((0..5).all(|v| is_feedback_vertex(&c5, v).unwrap()));
    }

    #[test]
    fn k4_has_no_feedback_vertex() {
        let k4 = Multigraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!((0..4).all(|v| !is_feedback_vertex(&k4, v).unwrap()));
    }

    #[test]
    fn k4_minus_edge() {
        // vertices 1..4 of the usual drawing shifted to 0..3; edge {3,4} removed
        let g = Multigraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(is_feedback_vertex(&g, 0).unwrap());
        assert!(is_feedback_vertex(&g, 1).unwrap());
        assert!(!is_feedback_vertex(&g, 2).unwrap());
    }

    #[test]
    fn loops_and_digons_are_cycles() {
        assert!(!is_forest(&Multigraph::from_edges(1, [(0, 0)]).unwrap()));
        assert!(!is_forest(&Multigraph::from_edges(2, [(0, 1), (1, 0)]).unwrap()));
        assert!(is_feedback_vertex(&Multigraph::from_edges(2, [(0, 1), (1, 0)]).unwrap(), 0).unwrap());
        assert!(is_feedback_vertex(&cycle(3), 7).is_err());
    }
}
