use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::error::{Error, Result};

/// Structural class of a connected simple graph, most specific first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape", content = "pivot")]
pub enum Shape {
    PathAtMost4,
    LongerPath,
    LuxuryChandelier(usize),
    Chandelier(usize),
    Other,
}

pub fn is_triangle_free(g: &SimpleGraph) -> bool {
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            let (a, b) = (g.neighbors(u), g.neighbors(v));
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
        }
    }
    true
}

/// Vertices `u` such that removing `N[u]` leaves at least two components.
pub fn full_star_cutset_centers(g: &SimpleGraph) -> Result<Vec<usize>> {
    if !g.is_connected() {
        return Err(Error::domain("full star-cutsets are defined for connected graphs"));
    }
    let n = g.vertex_count();
    let mut removed = vec![false; n];
    let mut out = Vec::new();
    for u in 0..n {
        removed[u] = true;
        for &w in g.neighbors(u) {
            removed[w] = true;
        }
        if g.components_without(&removed).1 >= 2 {
            out.push(u);
        }
        removed[u] = false;
        for &w in g.neighbors(u) {
            removed[w] = false;
        }
    }
    Ok(out)
}

pub fn is_path(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    n >= 1 && g.edge_count() == n - 1 && (0..n).all(|v| g.degree(v) <= 2) && g.is_connected()
}

/// Tree-degrees of `g - pivot` if `g` is a chandelier with that pivot:
/// `g - pivot` is a tree on at least two vertices whose leaves are exactly
/// the neighbors of `pivot`.
fn chandelier_tree_degrees(g: &SimpleGraph, pivot: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() + 2 != n + g.degree(pivot) {
        return None;
    }
    let mut removed = vec![false; n];
    removed[pivot] = true;
    if g.components_without(&removed).1 != 1 {
        return None;
    }
    let mut tdeg = vec![0; n];
    for u in (0..n).filter(|&u| u != pivot) {
        let adjacent = g.has_edge(u, pivot);
        tdeg[u] = g.degree(u) - usize::from(adjacent);
        if (tdeg[u] == 1) != adjacent {
            return None;
        }
    }
    Some(tdeg)
}

/// True iff `g` is a chandelier with the given pivot.
pub fn is_chandelier_with_pivot(g: &SimpleGraph, pivot: usize) -> bool {
    pivot < g.vertex_count() && chandelier_tree_degrees(g, pivot).is_some()
}

/// Classifies `g` with precedence
/// path on at most 4 vertices > longer path > luxury chandelier > chandelier > other.
/// The reported pivot is the smallest one giving the reported class.
pub fn recognize_shape(g: &SimpleGraph) -> Shape {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Shape::Other;
    }
    if is_path(g) {
        return if n <= 4 { Shape::PathAtMost4 } else { Shape::LongerPath };
    }
    let mut plain = None;
    for pivot in 0..n {
        let Some(tdeg) = chandelier_tree_degrees(g, pivot) else { continue };
        let luxury = g.neighbors(pivot).iter().all(|&leaf| {
            g.neighbors(leaf).iter().any(|&w| w != pivot && tdeg[w] == 2)
        });
        if luxury {
            return Shape::LuxuryChandelier(pivot);
        }
        plain.get_or_insert(pivot);
    }
    plain.map_or(Shape::Other, Shape::Chandelier)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn triangle_free_basics() {
        assert!(is_triangle_free(&cycle(5)));
        assert!(!is_triangle_free(&complete(4)));
        assert!(!is_triangle_free(&cycle(3)));
    }

    #[test]
    fn star_cutsets_of_paths_and_cycles() {
        assert_eq!(full_star_cutset_centers(&path(5)).unwrap(), vec![2]);
        assert!(full_star_cutset_centers(&path(4)).unwrap().is_empty());
        assert!(full_star_cutset_centers(&cycle(6)).unwrap().is_empty());
        assert!(full_star_cutset_centers(&SimpleGraph::new(2)).is_err());
    }

    #[test]
    fn shapes() {
        assert_eq!(recognize_shape(&cycle(5)), Shape::LuxuryChandelier(0));
        assert_eq!(recognize_shape(&cycle(4)), Shape::LuxuryChandelier(0));
        assert_eq!(recognize_shape(&cycle(3)), Shape::Chandelier(0));
        assert_eq!(recognize_shape(&path(4)), Shape::PathAtMost4);
        assert_eq!(recognize_shape(&path(1)), Shape::PathAtMost4);
        assert_eq!(recognize_shape(&path(6)), Shape::LongerPath);
        assert_eq!(recognize_shape(&complete(4)), Shape::Other);
        // K_{1,3} with center 0, leaves 1..3, pivot 4 joined to the leaves
        let g = SimpleGraph::from_edges(5, [(0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (4, 3)]).unwrap();
        assert!(matches!(recognize_shape(&g), Shape::Chandelier(_)));
    }
}
