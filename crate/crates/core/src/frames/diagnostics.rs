//! Checks of the structural lemmas on valid representations: the Path
//! Lemma, its corollary, and the big vertices of induced cycles.

use serde::{Deserialize, Serialize};

use super::{containment, Containment, Coord, FrameRepresentation};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "lemma")]
pub enum LemmaViolation {
    /// `F_u` inside `F_v`, `F_w` outside `F_v`, yet `u` and `w` are joined
    /// by a path avoiding `N[v]`.
    PathLemma { u: usize, v: usize, w: usize },
    /// `F_u` inside `F_v` but `x`, in the component of `u` in `G - N[v]`, is not.
    PathCorollary { u: usize, v: usize, x: usize },
    /// An induced cycle without a big vertex.
    NoBigVertex { cycle: Vec<usize> },
    /// Two non-adjacent big vertices of one induced cycle.
    NonAdjacentBigVertices { cycle: Vec<usize>, big: Vec<usize> },
}

/// `F_inner` lies inside `F_outer` (the frames do not meet).
fn inside<C: Coord>(rep: &FrameRepresentation<C>, inner: usize, outer: usize) -> bool {
    matches!(
        (rep.frame(outer), rep.frame(inner)),
        (Ok(a), Ok(b)) if containment(a, b) == Containment::BInsideA
    )
}

/// `F_w` is outside `F_v`: the frames do not meet and `F_w` is not inside `F_v`.
fn outside<C: Coord>(rep: &FrameRepresentation<C>, w: usize, v: usize) -> bool {
    match (rep.frame(v), rep.frame(w)) {
        (Ok(a), Ok(b)) => !a.meets(b) && containment(a, b) != Containment::BInsideA,
        _ => false,
    }
}

fn components_without_closed_nbhd(g: &SimpleGraph, v: usize) -> Vec<Option<usize>> {
    let mut removed = vec![false; g.vertex_count()];
    removed[v] = true;
    for &w in g.neighbors(v) {
        removed[w] = true;
    }
    g.components_without(&removed).0
}

pub fn check_path_lemma<C: Coord>(rep: &FrameRepresentation<C>) -> Vec<LemmaViolation> {
    let g = &rep.target;
    let n = g.vertex_count();
    let mut out = Vec::new();
    for v in 0..n {
        let comp = components_without_closed_nbhd(g, v);
        for u in (0..n).filter(|&u| inside(rep, u, v)) {
            for w in (0..n).filter(|&w| w != v && outside(rep, w, v)) {
                if comp[u].is_some() && comp[u] == comp[w] {
                    out.push(LemmaViolation::PathLemma { u, v, w });
                }
            }
        }
    }
    out
}

pub fn check_path_corollary<C: Coord>(rep: &FrameRepresentation<C>) -> Vec<LemmaViolation> {
    let g = &rep.target;
    let n = g.vertex_count();
    let mut out = Vec::new();
    for v in 0..n {
        let comp = components_without_closed_nbhd(g, v);
        for u in (0..n).filter(|&u| inside(rep, u, v)) {
            for x in 0..n {
                if comp[x].is_some() && comp[x] == comp[u] && !inside(rep, x, v) {
                    out.push(LemmaViolation::PathCorollary { u, v, x });
                }
            }
        }
    }
    out
}

/// Induced cycles of `g` (length at least 3), each listed once, starting at
/// its smallest vertex and continuing towards the smaller of its two
/// neighbors on the cycle.
pub fn induced_cycles(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        for &v1 in g.neighbors(s).iter().filter(|&&v| v > s) {
            let mut path = vec![s, v1];
            extend_chordless(g, &mut path, &mut out);
        }
    }
    out
}

fn extend_chordless(g: &SimpleGraph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let s = path[0];
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        if path[1..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        if g.has_edge(s, w) {
            if path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(cycle);
            }
            continue;
        }
        path.push(w);
        extend_chordless(g, path, out);
        path.pop();
    }
}

fn is_induced_cycle(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 || cycle.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Vertices `v` of an induced cycle whose frame contains the frame of every
/// cycle vertex outside `N[v]`.
pub fn big_vertex_of_cycle<C: Coord>(rep: &FrameRepresentation<C>, cycle: &[usize]) -> Result<Vec<usize>> {
    if !is_induced_cycle(&rep.target, cycle) {
        return Err(Error::domain("not an induced cycle of the target"));
    }
    let g = &rep.target;
    let mut big: Vec<usize> = cycle
        .iter()
        .copied()
        .filter(|&v| cycle.iter().all(|&u| u == v || g.has_edge(u, v) || inside(rep, u, v)))
        .collect();
    big.sort_unstable();
    Ok(big)
}

/// Every induced cycle has a big vertex and its big vertices are pairwise adjacent.
pub fn check_cycle_lemma<C: Coord>(rep: &FrameRepresentation<C>) -> Vec<LemmaViolation> {
    let mut out = Vec::new();
    for cycle in induced_cycles(&rep.target) {
        let big = big_vertex_of_cycle(rep, &cycle).expect("enumerated cycles are induced");
        if big.is_empty() {
            out.push(LemmaViolation::NoBigVertex { cycle });
        } else if big.iter().enumerate().any(|(i, &a)| big[i + 1..].iter().any(|&b| !rep.target.has_edge(a, b))) {
            out.push(LemmaViolation::NonAdjacentBigVertices { cycle, big });
        }
    }
    out
}

/// Union of the big vertices over all induced cycles.
pub fn big_vertices<C: Coord>(rep: &FrameRepresentation<C>) -> Vec<usize> {
    let mut all: Vec<usize> = induced_cycles(&rep.target)
        .iter()
        .flat_map(|c| big_vertex_of_cycle(rep, c).expect("enumerated cycles are induced"))
        .collect();
    all.sort_unstable();
    all.dedup();
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::build_chandelier;
    use crate::generators;

    #[test]
    fn cycle_enumeration() {
        assert_eq!(induced_cycles(&generators::cycle(5)).len(), 1);
        assert_eq!(induced_cycles(&generators::complete(4)).len(), 4);
        assert_eq!(induced_cycles(&generators::complete_bipartite(2, 3)).len(), 3);
        // the Petersen graph has 12 five-cycles, 10 six-cycles... of which induced: 12 + 10
        assert_eq!(induced_cycles(&generators::petersen()).iter().filter(|c| c.len() == 5).count(), 12);
    }

    #[test]
    fn big_vertices_of_chandelier_cycles() {
        let rep = build_chandelier(&generators::cycle(5), 0).unwrap();
        let cycle = induced_cycles(&rep.target).remove(0);
        assert!(!big_vertex_of_cycle(&rep, &cycle).unwrap().is_empty());
        let c4 = build_chandelier(&generators::cycle(4), 0).unwrap();
        let big = big_vertex_of_cycle(&c4, &[0, 1, 2, 3]).unwrap();
        assert!(!big.is_empty() && big.len() <= 2);
        if big.len() == 2 {
            assert!(c4.target.has_edge(big[0], big[1]));
        }
        assert!(big_vertex_of_cycle(&c4, &[0, 1, 2]).is_err());
        let tri = build_chandelier(&generators::cycle(3), 0).unwrap();
        assert_eq!(big_vertex_of_cycle(&tri, &[0, 1, 2]).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn lemmas_hold_on_chandeliers() {
        for n in 4..9 {
            let rep = build_chandelier(&generators::cycle(n), 0).unwrap();
            assert!(check_path_lemma(&rep).is_empty());
            assert!(check_path_corollary(&rep).is_empty());
            assert!(check_cycle_lemma(&rep).is_empty());
        }
    }
}
