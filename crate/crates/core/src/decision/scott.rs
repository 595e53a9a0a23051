use serde::{Deserialize, Serialize};

use crate::graph::{full_star_cutset_centers, is_triangle_free, recognize_shape, Multigraph, Shape, SimpleGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    PathAtMost4,
    LuxuryChandelier,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reason {
    Disconnected,
    HasTriangle,
    HasFullStarCutset,
}

/// Whether a graph is shown to be a counterexample to Scott's conjecture by
/// the classification of triangle-free restricted frame graphs without a
/// full star-cutset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum ScottStatus {
    Counterexample,
    RepresentableFamily { family: Family },
    NotDecidedByTheorem { reason: Reason },
}

pub fn classify_scott(h: &SimpleGraph) -> ScottStatus {
    if h.vertex_count() == 0 || !h.is_connected() {
        return ScottStatus::NotDecidedByTheorem { reason: Reason::Disconnected };
    }
    if !is_triangle_free(h) {
        return ScottStatus::NotDecidedByTheorem { reason: Reason::HasTriangle };
    }
    if !full_star_cutset_centers(h).expect("connected").is_empty() {
        return ScottStatus::NotDecidedByTheorem { reason: Reason::HasFullStarCutset };
    }
    match recognize_shape(h) {
        Shape::PathAtMost4 => ScottStatus::RepresentableFamily { family: Family::PathAtMost4 },
        Shape::LuxuryChandelier(_) => ScottStatus::RepresentableFamily { family: Family::LuxuryChandelier },
        _ => ScottStatus::Counterexample,
    }
}

/// Edge order of K4 used by profiles: `01, 23, 02, 13, 03, 12`.
///
/// Entries `2i` and `2i+1` form a perfect matching, so two edges share a
/// vertex exactly when they are not such a pair.
pub const K4_EDGES: [(usize, usize); 6] = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)];

/// The four triangles of K4 as index triples into [`K4_EDGES`].
const K4_FACES: [[usize; 3]; 4] = [[0, 2, 5], [0, 3, 4], [1, 2, 4], [1, 3, 5]];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum K4Verdict {
    ContainsTriangle,
    RestrictedFrameGraph,
    NotRestrictedFrameGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct K4Status {
    pub status: K4Verdict,
    /// Number of subdivided edges.
    #[serde(rename = "type")]
    pub kind: u8,
}

/// Status of the subdivision of K4 given by `profile` (indexed as [`K4_EDGES`]).
pub fn k4_status(profile: &[usize; 6]) -> K4Status {
    let kind = profile.iter().filter(|&&c| c > 0).count() as u8;
    let status = if K4_FACES.iter().any(|f| f.iter().all(|&e| profile[e] == 0)) {
        K4Verdict::ContainsTriangle
    } else if kind <= 3 {
        K4Verdict::RestrictedFrameGraph
    } else if kind == 4 {
        let bare: Vec<usize> = (0..6).filter(|&e| profile[e] == 0).collect();
        if bare[0] / 2 == bare[1] / 2 {
            K4Verdict::NotRestrictedFrameGraph
        } else {
            K4Verdict::RestrictedFrameGraph
        }
    } else {
        K4Verdict::NotRestrictedFrameGraph
    };
    K4Status { status, kind }
}

/// The two obstruction multigraphs of the decision procedure, reconstructed
/// as digon-plus-apex gadgets.
///
/// The first has two gadgets sharing the apex 0 (digons 1-2 and 3-4); the
/// second has apexes 0 and 1 joined by an edge (digons 2-3 at 0 and 4-5 at 1).
pub fn hhat_fixtures() -> (Multigraph, Multigraph) {
    let h1 = Multigraph::from_edges(5, [(1, 2), (1, 2), (0, 1), (0, 2), (3, 4), (3, 4), (0, 3), (0, 4)])
        .expect("fixture");
    let h2 = Multigraph::from_edges(
        6,
        [(2, 3), (2, 3), (0, 2), (0, 3), (4, 5), (4, 5), (1, 4), (1, 5), (0, 1)],
    )
    .expect("fixture");
    (h1, h2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::{subdivide, Multigraph};

    #[test]
    fn scott_examples() {
        let k4 = generators::complete(4).to_multigraph();
        let sub = subdivide(&k4, &[1; 6]).unwrap().realized;
        assert_eq!(classify_scott(&sub), ScottStatus::Counterexample);
        assert_eq!(
            classify_scott(&generators::cycle(5)),
            ScottStatus::RepresentableFamily { family: Family::LuxuryChandelier }
        );
        assert_eq!(classify_scott(&generators::petersen()), ScottStatus::Counterexample);
        assert_eq!(
            classify_scott(&generators::cycle(3)),
            ScottStatus::NotDecidedByTheorem { reason: Reason::HasTriangle }
        );
        let json = serde_json::to_string(&classify_scott(&generators::cycle(3))).unwrap();
        assert_eq!(json, r#"{"status":"NotDecidedByTheorem","reason":"HasTriangle"}"#);
    }

    #[test]
    fn k4_examples() {
        assert_eq!(k4_status(&[1; 6]).status, K4Verdict::NotRestrictedFrameGraph);
        let matching = k4_status(&[1, 1, 0, 0, 0, 0]);
        assert_eq!((matching.status, matching.kind), (K4Verdict::RestrictedFrameGraph, 2));
        // unsubdivided 12 and 13 share vertex 1 (0-based: 01 and 02)
        assert_eq!(k4_status(&[0, 1, 0, 1, 1, 1]).status, K4Verdict::RestrictedFrameGraph);
        // unsubdivided 12 and 34 (0-based: 01 and 23)
        assert_eq!(k4_status(&[0, 0, 1, 1, 1, 1]).status, K4Verdict::NotRestrictedFrameGraph);
        assert_eq!(k4_status(&[0; 6]).status, K4Verdict::ContainsTriangle);
        let json = serde_json::to_value(k4_status(&[0; 6])).unwrap();
        assert_eq!(json["type"], 0);
    }

    #[test]
    fn hhat_digons_avoid_cut_vertices() {
        let (h1, h2) = hhat_fixtures();
        assert_eq!(h1.vertex_count(), 5);
        assert_eq!(h2.vertex_count(), 6);
        for (g, digon_vertices) in [(h1, vec![1, 2, 3, 4]), (h2, vec![2, 3, 4, 5])] {
            let (_, base) = components_after(&g, None);
            for v in digon_vertices {
                assert_eq!(components_after(&g, Some(v)).1, base, "vertex {v} is a cut vertex");
            }
        }
    }

    fn components_after(g: &Multigraph, skip: Option<usize>) -> ((), usize) {
        let n = g.vertex_count();
        let mut uf = crate::graph::UnionFind::new(n);
        for &(u, v) in g.edges() {
            if Some(u) != skip && Some(v) != skip {
                uf.union(u, v);
            }
        }
        let mut roots: Vec<usize> = (0..n).filter(|&v| Some(v) != skip).map(|v| uf.find(v)).collect();
        roots.sort_unstable();
        roots.dedup();
        ((), roots.len())
    }
}
