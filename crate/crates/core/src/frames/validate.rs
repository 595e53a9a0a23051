use std::fmt;

use serde::{Deserialize, Serialize};

use super::{raw_intersection_graph, Coord, Frame, FrameRepresentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Missing, repeated or degenerate frames.
    Malformed,
    /// Two vertical or two horizontal sides share a coordinate.
    GeneralPosition,
    /// A corner of a frame lies on another frame.
    #[serde(rename = "clause-1")]
    Clause1,
    /// The left side of a frame meets another frame.
    #[serde(rename = "clause-2")]
    Clause2,
    /// A right side meets another frame other than through its top and bottom.
    #[serde(rename = "clause-3")]
    Clause3,
    /// A frame lies inside the common region of two intersecting frames.
    #[serde(rename = "clause-4")]
    Clause4,
    /// The intersection graph differs from the target.
    GraphMismatch,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::Malformed => "malformed",
            ViolationKind::GeneralPosition => "general-position",
            ViolationKind::Clause1 => "clause-1",
            ViolationKind::Clause2 => "clause-2",
            ViolationKind::Clause3 => "clause-3",
            ViolationKind::Clause4 => "clause-4",
            ViolationKind::GraphMismatch => "graph-mismatch",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Vertex ids of the frames involved.
    pub frames: Vec<usize>,
    pub detail: String,
}

impl Violation {
    fn new(kind: ViolationKind, frames: Vec<usize>, detail: impl Into<String>) -> Self {
        Violation { kind, frames, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}: {}", self.kind, self.frames, self.detail)
    }
}

/// Checks a representation; an empty list means it is valid.
///
/// Pairs sharing a coordinate are reported as general-position breaches
/// (plus clause 1 when a corner touches the other frame) and are not
/// classified further. Every other intersecting pair must follow the
/// canonical pattern, one frame piercing the right side of the other;
/// otherwise clause 2 is reported if a left side is hit and clause 3 if not.
pub fn validate<C: Coord>(rep: &FrameRepresentation<C>) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = rep.vertex_count();
    let mut count = vec![0usize; n];
    for f in &rep.frames {
        if f.vertex >= n {
            out.push(Violation::new(ViolationKind::Malformed, vec![f.vertex], "vertex id out of range"));
        } else {
            count[f.vertex] += 1;
        }
        if !f.is_well_formed() {
            out.push(Violation::new(ViolationKind::Malformed, vec![f.vertex], "needs x1 < x2 and y1 < y2"));
        }
    }
    for (v, &c) in count.iter().enumerate() {
        if c != 1 {
            out.push(Violation::new(ViolationKind::Malformed, vec![v], format!("{c} frames for this vertex")));
        }
    }
    if !out.is_empty() {
        return out;
    }
    let frames = &rep.frames;
    general_position(frames, &mut out);

    let mut canonical: Vec<(usize, usize)> = Vec::new();
    for i in 0..frames.len() {
        for j in i + 1..frames.len() {
            let (a, b) = (&frames[i], &frames[j]);
            if !a.meets(b) {
                continue;
            }
            if shares_coordinate(a, b) {
                if a.corners().iter().any(|&p| b.has_point(p)) || b.corners().iter().any(|&p| a.has_point(p)) {
                    out.push(Violation::new(
                        ViolationKind::Clause1,
                        vec![a.vertex, b.vertex],
                        "a corner lies on the other frame",
                    ));
                }
                continue;
            }
            if b.pierces(a) {
                canonical.push((i, j));
            } else if a.pierces(b) {
                canonical.push((j, i));
            } else if a.left_side_meets(b) || b.left_side_meets(a) {
                out.push(Violation::new(ViolationKind::Clause2, vec![a.vertex, b.vertex], "a left side meets the other frame"));
            } else {
                out.push(Violation::new(
                    ViolationKind::Clause3,
                    vec![a.vertex, b.vertex],
                    "a right side meets the other frame outside its top and bottom",
                ));
            }
        }
    }
    for &(ia, ib) in &canonical {
        let (a, b) = (&frames[ia], &frames[ib]);
        for (k, c) in frames.iter().enumerate() {
            if k != ia && k != ib && b.x1 <= c.x1 && c.x2 <= a.x2 && b.y1 <= c.y1 && c.y2 <= b.y2 {
                out.push(Violation::new(
                    ViolationKind::Clause4,
                    vec![a.vertex, b.vertex, c.vertex],
                    "frame inside the common region of an intersecting pair",
                ));
            }
        }
    }
    if let Ok(actual) = raw_intersection_graph(frames) {
        for u in 0..n {
            for v in u + 1..n {
                match (rep.target.has_edge(u, v), actual.has_edge(u, v)) {
                    (true, false) => out.push(Violation::new(
                        ViolationKind::GraphMismatch,
                        vec![u, v],
                        "edge of the target but the frames do not meet",
                    )),
                    (false, true) => out.push(Violation::new(
                        ViolationKind::GraphMismatch,
                        vec![u, v],
                        "frames meet but the target has no such edge",
                    )),
                    _ => {}
                }
            }
        }
    }
    out
}

fn shares_coordinate<C: Coord>(a: &Frame<C>, b: &Frame<C>) -> bool {
    [a.x1, a.x2].iter().any(|x| *x == b.x1 || *x == b.x2) || [a.y1, a.y2].iter().any(|y| *y == b.y1 || *y == b.y2)
}

fn general_position<C: Coord>(frames: &[Frame<C>], out: &mut Vec<Violation>) {
    for axis in ["x", "y"] {
        let mut coords: Vec<(C, usize)> = frames
            .iter()
            .flat_map(|f| if axis == "x" { [(f.x1, f.vertex), (f.x2, f.vertex)] } else { [(f.y1, f.vertex), (f.y2, f.vertex)] })
            .collect();
        coords.sort_unstable();
        let mut i = 0;
        while i < coords.len() {
            let mut j = i + 1;
            while j < coords.len() && coords[j].0 == coords[i].0 {
                j += 1;
            }
            if j - i > 1 {
                let mut ids: Vec<usize> = coords[i..j].iter().map(|c| c.1).collect();
                ids.dedup();
                out.push(Violation::new(
                    ViolationKind::GeneralPosition,
                    ids,
                    format!("{} sides share {axis} = {}", j - i, coords[i].0),
                ));
            }
            i = j;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    fn f(v: usize, x1: i64, x2: i64, y1: i64, y2: i64) -> Frame<i64> {
        Frame::new(v, x1, x2, y1, y2).unwrap()
    }

    fn rep(n: usize, edges: &[(usize, usize)], frames: Vec<Frame<i64>>) -> FrameRepresentation<i64> {
        FrameRepresentation::new(SimpleGraph::from_edges(n, edges.iter().copied()).unwrap(), frames)
    }

    fn kinds(r: &FrameRepresentation<i64>) -> Vec<ViolationKind> {
        validate(r).into_iter().map(|v| v.kind).collect()
    }

    #[test]
    fn canonical_pair_is_valid() {
        assert!(kinds(&rep(2, &[(0, 1)], vec![f(0, 0, 10, 0, 10), f(1, 5, 15, 2, 8)])).is_empty());
    }

    #[test]
    fn shared_x_is_general_position() {
        let r = rep(2, &[], vec![f(0, 0, 10, 0, 10), f(1, 10, 15, 20, 30)]);
        assert_eq!(kinds(&r), vec![ViolationKind::GeneralPosition]);
    }

    #[test]
    fn frame_in_zone_is_clause_4() {
        let r = rep(3, &[(0, 1)], vec![f(0, 0, 10, 0, 10), f(1, 5, 15, 2, 8), f(2, 6, 9, 3, 7)]);
        assert_eq!(kinds(&r), vec![ViolationKind::Clause4]);
    }

    #[test]
    fn left_side_crossing_is_clause_2() {
        // the left side of 0 crosses the top and bottom of 1
        let r = rep(2, &[(0, 1)], vec![f(0, 0, 10, 0, 10), f(1, -5, 5, 2, 8)]);
        assert_eq!(kinds(&r), vec![ViolationKind::Clause2]);
        let plus = rep(2, &[(0, 1)], vec![f(0, 0, 10, 4, 6), f(1, 3, 7, 0, 10)]);
        assert_eq!(kinds(&plus), vec![ViolationKind::Clause2]);
    }

    #[test]
    fn one_sided_crossing_hits_a_left_side() {
        // in general position a non-canonical crossing always involves a left side
        let r = rep(2, &[(0, 1)], vec![f(0, 0, 10, 5, 15), f(1, 2, 12, 0, 8)]);
        assert_eq!(kinds(&r), vec![ViolationKind::Clause2]);
    }

    #[test]
    fn mismatch_and_malformed() {
        let r = rep(2, &[], vec![f(0, 0, 10, 0, 10), f(1, 5, 15, 2, 8)]);
        assert_eq!(kinds(&r), vec![ViolationKind::GraphMismatch]);
        let missing = rep(2, &[], vec![f(0, 0, 10, 0, 10)]);
        assert_eq!(kinds(&missing), vec![ViolationKind::Malformed]);
    }
}
