//! Frames (boundaries of axis-parallel boxes) with exact integer
//! coordinates: the restricted-frame validator, intersection graphs,
//! diagnostics on valid representations, and the constructive builders.

mod build;
mod diagnostics;
mod insert;
mod k4;
mod pipeline;
mod svg;
mod validate;

pub use build::{add_pendant_path, add_twin, build_chandelier, build_path, build_tree, glue_chandelier};
pub use diagnostics::{
    big_vertex_of_cycle, big_vertices, check_cycle_lemma, check_path_corollary, check_path_lemma, induced_cycles,
    LemmaViolation,
};
pub use insert::insert_path;
pub use k4::{build_k4_subdivision, k4_bases, K4Base};
pub use pipeline::build_ge2_subdivision;
pub use svg::emit_svg;
pub use validate::{validate, Violation, ViolationKind};

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Signed};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphFields, SimpleGraph};

/// Integer coordinate type of a frame.
pub trait Coord: PrimInt + Signed + Hash + Debug + Display + Serialize + DeserializeOwned {}

impl<T> Coord for T where T: PrimInt + Signed + Hash + Debug + Display + Serialize + DeserializeOwned {}

/// The boundary of `[x1, x2] × [y1, y2]`, tagged with a vertex id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound = "C: Coord")]
pub struct Frame<C> {
    pub vertex: usize,
    pub x1: C,
    pub x2: C,
    pub y1: C,
    pub y2: C,
}

impl<C: Coord> Frame<C> {
    pub fn new(vertex: usize, x1: C, x2: C, y1: C, y2: C) -> Result<Self> {
        let f = Frame { vertex, x1, x2, y1, y2 };
        if f.is_well_formed() {
            Ok(f)
        } else {
            Err(Error::domain(format!("frame of {vertex} needs x1 < x2 and y1 < y2")))
        }
    }

    pub fn is_well_formed(&self) -> bool {
        self.x1 < self.x2 && self.y1 < self.y2
    }

    /// Closed boxes share a point.
    pub fn boxes_meet(&self, o: &Frame<C>) -> bool {
        self.x1 <= o.x2 && o.x1 <= self.x2 && self.y1 <= o.y2 && o.y1 <= self.y2
    }

    /// `o`'s closed box lies in the open interior of `self`'s box.
    pub fn strictly_contains(&self, o: &Frame<C>) -> bool {
        self.x1 < o.x1 && o.x2 < self.x2 && self.y1 < o.y1 && o.y2 < self.y2
    }

    /// The two boundary curves share a point.
    pub fn meets(&self, o: &Frame<C>) -> bool {
        self.boxes_meet(o) && !self.strictly_contains(o) && !o.strictly_contains(self)
    }

    /// `self` pierces the right side of `a` in the canonical pattern:
    /// `a.x1 < self.x1 < a.x2 < self.x2` and `a.y1 < self.y1 < self.y2 < a.y2`.
    pub fn pierces(&self, a: &Frame<C>) -> bool {
        a.x1 < self.x1 && self.x1 < a.x2 && a.x2 < self.x2 && a.y1 < self.y1 && self.y2 < a.y2
    }

    /// The frame meets the closed box `[x1, x2] × [y1, y2]`.
    pub fn meets_region(&self, x1: C, x2: C, y1: C, y2: C) -> bool {
        let inside = self.x1 < x1 && x2 < self.x2 && self.y1 < y1 && y2 < self.y2;
        self.x1 <= x2 && x1 <= self.x2 && self.y1 <= y2 && y1 <= self.y2 && !inside
    }

    pub fn corners(&self) -> [(C, C); 4] {
        [(self.x1, self.y1), (self.x1, self.y2), (self.x2, self.y1), (self.x2, self.y2)]
    }

    /// The point lies on the frame.
    pub fn has_point(&self, (x, y): (C, C)) -> bool {
        let on_vertical = (x == self.x1 || x == self.x2) && self.y1 <= y && y <= self.y2;
        let on_horizontal = (y == self.y1 || y == self.y2) && self.x1 <= x && x <= self.x2;
        on_vertical || on_horizontal
    }

    /// The left side `{x1} × [y1, y2]` meets the frame `o`.
    pub fn left_side_meets(&self, o: &Frame<C>) -> bool {
        let x = self.x1;
        let vertical = (x == o.x1 || x == o.x2) && self.y1 <= o.y2 && o.y1 <= self.y2;
        let horizontal = o.x1 <= x
            && x <= o.x2
            && ((self.y1 <= o.y1 && o.y1 <= self.y2) || (self.y1 <= o.y2 && o.y2 <= self.y2));
        vertical || horizontal
    }
}

/// Relative position of two frames.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Containment {
    Disjoint,
    AInsideB,
    BInsideA,
    Intersecting,
}

pub fn containment<C: Coord>(a: &Frame<C>, b: &Frame<C>) -> Containment {
    if !a.boxes_meet(b) {
        Containment::Disjoint
    } else if a.strictly_contains(b) {
        Containment::BInsideA
    } else if b.strictly_contains(a) {
        Containment::AInsideB
    } else {
        Containment::Intersecting
    }
}

/// All x-coordinates pairwise distinct and all y-coordinates pairwise distinct.
pub fn in_general_position<C: Coord>(frames: &[Frame<C>]) -> bool {
    let mut xs: Vec<C> = frames.iter().flat_map(|f| [f.x1, f.x2]).collect();
    let mut ys: Vec<C> = frames.iter().flat_map(|f| [f.y1, f.y2]).collect();
    xs.sort_unstable();
    ys.sort_unstable();
    xs.windows(2).all(|w| w[0] != w[1]) && ys.windows(2).all(|w| w[0] != w[1])
}

/// Intersection graph of frames whose vertex ids are exactly `0..n`.
pub fn intersection_graph<C: Coord>(frames: &[Frame<C>]) -> Result<SimpleGraph> {
    if !in_general_position(frames) {
        return Err(Error::domain("frames are not in general position"));
    }
    raw_intersection_graph(frames)
}

pub(crate) fn raw_intersection_graph<C: Coord>(frames: &[Frame<C>]) -> Result<SimpleGraph> {
    let n = frames.len();
    let mut seen = vec![false; n];
    for f in frames {
        if f.vertex >= n || std::mem::replace(&mut seen[f.vertex], true) {
            return Err(Error::domain(format!("frame vertex ids must be a permutation of 0..{n}")));
        }
    }
    let mut g = SimpleGraph::new(n);
    for (i, a) in frames.iter().enumerate() {
        for b in &frames[i + 1..] {
            if a.meets(b) {
                g.add_edge(a.vertex, b.vertex)?;
            }
        }
    }
    Ok(g)
}

/// Frames for the vertices of a target graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameRepresentation<C> {
    pub target: SimpleGraph,
    pub frames: Vec<Frame<C>>,
}

impl<C: Coord> FrameRepresentation<C> {
    pub fn new(target: SimpleGraph, frames: Vec<Frame<C>>) -> Self {
        FrameRepresentation { target, frames }
    }

    pub fn vertex_count(&self) -> usize {
        self.target.vertex_count()
    }

    /// The frame of vertex `v` (frames are looked up by their vertex tag).
    pub fn frame(&self, v: usize) -> Result<&Frame<C>> {
        if let Some(f) = self.frames.get(v).filter(|f| f.vertex == v) {
            return Ok(f);
        }
        self.frames
            .iter()
            .find(|f| f.vertex == v)
            .ok_or(Error::Range { vertex: v, vertex_count: self.frames.len() })
    }

    /// Frames ordered by vertex id; requires exactly one frame per vertex.
    pub fn frames_by_vertex(&self) -> Result<Vec<Frame<C>>> {
        let n = self.vertex_count();
        let mut out: Vec<Option<Frame<C>>> = vec![None; n];
        for f in &self.frames {
            match out.get_mut(f.vertex) {
                Some(slot @ None) => *slot = Some(*f),
                _ => return Err(Error::domain(format!("frame for vertex {} is out of range or repeated", f.vertex))),
            }
        }
        out.into_iter()
            .enumerate()
            .map(|(v, f)| f.ok_or_else(|| Error::domain(format!("vertex {v} has no frame"))))
            .collect()
    }

    /// No violations of any restriction, and the frames realize the target.
    pub fn is_valid(&self) -> bool {
        validate(self).is_empty()
    }

    /// Renames vertex `v` to `perm[v]` in both the target and the frames.
    pub fn relabel(&self, perm: &[usize]) -> FrameRepresentation<C> {
        let mut frames: Vec<Frame<C>> =
            self.frames.iter().map(|f| Frame { vertex: perm[f.vertex], ..*f }).collect();
        frames.sort_by_key(|f| f.vertex);
        FrameRepresentation { target: self.target.relabel(perm), frames }
    }

    pub fn to_json(&self) -> String {
        let fields = RepFields { graph: GraphFields::from(&self.target), frames: self.frames.clone() };
        let mut s = serde_json::to_string_pretty(&fields).expect("representation serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let fields: RepFields<C> = serde_json::from_str(text)?;
        Ok(FrameRepresentation { target: SimpleGraph::try_from(fields.graph)?, frames: fields.frames })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "C: Coord")]
struct RepFields<C> {
    #[serde(flatten)]
    graph: GraphFields,
    frames: Vec<Frame<C>>,
}

/// Replaces every coordinate by its rank along its axis, keeping the order
/// (equal coordinates get equal ranks).
pub(crate) fn compress(frames: &mut [Frame<i64>]) {
    let mut xs: Vec<i64> = frames.iter().flat_map(|f| [f.x1, f.x2]).collect();
    let mut ys: Vec<i64> = frames.iter().flat_map(|f| [f.y1, f.y2]).collect();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    let rank = |v: &[i64], c: i64| v.binary_search(&c).expect("coordinate present") as i64;
    for f in frames.iter_mut() {
        f.x1 = rank(&xs, f.x1);
        f.x2 = rank(&xs, f.x2);
        f.y1 = rank(&ys, f.y1);
        f.y2 = rank(&ys, f.y2);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: usize, x1: i64, x2: i64, y1: i64, y2: i64) -> Frame<i64> {
        Frame::new(v, x1, x2, y1, y2).unwrap()
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(intersection_graph(&[f(0, 0, 10, 0, 10)]).unwrap().vertex_count(), 1);
        let canonical = intersection_graph(&[f(0, 0, 10, 0, 10), f(1, 5, 15, 2, 8)]).unwrap();
        assert_eq!(canonical.edges(), vec![(0, 1)]);
        let nested = intersection_graph(&[f(0, 0, 10, 0, 10), f(1, 2, 8, 2, 8)]).unwrap();
        assert_eq!(nested.edge_count(), 0);
        assert!(intersection_graph(&[f(0, 0, 10, 0, 10), f(1, 10, 12, 2, 8)]).is_err());
    }

    #[test]
    fn containment_examples() {
        let a = f(0, 0, 10, 0, 10);
        assert_eq!(containment(&a, &f(1, 2, 8, 2, 8)), Containment::BInsideA);
        assert_eq!(containment(&f(1, 2, 8, 2, 8), &a), Containment::AInsideB);
        assert_eq!(containment(&a, &f(1, 5, 15, 2, 8)), Containment::Intersecting);
        assert_eq!(containment(&a, &f(1, 11, 15, 2, 8)), Containment::Disjoint);
        assert!(f(1, 5, 15, 2, 8).pierces(&a));
        assert!(Frame::new(0, 1i64, 1, 0, 2).is_err());
    }

    #[test]
    fn generic_over_coordinate_type() {
        let a: Frame<i32> = Frame::new(0, 0, 10, 0, 10).unwrap();
        let b: Frame<i32> = Frame::new(1, 5, 15, 2, 8).unwrap();
        assert_eq!(containment(&a, &b), Containment::Intersecting);
        let small: Frame<i8> = Frame::new(0, -3, 3, -3, 3).unwrap();
        assert!(small.has_point((3, 0)));
    }

    #[test]
    fn json_round_trip() {
        let rep = FrameRepresentation::new(
            SimpleGraph::from_edges(2, [(0, 1)]).unwrap(),
            vec![f(0, 0, 10, 0, 10), f(1, 5, 15, 2, 8)],
        );
        let text = rep.to_json();
        assert!(text.contains("\"vertices\": 2"));
        let back = FrameRepresentation::<i64>::from_json(&text).unwrap();
        assert_eq!(back, rep);
        assert_eq!(back.to_json(), text);
    }
}
