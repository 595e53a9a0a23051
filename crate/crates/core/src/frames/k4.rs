//! Representations of the triangle-free subdivisions of K4 that are
//! restricted frame graphs.

use super::{insert_path, Frame, FrameRepresentation};
use crate::decision::{k4_status, K4Verdict, K4_EDGES};
use crate::error::{Error, Result};
use crate::graph::{subdivide, Multigraph, SimpleGraph};

/// A hand-laid representation of a subdivision of K4 with at most one
/// subdivision vertex per edge. Vertices `0..4` are the branch vertices.
#[derive(Clone, Debug)]
pub struct K4Base {
    pub name: &'static str,
    pub rep: FrameRepresentation<i64>,
    /// Subdivision vertices on each edge of [`K4_EDGES`], from its first
    /// endpoint to its second.
    pub subdivision: [Vec<usize>; 6],
}

fn edge_index(a: usize, b: usize) -> usize {
    K4_EDGES.iter().position(|&(x, y)| (x, y) == (a.min(b), a.max(b))).expect("K4 edge")
}

/// `subdivided` lists `(a, b, count)` with `a < b`; subdivision vertices are
/// numbered from 4 in list order.
fn base(name: &'static str, coords: &[(i64, i64, i64, i64)], subdivided: &[(usize, usize, usize)]) -> K4Base {
    let frames: Vec<Frame<i64>> = coords
        .iter()
        .enumerate()
        .map(|(v, &(x1, x2, y1, y2))| Frame { vertex: v, x1, x2, y1, y2 })
        .collect();
    let mut subdivision: [Vec<usize>; 6] = Default::default();
    let mut next = 4;
    for &(a, b, count) in subdivided {
        subdivision[edge_index(a, b)] = (next..next + count).collect();
        next += count;
    }
    let mut edges = Vec::new();
    for (e, &(a, b)) in K4_EDGES.iter().enumerate() {
        let path: Vec<usize> = std::iter::once(a).chain(subdivision[e].iter().copied()).chain([b]).collect();
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
    }
    let target = SimpleGraph::from_edges(coords.len(), edges).expect("base graph is simple");
    K4Base { name, rep: FrameRepresentation::new(target, frames), subdivision }
}

/// The fixed base representations, in the order the builder tries them.
pub fn k4_bases() -> Vec<K4Base> {
    vec![
        base(
            "matching",
            &[(0, 60, 10, 100), (30, 80, 30, 40), (40, 90, 60, 70), (-10, 70, 0, 110), (10, 50, 20, 90), (55, 120, 83, 86)],
            &[(1, 2, 1), (0, 3, 1)],
        ),
        base(
            "triangle",
            &[(2, 10, 2, 11), (7, 12, 8, 9), (1, 5, 1, 12), (6, 13, 4, 5), (4, 8, 7, 10), (0, 11, 0, 13), (3, 9, 3, 6)],
            &[(1, 2, 1), (1, 3, 1), (2, 3, 1)],
        ),
        base(
            "triangle-long",
            &[
                (2, 14, 2, 17),
                (1, 5, 1, 18),
                (11, 19, 13, 14),
                (8, 16, 5, 8),
                (0, 17, 0, 19),
                (15, 18, 6, 7),
                (4, 7, 3, 10),
                (6, 13, 4, 9),
                (3, 10, 11, 16),
                (9, 12, 12, 15),
            ],
            &[(2, 3, 2), (1, 3, 2), (1, 2, 2)],
        ),
        base(
            "path",
            &[(6, 11, 8, 9), (0, 10, 0, 13), (2, 9, 4, 11), (1, 5, 1, 12), (3, 13, 2, 3), (4, 7, 5, 10), (8, 12, 6, 7)],
            &[(1, 3, 1), (0, 3, 1), (1, 2, 1)],
        ),
        base(
            "shared-vertex",
            &[
                (0, 60, 10, 100),
                (30, 80, 30, 40),
                (40, 90, 60, 70),
                (-10, 100, 0, 110),
                (10, 50, 20, 90),
                (55, 120, 83, 86),
                (70, 110, 33, 36),
                (85, 115, 63, 66),
            ],
            &[(1, 2, 1), (0, 3, 1), (1, 3, 1), (2, 3, 1)],
        ),
    ]
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}

/// Representation of the subdivision of K4 with `profile[e]` subdivision
/// vertices on edge `K4_EDGES[e]`, numbered as by [`subdivide`].
pub fn build_k4_subdivision(profile: &[usize; 6]) -> Result<FrameRepresentation<i64>> {
    let status = k4_status(profile);
    if status.status != K4Verdict::RestrictedFrameGraph {
        return Err(Error::domain(format!("profile {profile:?} is {:?}", status.status)));
    }
    for base in k4_bases() {
        for perm in permutations() {
            // perm maps base branch vertices to profile branch vertices
            let mut inv = [0; 4];
            for (i, &p) in perm.iter().enumerate() {
                inv[p] = i;
            }
            let mut paths: Vec<Vec<usize>> = Vec::with_capacity(6);
            let mut fits = true;
            for (e, &(a, b)) in K4_EDGES.iter().enumerate() {
                let (x, y) = (inv[a], inv[b]);
                let mut inner = base.subdivision[edge_index(x, y)].clone();
                if inner.len() > profile[e] {
                    fits = false;
                    break;
                }
                if x > y {
                    inner.reverse();
                }
                paths.push(std::iter::once(x).chain(inner).chain([y]).collect());
            }
            if !fits {
                continue;
            }
            if let Some((rep, paths)) = extend(base.rep.clone(), paths, profile) {
                log::debug!("profile {profile:?} drawn from the {} base", base.name);
                return renumber(&rep, &paths, profile);
            }
        }
    }
    Err(Error::NotApplicable(format!("no base representation extends to profile {profile:?}")))
}

/// Inserts the missing subdivision vertices edge by edge, backtracking over
/// the edge order and the path segment used.
fn extend(rep: FrameRepresentation<i64>, paths: Vec<Vec<usize>>, profile: &[usize; 6]) -> Option<(FrameRepresentation<i64>, Vec<Vec<usize>>)> {
    let pending: Vec<usize> = (0..6).filter(|&e| paths[e].len() - 2 < profile[e]).collect();
    if pending.is_empty() {
        return Some((rep, paths));
    }
    for e in pending {
        let need = profile[e] - (paths[e].len() - 2);
        for j in 0..paths[e].len() - 1 {
            let (a, b) = (paths[e][j], paths[e][j + 1]);
            let Ok(next) = insert_path(&rep, (a, b), need) else { continue };
            let n = rep.vertex_count();
            let mut next_paths = paths.clone();
            let path = &mut next_paths[e];
            path.splice(j + 1..j + 1, n..n + need);
            if let Some(done) = extend(next, next_paths, profile) {
                return Some(done);
            }
        }
    }
    None
}

fn renumber(rep: &FrameRepresentation<i64>, paths: &[Vec<usize>], profile: &[usize; 6]) -> Result<FrameRepresentation<i64>> {
    let k4 = Multigraph::from_edges(4, K4_EDGES)?;
    let sub = subdivide(&k4, profile)?;
    let mut perm = vec![usize::MAX; rep.vertex_count()];
    for (path, realized) in paths.iter().zip(&sub.path_map) {
        for (&a, &b) in path.iter().zip(realized) {
            perm[a] = b;
        }
    }
    let out = rep.relabel(&perm);
    if out.target != sub.realized {
        return Err(Error::domain("drawn graph differs from the requested subdivision"));
    }
    Ok(out)
}
