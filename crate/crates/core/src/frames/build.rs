use super::{compress, Frame, FrameRepresentation};
use crate::error::{Error, Result};
use crate::graph::{is_chandelier_with_pivot, is_path, SimpleGraph};

/// Frames on local ids `0..k` plus a vertical split line: exactly the frames
/// meant to pierce the right side of an outer frame cross the split.
struct Layout {
    frames: Vec<Frame<i64>>,
    split: i64,
}

/// Depth-first layout of a rooted tree. Children pierce the right side of
/// their parent; the x-extent of every rooted leaf ends right of the split
/// and every other frame ends left of it.
fn tree_layout(t: &SimpleGraph, root: usize) -> Result<Layout> {
    let n = t.vertex_count();
    t.check_vertex(root)?;
    if t.edge_count() + 1 != n || !t.is_connected() {
        return Err(Error::domain("expected a tree"));
    }
    let mut depth = vec![0i64; n];
    let mut parent = vec![usize::MAX; n];
    let mut y1 = vec![0i64; n];
    let mut y2 = vec![0i64; n];
    let mut clock = 0i64;
    let mut stack = vec![(root, 0usize)];
    y1[root] = clock;
    clock += 1;
    while let Some(top) = stack.last_mut() {
        let (v, pos) = *top;
        let children: Vec<usize> = t.neighbors(v).iter().copied().filter(|&w| w != parent[v]).collect();
        if pos < children.len() {
            top.1 += 1;
            let w = children[pos];
            parent[w] = v;
            depth[w] = depth[v] + 1;
            y1[w] = clock;
            clock += 1;
            stack.push((w, 0));
        } else {
            y2[v] = clock;
            clock += 1;
            stack.pop();
        }
    }
    let is_leaf = |v: usize| t.neighbors(v).iter().all(|&w| w == parent[v]);
    let max_depth = depth.iter().copied().max().unwrap_or(0);
    let big = 3 * max_depth + 10;
    let split_key = big - 1;
    // (key, vertex, side) sorted gives distinct ranks; ties only occur between
    // frames at the same depth, whose y-extents are disjoint.
    let mut xs: Vec<(i64, usize, u8)> = Vec::with_capacity(2 * n);
    for (v, &d) in depth.iter().enumerate() {
        xs.push((3 * d, v, 0));
        xs.push((if is_leaf(v) { big + d } else { 3 * d + 4 }, v, 1));
    }
    xs.sort_unstable();
    let mut x = vec![[0i64; 2]; n];
    for (rank, &(_, v, side)) in xs.iter().enumerate() {
        x[v][side as usize] = 2 * rank as i64;
    }
    let below = xs.iter().filter(|e| e.0 < split_key).count() as i64;
    let frames = (0..n).map(|v| Frame { vertex: v, x1: x[v][0], x2: x[v][1], y1: y1[v], y2: y2[v] }).collect();
    Ok(Layout { frames, split: 2 * below - 1 })
}

/// Layout of `h - pivot` for a chandelier `h`; local id `i` is the `i`-th
/// non-pivot vertex of `h` in ascending order.
fn chandelier_layout(h: &SimpleGraph, pivot: usize) -> Result<Layout> {
    if !is_chandelier_with_pivot(h, pivot) {
        return Err(Error::domain(format!("not a chandelier with pivot {pivot}")));
    }
    let others: Vec<usize> = (0..h.vertex_count()).filter(|&v| v != pivot).collect();
    if others.len() == 2 {
        // a triangle: both tree frames cross the split
        return Ok(Layout {
            frames: vec![
                Frame { vertex: 0, x1: 0, x2: 10, y1: 0, y2: 10 },
                Frame { vertex: 1, x1: 5, x2: 20, y1: 2, y2: 8 },
            ],
            split: 6,
        });
    }
    let tree = h.induced(&others);
    let root = (0..tree.vertex_count()).find(|&v| tree.degree(v) >= 2).expect("a tree on three or more vertices");
    tree_layout(&tree, root)
}

fn rep_from_layout(target: SimpleGraph, mut frames: Vec<Frame<i64>>) -> FrameRepresentation<i64> {
    compress(&mut frames);
    frames.sort_by_key(|f| f.vertex);
    FrameRepresentation::new(target, frames)
}

/// Representation of a tree in which the root's left side is leftmost and
/// every leaf's right side lies right of every non-leaf right side.
pub fn build_tree(t: &SimpleGraph, root: usize) -> Result<FrameRepresentation<i64>> {
    let layout = tree_layout(t, root)?;
    Ok(rep_from_layout(t.clone(), layout.frames))
}

pub fn build_path(n: usize) -> Result<FrameRepresentation<i64>> {
    if n == 0 {
        return Ok(FrameRepresentation::new(SimpleGraph::new(0), Vec::new()));
    }
    build_tree(&SimpleGraph::from_edges(n, (1..n).map(|i| (i - 1, i)))?, 0)
}

/// Representation of a chandelier: its tree laid out with the leaves to the
/// right, plus one large frame for the pivot pierced by exactly the leaves.
pub fn build_chandelier(h: &SimpleGraph, pivot: usize) -> Result<FrameRepresentation<i64>> {
    let layout = chandelier_layout(h, pivot)?;
    let others: Vec<usize> = (0..h.vertex_count()).filter(|&v| v != pivot).collect();
    let min_x = layout.frames.iter().map(|f| f.x1).min().unwrap();
    let min_y = layout.frames.iter().map(|f| f.y1).min().unwrap();
    let max_y = layout.frames.iter().map(|f| f.y2).max().unwrap();
    let mut frames: Vec<Frame<i64>> =
        layout.frames.iter().map(|f| Frame { vertex: others[f.vertex], ..*f }).collect();
    frames.push(Frame { vertex: pivot, x1: min_x - 1, x2: layout.split, y1: min_y - 1, y2: max_y + 1 });
    Ok(rep_from_layout(h.clone(), frames))
}

/// Places a layout in a small region around the top-right corner of the
/// frame of `v`, so that the frames crossing the split pierce the right
/// side of `F_v` and all others lie inside `F_v`. New frames get the ids
/// `n, n+1, ...` in local order.
fn attach(rep: &FrameRepresentation<i64>, v: usize, layout: &Layout, new_edges: &[(usize, usize)]) -> Result<FrameRepresentation<i64>> {
    let n = rep.vertex_count();
    let base = rep.frames_by_vertex()?;
    let anchor = base.get(v).copied().ok_or(Error::Range { vertex: v, vertex_count: n })?;
    let mut lx: Vec<i64> = layout.frames.iter().flat_map(|f| [f.x1, f.x2]).collect();
    let mut ly: Vec<i64> = layout.frames.iter().flat_map(|f| [f.y1, f.y2]).collect();
    lx.sort_unstable();
    lx.dedup();
    ly.sort_unstable();
    ly.dedup();
    let below = lx.partition_point(|&x| x < layout.split) as i64;
    let m = 2 * (lx.len() + ly.len()) as i64 + 4;
    let off_x = |x: i64| {
        let r = lx.binary_search(&x).unwrap() as i64;
        if r < below { r - below } else { r - below + 1 }
    };
    let off_y = |y: i64| ly.binary_search(&y).unwrap() as i64 - ly.len() as i64;
    let mut frames: Vec<Frame<i64>> =
        base.iter().map(|f| Frame { vertex: f.vertex, x1: f.x1 * m, x2: f.x2 * m, y1: f.y1 * m, y2: f.y2 * m }).collect();
    let (cx, cy) = (anchor.x2 * m, anchor.y2 * m);
    for f in &layout.frames {
        frames.push(Frame {
            vertex: n + f.vertex,
            x1: cx + off_x(f.x1),
            x2: cx + off_x(f.x2),
            y1: cy + off_y(f.y1),
            y2: cy + off_y(f.y2),
        });
    }
    let mut target = rep.target.clone();
    for _ in 0..layout.frames.len() {
        target.add_vertex();
    }
    for &(a, b) in new_edges {
        target.add_edge(a, b)?;
    }
    Ok(rep_from_layout(target, frames))
}

/// Glues the chandelier `h` onto `rep` by identifying its pivot with `v`.
/// The other vertices of `h` receive new ids in ascending order.
pub fn glue_chandelier(rep: &FrameRepresentation<i64>, v: usize, h: &SimpleGraph, pivot: usize) -> Result<FrameRepresentation<i64>> {
    rep.target.check_vertex(v)?;
    let layout = chandelier_layout(h, pivot)?;
    let n = rep.vertex_count();
    let id = |w: usize| if w == pivot { v } else { n + w - usize::from(w > pivot) };
    let edges: Vec<(usize, usize)> = h.edges().into_iter().map(|(a, b)| (id(a), id(b))).collect();
    attach(rep, v, &layout, &edges)
}

/// Attaches a path of `len` new vertices at `v`, numbered from `v` outwards.
pub fn add_pendant_path(rep: &FrameRepresentation<i64>, v: usize, len: usize) -> Result<FrameRepresentation<i64>> {
    rep.target.check_vertex(v)?;
    if len == 0 {
        return Err(Error::domain("pendant path needs at least one vertex"));
    }
    let path = SimpleGraph::from_edges(len, (1..len).map(|i| (i - 1, i)))?;
    let layout = tree_layout(&path, len - 1)?;
    let n = rep.vertex_count();
    let mut edges = vec![(v, n)];
    edges.extend((1..len).map(|i| (n + i - 1, n + i)));
    attach(rep, v, &layout, &edges)
}

/// Adds a twin of `v` (same neighbors, not adjacent to `v`) drawn just
/// inside `F_v`; its id is the old vertex count.
pub fn add_twin(rep: &FrameRepresentation<i64>, v: usize) -> Result<FrameRepresentation<i64>> {
    rep.target.check_vertex(v)?;
    let base = rep.frames_by_vertex()?;
    let mut frames: Vec<Frame<i64>> =
        base.iter().map(|f| Frame { vertex: f.vertex, x1: 4 * f.x1, x2: 4 * f.x2, y1: 4 * f.y1, y2: 4 * f.y2 }).collect();
    let o = frames[v];
    let twin = rep.vertex_count();
    frames.push(Frame { vertex: twin, x1: o.x1 + 1, x2: o.x2 - 1, y1: o.y1 + 1, y2: o.y2 - 1 });
    let mut target = rep.target.clone();
    target.add_vertex();
    for w in rep.target.neighbors(v).to_vec() {
        target.add_edge(twin, w)?;
    }
    Ok(rep_from_layout(target, frames))
}

/// Representation of a connected graph that is a path or a chandelier.
pub(crate) fn build_path_or_chandelier(h: &SimpleGraph, pivot: Option<usize>) -> Result<FrameRepresentation<i64>> {
    if is_path(h) {
        let end = (0..h.vertex_count()).find(|&v| h.degree(v) <= 1).unwrap_or(0);
        return build_tree(h, end);
    }
    match pivot {
        Some(p) => build_chandelier(h, p),
        None => Err(Error::domain("neither a path nor a chandelier with a given pivot")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{intersection_graph, validate};
    use crate::generators;
    use crate::graph::is_isomorphic;

    fn assert_valid(rep: &FrameRepresentation<i64>) {
        let v = validate(rep);
        assert!(v.is_empty(), "{v:?}");
        assert!(is_isomorphic(&intersection_graph(&rep.frames).unwrap(), &rep.target));
    }

    #[test]
    fn trees() {
        assert_valid(&build_tree(&SimpleGraph::new(1), 0).unwrap());
        let p3 = generators::path(3);
        let rep = build_tree(&p3, 0).unwrap();
        assert_valid(&rep);
        let leaf = rep.frame(2).unwrap();
        assert!(rep.frames.iter().all(|f| f.x2 <= leaf.x2));
        let root = rep.frame(0).unwrap();
        assert!(rep.frames.iter().all(|f| f.x1 >= root.x1));
    }

    #[test]
    fn chandeliers() {
        assert_valid(&build_chandelier(&generators::cycle(5), 0).unwrap());
        assert_valid(&build_chandelier(&generators::cycle(4), 2).unwrap());
        assert_valid(&build_chandelier(&generators::cycle(3), 1).unwrap());
        // spider with three legs of length 2 and the pivot joined to the feet
        let spider = SimpleGraph::from_edges(
            8,
            [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (7, 2), (7, 4), (7, 6)],
        )
        .unwrap();
        assert_valid(&build_chandelier(&spider, 7).unwrap());
        assert!(build_chandelier(&generators::cycle(5), 9).is_err());
        assert!(build_chandelier(&generators::complete(4), 0).is_err());
    }

    #[test]
    fn twins() {
        let k2 = build_path(2).unwrap();
        let t = add_twin(&k2, 0).unwrap();
        assert_valid(&t);
        assert_eq!(t.target.edges(), vec![(0, 1), (1, 2)]);
        let c4 = build_chandelier(&generators::cycle(4), 0).unwrap();
        for v in 0..4 {
            assert_valid(&add_twin(&c4, v).unwrap());
        }
        let single = add_twin(&build_path(1).unwrap(), 0).unwrap();
        assert_valid(&single);
        assert_eq!(single.target.edge_count(), 0);
    }

    #[test]
    fn gluing_and_pendants() {
        let c5 = build_chandelier(&generators::cycle(5), 0).unwrap();
        let glued = glue_chandelier(&c5, 3, &generators::cycle(5), 0).unwrap();
        assert_valid(&glued);
        assert_eq!(glued.vertex_count(), 9);
        let k1 = build_path(1).unwrap();
        let alone = glue_chandelier(&k1, 0, &generators::cycle(5), 0).unwrap();
        assert!(is_isomorphic(&alone.target, &generators::cycle(5)));
        assert_valid(&alone);
        assert_valid(&add_pendant_path(&k1, 0, 1).unwrap());
        let c6 = build_chandelier(&generators::cycle(6), 0).unwrap();
        let tadpole = add_pendant_path(&c6, 2, 3).unwrap();
        assert_valid(&tadpole);
        let two = add_pendant_path(&tadpole, 2, 2).unwrap();
        assert_valid(&two);
        let mut chain = build_chandelier(&generators::cycle(4), 0).unwrap();
        for step in 0..4 {
            let last = chain.vertex_count() - 1;
            chain = glue_chandelier(&chain, last, &generators::cycle(4 + step), 0).unwrap();
            assert_valid(&chain);
        }
    }
}
