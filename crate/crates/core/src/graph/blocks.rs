use std::collections::VecDeque;

use super::{Incidence, Multigraph};
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

/// A block (maximal 2-connected piece, bridge, or loop) of a multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// The block as a graph on local ids `0..vertices.len()`.
    pub graph: Multigraph,
    /// Local id to vertex id of the decomposed graph, ascending.
    pub vertices: Vec<usize>,
    /// Edge ids of the decomposed graph, ascending, in local edge order.
    pub edge_ids: Vec<usize>,
}

impl Block {
    /// Local id of a vertex of the decomposed graph.
    pub fn local(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.local(v).is_some()
    }
}

/// Block-cut tree of a connected multigraph, optionally rooted at a block.
///
/// Blocks are stored back to back; [`BlockTree::block`] materializes one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTree {
    /// Cut vertices, ascending.
    pub cut_vertices: Vec<usize>,
    /// `(cut vertex, block index)` incidences, sorted.
    pub tree_edges: Vec<(usize, usize)>,
    pub root: Option<usize>,
    /// Parent cut vertex of every block; `None` for the root or when unrooted.
    pub parent_cut: Vec<Option<usize>>,
    vertex_offsets: Vec<usize>,
    vertices: Vec<usize>,
    edge_offsets: Vec<usize>,
    edge_ids: Vec<usize>,
    local_edges: Vec<(u32, u32)>,
    cut_list_offsets: Vec<usize>,
    cut_list: Vec<usize>,
    /// `tree_edges[tree_offsets[c]..tree_offsets[c + 1]]` are the incidences of `c`.
    tree_offsets: Vec<usize>,
}

impl BlockTree {
    pub fn block_count(&self) -> usize {
        self.vertex_offsets.len() - 1
    }

    /// Vertices of block `b`, ascending.
    pub fn vertices(&self, b: usize) -> &[usize] {
        &self.vertices[self.vertex_offsets[b]..self.vertex_offsets[b + 1]]
    }

    /// Edge ids of block `b`, ascending.
    pub fn edge_ids(&self, b: usize) -> &[usize] {
        &self.edge_ids[self.edge_offsets[b]..self.edge_offsets[b + 1]]
    }

    /// Position of `v` among the vertices of block `b`.
    pub fn local(&self, b: usize, v: usize) -> Option<usize> {
        self.vertices(b).binary_search(&v).ok()
    }

    pub fn contains(&self, b: usize, v: usize) -> bool {
        self.local(b, v).is_some()
    }

    /// Block `b` as a graph on local ids.
    pub fn block(&self, b: usize) -> Block {
        let edges = self.local_edges[self.edge_offsets[b]..self.edge_offsets[b + 1]]
            .iter()
            .map(|&(x, y)| (x as usize, y as usize))
            .collect();
        let vertices = self.vertices(b).to_vec();
        Block { graph: Multigraph { vertex_count: vertices.len(), edges }, vertices, edge_ids: self.edge_ids(b).to_vec() }
    }

    /// Incidence lists of block `b` on local ids, local edge `i` being `edge_ids(b)[i]`.
    pub(crate) fn block_incidence(&self, b: usize) -> Incidence {
        Incidence::build(self.vertices(b).len(), &self.local_edges[self.edge_offsets[b]..self.edge_offsets[b + 1]])
    }

    /// Cut vertices lying in block `b`, ascending.
    pub fn cuts_of(&self, b: usize) -> &[usize] {
        &self.cut_list[self.cut_list_offsets[b]..self.cut_list_offsets[b + 1]]
    }

    /// Blocks containing cut vertex `c` (empty if `c` is not a cut vertex).
    pub fn blocks_at(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        let range = match self.tree_offsets.get(c..c + 2) {
            Some(&[a, b]) => a..b,
            _ => 0..0,
        };
        self.tree_edges[range].iter().map(|&(_, b)| b)
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Roots the tree at block `root`, filling `parent_cut`.
    pub fn rooted(mut self, root: usize) -> Result<BlockTree> {
        let nb = self.block_count();
        if root >= nb {
            return Err(Error::Index { index: root, len: nb });
        }
        self.root = Some(root);
        self.parent_cut = vec![None; nb];
        let mut seen = vec![false; nb];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(b) = queue.pop_front() {
            for i in 0..self.cuts_of(b).len() {
                let c = self.cuts_of(b)[i];
                let children: Vec<usize> = self.blocks_at(c).filter(|&x| !seen[x]).collect();
                for child in children {
                    seen[child] = true;
                    self.parent_cut[child] = Some(c);
                    queue.push_back(child);
                }
            }
        }
        Ok(self)
    }
}

/// Computes the block-cut tree of a connected multigraph.
///
/// Parallel edges between the same pair share a block. Every loop forms its
/// own single-vertex block, so a vertex carrying a loop and lying in any
/// other block is a cut vertex of the tree.
pub fn block_tree(g: &Multigraph) -> Result<BlockTree> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::domain("block tree of the empty graph"));
    }
    let m = g.edge_count();
    if n >= NONE as usize || m >= NONE as usize {
        return Err(Error::domain("graph too large for the block tree"));
    }

    // incidence lists as packed (neighbor, edge id) pairs, loops skipped
    let mut offsets = vec![0u32; n + 1];
    for &(u, v) in g.edges() {
        if u != v {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut entries = vec![(0u32, 0u32); offsets[n] as usize];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if u != v {
            entries[fill[u] as usize] = (v as u32, id as u32);
            fill[u] += 1;
            entries[fill[v] as usize] = (u as u32, id as u32);
            fill[v] += 1;
        }
    }
    drop(fill);

    // edge ids of all blocks back to back
    let mut edge_ids: Vec<usize> = Vec::with_capacity(m);
    let mut edge_offsets: Vec<usize> = vec![0];
    // (discovery time, low point)
    let mut times = vec![(NONE, 0u32); n];
    let mut edge_stack: Vec<u32> = Vec::new();
    // (vertex, edge to parent, next incidence position)
    let mut frames: Vec<(u32, u32, u32)> = vec![(0, NONE, offsets[0])];
    let mut time = 0u32;
    times[0] = (0, 0);
    while let Some(top) = frames.last_mut() {
        let (v, pe, pos) = *top;
        if pos < offsets[v as usize + 1] {
            top.2 += 1;
            let (w, e) = entries[pos as usize];
            if e == pe {
                continue;
            }
            let dw = times[w as usize].0;
            if dw == NONE {
                time += 1;
                times[w as usize] = (time, time);
                edge_stack.push(e);
                frames.push((w, e, offsets[w as usize]));
            } else {
                let tv = &mut times[v as usize];
                if dw < tv.0 {
                    edge_stack.push(e);
                    tv.1 = tv.1.min(dw);
                }
            }
        } else {
            frames.pop();
            if let Some(&(u, _, _)) = frames.last() {
                let low_v = times[v as usize].1;
                let tu = &mut times[u as usize];
                tu.1 = tu.1.min(low_v);
                if low_v >= tu.0 {
                    while let Some(e) = edge_stack.pop() {
                        edge_ids.push(e as usize);
                        if e == pe {
                            break;
                        }
                    }
                    edge_offsets.push(edge_ids.len());
                }
            }
        }
    }
    if time as usize + 1 != n {
        return Err(Error::domain("block tree requires a connected graph"));
    }
    drop(entries);
    drop(times);
    drop(offsets);
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if u == v {
            edge_ids.push(id);
            edge_offsets.push(edge_ids.len());
        }
    }

    let mut vertices: Vec<usize> = Vec::with_capacity(n + edge_offsets.len());
    let mut vertex_offsets: Vec<usize> = vec![0];
    let mut local_edges: Vec<(u32, u32)> = Vec::with_capacity(m);
    let mut local = vec![NONE; n];
    let mut membership = vec![0u32; n];
    for b in 0..edge_offsets.len() - 1 {
        let ids = &mut edge_ids[edge_offsets[b]..edge_offsets[b + 1]];
        ids.sort_unstable();
        let start = vertices.len();
        for &e in ids.iter() {
            let (a, c) = g.edges()[e];
            for x in [a, c] {
                if local[x] == NONE {
                    local[x] = 0;
                    vertices.push(x);
                }
            }
        }
        let vs = &mut vertices[start..];
        vs.sort_unstable();
        for (i, &x) in vs.iter().enumerate() {
            local[x] = i as u32;
            membership[x] += 1;
        }
        for &e in ids.iter() {
            let (a, c) = g.edges()[e];
            local_edges.push((local[a], local[c]));
        }
        for &x in vs.iter() {
            local[x] = NONE;
        }
        vertex_offsets.push(vertices.len());
    }
    drop(local);
    if edge_offsets.len() == 1 {
        vertices.push(0);
        vertex_offsets.push(1);
        edge_offsets.push(0);
    }
    let nb = vertex_offsets.len() - 1;
    if nb == 1 {
        membership.iter_mut().for_each(|m| *m = 1);
    }

    let cut_vertices: Vec<usize> = (0..n).filter(|&v| membership[v] >= 2).collect();
    let mut tree_offsets = vec![0usize; n + 1];
    for v in 0..n {
        let k = membership[v] as usize;
        tree_offsets[v + 1] = tree_offsets[v] + if k >= 2 { k } else { 0 };
    }
    let mut fill = tree_offsets.clone();
    let mut tree_edges = vec![(0, 0); tree_offsets[n]];
    let mut cut_list = Vec::with_capacity(tree_edges.len());
    let mut cut_list_offsets = Vec::with_capacity(nb + 1);
    cut_list_offsets.push(0);
    for b in 0..nb {
        for &x in &vertices[vertex_offsets[b]..vertex_offsets[b + 1]] {
            if membership[x] >= 2 {
                tree_edges[fill[x]] = (x, b);
                fill[x] += 1;
                cut_list.push(x);
            }
        }
        cut_list_offsets.push(cut_list.len());
    }
    Ok(BlockTree {
        cut_vertices,
        tree_edges,
        root: None,
        parent_cut: vec![None; nb],
        vertex_offsets,
        vertices,
        edge_offsets,
        edge_ids,
        local_edges,
        cut_list_offsets,
        cut_list,
        tree_offsets,
    })
}
