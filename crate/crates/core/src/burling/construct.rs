//! Constructibility certificates for ≥2-subdivisions that are restricted
//! frame graphs, following the pseudo-decomposition rooted at a feedback
//! vertex.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::cert::{Certificate, Node};
use super::{add_op, join_op, Pair};
use crate::decision::{decide_ge2_subdivisions, Evidence};
use crate::error::{Error, Result};
use crate::graph::{block_tree, is_feedback_vertex, is_triangle_free, subdivision_base, SimpleGraph};

/// The subdivision of one block of the base graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoBlock {
    /// Vertices of the graph, ascending.
    pub vertices: Vec<usize>,
    /// The root for the root pseudo-block, else the parent cut vertex.
    pub root: usize,
    pub parent: Option<usize>,
    /// Subdivided bridge of the base, a path rather than a 2-connected piece.
    pub is_path: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoDecomposition {
    pub root: usize,
    pub root_block: usize,
    pub blocks: Vec<PseudoBlock>,
    /// Base cut vertices, as vertices of the graph, ascending.
    pub cut_vertices: Vec<usize>,
}

impl PseudoDecomposition {
    fn children_at(&self, parent: usize, cut: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b].parent == Some(parent) && self.blocks[b].root == cut)
            .collect()
    }
}

/// Rooted block decomposition of the base of a connected ≥2-subdivision,
/// lifted to `h`. The root is a feedback vertex of the root pseudo-block
/// and every other pseudo-block's parent cut vertex is a feedback vertex
/// of it.
pub fn pseudo_decomposition(h: &SimpleGraph) -> Result<PseudoDecomposition> {
    let sub = subdivision_base(h)?;
    if !sub.is_at_least(2) {
        return Err(Error::domain("not a ≥2-subdivision: some base edge has fewer than 2 subdivision vertices"));
    }
    let g = &sub.base;
    let outcome = decide_ge2_subdivisions(g)?;
    let Evidence::FeedbackVertex { block: root_block, vertex } = outcome.evidence else {
        return Err(Error::domain("the ≥2-subdivisions of the base are not restricted frame graphs"));
    };
    let tree = block_tree(g)?.rooted(root_block)?;
    let root = sub.branch_map[vertex];
    let mut blocks = Vec::with_capacity(tree.block_count());
    for b in 0..tree.block_count() {
        let block = tree.block(b);
        let mut vs: Vec<usize> = block.vertices.iter().map(|&v| sub.branch_map[v]).collect();
        for &e in &block.edge_ids {
            let p = &sub.path_map[e];
            vs.extend_from_slice(&p[1..p.len() - 1]);
        }
        vs.sort_unstable();
        let (root_v, parent) = match tree.parent_cut[b] {
            None => (vertex, None),
            Some(c) => {
                let parent = (0..tree.block_count())
                    .find(|&x| x != b && tree.contains(x, c) && tree.parent_cut[x] != Some(c))
                    .expect("parent block exists");
                (c, Some(parent))
            }
        };
        let local = block.local(root_v).expect("root lies in its block");
        if !is_feedback_vertex(&block.graph, local)? {
            return Err(Error::domain(format!("vertex {} is not a feedback vertex of its pseudo-block", sub.branch_map[root_v])));
        }
        let is_path = block.vertices.len() == 2 && block.edge_ids.len() == 1;
        blocks.push(PseudoBlock { vertices: vs, root: sub.branch_map[root_v], parent, is_path });
    }
    let cut_vertices: Vec<usize> = tree.cut_vertices.iter().map(|&c| sub.branch_map[c]).collect();
    let dist = h.distances_from(root);
    if let Some(&c) = cut_vertices.iter().find(|&&c| c != root && dist[c] < 3) {
        return Err(Error::domain(format!("cut vertex {c} lies within distance 2 of the root")));
    }
    Ok(PseudoDecomposition { root, root_block, blocks, cut_vertices })
}

/// A certificate together with the vertex of the target graph that each
/// vertex of the replayed pair stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub certificate: Certificate,
    pub vertex_map: Vec<usize>,
}

struct Part {
    node: Node,
    pair: Pair,
    map: Vec<usize>,
}

impl Part {
    fn singleton(v: usize) -> Part {
        Part { node: Node::Singleton, pair: Pair::singleton(), map: vec![v] }
    }

    fn index_of(&self, set: &[usize]) -> Result<usize> {
        let local: HashMap<usize, usize> = self.map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut ids: Vec<usize> = set.iter().map(|v| local[v]).collect();
        ids.sort_unstable();
        self.pair
            .stable_sets
            .iter()
            .position(|s| *s == ids)
            .ok_or_else(|| Error::domain(format!("stable set {set:?} is missing from the family")))
    }

    fn add(self, set: &[usize], v: usize) -> Result<Part> {
        let i = self.index_of(set)?;
        let pair = add_op(&self.pair, i)?;
        let mut map = self.map;
        map.push(v);
        Ok(Part { node: Node::add(self.node, i), pair, map })
    }

    fn join(left: Part, right: Part, set: Option<&[usize]>) -> Result<Part> {
        let i = set.map(|s| right.index_of(s)).transpose()?;
        let pair = join_op(&left.pair, &right.pair, i)?;
        let mut map = left.map;
        map.extend(right.map);
        Ok(Part { node: Node::join(left.node, right.node, i), pair, map })
    }
}

/// Singleton start and one ADD per further vertex, in breadth-first order
/// from the smallest vertex.
fn tree_part(h: &SimpleGraph, vertices: &[usize]) -> Result<Part> {
    let Some(&start) = vertices.first() else {
        return Err(Error::domain("empty tree part"));
    };
    let mut inside = vec![false; h.vertex_count()];
    for &v in vertices {
        inside[v] = true;
    }
    let mut part = Part::singleton(start);
    let mut seen = vec![false; h.vertex_count()];
    seen[start] = true;
    let mut queue = std::collections::VecDeque::from([start]);
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in h.neighbors(v) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                part = part.add(&[v], w)?;
                queue.push_back(w);
            }
        }
    }
    if count != vertices.len() {
        return Err(Error::domain("pseudo-block minus the closed neighborhood of its root is not a tree"));
    }
    Ok(part)
}

struct Builder<'a> {
    h: &'a SimpleGraph,
    d: &'a PseudoDecomposition,
}

impl Builder<'_> {
    /// Pair on the vertices of pseudo-block `b` and its descendants, minus
    /// `N[root of b]`.
    fn block(&self, b: usize) -> Result<Part> {
        let block = &self.d.blocks[b];
        let r = block.root;
        let t0: Vec<usize> =
            block.vertices.iter().copied().filter(|&v| v != r && !self.h.has_edge(v, r)).collect();
        let mut part = tree_part(self.h, &t0)?;
        let cuts: Vec<usize> = self.d.cut_vertices.iter().copied().filter(|&c| c != r && block.vertices.binary_search(&c).is_ok()).collect();
        for s in cuts {
            let children = self.d.children_at(b, s);
            if children.is_empty() {
                continue;
            }
            let hs = self.at_vertex(&children)?;
            part = Part::join(hs, part, Some(&[s]))?;
            for &w in self.h.neighbors(s) {
                if block.vertices.binary_search(&w).is_ok() {
                    continue;
                }
                let u = *self.h.neighbors(w).iter().find(|&&x| x != s).expect("subdivision vertex has degree 2");
                part = part.add(&[s, u], w)?;
            }
        }
        Ok(part)
    }

    /// Disjoint union of the parts of several pseudo-blocks sharing their root.
    fn at_vertex(&self, blocks: &[usize]) -> Result<Part> {
        let mut acc = self.block(blocks[0])?;
        for &b in &blocks[1..] {
            acc = Part::join(acc, self.block(b)?, None)?;
        }
        Ok(acc)
    }

    /// Pair on `h - N[root]` whose family holds the singletons of the
    /// vertices at distance 2 from the root.
    fn inter(&self) -> Result<Part> {
        let d = self.d;
        let mut part = self.block(d.root_block)?;
        let others: Vec<usize> =
            (0..d.blocks.len()).filter(|&b| b != d.root_block && d.blocks[b].root == d.root && d.blocks[b].parent == Some(d.root_block)).collect();
        if !others.is_empty() {
            part = Part::join(part, self.at_vertex(&others)?, None)?;
        }
        Ok(part)
    }
}

fn check_input(h: &SimpleGraph) -> Result<()> {
    if h.vertex_count() == 0 || !h.is_connected() {
        return Err(Error::domain("construction needs a connected, non-empty graph"));
    }
    if !is_triangle_free(h) {
        return Err(Error::domain("construction needs a triangle-free graph (subdivide loops at least 3 times)"));
    }
    Ok(())
}

fn finish(part: Part) -> Result<Construction> {
    Ok(Construction { certificate: Certificate { root: part.node, claimed: part.pair }, vertex_map: part.map })
}

/// Certificate for `(h - N[r], S)` where `S` contains `{v}` for every `v`
/// at distance 2 from the root `r` of the pseudo-decomposition.
pub fn lemma_inter_builder(h: &SimpleGraph, r: usize) -> Result<Construction> {
    check_input(h)?;
    let d = pseudo_decomposition(h)?;
    if d.root != r {
        return Err(Error::domain(format!("{r} is not the root of the pseudo-decomposition (which is {})", d.root)));
    }
    finish(Builder { h, d: &d }.inter()?)
}

/// Certificate for `(h, S)` with some family `S`: the pair on `h - N[r]`,
/// joined to `({r}, {{r}})` on `{r}`, then one ADD per neighbor of `r`.
/// Disconnected graphs are handled component by component.
pub fn construct(h: &SimpleGraph) -> Result<Construction> {
    let (comp, count) = h.components_without(&vec![false; h.vertex_count()]);
    if count > 1 {
        let mut acc: Option<Part> = None;
        for c in 0..count {
            let vs: Vec<usize> = (0..h.vertex_count()).filter(|&v| comp[v] == Some(c)).collect();
            let sub = construct(&h.induced(&vs))?;
            let part = Part {
                node: sub.certificate.root,
                pair: sub.certificate.claimed,
                map: sub.vertex_map.iter().map(|&i| vs[i]).collect(),
            };
            acc = Some(match acc {
                None => part,
                Some(a) => Part::join(a, part, None)?,
            });
        }
        return finish(acc.expect("at least one component"));
    }
    if h.vertex_count() == 1 {
        return finish(Part::singleton(0));
    }
    check_input(h)?;
    let d = pseudo_decomposition(h)?;
    let r = d.root;
    let mut part = Part::join(Builder { h, d: &d }.inter()?, Part::singleton(r), Some(&[r]))?;
    for &w in h.neighbors(r) {
        let u = *h.neighbors(w).iter().find(|&&x| x != r).expect("subdivision vertex has degree 2");
        part = part.add(&[r, u], w)?;
    }
    finish(part)
}
