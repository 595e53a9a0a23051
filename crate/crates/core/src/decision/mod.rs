//! Linear-time decision of whether the ≥2-subdivisions of a connected
//! multigraph are restricted frame graphs, with brute-force oracles and the
//! classifiers built on top of it.

mod brute;
mod scott;

pub use brute::{decide_bruteforce, feedback_vertices_bruteforce, verify_evidence};
pub use scott::{classify_scott, hhat_fixtures, k4_status, Family, K4Status, K4Verdict, Reason, ScottStatus, K4_EDGES};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{block_tree, is_feedback_vertex, BlockTree, Incidence, Multigraph, UnionFind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

/// One pruning step: a leaf block removed through its parent cut vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrunedBlock {
    pub block: usize,
    pub cut_vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Evidence {
    /// The block left after pruning and one of its feedback vertices.
    FeedbackVertex { block: usize, vertex: usize },
    /// The block left after pruning has no feedback vertex.
    SingleBlockNoFeedback { block: usize, vertices: Vec<usize>, edges: Vec<(usize, usize)> },
    /// Two leaf blocks whose parent cut vertices are not feedback vertices of them.
    TwoBadLeaves { block1: usize, cut1: usize, block2: usize, cut2: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionOutcome {
    pub answer: Answer,
    pub trace: Vec<PrunedBlock>,
    pub evidence: Evidence,
}

impl DecisionOutcome {
    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

/// Some feedback vertex of a 2-connected multigraph, a single edge, or a
/// single vertex with a loop; `None` if there is none.
///
/// Finds one cycle and one ear of it, then tests only the two ends of the ear.
pub fn feedback_vertex_2connected(b: &Multigraph) -> Result<Option<usize>> {
    let n = b.vertex_count();
    if n == 0 {
        return Err(Error::domain("empty graph"));
    }
    if n > 1 {
        if b.has_loop() {
            return Err(Error::domain("a loop on a graph with more than one vertex is not 2-connected"));
        }
        if !b.is_connected() || block_tree(b)?.block_count() != 1 {
            return Err(Error::domain("graph is not 2-connected"));
        }
    }
    Ok(feedback_vertex_of_block(b))
}

/// [`feedback_vertex_2connected`] without the 2-connectivity check.
pub(crate) fn feedback_vertex_of_block(b: &Multigraph) -> Option<usize> {
    let candidates = feedback_candidates(b.vertex_count(), b.edge_count(), &b.incidence())?;
    candidates.into_iter().find(|&v| is_feedback_vertex(b, v).unwrap_or(false))
}

/// At most two vertices of a 2-connected multigraph, one of which is a
/// feedback vertex whenever any vertex is: both ends of an ear of some cycle.
fn feedback_candidates(n: usize, m: usize, inc: &Incidence) -> Option<Vec<usize>> {
    if n == 1 || m <= n {
        return Some(vec![0]);
    }
    let (cycle_vertices, cycle_edges) = find_cycle(n, inc)?;
    let mut on_cycle = vec![false; n];
    for &v in &cycle_vertices {
        on_cycle[v] = true;
    }
    let mut cycle_edge = vec![false; m];
    for &e in &cycle_edges {
        cycle_edge[e] = true;
    }
    let (x, z) = find_ear(inc, &on_cycle, &cycle_vertices, &cycle_edge)?;
    Some(vec![x, z])
}

/// A cycle found by depth-first search: its vertices and edge ids.
fn find_cycle(n: usize, inc: &Incidence) -> Option<(Vec<usize>, Vec<usize>)> {
    const NONE: usize = usize::MAX;
    let mut depth = vec![NONE; n];
    let mut parent_edge = vec![NONE; n];
    let mut parent = vec![NONE; n];
    for s in 0..n {
        if depth[s] != NONE {
            continue;
        }
        depth[s] = 0;
        let mut stack = vec![(s, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, pos) = *top;
            let list = inc.of(v);
            if pos == list.len() {
                stack.pop();
                continue;
            }
            top.1 += 1;
            let (w, e) = list[pos];
            if e == parent_edge[v] {
                continue;
            }
            if depth[w] == NONE {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                parent_edge[w] = e;
                stack.push((w, 0));
            } else if depth[w] <= depth[v] {
                let mut vertices = vec![v];
                let mut edges = vec![e];
                let mut cur = v;
                while cur != w {
                    edges.push(parent_edge[cur]);
                    cur = parent[cur];
                    vertices.push(cur);
                }
                return Some((vertices, edges));
            }
        }
    }
    None
}

/// Ends of an ear of the cycle: a chord, or a path leaving the cycle at one
/// vertex and returning at another with no internal cycle vertex.
fn find_ear(
    inc: &Incidence,
    on_cycle: &[bool],
    cycle_vertices: &[usize],
    cycle_edge: &[bool],
) -> Option<(usize, usize)> {
    for &x in cycle_vertices {
        for &(y, e) in inc.of(x) {
            if cycle_edge[e] {
                continue;
            }
            if on_cycle[y] {
                return Some((x, y));
            }
            let mut seen = vec![false; on_cycle.len()];
            seen[x] = true;
            seen[y] = true;
            let mut queue = VecDeque::from([y]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in inc.of(u) {
                    if seen[w] {
                        continue;
                    }
                    if on_cycle[w] {
                        return Some((x, w));
                    }
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    None
}

/// Decides whether every ≥2-subdivision of the connected multigraph `g` is
/// a restricted frame graph (the alternative being that none is).
///
/// Builds the block tree, prunes leaf blocks whose parent cut vertex is a
/// feedback vertex of the leaf (in FIFO order), and answers yes iff a single
/// block with a feedback vertex remains.
pub fn decide_ge2_subdivisions(g: &Multigraph) -> Result<DecisionOutcome> {
    if g.vertex_count() == 0 {
        return Err(Error::domain("the empty graph has no ≥2-subdivisions to decide"));
    }
    let tree = block_tree(g).map_err(|e| {
        if g.is_connected() {
            e
        } else {
            Error::domain("input is disconnected; decide each component separately")
        }
    })?;
    let (alive, trace) = prune(g, &tree);
    let remaining: Vec<usize> = (0..tree.block_count()).filter(|&b| alive[b]).collect();
    log::debug!("pruned {} of {} blocks", trace.len(), tree.block_count());
    if remaining.len() > 1 {
        let alive_cuts = |b: usize| {
            tree.cuts_of(b)
                .iter()
                .copied()
                .filter(|&c| tree.blocks_at(c).filter(|&x| alive[x]).count() >= 2)
                .collect::<Vec<_>>()
        };
        let mut leaves = remaining.iter().filter_map(|&b| {
            let cuts = alive_cuts(b);
            (cuts.len() == 1).then(|| (b, cuts[0]))
        });
        let (block1, cut1) = leaves.next().expect("a tree with two blocks has two leaves");
        let (block2, cut2) = leaves.next().expect("a tree with two blocks has two leaves");
        return Ok(DecisionOutcome {
            answer: Answer::No,
            trace,
            evidence: Evidence::TwoBadLeaves { block1, cut1, block2, cut2 },
        });
    }
    let b = remaining[0];
    let vertices = tree.vertices(b);
    let found = feedback_candidates(vertices.len(), tree.edge_ids(b).len(), &tree.block_incidence(b)).and_then(|c| {
        let mut uf = UnionFind::new(g.vertex_count());
        c.into_iter().map(|local| vertices[local]).find(|&v| feedback_in_block(g, &tree, b, v, &mut uf))
    });
    Ok(match found {
        Some(vertex) => DecisionOutcome { answer: Answer::Yes, trace, evidence: Evidence::FeedbackVertex { block: b, vertex } },
        None => DecisionOutcome {
            answer: Answer::No,
            trace,
            evidence: Evidence::SingleBlockNoFeedback {
                block: b,
                vertices: vertices.to_vec(),
                edges: tree.edge_ids(b).iter().map(|&e| g.edges()[e]).collect(),
            },
        },
    })
}

/// Whether block `b` of `g` minus `c` is a forest, using `uf` as scratch over
/// the vertex ids of `g`.
fn feedback_in_block(g: &Multigraph, tree: &BlockTree, b: usize, c: usize, uf: &mut UnionFind) -> bool {
    for &x in tree.vertices(b) {
        uf.reset(x);
    }
    tree.edge_ids(b).iter().all(|&e| {
        let (x, y) = g.edges()[e];
        x == c || y == c || uf.union(x, y)
    })
}

/// Leaf pruning on the block tree; returns the surviving blocks and the trace.
fn prune(g: &Multigraph, tree: &BlockTree) -> (Vec<bool>, Vec<PrunedBlock>) {
    let nb = tree.block_count();
    let mut scratch = UnionFind::new(g.vertex_count());
    let mut alive = vec![true; nb];
    let mut alive_count = nb;
    // live blocks at each cut vertex
    let mut cdeg: Vec<usize> = vec![0; tree.cut_vertices.last().map_or(0, |&c| c + 1)];
    for &c in &tree.cut_vertices {
        cdeg[c] = tree.blocks_at(c).count();
    }
    let mut bdeg: Vec<usize> = (0..nb).map(|b| tree.cuts_of(b).len()).collect();
    let mut queue: VecDeque<usize> = (0..nb).filter(|&b| bdeg[b] == 1).collect();
    let mut trace = Vec::new();
    while let Some(b) = queue.pop_front() {
        if !alive[b] || bdeg[b] != 1 || alive_count <= 1 {
            continue;
        }
        let c = *tree
            .cuts_of(b)
            .iter()
            .find(|&&c| cdeg[c] >= 2)
            .expect("leaf block has a live cut vertex");
        if !feedback_in_block(g, tree, b, c, &mut scratch) {
            continue;
        }
        alive[b] = false;
        alive_count -= 1;
        trace.push(PrunedBlock { block: b, cut_vertex: c });
        cdeg[c] -= 1;
        if cdeg[c] == 1 {
            let other = tree.blocks_at(c).find(|&x| alive[x]).expect("one live block remains at the cut");
            bdeg[other] -= 1;
            if bdeg[other] == 1 {
                queue.push_back(other);
            }
        }
    }
    (alive, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn k4() -> Multigraph {
        generators::complete(4).to_multigraph()
    }

    #[test]
    fn ear_trick_examples() {
        assert!(feedback_vertex_2connected(&generators::cycle(5).to_multigraph()).unwrap().is_some());
        assert_eq!(feedback_vertex_2connected(&k4()).unwrap(), None);
        let k4e = Multigraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let v = feedback_vertex_2connected(&k4e).unwrap().unwrap();
        assert!(v == 0 || v == 1);
        assert!(feedback_vertex_2connected(&generators::bowtie().to_multigraph()).is_err());
        assert!(feedback_vertex_2connected(&generators::theta()).unwrap().is_some());
    }

    #[test]
    fn fixtures() {
        let out = decide_ge2_subdivisions(&k4()).unwrap();
        assert_eq!(out.answer, Answer::No);
        assert!(matches!(out.evidence, Evidence::SingleBlockNoFeedback { .. }));
        let (h1, h2) = hhat_fixtures();
        for h in [h1, h2] {
            let out = decide_ge2_subdivisions(&h).unwrap();
            assert_eq!(out.answer, Answer::No);
            assert!(matches!(out.evidence, Evidence::TwoBadLeaves { .. }));
        }
        assert!(decide_ge2_subdivisions(&generators::bowtie().to_multigraph()).unwrap().is_yes());
        let chain = decide_ge2_subdivisions(&generators::digon_edge_digon()).unwrap();
        assert!(chain.is_yes());
        assert_eq!(chain.trace.len(), 2);
        assert!(!decide_ge2_subdivisions(&generators::prism().to_multigraph()).unwrap().is_yes());
    }

    #[test]
    fn degenerate_inputs() {
        assert!(decide_ge2_subdivisions(&Multigraph::new(1)).unwrap().is_yes());
        assert!(decide_ge2_subdivisions(&Multigraph::from_edges(2, [(0, 1)]).unwrap()).unwrap().is_yes());
        assert!(decide_ge2_subdivisions(&Multigraph::from_edges(1, [(0, 0), (0, 0)]).unwrap()).unwrap().is_yes());
        assert!(decide_ge2_subdivisions(&Multigraph::new(2)).is_err());
        assert!(decide_ge2_subdivisions(&Multigraph::new(0)).is_err());
    }

    #[test]
    fn json_keys() {
        let out = decide_ge2_subdivisions(&generators::digon()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&out).unwrap();
        assert_eq!(v["answer"], "yes");
        assert!(v["trace"].is_array());
        assert_eq!(v["evidence"]["kind"], "FeedbackVertex");
    }
}
