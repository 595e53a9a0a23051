//! Quadratic reference implementations, used as oracles for the linear-time
//! procedure. They share no code with it beyond the graph type.

use std::collections::{HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Answer, DecisionOutcome, Evidence};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Component label per vertex of `g` with `skip` deleted (`usize::MAX` for
/// `skip` itself) and the number of components.
fn components(g: &Multigraph, skip: Option<usize>) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        if Some(u) != skip && Some(v) != skip && u != v {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if Some(s) == skip || label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if label[w] == usize::MAX {
                    label[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

fn forest_without(g: &Multigraph, skip: Option<usize>) -> bool {
    let kept = g.vertex_count() - usize::from(skip.is_some());
    let edges = g.edges().iter().filter(|&&(u, v)| Some(u) != skip && Some(v) != skip).count();
    let (_, c) = components(g, skip);
    edges + c == kept
}

/// Every vertex whose deletion leaves a forest, by direct edge counting.
pub fn feedback_vertices_bruteforce(b: &Multigraph) -> Vec<usize> {
    (0..b.vertex_count()).filter(|&v| forest_without(b, Some(v))).collect()
}

/// Blocks as edge-id classes: two edges share a block iff no single vertex
/// deletion separates them (an edge at the deleted vertex is represented by
/// its other end). Every loop is a class of its own.
fn blocks_bruteforce(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let labels: Vec<Vec<usize>> = (0..n).map(|v| components(g, Some(v)).0).collect();
    let mut classes: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut out = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if a == b {
            out.push(vec![e]);
            continue;
        }
        let key: Vec<usize> = (0..n).map(|v| labels[v][if a == v { b } else { a }]).collect();
        classes.entry(key).or_default().push(e);
    }
    let mut grouped: Vec<Vec<usize>> = classes.into_values().collect();
    grouped.sort();
    grouped.extend(out);
    grouped
}

fn fragment(g: &Multigraph, edge_ids: &[usize]) -> (Multigraph, Vec<usize>) {
    let mut verts: Vec<usize> = edge_ids.iter().flat_map(|&e| [g.edges()[e].0, g.edges()[e].1]).collect();
    verts.sort_unstable();
    verts.dedup();
    let pos = |v: usize| verts.binary_search(&v).unwrap();
    let edges: Vec<(usize, usize)> = edge_ids.iter().map(|&e| (pos(g.edges()[e].0), pos(g.edges()[e].1))).collect();
    (Multigraph::from_edges(verts.len(), edges).unwrap(), verts)
}

/// Reference decision: the same pruning rule, evaluated on independently
/// computed blocks with brute-force feedback tests and a seeded random
/// choice among the current leaves.
pub fn decide_bruteforce(g: &Multigraph, seed: u64) -> Result<Answer> {
    if g.vertex_count() == 0 || components(g, None).1 != 1 {
        return Err(Error::domain("decide_bruteforce requires a connected, non-empty graph"));
    }
    if g.edge_count() == 0 {
        return Ok(Answer::Yes);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks: Vec<(Multigraph, Vec<usize>)> = blocks_bruteforce(g).iter().map(|ids| fragment(g, ids)).collect();
    loop {
        if blocks.len() == 1 {
            break;
        }
        let mut leaves: Vec<(usize, usize)> = Vec::new();
        for (i, (_, verts)) in blocks.iter().enumerate() {
            let shared: Vec<usize> = verts
                .iter()
                .copied()
                .filter(|&v| blocks.iter().enumerate().any(|(j, (_, w))| j != i && w.contains(&v)))
                .collect();
            if shared.len() == 1 {
                leaves.push((i, shared[0]));
            }
        }
        leaves.shuffle(&mut rng);
        let prunable = leaves.into_iter().find(|&(i, c)| {
            let (bg, verts) = &blocks[i];
            let local = verts.iter().position(|&v| v == c).unwrap();
            feedback_vertices_bruteforce(bg).contains(&local)
        });
        match prunable {
            Some((i, _)) => {
                blocks.swap_remove(i);
            }
            None => return Ok(Answer::No),
        }
    }
    Ok(if feedback_vertices_bruteforce(&blocks[0].0).is_empty() { Answer::No } else { Answer::Yes })
}

/// Re-checks the evidence of a decision outcome from scratch.
pub fn verify_evidence(g: &Multigraph, outcome: &DecisionOutcome) -> Result<()> {
    let fail = |msg: String| Err(Error::domain(msg));
    match &outcome.evidence {
        Evidence::FeedbackVertex { vertex, .. } => {
            if outcome.answer != Answer::Yes {
                return fail("feedback-vertex evidence on a no answer".into());
            }
            g.check_vertex(*vertex)
        }
        Evidence::SingleBlockNoFeedback { vertices, edges, .. } => {
            if outcome.answer != Answer::No {
                return fail("no-answer evidence on a yes answer".into());
            }
            let pos = |v: usize| vertices.iter().position(|&x| x == v);
            let mut local = Vec::with_capacity(edges.len());
            for &(u, v) in edges {
                match (pos(u), pos(v)) {
                    (Some(a), Some(b)) => local.push((a, b)),
                    _ => return fail(format!("edge ({u}, {v}) leaves the block")),
                }
            }
            let block = Multigraph::from_edges(vertices.len(), local)?;
            if blocks_bruteforce(&block).len() != 1 || components(&block, None).1 != 1 {
                return fail("evidence block is not 2-connected".into());
            }
            if !feedback_vertices_bruteforce(&block).is_empty() {
                return fail("evidence block has a feedback vertex".into());
            }
            Ok(())
        }
        Evidence::TwoBadLeaves { cut1, cut2, .. } => {
            if outcome.answer != Answer::No {
                return fail("no-answer evidence on a yes answer".into());
            }
            let blocks = blocks_bruteforce(g);
            let mut found = 0;
            for cut in [*cut1, *cut2] {
                // some block at `cut`, cut off from the rest by `cut`, with a cycle avoiding `cut`
                let ok = blocks.iter().any(|ids| {
                    let (bg, verts) = fragment(g, ids);
                    let Some(local) = verts.iter().position(|&v| v == cut) else { return false };
                    !forest_without(&bg, Some(local))
                });
                found += usize::from(ok);
            }
            if found == 2 {
                Ok(())
            } else {
                fail("leaf blocks of the evidence are missing a cycle avoiding their cut vertex".into())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn bruteforce_feedback_examples() {
        assert_eq!(feedback_vertices_bruteforce(&generators::cycle(4).to_multigraph()), vec![0, 1, 2, 3]);
        assert!(feedback_vertices_bruteforce(&generators::prism().to_multigraph()).is_empty());
        assert_eq!(feedback_vertices_bruteforce(&generators::theta()), vec![0, 1]);
    }

    #[test]
    fn bruteforce_decisions() {
        assert_eq!(decide_bruteforce(&generators::complete(4).to_multigraph(), 0).unwrap(), Answer::No);
        let tree = generators::path(6).to_multigraph();
        assert_eq!(decide_bruteforce(&tree, 3).unwrap(), Answer::Yes);
        assert_eq!(decide_bruteforce(&generators::digon_edge_digon(), 1).unwrap(), Answer::Yes);
    }

    #[test]
    fn blocks_by_separation() {
        assert_eq!(blocks_bruteforce(&generators::bowtie().to_multigraph()).len(), 2);
        assert_eq!(blocks_bruteforce(&generators::digon_edge_digon()).len(), 3);
        assert_eq!(blocks_bruteforce(&Multigraph::from_edges(2, [(0, 0), (0, 1)]).unwrap()).len(), 2);
    }
}
