//! Representations of ≥2-subdivisions, following the block pruning order of
//! the decision procedure backwards.

use super::build::build_path_or_chandelier;
use super::{add_pendant_path, glue_chandelier, FrameRepresentation};
use crate::decision::{decide_ge2_subdivisions, Evidence};
use crate::error::{Error, Result};
use crate::graph::{block_tree, subdivide, Block, Multigraph, SubdivisionProfile};

/// Realized vertices of a block's subdivision, ascending.
fn block_vertices(block: &Block, sub: &SubdivisionProfile) -> Vec<usize> {
    let mut vs: Vec<usize> = block.vertices.iter().map(|&v| sub.branch_map[v]).collect();
    for &e in &block.edge_ids {
        let path = &sub.path_map[e];
        vs.extend_from_slice(&path[1..path.len() - 1]);
    }
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// Valid representation of the subdivision of `g` with `counts[e]` vertices
/// on edge `e`, numbered as by [`subdivide`].
pub fn build_ge2_subdivision(g: &Multigraph, counts: &[usize]) -> Result<FrameRepresentation<i64>> {
    if counts.iter().any(|&c| c < 2) {
        return Err(Error::domain("every edge needs at least 2 subdivision vertices"));
    }
    let sub = subdivide(g, counts)?;
    let outcome = decide_ge2_subdivisions(g)?;
    let Evidence::FeedbackVertex { block: root, vertex: pivot } = outcome.evidence else {
        return Err(Error::domain(
            "no ≥2-subdivision of this multigraph is a restricted frame graph, so none is drawn",
        ));
    };
    let tree = block_tree(g)?;
    let realized = &sub.realized;

    let root_vs = block_vertices(&tree.block(root), &sub);
    let h = realized.induced(&root_vs);
    let local_pivot = root_vs.binary_search(&sub.branch_map[pivot]).ok();
    let mut rep = build_path_or_chandelier(&h, local_pivot)?;
    // rep id -> realized id
    let mut ids: Vec<usize> = root_vs;
    let mut rep_of = vec![usize::MAX; realized.vertex_count()];
    for (i, &v) in ids.iter().enumerate() {
        rep_of[v] = i;
    }

    for step in outcome.trace.iter().rev() {
        let block = tree.block(step.block);
        let cut = sub.branch_map[step.cut_vertex];
        let at = rep_of[cut];
        let n = rep.vertex_count();
        if block.vertices.len() == 2 && block.edge_ids.len() == 1 {
            let mut path = sub.path_map[block.edge_ids[0]].clone();
            if path[0] != cut {
                path.reverse();
            }
            rep = add_pendant_path(&rep, at, path.len() - 1)?;
            ids.extend_from_slice(&path[1..]);
        } else {
            let vs = block_vertices(&block, &sub);
            let h = realized.induced(&vs);
            let local = vs.binary_search(&cut).expect("cut vertex lies in its block");
            rep = glue_chandelier(&rep, at, &h, local)?;
            ids.extend(vs.iter().copied().filter(|&v| v != cut));
        }
        for (i, &v) in ids.iter().enumerate().skip(n) {
            rep_of[v] = i;
        }
    }

    let out = rep.relabel(&ids);
    if &out.target != realized {
        return Err(Error::domain("drawn graph differs from the requested subdivision"));
    }
    Ok(out)
}
