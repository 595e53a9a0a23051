use std::collections::HashMap;

use super::{Multigraph, SimpleGraph};
use crate::error::{Error, Result};

/// A simple graph described as a subdivision of a base multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionProfile {
    pub base: Multigraph,
    /// Subdivision vertices inserted on each base edge.
    pub counts: Vec<usize>,
    pub realized: SimpleGraph,
    /// Base vertex to realized vertex.
    pub branch_map: Vec<usize>,
    /// For each base edge `(u, v)`, the realized path from `u` to `v`, ends included.
    pub path_map: Vec<Vec<usize>>,
}

impl SubdivisionProfile {
    /// True iff every base edge received at least `k` subdivision vertices.
    pub fn is_at_least(&self, k: usize) -> bool {
        self.counts.iter().all(|&c| c >= k)
    }
}

/// Replaces every edge `e` of `g` by a path with `counts[e]` internal vertices.
///
/// Base vertices keep their ids; subdivision vertices are appended edge by
/// edge, in path order from the first endpoint.
pub fn subdivide(g: &Multigraph, counts: &[usize]) -> Result<SubdivisionProfile> {
    if counts.len() != g.edge_count() {
        return Err(Error::Subdivision(format!(
            "{} counts given for {} edges",
            counts.len(),
            g.edge_count()
        )));
    }
    let mut bare: HashMap<(usize, usize), usize> = HashMap::new();
    for (e, (&(u, v), &c)) in g.edges().iter().zip(counts).enumerate() {
        if u == v && c < 2 {
            return Err(Error::Subdivision(format!("loop {e} at {u} needs at least 2 subdivision vertices")));
        }
        if c == 0 {
            let key = (u.min(v), u.max(v));
            if let Some(prev) = bare.insert(key, e) {
                return Err(Error::Subdivision(format!(
                    "parallel edges {prev} and {e} between {u} and {v} are both unsubdivided"
                )));
            }
        }
    }
    let n = g.vertex_count();
    let total = n + counts.iter().sum::<usize>();
    let mut realized = SimpleGraph::new(total);
    let mut next = n;
    let mut path_map = Vec::with_capacity(g.edge_count());
    for (&(u, v), &c) in g.edges().iter().zip(counts) {
        let mut path = Vec::with_capacity(c + 2);
        path.push(u);
        path.extend(next..next + c);
        next += c;
        path.push(v);
        for w in path.windows(2) {
            realized.add_edge(w[0], w[1])?;
        }
        path_map.push(path);
    }
    Ok(SubdivisionProfile {
        base: g.clone(),
        counts: counts.to_vec(),
        realized,
        branch_map: (0..n).collect(),
        path_map,
    })
}

/// Suppresses the degree-2 vertices of a connected simple graph.
///
/// Branch vertices (degree other than 2) become base vertices in ascending
/// order; every maximal path through degree-2 vertices becomes one base
/// edge. A cycle becomes a single vertex with one loop, anchored at its
/// smallest vertex.
pub fn subdivision_base(h: &SimpleGraph) -> Result<SubdivisionProfile> {
    let n = h.vertex_count();
    if n == 0 || !h.is_connected() {
        return Err(Error::domain("subdivision base requires a connected, non-empty graph"));
    }
    let branch: Vec<usize> = (0..n).filter(|&v| h.degree(v) != 2).collect();
    if branch.is_empty() {
        let anchor = 0;
        let mut path = vec![anchor];
        let (mut prev, mut cur) = (anchor, h.neighbors(anchor)[0]);
        while cur != anchor {
            path.push(cur);
            let nb = h.neighbors(cur);
            let nxt = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = nxt;
        }
        path.push(anchor);
        return Ok(SubdivisionProfile {
            base: Multigraph::from_edges(1, [(0, 0)])?,
            counts: vec![n - 1],
            realized: h.clone(),
            branch_map: vec![anchor],
            path_map: vec![path],
        });
    }
    let mut base_id = vec![usize::MAX; n];
    for (i, &b) in branch.iter().enumerate() {
        base_id[b] = i;
    }
    let mut visited = vec![false; n];
    let mut base = Multigraph::new(branch.len());
    let mut counts = Vec::new();
    let mut path_map = Vec::new();
    for &b in &branch {
        for &w in h.neighbors(b) {
            if base_id[w] != usize::MAX {
                if b < w {
                    base.add_edge(base_id[b], base_id[w])?;
                    counts.push(0);
                    path_map.push(vec![b, w]);
                }
                continue;
            }
            if visited[w] {
                continue;
            }
            let mut path = vec![b];
            let (mut prev, mut cur) = (b, w);
            while base_id[cur] == usize::MAX {
                visited[cur] = true;
                path.push(cur);
                let nb = h.neighbors(cur);
                let nxt = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = nxt;
            }
            path.push(cur);
            base.add_edge(base_id[b], base_id[cur])?;
            counts.push(path.len() - 2);
            path_map.push(path);
        }
    }
    Ok(SubdivisionProfile { base, counts, realized: h.clone(), branch_map: branch, path_map })
}
