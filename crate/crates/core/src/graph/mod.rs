//! Graph data model: loop/parallel-edge capable multigraphs, simple graphs,
//! the edge-list text format, and the structural routines built on them.

mod blocks;
mod forest;
mod iso;
mod shape;
mod subdivision;

pub use blocks::{block_tree, Block, BlockTree};
pub use forest::{is_feedback_vertex, is_forest, UnionFind};
pub use iso::{find_isomorphism, is_induced_subgraph, is_isomorphic};
pub(crate) use iso::induced_subgraph_where;
pub use shape::{full_star_cutset_centers, is_chandelier_with_pivot, is_path, is_triangle_free, recognize_shape, Shape};
pub use subdivision::{subdivide, subdivision_base, SubdivisionProfile};

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_traits::AsPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected multigraph on vertices `0..vertex_count`.
///
/// Parallel edges and loops are allowed. Edge order carries no meaning for
/// any operation of the crate, but it is preserved so that edge ids are
/// stable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

/// Compressed incidence lists of a [`Multigraph`]: for every vertex the
/// `(neighbor, edge id)` pairs. A loop appears twice in its vertex's list.
#[derive(Clone, Debug)]
pub struct Incidence {
    offsets: Vec<usize>,
    entries: Vec<(usize, usize)>,
}

impl Incidence {
    pub(crate) fn build<T: AsPrimitive<usize>>(n: usize, edges: &[(T, T)]) -> Incidence {
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in edges {
            offsets[u.as_() + 1] += 1;
            offsets[v.as_() + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut entries = vec![(0, 0); offsets[n]];
        for (id, &(u, v)) in edges.iter().enumerate() {
            let (u, v) = (u.as_(), v.as_());
            entries[fill[u]] = (v, id);
            fill[u] += 1;
            entries[fill[v]] = (u, id);
            fill[v] += 1;
        }
        Incidence { offsets, entries }
    }

    #[inline]
    pub fn of(&self, v: usize) -> &[(usize, usize)] {
        &self.entries[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Multigraph { vertex_count, edges: Vec::new() }
    }

    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Multigraph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Appends an edge and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        for w in [u, v] {
            if w >= self.vertex_count {
                return Err(Error::Range { vertex: w, vertex_count: self.vertex_count });
            }
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::Range { vertex: v, vertex_count: self.vertex_count })
        }
    }

    pub fn incidence(&self) -> Incidence {
        Incidence::build(self.vertex_count, &self.edges)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    /// Connected (the empty graph and K1 count as connected).
    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let inc = self.incidence();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in inc.of(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    pub fn to_simple(&self) -> Result<SimpleGraph> {
        SimpleGraph::from_edges(self.vertex_count, self.edges.iter().copied())
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        Multigraph {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
        }
    }

    /// Sub-multigraph on the given vertices (renumbered by position) keeping
    /// the given edges, which must have both endpoints among `vertices`.
    pub fn fragment(&self, vertices: &[usize], edge_ids: &[usize]) -> (Multigraph, Vec<usize>) {
        let mut local = std::collections::HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            local.insert(v, i);
        }
        let edges = edge_ids
            .iter()
            .map(|&e| {
                let (u, v) = self.edges[e];
                (local[&u], local[&v])
            })
            .collect();
        (Multigraph { vertex_count: vertices.len(), edges }, vertices.to_vec())
    }
}

/// Parses the edge-list text format: first non-comment line is the vertex
/// count, every further non-comment line is `"u v"`. Lines starting with `#`
/// are comments and blank lines are ignored. LF and CRLF are accepted.
pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let mut graph: Option<Multigraph> = None;
    for (idx, raw) in text.split('\n').enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        match graph.as_mut() {
            None => {
                let n = parse_id(line, line_no)?;
                graph = Some(Multigraph::new(n));
            }
            Some(g) => {
                let mut parts = line.split(' ');
                let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected \"u v\", found {line:?}"),
                    });
                };
                let u = parse_id(a, line_no)?;
                let v = parse_id(b, line_no)?;
                g.add_edge(u, v)?;
            }
        }
    }
    graph.ok_or(Error::Parse { line: 0, message: "missing vertex count".into() })
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse { line, message: format!("not a decimal id: {token:?}") });
    }
    token
        .parse()
        .map_err(|_| Error::Parse { line, message: format!("id too large: {token:?}") })
}

/// Writes a multigraph in the edge-list format accepted by [`parse_multigraph`].
pub fn format_multigraph(g: &Multigraph) -> String {
    let mut out = String::with_capacity(8 * (g.edge_count() + 1));
    let _ = writeln!(out, "{}", g.vertex_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// A simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph { adj: vec![Vec::new(); vertex_count], edge_count: 0 }
    }

    /// Builds a simple graph; loops and repeated edges are rejected.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = SimpleGraph::new(vertex_count);
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(Error::domain(format!("repeated edge {{{u}, {v}}} in a simple graph")));
            }
        }
        Ok(g)
    }

    /// Inserts `uv`; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.adj.len();
        for w in [u, v] {
            if w >= n {
                return Err(Error::Range { vertex: w, vertex_count: n });
            }
        }
        if u == v {
            return Err(Error::domain(format!("loop at {u} in a simple graph")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(true)
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.adj.len() || v >= self.adj.len() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(pos);
                self.edge_count -= 1;
                true
            }
            Err(_) => false,
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|a| a.binary_search(&v).is_ok())
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::Range { vertex: v, vertex_count: self.adj.len() })
        }
    }

    /// Component id per vertex, skipping `removed` vertices (`None` for them),
    /// and the number of components.
    pub fn components_without(&self, removed: &[bool]) -> (Vec<Option<usize>>, usize) {
        let n = self.adj.len();
        let mut comp = vec![None; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if removed.get(s).copied().unwrap_or(false) || comp[s].is_some() {
                continue;
            }
            comp[s] = Some(count);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if comp[w].is_none() && !removed.get(w).copied().unwrap_or(false) {
                        comp[w] = Some(count);
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn component_count(&self) -> usize {
        self.components_without(&[]).1
    }

    /// Connected (the empty graph and K1 count as connected).
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Breadth-first distances from `source` (`usize::MAX` if unreachable).
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Induced subgraph on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut local = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut g = SimpleGraph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && i < j {
                    g.adj[i].push(j);
                    g.adj[j].push(i);
                    g.edge_count += 1;
                }
            }
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        g
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.adj.len());
        for (u, v) in self.edges() {
            g.adj[perm[u]].push(perm[v]);
            g.adj[perm[v]].push(perm[u]);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        g.edge_count = self.edge_count;
        g
    }

    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph { vertex_count: self.adj.len(), edges: self.edges() }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.adj.len();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&w| w + shift).collect()));
        SimpleGraph { adj, edge_count: self.edge_count + other.edge_count }
    }
}

/// Serialized form shared by the representation and pair files.
#[derive(Serialize, Deserialize)]
pub(crate) struct GraphFields {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&SimpleGraph> for GraphFields {
    fn from(g: &SimpleGraph) -> Self {
        GraphFields { vertices: g.vertex_count(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<GraphFields> for SimpleGraph {
    type Error = Error;
    fn try_from(f: GraphFields) -> Result<Self> {
        SimpleGraph::from_edges(f.vertices, f.edges.into_iter().map(|[u, v]| (u, v)))
    }
}
