//! Graph–stable-set pairs and the iteration generating Burling graphs,
//! with the ADD and JOIN operations, constructibility certificates and an
//! exact chromatic number oracle.

mod cert;
mod chromatic;
mod construct;

pub use cert::{expand_empty_joins, materialized_check, replay, verify, Certificate, Node};
pub use chromatic::{chromatic_number, dsatur_coloring};
pub use construct::Construction;
pub use construct::{construct, lemma_inter_builder, pseudo_decomposition, PseudoBlock, PseudoDecomposition};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph_where, GraphFields, SimpleGraph};

/// A graph with an ordered family of stable sets. Sets are kept sorted and
/// the family holds no duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PairFields", into = "PairFields")]
pub struct Pair {
    pub graph: SimpleGraph,
    pub stable_sets: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct PairFields {
    #[serde(flatten)]
    graph: GraphFields,
    stable_sets: Vec<Vec<usize>>,
}

impl TryFrom<PairFields> for Pair {
    type Error = Error;

    fn try_from(f: PairFields) -> Result<Pair> {
        Pair::new(SimpleGraph::try_from(f.graph)?, f.stable_sets)
    }
}

impl From<Pair> for PairFields {
    fn from(p: Pair) -> PairFields {
        PairFields { graph: GraphFields::from(&p.graph), stable_sets: p.stable_sets }
    }
}

fn push_unique(family: &mut Vec<Vec<usize>>, mut set: Vec<usize>) {
    set.sort_unstable();
    if !family.contains(&set) {
        family.push(set);
    }
}

impl Pair {
    /// Checks that every set is stable, then normalizes the family.
    pub fn new(graph: SimpleGraph, stable_sets: Vec<Vec<usize>>) -> Result<Pair> {
        let mut family = Vec::with_capacity(stable_sets.len());
        for set in stable_sets {
            for &v in &set {
                graph.check_vertex(v)?;
            }
            let mut sorted = set.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::domain(format!("stable set {set:?} repeats a vertex")));
            }
            if let Some((a, b)) = first_edge_inside(&graph, &sorted) {
                return Err(Error::domain(format!("set {set:?} is not stable: {a}{b} is an edge")));
            }
            push_unique(&mut family, sorted);
        }
        Ok(Pair { graph, stable_sets: family })
    }

    /// `(K1, {{0}})`.
    pub fn singleton() -> Pair {
        Pair { graph: SimpleGraph::new(1), stable_sets: vec![vec![0]] }
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn is_valid(&self) -> bool {
        self.stable_sets.iter().all(|s| first_edge_inside(&self.graph, s).is_none())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("pair serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Pair> {
        Ok(serde_json::from_str(text)?)
    }

    fn set(&self, index: usize) -> Result<&Vec<usize>> {
        self.stable_sets.get(index).ok_or(Error::Index { index, len: self.stable_sets.len() })
    }
}

fn first_edge_inside(g: &SimpleGraph, set: &[usize]) -> Option<(usize, usize)> {
    set.iter().enumerate().find_map(|(i, &a)| set[i + 1..].iter().find(|&&b| g.has_edge(a, b)).map(|&b| (a, b)))
}

/// One step of the construction. With `n` vertices and `s` sets, copy `i`
/// of the input occupies `n + i*n .. n + (i+1)*n`, and the vertex for the
/// `i`-th set and the `t`-th set of copy `i` is `n + s*n + i*s + t`. The
/// new family lists all `S ∪ T` and then all `S ∪ {v_{S,T}}`, both in
/// lexicographic `(S, T)` order.
pub fn next(p: &Pair) -> Result<Pair> {
    if p.stable_sets.is_empty() {
        return Err(Error::domain("the family of stable sets is empty"));
    }
    if let Some(bad) = p.stable_sets.iter().find(|set| first_edge_inside(&p.graph, set).is_some()) {
        return Err(Error::domain(format!("{bad:?} is not a stable set")));
    }
    let n = p.vertex_count();
    let s = p.stable_sets.len();
    let total = n + s * n + s * s;
    let mut g = SimpleGraph::new(total);
    let edges = p.graph.edges();
    for i in 0..=s {
        let off = i * n;
        for &(a, b) in &edges {
            g.add_edge(off + a, off + b)?;
        }
    }
    let hub = |i: usize, t: usize| n + s * n + i * s + t;
    let mut unions = Vec::with_capacity(s * s);
    let mut hubs = Vec::with_capacity(s * s);
    for (i, set) in p.stable_sets.iter().enumerate() {
        let off = n + i * n;
        for (t, other) in p.stable_sets.iter().enumerate() {
            let copy: Vec<usize> = other.iter().map(|&x| off + x).collect();
            for &x in &copy {
                g.add_edge(hub(i, t), x)?;
            }
            unions.push(set.iter().copied().chain(copy).collect::<Vec<_>>());
            hubs.push(set.iter().copied().chain([hub(i, t)]).collect::<Vec<_>>());
        }
    }
    let mut family = Vec::with_capacity(2 * s * s);
    for set in unions.into_iter().chain(hubs) {
        push_unique(&mut family, set);
    }
    Ok(Pair { graph: g, stable_sets: family })
}

/// `next` applied `k` times to the singleton pair.
pub fn next_iterate(k: usize) -> Result<Pair> {
    (0..k).try_fold(Pair::singleton(), |p, _| next(&p))
}

/// Adds a vertex adjacent to exactly the `index`-th set and the set holding
/// only the new vertex.
pub fn add_op(p: &Pair, index: usize) -> Result<Pair> {
    let set = p.set(index)?.clone();
    let mut g = p.graph.clone();
    let v = g.add_vertex();
    for x in set {
        g.add_edge(v, x)?;
    }
    let mut family = p.stable_sets.clone();
    push_unique(&mut family, vec![v]);
    Ok(Pair { graph: g, stable_sets: family })
}

/// Joins `p1` to `p2` on the `index`-th set of `p2`. The vertices of `p1`
/// come first. The family is `S2 - {S}` followed by `S ∪ S1` for each set
/// `S1` of `p1`; joining on `None` (the empty set) keeps all of `S2` and
/// then appends `S1`.
pub fn join_op(p1: &Pair, p2: &Pair, index: Option<usize>) -> Result<Pair> {
    let n1 = p1.vertex_count();
    if let Some(i) = index {
        p2.set(i)?;
    }
    let g = p1.graph.disjoint_union(&p2.graph);
    let shift = |set: &Vec<usize>| set.iter().map(|&x| x + n1).collect::<Vec<usize>>();
    let mut family = Vec::new();
    for (j, set) in p2.stable_sets.iter().enumerate() {
        if Some(j) != index {
            push_unique(&mut family, shift(set));
        }
    }
    let base = index.map(|i| shift(&p2.stable_sets[i])).unwrap_or_default();
    for set in &p1.stable_sets {
        push_unique(&mut family, set.iter().copied().chain(base.iter().copied()).collect());
    }
    Ok(Pair { graph: g, stable_sets: family })
}

/// The pair induced on `vertices` (vertex `i` of the result is
/// `vertices[i]`) with the restriction of every set.
pub fn restrict(p: &Pair, vertices: &[usize]) -> Result<Pair> {
    let mut local = vec![usize::MAX; p.vertex_count()];
    for (i, &v) in vertices.iter().enumerate() {
        p.graph.check_vertex(v)?;
        if local[v] != usize::MAX {
            return Err(Error::domain(format!("vertex {v} listed twice")));
        }
        local[v] = i;
    }
    let mut family = Vec::new();
    for set in &p.stable_sets {
        push_unique(&mut family, set.iter().filter(|&&x| local[x] != usize::MAX).map(|&x| local[x]).collect());
    }
    Ok(Pair { graph: p.graph.induced(vertices), stable_sets: family })
}

/// An induced embedding of `small.graph` into `big.graph` under which every
/// set of `small` is the restriction of some set of `big`.
pub fn is_induced_subpair(small: &Pair, big: &Pair, budget: u64) -> Result<Option<Vec<usize>>> {
    let words = big.vertex_count().div_ceil(64);
    let bits: Vec<Vec<u64>> = big
        .stable_sets
        .iter()
        .map(|set| {
            let mut b = vec![0u64; words];
            for &x in set {
                b[x / 64] |= 1 << (x % 64);
            }
            b
        })
        .collect();
    let member: Vec<Vec<bool>> = small
        .stable_sets
        .iter()
        .map(|set| {
            let mut m = vec![false; small.vertex_count()];
            for &x in set {
                m[x] = true;
            }
            m
        })
        .collect();
    let keep = |map: &[usize]| {
        member.iter().all(|m| {
            bits.iter().any(|b| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &c)| c != usize::MAX)
                    .all(|(x, &c)| m[x] == (b[c / 64] >> (c % 64) & 1 == 1))
            })
        })
    };
    induced_subgraph_where(&small.graph, &big.graph, budget, &keep)
}
