use serde::{Deserialize, Serialize};

use super::{add_op, is_induced_subpair, join_op, next_iterate, restrict, Pair};
use crate::error::{Error, Result};

/// One node of a constructibility certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "UPPERCASE")]
pub enum Node {
    /// `(K1, {{0}})`.
    Singleton,
    Add { child: Box<Node>, set: usize },
    /// `set = None` joins on the empty set.
    Join { left: Box<Node>, right: Box<Node>, set: Option<usize> },
    /// The pair induced on `vertices` (ascending child ids), keeping the listed
    /// sets, written in the new ids, each a restriction of a child set.
    Induce { child: Box<Node>, vertices: Vec<usize>, stable_sets: Vec<Vec<usize>> },
}

#[allow(clippy::should_implement_trait)]
impl Node {
    pub fn add(child: Node, set: usize) -> Node {
        Node::Add { child: Box::new(child), set }
    }

    pub fn join(left: Node, right: Node, set: Option<usize>) -> Node {
        Node::Join { left: Box::new(left), right: Box::new(right), set }
    }

    /// Number of ADD and JOIN nodes, a JOIN on the empty set counting twice
    /// (it stands for an ADD followed by a JOIN). Bounds the number of
    /// iterations needed to contain the replayed pair.
    pub fn depth(&self) -> usize {
        match self {
            Node::Singleton => 0,
            Node::Add { child, .. } => 1 + child.depth(),
            Node::Join { left, right, set } => 1 + usize::from(set.is_none()) + left.depth() + right.depth(),
            Node::Induce { child, .. } => child.depth(),
        }
    }
}

/// A certificate tree and the pair it claims to produce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub root: Node,
    pub claimed: Pair,
}

impl Certificate {
    /// Replays `root` and records the result as the claim.
    pub fn from_root(root: Node) -> Result<Certificate> {
        let claimed = replay(&root)?;
        Ok(Certificate { root, claimed })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        Ok(serde_json::from_str(text)?)
    }
}

fn invalid(path: &str, reason: impl Into<String>) -> Error {
    Error::Certificate { node: path.to_string(), reason: reason.into() }
}

/// Evaluates the tree bottom-up.
pub fn replay(root: &Node) -> Result<Pair> {
    replay_at(root, "root")
}

fn replay_at(node: &Node, path: &str) -> Result<Pair> {
    let wrap = |e: Error| match e {
        Error::Certificate { .. } => e,
        other => invalid(path, other.to_string()),
    };
    match node {
        Node::Singleton => Ok(Pair::singleton()),
        Node::Add { child, set } => {
            let p = replay_at(child, &format!("{path}.child"))?;
            add_op(&p, *set).map_err(wrap)
        }
        Node::Join { left, right, set } => {
            let l = replay_at(left, &format!("{path}.left"))?;
            let r = replay_at(right, &format!("{path}.right"))?;
            join_op(&l, &r, *set).map_err(wrap)
        }
        Node::Induce { child, vertices, stable_sets } => {
            let p = replay_at(child, &format!("{path}.child"))?;
            if vertices.windows(2).any(|w| w[0] >= w[1]) {
                return Err(invalid(path, "induced vertices must be strictly ascending"));
            }
            let r = restrict(&p, vertices).map_err(wrap)?;
            let mut family = Vec::with_capacity(stable_sets.len());
            for set in stable_sets {
                let mut s = set.clone();
                s.sort_unstable();
                if !r.stable_sets.contains(&s) {
                    return Err(invalid(path, format!("{set:?} is not the restriction of a set of the child")));
                }
                if !family.contains(&s) {
                    family.push(s);
                }
            }
            Ok(Pair { graph: r.graph, stable_sets: family })
        }
    }
}

/// Replays the certificate and compares with the claimed pair.
pub fn verify(cert: &Certificate) -> Result<Pair> {
    let p = replay(&cert.root)?;
    if p != cert.claimed {
        return Err(invalid("root", "replayed pair differs from the claimed pair"));
    }
    Ok(p)
}

/// Rewrites every JOIN on the empty set as an ADD of a helper vertex, a
/// JOIN on its singleton, and an INDUCE dropping the helper again.
pub fn expand_empty_joins(node: &Node) -> Result<Node> {
    expand_at(node, "root")
}

fn expand_at(node: &Node, path: &str) -> Result<Node> {
    Ok(match node {
        Node::Singleton => Node::Singleton,
        Node::Add { child, set } => Node::add(expand_at(child, &format!("{path}.child"))?, *set),
        Node::Induce { child, vertices, stable_sets } => Node::Induce {
            child: Box::new(expand_at(child, &format!("{path}.child"))?),
            vertices: vertices.clone(),
            stable_sets: stable_sets.clone(),
        },
        Node::Join { left, right, set: Some(i) } => Node::join(
            expand_at(left, &format!("{path}.left"))?,
            expand_at(right, &format!("{path}.right"))?,
            Some(*i),
        ),
        Node::Join { left, right, set: None } => {
            let l = expand_at(left, &format!("{path}.left"))?;
            let r = expand_at(right, &format!("{path}.right"))?;
            let rp = replay(&r)?;
            if rp.stable_sets.is_empty() {
                return Err(invalid(path, "cannot simulate an empty join onto a pair without sets"));
            }
            let helper_set = rp.stable_sets.len();
            let joined = replay(&Node::join(l.clone(), Node::add(r.clone(), 0), Some(helper_set)))?;
            let union = replay(&Node::join(l.clone(), r.clone(), None))?;
            let vertices: Vec<usize> = (0..joined.vertex_count() - 1).collect();
            Node::Induce {
                child: Box::new(Node::join(l, Node::add(r, 0), Some(helper_set))),
                vertices,
                stable_sets: union.stable_sets,
            }
        }
    })
}

/// Embeds the replayed pair into `next^steps` of the singleton pair; the
/// certificate depth must not exceed `steps`.
pub fn materialized_check(root: &Node, steps: usize, budget: u64) -> Result<Option<Vec<usize>>> {
    let d = root.depth();
    if d > steps {
        return Err(Error::domain(format!("certificate depth {d} exceeds {steps} iterations")));
    }
    let p = replay(root)?;
    is_induced_subpair(&p, &next_iterate(steps)?, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    fn p3() -> Node {
        Node::add(Node::add(Node::Singleton, 0), 1)
    }

    #[test]
    fn replay_examples() {
        assert_eq!(replay(&Node::Singleton).unwrap(), Pair::singleton());
        let k2 = replay(&Node::add(Node::Singleton, 0)).unwrap();
        assert_eq!(k2.graph.edges(), vec![(0, 1)]);
        let p = replay(&p3()).unwrap();
        assert_eq!(p.graph, SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(p.stable_sets, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(p3().depth(), 2);
    }

    #[test]
    fn errors_name_the_node() {
        let bad = Node::join(Node::Singleton, Node::add(Node::Singleton, 3), Some(0));
        match replay(&bad) {
            Err(Error::Certificate { node, .. }) => assert_eq!(node, "root.right"),
            other => panic!("{other:?}"),
        }
        let induce = Node::Induce { child: Box::new(p3()), vertices: vec![0, 2], stable_sets: vec![vec![0, 1]] };
        assert!(matches!(replay(&induce), Err(Error::Certificate { .. })));
    }

    #[test]
    fn empty_join_expansion_agrees() {
        let node = Node::join(p3(), Node::add(Node::Singleton, 0), None);
        let expanded = expand_empty_joins(&node).unwrap();
        assert_eq!(replay(&expanded).unwrap(), replay(&node).unwrap());
        assert!(materialized_check(&node, 3, 1_000_000).is_err());
        let small = Node::join(Node::Singleton, Node::Singleton, None);
        assert!(materialized_check(&small, 2, 1_000_000).unwrap().is_some());
        assert!(materialized_check(&small, 3, 1_000_000).unwrap().is_some());
    }

    #[test]
    fn json_round_trip_and_verify() {
        let cert = Certificate::from_root(Node::join(p3(), Node::Singleton, Some(0))).unwrap();
        let text = cert.to_json();
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        verify(&back).unwrap();
        let mut forged = back.clone();
        forged.claimed = Pair::singleton();
        assert!(verify(&forged).is_err());
    }
}
