use frame_graphs::burling::{
    add_op, construct, expand_empty_joins, is_induced_subpair, join_op, next, next_iterate, replay, verify, Certificate,
    Node, Pair,
};
use frame_graphs::graph::{is_isomorphic, is_triangle_free, SimpleGraph};
use proptest::prelude::*;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn family_is_stable(p: &Pair) -> bool {
    p.stable_sets
        .iter()
        .all(|set| set.iter().all(|&a| set.iter().all(|&b| !p.graph.has_edge(a, b))))
}

/// A random certificate with at most `ops` ADD and JOIN nodes.
fn random_node(rng: &mut ChaCha8Rng, ops: usize) -> Node {
    if ops == 0 {
        return Node::Singleton;
    }
    if rng.random_bool(0.5) {
        let child = random_node(rng, ops - 1);
        let sets = replay(&child).unwrap().stable_sets.len();
        Node::add(child, rng.random_range(0..sets))
    } else {
        let split = rng.random_range(0..ops);
        let left = random_node(rng, split);
        let right = random_node(rng, ops - 1 - split);
        let sets = replay(&right).unwrap().stable_sets.len();
        let set = if rng.random_bool(0.2) { None } else { Some(rng.random_range(0..sets)) };
        Node::join(left, right, set)
    }
}

fn random_pair(seed: u64, ops: usize) -> Pair {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ops = rng.random_range(0..=ops);
    replay(&random_node(&mut rng, ops)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn operations_keep_families_stable(seed in any::<u64>(), a in any::<u64>(), b in any::<u64>()) {
        let p = random_pair(seed, 6);
        let q = random_pair(seed ^ 0x9e37, 6);
        prop_assert!(family_is_stable(&p));
        let s = p.stable_sets.len();
        let added = add_op(&p, (a % s as u64) as usize).unwrap();
        prop_assert!(family_is_stable(&added));
        let t = q.stable_sets.len();
        prop_assert!(family_is_stable(&join_op(&p, &q, Some((b % t as u64) as usize)).unwrap()));
        prop_assert!(family_is_stable(&join_op(&p, &q, None).unwrap()));
        prop_assert!(family_is_stable(&next(&p).unwrap()));
    }

    #[test]
    fn next_obeys_the_size_law(seed in any::<u64>()) {
        let p = random_pair(seed, 5);
        let (n, s) = (p.vertex_count(), p.stable_sets.len());
        let q = next(&p).unwrap();
        prop_assert_eq!(q.vertex_count(), n * (1 + s) + s * s);
        prop_assert_eq!(q.stable_sets.len(), 2 * s * s);
    }

    #[test]
    fn add_embeds_into_next(seed in any::<u64>(), a in any::<u64>()) {
        let p = random_pair(seed, 3);
        let index = (a % p.stable_sets.len() as u64) as usize;
        let added = add_op(&p, index).unwrap();
        let found = is_induced_subpair(&added, &next(&p).unwrap(), 5_000_000).unwrap();
        prop_assert!(found.is_some());
    }

    #[test]
    fn certificates_survive_json_and_expansion(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let root = random_node(&mut rng, 5);
        let cert = Certificate::from_root(root.clone()).unwrap();
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        prop_assert_eq!(&back, &cert);
        prop_assert_eq!(verify(&back).unwrap(), cert.claimed.clone());
        if let Ok(expanded) = expand_empty_joins(&root) {
            prop_assert_eq!(replay(&expanded).unwrap(), cert.claimed);
        }
    }
}

#[test]
fn join_of_subpairs_embeds_into_next() {
    let host = next_iterate(1).unwrap();
    let k1 = Pair::singleton();
    let k2 = add_op(&k1, 0).unwrap();
    for (p1, p2) in [(&k1, &k1), (&k1, &k2), (&k2, &k1)] {
        for i in 0..p2.stable_sets.len() {
            let joined = join_op(p1, p2, Some(i)).unwrap();
            let big = next(&next(&host).unwrap()).unwrap();
            assert!(is_induced_subpair(&joined, &big, 5_000_000).unwrap().is_some());
        }
    }
}

#[test]
fn iterates_are_triangle_free() {
    for k in 0..=4 {
        let p = next_iterate(k).unwrap();
        assert!(is_triangle_free(&p.graph), "k = {k}");
        assert!(family_is_stable(&p));
    }
}

#[test]
fn construct_round_trips_cycles() {
    for n in [6, 9, 12, 15] {
        let cycle = SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let c = construct(&cycle).unwrap();
        let p = verify(&c.certificate).unwrap();
        assert!(is_isomorphic(&p.graph, &cycle));
        assert!(family_is_stable(&p));
    }
}
