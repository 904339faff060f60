mod common;

use common::*;
use diperfect::diperfection::{is_alpha_diperfect, is_be_diperfect};
use diperfect::edgelist::{digraph_hash, parse_edge_list, to_edge_list};
use diperfect::generators::*;
use diperfect::paths::*;
use diperfect::recognition::*;
use diperfect::{Digraph, VertexSet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn digraph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u8..4, n * (n - 1) / 2)
            .prop_map(move |states| from_pair_states(n, &states))
    })
}

/// Sparse digraphs on up to 16 vertices, so stable sets are large.
fn sparse_strategy() -> impl Strategy<Value = Digraph> {
    (1usize..=16).prop_flat_map(|n| {
        proptest::collection::vec(prop_oneof![6 => Just(0u8), 1 => 1u8..4], n * (n - 1) / 2)
            .prop_map(move |states| from_pair_states(n, &states))
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 200,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn converse_is_an_involution(d in digraph_strategy(10)) {
        prop_assert_eq!(d.converse().converse(), d.clone());
        prop_assert_eq!(d.converse().arc_count(), d.arc_count());
    }

    #[test]
    fn induced_commutes_with_converse(d in digraph_strategy(10), bits in any::<u64>()) {
        let set = VertexSet::from_bits(bits).intersection(d.vertices());
        prop_assume!(!set.is_empty());
        let a = d.induced(set).unwrap().digraph.converse();
        let b = d.converse().induced(set).unwrap().digraph;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn max_stable_sets_are_maximum(d in sparse_strategy()) {
        let a = matrix(&d);
        let al = alpha(&a);
        prop_assert_eq!(d.alpha(), al);
        let sets = d.max_stable_sets();
        prop_assert!(!sets.is_empty());
        for s in sets {
            prop_assert!(d.is_stable(s));
            prop_assert_eq!(s.len(), al);
        }
    }

    #[test]
    fn isomorphism_maps_transport_arcs(d in digraph_strategy(8), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..d.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let e = d.relabel(&perm).unwrap();
        let map = d.isomorphic(&e).unwrap();
        prop_assert!(map.is_some());
        prop_assert!(d.transports_onto(&e, &map.unwrap()));
    }

    #[test]
    fn edge_list_round_trips(d in digraph_strategy(12)) {
        let text = to_edge_list(&d);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(digraph_hash(&back), digraph_hash(&d));
        prop_assert_eq!(back, d);
    }

    #[test]
    fn minimum_partitions_have_gm_witnesses(d in digraph_strategy(8)) {
        let p = min_path_partition(&d).unwrap();
        let s = gm_witness(&d, &p).unwrap();
        prop_assert!(d.is_stable(s));
        prop_assert!(p.is_orthogonal_to(s));
        prop_assert!(p.len() <= d.alpha());
    }
}

fn random_path(d: &Digraph, rng: &mut impl Rng) -> Vec<usize> {
    let mut seq = vec![rng.gen_range(0..d.n())];
    loop {
        let last = *seq.last().unwrap();
        let next: Vec<usize> = d.out(last).iter().filter(|v| !seq.contains(v)).collect();
        if next.is_empty() || rng.gen_bool(0.2) {
            return seq;
        }
        seq.push(*next.choose(rng).unwrap());
    }
}

#[test]
fn join_path_postconditions() {
    let mut r = ChaCha8Rng::seed_from_u64(21);
    let mut calls = 0;
    while calls < 10_000 {
        let n = r.gen_range(2..=9);
        let mut d = random(n, &mut r);
        let seq = random_path(&d, &mut r);
        let outside: Vec<usize> = (0..n).filter(|v| !seq.contains(v)).collect();
        let Some(&v) = outside.choose(&mut r) else {
            continue;
        };
        for &u in &seq {
            if !d.has_arc(u, v) && !d.has_arc(v, u) {
                let (a, b) = if r.gen_bool(0.5) { (u, v) } else { (v, u) };
                d.add_arc(a, b).unwrap();
            }
        }
        let p = DiPath::new(&d, seq.clone()).unwrap();
        let q = join_path(&d, &p, v).unwrap();
        assert_eq!(q.len(), seq.len() + 1);
        assert!(is_dipath(&matrix(&d), q.vertices()));
        let kept: Vec<usize> = q.vertices().iter().copied().filter(|&x| x != v).collect();
        assert_eq!(kept, seq);
        calls += 1;
    }
}

#[test]
fn gallai_milgram_on_seeded_random_digraphs() {
    let mut r = ChaCha8Rng::seed_from_u64(7);
    for i in 0..1000 {
        let d = random(1 + i % 8, &mut r);
        let p = min_path_partition(&d).unwrap();
        let s = gm_witness(&d, &p).unwrap();
        assert!(d.is_stable(s) && p.is_orthogonal_to(s));
        assert!(p.len() <= d.alpha());
    }
}

fn lemma1_holds_where_diperfect(d: &Digraph) {
    let verdict = is_alpha_diperfect(d).unwrap();
    for s in d.max_stable_sets() {
        if s.len() >= 2 && !lemma1_condition(d, s).unwrap() {
            assert!(!verdict.holds, "{d:?} {s:?}");
        }
    }
}

#[test]
fn lemma1_contrapositive_on_coc() {
    let space = SuperOrientationSpace::coc(2, false).unwrap();
    for i in 0..243 {
        lemma1_holds_where_diperfect(&space.digraph_at(i));
    }
    for (_, d) in sample_super_orientations(3, false, 3, 60).unwrap() {
        lemma1_holds_where_diperfect(d.digraph());
    }
    for k in 3..=4 {
        let d = gen_dvec(k).unwrap();
        assert!(!lemma1_condition(d.digraph(), d.end_pair()).unwrap());
    }
}

#[test]
fn lemma1_contrapositive_on_random_digraphs() {
    let mut r = ChaCha8Rng::seed_from_u64(22);
    for i in 0..300 {
        lemma1_holds_where_diperfect(&random(2 + i % 6, &mut r));
    }
}

#[test]
fn be_diperfect_implies_alpha_diperfect() {
    let mut r = ChaCha8Rng::seed_from_u64(23);
    let mut instances: Vec<Digraph> = (0..300).map(|i| random(1 + i % 6, &mut r)).collect();
    let space = SuperOrientationSpace::cycle(5, false).unwrap();
    instances.extend((0..243).map(|i| space.digraph_at(i)));
    for d in &instances {
        if is_be_diperfect(d).unwrap().holds {
            assert!(is_alpha_diperfect(d).unwrap().holds, "{d:?}");
        }
    }
}

#[test]
fn perfect_underlying_graph_gives_alpha_diperfection() {
    let mut r = ChaCha8Rng::seed_from_u64(24);
    let mut perfect_seen = 0;
    for i in 0..500 {
        let d = random(1 + i % 7, &mut r);
        if is_perfect_graph(&d).unwrap() {
            perfect_seen += 1;
            assert!(is_alpha_diperfect(&d).unwrap().holds, "{d:?}");
        }
    }
    assert!(perfect_seen > 100);
}

#[test]
fn symmetric_digraphs_are_alpha_diperfect() {
    for k in 2..=3 {
        let d = symmetric_coc(k).unwrap();
        assert!(is_alpha_diperfect(d.digraph()).unwrap().holds);
    }
}

#[test]
fn dvec_family_invariants() {
    for k in 2..=6 {
        let d = gen_dvec(k).unwrap();
        let g = d.digraph();
        assert_eq!(g.arc_count(), (2 * k + 1) * (k - 1));
        assert!(!g.has_digons());
        let (sources, sinks) = g.sources_and_sinks();
        assert_eq!(sources, set(&[0, 1]));
        assert_eq!(sinks, set(&[2 * k - 1, 2 * k]));
        // Underlying graph is the complement of the cycle 0, 1, .., 2k.
        let n = 2 * k + 1;
        for u in 0..n {
            for v in u + 1..n {
                let consecutive = v == u + 1 || (u == 0 && v == n - 1);
                assert_eq!(g.are_adjacent(u, v).unwrap(), !consecutive);
            }
        }
    }
}

#[test]
fn enumeration_has_no_duplicates() {
    for k in 2..=3 {
        let hashes: Vec<String> = enumerate_super_orientations(k, false)
            .unwrap()
            .map(|d| digraph_hash(d.digraph()))
            .collect();
        assert_eq!(hashes.len(), 3usize.pow(((2 * k + 1) * (k - 1)) as u32));
        let distinct: std::collections::HashSet<&String> = hashes.iter().collect();
        assert_eq!(distinct.len(), hashes.len());
    }
}

#[test]
fn generated_cycles_pass_their_recognisers() {
    for k in 2..=4 {
        for spin in 0..1u64 << (k - 2) {
            let d = gen_anti_directed(k, spin).unwrap();
            assert!(is_anti_directed(&d));
            assert!(directed_cycle(2 * k + 1).unwrap() != d);
            assert!(!is_anti_directed(&directed_cycle(2 * k + 1).unwrap()));
        }
    }
    for k in 1..=4 {
        for pattern in 0..1u64 << (2 * k - 1) {
            assert!(is_blocking(&gen_blocking(k, pattern).unwrap()));
        }
    }
    // y_0 source, y_1 sink, so y_2 is the middle vertex of a transitive triangle.
    let tt = gen_blocking(1, 0).unwrap();
    assert_eq!(tt.arcs().collect::<Vec<_>>(), [(0, 1), (0, 2), (2, 1)]);
    assert!(tt.isomorphic(&transitive_triangle()).unwrap().is_some());
}
