mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use srgkit::field::Field;
use srgkit::graph::Graph;
use srgkit::graph6;
use srgkit::perm::{self, count_double_cosets, factorial, PermGroup};
use srgkit::srg::{check_srg, four_vertex_check};
use srgkit::symmetry::{automorphism_group, canonical_form};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn field_strategy() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 121, 125, 243, 256, 343, 529, 1024])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn check_srg_matches_counting(g in graph_strategy(16)) {
        prop_assert_eq!(check_srg(&g).ok().flatten().map(|p| p.tuple()), common::naive_srg(&g));
    }

    #[test]
    fn four_vc_matches_counting(g in graph_strategy(12)) {
        if let Ok(r) = four_vertex_check(&g) {
            let naive = common::naive_four_vc(&g);
            prop_assert_eq!(r.satisfied, naive.is_some());
            if let Some((a, b)) = naive {
                prop_assert_eq!((r.alpha, r.beta), (Some(a), Some(b)));
                prop_assert_eq!(r.sims_identity, Some(true));
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(40)) {
        let s = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&s).unwrap(), g.clone());
        prop_assert_eq!(common::naive_graph6_decode(&s), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn aut_order_matches_brute_force(g in graph_strategy(7)) {
        let a = automorphism_group(&g).unwrap();
        prop_assert_eq!(a.order, common::brute_aut_order(&g).into());
        for p in &a.generators {
            prop_assert!(g.is_automorphism(p));
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph_strategy(24), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = srgkit::switching::random_phi(&mut rng, g.order());
        let h = g.relabel(&p);
        let (cg, ch) = (canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(&cg.certificate, &ch.certificate);
        let inverse = perm::inverse(&cg.labelling);
        prop_assert_eq!(g.relabel(&inverse), cg.graph);
    }

    #[test]
    fn four_vc_is_complement_invariant(g in graph_strategy(12)) {
        let a = four_vertex_check(&g).map(|r| r.satisfied).ok();
        let b = four_vertex_check(&g.complement()).map(|r| r.satisfied).ok();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn field_operations(q in field_strategy(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = Field::of_order(q).unwrap();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if b != 0 {
            prop_assert_eq!(f.mul(f.div(a, b), b), a);
            prop_assert_eq!(f.eta_pow(f.log(b).unwrap() as i64), b);
        }
        prop_assert_eq!(f.pow(a, q as i64).unwrap(), a);
    }

    #[test]
    fn lehmer_rank_round_trip(n in 1usize..9, r in any::<u64>()) {
        let r = r % factorial(n).iter_u64_digits().next().unwrap_or(1);
        let p = perm::unrank(r, n);
        prop_assert!(perm::is_permutation(&p));
        prop_assert_eq!(perm::rank(&p), r);
    }
}

#[test]
fn double_cosets_of_trivial_group() {
    for n in 1..=6 {
        assert_eq!(count_double_cosets(&PermGroup::trivial(n)), factorial(n));
    }
}

#[test]
fn double_cosets_of_symmetric_group() {
    for n in 1..=5 {
        assert_eq!(count_double_cosets(&PermGroup::symmetric(n).unwrap()), 1u32.into());
    }
}
