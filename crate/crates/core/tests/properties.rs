use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use osquad::chordality::{chordality_report, is_l_chordal};
use osquad::closure::{circuits_covered, delta_closure, delta_prime_closure};
use osquad::graphs::random_small_graph;
use osquad::ideal::{is_l_adic, is_l_adic_by_rank, is_l_adic_in, IdealSpan};
use osquad::linalg::Field;
use osquad::matroid::{CircuitFamily, GraphInput};
use osquad::{GroundSet, Subset};

fn graph(seed: u64, max_edges: usize) -> GraphInput {
    random_small_graph(&mut ChaCha8Rng::seed_from_u64(seed), max_edges)
}

fn family(seed: u64) -> CircuitFamily {
    graph(seed, 9).circuits().unwrap()
}

fn generators(n: usize) -> impl Strategy<Value = Vec<Subset>> {
    prop::collection::vec((1u32..1 << n).prop_filter("size >= 2", |s| s.count_ones() >= 2), 1..5)
        .prop_map(|v| v.into_iter().map(Subset).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_and_matrix_routes_agree(seed in any::<u64>()) {
        let g = graph(seed, 10);
        prop_assert_eq!(g.circuits().unwrap(), g.incidence_matrix().unwrap().circuits().unwrap());
    }

    #[test]
    fn rank_is_a_matroid_rank(seed in any::<u64>(), a in any::<u32>(), b in any::<u32>()) {
        let f = family(seed);
        let full = f.ground().full();
        let (a, b) = (Subset(a) & full, Subset(b) & full);
        prop_assert!(f.rank(a) <= a.len());
        prop_assert!(f.rank(a & b) <= f.rank(a));
        prop_assert!(f.rank(a | b) + f.rank(a & b) <= f.rank(a) + f.rank(b));
        for e in full.iter() {
            let step = f.rank(a.insert(e)) - f.rank(a);
            prop_assert!(step <= 1);
        }
        prop_assert_eq!(f.is_independent(a), f.rank(a) == a.len());
    }

    #[test]
    fn graphic_families_are_binary(seed in any::<u64>()) {
        let f = family(seed);
        prop_assert!(f.is_binary().binary);
        prop_assert!(f.is_binary_strong().binary);
    }

    #[test]
    fn chordality_and_adicity_are_monotone(seed in any::<u64>()) {
        let f = family(seed);
        let top = f.max_circuit_len() + 1;
        let mut was_chordal = false;
        let mut was_adic = false;
        for level in 4..=top.max(4) {
            let c = is_l_chordal(&f, level).unwrap().chordal;
            prop_assert!(!was_chordal || c);
            was_chordal = c;
        }
        for level in 1..=top {
            let a = is_l_adic(&f, level).unwrap().is_l_adic;
            prop_assert!(!was_adic || a);
            was_adic = a;
        }
        prop_assert!(is_l_chordal(&f, top.max(4)).unwrap().chordal);
    }

    #[test]
    fn binary_chordal_iff_adic(seed in any::<u64>()) {
        let f = family(seed);
        let report = chordality_report(&f);
        for level in 4..=8 {
            prop_assert_eq!(report.is_l_chordal(level), is_l_adic(&f, level - 2).unwrap().is_l_adic);
        }
    }

    #[test]
    fn chordal_implies_delta_coverage(seed in any::<u64>()) {
        let f = family(seed);
        let report = chordality_report(&f);
        for level in 4..=8 {
            if report.is_l_chordal(level) {
                let cl = delta_closure(&f.circuits_up_to(level - 1), f.ground()).unwrap();
                prop_assert!(circuits_covered(&f, &cl).unwrap().covered);
            }
        }
    }

    #[test]
    fn membership_and_rank_routes_agree(seed in any::<u64>()) {
        let f = graph(seed, 7).circuits().unwrap();
        for level in 1..=4 {
            let a = is_l_adic(&f, level).unwrap().is_l_adic;
            prop_assert_eq!(a, is_l_adic_by_rank(&f, level, Field::Rational).unwrap());
            let p = is_l_adic_in(&f, level, Field::prime(32003).unwrap()).unwrap().is_l_adic;
            prop_assert_eq!(a, p);
        }
    }

    #[test]
    fn closures_generate_the_same_ideal(gens in generators(5)) {
        let ground = GroundSet::new(5).unwrap();
        let delta = delta_closure(&gens, ground).unwrap();
        let prime = delta_prime_closure(&gens, ground).unwrap();
        prop_assert!(delta.is_subset_of(&prime));
        let base = IdealSpan::new(&gens, ground).unwrap();
        let d = IdealSpan::new(&delta.members().collect::<Vec<_>>(), ground).unwrap();
        let p = IdealSpan::new(&prime.members().collect::<Vec<_>>(), ground).unwrap();
        for deg in 0..=5 {
            prop_assert_eq!(base.rank(deg), d.rank(deg));
            prop_assert_eq!(base.rank(deg), p.rank(deg));
        }
        for x in prime.members() {
            prop_assert!(base.contains_monomial(x));
        }
    }
}
