//! The worked 7-element example and the small named matroids.

use osquad::chordality::{chordality_report, find_chord};
use osquad::closure::{circuits_covered, delta_closure, delta_prime_closure};
use osquad::exterior::ExteriorElement;
use osquad::ideal::{in_ideal, is_l_adic, is_quadratic};
use osquad::matroid::builtin;
use osquad::Subset;

fn s(labels: &[usize]) -> Subset {
    Subset::from_labels(labels.iter().copied())
}

#[test]
fn fig1_short_circuits_and_rank() {
    let f = builtin::fig1().unwrap();
    let expected: Vec<Subset> = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [3, 5, 7]]
        .iter()
        .map(|l| s(l))
        .collect();
    assert_eq!(f.circuits_up_to(3), expected);
    assert_eq!(f.matroid_rank(), 3);
}

#[test]
fn fig1_closures() {
    let f = builtin::fig1().unwrap();
    let short = f.circuits_up_to(3);
    let delta = delta_closure(&short, f.ground()).unwrap();
    let prime = delta_prime_closure(&short, f.ground()).unwrap();
    assert!(!delta.contains(s(&[2, 3, 5, 6])));
    assert!(prime.contains(s(&[2, 3, 5, 6])));
    assert!(delta.is_subset_of(&prime));
    let cov = circuits_covered(&f, &delta).unwrap();
    assert!(!cov.covered);
    assert!(cov.missing.contains(&s(&[2, 3, 5, 6])));
    assert!(circuits_covered(&f, &prime).unwrap().covered);
}

#[test]
fn fig1_quadratic_but_not_chordal() {
    let f = builtin::fig1().unwrap();
    assert!(is_quadratic(&f).unwrap().is_l_adic);
    let boundary = ExteriorElement::monomial(f.ground(), s(&[2, 3, 5, 6])).boundary();
    assert!(in_ideal(&boundary, &f.circuits_up_to(3)).unwrap());
    assert_eq!(find_chord(&f, s(&[2, 3, 5, 6])).unwrap(), None);
    let report = chordality_report(&f);
    assert!(!report.is_chordal());
    assert!(report.chordality_index >= 5);
}

#[test]
fn k4_is_chordal_and_covered() {
    let f = builtin::complete_graph(4).unwrap();
    for &c in f.circuits().iter().filter(|c| c.len() == 4) {
        let w = find_chord(&f, c).unwrap().expect("4-cycles of K4 have chords");
        assert!(w.is_valid_for(&f, c));
        assert_eq!((w.c1.len(), w.c2.len()), (3, 3));
    }
    assert_eq!(chordality_report(&f).chordality_index, 4);
    let cl = delta_closure(&f.circuits_up_to(3), f.ground()).unwrap();
    assert!(circuits_covered(&f, &cl).unwrap().covered);
    assert!(is_quadratic(&f).unwrap().is_l_adic);
}

#[test]
fn graphic_matroids_are_binary() {
    for f in [
        builtin::complete_graph(4).unwrap(),
        builtin::complete_graph(5).unwrap(),
        builtin::wheel_graph(4).unwrap(),
        builtin::cycle_graph(6).unwrap(),
    ] {
        assert!(f.is_binary().binary);
        assert!(f.is_binary_strong().binary);
    }
    assert!(builtin::fano().unwrap().is_binary().binary);
}

#[test]
fn cycles_sit_exactly_one_level_short() {
    for n in 4..=7 {
        let f = builtin::cycle_graph(n).unwrap();
        assert!(!is_l_adic(&f, n - 2).unwrap().is_l_adic, "C_{n}");
        assert!(is_l_adic(&f, n - 1).unwrap().is_l_adic, "C_{n}");
        assert_eq!(chordality_report(&f).chordality_index, n + 1);
    }
}

#[test]
fn wheel_rims_are_the_only_long_chordless_circuits() {
    // W_3 = K_4. For larger wheels every cycle through the hub with more than
    // three edges has a spoke as chord, while the rim has none.
    assert!(chordality_report(&builtin::wheel_graph(3).unwrap()).is_chordal());
    for n in 4..=6 {
        let f = builtin::wheel_graph(n).unwrap();
        let rim = Subset::from_labels(n + 1..=2 * n);
        let report = chordality_report(&f);
        let long: Vec<Subset> = report.chordless().filter(|c| c.len() >= 4).collect();
        assert_eq!(long, vec![rim], "W_{n}");
        assert_eq!(report.chordality_index, n + 1);
        assert!(!is_l_adic(&f, n - 2).unwrap().is_l_adic);
        assert!(is_l_adic(&f, n - 1).unwrap().is_l_adic);
    }
}
