//! Cross-validation batteries: the combinatorial route (chords, closures)
//! against the algebraic route (ideal membership), plus randomized checks of
//! the exterior-algebra kernel and the ideal lemmas it relies on.

use std::time::{Duration, Instant};

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chordality::{chordality_report, find_chord, is_l_chordal};
use crate::closure::{circuits_covered, delta_closure, delta_prime_closure};
use crate::exterior::{ExteriorElement, Scalar};
use crate::graphs::{connected_graphs, random_small_graph};
use crate::ideal::{is_l_adic, is_l_adic_by_rank, IdealSpan};
use crate::linalg::Field;
use crate::matroid::{builtin, CircuitFamily, GraphInput};
use crate::subset::{GroundSet, Subset};

pub const SWEEP_MAX_EDGES: usize = 6;
pub const RANDOM_GRAPHS: usize = 100;
pub const RANDOM_MAX_EDGES: usize = 9;
pub const LEMMA_CASES: usize = 200;
pub const KERNEL_CASES: usize = 500;
pub const SPAN_CASES: usize = 50;

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub cases: usize,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
    notes: Vec<String>,
    start: Instant,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(describe());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn finish(self) -> CheckOutcome {
        let passed = self.failures.is_empty();
        let detail = if passed {
            let mut d = format!("{} cases agree", self.cases);
            for n in &self.notes {
                d.push_str("; ");
                d.push_str(n);
            }
            d
        } else {
            let shown: Vec<&String> = self.failures.iter().filter(|f| !f.is_empty()).collect();
            format!(
                "{} of {} cases failed: {}",
                self.failures.len(),
                self.cases,
                shown.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("; ")
            )
        };
        CheckOutcome {
            name: self.name.to_string(),
            passed,
            cases: self.cases,
            detail,
            elapsed: self.start.elapsed(),
        }
    }
}

/// Graphic instances for the chordality/adicity sweeps: every connected
/// simple graph with at most [`SWEEP_MAX_EDGES`] edges, followed by
/// [`RANDOM_GRAPHS`] seeded random connected graphs with at most
/// [`RANDOM_MAX_EDGES`] edges.
pub fn sweep_graphs(seed: u64) -> Vec<GraphInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = connected_graphs(SWEEP_MAX_EDGES);
    graphs.extend((0..RANDOM_GRAPHS).map(|_| random_small_graph(&mut rng, RANDOM_MAX_EDGES)));
    graphs
}

fn sweep_families(seed: u64) -> Vec<(String, CircuitFamily)> {
    sweep_graphs(seed)
        .into_iter()
        .map(|g| {
            let f = g.circuits().expect("small graphs fit the cap");
            (format!("{:?}", g.edges()), f)
        })
        .collect()
}

/// The 7-element rank-3 example: Δ-closure misses 2356, Δ′-closure has it,
/// the algebra is quadratic, and the matroid is not chordal with 2356 chordless.
pub fn check_fig1() -> CheckOutcome {
    let mut t = Tally::new("fig1 reproduction");
    let f = builtin::fig1().expect("fig1 is a valid matroid");
    let c2356 = Subset::from_labels([2, 3, 5, 6]);
    let short = f.circuits_up_to(3);
    let delta = delta_closure(&short, f.ground()).expect("n = 7");
    let prime = delta_prime_closure(&short, f.ground()).expect("n = 7");
    t.check(!delta.contains(c2356), || "2356 in Δ-closure".into());
    t.check(prime.contains(c2356), || "2356 not in Δ′-closure".into());
    let delta_cov = circuits_covered(&f, &delta).expect("same ground");
    let prime_cov = circuits_covered(&f, &prime).expect("same ground");
    t.check(!delta_cov.covered, || "Δ-closure covers all circuits".into());
    t.check(prime_cov.covered, || format!("Δ′-closure misses {:?}", prime_cov.missing));
    let quad = is_l_adic(&f, 2).expect("n = 7");
    t.check(quad.is_l_adic, || format!("not quadratic: {:?}", quad.failing().collect::<Vec<_>>()));
    let report = chordality_report(&f);
    t.check(!report.is_chordal(), || "reported chordal".into());
    t.check(report.chordless().any(|c| c == c2356), || "2356 has a chord".into());
    t.note(format!(
        "Δ misses {} circuits, chordality index {}",
        delta_cov.missing.len(),
        report.chordality_index
    ));
    t.finish()
}

/// For binary matroids: ℓ-chordal ⟺ (ℓ−2)-adic, ℓ ∈ {4, 5, 6}.
pub fn check_chordal_iff_adic(seed: u64) -> CheckOutcome {
    let mut t = Tally::new("chordal iff adic (graphic sweep)");
    let families = sweep_families(seed);
    let count = families.len();
    for (name, f) in &families {
        for level in 4..=6 {
            let chordal = is_l_chordal(f, level).expect("level >= 4").chordal;
            let adic = is_l_adic(f, level - 2).expect("level >= 1").is_l_adic;
            t.check(chordal == adic, || {
                format!("{name}: {level}-chordal = {chordal}, {}-adic = {adic}", level - 2)
            });
        }
    }
    t.note(format!("{count} graphs"));
    t.finish()
}

/// For binary matroids and circuits with at least four elements: chord exists
/// ⟺ ∂(e_C) ∈ ℑ(𝔠_{|C|−1}) ⟺ e_C ∈ ℑ(𝔠_{|C|−1}).
pub fn check_chord_iff_member(seed: u64) -> CheckOutcome {
    let mut t = Tally::new("chord iff member (graphic sweep)");
    for (name, f) in &sweep_families(seed) {
        let max = f.max_circuit_len();
        for k in 4..=max {
            let span = IdealSpan::new(&f.circuits_up_to(k - 1), f.ground()).expect("fits");
            for &c in f.circuits().iter().filter(|c| c.len() == k) {
                let chord = find_chord(f, c).expect("circuit").is_some();
                let boundary = span.contains_boundary(c);
                let monomial = span.contains_monomial(c);
                t.check(chord == boundary && boundary == monomial, || {
                    format!("{name} circuit {c:?}: chord {chord}, ∂e_C {boundary}, e_C {monomial}")
                });
            }
        }
    }
    t.finish()
}

fn random_subset<R: Rng>(rng: &mut R, n: usize, min_len: usize) -> Subset {
    loop {
        let s = Subset(rng.gen_range(0..1u32 << n));
        if s.len() >= min_len {
            return s;
        }
    }
}

fn random_family<R: Rng>(rng: &mut R, n: usize, min_len: usize) -> Vec<Subset> {
    let size = rng.gen_range(1..=4);
    (0..size).map(|_| random_subset(rng, n, min_len)).collect()
}

/// Randomized instances of the three ideal lemmas:
/// ∂(e_X) ∈ ℑ ⟺ e_X ∈ ℑ; the "all but one face" rule; and
/// e_{XΔX'} ∈ ℑ({X, X'}) when X ∩ X' is a single element.
pub fn check_lemma(seed: u64, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("ideal lemmas (randomized)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hypothesis_held = 0;
    for _ in 0..cases {
        let n = rng.gen_range(3..=6);
        let ground = GroundSet::new(n).unwrap();
        let x = random_subset(&mut rng, n, 2);
        let mut family = random_family(&mut rng, n, 1);
        let a = *x.labels().choose(&mut rng).unwrap();
        if rng.gen_bool(0.5) {
            // Plant the hypothesis of the face rule so it is not vacuous.
            family.extend(x.remove(a).iter().map(|b| x.remove(b)));
        }
        let span = IdealSpan::new(&family, ground).unwrap();

        let boundary = span.contains_boundary(x);
        let monomial = span.contains_monomial(x);
        t.check(boundary == monomial, || {
            format!("n={n} 𝔛={family:?} X={x:?}: ∂e_X {boundary} vs e_X {monomial}")
        });

        let hypothesis = x.remove(a).iter().all(|b| span.contains_monomial(x.remove(b)));
        if hypothesis {
            hypothesis_held += 1;
            let concl = span.contains_monomial(x.remove(a));
            t.check(concl, || format!("n={n} 𝔛={family:?} X={x:?} a={a}: face rule fails"));
        }

        // X' meets X exactly in `a`.
        let outside = ground.full() - x;
        let extra: Vec<usize> = outside.iter().filter(|_| rng.gen_bool(0.5)).collect();
        let extra = if extra.is_empty() {
            match outside.labels().choose(&mut rng) {
                Some(&e) => vec![e],
                None => continue,
            }
        } else {
            extra
        };
        let x2 = Subset::from_labels(extra).insert(a);
        let pair = IdealSpan::new(&[x, x2], ground).unwrap();
        t.check(pair.contains_monomial(x.sym_diff(x2)), || {
            format!("n={n} X={x:?} X'={x2:?}: e_{{XΔX'}} not in ℑ({{X, X'}})")
        });
    }
    t.note(format!("face-rule hypothesis held in {hypothesis_held} cases"));
    t.finish()
}

fn random_homogeneous<R: Rng>(rng: &mut R, ground: GroundSet, degree: usize) -> ExteriorElement {
    let n = ground.len();
    let terms = rng.gen_range(1..=4);
    let pool = crate::subset::k_subsets(n, degree);
    ExteriorElement::from_terms(
        ground,
        (0..terms).map(|_| {
            let x = *pool.choose(rng).unwrap();
            let num: i64 = rng.gen_range(-5..=5);
            let den: i64 = rng.gen_range(1..=4);
            (x, Scalar::new(num.into(), den.into()))
        }),
    )
    .unwrap()
}

/// ∂∂ = 0, the Leibniz rule, and graded commutativity on random elements.
pub fn check_kernel(seed: u64, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("exterior kernel identities");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let n = rng.gen_range(2..=8);
        let ground = GroundSet::new(n).unwrap();
        let (p, q) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let a = random_homogeneous(&mut rng, ground, p);
        let b = random_homogeneous(&mut rng, ground, q);
        let mixed = a.add(&b).unwrap();
        t.check(mixed.boundary().boundary().is_zero(), || format!("∂∂({mixed}) ≠ 0"));

        let lhs = a.wedge(&b).unwrap().boundary();
        let sign = if p % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        let rhs = a
            .boundary()
            .wedge(&b)
            .unwrap()
            .add(&a.wedge(&b.boundary()).unwrap().scale(&sign))
            .unwrap();
        t.check(lhs == rhs, || format!("Leibniz fails for a = {a}, b = {b}"));

        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        let sign = if (p * q) % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        t.check(ab == ba.scale(&sign), || format!("graded commutativity fails for a = {a}, b = {b}"));
    }
    t.finish()
}

/// ℑ(𝔛), ℑ(cl_Δ(𝔛)) and ℑ(cl_Δ′(𝔛)) have equal graded dimensions, and
/// cl_Δ(𝔛) ⊆ cl_Δ′(𝔛).
pub fn check_span_equality(seed: u64, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("closure span equality");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cases {
        let n = rng.gen_range(3..=6);
        let ground = GroundSet::new(n).unwrap();
        let family = random_family(&mut rng, n, 2);
        let delta = delta_closure(&family, ground).unwrap();
        let prime = delta_prime_closure(&family, ground).unwrap();
        t.check(delta.is_subset_of(&prime), || format!("n={n} 𝔛={family:?}: cl_Δ ⊄ cl_Δ′"));
        let base = IdealSpan::new(&family, ground).unwrap();
        let d_span = IdealSpan::new(&delta.members().collect::<Vec<_>>(), ground).unwrap();
        let p_span = IdealSpan::new(&prime.members().collect::<Vec<_>>(), ground).unwrap();
        for d in 0..=n {
            let (r0, r1, r2) = (base.rank(d), d_span.rank(d), p_span.rank(d));
            t.check(r0 == r1 && r1 == r2, || {
                format!("n={n} 𝔛={family:?} degree {d}: ranks {r0}, {r1}, {r2}")
            });
        }
    }
    t.finish()
}

/// Cycles C_n (n = 4..=7) are (n−1)-adic but not (n−2)-adic with chordality
/// index n+1; K_4 is chordal and quadratic.
pub fn check_sanity() -> CheckOutcome {
    let mut t = Tally::new("cycle and K4 sanity");
    for n in 4..=7 {
        let f = builtin::cycle_graph(n).unwrap();
        t.check(!is_l_adic(&f, n - 2).unwrap().is_l_adic, || format!("C_{n} is {}-adic", n - 2));
        t.check(is_l_adic(&f, n - 1).unwrap().is_l_adic, || format!("C_{n} is not {}-adic", n - 1));
        let index = chordality_report(&f).chordality_index;
        t.check(index == n + 1, || format!("C_{n} chordality index {index}"));
        // Chordality index ℓ means ℓ-chordal; the matching adicity is ℓ − 2 = n − 1.
        t.check(!is_l_chordal(&f, n).unwrap().chordal, || format!("C_{n} is {n}-chordal"));
    }
    let k4 = builtin::complete_graph(4).unwrap();
    t.check(chordality_report(&k4).is_chordal(), || "K_4 not chordal".into());
    t.check(is_l_adic(&k4, 2).unwrap().is_l_adic, || "K_4 not quadratic".into());
    let cover = delta_closure(&k4.circuits_up_to(3), k4.ground()).unwrap();
    t.check(circuits_covered(&k4, &cover).unwrap().covered, || "K_4 not covered by cl_Δ(𝔠_3)".into());
    t.finish()
}

/// The full battery with default sizes.
pub fn verify_all(seed: u64) -> Vec<CheckOutcome> {
    vec![
        check_fig1(),
        check_chordal_iff_adic(seed),
        check_chord_iff_member(seed),
        check_lemma(seed, LEMMA_CASES),
        check_kernel(seed, KERNEL_CASES),
        check_span_equality(seed, SPAN_CASES),
        check_sanity(),
    ]
}

/// Facts about one instance that the cross-checks establish.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceFacts {
    pub binary: bool,
    pub chordality_index: usize,
    /// Smallest ℓ >= 1 for which the algebra is ℓ-adic.
    pub adicity: usize,
    pub delta_covers: bool,
    pub delta_prime_covers: bool,
}

/// Every cross-check that applies to a single matroid.
///
/// Sufficient conditions (chordal ⇒ adic, Δ′-coverage ⇒ quadratic) are checked
/// for all matroids; the converses only for binary ones.
pub fn verify_instance(f: &CircuitFamily, slow: bool) -> (InstanceFacts, Vec<CheckOutcome>) {
    let binary = f.is_binary().binary;
    let report = chordality_report(f);
    let max_level = f.max_circuit_len().max(3);
    let adic: Vec<bool> = (1..=max_level)
        .map(|l| is_l_adic(f, l).expect("level >= 1").is_l_adic)
        .collect();
    let adicity = adic.iter().position(|&a| a).map_or(max_level, |i| i + 1);
    let short = f.circuits_up_to(3);
    let delta = delta_closure(&short, f.ground()).expect("family fits the cap");
    let prime = delta_prime_closure(&short, f.ground()).expect("family fits the cap");
    let delta_covers = circuits_covered(f, &delta).expect("same ground").covered;
    let prime_covers = circuits_covered(f, &prime).expect("same ground").covered;

    let mut out = Vec::new();

    let mut t = Tally::new("chord witnesses valid");
    for c in &report.circuits {
        if let Some(w) = c.witness {
            t.check(w.is_valid_for(f, c.circuit), || format!("bad witness for {:?}", c.circuit));
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("chordal implies adic");
    for level in 4..=max_level + 1 {
        let chordal = report.is_l_chordal(level);
        let covered = {
            let sys = delta_closure(&f.circuits_up_to(level - 1), f.ground()).unwrap();
            circuits_covered(f, &sys).unwrap().covered
        };
        let a = adic[(level - 2).min(max_level) - 1];
        t.check(!chordal || (covered && a), || {
            format!("{level}-chordal but covered = {covered}, {}-adic = {a}", level - 2)
        });
        if binary {
            t.check(chordal == a, || format!("binary: {level}-chordal = {chordal}, {}-adic = {a}", level - 2));
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("closure coverage implies quadratic");
    t.check(delta.is_subset_of(&prime), || "cl_Δ(𝔠_3) ⊄ cl_Δ′(𝔠_3)".into());
    t.check(!delta_covers || prime_covers, || "Δ covers but Δ′ does not".into());
    t.check(!prime_covers || adic[1], || "cl_Δ′(𝔠_3) covers 𝔠 but not quadratic".into());
    out.push(t.finish());

    if binary {
        let mut t = Tally::new("chord iff member");
        for k in 4..=f.max_circuit_len() {
            let span = IdealSpan::new(&f.circuits_up_to(k - 1), f.ground()).unwrap();
            for c in report.circuits.iter().filter(|c| c.circuit.len() == k) {
                let b = span.contains_boundary(c.circuit);
                let m = span.contains_monomial(c.circuit);
                t.check(c.has_chord == b && b == m, || {
                    format!("{:?}: chord {}, ∂e_C {b}, e_C {m}", c.circuit, c.has_chord)
                });
            }
        }
        out.push(t.finish());
    }

    if slow {
        let mut t = Tally::new("adicity by graded rank");
        for (i, &a) in adic.iter().enumerate() {
            let by_rank = is_l_adic_by_rank(f, i + 1, Field::Rational).unwrap();
            t.check(a == by_rank, || format!("level {}: membership {a}, ranks {by_rank}", i + 1));
        }
        out.push(t.finish());
    }

    let facts = InstanceFacts {
        binary,
        chordality_index: report.chordality_index,
        adicity,
        delta_covers,
        delta_prime_covers: prime_covers,
    };
    (facts, out)
}
