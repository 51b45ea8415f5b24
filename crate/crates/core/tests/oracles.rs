//! Library results against independent brute-force computations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use osquad::chordality::{chordality_report, find_chord};
use osquad::graphs::random_small_graph;
use osquad::ideal::IdealSpan;
use osquad::matroid::{builtin, BinaryMatrix, CircuitFamily, GraphInput};
use osquad::{GroundSet, Subset};

fn bits(s: u32) -> Vec<usize> {
    (0..32).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect()
}

fn within(small: u32, big: u32) -> bool {
    small & !big == 0
}

fn minimal(dependent: impl Fn(u32) -> bool, n: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (1u32..1 << n)
        .filter(|&s| dependent(s) && bits(s).iter().all(|&e| !dependent(s & !(1 << (e - 1)))))
        .collect();
    out.sort_by_key(|&s| (s.count_ones(), bits(s)));
    out
}

fn family_bits(f: &CircuitFamily) -> Vec<u32> {
    f.circuits().iter().map(|c| c.0).collect()
}

/// Dependent iff the edge set contains a cycle (union-find).
fn has_cycle(g: &GraphInput, s: u32) -> bool {
    let mut parent: Vec<usize> = (0..=g.vertices()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for e in bits(s) {
        let (u, v) = g.edges()[e - 1];
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return true;
        }
        parent[a] = b;
    }
    false
}

#[test]
fn graph_circuits_are_minimal_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs: Vec<GraphInput> = (0..40).map(|_| random_small_graph(&mut rng, 10)).collect();
    graphs.push(builtin::complete_graph_input(4).unwrap());
    graphs.push(builtin::wheel_graph_input(4).unwrap());
    for g in graphs {
        let f = g.circuits().unwrap();
        let oracle = minimal(|s| has_cycle(&g, s), g.edges().len());
        assert_eq!(family_bits(&f), oracle, "graph {:?}", g.edges());
        assert_eq!(g.incidence_matrix().unwrap().circuits().unwrap(), f);
    }
}

#[test]
fn k4_circuit_counts() {
    let g = builtin::complete_graph_input(4).unwrap();
    let oracle = minimal(|s| has_cycle(&g, s), 6);
    let sizes: Vec<u32> = oracle.iter().map(|s| s.count_ones()).collect();
    assert_eq!(sizes, vec![3, 3, 3, 3, 4, 4, 4]);
    assert_eq!(builtin::complete_graph(4).unwrap().counts_by_len(), vec![(3, 4), (4, 3)]);
}

#[test]
fn fig1_circuits_from_rank_function() {
    // Rank-3 structure: a set is dependent iff it holds one of the lines or
    // has more than three points.
    let lines: Vec<u32> = builtin::FIG1_LINES
        .iter()
        .map(|l| l.iter().fold(0, |acc, &p| acc | 1 << (p - 1)))
        .collect();
    let dependent = |s: u32| s.count_ones() > 3 || lines.iter().any(|&l| within(l, s));
    let oracle = minimal(dependent, 7);
    let f = builtin::fig1().unwrap();
    assert_eq!(family_bits(&f), oracle);
    assert!(f.circuits().contains(&Subset::from_labels([2, 3, 5, 6])));
}

#[test]
fn elimination_scan() {
    // Brute-force circuit elimination over all pairs and pivots.
    let holds = |cs: &[u32]| {
        cs.iter().all(|&a| {
            cs.iter().all(|&b| {
                a == b
                    || bits(a & b).iter().all(|&e| {
                        let rest = (a | b) & !(1 << (e - 1));
                        cs.iter().any(|&c| within(c, rest))
                    })
            })
        })
    };
    let g5 = GroundSet::new(5).unwrap();
    let s = |l: &[usize]| Subset::from_labels(l.iter().copied());
    assert!(!holds(&[0b111, 0b11001]));
    assert!(CircuitFamily::new(g5, [s(&[1, 2, 3]), s(&[1, 4, 5])]).is_err());
    assert!(holds(&[0b111, 0b11001, 0b11110]));
    assert!(CircuitFamily::new(g5, [s(&[1, 2, 3]), s(&[1, 4, 5]), s(&[2, 3, 4, 5])]).is_ok());

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let n = rng.gen_range(3..=6);
        let mut cs: Vec<u32> = (0..rng.gen_range(1..=4))
            .map(|_| rng.gen_range(1u32..1 << n))
            .filter(|s| s.count_ones() >= 3)
            .collect();
        cs.sort();
        cs.dedup();
        let antichain = cs.iter().all(|&a| cs.iter().all(|&b| a == b || a & b != a));
        if cs.is_empty() || !antichain {
            continue;
        }
        let raw: Vec<Subset> = cs.iter().map(|&c| Subset(c)).collect();
        let ok = CircuitFamily::new(GroundSet::new(n).unwrap(), raw).is_ok();
        assert_eq!(ok, holds(&cs), "n={n} {cs:?}");
    }
}

#[test]
fn matrix_rank_matches_gaussian_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let mut cols: Vec<u128> = (0..rng.gen_range(2..9)).map(|_| rng.gen_range(1u128..32)).collect();
        cols.sort();
        cols.dedup();
        let f = BinaryMatrix::from_columns(5, cols.clone()).unwrap().circuits().unwrap();
        let mut basis: Vec<u128> = Vec::new();
        for &c in &cols {
            let r = basis.iter().fold(c, |v, &b| v.min(v ^ b));
            if r != 0 {
                basis.push(r);
                basis.sort_by(|a, b| b.cmp(a));
            }
        }
        assert_eq!(f.matroid_rank(), basis.len(), "{cols:?}");
    }
}

#[test]
fn chord_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut families: Vec<CircuitFamily> =
        (0..30).map(|_| random_small_graph(&mut rng, 9).circuits().unwrap()).collect();
    families.push(builtin::fig1().unwrap());
    families.push(builtin::fano().unwrap());
    for f in families {
        let cs = family_bits(&f);
        for &c in &cs {
            let exists = (1..=f.ground().len()).filter(|x| c >> (x - 1) & 1 == 0).any(|x| {
                let xb = 1u32 << (x - 1);
                cs.iter().any(|&a| cs.iter().any(|&b| a & b == xb && a ^ b == c))
            });
            assert_eq!(find_chord(&f, Subset(c)).unwrap().is_some(), exists);
        }
        let report = chordality_report(&f);
        assert!(report.chordality_index >= 4);
    }
}

// Dense exterior algebra for the ideal oracle: vectors indexed by subset bits.

fn sign(a: u32, b: u32) -> i32 {
    let inversions: u32 = bits(a).iter().map(|&i| (b & ((1u32 << (i - 1)) - 1)).count_ones()).sum();
    if inversions.is_multiple_of(2) { 1 } else { -1 }
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let k = &rows[i][c] / &rows[r][c];
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x -= &k * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Rows e_Y ∧ ∂e_X spanning the degree-`d` part of the ideal.
fn dense_span(gens: &[u32], n: usize, d: usize) -> Vec<Vec<BigRational>> {
    let mut rows = Vec::new();
    for &x in gens {
        let k = x.count_ones() as usize;
        if k == 0 || k - 1 > d {
            continue;
        }
        for y in (0u32..1 << n).filter(|y| y.count_ones() as usize == d + 1 - k) {
            let mut row = vec![BigRational::zero(); 1 << n];
            for (j, &i) in bits(x).iter().enumerate() {
                let face = x & !(1 << (i - 1));
                if y & face != 0 {
                    continue;
                }
                let s = sign(y, face) * if j % 2 == 0 { 1 } else { -1 };
                row[(y | face) as usize] += BigRational::from_integer(BigInt::from(s));
            }
            rows.push(row);
        }
    }
    rows
}

fn dense_contains(gens: &[u32], n: usize, target: Vec<BigRational>, d: usize) -> bool {
    let mut rows = dense_span(gens, n, d);
    let before = rank(rows.clone());
    rows.push(target);
    rank(rows) == before
}

fn dense_boundary(x: u32, n: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); 1 << n];
    for (j, &i) in bits(x).iter().enumerate() {
        v[(x & !(1 << (i - 1))) as usize] = if j % 2 == 0 { BigRational::one() } else { -BigRational::one() };
    }
    v
}

#[test]
fn ideal_matches_dense_linear_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..40 {
        let n = rng.gen_range(3..=5);
        let ground = GroundSet::new(n).unwrap();
        let gens: Vec<u32> = (0..rng.gen_range(1..=3))
            .map(|_| rng.gen_range(1u32..1 << n))
            .filter(|s| s.count_ones() >= 2)
            .collect();
        let raw: Vec<Subset> = gens.iter().map(|&g| Subset(g)).collect();
        let span = IdealSpan::new(&raw, ground).unwrap();
        for d in 0..=n {
            assert_eq!(span.rank(d), rank(dense_span(&gens, n, d)), "n={n} {gens:?} d={d}");
        }
        for x in (1u32..1 << n).filter(|x| x.count_ones() >= 2) {
            let k = x.count_ones() as usize;
            let mut mono = vec![BigRational::zero(); 1 << n];
            mono[x as usize] = BigRational::one();
            assert_eq!(span.contains_monomial(Subset(x)), dense_contains(&gens, n, mono, k));
            let b = dense_boundary(x, n);
            assert_eq!(span.contains_boundary(Subset(x)), dense_contains(&gens, n, b, k - 1));
        }
    }
}
