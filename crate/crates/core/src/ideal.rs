//! Graded pieces of the ideal `ℑ(𝔛) = ⟨∂(e_X) : X ∈ 𝔛⟩` and membership tests.
//!
//! The degree-`d` component of `ℑ(𝔛)` is spanned by `e_Y ∧ ∂(e_X)` with
//! `X ∈ 𝔛` and `|Y| = d + 1 - |X|`; right multiples agree with left ones up
//! to sign. Membership of a homogeneous element is a rank test.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{merge_sign, ExteriorElement};
use crate::linalg::{Echelon, Field, SparseRow};
use crate::matroid::CircuitFamily;
use crate::subset::{k_subsets, GroundSet, Subset};

/// Spanning rows of one graded piece, as coordinates in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSpan {
    pub degree: usize,
    /// Rows of the matrix; column index is the bit pattern of the monomial.
    pub rows: Vec<SparseRow>,
}

impl DegreeSpan {
    /// The rows as exterior algebra elements.
    pub fn elements(&self, ground: GroundSet) -> Vec<ExteriorElement> {
        self.rows
            .iter()
            .map(|r| {
                ExteriorElement::from_terms(
                    ground,
                    r.iter()
                        .map(|(c, v)| (Subset(*c as u32), v.clone().into())),
                )
                .expect("monomial inside ground set")
            })
            .collect()
    }
}

/// Rows `e_Y ∧ ∂(e_X)` spanning the degree-`degree` part of `ℑ(generators)`.
pub fn ideal_degree_span(generators: &[Subset], degree: usize, ground: GroundSet) -> Result<DegreeSpan> {
    for &g in generators {
        ground.check(g)?;
    }
    let n = ground.len();
    let mut rows = Vec::new();
    if degree > n {
        return Ok(DegreeSpan { degree, rows });
    }
    for &x in generators {
        let Some(k) = (degree + 1).checked_sub(x.len()) else {
            continue;
        };
        let faces: Vec<(Subset, i32)> = x
            .iter()
            .enumerate()
            .map(|(pos, l)| (x.remove(l), if pos % 2 == 0 { 1 } else { -1 }))
            .collect();
        for y in k_subsets(n, k) {
            let mut row: Vec<(usize, BigInt)> = faces
                .iter()
                .filter(|(face, _)| face.is_disjoint(y))
                .map(|&(face, sign)| {
                    let c = sign * merge_sign(y, face);
                    ((y | face).bits() as usize, BigInt::from(c))
                })
                .collect();
            if row.is_empty() {
                continue;
            }
            row.sort_by_key(|(c, _)| *c);
            rows.push(row);
        }
    }
    Ok(DegreeSpan { degree, rows })
}

/// The ideal generated by `∂(e_X)`, `X ∈ generators`, with each graded
/// piece's echelon form built on first use and shared afterwards.
pub struct IdealSpan {
    ground: GroundSet,
    generators: Vec<Subset>,
    field: Field,
    degrees: Vec<OnceLock<Echelon>>,
}

impl IdealSpan {
    pub fn new(generators: &[Subset], ground: GroundSet) -> Result<Self> {
        Self::with_field(generators, ground, Field::Rational)
    }

    pub fn with_field(generators: &[Subset], ground: GroundSet, field: Field) -> Result<Self> {
        for &g in generators {
            ground.check(g)?;
        }
        Ok(IdealSpan {
            ground,
            generators: generators.to_vec(),
            field,
            degrees: (0..=ground.len()).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn generators(&self) -> &[Subset] {
        &self.generators
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    fn echelon(&self, degree: usize) -> &Echelon {
        self.degrees[degree].get_or_init(|| {
            let span = ideal_degree_span(&self.generators, degree, self.ground)
                .expect("generators checked on construction");
            let mut e = Echelon::new(self.field);
            for row in span.rows {
                e.insert(row);
            }
            e
        })
    }

    /// Dimension of the degree-`degree` component of the ideal.
    pub fn rank(&self, degree: usize) -> usize {
        if degree > self.ground.len() {
            0
        } else {
            self.echelon(degree).rank()
        }
    }

    /// Membership of a homogeneous element.
    pub fn contains(&self, a: &ExteriorElement) -> Result<bool> {
        if a.ground() != self.ground {
            return Err(Error::GroundMismatch {
                left: a.ground().len(),
                right: self.ground.len(),
            });
        }
        let degree = a.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if a.is_zero() {
            return Ok(true);
        }
        Ok(self.echelon(degree).contains(integer_row(a)))
    }

    /// Membership of an arbitrary element, one homogeneous component at a time.
    pub fn contains_graded(&self, a: &ExteriorElement) -> Result<bool> {
        for part in a.components().values() {
            if !self.contains(part)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_monomial(&self, x: Subset) -> bool {
        self.contains(&ExteriorElement::monomial(self.ground, x))
            .expect("monomial is homogeneous")
    }

    pub fn contains_boundary(&self, x: Subset) -> bool {
        self.contains(&ExteriorElement::monomial(self.ground, x).boundary())
            .expect("boundary of a monomial is homogeneous")
    }
}

/// Coordinates of `a` scaled by the common denominator.
fn integer_row(a: &ExteriorElement) -> SparseRow {
    let lcm = a
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut row: SparseRow = a
        .terms()
        .map(|(x, c)| (x.bits() as usize, (c * &lcm).to_integer()))
        .collect();
    row.sort_by_key(|(c, _)| *c);
    row
}

/// One-shot membership test `a ∈ ℑ(generators)` over the rationals.
pub fn in_ideal(a: &ExteriorElement, generators: &[Subset]) -> Result<bool> {
    IdealSpan::new(generators, a.ground())?.contains(a)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircuitVerdict {
    pub circuit: Subset,
    pub size: usize,
    /// Whether `∂(e_C)` lies in the ideal of the short circuits. Circuits that
    /// are themselves generators are members trivially.
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdicityReport {
    pub level: usize,
    pub field: Field,
    pub circuits: Vec<CircuitVerdict>,
    pub is_l_adic: bool,
}

impl AdicityReport {
    pub fn failing(&self) -> impl Iterator<Item = Subset> + '_ {
        self.circuits
            .iter()
            .filter(|v| !v.member)
            .map(|v| v.circuit)
    }
}

/// Whether `ℑ(𝔠) = ℑ(𝔠_{level+1})`.
///
/// The inclusion `ℑ(𝔠_{level+1}) ⊆ ℑ(𝔠)` is automatic, so this checks
/// `∂(e_C) ∈ ℑ(𝔠_{level+1})` for every circuit with more than `level + 1`
/// elements.
pub fn is_l_adic(family: &CircuitFamily, level: usize) -> Result<AdicityReport> {
    is_l_adic_in(family, level, Field::Rational)
}

pub fn is_l_adic_in(family: &CircuitFamily, level: usize, field: Field) -> Result<AdicityReport> {
    if level < 1 {
        return Err(Error::AdicityLevel(level));
    }
    let span = IdealSpan::with_field(&family.circuits_up_to(level + 1), family.ground(), field)?;
    let circuits: Vec<CircuitVerdict> = family
        .circuits()
        .par_iter()
        .map(|&c| CircuitVerdict {
            circuit: c,
            size: c.len(),
            member: c.len() <= level + 1 || span.contains_boundary(c),
        })
        .collect();
    let is_l_adic = circuits.iter().all(|v| v.member);
    Ok(AdicityReport {
        level,
        field,
        circuits,
        is_l_adic,
    })
}

pub fn is_quadratic(family: &CircuitFamily) -> Result<AdicityReport> {
    is_l_adic(family, 2)
}

/// Slow cross-check of [`is_l_adic`]: compares the dimensions of every graded
/// piece of `ℑ(𝔠)` and `ℑ(𝔠_{level+1})`.
pub fn is_l_adic_by_rank(family: &CircuitFamily, level: usize, field: Field) -> Result<bool> {
    if level < 1 {
        return Err(Error::AdicityLevel(level));
    }
    let ground = family.ground();
    let all = IdealSpan::with_field(family.circuits(), ground, field)?;
    let short = IdealSpan::with_field(&family.circuits_up_to(level + 1), ground, field)?;
    Ok((0..=ground.len()).all(|d| all.rank(d) == short.rank(d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::Scalar;
    use crate::matroid::builtin;

    fn g(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn s(labels: &[usize]) -> Subset {
        Subset::from_labels(labels.iter().copied())
    }

    #[test]
    fn span_of_single_triangle() {
        let span = ideal_degree_span(&[s(&[1, 2, 3])], 2, g(3)).unwrap();
        assert_eq!(span.rows.len(), 1);
        let d = ExteriorElement::monomial(g(3), s(&[1, 2, 3])).boundary();
        assert_eq!(span.elements(g(3)), vec![d.clone()]);
        let ideal = IdealSpan::new(&[s(&[1, 2, 3])], g(3)).unwrap();
        assert_eq!(ideal.rank(2), 1);
        assert!(ideal.contains(&d).unwrap());
        assert!(ideal.contains_monomial(s(&[1, 2, 3])));
        assert_eq!(ideal.rank(3), 1);
        assert_eq!(ideal.rank(1), 0);
    }

    #[test]
    fn top_degree_row_is_the_monomial() {
        // e_1 ∧ ∂(e_123) = e_123.
        let span = ideal_degree_span(&[s(&[1, 2, 3])], 3, g(3)).unwrap();
        let elems = span.elements(g(3));
        let e123 = ExteriorElement::monomial(g(3), s(&[1, 2, 3]));
        assert!(elems.iter().all(|e| *e == e123 || *e == e123.neg()));
        let e1 = ExteriorElement::generator(g(3), 1);
        let d = ExteriorElement::monomial(g(3), s(&[1, 2, 3])).boundary();
        assert_eq!(e1.wedge(&d).unwrap(), e123);
    }

    #[test]
    fn empty_generators() {
        for d in 0..=4 {
            assert!(ideal_degree_span(&[], d, g(4)).unwrap().rows.is_empty());
        }
        let d = ExteriorElement::monomial(g(4), s(&[1, 2, 3, 4])).boundary();
        assert!(!in_ideal(&d, &[]).unwrap());
        assert!(in_ideal(&ExteriorElement::zero(g(4)), &[]).unwrap());
    }

    #[test]
    fn rational_coefficients() {
        let e = ExteriorElement::term(g(3), s(&[1, 2, 3]), Scalar::new(2.into(), 7.into()));
        assert!(in_ideal(&e, &[s(&[1, 2, 3])]).unwrap());
    }

    #[test]
    fn homogeneity_required() {
        let mixed = ExteriorElement::from_terms(
            g(3),
            [(s(&[1, 2, 3]), Scalar::one()), (s(&[1]), Scalar::one())],
        )
        .unwrap();
        let ideal = IdealSpan::new(&[s(&[1, 2, 3])], g(3)).unwrap();
        assert_eq!(ideal.contains(&mixed), Err(Error::NotHomogeneous));
        assert!(!ideal.contains_graded(&mixed).unwrap());
        let top = ExteriorElement::monomial(g(3), s(&[1, 2, 3]));
        let d = top.boundary();
        assert!(ideal.contains_graded(&top.add(&d).unwrap()).unwrap());
    }

    #[test]
    fn fig1_is_quadratic() {
        let f = builtin::fig1().unwrap();
        let report = is_quadratic(&f).unwrap();
        assert!(report.is_l_adic);
        assert!(in_ideal(
            &ExteriorElement::monomial(f.ground(), s(&[2, 3, 5, 6])).boundary(),
            &f.circuits_up_to(3)
        )
        .unwrap());
        assert!(is_l_adic_by_rank(&f, 2, Field::Rational).unwrap());
    }

    #[test]
    fn cycle_examples() {
        let c4 = builtin::cycle_graph(4).unwrap();
        let r2 = is_l_adic(&c4, 2).unwrap();
        assert!(!r2.is_l_adic);
        assert_eq!(r2.failing().collect::<Vec<_>>(), vec![s(&[1, 2, 3, 4])]);
        assert!(is_l_adic(&c4, 3).unwrap().is_l_adic);
        assert!(!is_quadratic(&builtin::cycle_graph(5).unwrap()).unwrap().is_l_adic);
        assert_eq!(is_l_adic(&c4, 0), Err(Error::AdicityLevel(0)));
    }

    #[test]
    fn k4_is_quadratic() {
        let k4 = builtin::complete_graph(4).unwrap();
        assert!(is_quadratic(&k4).unwrap().is_l_adic);
        assert!(is_l_adic_by_rank(&k4, 2, Field::Rational).unwrap());
    }

    #[test]
    fn prime_field_agrees_on_graphs() {
        for f in [
            builtin::complete_graph(4).unwrap(),
            builtin::cycle_graph(5).unwrap(),
            builtin::wheel_graph(4).unwrap(),
        ] {
            for level in 1..=4 {
                let q = is_l_adic(&f, level).unwrap().is_l_adic;
                let p = is_l_adic_in(&f, level, Field::prime(3).unwrap()).unwrap().is_l_adic;
                assert_eq!(q, p);
            }
        }
    }
}
