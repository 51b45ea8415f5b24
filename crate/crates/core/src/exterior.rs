//! The exterior (Grassmann) algebra on generators `e_1, ..., e_n` over the
//! rationals, with the boundary operator `∂`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::subset::{GroundSet, Subset};

pub type Scalar = BigRational;

/// Sign of `e_a ∧ e_b` relative to `e_{a ∪ b}` for disjoint `a`, `b`: the
/// parity of pairs `(x, y)` with `x ∈ a`, `y ∈ b`, `x > y`.
pub fn merge_sign(a: Subset, b: Subset) -> i32 {
    debug_assert!(a.is_disjoint(b));
    let inversions: u32 = b.iter().map(|y| (a.bits() >> y).count_ones()).sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A finite linear combination of monomials `e_X` with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct ExteriorElement {
    ground: GroundSet,
    terms: BTreeMap<Subset, Scalar>,
}

impl ExteriorElement {
    pub fn zero(ground: GroundSet) -> Self {
        ExteriorElement {
            ground,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ground: GroundSet) -> Self {
        Self::monomial(ground, Subset::EMPTY)
    }

    /// `e_X` with coefficient 1.
    pub fn monomial(ground: GroundSet, x: Subset) -> Self {
        Self::term(ground, x, Scalar::one())
    }

    /// The generator `e_i`.
    pub fn generator(ground: GroundSet, label: usize) -> Self {
        Self::monomial(ground, Subset::singleton(label))
    }

    pub fn term(ground: GroundSet, x: Subset, coeff: Scalar) -> Self {
        assert!(ground.contains(x), "{x:?} outside [{}]", ground.len());
        let mut e = Self::zero(ground);
        e.add_term(x, coeff);
        e
    }

    pub fn from_terms(ground: GroundSet, terms: impl IntoIterator<Item = (Subset, Scalar)>) -> Result<Self> {
        let mut e = Self::zero(ground);
        for (x, c) in terms {
            ground.check(x)?;
            e.add_term(x, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, x: Subset, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(x) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Subset, &Scalar)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coefficient(&self, x: Subset) -> Scalar {
        self.terms.get(&x).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all monomials; `None` when mixed. Zero is
    /// homogeneous of every degree and reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|x| x.len());
        match degrees.next() {
            None => Some(0),
            Some(d) => degrees.all(|e| e == d).then_some(d),
        }
    }

    /// Homogeneous components keyed by degree.
    pub fn components(&self) -> BTreeMap<usize, ExteriorElement> {
        let mut out: BTreeMap<usize, ExteriorElement> = BTreeMap::new();
        for (x, c) in &self.terms {
            out.entry(x.len())
                .or_insert_with(|| Self::zero(self.ground))
                .terms
                .insert(*x, c.clone());
        }
        out
    }

    fn same_ground(&self, other: &Self) -> Result<()> {
        if self.ground == other.ground {
            Ok(())
        } else {
            Err(Error::GroundMismatch {
                left: self.ground.len(),
                right: other.ground.len(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(*x, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        let mut out = Self::zero(self.ground);
        if k.is_zero() {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(x, c)| (*x, c * k))
            .collect();
        out
    }

    /// Exterior product. Monomials sharing a generator vanish.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        let mut out = Self::zero(self.ground);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if !a.is_disjoint(*b) {
                    continue;
                }
                let mut c = ca * cb;
                if merge_sign(*a, *b) < 0 {
                    c = -c;
                }
                out.add_term(*a | *b, c);
            }
        }
        Ok(out)
    }

    /// The boundary operator: `∂(e_{i_1 … i_m}) = Σ_j (-1)^{j-1} e_{X \ i_j}`,
    /// the unique degree −1 map with `∂(e_i) = 1` satisfying
    /// `∂(a ∧ b) = ∂a ∧ b + (-1)^{deg a} a ∧ ∂b`.
    pub fn boundary(&self) -> Self {
        let mut out = Self::zero(self.ground);
        for (x, c) in &self.terms {
            for (pos, label) in x.iter().enumerate() {
                let coeff = if pos % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(x.remove(label), coeff);
            }
        }
        out
    }

    /// Writes the element as space-separated `±num/den * e_{…}` terms in
    /// (degree, lexicographic) order. Labels are concatenated for `n < 10`
    /// and comma-separated otherwise. Zero is written `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<Subset> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| a.canonical_cmp(*b));
        keys.iter()
            .map(|x| {
                let c = &self.terms[x];
                let sign = if c.is_negative() { '-' } else { '+' };
                format!(
                    "{sign}{}/{} * e_{{{}}}",
                    c.numer().abs(),
                    c.denom(),
                    monomial_labels(*x, self.ground.len())
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Inverse of [`ExteriorElement::to_text`].
    pub fn parse(ground: GroundSet, text: &str) -> Result<Self> {
        let bad = |message: String| Error::Parse { line: 1, message };
        let text = text.trim();
        if text == "0" {
            return Ok(Self::zero(ground));
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if !tokens.len().is_multiple_of(3) {
            return Err(bad(format!("malformed element {text:?}")));
        }
        let mut out = Self::zero(ground);
        for chunk in tokens.chunks(3) {
            let [coeff, star, mono] = [chunk[0], chunk[1], chunk[2]];
            if star != "*" {
                return Err(bad(format!("expected '*', found {star:?}")));
            }
            let (neg, frac) = match coeff.split_at(1) {
                ("+", rest) => (false, rest),
                ("-", rest) => (true, rest),
                _ => return Err(bad(format!("coefficient {coeff:?} lacks a sign"))),
            };
            let (num, den) = frac
                .split_once('/')
                .ok_or_else(|| bad(format!("coefficient {coeff:?} is not num/den")))?;
            let num: BigInt = num.parse().map_err(|_| bad(format!("bad numerator {num:?}")))?;
            let den: BigInt = den.parse().map_err(|_| bad(format!("bad denominator {den:?}")))?;
            if den.is_zero() {
                return Err(bad("zero denominator".into()));
            }
            let mut c = Scalar::new(num, den);
            if neg {
                c = -c;
            }
            let inner = mono
                .strip_prefix("e_{")
                .and_then(|m| m.strip_suffix('}'))
                .ok_or_else(|| bad(format!("bad monomial {mono:?}")))?;
            let labels: Vec<usize> = if inner.is_empty() {
                Vec::new()
            } else if ground.len() < 10 {
                inner
                    .chars()
                    .map(|ch| ch.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| bad(format!("bad monomial {mono:?}")))?
            } else {
                inner
                    .split(',')
                    .map(|l| l.parse().ok())
                    .collect::<Option<_>>()
                    .ok_or_else(|| bad(format!("bad monomial {mono:?}")))?
            };
            let x = Subset::try_from_labels(labels.iter().copied())?;
            if x.len() != labels.len() {
                return Err(bad(format!("repeated label in {mono:?}")));
            }
            ground.check(x)?;
            out.add_term(x, c);
        }
        Ok(out)
    }
}

fn monomial_labels(x: Subset, n: usize) -> String {
    let labels = x.iter().map(|l| l.to_string());
    if n < 10 {
        labels.collect()
    } else {
        labels.collect::<Vec<_>>().join(",")
    }
}

impl fmt::Debug for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
