//! Incremental row echelon forms over Q (fraction-free, integer rows) and GF(p).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Coefficient field for membership tests.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Field {
    #[default]
    Rational,
    /// Integers modulo a prime. Experimental.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) && p < (1 << 31) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// A growing row space supporting rank and membership queries.
#[derive(Clone, Debug)]
pub enum Echelon {
    Rational(IntegerEchelon),
    Prime(ModPEchelon),
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        match field {
            Field::Rational => Echelon::Rational(IntegerEchelon::default()),
            Field::Prime(p) => Echelon::Prime(ModPEchelon::new(p)),
        }
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        match self {
            Echelon::Rational(e) => e.insert(row),
            Echelon::Prime(e) => e.insert(row),
        }
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        match self {
            Echelon::Rational(e) => e.contains(row),
            Echelon::Prime(e) => e.contains(row),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Echelon::Rational(e) => e.pivots.len(),
            Echelon::Prime(e) => e.pivots.len(),
        }
    }
}

/// Fraction-free elimination on integer rows. Each stored row is primitive
/// (content 1) with a positive leading entry; rows are only reduced at their
/// leading column, which is enough to decide rank.
#[derive(Clone, Debug, Default)]
pub struct IntegerEchelon {
    pivots: HashMap<usize, SparseRow>,
}

impl IntegerEchelon {
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        match row.first() {
            None => false,
            Some(&(lead, _)) => {
                self.pivots.insert(lead, row);
                true
            }
        }
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        normalize(&mut row);
        while let Some((lead, a)) = row.first().cloned() {
            let Some(pivot) = self.pivots.get(&lead) else {
                break;
            };
            // row <- (p / g) * row - (a / g) * pivot, which clears `lead`.
            let p = &pivot[0].1;
            let g = a.gcd(p);
            row = combine(&(p / &g), &row, &(&a / &g), pivot);
            normalize(&mut row);
        }
        row
    }
}

/// `x * r - y * s`, dropping cancelled entries.
fn combine(x: &BigInt, r: &SparseRow, y: &BigInt, s: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(r.len() + s.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < s.len() {
        let take_r = j >= s.len() || (i < r.len() && r[i].0 < s[j].0);
        let take_s = i >= r.len() || (j < s.len() && s[j].0 < r[i].0);
        if take_r {
            out.push((r[i].0, x * &r[i].1));
            i += 1;
        } else if take_s {
            out.push((s[j].0, -(y * &s[j].1)));
            j += 1;
        } else {
            let v = x * &r[i].1 - y * &s[j].1;
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Divides out the content and makes the leading entry positive.
fn normalize(row: &mut SparseRow) {
    row.retain(|(_, v)| !v.is_zero());
    let Some(first) = row.first() else {
        return;
    };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    if first.1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// Elimination modulo a prime; stored rows are monic.
#[derive(Clone, Debug)]
pub struct ModPEchelon {
    p: u64,
    pivots: HashMap<usize, Vec<(usize, u64)>>,
}

impl ModPEchelon {
    pub fn new(p: u64) -> Self {
        ModPEchelon {
            p,
            pivots: HashMap::new(),
        }
    }

    fn lift(&self, row: SparseRow) -> Vec<(usize, u64)> {
        let p = BigInt::from(self.p);
        row.into_iter()
            .filter_map(|(c, v)| {
                let r = v.mod_floor(&p).to_u64().unwrap();
                (r != 0).then_some((c, r))
            })
            .collect()
    }

    fn reduce(&self, mut row: Vec<(usize, u64)>) -> Vec<(usize, u64)> {
        let p = self.p;
        while let Some(&(lead, a)) = row.first() {
            let Some(pivot) = self.pivots.get(&lead) else {
                break;
            };
            // pivot is monic: row <- row - a * pivot.
            let mut out = Vec::with_capacity(row.len() + pivot.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < pivot.len() {
                if j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
                    out.push(row[i]);
                    i += 1;
                } else if i >= row.len() || pivot[j].0 < row[i].0 {
                    out.push((pivot[j].0, (p - a * pivot[j].1 % p) % p));
                    j += 1;
                } else {
                    let v = (row[i].1 + p - a * pivot[j].1 % p) % p;
                    if v != 0 {
                        out.push((row[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            row = out;
        }
        row
    }

    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(self.lift(row));
        let Some(&(lead, a)) = row.first() else {
            return false;
        };
        let inv = mod_pow(a, self.p - 2, self.p);
        let monic = row.into_iter().map(|(c, v)| (c, v * inv % self.p)).collect();
        self.pivots.insert(lead, monic);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(self.lift(row)).is_empty()
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
