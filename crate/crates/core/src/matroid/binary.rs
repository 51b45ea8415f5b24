use crate::error::{Error, Result};
use crate::matroid::CircuitFamily;
use crate::subset::{GroundSet, Subset, DEFAULT_CAP};

pub const MAX_ROWS: usize = 128;

/// A matrix over GF(2); column `j` (1-based) represents element `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    /// Column bit vectors; bit `i` is the entry in row `i`.
    columns: Vec<u128>,
}

impl BinaryMatrix {
    /// Builds a matrix from row strings/bit rows. Rejects zero and repeated columns.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let r = rows.len();
        if r > MAX_ROWS {
            return Err(Error::TooManyRows(r));
        }
        let n = rows.first().map_or(0, |row| row.len());
        let mut columns = vec![0u128; n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("row has {} entries, expected {n}", row.len()),
                });
            }
            for (j, &bit) in row.iter().enumerate() {
                if bit {
                    columns[j] |= 1 << i;
                }
            }
        }
        Self::from_columns(r, columns)
    }

    pub fn from_columns(rows: usize, columns: Vec<u128>) -> Result<Self> {
        if rows > MAX_ROWS {
            return Err(Error::TooManyRows(rows));
        }
        for (j, &c) in columns.iter().enumerate() {
            if c == 0 {
                return Err(Error::ZeroColumn(j + 1));
            }
            if let Some(k) = columns[..j].iter().position(|&d| d == c) {
                return Err(Error::EqualColumns(k + 1, j + 1));
            }
        }
        Ok(BinaryMatrix { rows, columns })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[u128] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> bool {
        self.columns[col] >> row & 1 == 1
    }

    pub fn circuits(&self) -> Result<CircuitFamily> {
        self.circuits_with_cap(DEFAULT_CAP)
    }

    /// Inclusion-minimal dependent column sets.
    ///
    /// Depth-first over independent sets grown in increasing label order. Each
    /// basis vector carries the set of columns whose sum it is, so when a new
    /// column reduces to zero its representation is read off directly; the
    /// dependent set is a circuit iff the representation uses every column.
    /// Dependent sets are never extended.
    pub fn circuits_with_cap(&self, cap: usize) -> Result<CircuitFamily> {
        let ground = GroundSet::with_cap(self.cols(), cap)?;
        let mut found = Vec::new();
        let mut basis: Vec<(u128, Subset)> = Vec::new();
        self.search(0, Subset::EMPTY, &mut basis, &mut found);
        Ok(CircuitFamily::from_trusted(ground, found))
    }

    fn search(
        &self,
        start: usize,
        current: Subset,
        basis: &mut Vec<(u128, Subset)>,
        found: &mut Vec<Subset>,
    ) {
        for j in start..self.cols() {
            let label = j + 1;
            let (vec, repr) = reduce(basis, self.columns[j], Subset::singleton(label));
            if vec == 0 {
                if repr == current.insert(label) {
                    found.push(repr);
                }
                continue;
            }
            basis.push((vec, repr));
            self.search(j + 1, current.insert(label), basis, found);
            basis.pop();
        }
    }
}

/// Reduces `v` against a basis kept with distinct lowest set bits.
fn reduce(basis: &[(u128, Subset)], mut v: u128, mut repr: Subset) -> (u128, Subset) {
    // Every basis vector is reduced against its predecessors, so one pass in
    // insertion order suffices.
    for &(b, r) in basis {
        let pivot = b & b.wrapping_neg();
        if v & pivot != 0 {
            v ^= b;
            repr = repr.sym_diff(r);
        }
    }
    (v, repr)
}
