//! Graded matrices between free modules over the semigroup ring.
//!
//! A map  (+) R(-col_shifts[j])  ->  (+) R(-row_shifts[i])  of degree zero.
//! Every nonzero entry at (i, j) is homogeneous of degree
//! col_shifts[j] - row_shifts[i], and since each graded piece of R is at
//! most one-dimensional, an entry is a single signed monomial; sums are
//! kept around only so that exact products can cancel.

use crate::error::{Error, Result};
use crate::linalg::{add_mod, mul_mod, neg_mod};
use crate::semigroup::NumericalSemigroup;
use serde::{Deserialize, Serialize};

/// (degree, coefficient mod p), coefficient nonzero.
pub type Term = (i64, u32);

/// A ring element as a sorted sum of monomial terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Entry(pub Vec<Term>);

impl Entry {
    pub fn zero() -> Self {
        Entry(Vec::new())
    }

    pub fn monomial(deg: i64, coef: u32) -> Self {
        if coef == 0 {
            Entry::zero()
        } else {
            Entry(vec![(deg, coef)])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, deg: i64, coef: u32, p: u32) {
        if coef == 0 {
            return;
        }
        match self.0.binary_search_by_key(&deg, |t| t.0) {
            Ok(k) => {
                let c = add_mod(self.0[k].1, coef, p);
                if c == 0 {
                    self.0.remove(k);
                } else {
                    self.0[k].1 = c;
                }
            }
            Err(k) => self.0.insert(k, (deg, coef)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GradedMatrix {
    pub row_shifts: Vec<i64>,
    pub col_shifts: Vec<i64>,
    entries: Vec<Entry>, // row-major
}

impl GradedMatrix {
    pub fn zero(row_shifts: Vec<i64>, col_shifts: Vec<i64>) -> Self {
        let entries = vec![Entry::zero(); row_shifts.len() * col_shifts.len()];
        GradedMatrix {
            row_shifts,
            col_shifts,
            entries,
        }
    }

    pub fn nrows(&self) -> usize {
        self.row_shifts.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_shifts.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Entry {
        &self.entries[i * self.ncols() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: Entry) {
        let n = self.ncols();
        self.entries[i * n + j] = e;
    }

    pub fn set_monomial(&mut self, i: usize, j: usize, deg: i64, coef: u32) {
        self.set(i, j, Entry::monomial(deg, coef));
    }

    /// Generator row of an ideal: the 1 x n matrix (t^{x_1}, ..., t^{x_n})
    /// presenting the inclusion (+) R(-x_j) -> R onto the ideal.
    pub fn generator_row(gens: &[i64]) -> Self {
        let mut m = GradedMatrix::zero(vec![0], gens.to_vec());
        for (j, &g) in gens.iter().enumerate() {
            m.set_monomial(0, j, g, 1);
        }
        m
    }

    /// Every nonzero term must have the expected degree and be a monomial
    /// of the ring.
    pub fn validate(&self, sg: &NumericalSemigroup) -> Result<()> {
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                let want = self.col_shifts[j] - self.row_shifts[i];
                for &(d, c) in &self.entry(i, j).0 {
                    if c == 0 || d != want || !sg.contains(d) {
                        return Err(Error::NotHomogeneous(i, j));
                    }
                }
            }
        }
        Ok(())
    }

    /// Transpose as a map between the dual free modules (shifts negate).
    pub fn transpose(&self) -> GradedMatrix {
        let mut t = GradedMatrix::zero(
            self.col_shifts.iter().map(|s| -s).collect(),
            self.row_shifts.iter().map(|s| -s).collect(),
        );
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                t.set(j, i, self.entry(i, j).clone());
            }
        }
        t
    }

    /// Exact product over the untruncated ring (no cap): compositions of
    /// resolution maps must vanish identically, not just below a cap.
    pub fn mul(&self, other: &GradedMatrix, p: u32) -> GradedMatrix {
        assert_eq!(
            self.col_shifts, other.row_shifts,
            "shift mismatch in product"
        );
        let mut out = GradedMatrix::zero(self.row_shifts.clone(), other.col_shifts.clone());
        for i in 0..self.nrows() {
            for j in 0..other.ncols() {
                let mut acc = Entry::zero();
                for k in 0..self.ncols() {
                    for &(da, ca) in &self.entry(i, k).0 {
                        for &(db, cb) in &other.entry(k, j).0 {
                            acc.add_term(da + db, mul_mod(ca, cb, p), p);
                        }
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// A unit entry (degree-0 term) would contradict minimality.
    pub fn has_unit_entry(&self) -> bool {
        self.entries
            .iter()
            .any(|e| e.0.iter().any(|&(d, _)| d == 0))
    }

    pub fn column_entry_count(&self, j: usize) -> usize {
        (0..self.nrows())
            .filter(|&i| !self.entry(i, j).is_zero())
            .count()
    }

    /// Negate all entries (used when baking signed scenario data).
    pub fn negated(&self, p: u32) -> GradedMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            for t in e.0.iter_mut() {
                t.1 = neg_mod(t.1, p);
            }
        }
        out
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            row_shifts: self.row_shifts.clone(),
            col_shifts: self.col_shifts.clone(),
            entries: (0..self.nrows())
                .flat_map(|i| {
                    (0..self.ncols()).filter_map(move |j| {
                        let e = self.entry(i, j);
                        if e.is_zero() {
                            None
                        } else {
                            Some((i, j, e.0.clone()))
                        }
                    })
                })
                .collect(),
        }
    }

    pub fn from_json(j: &MatrixJson) -> GradedMatrix {
        let mut m = GradedMatrix::zero(j.row_shifts.clone(), j.col_shifts.clone());
        for (i, jj, terms) in &j.entries {
            m.set(*i, *jj, Entry(terms.clone()));
        }
        m
    }
}

/// Serialized form: {row_shifts, col_shifts, entries: [(i, j, [(deg, coeff)...])]}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub row_shifts: Vec<i64>,
    pub col_shifts: Vec<i64>,
    pub entries: Vec<(usize, usize, Vec<Term>)>,
}

/// A homogeneous vector in (+) R(-shifts[j]): module degree `deg`, with
/// scalar coordinates on the slots whose induced ring degree deg - shifts[j]
/// is a monomial. Coordinates are (slot, coefficient).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVec {
    pub deg: i64,
    pub terms: Vec<(usize, u32)>,
}

impl HVec {
    pub fn new(deg: i64, terms: Vec<(usize, u32)>) -> Self {
        HVec { deg, terms }
    }
}
