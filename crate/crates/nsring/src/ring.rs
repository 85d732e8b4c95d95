//! The truncated semigroup ring R / (all degrees >= D) over a prime field.
//!
//! Multiplication is t^a t^b = t^{a+b} when a + b < D and 0 otherwise; the
//! monomial basis is indexed by semigroup members below the cap. Degreewise
//! computations are exact below the cap minus a guard band, and every
//! finite-length report is replayed at cap D + e as a stabilization
//! certificate.

use crate::error::{Error, Result};
use crate::linalg::is_prime;
use crate::semigroup::NumericalSemigroup;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct TruncatedRing {
    sg: Arc<NumericalSemigroup>,
    p: u32,
    cap: i64,
}

impl TruncatedRing {
    /// Cap defaults to 2c + 2*max_gen, the minimum admissible truncation;
    /// a larger hint is honored.
    pub fn new(sg: &Arc<NumericalSemigroup>, p: u32, cap_hint: Option<i64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let min_cap = 2 * sg.conductor() + 2 * sg.max_generator();
        let cap = cap_hint.unwrap_or(min_cap).max(min_cap);
        Ok(TruncatedRing {
            sg: sg.clone(),
            p,
            cap,
        })
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.sg
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    pub fn with_cap(&self, cap: i64) -> Self {
        TruncatedRing {
            sg: self.sg.clone(),
            p: self.p,
            cap: cap.max(self.cap),
        }
    }

    /// t^a is a basis monomial iff a in S and a < D.
    pub fn has_monomial(&self, a: i64) -> bool {
        self.sg.contains(a) && a < self.cap
    }

    pub fn basis(&self) -> Vec<i64> {
        (0..self.cap).filter(|&a| self.sg.contains(a)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_cap_and_basis_size() {
        let sg = Arc::new(NumericalSemigroup::new(&[5, 6, 13, 14]).unwrap());
        let r = TruncatedRing::new(&sg, 101, None).unwrap();
        assert_eq!(r.cap(), 2 * 10 + 2 * 14);
        assert_eq!(r.basis().len(), 41); // 48 degrees minus 7 gaps
    }

    #[test]
    fn dvr_basis_is_initial_segment() {
        let sg = Arc::new(NumericalSemigroup::new(&[1]).unwrap());
        let r = TruncatedRing::new(&sg, 2, Some(10)).unwrap();
        assert_eq!(r.basis(), (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn cap_hint_honored() {
        let sg = Arc::new(NumericalSemigroup::new(&[4, 9, 14, 15]).unwrap());
        let r = TruncatedRing::new(&sg, 2, Some(64)).unwrap();
        assert_eq!(r.cap(), 64);
        assert!(matches!(
            TruncatedRing::new(&sg, 6, None),
            Err(Error::NotPrime(6))
        ));
    }
}
