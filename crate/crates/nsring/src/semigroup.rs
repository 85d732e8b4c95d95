//! Numerical semigroups: exact membership, cached invariants, and
//! duplicate-free enumeration through the genus tree.
//!
//! A numerical semigroup S is a cofinite subset of the nonnegative integers
//! closed under addition and containing 0. Membership below the conductor is
//! answered by a sieve; everything at or above the conductor is a member.

use crate::error::{Error, Result};
use serde::Serialize;
use std::sync::Arc;

pub const MAX_GENUS: u32 = 40;
pub const MAX_FROBENIUS: i64 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    gens: Vec<i64>,
    multiplicity: i64,
    frobenius: i64,
    conductor: i64,
    sieve: Vec<bool>,
    gaps: Vec<i64>,
    pf: Vec<i64>,
    apery: Vec<(i64, Vec<i64>)>,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        for &g in raw {
            if g <= 0 {
                return Err(Error::NonPositiveGenerator(g));
            }
        }
        let g = raw.iter().fold(0i64, |a, &b| gcd(a, b));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let mut sorted: Vec<i64> = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let e = sorted[0];
        let max_gen = *sorted.last().unwrap();

        // Sieve upward until e consecutive members appear; everything past
        // that run is a member.
        let mut bound = ((e * max_gen) as usize).max(4) + 2;
        let sieve;
        let frobenius;
        loop {
            let mut s = vec![false; bound];
            s[0] = true;
            let mut run = 0usize;
            let mut stop: Option<usize> = None;
            for d in 1..bound {
                let m = sorted.iter().any(|&g| d as i64 >= g && s[d - g as usize]);
                s[d] = m;
                if m {
                    run += 1;
                    if run >= e as usize {
                        stop = Some(d);
                        break;
                    }
                } else {
                    run = 0;
                }
            }
            match stop {
                Some(d) => {
                    // largest non-member strictly below the run; -1 if none
                    let mut f = d as i64 - e;
                    while f >= 0 && s[f as usize] {
                        f -= 1;
                    }
                    sieve = s;
                    frobenius = f;
                    break;
                }
                None => bound *= 2,
            }
        }
        let conductor = frobenius + 1;
        let member = |z: i64| -> bool {
            if z < 0 {
                false
            } else if z >= conductor {
                true
            } else {
                sieve[z as usize]
            }
        };

        // Unique minimal generating system: members that are not a sum of
        // two positive members. All minimal generators are < c + e.
        let mut gens = Vec::new();
        for m in e..(conductor + e).max(e + 1) {
            if !member(m) {
                continue;
            }
            let mut decomposable = false;
            let mut s = e;
            while s <= m - e {
                if member(s) && member(m - s) {
                    decomposable = true;
                    break;
                }
                s += 1;
            }
            if !decomposable {
                gens.push(m);
            }
        }
        if gens.is_empty() {
            gens.push(1); // S = N
        }

        let gaps: Vec<i64> = (1..conductor).filter(|&z| !member(z)).collect();
        let pf: Vec<i64> = gaps
            .iter()
            .copied()
            .filter(|&f| gens.iter().all(|&a| member(f + a)))
            .collect();
        let apery = gens
            .iter()
            .map(|&m| {
                let reps = (0..m)
                    .map(|r| {
                        let mut z = r;
                        while !member(z) {
                            z += m;
                        }
                        z
                    })
                    .collect();
                (m, reps)
            })
            .collect();

        let mut sieve = sieve;
        sieve.truncate(conductor.max(0) as usize);
        Ok(NumericalSemigroup {
            multiplicity: gens[0],
            gens,
            frobenius,
            conductor,
            sieve,
            gaps,
            pf,
            apery,
        })
    }

    pub fn dvr() -> Self {
        NumericalSemigroup::new(&[1]).unwrap()
    }

    pub fn is_dvr(&self) -> bool {
        self.multiplicity == 1
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        if z >= self.conductor {
            return true;
        }
        self.sieve[z as usize]
    }

    /// Minimal generating system, sorted ascending.
    pub fn generators(&self) -> &[i64] {
        &self.gens
    }

    /// e(R): smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    /// Embedding dimension = number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.gens.len()
    }

    pub fn max_generator(&self) -> i64 {
        *self.gens.last().unwrap()
    }

    /// Largest integer not in S; -1 when S = N.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pf
    }

    /// Cohen-Macaulay type r(R) = |PF(S)|; 0 for the DVR by convention.
    pub fn cm_type(&self) -> usize {
        self.pf.len()
    }

    pub fn apery_set(&self, m: i64) -> Option<&[i64]> {
        self.apery
            .iter()
            .find(|(g, _)| *g == m)
            .map(|(_, v)| v.as_slice())
    }

    /// e(R) = mu(m) - d + 1 with d = 1, i.e. e = embedding dimension.
    pub fn has_minimal_multiplicity(&self) -> bool {
        self.multiplicity == self.gens.len() as i64
    }

    /// z in S iff F - z not in S, checked on [0, c).
    pub fn is_symmetric(&self) -> bool {
        if self.is_dvr() {
            return true;
        }
        (0..self.conductor).all(|z| self.contains(z) != self.contains(self.frobenius - z))
    }

    pub fn info_json(&self) -> SemigroupInfo {
        SemigroupInfo {
            generators: self.gens.clone(),
            multiplicity: self.multiplicity,
            embdim: self.gens.len(),
            frobenius: self.frobenius,
            conductor: self.conductor,
            genus: self.genus(),
            r#type: self.cm_type(),
            pf: self.pf.clone(),
            gaps: self.gaps.clone(),
            minimal_multiplicity: self.has_minimal_multiplicity(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SemigroupInfo {
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub embdim: usize,
    pub frobenius: i64,
    pub conductor: i64,
    pub genus: usize,
    pub r#type: usize,
    pub pf: Vec<i64>,
    pub gaps: Vec<i64>,
    pub minimal_multiplicity: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumBound {
    MaxGenus(u32),
    MaxFrobenius(i64),
}

/// Walk the genus tree rooted at N. Children of S are obtained by removing a
/// minimal generator larger than the Frobenius number, which visits every
/// numerical semigroup within the bound exactly once.
pub fn enumerate_semigroups(
    bound: EnumBound,
    visit: &mut dyn FnMut(&Arc<NumericalSemigroup>),
) -> Result<u64> {
    match bound {
        EnumBound::MaxGenus(g) if g as i64 > MAX_GENUS as i64 => {
            return Err(Error::BoundTooLarge(g as i64, MAX_GENUS as i64))
        }
        EnumBound::MaxFrobenius(f) if f > MAX_FROBENIUS => {
            return Err(Error::BoundTooLarge(f, MAX_FROBENIUS))
        }
        _ => {}
    }
    let root = Arc::new(NumericalSemigroup::dvr());
    let mut count = 0u64;
    let mut stack: Vec<Arc<NumericalSemigroup>> = vec![root];
    while let Some(s) = stack.pop() {
        count += 1;
        visit(&s);
        let descend = match bound {
            EnumBound::MaxGenus(g) => (s.genus() as u32) < g,
            EnumBound::MaxFrobenius(_) => true,
        };
        if !descend {
            continue;
        }
        for &g in s.generators().iter().filter(|&&g| g > s.frobenius()) {
            if let EnumBound::MaxFrobenius(fb) = bound {
                if g > fb {
                    continue;
                }
            }
            stack.push(Arc::new(remove_generator(&s, g)));
        }
    }
    Ok(count)
}

/// S \ {g} for a minimal generator g > F(S); the result is again a
/// numerical semigroup with Frobenius number g.
fn remove_generator(s: &NumericalSemigroup, g: i64) -> NumericalSemigroup {
    let c = g + 1;
    let member = |z: i64| z >= 0 && z != g && s.contains(z);
    let e = (1..).find(|&z| member(z)).unwrap();
    // collect minimal generators of the child directly
    let mut gens = Vec::new();
    for m in 1..(c + e + 1) {
        if !member(m) {
            continue;
        }
        let mut dec = false;
        let mut a = 1;
        while a <= m - a {
            if member(a) && member(m - a) {
                dec = true;
                break;
            }
            a += 1;
        }
        if !dec {
            gens.push(m);
        }
    }
    NumericalSemigroup::new(&gens).expect("child of a numerical semigroup is one")
}
