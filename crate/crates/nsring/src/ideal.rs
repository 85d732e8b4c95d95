//! Fractional monomial ideal arithmetic over a numerical semigroup ring.
//!
//! A homogeneous fractional ideal of R = k[t^s : s in S] is determined by
//! its set of degrees: a subset E of the integers with E + S inside E,
//! bounded below and eventually full. We keep the normalized form
//! (offset, full_from, window): `offset` is the least member, every degree
//! at or above `full_from` is a member, and `window` stores membership in
//! between. Equality of ideals is equality of these three fields.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use serde::Serialize;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct Ideal {
    sg: Arc<NumericalSemigroup>,
    offset: i64,
    full_from: i64,
    window: Vec<bool>,
    min_gens: Vec<i64>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.sg.generators() == other.sg.generators()
            && self.offset == other.offset
            && self.full_from == other.full_from
            && self.window == other.window
    }
}
impl Eq for Ideal {}

impl Ideal {
    /// Normalize an arbitrary membership predicate. `hi_full` must satisfy:
    /// every degree >= hi_full is a member, and some member exists.
    fn from_predicate(
        sg: Arc<NumericalSemigroup>,
        lo: i64,
        hi_full: i64,
        pred: impl Fn(i64) -> bool,
    ) -> Self {
        let mut offset = hi_full;
        for d in lo..hi_full {
            if pred(d) {
                offset = d;
                break;
            }
        }
        let mut full_from = hi_full;
        while full_from > offset && pred(full_from - 1) {
            full_from -= 1;
        }
        let window: Vec<bool> = (offset..full_from).map(&pred).collect();
        let mut ideal = Ideal {
            sg,
            offset,
            full_from,
            window,
            min_gens: Vec::new(),
        };
        ideal.min_gens = ideal.compute_min_gens();
        ideal
    }

    fn compute_min_gens(&self) -> Vec<i64> {
        let e = self.sg.multiplicity();
        (self.offset..self.full_from + e)
            .filter(|&d| {
                self.contains(d) && self.sg.generators().iter().all(|&a| !self.contains(d - a))
            })
            .collect()
    }

    pub fn from_degrees(sg: &Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Ideal> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let lo = *gens.iter().min().unwrap();
        let hi_full = lo + sg.conductor();
        let pred = |d: i64| gens.iter().any(|&g| sg.contains(d - g));
        Ok(Ideal::from_predicate(sg.clone(), lo, hi_full, pred))
    }

    pub fn principal(sg: &Arc<NumericalSemigroup>, g: i64) -> Ideal {
        Ideal::from_degrees(sg, &[g]).unwrap()
    }

    /// The unit ideal R itself.
    pub fn unit(sg: &Arc<NumericalSemigroup>) -> Ideal {
        Ideal::from_degrees(sg, &[0]).unwrap()
    }

    /// The homogeneous maximal ideal m = (t^{a_1}, ..., t^{a_n}).
    pub fn maximal(sg: &Arc<NumericalSemigroup>) -> Ideal {
        Ideal::from_degrees(sg, sg.generators()).unwrap()
    }

    /// The conductor c_R = (t^c, ..., t^{c+e-1}): all degrees >= c.
    pub fn conductor(sg: &Arc<NumericalSemigroup>) -> Ideal {
        let c = sg.conductor();
        Ideal::from_predicate(sg.clone(), c, c, |_| true)
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.sg
    }

    pub fn contains(&self, d: i64) -> bool {
        if d < self.offset {
            false
        } else if d >= self.full_from {
            true
        } else {
            self.window[(d - self.offset) as usize]
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// All degrees >= full_from are members; full_from <= offset + c.
    pub fn full_from(&self) -> i64 {
        self.full_from
    }

    /// Degrees d in the ideal with d - a outside it for every generator a
    /// of S; these generate the ideal.
    pub fn min_gens(&self) -> &[i64] {
        &self.min_gens
    }

    pub fn num_gens(&self) -> usize {
        self.min_gens.len()
    }

    pub fn is_principal(&self) -> bool {
        self.min_gens.len() == 1
    }

    /// True when every member degree lies in S, i.e. the ideal is an
    /// honest ideal of R rather than a fractional one.
    pub fn is_inside_ring(&self) -> bool {
        self.offset >= 0
            && self.full_from >= self.sg.conductor()
            && (self.offset..self.full_from).all(|d| !self.contains(d) || self.sg.contains(d))
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.sg.generators() == other.sg.generators() {
            Ok(())
        } else {
            Err(Error::MixedSemigroups)
        }
    }

    /// Fractional colon (J : I) = {z : z + g in J for every generator g of I},
    /// computed over the integers. With J the canonical ideal this is the
    /// dual Hom(I, omega).
    pub fn colon(j: &Ideal, i: &Ideal) -> Result<Ideal> {
        j.same_ring(i)?;
        let gmin = *i.min_gens.first().unwrap();
        let gmax = *i.min_gens.last().unwrap();
        let lo = j.offset - gmax;
        let hi_full = j.full_from - gmin;
        let pred = |z: i64| i.min_gens.iter().all(|&g| j.contains(z + g));
        Ok(Ideal::from_predicate(
            j.sg.clone(),
            lo,
            hi_full.max(lo),
            pred,
        ))
    }

    /// Hom(I, J) realized as the fractional colon ideal (J : I).
    pub fn hom(i: &Ideal, j: &Ideal) -> Result<Ideal> {
        Ideal::colon(j, i)
    }

    pub fn product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
        a.same_ring(b)?;
        let mut gens = Vec::with_capacity(a.min_gens.len() * b.min_gens.len());
        for &x in &a.min_gens {
            for &y in &b.min_gens {
                gens.push(x + y);
            }
        }
        Ideal::from_degrees(&a.sg, &gens)
    }

    pub fn sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
        a.same_ring(b)?;
        let lo = a.offset.min(b.offset);
        let hi = a.full_from.max(b.full_from);
        Ok(Ideal::from_predicate(a.sg.clone(), lo, hi, |d| {
            a.contains(d) || b.contains(d)
        }))
    }

    pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
        a.same_ring(b)?;
        let lo = a.offset.max(b.offset);
        let hi = a.full_from.max(b.full_from);
        Ok(Ideal::from_predicate(a.sg.clone(), lo, hi, |d| {
            a.contains(d) && b.contains(d)
        }))
    }

    pub fn shift(&self, s: i64) -> Ideal {
        Ideal {
            sg: self.sg.clone(),
            offset: self.offset + s,
            full_from: self.full_from + s,
            window: self.window.clone(),
            min_gens: self.min_gens.iter().map(|g| g + s).collect(),
        }
    }

    /// The colon (x_j : x_i) taken inside R, as in the cycle maps p_{ij}.
    pub fn colon_in_ring(j: &Ideal, i: &Ideal) -> Result<Ideal> {
        let c = Ideal::colon(j, i)?;
        Ideal::intersect(&c, &Ideal::unit(&c.sg.clone()))
    }
}

/// The canonical ideal together with its fractional model
/// K(S) = {z : F - z not in S} and the shift that moved it inside R.
#[derive(Debug, Clone)]
pub struct CanonicalIdeal {
    pub ideal: Ideal,
    pub shift: i64,
    pub fractional_gens: Vec<i64>,
}

/// Canonical ideal: minimal generators of K(S) are {F - f : f in PF(S)};
/// K(S) is shifted by the least s >= 0 landing inside R.
pub fn canonical_ideal(sg: &Arc<NumericalSemigroup>) -> CanonicalIdeal {
    if sg.is_dvr() {
        return CanonicalIdeal {
            ideal: Ideal::unit(sg),
            shift: 0,
            fractional_gens: vec![0],
        };
    }
    let f = sg.frobenius();
    let k = Ideal::from_predicate(sg.clone(), 0, f + 1, |z| !sg.contains(f - z));
    let frac_gens = k.min_gens().to_vec();
    debug_assert_eq!(
        frac_gens,
        sg.pseudo_frobenius()
            .iter()
            .rev()
            .map(|pf| f - pf)
            .collect::<Vec<_>>()
    );
    let shift = (0..=sg.conductor())
        .find(|&s| frac_gens.iter().all(|&g| sg.contains(g + s)))
        .expect("shift by c always lands inside R");
    CanonicalIdeal {
        ideal: k.shift(shift),
        shift,
        fractional_gens: frac_gens,
    }
}

/// tr_R(I) = sum over minimal generators x of (x : I). Shift-invariant, and
/// always an ideal of R.
pub fn trace_ideal(i: &Ideal) -> Ideal {
    let sg = i.semigroup().clone();
    let mut acc: Option<Ideal> = None;
    for &x in i.min_gens() {
        let c = Ideal::colon(&Ideal::principal(&sg, x), i).unwrap();
        acc = Some(match acc {
            None => c,
            Some(a) => Ideal::sum(&a, &c).unwrap(),
        });
    }
    acc.expect("ideal has at least one generator")
}

/// tr_R(I) via the single-colon formula (I (x:I) : x) for a chosen minimal
/// generator x.
pub fn trace_via_single_colon(i: &Ideal, x_degree: i64) -> Result<Ideal> {
    if !i.min_gens().contains(&x_degree) {
        return Err(Error::NotAGenerator(x_degree));
    }
    let sg = i.semigroup().clone();
    let px = Ideal::principal(&sg, x_degree);
    let col = Ideal::colon(&px, i)?;
    let prod = Ideal::product(i, &col)?;
    Ideal::colon(&prod, &px)
}

/// Ulrich test for an m-primary monomial ideal: t^e I = m I for the minimal
/// homogeneous reduction t^e; equivalently mu(I) = e.
pub fn is_ulrich_ideal(i: &Ideal) -> Result<bool> {
    if !i.is_inside_ring() {
        return Err(Error::NotInsideRing);
    }
    let sg = i.semigroup().clone();
    let e = sg.multiplicity();
    let lhs = i.shift(e);
    let rhs = Ideal::product(&Ideal::maximal(&sg), i)?;
    let ulrich = lhs == rhs;
    debug_assert_eq!(ulrich, i.num_gens() as i64 == e);
    Ok(ulrich)
}

/// The set-arithmetic conditions (1), (2), (8), (14), (15) of the sixteen
/// condition equivalence for ideals over a ring of minimal multiplicity.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SemigroupReport38 {
    pub c1_colon_is_m: bool,
    pub c2_trace_is_m: bool,
    pub c8_y_in_colon: bool,
    pub c14_y_in_trace: bool,
    pub c15_iso_ideal_containing_y: bool,
    pub all_agree: bool,
}

pub fn theorem38_semigroup_report(i: &Ideal) -> Result<SemigroupReport38> {
    let sg = i.semigroup().clone();
    if !sg.has_minimal_multiplicity() {
        return Err(Error::NotMinimalMultiplicity);
    }
    if i.is_principal() {
        return Err(Error::PrincipalIdeal);
    }
    if !i.is_inside_ring() {
        return Err(Error::NotInsideRing);
    }
    let e = sg.multiplicity();
    let m = Ideal::maximal(&sg);
    let x1 = i.min_gens()[0];
    let colon = Ideal::colon(&Ideal::principal(&sg, x1), i)?;
    let trace = trace_ideal(i);
    let c1 = colon == m;
    let c2 = trace == m;
    let c8 = colon.contains(e);
    let c14 = trace.contains(e);
    // L = shift(I, s) with L inside R and t^e in L
    let c15 = (-i.offset()..=2 * sg.conductor()).any(|s| {
        let l = i.shift(s);
        l.is_inside_ring() && l.contains(e)
    });
    let all = [c1, c2, c8, c14, c15];
    Ok(SemigroupReport38 {
        c1_colon_is_m: c1,
        c2_trace_is_m: c2,
        c8_y_in_colon: c8,
        c14_y_in_trace: c14,
        c15_iso_ideal_containing_y: c15,
        all_agree: all.iter().all(|&b| b) || all.iter().all(|&b| !b),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GorensteinClass {
    Gorenstein,
    NearlyGorenstein,
    FarFlung,
    Intermediate,
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub class: GorensteinClass,
    pub gorenstein: bool,
    /// m inside tr(omega)
    pub nearly: bool,
    /// m inside (x_1 : omega) for the lowest-degree canonical generator x_1
    pub almost: bool,
    /// tr(omega) equals the conductor ideal
    pub far_flung: bool,
    pub canonical_gens: Vec<i64>,
    pub trace_gens: Vec<i64>,
}

pub fn classify(sg: &Arc<NumericalSemigroup>) -> Result<Classification> {
    if sg.is_dvr() {
        return Err(Error::DvrInput);
    }
    let omega = canonical_ideal(sg).ideal;
    let trace = trace_ideal(&omega);
    let m = Ideal::maximal(sg);
    let gorenstein = sg.cm_type() == 1;
    debug_assert_eq!(gorenstein, trace == Ideal::unit(sg));
    let nearly = m.min_gens().iter().all(|&a| trace.contains(a));
    let x1 = omega.min_gens()[0];
    let colon = Ideal::colon(&Ideal::principal(sg, x1), &omega)?;
    let almost = m.min_gens().iter().all(|&a| colon.contains(a));
    let far_flung = trace == Ideal::conductor(sg);
    let class = if gorenstein {
        GorensteinClass::Gorenstein
    } else if nearly {
        GorensteinClass::NearlyGorenstein
    } else if far_flung {
        GorensteinClass::FarFlung
    } else {
        GorensteinClass::Intermediate
    };
    Ok(Classification {
        class,
        gorenstein,
        nearly,
        almost,
        far_flung,
        canonical_gens: omega.min_gens().to_vec(),
        trace_gens: trace.min_gens().to_vec(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealJson {
    pub min_gens: Vec<i64>,
    pub offset: i64,
    pub full_from: i64,
    pub inside_ring: bool,
}

impl Ideal {
    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            min_gens: self.min_gens.clone(),
            offset: self.offset,
            full_from: self.full_from,
            inside_ring: self.is_inside_ring(),
        }
    }
}
