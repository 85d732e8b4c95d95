//! Degreewise models of the Koszul objects attached to a monomial ideal.
//!
//! Fix I = (t^{x_1}, ..., t^{x_n}) inside R with x_1 < ... < x_n and write
//! F = (+) R(-x_i). Every graded piece of R is at most one-dimensional, so
//! the degree-d component of F has basis indexed by the slots
//! {i : d - x_i in S}, and:
//!
//!   * Z_1(I)_d is the hyperplane {sum of coordinates = 0} on those slots;
//!   * (Z_1 cap IF)_d is the same hyperplane on {i : d - x_i in I};
//!   * B_1(I)_d is spanned by e_j - e_i over pairs with d - x_i - x_j in S;
//!   * (I Z_1)_d is spanned by e_p - e_q over pairs admitting a common
//!     w in I with d - w - x_p and d - w - x_q in S.
//!
//! Quotient dimensions are component counts of the edge graphs, and
//! annihilation by t^a is connectivity of the component representatives at
//! degree d + a. This realizes Tor_1(I, R/I) = (Z_1 cap IF)/IZ_1 and
//! delta_1(I) = (Z_1 cap IF)/B_1 exactly, with no truncation cap.
//!
//! Ext groups into a fractional ideal J reduce to scalar data the same way:
//! a degree-sigma homomorphism out of a torsion-free submodule M of a free
//! module is a constant coefficient vector c with c . alpha(z) = 0 for
//! every generator z whose image degree misses J; two homs agree iff their
//! difference kills every generator.

use crate::ideal::Ideal;
use crate::linalg::{kernel_basis, neg_mod, PotUf, RowSpace};
use crate::matrix::{GradedMatrix, HVec};
use crate::semigroup::NumericalSemigroup;
use std::collections::BTreeMap;
use std::sync::Arc;

pub struct KoszulModel {
    pub ideal: Ideal,
    /// minimal generator degrees of the ideal, strictly increasing
    pub x: Vec<i64>,
    sg: Arc<NumericalSemigroup>,
    /// witness bitsets for the IZ edges: wset[delta - w_base] has bit
    /// (w - w_base) set iff w in I and delta - w in S. An IZ edge (p, q)
    /// at degree d is a nonempty intersection of the rows for d - x_p and
    /// d - x_q.
    w_base: i64,
    wset: Vec<Vec<u64>>,
}

/// Plain union-find for the +1/-1 edge graphs (always consistent).
pub struct Uf {
    parent: Vec<usize>,
}

impl Uf {
    pub fn new(n: usize) -> Self {
        Uf {
            parent: (0..n).collect(),
        }
    }
    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Numerator {
    /// Z_1 cap IF (for Tor_1 and delta_1)
    CyclesInIF,
    /// all of Z_1 (for H_1)
    Cycles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Denominator {
    Boundaries,
    IdealTimesCycles,
}

impl KoszulModel {
    pub fn new(ideal: &Ideal) -> Self {
        let x = ideal.min_gens().to_vec();
        let sg = ideal.semigroup().clone();
        let w_base = ideal.offset();
        let hi = ideal.offset() + sg.conductor() + 2 * x.last().unwrap() + 2 * sg.max_generator();
        let delta_hi = hi - x[0];
        let wmax = (delta_hi - w_base + 1).max(1) as usize;
        let words = wmax.div_ceil(64);
        let mut wset = Vec::with_capacity((delta_hi - w_base + 1).max(0) as usize);
        for delta in w_base..=delta_hi {
            let mut row = vec![0u64; words];
            let mut w = w_base;
            while w <= delta {
                if ideal.contains(w) && sg.contains(delta - w) {
                    let k = (w - w_base) as usize;
                    row[k / 64] |= 1 << (k % 64);
                }
                w += 1;
            }
            wset.push(row);
        }
        KoszulModel {
            x,
            sg,
            ideal: ideal.clone(),
            w_base,
            wset,
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    fn xmax(&self) -> i64 {
        *self.x.last().unwrap()
    }

    /// Sweep window: all four subquotients vanish at or above
    /// offset(I) + c + 2 x_max (every edge exists there), and below x_1.
    pub fn sweep_range(&self) -> (i64, i64) {
        let lo = self.x[0];
        let hi =
            self.ideal.offset() + self.sg.conductor() + 2 * self.xmax() + self.sg.max_generator();
        (lo, hi)
    }

    pub fn slots(&self, d: i64) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.sg.contains(d - self.x[i]))
            .collect()
    }

    pub fn islots(&self, d: i64) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.ideal.contains(d - self.x[i]))
            .collect()
    }

    fn b_edge(&self, d: i64, i: usize, j: usize) -> bool {
        self.sg.contains(d - self.x[i] - self.x[j])
    }

    fn iz_edge(&self, d: i64, p: usize, q: usize) -> bool {
        let (da, db) = (d - self.x[p] - self.w_base, d - self.x[q] - self.w_base);
        if da < 0 || db < 0 {
            return false;
        }
        match (self.wset.get(da as usize), self.wset.get(db as usize)) {
            (Some(ra), Some(rb)) => ra.iter().zip(rb.iter()).any(|(&a, &b)| a & b != 0),
            _ => {
                // beyond the precomputed table every edge exists
                let top = d - self.x[p].max(self.x[q]);
                let mut w = self.ideal.offset();
                while w <= top {
                    if self.ideal.contains(w)
                        && self.sg.contains(d - w - self.x[p])
                        && self.sg.contains(d - w - self.x[q])
                    {
                        return true;
                    }
                    w += 1;
                }
                false
            }
        }
    }

    /// Union-find of the denominator span on all n slots at degree d.
    fn den_uf(&self, d: i64, den: Denominator) -> Uf {
        let mut uf = Uf::new(self.n());
        let verts = self.slots(d);
        for (ai, &i) in verts.iter().enumerate() {
            for &j in verts.iter().skip(ai + 1) {
                let joined = match den {
                    Denominator::Boundaries => self.b_edge(d, i, j),
                    Denominator::IdealTimesCycles => self.iz_edge(d, i, j),
                };
                if joined {
                    uf.union(i, j);
                }
            }
        }
        uf
    }

    /// One representative per component of the numerator vertex set under
    /// the denominator graph at degree d, smallest slot first.
    fn quotient_reps(&self, d: i64, num: Numerator, den: Denominator) -> Vec<usize> {
        let verts = match num {
            Numerator::CyclesInIF => self.islots(d),
            Numerator::Cycles => self.slots(d),
        };
        if verts.is_empty() {
            return Vec::new();
        }
        let mut uf = self.den_uf(d, den);
        let mut reps: Vec<usize> = Vec::new();
        let mut roots: Vec<usize> = Vec::new();
        for &v in &verts {
            let r = uf.find(v);
            if !roots.contains(&r) {
                roots.push(r);
                reps.push(v);
            }
        }
        reps
    }

    /// Degreewise dimensions of numerator/denominator: component count - 1.
    pub fn subquotient_dims(&self, num: Numerator, den: Denominator) -> BTreeMap<i64, usize> {
        let (lo, hi) = self.sweep_range();
        let mut dims = BTreeMap::new();
        for d in lo..=hi {
            let dim = self.quotient_reps(d, num, den).len().saturating_sub(1);
            if dim > 0 {
                dims.insert(d, dim);
            }
        }
        dims
    }

    /// Degreewise dimensions of B_1 / IZ_1: #IZ-components - #B-components.
    pub fn b1_mod_iz1_dims(&self) -> BTreeMap<i64, usize> {
        let (lo, hi) = self.sweep_range();
        let mut dims = BTreeMap::new();
        for d in lo..=hi {
            let b = self
                .quotient_reps(d, Numerator::Cycles, Denominator::Boundaries)
                .len();
            let iz = self
                .quotient_reps(d, Numerator::Cycles, Denominator::IdealTimesCycles)
                .len();
            if iz > b {
                dims.insert(d, iz - b);
            }
        }
        dims
    }

    /// Does t^a kill numerator/denominator? Classes at degree d are spanned
    /// by differences of component representatives, which die iff the
    /// representatives merge in the denominator graph at degree d + a.
    pub fn killed_by(&self, a: i64, num: Numerator, den: Denominator) -> bool {
        let (lo, hi) = self.sweep_range();
        for d in lo..=hi {
            let reps = self.quotient_reps(d, num, den);
            if reps.len() > 1 {
                let mut uf = self.den_uf(d + a, den);
                let r0 = uf.find(reps[0]);
                if reps[1..].iter().any(|&r| uf.find(r) != r0) {
                    return false;
                }
            }
        }
        true
    }

    pub fn killed_by_all(&self, mults: &[i64], num: Numerator, den: Denominator) -> bool {
        mults.iter().all(|&a| self.killed_by(a, num, den))
    }

    /// t^a B_1 inside IZ_1 for every multiplier a: each boundary generator
    /// x_i e_j - x_j e_i times t^a must land in the IZ_1 span at its degree.
    pub fn b1_multiples_in_iz1(&self, multipliers: &[i64]) -> bool {
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                for &a in multipliers {
                    let d = self.x[i] + self.x[j] + a;
                    let mut uf = self.den_uf(d, Denominator::IdealTimesCycles);
                    if uf.find(i) != uf.find(j) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// I H_1 = 0, i.e. every IZ edge joins slots already joined by B_1.
    pub fn ideal_kills_h1(&self) -> bool {
        let (lo, hi) = self.sweep_range();
        for d in lo..=hi {
            let verts = self.slots(d);
            let mut bf = self.den_uf(d, Denominator::Boundaries);
            for (ai, &i) in verts.iter().enumerate() {
                for &j in verts.iter().skip(ai + 1) {
                    if self.iz_edge(d, i, j) && bf.find(i) != bf.find(j) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Union-find of the m Z_1 graph at degree d: slots p, q are joined
    /// when they coexist in slots(d - a) for some generator a (then
    /// t^a (e_p - e_q) witnesses membership in m Z_1).
    pub fn mz1_uf(&self, d: i64) -> Uf {
        let mut uf = Uf::new(self.n());
        for &a in self.sg.generators() {
            let lower = self.slots(d - a);
            for win in lower.windows(2) {
                uf.union(win[0], win[1]);
            }
        }
        uf
    }

    /// Minimal generators of Z_1(I), as two-entry vectors e_p - e_q. New
    /// generators at degree d biject with the extra components of the
    /// m Z_1 graph.
    pub fn z1_min_gens(&self, p: u32) -> Vec<HVec> {
        let (lo, hi) = self.sweep_range();
        let mut gens: Vec<HVec> = Vec::new();
        for d in lo..=hi {
            let verts = self.slots(d);
            if verts.len() < 2 {
                continue;
            }
            let mut uf = self.mz1_uf(d);
            let mut reps: Vec<usize> = Vec::new();
            let mut roots: Vec<usize> = Vec::new();
            for &v in &verts {
                let r = uf.find(v);
                if !roots.contains(&r) {
                    roots.push(r);
                    reps.push(v);
                }
            }
            for &r in reps.iter().skip(1) {
                gens.push(HVec::new(d, vec![(reps[0], 1), (r, neg_mod(1, p))]));
            }
        }
        gens
    }

    /// The same generators packaged as a syzygy matrix (a minimal
    /// presentation of I with two-entry columns).
    pub fn z1_matrix(&self, p: u32) -> GradedMatrix {
        let gens = self.z1_min_gens(p);
        let mut m = GradedMatrix::zero(self.x.clone(), gens.iter().map(|g| g.deg).collect());
        for (col, g) in gens.iter().enumerate() {
            for &(slot, c) in &g.terms {
                m.set_monomial(slot, col, g.deg - self.x[slot], c);
            }
        }
        m
    }

    /// Boundary generators x_i e_j - x_j e_i for i < j.
    pub fn b1_gens(&self, p: u32) -> Vec<HVec> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                out.push(HVec::new(
                    self.x[i] + self.x[j],
                    vec![(j, 1), (i, neg_mod(1, p))],
                ));
            }
        }
        out
    }
}

/// A graded torsion-free submodule of a free module (+) R(-shifts[k]),
/// given by homogeneous generators. Ideals and syzygy modules both fit.
#[derive(Debug, Clone)]
pub struct SubFree {
    pub shifts: Vec<i64>,
    pub gens: Vec<HVec>,
}

impl SubFree {
    pub fn from_ideal(i: &Ideal) -> SubFree {
        SubFree {
            shifts: vec![0],
            gens: i
                .min_gens()
                .iter()
                .map(|&g| HVec::new(g, vec![(0, 1)]))
                .collect(),
        }
    }

    pub fn omega1(model: &KoszulModel, p: u32) -> SubFree {
        SubFree {
            shifts: model.x.clone(),
            gens: model.z1_min_gens(p),
        }
    }

    pub fn gen_degrees(&self) -> Vec<i64> {
        self.gens.iter().map(|g| g.deg).collect()
    }

    pub fn all_two_sparse(&self) -> bool {
        self.gens.iter().all(|g| g.terms.len() <= 2)
    }

    /// Presentation matrix: columns are the generators.
    pub fn presentation(&self) -> GradedMatrix {
        let mut m = GradedMatrix::zero(self.shifts.clone(), self.gen_degrees());
        for (col, g) in self.gens.iter().enumerate() {
            for &(slot, c) in &g.terms {
                m.set_monomial(slot, col, g.deg - self.shifts[slot], c);
            }
        }
        m
    }
}

/// Membership target for Hom computations: R itself or a fractional ideal.
#[derive(Clone, Copy)]
pub enum HomTarget<'a> {
    Ring(&'a NumericalSemigroup),
    Frac(&'a Ideal),
}

impl<'a> HomTarget<'a> {
    pub fn contains(&self, d: i64) -> bool {
        match self {
            HomTarget::Ring(sg) => sg.contains(d),
            HomTarget::Frac(i) => i.contains(d),
        }
    }
    pub fn full_from(&self) -> i64 {
        match self {
            HomTarget::Ring(sg) => sg.conductor(),
            HomTarget::Frac(i) => i.full_from(),
        }
    }
    pub fn offset(&self) -> i64 {
        match self {
            HomTarget::Ring(_) => 0,
            HomTarget::Frac(i) => i.offset(),
        }
    }
}

/// Basis of A_sigma = {c : c . alpha(z) = 0 whenever sigma + deg z misses
/// J}, cut out in k^{|shifts of the cover|}. Potential union-find when all
/// generators are two-sparse, dense elimination otherwise.
fn a_sigma_basis(m: &SubFree, j: &HomTarget, sigma: i64, p: u32) -> Vec<Vec<u32>> {
    let w = m.shifts.len();
    let active: Vec<&HVec> = m
        .gens
        .iter()
        .filter(|g| !j.contains(sigma + g.deg))
        .collect();
    coeff_nullspace(&active, w, p)
}

fn coeff_nullspace(gens: &[&HVec], w: usize, p: u32) -> Vec<Vec<u32>> {
    if gens.iter().all(|g| g.terms.len() <= 2) {
        let mut uf = PotUf::new(p, w);
        for g in gens {
            match g.terms.as_slice() {
                [(u, cu), (v, cv)] => uf.add_pair(*u, *cu, *v, *cv),
                [(u, _)] => uf.ground(*u),
                [] => {}
                _ => unreachable!(),
            }
        }
        let mut comps: Vec<(usize, Vec<(usize, u32)>)> = Vec::new();
        for v in 0..w {
            let (r, pot) = uf.find(v);
            match comps.iter_mut().find(|(root, _)| *root == r) {
                Some((_, members)) => members.push((v, pot)),
                None => comps.push((r, vec![(v, pot)])),
            }
        }
        comps
            .into_iter()
            .filter(|(r, _)| !uf.is_grounded(*r))
            .map(|(_, members)| {
                let mut vec = vec![0u32; w];
                for (v, pot) in members {
                    vec[v] = pot;
                }
                vec
            })
            .collect()
    } else {
        let rows: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| {
                let mut r = vec![0u32; w];
                for &(slot, c) in &g.terms {
                    r[slot] = c;
                }
                r
            })
            .collect();
        kernel_basis(p, &rows, w)
    }
}

#[derive(Debug, Clone)]
pub struct ExtData {
    pub dims: BTreeMap<i64, usize>,
    pub total: usize,
    pub killed_by_y: bool,
    pub killed_by_m: bool,
}

/// Ext^1 of the module covered by F' = (+) R(-deg g) with syzygy module
/// `z` (the generators of z live in F'):
///
///   Ext^1 = Hom(z, J) / image of Hom(F', J),
///
/// computed per hom degree sigma as A_sigma / (B_sigma + A_inf) where
/// B_sigma is the coordinate subspace on {k : sigma + deg g_k in J}.
/// Multiplication by t^a fixes the coefficient vector, so annihilation is
/// containment A_sigma inside B_{sigma+a} + A_inf.
pub fn ext1_from_syzygy(sg: &NumericalSemigroup, z: &SubFree, j: &HomTarget, p: u32) -> ExtData {
    let cover_shifts = &z.shifts;
    let w = cover_shifts.len();
    if z.gens.is_empty() {
        // free module: Ext^1 = 0
        return ExtData {
            dims: BTreeMap::new(),
            total: 0,
            killed_by_y: true,
            killed_by_m: true,
        };
    }
    let max_deg = z.gens.iter().map(|g| g.deg).max().unwrap();
    let min_cover = cover_shifts.iter().copied().min().unwrap();
    let lo = j.offset() - max_deg;
    let hi = j.full_from() - min_cover;
    let a_inf = coeff_nullspace(&z.gens.iter().collect::<Vec<_>>(), w, p);

    let b_plus_ainf = |sigma: i64| -> RowSpace {
        let mut v = RowSpace::new(p, w);
        for b in &a_inf {
            v.insert(b.clone());
        }
        for (k, &s) in cover_shifts.iter().enumerate() {
            if j.contains(sigma + s) {
                let mut e = vec![0u32; w];
                e[k] = 1;
                v.insert(e);
            }
        }
        v
    };

    let mut dims = BTreeMap::new();
    let mut total = 0usize;
    let mut support: Vec<(i64, Vec<Vec<u32>>)> = Vec::new();
    for sigma in lo..=hi {
        let a_basis = a_sigma_basis(z, j, sigma, p);
        let mut v = b_plus_ainf(sigma);
        let mut grow = Vec::new();
        for c in &a_basis {
            if v.insert(c.clone()) {
                grow.push(c.clone());
            }
        }
        if !grow.is_empty() {
            dims.insert(sigma, grow.len());
            total += grow.len();
            support.push((sigma, a_basis));
        }
    }

    let killed_for = |a: i64| -> bool {
        support.iter().all(|(sigma, basis)| {
            let v = b_plus_ainf(sigma + a);
            basis.iter().all(|c| v.contains(c))
        })
    };
    let killed_by_y = killed_for(sg.multiplicity());
    let killed_by_m = killed_by_y && sg.generators().iter().all(|&a| killed_for(a));
    ExtData {
        dims,
        total,
        killed_by_y,
        killed_by_m,
    }
}

/// Trace of the module generated by `m.gens` inside its ambient free
/// module: the ideal generated by the degrees sigma + deg h over all homs
/// of degree sigma not vanishing on h. Queried through membership of ring
/// elements; `contains(a)` answers a in tr(M).
pub struct SubmoduleTrace<'a> {
    m: &'a SubFree,
    p: u32,
    sparse: bool,
    uf_cache: std::cell::RefCell<BTreeMap<i64, PotUf>>,
    rs_cache: std::cell::RefCell<BTreeMap<i64, RowSpace>>,
}

impl<'a> SubmoduleTrace<'a> {
    pub fn new(m: &'a SubFree, p: u32) -> Self {
        SubmoduleTrace {
            sparse: m.all_two_sparse(),
            m,
            p,
            uf_cache: std::cell::RefCell::new(BTreeMap::new()),
            rs_cache: std::cell::RefCell::new(BTreeMap::new()),
        }
    }

    /// Does alpha(h) lie in the span of {alpha(z) : sigma + deg z not in S}?
    fn in_active_span(&self, sg: &NumericalSemigroup, sigma: i64, h: &HVec) -> bool {
        let active = |g: &&HVec| !sg.contains(sigma + g.deg);
        if self.sparse {
            let mut cache = self.uf_cache.borrow_mut();
            let uf = cache.entry(sigma).or_insert_with(|| {
                let mut uf = PotUf::new(self.p, self.m.shifts.len());
                for g in self.m.gens.iter().filter(|g| active(g)) {
                    match g.terms.as_slice() {
                        [(u, cu), (v, cv)] => uf.add_pair(*u, *cu, *v, *cv),
                        [(u, _)] => uf.ground(*u),
                        _ => {}
                    }
                }
                uf
            });
            uf.in_span(&h.terms)
        } else {
            let w = self.m.shifts.len();
            let mut cache = self.rs_cache.borrow_mut();
            let rs = cache.entry(sigma).or_insert_with(|| {
                let mut rs = RowSpace::new(self.p, w);
                for g in self.m.gens.iter().filter(|g| active(g)) {
                    let mut r = vec![0u32; w];
                    for &(slot, c) in &g.terms {
                        r[slot] = c;
                    }
                    rs.insert(r);
                }
                rs
            });
            let mut dense = vec![0u32; w];
            for &(slot, c) in &h.terms {
                dense[slot] = c;
            }
            rs.contains(&dense)
        }
    }

    /// Is t^a in tr_R(M)? True iff some trace generator degree tau <= a has
    /// a - tau in S, where tau = sigma + deg h is contributed whenever
    /// alpha(h) escapes the active span at sigma.
    pub fn contains(&self, sg: &NumericalSemigroup, a: i64) -> bool {
        for tau in 0..=a {
            if !sg.contains(a - tau) {
                continue;
            }
            for h in &self.m.gens {
                let sigma = tau - h.deg;
                if !self.in_active_span(sg, sigma, h) {
                    return true;
                }
            }
        }
        false
    }
}
