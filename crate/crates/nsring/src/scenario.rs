//! Named verification scenarios with baked data: the worked syzygy
//! matrices of the far-flung counterexample ring, the char-2 example where
//! m kills delta_1 without the trace reaching m, the Z_1(m) isomorphism
//! dichotomy over a bundled semigroup list, and the far-flung family.
//!
//! Matrix entries are stored as (row, col, sign, t-degree) after the
//! variable-to-degree substitution; the homogeneity checks on load catch
//! transcription slips.

use crate::engine::{slice_at, MemberSet};
use crate::error::{Error, Result};
use crate::homology::{
    check_z1_iso_shifted_m, delta1, ext_i, ext_via_resolution, question12_check, theorem38_battery,
    tor1_self, trace_of_module, ExtTarget,
};
use crate::ideal::{canonical_ideal, classify, trace_ideal, Ideal};
use crate::koszul::KoszulModel;
use crate::linalg::RowSpace;
use crate::matrix::GradedMatrix;
use crate::ring::TruncatedRing;
use crate::semigroup::NumericalSemigroup;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, Clone, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub field: u32,
    pub assertions: Vec<Assertion>,
    pub passed: bool,
}

impl ScenarioReport {
    fn new(name: &str, field: u32) -> Self {
        ScenarioReport {
            name: name.into(),
            field,
            assertions: Vec::new(),
            passed: true,
        }
    }
    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.assertions.push(Assertion {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

pub const SCENARIOS: &[&str] = &[
    "section-5",
    "example-4-12",
    "corollary-3-9",
    "far-flung-family",
];

pub fn run_scenario(name: &str, p: u32) -> Result<ScenarioReport> {
    match name {
        "section-5" => section5(p),
        "example-4-12" => example_4_12(p),
        "corollary-3-9" => corollary_3_9(p),
        "far-flung-family" => far_flung_family(p),
        other => Err(Error::UnknownScenario(other.to_string())),
    }
}

#[derive(Deserialize)]
struct BakedMatrix {
    row_shifts: Vec<i64>,
    col_shifts: Vec<i64>,
    entries: Vec<(usize, usize, i32, i64)>,
}

#[derive(Deserialize)]
struct Section5Data {
    semigroup: Vec<i64>,
    canonical: Vec<i64>,
    l_ideal: Vec<i64>,
    relations: Vec<(i64, i64)>,
    s: BakedMatrix,
    t: BakedMatrix,
    p_mat: BakedMatrix,
    theta: BakedMatrix,
}

fn bake(m: &BakedMatrix, p: u32) -> GradedMatrix {
    let mut out = GradedMatrix::zero(m.row_shifts.clone(), m.col_shifts.clone());
    for &(i, j, sign, deg) in &m.entries {
        let coef = if sign >= 0 { 1 } else { p - 1 };
        out.set_monomial(i, j, deg, coef);
    }
    out
}

fn section5_data() -> Section5Data {
    serde_json::from_str(include_str!("../data/section5.json"))
        .expect("baked section-5 data parses")
}

/// Degreewise rank equality of im(gens) and ker(map): since the columns
/// already lie in the kernel, equal ranks over the window mean the columns
/// generate it.
fn generates_kernel(
    ring: &TruncatedRing,
    map: &GradedMatrix,
    gens: &GradedMatrix,
    lo: i64,
    hi: i64,
) -> bool {
    for d in lo..=hi {
        let ks = slice_at(ring, map, d, MemberSet::Ring, MemberSet::Ring);
        let rows: Vec<Vec<u32>> = (0..ks.tgt.len()).map(|r| ks.mat[r].clone()).collect();
        let ker = crate::linalg::kernel_basis(ring.prime(), &rows, ks.src.len());
        let gs = slice_at(ring, gens, d, MemberSet::Ring, MemberSet::Ring);
        debug_assert_eq!(gs.tgt, ks.src);
        let mut span = RowSpace::new(ring.prime(), ks.src.len());
        for c in 0..gs.src.len() {
            let col: Vec<u32> = (0..gs.tgt.len()).map(|r| gs.mat[r][c]).collect();
            span.insert(col);
        }
        if span.rank() != ker.len() {
            return false;
        }
    }
    true
}

fn section5(p: u32) -> Result<ScenarioReport> {
    let data = section5_data();
    let mut rep = ScenarioReport::new("section-5", p);
    let sg = Arc::new(NumericalSemigroup::new(&data.semigroup)?);
    let ring = TruncatedRing::new(&sg, p, None)?;
    let guard = sg.max_generator();

    // (a) defining relations collapse under the degree map
    let rel_ok = data
        .relations
        .iter()
        .all(|&(dplus, dminus)| dplus == dminus && sg.contains(dplus));
    rep.check("relations-vanish", rel_ok, "binomials map to t^d - t^d = 0");

    let s_mat = bake(&data.s, p);
    let t_mat = bake(&data.t, p);
    let p_mat = bake(&data.p_mat, p);
    let theta = bake(&data.theta, p);
    for (nm, m) in [
        ("S", &s_mat),
        ("T", &t_mat),
        ("P", &p_mat),
        ("theta", &theta),
    ] {
        rep.check(
            &format!("baked-{nm}-homogeneous"),
            m.validate(&sg).is_ok(),
            "entries homogeneous of the right degree",
        );
    }

    let i = Ideal::from_degrees(&sg, &data.canonical)?;
    let can = canonical_ideal(&sg);
    rep.check(
        "canonical-ideal",
        can.ideal == i && can.shift == 10 && can.fractional_gens == vec![0, 1, 2],
        format!(
            "canonical = {:?} (shift {})",
            can.ideal.min_gens(),
            can.shift
        ),
    );

    // (b) the baked S is a minimal presentation: row * S = 0, 8 two-entry
    // columns, and its columns generate the kernel degreewise
    let row = GradedMatrix::generator_row(i.min_gens());
    rep.check(
        "S-columns-are-syzygies",
        row.mul(&s_mat, p).is_zero(),
        "row * S = 0",
    );
    rep.check(
        "S-two-entry-columns",
        (0..s_mat.ncols()).all(|j| s_mat.column_entry_count(j) == 2),
        "every column has exactly two nonzero entries",
    );
    let model = KoszulModel::new(&i);
    let engine_z1 = model.z1_matrix(p);
    rep.check(
        "S-matches-engine-syzygy",
        engine_z1.ncols() == 8
            && s_mat.ncols() == 8
            && {
                let mut a = s_mat.col_shifts.clone();
                let mut b = engine_z1.col_shifts.clone();
                a.sort_unstable();
                b.sort_unstable();
                a == b
            }
            && generates_kernel(&ring, &row, &s_mat, 10, ring.cap() - guard),
        "8 columns, same degrees, same degreewise span",
    );

    // (c) second syzygy: S * T = 0, 24 columns generating ker(S)
    rep.check(
        "T-columns-are-syzygies",
        s_mat.mul(&t_mat, p).is_zero(),
        "S * T = 0",
    );
    let big = ring.with_cap(2 * ring.cap());
    rep.check(
        "T-generates-ker-S",
        t_mat.ncols() == 24 && generates_kernel(&big, &s_mat, &t_mat, 16, ring.cap() - guard),
        "24 columns spanning the kernel of S degreewise",
    );

    // (d) ker(T^T) = column space of P
    let tt = t_mat.transpose();
    rep.check(
        "P-columns-in-ker",
        tt.mul(&p_mat, p).is_zero(),
        "T^T * P = 0",
    );
    rep.check(
        "P-spans-ker-TT",
        generates_kernel(&big, &tt, &p_mat, -16, 20),
        "P generates ker(T^T) degreewise",
    );

    // (e) x and y multiply ker(T^T) into im(S^T)
    let st = s_mat.transpose();
    let mut xy_ok = true;
    for &a in &[5i64, 6] {
        for col in 0..p_mat.ncols() {
            let sigma = p_mat.col_shifts[col] + a;
            let im = slice_at(&big, &st, sigma, MemberSet::Ring, MemberSet::Ring);
            let mut span = RowSpace::new(p, im.tgt.len());
            for c in 0..im.src.len() {
                let v: Vec<u32> = (0..im.tgt.len()).map(|r| im.mat[r][c]).collect();
                span.insert(v);
            }
            // t^a * (column of P) in the Hom(F_1) component at sigma
            let mut dense = vec![0u32; im.tgt.len()];
            for r in 0..p_mat.nrows() {
                let e = p_mat.entry(r, col);
                if let Some(&(_, c)) = e.0.first() {
                    if let Some(k) = im.tgt.iter().position(|&s| s == r) {
                        dense[k] = c;
                    } else {
                        xy_ok = false;
                    }
                }
            }
            if !span.contains(&dense) {
                xy_ok = false;
            }
        }
    }
    rep.check(
        "xy-kill-ext1",
        xy_ok,
        "x ker(T^T) and y ker(T^T) inside im(S^T)",
    );

    // (f) z, w annihilate Ext^1 via trace membership
    let tr = trace_ideal(&i);
    rep.check(
        "zw-in-trace",
        tr.contains(13) && tr.contains(14),
        "t^13, t^14 in tr(I)",
    );

    // (g) tr(I) equals the conductor
    rep.check(
        "trace-is-conductor",
        tr == Ideal::conductor(&sg),
        format!("tr(I) = {:?}", tr.min_gens()),
    );

    // (h) Omega^1(I) = L + L via the baked theta
    let l = Ideal::from_degrees(&sg, &data.l_ideal)?;
    rep.check(
        "theta-kills-T",
        theta.mul(&t_mat, p).is_zero(),
        "theta * T = 0",
    );
    let mut theta_surj = true;
    for (r, &sigma) in theta.row_shifts.iter().enumerate() {
        for &g in l.min_gens() {
            let d = g + sigma;
            let im = slice_at(&big, &theta, d, MemberSet::Ring, MemberSet::InIdeal(&l));
            let mut span = RowSpace::new(p, im.tgt.len());
            for c in 0..im.src.len() {
                let v: Vec<u32> = (0..im.tgt.len()).map(|rr| im.mat[rr][c]).collect();
                span.insert(v);
            }
            let mut dense = vec![0u32; im.tgt.len()];
            match im.tgt.iter().position(|&s| s == r) {
                Some(k) => dense[k] = 1,
                None => theta_surj = false,
            }
            if !span.contains(&dense) {
                theta_surj = false;
            }
        }
    }
    let mut hilbert_ok = true;
    {
        let (lo, hi) = model.sweep_range();
        for d in lo..=hi {
            let z_dim = model.slots(d).len().saturating_sub(1);
            let l_dim = [12i64, 11].iter().filter(|&&s| l.contains(d - s)).count();
            if z_dim != l_dim {
                hilbert_ok = false;
            }
        }
    }
    rep.check(
        "omega1-is-L-squared",
        theta_surj && hilbert_ok,
        "theta surjective onto L(-12)+L(-11) with matching Hilbert functions",
    );

    // (i) tr(L) = m, by sets and by presentation entries
    let m_ideal = Ideal::maximal(&sg);
    let l_pres = KoszulModel::new(&l).z1_matrix(p);
    rep.check(
        "trace-of-L-is-m",
        trace_ideal(&l) == m_ideal && trace_of_module(&ring, &l_pres)? == m_ideal,
        "both trace routes give m",
    );

    // Ext^1 annihilation and the full verdict
    let e1_fast = ext_i(&ring, &i, ExtTarget::R, 1, p)?;
    let e1_res = ext_via_resolution(&ring, &i, ExtTarget::R, 1)?;
    rep.check(
        "m-kills-ext1",
        e1_fast.killed_by_m && e1_res.killed_by_m && e1_fast.total > 0,
        format!("dim Ext^1(I,R) = {} on both routes", e1_fast.total),
    );
    let q = question12_check(&ring, &sg, 3, p)?;
    rep.check(
        "counterexample-verdict",
        q.is_counterexample && q.cert_j == Some(1) && !q.nearly_gorenstein,
        "m Ext^i(omega, R) = 0 certified at j = 1, ring not nearly Gorenstein",
    );
    Ok(rep)
}

fn example_4_12(p: u32) -> Result<ScenarioReport> {
    let mut rep = ScenarioReport::new("example-4-12", p);
    let sg = Arc::new(NumericalSemigroup::new(&[4, 9, 14, 15])?);
    let ring = TruncatedRing::new(&sg, p, None)?;
    rep.check(
        "pseudo-frobenius",
        sg.pseudo_frobenius() == [5, 10, 11] && sg.cm_type() == 3,
        "PF = {5, 10, 11}",
    );
    rep.check(
        "minimal-multiplicity",
        sg.has_minimal_multiplicity(),
        "e = 4 = embdim",
    );
    let can = canonical_ideal(&sg);
    rep.check(
        "canonical-ideal",
        can.ideal.min_gens() == [8, 9, 14] && can.fractional_gens == vec![0, 1, 6],
        "t^8 (1, t, t^6) = (t^8, t^9, t^14)",
    );
    let i = can.ideal;
    let d = delta1(&i)?;
    rep.check(
        "m-kills-delta1",
        d.killed_by_m && d.total > 0,
        format!("dim delta_1 = {} and m delta_1 = 0", d.total),
    );
    let tr = trace_ideal(&i);
    let expect = Ideal::from_degrees(&sg, &[8, 9, 14, 15])?;
    rep.check(
        "trace-value",
        tr == expect && tr != Ideal::maximal(&sg),
        "tr(I) = (t^8, t^9, t^14, t^15) != m",
    );
    let class = classify(&sg)?;
    rep.check(
        "not-nearly-gorenstein",
        !class.nearly,
        "classification agrees",
    );
    let tor = tor1_self(&i)?;
    rep.check(
        "y-does-not-kill-tor1",
        !tor.killed_by_y,
        "condition (12) fails",
    );
    let battery = theorem38_battery(&ring, &i, p, 3)?;
    rep.check(
        "battery-all-false",
        battery.agree && battery.conditions.iter().all(|&c| !c),
        "all sixteen conditions fail together",
    );
    Ok(rep)
}

/// Bundled list for the minimal-multiplicity <-> Z_1(m) decomposition
/// dichotomy: a mix of minimal-multiplicity semigroups and others.
pub const COROLLARY39_SEMIGROUPS: &[&[i64]] = &[
    &[2, 3],
    &[2, 5],
    &[2, 7],
    &[3, 4, 5],
    &[3, 5, 7],
    &[3, 7, 8],
    &[4, 5, 6, 7],
    &[4, 6, 9, 11],
    &[4, 6, 11, 13],
    &[4, 9, 14, 15],
    &[5, 6, 7, 8, 9],
    &[5, 7, 9, 11, 13],
    &[5, 8, 11, 12, 14],
    &[7, 8, 9, 10, 11, 12, 13],
    &[8, 9, 10, 11, 12, 13, 14, 15],
    &[3, 10, 17],
    &[4, 5, 11],
    &[4, 7, 9],
    &[5, 6, 13, 14],
    &[6, 7, 9, 10],
];

fn corollary_3_9(p: u32) -> Result<ScenarioReport> {
    let mut rep = ScenarioReport::new("corollary-3-9", p);
    for gens in COROLLARY39_SEMIGROUPS {
        let sg = Arc::new(NumericalSemigroup::new(gens)?);
        let m = Ideal::maximal(&sg);
        let cert = sg.has_minimal_multiplicity() && check_z1_iso_shifted_m(&m)?;
        rep.check(
            &format!("dichotomy-{gens:?}"),
            cert == sg.has_minimal_multiplicity(),
            if sg.has_minimal_multiplicity() {
                "minimal multiplicity: certificate holds"
            } else {
                "not minimal multiplicity: rank rules the decomposition out"
            },
        );
    }
    Ok(rep)
}

fn far_flung_family(p: u32) -> Result<ScenarioReport> {
    let mut rep = ScenarioReport::new("far-flung-family", p);
    for e in [3i64, 4, 5] {
        for ell in [2i64, 3] {
            let mut gens = vec![e];
            for k in 1..e {
                gens.push(ell * e + k);
            }
            let sg = Arc::new(NumericalSemigroup::new(&gens)?);
            let name = format!("e{e}-l{ell}");
            let f_ok = sg.frobenius() == ell * e - 1;
            let mm_ok = sg.has_minimal_multiplicity();
            let cond = Ideal::conductor(&sg);
            let cond_ok = cond.min_gens() == (0..e).map(|k| ell * e + k).collect::<Vec<_>>();
            let class = classify(&sg)?;
            rep.check(
                &format!("family-{name}"),
                f_ok && mm_ok && cond_ok && class.far_flung && !class.nearly && !class.gorenstein,
                format!(
                    "F = {}, conductor gens {:?}, far-flung and not nearly",
                    sg.frobenius(),
                    cond.min_gens()
                ),
            );
        }
    }
    let _ = p;
    Ok(rep)
}
