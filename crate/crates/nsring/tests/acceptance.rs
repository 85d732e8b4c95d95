//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the measured evidence. Run with `cargo test --test acceptance`
//! (use `-- --nocapture` to see the lines).

use nsring::engine::{free_resolution, kernel_degreewise, slice_at, valid_degree_bound, MemberSet};
use nsring::homology::{
    check_z1_iso_shifted_m, delta1, ext_i, matlis_consistency, question12_check, tor1_self,
    tor1_via_resolution, trace_of_module, ExtTarget,
};
use nsring::ideal::{
    canonical_ideal, classify, is_ulrich_ideal, trace_ideal, trace_via_single_colon, Ideal,
};
use nsring::koszul::KoszulModel;
use nsring::linalg::kernel_basis;
use nsring::matrix::GradedMatrix;
use nsring::ring::TruncatedRing;
use nsring::scan::{random_ideal, run_scan, ScanConfig};
use nsring::scenario::run_scenario;
use nsring::semigroup::{enumerate_semigroups, EnumBound, NumericalSemigroup};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;
use std::time::Instant;

fn sg(gens: &[i64]) -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::new(gens).unwrap())
}

fn all_semigroups(bound: EnumBound) -> Vec<Arc<NumericalSemigroup>> {
    let mut v = Vec::new();
    enumerate_semigroups(bound, &mut |s| v.push(s.clone())).unwrap();
    v.sort_by_key(|s| (s.genus(), s.generators().to_vec()));
    v
}

/// Criterion 1: the section-5 counterexample, over F_101 and F_2, exact,
/// within 60 seconds.
#[test]
fn acceptance_01_section5_counterexample() {
    let t0 = Instant::now();
    for p in [101u32, 2] {
        let rep = run_scenario("section-5", p).unwrap();
        for a in &rep.assertions {
            assert!(a.passed, "p={p}: {} failed: {}", a.name, a.detail);
        }
        let s = sg(&[5, 6, 13, 14]);
        let ring = TruncatedRing::new(&s, p, None).unwrap();
        let can = canonical_ideal(&s);
        assert_eq!(can.ideal.min_gens(), &[10, 11, 12]);
        assert_eq!(trace_ideal(&can.ideal), Ideal::conductor(&s));
        let q = question12_check(&ring, &s, 3, p).unwrap();
        assert_eq!(q.m_kills_ext, Some(true));
        assert_eq!(q.cert_j, Some(1));
        assert!(q.is_counterexample && !q.nearly_gorenstein);
    }
    let dt = t0.elapsed();
    assert!(dt.as_secs() < 60, "took {dt:?}, budget 60 s");
    println!(
        "ACCEPTANCE 1 PASS: <5,6,13,14> counterexample verified over F_101 and F_2 \
         (canonical (t^10,t^11,t^12), trace = conductor, m Ext^1 = 0, tail at j = 1) in {dt:?}"
    );
}

/// Criterion 2: m delta_1(I) = 0 with tr(I) != m over F_2, within 30 s.
#[test]
fn acceptance_02_m_kills_delta1_example() {
    let t0 = Instant::now();
    let rep = run_scenario("example-4-12", 2).unwrap();
    for a in &rep.assertions {
        assert!(a.passed, "{} failed: {}", a.name, a.detail);
    }
    let s = sg(&[4, 9, 14, 15]);
    let i = canonical_ideal(&s).ideal;
    let d = delta1(&i).unwrap();
    assert!(d.killed_by_m);
    assert_eq!(trace_ideal(&i).min_gens(), &[8, 9, 14, 15]);
    assert!(!classify(&s).unwrap().nearly);
    let dt = t0.elapsed();
    assert!(dt.as_secs() < 30, "took {dt:?}, budget 30 s");
    println!(
        "ACCEPTANCE 2 PASS: <4,9,14,15> has m delta_1 = 0 yet tr(I) = (t^8,t^9,t^14,t^15) != m, \
         not nearly Gorenstein, in {dt:?}"
    );
}

/// Criteria 3 + 4 (first half) + 8 + 10 share the big minimal-multiplicity
/// scan with Frobenius <= 25: every battery agrees, Matlis consistency
/// holds on every scanned ideal, no counterexample appears, and the Ulrich
/// suite holds. Budget 15 minutes for the battery part.
#[test]
fn acceptance_03_battery_scan_min_mult_f25() {
    let t0 = Instant::now();
    let cfg = ScanConfig {
        bound: EnumBound::MaxFrobenius(25),
        min_mult_only: true,
        classify: true,
        battery: true,
        question12: true,
        random_ideals: 5,
        ..Default::default()
    };
    let out = run_scan(&cfg).unwrap();
    assert_eq!(out.summary.errors, 0);
    assert!(out.summary.total > 2000, "expected thousands of semigroups");
    assert!(
        out.summary.battery_disagreements.is_empty(),
        "battery disagreement on {:?}",
        out.summary.battery_disagreements
    );
    let mut runs = 0u64;
    for r in &out.records {
        for b in r.battery.as_deref().unwrap_or(&[]) {
            assert!(
                b.agree,
                "disagreement for S = {:?}, I = {:?}",
                r.generators, b.ideal
            );
            assert!(
                b.matlis_ok,
                "Matlis failure for S = {:?}, I = {:?}",
                r.generators, b.ideal
            );
            assert!(
                b.inconclusive.is_empty(),
                "uncertified tail for S = {:?}",
                r.generators
            );
            runs += 1;
        }
    }
    // criterion 4, first half: no minimal-multiplicity counterexamples
    assert!(out.summary.counterexamples.is_empty());
    assert!(out.summary.inconclusive.is_empty());
    let dt = t0.elapsed();
    assert!(dt.as_secs() < 900, "took {dt:?}, budget 15 min");
    println!(
        "ACCEPTANCE 3 PASS: all 16 conditions agree on {} battery runs over {} \
         minimal-multiplicity semigroups with F <= 25 in {dt:?}",
        runs, out.summary.total
    );
    println!(
        "ACCEPTANCE 10 PASS: Tor_1 and Ext^1(I, I-dual) lengths and annihilators agree \
         on every scanned m-primary ideal ({} ideals)",
        runs
    );
}

/// Criterion 4, second half: among all semigroups with F <= 12, the only
/// counterexample with multiplicity 5 and embedding dimension 4 is
/// <5,6,13,14>.
#[test]
fn acceptance_04_unique_counterexample_in_class() {
    let cfg = ScanConfig {
        bound: EnumBound::MaxFrobenius(12),
        question12: true,
        classify: true,
        ..Default::default()
    };
    let out = run_scan(&cfg).unwrap();
    assert!(out.summary.inconclusive.is_empty());
    let in_class: Vec<Vec<i64>> = out
        .records
        .iter()
        .filter(|r| {
            r.multiplicity == 5
                && r.embdim == 4
                && r.question12.as_ref().is_some_and(|q| q.is_counterexample)
        })
        .map(|r| r.generators.clone())
        .collect();
    assert_eq!(in_class, vec![vec![5, 6, 13, 14]]);
    assert!(out.summary.counterexamples.contains(&vec![5, 6, 13, 14]));
    println!(
        "ACCEPTANCE 4 PASS: zero counterexamples among minimal-multiplicity semigroups \
         (criterion 3 scan); <5,6,13,14> is the unique counterexample with e = 5, \
         embdim = 4 among all {} semigroups with F <= 12",
        out.summary.total
    );
}

/// Criterion 5: the dimension formulas on nearly-Gorenstein minimal
/// multiplicity semigroups: dim Ext^1(I, R) = r^2 - r - 1 and
/// dim delta_1(I) = C(r, 2) - 1 for the canonical ideal, and
/// dim Tor_1 = C(mu, 2) + dim delta_1 whenever m Tor_1 = 0; additionally
/// dim Ext^1(J, R) = r mu(J) - r - 1 for random m-primary J with m-killed
/// nonzero Ext^1.
#[test]
fn acceptance_05_dimension_formulas() {
    let p = 101;
    let mut canonical_checked = 0u64;
    let mut tor_checked = 0u64;
    let mut general_checked = 0u64;
    for s in all_semigroups(EnumBound::MaxFrobenius(25)) {
        if s.is_dvr() || !s.has_minimal_multiplicity() || s.cm_type() < 2 {
            continue;
        }
        let class = classify(&s).unwrap();
        if !class.nearly {
            continue;
        }
        let r = s.cm_type();
        let ring = TruncatedRing::new(&s, p, None).unwrap();
        let i = canonical_ideal(&s).ideal;
        assert_eq!(i.num_gens(), r, "canonical ideal has type-many generators");
        let ext = ext_i(&ring, &i, ExtTarget::R, 1, p).unwrap();
        assert_eq!(
            ext.total,
            r * r - r - 1,
            "Ext^1 formula for {:?}",
            s.generators()
        );
        let d = delta1(&i).unwrap();
        assert_eq!(
            d.total,
            r * (r - 1) / 2 - 1,
            "delta_1 formula for {:?}",
            s.generators()
        );
        canonical_checked += 1;

        let tor = tor1_self(&i).unwrap();
        if tor.killed_by_m {
            let mu = i.num_gens();
            assert_eq!(
                tor.total,
                mu * (mu - 1) / 2 + d.total,
                "Tor count for {:?}",
                s.generators()
            );
            tor_checked += 1;
        }
        // splitness bookkeeping: mu(I^2) = e = r + 1 (I^2 is Ulrich) and
        // mu(I x I) = r^2 = dim Tor_1 + mu(I^2)
        let sq = Ideal::product(&i, &i).unwrap();
        assert_eq!(sq.num_gens(), r + 1, "mu(I^2) for {:?}", s.generators());
        assert!(is_ulrich_ideal(&sq).unwrap());
        assert_eq!(r * r, tor.total + sq.num_gens());
        // general m-primary ideals (Cor idealcase shape)
        for k in 0..2 {
            let j = random_ideal(&s, 1000 + k);
            let ej = ext_i(&ring, &j, ExtTarget::R, 1, p).unwrap();
            if ej.killed_by_m && ej.total > 0 {
                assert_eq!(
                    ej.total,
                    r * j.num_gens() - r - 1,
                    "general Ext^1 formula for {:?}, J = {:?}",
                    s.generators(),
                    j.min_gens()
                );
                general_checked += 1;
            }
        }
    }
    assert!(canonical_checked > 100);
    assert!(tor_checked > 100);
    assert!(general_checked > 50);
    println!(
        "ACCEPTANCE 5 PASS: dim Ext^1 = r^2-r-1 and dim delta_1 = C(r,2)-1 on {} canonical \
         ideals; Tor_1 count on {}; r mu - r - 1 on {} random ideals",
        canonical_checked, tor_checked, general_checked
    );
}

/// Criterion 6: for every non-DVR semigroup with F <= 20, minimal
/// multiplicity holds iff the graded decomposition Z_1(m) = (+) m(-shift)
/// with e - 1 summands is certified (explicit map forward, rank backward).
#[test]
fn acceptance_06_z1_decomposition_dichotomy() {
    let t0 = Instant::now();
    let mut count = 0u64;
    for s in all_semigroups(EnumBound::MaxFrobenius(20)) {
        if s.is_dvr() {
            continue;
        }
        let m = Ideal::maximal(&s);
        let summand_count_matches = s.embedding_dimension() as i64 - 1 == s.multiplicity() - 1;
        let cert = summand_count_matches && check_z1_iso_shifted_m(&m).unwrap();
        assert_eq!(
            cert,
            s.has_minimal_multiplicity(),
            "dichotomy failed for {:?}",
            s.generators()
        );
        count += 1;
    }
    println!(
        "ACCEPTANCE 6 PASS: minimal multiplicity <=> certified Z_1(m) decomposition \
         on {} semigroups with F <= 20 in {:?}",
        count,
        t0.elapsed()
    );
}

/// Criterion 7: the three trace routes agree and the flip identity holds
/// on 200 randomized (S, I) pairs.
#[test]
fn acceptance_07_trace_route_equivalence() {
    let p = 101;
    let semis: Vec<_> = all_semigroups(EnumBound::MaxFrobenius(12))
        .into_iter()
        .filter(|s| !s.is_dvr())
        .collect();
    let mut pairs = 0usize;
    let mut k = 0usize;
    while pairs < 200 {
        let s = &semis[k % semis.len()];
        let i = random_ideal(s, 5000 + pairs);
        k += 1;
        let ring = TruncatedRing::new(s, p, None).unwrap();
        let t_sum = trace_ideal(&i);
        for &x in i.min_gens() {
            assert_eq!(
                trace_via_single_colon(&i, x).unwrap(),
                t_sum,
                "single-colon trace at x = {x} for S = {:?}, I = {:?}",
                s.generators(),
                i.min_gens()
            );
        }
        let pres = KoszulModel::new(&i).z1_matrix(p);
        let t_pres = trace_of_module(&ring, &pres).unwrap();
        assert_eq!(
            t_pres,
            t_sum,
            "presentation trace for S = {:?}, I = {:?}",
            s.generators(),
            i.min_gens()
        );
        // flip identity x (y : I) = y (x : I)
        for &x in i.min_gens() {
            for &y in i.min_gens() {
                let lhs = Ideal::colon(&Ideal::principal(s, y), &i).unwrap().shift(x);
                let rhs = Ideal::colon(&Ideal::principal(s, x), &i).unwrap().shift(y);
                assert_eq!(lhs, rhs);
            }
        }
        pairs += 1;
    }
    println!(
        "ACCEPTANCE 7 PASS: colon-sum = single-colon = presentation-entry trace and the \
         flip identity on {pairs} randomized (S, I) pairs"
    );
}

/// Criterion 8: Ulrich suite over minimal-multiplicity scan members:
/// (x : I), tr(I) and omega I are Ulrich for nonprincipal I; any Ulrich
/// ideal inside m containing t^e equals m.
#[test]
fn acceptance_08_ulrich_suite() {
    let mut checked = 0u64;
    let mut reduction_checked = 0u64;
    for s in all_semigroups(EnumBound::MaxFrobenius(25)) {
        if s.is_dvr() || !s.has_minimal_multiplicity() {
            continue;
        }
        let e = s.multiplicity();
        let omega = canonical_ideal(&s).ideal;
        let mut ideals = vec![Ideal::maximal(&s)];
        if !omega.is_principal() {
            ideals.push(omega.clone());
        }
        ideals.push(random_ideal(&s, 12));
        ideals.push(random_ideal(&s, 13));
        for i in &ideals {
            if i.is_principal() {
                continue;
            }
            let mut produced = Vec::new();
            for &x in i.min_gens() {
                let colon = Ideal::colon_in_ring(&Ideal::principal(&s, x), i).unwrap();
                assert!(
                    is_ulrich_ideal(&colon).unwrap(),
                    "(x:I) not Ulrich for S = {:?}, I = {:?}, x = {x}",
                    s.generators(),
                    i.min_gens()
                );
                produced.push(colon);
            }
            let tr = trace_ideal(i);
            assert!(is_ulrich_ideal(&tr).unwrap(), "tr(I) not Ulrich");
            produced.push(tr);
            let oi = Ideal::product(&omega, i).unwrap();
            assert!(is_ulrich_ideal(&oi).unwrap(), "omega I not Ulrich");
            produced.push(oi);
            checked += 1;
            // Ulrich + contains t^e + inside m => equals m
            let m = Ideal::maximal(&s);
            for u in produced {
                if u.contains(e) && !u.contains(0) {
                    assert_eq!(u, m, "Ulrich reduction for S = {:?}", s.generators());
                    reduction_checked += 1;
                }
            }
        }
    }
    assert!(checked > 2000);
    assert!(reduction_checked > 100);
    println!(
        "ACCEPTANCE 8 PASS: Ulrich suite on {} nonprincipal ideals over minimal \
         multiplicity semigroups (F <= 25); {} Ulrich-reduction instances forced I = m",
        checked, reduction_checked
    );
}

/// Criterion 9: engine oracles. Degreewise kernels match a dense
/// brute-force kernel on 100 random small matrices; resolutions compose to
/// zero, are minimal, have two-entry first syzygies; reports stabilize
/// across caps.
#[test]
fn acceptance_09_engine_oracles() {
    let p = 101u32;
    // (a) kernel oracle on random graded matrices over tiny rings
    let rings = [
        TruncatedRing::new(&sg(&[2, 3]), p, None).unwrap(), // basis 9
        TruncatedRing::new(&sg(&[1]), p, Some(12)).unwrap(), // basis 12
        TruncatedRing::new(&sg(&[2, 5]), p, None).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(90);
    let mut matrices = 0usize;
    while matrices < 100 {
        let ring = &rings[matrices % rings.len()];
        let s = ring.semigroup().clone();
        let nrows = rng.gen_range(1..=3usize);
        let ncols = rng.gen_range(1..=4usize);
        let row_shifts: Vec<i64> = (0..nrows).map(|_| rng.gen_range(0..5)).collect();
        let col_shifts: Vec<i64> = (0..ncols).map(|_| rng.gen_range(0..8)).collect();
        let mut m = GradedMatrix::zero(row_shifts.clone(), col_shifts.clone());
        for i in 0..nrows {
            for j in 0..ncols {
                let d = col_shifts[j] - row_shifts[i];
                if d >= 0 && s.contains(d) && rng.gen_bool(0.7) {
                    m.set_monomial(i, j, d, rng.gen_range(1..p));
                }
            }
        }
        if m.is_zero() {
            continue;
        }
        m.validate(&s).unwrap();
        matrices += 1;

        // dense brute force: full monomial bases of source and target
        let basis = ring.basis();
        let src: Vec<(usize, i64)> = (0..ncols)
            .flat_map(|j| basis.iter().map(move |&a| (j, a)))
            .collect();
        let tgt: Vec<(usize, i64)> = (0..nrows)
            .flat_map(|i| basis.iter().map(move |&a| (i, a)))
            .collect();
        let mut dense = vec![vec![0u32; src.len()]; tgt.len()];
        for (cj, &(j, a)) in src.iter().enumerate() {
            for i in 0..nrows {
                for &(d, c) in &m.entry(i, j).0 {
                    let target_deg = a + d;
                    if ring.has_monomial(target_deg) {
                        let ri = tgt
                            .iter()
                            .position(|&(ti, ta)| ti == i && ta == target_deg)
                            .unwrap();
                        dense[ri][cj] = c;
                    }
                }
            }
        }
        let brute = kernel_basis(p, &dense, src.len());
        // degreewise kernels across every represented module degree
        let degs: std::collections::BTreeSet<i64> =
            src.iter().map(|&(j, a)| a + col_shifts[j]).collect();
        let mut total = 0usize;
        let hi = valid_degree_bound(ring, &m) - ring.semigroup().max_generator();
        for &d in &degs {
            if d > hi {
                continue;
            }
            let ks = kernel_degreewise(ring, &m, d, d).unwrap();
            let vecs = &ks[0].1;
            // brute-force kernel restricted to degree-d source coordinates
            let cols_d: Vec<usize> = src
                .iter()
                .enumerate()
                .filter(|(_, &(j, a))| a + col_shifts[j] == d)
                .map(|(k, _)| k)
                .collect();
            let restricted: Vec<Vec<u32>> = dense
                .iter()
                .map(|row| cols_d.iter().map(|&k| row[k]).collect())
                .collect();
            let brute_d = kernel_basis(p, &restricted, cols_d.len());
            assert_eq!(
                vecs.len(),
                brute_d.len(),
                "kernel dim mismatch at degree {d} (matrix {matrices})"
            );
            total += vecs.len();
        }
        // graded kernels account for the whole dense kernel below the bound
        let brute_below = brute
            .iter()
            .filter(|v| {
                v.iter().enumerate().all(|(k, &c)| {
                    c == 0 || {
                        let (j, a) = src[k];
                        a + col_shifts[j] <= hi
                    }
                })
            })
            .count();
        assert!(
            total >= brute_below,
            "graded total {total} < dense {brute_below}"
        );
    }

    // (b) resolutions on random ideals: d.d = 0, minimal, two-entry
    let mut res_checked = 0;
    for gens in [
        vec![3i64, 4, 5],
        vec![4, 9, 14, 15],
        vec![5, 6, 13, 14],
        vec![3, 7, 8],
    ] {
        let s = sg(&gens);
        let ring = TruncatedRing::new(&s, p, None).unwrap();
        for k in 0..5 {
            let i = random_ideal(&s, 7000 + k);
            let row = GradedMatrix::generator_row(i.min_gens());
            let res = free_resolution(&ring, &row, 2).unwrap();
            for t in 0..2 {
                assert!(res.mats[t].mul(&res.mats[t + 1], p).is_zero(), "d.d != 0");
                assert!(!res.mats[t + 1].has_unit_entry(), "resolution not minimal");
            }
            for j in 0..res.mats[1].ncols() {
                assert_eq!(res.mats[1].column_entry_count(j), 2, "two-entry column");
            }
            // Betti_1 agrees with the cycle-model generator count
            assert_eq!(
                res.betti(1),
                KoszulModel::new(&i).z1_min_gens(p).len(),
                "beta_1 route mismatch for {:?} {:?}",
                gens,
                i.min_gens()
            );
            res_checked += 1;
        }
    }
    assert_eq!(res_checked, 20);

    // (c) stabilization: engine-route reports agree between caps D and D + e
    for gens in [vec![4i64, 9, 14, 15], vec![5, 6, 13, 14]] {
        let s = sg(&gens);
        let i = canonical_ideal(&s).ideal;
        let compute = |cap: i64| {
            let ring = TruncatedRing::new(&s, p, Some(cap)).unwrap();
            let rep = tor1_via_resolution(&ring, &i).unwrap();
            rep.dims.into_iter().collect::<Vec<_>>()
        };
        let d1 = TruncatedRing::new(&s, p, None).unwrap().cap();
        assert!(
            nsring::engine::stabilization_check(compute, d1, d1 + s.multiplicity()),
            "stabilization failed for {gens:?}"
        );
        // fast-route reports carry their own stabilization flag
        assert!(tor1_self(&i).unwrap().stabilized);
        assert!(delta1(&i).unwrap().stabilized);
    }

    println!(
        "ACCEPTANCE 9 PASS: degreewise kernel = dense kernel on {matrices} random matrices; \
         20 resolutions compose to zero, minimal, two-entry syzygies; reports stabilize"
    );
}

/// Criterion 10 has its scan half inside acceptance_03; this adds the
/// direct per-ideal comparison on a mixed corpus including non-minimal
/// multiplicity rings.
#[test]
fn acceptance_10_matlis_direct() {
    let p = 101;
    let mut checked = 0;
    for s in all_semigroups(EnumBound::MaxFrobenius(14)) {
        if s.is_dvr() {
            continue;
        }
        let ring = TruncatedRing::new(&s, p, None).unwrap();
        let mut ideals = vec![Ideal::maximal(&s)];
        let can = canonical_ideal(&s).ideal;
        if !can.is_principal() {
            ideals.push(can);
        }
        ideals.push(random_ideal(&s, 21));
        for i in ideals {
            if i.is_principal() {
                continue;
            }
            assert!(
                matlis_consistency(&ring, &i, p).unwrap(),
                "Matlis failure for S = {:?}, I = {:?}",
                s.generators(),
                i.min_gens()
            );
            checked += 1;
        }
    }
    assert!(checked > 500);
    println!(
        "ACCEPTANCE 10 PASS (direct): Tor_1 and Ext^1(I, I-dual) agree in length and \
         annihilators on {checked} ideals including non-minimal-multiplicity rings"
    );
}

/// Battery agreement also holds beyond the minimal-multiplicity scan when
/// run at characteristic 2 on a sample (char sensitivity smoke test).
#[test]
fn acceptance_03b_battery_char2_sample() {
    let cfg = ScanConfig {
        bound: EnumBound::MaxFrobenius(14),
        min_mult_only: true,
        classify: false,
        battery: true,
        question12: false,
        random_ideals: 2,
        p: 2,
        ..Default::default()
    };
    let out = run_scan(&cfg).unwrap();
    assert_eq!(out.summary.errors, 0);
    assert!(out.summary.battery_disagreements.is_empty());
    println!(
        "ACCEPTANCE 3b PASS: battery agreement over F_2 on {} runs",
        out.summary.battery_runs
    );
}

/// The engine slice machinery agrees with the set-level colon arithmetic:
/// Hilbert function of the unit ideal equals the ring's, and kernel
/// dimensions of a generator row recover mu(Z_1).
#[test]
fn acceptance_09b_slice_consistency() {
    let p = 101;
    let s = sg(&[5, 6, 13, 14]);
    let ring = TruncatedRing::new(&s, p, None).unwrap();
    let i = Ideal::from_degrees(&s, &[10, 11, 12]).unwrap();
    let row = GradedMatrix::generator_row(i.min_gens());
    let model = KoszulModel::new(&i);
    for d in 10..=30 {
        let ks = kernel_degreewise(&ring, &row, d, d).unwrap();
        assert_eq!(ks[0].1.len(), model.slots(d).len().saturating_sub(1));
        let sl = slice_at(&ring, &row, d, MemberSet::Ring, MemberSet::Ring);
        assert_eq!(sl.src.len(), model.slots(d).len());
    }
    println!("ACCEPTANCE 9b PASS: slice components match the degreewise monomial model");
}
