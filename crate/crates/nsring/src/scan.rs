//! Bulk verification over ranges of semigroups: classification, the
//! sixteen-condition battery, and the counterexample detector, with
//! newline-delimited JSON persistence.
//!
//! Output ordering is deterministic: records are sorted by (genus,
//! generators) regardless of worker count, and the per-semigroup random
//! ideals are seeded from the generator list alone.

use crate::error::Result;
use crate::homology::{matlis_consistency, question12_check, theorem38_battery, Question12};
use crate::ideal::{canonical_ideal, classify, Classification, Ideal};
use crate::ring::TruncatedRing;
use crate::semigroup::{enumerate_semigroups, EnumBound, NumericalSemigroup};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub bound: EnumBound,
    pub min_mult_only: bool,
    pub classify: bool,
    pub battery: bool,
    pub question12: bool,
    /// pseudo-random m-primary ideals per semigroup in battery mode
    pub random_ideals: usize,
    pub p: u32,
    pub ext_depth: usize,
    pub workers: usize,
    pub out: Option<PathBuf>,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            bound: EnumBound::MaxGenus(6),
            min_mult_only: false,
            classify: true,
            battery: false,
            question12: false,
            random_ideals: 5,
            p: crate::DEFAULT_PRIME,
            ext_depth: 3,
            workers: 0,
            out: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BatteryRun {
    pub ideal: Vec<i64>,
    pub conditions: [bool; 16],
    pub agree: bool,
    /// conditions whose infinite-tail certificate was not found
    pub inconclusive: Vec<usize>,
    pub matlis_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    pub generators: Vec<i64>,
    pub genus: usize,
    pub multiplicity: i64,
    pub embdim: usize,
    pub frobenius: i64,
    pub r#type: usize,
    pub minimal_multiplicity: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub battery: Option<Vec<BatteryRun>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub question12: Option<Question12>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanSummary {
    pub total: u64,
    pub gorenstein: u64,
    pub nearly_gorenstein: u64,
    pub far_flung: u64,
    pub intermediate: u64,
    pub battery_runs: u64,
    pub battery_disagreements: Vec<Vec<i64>>,
    pub counterexamples: Vec<Vec<i64>>,
    pub inconclusive: Vec<Vec<i64>>,
    pub errors: u64,
}

pub struct ScanOutput {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

/// Deterministic seed from the generator list.
fn seed_for(gens: &[i64], salt: u64) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325 ^ salt;
    for &g in gens {
        h ^= g as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// A pseudo-random nonprincipal m-primary monomial ideal inside R.
pub fn random_ideal(sg: &Arc<NumericalSemigroup>, index: usize) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(sg.generators(), index as u64));
    let e = sg.multiplicity();
    let hi = e + 2 * sg.conductor() + 1;
    loop {
        let k = rng.gen_range(2..=4usize);
        let mut degs = Vec::with_capacity(k);
        while degs.len() < k {
            let d = rng.gen_range(e..=hi);
            if sg.contains(d) {
                degs.push(d);
            }
        }
        let ideal = Ideal::from_degrees(sg, &degs).unwrap();
        if !ideal.is_principal() {
            return ideal;
        }
    }
}

fn battery_ideals(sg: &Arc<NumericalSemigroup>, random: usize) -> Vec<Ideal> {
    let mut out = vec![Ideal::maximal(sg)];
    let can = canonical_ideal(sg).ideal;
    if !can.is_principal() {
        out.push(can);
    }
    for k in 0..random {
        out.push(random_ideal(sg, k));
    }
    out
}

fn process(sg: &Arc<NumericalSemigroup>, cfg: &ScanConfig) -> ScanRecord {
    let start = std::time::Instant::now();
    let mut rec = ScanRecord {
        generators: sg.generators().to_vec(),
        genus: sg.genus(),
        multiplicity: sg.multiplicity(),
        embdim: sg.embedding_dimension(),
        frobenius: sg.frobenius(),
        r#type: sg.cm_type(),
        minimal_multiplicity: sg.has_minimal_multiplicity(),
        classification: None,
        battery: None,
        question12: None,
        error: None,
        ms: 0,
    };
    let mut run = || -> Result<()> {
        if sg.is_dvr() {
            return Ok(());
        }
        if cfg.classify {
            rec.classification = Some(classify(sg)?);
        }
        if cfg.battery && sg.has_minimal_multiplicity() {
            let ring = TruncatedRing::new(sg, cfg.p, None)?;
            let mut runs = Vec::new();
            for ideal in battery_ideals(sg, cfg.random_ideals) {
                let b = theorem38_battery(&ring, &ideal, cfg.p, cfg.ext_depth)?;
                let matlis_ok = matlis_consistency(&ring, &ideal, cfg.p)?;
                runs.push(BatteryRun {
                    ideal: ideal.min_gens().to_vec(),
                    conditions: b.conditions,
                    agree: b.agree,
                    inconclusive: b.inconclusive,
                    matlis_ok,
                });
            }
            rec.battery = Some(runs);
        }
        if cfg.question12 {
            let ring = TruncatedRing::new(sg, cfg.p, None)?;
            rec.question12 = Some(question12_check(&ring, sg, cfg.ext_depth, cfg.p)?);
        }
        Ok(())
    };
    if let Err(e) = run() {
        rec.error = Some(e.to_string());
    }
    rec.ms = start.elapsed().as_millis();
    rec
}

pub fn run_scan(cfg: &ScanConfig) -> Result<ScanOutput> {
    let mut semigroups: Vec<Arc<NumericalSemigroup>> = Vec::new();
    enumerate_semigroups(cfg.bound, &mut |s| {
        if !cfg.min_mult_only || s.has_minimal_multiplicity() {
            semigroups.push(s.clone());
        }
    })?;
    semigroups.sort_by_key(|s| (s.genus(), s.generators().to_vec()));

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .expect("thread pool");
    let records: Vec<ScanRecord> =
        pool.install(|| semigroups.par_iter().map(|s| process(s, cfg)).collect());

    let mut summary = ScanSummary {
        total: records.len() as u64,
        gorenstein: 0,
        nearly_gorenstein: 0,
        far_flung: 0,
        intermediate: 0,
        battery_runs: 0,
        battery_disagreements: Vec::new(),
        counterexamples: Vec::new(),
        inconclusive: Vec::new(),
        errors: 0,
    };
    for r in &records {
        if let Some(c) = &r.classification {
            if c.gorenstein {
                summary.gorenstein += 1;
            } else if c.nearly {
                summary.nearly_gorenstein += 1;
            } else if c.far_flung {
                summary.far_flung += 1;
            } else {
                summary.intermediate += 1;
            }
        }
        if let Some(bs) = &r.battery {
            summary.battery_runs += bs.len() as u64;
            if bs.iter().any(|b| !b.agree || !b.matlis_ok) {
                summary.battery_disagreements.push(r.generators.clone());
            }
            if bs.iter().any(|b| !b.inconclusive.is_empty()) {
                summary.inconclusive.push(r.generators.clone());
            }
        }
        if let Some(q) = &r.question12 {
            if q.is_counterexample {
                summary.counterexamples.push(r.generators.clone());
            }
            if q.m_kills_ext.is_none() {
                summary.inconclusive.push(r.generators.clone());
            }
        }
        if r.error.is_some() {
            summary.errors += 1;
        }
    }

    if let Some(path) = &cfg.out {
        let mut f = std::io::BufWriter::new(
            std::fs::File::create(path)
                .map_err(|e| crate::error::Error::Io(format!("cannot open {path:?}: {e}")))?,
        );
        for r in &records {
            let line = serde_json::to_string(r).expect("record serializes");
            writeln!(f, "{line}").expect("write record");
            f.flush().ok();
        }
    }
    Ok(ScanOutput { records, summary })
}
