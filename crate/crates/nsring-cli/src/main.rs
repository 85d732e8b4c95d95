//! Command-line front end: single-semigroup reports, named scenario
//! verifications, and bulk scans.
//!
//! Exit codes: 0 all assertions pass, 1 assertion failure, 2 inconclusive
//! (no tail certificate within the configured depth), 3 usage error.

use clap::{Args, Parser, Subcommand};
use nsring::homology::{delta1, question12_check, theorem38_battery, tor1_self};
use nsring::ideal::{
    canonical_ideal, classify, is_ulrich_ideal, theorem38_semigroup_report, trace_ideal, Ideal,
};
use nsring::ring::TruncatedRing;
use nsring::scan::{run_scan, ScanConfig};
use nsring::scenario::{run_scenario, SCENARIOS};
use nsring::semigroup::{EnumBound, NumericalSemigroup};
use serde_json::json;
use std::process::ExitCode;
use std::sync::Arc;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "nsring",
    about = "trace ideals and homology of numerical semigroup rings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct FieldOpts {
    /// coefficient field characteristic (prime)
    #[arg(long = "field", default_value_t = nsring::DEFAULT_PRIME)]
    field: u32,
    /// truncation cap override for the graded engine
    #[arg(long = "cap")]
    cap: Option<i64>,
    /// ext depth for tail certificates
    #[arg(long = "ext-depth", default_value_t = 3)]
    ext_depth: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariants of one semigroup as JSON
    Info {
        #[arg(required = true)]
        gens: Vec<i64>,
    },
    /// Ideal calculator: nsring ideal <gens..> -- <degs..> <trace|colon <degs..>|ulrich|report38>
    Ideal {
        #[arg(required = true, allow_hyphen_values = false, trailing_var_arg = true)]
        rest: Vec<String>,
        #[command(flatten)]
        opts: FieldOpts,
    },
    /// Gorenstein-spectrum classification of one semigroup
    Classify {
        #[arg(required = true)]
        gens: Vec<i64>,
    },
    /// Combined report: info + classification (+ battery, + question12)
    Report {
        #[arg(required = true)]
        gens: Vec<i64>,
        /// explicit ideal generator degrees
        #[arg(long = "ideal", num_args = 1.., value_delimiter = ',')]
        ideal: Option<Vec<i64>>,
        /// use the canonical ideal
        #[arg(long)]
        canonical: bool,
        /// run the sixteen-condition battery (needs minimal multiplicity)
        #[arg(long)]
        battery: bool,
        /// run the Tachikawa-type counterexample check
        #[arg(long)]
        question12: bool,
        #[command(flatten)]
        opts: FieldOpts,
    },
    /// Replay a named verification scenario
    Verify {
        /// one of: section-5, example-4-12, corollary-3-9, far-flung-family
        scenario: String,
        /// emit the report as JSON instead of PASS/FAIL lines
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        opts: FieldOpts,
    },
    /// Bulk scan with NDJSON persistence
    Scan {
        #[arg(long = "max-genus")]
        max_genus: Option<u32>,
        #[arg(long = "max-frobenius")]
        max_frobenius: Option<i64>,
        /// restrict to minimal-multiplicity semigroups
        #[arg(long = "min-mult")]
        min_mult: bool,
        /// comma list from {classify, battery, question12}
        #[arg(long, default_value = "classify", value_delimiter = ',')]
        checks: Vec<String>,
        /// random m-primary ideals per semigroup in battery mode
        #[arg(long = "random-ideals", default_value_t = 5)]
        random_ideals: usize,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[command(flatten)]
        opts: FieldOpts,
    },
}

fn parse_semigroup(gens: &[i64]) -> Result<Arc<NumericalSemigroup>, u8> {
    NumericalSemigroup::new(gens).map(Arc::new).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_USAGE
    })
}

fn ideal_json(i: &Ideal) -> serde_json::Value {
    serde_json::to_value(i.to_json()).unwrap()
}

fn cmd_ideal(rest: &[String], opts: &FieldOpts) -> u8 {
    let split = match rest.iter().position(|t| t == "--") {
        Some(k) => k,
        None => {
            eprintln!(
                "usage: nsring ideal <gens..> -- <degs..> <trace|colon <degs..>|ulrich|report38>"
            );
            return EXIT_USAGE;
        }
    };
    let gens: Vec<i64> = match rest[..split].iter().map(|t| t.parse()).collect() {
        Ok(v) => v,
        Err(_) => {
            eprintln!("error: semigroup generators must be integers");
            return EXIT_USAGE;
        }
    };
    let sg = match parse_semigroup(&gens) {
        Ok(s) => s,
        Err(c) => return c,
    };
    let tail = &rest[split + 1..];
    let mut degs: Vec<i64> = Vec::new();
    let mut k = 0;
    while k < tail.len() {
        match tail[k].parse::<i64>() {
            Ok(d) => degs.push(d),
            Err(_) => break,
        }
        k += 1;
    }
    if degs.is_empty() || k >= tail.len() {
        eprintln!("error: expected ideal degrees followed by an action");
        return EXIT_USAGE;
    }
    let ideal = match Ideal::from_degrees(&sg, &degs) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let action = tail[k].as_str();
    let args = &tail[k + 1..];
    let out = match action {
        "trace" => {
            let tr = trace_ideal(&ideal);
            json!({"ideal": ideal_json(&ideal), "trace": ideal_json(&tr)})
        }
        "colon" => {
            let jdegs: Vec<i64> = match args.iter().map(|t| t.parse()).collect() {
                Ok(v) if !args.is_empty() => v,
                _ => {
                    eprintln!("error: colon needs generator degrees for J");
                    return EXIT_USAGE;
                }
            };
            let j = match Ideal::from_degrees(&sg, &jdegs) {
                Ok(j) => j,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            };
            match Ideal::colon(&j, &ideal) {
                Ok(c) => {
                    json!({"j": ideal_json(&j), "i": ideal_json(&ideal), "colon": ideal_json(&c)})
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            }
        }
        "ulrich" => match is_ulrich_ideal(&ideal) {
            Ok(b) => json!({"ideal": ideal_json(&ideal), "ulrich": b}),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        },
        "report38" => match theorem38_semigroup_report(&ideal) {
            Ok(r) => json!({"ideal": ideal_json(&ideal), "report38": r}),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        },
        other => {
            eprintln!("error: unknown action {other:?}");
            return EXIT_USAGE;
        }
    };
    let _ = opts;
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    EXIT_OK
}

fn cmd_report(
    gens: &[i64],
    ideal_degs: Option<&[i64]>,
    canonical: bool,
    battery: bool,
    question12: bool,
    opts: &FieldOpts,
) -> u8 {
    let sg = match parse_semigroup(gens) {
        Ok(s) => s,
        Err(c) => return c,
    };
    let mut doc = json!({"semigroup": sg.info_json()});
    if !sg.is_dvr() {
        match classify(&sg) {
            Ok(c) => doc["classification"] = serde_json::to_value(&c).unwrap(),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_FAIL;
            }
        }
    }
    let ideal = if let Some(degs) = ideal_degs {
        match Ideal::from_degrees(&sg, degs) {
            Ok(i) => Some(i),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
    } else if canonical {
        let c = canonical_ideal(&sg);
        doc["canonical_shift"] = json!(c.shift);
        doc["canonical_fractional_gens"] = json!(c.fractional_gens);
        Some(c.ideal)
    } else {
        None
    };
    if let Some(i) = &ideal {
        doc["ideal"] = ideal_json(i);
        doc["trace"] = ideal_json(&trace_ideal(i));
        if !i.is_principal() {
            if let (Ok(d), Ok(t)) = (delta1(i), tor1_self(i)) {
                doc["delta1"] = serde_json::to_value(&d).unwrap();
                doc["tor1"] = serde_json::to_value(&t).unwrap();
            }
        }
    }
    let mut exit = EXIT_OK;
    if battery {
        let i = match &ideal {
            Some(i) => i.clone(),
            None => canonical_ideal(&sg).ideal,
        };
        let ring = match TruncatedRing::new(&sg, opts.field, opts.cap) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        };
        match theorem38_battery(&ring, &i, opts.field, opts.ext_depth) {
            Ok(b) => {
                if !b.agree {
                    exit = EXIT_FAIL;
                }
                doc["battery"] = serde_json::to_value(&b).unwrap();
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_FAIL;
            }
        }
    }
    if question12 {
        let ring = match TruncatedRing::new(&sg, opts.field, opts.cap) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        };
        match question12_check(&ring, &sg, opts.ext_depth, opts.field) {
            Ok(q) => {
                if q.m_kills_ext.is_none() {
                    exit = EXIT_INCONCLUSIVE;
                }
                doc["question12"] = serde_json::to_value(&q).unwrap();
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_FAIL;
            }
        }
    }
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    exit
}

fn cmd_verify(name: &str, json: bool, opts: &FieldOpts) -> u8 {
    match run_scenario(name, opts.field) {
        Ok(rep) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                for a in &rep.assertions {
                    println!(
                        "{} {} : {}",
                        if a.passed { "PASS" } else { "FAIL" },
                        a.name,
                        a.detail
                    );
                }
                println!(
                    "scenario {} over F_{}: {}",
                    rep.name,
                    rep.field,
                    if rep.passed {
                        "all assertions pass"
                    } else {
                        "FAILURES PRESENT"
                    }
                );
            }
            if rep.passed {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            eprintln!("error: {e} (available: {})", SCENARIOS.join(", "));
            EXIT_USAGE
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    max_genus: Option<u32>,
    max_frobenius: Option<i64>,
    min_mult: bool,
    checks: &[String],
    random_ideals: usize,
    workers: usize,
    out: Option<std::path::PathBuf>,
    opts: &FieldOpts,
) -> u8 {
    let bound = match (max_genus, max_frobenius) {
        (Some(g), None) => EnumBound::MaxGenus(g),
        (None, Some(f)) => EnumBound::MaxFrobenius(f),
        _ => {
            eprintln!("error: give exactly one of --max-genus or --max-frobenius");
            return EXIT_USAGE;
        }
    };
    for c in checks {
        if !matches!(c.as_str(), "classify" | "battery" | "question12") {
            eprintln!("error: unknown check {c:?}");
            return EXIT_USAGE;
        }
    }
    let cfg = ScanConfig {
        bound,
        min_mult_only: min_mult,
        classify: checks.iter().any(|c| c == "classify"),
        battery: checks.iter().any(|c| c == "battery"),
        question12: checks.iter().any(|c| c == "question12"),
        random_ideals,
        p: opts.field,
        ext_depth: opts.ext_depth,
        workers,
        out,
    };
    match run_scan(&cfg) {
        Ok(o) => {
            println!("{}", serde_json::to_string_pretty(&o.summary).unwrap());
            if !o.summary.battery_disagreements.is_empty() {
                eprintln!("FATAL: battery disagreement — evidence in records");
                return EXIT_FAIL;
            }
            if !o.summary.inconclusive.is_empty() {
                return EXIT_INCONCLUSIVE;
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version are not usage errors
            use clap::error::ErrorKind::*;
            let code = if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                EXIT_OK
            } else {
                EXIT_USAGE
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match &cli.cmd {
        Cmd::Info { gens } => match parse_semigroup(gens) {
            Ok(sg) => {
                println!("{}", serde_json::to_string_pretty(&sg.info_json()).unwrap());
                EXIT_OK
            }
            Err(c) => c,
        },
        Cmd::Ideal { rest, opts } => cmd_ideal(rest, opts),
        Cmd::Classify { gens } => match parse_semigroup(gens) {
            Ok(sg) => match classify(&sg) {
                Ok(c) => {
                    println!("{}", serde_json::to_string_pretty(&c).unwrap());
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_USAGE
                }
            },
            Err(c) => c,
        },
        Cmd::Report {
            gens,
            ideal,
            canonical,
            battery,
            question12,
            opts,
        } => cmd_report(
            gens,
            ideal.as_deref(),
            *canonical,
            *battery,
            *question12,
            opts,
        ),
        Cmd::Verify {
            scenario,
            json,
            opts,
        } => cmd_verify(scenario, *json, opts),
        Cmd::Scan {
            max_genus,
            max_frobenius,
            min_mult,
            checks,
            random_ideals,
            workers,
            out,
            opts,
        } => cmd_scan(
            *max_genus,
            *max_frobenius,
            *min_mult,
            checks,
            *random_ideals,
            *workers,
            out.clone(),
            opts,
        ),
    };
    ExitCode::from(code)
}
