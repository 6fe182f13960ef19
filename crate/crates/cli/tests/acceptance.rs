//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the lines always show.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use cca_core::cca::{alt_upper_bound_with, cca_check_with, CcaOptions};
use cca_core::corpus::{self, NON_ALTERNATING_CCA, NON_MINIMAL_10_151};
use cca_core::{
    abe_lower_bound, determinant, extract_dt, jones, jones_span, kauffman_bracket, parse_dt, signature, AbeInput,
    Aggregate, AlternatingStatus, Certificate, CrossingSelector, Error, KnotTable, PlanarDiagram, RationalTangle,
};
use common::{compositions, corpus_diagrams, has_nugatory_crossing, knot, naive_bracket};

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

/// Criteria that cannot pass; each has a test pinning down why.
const KNOWN_RED: &[usize] = &[2];

fn table() -> &'static KnotTable {
    KnotTable::bundled()
}

fn opts() -> CcaOptions {
    CcaOptions::default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn span_le(d: &PlanarDiagram, n: usize) -> bool {
    let s = jones_span(&jones(d).unwrap()).unwrap();
    *s.numer() <= n as i64 * *s.denom()
}

fn span_eq(d: &PlanarDiagram, n: usize) -> bool {
    let s = jones_span(&jones(d).unwrap()).unwrap();
    *s.numer() == n as i64 * *s.denom()
}

fn table_reproduction() -> Outcome {
    let mut slowest = Duration::ZERO;
    for row in NON_ALTERNATING_CCA {
        let start = Instant::now();
        let d = knot(row.dt);
        let r = cca_check_with(&d, 1, table(), &opts()).map_err(|e| format!("{}: {e}", row.name))?;
        slowest = slowest.max(start.elapsed());
        ensure(r.aggregate == Aggregate::Yes, || format!("{}: {}", row.name, r.aggregate.label()))?;
        ensure(
            r.results.iter().all(|s| s.verdict.status == AlternatingStatus::Alternating),
            || format!("{}: not every change alternating", row.name),
        )?;
        ensure(r.results.len() == d.crossing_count(), || format!("{}: subset count", row.name))?;
    }
    ensure(slowest < Duration::from_secs(5), || format!("slowest row took {slowest:?}"))?;
    Ok(format!("19/19 rows CCA, slowest {slowest:.1?}"))
}

fn non_minimal_10_151() -> Outcome {
    let d = knot(NON_MINIMAL_10_151.dt);
    let r = cca_check_with(&d, 1, table(), &opts()).map_err(|e| e.to_string())?;
    let count = r.alternating_count();
    match &r.aggregate {
        Aggregate::Yes => Ok(format!("{count}/11 alternating")),
        agg => {
            let bad: Vec<String> = r
                .results
                .iter()
                .filter(|s| !s.verdict.is_alternating())
                .map(|s| format!("change {:?} gives {}", s.subset, s.verdict.certificate))
                .collect();
            Err(format!("{count}/11 alternating, aggregate {}: {}", agg.label(), bad.join(", ")))
        }
    }
}

fn not_3_cca_8_20() -> Outcome {
    let row = NON_ALTERNATING_CCA.iter().find(|r| r.name == "8_20").unwrap();
    let r = cca_check_with(&knot(row.dt), 3, table(), &opts()).map_err(|e| e.to_string())?;
    let Aggregate::No { witness } = &r.aggregate else {
        return Err(format!("aggregate {}", r.aggregate.label()));
    };
    let w = r.results.iter().find(|s| &s.subset == witness).unwrap();
    ensure(matches!(w.verdict.certificate, Certificate::TableMatchNegative(_)), || {
        format!("witness certificate {}", w.verdict.certificate)
    })?;
    Ok(format!("witness {witness:?}: {}", w.verdict.certificate))
}

fn rational_cca() -> Outcome {
    let mut knots = 0;
    for n in 3..=9 {
        for twists in compositions(n) {
            let d = match RationalTangle::new(twists.clone()).unwrap().to_diagram() {
                Ok(d) => d,
                Err(Error::MultiComponent(_)) => continue,
                Err(e) => return Err(format!("{twists:?}: {e}")),
            };
            let r = cca_check_with(&d, 1, table(), &opts()).map_err(|e| e.to_string())?;
            ensure(r.aggregate == Aggregate::Yes, || format!("{twists:?}: {}", r.aggregate.label()))?;
            knots += 1;
        }
    }
    Ok(format!("{knots} positive rational knots with 3-9 crossings"))
}

fn bracket_oracle() -> Outcome {
    let mut count = 0;
    for (name, d) in corpus_diagrams().into_iter().filter(|(_, d)| d.crossing_count() <= 10) {
        let variants =
            std::iter::once(d.clone()).chain((0..d.crossing_count()).map(|c| d.crossing_change(CrossingSelector(c)).unwrap()));
        for e in variants {
            ensure(kauffman_bracket(&e).unwrap() == naive_bracket(&e), || name.to_string())?;
            count += 1;
        }
    }
    Ok(format!("{count} diagrams equal to the 2^n state sum"))
}

fn span_bounds() -> Outcome {
    // deterministic pseudo-random crossing changes of small census diagrams
    let census: Vec<PlanarDiagram> = common::census_diagrams(10).into_iter().map(|(_, _, d)| d).collect();
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let mut generated = 0;
    for _ in 0..1500 {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let d = &census[(state >> 33) as usize % census.len()];
        let picks: Vec<usize> = (0..d.crossing_count()).filter(|c| state >> (c + 3) & 1 == 1).collect();
        let e = d.crossing_changes(&picks).unwrap();
        ensure(span_le(&e, e.crossing_count()), || format!("{:?}", extract_dt(&e)))?;
        generated += 1;
    }
    let mut full = 0;
    for (name, d) in corpus_diagrams() {
        for c in 0..d.crossing_count() {
            let r = d.crossing_change(CrossingSelector(c)).unwrap().reduce();
            if r.is_alternating_diagram() && !has_nugatory_crossing(&r) {
                ensure(span_eq(&r, r.crossing_count()), || format!("{name} change {c}"))?;
                full += 1;
            }
        }
    }
    Ok(format!("span <= n on {generated} diagrams; span = n on {full} reduced alternating diagrams"))
}

fn invariance() -> Outcome {
    let mut count = 0;
    for (name, d) in corpus_diagrams() {
        ensure(determinant(&d).unwrap() % 2 == 1, || format!("{name}: even determinant"))?;
        let m = d.mirror();
        ensure(jones(&m).unwrap() == jones(&d).unwrap().mirror(), || format!("{name}: mirror jones"))?;
        let s = signature(&d).unwrap();
        ensure(signature(&m).unwrap() == -s, || format!("{name}: mirror signature"))?;
        for c in 0..d.crossing_count() {
            let e = d.crossing_change(CrossingSelector(c)).unwrap();
            ensure(jones(&e.reduce()).unwrap() == jones(&e).unwrap(), || format!("{name} {c}: reduce"))?;
            let ds = (signature(&e).unwrap() - s).abs();
            ensure(ds == 0 || ds == 2, || format!("{name} {c}: signature moved by {ds}"))?;
            ensure(determinant(&e).unwrap() % 2 == 1, || format!("{name} {c}: even determinant"))?;
            count += 1;
        }
    }
    Ok(format!("20 corpus knots and {count} single changes"))
}

fn round_trips() -> Outcome {
    for row in corpus::cca_rows() {
        let code = parse_dt(row.dt).map_err(|e| e.to_string())?;
        ensure(code.to_string() == row.dt.replace(' ', ""), || format!("{}: serialize", row.name))?;
        ensure(parse_dt(&code.to_string()).unwrap() == code, || format!("{}: reparse", row.name))?;
        let canon = extract_dt(&knot(row.dt)).map_err(|e| e.to_string())?;
        ensure(canon == code.canonical(), || format!("{}: {canon} != {}", row.name, code.canonical()))?;
    }
    Ok("20/20 corpus codes".into())
}

fn alternation_bound() -> Outcome {
    for row in NON_ALTERNATING_CCA {
        let b = alt_upper_bound_with(&knot(row.dt), 1, table(), &opts()).map_err(|e| e.to_string())?;
        ensure(b.upper == Some(1), || format!("{}: upper {:?}", row.name, b.upper))?;
    }
    let mut zero = 0;
    for (_, d) in corpus_diagrams() {
        for c in 0..d.crossing_count() {
            let r = d.crossing_change(CrossingSelector(c)).unwrap().reduce();
            if r.is_alternating_diagram() {
                let b = alt_upper_bound_with(&r, 1, table(), &opts()).map_err(|e| e.to_string())?;
                ensure(b.upper == Some(0), || format!("{}: upper {:?}", extract_dt(&r).unwrap(), b.upper))?;
                zero += 1;
            }
        }
    }
    for s in (-10i64..=10).step_by(2) {
        for sigma in (-10..=10).step_by(2) {
            ensure(abe_lower_bound(AbeInput { s, sigma }) == Ok((s + sigma).unsigned_abs() / 2), || {
                format!("abe({s}, {sigma})")
            })?;
        }
    }
    Ok(format!("upper 1 on 19 rows, 0 on {zero} alternating diagrams, 121-point Abe grid"))
}

fn census_substitute() -> Outcome {
    // The full 12-crossing sweep needs external Rasmussen values; only the
    // bound arithmetic is checked.
    for (s, sigma) in [(4, 0), (0, 4), (-6, 2), (2, -6), (6, -2), (8, -4)] {
        ensure(abe_lower_bound(AbeInput { s, sigma }) == Ok(2), || format!("abe({s}, {sigma})"))?;
    }
    Ok("abe_lower_bound = 2 for |s + sigma| / 2 = 2; census sweep not run".into())
}

fn cli(args: &[&str]) -> (Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_cca")).args(args).output().expect("run cca");
    (out.stdout, out.status.code())
}

fn determinism() -> Outcome {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("criterion1.txt");
    let lines: Vec<&str> = NON_ALTERNATING_CCA.iter().map(|r| r.dt).collect();
    std::fs::write(&path, lines.join("\n")).map_err(|e| e.to_string())?;
    let file = path.to_str().unwrap();
    let mut bytes = 0;
    for args in [vec!["cca", "--file", file], vec!["cca", "-k", "2", "--file", file], vec!["analyze", "--file", file]] {
        let mut par = vec!["--format", "machine"];
        par.extend(&args);
        let mut ser = par.clone();
        ser.push("--serial");
        let (a, ca) = cli(&par);
        let (b, cb) = cli(&ser);
        ensure(ca == Some(0) && cb == Some(0), || format!("{args:?}: exit {ca:?} / {cb:?}"))?;
        ensure(!a.is_empty() && a == b, || format!("{args:?}: outputs differ"))?;
        bytes += a.len();
    }
    Ok(format!("{bytes} bytes identical"))
}

fn main() {
    let criteria: [(&str, Check); 11] = [
        ("table reproduction", table_reproduction),
        ("10_151 non-minimal diagram is CCA", non_minimal_10_151),
        ("8_20 not 3-CCA", not_3_cca_8_20),
        ("rational CCA sweep", rational_cca),
        ("bracket oracle equivalence", bracket_oracle),
        ("span bounds", span_bounds),
        ("invariance suite", invariance),
        ("round trips", round_trips),
        ("alternation bounds", alternation_bound),
        ("12-crossing census (substitute)", census_substitute),
        ("serial/parallel determinism", determinism),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let id = i + 1;
        let outcome = check();
        let (mark, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        let note = if outcome.is_err() && KNOWN_RED.contains(&id) { " [known]" } else { "" };
        println!("criterion {id:>2} {mark} {name}: {detail}{note}");
        if outcome.is_err() != KNOWN_RED.contains(&id) {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
