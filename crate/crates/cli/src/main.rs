//! `cca`: crossing-change alternating analysis from the command line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use cca_core::cca::{
    alt_upper_bound_with, cca_check_with, default_kmax, kcca_profile_with, AbeInput, Aggregate,
    CcaOptions, CcaReport, DEFAULT_BUDGET,
};
use cca_core::corpus::{self, CorpusRow};
use cca_core::tables::{build_table, parse_census, KnotTable};
use cca_core::{
    classify_alternating, determinant, extract_dt, jones, jones_span, parse_conway, parse_dt,
    realize_dt, signature, AlternatingVerdict, Error, PlanarDiagram,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

const MACHINE_HELP: &str = "\
Machine format: one JSON object per line, fields in a fixed order.
  analyze:   record=\"analyze\", input, n, writhe, reduced_crossings, jones, span,
             determinant, signature, status, certificate, detail
  cca:       record=\"subset\", input, k, subset, status, certificate, detail,
             reduced_crossings; then record=\"aggregate\", input, k, subsets,
             alternating, aggregate, witness, unresolved
  alt:       record=\"alt\", input, lower, upper, witness, notes
  reproduce: record=\"row\", name, conway, dt, n, k, alternating, aggregate, pass;
             then record=\"summary\", passed, total

Exit status: 0 success, 1 other error, 2 usage, 3 parse error,
4 realization error, 5 budget refused, 6 assertion failure.";

#[derive(Parser)]
#[command(name = "cca", version, about = "Crossing-change alternating (CCA) analysis of knot diagrams")]
#[command(after_long_help = MACHINE_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Knot census TSV; the bundled census is used when absent.
    #[arg(long, global = true, env = "CCA_KNOT_TABLE", value_name = "PATH")]
    table: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Evaluate subsets on one thread.
    #[arg(long, global = true)]
    serial: bool,
    /// Largest number of subsets one check may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_name = "N")]
    budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// DT code, e.g. `{{3},{4,6,2}}`.
    #[arg(long)]
    dt: Option<String>,
    /// Rational or ramified Conway notation, e.g. `3, 21, -2`.
    #[arg(long)]
    conway: Option<String>,
    /// File with one DT code or Conway string per line; `#` comments.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and alternating verdict of a knot.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// CCA (k = 1) or k-CCA check; `--kmax` sweeps k = 1..=kmax.
    Cca {
        #[command(flatten)]
        input: Input,
        #[arg(short, default_value_t = 1, conflicts_with = "kmax")]
        k: usize,
        /// Sweep k = 1..=KMAX; `0` means floor(n/2) + 1.
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Bounds on the number of crossing changes to an alternating knot.
    Alt {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        kmax: usize,
        /// Rasmussen invariant s, for the lower bound |s + sigma| / 2.
        #[arg(long, allow_hyphen_values = true)]
        rasmussen: Option<i64>,
    },
    /// Checks the reference CCA diagrams.
    Reproduce {
        /// Also print the k-CCA profile of the 8_20 diagram.
        #[arg(long)]
        kcca: bool,
    },
    /// Builds a census TSV from `name DT [alt]` lines.
    Table {
        /// Census input file.
        #[arg(long, value_name = "PATH")]
        census: PathBuf,
        /// Output file; standard output when absent.
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax(_) | Error::InvalidCode(_) | Error::UnsupportedConway(_) | Error::Census { .. } => 3,
            Error::NonRealizable
            | Error::InvalidDiagram(_)
            | Error::MultiComponent(_)
            | Error::TooManyCrossings { .. } => 4,
            Error::BudgetExceeded { .. } => 5,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> CliResult<()> {
    let g = &cli.global;
    let opts = CcaOptions { budget: g.budget, parallel: !g.serial && cfg!(feature = "parallel") };
    match &cli.command {
        Command::Analyze { input } => {
            let table = load_table(g)?;
            for (text, d) in read_inputs(input)? {
                analyze(out, g.format, &text, &d, &table)?;
            }
            Ok(())
        }
        Command::Cca { input, k, kmax } => {
            let table = load_table(g)?;
            for (text, d) in read_inputs(input)? {
                let reports: Vec<CcaReport> = match kmax {
                    Some(m) => {
                        let m = if *m == 0 { default_kmax(d.crossing_count()) } else { *m };
                        kcca_profile_with(&d, Some(m), &table, &opts)?.into_values().collect()
                    }
                    None => vec![cca_check_with(&d, *k, &table, &opts)?],
                };
                for r in &reports {
                    emit_cca(out, g.format, &text, r);
                }
            }
            Ok(())
        }
        Command::Alt { input, kmax, rasmussen } => {
            let table = load_table(g)?;
            for (text, d) in read_inputs(input)? {
                let mut bound = alt_upper_bound_with(&d, *kmax, &table, &opts)?;
                if let Some(s) = rasmussen {
                    bound = bound.with_abe(AbeInput { s: *s, sigma: signature(&d)? })?;
                }
                match g.format {
                    Format::Machine => json_line(out, &AltRecord {
                        record: "alt",
                        input: &text,
                        lower: bound.lower,
                        upper: bound.upper,
                        witness: bound.witness.clone(),
                        notes: bound.notes.clone(),
                    }),
                    Format::Text => {
                        let upper = bound.upper.map_or("not found".to_string(), |u| u.to_string());
                        let _ = writeln!(out, "{text}\n  lower bound  {}\n  upper bound  {upper}", bound.lower);
                        if let Some(w) = &bound.witness {
                            let _ = writeln!(out, "  witness      {w:?}");
                        }
                        for n in &bound.notes {
                            let _ = writeln!(out, "  note         {n}");
                        }
                    }
                }
            }
            Ok(())
        }
        Command::Reproduce { kcca } => {
            let table = load_table(g)?;
            reproduce(out, g.format, &table, &opts, *kcca)
        }
        Command::Table { census, output } => {
            let text = std::fs::read_to_string(census)
                .map_err(|e| Failure { code: 1, message: format!("{}: {e}", census.display()) })?;
            let table = build_table(parse_census(&text)?)?;
            match output {
                Some(path) => table.save(path)?,
                None => out.push_str(&table.to_tsv()),
            }
            Ok(())
        }
    }
}

fn load_table(g: &Global) -> CliResult<KnotTable> {
    match &g.table {
        Some(path) => Ok(KnotTable::load(path)?),
        None => Ok(KnotTable::bundled().clone()),
    }
}

fn parse_input(text: &str) -> CliResult<PlanarDiagram> {
    if text.trim_start().starts_with('{') {
        Ok(realize_dt(&parse_dt(text)?)?)
    } else {
        Ok(parse_conway(text)?.to_diagram()?)
    }
}

fn read_inputs(input: &Input) -> CliResult<Vec<(String, PlanarDiagram)>> {
    let texts: Vec<String> = if let Some(dt) = &input.dt {
        vec![dt.clone()]
    } else if let Some(c) = &input.conway {
        vec![c.clone()]
    } else {
        let path = input.file.as_ref().expect("clap enforces one input");
        let content = std::fs::read_to_string(path)
            .map_err(|e| Failure { code: 1, message: format!("{}: {e}", path.display()) })?;
        content
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
            .filter(|l| !l.is_empty())
            .collect()
    };
    texts
        .into_iter()
        .map(|t| {
            let d = parse_input(&t)?;
            Ok((t.trim().to_string(), d))
        })
        .collect()
}

fn json_line<T: Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string(value).expect("records serialize"));
    out.push('\n');
}

#[derive(Serialize)]
struct AnalyzeRecord<'a> {
    record: &'static str,
    input: &'a str,
    n: usize,
    writhe: i64,
    reduced_crossings: usize,
    jones: String,
    span: String,
    determinant: u64,
    signature: i64,
    status: String,
    certificate: &'static str,
    detail: Option<String>,
}

fn analyze(out: &mut String, format: Format, text: &str, d: &PlanarDiagram, table: &KnotTable) -> CliResult<()> {
    let v = jones(d)?;
    let verdict = classify_alternating(d, table)?;
    let rec = AnalyzeRecord {
        record: "analyze",
        input: text,
        n: d.crossing_count(),
        writhe: d.writhe()?,
        reduced_crossings: d.reduce().crossing_count(),
        span: jones_span(&v)?.to_string(),
        jones: v.serialize(),
        determinant: determinant(d)?,
        signature: signature(d)?,
        status: format!("{:?}", verdict.status),
        certificate: verdict.certificate.label(),
        detail: certificate_detail(&verdict),
    };
    match format {
        Format::Machine => json_line(out, &rec),
        Format::Text => {
            let alternating = match verdict.status {
                cca_core::AlternatingStatus::Alternating => "Yes",
                cca_core::AlternatingStatus::NonAlternating => "No",
                cca_core::AlternatingStatus::Unknown => "Unknown",
            };
            let _ = writeln!(out, "{text}");
            let _ = writeln!(out, "  dt           {}", extract_dt(d)?);
            let _ = writeln!(out, "  crossings    {}", rec.n);
            let _ = writeln!(out, "  writhe       {}", rec.writhe);
            let _ = writeln!(out, "  reduced      {}", rec.reduced_crossings);
            let _ = writeln!(out, "  jones        {}", rec.jones);
            let _ = writeln!(out, "  span         {}", rec.span);
            let _ = writeln!(out, "  determinant  {}", rec.determinant);
            let _ = writeln!(out, "  signature    {}", rec.signature);
            let _ = writeln!(out, "  alternating  {alternating} ({})", verdict.certificate);
        }
    }
    Ok(())
}

fn certificate_detail(v: &AlternatingVerdict) -> Option<String> {
    match &v.certificate {
        cca_core::Certificate::ConnectedSum(_) => Some(v.certificate.to_string()),
        c => c.detail().map(str::to_string),
    }
}

#[derive(Serialize)]
struct SubsetRecord<'a> {
    record: &'static str,
    input: &'a str,
    k: usize,
    subset: &'a [usize],
    status: String,
    certificate: &'static str,
    detail: Option<String>,
    reduced_crossings: usize,
}

#[derive(Serialize)]
struct AggregateRecord<'a> {
    record: &'static str,
    input: &'a str,
    k: usize,
    subsets: usize,
    alternating: usize,
    aggregate: &'static str,
    witness: Option<&'a [usize]>,
    unresolved: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct AltRecord<'a> {
    record: &'static str,
    input: &'a str,
    lower: u64,
    upper: Option<usize>,
    witness: Option<Vec<usize>>,
    notes: Vec<String>,
}

fn emit_cca(out: &mut String, format: Format, text: &str, r: &CcaReport) {
    let (witness, unresolved) = match &r.aggregate {
        Aggregate::No { witness } => (Some(witness.as_slice()), Vec::new()),
        Aggregate::Unknown { unresolved } => (None, unresolved.clone()),
        Aggregate::Yes => (None, Vec::new()),
    };
    match format {
        Format::Machine => {
            for s in &r.results {
                json_line(out, &SubsetRecord {
                    record: "subset",
                    input: text,
                    k: r.k,
                    subset: &s.subset,
                    status: format!("{:?}", s.verdict.status),
                    certificate: s.verdict.certificate.label(),
                    detail: certificate_detail(&s.verdict),
                    reduced_crossings: s.verdict.reduced_crossings,
                });
            }
            json_line(out, &AggregateRecord {
                record: "aggregate",
                input: text,
                k: r.k,
                subsets: r.results.len(),
                alternating: r.alternating_count(),
                aggregate: r.aggregate.label(),
                witness,
                unresolved,
            });
        }
        Format::Text => {
            let _ = writeln!(out, "{text}  k={}  n={}", r.k, r.n);
            for s in &r.results {
                let _ = writeln!(
                    out,
                    "  {:<16} {:<15} {}",
                    format!("{:?}", s.subset),
                    format!("{:?}", s.verdict.status),
                    s.verdict.certificate
                );
            }
            let _ = write!(
                out,
                "  aggregate: {} ({}/{} alternating)",
                r.aggregate.label(),
                r.alternating_count(),
                r.results.len()
            );
            if let Some(w) = witness {
                let _ = write!(out, ", witness {w:?}");
            }
            out.push('\n');
        }
    }
}

#[derive(Serialize)]
struct RowRecord<'a> {
    record: &'static str,
    name: &'a str,
    conway: &'a str,
    dt: &'a str,
    n: usize,
    k: usize,
    alternating: usize,
    aggregate: &'static str,
    pass: bool,
}

fn reproduce(out: &mut String, format: Format, table: &KnotTable, opts: &CcaOptions, kcca: bool) -> CliResult<()> {
    let mut failures = Vec::new();
    let mut total = 0;
    let mut row_line = |out: &mut String, row: &CorpusRow, k: usize, expect_yes: bool| -> CliResult<()> {
        let d = realize_dt(&parse_dt(row.dt)?)?;
        let r = cca_check_with(&d, k, table, opts)?;
        let pass = if expect_yes {
            r.aggregate == Aggregate::Yes
        } else {
            matches!(r.aggregate, Aggregate::No { .. })
        };
        total += 1;
        if !pass {
            let detail = r
                .results
                .iter()
                .filter(|s| !s.verdict.is_alternating())
                .map(|s| format!("{:?}: {}", s.subset, s.verdict.certificate))
                .collect::<Vec<_>>()
                .join(", ");
            failures.push(format!("{} k={k}: {detail}", row.name));
        }
        match format {
            Format::Machine => json_line(out, &RowRecord {
                record: "row",
                name: row.name,
                conway: row.conway,
                dt: row.dt,
                n: r.n,
                k,
                alternating: r.alternating_count(),
                aggregate: r.aggregate.label(),
                pass,
            }),
            Format::Text => {
                let _ = writeln!(
                    out,
                    "{:<9} {:<30} n={:<3} k={k}  {:>2}/{:<3} {:<8} {}",
                    row.name,
                    row.conway,
                    r.n,
                    r.alternating_count(),
                    r.results.len(),
                    r.aggregate.label(),
                    if pass { "ok" } else { "FAIL" }
                );
            }
        }
        Ok(())
    };
    for row in corpus::cca_rows() {
        row_line(out, &row, 1, true)?;
    }
    let row_8_20 = corpus::NON_ALTERNATING_CCA.iter().find(|r| r.name == "8_20").expect("8_20 row");
    row_line(out, row_8_20, 3, false)?;

    if kcca {
        let d = realize_dt(&parse_dt(row_8_20.dt)?)?;
        let profile = kcca_profile_with(&d, None, table, opts)?;
        let line: Vec<String> = profile.iter().map(|(k, r)| format!("{k}:{}", r.aggregate.label())).collect();
        match format {
            Format::Machine => json_line(out, &serde_json::json!({
                "record": "profile", "name": "8_20",
                "profile": profile.iter().map(|(k, r)| (k.to_string(), r.aggregate.label())).collect::<std::collections::BTreeMap<_, _>>(),
            })),
            Format::Text => {
                let _ = writeln!(out, "8_20 k-CCA profile: {}", line.join(" "));
            }
        }
    }
    let passed = total - failures.len();
    match format {
        Format::Machine => json_line(out, &serde_json::json!({ "record": "summary", "passed": passed, "total": total })),
        Format::Text => {
            let _ = writeln!(out, "{passed}/{total} assertions pass");
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure { code: 6, message: format!("failed rows: {}", failures.join("; ")) })
    }
}
