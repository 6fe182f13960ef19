//! Knot census indexed by invariant fingerprint.
//!
//! Tables persist as TSV with the header
//! `#name  n  alt  dt  jones  det  abs_signature`, one knot per line. The
//! `alt` column is trusted as given; it is never recomputed.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::OnceLock;

use crate::codes::{parse_dt, realize_dt, DtCode};
use crate::error::{Error, Result};
use crate::invariants::JonesPolynomial;
use crate::oracle::{fingerprint, KnotFingerprint};

pub const TSV_HEADER: &str = "#name\tn\talt\tdt\tjones\tdet\tabs_signature";

static BUNDLED_TSV: &str = include_str!("../data/knots.tsv");

/// Number of alternating prime knots with n crossings, n = 3..=10. In the
/// classical numbering they come first.
const CLASSICAL_ALTERNATING: [(usize, usize); 8] =
    [(3, 1), (4, 1), (5, 2), (6, 3), (7, 7), (8, 18), (9, 41), (10, 123)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub crossing_number: usize,
    pub alternating: bool,
    pub dt: DtCode,
    pub fingerprint: KnotFingerprint,
}

/// One census line before fingerprinting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub name: String,
    pub dt: DtCode,
    /// Explicit flag; otherwise taken from the name.
    pub alternating: Option<bool>,
}

impl CensusEntry {
    pub fn new(name: impl Into<String>, dt: DtCode) -> Self {
        Self { name: name.into(), dt, alternating: None }
    }
}

#[derive(Clone, Debug, Default)]
pub struct KnotTable {
    records: Vec<KnotRecord>,
    index: HashMap<KnotFingerprint, Vec<usize>>,
}

/// Alternating flag encoded by a knot name: `K11a5`/`11n34` style markers,
/// or the classical `n_k` numbering.
pub fn name_alternating_flag(name: &str) -> Option<bool> {
    let body = name.strip_prefix('K').unwrap_or(name);
    let digits = body.bytes().take_while(u8::is_ascii_digit).count();
    let rest = &body[digits..];
    if digits > 0 && rest.len() > 1 && rest[1..].bytes().all(|b| b.is_ascii_digit()) {
        match rest.as_bytes()[0] {
            b'a' => return Some(true),
            b'n' => return Some(false),
            _ => {}
        }
    }
    let (n, k) = name.split_once('_')?;
    let n: usize = n.parse().ok()?;
    let k: usize = k.parse().ok()?;
    if n == 0 {
        return (k == 1).then_some(true);
    }
    let &(_, alt) = CLASSICAL_ALTERNATING.iter().find(|&&(m, _)| m == n)?;
    Some(k <= alt)
}

/// Fingerprints every entry. Flags come from the entry or its name.
pub fn build_table(census: impl IntoIterator<Item = CensusEntry>) -> Result<KnotTable> {
    let mut table = KnotTable::default();
    for (line, entry) in census.into_iter().enumerate() {
        let census_err = |reason: String| Error::Census { line: line + 1, reason };
        let alternating = match (entry.alternating, name_alternating_flag(&entry.name)) {
            (Some(a), Some(b)) if a != b => {
                return Err(census_err(format!("{}: flag contradicts the name", entry.name)))
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => {
                return Err(census_err(format!("{}: no alternating flag", entry.name)))
            }
        };
        let d = realize_dt(&entry.dt).map_err(|e| census_err(format!("{}: {e}", entry.name)))?;
        let fingerprint = fingerprint(&d).map_err(|e| census_err(format!("{}: {e}", entry.name)))?;
        table.insert(KnotRecord {
            name: entry.name,
            crossing_number: entry.dt.crossing_count(),
            alternating,
            dt: entry.dt,
            fingerprint,
        });
    }
    Ok(table)
}

/// Reads `name DT [alt]` lines; `#` starts a comment.
pub fn parse_census(text: &str) -> Result<Vec<CensusEntry>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |reason: String| Error::Census { line: i + 1, reason };
        let (name, rest) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| err("expected `name DT [alt]`".into()))?;
        let rest = rest.trim();
        let (dt_text, flag) = match rest.rfind("}}") {
            Some(end) => (&rest[..end + 2], rest[end + 2..].trim()),
            None => return Err(err(format!("no DT code in `{rest}`"))),
        };
        let dt = parse_dt(dt_text).map_err(|e| err(e.to_string()))?;
        let alternating = match flag {
            "" => None,
            "1" | "a" | "alt" => Some(true),
            "0" | "n" | "nonalt" => Some(false),
            other => return Err(err(format!("unknown flag `{other}`"))),
        };
        out.push(CensusEntry { name: name.to_string(), dt, alternating });
    }
    Ok(out)
}

impl KnotTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The census compiled into the crate: prime knots through 12 crossings
    /// plus the unknot.
    pub fn bundled() -> &'static KnotTable {
        static TABLE: OnceLock<KnotTable> = OnceLock::new();
        TABLE.get_or_init(|| KnotTable::from_tsv(BUNDLED_TSV).expect("bundled table parses"))
    }

    pub fn insert(&mut self, record: KnotRecord) {
        self.index
            .entry(record.fingerprint.clone())
            .or_default()
            .push(self.records.len());
        self.records.push(record);
    }

    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    /// All records with exactly this fingerprint, in insertion order.
    pub fn lookup(&self, fp: &KnotFingerprint) -> Vec<&KnotRecord> {
        self.index
            .get(fp)
            .map(|ix| ix.iter().map(|&i| &self.records[i]).collect())
            .unwrap_or_default()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from(TSV_HEADER);
        out.push('\n');
        for r in &self.records {
            let fp = &r.fingerprint;
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.name,
                r.crossing_number,
                u8::from(r.alternating),
                r.dt,
                fp.jones.serialize(),
                fp.determinant,
                fp.abs_signature
            )
            .unwrap();
        }
        out
    }

    pub fn from_tsv(text: &str) -> Result<Self> {
        let mut table = Self::default();
        for (i, line) in text.lines().enumerate() {
            if line.starts_with('#') || line.trim().is_empty() {
                continue;
            }
            let err = |reason: String| Error::Census { line: i + 1, reason };
            let cols: Vec<&str> = line.split('\t').collect();
            let [name, n, alt, dt, jones, det, sig] = cols[..] else {
                return Err(err(format!("expected 7 columns, found {}", cols.len())));
            };
            let int = |s: &str| s.trim().parse::<u64>().map_err(|_| err(format!("bad number `{s}`")));
            let alternating = match alt.trim() {
                "1" => true,
                "0" => false,
                other => return Err(err(format!("bad alt flag `{other}`"))),
            };
            if name_alternating_flag(name).is_some_and(|f| f != alternating) {
                return Err(err(format!("{name}: flag contradicts the name")));
            }
            let dt = parse_dt(dt).map_err(|e| err(e.to_string()))?;
            let crossing_number = int(n)? as usize;
            if crossing_number != dt.crossing_count() {
                return Err(err(format!("{name}: n disagrees with the DT code")));
            }
            table.insert(KnotRecord {
                name: name.to_string(),
                crossing_number,
                alternating,
                dt,
                fingerprint: KnotFingerprint {
                    jones: JonesPolynomial::parse(jones).map_err(|e| err(e.to_string()))?,
                    determinant: int(det)?,
                    abs_signature: int(sig)?,
                },
            });
        }
        Ok(table)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_tsv(&text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_tsv()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}
