//! CCA and k-CCA classification, alternation-number bounds.
//!
//! A diagram is k-CCA when changing any k of its crossings at once yields an
//! alternating knot. Subsets are enumerated in lexicographic order and
//! classified independently, in parallel when the `parallel` feature is on;
//! reports are identical either way.

use std::collections::BTreeMap;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::oracle::{classify_alternating, AlternatingStatus, AlternatingVerdict};
use crate::tables::KnotTable;

/// Default cap on the number of subsets a single check may enumerate.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CcaOptions {
    /// Largest `C(n, k)` accepted.
    pub budget: u64,
    /// Fan subsets out over the rayon pool. Ignored without the `parallel`
    /// feature.
    pub parallel: bool,
}

impl Default for CcaOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, parallel: cfg!(feature = "parallel") }
    }
}

impl CcaOptions {
    pub fn serial() -> Self {
        Self { parallel: false, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Aggregate {
    Yes,
    /// A subset whose change gives a certified non-alternating knot.
    No { witness: Vec<usize> },
    Unknown { unresolved: Vec<Vec<usize>> },
}

impl Aggregate {
    pub fn label(&self) -> &'static str {
        match self {
            Aggregate::Yes => "Yes",
            Aggregate::No { .. } => "No",
            Aggregate::Unknown { .. } => "Unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetResult {
    /// Sorted crossing indices.
    pub subset: Vec<usize>,
    pub verdict: AlternatingVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcaReport {
    pub k: usize,
    pub n: usize,
    /// One entry per k-subset, in lexicographic order.
    pub results: Vec<SubsetResult>,
    pub aggregate: Aggregate,
}

impl CcaReport {
    pub fn alternating_count(&self) -> usize {
        self.results.iter().filter(|r| r.verdict.is_alternating()).count()
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All k-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn classify_all(
    d: &PlanarDiagram,
    subsets: Vec<Vec<usize>>,
    table: &KnotTable,
    opts: &CcaOptions,
) -> Result<Vec<SubsetResult>> {
    let eval = |subset: Vec<usize>| -> Result<SubsetResult> {
        let verdict = classify_alternating(&d.crossing_changes(&subset)?, table)?;
        Ok(SubsetResult { subset, verdict })
    };
    #[cfg(feature = "parallel")]
    if opts.parallel {
        use rayon::prelude::*;
        return subsets.into_par_iter().map(eval).collect();
    }
    let _ = opts;
    subsets.into_iter().map(eval).collect()
}

fn check_budget(n: usize, k: usize, budget: u64) -> Result<()> {
    let count = binomial(n, k);
    if count > budget as u128 {
        return Err(Error::BudgetExceeded { count, budget });
    }
    Ok(())
}

pub fn cca_check(d: &PlanarDiagram, k: usize, table: &KnotTable) -> Result<CcaReport> {
    cca_check_with(d, k, table, &CcaOptions::default())
}

pub fn cca_check_with(
    d: &PlanarDiagram,
    k: usize,
    table: &KnotTable,
    opts: &CcaOptions,
) -> Result<CcaReport> {
    d.require_knot()?;
    let n = d.crossing_count();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    check_budget(n, k, opts.budget)?;
    let results = classify_all(d, subsets(n, k), table, opts)?;
    debug_assert_eq!(results.len() as u128, binomial(n, k));

    let witness = results
        .iter()
        .find(|r| r.verdict.status == AlternatingStatus::NonAlternating)
        .map(|r| r.subset.clone());
    let unresolved: Vec<Vec<usize>> = results
        .iter()
        .filter(|r| r.verdict.status == AlternatingStatus::Unknown)
        .map(|r| r.subset.clone())
        .collect();
    let aggregate = match witness {
        Some(witness) => Aggregate::No { witness },
        None if unresolved.is_empty() => Aggregate::Yes,
        None => Aggregate::Unknown { unresolved },
    };
    Ok(CcaReport { k, n, results, aggregate })
}

/// The sweep limit `floor(n/2) + 1`, capped at `n`.
pub fn default_kmax(n: usize) -> usize {
    (n / 2 + 1).min(n)
}

pub fn kcca_profile(
    d: &PlanarDiagram,
    kmax: Option<usize>,
    table: &KnotTable,
) -> Result<BTreeMap<usize, CcaReport>> {
    kcca_profile_with(d, kmax, table, &CcaOptions::default())
}

/// `cca_check` for every k in `1..=kmax`.
pub fn kcca_profile_with(
    d: &PlanarDiagram,
    kmax: Option<usize>,
    table: &KnotTable,
    opts: &CcaOptions,
) -> Result<BTreeMap<usize, CcaReport>> {
    let n = d.crossing_count();
    let kmax = kmax.unwrap_or_else(|| default_kmax(n));
    if kmax > n {
        return Err(Error::KOutOfRange { k: kmax, n });
    }
    (1..=kmax).map(|k| Ok((k, cca_check_with(d, k, table, opts)?))).collect()
}

/// Rasmussen invariant (external) and signature of a knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbeInput {
    pub s: i64,
    pub sigma: i64,
}

/// `|s + sigma| / 2`, a lower bound for the alternation number.
pub fn abe_lower_bound(input: AbeInput) -> Result<u64> {
    let AbeInput { s, sigma } = input;
    if s % 2 != 0 || sigma % 2 != 0 {
        return Err(Error::OddAbeInput { s, sigma });
    }
    Ok((s + sigma).unsigned_abs() / 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltBound {
    pub lower: u64,
    /// Least number of changes found to give an alternating knot.
    pub upper: Option<usize>,
    /// A subset achieving `upper`.
    pub witness: Option<Vec<usize>>,
    pub notes: Vec<String>,
}

impl AltBound {
    /// Raises the lower bound with the Abe inequality.
    pub fn with_abe(mut self, input: AbeInput) -> Result<Self> {
        let abe = abe_lower_bound(input)?;
        if abe > self.lower {
            self.lower = abe;
            self.notes.push(format!("lower bound {abe} from s = {}, sigma = {}", input.s, input.sigma));
        }
        Ok(self)
    }
}

pub fn alt_upper_bound(d: &PlanarDiagram, kmax: usize, table: &KnotTable) -> Result<AltBound> {
    alt_upper_bound_with(d, kmax, table, &CcaOptions::default())
}

/// Smallest `k <= kmax` such that some k-subset change is certified
/// alternating. Unknown verdicts never count.
pub fn alt_upper_bound_with(
    d: &PlanarDiagram,
    kmax: usize,
    table: &KnotTable,
    opts: &CcaOptions,
) -> Result<AltBound> {
    let n = d.crossing_count();
    let own = classify_alternating(d, table)?;
    let mut bound = AltBound { lower: 0, upper: None, witness: None, notes: Vec::new() };
    if own.is_alternating() {
        bound.upper = Some(0);
        bound.witness = Some(Vec::new());
        return Ok(bound);
    }
    if own.status == AlternatingStatus::NonAlternating {
        bound.lower = 1;
        bound.notes.push(format!("knot is non-alternating: {}", own.certificate));
    }
    for k in 1..=kmax.min(n) {
        check_budget(n, k, opts.budget)?;
        let results = classify_all(d, subsets(n, k), table, opts)?;
        if let Some(hit) = results.into_iter().find(|r| r.verdict.is_alternating()) {
            bound.upper = Some(k);
            bound.witness = Some(hit.subset);
            return Ok(bound);
        }
    }
    bound.notes.push(format!("no alternating change found with up to {} crossings", kmax.min(n)));
    Ok(bound)
}
