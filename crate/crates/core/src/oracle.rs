//! Certified decision of whether a diagram presents an alternating knot.
//!
//! The procedure never guesses. On the reduced diagram `r` with `m`
//! crossings it tries, in order:
//!
//! 1. `r` is itself alternating;
//! 2. a visible connected-sum cut: both summands are classified, and the
//!    sum is alternating exactly when both summands are;
//! 3. `span V = m`;
//! 4. an invariant fingerprint match against a census, keeping only census
//!    knots with crossing number at most `m`;
//! 5. a Reidemeister III search for a smaller diagram, which is then run
//!    through the same tiers.
//!
//! Only the census can show that a knot is *not* alternating.

use std::fmt;

use num_rational::Ratio;

use crate::diagram::PlanarDiagram;
use crate::error::Result;
use crate::invariants::{jones, jones_span, signature, JonesPolynomial};
use crate::tables::KnotTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlternatingStatus {
    Alternating,
    NonAlternating,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// The reduced diagram alternates.
    SyntacticReduced,
    /// Jones span equals the reduced crossing count.
    SpanEqualsCrossings,
    /// Fingerprint matches census knots flagged alternating.
    TableMatch(String),
    /// Fingerprint matches census knots flagged non-alternating.
    TableMatchNegative(String),
    /// Verdicts of the two summands of a visible connected sum.
    ConnectedSum(Vec<Certificate>),
    Unresolved(String),
}

impl Certificate {
    pub fn label(&self) -> &'static str {
        match self {
            Certificate::SyntacticReduced => "SyntacticReduced",
            Certificate::SpanEqualsCrossings => "SpanEqualsCrossings",
            Certificate::TableMatch(_) => "TableMatch",
            Certificate::TableMatchNegative(_) => "TableMatchNegative",
            Certificate::ConnectedSum(_) => "ConnectedSum",
            Certificate::Unresolved(_) => "Unresolved",
        }
    }

    /// Matched census name(s) or the unresolved reason.
    pub fn detail(&self) -> Option<&str> {
        match self {
            Certificate::TableMatch(s)
            | Certificate::TableMatchNegative(s)
            | Certificate::Unresolved(s) => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Certificate::ConnectedSum(parts) = self {
            let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
            return write!(f, "ConnectedSum({})", parts.join(" # "));
        }
        match self.detail() {
            Some(d) => write!(f, "{}({d})", self.label()),
            None => f.write_str(self.label()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlternatingVerdict {
    pub status: AlternatingStatus,
    pub certificate: Certificate,
    /// Crossing count after [`PlanarDiagram::reduce`].
    pub reduced_crossings: usize,
}

impl AlternatingVerdict {
    pub fn is_alternating(&self) -> bool {
        self.status == AlternatingStatus::Alternating
    }
}

/// Mirror-invariant knot fingerprint used as the census key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnotFingerprint {
    /// Whichever of `V(t)`, `V(1/t)` serializes first.
    pub jones: JonesPolynomial,
    pub determinant: u64,
    pub abs_signature: u64,
}

pub fn fingerprint(d: &PlanarDiagram) -> Result<KnotFingerprint> {
    let v = jones(d)?;
    let w = v.mirror();
    let jones = if w.serialize() < v.serialize() { w } else { v };
    Ok(KnotFingerprint {
        determinant: jones.at_minus_one().unsigned_abs(),
        abs_signature: signature(d)?.unsigned_abs(),
        jones,
    })
}

/// Diagrams visited per round of the Reidemeister III search.
pub const SIMPLIFY_BUDGET: usize = 2000;

pub fn classify_alternating(d: &PlanarDiagram, table: &KnotTable) -> Result<AlternatingVerdict> {
    d.require_knot()?;
    classify_reduced(d.reduce(), table, true)
}

fn classify_reduced(r: PlanarDiagram, table: &KnotTable, search: bool) -> Result<AlternatingVerdict> {
    let m = r.crossing_count();
    let verdict = |status, certificate| AlternatingVerdict { status, certificate, reduced_crossings: m };

    if r.is_alternating_diagram() {
        return Ok(verdict(AlternatingStatus::Alternating, Certificate::SyntacticReduced));
    }
    if let Some((a, b)) = r.connected_sum_split() {
        let va = classify_reduced(a.reduce(), table, search)?;
        let vb = classify_reduced(b.reduce(), table, search)?;
        use AlternatingStatus::*;
        let status = match (va.status, vb.status) {
            (Alternating, Alternating) => Alternating,
            (NonAlternating, _) | (_, NonAlternating) => NonAlternating,
            _ => Unknown,
        };
        let parts = vec![va.certificate, vb.certificate];
        return Ok(verdict(status, Certificate::ConnectedSum(parts)));
    }
    let v = jones(&r)?;
    if jones_span(&v)? == Ratio::from_integer(m as i64) {
        return Ok(verdict(AlternatingStatus::Alternating, Certificate::SpanEqualsCrossings));
    }

    let fp = fingerprint(&r)?;
    // A knot drawn with m crossings has crossing number at most m.
    let matches: Vec<_> = table
        .lookup(&fp)
        .into_iter()
        .filter(|rec| rec.crossing_number <= m)
        .collect();
    let names = matches.iter().map(|r| r.name.as_str()).collect::<Vec<_>>().join("/");
    if !matches.is_empty() && matches.iter().all(|r| r.alternating) {
        return Ok(verdict(AlternatingStatus::Alternating, Certificate::TableMatch(names)));
    }
    if !matches.is_empty() && matches.iter().all(|r| !r.alternating) {
        return Ok(verdict(AlternatingStatus::NonAlternating, Certificate::TableMatchNegative(names)));
    }
    if search {
        let s = r.simplify(SIMPLIFY_BUDGET);
        if s.crossing_count() < m {
            return classify_reduced(s, table, false);
        }
    }
    let reason = if matches.is_empty() {
        format!("no census match for reduced {m}-crossing diagram")
    } else {
        format!("census matches disagree: {names}")
    };
    Ok(verdict(AlternatingStatus::Unknown, Certificate::Unresolved(reason)))
}
