//! Dowker–Thistlethwaite and Gauss codes.
//!
//! DT codes use the `{{n},{e1,...,en}}` text form. The i-th entry is the even
//! label paired with odd label `2i - 1`; it is negated when the even-numbered
//! passage is the over-passage.

use std::fmt;
use std::str::FromStr;

use crate::diagram::{Crossing, OverPair, PlanarDiagram};
use crate::error::{Error, Result};

/// Largest crossing count accepted by [`realize_dt`].
pub const REALIZE_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DtCode {
    labels: Vec<i32>,
}

impl DtCode {
    pub fn new(labels: Vec<i32>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for &e in &labels {
            let a = e.unsigned_abs() as usize;
            if e == 0 || !a.is_multiple_of(2) || a > 2 * n {
                return Err(Error::InvalidCode(format!(
                    "{e} is not a signed even label in 2..={}",
                    2 * n
                )));
            }
            if std::mem::replace(&mut seen[a / 2], true) {
                return Err(Error::InvalidCode(format!("label {a} repeated")));
            }
        }
        Ok(Self { labels })
    }

    pub fn unknot() -> Self {
        Self { labels: Vec::new() }
    }

    pub fn crossing_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    /// Passage sequence of the code.
    pub fn gauss(&self) -> GaussCode {
        let n = self.labels.len();
        let mut passages = vec![GaussPassage { crossing: 0, over: false }; 2 * n];
        for (i, &e) in self.labels.iter().enumerate() {
            let odd_over = e > 0;
            passages[2 * i] = GaussPassage { crossing: i as u32 + 1, over: odd_over };
            passages[e.unsigned_abs() as usize - 1] =
                GaussPassage { crossing: i as u32 + 1, over: !odd_over };
        }
        GaussCode { passages }
    }

    /// The lexicographically least code over all basepoints and both
    /// traversal directions of the same passage sequence.
    pub fn canonical(&self) -> DtCode {
        self.gauss().canonical_dt().expect("DT codes satisfy the parity condition")
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{{{}}},{{", self.labels.len())?;
        for (i, e) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}}")
    }
}

impl FromStr for DtCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_dt(s)
    }
}

/// Parses `{{n},{e1,...,en}}`, ignoring whitespace. Both ASCII `-` and the
/// typographic minus `−` are accepted.
pub fn parse_dt(text: &str) -> Result<DtCode> {
    let compact: String = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    let syntax = || Error::Syntax(format!("expected {{{{n}},{{e1,...,en}}}}, got `{}`", text.trim()));
    let inner = compact
        .strip_prefix("{{")
        .and_then(|s| s.strip_suffix("}}"))
        .ok_or_else(syntax)?;
    let (count, rest) = inner.split_once("},{").ok_or_else(syntax)?;
    let n: usize = count.parse().map_err(|_| syntax())?;
    let labels: Vec<i32> = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',')
            .map(|t| t.parse::<i32>().map_err(|_| syntax()))
            .collect::<Result<_>>()?
    };
    if labels.len() != n {
        return Err(Error::InvalidCode(format!(
            "declared {n} crossings but listed {} labels",
            labels.len()
        )));
    }
    DtCode::new(labels)
}

/// Uniform label signs.
pub fn dt_is_alternating(code: &DtCode) -> bool {
    code.labels.iter().all(|&e| e > 0) || code.labels.iter().all(|&e| e < 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussPassage {
    /// Crossing id, 1-based.
    pub crossing: u32,
    pub over: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussCode {
    pub passages: Vec<GaussPassage>,
}

impl GaussCode {
    /// Each crossing must be passed exactly twice, once over and once under.
    pub fn validate(&self) -> Result<()> {
        let n = self.passages.len() / 2;
        let mut over = vec![0u8; n + 1];
        let mut under = vec![0u8; n + 1];
        if !self.passages.len().is_multiple_of(2) {
            return Err(Error::InvalidCode("odd number of passages".into()));
        }
        for p in &self.passages {
            let c = p.crossing as usize;
            if c == 0 || c > n {
                return Err(Error::InvalidCode(format!("crossing id {c} out of range")));
            }
            if p.over {
                over[c] += 1;
            } else {
                under[c] += 1;
            }
        }
        if (1..=n).any(|c| over[c] != 1 || under[c] != 1) {
            return Err(Error::InvalidCode("each crossing needs one over and one under pass".into()));
        }
        Ok(())
    }

    /// The DT code read from basepoint `start` in direction `forward`.
    fn dt_from(&self, start: usize, forward: bool) -> Result<Vec<i32>> {
        let len = self.passages.len();
        let n = len / 2;
        let mut first_label = vec![0usize; n + 1];
        let mut labels = vec![0i32; n];
        for j in 0..len {
            let idx = if forward {
                (start + j) % len
            } else {
                (start + len - j) % len
            };
            let p = self.passages[idx];
            let label = j + 1;
            let c = p.crossing as usize;
            if first_label[c] == 0 {
                first_label[c] = label;
                continue;
            }
            let other = first_label[c];
            if (label + other).is_multiple_of(2) {
                return Err(Error::InvalidCode(
                    "passage labels of a crossing share parity".into(),
                ));
            }
            // `p` carries the later label; the earlier pass has the other role.
            let (odd, even, even_over) = if label % 2 == 1 {
                (label, other, !p.over)
            } else {
                (other, label, p.over)
            };
            let sign = if even_over { -1 } else { 1 };
            labels[(odd - 1) / 2] = sign * even as i32;
        }
        Ok(labels)
    }

    /// Least DT code over all `2 * 2n` traversals, comparing entries by
    /// absolute value and then positive before negative.
    pub fn canonical_dt(&self) -> Result<DtCode> {
        self.validate()?;
        let len = self.passages.len();
        if len == 0 {
            return Ok(DtCode::unknot());
        }
        let mut best: Option<Vec<i32>> = None;
        for start in 0..len {
            for forward in [true, false] {
                let code = self.dt_from(start, forward)?;
                if best.as_ref().is_none_or(|b| dt_order_key(&code) < dt_order_key(b)) {
                    best = Some(code);
                }
            }
        }
        Ok(DtCode { labels: best.unwrap() })
    }
}

fn dt_order_key(labels: &[i32]) -> Vec<(u32, bool)> {
    labels.iter().map(|&e| (e.unsigned_abs(), e < 0)).collect()
}

/// Passage sequence of a knot diagram, starting at its basepoint.
pub fn diagram_gauss(d: &PlanarDiagram) -> Result<GaussCode> {
    let passages = d.knot_passages()?;
    Ok(GaussCode {
        passages: passages
            .into_iter()
            .map(|p| GaussPassage { crossing: p.crossing as u32 + 1, over: p.over })
            .collect(),
    })
}

/// Canonical DT code of a knot diagram.
pub fn extract_dt(d: &PlanarDiagram) -> Result<DtCode> {
    diagram_gauss(d)?.canonical_dt()
}

/// Builds a planar diagram for a DT code.
///
/// Every crossing is given the odd passage through slots 0 -> 2; the even
/// passage runs either 1 -> 3 or 3 -> 1. All assignments (with crossing 1
/// pinned, which fixes the global reflection) are searched in order for a
/// planar rotation system. Of the first hit and its reflection, the one
/// with the larger writhe is returned; ties keep the first hit.
pub fn realize_dt(code: &DtCode) -> Result<PlanarDiagram> {
    let n = code.crossing_count();
    if n == 0 {
        return Ok(PlanarDiagram::unknot());
    }
    if n > REALIZE_LIMIT {
        return Err(Error::TooManyCrossings { n, limit: REALIZE_LIMIT });
    }
    let layout = Layout::new(code);
    let flips = layout.planar_flips().next().ok_or(Error::NonRealizable)?;
    let d = layout.diagram(&flips);
    if d.writhe()? >= 0 {
        return Ok(d);
    }
    let reflected: Vec<bool> = flips.iter().map(|f| !f).collect();
    Ok(layout.diagram(&reflected))
}

/// Every planar embedding of the code, one per reflection pair, in the
/// search order of [`realize_dt`]. Codes of prime diagrams have exactly one;
/// diagrams with a connected-sum cut may have several inequivalent ones.
pub fn realizations(code: &DtCode) -> Result<Vec<PlanarDiagram>> {
    let n = code.crossing_count();
    if n == 0 {
        return Ok(vec![PlanarDiagram::unknot()]);
    }
    if n > REALIZE_LIMIT {
        return Err(Error::TooManyCrossings { n, limit: REALIZE_LIMIT });
    }
    let layout = Layout::new(code);
    Ok(layout.planar_flips().map(|f| layout.diagram(&f)).collect())
}

/// Passage bookkeeping shared by every candidate embedding of one code.
struct Layout {
    n: usize,
    /// Crossing index of each passage (0-based passage index).
    crossing_of: Vec<usize>,
    /// Whether the passage is the odd-labelled pass at its crossing.
    is_odd: Vec<bool>,
    odd_over: Vec<bool>,
}

impl Layout {
    fn new(code: &DtCode) -> Self {
        let n = code.crossing_count();
        let mut crossing_of = vec![0; 2 * n];
        let mut is_odd = vec![false; 2 * n];
        let mut odd_over = vec![false; n];
        for (i, &e) in code.labels().iter().enumerate() {
            crossing_of[2 * i] = i;
            is_odd[2 * i] = true;
            crossing_of[e.unsigned_abs() as usize - 1] = i;
            odd_over[i] = e > 0;
        }
        Self { n, crossing_of, is_odd, odd_over }
    }

    fn planar_flips(&self) -> impl Iterator<Item = Vec<bool>> + '_ {
        let n = self.n;
        (0u64..(1u64 << (n - 1))).filter_map(move |mask| {
            let flips: Vec<bool> = (0..n).map(|i| i > 0 && mask >> (i - 1) & 1 == 1).collect();
            (self.face_count(&flips) == n + 2).then_some(flips)
        })
    }

    fn in_slot(&self, p: usize, flips: &[bool]) -> usize {
        if self.is_odd[p] {
            0
        } else if flips[self.crossing_of[p]] {
            3
        } else {
            1
        }
    }

    /// Slot partners for the candidate rotation system.
    fn partners(&self, flips: &[bool]) -> Vec<[(usize, usize); 4]> {
        let len = 2 * self.n;
        let mut out = vec![[(0, 0); 4]; self.n];
        for p in 0..len {
            let q = (p + 1) % len;
            let (c, s_out) = (self.crossing_of[p], (self.in_slot(p, flips) + 2) % 4);
            let (c2, s_in) = (self.crossing_of[q], self.in_slot(q, flips));
            out[c][s_out] = (c2, s_in);
            out[c2][s_in] = (c, s_out);
        }
        out
    }

    fn face_count(&self, flips: &[bool]) -> usize {
        let partners = self.partners(flips);
        let mut seen = vec![[false; 4]; self.n];
        let mut faces = 0;
        for c in 0..self.n {
            for i in 0..4 {
                if seen[c][i] {
                    continue;
                }
                faces += 1;
                let (mut cc, mut ci) = (c, i);
                while !seen[cc][ci] {
                    seen[cc][ci] = true;
                    (cc, ci) = partners[cc][(ci + 1) % 4];
                }
            }
        }
        faces
    }

    fn diagram(&self, flips: &[bool]) -> PlanarDiagram {
        let len = 2 * self.n;
        let mut ports = vec![[0u32; 4]; self.n];
        for p in 0..len {
            let c = self.crossing_of[p];
            let s = self.in_slot(p, flips);
            // Edge p runs from passage p to passage p + 1.
            ports[c][s] = ((p + len - 1) % len) as u32;
            ports[c][(s + 2) % 4] = p as u32;
        }
        let crossings = ports
            .into_iter()
            .enumerate()
            .map(|(c, ports)| {
                let over = if self.odd_over[c] { OverPair::Even } else { OverPair::Odd };
                Crossing::new(ports, over)
            })
            .collect();
        PlanarDiagram::from_crossings_unchecked(crossings)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dt(s: &str) -> DtCode {
        parse_dt(s).unwrap()
    }

    #[test]
    fn parses_brace_format() {
        let c = dt("{{8}, {6, 8, -12, 2, 14, 16, -4, 10}}");
        assert_eq!(c.labels(), &[6, 8, -12, 2, 14, 16, -4, 10]);
        assert_eq!(c.to_string(), "{{8},{6,8,-12,2,14,16,-4,10}}");
        assert_eq!(dt("{{9}, {8, \u{2212}12, 16, 14, 18, \u{2212}4, \u{2212}2, 6, 10}}").labels()[1], -12);
        assert_eq!(dt("{{0},{}}"), DtCode::unknot());
    }

    #[test]
    fn rejects_bad_codes() {
        assert!(matches!(parse_dt("{{3},{4,6,8}}"), Err(Error::InvalidCode(_))));
        assert!(matches!(parse_dt("{{3},{4,6}}"), Err(Error::InvalidCode(_))));
        assert!(matches!(parse_dt("{{3},{4,4,2}}"), Err(Error::InvalidCode(_))));
        assert!(matches!(parse_dt("{{2},{3,1}}"), Err(Error::InvalidCode(_))));
        assert!(matches!(parse_dt("{3},{4,6,2}"), Err(Error::Syntax(_))));
        assert!(matches!(parse_dt("{{3},{4,6,x}}"), Err(Error::Syntax(_))));
    }

    #[test]
    fn syntactic_alternation() {
        assert!(!dt_is_alternating(&dt("{{8},{6,8,-12,2,14,16,-4,10}}")));
        assert!(dt_is_alternating(&dt("{{3},{4,6,2}}")));
        assert!(dt_is_alternating(&dt("{{3},{-4,-6,-2}}")));
        assert!(dt_is_alternating(&DtCode::unknot()));
    }

    #[test]
    fn trefoil_realizes_and_round_trips() {
        let c = dt("{{3},{4,6,2}}");
        let d = realize_dt(&c).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert!(d.is_planar());
        assert!(d.is_alternating_diagram());
        assert_eq!(d.writhe().unwrap(), 3);
        assert_eq!(extract_dt(&d).unwrap(), c);
        assert_eq!(c.canonical(), c);
    }

    #[test]
    fn unknot_realizes_to_empty_diagram() {
        let d = realize_dt(&DtCode::unknot()).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(extract_dt(&d).unwrap(), DtCode::unknot());
    }

    #[test]
    fn canonical_form_is_basepoint_free() {
        let c = dt("{{8},{4,8,-12,2,14,16,-6,10}}");
        let g = c.gauss();
        let canon = c.canonical();
        for shift in 0..16 {
            let mut passages = g.passages.clone();
            passages.rotate_left(shift);
            assert_eq!(GaussCode { passages: passages.clone() }.canonical_dt().unwrap(), canon);
            passages.reverse();
            assert_eq!(GaussCode { passages }.canonical_dt().unwrap(), canon);
        }
    }

    #[test]
    fn non_realizable_code_is_rejected() {
        // Passes the even-interlacing test, but no plane curve has this
        // Gauss sequence.
        let c = dt("{{5},{4,8,2,10,6}}");
        assert_eq!(realize_dt(&c), Err(Error::NonRealizable));
    }

    #[test]
    fn oversized_codes_are_refused() {
        let labels: Vec<i32> = (0..21).map(|i| 2 * ((i + 1) % 21) + 2).collect();
        let c = DtCode::new(labels).unwrap();
        assert!(matches!(realize_dt(&c), Err(Error::TooManyCrossings { .. })));
    }

    #[test]
    fn gauss_validation() {
        let bad = GaussCode {
            passages: vec![
                GaussPassage { crossing: 1, over: true },
                GaussPassage { crossing: 1, over: true },
            ],
        };
        assert!(bad.validate().is_err());
        assert!(dt("{{3},{4,6,2}}").gauss().validate().is_ok());
    }
}
