//! Rational and ramified Conway notation.
//!
//! A rational tangle `a1 a2 ... an` has fraction `an + 1/(a(n-1) + ...)`.
//! Inside a component, juxtaposed digits are separate twists (`21` is
//! `2 1`); components are separated by commas. The tangle `a1 ... an` is
//! built from the 0 or infinity tangle by adding twists alternately on the
//! east side (horizontal) and the south side (vertical), `an` being
//! horizontal. A ramified sum `t1, t2, ...` adds the tangles `ti 0`, whose
//! last twists are vertical, side by side. Knots are numerator closures.
//! All-positive input gives alternating diagrams.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

use crate::diagram::{Crossing, OverPair, PlanarDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalTangle {
    twists: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RamifiedSum {
    components: Vec<RationalTangle>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConwayNotation {
    Rational(RationalTangle),
    Ramified(RamifiedSum),
}

/// Reduced `p/q` with `q >= 0`; `q = 0` is the infinity tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    pub p: i64,
    pub q: i64,
}

impl Fraction {
    fn new(p: i64, q: i64) -> Self {
        let g = p.gcd(&q).max(1);
        let s = if q < 0 || (q == 0 && p < 0) { -1 } else { 1 };
        Self { p: s * p / g, q: s * q / g }
    }

    pub fn to_ratio(self) -> Option<Ratio<i64>> {
        (self.q != 0).then(|| Ratio::new(self.p, self.q))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl RationalTangle {
    pub fn new(twists: Vec<i32>) -> Result<Self> {
        if twists.is_empty() || twists.contains(&0) {
            return Err(Error::Syntax("a twist sequence needs nonzero entries".into()));
        }
        Ok(Self { twists })
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn crossing_count(&self) -> usize {
        self.twists.iter().map(|t| t.unsigned_abs() as usize).sum()
    }

    pub fn fraction(&self) -> Fraction {
        let (mut p, mut q) = (self.twists[0] as i64, 1i64);
        for &a in &self.twists[1..] {
            (p, q) = (a as i64 * p + q, p);
        }
        Fraction::new(p, q)
    }

    pub fn to_diagram(&self) -> Result<PlanarDiagram> {
        let mut t = Tangle::build(&self.twists, false);
        t.numerator_closure()
    }
}

impl RamifiedSum {
    pub fn new(components: Vec<RationalTangle>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::Syntax("a ramified sum needs at least two components".into()));
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[RationalTangle] {
        &self.components
    }

    pub fn crossing_count(&self) -> usize {
        self.components.iter().map(RationalTangle::crossing_count).sum()
    }

    pub fn to_diagram(&self) -> Result<PlanarDiagram> {
        let mut parts = self.components.iter().map(|c| Tangle::build(&c.twists, true));
        let mut sum = parts.next().expect("at least two components");
        for t in parts {
            sum.add(t);
        }
        sum.numerator_closure()
    }
}

impl ConwayNotation {
    pub fn to_diagram(&self) -> Result<PlanarDiagram> {
        match self {
            ConwayNotation::Rational(t) => t.to_diagram(),
            ConwayNotation::Ramified(s) => s.to_diagram(),
        }
    }

    pub fn crossing_count(&self) -> usize {
        match self {
            ConwayNotation::Rational(t) => t.crossing_count(),
            ConwayNotation::Ramified(s) => s.crossing_count(),
        }
    }
}

impl fmt::Display for RationalTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.twists.iter().map(i32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Display for RamifiedSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(", "))
    }
}

impl fmt::Display for ConwayNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConwayNotation::Rational(t) => t.fmt(f),
            ConwayNotation::Ramified(s) => s.fmt(f),
        }
    }
}

impl FromStr for ConwayNotation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_conway(s)
    }
}

/// Parses rational (`2 1 2`, `212`) and ramified (`3, 3, -2`) notation.
/// Other Conway constructs are rejected by name.
pub fn parse_conway(text: &str) -> Result<ConwayNotation> {
    let text = text.replace('\u{2212}', "-");
    let unsupported = |what: &str| Err(Error::UnsupportedConway(format!("{what} in `{}`", text.trim())));
    if let Some(i) = text.find('*') {
        let start = text[..i].rfind(|c: char| !c.is_ascii_digit()).map_or(0, |j| j + 1);
        return unsupported(&format!("polyhedral notation {}* unsupported", &text[start..i]));
    }
    if text.contains(['(', ')']) {
        return unsupported("tangle products `( )( )` unsupported");
    }
    if text.contains('+') {
        return unsupported("`+` ramification unsupported");
    }
    if text.contains('.') {
        return unsupported("`.` products unsupported");
    }
    if text.contains(':') {
        return unsupported("`:` ramification unsupported");
    }
    let mut components = Vec::new();
    for part in text.split(',') {
        let mut twists = Vec::new();
        for token in part.split_whitespace() {
            let (sign, digits) = match token.strip_prefix('-') {
                Some(d) => (-1, d),
                None => (1, token),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Syntax(format!("bad Conway token `{token}`")));
            }
            for b in digits.bytes() {
                if b == b'0' {
                    return unsupported("zero twists unsupported");
                }
                twists.push(sign * (b - b'0') as i32);
            }
        }
        if twists.is_empty() {
            return Err(Error::Syntax(format!("empty Conway component in `{}`", text.trim())));
        }
        components.push(RationalTangle::new(twists)?);
    }
    if components.len() == 1 {
        Ok(ConwayNotation::Rational(components.pop().unwrap()))
    } else {
        Ok(ConwayNotation::Ramified(RamifiedSum::new(components)?))
    }
}

/// Tangle under construction. Boundary ends are edge ids; an arc with both
/// ends on the boundary uses one id twice.
struct Tangle {
    crossings: Vec<Crossing>,
    nw: u32,
    ne: u32,
    sw: u32,
    se: u32,
    next: u32,
}

impl Tangle {
    /// Twist sequence, last twist horizontal, or vertical when `ramified`.
    fn build(twists: &[i32], ramified: bool) -> Self {
        let n = twists.len();
        let horizontal = |i: usize| (n - 1 - i).is_multiple_of(2) != ramified;
        let mut t = if horizontal(0) { Self::zero() } else { Self::infinity() };
        for (i, &a) in twists.iter().enumerate() {
            for _ in 0..a.unsigned_abs() {
                if horizontal(i) {
                    t.twist_east(a > 0);
                } else {
                    t.twist_south(a > 0);
                }
            }
        }
        t
    }

    fn zero() -> Self {
        Self { crossings: Vec::new(), nw: 0, ne: 0, sw: 1, se: 1, next: 2 }
    }

    fn infinity() -> Self {
        Self { crossings: Vec::new(), nw: 0, sw: 0, ne: 1, se: 1, next: 2 }
    }

    fn fresh(&mut self) -> u32 {
        self.next += 1;
        self.next - 1
    }

    /// Crossing with ports `[SW, SE, NE, NW]`.
    fn push(&mut self, sw: u32, se: u32, ne: u32, nw: u32, over: OverPair) {
        self.crossings.push(Crossing::new([sw, se, ne, nw], over));
    }

    fn twist_east(&mut self, positive: bool) {
        let (ne, se) = (self.fresh(), self.fresh());
        let over = if positive { OverPair::Even } else { OverPair::Odd };
        self.push(self.se, se, ne, self.ne, over);
        self.ne = ne;
        self.se = se;
    }

    fn twist_south(&mut self, positive: bool) {
        let (sw, se) = (self.fresh(), self.fresh());
        let over = if positive { OverPair::Even } else { OverPair::Odd };
        self.push(sw, se, self.se, self.sw, over);
        self.sw = sw;
        self.se = se;
    }

    /// `self + other`: other's west ends attach to self's east ends.
    fn add(&mut self, other: Tangle) {
        let shift = self.next;
        let map = |e: u32| e + shift;
        for x in other.crossings {
            self.crossings.push(Crossing::new(x.ports.map(map), x.over));
        }
        let joins = [(self.ne, map(other.nw)), (self.se, map(other.sw))];
        self.ne = map(other.ne);
        self.se = map(other.se);
        self.next = shift + other.next;
        self.merge(&joins);
    }

    /// Identifies edge ids pairwise; returns the number of closed loops
    /// made without crossings.
    fn merge(&mut self, joins: &[(u32, u32)]) -> usize {
        let mut parent: HashMap<u32, u32> = HashMap::new();
        fn find(parent: &mut HashMap<u32, u32>, e: u32) -> u32 {
            match parent.get(&e).copied() {
                Some(p) if p != e => {
                    let r = find(parent, p);
                    parent.insert(e, r);
                    r
                }
                _ => e,
            }
        }
        let mut loops = 0;
        for &(a, b) in joins {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                loops += 1;
            } else {
                parent.insert(rb, ra);
            }
        }
        for x in &mut self.crossings {
            x.ports = x.ports.map(|e| find(&mut parent, e));
        }
        for e in [&mut self.nw, &mut self.ne, &mut self.sw, &mut self.se] {
            *e = find(&mut parent, *e);
        }
        loops
    }

    /// Joins NW to NE and SW to SE.
    fn numerator_closure(&mut self) -> Result<PlanarDiagram> {
        let loops = self.merge(&[(self.nw, self.ne), (self.sw, self.se)]);
        if self.crossings.is_empty() {
            return match loops {
                1 => Ok(PlanarDiagram::unknot()),
                k => Err(Error::MultiComponent(k)),
            };
        }
        if loops > 0 {
            return Err(Error::MultiComponent(loops + 1));
        }
        let d = PlanarDiagram::from_crossings(std::mem::take(&mut self.crossings))?;
        match d.component_count() {
            1 => Ok(d),
            k => Err(Error::MultiComponent(k)),
        }
    }
}
