//! Polynomial and matrix invariants of knot diagrams.

mod bracket;
mod goeritz;

use std::fmt;

use num_rational::Ratio;

pub use bracket::{kauffman_bracket, kauffman_bracket_with_limit, BRACKET_LIMIT};
pub use goeritz::{goeritz, signature, GoeritzData, Shading};

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;

/// The Jones polynomial, stored with exponents in units of `t^(1/4)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JonesPolynomial(pub LaurentPolynomial);

impl JonesPolynomial {
    pub fn one() -> Self {
        Self(LaurentPolynomial::one())
    }

    pub fn poly(&self) -> &LaurentPolynomial {
        &self.0
    }

    /// Substitute `t -> 1/t`.
    pub fn mirror(&self) -> Self {
        Self(self.0.invert_variable())
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> i64 {
        self.0.eval_one()
    }

    /// Value at `t = -1` for knot polynomials (integral exponents).
    pub fn at_minus_one(&self) -> i64 {
        self.0
            .terms()
            .map(|(e, c)| if (e / 4).rem_euclid(2) == 0 { c } else { -c })
            .sum()
    }

    pub fn serialize(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self> {
        LaurentPolynomial::parse_terms(text, "t", 4).map(Self)
    }
}

impl fmt::Display for JonesPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write_terms("t", 4, f)
    }
}

impl fmt::Debug for JonesPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(-A^3)^(-w) <D>` with `A = t^(-1/4)`.
pub fn jones(d: &PlanarDiagram) -> Result<JonesPolynomial> {
    let w = d.writhe()?;
    let bracket = kauffman_bracket(d)?;
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let normalized = bracket.shift(-3 * w as i32).scale(sign);
    // A^k = t^(-k/4)
    Ok(JonesPolynomial(normalized.invert_variable()))
}

/// `(max - min) / 4`, the span in units of `t`.
pub fn jones_span(p: &JonesPolynomial) -> Result<Ratio<i64>> {
    match (p.0.min_exp(), p.0.max_exp()) {
        (Some(lo), Some(hi)) => Ok(Ratio::new((hi - lo) as i64, 4)),
        _ => Err(Error::ZeroPolynomial),
    }
}

/// `|V(-1)|`.
pub fn determinant(d: &PlanarDiagram) -> Result<u64> {
    Ok(jones(d)?.at_minus_one().unsigned_abs())
}
