//! Crossing-change alternating (CCA) analysis of knot diagrams.
//!
//! A diagram is CCA when every single crossing change produces an
//! alternating knot, and k-CCA when every simultaneous change of k crossings
//! does. This crate parses DT codes and rational Conway notation, realizes
//! them as planar diagrams, certifies the knots obtained by crossing changes
//! as alternating or non-alternating, and aggregates the verdicts.

pub mod cca;
pub mod codes;
pub mod conway;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod oracle;
pub mod poly;
pub mod tables;

pub use codes::{dt_is_alternating, extract_dt, parse_dt, realize_dt, realizations, DtCode, GaussCode};
pub use diagram::{Crossing, CrossingSelector, OverPair, PlanarDiagram};
pub use error::{Error, Result};
pub use invariants::{determinant, jones, jones_span, kauffman_bracket, signature, JonesPolynomial};
pub use poly::LaurentPolynomial;
pub use oracle::{classify_alternating, fingerprint, AlternatingStatus, AlternatingVerdict, Certificate, KnotFingerprint};
pub use tables::{build_table, KnotRecord, KnotTable};
pub use cca::{
    abe_lower_bound, alt_upper_bound, cca_check, kcca_profile, AbeInput, Aggregate, AltBound, CcaOptions,
    CcaReport,
};
pub use conway::{parse_conway, ConwayNotation, RamifiedSum, RationalTangle};
