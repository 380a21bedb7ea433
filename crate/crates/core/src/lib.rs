//! Exact checks of Newton-diagram criteria for near-irreducibility of
//! bivariate polynomials, together with brute-force oracles for the
//! two-dimensional Kouchnirenko–Bernstein intersection bound.
//!
//! A polynomial `f ∈ ℚ[X,Y]` is *nearly irreducible* when any two of its
//! nonconstant factors share a zero in `ℂ²`. [`criteria::check_nearly_irreducible`]
//! decides a sufficient condition from the Newton diagram at infinity of `f`
//! and the initial forms along its faces; [`oracle`] provides the independent
//! machinery used to cross-check it.
//!
//! All arithmetic is exact: coefficients are big rationals and lattice
//! geometry is carried out over the integers.

pub mod algebra;
pub mod criteria;
pub mod error;
pub mod expr;
pub mod faces;
pub mod geometry;
pub mod oracle;

pub use algebra::{LatticePoint, Polynomial, Rational, UnivariatePoly, Var};
pub use criteria::{
    check_nearly_irreducible, Check, Status, Verdict, Via, Violation, ViolationKind,
};
pub use error::{Error, Result};
pub use expr::{format_polynomial, parse_polynomial, ParseError};
pub use faces::FacePolynomial;
pub use geometry::{Edge, LatticePolygon, WeightVector};
pub use oracle::KbRecord;
