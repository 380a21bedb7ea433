//! Exact rational arithmetic, sparse bivariate polynomials, and the
//! gcd/resultant toolkit the geometric checks are built on.

mod bivariate;
mod poly;
mod rational;
mod univariate;

pub use bivariate::{bivar_gcd, resultant_y};
pub use poly::{LatticePoint, Polynomial, Var};
pub use rational::{rational, rational_from_i64, Rational};
pub use univariate::{univ_gcd, univ_squarefree, UnivariatePoly};
