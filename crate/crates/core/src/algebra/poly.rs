use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Exponent pair `(α, β)` of the monomial `X^α Y^β`.
///
/// Polynomial exponents are always nonnegative; the same type is reused for
/// polygon vertices, which are sums of exponents and so stay nonnegative too.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticePoint {
    pub alpha: i64,
    pub beta: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { alpha: 0, beta: 0 };

    pub const fn new(alpha: i64, beta: i64) -> Self {
        LatticePoint { alpha, beta }
    }

    pub fn total_degree(self) -> i64 {
        self.alpha + self.beta
    }

    /// Graded-lex comparison: total degree first, then the X exponent.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.alpha.cmp(&other.alpha))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((alpha, beta): (i64, i64)) -> Self {
        LatticePoint { alpha, beta }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// Sparse polynomial in `ℚ[X,Y]`.
///
/// The term map never stores a zero coefficient, so the key set is exactly
/// the support.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<LatticePoint, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::monomial(c, LatticePoint::ORIGIN)
    }

    pub fn monomial(c: Rational, exp: LatticePoint) -> Self {
        assert!(exp.alpha >= 0 && exp.beta >= 0, "negative exponent {exp}");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Polynomial { terms }
    }

    pub fn var(v: Var) -> Self {
        let exp = match v {
            Var::X => LatticePoint::new(1, 0),
            Var::Y => LatticePoint::new(0, 1),
        };
        Polynomial::monomial(Rational::one(), exp)
    }

    /// Builds a polynomial from integer-coefficient terms `(c, α, β)`, combining
    /// like terms.
    pub fn from_int_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, i64)>,
    {
        Polynomial::from_terms(terms.into_iter().map(|(c, a, b)| {
            (
                LatticePoint::new(a, b),
                Rational::from_integer(BigInt::from(c)),
            )
        }))
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (LatticePoint, Rational)>,
    {
        let mut p = Polynomial::zero();
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: LatticePoint, c: Rational) {
        assert!(exp.alpha >= 0 && exp.beta >= 0, "negative exponent {exp}");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == LatticePoint::ORIGIN)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(α, β)` order.
    pub fn terms(&self) -> impl Iterator<Item = (LatticePoint, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Terms in descending graded-lex order.
    pub fn terms_grlex_desc(&self) -> Vec<(LatticePoint, &Rational)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| b.0.grlex_cmp(&a.0));
        v
    }

    pub fn coeff(&self, exp: LatticePoint) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> BTreeSet<LatticePoint> {
        self.terms.keys().copied().collect()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(LatticePoint::ORIGIN)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<i64> {
        self.terms
            .keys()
            .map(|e| match v {
                Var::X => e.alpha,
                Var::Y => e.beta,
            })
            .max()
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(LatticePoint, &Rational)> {
        self.terms().max_by(|a, b| a.0.grlex_cmp(&b.0))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `X^shift.alpha Y^shift.beta`.
    pub fn shift(&self, shift: LatticePoint) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| {
                    let ne = LatticePoint::new(e.alpha + shift.alpha, e.beta + shift.beta);
                    assert!(ne.alpha >= 0 && ne.beta >= 0, "shift leaves the quadrant");
                    (ne, v.clone())
                })
                .collect(),
        }
    }

    /// Divides out the largest monomial `X^a Y^b` dividing `self`.
    pub fn strip_monomial_factor(&self) -> Polynomial {
        let min_a = self.terms.keys().map(|e| e.alpha).min().unwrap_or(0);
        let min_b = self.terms.keys().map(|e| e.beta).min().unwrap_or(0);
        self.shift(LatticePoint::new(-min_a, -min_b))
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self, v: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            let (k, ne) = match v {
                Var::X => (e.alpha, LatticePoint::new(e.alpha - 1, e.beta)),
                Var::Y => (e.beta, LatticePoint::new(e.alpha, e.beta - 1)),
            };
            if k > 0 {
                out.add_term(ne, c * Rational::from_integer(BigInt::from(k)));
            }
        }
        out
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rat(x, e.alpha) * pow_rat(y, e.beta);
        }
        acc
    }

    /// Scales to integer coefficients with gcd 1 and a positive leading
    /// graded-lex coefficient. Zero stays zero.
    pub fn normalized(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let den_lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num_gcd = self.terms.values().fold(BigInt::zero(), |acc, c| {
            acc.gcd(&(c.numer() * (&den_lcm / c.denom())))
        });
        let mut factor = Rational::new(den_lcm, num_gcd);
        if self
            .leading_term()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

fn pow_rat(x: &Rational, e: i64) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", crate::expr::format_polynomial(self))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::format_polynomial(self))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(
                    LatticePoint::new(ea.alpha + eb.alpha, ea.beta + eb.beta),
                    ca * cb,
                );
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational_from_i64 as q;

    fn p(terms: &[(i64, i64, i64)]) -> Polynomial {
        Polynomial::from_int_terms(terms.iter().copied())
    }

    #[test]
    fn product_of_example_one_factors() {
        let a = p(&[(1, 1, 1), (-1, 0, 0)]);
        let b = p(&[(1, 1, 1), (1, 0, 0)]);
        assert_eq!(&a * &b, p(&[(1, 2, 2), (-1, 0, 0)]));
    }

    #[test]
    fn additive_inverse_is_zero() {
        let f = p(&[(3, 3, 2), (1, 2, 3), (-1, 1, 0), (-1, 0, 1)]);
        assert!((&f + &(-&f)).is_zero());
        assert!((&f - &f).is_empty());
    }

    #[test]
    fn binomial_square() {
        let f = p(&[(1, 1, 0), (1, 0, 1)]);
        assert_eq!(f.pow(2), p(&[(1, 2, 0), (2, 1, 1), (1, 0, 2)]));
        assert_eq!(f.pow(0), Polynomial::one());
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[(1, 3, 2)]).derivative(Var::X), p(&[(3, 2, 2)]));
        assert!(p(&[(1, 2, 0), (-1, 0, 0)]).derivative(Var::Y).is_zero());
        // Y(X^2 - 1)
        assert_eq!(
            p(&[(1, 2, 1), (-1, 0, 1)]).derivative(Var::X),
            p(&[(2, 1, 1)])
        );
    }

    #[test]
    fn evaluation() {
        let ex2 = p(&[(1, 3, 0), (1, 2, 1), (-1, 1, 0), (-1, 0, 1)]);
        assert_eq!(ex2.evaluate(&q(1), &q(5)), q(0));
        let g = p(&[(7, 0, 0), (2, 1, 4)]);
        assert_eq!(g.evaluate(&q(0), &q(0)), q(7));
        assert_eq!(p(&[(1, 1, 0), (1, 0, 1)]).evaluate(&q(1), &q(-1)), q(0));
    }

    #[test]
    fn normalization_clears_denominators_and_fixes_sign() {
        let f = Polynomial::from_terms([
            (LatticePoint::new(1, 0), crate::algebra::rational(-1, 2)),
            (LatticePoint::new(0, 0), crate::algebra::rational(3, 4)),
        ]);
        assert_eq!(f.normalized(), p(&[(2, 1, 0), (-3, 0, 0)]));
    }

    #[test]
    fn strip_monomial() {
        let f = p(&[(1, 3, 2), (-1, 1, 4)]);
        assert_eq!(f.strip_monomial_factor(), p(&[(1, 2, 0), (-1, 0, 2)]));
    }
}
