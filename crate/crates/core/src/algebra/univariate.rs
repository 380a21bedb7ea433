use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial over `ℚ`; `coeffs[k]` is the coefficient of
/// `T^k`. The leading coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UnivariatePoly {
    coeffs: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UnivariatePoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UnivariatePoly::new(vec![c])
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        UnivariatePoly::new(
            coeffs
                .iter()
                .map(|&c| super::rational_from_i64(c))
                .collect(),
        )
    }

    /// `c · T^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UnivariatePoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UnivariatePoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn derivative(&self) -> Self {
        UnivariatePoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn evaluate(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// `T^deg · p(1/T)`: the coefficient list reversed.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        UnivariatePoly::new(c)
    }

    /// Divides out the largest power of `T` dividing `self`.
    pub fn strip_t_powers(&self) -> Self {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        UnivariatePoly::new(self.coeffs[k..].to_vec())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = UnivariatePoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let lc_inv = divisor.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UnivariatePoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UnivariatePoly::new(quot), UnivariatePoly::new(rem))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }
}

impl fmt::Debug for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnivariatePoly[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Add for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn add(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn sub(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn mul(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly::new(out)
    }
}

impl Neg for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn neg(self) -> UnivariatePoly {
        UnivariatePoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

/// Monic gcd over `ℚ`. `gcd(a, 0) = monic(a)`.
///
/// The gcd over `ℚ` agrees with the gcd over `ℂ` up to a unit, so a
/// nonconstant result certifies a shared complex root.
pub fn univ_gcd(a: &UnivariatePoly, b: &UnivariatePoly) -> Result<UnivariatePoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        x = y;
        // keep intermediate coefficients small
        y = r.monic();
    }
    Ok(x.monic())
}

/// True iff `a` has no repeated complex root, i.e. `gcd(a, a') = 1`.
pub fn univ_squarefree(a: &UnivariatePoly) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(univ_gcd(a, &a.derivative())?.is_constant())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(c: &[i64]) -> UnivariatePoly {
        UnivariatePoly::from_i64s(c)
    }

    #[test]
    fn gcd_examples() {
        // gcd(T^2 - 1, T^3 - T) = T^2 - 1
        assert_eq!(
            univ_gcd(&u(&[-1, 0, 1]), &u(&[0, -1, 0, 1])).unwrap(),
            u(&[-1, 0, 1])
        );
        assert_eq!(univ_gcd(&u(&[1, 1]), &u(&[2, 1])).unwrap(), u(&[1]));
        assert_eq!(
            univ_gcd(&u(&[1, 0, -1]), &u(&[1, 0, -1])).unwrap(),
            u(&[-1, 0, 1])
        );
        assert_eq!(
            univ_gcd(&u(&[2, 4]), &UnivariatePoly::zero()).unwrap(),
            u(&[1, 2]).monic()
        );
        assert_eq!(
            univ_gcd(&UnivariatePoly::zero(), &UnivariatePoly::zero()),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn squarefree_examples() {
        assert!(univ_squarefree(&u(&[-1, 0, 1])).unwrap());
        assert!(!univ_squarefree(&u(&[1, -2, 1])).unwrap());
        // S^3 - S + 1, discriminant -23
        assert!(univ_squarefree(&u(&[1, -1, 0, 1])).unwrap());
        assert!(univ_squarefree(&u(&[5])).unwrap());
        assert_eq!(
            univ_squarefree(&UnivariatePoly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn division_identity() {
        let a = u(&[3, -1, 4, 1, -5, 9]);
        let b = u(&[2, 0, 7]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn reverse_and_strip() {
        assert_eq!(u(&[-1, 0, 1]).reversed(), u(&[1, 0, -1]));
        assert_eq!(u(&[0, 0, 3, 1]).strip_t_powers(), u(&[3, 1]));
        assert_eq!(u(&[1, 2, 0]).degree(), Some(1));
    }
}
