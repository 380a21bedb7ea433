//! Subresultant PRS over `ℚ[X][Y]`: resultants with respect to `Y` and
//! bivariate gcds.
//!
//! A polynomial is viewed as a polynomial in `Y` whose coefficients live in
//! `ℚ[X]`. Contents are taken in `ℚ[X]` (monic gcd of the coefficients) and
//! tracked separately from the primitive parts, following Collins' and
//! Brown's subresultant scheme.

use num_traits::Zero;

use super::poly::{LatticePoint, Polynomial};
use super::rational::Rational;
use super::univariate::{univ_gcd, UnivariatePoly};
use crate::error::{Error, Result};

/// Polynomial in `Y` over `ℚ[X]`; index `k` is the coefficient of `Y^k`.
#[derive(Debug, Clone, PartialEq)]
struct YPoly(Vec<UnivariatePoly>);

impl YPoly {
    fn from_poly(f: &Polynomial) -> Self {
        let deg = f.degree_in(super::Var::Y).unwrap_or(-1);
        let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); (deg + 1) as usize];
        for (e, c) in f.terms() {
            let row = &mut rows[e.beta as usize];
            if row.len() <= e.alpha as usize {
                row.resize(e.alpha as usize + 1, Rational::zero());
            }
            row[e.alpha as usize] = c.clone();
        }
        YPoly::new(rows.into_iter().map(UnivariatePoly::new).collect())
    }

    fn to_poly(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (b, row) in self.0.iter().enumerate() {
            for (a, c) in row.coeffs().iter().enumerate() {
                out.add_term(LatticePoint::new(a as i64, b as i64), c.clone());
            }
        }
        out
    }

    fn new(mut coeffs: Vec<UnivariatePoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        YPoly(coeffs)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree in `Y`; callers check for zero first.
    fn deg(&self) -> usize {
        self.0.len() - 1
    }

    fn lc(&self) -> &UnivariatePoly {
        self.0.last().expect("leading coefficient of zero")
    }

    fn content(&self) -> UnivariatePoly {
        let mut g = UnivariatePoly::zero();
        for c in self.0.iter().filter(|c| !c.is_zero()) {
            g = univ_gcd(&g, c).expect("nonzero coefficient");
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn mul_coeff(&self, c: &UnivariatePoly) -> YPoly {
        YPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    fn div_coeff(&self, c: &UnivariatePoly) -> YPoly {
        YPoly::new(self.0.iter().map(|a| a.exact_div(c)).collect())
    }

    fn primitive_part(&self) -> YPoly {
        self.div_coeff(&self.content())
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b`.
    fn prem(&self, b: &YPoly) -> YPoly {
        let db = b.deg();
        let lb = b.lc();
        let mut r = self.clone();
        let mut e = self.deg() as i64 - db as i64 + 1;
        while !r.is_zero() && r.deg() >= db {
            let shift = r.deg() - db;
            let lr = r.lc().clone();
            let mut next: Vec<UnivariatePoly> = r.0.iter().map(|c| c * lb).collect();
            for (k, bc) in b.0.iter().enumerate() {
                next[k + shift] = &next[k + shift] - &(&lr * bc);
            }
            r = YPoly::new(next);
            e -= 1;
        }
        if e > 0 {
            r = r.mul_coeff(&lb.pow(e as u32));
        }
        r
    }
}

fn upow(p: &UnivariatePoly, n: usize) -> UnivariatePoly {
    p.pow(n as u32)
}

/// `h^(1-δ) · g^δ`, exact in `ℚ[X]`.
fn next_h(h: &UnivariatePoly, g: &UnivariatePoly, delta: usize) -> UnivariatePoly {
    match delta {
        0 => h.clone(),
        1 => g.clone(),
        d => upow(g, d).exact_div(&upow(h, d - 1)),
    }
}

/// `Res_Y(f, g)` as a polynomial in `X`.
///
/// Both inputs must be nonzero with positive degree in `Y`.
pub fn resultant_y(f: &Polynomial, g: &Polynomial) -> Result<UnivariatePoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (a, b) = (YPoly::from_poly(f), YPoly::from_poly(g));
    if a.deg() == 0 || b.deg() == 0 {
        return Err(Error::YConstantResultant);
    }
    Ok(subresultant_resultant(a, b))
}

fn subresultant_resultant(mut a: YPoly, mut b: YPoly) -> UnivariatePoly {
    let mut negate = false;
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            negate = true;
        }
    }
    let ca = a.content();
    let cb = b.content();
    let t = &upow(&ca, b.deg()) * &upow(&cb, a.deg());
    a = a.div_coeff(&ca);
    b = b.div_coeff(&cb);

    let mut g = UnivariatePoly::one();
    let mut h = UnivariatePoly::one();
    while b.deg() > 0 {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            negate = !negate;
        }
        let r = a.prem(&b);
        if r.is_zero() {
            return UnivariatePoly::zero();
        }
        let divisor = &g * &upow(&h, delta);
        a = b;
        b = r.div_coeff(&divisor);
        g = a.lc().clone();
        h = next_h(&h, &g, delta);
    }
    // b is a nonzero constant in Y
    let da = a.deg();
    let h = match da {
        0 => UnivariatePoly::one(),
        1 => b.lc().clone(),
        _ => upow(b.lc(), da).exact_div(&upow(&h, da - 1)),
    };
    let res = &t * &h;
    if negate {
        -&res
    } else {
        res
    }
}

/// Gcd in `ℚ[X,Y]`, normalized to integer coefficients with content 1 and a
/// positive leading graded-lex coefficient.
pub fn bivar_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    if f.is_zero() {
        return Ok(g.normalized());
    }
    if g.is_zero() {
        return Ok(f.normalized());
    }
    let (mut a, mut b) = (YPoly::from_poly(f), YPoly::from_poly(g));
    if b.deg() > a.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    let ca = a.content();
    let cb = b.content();
    let d = univ_gcd(&ca, &cb)?;
    a = a.div_coeff(&ca);
    b = b.div_coeff(&cb);

    let mut g = UnivariatePoly::one();
    let mut h = UnivariatePoly::one();
    loop {
        let delta = a.deg() - b.deg();
        let r = a.prem(&b);
        if r.is_zero() {
            break;
        }
        if r.deg() == 0 {
            b = YPoly::new(vec![UnivariatePoly::one()]);
            break;
        }
        let divisor = &g * &upow(&h, delta);
        a = b;
        b = r.div_coeff(&divisor);
        g = a.lc().clone();
        h = next_h(&h, &g, delta);
    }
    let gcd = b.primitive_part().mul_coeff(&d);
    Ok(gcd.to_poly().normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    fn p(terms: &[(i64, i64, i64)]) -> Polynomial {
        Polynomial::from_int_terms(terms.iter().copied())
    }

    fn u(c: &[i64]) -> UnivariatePoly {
        UnivariatePoly::from_i64s(c)
    }

    #[test]
    fn ypoly_round_trip() {
        let f = p(&[(3, 3, 2), (1, 2, 3), (-1, 1, 0), (-1, 0, 1), (5, 0, 0)]);
        assert_eq!(YPoly::from_poly(&f).to_poly(), f);
    }

    #[test]
    fn resultant_examples() {
        // X^2 + Y^2 - 1 against Y + X
        let circle = p(&[(1, 2, 0), (1, 0, 2), (-1, 0, 0)]);
        let line = p(&[(1, 0, 1), (1, 1, 0)]);
        assert_eq!(resultant_y(&circle, &line).unwrap(), u(&[-1, 0, 2]));
        let shifted = p(&[(1, 0, 1), (1, 1, 0), (1, 0, 0)]);
        assert_eq!(resultant_y(&line, &shifted).unwrap(), u(&[1]));
        let y = Polynomial::var(Var::Y);
        assert!(resultant_y(&y, &y).unwrap().is_zero());
        assert_eq!(
            resultant_y(&p(&[(1, 1, 0)]), &y),
            Err(Error::YConstantResultant)
        );
    }

    #[test]
    fn resultant_sign_convention() {
        // Res(f, g) = (-1)^(mn) Res(g, f); with m = n = 1 the sign flips.
        let f = p(&[(1, 0, 1), (-2, 1, 0)]);
        let g = p(&[(1, 0, 1), (3, 0, 0)]);
        let fg = resultant_y(&f, &g).unwrap();
        let gf = resultant_y(&g, &f).unwrap();
        assert_eq!(fg, -&gf);
        // Sylvester determinant of [[1, -2X], [1, 3]] is 3 + 2X
        assert_eq!(fg, u(&[3, 2]));
    }

    #[test]
    fn gcd_examples() {
        let ex2 = p(&[(1, 3, 0), (1, 2, 1), (-1, 1, 0), (-1, 0, 1)]);
        let x2m1 = p(&[(1, 2, 0), (-1, 0, 0)]);
        assert_eq!(bivar_gcd(&ex2, &x2m1).unwrap(), x2m1);
        let xpy = p(&[(1, 1, 0), (1, 0, 1)]);
        let xym1 = p(&[(1, 1, 1), (-1, 0, 0)]);
        assert_eq!(bivar_gcd(&xpy, &xym1).unwrap(), Polynomial::one());
        assert_eq!(bivar_gcd(&(-&ex2), &ex2).unwrap(), ex2);
        assert_eq!(
            bivar_gcd(&Polynomial::zero(), &Polynomial::zero()),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn gcd_with_x_only_common_factor() {
        let h = p(&[(1, 2, 0), (-3, 0, 0)]);
        let f = &h * &p(&[(1, 0, 2), (1, 1, 0)]);
        let g = &h * &p(&[(1, 0, 1), (7, 0, 0)]);
        assert_eq!(bivar_gcd(&f, &g).unwrap(), h);
    }
}
