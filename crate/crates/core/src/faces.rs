//! Univariate encoding of initial forms along a face.
//!
//! For a primitive weight `w = [p, q]` every initial form is
//! `init(f, w) = X^a Y^b · Φ(T)` with `T = X^(-q) Y^p`. On the torus `(ℂ*)²`
//! the map `(x, y) ↦ x^(-q) y^p` is onto `ℂ*`, and `p·X·∂X F + q·Y·∂Y F = d·F`
//! for a `w`-homogeneous `F`. Together these give:
//!
//! * `F = ∂X F = ∂Y F = 0` has a torus solution iff `Φ` has a repeated
//!   nonzero root;
//! * `init(f, w)` and `init(f, -w)` share a torus zero iff `Φ₊` and the
//!   reversal of `Φ₋` have a nonconstant gcd.
//!
//! Both reductions are cross-checked against bivariate-gcd oracles in
//! [`crate::oracle`].

use num_traits::Zero;

use crate::algebra::{
    univ_gcd, univ_squarefree, LatticePoint, Polynomial, Rational, UnivariatePoly,
};
use crate::error::{Error, Result};
use crate::geometry::{d_w, WeightVector};

/// `init(f, w) = X^base.alpha · Y^base.beta · phi(X^(-q) Y^p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePolynomial {
    /// Face support point with the smallest dot product against `step`.
    pub base: LatticePoint,
    /// `(-q, p)`: one lattice step along the face.
    pub step: LatticePoint,
    /// Coefficient of `T^k` is the coefficient of `base + k·step`.
    pub phi: UnivariatePoly,
    pub normal: WeightVector,
}

impl FacePolynomial {
    /// Degree of `phi`; zero exactly when the initial form is a monomial.
    pub fn degree(&self) -> usize {
        self.phi.degree().unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.degree() == 0
    }

    /// Expands back into the initial form it encodes.
    pub fn reconstruct(&self) -> Polynomial {
        Polynomial::from_terms(
            self.phi
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    let k = k as i64;
                    (
                        LatticePoint::new(
                            self.base.alpha + k * self.step.alpha,
                            self.base.beta + k * self.step.beta,
                        ),
                        c.clone(),
                    )
                }),
        )
    }
}

fn dot(a: LatticePoint, b: LatticePoint) -> i64 {
    a.alpha * b.alpha + a.beta * b.beta
}

pub fn face_polynomial(f: &Polynomial, w: WeightVector) -> Result<FacePolynomial> {
    let d = d_w(f, w)?;
    let step = w.step();
    let face: Vec<(LatticePoint, &Rational)> = f.terms().filter(|(e, _)| w.dot(*e) == d).collect();
    let base = face
        .iter()
        .map(|(e, _)| *e)
        .min_by_key(|e| dot(*e, step))
        .expect("face of a nonzero polynomial is nonempty");
    // |step|² = p² + q²; points on the face differ from base by k·step
    let norm = dot(step, step);
    let mut coeffs: Vec<Rational> = Vec::new();
    for (e, c) in face {
        let k = (dot(e, step) - dot(base, step)) / norm;
        let k = k as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        coeffs[k] = c.clone();
    }
    Ok(FacePolynomial {
        base,
        step,
        phi: UnivariatePoly::new(coeffs),
        normal: w,
    })
}

/// Whether `init = ∂X init = ∂Y init = 0` has a solution in `(ℂ*)²`.
pub fn has_singular_torus_zero(fp: &FacePolynomial) -> bool {
    let phi = fp.phi.strip_t_powers();
    if phi.is_zero() {
        return false;
    }
    !univ_squarefree(&phi).expect("nonzero")
}

/// Whether the initial forms for `w` and `-w` share a zero in `(ℂ*)²`.
pub fn antipodal_common_torus_zero(
    fp_plus: &FacePolynomial,
    fp_minus: &FacePolynomial,
) -> Result<bool> {
    if fp_plus.normal != -fp_minus.normal {
        return Err(Error::NotAntipodal);
    }
    if fp_plus.is_monomial() || fp_minus.is_monomial() {
        return Ok(false);
    }
    // the torus coordinate for -w is 1/T
    let a = fp_plus.phi.strip_t_powers();
    let b = fp_minus.phi.reversed().strip_t_powers();
    Ok(!univ_gcd(&a, &b)?.is_constant())
}

/// Whether two face polynomials for the same weight share a nonzero root.
pub(crate) fn same_weight_common_torus_zero(
    a: &FacePolynomial,
    b: &FacePolynomial,
) -> Result<bool> {
    debug_assert_eq!(a.normal, b.normal);
    if a.is_monomial() || b.is_monomial() {
        return Ok(false);
    }
    let g = univ_gcd(&a.phi.strip_t_powers(), &b.phi.strip_t_powers())?;
    Ok(!g.is_constant())
}
