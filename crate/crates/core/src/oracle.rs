//! Brute-force machinery kept independent of the face calculus: affine
//! intersection counts from resultants, torus checks from bivariate gcds,
//! factorization checks, and Kouchnirenko–Bernstein verification.

use num_traits::Zero;

use crate::algebra::{bivar_gcd, resultant_y, LatticePoint, Polynomial, Rational, Var};
use crate::criteria::{
    check_nearly_irreducible, is_quasi_convenient, pair_nondegenerate_at_infinity, Status,
};
use crate::error::{Error, Result};
use crate::geometry::nu_infinity;

/// One run of the Kouchnirenko–Bernstein comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KbRecord {
    pub sum_multiplicities: u64,
    pub nu: Rational,
    pub pair_nondegenerate: bool,
    pub equality: bool,
}

/// Common-zero data for one unordered pair of supplied factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorPair {
    pub i: usize,
    pub j: usize,
    /// The two factors share a nonconstant component.
    pub shared_component: bool,
    /// Total affine intersection multiplicity; `None` when a component is shared.
    pub intersection_sum: Option<u64>,
    pub common_zero: bool,
}

fn require_positive_degree(f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        Err(Error::ZeroPolynomial)
    } else if f.is_constant() {
        Err(Error::ConstantPolynomial)
    } else {
        Ok(())
    }
}

/// `f(X + λY, Y)`.
fn shear(f: &Polynomial, lambda: i64) -> Polynomial {
    let lin = Polynomial::var(Var::X)
        + Polynomial::monomial(
            Rational::from_integer(lambda.into()),
            LatticePoint::new(0, 1),
        );
    let max_a = f.degree_in(Var::X).unwrap_or(0) as usize;
    let mut powers = vec![Polynomial::one()];
    for k in 1..=max_a {
        let next = &powers[k - 1] * &lin;
        powers.push(next);
    }
    let mut out = Polynomial::zero();
    for (e, c) in f.terms() {
        let term = powers[e.alpha as usize]
            .shift(LatticePoint::new(0, e.beta))
            .scale(c);
        out = out + term;
    }
    out
}

/// Leading coefficient in `Y` if it is a constant, i.e. free of `X`.
fn constant_y_leading_coeff(f: &Polynomial) -> Option<Rational> {
    let dy = f.degree_in(Var::Y)?;
    let mut lead = f.terms().filter(|(e, _)| e.beta == dy);
    match (lead.next(), lead.next()) {
        (Some((e, c)), None) if e.alpha == 0 => Some(c.clone()),
        _ => None,
    }
}

fn count_after_shear(f: &Polynomial, g: &Polynomial, lambda: i64) -> Option<Result<u64>> {
    let (fs, gs) = (shear(f, lambda), shear(g, lambda));
    let lf = constant_y_leading_coeff(&fs)?;
    let lg = constant_y_leading_coeff(&gs)?;
    let fm = fs.scale(&lf.recip());
    let gm = gs.scale(&lg.recip());
    Some(resultant_y(&fm, &gm).and_then(|r| match r.degree() {
        None => Err(Error::NotCoprime),
        Some(d) => Ok(d as u64),
    }))
}

/// Total number of affine common zeros of two coprime curves, counted with
/// intersection multiplicity.
///
/// After a shear `X ↦ X + λY` making both polynomials monic in `Y`, the
/// order of `Res_Y` at `x₀` is the sum of the multiplicities above `x₀`, so the
/// total is `deg Res_Y`. The two smallest admissible `λ` are both evaluated
/// and must agree.
pub fn intersection_sum(f: &Polynomial, g: &Polynomial) -> Result<u64> {
    require_positive_degree(f)?;
    require_positive_degree(g)?;
    if !bivar_gcd(f, g)?.is_constant() {
        return Err(Error::NotCoprime);
    }
    let bound = f.total_degree().unwrap_or(0) + g.total_degree().unwrap_or(0) + 2;
    let mut counts = Vec::with_capacity(2);
    for lambda in 0..=bound {
        if let Some(c) = count_after_shear(f, g, lambda) {
            counts.push(c?);
            if counts.len() == 2 {
                break;
            }
        }
    }
    match counts.as_slice() {
        [a, b] if a == b => Ok(*a),
        [a, b] => Err(Error::Internal(format!(
            "intersection count depends on the shear: {a} vs {b}"
        ))),
        _ => Err(Error::Internal("no admissible shear found".into())),
    }
}

/// Whether `g` and `h` share a zero in `ℂ²`.
pub fn has_common_affine_zero(g: &Polynomial, h: &Polynomial) -> Result<bool> {
    require_positive_degree(g)?;
    require_positive_degree(h)?;
    if !bivar_gcd(g, h)?.is_constant() {
        return Ok(true);
    }
    Ok(intersection_sum(g, h)? > 0)
}

pub fn validate_factorization(f: &Polynomial, factors: &[Polynomial]) -> Result<bool> {
    if factors.is_empty() {
        return Err(Error::EmptyFactorList);
    }
    if let Some(i) = factors.iter().position(|g| g.is_constant()) {
        return Err(Error::ConstantFactor(i));
    }
    let product = factors.iter().fold(Polynomial::one(), |acc, g| &acc * g);
    Ok(&product == f)
}

/// Common-zero data for every unordered pair of factors.
pub fn factor_pairs(factors: &[Polynomial]) -> Result<Vec<FactorPair>> {
    let mut out = Vec::new();
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let (g, h) = (&factors[i], &factors[j]);
            let shared = !bivar_gcd(g, h)?.is_constant();
            let sum = if shared {
                None
            } else {
                Some(intersection_sum(g, h)?)
            };
            out.push(FactorPair {
                i,
                j,
                shared_component: shared,
                intersection_sum: sum,
                common_zero: shared || sum.is_some_and(|s| s > 0),
            });
        }
    }
    Ok(out)
}

/// Near-irreducibility decided on a supplied factorization: every pair of
/// factors must meet in `ℂ²`.
pub fn nearly_irreducible_on_factors(f: &Polynomial, factors: &[Polynomial]) -> Result<bool> {
    if !validate_factorization(f, factors)? {
        return Err(Error::InvalidFactorization);
    }
    Ok(factor_pairs(factors)?.iter().all(|p| p.common_zero))
}

/// [`nearly_irreducible_on_factors`], cross-checked against the criteria.
///
/// Fails with [`Error::TheoremViolation`] when the criteria certify `f` but
/// two supplied factors have no common zero.
pub fn verify_verdict_on_factors(f: &Polynomial, factors: &[Polynomial]) -> Result<bool> {
    let nearly = nearly_irreducible_on_factors(f, factors)?;
    if !nearly && check_nearly_irreducible(f)?.status == Status::NearlyIrreducible {
        let pair = factor_pairs(factors)?.into_iter().find(|p| !p.common_zero);
        let (i, j) = pair.map_or((0, 0), |p| (p.i, p.j));
        return Err(Error::TheoremViolation(format!(
            "{f} is certified but factors {} and {} have no common zero",
            factors[i], factors[j]
        )));
    }
    Ok(nearly)
}

fn require_collinear_support(f: &Polynomial) -> Result<()> {
    let pts: Vec<LatticePoint> = f.terms().map(|(e, _)| e).collect();
    let Some(&a) = pts.first() else {
        return Err(Error::ZeroPolynomial);
    };
    let Some(&b) = pts.iter().find(|&&p| p != a) else {
        return Ok(());
    };
    let collinear = pts.iter().all(|p| {
        (b.alpha - a.alpha) * (p.beta - a.beta) - (b.beta - a.beta) * (p.alpha - a.alpha) == 0
    });
    if collinear {
        Ok(())
    } else {
        Err(Error::NotCollinear)
    }
}

/// Whether `F = ∂X F = ∂Y F = 0` has a solution in `(ℂ*)²`, for `F` with
/// collinear support.
///
/// The torus acts on a quasi-homogeneous form, so its singular torus locus is
/// a union of curves; it is nonempty iff `gcd(F, ∂X F, ∂Y F)` keeps a factor
/// other than a monomial.
pub fn singular_torus_zero_bruteforce(f: &Polynomial) -> Result<bool> {
    require_collinear_support(f)?;
    let g = bivar_gcd(f, &f.derivative(Var::X))?;
    let g = bivar_gcd(&g, &f.derivative(Var::Y))?;
    Ok(!g.strip_monomial_factor().is_constant())
}

/// Whether `F = G = 0` has a solution in `(ℂ*)²`, for `F` and `G` with
/// collinear supports on parallel lines.
pub fn common_torus_zero_bruteforce(f: &Polynomial, g: &Polynomial) -> Result<bool> {
    require_collinear_support(f)?;
    require_collinear_support(g)?;
    let gcd = bivar_gcd(&f.strip_monomial_factor(), &g.strip_monomial_factor())?;
    Ok(!gcd.is_constant())
}

/// Compares the affine intersection count with `ν∞(f, g)`.
///
/// Fails with [`Error::TheoremViolation`] if the count exceeds `ν∞` or if
/// equality does not coincide with pair nondegeneracy.
pub fn kb_verify(f: &Polynomial, g: &Polynomial) -> Result<KbRecord> {
    for h in [f, g] {
        require_positive_degree(h)?;
        if !is_quasi_convenient(h)? {
            return Err(Error::NotQuasiConvenient);
        }
    }
    let sum = intersection_sum(f, g)?;
    let nu = nu_infinity(f, g)?;
    let nondegenerate = pair_nondegenerate_at_infinity(f, g)?.passed();
    let sum_q = Rational::from_integer(sum.into());
    if sum_q > nu {
        return Err(Error::TheoremViolation(format!(
            "intersection sum {sum} exceeds nu {nu} for ({f}, {g})"
        )));
    }
    let equality = sum_q == nu;
    if equality != nondegenerate {
        return Err(Error::TheoremViolation(format!(
            "sum {sum}, nu {nu}, pair nondegenerate {nondegenerate} for ({f}, {g})"
        )));
    }
    debug_assert!(!nu.is_zero() || sum.is_zero());
    Ok(KbRecord {
        sum_multiplicities: sum,
        nu,
        pair_nondegenerate: nondegenerate,
        equality,
    })
}
