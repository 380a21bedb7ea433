//! Sufficient criteria for near-irreducibility read off the Newton diagram
//! at infinity.
//!
//! Only finitely many weights matter: if `w` is not an outward edge normal of
//! `Δ∞(f)`, the face of `f` in direction `w` is a vertex, its initial form is
//! a monomial, and monomials have no zeros on the torus. Every check below
//! therefore enumerates edges.

use std::fmt;

use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::faces::{
    antipodal_common_torus_zero, face_polynomial, has_singular_torus_zero,
    same_weight_common_torus_zero,
};
use crate::geometry::{edges_of, newton_diagram, Edge, WeightVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    NearlyIrreducible,
    Unknown,
    NotApplicable,
}

/// Which argument certified a positive verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Via {
    /// Nondegenerate plus the antipodal condition.
    Thm12,
    /// Nondegenerate plus every non-axis face of negative slope.
    Thm11,
    /// No pair of parallel faces, so the antipodal condition is vacuous.
    RemarkNoParallelFaces,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    NotQuasiConvenient,
    DegenerateAtInfinity,
    Condition2Fails,
    PositiveSlopeFace,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::NearlyIrreducible => "NEARLY_IRREDUCIBLE",
            Status::Unknown => "UNKNOWN",
            Status::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

impl Via {
    pub fn as_str(self) -> &'static str {
        match self {
            Via::Thm12 => "THM_1_2",
            Via::Thm11 => "THM_1_1",
            Via::RemarkNoParallelFaces => "REMARK_NO_PARALLEL_FACES",
            Via::None => "NONE",
        }
    }
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::NotQuasiConvenient => "NOT_QUASI_CONVENIENT",
            ViolationKind::DegenerateAtInfinity => "DEGENERATE_AT_INFINITY",
            ViolationKind::Condition2Fails => "CONDITION_2_FAILS",
            ViolationKind::PositiveSlopeFace => "POSITIVE_SLOPE_FACE",
        }
    }
}

macro_rules! display_via_as_str {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    )*};
}
display_via_as_str!(Status, Via, ViolationKind);

/// A failed hypothesis together with the weight and face that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    pub kind: ViolationKind,
    pub weight: Option<WeightVector>,
    pub face: Option<Edge>,
}

/// Outcome of a single hypothesis check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(Violation),
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self, Check::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Check::Pass => None,
            Check::Fail(v) => Some(v),
        }
    }

    fn from_violations(mut v: Vec<Violation>) -> Self {
        if v.is_empty() {
            Check::Pass
        } else {
            Check::Fail(v.swap_remove(0))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub via: Via,
    pub witnesses: Vec<Violation>,
}

/// The support meets both coordinate axes; the constant term counts for both.
pub fn is_quasi_convenient(f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let on_alpha_axis = f.terms().any(|(e, _)| e.beta == 0);
    let on_beta_axis = f.terms().any(|(e, _)| e.alpha == 0);
    Ok(on_alpha_axis && on_beta_axis)
}

fn require_quasi_convenient(f: &Polynomial) -> Result<()> {
    if is_quasi_convenient(f)? {
        Ok(())
    } else {
        Err(Error::NotQuasiConvenient)
    }
}

fn edges(f: &Polynomial) -> Result<Vec<Edge>> {
    Ok(edges_of(&newton_diagram(f)?))
}

/// Every weight with a positive component whose initial form is singular on
/// the torus, in counter-clockwise edge order.
pub fn degeneracy_violations(f: &Polynomial) -> Result<Vec<Violation>> {
    require_quasi_convenient(f)?;
    let mut out = Vec::new();
    for e in edges(f)? {
        if !e.normal.has_positive_component() {
            continue;
        }
        if has_singular_torus_zero(&face_polynomial(f, e.normal)?) {
            out.push(Violation {
                kind: ViolationKind::DegenerateAtInfinity,
                weight: Some(e.normal),
                face: Some(e),
            });
        }
    }
    Ok(out)
}

pub fn nondegenerate_at_infinity(f: &Polynomial) -> Result<Check> {
    degeneracy_violations(f).map(Check::from_violations)
}

/// Pair nondegeneracy: for no weight with a positive component do
/// `init(f, w)` and `init(g, w)` share a torus zero.
pub fn pair_nondegenerate_at_infinity(f: &Polynomial, g: &Polynomial) -> Result<Check> {
    require_quasi_convenient(f)?;
    require_quasi_convenient(g)?;
    let mut candidates: Vec<(WeightVector, Edge)> = Vec::new();
    for e in edges(f)?.into_iter().chain(edges(g)?) {
        if e.normal.has_positive_component() && !candidates.iter().any(|(w, _)| *w == e.normal) {
            candidates.push((e.normal, e));
        }
    }
    candidates.sort_by_key(|(w, _)| *w);
    for (w, e) in candidates {
        let a = face_polynomial(f, w)?;
        let b = face_polynomial(g, w)?;
        if same_weight_common_torus_zero(&a, &b)? {
            return Ok(Check::Fail(Violation {
                kind: ViolationKind::DegenerateAtInfinity,
                weight: Some(w),
                face: Some(e),
            }));
        }
    }
    Ok(Check::Pass)
}

/// Edges lying on a coordinate axis.
fn on_axis(e: &Edge) -> bool {
    (e.start.alpha == 0 && e.end.alpha == 0) || (e.start.beta == 0 && e.end.beta == 0)
}

/// Faces off the coordinate axes whose outward normal is not in the open
/// positive quadrant.
pub fn positive_slope_faces(f: &Polynomial) -> Result<Vec<Violation>> {
    require_quasi_convenient(f)?;
    Ok(edges(f)?
        .into_iter()
        .filter(|e| !on_axis(e) && !(e.normal.p() > 0 && e.normal.q() > 0))
        .map(|e| Violation {
            kind: ViolationKind::PositiveSlopeFace,
            weight: Some(e.normal),
            face: Some(e),
        })
        .collect())
}

/// Every face off the coordinate axes has an outward normal with `p, q > 0`.
pub fn thm11_applicable(f: &Polynomial) -> Result<Check> {
    positive_slope_faces(f).map(Check::from_violations)
}

/// Pairs of parallel edges `(e, e')` with `e.normal = -e'.normal`, the first
/// edge carrying the canonically oriented normal. A segment diagram yields its
/// two orientations as the single pair.
pub fn antipodal_edge_pairs(f: &Polynomial) -> Result<Vec<(Edge, Edge)>> {
    let es = edges(f)?;
    let mut pairs = Vec::new();
    for a in &es {
        if !a.normal.is_canonical() {
            continue;
        }
        if let Some(b) = es.iter().find(|b| b.normal == -a.normal) {
            pairs.push((*a, *b));
        }
    }
    pairs.sort_by_key(|(a, _)| a.normal);
    Ok(pairs)
}

/// Every antipodal pair with `pq ≤ 0` whose initial forms meet on the torus.
pub fn condition2_violations(f: &Polynomial) -> Result<Vec<Violation>> {
    require_quasi_convenient(f)?;
    let mut out = Vec::new();
    for (a, b) in antipodal_edge_pairs(f)? {
        let w = a.normal;
        if w.p() * w.q() > 0 {
            continue;
        }
        let plus = face_polynomial(f, w)?;
        let minus = face_polynomial(f, -w)?;
        if antipodal_common_torus_zero(&plus, &minus)? {
            debug_assert_eq!(b.normal, -w);
            out.push(Violation {
                kind: ViolationKind::Condition2Fails,
                weight: Some(w),
                face: Some(a),
            });
        }
    }
    Ok(out)
}

pub fn condition2_holds(f: &Polynomial) -> Result<Check> {
    condition2_violations(f).map(Check::from_violations)
}

/// Three-valued verdict: the criteria are sufficient, so a failed hypothesis
/// yields [`Status::Unknown`] with witnesses rather than a negative answer.
pub fn check_nearly_irreducible(f: &Polynomial) -> Result<Verdict> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !is_quasi_convenient(f)? {
        return Ok(Verdict {
            status: Status::NotApplicable,
            via: Via::None,
            witnesses: vec![Violation {
                kind: ViolationKind::NotQuasiConvenient,
                weight: None,
                face: None,
            }],
        });
    }
    let mut witnesses = degeneracy_violations(f)?;
    witnesses.extend(condition2_violations(f)?);
    if !witnesses.is_empty() {
        return Ok(Verdict {
            status: Status::Unknown,
            via: Via::None,
            witnesses,
        });
    }
    let via = if antipodal_edge_pairs(f)?.is_empty() {
        Via::RemarkNoParallelFaces
    } else if thm11_applicable(f)?.passed() {
        Via::Thm11
    } else {
        Via::Thm12
    };
    Ok(Verdict {
        status: Status::NearlyIrreducible,
        via,
        witnesses: Vec::new(),
    })
}
