//! JSON report types. Field order is the serialization order, so reports are
//! byte-stable for a given input.

use nearirr_core::criteria::{
    check_nearly_irreducible, condition2_violations, degeneracy_violations, is_quasi_convenient,
    positive_slope_faces,
};
use nearirr_core::faces::{face_polynomial, has_singular_torus_zero};
use nearirr_core::geometry::{d_w, doubled_area, edges_of, init_form, newton_diagram};
use nearirr_core::oracle::{factor_pairs, verify_verdict_on_factors, FactorPair};
use nearirr_core::{
    format_polynomial, Edge, FacePolynomial, KbRecord, LatticePoint, LatticePolygon, Polynomial,
    Rational, Result, Verdict, Violation, ViolationKind, WeightVector,
};
use serde::Serialize;

pub type Point = [i64; 2];

fn point(p: LatticePoint) -> Point {
    [p.alpha, p.beta]
}

fn weight(w: WeightVector) -> Point {
    [w.p(), w.q()]
}

fn rational(r: &Rational) -> String {
    r.to_string()
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagramJson {
    pub vertices: Vec<Point>,
    pub doubled_area: i64,
    pub area: String,
}

impl DiagramJson {
    pub fn new(d: &LatticePolygon) -> Self {
        let doubled = doubled_area(d);
        DiagramJson {
            vertices: d.vertices().iter().copied().map(point).collect(),
            doubled_area: doubled,
            area: rational(&Rational::new(doubled.into(), 2.into())),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FacePolyJson {
    pub base: Point,
    pub step: Point,
    /// Coefficients of `T^0, T^1, ...`.
    pub coefficients: Vec<String>,
    pub degree: usize,
}

impl FacePolyJson {
    pub fn new(fp: &FacePolynomial) -> Self {
        FacePolyJson {
            base: point(fp.base),
            step: point(fp.step),
            coefficients: fp.phi.coeffs().iter().map(rational).collect(),
            degree: fp.degree(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceJson {
    pub start: Point,
    pub end: Point,
    pub normal: Point,
    pub lattice_length: i64,
}

impl FaceJson {
    pub fn new(e: &Edge) -> Self {
        FaceJson {
            start: point(e.start),
            end: point(e.end),
            normal: weight(e.normal),
            lattice_length: e.lattice_length,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeJson {
    #[serde(flatten)]
    pub face: FaceJson,
    pub init_form: String,
    pub face_poly: FacePolyJson,
}

impl EdgeJson {
    pub fn new(f: &Polynomial, e: &Edge) -> Result<Self> {
        Ok(EdgeJson {
            face: FaceJson::new(e),
            init_form: format_polynomial(&init_form(f, e.normal)?),
            face_poly: FacePolyJson::new(&face_polynomial(f, e.normal)?),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationJson {
    pub kind: &'static str,
    /// Canonically oriented; the face keeps its outward normal.
    pub weight: Option<Point>,
    pub face: Option<FaceJson>,
    /// `init(f, w)`, followed by `init(f, -w)` for antipodal failures.
    pub initial_forms: Vec<String>,
}

impl ViolationJson {
    pub fn new(f: &Polynomial, v: &Violation) -> Result<Self> {
        let mut initial_forms = Vec::new();
        if let Some(e) = &v.face {
            initial_forms.push(format_polynomial(&init_form(f, e.normal)?));
            if v.kind == ViolationKind::Condition2Fails {
                initial_forms.push(format_polynomial(&init_form(f, -e.normal)?));
            }
        }
        Ok(ViolationJson {
            kind: v.kind.as_str(),
            weight: v.weight.map(|w| weight(w.canonical())),
            face: v.face.as_ref().map(FaceJson::new),
            initial_forms,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictJson {
    pub status: &'static str,
    pub via: &'static str,
    pub witnesses: Vec<ViolationJson>,
}

impl VerdictJson {
    pub fn new(f: &Polynomial, v: &Verdict) -> Result<Self> {
        Ok(VerdictJson {
            status: v.status.as_str(),
            via: v.via.as_str(),
            witnesses: v
                .witnesses
                .iter()
                .map(|w| ViolationJson::new(f, w))
                .collect::<Result<_>>()?,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct KbJson {
    pub sum_multiplicities: u64,
    pub nu: String,
    pub pair_nondegenerate: bool,
    pub equality: bool,
}

impl From<&KbRecord> for KbJson {
    fn from(r: &KbRecord) -> Self {
        KbJson {
            sum_multiplicities: r.sum_multiplicities,
            nu: rational(&r.nu),
            pair_nondegenerate: r.pair_nondegenerate,
            equality: r.equality,
        }
    }
}

/// Output of `check`. The hypothesis flags are `null` when the polynomial is
/// not quasi-convenient.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub input: String,
    pub quasi_convenient: bool,
    pub diagram: DiagramJson,
    pub edges: Vec<EdgeJson>,
    pub nondegenerate: Option<bool>,
    pub condition2: Option<bool>,
    pub thm11_applicable: Option<bool>,
    pub verdict: VerdictJson,
    /// Every failed hypothesis, including positive-slope faces that only
    /// affect the fast route.
    pub violations: Vec<ViolationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kb: Option<KbJson>,
}

impl Report {
    pub fn build(f: &Polynomial) -> Result<Self> {
        let verdict = check_nearly_irreducible(f)?;
        let diagram = newton_diagram(f)?;
        let edges = edges_of(&diagram);
        let qc = is_quasi_convenient(f)?;
        let (mut nondegenerate, mut condition2, mut thm11) = (None, None, None);
        let mut violations = Vec::new();
        if qc {
            let degenerate = degeneracy_violations(f)?;
            let antipodal = condition2_violations(f)?;
            let slope = positive_slope_faces(f)?;
            nondegenerate = Some(degenerate.is_empty());
            condition2 = Some(antipodal.is_empty());
            thm11 = Some(slope.is_empty());
            violations.extend(degenerate);
            violations.extend(antipodal);
            violations.extend(slope);
        } else {
            violations.extend(verdict.witnesses.iter().cloned());
        }
        Ok(Report {
            input: format_polynomial(f),
            quasi_convenient: qc,
            diagram: DiagramJson::new(&diagram),
            edges: edges
                .iter()
                .map(|e| EdgeJson::new(f, e))
                .collect::<Result<_>>()?,
            nondegenerate,
            condition2,
            thm11_applicable: thm11,
            verdict: VerdictJson::new(f, &verdict)?,
            violations: violations
                .iter()
                .map(|v| ViolationJson::new(f, v))
                .collect::<Result<_>>()?,
            kb: None,
        })
    }
}

/// Output of `diagram`.
#[derive(Debug, Clone, Serialize)]
pub struct DiagramReport {
    pub input: String,
    pub support: Vec<Point>,
    pub diagram: DiagramJson,
    pub edges: Vec<EdgeJson>,
    pub svg: Option<String>,
}

impl DiagramReport {
    pub fn build(f: &Polynomial, svg: Option<String>) -> Result<Self> {
        let diagram = newton_diagram(f)?;
        Ok(DiagramReport {
            input: format_polynomial(f),
            support: f.support().into_iter().map(point).collect(),
            diagram: DiagramJson::new(&diagram),
            edges: edges_of(&diagram)
                .iter()
                .map(|e| EdgeJson::new(f, e))
                .collect::<Result<_>>()?,
            svg,
        })
    }
}

/// Output of `initform`.
#[derive(Debug, Clone, Serialize)]
pub struct InitFormReport {
    pub input: String,
    pub weight: Point,
    pub d_w: i64,
    pub init_form: String,
    pub face_poly: FacePolyJson,
    pub singular_torus_zero: bool,
}

impl InitFormReport {
    pub fn build(f: &Polynomial, w: WeightVector) -> Result<Self> {
        let fp = face_polynomial(f, w)?;
        Ok(InitFormReport {
            input: format_polynomial(f),
            weight: weight(w),
            d_w: d_w(f, w)?,
            init_form: format_polynomial(&init_form(f, w)?),
            face_poly: FacePolyJson::new(&fp),
            singular_torus_zero: has_singular_torus_zero(&fp),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DoubledAreas {
    pub f: i64,
    pub g: i64,
    pub product: i64,
}

/// Output of `nu`.
#[derive(Debug, Clone, Serialize)]
pub struct NuReport {
    pub f: String,
    pub g: String,
    pub nu: String,
    pub doubled_areas: DoubledAreas,
}

impl NuReport {
    pub fn build(f: &Polynomial, g: &Polynomial) -> Result<Self> {
        let nu = nearirr_core::geometry::nu_infinity(f, g)?;
        let area = |h: &Polynomial| newton_diagram(h).map(|d| doubled_area(&d));
        Ok(NuReport {
            f: format_polynomial(f),
            g: format_polynomial(g),
            nu: rational(&nu),
            doubled_areas: DoubledAreas {
                f: area(f)?,
                g: area(g)?,
                product: area(&(f * g))?,
            },
        })
    }
}

/// Output of `kb`.
#[derive(Debug, Clone, Serialize)]
pub struct KbReport {
    pub f: String,
    pub g: String,
    #[serde(flatten)]
    pub record: KbJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorPairJson {
    pub i: usize,
    pub j: usize,
    pub shared_component: bool,
    pub intersection_sum: Option<u64>,
    pub common_zero: bool,
}

impl From<&FactorPair> for FactorPairJson {
    fn from(p: &FactorPair) -> Self {
        FactorPairJson {
            i: p.i,
            j: p.j,
            shared_component: p.shared_component,
            intersection_sum: p.intersection_sum,
            common_zero: p.common_zero,
        }
    }
}

/// Output of `factors`.
#[derive(Debug, Clone, Serialize)]
pub struct FactorsReport {
    pub input: String,
    pub factors: Vec<String>,
    pub valid: bool,
    pub nearly_irreducible: bool,
    pub pairs: Vec<FactorPairJson>,
}

impl FactorsReport {
    /// Fails with [`nearirr_core::Error::InvalidFactorization`] when the
    /// product does not match, and with a theorem violation when the criteria
    /// certify `f` against the evidence of the factors.
    pub fn build(f: &Polynomial, factors: &[Polynomial]) -> Result<Self> {
        let nearly = verify_verdict_on_factors(f, factors)?;
        Ok(FactorsReport {
            input: format_polynomial(f),
            factors: factors.iter().map(format_polynomial).collect(),
            valid: true,
            nearly_irreducible: nearly,
            pairs: factor_pairs(factors)?
                .iter()
                .map(FactorPairJson::from)
                .collect(),
        })
    }
}
