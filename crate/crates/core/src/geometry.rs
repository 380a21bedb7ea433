//! Newton diagrams at infinity and their faces.
//!
//! Everything here is integer geometry: hulls by monotone chain, areas as
//! doubled shoelace sums, and Minkowski sums by merging edge sequences.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::{LatticePoint, Polynomial, Rational};
use crate::criteria::is_quasi_convenient;
use crate::error::{Error, Result};

/// Primitive integer direction `[p, q]`, never zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    p: i64,
    q: i64,
}

impl WeightVector {
    /// Reduces `(p, q)` to its primitive representative; errors on zero.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::ZeroWeight);
        }
        let g = p.gcd(&q);
        Ok(WeightVector { p: p / g, q: q / g })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    pub fn dot(self, pt: LatticePoint) -> i64 {
        self.p * pt.alpha + self.q * pt.beta
    }

    /// True when `p > 0` or `q > 0`.
    pub fn has_positive_component(self) -> bool {
        self.p > 0 || self.q > 0
    }

    /// Orientation used in reports: `p > 0`, or `p = 0` and `q > 0`.
    pub fn is_canonical(self) -> bool {
        self.p > 0 || (self.p == 0 && self.q > 0)
    }

    pub fn canonical(self) -> Self {
        if self.is_canonical() {
            self
        } else {
            -self
        }
    }

    /// Direction along faces with this outward normal: `(-q, p)`.
    pub fn step(self) -> LatticePoint {
        LatticePoint::new(-self.q, self.p)
    }
}

impl std::ops::Neg for WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector {
            p: -self.p,
            q: -self.q,
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.p, self.q)
    }
}

/// Convex lattice polygon, vertices counter-clockwise starting from the
/// lexicographically smallest, with no three consecutive collinear.
///
/// Degenerate polygons are first class: a segment has two vertices and a
/// point one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

/// A side of a [`LatticePolygon`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub start: LatticePoint,
    pub end: LatticePoint,
    /// Primitive outward normal.
    pub normal: WeightVector,
    /// Number of unit lattice steps from `start` to `end`.
    pub lattice_length: i64,
}

fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i64 {
    (a.alpha - o.alpha) * (b.beta - o.beta) - (a.beta - o.beta) * (b.alpha - o.alpha)
}

fn sub(a: LatticePoint, b: LatticePoint) -> LatticePoint {
    LatticePoint::new(a.alpha - b.alpha, a.beta - b.beta)
}

fn add(a: LatticePoint, b: LatticePoint) -> LatticePoint {
    LatticePoint::new(a.alpha + b.alpha, a.beta + b.beta)
}

impl LatticePolygon {
    /// Convex hull of an arbitrary nonempty point set.
    pub fn hull<I: IntoIterator<Item = LatticePoint>>(points: I) -> Self {
        let mut pts: Vec<LatticePoint> = points.into_iter().collect();
        pts.sort();
        pts.dedup();
        assert!(!pts.is_empty(), "hull of empty set");
        if pts.len() <= 2 {
            return LatticePolygon { vertices: pts };
        }
        let mut lower: Vec<LatticePoint> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<LatticePoint> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        // all points collinear: monotone chain leaves the two endpoints
        LatticePolygon { vertices: lower }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Maximum of `w · v` over the polygon.
    pub fn support_value(&self, w: WeightVector) -> i64 {
        self.vertices
            .iter()
            .map(|&v| w.dot(v))
            .max()
            .expect("nonempty polygon")
    }

    /// Edge vectors in counter-clockwise order starting from the lowest
    /// (then leftmost) vertex. A segment contributes `d` and `-d`.
    fn edge_cycle(&self) -> (LatticePoint, Vec<LatticePoint>) {
        let n = self.vertices.len();
        let start = (0..n)
            .min_by_key(|&i| (self.vertices[i].beta, self.vertices[i].alpha))
            .expect("nonempty polygon");
        let vecs = if n == 1 {
            Vec::new()
        } else {
            (0..n)
                .map(|k| {
                    let a = self.vertices[(start + k) % n];
                    let b = self.vertices[(start + k + 1) % n];
                    sub(b, a)
                })
                .collect()
        };
        (self.vertices[start], vecs)
    }
}

/// Half-plane index for polar ordering starting at the +α direction.
fn half(v: LatticePoint) -> u8 {
    if v.beta > 0 || (v.beta == 0 && v.alpha > 0) {
        0
    } else {
        1
    }
}

fn polar_cmp(a: LatticePoint, b: LatticePoint) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.alpha * b.beta - a.beta * b.alpha;
        0.cmp(&c)
    })
}

pub fn support(f: &Polynomial) -> std::collections::BTreeSet<LatticePoint> {
    f.support()
}

/// `Δ∞(f)`: the convex hull of `supp f ∪ {(0,0)}`.
pub fn newton_diagram(f: &Polynomial) -> Result<LatticePolygon> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(LatticePolygon::hull(
        f.support()
            .into_iter()
            .chain(std::iter::once(LatticePoint::ORIGIN)),
    ))
}

/// Sides of the polygon, counter-clockwise. A segment yields both of its
/// orientations; a point yields nothing.
pub fn edges_of(poly: &LatticePolygon) -> Vec<Edge> {
    let v = poly.vertices();
    if v.len() < 2 {
        return Vec::new();
    }
    let n = v.len();
    let count = if n == 2 { 2 } else { n };
    (0..count)
        .map(|i| {
            let start = v[i];
            let end = v[(i + 1) % n];
            let d = sub(end, start);
            let len = d.alpha.gcd(&d.beta);
            // rotate the primitive direction by -90 degrees
            let normal = WeightVector {
                p: d.beta / len,
                q: -d.alpha / len,
            };
            Edge {
                start,
                end,
                normal,
                lattice_length: len,
            }
        })
        .collect()
}

/// Twice the Euclidean area.
pub fn doubled_area(poly: &LatticePolygon) -> i64 {
    let v = poly.vertices();
    if v.len() < 3 {
        return 0;
    }
    let n = v.len();
    (0..n)
        .map(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            a.alpha * b.beta - a.beta * b.alpha
        })
        .sum::<i64>()
        .abs()
}

/// Minkowski sum by merging the two counter-clockwise edge sequences.
pub fn minkowski_sum(a: &LatticePolygon, b: &LatticePolygon) -> LatticePolygon {
    let (sa, ea) = a.edge_cycle();
    let (sb, eb) = b.edge_cycle();
    let mut merged = Vec::with_capacity(ea.len() + eb.len());
    let (mut i, mut j) = (0, 0);
    while i < ea.len() || j < eb.len() {
        let take_a = match (ea.get(i), eb.get(j)) {
            (Some(&x), Some(&y)) => polar_cmp(x, y) != Ordering::Greater,
            (Some(_), None) => true,
            _ => false,
        };
        if take_a {
            merged.push(ea[i]);
            i += 1;
        } else {
            merged.push(eb[j]);
            j += 1;
        }
    }
    // fuse parallel runs so no three consecutive vertices are collinear
    let mut fused: Vec<LatticePoint> = Vec::with_capacity(merged.len());
    for e in merged {
        match fused.last_mut() {
            Some(last) if polar_cmp(*last, e) == Ordering::Equal => *last = add(*last, e),
            _ => fused.push(e),
        }
    }
    let mut vertices = Vec::with_capacity(fused.len().max(1));
    let mut cur = add(sa, sb);
    vertices.push(cur);
    for e in fused.iter().take(fused.len().saturating_sub(1)) {
        cur = add(cur, *e);
        vertices.push(cur);
    }
    let start = (0..vertices.len())
        .min_by_key(|&k| vertices[k])
        .expect("nonempty");
    vertices.rotate_left(start);
    LatticePolygon { vertices }
}

/// `d_w(f) = max { pα + qβ : (α, β) ∈ supp f }`; may be negative.
pub fn d_w(f: &Polynomial, w: WeightVector) -> Result<i64> {
    f.terms()
        .map(|(e, _)| w.dot(e))
        .max()
        .ok_or(Error::ZeroPolynomial)
}

/// `init(f, w)`: the terms of `f` on the supporting line `w · (α, β) = d_w(f)`.
pub fn init_form(f: &Polynomial, w: WeightVector) -> Result<Polynomial> {
    let d = d_w(f, w)?;
    Ok(Polynomial::from_terms(
        f.terms()
            .filter(|(e, _)| w.dot(*e) == d)
            .map(|(e, c)| (e, c.clone())),
    ))
}

/// `ν∞(f, g) = area Δ∞(fg) − area Δ∞(f) − area Δ∞(g)`.
pub fn nu_infinity(f: &Polynomial, g: &Polynomial) -> Result<Rational> {
    for h in [f, g] {
        if h.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if h.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        if !is_quasi_convenient(h)? {
            return Err(Error::NotQuasiConvenient);
        }
    }
    let fg = f * g;
    let twice = doubled_area(&newton_diagram(&fg)?)
        - doubled_area(&newton_diagram(f)?)
        - doubled_area(&newton_diagram(g)?);
    Ok(Rational::new(twice.into(), 2.into()))
}

/// For a segment with one endpoint at the origin, the canonical primitive
/// normal `w` with `w · segment = 0`.
pub fn is_segment_through_origin(poly: &LatticePolygon) -> Option<WeightVector> {
    if !poly.is_segment() {
        return None;
    }
    let [a, b] = [poly.vertices[0], poly.vertices[1]];
    let far = if a == LatticePoint::ORIGIN {
        b
    } else if b == LatticePoint::ORIGIN {
        a
    } else {
        return None;
    };
    WeightVector::new(far.beta, -far.alpha)
        .ok()
        .map(WeightVector::canonical)
}

/// Area as an exact rational.
pub fn area(poly: &LatticePolygon) -> Rational {
    let d = doubled_area(poly);
    if d.is_zero() {
        return Rational::zero();
    }
    Rational::new(d.into(), 2.into())
}
