//! Seeded random corpus shared by the integration tests.

#![allow(dead_code)]

use nearirr_core::Polynomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x6e65_6172_6972_7221;

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

fn coeff(rng: &mut ChaCha8Rng) -> i64 {
    let c = rng.random_range(1..=9);
    if rng.random_bool(0.5) {
        -c
    } else {
        c
    }
}

fn exponent(rng: &mut ChaCha8Rng, max_deg: i64) -> (i64, i64) {
    let d = rng.random_range(0..=max_deg);
    let a = rng.random_range(0..=d);
    (a, d - a)
}

/// Random quasi-convenient polynomial of total degree at most `max_deg` with
/// at most `max_terms` terms and coefficients in `[-9, 9]`.
pub fn quasi_convenient(rng: &mut ChaCha8Rng, max_deg: i64, max_terms: usize) -> Polynomial {
    loop {
        let n = rng.random_range(1..=max_terms - 2);
        let mut terms: Vec<(i64, i64, i64)> = (0..n)
            .map(|_| {
                let (a, b) = exponent(rng, max_deg);
                (coeff(rng), a, b)
            })
            .collect();
        if !terms.iter().any(|t| t.2 == 0) {
            terms.push((coeff(rng), rng.random_range(0..=max_deg), 0));
        }
        if !terms.iter().any(|t| t.1 == 0) {
            terms.push((coeff(rng), 0, rng.random_range(0..=max_deg)));
        }
        let f = Polynomial::from_int_terms(terms);
        let qc = f.terms().any(|(e, _)| e.alpha == 0) && f.terms().any(|(e, _)| e.beta == 0);
        if qc && !f.is_constant() && f.len() <= max_terms {
            return f;
        }
    }
}

/// The main corpus: 240 polynomials of degree at most 8 with at most 10 terms.
pub fn corpus() -> Vec<Polynomial> {
    let mut r = rng(1);
    (0..240).map(|_| quasi_convenient(&mut r, 8, 10)).collect()
}

/// Polynomials built to hit singular faces and antipodal common zeros.
pub fn structured() -> Vec<Polynomial> {
    let mut r = rng(2);
    let mut out = Vec::new();
    for _ in 0..60 {
        let g = quasi_convenient(&mut r, 3, 4);
        let h = quasi_convenient(&mut r, 2, 3);
        out.push(&g * &h.pow(2));
    }
    for _ in 0..60 {
        let shared = Polynomial::from_int_terms([(coeff(&mut r), 0, 0), (coeff(&mut r), 1, 0)]);
        let top = quasi_convenient(&mut r, 2, 3);
        let top = Polynomial::from_terms(
            top.terms()
                .filter(|(e, _)| e.beta == 0)
                .map(|(e, c)| (nearirr_core::LatticePoint::new(e.alpha, 2), c.clone())),
        );
        let bottom = Polynomial::from_int_terms([(coeff(&mut r), 0, 0), (coeff(&mut r), 2, 0)]);
        let f = &(&shared * &top) + &(&shared * &bottom);
        let f = &f + &Polynomial::from_int_terms([(coeff(&mut r), 1, 1)]);
        if f.terms().any(|(e, _)| e.alpha == 0) && f.terms().any(|(e, _)| e.beta == 0) {
            out.push(f);
        }
    }
    out
}

fn univariate(r: &mut ChaCha8Rng, on_x: bool) -> Polynomial {
    loop {
        let mut terms: Vec<(i64, i64, i64)> = vec![(coeff(r), 0, 0)];
        for _ in 0..r.random_range(1..=3) {
            let (k, c) = (r.random_range(1..=8), coeff(r));
            terms.push(if on_x { (c, k, 0) } else { (c, 0, k) });
        }
        let f = Polynomial::from_int_terms(terms);
        if !f.is_constant() {
            return f;
        }
    }
}

/// Pairs of univariate polynomials in the same variable with a constant
/// term: both diagrams are segments on one axis.
pub fn axis_pairs() -> Vec<(Polynomial, Polynomial)> {
    let mut r = rng(5);
    (0..20)
        .map(|i| {
            (
                univariate(&mut r, i % 2 == 0),
                univariate(&mut r, i % 2 == 0),
            )
        })
        .collect()
}
