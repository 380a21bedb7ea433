use nearirr_core::algebra::{bivar_gcd, Polynomial};
use nearirr_core::criteria::{
    antipodal_edge_pairs, check_nearly_irreducible, condition2_holds, condition2_violations,
    degeneracy_violations, nondegenerate_at_infinity, thm11_applicable, Status, ViolationKind,
};
use nearirr_core::faces::{antipodal_common_torus_zero, face_polynomial, has_singular_torus_zero};
use nearirr_core::geometry::{edges_of, init_form, newton_diagram, WeightVector};
use nearirr_core::oracle::{
    common_torus_zero_bruteforce, intersection_sum, kb_verify, singular_torus_zero_bruteforce,
};
use nearirr_core::Error;
use num_traits::Zero;
use proptest::prelude::*;

fn nonzero_coeff() -> impl Strategy<Value = i64> {
    prop_oneof![-5i64..=-1, 1i64..=5]
}

fn small_poly(max_deg: i64, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, 0..=max_deg, 0..=max_deg), 1..=max_terms)
        .prop_map(Polynomial::from_int_terms)
}

fn quasi_convenient(max_deg: i64, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    (
        prop::collection::vec((-5i64..=5, 0..=max_deg, 0..=max_deg), 0..max_terms),
        (nonzero_coeff(), 1..=max_deg),
        (nonzero_coeff(), 1..=max_deg),
        -3i64..=3,
    )
        .prop_map(|(mut terms, (ca, a), (cb, b), c0)| {
            terms.retain(|(_, x, y)| *x != 0 && *y != 0);
            terms.extend([(ca, a, 0), (cb, 0, b), (c0, 0, 0)]);
            Polynomial::from_int_terms(terms)
        })
}

/// Polynomials that often have singular faces: `g · h²`.
fn with_square_factor() -> impl Strategy<Value = Polynomial> {
    (quasi_convenient(2, 3), quasi_convenient(1, 2)).prop_map(|(g, h)| &g * &h.pow(2))
}

/// Polynomials with a horizontal top row and a bottom row, so the diagram has
/// the antipodal pair `[0, ±1]`; rows sometimes share a factor in `X`.
fn with_parallel_rows() -> impl Strategy<Value = Polynomial> {
    (
        prop::collection::vec(-4i64..=4, 1..3),
        prop::collection::vec(nonzero_coeff(), 2..4),
        prop::collection::vec(nonzero_coeff(), 2..4),
        1i64..4,
        any::<bool>(),
        prop::collection::vec((-3i64..=3, 0i64..3), 0..3),
    )
        .prop_map(|(shared, top, bottom, height, share, middle)| {
            let row = |cs: &[i64], beta: i64| {
                Polynomial::from_int_terms(cs.iter().enumerate().map(|(k, &c)| (c, k as i64, beta)))
            };
            let s = if share {
                row(&shared, 0)
            } else {
                Polynomial::one()
            };
            let s = if s.is_zero() { Polynomial::one() } else { s };
            let mut f = &(&s * &row(&top, height)) + &(&s * &row(&bottom, 0));
            for (c, a) in middle {
                if height > 1 {
                    f = &f + &Polynomial::from_int_terms([(c, a, 1)]);
                }
            }
            f
        })
        .prop_filter("quasi-convenient, positive degree", |f| {
            !f.is_constant()
                && f.terms().any(|(e, _)| e.alpha == 0)
                && f.terms().any(|(e, _)| e.beta == 0)
        })
}

fn any_fixture() -> impl Strategy<Value = Polynomial> {
    prop_oneof![
        quasi_convenient(4, 6),
        with_square_factor(),
        with_parallel_rows()
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn face_polynomial_reconstructs_initial_form(f in any_fixture(), p in -4i64..=4, q in -4i64..=4) {
        let mut weights: Vec<WeightVector> = edges_of(&newton_diagram(&f).unwrap()).iter().map(|e| e.normal).collect();
        if (p, q) != (0, 0) {
            weights.push(WeightVector::new(p, q).unwrap());
        }
        for w in weights {
            let fp = face_polynomial(&f, w).unwrap();
            prop_assert_eq!(fp.reconstruct(), init_form(&f, w).unwrap());
            prop_assert!(!fp.phi.coeff(0).is_zero());
            prop_assert_eq!(fp.is_monomial(), init_form(&f, w).unwrap().is_monomial());
        }
    }

    #[test]
    fn singular_face_test_agrees_with_gcd_oracle(f in any_fixture()) {
        for e in edges_of(&newton_diagram(&f).unwrap()) {
            for w in [e.normal, -e.normal] {
                let fast = has_singular_torus_zero(&face_polynomial(&f, w).unwrap());
                let slow = singular_torus_zero_bruteforce(&init_form(&f, w).unwrap()).unwrap();
                prop_assert_eq!(fast, slow, "f = {}, w = {}", f, w);
            }
        }
    }

    #[test]
    fn antipodal_test_agrees_with_gcd_oracle(f in any_fixture()) {
        for e in edges_of(&newton_diagram(&f).unwrap()) {
            let w = e.normal;
            let plus = face_polynomial(&f, w).unwrap();
            let minus = face_polynomial(&f, -w).unwrap();
            let fast = antipodal_common_torus_zero(&plus, &minus).unwrap();
            prop_assert_eq!(fast, antipodal_common_torus_zero(&minus, &plus).unwrap());
            let slow = common_torus_zero_bruteforce(&init_form(&f, w).unwrap(), &init_form(&f, -w).unwrap()).unwrap();
            prop_assert_eq!(fast, slow, "f = {}, w = {}", f, w);
        }
    }

    #[test]
    fn witnesses_replay(f in any_fixture()) {
        for v in degeneracy_violations(&f).unwrap() {
            prop_assert_eq!(v.kind, ViolationKind::DegenerateAtInfinity);
            let w = v.weight.unwrap();
            prop_assert!(w.has_positive_component());
            prop_assert!(singular_torus_zero_bruteforce(&init_form(&f, w).unwrap()).unwrap());
        }
        for v in condition2_violations(&f).unwrap() {
            let w = v.weight.unwrap();
            prop_assert!(w.is_canonical() && w.p() * w.q() <= 0);
            prop_assert!(common_torus_zero_bruteforce(&init_form(&f, w).unwrap(), &init_form(&f, -w).unwrap()).unwrap());
        }
    }

    #[test]
    fn theorem_one_one_implies_condition_two(f in any_fixture()) {
        if thm11_applicable(&f).unwrap().passed() && nondegenerate_at_infinity(&f).unwrap().passed() {
            prop_assert!(condition2_holds(&f).unwrap().passed());
        }
    }

    #[test]
    fn no_parallel_faces_means_condition_two_is_vacuous(f in any_fixture()) {
        if antipodal_edge_pairs(&f).unwrap().is_empty() {
            prop_assert!(condition2_holds(&f).unwrap().passed());
        }
    }

    #[test]
    fn verdict_shape(f in any_fixture()) {
        let v = check_nearly_irreducible(&f).unwrap();
        match v.status {
            Status::NearlyIrreducible => prop_assert!(v.witnesses.is_empty()),
            Status::Unknown => prop_assert!(!v.witnesses.is_empty()),
            Status::NotApplicable => prop_assert!(false, "fixtures are quasi-convenient"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kouchnirenko_bernstein_holds_on_random_pairs(f in quasi_convenient(3, 3), g in quasi_convenient(3, 3)) {
        prop_assume!(bivar_gcd(&f, &g).unwrap().is_constant());
        let rec = kb_verify(&f, &g);
        prop_assert!(!matches!(rec, Err(Error::TheoremViolation(_))), "{:?}", rec);
        let rec = rec.unwrap();
        prop_assert_eq!(rec.equality, rec.pair_nondegenerate);
    }

    #[test]
    fn intersection_sum_is_symmetric(f in small_poly(3, 4), g in small_poly(3, 4)) {
        prop_assume!(!f.is_constant() && !g.is_constant());
        prop_assume!(bivar_gcd(&f, &g).unwrap().is_constant());
        prop_assert_eq!(intersection_sum(&f, &g).unwrap(), intersection_sum(&g, &f).unwrap());
    }
}

#[test]
fn fixture_families_reach_both_answers() {
    let f = nearirr_core::parse_polynomial("(X + Y + 1)^2 * (X - 2*Y + 3)").unwrap();
    assert!(!nondegenerate_at_infinity(&f).unwrap().passed());
    let g = nearirr_core::parse_polynomial("(X^2 - 1)*Y^2 + (X^2 - 1)*(X + 2)").unwrap();
    assert!(!condition2_holds(&g).unwrap().passed());
}
