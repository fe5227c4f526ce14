//! Property tests for the polynomial layer: the Leibniz rule, the Taylor
//! round trip, agreement of the two multiplicity routes, and the
//! factor-count lower bound on product multiplicities.

use num_traits::Zero;
use proptest::prelude::*;

use hypercover::poly::{
    bits_to_rat, exponents_of_degree, exponents_up_to, rat, Hyperplane, HyperplaneFamily,
    Multiplicity, Polynomial, Rat,
};
use hypercover::sym::cube_points;

fn small_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    let term = (
        proptest::collection::vec(0u32..=2, nvars),
        -4i64..=4,
    );
    proptest::collection::vec(term, 0..6).prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms.into_iter().map(|(e, c)| (e, rat(c))),
        )
        .expect("term lengths match")
    })
}

fn small_point(nvars: usize) -> impl Strategy<Value = Vec<Rat>> {
    proptest::collection::vec((-2i64..=2, 1i64..=2), nvars)
        .prop_map(|cs| cs.into_iter().map(|(p, q)| rat(p) / rat(q)).collect())
}

/// Derivative of a product by the Leibniz rule, term by term.
fn leibniz(p: &Polynomial, q: &Polynomial, alpha: &[u32]) -> Polynomial {
    let n = p.nvars();
    let mut out = Polynomial::zero(n);
    // all beta <= alpha componentwise
    let mut betas = vec![vec![0u32; n]];
    for (i, &a) in alpha.iter().enumerate() {
        let mut next = Vec::new();
        for b in &betas {
            for v in 0..=a {
                let mut b2 = b.clone();
                b2[i] = v;
                next.push(b2);
            }
        }
        betas = next;
    }
    for beta in betas {
        let gamma: Vec<u32> = alpha.iter().zip(&beta).map(|(a, b)| a - b).collect();
        let mut coef = rat(1);
        for i in 0..n {
            // binomial C(alpha_i, beta_i)
            let mut c = rat(1);
            for j in 0..beta[i] {
                c = c * rat((alpha[i] - j) as i64) / rat((j + 1) as i64);
            }
            coef = coef * c;
        }
        let dp = p.derivative(&beta).expect("lengths match");
        let dq = q.derivative(&gamma).expect("lengths match");
        out = out.add(&dp.mul(&dq).scale(&coef));
    }
    out
}

proptest! {
    #[test]
    fn derivative_is_linear(p in small_poly(2), q in small_poly(2), a in 0u32..=2, b in 0u32..=2) {
        let alpha = [a, b];
        let lhs = p.add(&q).derivative(&alpha).unwrap();
        let rhs = p.derivative(&alpha).unwrap().add(&q.derivative(&alpha).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_product_rule(p in small_poly(2), q in small_poly(2), a in 0u32..=2, b in 0u32..=2) {
        let alpha = [a, b];
        let direct = p.mul(&q).derivative(&alpha).unwrap();
        let ruled = leibniz(&p, &q, &alpha);
        prop_assert_eq!(direct, ruled);
    }

    #[test]
    fn taylor_round_trip(p in small_poly(3), a in small_point(3)) {
        let shifted = p.taylor_shift(&a);
        prop_assert_eq!(shifted.expand_about(&a), p);
    }

    #[test]
    fn multiplicity_routes_agree(p in small_poly(3), a in small_point(3)) {
        prop_assume!(!p.is_zero());
        let cap = p.degree().unwrap() + 1;
        let scan = p.multiplicity_at(&a, cap).unwrap();
        let taylor = p.multiplicity_exact(&a).unwrap();
        prop_assert_eq!(scan, Multiplicity::Exact(taylor));
    }

    #[test]
    fn product_multiplicity_dominates_vanishing_count(
        coeffs in proptest::collection::vec((proptest::collection::vec(-2i64..=2, 3), -2i64..=2), 1..5),
    ) {
        let mut items = Vec::new();
        for (cs, c0) in coeffs {
            if cs.iter().all(|&c| c == 0) {
                continue;
            }
            items.push(Hyperplane::from_ints(&cs, c0).unwrap());
        }
        prop_assume!(!items.is_empty());
        let fam = HyperplaneFamily::from_items(3, items).unwrap();
        let product = fam.product();
        for x in cube_points(3) {
            let vanishing = fam.incidence_bits(&x);
            let a = bits_to_rat(&x);
            let mult = product.multiplicity_exact(&a).unwrap();
            prop_assert!(
                mult as usize >= vanishing,
                "mult {} < vanishing count {} at {:?}",
                mult,
                vanishing,
                x
            );
        }
    }
}

/// The two multiplicity routes agree on every monomial basis element with
/// degree at most 3 in at most 3 variables, at every cube point.
#[test]
fn multiplicity_routes_exhaustive_on_monomials() {
    for nvars in 1..=3usize {
        for e in exponents_up_to(nvars, 3) {
            let p = Polynomial::from_terms(nvars, [(e.clone(), rat(1))]).unwrap();
            for x in cube_points(nvars) {
                let a = bits_to_rat(&x);
                let scan = p.multiplicity_at(&a, 4).unwrap();
                let taylor = p.multiplicity_exact(&a).unwrap();
                assert_eq!(scan, Multiplicity::Exact(taylor), "e={e:?} x={x:?}");
            }
        }
    }
}

/// Derivatives of every basis monomial match the closed form used by the
/// degree oracles: falling factorials times the evaluated tail.
#[test]
fn derivative_at_matches_materialized_derivative() {
    for nvars in 1..=2usize {
        for e in exponents_up_to(nvars, 3) {
            let p = Polynomial::from_terms(nvars, [(e.clone(), rat(3))]).unwrap();
            for alpha in exponents_up_to(nvars, 3) {
                for x in cube_points(nvars) {
                    let a = bits_to_rat(&x);
                    let direct = p.derivative_at(&alpha, &a);
                    let materialized = p.derivative(&alpha).unwrap().eval(&a);
                    assert_eq!(direct, materialized);
                }
            }
        }
    }
}

/// The m-fold {X1, X1 - 1} family expands to (X1^2 - X1)^m with degree 2m
/// and vanishing order exactly m at every cube point.
#[test]
fn hcirc_product_structure() {
    for m in 0..=3usize {
        let fam = hypercover::covers::family_hcirc(2, m);
        let p = fam.product();
        assert_eq!(p.degree(), Some(2 * m as u32));
        let x1 = Polynomial::variable(2, 0);
        let expect = x1.pow(2).sub(&x1).pow(m as u32);
        assert_eq!(p, expect);
        if m > 0 {
            for x in cube_points(2) {
                assert_eq!(p.multiplicity_exact(&bits_to_rat(&x)).unwrap(), m as u32);
            }
        }
    }
}

/// High-order derivatives annihilate: any order above the degree gives the
/// zero polynomial.
#[test]
fn derivative_beyond_degree_vanishes() {
    let p = Polynomial::from_terms(
        2,
        [(vec![2, 1], rat(5)), (vec![0, 2], rat(-1))],
    )
    .unwrap();
    for alpha in exponents_of_degree(2, 4) {
        assert!(p.derivative(&alpha).unwrap().is_zero());
    }
}
