//! Algebraic invariants, checked on random inputs.

use num_traits::{One, Zero};
use proptest::prelude::*;

use qschroder::hankel::bareiss_det;
use qschroder::orthogonal::{moments_from_jacobi, stieltjes_extract, triangle_from_jacobi, JacobiData};
use qschroder::paths::motzkin_weight_sum;
use qschroder::series::j_fraction;
use qschroder::{Monomial, Point, Poly, RatFun, Rational, Substitution, Var};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), rational()), 0..5)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|((a, b, c), r)| (Monomial::new(a, b, c), r))))
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn point() -> impl Strategy<Value = Point<Rational>> {
    (rational(), rational(), rational()).prop_map(|(x, y, q)| Point::new(x, y, q))
}

/// Determinant by permutation expansion.
fn leibniz(m: &[Vec<Rational>]) -> Rational {
    fn go(m: &[Vec<Rational>], row: usize, used: &mut Vec<bool>, sign: bool, acc: Rational, out: &mut Rational) {
        if row == m.len() {
            *out += if sign { -acc } else { acc };
            return;
        }
        for col in 0..m.len() {
            if used[col] {
                continue;
            }
            let inversions = used[col + 1..].iter().filter(|&&u| u).count();
            used[col] = true;
            go(m, row + 1, used, sign ^ (inversions % 2 == 1), &acc * &m[row][col], out);
            used[col] = false;
        }
    }
    let mut out = Rational::zero();
    go(m, 0, &mut vec![false; m.len()], false, Rational::one(), &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), pt in point()) {
        prop_assert_eq!((&a * &b).eval(&pt), a.eval(&pt) * b.eval(&pt));
        prop_assert_eq!((&a + &b).eval(&pt), a.eval(&pt) + b.eval(&pt));
    }

    #[test]
    fn substitution_commutes_with_evaluation(a in poly(), sx in poly(), sq in poly(), pt in point()) {
        let sub = Substitution::identity().with(Var::X, sx.clone()).with(Var::Q, sq.clone());
        let image = Point::new(sx.eval(&pt), pt.y.clone(), sq.eval(&pt));
        prop_assert_eq!(a.subst(&sub).eval(&pt), a.eval(&image));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn rational_function_equality_matches_evaluation(
        a in poly(), b in nonzero_poly(), c in nonzero_poly(), pt in point()
    ) {
        let f = RatFun::new(&a * &c, &b * &c);
        let g = RatFun::new(a.clone(), b.clone());
        prop_assert!(f == g);
        let (bv, cv) = (b.eval(&pt), c.eval(&pt));
        prop_assume!(!bv.is_zero() && !cv.is_zero());
        prop_assert_eq!(f.numerator().eval(&pt) / f.denominator().eval(&pt), a.eval(&pt) / bv);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn bareiss_agrees_with_permutation_expansion(
        m in (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(rational(), n), n))
    ) {
        prop_assert_eq!(bareiss_det(m.clone()).unwrap(), leibniz(&m));
    }

    #[test]
    fn stieltjes_extraction_inverts_moment_generation(
        s in prop::collection::vec(rational(), 5),
        t in prop::collection::vec(nonzero_rational(), 5),
    ) {
        let j = JacobiData::new(s, t).map(|r| Poly::constant(r.clone()));
        let moments = moments_from_jacobi(&j, 10).unwrap();
        let back = stieltjes_extract(&moments, 4).unwrap();
        prop_assert_eq!(back, j.truncated(5, 4));
    }

    #[test]
    fn j_fraction_triangle_and_paths_agree(
        s in prop::collection::vec(rational(), 8),
        t in prop::collection::vec(rational(), 8),
    ) {
        let j = JacobiData::new(s, t).map(|r| Poly::constant(r.clone()));
        let moments = moments_from_jacobi(&j, 8).unwrap();
        let series = j_fraction(&j.s, &j.t, 7).unwrap();
        prop_assert_eq!(series.coeffs(), moments.as_slice());
        let tri = triangle_from_jacobi(&j, 7).unwrap();
        for n in 0..=7 {
            for k in 0..=n.min(3) {
                prop_assert_eq!(motzkin_weight_sum(&j.s, &j.t, n, k).unwrap(), tri.entry(n, k));
            }
        }
    }
}
