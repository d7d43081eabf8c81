//! The registry of number families.
//!
//! Every family is a sequence of polynomials in `x`, `y`, `q` and comes with
//! one or more independent generation routes. Routes are kept separate so
//! that tests can play them against each other; [`Registry::generate`] uses
//! the first one.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::error::FamilyError;
use crate::paths;
use crate::poly::{Point, Substitution, Var};
use crate::ratfun::RationalFunction;
use crate::scalar::Ring;
use crate::series::{expand_continued_fraction, CfLevel, FunctionalEq, PowerSeries, Twist};
use crate::{Poly, RatFun, RatSeries, Rational};

fn x() -> Poly {
    Poly::x()
}
fn y() -> Poly {
    Poly::y()
}
fn q() -> Poly {
    Poly::q()
}
fn c(n: i64) -> Poly {
    Poly::from_int(n)
}

fn subst(pairs: &[(Var, Poly)]) -> Substitution<Rational> {
    pairs.iter().fold(Substitution::identity(), |s, (v, p)| s.with(*v, p.clone()))
}

fn apply_point(s: &Substitution<Rational>, pt: &Point<Rational>) -> Point<Rational> {
    Point::new(s.x.eval(pt), s.y.eval(pt), s.q.eval(pt))
}

/// `F = 1 + x z F + y z F^2`.
pub fn schroder_like_equation() -> FunctionalEq<Rational> {
    FunctionalEq::new(c(1)).linear(x(), 1, Twist::Identity).quadratic(y(), 1, Twist::Identity, Twist::Identity)
}

/// `f = 1 - x z f + (x + y) z f^2`.
pub fn little_schroder_like_equation() -> FunctionalEq<Rational> {
    FunctionalEq::new(c(1)).linear(-x(), 1, Twist::Identity).quadratic(x() + y(), 1, Twist::Identity, Twist::Identity)
}

/// `g = 1 + (x + 2y) z g + y (x + y) z^2 g^2`.
pub fn schroder_like_shift_equation() -> FunctionalEq<Rational> {
    FunctionalEq::new(c(1))
        .linear(x() + y().scale(&Rational::from_integer(2.into())), 1, Twist::Identity)
        .quadratic(y() * (x() + y()), 2, Twist::Identity, Twist::Identity)
}

/// `F(z) = 1 + x z F(z) + y z F(z) F(qz)`.
pub fn q_schroder_like_equation() -> FunctionalEq<Rational> {
    FunctionalEq::new(c(1)).linear(x(), 1, Twist::Identity).quadratic(y(), 1, Twist::Identity, Twist::Dilate)
}

/// `f(z) = 1 - x z f(qz) + (x + y) z f(z) f(qz)`.
pub fn q_little_schroder_like_equation() -> FunctionalEq<Rational> {
    FunctionalEq::new(c(1)).linear(-x(), 1, Twist::Dilate).quadratic(x() + y(), 1, Twist::Identity, Twist::Dilate)
}

/// `y -> q y`.
pub fn y_to_qy() -> Substitution<Rational> {
    subst(&[(Var::Y, q() * y())])
}

/// `g(z,y) = 1 + (x + (1+q) y) z g(z,y) + q^2 y (x + q y) z^2 g(z,y) g(qz,qy)`.
pub fn q_shift_equation() -> FunctionalEq<Rational> {
    FunctionalEq::new(c(1)).linear(x() + (c(1) + q()) * y(), 1, Twist::Identity).quadratic(
        q().pow(2) * y() * (x() + q() * y()),
        2,
        Twist::Identity,
        Twist::DilateSubst(y_to_qy()),
    )
}

/// `g = 1 + (x+y) z g(z) + q y z g(qz) + q y (x+y) z^2 g(z) g(qz)`, the
/// form obtained by substituting `F = 1 + (x+y) z g` into the q-equation.
pub fn q_shift_substituted_equation() -> FunctionalEq<Rational> {
    FunctionalEq::new(c(1))
        .linear(x() + y(), 1, Twist::Identity)
        .linear(q() * y(), 1, Twist::Dilate)
        .quadratic(q() * y() * (x() + y()), 2, Twist::Identity, Twist::Dilate)
}

/// `f(z) = 1 + x z f(z) - y z f(qz) + y z f(z) f(qz)`.
pub fn b_family_equation() -> FunctionalEq<Rational> {
    FunctionalEq::new(c(1))
        .linear(x(), 1, Twist::Identity)
        .linear(-y(), 1, Twist::Dilate)
        .quadratic(y(), 1, Twist::Identity, Twist::Dilate)
}

/// `g(z) = 1 + (x + y) z g(z) + q x y z^2 g(z) g(qz)`.
pub fn q_classical_equation() -> FunctionalEq<Rational> {
    FunctionalEq::new(c(1))
        .linear(x() + y(), 1, Twist::Identity)
        .quadratic(q() * x() * y(), 2, Twist::Identity, Twist::Dilate)
}

/// `G = 1 + e1 z G + e2 z^2 G^2`.
pub fn pair_b_equation(e1: Poly, e2: Poly) -> FunctionalEq<Rational> {
    FunctionalEq::new(c(1)).linear(e1, 1, Twist::Identity).quadratic(e2, 2, Twist::Identity, Twist::Identity)
}

/// `F = 1 + (x - y) z F + y z F^2`, paired with [`pair_b_equation`].
pub fn pair_a_equation() -> FunctionalEq<Rational> {
    FunctionalEq::new(c(1)).linear(x() - y(), 1, Twist::Identity).quadratic(y(), 1, Twist::Identity, Twist::Identity)
}

/// The three-term recurrence
/// `(n+1) A(n) = (2n-1)(x+2y) A(n-1) - (n-2) x^2 A(n-2)` for the
/// Schröder-like numbers, with the division by `n + 1` carried out over the
/// rationals. Fails if a term does not have integer coefficients, which
/// would falsify the recurrence.
pub fn schroder_like_recurrence(order: usize) -> Result<Vec<Poly>, FamilyError> {
    let mut a = vec![c(1), x() + y()];
    let lin = x() + y().scale(&Rational::from_integer(2.into()));
    let x2 = x().pow(2);
    for n in 2..=order {
        let k = n as i64;
        let num = &(&lin * &a[n - 1]).scale(&Rational::from_integer((2 * k - 1).into()))
            - &(&x2 * &a[n - 2]).scale(&Rational::from_integer((k - 2).into()));
        let term = num.scale(&Rational::new(1.into(), (k + 1).into()));
        if term.terms().iter().any(|(_, c)| !c.is_integer()) {
            return Err(FamilyError::NotExact {
                family: "schroder-like".into(),
                n,
                detail: format!("recurrence produced {term}"),
            });
        }
        a.push(term);
    }
    a.truncate(order + 1);
    Ok(a)
}

/// `b(n) = x b(n-1) + y Σ_{k=0}^{n-2} q^k b(k) b(n-1-k)`, `b(0) = 1`.
pub fn b_recurrence<R: Ring>(x: &R, y: &R, q: &R, order: usize) -> Vec<R> {
    let mut q_pow = vec![R::one()];
    for k in 1..=order {
        q_pow.push(q_pow[k - 1].times(q));
    }
    let mut b = vec![R::one()];
    for n in 1..=order {
        let mut sum = R::zero();
        for k in 0..n.saturating_sub(1) {
            sum = sum.plus(&q_pow[k].times(&b[k]).times(&b[n - 1 - k]));
        }
        b.push(x.times(&b[n - 1]).plus(&y.times(&sum)));
    }
    b
}

/// The S-fraction numerators `x, y, q x, q y, q^2 x, ...` of the b-family.
pub fn b_family_s_numerator(k: usize) -> Poly {
    let base = if k.is_multiple_of(2) { x() } else { y() };
    q().pow((k / 2) as u32) * base
}

/// The S-fraction numerators `(x+y), q y, q (x + q y), q^3 y, ...` of the
/// q-Schröder-like numbers: `c(2n) = q^n (x + q^n y)`, `c(2n+1) = q^(2n+1) y`.
pub fn q_schroder_s_numerator(k: usize) -> Poly {
    let n = (k / 2) as u32;
    if k.is_multiple_of(2) {
        q().pow(n) * (x() + q().pow(n) * y())
    } else {
        q().pow(2 * n + 1) * y()
    }
}

/// `h_k = q^C(k,2) (x+y)(x+qy)...(x+q^(k-1)y) / ((q-1)(q^2-1)...(q^k-1))`.
pub fn h_coefficient(k: usize) -> RatFun {
    let k32 = k as u32;
    let num = (0..k32).map(|j| x() + q().pow(j) * y()).product::<Poly>()
        * q().pow(crate::combinat::binom_u32(k32, 2));
    let den = (1..=k32).map(|j| q().pow(j) - c(1)).product::<Poly>();
    RationalFunction::new(num, den)
}

/// `h(z, y)` through `order`.
pub fn h_series(order: usize) -> RatSeries {
    PowerSeries::new((0..=order).map(h_coefficient).collect())
}

/// How a route produces its terms.
#[derive(Clone, Debug)]
pub enum Generator {
    /// Unique solution of a functional equation.
    Equation(FunctionalEq<Rational>),
    /// `Σ_k C(n+k, 2k) C_k x^(n-k) y^k`.
    BinomialCatalanSum,
    /// The three-term recurrence of [`schroder_like_recurrence`].
    HolonomicRecurrence,
    /// The convolution recurrence of [`b_recurrence`].
    BRecurrence,
    /// Another family composed with a parameter substitution.
    Substitute { family: &'static str, subst: Substitution<Rational> },
    /// `factor * F(n + shift) / divisor` with an exact division; when
    /// `keep_first` is set the zeroth term is 1.
    Quotient { family: &'static str, factor: Poly, shift: usize, divisor: Poly, keep_first: bool },
    /// S-fraction with the given numerators.
    SFraction(fn(usize) -> Poly),
    /// J-fraction with `(s(k), t(k))` from the given closure.
    JFraction(fn(usize) -> (Poly, Poly)),
    /// `a(2n) = F(n)`, `a(2n+1) = 0`.
    Aerate { family: &'static str },
}

#[derive(Clone, Debug)]
pub struct Route {
    pub label: &'static str,
    pub generator: Generator,
}

/// A named family with its generation routes.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub name: &'static str,
    pub about: &'static str,
    /// Defining relations, in words, for help text.
    pub equations: &'static str,
    /// What index `n` counts.
    pub offset_meaning: &'static str,
    /// Variables the family actually depends on.
    pub free_vars: &'static [Var],
    pub routes: Vec<Route>,
}

impl FamilySpec {
    pub fn is_q_family(&self) -> bool {
        self.free_vars.contains(&Var::Q)
    }
}

type Memo = RwLock<HashMap<(String, usize), Arc<Vec<Poly>>>>;

/// All families, keyed by name, with a per-family memo of formal terms.
pub struct Registry {
    families: Vec<FamilySpec>,
    memo: Memo,
}

impl Default for Registry {
    fn default() -> Self {
        Self::standard()
    }
}

const XY: &[Var] = &[Var::X, Var::Y];
const XYQ: &[Var] = &[Var::X, Var::Y, Var::Q];
const Q_ONLY: &[Var] = &[Var::Q];
const NONE: &[Var] = &[];

impl Registry {
    /// The registry of every family the crate knows about.
    pub fn standard() -> Self {
        let two = || c(2);
        let three = || c(3);
        let at11 = subst(&[(Var::X, c(1)), (Var::Y, c(1))]);
        let families = vec![
            FamilySpec {
                name: "schroder-large",
                about: "large Schröder numbers r_n = 1, 2, 6, 22, 90, ...",
                equations: "F = 1 + zF + zF^2",
                offset_meaning: "r_0 = 1",
                free_vars: NONE,
                routes: vec![
                    Route {
                        label: "equation",
                        generator: Generator::Equation(
                            FunctionalEq::new(c(1))
                                .linear(c(1), 1, Twist::Identity)
                                .quadratic(c(1), 1, Twist::Identity, Twist::Identity),
                        ),
                    },
                    Route {
                        label: "schroder-like at x=y=1",
                        generator: Generator::Substitute { family: "schroder-like", subst: at11.clone() },
                    },
                ],
            },
            FamilySpec {
                name: "little-schroder",
                about: "little Schröder numbers s_n = 1, 1, 3, 11, 45, 197, ...",
                equations: "f = 1 - zf + 2zf^2; s_n = r_n / 2 for n > 0",
                offset_meaning: "s_0 = 1",
                free_vars: NONE,
                routes: vec![
                    Route {
                        label: "equation",
                        generator: Generator::Equation(
                            FunctionalEq::new(c(1))
                                .linear(c(-1), 1, Twist::Identity)
                                .quadratic(two(), 1, Twist::Identity, Twist::Identity),
                        ),
                    },
                    Route {
                        label: "half of schroder-large",
                        generator: Generator::Quotient {
                            family: "schroder-large",
                            factor: c(1),
                            shift: 0,
                            divisor: two(),
                            keep_first: true,
                        },
                    },
                    Route {
                        label: "little-schroder-like at x=y=1",
                        generator: Generator::Substitute { family: "little-schroder-like", subst: at11.clone() },
                    },
                ],
            },
            FamilySpec {
                name: "little-schroder-shift",
                about: "shifted little Schröder numbers s_{n+1} = 1, 3, 11, 45, 197, ...",
                equations: "g = 1 + 3zg + 2z^2g^2",
                offset_meaning: "term n is s_{n+1}",
                free_vars: NONE,
                routes: vec![
                    Route {
                        label: "equation",
                        generator: Generator::Equation(
                            FunctionalEq::new(c(1))
                                .linear(three(), 1, Twist::Identity)
                                .quadratic(two(), 2, Twist::Identity, Twist::Identity),
                        ),
                    },
                    Route {
                        label: "schroder-like-shift at x=y=1",
                        generator: Generator::Substitute { family: "schroder-like-shift", subst: at11.clone() },
                    },
                ],
            },
            FamilySpec {
                name: "catalan",
                about: "Catalan numbers C_n",
                equations: "F = 1 + zF^2",
                offset_meaning: "C_0 = 1",
                free_vars: NONE,
                routes: vec![
                    Route {
                        label: "equation",
                        generator: Generator::Equation(
                            FunctionalEq::new(c(1)).quadratic(c(1), 1, Twist::Identity, Twist::Identity),
                        ),
                    },
                    Route {
                        label: "schroder-like at x=0, y=1",
                        generator: Generator::Substitute {
                            family: "schroder-like",
                            subst: subst(&[(Var::X, c(0)), (Var::Y, c(1))]),
                        },
                    },
                ],
            },
            FamilySpec {
                name: "schroder-like",
                about: "Schröder-like polynomials A(n,x,y)",
                equations: "F = 1 + xzF + yzF^2",
                offset_meaning: "A(0) = 1",
                free_vars: XY,
                routes: vec![
                    Route { label: "equation", generator: Generator::Equation(schroder_like_equation()) },
                    Route { label: "binomial-Catalan sum", generator: Generator::BinomialCatalanSum },
                    Route { label: "three-term recurrence", generator: Generator::HolonomicRecurrence },
                ],
            },
            FamilySpec {
                name: "little-schroder-like",
                about: "little Schröder-like polynomials a(n,x,y)",
                equations: "f = 1 - xzf + (x+y)zf^2; a(n,x,y) = A(n,-x,x+y)",
                offset_meaning: "a(0) = 1",
                free_vars: XY,
                routes: vec![
                    Route { label: "equation", generator: Generator::Equation(little_schroder_like_equation()) },
                    Route {
                        label: "A(n,-x,x+y)",
                        generator: Generator::Substitute {
                            family: "schroder-like",
                            subst: subst(&[(Var::X, -x()), (Var::Y, x() + y())]),
                        },
                    },
                    Route {
                        label: "y A(n) / (x+y)",
                        generator: Generator::Quotient {
                            family: "schroder-like",
                            factor: y(),
                            shift: 0,
                            divisor: x() + y(),
                            keep_first: true,
                        },
                    },
                ],
            },
            FamilySpec {
                name: "schroder-like-shift",
                about: "a_1(n) = A(n+1,x,y)/(x+y)",
                equations: "g = 1 + (x+2y)zg + y(x+y)z^2g^2",
                offset_meaning: "term n is A(n+1)/(x+y)",
                free_vars: XY,
                routes: vec![
                    Route { label: "equation", generator: Generator::Equation(schroder_like_shift_equation()) },
                    Route {
                        label: "A(n+1) / (x+y)",
                        generator: Generator::Quotient {
                            family: "schroder-like",
                            factor: c(1),
                            shift: 1,
                            divisor: x() + y(),
                            keep_first: false,
                        },
                    },
                    Route {
                        label: "a(n+1) / y",
                        generator: Generator::Quotient {
                            family: "little-schroder-like",
                            factor: c(1),
                            shift: 1,
                            divisor: y(),
                            keep_first: false,
                        },
                    },
                ],
            },
            FamilySpec {
                name: "q-schroder-like",
                about: "q-Schröder-like polynomials A_q(n,x,y)",
                equations: "F(z) = 1 + xzF(z) + yzF(z)F(qz)",
                offset_meaning: "A_q(0) = 1",
                free_vars: XYQ,
                routes: vec![
                    Route { label: "equation", generator: Generator::Equation(q_schroder_like_equation()) },
                    Route { label: "S-fraction", generator: Generator::SFraction(q_schroder_s_numerator) },
                ],
            },
            FamilySpec {
                name: "q-schroder",
                about: "q-Schröder numbers (1, 1+q, (1+q)(1+q+q^2), ...)",
                equations: "F(z) = 1 + zF(z) + qzF(z)F(qz)",
                offset_meaning: "term 0 is 1",
                free_vars: Q_ONLY,
                routes: vec![
                    Route {
                        label: "equation",
                        generator: Generator::Equation(
                            FunctionalEq::new(c(1))
                                .linear(c(1), 1, Twist::Identity)
                                .quadratic(q(), 1, Twist::Identity, Twist::Dilate),
                        ),
                    },
                    Route {
                        label: "q-schroder-like at x=1, y=q",
                        generator: Generator::Substitute {
                            family: "q-schroder-like",
                            subst: subst(&[(Var::X, c(1)), (Var::Y, q())]),
                        },
                    },
                ],
            },
            FamilySpec {
                name: "q-catalan",
                about: "Carlitz q-Catalan numbers C_n(q)",
                equations: "F(z) = 1 + zF(z)F(qz)",
                offset_meaning: "C_0(q) = 1",
                free_vars: Q_ONLY,
                routes: vec![
                    Route {
                        label: "equation",
                        generator: Generator::Equation(
                            FunctionalEq::new(c(1)).quadratic(c(1), 1, Twist::Identity, Twist::Dilate),
                        ),
                    },
                    Route {
                        label: "q-schroder-like at x=0, y=1",
                        generator: Generator::Substitute {
                            family: "q-schroder-like",
                            subst: subst(&[(Var::X, c(0)), (Var::Y, c(1))]),
                        },
                    },
                ],
            },
            FamilySpec {
                name: "q-little-schroder-like",
                about: "q-analogue a_q(n,x,y) of the little Schröder-like polynomials",
                equations: "f(z) = 1 - xzf(qz) + (x+y)zf(z)f(qz); f = (x + yF)/(x+y)",
                offset_meaning: "a_q(0) = 1",
                free_vars: XYQ,
                routes: vec![
                    Route { label: "equation", generator: Generator::Equation(q_little_schroder_like_equation()) },
                    Route {
                        label: "y A_q(n) / (x+y)",
                        generator: Generator::Quotient {
                            family: "q-schroder-like",
                            factor: y(),
                            shift: 0,
                            divisor: x() + y(),
                            keep_first: true,
                        },
                    },
                ],
            },
            FamilySpec {
                name: "q-schroder-like-shift",
                about: "g(n) = A_q(n+1,x,y)/(x+y)",
                equations: "g(z,y) = 1 + (x+(1+q)y)zg(z,y) + q^2y(x+qy)z^2g(z,y)g(qz,qy)",
                offset_meaning: "term n is A_q(n+1)/(x+y)",
                free_vars: XYQ,
                routes: vec![
                    Route { label: "equation", generator: Generator::Equation(q_shift_equation()) },
                    Route {
                        label: "A_q(n+1) / (x+y)",
                        generator: Generator::Quotient {
                            family: "q-schroder-like",
                            factor: c(1),
                            shift: 1,
                            divisor: x() + y(),
                            keep_first: false,
                        },
                    },
                    Route {
                        label: "substituted equation",
                        generator: Generator::Equation(q_shift_substituted_equation()),
                    },
                ],
            },
            FamilySpec {
                name: "b-family",
                about: "b(n,x,y,q), a variant of the Pólya-Gessel q-Catalan numbers",
                equations: "f(z) = 1 + xzf(z) - yzf(qz) + yzf(z)f(qz)",
                offset_meaning: "b(0) = 1",
                free_vars: XYQ,
                routes: vec![
                    Route { label: "recurrence", generator: Generator::BRecurrence },
                    Route { label: "equation", generator: Generator::Equation(b_family_equation()) },
                    Route { label: "S-fraction", generator: Generator::SFraction(b_family_s_numerator) },
                ],
            },
            FamilySpec {
                name: "polya-gessel",
                about: "b(n,1,q,q^2), which coincides with C_n(q)",
                equations: "b-family at x=1, y=q, q -> q^2",
                offset_meaning: "term 0 is 1",
                free_vars: Q_ONLY,
                routes: vec![Route {
                    label: "b-family at (1, q, q^2)",
                    generator: Generator::Substitute {
                        family: "b-family",
                        subst: subst(&[(Var::X, c(1)), (Var::Y, q()), (Var::Q, q().pow(2))]),
                    },
                }],
            },
            FamilySpec {
                name: "q-classical",
                about: "g(z,x,y,q) with (x+y) linear and qxy quadratic coefficient",
                equations: "g(z) = 1 + (x+y)zg(z) + qxyz^2g(z)g(qz)",
                offset_meaning: "term 0 is 1",
                free_vars: XYQ,
                routes: vec![
                    Route { label: "equation", generator: Generator::Equation(q_classical_equation()) },
                    Route {
                        label: "J-fraction",
                        generator: Generator::JFraction(|k| {
                            let k = k as u32;
                            (q().pow(k) * (x() + y()), q().pow(2 * k + 1) * x() * y())
                        }),
                    },
                ],
            },
            FamilySpec {
                name: "schroder-pair-a",
                about: "A(n) with F = 1 + (x-y)zF + yzF^2",
                equations: "F = 1 + (x-y)zF + yzF^2",
                offset_meaning: "A(0) = 1",
                free_vars: XY,
                routes: vec![Route { label: "equation", generator: Generator::Equation(pair_a_equation()) }],
            },
            FamilySpec {
                name: "schroder-pair-b",
                about: "B(n) with G = (F-1)/(xz), e1 = x+y, e2 = xy",
                equations: "G = 1 + (x+y)zG + xyz^2G^2; A(n) = xB(n-1)",
                offset_meaning: "B(0) = 1",
                free_vars: XY,
                routes: vec![
                    Route { label: "equation", generator: Generator::Equation(pair_b_equation(x() + y(), x() * y())) },
                    Route {
                        label: "A(n+1) / x",
                        generator: Generator::Quotient {
                            family: "schroder-pair-a",
                            factor: c(1),
                            shift: 1,
                            divisor: x(),
                            keep_first: false,
                        },
                    },
                ],
            },
            FamilySpec {
                name: "motzkin",
                about: "Motzkin numbers M_n (e1 = e2 = 1)",
                equations: "G = 1 + zG + z^2G^2",
                offset_meaning: "M_0 = 1",
                free_vars: NONE,
                routes: vec![
                    Route { label: "equation", generator: Generator::Equation(pair_b_equation(c(1), c(1))) },
                    Route { label: "J-fraction", generator: Generator::JFraction(|_| (c(1), c(1))) },
                ],
            },
            FamilySpec {
                name: "aerated-schroder",
                about: "r_n interleaved with zeros: a(2n) = r_n, a(2n+1) = 0",
                equations: "J-fraction with s = 0, t(2n) = 2, t(2n+1) = 1",
                offset_meaning: "a(0) = 1",
                free_vars: NONE,
                routes: vec![
                    Route { label: "interleave", generator: Generator::Aerate { family: "schroder-large" } },
                    Route {
                        label: "J-fraction",
                        generator: Generator::JFraction(|k| (c(0), if k % 2 == 0 { c(2) } else { c(1) })),
                    },
                ],
            },
        ];
        Self { families, memo: RwLock::new(HashMap::new()) }
    }

    pub fn families(&self) -> &[FamilySpec] {
        &self.families
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.families.iter().map(|f| f.name)
    }

    pub fn get(&self, name: &str) -> Result<&FamilySpec, FamilyError> {
        self.families.iter().find(|f| f.name == name).ok_or_else(|| FamilyError::Unknown(name.to_string()))
    }

    /// Terms `0..=order` of a family, symbolic in its free variables, by
    /// the first route. Results are memoized.
    pub fn generate(&self, name: &str, order: usize) -> Result<Vec<Poly>, FamilyError> {
        {
            let memo = self.memo.read().expect("memo lock poisoned");
            if let Some(hit) = memo.iter().find(|((n, o), _)| n == name && *o >= order).map(|(_, v)| v.clone()) {
                return Ok(hit[..=order].to_vec());
            }
        }
        let terms = self.generate_route(name, 0, order)?;
        self.memo.write().expect("memo lock poisoned").insert((name.to_string(), order), Arc::new(terms.clone()));
        Ok(terms)
    }

    /// Terms by a specific route, bypassing the memo.
    pub fn generate_route(&self, name: &str, route: usize, order: usize) -> Result<Vec<Poly>, FamilyError> {
        let fam = self.get(name)?;
        let r = fam
            .routes
            .get(route)
            .ok_or_else(|| FamilyError::UnknownRoute { family: name.to_string(), route })?;
        self.run_formal(fam.name, &r.generator, order)
    }

    /// Terms at a point, by the first route.
    pub fn generate_at(&self, name: &str, pt: &Point<Rational>, order: usize) -> Result<Vec<Rational>, FamilyError> {
        self.generate_route_at(name, 0, pt, order)
    }

    pub fn generate_route_at(
        &self,
        name: &str,
        route: usize,
        pt: &Point<Rational>,
        order: usize,
    ) -> Result<Vec<Rational>, FamilyError> {
        let fam = self.get(name)?;
        let r = fam
            .routes
            .get(route)
            .ok_or_else(|| FamilyError::UnknownRoute { family: name.to_string(), route })?;
        self.run_at(fam.name, &r.generator, pt, order)
    }

    fn run_formal(&self, family: &str, g: &Generator, order: usize) -> Result<Vec<Poly>, FamilyError> {
        Ok(match g {
            Generator::Equation(eq) => eq.solve(order).into_coeffs(),
            Generator::BinomialCatalanSum => (0..=order).map(paths::binomial_catalan_sum).collect(),
            Generator::HolonomicRecurrence => schroder_like_recurrence(order)?,
            Generator::BRecurrence => b_recurrence(&x(), &y(), &q(), order),
            Generator::Substitute { family: base, subst } => {
                self.generate(base, order)?.iter().map(|p| p.subst(subst)).collect()
            }
            Generator::Quotient { family: base, factor, shift, divisor, keep_first } => {
                let terms = self.generate(base, order + shift)?;
                (0..=order)
                    .map(|n| {
                        if *keep_first && n == 0 {
                            return Ok(c(1));
                        }
                        (factor * &terms[n + shift]).exact_div(divisor).map_err(|e| FamilyError::NotExact {
                            family: family.to_string(),
                            n,
                            detail: e.to_string(),
                        })
                    })
                    .collect::<Result<_, _>>()?
            }
            Generator::SFraction(num) => {
                let levels: Vec<CfLevel<Poly>> =
                    (0..=order + 1).map(|k| CfLevel { linear: c(0), numerator: num(k), power: 1 }).collect();
                expand_continued_fraction(&levels, order).into_coeffs()
            }
            Generator::JFraction(data) => {
                let levels: Vec<CfLevel<Poly>> = (0..=order / 2 + 1)
                    .map(|k| {
                        let (s, t) = data(k);
                        CfLevel { linear: s, numerator: t, power: 2 }
                    })
                    .collect();
                expand_continued_fraction(&levels, order).into_coeffs()
            }
            Generator::Aerate { family: base } => {
                let terms = self.generate(base, order / 2)?;
                (0..=order).map(|n| if n % 2 == 0 { terms[n / 2].clone() } else { c(0) }).collect()
            }
        })
    }

    fn run_at(
        &self,
        family: &str,
        g: &Generator,
        pt: &Point<Rational>,
        order: usize,
    ) -> Result<Vec<Rational>, FamilyError> {
        let eval_all = |v: Vec<Poly>| v.iter().map(|p| p.eval(pt)).collect::<Vec<_>>();
        Ok(match g {
            Generator::Equation(eq) => eq.solve_at(pt, order),
            Generator::BRecurrence => b_recurrence(&pt.x, &pt.y, &pt.q, order),
            Generator::Substitute { family: base, subst } => {
                self.generate_at(base, &apply_point(subst, pt), order)?
            }
            Generator::Quotient { family: base, factor, shift, divisor, keep_first } => {
                let terms = self.generate_at(base, pt, order + shift)?;
                let d = divisor.eval(pt);
                if d.is_zero() {
                    return Err(FamilyError::DegeneratePoint {
                        family: family.to_string(),
                        point: pt.to_string(),
                        detail: format!("{divisor} vanishes"),
                    });
                }
                let f = factor.eval(pt);
                (0..=order)
                    .map(|n| if *keep_first && n == 0 { Rational::one() } else { &f * &terms[n + shift] / &d })
                    .collect()
            }
            Generator::SFraction(num) => {
                let levels: Vec<CfLevel<Poly>> = (0..=order + 1)
                    .map(|k| CfLevel { linear: c(0), numerator: Poly::constant(num(k).eval(pt)), power: 1 })
                    .collect();
                eval_all(expand_continued_fraction(&levels, order).into_coeffs())
            }
            Generator::JFraction(data) => {
                let levels: Vec<CfLevel<Poly>> = (0..=order / 2 + 1)
                    .map(|k| {
                        let (s, t) = data(k);
                        CfLevel { linear: Poly::constant(s.eval(pt)), numerator: Poly::constant(t.eval(pt)), power: 2 }
                    })
                    .collect();
                eval_all(expand_continued_fraction(&levels, order).into_coeffs())
            }
            Generator::Aerate { family: base } => {
                let terms = self.generate_at(base, pt, order / 2)?;
                (0..=order).map(|n| if n % 2 == 0 { terms[n / 2].clone() } else { Rational::zero() }).collect()
            }
            Generator::BinomialCatalanSum | Generator::HolonomicRecurrence => {
                eval_all(self.run_formal(family, g, order)?)
            }
        })
    }
}

/// `B(n)` for arbitrary `e1 = x + y`, `e2 = x y`.
pub fn pair_b(order: usize, e1: &Poly, e2: &Poly) -> Vec<Poly> {
    pair_b_equation(e1.clone(), e2.clone()).solve(order).into_coeffs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(v: &[Poly]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn registry_names_are_unique() {
        let reg = Registry::standard();
        let mut names: Vec<_> = reg.names().collect();
        let before = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), before);
        assert!(matches!(reg.get("nope"), Err(FamilyError::Unknown(_))));
    }

    #[test]
    fn schroder_like_examples() {
        let reg = Registry::standard();
        let a = reg.generate("schroder-like", 4).unwrap();
        assert_eq!(a[2], p("x^2 + 3*x*y + 2*y^2"));
        let at11: Vec<String> = a.iter().map(|t| t.eval(&Point::new(Rational::one(), Rational::one(), Rational::one())).to_string()).collect();
        assert_eq!(at11, ["1", "2", "6", "22", "90"]);
    }

    #[test]
    fn little_schroder_like_first_terms() {
        let reg = Registry::standard();
        let a = reg.generate("little-schroder-like", 2).unwrap();
        assert_eq!(a[1], Poly::y());
        assert_eq!(render(&reg.generate("little-schroder", 5).unwrap()), ["1", "1", "3", "11", "45", "197"]);
    }

    #[test]
    fn q_schroder_first_terms() {
        let reg = Registry::standard();
        let s = reg.generate("q-schroder", 3).unwrap();
        assert_eq!(s[1], p("1 + q"));
        assert_eq!(s[2], p("1 + q") * p("1 + q + q^2"));
        assert_eq!(s[3], p("1 + q") * p("1 + 2*q + 3*q^2 + 3*q^3 + q^4 + q^5"));
    }

    #[test]
    fn q_catalan_second_term() {
        let reg = Registry::standard();
        assert_eq!(reg.generate("q-catalan", 2).unwrap()[2], p("1 + q"));
    }

    #[test]
    fn h_coefficient_examples() {
        assert!(h_coefficient(0).equals(&RatFun::from_poly(c(1))));
        assert!(h_coefficient(1).equals(&RatFun::new(p("x + y"), p("q - 1"))));
        let h2 = RatFun::new(p("q") * p("x + y") * p("x + q*y"), p("q - 1") * p("q^2 - 1"));
        assert!(h_coefficient(2).equals(&h2));
    }

    #[test]
    fn b_family_low_terms() {
        let b = b_recurrence(&x(), &y(), &q(), 2);
        assert_eq!(b[1], x());
        assert_eq!(b[2], p("x^2 + x*y"));
    }

    #[test]
    fn shift_family_first_order_term() {
        let reg = Registry::standard();
        assert_eq!(reg.generate("q-schroder-like-shift", 1).unwrap()[1], p("x + y + q*y"));
    }

    #[test]
    fn memo_returns_prefixes() {
        let reg = Registry::standard();
        let long = reg.generate("schroder-like", 6).unwrap();
        let short = reg.generate("schroder-like", 3).unwrap();
        assert_eq!(&long[..4], &short[..]);
    }

    #[test]
    fn quotient_at_degenerate_point_is_reported() {
        let reg = Registry::standard();
        let pt = Point::new(Rational::from_integer(1.into()), Rational::from_integer((-1).into()), Rational::one());
        let err = reg.generate_route_at("little-schroder-like", 2, &pt, 3).unwrap_err();
        assert!(matches!(err, FamilyError::DegeneratePoint { .. }));
    }

    #[test]
    fn all_routes_agree_at_low_order() {
        let reg = Registry::standard();
        let pt = Point::new(Rational::new(3.into(), 2.into()), Rational::new((-2).into(), 5.into()), Rational::new(7.into(), 3.into()));
        for fam in reg.families() {
            let base = reg.generate_route(fam.name, 0, 6).unwrap();
            let base_at: Vec<Rational> = base.iter().map(|p| p.eval(&pt)).collect();
            for r in 0..fam.routes.len() {
                let other = reg.generate_route(fam.name, r, 6).unwrap();
                assert_eq!(base, other, "{} route {}", fam.name, fam.routes[r].label);
                let at = reg.generate_route_at(fam.name, r, &pt, 6).unwrap();
                assert_eq!(base_at, at, "{} route {} at point", fam.name, fam.routes[r].label);
            }
        }
    }
}
