//! Jacobi data of moment sequences.
//!
//! A moment sequence `a(n)` with `a(0) = 1` determines sequences `s(n)`,
//! `t(n)` through the triangle recurrence
//!
//! ```text
//! a(n,k) = a(n-1,k-1) + s(k) a(n-1,k) + t(k) a(n-1,k+1),   a(n,0) = a(n)
//! ```
//!
//! and conversely. This module builds triangles from Jacobi data, extracts
//! Jacobi data from moments, computes the monic orthogonal polynomials of
//! the Favard recurrence and applies the aeration maps.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinat::binom_u32;
use crate::error::{JacobiError, NotDivisible, SeriesError};
use crate::poly::{MPoly, Point, Substitution};
use crate::ratfun::RationalFunction;
use crate::scalar::{Ring, Scalar};
use crate::{Poly, RatFun, Rational};

/// Rings with a partial exact division.
pub trait ExactDomain: Ring + std::fmt::Display {
    /// `self / d` if it exists in the ring.
    fn div_exact(&self, d: &Self) -> Option<Self>;

    /// `self / d`, or a report of why it does not exist.
    fn div_or_witness(&self, d: &Self) -> Result<Self, NotDivisible> {
        self.div_exact(d).ok_or_else(|| NotDivisible::new(self.to_string(), d.to_string(), self.to_string(), 1))
    }
}

impl<T: Scalar> ExactDomain for MPoly<T> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        self.exact_div(d).ok()
    }

    fn div_or_witness(&self, d: &Self) -> Result<Self, NotDivisible> {
        if d.is_zero() {
            return Err(NotDivisible::new(self.to_string(), d.to_string(), "division by zero".into(), self.len()));
        }
        self.exact_div(d)
    }
}

impl ExactDomain for Rational {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
}

impl ExactDomain for RatFun {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        d.inverse().map(|inv| (self * &inv).reduce())
    }
}

/// The sequences `s(0..)` and `t(0..)` of a three-term recurrence.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiData<C = Poly> {
    pub s: Vec<C>,
    pub t: Vec<C>,
}

impl<C: Clone> JacobiData<C> {
    pub fn new(s: Vec<C>, t: Vec<C>) -> Self {
        Self { s, t }
    }

    /// `s(n)`, `t(n)` for `n < len` from closures.
    pub fn from_fns(len: usize, s: impl Fn(usize) -> C, t: impl Fn(usize) -> C) -> Self {
        Self { s: (0..len).map(&s).collect(), t: (0..len).map(&t).collect() }
    }

    /// Data of the tail fraction `f_j`: `s_j(n) = s(n+j)`, `t_j(n) = t(n+j)`.
    pub fn shifted(&self, j: usize) -> Self {
        Self { s: self.s.iter().skip(j).cloned().collect(), t: self.t.iter().skip(j).cloned().collect() }
    }

    pub fn truncated(&self, s_len: usize, t_len: usize) -> Self {
        Self { s: self.s.iter().take(s_len).cloned().collect(), t: self.t.iter().take(t_len).cloned().collect() }
    }

    pub fn map<D>(&self, f: impl Fn(&C) -> D) -> JacobiData<D> {
        JacobiData { s: self.s.iter().map(&f).collect(), t: self.t.iter().map(&f).collect() }
    }
}

impl JacobiData<Poly> {
    pub fn subst(&self, sub: &Substitution<Rational>) -> Self {
        self.map(|p| p.subst(sub))
    }

    pub fn eval(&self, pt: &Point<Rational>) -> JacobiData<Rational> {
        self.map(|p| p.eval(pt))
    }
}

/// Lower-triangular array `a(n,k)`, `0 <= k <= n <= rows`.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangle<C = Poly> {
    pub rows: Vec<Vec<C>>,
}

impl<C: Ring> Triangle<C> {
    pub fn entry(&self, n: usize, k: usize) -> C {
        self.rows.get(n).and_then(|r| r.get(k)).cloned().unwrap_or_else(C::zero)
    }

    pub fn column(&self, k: usize) -> Vec<C> {
        self.rows.iter().filter_map(|r| r.get(k).cloned()).collect()
    }
}

/// Rows `0..=rows` of the triangle of `j`. Needs `s(0..rows)` and
/// `t(0..rows-1)`.
pub fn triangle_from_jacobi<C: Ring>(j: &JacobiData<C>, rows: usize) -> Result<Triangle<C>, SeriesError> {
    check_len(j, rows, rows.saturating_sub(1))?;
    let mut out: Vec<Vec<C>> = vec![vec![C::one()]];
    for n in 1..=rows {
        let prev = &out[n - 1];
        let get = |k: usize| prev.get(k).cloned().unwrap_or_else(C::zero);
        let row = (0..=n)
            .map(|k| {
                let mut v = if k > 0 { get(k - 1) } else { C::zero() };
                if k < n {
                    v = v.plus(&j.s[k].times(&get(k)));
                }
                if k + 1 < n {
                    v = v.plus(&j.t[k].times(&get(k + 1)));
                }
                v
            })
            .collect();
        out.push(row);
    }
    Ok(Triangle { rows: out })
}

fn check_len<C>(j: &JacobiData<C>, s_needed: usize, t_needed: usize) -> Result<(), SeriesError> {
    if j.s.len() < s_needed {
        return Err(SeriesError::JacobiTooShort { needed: s_needed, available: j.s.len() });
    }
    if j.t.len() < t_needed {
        return Err(SeriesError::JacobiTooShort { needed: t_needed, available: j.t.len() });
    }
    Ok(())
}

/// Moments `a(0..count)`, computing only the part of the triangle that
/// column 0 depends on.
pub fn moments_from_jacobi<C: Ring>(j: &JacobiData<C>, count: usize) -> Result<Vec<C>, SeriesError> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let last = count - 1;
    check_len(j, last.div_ceil(2), last / 2)?;
    let mut row = vec![C::one()];
    let mut moments = vec![C::one()];
    for n in 1..=last {
        // entries with k > last - n never reach column 0
        let keep = (last - n).min(n);
        let get = |k: usize| row.get(k).cloned().unwrap_or_else(C::zero);
        let next: Vec<C> = (0..=keep)
            .map(|k| {
                let mut v = if k > 0 { get(k - 1) } else { C::zero() };
                if k < n {
                    v = v.plus(&j.s[k].times(&get(k)));
                }
                if k + 1 < n {
                    v = v.plus(&j.t[k].times(&get(k + 1)));
                }
                v
            })
            .collect();
        moments.push(next[0].clone());
        row = next;
    }
    Ok(moments)
}

/// Monic orthogonal polynomials `p(0..=n)` of the Favard recurrence
/// `p(n) = (X - s(n-1)) p(n-1) - t(n-2) p(n-2)`, each as a coefficient list
/// in the orthogonality variable `X`, constant term first.
pub fn favard_polys<C: Ring>(j: &JacobiData<C>, n: usize) -> Result<Vec<Vec<C>>, SeriesError> {
    check_len(j, n, n.saturating_sub(1))?;
    let mut ps: Vec<Vec<C>> = vec![vec![C::one()]];
    for m in 1..=n {
        let prev = &ps[m - 1];
        let mut next = vec![C::zero(); m + 1];
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] = next[i + 1].plus(c);
            next[i] = next[i].minus(&c.times(&j.s[m - 1]));
        }
        if m >= 2 {
            for (i, c) in ps[m - 2].iter().enumerate() {
                next[i] = next[i].minus(&c.times(&j.t[m - 2]));
            }
        }
        ps.push(next);
    }
    Ok(ps)
}

/// `r(k) = (-1)^k p(k, 0)` for `k = 0..=n`.
pub fn favard_constants<C: Ring>(j: &JacobiData<C>, n: usize) -> Result<Vec<C>, SeriesError> {
    Ok(favard_polys(j, n)?
        .into_iter()
        .enumerate()
        .map(|(k, p)| if k % 2 == 0 { p[0].clone() } else { p[0].negated() })
        .collect())
}

enum Stall {
    Singular { order: usize, index: usize },
    Division { row: usize, column: usize },
}

fn extract_in<C: ExactDomain>(moments: &[C], depth: usize) -> Result<JacobiData<C>, Stall> {
    let top = moments.len() - 1;
    // cols[k][n - k] = a(n, k)
    let mut cols: Vec<Vec<C>> = vec![moments.to_vec()];
    let mut s = Vec::with_capacity(depth + 1);
    let mut t = Vec::with_capacity(depth + 1);
    let at = |cols: &Vec<Vec<C>>, n: usize, k: isize| -> C {
        if k < 0 {
            return C::zero();
        }
        let k = k as usize;
        if n < k {
            C::zero()
        } else {
            cols[k][n - k].clone()
        }
    };
    for k in 0..=depth {
        let ki = k as isize;
        let sk = at(&cols, k + 1, ki).minus(&at(&cols, k, ki - 1));
        s.push(sk.clone());
        if k + 2 + k > top {
            break;
        }
        let tk = at(&cols, k + 2, ki).minus(&at(&cols, k + 1, ki - 1)).minus(&sk.times(&at(&cols, k + 1, ki)));
        if tk.is_zero() {
            return Err(Stall::Singular { order: k + 2, index: k });
        }
        t.push(tk.clone());
        if k == depth {
            break;
        }
        let mut next = Vec::new();
        for n in (k + 2)..=(top - k) {
            let num = at(&cols, n, ki).minus(&at(&cols, n - 1, ki - 1)).minus(&sk.times(&at(&cols, n - 1, ki)));
            match num.div_exact(&tk) {
                Some(v) => next.push(v),
                None => return Err(Stall::Division { row: n - 1, column: k + 1 }),
            }
        }
        cols.push(next);
    }
    Ok(JacobiData { s, t })
}

fn check_moments<C>(moments: &[C], depth: usize, one_check: impl Fn(&C) -> bool) -> Result<(), JacobiError>
where
    C: Ring + std::fmt::Display,
{
    let needed = 2 * depth + 2;
    if moments.len() < needed {
        return Err(JacobiError::TooFewMoments { needed, available: moments.len(), depth });
    }
    if !one_check(&moments[0]) {
        return Err(JacobiError::BadNormalization(moments[0].to_string()));
    }
    Ok(())
}

/// Jacobi data of a moment sequence: `s(0..=depth)` and `t(0..depth)`,
/// read off from moments `a(0..=2*depth+1)`. One more moment also yields
/// `t(depth)`.
///
/// The triangle is inverted column by column, dividing by `t(k)` at step
/// `k`. If a division leaves the polynomial ring the extraction is redone
/// over rational functions to name the first `s` or `t` that is not a
/// polynomial.
pub fn stieltjes_extract(moments: &[Poly], depth: usize) -> Result<JacobiData, JacobiError> {
    check_moments(moments, depth, |m| m.is_one())?;
    match extract_in(moments, depth) {
        Ok(j) => Ok(j),
        Err(Stall::Singular { order, index }) => Err(JacobiError::SingularHankel { order, index }),
        Err(Stall::Division { row, column }) => {
            let lifted: Vec<RatFun> = moments.iter().cloned().map(RationalFunction::from_poly).collect();
            let j = match extract_in(&lifted, depth) {
                Ok(j) => j,
                Err(Stall::Singular { order, index }) => return Err(JacobiError::SingularHankel { order, index }),
                Err(Stall::Division { .. }) => unreachable!("division by a nonzero rational function"),
            };
            for (which, seq) in [("s", &j.s), ("t", &j.t)] {
                if let Some((index, v)) = seq.iter().enumerate().find(|(_, v)| v.to_poly().is_err()) {
                    return Err(JacobiError::NonPolynomialResult { which, index, value: v.to_string() });
                }
            }
            Err(JacobiError::NonPolynomialResult {
                which: "a",
                index: row,
                value: format!("triangle entry a({row},{column}) is not a polynomial"),
            })
        }
    }
}

/// [`stieltjes_extract`] for moments specialized to numbers.
pub fn stieltjes_extract_at(moments: &[Rational], depth: usize) -> Result<JacobiData<Rational>, JacobiError> {
    check_moments(moments, depth, |m| m.is_one())?;
    extract_in(moments, depth).map_err(|e| match e {
        Stall::Singular { order, index } => JacobiError::SingularHankel { order, index },
        Stall::Division { .. } => unreachable!("division by a nonzero rational"),
    })
}

/// The aeration maps. For an aerated sequence with `s = 0` and the given
/// `t`, returns the Jacobi data of `a(2n, 0)` and of `a(2n+1, 1)`:
///
/// ```text
/// s0(0) = t(0),        s0(n) = t(2n-1) + t(2n),  t0(n) = t(2n) t(2n+1)
/// s1(0) = t(0) + t(1), s1(n) = t(2n) + t(2n+1),  t1(n) = t(2n+1) t(2n+2)
/// ```
pub fn aerate_maps<C: Ring>(t: &[C]) -> (JacobiData<C>, JacobiData<C>) {
    let len = t.len();
    let mut j0 = JacobiData { s: Vec::new(), t: Vec::new() };
    let mut j1 = JacobiData { s: Vec::new(), t: Vec::new() };
    if len == 0 {
        return (j0, j1);
    }
    j0.s.push(t[0].clone());
    j0.s.extend((1..).take_while(|n| 2 * n < len).map(|n| t[2 * n - 1].plus(&t[2 * n])));
    j0.t.extend((0..).take_while(|n| 2 * n + 1 < len).map(|n| t[2 * n].times(&t[2 * n + 1])));
    j1.s.extend((0..).take_while(|n| 2 * n + 1 < len).map(|n| t[2 * n].plus(&t[2 * n + 1])));
    j1.t.extend((0..).take_while(|n| 2 * n + 2 < len).map(|n| t[2 * n + 1].times(&t[2 * n + 2])));
    (j0, j1)
}

/// `a(2n) = a_n`, `a(2n+1) = 0`.
pub fn aerate<C: Ring>(seq: &[C]) -> Vec<C> {
    seq.iter().flat_map(|v| [v.clone(), C::zero()]).collect()
}

/// A closed form `n -> (s(n), t(n))`.
#[derive(Clone, Copy)]
pub struct JacobiForm {
    pub s: fn(usize) -> Poly,
    pub t: fn(usize) -> Poly,
}

impl JacobiForm {
    pub fn data(&self, len: usize) -> JacobiData {
        JacobiData::from_fns(len, self.s, self.t)
    }
}

impl std::fmt::Debug for JacobiForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "JacobiForm({:?})", self.data(3))
    }
}

/// Where the moments of a named datum come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MomentSource {
    Family(&'static str),
    /// The family interleaved with zeros.
    Aerated(&'static str),
}

impl MomentSource {
    pub fn moments(&self, reg: &crate::Registry, count: usize) -> Result<Vec<Poly>, crate::FamilyError> {
        match self {
            Self::Family(name) => Ok(reg.generate(name, count.saturating_sub(1))?),
            Self::Aerated(name) => {
                let mut v = aerate(&reg.generate(name, count / 2)?);
                v.truncate(count);
                Ok(v)
            }
        }
    }

    pub fn moments_at(
        &self,
        reg: &crate::Registry,
        pt: &Point<Rational>,
        count: usize,
    ) -> Result<Vec<Rational>, crate::FamilyError> {
        match self {
            Self::Family(name) => Ok(reg.generate_at(name, pt, count.saturating_sub(1))?),
            Self::Aerated(name) => {
                let mut v = aerate(&reg.generate_at(name, pt, count / 2)?);
                v.truncate(count);
                Ok(v)
            }
        }
    }
}

impl std::fmt::Display for MomentSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Family(n) => write!(f, "{n}"),
            Self::Aerated(n) => write!(f, "aerated {n}"),
        }
    }
}

/// Jacobi data stated in closed form for a family, as printed and, where
/// the printed form is wrong, corrected.
#[derive(Clone, Debug)]
pub struct NamedJacobi {
    pub key: &'static str,
    pub about: &'static str,
    pub source: MomentSource,
    pub printed: JacobiForm,
    pub corrected: Option<JacobiForm>,
}

impl NamedJacobi {
    /// The form believed to be true.
    pub fn truth(&self) -> JacobiForm {
        self.corrected.unwrap_or(self.printed)
    }
}

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
fn qp(e: usize) -> Poly {
    q().pow(e as u32)
}

/// Every named Jacobi datum.
pub fn named_jacobi() -> Vec<NamedJacobi> {
    vec![
        NamedJacobi {
            key: "schroder-large",
            about: "s(0) = 2, s(n) = 3, t(n) = 2",
            source: MomentSource::Family("schroder-large"),
            printed: JacobiForm { s: |n| if n == 0 { c(2) } else { c(3) }, t: |_| c(2) },
            corrected: None,
        },
        NamedJacobi {
            key: "little-schroder",
            about: "s(0) = 1, s(n) = 3, t(n) = 2",
            source: MomentSource::Family("little-schroder"),
            printed: JacobiForm { s: |n| if n == 0 { c(1) } else { c(3) }, t: |_| c(2) },
            corrected: None,
        },
        NamedJacobi {
            key: "schroder-like",
            about: "s(0) = x+y, s(n) = x+2y, t(n) = y(x+y)",
            source: MomentSource::Family("schroder-like"),
            printed: JacobiForm {
                s: |n| if n == 0 { x() + y() } else { x() + c(2) * y() },
                t: |_| y() * (x() + y()),
            },
            corrected: None,
        },
        NamedJacobi {
            key: "little-schroder-like",
            about: "s(0) = y, s(n) = x+2y, t(n) = y(x+y)",
            source: MomentSource::Family("little-schroder-like"),
            printed: JacobiForm { s: |n| if n == 0 { y() } else { x() + c(2) * y() }, t: |_| y() * (x() + y()) },
            corrected: None,
        },
        NamedJacobi {
            key: "schroder-like-shift",
            about: "s(n) = x+2y, t(n) = y(x+y)",
            source: MomentSource::Family("schroder-like-shift"),
            printed: JacobiForm { s: |_| x() + c(2) * y(), t: |_| y() * (x() + y()) },
            corrected: None,
        },
        NamedJacobi {
            key: "aerated/schroder-large",
            about: "s(n) = 0, t(2n) = 2, t(2n+1) = 1",
            source: MomentSource::Aerated("schroder-large"),
            printed: JacobiForm { s: |_| c(0), t: |n| if n % 2 == 0 { c(2) } else { c(1) } },
            corrected: None,
        },
        NamedJacobi {
            key: "aerated/schroder-like",
            about: "s(n) = 0, t(2n) = x+y, t(2n+1) = y",
            source: MomentSource::Aerated("schroder-like"),
            printed: JacobiForm { s: |_| c(0), t: |n| if n % 2 == 0 { x() + y() } else { y() } },
            corrected: None,
        },
        NamedJacobi {
            key: "aerated/q-schroder-like",
            about: "s(n) = 0, t(2n) = q^n(x+q^n y), t(2n+1) = q^(2n+1) y",
            source: MomentSource::Aerated("q-schroder-like"),
            printed: JacobiForm {
                s: |_| c(0),
                t: |k| {
                    let n = k / 2;
                    if k % 2 == 0 {
                        qp(n) * (x() + qp(n) * y())
                    } else {
                        qp(2 * n + 1) * y()
                    }
                },
            },
            corrected: None,
        },
        NamedJacobi {
            key: "q-schroder-like",
            about: "s(0) = x+y, s(n) = q^n(x+q^(n-1)(1+q)y), t(n) = q^(3n+1) y (x+q^n y)",
            source: MomentSource::Family("q-schroder-like"),
            printed: JacobiForm {
                s: |n| if n == 0 { x() + y() } else { qp(n) * (x() + qp(n - 1) * (c(1) + q()) * y()) },
                t: |n| qp(3 * n + 1) * y() * (x() + qp(n) * y()),
            },
            corrected: None,
        },
        NamedJacobi {
            key: "aerated/q-little-schroder-like",
            about: "s(n) = 0, t(2n) = q^(2n) y, t(2n+1) = q^n(x+q^(n+1) y)",
            source: MomentSource::Aerated("q-little-schroder-like"),
            printed: JacobiForm {
                s: |_| c(0),
                t: |k| {
                    let n = k / 2;
                    if k % 2 == 0 {
                        qp(2 * n) * y()
                    } else {
                        qp(n) * (x() + qp(n + 1) * y())
                    }
                },
            },
            corrected: None,
        },
        NamedJacobi {
            key: "q-little-schroder-like",
            about: "s(0) = y, s(n) = q^(n-1)(x+q^n(1+q)y), t(n) = q^(3n) y (x+q^(n+1) y)",
            source: MomentSource::Family("q-little-schroder-like"),
            printed: JacobiForm {
                s: |n| if n == 0 { y() } else { qp(n - 1) * (x() + qp(n - 1) * (c(1) + q()) * y()) },
                t: |n| qp(3 * n) * y() * (x() + qp(n + 1) * y()),
            },
            corrected: Some(JacobiForm {
                s: |n| if n == 0 { y() } else { qp(n - 1) * (x() + qp(n) * (c(1) + q()) * y()) },
                t: |n| qp(3 * n) * y() * (x() + qp(n + 1) * y()),
            }),
        },
        NamedJacobi {
            key: "q-schroder-like-shift",
            about: "s(n) = q^n(x+q^n(1+q)y), t(n) = q^(3n+2) y (x+q^(n+1) y)",
            source: MomentSource::Family("q-schroder-like-shift"),
            printed: JacobiForm {
                s: |n| qp(n) * (x() + qp(n) * (c(1) + q()) * y()),
                t: |n| qp(3 * n + 2) * y() * (x() + qp(n + 1) * y()),
            },
            corrected: None,
        },
        NamedJacobi {
            key: "b-family",
            about: "s(0) = x, s(n) = q^(n-1)(qx+y), t(n) = q^(2n) x y",
            source: MomentSource::Family("b-family"),
            printed: JacobiForm {
                s: |n| if n == 0 { x() } else { qp(n - 1) * (q() * x() + y()) },
                t: |n| qp(2 * n) * y(),
            },
            corrected: Some(JacobiForm {
                s: |n| if n == 0 { x() } else { qp(n - 1) * (q() * x() + y()) },
                t: |n| qp(2 * n) * x() * y(),
            }),
        },
        NamedJacobi {
            key: "q-classical",
            about: "s(n) = q^n(x+y), t(n) = q^(2n+1) x y",
            source: MomentSource::Family("q-classical"),
            printed: JacobiForm { s: |n| qp(n) * (x() + y()), t: |n| qp(2 * n + 1) * x() * y() },
            corrected: None,
        },
        NamedJacobi {
            key: "q-catalan",
            about: "s(0) = 1, s(n) = q^(2n-1)(1+q), t(n) = q^(4n+1)",
            source: MomentSource::Family("q-catalan"),
            printed: JacobiForm {
                s: |n| if n == 0 { c(1) } else { qp(1 << (n - 1)) * (c(1) + q()) },
                t: |n| qp(1 << (2 * (n + 1))),
            },
            corrected: Some(JacobiForm {
                s: |n| if n == 0 { c(1) } else { qp(2 * n - 1) * (c(1) + q()) },
                t: |n| qp(4 * n + 1),
            }),
        },
        NamedJacobi {
            key: "polya-gessel",
            about: "s(0) = 1, s(n) = q^(2n-1)(1+q), t(n) = q^(4n+1)",
            source: MomentSource::Family("polya-gessel"),
            printed: JacobiForm {
                s: |n| if n == 0 { c(1) } else { qp(1 << (n - 1)) * (c(1) + q()) },
                t: |n| qp(1 << (2 * (n + 1))),
            },
            corrected: Some(JacobiForm {
                s: |n| if n == 0 { c(1) } else { qp(2 * n - 1) * (c(1) + q()) },
                t: |n| qp(4 * n + 1),
            }),
        },
        NamedJacobi {
            key: "motzkin",
            about: "s(n) = 1, t(n) = 1",
            source: MomentSource::Family("motzkin"),
            printed: JacobiForm { s: |_| c(1), t: |_| c(1) },
            corrected: None,
        },
    ]
}

pub fn named(key: &str) -> Option<NamedJacobi> {
    named_jacobi().into_iter().find(|n| n.key == key)
}

/// Jacobi data rendered for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct JacobiRendering {
    pub s: Vec<String>,
    pub t: Vec<String>,
}

impl<C: std::fmt::Display> From<&JacobiData<C>> for JacobiRendering {
    fn from(j: &JacobiData<C>) -> Self {
        Self { s: j.s.iter().map(|v| v.to_string()).collect(), t: j.t.iter().map(|v| v.to_string()).collect() }
    }
}

/// `q^C(n,2)` as a polynomial.
pub fn q_binom2(n: usize) -> Poly {
    qp(binom_u32(n as u32, 2) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Registry;

    fn ints(v: &[i64]) -> Vec<Poly> {
        v.iter().map(|&n| c(n)).collect()
    }

    fn rows_of(t: &Triangle) -> Vec<Vec<String>> {
        t.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect()
    }

    #[test]
    fn schroder_triangle() {
        let j = named("schroder-large").unwrap().printed.data(5);
        let t = triangle_from_jacobi(&j, 4).unwrap();
        assert_eq!(rows_of(&t)[3], ["22", "23", "8", "1"]);
        assert_eq!(rows_of(&t)[4], ["90", "107", "49", "11", "1"]);
    }

    #[test]
    fn moments_match_triangle_column() {
        let j = named("q-schroder-like").unwrap().printed.data(7);
        let t = triangle_from_jacobi(&j, 7).unwrap();
        assert_eq!(moments_from_jacobi(&j, 8).unwrap(), t.column(0));
    }

    #[test]
    fn too_short_data_is_reported() {
        let j = JacobiData::new(ints(&[1]), vec![]);
        assert!(matches!(triangle_from_jacobi(&j, 3), Err(SeriesError::JacobiTooShort { .. })));
    }

    #[test]
    fn favard_base_cases_and_schroder_like_constants() {
        let j = named("schroder-like").unwrap().printed.data(6);
        let ps = favard_polys(&j, 1).unwrap();
        assert_eq!(ps[0], vec![c(1)]);
        assert_eq!(ps[1], vec![-(x() + y()), c(1)]);
        let r = favard_constants(&j, 5).unwrap();
        for (n, v) in r.iter().enumerate() {
            assert_eq!(v, &(x() + y()).pow(n as u32));
        }
    }

    #[test]
    fn favard_triangle_duality() {
        // Σ_k a(n,k) p(k, X) = X^n
        let j = named("q-schroder-like").unwrap().printed.data(8);
        let tri = triangle_from_jacobi(&j, 6).unwrap();
        let ps = favard_polys(&j, 6).unwrap();
        for n in 0..=6 {
            let mut sum = vec![Poly::zero(); n + 1];
            for (k, p) in ps.iter().enumerate().take(n + 1) {
                for (i, coef) in p.iter().enumerate() {
                    sum[i] = &sum[i] + &(&tri.entry(n, k) * coef);
                }
            }
            let mut want = vec![Poly::zero(); n + 1];
            want[n] = Poly::one();
            assert_eq!(sum, want, "n = {n}");
        }
    }

    #[test]
    fn extraction_of_large_schroder() {
        let reg = Registry::standard();
        let m = reg.generate("schroder-large", 9).unwrap();
        let j = stieltjes_extract(&m, 4).unwrap();
        assert_eq!(j.s, ints(&[2, 3, 3, 3, 3]));
        assert_eq!(j.t, ints(&[2, 2, 2, 2]));
    }

    #[test]
    fn extraction_errors() {
        assert!(matches!(stieltjes_extract(&ints(&[1, 1]), 1), Err(JacobiError::TooFewMoments { .. })));
        assert!(matches!(stieltjes_extract(&ints(&[2, 1, 1, 1]), 1), Err(JacobiError::BadNormalization(_))));
        // 1, 1, 1, 1: the 2x2 Hankel determinant vanishes
        assert!(matches!(
            stieltjes_extract(&ints(&[1, 1, 1, 1, 1, 1]), 2),
            Err(JacobiError::SingularHankel { order: 2, index: 0 })
        ));
        // moments 1, 0, x, 0, y: t(1) = y/x is not a polynomial
        let m = vec![c(1), c(0), x(), c(0), y(), c(0)];
        match stieltjes_extract(&m, 2) {
            Err(JacobiError::NonPolynomialResult { which, index, .. }) => assert_eq!((which, index), ("t", 1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn aeration_of_dyck_schroder_data() {
        let t = ints(&[2, 1, 2, 1, 2, 1, 2, 1]);
        let (j0, j1) = aerate_maps(&t);
        assert_eq!(j0.s, ints(&[2, 3, 3, 3]));
        assert_eq!(j0.t, ints(&[2, 2, 2, 2]));
        assert_eq!(j1.s, ints(&[3, 3, 3, 3]));
        assert_eq!(j1.t, ints(&[2, 2, 2]));
    }

    #[test]
    fn named_data_against_extraction() {
        let reg = Registry::standard();
        for nj in named_jacobi() {
            let depth = 4;
            let m = nj.source.moments(&reg, 2 * depth + 3).unwrap();
            let got = stieltjes_extract(&m, depth).unwrap();
            assert_eq!(got, nj.truth().data(depth + 1), "{}", nj.key);
            let printed_ok = got == nj.printed.data(depth + 1);
            assert_eq!(printed_ok, nj.corrected.is_none(), "{} printed form status", nj.key);
        }
    }
}
