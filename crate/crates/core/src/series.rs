//! Truncated power series in `z`, the quadratic functional-equation solver,
//! and bottom-up continued-fraction expansion.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::SeriesError;
use crate::poly::{MPoly, Point, Substitution};
use crate::ratfun::RationalFunction;
use crate::scalar::Scalar;

/// Coefficient ring of a [`PowerSeries`].
pub trait Coefficient<T: Scalar>: Clone + PartialEq + Zero + One + fmt::Display + Send + Sync {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn mul_poly(&self, p: &MPoly<T>) -> Self;
    fn subst(&self, s: &Substitution<T>) -> Self;
    fn from_poly(p: MPoly<T>) -> Self;
}

impl<T: Scalar> Coefficient<T> for MPoly<T> {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn mul_poly(&self, p: &MPoly<T>) -> Self {
        self * p
    }
    fn subst(&self, s: &Substitution<T>) -> Self {
        MPoly::subst(self, s)
    }
    fn from_poly(p: MPoly<T>) -> Self {
        p
    }
}

impl<T: Scalar> Coefficient<T> for RationalFunction<T> {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn mul_poly(&self, p: &MPoly<T>) -> Self {
        self.scale_poly(p)
    }
    fn subst(&self, s: &Substitution<T>) -> Self {
        RationalFunction::subst(self, s)
    }
    fn from_poly(p: MPoly<T>) -> Self {
        RationalFunction::from_poly(p)
    }
}

/// `c_0 + c_1 z + ... + c_N z^N`, truncated at order `N` (inclusive).
#[derive(Clone, PartialEq)]
pub struct PowerSeries<C> {
    coeffs: Vec<C>,
}

impl<C> PowerSeries<C> {
    /// Panics on an empty coefficient list; a series always has `c_0`.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }
}

impl<C: Clone> PowerSeries<C> {
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn map<D>(&self, f: impl Fn(&C) -> D) -> PowerSeries<D> {
        PowerSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<C> PowerSeries<C> {
    pub fn zero<T: Scalar>(order: usize) -> Self
    where
        C: Coefficient<T>,
    {
        Self { coeffs: vec![C::zero(); order + 1] }
    }

    pub fn one<T: Scalar>(order: usize) -> Self
    where
        C: Coefficient<T>,
    {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    /// `z^k` truncated at `order`.
    pub fn z_power<T: Scalar>(k: usize, order: usize) -> Self
    where
        C: Coefficient<T>,
    {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = C::one();
        }
        s
    }

    pub fn is_zero<T: Scalar>(&self) -> bool
    where
        C: Coefficient<T>,
    {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch { left: self.order(), right: other.order() })
        }
    }

    pub fn add<T: Scalar>(&self, other: &Self) -> Result<Self, SeriesError>
    where
        C: Coefficient<T>,
    {
        self.check_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_ref(b)).collect() })
    }

    pub fn sub<T: Scalar>(&self, other: &Self) -> Result<Self, SeriesError>
    where
        C: Coefficient<T>,
    {
        self.check_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub_ref(b)).collect() })
    }

    /// Cauchy product through the common order.
    pub fn mul<T: Scalar>(&self, other: &Self) -> Result<Self, SeriesError>
    where
        C: Coefficient<T>,
    {
        self.check_order(other)?;
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(C::zero(), |acc, i| {
                    let (a, b) = (&self.coeffs[i], &other.coeffs[k - i]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc.add_ref(&a.mul_ref(b))
                    }
                })
            })
            .collect();
        Ok(Self { coeffs })
    }

    pub fn scale<T: Scalar>(&self, c: &C) -> Self
    where
        C: Coefficient<T>,
    {
        Self { coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect() }
    }

    pub fn scale_poly<T: Scalar>(&self, p: &MPoly<T>) -> Self
    where
        C: Coefficient<T>,
    {
        Self { coeffs: self.coeffs.iter().map(|a| a.mul_poly(p)).collect() }
    }

    /// Multiplication by `z^k`, dropping what falls past the order.
    pub fn shift_up<T: Scalar>(&self, k: usize) -> Self
    where
        C: Coefficient<T>,
    {
        let n = self.order();
        let coeffs = (0..=n).map(|i| if i < k { C::zero() } else { self.coeffs[i - k].clone() }).collect();
        Self { coeffs }
    }

    /// The substitution `z -> q z`: `c_n -> q^n c_n`.
    pub fn q_shift<T: Scalar>(&self, q: &MPoly<T>) -> Self
    where
        C: Coefficient<T>,
    {
        let mut power = MPoly::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(if power.is_one() { c.clone() } else { c.mul_poly(&power) });
            power = &power * q;
        }
        Self { coeffs }
    }

    /// Applies a parameter substitution to every coefficient.
    pub fn subst<T: Scalar>(&self, s: &Substitution<T>) -> Self
    where
        C: Coefficient<T>,
    {
        Self { coeffs: self.coeffs.iter().map(|c| c.subst(s)).collect() }
    }

    /// `1 / (1 - self)`; requires a zero constant term.
    pub fn geometric<T: Scalar>(&self) -> Self
    where
        C: Coefficient<T>,
    {
        assert!(self.coeffs[0].is_zero(), "geometric expansion needs a zero constant term");
        let n = self.order();
        let mut w: Vec<C> = Vec::with_capacity(n + 1);
        w.push(C::one());
        for k in 1..=n {
            let mut acc = C::zero();
            for i in 1..=k {
                let u = &self.coeffs[i];
                if !u.is_zero() && !w[k - i].is_zero() {
                    acc = acc.add_ref(&u.mul_ref(&w[k - i]));
                }
            }
            w.push(acc);
        }
        Self { coeffs: w }
    }

    /// Index of the first coefficient where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize>
    where
        C: PartialEq,
    {
        self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b)
    }
}

impl<C: fmt::Display + PartialEq> fmt::Display for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            let s = c.to_string();
            if s == "0" {
                continue;
            }
            let zpart = match n {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{n}"),
            };
            let single = !s[1..].contains(" + ") && !s[1..].contains(" - ") && !s.starts_with('(');
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if single => (true, rest.to_string()),
                _ => (false, s.clone()),
            };
            let term = if n == 0 {
                body
            } else if body == "1" {
                zpart
            } else if single {
                format!("{body}*{zpart}")
            } else {
                format!("({body})*{zpart}")
            };
            match (wrote, neg) {
                (false, true) => write!(f, "-{term}")?,
                (false, false) => write!(f, "{term}")?,
                (true, true) => write!(f, " - {term}")?,
                (true, false) => write!(f, " + {term}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<C: fmt::Display + PartialEq> fmt::Debug for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries[{}]({self})", self.coeffs.len() - 1)
    }
}

/// How a factor of a functional equation transforms the unknown series.
#[derive(Clone, Debug, PartialEq)]
pub enum Twist<T: Scalar> {
    /// `S(z)`
    Identity,
    /// `S(q z)`
    Dilate,
    /// `S(q z)` with the parameters also substituted, e.g. `g(qz, qy)`.
    DilateSubst(Substitution<T>),
    /// `S(z)` with substituted parameters only.
    Subst(Substitution<T>),
}

impl<T: Scalar> Twist<T> {
    fn substitution(&self) -> Option<&Substitution<T>> {
        match self {
            Twist::DilateSubst(s) | Twist::Subst(s) => Some(s),
            _ => None,
        }
    }

    fn dilates(&self) -> bool {
        matches!(self, Twist::Dilate | Twist::DilateSubst(_))
    }

    /// Applies the twist to a whole series.
    pub fn apply<C: Coefficient<T>>(&self, s: &PowerSeries<C>, q: &MPoly<T>) -> PowerSeries<C> {
        let mut out = match self.substitution() {
            Some(sub) => s.subst(sub),
            None => s.clone(),
        };
        if self.dilates() {
            out = out.q_shift(q);
        }
        out
    }
}

/// `coeff * z^z_power * T(S)`.
#[derive(Clone, Debug)]
pub struct LinearTerm<T: Scalar> {
    pub coeff: MPoly<T>,
    pub z_power: usize,
    pub twist: Twist<T>,
}

/// `coeff * z^z_power * T1(S) * T2(S)`.
#[derive(Clone, Debug)]
pub struct QuadraticTerm<T: Scalar> {
    pub coeff: MPoly<T>,
    pub z_power: usize,
    pub left: Twist<T>,
    pub right: Twist<T>,
}

/// `S = constant + Σ linear + Σ quadratic`, where every right-hand term
/// carries at least one factor of `z`, so `S` is determined coefficient by
/// coefficient.
#[derive(Clone, Debug)]
pub struct FunctionalEq<T: Scalar> {
    pub constant: MPoly<T>,
    /// Image of `q` used by dilations.
    pub q: MPoly<T>,
    pub linear: Vec<LinearTerm<T>>,
    pub quadratic: Vec<QuadraticTerm<T>>,
}

impl<T: Scalar> FunctionalEq<T> {
    pub fn new(constant: MPoly<T>) -> Self {
        Self { constant, q: MPoly::q(), linear: Vec::new(), quadratic: Vec::new() }
    }

    pub fn with_q(mut self, q: MPoly<T>) -> Self {
        self.q = q;
        self
    }

    pub fn linear(mut self, coeff: MPoly<T>, z_power: usize, twist: Twist<T>) -> Self {
        assert!(z_power >= 1, "right-hand terms must carry a factor of z");
        self.linear.push(LinearTerm { coeff, z_power, twist });
        self
    }

    pub fn quadratic(mut self, coeff: MPoly<T>, z_power: usize, left: Twist<T>, right: Twist<T>) -> Self {
        assert!(z_power >= 1, "right-hand terms must carry a factor of z");
        self.quadratic.push(QuadraticTerm { coeff, z_power, left, right });
        self
    }

    /// Solves for the unique truncated solution through `order`.
    pub fn solve(&self, order: usize) -> PowerSeries<MPoly<T>> {
        let mut twists: Vec<Twist<T>> = Vec::new();
        let mut slot = |t: &Twist<T>| match twists.iter().position(|u| u == t) {
            Some(i) => i,
            None => {
                twists.push(t.clone());
                twists.len() - 1
            }
        };
        let linear: Vec<(usize, &LinearTerm<T>)> = self.linear.iter().map(|l| (slot(&l.twist), l)).collect();
        let quadratic: Vec<(usize, usize, &QuadraticTerm<T>)> =
            self.quadratic.iter().map(|t| (slot(&t.left), slot(&t.right), t)).collect();

        let mut coeffs: Vec<MPoly<T>> = vec![self.constant.clone()];
        // twisted[k][m] = coefficient m of the k-th twist of the solution
        let mut twisted: Vec<Vec<MPoly<T>>> = vec![Vec::new(); twists.len()];
        let mut q_power = MPoly::one();
        let extend = |twisted: &mut Vec<Vec<MPoly<T>>>, c: &MPoly<T>, q_power: &MPoly<T>| {
            for (k, t) in twists.iter().enumerate() {
                let mut v = match t.substitution() {
                    Some(s) => c.subst(s),
                    None => c.clone(),
                };
                if t.dilates() {
                    v = &v * q_power;
                }
                twisted[k].push(v);
            }
        };
        extend(&mut twisted, &coeffs[0], &q_power);

        for n in 1..=order {
            let mut c = MPoly::zero();
            for (k, term) in &linear {
                if n >= term.z_power {
                    c = &c + &(&term.coeff * &twisted[*k][n - term.z_power]);
                }
            }
            for (l, r, term) in &quadratic {
                if n < term.z_power {
                    continue;
                }
                let m = n - term.z_power;
                let mut conv = MPoly::zero();
                for i in 0..=m {
                    let (a, b) = (&twisted[*l][i], &twisted[*r][m - i]);
                    if !a.is_zero() && !b.is_zero() {
                        conv = &conv + &(a * b);
                    }
                }
                c = &c + &(&term.coeff * &conv);
            }
            q_power = &q_power * &self.q;
            extend(&mut twisted, &c, &q_power);
            coeffs.push(c);
        }
        PowerSeries::new(coeffs)
    }

    /// Solves with every parameter specialized to `pt`, in scalar
    /// arithmetic. A twist that substitutes parameters sends the solve to
    /// the image point, one order lower.
    pub fn solve_at(&self, pt: &Point<T>, order: usize) -> Vec<T> {
        let mut memo = HashMap::new();
        self.solve_at_memo(pt, order, &mut memo)
    }

    fn solve_at_memo(&self, pt: &Point<T>, order: usize, memo: &mut HashMap<Point<T>, Vec<T>>) -> Vec<T> {
        if let Some(v) = memo.get(pt) {
            if v.len() > order {
                return v[..=order].to_vec();
            }
        }
        let q = self.q.eval(pt);
        let twists: Vec<&Twist<T>> = {
            let mut seen: Vec<&Twist<T>> = Vec::new();
            for t in self.linear.iter().map(|l| &l.twist).chain(self.quadratic.iter().flat_map(|t| [&t.left, &t.right])) {
                if !seen.contains(&t) {
                    seen.push(t);
                }
            }
            seen
        };
        let index = |t: &Twist<T>| twists.iter().position(|u| *u == t).expect("twist registered");
        // sequences at substituted points are only needed through order - 1
        let foreign: Vec<Option<Vec<T>>> = twists
            .iter()
            .map(|t| {
                t.substitution().map(|s| {
                    let image = Point::new(s.x.eval(pt), s.y.eval(pt), s.q.eval(pt));
                    if order == 0 {
                        Vec::new()
                    } else {
                        self.solve_at_memo(&image, order - 1, memo)
                    }
                })
            })
            .collect();

        let linear: Vec<(usize, T, usize)> =
            self.linear.iter().map(|l| (index(&l.twist), l.coeff.eval(pt), l.z_power)).collect();
        let quadratic: Vec<(usize, usize, T, usize)> = self
            .quadratic
            .iter()
            .map(|t| (index(&t.left), index(&t.right), t.coeff.eval(pt), t.z_power))
            .collect();

        let mut coeffs: Vec<T> = vec![self.constant.eval(pt)];
        let mut twisted: Vec<Vec<T>> = vec![Vec::new(); twists.len()];
        let mut q_power = T::one();
        let push = |twisted: &mut Vec<Vec<T>>, m: usize, c: &T, q_power: &T| {
            for (k, t) in twists.iter().enumerate() {
                let base = match &foreign[k] {
                    Some(seq) => match seq.get(m) {
                        Some(v) => v.clone(),
                        None => continue,
                    },
                    None => c.clone(),
                };
                twisted[k].push(if t.dilates() { base.mul_ref(q_power) } else { base });
            }
        };
        push(&mut twisted, 0, &coeffs[0], &q_power);
        for n in 1..=order {
            let mut c = T::zero();
            for (k, coeff, p) in &linear {
                if n >= *p {
                    c = c.add_ref(&coeff.mul_ref(&twisted[*k][n - p]));
                }
            }
            for (l, r, coeff, p) in &quadratic {
                if n < *p {
                    continue;
                }
                let m = n - p;
                let mut conv = T::zero();
                for i in 0..=m {
                    conv = conv.add_ref(&twisted[*l][i].mul_ref(&twisted[*r][m - i]));
                }
                c = c.add_ref(&coeff.mul_ref(&conv));
            }
            q_power = q_power.mul_ref(&q);
            push(&mut twisted, n, &c, &q_power);
            coeffs.push(c);
        }
        memo.insert(pt.clone(), coeffs.clone());
        coeffs
    }

    /// `S - RHS(S)` through the order of `s`, computed with whole-series
    /// operations (independent of the coefficient recursion in `solve`).
    pub fn residual<C: Coefficient<T>>(&self, s: &PowerSeries<C>) -> PowerSeries<C> {
        let n = s.order();
        let mut rhs = PowerSeries::<C>::zero(n);
        rhs = rhs.add(&PowerSeries::one(n).scale_poly(&self.constant)).expect("equal orders");
        for term in &self.linear {
            let t = term.twist.apply(s, &self.q).shift_up(term.z_power).scale_poly(&term.coeff);
            rhs = rhs.add(&t).expect("equal orders");
        }
        for term in &self.quadratic {
            let left = term.left.apply(s, &self.q);
            let right = term.right.apply(s, &self.q);
            let t = left.mul(&right).expect("equal orders").shift_up(term.z_power).scale_poly(&term.coeff);
            rhs = rhs.add(&t).expect("equal orders");
        }
        s.sub(&rhs).expect("equal orders")
    }
}

/// One level `1 - linear*z - numerator*z^power * (tail)` of a continued
/// fraction `1 / (level_0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CfLevel<C> {
    pub linear: C,
    pub numerator: C,
    pub power: usize,
}

/// Evaluates `1/(1 - b_0 z - a_0 z^p/(1 - b_1 z - a_1 z^p/(...)))` bottom-up
/// with the tail below the last level set to zero.
pub fn expand_continued_fraction<T: Scalar, C: Coefficient<T>>(levels: &[CfLevel<C>], order: usize) -> PowerSeries<C> {
    let mut tail: Option<PowerSeries<C>> = None;
    for level in levels.iter().rev() {
        let mut u = PowerSeries::<C>::zero(order);
        if order >= 1 {
            u.coeffs[1] = level.linear.clone();
        }
        if let Some(t) = &tail {
            let part = t.shift_up(level.power).scale(&level.numerator);
            u = u.add(&part).expect("equal orders");
        }
        tail = Some(u.geometric());
    }
    tail.unwrap_or_else(|| PowerSeries::one(order))
}

/// Expands a continued fraction whose levels come from `level(k)`, at depths
/// `depth` and `depth + 1`, and fails if the two disagree through `order`.
pub fn expand_checked<T: Scalar, C: Coefficient<T>>(
    level: impl Fn(usize) -> CfLevel<C>,
    depth: usize,
    order: usize,
) -> Result<PowerSeries<C>, SeriesError> {
    let levels: Vec<CfLevel<C>> = (0..=depth).map(level).collect();
    let shallow = expand_continued_fraction(&levels[..depth], order);
    let deep = expand_continued_fraction(&levels, order);
    match shallow.first_difference(&deep) {
        None => Ok(shallow),
        Some(index) => Err(SeriesError::DepthInsufficient { depth, next: depth + 1, order, index }),
    }
}

/// S-fraction `1/(1 - c_0 z/(1 - c_1 z/(1 - ...)))`.
pub fn s_fraction<T: Scalar, C: Coefficient<T>>(
    numerator: impl Fn(usize) -> C,
    depth: usize,
    order: usize,
) -> Result<PowerSeries<C>, SeriesError> {
    expand_checked(|k| CfLevel { linear: C::zero(), numerator: numerator(k), power: 1 }, depth, order)
}

/// J-fraction `1/(1 - s_0 z - t_0 z^2/(1 - s_1 z - t_1 z^2/(...)))` over all
/// supplied levels.
pub fn j_fraction<T: Scalar, C: Coefficient<T>>(s: &[C], t: &[C], order: usize) -> Result<PowerSeries<C>, SeriesError> {
    let needed = order / 2 + 1;
    let depth = s.len().min(t.len());
    if depth < needed {
        return Err(SeriesError::JacobiTooShort { needed, available: depth });
    }
    let levels: Vec<CfLevel<C>> =
        (0..depth).map(|k| CfLevel { linear: s[k].clone(), numerator: t[k].clone(), power: 2 }).collect();
    Ok(expand_continued_fraction(&levels, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = MPoly<BigRational>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    fn ints(s: &PowerSeries<P>) -> Vec<String> {
        s.coeffs().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn cauchy_product() {
        let a = PowerSeries::new(vec![p("1"), p("1"), p("0")]);
        let b = PowerSeries::new(vec![p("1"), p("-1"), p("0")]);
        assert_eq!(ints(&a.mul(&b).unwrap()), ["1", "0", "-1"]);
        let one = PowerSeries::<P>::one(2);
        assert_eq!(a.mul(&one).unwrap(), a);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = PowerSeries::<P>::one(2);
        let b = PowerSeries::<P>::one(3);
        assert_eq!(a.mul(&b).unwrap_err(), SeriesError::OrderMismatch { left: 2, right: 3 });
    }

    #[test]
    fn q_shift_scales_by_powers() {
        let a = PowerSeries::new(vec![p("1"), p("1"), p("1")]);
        assert_eq!(ints(&a.q_shift(&P::q())), ["1", "q", "q^2"]);
        let c = PowerSeries::new(vec![p("5"), p("0"), p("0")]);
        assert_eq!(c.q_shift(&P::q()), c);
        let z = PowerSeries::new(vec![p("0"), p("1"), p("0")]);
        assert_eq!(ints(&z.q_shift(&P::q()).q_shift(&P::q())), ["0", "q^2", "0"]);
    }

    #[test]
    fn geometric_series() {
        let u = PowerSeries::new(vec![p("0"), p("1"), p("0"), p("0")]);
        assert_eq!(ints(&u.geometric()), ["1", "1", "1", "1"]);
    }

    #[test]
    fn single_level_fraction() {
        let levels = [CfLevel { linear: p("0"), numerator: p("1"), power: 1 }];
        // 1/(1 - z*0) with zero tail is 1; one more level gives 1/(1-z)
        assert_eq!(ints(&expand_continued_fraction(&levels, 3)), ["1", "0", "0", "0"]);
        let levels = [CfLevel { linear: p("1"), numerator: p("0"), power: 1 }];
        assert_eq!(ints(&expand_continued_fraction(&levels, 3)), ["1", "1", "1", "1"]);
    }

    #[test]
    fn shallow_fraction_is_detected() {
        let err = s_fraction::<BigRational, P>(|_| p("1"), 2, 6).unwrap_err();
        assert!(matches!(err, SeriesError::DepthInsufficient { .. }));
        assert!(s_fraction::<BigRational, P>(|_| p("1"), 7, 6).is_ok());
    }

    #[test]
    fn large_schroder_from_quadratic_equation() {
        let eq = FunctionalEq::new(P::one())
            .linear(P::one(), 1, Twist::Identity)
            .quadratic(P::one(), 1, Twist::Identity, Twist::Identity);
        let s = eq.solve(4);
        assert_eq!(ints(&s), ["1", "2", "6", "22", "90"]);
        assert!(eq.residual(&s).is_zero());
    }

    #[test]
    fn rendering() {
        let s = PowerSeries::new(vec![p("1"), p("2"), p("x + y"), p("-3"), p("0"), p("1")]);
        assert_eq!(s.to_string(), "1 + 2*z + (x + y)*z^2 - 3*z^3 + z^5");
        assert_eq!(PowerSeries::<P>::zero(2).to_string(), "0");
    }

    #[test]
    fn dyck_j_fraction_is_aerated_catalan() {
        let s = vec![p("0"); 4];
        let t = vec![p("1"); 4];
        let f = j_fraction(&s, &t, 6).unwrap();
        assert_eq!(ints(&f), ["1", "0", "1", "0", "2", "0", "5"]);
        assert!(j_fraction(&s[..2], &t[..2], 6).is_err());
    }
}
