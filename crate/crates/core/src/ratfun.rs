//! Quotients of polynomials without gcd normalization.
//!
//! Equality is decided by cross-multiplication. To keep denominators from
//! compounding, addition reuses a denominator when one divides the other and
//! [`RationalFunction::reduce`] collapses a quotient whose denominator divides its
//! numerator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::NotDivisible;
use crate::poly::{MPoly, Substitution};
use crate::scalar::Scalar;

#[derive(Clone)]
pub struct RationalFunction<T> {
    num: MPoly<T>,
    den: MPoly<T>,
}

impl<T: Scalar> RationalFunction<T> {
    /// Panics if `den` is zero.
    pub fn new(num: MPoly<T>, den: MPoly<T>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = Self { num, den };
        r.normalize_constant_den();
        r
    }

    pub fn from_poly(p: MPoly<T>) -> Self {
        Self { num: p, den: MPoly::one() }
    }

    pub fn numerator(&self) -> &MPoly<T> {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize_constant_den(&mut self) {
        if let Some(c) = self.den.constant_value() {
            if !c.is_one() {
                if let Some(inv) = T::one().exact_quotient(&c) {
                    self.num = self.num.scale(&inv);
                    self.den = MPoly::one();
                }
            }
        }
        if self.num.is_zero() {
            self.den = MPoly::one();
        }
    }

    /// Replaces `n/d` by the polynomial `n/d` when `d` divides `n`.
    pub fn reduce(self) -> Self {
        if self.den.is_one() {
            return self;
        }
        match self.num.exact_div(&self.den) {
            Ok(p) => Self::from_poly(p),
            Err(_) => self,
        }
    }

    /// The polynomial this function equals, if it is one.
    pub fn to_poly(&self) -> Result<MPoly<T>, NotDivisible> {
        self.num.exact_div(&self.den)
    }

    pub fn inverse(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn scale_poly(&self, p: &MPoly<T>) -> Self {
        Self::new(&self.num * p, self.den.clone())
    }

    pub fn subst(&self, s: &Substitution<T>) -> Self {
        Self::new(self.num.subst(s), self.den.subst(s))
    }

    /// Equality in the fraction field: `n1 * d2 == n2 * d1`.
    pub fn equals(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }

    fn combine(&self, rhs: &Self, subtract: bool) -> Self {
        let op = |a: &MPoly<T>, b: &MPoly<T>| if subtract { a - b } else { a + b };
        if self.den == rhs.den {
            return Self::new(op(&self.num, &rhs.num), self.den.clone());
        }
        if rhs.den.is_one() {
            return Self::new(op(&self.num, &(&rhs.num * &self.den)), self.den.clone());
        }
        if self.den.is_one() {
            return Self::new(op(&(&self.num * &rhs.den), &rhs.num), rhs.den.clone());
        }
        if self.den.len() >= rhs.den.len() {
            if let Ok(k) = self.den.exact_div(&rhs.den) {
                return Self::new(op(&self.num, &(&rhs.num * &k)), self.den.clone());
            }
        } else if let Ok(k) = rhs.den.exact_div(&self.den) {
            return Self::new(op(&(&self.num * &k), &rhs.num), rhs.den.clone());
        }
        Self::new(op(&(&self.num * &rhs.den), &(&rhs.num * &self.den)), &self.den * &rhs.den)
    }
}

impl<T: Scalar> PartialEq for RationalFunction<T> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl<T: Scalar> From<MPoly<T>> for RationalFunction<T> {
    fn from(p: MPoly<T>) -> Self {
        Self::from_poly(p)
    }
}

impl<'a, T: Scalar> Add<&'a RationalFunction<T>> for &'a RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn add(self, rhs: &'a RationalFunction<T>) -> RationalFunction<T> {
        self.combine(rhs, false)
    }
}

impl<'a, T: Scalar> Sub<&'a RationalFunction<T>> for &'a RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn sub(self, rhs: &'a RationalFunction<T>) -> RationalFunction<T> {
        self.combine(rhs, true)
    }
}

impl<'a, T: Scalar> Mul<&'a RationalFunction<T>> for &'a RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn mul(self, rhs: &'a RationalFunction<T>) -> RationalFunction<T> {
        if self.den.is_one() {
            return RationalFunction::new(&self.num * &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RationalFunction::new(&self.num * &rhs.num, self.den.clone());
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<T: Scalar> Neg for &RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn neg(self) -> RationalFunction<T> {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl<T: Scalar> Add for RationalFunction<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for RationalFunction<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for RationalFunction<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Neg for RationalFunction<T> {
    type Output = Self;
    fn neg(self) -> Self {
        -&self
    }
}

impl<T: Scalar> Zero for RationalFunction<T> {
    fn zero() -> Self {
        Self::from_poly(MPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<T: Scalar> One for RationalFunction<T> {
    fn one() -> Self {
        Self::from_poly(MPoly::one())
    }
}

impl<T: Scalar> fmt::Display for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<T: Scalar> fmt::Debug for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl<T: Scalar> crate::scalar::Ring for RationalFunction<T> {
    fn from_i64(n: i64) -> Self {
        Self::from_poly(MPoly::from_int(n))
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = MPoly<BigRational>;
    type R = RationalFunction<BigRational>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let a = R::new(p("x^2 - y^2"), p("x - y"));
        let b = R::from_poly(p("x + y"));
        assert_eq!(a, b);
        assert_ne!(a, R::from_poly(p("x")));
    }

    #[test]
    fn addition_shares_divisible_denominators() {
        let a = R::new(p("1"), p("q - 1"));
        let b = R::new(p("1"), p("q^3 - q^2 - q + 1"));
        let s = &a + &b;
        assert_eq!(s.denominator(), &p("q^3 - q^2 - q + 1"));
        assert_eq!(s, R::new(p("q^2"), p("q^3 - q^2 - q + 1")));
    }

    #[test]
    fn reduce_collapses_polynomial_quotients() {
        let a = R::new(p("x^2 + 3*x*y + 2*y^2"), p("x + y")).reduce();
        assert!(a.denominator().is_one());
        assert_eq!(a.numerator(), &p("x + 2*y"));
        let b = R::new(p("x"), p("x + y")).reduce();
        assert_eq!(b.denominator(), &p("x + y"));
    }

    #[test]
    fn constant_denominators_are_absorbed() {
        let a = R::new(p("x"), p("2"));
        assert!(a.denominator().is_one());
        assert_eq!(a.numerator(), &p("1/2*x"));
    }
}
