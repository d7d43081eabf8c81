//! Coefficient scalars.
//!
//! Everything in the crate is generic over [`Scalar`]. The two concrete
//! instances are `BigRational` (the default field of coefficients) and
//! `BigInt`, which the determinant code uses as a fraction-free fast path
//! when every entry happens to have integral coefficients.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

use crate::poly::MPoly;

/// An exact coefficient ring with a divisibility test.
pub trait Scalar:
    Num + Signed + FromPrimitive + Clone + Debug + Display + Eq + Hash + Send + Sync + 'static
{
    /// `Some(self / rhs)` when the quotient exists in the ring, `None` otherwise
    /// (including division by zero).
    fn exact_quotient(&self, rhs: &Self) -> Option<Self>;

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    /// Parses the textual forms produced by `Display` (`7`, `-3`, `3/2`).
    fn parse_scalar(text: &str) -> Option<Self>;

    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("every i64 embeds in the scalar ring")
    }
}

impl Scalar for BigRational {
    fn exact_quotient(&self, rhs: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn parse_scalar(text: &str) -> Option<Self> {
        let text = text.trim();
        match text.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                if num_traits::Zero::is_zero(&d) {
                    return None;
                }
                Some(BigRational::new(n, d))
            }
            None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
        }
    }
}

impl Scalar for BigInt {
    fn exact_quotient(&self, rhs: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        num_traits::Zero::is_zero(&r).then_some(q)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn parse_scalar(text: &str) -> Option<Self> {
        text.trim().parse().ok()
    }
}

/// Commutative ring operations by reference, shared by formal polynomials
/// and scalars so a recurrence can run symbolically or at a point.
pub trait Ring: Clone + Zero + One {
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_i64(n: i64) -> Self;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }

    fn power(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl<T: Scalar> Ring for MPoly<T> {
    fn from_i64(n: i64) -> Self {
        MPoly::from_int(n)
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

impl Ring for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
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

impl Ring for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
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

    #[test]
    fn integer_quotient_requires_divisibility() {
        let six = BigInt::from(6);
        assert_eq!(six.exact_quotient(&BigInt::from(3)), Some(BigInt::from(2)));
        assert_eq!(six.exact_quotient(&BigInt::from(4)), None);
        assert_eq!(six.exact_quotient(&BigInt::from(0)), None);
    }

    #[test]
    fn rational_parse_normalizes() {
        let r = BigRational::parse_scalar("6/-4").unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert!(BigRational::parse_scalar("1/0").is_none());
        assert_eq!(BigRational::parse_scalar(" 12 ").unwrap().to_string(), "12");
    }
}
