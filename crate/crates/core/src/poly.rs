//! Sparse polynomials in the three formal variables `x`, `y`, `q`.
//!
//! Terms are kept in a sorted vector, leading (largest) monomial first, in
//! graded lexicographic order. No stored coefficient is zero, so two
//! polynomials are equal exactly when their term vectors are equal.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{NotDivisible, ParsePolyError};
use crate::scalar::Scalar;

/// One of the three formal variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Q,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Q];

    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Q => 'q',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'q' => Some(Var::Q),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Exponent triple `x^x * y^y * q^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub q: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0, q: 0 };

    pub fn new(x: u32, y: u32, q: u32) -> Self {
        Self { x, y, q }
    }

    pub fn var(v: Var) -> Self {
        let mut m = Self::ONE;
        *m.exponent_mut(v) = 1;
        m
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match v {
            Var::X => self.x,
            Var::Y => self.y,
            Var::Q => self.q,
        }
    }

    fn exponent_mut(&mut self, v: Var) -> &mut u32 {
        match v {
            Var::X => &mut self.x,
            Var::Y => &mut self.y,
            Var::Q => &mut self.q,
        }
    }

    pub fn degree(&self) -> u64 {
        self.x as u64 + self.y as u64 + self.q as u64
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    /// Product of monomials. Exponent overflow is a hard error.
    pub fn times(self, other: Monomial) -> Monomial {
        let add = |a: u32, b: u32| a.checked_add(b).expect("monomial exponent overflow");
        Monomial { x: add(self.x, other.x), y: add(self.y, other.y), q: add(self.q, other.q) }
    }

    /// `self / other` if `other` divides `self`.
    pub fn divide(self, other: Monomial) -> Option<Monomial> {
        Some(Monomial {
            x: self.x.checked_sub(other.x)?,
            y: self.y.checked_sub(other.y)?,
            q: self.q.checked_sub(other.q)?,
        })
    }

    pub fn pow(self, n: u32) -> Monomial {
        let mul = |a: u32| a.checked_mul(n).expect("monomial exponent overflow");
        Monomial { x: mul(self.x), y: mul(self.y), q: mul(self.q) }
    }
}

/// Graded lexicographic: total degree first, then `x`, `y`, `q`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
            .then(self.y.cmp(&other.y))
            .then(self.q.cmp(&other.q))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial over the scalar ring `T`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<T> {
    terms: Vec<(Monomial, T)>,
}

impl<T: Scalar> MPoly<T> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(T::from_int(c))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v), T::one())
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn monomial(m: Monomial, c: T) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, T)>>(terms: I) -> Self {
        let mut acc: HashMap<Monomial, T> = HashMap::new();
        for (m, c) in terms {
            accumulate(&mut acc, m, c);
        }
        Self::from_map(acc)
    }

    fn from_map(map: HashMap<Monomial, T>) -> Self {
        let mut terms: Vec<(Monomial, T)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        Self { terms }
    }

    /// Terms in canonical order, leading monomial first.
    pub fn terms(&self) -> &[(Monomial, T)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<T> {
        match self.terms.as_slice() {
            [] => Some(T::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, T)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: Monomial) -> T {
        self.terms
            .binary_search_by(|(k, _)| m.cmp(k))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| T::zero())
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (*m, a.mul_ref(c))).collect() }
    }

    /// Multiplication by `c * m`.
    pub fn mul_term(&self, m: Monomial, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        // multiplying by a monomial preserves the term order
        Self { terms: self.terms.iter().map(|(k, a)| (k.times(m), a.mul_ref(c))).collect() }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> MPoly<U> {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Like [`map_coeffs`](Self::map_coeffs) but fails if any coefficient does.
    pub fn try_map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> Option<U>) -> Option<MPoly<U>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((*m, f(c)?));
        }
        Some(MPoly::from_terms(terms))
    }

    /// Composition: replaces each variable by the polynomial the
    /// substitution assigns to it.
    pub fn subst(&self, s: &Substitution<T>) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let mut powers = PowerCache::new(s);
        let mut acc: HashMap<Monomial, T> = HashMap::new();
        for (m, c) in &self.terms {
            let px = powers.get(Var::X, m.x);
            let py = powers.get(Var::Y, m.y);
            let pq = powers.get(Var::Q, m.q);
            let prod = &(&px * &py) * &pq;
            for (k, a) in prod.terms {
                accumulate(&mut acc, k, a.mul_ref(c));
            }
        }
        Self::from_map(acc)
    }

    /// Evaluates at a point.
    pub fn eval(&self, pt: &Point<T>) -> T {
        let mut cache: HashMap<(Var, u32), T> = HashMap::new();
        let mut power = |v: Var, e: u32| -> T {
            if e == 0 {
                return T::one();
            }
            cache
                .entry((v, e))
                .or_insert_with(|| num_traits::pow::pow(pt.get(v).clone(), e as usize))
                .clone()
        };
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let term = c.mul_ref(&power(Var::X, m.x)).mul_ref(&power(Var::Y, m.y)).mul_ref(&power(Var::Q, m.q));
            acc = acc.add_ref(&term);
        }
        acc
    }

    /// Exact quotient `self / divisor`. Fails with a remainder witness unless
    /// `divisor` divides `self` in the polynomial ring.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, NotDivisible> {
        let fail = |witness: String, remaining: usize| {
            NotDivisible::new(self.to_string(), divisor.to_string(), witness, remaining)
        };
        let Some((lead_m, lead_c)) = divisor.leading().cloned() else {
            return Err(fail("division by zero".into(), self.len()));
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if divisor.len() == 1 {
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                let (Some(k), Some(a)) = (m.divide(lead_m), c.exact_quotient(&lead_c)) else {
                    return Err(fail(format!("{}*{}", c, m), self.len()));
                };
                terms.push((k, a));
            }
            return Ok(Self { terms });
        }
        let mut rem: BTreeMap<Monomial, T> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let (Some(qm), Some(qc)) = (m.divide(lead_m), c.exact_quotient(&lead_c)) else {
                let remaining = rem.len() + 1;
                return Err(fail(format!("{}*{}", c, m), remaining));
            };
            for (bm, bc) in &divisor.terms[1..] {
                let key = qm.times(*bm);
                let delta = qc.mul_ref(bc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = e.get().sub_ref(&delta);
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Ok(Self { terms: quotient })
    }

    /// `true` if `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &Self) -> bool {
        self.exact_div(divisor).is_ok()
    }
}

fn accumulate<T: Scalar>(acc: &mut HashMap<Monomial, T>, m: Monomial, c: T) {
    match acc.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            let v = e.get().add_ref(&c);
            *e.get_mut() = v;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

struct PowerCache<'a, T: Scalar> {
    subst: &'a Substitution<T>,
    cache: HashMap<(Var, u32), MPoly<T>>,
}

impl<'a, T: Scalar> PowerCache<'a, T> {
    fn new(subst: &'a Substitution<T>) -> Self {
        Self { subst, cache: HashMap::new() }
    }

    fn get(&mut self, v: Var, e: u32) -> MPoly<T> {
        if e == 0 {
            return MPoly::one();
        }
        if let Some(p) = self.cache.get(&(v, e)) {
            return p.clone();
        }
        let p = if e == 1 { self.subst.image(v).clone() } else { &self.get(v, e - 1) * self.subst.image(v) };
        self.cache.insert((v, e), p.clone());
        p
    }
}

/// Images of `x`, `y`, `q` under a ring homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution<T: Scalar> {
    pub x: MPoly<T>,
    pub y: MPoly<T>,
    pub q: MPoly<T>,
}

impl<T: Scalar> Default for Substitution<T> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<T: Scalar> Substitution<T> {
    pub fn identity() -> Self {
        Self { x: MPoly::x(), y: MPoly::y(), q: MPoly::q() }
    }

    pub fn with(mut self, v: Var, image: MPoly<T>) -> Self {
        match v {
            Var::X => self.x = image,
            Var::Y => self.y = image,
            Var::Q => self.q = image,
        }
        self
    }

    pub fn image(&self, v: Var) -> &MPoly<T> {
        match v {
            Var::X => &self.x,
            Var::Y => &self.y,
            Var::Q => &self.q,
        }
    }

    pub fn is_identity(&self) -> bool {
        Var::ALL.iter().all(|&v| *self.image(v) == MPoly::var(v))
    }

    /// `self` followed by `after`.
    pub fn then(&self, after: &Substitution<T>) -> Substitution<T> {
        Substitution { x: self.x.subst(after), y: self.y.subst(after), q: self.q.subst(after) }
    }
}

/// A point `(x, y, q)` of the scalar ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
    pub q: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T, q: T) -> Self {
        Self { x, y, q }
    }

    pub fn get(&self, v: Var) -> &T {
        match v {
            Var::X => &self.x,
            Var::Y => &self.y,
            Var::Q => &self.q,
        }
    }

    pub fn as_substitution(&self) -> Substitution<T> {
        Substitution {
            x: MPoly::constant(self.x.clone()),
            y: MPoly::constant(self.y.clone()),
            q: MPoly::constant(self.q.clone()),
        }
    }
}

impl<T: Scalar> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x={}, y={}, q={})", self.x, self.y, self.q)
    }
}

fn merge<T: Scalar>(a: &[(Monomial, T)], b: &[(Monomial, T)], negate_b: bool) -> Vec<(Monomial, T)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let neg = |c: &T| if negate_b { -c.clone() } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, neg(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { a[i].1.sub_ref(&b[j].1) } else { a[i].1.add_ref(&b[j].1) };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (*m, neg(c))));
    out
}

impl<'a, T: Scalar> Add<&'a MPoly<T>> for &'a MPoly<T> {
    type Output = MPoly<T>;
    fn add(self, rhs: &'a MPoly<T>) -> MPoly<T> {
        MPoly { terms: merge(&self.terms, &rhs.terms, false) }
    }
}

impl<'a, T: Scalar> Sub<&'a MPoly<T>> for &'a MPoly<T> {
    type Output = MPoly<T>;
    fn sub(self, rhs: &'a MPoly<T>) -> MPoly<T> {
        MPoly { terms: merge(&self.terms, &rhs.terms, true) }
    }
}

impl<'a, T: Scalar> Mul<&'a MPoly<T>> for &'a MPoly<T> {
    type Output = MPoly<T>;
    fn mul(self, rhs: &'a MPoly<T>) -> MPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let (small, big) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(*m, c);
        }
        let mut acc: HashMap<Monomial, T> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                accumulate(&mut acc, ma.times(*mb), ca.mul_ref(cb));
            }
        }
        MPoly::from_map(acc)
    }
}

impl<T: Scalar> Neg for &MPoly<T> {
    type Output = MPoly<T>;
    fn neg(self) -> MPoly<T> {
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl<T: Scalar> Neg for MPoly<T> {
    type Output = MPoly<T>;
    fn neg(self) -> MPoly<T> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr<MPoly<T>> for MPoly<T> {
            type Output = MPoly<T>;
            fn $method(self, rhs: MPoly<T>) -> MPoly<T> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, T: Scalar> $tr<&'a MPoly<T>> for MPoly<T> {
            type Output = MPoly<T>;
            fn $method(self, rhs: &'a MPoly<T>) -> MPoly<T> {
                (&self).$method(rhs)
            }
        }
        impl<'a, T: Scalar> $tr<MPoly<T>> for &'a MPoly<T> {
            type Output = MPoly<T>;
            fn $method(self, rhs: MPoly<T>) -> MPoly<T> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Zero for MPoly<T> {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Scalar> One for MPoly<T> {
    fn one() -> Self {
        MPoly::one()
    }
}

impl<T: Scalar> From<T> for MPoly<T> {
    fn from(c: T) -> Self {
        MPoly::constant(c)
    }
}

impl<T: Scalar> std::iter::Sum for MPoly<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(MPoly::zero(), |a, b| &a + &b)
    }
}

impl<T: Scalar> std::iter::Product for MPoly<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(MPoly::one(), |a, b| &a * &b)
    }
}

impl<T: Scalar> fmt::Display for MPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for MPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl<T: Scalar> FromStr for MPoly<T> {
    type Err = ParsePolyError;

    /// Parses the canonical rendering: a signed sum of terms, each term a
    /// `*`-separated product of scalars (`3`, `3/2`) and powers (`x`, `q^4`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParsePolyError { input: s.to_string(), reason: reason.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (chunk, tail) = rest.split_at(end);
            if chunk.is_empty() {
                return Err(err("missing term"));
            }
            let (m, c) = parse_term::<T>(chunk).map_err(|r| err(&r))?;
            let c = if sign < 0 { -c } else { c };
            terms.push((m, c));
            if tail.is_empty() {
                break;
            }
            sign = if tail.starts_with('-') { -1 } else { 1 };
            rest = &tail[1..];
        }
        Ok(MPoly::from_terms(terms))
    }
}

fn parse_term<T: Scalar>(chunk: &str) -> Result<(Monomial, T), String> {
    let mut m = Monomial::ONE;
    let mut c = T::one();
    for factor in chunk.split('*') {
        let mut chars = factor.chars();
        match chars.next().and_then(Var::from_symbol) {
            Some(v) => {
                let tail = chars.as_str();
                let e: u32 = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .ok_or_else(|| format!("unexpected {tail:?} after {v}"))?
                        .parse()
                        .map_err(|_| format!("bad exponent in {factor:?}"))?
                };
                let mut add = Monomial::ONE;
                *add.exponent_mut(v) = e;
                m = m.times(add);
            }
            None => {
                let value = T::parse_scalar(factor).ok_or_else(|| format!("bad factor {factor:?}"))?;
                c = c.mul_ref(&value);
            }
        }
    }
    Ok((m, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type P = MPoly<BigRational>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn expand_product() {
        let prod = &p("x + y") * &p("x + 2*y");
        assert_eq!(prod.to_string(), "x^2 + 3*x*y + 2*y^2");
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let a = p("3*x^2*q - y + 1/2");
        assert_eq!(&a + &P::zero(), a);
        assert!((&p("x + y") - &p("x + y")).is_empty());
    }

    #[test]
    fn subst_linear_case() {
        let s = Substitution::identity().with(Var::X, -P::x()).with(Var::Y, p("x + y"));
        assert_eq!(p("x + y").subst(&s), P::y());
    }

    #[test]
    fn subst_q_to_one() {
        let s = Substitution::identity().with(Var::Q, P::one());
        assert_eq!(p("q^2*y*x + q^3*y^2").subst(&s), p("x*y + y^2"));
    }

    #[test]
    fn eval_examples() {
        let pt = Point::new(r(2), r(1), r(1));
        assert_eq!(p("x + 2*y").eval(&pt), r(4));
        assert_eq!(P::from_int(7).eval(&Point::new(r(-3), r(5), r(9))), r(7));
    }

    #[test]
    fn exact_division() {
        let q = p("x^2 + 3*x*y + 2*y^2").exact_div(&p("x + y")).unwrap();
        assert_eq!(q, p("x + 2*y"));
        assert!(P::zero().exact_div(&p("x + y")).unwrap().is_zero());
    }

    #[test]
    fn division_failure_reports_witness() {
        let e = p("x^2 + y").exact_div(&p("x + y")).unwrap_err();
        assert!(e.remaining_terms > 0);
        assert!(!e.witness.is_empty());
        assert!(p("x").exact_div(&P::zero()).is_err());
        // integer coefficients must divide too
        let a: MPoly<BigInt> = "2*x + 3".parse().unwrap();
        assert!(a.exact_div(&"2".parse().unwrap()).is_err());
    }

    #[test]
    fn render_signs_and_fractions() {
        assert_eq!(p("-x + 3/2*y^2*q - 1").to_string(), "3/2*y^2*q - x - 1");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn graded_lex_order() {
        let poly = p("q + x + y + x*q + 1 + y^2");
        let rendered = poly.to_string();
        assert_eq!(rendered, "x*q + y^2 + x + y + q + 1");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("x^".parse::<P>().is_err());
        assert!("x + + y".parse::<P>().is_err());
        assert!("z".parse::<P>().is_err());
        assert!("".parse::<P>().is_err());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn exponent_overflow_is_fatal() {
        let m = Monomial::new(u32::MAX, 0, 0);
        let _ = m.times(Monomial::var(Var::X));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let b = p("x - q*y + 2");
        let mut acc = P::one();
        for _ in 0..5 {
            acc = &acc * &b;
        }
        assert_eq!(b.pow(5), acc);
    }
}
