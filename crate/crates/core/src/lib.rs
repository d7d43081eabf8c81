//! Exact arithmetic for Schröder-like number families.
//!
//! The crate generates the large and little Schröder numbers, their
//! two-parameter generalizations `A(n,x,y)`, `a(n,x,y)` and the q-analogues
//! defined by functional equations with a `z -> qz` twist. It computes
//! their Hankel determinants by fraction-free elimination, their Jacobi
//! (associated-sequence) data, and their continued fractions, and checks
//! every closed form against brute-force oracles.
//!
//! All arithmetic is exact. The polynomial layer is generic over
//! [`Scalar`]; the aliases below fix the usual choices.

pub mod combinat;
pub mod error;
pub mod hankel;
pub mod orthogonal;
pub mod paths;
pub mod poly;
pub mod ratfun;
pub mod scalar;
pub mod sequences;
pub mod series;
pub mod verify;

pub use error::{FamilyError, JacobiError, NotDivisible, ParsePolyError, SeriesError, SizeLimit};
pub use poly::{MPoly, Monomial, Point, Substitution, Var};
pub use ratfun::RationalFunction;
pub use scalar::{Ring, Scalar};
pub use sequences::Registry;
pub use series::{FunctionalEq, PowerSeries, Twist};

/// Arbitrary-precision rational, the coefficient field everywhere.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Polynomial in `x`, `y`, `q` over the rationals.
pub type Poly = MPoly<Rational>;
/// Polynomial with integer coefficients (fraction-free fast path).
pub type IntPoly = MPoly<Integer>;
/// Quotient of two [`Poly`].
pub type RatFun = RationalFunction<Rational>;
/// Truncated power series with polynomial coefficients.
pub type Series = PowerSeries<Poly>;
/// Truncated power series with rational-function coefficients.
pub type RatSeries = PowerSeries<RatFun>;
