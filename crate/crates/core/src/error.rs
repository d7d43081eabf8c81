use thiserror::Error;

/// Failure of an exact polynomial division.
///
/// Fraction-free elimination and the quotient identities of the sequence
/// families only ever divide when the divisor is a factor, so this error means
/// either a bug or a falsified identity. The fields carry enough to reproduce
/// the failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{divisor} does not divide {dividend}: remainder has leading term {witness} ({remaining_terms} terms left)")]
pub struct NotDivisible {
    pub dividend: String,
    pub divisor: String,
    pub witness: String,
    pub remaining_terms: usize,
}

impl NotDivisible {
    pub(crate) fn new(dividend: String, divisor: String, witness: String, remaining_terms: usize) -> Self {
        const MAX: usize = 400;
        let clip = |mut s: String| {
            if s.len() > MAX {
                let mut end = MAX;
                while !s.is_char_boundary(end) {
                    end -= 1;
                }
                s.truncate(end);
                s.push_str(" …");
            }
            s
        };
        Self { dividend: clip(dividend), divisor: clip(divisor), witness, remaining_terms }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial {input:?}: {reason}")]
pub struct ParsePolyError {
    pub input: String,
    pub reason: String,
}

/// Errors raised while expanding series and continued fractions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("continued fraction depth {depth} is too shallow for order {order}: coefficient {index} changes at depth {next}")]
    DepthInsufficient { depth: usize, next: usize, order: usize, index: usize },
    #[error("need {needed} Jacobi coefficients, have {available}")]
    JacobiTooShort { needed: usize, available: usize },
}

/// Errors raised by moment-to-Jacobi extraction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacobiError {
    #[error("first moment must be 1, got {0}")]
    BadNormalization(String),
    #[error("need {needed} moments for depth {depth}, have {available}")]
    TooFewMoments { needed: usize, available: usize, depth: usize },
    #[error("Hankel determinant of order {order} vanishes (t({index}) = 0)")]
    SingularHankel { order: usize, index: usize },
    #[error("{which}({index}) = {value} is not a polynomial")]
    NonPolynomialResult { which: &'static str, index: usize, value: String },
    #[error(transparent)]
    Division(#[from] NotDivisible),
}

/// Size-limit violation of the brute-force enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what} = {requested} exceeds the enumeration limit {limit}")]
pub struct SizeLimit {
    pub what: &'static str,
    pub requested: usize,
    pub limit: usize,
}

/// Errors raised while generating a registered family.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    Unknown(String),
    #[error("family {family:?} has no route {route}")]
    UnknownRoute { family: String, route: usize },
    #[error("{family}: term {n} is not exact ({detail})")]
    NotExact { family: String, n: usize, detail: String },
    #[error("{family}: the point {point} lies on a degenerate locus ({detail})")]
    DegeneratePoint { family: String, point: String, detail: String },
    #[error(transparent)]
    Division(#[from] NotDivisible),
}
