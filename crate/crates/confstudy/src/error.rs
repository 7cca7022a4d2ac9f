//! Error type shared by every module and the CLI.
//!
//! Variants split into two families: [`Error::Parse`] covers malformed
//! input text (wire-format violations), everything else reports a violated
//! mathematical precondition. The CLI maps the first family to exit code 1
//! and the second to exit code 2, echoing [`Error::code`] as a stable
//! machine-readable identifier.

use thiserror::Error;

/// Crate-wide error enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text or JSON (schema violation, not mathematics).
    #[error("parse error: {0}")]
    Parse(String),
    /// An operation that requires a grade-1 element received something else.
    #[error("operand is not a grade-1 vector")]
    NotAVector,
    /// The zero vector has no geometric classification.
    #[error("the zero vector carries no geometry")]
    ZeroVector,
    /// A plane needs a nonzero normal direction.
    #[error("plane normal must be nonzero")]
    ZeroNormal,
    /// A sphere needs a nonzero weight.
    #[error("sphere weight must be nonzero")]
    ZeroWeight,
    /// Splitting into four quaternions requires a purely even element.
    #[error("element has a nonzero odd part")]
    OddPart,
    /// An operation on displacement candidates rejects the zero element.
    #[error("zero element")]
    ZeroElement,
    /// The element does not satisfy the ten quadratic displacement conditions.
    #[error("element is not on the displacement variety")]
    NotOnStudy,
    /// The element fails the line criterion `q + reverse(q)` rational.
    #[error("element is not on a displacement line: {0}")]
    NotALine(String),
    /// Removing the scalar part left nothing to point along.
    #[error("line direction is zero after removing the scalar part")]
    ZeroDirection,
    /// The two grade-1 vectors do not span a 2-blade.
    #[error("wedge of the two vectors vanishes; blade is degenerate")]
    DegenerateBlade,
    /// Normalization was requested but the image lies at infinity.
    #[error("cannot normalize: image has zero coefficient on e_o")]
    NormalizeAtInfinity,
    /// Parameters violate a constructor's documented domain.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// The polynomial has no rational norm polynomial of the required shape.
    #[error("not a motion polynomial: {0}")]
    NotRotorPolynomial(String),
    /// The norm polynomial has a real irrational root, so no rational
    /// quadratic splitting exists.
    #[error("norm polynomial does not split into rational quadratics: {0}")]
    UnfactorableOverRationals(String),
    /// Every ordering of the quadratic splitting was skipped.
    #[error("no ordering admits a complete factorization ({} skipped)", skipped.len())]
    NoFactorization {
        /// One human-readable report per skipped ordering.
        skipped: Vec<String>,
    },
}

impl Error {
    /// Stable machine-readable identifier, used by the CLI error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse_error",
            Error::NotAVector => "not_a_vector",
            Error::ZeroVector => "zero_vector",
            Error::ZeroNormal => "zero_normal",
            Error::ZeroWeight => "zero_weight",
            Error::OddPart => "odd_part",
            Error::ZeroElement => "zero_element",
            Error::NotOnStudy => "not_on_study",
            Error::NotALine(_) => "not_a_line",
            Error::ZeroDirection => "zero_direction",
            Error::DegenerateBlade => "degenerate_blade",
            Error::NormalizeAtInfinity => "normalize_at_infinity",
            Error::InvalidParams(_) => "invalid_params",
            Error::NotRotorPolynomial(_) => "not_rotor_polynomial",
            Error::UnfactorableOverRationals(_) => "unfactorable_over_rationals",
            Error::NoFactorization { .. } => "no_factorization",
        }
    }

    /// True for wire-format violations (CLI exit 1), false for violated
    /// mathematical preconditions (CLI exit 2).
    pub fn is_schema_error(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
