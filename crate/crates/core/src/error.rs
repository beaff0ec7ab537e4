use thiserror::Error;

/// Every failure the library reports. Guards on exponential scans surface as
/// [`Error::UniverseTooLarge`] or [`Error::SearchTooLarge`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("universe has {size} elements, limit is {limit}")]
    UniverseTooLarge { size: usize, limit: usize },
    #[error("search space of 2^{bits} candidate sets exceeds the 2^{limit} guard")]
    SearchTooLarge { bits: usize, limit: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateElement(String),
    #[error("element names must be non-empty and free of whitespace, `,`, `#`")]
    BadElementName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("set contains elements outside the universe")]
    OutsideUniverse,
    #[error("operands are defined over different universes")]
    UniverseMismatch,
    #[error("{0} is not closed")]
    NotClosed(String),
    #[error("{0} is not essential")]
    NotEssential(String),
    #[error("`{0}` and `{1}` are not comparable")]
    NotComparable(String, String),
    #[error("relation is not a strict order: cycle through `{0}`")]
    NotAnOrder(String),
    #[error("closure system is not a convex geometry")]
    NotConvexGeometry,
    #[error("candidate is not a base of the closure system")]
    NotABase,
    #[error("implication {0} is not valid in the closure system")]
    InvalidImplication(String),
    #[error("point `{name}` has dimension {found}, expected {expected}")]
    DimensionMismatch { name: String, expected: usize, found: usize },
    #[error("points `{0}` and `{1}` coincide")]
    DuplicatePoint(String, String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Stable machine-readable code used by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UniverseTooLarge { .. } | Error::SearchTooLarge { .. } => "GUARD",
            Error::DuplicateElement(_)
            | Error::BadElementName(_)
            | Error::UnknownElement(_)
            | Error::Parse { .. } => "PARSE",
            Error::OutsideUniverse | Error::UniverseMismatch => "UNIVERSE",
            Error::NotClosed(_) => "NOT_CLOSED",
            Error::NotEssential(_) => "NOT_ESSENTIAL",
            Error::NotComparable(..) => "NOT_COMPARABLE",
            Error::NotAnOrder(_) => "NOT_AN_ORDER",
            Error::NotConvexGeometry => "NOT_CONVEX_GEOMETRY",
            Error::NotABase => "NOT_A_BASE",
            Error::InvalidImplication(_) => "INVALID_IMPLICATION",
            Error::DimensionMismatch { .. } => "DIMENSION",
            Error::DuplicatePoint(..) => "DUPLICATE_POINT",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Fails with [`Error::SearchTooLarge`] when `bits` free positions would be
/// enumerated beyond the guard.
pub(crate) fn guard_bits(bits: usize, limit: usize) -> Result<()> {
    if bits > limit {
        Err(Error::SearchTooLarge { bits, limit })
    } else {
        Ok(())
    }
}
