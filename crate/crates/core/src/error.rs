use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

/// Every mathematical rejection the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("matrix has non-integral entries")]
    NotIntegral,
    #[error("matrix is singular")]
    Singular,
    #[error("surgery block {{{}}} is singular; the surgered manifold is not a rational homology sphere", .labels.join(", "))]
    SingularSurgeryBlock { labels: Vec<String> },
    #[error("surgery framings on {{{}}} are not integral", .labels.join(", "))]
    NonIntegralFraming { labels: Vec<String> },
    #[error("invalid label data: {0}")]
    InvalidLabels(String),
    #[error("cannot evaluate at t^(1/2) = 0: negative exponents present")]
    EvaluateAtZero,
    #[error("polynomial is not in z^{prefactor}*Q[z^2]")]
    NotInZForm { prefactor: u32 },
    #[error("matrix of size {size} cannot be a Seifert matrix of a {components}-component link")]
    BadSeifertSize { size: usize, components: usize },
    #[error("no power t^(i/2) makes the polynomial symmetric")]
    NotSymmetrizable,
    #[error("Alexander polynomial vanishes at t = 1 (link case is not supported)")]
    VanishesAtOne,
    #[error("symmetrized value at t = 1 is {value}, expected +/-{expected}")]
    WrongValueAtOne { value: String, expected: String },
    #[error("normalization failed: {0}")]
    Normalization(String),
    #[error("series precondition failed: {0}")]
    SeriesDomain(&'static str),
    #[error("odd-order term h^{order} present")]
    OddOrderTerm { order: usize },
    #[error(
        "series is not a polynomial in z^2 of degree <= {max_z_degree}: residual at h^{order}"
    )]
    NonzeroResidual { max_z_degree: usize, order: usize },
    #[error("requested z-degree {max_z_degree} exceeds the series order {order}")]
    InsufficientOrder { max_z_degree: usize, order: usize },
    #[error("strut {0} joins two glued labels; closed strut circles have no defined value")]
    ClosedStrutCircle(String),
    #[error("invalid pairing input: {0}")]
    InvalidPairing(String),
    #[error("inconsistent wheel data: {0}")]
    InconsistentWheelData(String),
    #[error("value must be positive")]
    NotPositive,
}
