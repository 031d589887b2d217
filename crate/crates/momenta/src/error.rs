//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by sequence construction, moment computation, evaluation
/// guards, and recovery.
#[derive(Debug, Error)]
pub enum Error {
    /// Every element of the sequence is zero, so normalization is undefined.
    #[error("degenerate: zero sequence")]
    DegenerateZeroSequence,

    /// Tail ratio must satisfy |ratio| < 1 strictly.
    #[error("invalid sequence: |ratio| = {modulus} violates the invariant |ratio| < 1")]
    RatioOutsideUnitDisk { modulus: f64 },

    /// The declared exponent q must be a positive integer.
    #[error("invalid q: must be a positive integer, got {q}")]
    InvalidQ { q: u32 },

    /// Malformed sequence data (non-finite component, head longer than tail start, ...).
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    /// A tolerance argument was outside its admissible range.
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    /// The a-priori bound m^(p-q) * sum |z_n|^q only holds for p >= q.
    #[error("bound requires p >= q (p = {p}, q = {q})")]
    BoundRequiresPGeQ { p: u32, q: u32 },

    /// The dyadic tail window (p_max/2, p_max] needs p_max >= 8.
    #[error("window undefined: p_max = {p_max} is below the minimum of 8")]
    WindowUndefined { p_max: u32 },

    /// Series/closed-form evaluation requested outside the open unit disk.
    #[error("outside disk: |w| = {modulus} >= 1")]
    OutsideDisk { modulus: f64 },

    /// A denominator 1 - z_n*w fell below the pole guard band.
    #[error("pole proximity: |1 - z_n w| = {denominator:e} is below the guard band 1e-12")]
    PoleProximity { denominator: f64 },

    /// The geometric tail bound for the moment series does not exist.
    #[error("series divergent bound: max_modulus * |w| = {product} >= 1")]
    SeriesDivergentBound { product: f64 },

    /// Pole probing is only meaningful along rays toward unit-modulus elements.
    #[error("probe requires unit-modulus element: |z_{index}| = {modulus}")]
    ProbeRequiresUnitModulus { index: usize, modulus: f64 },

    /// Radius estimation found no nonzero moment at all.
    #[error("no singularity detected: all moments are zero")]
    NoSingularityDetected,

    /// Hankel system too ill-conditioned for the current precision.
    #[error("escalate precision: Hankel condition estimate {condition:e} exceeds {threshold:e}")]
    EscalatePrecision { condition: f64, threshold: f64 },

    /// Moments are not consistent with any integer-weighted node set.
    #[error("inconsistent moment stream: {0}")]
    InconsistentMomentStream(String),

    /// Operation on the zero polynomial has no meaningful answer.
    #[error("degenerate: zero polynomial")]
    ZeroPolynomial,

    /// Eigenvalue iteration failed to converge (should not happen on sane input).
    #[error("eigenvalue iteration did not converge")]
    EigensolverFailure,

    /// Text/CSV/JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
