use crate::fourier::FourierResult;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// q = 0 substituted into a term with a negative q-exponent.
    #[error("q = 0 substituted into a term with a negative q-exponent")]
    ZeroBase,

    /// Truncated series with zero constant term has no reciprocal.
    #[error("series is not a unit: constant term is zero")]
    NotAUnit,

    /// A q-Pochhammer denominator factor vanishes at the chosen base.
    #[error("degenerate base: denominator factor vanishes at q0 = {0}")]
    DegenerateBase(String),

    /// A lower hypergeometric parameter hits a pole inside the sum range.
    #[error("lower parameter produces a pole inside the summation range")]
    PoleInRange,

    #[error("domain error: {0}")]
    Domain(String),

    /// Doubling the node count moved the quadrature result by more than the
    /// requested tolerance.
    #[error("quadrature rule too small: doubling nodes changed the result by {0:e}")]
    RuleTooSmall(f64),

    /// The transform check failed; the full numeric breakdown is attached.
    #[error("Fourier transform identity violated (rel_err = {rel:e})", rel = .0.rel_err)]
    TheoremViolation(Box<FourierResult>),
}
