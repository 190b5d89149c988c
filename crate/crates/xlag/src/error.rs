use thiserror::Error;

/// Errors surfaced by the construction and verification pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Polynomial division left a nonzero remainder where the construction
    /// guarantees exact divisibility; indicates a bug or invalid input.
    #[error("non-exact polynomial division: remainder is nonzero")]
    NonExactDivision,

    /// Attempted to build a rational function with a zero denominator.
    #[error("zero denominator in rational function")]
    ZeroDenominator,

    /// The denominator polynomial has a root on (0, inf), so the extended
    /// potential is singular on the half-line.
    #[error("singular potential: denominator polynomial has a positive root")]
    SingularPotential,

    /// A chain step's normalization constant vanished; the step cannot be
    /// normalized (impossible for half-integer alpha).
    #[error("degenerate chain step: normalization constant is zero")]
    DegenerateStep,

    /// The highest requested eigenfunction is not negligible at the grid
    /// boundary, so the computed eigenvalues are unreliable.
    #[error("grid too small: eigenfunction tail amplitude {tail_ratio:.3e} at x_max exceeds 1e-6 of max")]
    GridTooSmall { tail_ratio: f64 },

    /// A seed specification violated one of its invariants.
    #[error("invalid seed spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
