use thiserror::Error;

/// Errors raised by the motive algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotiveError {
    #[error("genus must satisfy 2 <= g <= {max}, got {0}", max = crate::Genus::MAX)]
    InvalidGenus(u32),

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: u32, right: u32 },

    /// Both tensor factors carry a `λ^b h¹` class with `b > 0`.
    #[error("tensor product of two non-Tate motives is not supported")]
    NonTateTensor,

    #[error("Lefschetz exponent overflow")]
    ExponentOverflow,

    #[error("motive has a zero multiplicity at {0}")]
    ZeroMultiplicity(crate::BasisKey),

    #[error("duplicate basis key {0}")]
    DuplicateKey(crate::BasisKey),

    #[error("basis key {key} vanishes in genus {genus}")]
    LambdaOutOfRange { key: crate::BasisKey, genus: u32 },

    #[error("expected a Tate polynomial, found the class {0}")]
    NotTate(crate::BasisKey),
}
