//! The finite generating-function identity, for `m ≥ 1`:
//!
//! ```text
//! Σ_{j=0}^{m-1} Σ_{c=0}^{j} (x^{j+c} + x^{3m-2j+c}) + Σ_{c=0}^{m} x^{m+c}
//!     = (1 + x + ⋯ + x^m)(1 + x² + ⋯ + x^{2m})
//! ```
//!
//! The right side is the closed form `(1-x^{m+1})/(1-x) · (1-x^{2m+2})/(1-x²)`
//! written as a product of finite geometric sums, so no division occurs.

use super::{IntPolynomial, RealizationError};

/// Left side, with the exponent of the second family raised by `far_shift`
/// (zero for the identity itself).
pub fn key_identity_lhs(m: u32, far_shift: u32) -> Result<IntPolynomial, RealizationError> {
    if m == 0 {
        return Err(RealizationError::IdentityIndexZero);
    }
    let first =
        (0..m).flat_map(|j| (0..=j).flat_map(move |c| [j + c, 3 * m - 2 * j + c + far_shift]));
    let last = (0..=m).map(|c| m + c);
    let lhs = IntPolynomial::from_terms(first.chain(last).map(|e| (e, 1.into())));
    Ok(lhs)
}

pub fn key_identity_rhs(m: u32) -> Result<IntPolynomial, RealizationError> {
    if m == 0 {
        return Err(RealizationError::IdentityIndexZero);
    }
    let unit_steps = IntPolynomial::from_terms((0..=m).map(|e| (e, 1.into())));
    let even_steps = IntPolynomial::from_terms((0..=m).map(|e| (2 * e, 1.into())));
    Ok(&unit_steps * &even_steps)
}

/// Exact equality of both sides.
pub fn verify_key_identity(m: u32) -> Result<bool, RealizationError> {
    Ok(key_identity_lhs(m, 0)? == key_identity_rhs(m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn m_one() {
        let expected = poly(&[1, 1, 1, 1]);
        assert_eq!(key_identity_lhs(1, 0).unwrap(), expected);
        assert_eq!(key_identity_rhs(1).unwrap(), expected);
        assert!(verify_key_identity(1).unwrap());
    }

    #[test]
    fn m_two() {
        // (1 + x + x^2)(1 + x^2 + x^4)
        let expected = poly(&[1, 1, 2, 1, 2, 1, 1]);
        assert_eq!(key_identity_lhs(2, 0).unwrap(), expected);
        assert_eq!(key_identity_rhs(2).unwrap(), expected);
    }

    #[test]
    fn degree_and_constant_term() {
        for m in 1..=40 {
            for side in [
                key_identity_lhs(m, 0).unwrap(),
                key_identity_rhs(m).unwrap(),
            ] {
                assert_eq!(side.degree(), Some(3 * m));
                assert_eq!(side.coefficient(0), 1.into());
            }
        }
    }

    #[test]
    fn holds_and_mutation_fails() {
        let failures: Vec<u32> = (1..=60)
            .filter(|&m| !verify_key_identity(m).unwrap())
            .collect();
        assert!(failures.is_empty(), "{failures:?}");
        for m in 1..=60 {
            assert_ne!(
                key_identity_lhs(m, 1).unwrap(),
                key_identity_rhs(m).unwrap()
            );
        }
    }

    #[test]
    fn zero_index_rejected() {
        assert_eq!(
            verify_key_identity(0),
            Err(RealizationError::IdentityIndexZero)
        );
        assert_eq!(
            key_identity_rhs(0),
            Err(RealizationError::IdentityIndexZero)
        );
    }
}
