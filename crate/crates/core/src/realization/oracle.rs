//! Classical closed forms used as independent checks. Neither function
//! touches the motive types: both work on raw polynomial expansions.

use alloc::vec::Vec;

use super::{IntPolynomial, RealizationError};
use crate::Genus;

/// Poincaré polynomial of the moduli space of stable rank-2 bundles of odd
/// degree with fixed determinant (Atiyah–Bott, Newstead):
///
/// `((1 + t³)^{2g} − t^{2g} (1 + t)^{2g}) / ((1 − t²)(1 − t⁴))`
///
/// computed by exact long division. A nonzero remainder is reported as an
/// error rather than silently discarded.
pub fn atiyah_bott_oracle(genus: Genus) -> Result<IntPolynomial, RealizationError> {
    let rank = genus.h1_rank();
    let one_plus_t3 = IntPolynomial::from_coeffs([1, 0, 0, 1]);
    let one_plus_t = IntPolynomial::from_coeffs([1, 1]);
    let numerator = one_plus_t3.pow(rank) - IntPolynomial::monomial(1, rank) * one_plus_t.pow(rank);
    let denominator =
        IntPolynomial::from_coeffs([1, 0, -1]) * IntPolynomial::from_coeffs([1, 0, 0, 0, -1]);
    let (quotient, remainder) = numerator.div_rem(&denominator)?;
    if !remainder.is_zero() {
        return Err(RealizationError::NonzeroRemainder(alloc::format!(
            "{}",
            remainder.display('t')
        )));
    }
    Ok(quotient)
}

/// Coefficient of `x^n` in Macdonald's generating function for the Poincaré
/// polynomials of the symmetric powers of a genus-`g` curve:
///
/// `(1 + t x)^{2g} / ((1 − x)(1 − t² x))`
///
/// Each factor is expanded as a power series in `x` truncated at order `n`.
pub fn macdonald_oracle(n: u32, genus: Genus) -> IntPolynomial {
    let len = n as usize + 1;
    let truncated_mul = |a: &[IntPolynomial], b: &[IntPolynomial]| -> Vec<IntPolynomial> {
        let mut out = alloc::vec![IntPolynomial::zero(); len];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(len - i) {
                out[i + j] = &out[i + j] + &(ai * bj);
            }
        }
        out
    };

    // (1 + t x), applied 2g times.
    let mut one_plus_tx = alloc::vec![IntPolynomial::zero(); len];
    one_plus_tx[0] = IntPolynomial::one();
    if len > 1 {
        one_plus_tx[1] = IntPolynomial::monomial(1, 1);
    }
    let mut numerator = alloc::vec![IntPolynomial::zero(); len];
    numerator[0] = IntPolynomial::one();
    for _ in 0..genus.h1_rank() {
        numerator = truncated_mul(&numerator, &one_plus_tx);
    }

    // 1/(1 - x) = Σ x^a and 1/(1 - t² x) = Σ t^{2c} x^c.
    let geometric: Vec<IntPolynomial> = (0..len).map(|_| IntPolynomial::one()).collect();
    let twisted: Vec<IntPolynomial> = (0..len as u32)
        .map(|c| IntPolynomial::monomial(1, 2 * c))
        .collect();

    let series = truncated_mul(&truncated_mul(&numerator, &geometric), &twisted);
    series.into_iter().nth(n as usize).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32) -> Genus {
        Genus::new(n).unwrap()
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn atiyah_bott_genus_two() {
        assert_eq!(
            atiyah_bott_oracle(g(2)).unwrap(),
            poly(&[1, 0, 1, 4, 1, 0, 1])
        );
    }

    #[test]
    fn atiyah_bott_degree_and_euler_number() {
        for genus in 2..=15 {
            let p = atiyah_bott_oracle(g(genus)).unwrap();
            assert_eq!(p.degree(), Some(6 * genus - 6));
            assert_eq!(p.coefficient(0), 1.into());
            assert_eq!(p.coefficient(2), 1.into());
        }
    }

    #[test]
    fn macdonald_small() {
        assert_eq!(macdonald_oracle(0, g(2)), IntPolynomial::one());
        assert_eq!(macdonald_oracle(1, g(2)), poly(&[1, 4, 1]));
        // C^(2) of a genus-2 curve: b_0 = 1, b_1 = 4, b_2 = 7, b_3 = 4, b_4 = 1.
        assert_eq!(macdonald_oracle(2, g(2)), poly(&[1, 4, 7, 4, 1]));
    }

    #[test]
    fn macdonald_large_n_is_projective_bundle() {
        // For n > 2g - 2, C^(n) is a P^{n-g} bundle over the Jacobian.
        for genus in 2..=5u32 {
            let n = 2 * genus + 1;
            let jac = IntPolynomial::from_coeffs([1, 1]).pow(2 * genus);
            let fibre = IntPolynomial::from_terms((0..=n - genus).map(|e| (2 * e, 1.into())));
            assert_eq!(macdonald_oracle(n, g(genus)), jac * fibre);
        }
    }
}
