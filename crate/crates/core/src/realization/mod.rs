//! Betti and Hodge realizations of motives, plus the polynomial checks that
//! back up the decomposition of `h(M_L)`.
//!
//! Realization rules on the basis:
//!
//! * Poincaré: `λ^b h¹ ⊗ 𝕃^c ↦ C(2g, b) · t^{b + 2c}`
//! * Hodge: `λ^b h¹ ⊗ 𝕃^c ↦ (Σ_{p+q=b} C(g, p) C(g, q) u^p v^q) · (uv)^c`

mod blocks;
mod identity;
mod oracle;
mod poly;

use alloc::string::String;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

pub use blocks::{block_decomposition_report, Block, BlockReport};
pub use identity::{key_identity_lhs, key_identity_rhs, verify_key_identity};
pub use oracle::{atiyah_bott_oracle, macdonald_oracle};
pub use poly::{binomial, BiPolynomial, DisplayPoly, IntPolynomial, PolyError};

use crate::MotiveClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("the generating-function identity is stated for m >= 1")]
    IdentityIndexZero,

    #[error(transparent)]
    Poly(#[from] PolyError),

    /// The closed form is a polynomial, so this means an arithmetic bug.
    #[error("closed-form division left the remainder {0}")]
    NonzeroRemainder(String),
}

pub fn poincare_polynomial(m: &MotiveClass) -> IntPolynomial {
    let rank = m.genus().h1_rank();
    IntPolynomial::from_terms(m.terms().map(|(key, mult)| {
        let coeff = binomial(rank, key.lambda_index) * mult;
        (
            key.lambda_index + 2 * key.lefschetz_power,
            BigInt::from(coeff),
        )
    }))
}

/// Hodge numbers of `λ^b h¹(C)`: `h¹` splits as `H^{1,0} ⊕ H^{0,1}`, each
/// of rank `g`, so `h^{p,b-p} = C(g,p)·C(g,b-p)`.
fn lambda_hodge(g: u32, b: u32) -> impl Iterator<Item = (u32, u32, BigUint)> {
    (b.saturating_sub(g)..=b.min(g)).map(move |p| {
        let q = b - p;
        (p, q, binomial(g, p) * binomial(g, q))
    })
}

pub fn hodge_polynomial(m: &MotiveClass) -> BiPolynomial {
    let g = m.genus().get();
    BiPolynomial::from_terms(m.terms().flat_map(|(key, mult)| {
        let c = key.lefschetz_power;
        lambda_hodge(g, key.lambda_index)
            .map(move |(p, q, n)| ((p + c, q + c), BigInt::from(n * mult)))
    }))
}
