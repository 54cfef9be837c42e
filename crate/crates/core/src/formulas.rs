//! The three theorem-level motives and the λ-coefficient comparison that
//! proves the symmetric-power decomposition of `h(M_L)`.
//!
//! * [`sym_power_curve`]: `h(C^(n)) = ⊕_{a+b+c=n} 1^{⊗a} ⊗ λ^b h¹ ⊗ 𝕃^c`.
//! * [`moduli_motive_delbano`]:
//!   `h(M_L) = ⊕_{k=0}^{g} λ^k h¹ ⊗ (1 ⊕ ⋯ ⊕ 𝕃^{g-k-1}) ⊗ (1 ⊕ 𝕃² ⊕ ⋯ ⊕ 𝕃^{2g-2k-2}) ⊗ 𝕃^k`.
//! * [`moduli_motive_conjectural`]:
//!   `⊕_{k=0}^{g-2} h(C^(k)) ⊗ (𝕃^k ⊕ 𝕃^{3g-3-2k}) ⊕ h(C^(g-1)) ⊗ 𝕃^{g-1}`.
//!
//! Geometric factors with an upper bound below zero are empty sums and
//! vanish, which kills the `k = g` summand of del Bano's formula.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::motive::{BasisKey, Genus, MotiveClass, TatePolynomial};

// Every helper below combines values of one genus whose exponents stay under
// 6g, so the fallible motive operations cannot fail here.
const SAME_GENUS: &str = "operands share the genus";

fn add_to(acc: &mut MotiveClass, b: &MotiveClass) {
    acc.accumulate(b).expect(SAME_GENUS)
}

fn times(a: &MotiveClass, b: &MotiveClass) -> MotiveClass {
    a.tensor(b).expect(SAME_GENUS)
}

fn exponent(e: i64) -> u32 {
    u32::try_from(e).expect("exponent is nonnegative on its summation range")
}

/// `⊕ 𝕃^e` over signed exponents that are known to be nonnegative.
fn lefschetz_sum(genus: Genus, exponents: impl IntoIterator<Item = i64>) -> TatePolynomial {
    TatePolynomial::from_exponents(genus, exponents.into_iter().map(exponent))
}

/// Motive of the `n`-th symmetric power of the curve.
///
/// The factor `1^{⊗a}` is trivial, so each pair `(b, c)` with `b + c ≤ n`
/// contributes `λ^b h¹ ⊗ 𝕃^c` exactly once (and nothing when `b > 2g`).
pub fn sym_power_curve(n: u32, genus: Genus) -> MotiveClass {
    let max_b = n.min(genus.h1_rank());
    MotiveClass::from_terms(
        genus,
        (0..=max_b).flat_map(|b| (0..=n - b).map(move |c| (BasisKey::new(b, c), BigUint::one()))),
    )
}

/// del Bano's formula for `h(M_L)`.
pub fn moduli_motive_delbano(genus: Genus) -> MotiveClass {
    let g = i64::from(genus.get());
    let mut out = MotiveClass::zero(genus);
    for k in 0..=genus.get() {
        let ki = i64::from(k);
        let unit_steps = TatePolynomial::geometric(genus, 1, g - ki - 1).expect(SAME_GENUS);
        let even_steps = TatePolynomial::geometric(genus, 2, 2 * g - 2 * ki - 2).expect(SAME_GENUS);
        let term = times(
            &MotiveClass::lambda_h1(genus, k),
            &times(unit_steps.as_motive(), even_steps.as_motive()),
        )
        .twist(k)
        .expect(SAME_GENUS);
        add_to(&mut out, &term);
    }
    out
}

/// One summand `h(C^(k)) ⊗ 𝕃^twist` of the symmetric-power decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Summand {
    pub sym_power: u32,
    pub twist: u32,
}

/// Summands of the symmetric-power decomposition in display order:
/// `(k, k)` and `(k, 3g-3-2k + far_shift)` for `k = 0..=g-2`, then
/// `(g-1, g-1)`.
///
/// `far_shift` is zero for the actual theorem. A nonzero shift produces a
/// deliberately wrong formula used to check that the verification is not
/// vacuous.
pub fn decomposition_summands(genus: Genus, far_shift: u32) -> Vec<Summand> {
    let g = genus.get();
    let mut out = Vec::with_capacity(2 * g as usize - 1);
    for k in 0..=g - 2 {
        out.push(Summand {
            sym_power: k,
            twist: k,
        });
        out.push(Summand {
            sym_power: k,
            twist: 3 * g - 3 - 2 * k + far_shift,
        });
    }
    out.push(Summand {
        sym_power: g - 1,
        twist: g - 1,
    });
    out
}

/// Evaluates the symmetric-power decomposition with the far twist shifted by
/// `far_shift` (see [`decomposition_summands`]).
pub fn symmetric_power_decomposition(genus: Genus, far_shift: u32) -> MotiveClass {
    let mut out = MotiveClass::zero(genus);
    for s in decomposition_summands(genus, far_shift) {
        let block = sym_power_curve(s.sym_power, genus)
            .twist(s.twist)
            .expect(SAME_GENUS);
        add_to(&mut out, &block);
    }
    out
}

/// `h(M_L)` as a sum of twisted symmetric powers of the curve.
pub fn moduli_motive_conjectural(genus: Genus) -> MotiveClass {
    symmetric_power_decomposition(genus, 0)
}

/// The Lefschetz polynomial multiplying `λ^i h¹` in `m`.
pub fn lambda_coefficient(m: &MotiveClass, i: u32) -> TatePolynomial {
    let terms = m
        .terms()
        .filter(|(k, _)| k.lambda_index == i)
        .map(|(k, mult)| (BasisKey::lefschetz(k.lefschetz_power), mult.clone()));
    TatePolynomial::try_from(MotiveClass::from_terms(m.genus(), terms))
        .expect("only Lefschetz classes were kept")
}

/// Inverse of [`lambda_coefficient`]: `⊕_i λ^i h¹ ⊗ coefficient_i`.
pub fn reassemble<'a>(
    genus: Genus,
    coefficients: impl IntoIterator<Item = (u32, &'a TatePolynomial)>,
) -> MotiveClass {
    let mut out = MotiveClass::zero(genus);
    for (i, c) in coefficients {
        add_to(
            &mut out,
            &times(&MotiveClass::lambda_h1(genus, i), c.as_motive()),
        );
    }
    out
}

/// A named intermediate value in the coefficient comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub label: &'static str,
    pub value: TatePolynomial,
}

/// The `λ^i`-coefficient comparison, one [`ChainStep`] per rewriting of the
/// proof, from the symmetric-power side down to del Bano's side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofChain {
    pub genus: Genus,
    pub lambda_index: u32,
    pub steps: Vec<ChainStep>,
}

impl ProofChain {
    pub fn new(genus: Genus, i: u32) -> Self {
        Self::from_sides(
            i,
            &moduli_motive_conjectural(genus),
            &moduli_motive_delbano(genus),
        )
    }

    /// Same as [`ProofChain::new`] with both sides of the theorem already
    /// evaluated, so a sweep over `i` builds them once.
    pub fn from_sides(i: u32, conjectural: &MotiveClass, delbano: &MotiveClass) -> Self {
        let genus = conjectural.genus();
        debug_assert_eq!(genus, delbano.genus());
        let gi = i64::from(genus.get());
        let ii = i64::from(i);
        let shift_by_i = |t: TatePolynomial| {
            TatePolynomial::try_from(t.as_motive().twist(i).expect(SAME_GENUS))
                .expect("twisting keeps Tate classes")
        };

        let direct = lambda_coefficient(conjectural, i);

        // Only h(C^(k)) with k >= i contains λ^i, through the pairs
        // a + c = k - i; the last block contributes a + c = g - 1 - i.
        let mut expanded = MotiveClass::zero(genus);
        let lam = MotiveClass::lambda_h1(genus, i);
        for k in ii..=gi - 2 {
            let twists = lefschetz_sum(genus, [k, 3 * gi - 3 - 2 * k]);
            for a in 0..=k - ii {
                let c = k - ii - a;
                let piece = lam.twist(exponent(c)).expect(SAME_GENUS);
                add_to(&mut expanded, &times(&piece, twists.as_motive()));
            }
        }
        for a in 0..=gi - 1 - ii {
            let c = gi - 1 - ii - a;
            let piece = lam.twist(exponent(c)).expect(SAME_GENUS);
            add_to(
                &mut expanded,
                &piece.twist(genus.get() - 1).expect(SAME_GENUS),
            );
        }
        let expanded = lambda_coefficient(&expanded, i);

        let mut collected = Vec::new();
        for k in ii..=gi - 2 {
            for c in 0..=k - ii {
                collected.push(k + c);
                collected.push(3 * gi - 3 - 2 * k + c);
            }
        }
        collected.extend((0..=gi - 1 - ii).map(|c| gi - 1 + c));
        let collected = lefschetz_sum(genus, collected);

        let mut factored = Vec::new();
        for k in ii..=gi - 2 {
            for c in 0..=k - ii {
                factored.push(k - ii + c);
                factored.push(3 * gi - 3 - 3 * ii - 2 * (k - ii) + c);
            }
        }
        factored.extend((0..=gi - 1 - ii).map(|c| gi - 1 - ii + c));
        let factored = shift_by_i(lefschetz_sum(genus, factored));

        let mut reindexed = Vec::new();
        for j in 0..=gi - 1 - ii - 1 {
            for c in 0..=j {
                reindexed.push(j + c);
                reindexed.push(3 * gi - 3 - 3 * ii - 2 * j + c);
            }
        }
        reindexed.extend((0..=gi - 1 - ii).map(|c| gi - 1 - ii + c));
        let reindexed = shift_by_i(lefschetz_sum(genus, reindexed));

        let unit_steps = TatePolynomial::geometric(genus, 1, gi - 1 - ii).expect(SAME_GENUS);
        let even_steps =
            TatePolynomial::geometric(genus, 2, 2 * gi - 2 - 2 * ii).expect(SAME_GENUS);
        let product = shift_by_i(
            TatePolynomial::try_from(times(unit_steps.as_motive(), even_steps.as_motive()))
                .expect("product of Tate polynomials"),
        );

        let delbano = lambda_coefficient(delbano, i);

        let steps = [
            ("symmetric-power side", direct),
            ("expanded symmetric powers", expanded),
            ("collected Lefschetz powers", collected),
            ("factored out L^i", factored),
            ("reindexed j = k - i", reindexed),
            ("product of geometric sums", product),
            ("del Bano side", delbano),
        ]
        .into_iter()
        .map(|(label, value)| ChainStep { label, value })
        .collect();

        ProofChain {
            genus,
            lambda_index: i,
            steps,
        }
    }

    /// First pair of adjacent steps that disagree.
    pub fn first_break(&self) -> Option<(&ChainStep, &ChainStep)> {
        self.steps
            .windows(2)
            .find(|w| w[0].value != w[1].value)
            .map(|w| (&w[0], &w[1]))
    }

    pub fn holds(&self) -> bool {
        self.first_break().is_none()
    }
}

/// Checks every rewriting step of the `λ^i` comparison at concrete `(g, i)`.
pub fn proof_chain_check(genus: Genus, i: u32) -> bool {
    ProofChain::new(genus, i).holds()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    fn g(n: u32) -> Genus {
        Genus::new(n).unwrap()
    }

    fn keys(pairs: &[(u32, u32)], genus: u32) -> MotiveClass {
        MotiveClass::from_terms(
            g(genus),
            pairs
                .iter()
                .map(|&(b, c)| (BasisKey::new(b, c), BigUint::one())),
        )
    }

    /// Enumerates all triples a + b + c = n.
    fn sym_power_by_triples(n: u32, genus: Genus) -> MotiveClass {
        let mut terms = Vec::new();
        for a in 0..=n {
            for b in 0..=n - a {
                let c = n - a - b;
                terms.push((BasisKey::new(b, c), BigUint::one()));
            }
        }
        MotiveClass::from_terms(genus, terms)
    }

    /// Literal expansion of del Bano's sum with plain nested loops.
    fn delbano_by_loops(genus: Genus) -> MotiveClass {
        let g = genus.get() as i64;
        let mut counts: BTreeMap<BasisKey, u64> = BTreeMap::new();
        for k in 0..=g {
            for e1 in 0..=(g - k - 1) {
                let mut e2 = 0;
                while e2 <= 2 * g - 2 * k - 2 {
                    let key = BasisKey::new(k as u32, (e1 + e2 + k) as u32);
                    *counts.entry(key).or_default() += 1;
                    e2 += 2;
                }
            }
        }
        MotiveClass::from_terms(
            genus,
            counts.into_iter().map(|(k, v)| (k, BigUint::from(v))),
        )
    }

    #[test]
    fn sym_power_examples() {
        assert_eq!(sym_power_curve(1, g(2)), keys(&[(0, 0), (1, 0), (0, 1)], 2));
        assert_eq!(sym_power_curve(0, g(3)), MotiveClass::unit(g(3)));
        assert_eq!(sym_power_curve(0, g(2)), MotiveClass::unit(g(2)));
        assert_eq!(
            sym_power_curve(2, g(2)),
            keys(&[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)], 2)
        );
    }

    #[test]
    fn sym_power_matches_triple_enumeration() {
        for genus in 2..=6 {
            for n in 0..=3 * genus {
                assert_eq!(
                    sym_power_curve(n, g(genus)),
                    sym_power_by_triples(n, g(genus)),
                    "n={n} g={genus}"
                );
            }
        }
    }

    #[test]
    fn delbano_genus_two() {
        let expected = keys(&[(0, 0), (0, 1), (1, 1), (0, 2), (0, 3)], 2);
        assert_eq!(moduli_motive_delbano(g(2)), expected);
        assert_eq!(moduli_motive_conjectural(g(2)), expected);
    }

    #[test]
    fn delbano_matches_loops() {
        for genus in 2..=12 {
            assert_eq!(moduli_motive_delbano(g(genus)), delbano_by_loops(g(genus)));
        }
    }

    #[test]
    fn delbano_top_lambda_term_vanishes() {
        for genus in 2..=10 {
            let m = moduli_motive_delbano(g(genus));
            assert!(lambda_coefficient(&m, genus).as_motive().is_zero());
            assert!(m.terms().all(|(k, _)| k.lambda_index < genus));
        }
    }

    #[test]
    fn delbano_lambda_zero_coefficient() {
        for genus in 2..=10u32 {
            let gi = i64::from(genus);
            let expected = times(
                TatePolynomial::geometric(g(genus), 1, gi - 1)
                    .unwrap()
                    .as_motive(),
                TatePolynomial::geometric(g(genus), 2, 2 * gi - 2)
                    .unwrap()
                    .as_motive(),
            );
            assert_eq!(
                lambda_coefficient(&moduli_motive_delbano(g(genus)), 0).as_motive(),
                &expected
            );
        }
    }

    #[test]
    fn lambda_coefficient_examples() {
        let m = moduli_motive_delbano(g(2));
        assert_eq!(
            lambda_coefficient(&m, 1).as_motive(),
            &MotiveClass::lefschetz(g(2), 1)
        );
        assert_eq!(
            lambda_coefficient(&MotiveClass::unit(g(4)), 0).as_motive(),
            &MotiveClass::unit(g(4))
        );
        assert!(lambda_coefficient(&sym_power_curve(20, g(2)), 5)
            .as_motive()
            .is_zero());
    }

    #[test]
    fn reassemble_inverts_lambda_coefficient() {
        for genus in 2..=6 {
            for m in [
                moduli_motive_delbano(g(genus)),
                sym_power_curve(2 * genus + 1, g(genus)),
            ] {
                let coeffs: Vec<_> = (0..=2 * genus)
                    .map(|i| (i, lambda_coefficient(&m, i)))
                    .collect();
                assert_eq!(reassemble(g(genus), coeffs.iter().map(|(i, c)| (*i, c))), m);
            }
        }
    }

    #[test]
    fn summand_layout() {
        let s = decomposition_summands(g(2), 0);
        assert_eq!(
            s,
            [
                Summand {
                    sym_power: 0,
                    twist: 0
                },
                Summand {
                    sym_power: 0,
                    twist: 3
                },
                Summand {
                    sym_power: 1,
                    twist: 1
                },
            ]
        );
        for genus in 2..=20 {
            assert_eq!(
                decomposition_summands(g(genus), 0).len() as u32,
                2 * genus - 1
            );
        }
    }

    #[test]
    fn main_identity_small_genus() {
        for genus in 2..=12 {
            assert_eq!(
                moduli_motive_conjectural(g(genus)),
                moduli_motive_delbano(g(genus)),
                "g={genus}"
            );
        }
    }

    #[test]
    fn shifted_far_twist_breaks_identity() {
        for genus in 2..=12 {
            assert_ne!(
                symmetric_power_decomposition(g(genus), 1),
                moduli_motive_delbano(g(genus))
            );
        }
    }

    #[test]
    fn proof_chain_genus_two() {
        let c0 = ProofChain::new(g(2), 0);
        assert!(c0.holds());
        assert_eq!(
            c0.steps[0].value.as_motive(),
            &keys(&[(0, 0), (0, 1), (0, 2), (0, 3)], 2)
        );
        let c1 = ProofChain::new(g(2), 1);
        assert!(c1.holds());
        assert_eq!(
            c1.steps[0].value.as_motive(),
            &MotiveClass::lefschetz(g(2), 1)
        );
        assert_eq!(c1.steps.len(), 7);
    }

    #[test]
    fn proof_chain_beyond_genus_is_zero() {
        // Above i = g every step is the empty sum.
        for genus in 2..=6 {
            for i in genus..=2 * genus + 1 {
                let chain = ProofChain::new(g(genus), i);
                assert!(chain.holds());
                assert!(chain.steps.iter().all(|s| s.value.as_motive().is_zero()));
            }
        }
    }
}
