use alloc::string::String;
use alloc::vec::Vec;

use super::{hodge_polynomial, BiPolynomial};
use crate::formulas::{decomposition_summands, sym_power_curve};
use crate::{Genus, MotiveClass};

/// One summand `h(C^(k)) ⊗ 𝕃^j` of the decomposition of `h(M_L)` with its
/// contribution to the Hodge diamond.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub sym_power: u32,
    pub twist: u32,
    pub motive: MotiveClass,
    pub hodge: BiPolynomial,
}

impl Block {
    /// The block written in the expression language, e.g. `Sym(1) * L`.
    pub fn label(&self) -> String {
        match self.twist {
            0 => alloc::format!("Sym({})", self.sym_power),
            1 => alloc::format!("Sym({}) * L", self.sym_power),
            j => alloc::format!("Sym({}) * L^{j}", self.sym_power),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    pub genus: Genus,
    pub blocks: Vec<Block>,
    /// Entrywise sum of the block Hodge polynomials.
    pub total: BiPolynomial,
}

/// Splits the Hodge diamond of `M_L` into the `2g − 1` pieces coming from the
/// twisted symmetric powers of the curve.
pub fn block_decomposition_report(genus: Genus) -> BlockReport {
    let blocks: Vec<Block> = decomposition_summands(genus, 0)
        .into_iter()
        .map(|s| {
            let motive = sym_power_curve(s.sym_power, genus)
                .twist(s.twist)
                .expect("twist stays in range");
            let hodge = hodge_polynomial(&motive);
            Block {
                sym_power: s.sym_power,
                twist: s.twist,
                motive,
                hodge,
            }
        })
        .collect();
    let mut total = BiPolynomial::zero();
    for b in &blocks {
        total += &b.hodge;
    }
    BlockReport {
        genus,
        blocks,
        total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::moduli_motive_delbano;
    use alloc::string::ToString;

    #[test]
    fn genus_two_blocks() {
        let g2 = Genus::new(2).unwrap();
        let report = block_decomposition_report(g2);
        let rendered: Vec<(String, String)> = report
            .blocks
            .iter()
            .map(|b| (b.label(), b.hodge.to_string()))
            .collect();
        assert_eq!(
            rendered,
            [
                ("Sym(0)".to_string(), "1".to_string()),
                ("Sym(0) * L^3".to_string(), "u^3*v^3".to_string()),
                (
                    "Sym(1) * L".to_string(),
                    "u*v + 2*u^2*v + 2*u*v^2 + u^2*v^2".to_string()
                ),
            ]
        );
        assert_eq!(
            report.total.to_string(),
            "1 + u*v + 2*u^2*v + 2*u*v^2 + u^2*v^2 + u^3*v^3"
        );
        assert_eq!(report.total, hodge_polynomial(&moduli_motive_delbano(g2)));
    }

    #[test]
    fn block_count() {
        for g in 2..=10 {
            let report = block_decomposition_report(Genus::new(g).unwrap());
            assert_eq!(report.blocks.len() as u32, 2 * g - 1);
        }
    }
}
