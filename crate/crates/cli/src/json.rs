//! Canonical JSON forms.
//!
//! Big integers are written as decimal strings so that no consumer truncates
//! them to a double. Field order is fixed by the struct definitions and terms
//! are always in canonical order, so equal values serialize byte-identically.

use motivic_core::realization::{BiPolynomial, BlockReport, IntPolynomial};
use motivic_core::{BasisKey, Genus, MotiveClass, MotiveError};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("multiplicity {0:?} is not a decimal integer")]
    BadMultiplicity(String),
    #[error(transparent)]
    Motive(#[from] MotiveError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub lambda: u32,
    pub lefschetz: u32,
    pub mult: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MotiveJson {
    pub genus: u32,
    pub terms: Vec<TermJson>,
}

impl From<&MotiveClass> for MotiveJson {
    fn from(m: &MotiveClass) -> Self {
        MotiveJson {
            genus: m.genus().get(),
            terms: m
                .terms()
                .map(|(k, v)| TermJson {
                    lambda: k.lambda_index,
                    lefschetz: k.lefschetz_power,
                    mult: v.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<MotiveJson> for MotiveClass {
    type Error = JsonError;

    fn try_from(j: MotiveJson) -> Result<Self, Self::Error> {
        let genus = Genus::new(j.genus)?;
        let terms = j
            .terms
            .into_iter()
            .map(|t| {
                let mult = t
                    .mult
                    .parse::<BigUint>()
                    .map_err(|_| JsonError::BadMultiplicity(t.mult.clone()))?;
                Ok((BasisKey::new(t.lambda, t.lefschetz), mult))
            })
            .collect::<Result<Vec<_>, JsonError>>()?;
        Ok(MotiveClass::try_from_canonical_terms(genus, terms)?)
    }
}

/// `{"genus":g,"terms":[{"lambda":b,"lefschetz":c,"mult":"m"},...]}`
pub fn motive_to_json(m: &MotiveClass) -> String {
    serde_json::to_string(&MotiveJson::from(m)).expect("plain data serializes")
}

/// Reads the canonical form back. Rejects zero multiplicities, duplicate
/// keys and classes that vanish in the stated genus; term order is free.
pub fn motive_from_json(s: &str) -> Result<MotiveClass, JsonError> {
    let j: MotiveJson = serde_json::from_str(s)?;
    MotiveClass::try_from(j)
}

/// `[[p, q, "coeff"], ...]` in `(p, q)` order.
pub fn hodge_terms(h: &BiPolynomial) -> Vec<(u32, u32, String)> {
    h.terms().map(|((p, q), c)| (p, q, c.to_string())).collect()
}

/// `[[d, "coeff"], ...]` in increasing degree.
pub fn poly_terms(p: &IntPolynomial) -> Vec<(u32, String)> {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

#[derive(Debug, Serialize)]
pub struct BlockJson {
    pub sym_power: u32,
    pub twist: u32,
    pub hodge: Vec<(u32, u32, String)>,
}

#[derive(Debug, Serialize)]
pub struct BlockReportJson {
    pub genus: u32,
    pub blocks: Vec<BlockJson>,
    pub total: Vec<(u32, u32, String)>,
}

impl From<&BlockReport> for BlockReportJson {
    fn from(r: &BlockReport) -> Self {
        BlockReportJson {
            genus: r.genus.get(),
            blocks: r
                .blocks
                .iter()
                .map(|b| BlockJson {
                    sym_power: b.sym_power,
                    twist: b.twist,
                    hodge: hodge_terms(&b.hodge),
                })
                .collect(),
            total: hodge_terms(&r.total),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use motivic_core::formulas::moduli_motive_delbano;
    use motivic_core::realization::block_decomposition_report;

    fn g(n: u32) -> Genus {
        Genus::new(n).unwrap()
    }

    #[test]
    fn unit_form() {
        assert_eq!(
            motive_to_json(&MotiveClass::unit(g(2))),
            r#"{"genus":2,"terms":[{"lambda":0,"lefschetz":0,"mult":"1"}]}"#
        );
    }

    #[test]
    fn delbano_genus_two_form() {
        assert_eq!(
            motive_to_json(&moduli_motive_delbano(g(2))),
            concat!(
                r#"{"genus":2,"terms":["#,
                r#"{"lambda":0,"lefschetz":0,"mult":"1"},"#,
                r#"{"lambda":0,"lefschetz":1,"mult":"1"},"#,
                r#"{"lambda":0,"lefschetz":2,"mult":"1"},"#,
                r#"{"lambda":0,"lefschetz":3,"mult":"1"},"#,
                r#"{"lambda":1,"lefschetz":1,"mult":"1"}]}"#
            )
        );
    }

    #[test]
    fn reads_back_and_validates() {
        let m = moduli_motive_delbano(g(7));
        assert_eq!(motive_from_json(&motive_to_json(&m)).unwrap(), m);

        let big = r#"{"genus":3,"terms":[{"lambda":2,"lefschetz":1,"mult":"123456789012345678901234567890"}]}"#;
        assert_eq!(motive_to_json(&motive_from_json(big).unwrap()), big);

        for bad in [
            r#"{"genus":1,"terms":[]}"#,
            r#"{"genus":2,"terms":[{"lambda":5,"lefschetz":0,"mult":"1"}]}"#,
            r#"{"genus":2,"terms":[{"lambda":0,"lefschetz":0,"mult":"0"}]}"#,
            r#"{"genus":2,"terms":[{"lambda":0,"lefschetz":0,"mult":"-1"}]}"#,
            r#"{"genus":2,"terms":[{"lambda":0,"lefschetz":0,"mult":1}]}"#,
            r#"{"genus":2,"terms":[{"lambda":0,"lefschetz":0,"mult":"1"},{"lambda":0,"lefschetz":0,"mult":"1"}]}"#,
            r#"{"genus":2,"terms":[],"extra":0}"#,
        ] {
            assert!(motive_from_json(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn block_report_form() {
        let r = block_decomposition_report(g(2));
        let s = serde_json::to_string(&BlockReportJson::from(&r)).unwrap();
        assert_eq!(
            s,
            concat!(
                r#"{"genus":2,"blocks":["#,
                r#"{"sym_power":0,"twist":0,"hodge":[[0,0,"1"]]},"#,
                r#"{"sym_power":0,"twist":3,"hodge":[[3,3,"1"]]},"#,
                r#"{"sym_power":1,"twist":1,"hodge":[[1,1,"1"],[1,2,"2"],[2,1,"2"],[2,2,"1"]]}],"#,
                r#""total":[[0,0,"1"],[1,1,"1"],[1,2,"2"],[2,1,"2"],[2,2,"1"],[3,3,"1"]]}"#
            )
        );
    }
}
