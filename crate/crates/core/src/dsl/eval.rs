use alloc::string::String;

use thiserror::Error;

use super::{print, MotiveExpr};
use crate::formulas::{moduli_motive_conjectural, moduli_motive_delbano, sym_power_curve};
use crate::{Genus, MotiveClass, MotiveError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("tensor product of two non-Tate motives in `{expr}`")]
    NonTateTensor { expr: String },

    #[error(transparent)]
    Motive(#[from] MotiveError),
}

/// Evaluates `e` in genus `genus`.
pub fn evaluate(e: &MotiveExpr, genus: Genus) -> Result<MotiveClass, EvalError> {
    let surface = |err: MotiveError| match err {
        MotiveError::NonTateTensor => EvalError::NonTateTensor { expr: print(e) },
        other => EvalError::Motive(other),
    };
    Ok(match e {
        MotiveExpr::Unit => MotiveClass::unit(genus),
        MotiveExpr::Lefschetz(n) => MotiveClass::lefschetz(genus, *n),
        MotiveExpr::LambdaH1(k) => MotiveClass::lambda_h1(genus, *k),
        MotiveExpr::Curve => sym_power_curve(1, genus),
        MotiveExpr::SymPower(n) => sym_power_curve(*n, genus),
        MotiveExpr::ModuliDelBano => moduli_motive_delbano(genus),
        MotiveExpr::ModuliConjectural => moduli_motive_conjectural(genus),
        MotiveExpr::Sum(a, b) => evaluate(a, genus)?.direct_sum(&evaluate(b, genus)?)?,
        MotiveExpr::Product(a, b) => evaluate(a, genus)?
            .tensor(&evaluate(b, genus)?)
            .map_err(surface)?,
        MotiveExpr::Power(base, n) => evaluate(base, genus)?.tensor_power(*n).map_err(surface)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    fn g(n: u32) -> Genus {
        Genus::new(n).unwrap()
    }

    fn eval(src: &str, genus: u32) -> Result<MotiveClass, EvalError> {
        evaluate(&parse(src).unwrap(), g(genus))
    }

    #[test]
    fn atoms_delegate() {
        assert_eq!(eval("M", 2).unwrap(), moduli_motive_delbano(g(2)));
        assert_eq!(eval("C", 3).unwrap(), eval("Sym(1)", 3).unwrap());
        assert_eq!(eval("Sym(0)", 2).unwrap(), MotiveClass::unit(g(2)));
        assert_eq!(eval("lam(9)", 4).unwrap(), MotiveClass::zero(g(4)));
    }

    #[test]
    fn power_zero_is_unit() {
        assert_eq!(eval("h1^0", 2).unwrap(), MotiveClass::unit(g(2)));
        assert_eq!(eval("M^0", 5).unwrap(), MotiveClass::unit(g(5)));
        assert_eq!(eval("L^3", 2).unwrap(), MotiveClass::lefschetz(g(2), 3));
    }

    #[test]
    fn non_tate_errors_name_the_subexpression() {
        assert_eq!(
            eval("h1 * h1", 2),
            Err(EvalError::NonTateTensor {
                expr: "h1 * h1".into()
            })
        );
        assert_eq!(
            eval("1 + L * (C * (1 + Sym(2)))", 2),
            Err(EvalError::NonTateTensor {
                expr: "C * (1 + Sym(2))".into()
            })
        );
        assert_eq!(
            eval("L + C^2", 3),
            Err(EvalError::NonTateTensor { expr: "C^2".into() })
        );
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(
            eval("L^4294967295 * L", 2),
            Err(EvalError::Motive(MotiveError::ExponentOverflow))
        );
    }

    #[test]
    fn decomposition_through_the_language() {
        for genus in 2..=8 {
            assert_eq!(eval("Mconj", genus).unwrap(), eval("M", genus).unwrap());
        }
        // g = 2 spelled out by hand: h(C^(0)) ⊗ (1 + L^3) + h(C^(1)) ⊗ L.
        assert_eq!(
            eval("Sym(0) * (1 + L^3) + C * L", 2).unwrap(),
            eval("M", 2).unwrap()
        );
    }
}
