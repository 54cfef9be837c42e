//! A small expression language for motives.
//!
//! ```text
//! expr   := term { "+" term } ;
//! term   := factor { "*" factor } ;
//! factor := atom [ "^" nat ] ;
//! atom   := "1" | "L" | "h1" | "lam" "(" nat ")" | "C" | "Sym" "(" nat ")"
//!         | "M" | "Mconj" | "(" expr ")" ;
//! nat    := decimal digits ;
//! ```
//!
//! `+` is the direct sum, `*` the tensor product and `^` a tensor power.
//! `M` is del Bano's formula for `h(M_L)`, `Mconj` the decomposition into
//! twisted symmetric powers, `C` the curve itself (same as `Sym(1)`).
//! The genus is not part of the language; it is supplied at evaluation.

mod eval;
mod lexer;
mod parser;
mod printer;

use alloc::boxed::Box;

pub use eval::{evaluate, EvalError};
pub use parser::{parse, parse_bytes, ParseError, MAX_DEPTH};
pub use printer::print;

/// Syntax tree of a motive expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MotiveExpr {
    Unit,
    /// `𝕃^n`. The parser only produces `Lefschetz(1)`; higher powers come
    /// out as `Power(Lefschetz(1), n)`.
    Lefschetz(u32),
    LambdaH1(u32),
    Curve,
    SymPower(u32),
    ModuliDelBano,
    ModuliConjectural,
    Sum(Box<MotiveExpr>, Box<MotiveExpr>),
    Product(Box<MotiveExpr>, Box<MotiveExpr>),
    Power(Box<MotiveExpr>, u32),
}

impl MotiveExpr {
    pub fn sum(a: MotiveExpr, b: MotiveExpr) -> Self {
        MotiveExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn product(a: MotiveExpr, b: MotiveExpr) -> Self {
        MotiveExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn power(base: MotiveExpr, exponent: u32) -> Self {
        MotiveExpr::Power(Box::new(base), exponent)
    }

    /// Height of the tree; a leaf has depth 1.
    pub fn depth(&self) -> usize {
        match self {
            MotiveExpr::Sum(a, b) | MotiveExpr::Product(a, b) => 1 + a.depth().max(b.depth()),
            MotiveExpr::Power(a, _) => 1 + a.depth(),
            _ => 1,
        }
    }
}

impl core::fmt::Display for MotiveExpr {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&print(self))
    }
}
