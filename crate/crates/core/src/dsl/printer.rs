use alloc::string::String;
use core::fmt::Write;

use super::MotiveExpr;

// Binding strength of the printed form; higher binds tighter.
const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const POWER: u8 = 3;
const ATOM: u8 = 4;

fn strength(e: &MotiveExpr) -> u8 {
    match e {
        MotiveExpr::Sum(..) => SUM,
        MotiveExpr::Product(..) => PRODUCT,
        MotiveExpr::Power(..) => POWER,
        MotiveExpr::Lefschetz(n) if *n != 1 => POWER,
        _ => ATOM,
    }
}

fn write_expr(out: &mut String, e: &MotiveExpr, min: u8) {
    if strength(e) < min {
        out.push('(');
        write_expr(out, e, SUM);
        out.push(')');
        return;
    }
    match e {
        MotiveExpr::Unit => out.push('1'),
        MotiveExpr::Lefschetz(1) => out.push('L'),
        MotiveExpr::Lefschetz(n) => {
            let _ = write!(out, "L^{n}");
        }
        MotiveExpr::LambdaH1(1) => out.push_str("h1"),
        MotiveExpr::LambdaH1(k) => {
            let _ = write!(out, "lam({k})");
        }
        MotiveExpr::Curve => out.push('C'),
        MotiveExpr::SymPower(n) => {
            let _ = write!(out, "Sym({n})");
        }
        MotiveExpr::ModuliDelBano => out.push('M'),
        MotiveExpr::ModuliConjectural => out.push_str("Mconj"),
        // Both operators associate to the left, so only a right operand of
        // the same strength needs parentheses.
        MotiveExpr::Sum(a, b) => {
            write_expr(out, a, SUM);
            out.push_str(" + ");
            write_expr(out, b, PRODUCT);
        }
        MotiveExpr::Product(a, b) => {
            write_expr(out, a, PRODUCT);
            out.push_str(" * ");
            write_expr(out, b, POWER);
        }
        MotiveExpr::Power(base, n) => {
            write_expr(out, base, ATOM);
            let _ = write!(out, "^{n}");
        }
    }
}

/// Canonical text with the fewest parentheses that reparse to the same tree.
pub fn print(e: &MotiveExpr) -> String {
    let mut out = String::new();
    write_expr(&mut out, e, SUM);
    out
}
