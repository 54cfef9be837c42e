use alloc::string::String;

use thiserror::Error;

use super::lexer::{Lexer, Token, TokenKind};
use super::MotiveExpr;

/// Maximum height of a parsed tree. Evaluation and printing recurse on the
/// tree, so deeper inputs are rejected up front.
pub const MAX_DEPTH: usize = 256;

/// A syntax error, located by its 1-based byte offset in the source. The end
/// of input sits at offset `len + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: expected {expected}, found {found}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

impl ParseError {
    pub(super) fn new(start: usize, expected: impl Into<String>, found: impl Into<String>) -> Self {
        ParseError {
            offset: start + 1,
            expected: expected.into(),
            found: found.into(),
        }
    }
}

const ATOM: &str = "an atom (1, L, h1, lam(n), C, Sym(n), M, Mconj or \"(\")";

struct Parser<'a> {
    lexer: Lexer<'a>,
    current: Token<'a>,
}

type Parsed = (MotiveExpr, usize);

impl<'a> Parser<'a> {
    fn new(src: &'a [u8]) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(src);
        let current = lexer.next_token()?;
        Ok(Parser { lexer, current })
    }

    fn bump(&mut self) -> Result<Token<'a>, ParseError> {
        let next = self.lexer.next_token()?;
        Ok(core::mem::replace(&mut self.current, next))
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError::new(self.current.start, expected, self.current.kind.describe())
    }

    fn expect(&mut self, kind: TokenKind<'static>, expected: &str) -> Result<(), ParseError> {
        if self.current.kind == kind {
            self.bump()?;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn nat(&mut self) -> Result<u32, ParseError> {
        match self.current.kind {
            TokenKind::Number(digits) => {
                let value = digits.parse::<u32>().map_err(|_| {
                    ParseError::new(
                        self.current.start,
                        "a natural number below 2^32",
                        alloc::format!("number {digits}"),
                    )
                })?;
                self.bump()?;
                Ok(value)
            }
            _ => Err(self.error("a natural number")),
        }
    }

    fn check_depth(&self, depth: usize, at: usize) -> Result<usize, ParseError> {
        if depth > MAX_DEPTH {
            Err(ParseError::new(
                at,
                alloc::format!("an expression at most {MAX_DEPTH} levels deep"),
                "deeper nesting",
            ))
        } else {
            Ok(depth)
        }
    }

    fn expr(&mut self, nesting: usize) -> Result<Parsed, ParseError> {
        let (mut lhs, mut depth) = self.term(nesting)?;
        while self.current.kind == TokenKind::Plus {
            let at = self.bump()?.start;
            let (rhs, rdepth) = self.term(nesting)?;
            depth = self.check_depth(1 + depth.max(rdepth), at)?;
            lhs = MotiveExpr::sum(lhs, rhs);
        }
        Ok((lhs, depth))
    }

    fn term(&mut self, nesting: usize) -> Result<Parsed, ParseError> {
        let (mut lhs, mut depth) = self.factor(nesting)?;
        while self.current.kind == TokenKind::Star {
            let at = self.bump()?.start;
            let (rhs, rdepth) = self.factor(nesting)?;
            depth = self.check_depth(1 + depth.max(rdepth), at)?;
            lhs = MotiveExpr::product(lhs, rhs);
        }
        Ok((lhs, depth))
    }

    fn factor(&mut self, nesting: usize) -> Result<Parsed, ParseError> {
        let (base, depth) = self.atom(nesting)?;
        if self.current.kind != TokenKind::Caret {
            return Ok((base, depth));
        }
        let at = self.bump()?.start;
        let exponent = self.nat()?;
        let depth = self.check_depth(depth + 1, at)?;
        Ok((MotiveExpr::power(base, exponent), depth))
    }

    fn atom(&mut self, nesting: usize) -> Result<Parsed, ParseError> {
        let tok = self.current;
        let expr = match tok.kind {
            TokenKind::Number("1") => MotiveExpr::Unit,
            TokenKind::Ident("L") => MotiveExpr::Lefschetz(1),
            TokenKind::Ident("h1") => MotiveExpr::LambdaH1(1),
            TokenKind::Ident("C") => MotiveExpr::Curve,
            TokenKind::Ident("M") => MotiveExpr::ModuliDelBano,
            TokenKind::Ident("Mconj") => MotiveExpr::ModuliConjectural,
            TokenKind::Ident(name @ ("lam" | "Sym")) => {
                self.bump()?;
                self.expect(TokenKind::LParen, "\"(\"")?;
                let n = self.nat()?;
                self.expect(TokenKind::RParen, "\")\"")?;
                let expr = if name == "lam" {
                    MotiveExpr::LambdaH1(n)
                } else {
                    MotiveExpr::SymPower(n)
                };
                return Ok((expr, 1));
            }
            TokenKind::LParen => {
                // Each open parenthesis costs a stack frame even when it
                // wraps a single atom.
                self.check_depth(nesting + 1, tok.start)?;
                self.bump()?;
                let inner = self.expr(nesting + 1)?;
                self.expect(TokenKind::RParen, "\")\"")?;
                return Ok(inner);
            }
            _ => return Err(self.error(ATOM)),
        };
        self.bump()?;
        Ok((expr, 1))
    }
}

/// Parses a motive expression.
pub fn parse(source: &str) -> Result<MotiveExpr, ParseError> {
    parse_bytes(source.as_bytes())
}

/// Parses raw bytes; anything outside the ASCII grammar is a [`ParseError`].
pub fn parse_bytes(source: &[u8]) -> Result<MotiveExpr, ParseError> {
    let mut parser = Parser::new(source)?;
    let (expr, _) = parser.expr(0)?;
    if parser.current.kind != TokenKind::Eof {
        let expected = match parser.current.kind {
            TokenKind::RParen => "end of input (unbalanced \")\")",
            _ => "\"+\", \"*\", \"^\" or end of input",
        };
        return Err(parser.error(expected));
    }
    Ok(expr)
}
