use super::parser::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum TokenKind<'a> {
    Plus,
    Star,
    Caret,
    LParen,
    RParen,
    Number(&'a str),
    Ident(&'a str),
    Eof,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) struct Token<'a> {
    pub kind: TokenKind<'a>,
    /// 0-based byte offset of the first byte.
    pub start: usize,
}

impl TokenKind<'_> {
    pub(super) fn describe(&self) -> alloc::string::String {
        use alloc::format;
        match self {
            TokenKind::Plus => "\"+\"".into(),
            TokenKind::Star => "\"*\"".into(),
            TokenKind::Caret => "\"^\"".into(),
            TokenKind::LParen => "\"(\"".into(),
            TokenKind::RParen => "\")\"".into(),
            TokenKind::Number(s) => format!("number {s}"),
            TokenKind::Ident(s) => format!("identifier {s}"),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

pub(super) struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    pub fn new(src: &'a [u8]) -> Self {
        Lexer { src, pos: 0 }
    }

    fn slice(&self, start: usize) -> &'a str {
        // Only ASCII bytes are ever consumed into a slice.
        core::str::from_utf8(&self.src[start..self.pos]).expect("ASCII token")
    }

    pub fn next_token(&mut self) -> Result<Token<'a>, ParseError> {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&byte) = self.src.get(start) else {
            return Ok(Token {
                kind: TokenKind::Eof,
                start,
            });
        };
        self.pos += 1;
        let kind = match byte {
            b'+' => TokenKind::Plus,
            b'*' => TokenKind::Star,
            b'^' => TokenKind::Caret,
            b'(' => TokenKind::LParen,
            b')' => TokenKind::RParen,
            b'0'..=b'9' => {
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                TokenKind::Number(self.slice(start))
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
                {
                    self.pos += 1;
                }
                TokenKind::Ident(self.slice(start))
            }
            other => {
                let found = if other.is_ascii_graphic() {
                    alloc::format!("character '{}'", other as char)
                } else {
                    alloc::format!("byte 0x{other:02x}")
                };
                return Err(ParseError::new(start, "an operator or atom", found));
            }
        };
        Ok(Token { kind, start })
    }
}
