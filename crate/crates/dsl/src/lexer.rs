use crate::ast::Pos;
use crate::parser::Diagnostic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    /// Decimal digits, unbounded.
    Int(String),
    Sym(char),
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => format!("`{s}`"),
            TokenKind::Int(s) => format!("`{s}`"),
            TokenKind::Sym(c) => format!("`{c}`"),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

const SYMBOLS: &str = "=;,()[]{}+-*^@/";

/// Splits `src` into tokens; `#` and `//` start comments.
pub fn tokenize(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1u32, 1u32);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c == '#' || (c == '/' && src_peek2(&chars) == Some('/')) {
            while let Some(&d) = chars.peek() {
                if d == '\n' {
                    break;
                }
                chars.next();
                col += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Token { kind: TokenKind::Ident(s), pos });
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Token { kind: TokenKind::Int(s), pos });
            continue;
        }
        if SYMBOLS.contains(c) {
            chars.next();
            col += 1;
            out.push(Token { kind: TokenKind::Sym(c), pos });
            continue;
        }
        return Err(Diagnostic::new(pos, format!("unexpected character {c:?}"), Vec::new()));
    }
    out.push(Token {
        kind: TokenKind::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}

fn src_peek2(it: &std::iter::Peekable<std::str::Chars<'_>>) -> Option<char> {
    let mut c = it.clone();
    c.next();
    c.next()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_and_comments() {
        let toks = tokenize("ring R # note\n  = x^12;").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.kind.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                TokenKind::Ident("ring".into()),
                TokenKind::Ident("R".into()),
                TokenKind::Sym('='),
                TokenKind::Ident("x".into()),
                TokenKind::Sym('^'),
                TokenKind::Int("12".into()),
                TokenKind::Sym(';'),
                TokenKind::Eof,
            ]
        );
        assert_eq!((toks[2].pos.line, toks[2].pos.col), (2, 3));
    }

    #[test]
    fn stray_character() {
        let e = tokenize("ring $").unwrap_err();
        assert_eq!((e.line, e.col), (1, 6));
    }

    #[test]
    fn slash_comment_but_lone_slash_is_a_symbol() {
        let toks = tokenize("a / b // c").unwrap();
        assert_eq!(toks.len(), 4);
    }
}
