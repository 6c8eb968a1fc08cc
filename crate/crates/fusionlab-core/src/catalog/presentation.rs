//! Parser for finite presentations.
//!
//! Grammar:
//! ```text
//! file    := 'gens:' name+ 'rels:' relator (',' relator)*
//! relator := word | word '=' word        (u = v stored as u v^-1)
//! word    := factor+
//! factor  := name ('^' int)? | '(' word ')' ('^' int)?
//! ```
//! `#` starts a comment running to end of line. Newlines and `/` count
//! as whitespace, so a presentation may be written on a single line,
//! e.g. `gens: a b / rels: a^3, b^8, b^-1 a b = a^-1`.

use crate::error::{Error, Result};

/// A finite presentation: generator names and relator words. Letters are
/// signed generator indices: `+i` for generator `i-1`, `-i` for its
/// inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<i32>>,
}

impl Presentation {
    /// The presentation `<a, b : a^3 = b^(2^m) = 1, a^b = a^(-1)>`.
    pub fn binary_twisted(m: u32) -> Presentation {
        let b_order = 1i64 << m;
        let text = format!("gens: a b\nrels: a^3, b^{b_order}, b^-1 a b = a^-1");
        parse_presentation(&text).expect("built-in presentation parses")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Caret,
    LParen,
    RParen,
    Comma,
    Eq,
    Colon,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>> {
        let mut out = Vec::new();
        loop {
            while let Some(&c) = self.chars.peek() {
                if c.is_whitespace() || c == '/' {
                    self.bump();
                } else if c == '#' {
                    while let Some(&c) = self.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                } else {
                    break;
                }
            }
            let (line, col) = (self.line, self.col);
            let Some(&c) = self.chars.peek() else {
                return Ok(out);
            };
            let tok = match c {
                '^' => {
                    self.bump();
                    Tok::Caret
                }
                '(' => {
                    self.bump();
                    Tok::LParen
                }
                ')' => {
                    self.bump();
                    Tok::RParen
                }
                ',' => {
                    self.bump();
                    Tok::Comma
                }
                '=' => {
                    self.bump();
                    Tok::Eq
                }
                ':' => {
                    self.bump();
                    Tok::Colon
                }
                c if c.is_ascii_digit() || c == '-' => {
                    let mut s = String::new();
                    s.push(self.bump().unwrap());
                    while let Some(&d) = self.chars.peek() {
                        if d.is_ascii_digit() {
                            s.push(self.bump().unwrap());
                        } else {
                            break;
                        }
                    }
                    let n: i64 = s.parse().map_err(|_| Error::Parse {
                        line,
                        col,
                        msg: format!("malformed exponent `{s}`"),
                    })?;
                    Tok::Int(n)
                }
                c if c.is_alphanumeric() || c == '_' => {
                    let mut s = String::new();
                    while let Some(&d) = self.chars.peek() {
                        if d.is_alphanumeric() || d == '_' {
                            s.push(self.bump().unwrap());
                        } else {
                            break;
                        }
                    }
                    Tok::Ident(s)
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        col,
                        msg: format!("unexpected character `{other}`"),
                    })
                }
            };
            out.push((tok, line, col));
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    gens: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|&(_, l, c)| (l, c))
            .unwrap_or((1, 1))
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        match self.toks.get(self.pos) {
            Some((Tok::Ident(s), _, _)) if s == kw => {
                self.pos += 1;
                match self.toks.get(self.pos) {
                    Some((Tok::Colon, _, _)) => {
                        self.pos += 1;
                        Ok(())
                    }
                    _ => Err(self.err(format!("expected `:` after `{kw}`"))),
                }
            }
            _ => Err(self.err(format!("expected `{kw}:`"))),
        }
    }

    fn gen_index(&self, name: &str) -> Option<i32> {
        self.gens.iter().position(|g| g == name).map(|i| i as i32 + 1)
    }

    fn parse_exponent(&mut self) -> Result<i64> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        match self.toks.get(self.pos) {
            Some((Tok::Int(n), _, _)) => {
                let n = *n;
                self.pos += 1;
                if n == 0 {
                    Err(self.err("exponent must be nonzero"))
                } else {
                    Ok(n)
                }
            }
            _ => Err(self.err("expected integer exponent after `^`")),
        }
    }

    fn parse_factor(&mut self) -> Result<Vec<i32>> {
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Ident(name), _, _)) => {
                let letter = self
                    .gen_index(&name)
                    .ok_or_else(|| self.err(format!("unknown generator `{name}`")))?;
                self.pos += 1;
                let exp = self.parse_exponent()?;
                Ok(repeat_word(&[letter], exp))
            }
            Some((Tok::LParen, _, _)) => {
                self.pos += 1;
                let inner = self.parse_word()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                let exp = self.parse_exponent()?;
                Ok(repeat_word(&inner, exp))
            }
            _ => Err(self.err("expected generator or `(`")),
        }
    }

    fn parse_word(&mut self) -> Result<Vec<i32>> {
        let mut word = self.parse_factor()?;
        while matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::LParen)) {
            word.extend(self.parse_factor()?);
        }
        Ok(word)
    }

    fn parse_relator(&mut self) -> Result<Vec<i32>> {
        let lhs = self.parse_word()?;
        if self.peek() == Some(&Tok::Eq) {
            self.pos += 1;
            let rhs = self.parse_word()?;
            let mut rel = lhs;
            rel.extend(invert_word(&rhs));
            Ok(rel)
        } else {
            Ok(lhs)
        }
    }
}

fn invert_word(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|&l| -l).collect()
}

fn repeat_word(word: &[i32], exp: i64) -> Vec<i32> {
    let base: Vec<i32> = if exp < 0 {
        invert_word(word)
    } else {
        word.to_vec()
    };
    let mut out = Vec::with_capacity(word.len() * exp.unsigned_abs() as usize);
    for _ in 0..exp.unsigned_abs() {
        out.extend(&base);
    }
    out
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let toks = Lexer::new(text).tokens()?;
    let mut parser = Parser {
        toks,
        pos: 0,
        gens: Vec::new(),
    };
    parser.expect_keyword("gens")?;
    loop {
        match parser.toks.get(parser.pos).cloned() {
            Some((Tok::Ident(name), _, _)) => {
                if name == "rels"
                    && matches!(parser.toks.get(parser.pos + 1), Some((Tok::Colon, _, _)))
                {
                    break;
                }
                if parser.gens.contains(&name) {
                    return Err(parser.err(format!("duplicate generator `{name}`")));
                }
                parser.gens.push(name);
                parser.pos += 1;
            }
            _ => break,
        }
    }
    if parser.gens.is_empty() {
        return Err(parser.err("at least one generator required"));
    }
    parser.expect_keyword("rels")?;
    let mut relators = Vec::new();
    loop {
        let rel = parser.parse_relator()?;
        if rel.is_empty() {
            return Err(parser.err("empty relator"));
        }
        relators.push(rel);
        match parser.peek() {
            Some(Tok::Comma) => parser.pos += 1,
            None => break,
            _ => return Err(parser.err("expected `,` or end of input")),
        }
    }
    Ok(Presentation {
        generators: parser.gens,
        relators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_twisted_presentation() {
        let p = parse_presentation("gens: a b\nrels: a^3, b^8, b^-1 a b = a^-1").unwrap();
        assert_eq!(p.generators, vec!["a", "b"]);
        assert_eq!(p.relators.len(), 3);
        assert_eq!(p.relators[0], vec![1, 1, 1]);
        assert_eq!(p.relators[2], vec![-2, 1, 2, 1]);
    }

    #[test]
    fn parses_trivial_presentation() {
        let p = parse_presentation("gens: a\nrels: a").unwrap();
        assert_eq!(p.relators, vec![vec![1]]);
    }

    #[test]
    fn parses_parenthesized_power() {
        let p = parse_presentation("gens: a b\nrels: a^2, b^3, (a b)^2").unwrap();
        assert_eq!(p.relators[2], vec![1, 2, 1, 2]);
    }

    #[test]
    fn slash_and_comments_are_whitespace() {
        let p =
            parse_presentation("# symmetric\ngens: a b / rels: a^2, b^3, (a b)^2 # tail").unwrap();
        assert_eq!(p.relators.len(), 3);
    }

    #[test]
    fn unknown_generator_has_position() {
        let err = parse_presentation("gens: a\nrels: a, c^2").unwrap_err();
        match err {
            Error::Parse { line, col, msg } => {
                assert_eq!(line, 2);
                assert!(col > 1);
                assert!(msg.contains('c'));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn zero_exponent_rejected() {
        assert!(parse_presentation("gens: a\nrels: a^0").is_err());
    }

    #[test]
    fn negative_repeat_inverts() {
        let p = parse_presentation("gens: a b\nrels: (a b)^-2").unwrap();
        assert_eq!(p.relators[0], vec![-2, -1, -2, -1]);
    }
}
