//! Parser for polynomial literals as they appear in manifests and reports:
//! integer or rational coefficients (`p`, `p/q`), symbols as identifiers,
//! `^` for powers, `*` implicit or explicit, parentheses, e.g. `-1/4*b*g`
//! or `a^2 + 2(b - g)`. The printer in [`crate::poly`] is the inverse:
//! `parse(print(p)) == p`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Poly, Symbols};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(usize, Token)>> {
    let mut tokens = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            '/' => {
                tokens.push((i, Token::Slash));
                i += 1;
            }
            '^' => {
                tokens.push((i, Token::Caret));
                i += 1;
            }
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits");
                tokens.push((start, Token::Num(n)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push((start, Token::Ident(input[start..i].to_string())));
            }
            _ => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    symbols: &'a Arc<Symbols>,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.here(),
            msg: msg.into(),
        }
    }

    // expr := ['+'|'-'] term { ('+'|'-') term }
    fn expr(&mut self) -> Result<Poly> {
        let mut negate = false;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Minus => {
                    negate = !negate;
                    self.bump();
                }
                Token::Plus => {
                    self.bump();
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Token::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := factor { ['*'] factor }   (juxtaposition is multiplication)
    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                Some(Token::Num(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // factor := primary ['^' uint]
    fn factor(&mut self) -> Result<Poly> {
        let base = self.primary()?;
        if let Some(Token::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Token::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.err("exponent out of range"))?;
                    return base.pow(e);
                }
                _ => return Err(self.err("expected an integer exponent after `^`")),
            }
        }
        Ok(base)
    }

    // primary := NUM ['/' NUM] | IDENT | '(' expr ')'
    fn primary(&mut self) -> Result<Poly> {
        match self.bump() {
            Some(Token::Num(n)) => {
                if let Some(Token::Slash) = self.peek() {
                    self.bump();
                    match self.bump() {
                        Some(Token::Num(d)) => {
                            let r = Rat::from_big(n, d)?;
                            Ok(Poly::constant(self.symbols, r))
                        }
                        _ => Err(self.err("expected an integer denominator after `/`")),
                    }
                } else {
                    Ok(Poly::constant(
                        self.symbols,
                        Rat::from_big(n, BigInt::from(1))?,
                    ))
                }
            }
            Some(Token::Ident(name)) => Poly::symbol(self.symbols, &name),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some(Token::Minus) => {
                // unary minus inside a term, e.g. `2*-3` is rejected but
                // `(-3)` reaches expr() above; anything else is malformed
                Err(self.err("unexpected `-`"))
            }
            other => Err(self.err(format!("unexpected token {other:?}"))),
        }
    }
}

/// The identifiers mentioned in a polynomial literal, in order of first
/// appearance. Used by manifest loading to discover the coefficient ring.
pub fn identifiers(input: &str) -> Result<Vec<String>> {
    let mut seen = Vec::new();
    for (_, tok) in lex(input)? {
        if let Token::Ident(name) = tok {
            if !seen.contains(&name) {
                seen.push(name);
            }
        }
    }
    Ok(seen)
}

/// Parses a polynomial literal over the declared symbol list.
pub fn parse_poly(input: &str, symbols: &Arc<Symbols>) -> Result<Poly> {
    let tokens = lex(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty polynomial literal".to_string(),
        });
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        symbols,
        input_len: input.len(),
    };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input after polynomial"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syms() -> Arc<Symbols> {
        Symbols::new(vec!["a", "b", "g"])
    }

    #[test]
    fn parses_spec_literal() {
        let s = syms();
        let p = parse_poly("-1/4*b*g", &s).unwrap();
        let expect = Poly::symbol(&s, "b")
            .unwrap()
            .mul(&Poly::symbol(&s, "g").unwrap())
            .unwrap()
            .scale(&Rat::new(-1, 4).unwrap());
        assert_eq!(p, expect);
    }

    #[test]
    fn implicit_multiplication_and_parens() {
        let s = syms();
        assert_eq!(
            parse_poly("2a(b + g)", &s).unwrap(),
            parse_poly("2*a*b + 2*a*g", &s).unwrap()
        );
        assert_eq!(
            parse_poly("(a + g)(a - g)", &s).unwrap(),
            parse_poly("a^2 - g^2", &s).unwrap()
        );
    }

    #[test]
    fn unknown_symbol_is_rejected() {
        let s = syms();
        assert_eq!(
            parse_poly("a + q", &s).unwrap_err(),
            Error::UnknownSymbol("q".to_string())
        );
    }

    #[test]
    fn zero_denominator_literal_is_rejected() {
        let s = syms();
        assert_eq!(parse_poly("1/0", &s).unwrap_err(), Error::ZeroDenominator);
    }

    #[test]
    fn malformed_input_reports_position() {
        let s = syms();
        match parse_poly("a + $", &s).unwrap_err() {
            Error::Parse { pos, .. } => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_poly("a b ^", &s).unwrap_err(),
            Error::Parse { .. }
        ));
        assert!(matches!(
            parse_poly("", &s).unwrap_err(),
            Error::Parse { .. }
        ));
    }

    #[test]
    fn print_parse_round_trip_on_hand_cases() {
        let s = syms();
        for text in [
            "0",
            "1",
            "-3/8",
            "a^2 - 1/4*b*g - 3/8",
            "a*b*g",
            "2*a^3 + 3/7*b^2*g - g + 5",
        ] {
            let p = parse_poly(text, &s).unwrap();
            let printed = p.to_string();
            let reparsed = parse_poly(&printed, &s).unwrap();
            assert_eq!(reparsed, p, "round trip failed for `{text}` -> `{printed}`");
        }
    }
}
