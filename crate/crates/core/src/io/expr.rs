//! Polynomial expressions: `±`-separated sums of `*`-products of rational
//! literals and `id` or `id^e` factors.

use crate::rational::{parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Number(Rational),
    Power(String, u32),
}

/// One summand, with its sign already folded into the factors' product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    pub factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Number(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token::Number(chars[start..i].iter().collect()));
        } else if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^".contains(ch) {
            out.push(Token::Op(ch));
            i += 1;
        } else {
            return Err(format!("unexpected character `{ch}`"));
        }
    }
    Ok(out)
}

pub fn parse_expr(s: &str) -> Result<Vec<Term>, String> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err("empty expression".into());
    }
    let mut pos = 0;
    let mut terms = Vec::new();
    let mut first = true;
    while pos < toks.len() {
        let negative = match toks.get(pos) {
            Some(Token::Op('+')) => {
                pos += 1;
                false
            }
            Some(Token::Op('-')) => {
                pos += 1;
                true
            }
            _ if first => false,
            Some(t) => return Err(format!("expected `+` or `-`, found {}", show(t))),
            None => unreachable!(),
        };
        first = false;
        let mut factors = vec![factor(&toks, &mut pos)?];
        while let Some(Token::Op('*')) = toks.get(pos) {
            pos += 1;
            factors.push(factor(&toks, &mut pos)?);
        }
        terms.push(Term { negative, factors });
    }
    Ok(terms)
}

fn show(t: &Token) -> String {
    match t {
        Token::Ident(s) | Token::Number(s) => format!("`{s}`"),
        Token::Op(c) => format!("`{c}`"),
    }
}

fn factor(toks: &[Token], pos: &mut usize) -> Result<Factor, String> {
    match toks.get(*pos) {
        Some(Token::Number(n)) => {
            *pos += 1;
            let mut lit = n.clone();
            if let (Some(Token::Op('/')), Some(Token::Number(d))) =
                (toks.get(*pos), toks.get(*pos + 1))
            {
                lit = format!("{n}/{d}");
                *pos += 2;
            }
            parse_rational(&lit)
                .map(Factor::Number)
                .map_err(|e| e.to_string())
        }
        Some(Token::Ident(id)) => {
            *pos += 1;
            let mut e = 1;
            if let Some(Token::Op('^')) = toks.get(*pos) {
                match toks.get(*pos + 1) {
                    Some(Token::Number(n)) => {
                        e = n.parse().map_err(|_| format!("bad exponent `{n}`"))?;
                        *pos += 2;
                    }
                    _ => return Err(format!("`^` after `{id}` needs an integer exponent")),
                }
            }
            Ok(Factor::Power(id.clone(), e))
        }
        Some(t) => Err(format!("expected a number or generator, found {}", show(t))),
        None => Err("expression ends after an operator".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn sums_and_products() {
        let t = parse_expr("-1/2*x^2*y + z - 3").unwrap();
        assert_eq!(t.len(), 3);
        assert!(t[0].negative);
        assert_eq!(
            t[0].factors,
            vec![
                Factor::Number(ratio(1, 2)),
                Factor::Power("x".into(), 2),
                Factor::Power("y".into(), 1)
            ]
        );
        assert!(t[2].negative);
    }

    #[test]
    fn errors() {
        assert!(parse_expr("x +").is_err());
        assert!(parse_expr("x y").is_err());
        assert!(parse_expr("x^").is_err());
        assert!(parse_expr("x % y").is_err());
        assert!(parse_expr("1/0").is_err());
    }
}
