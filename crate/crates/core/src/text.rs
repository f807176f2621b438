//! Parsers for the text forms printed by the `Display` impls: field specs,
//! field elements, polynomials in `T`, and matrices `[[a,b],[c,d]]`.
//!
//! Elements and polynomials share one expression grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' digits)?
//! atom   := digits | 't' | 'T' | '(' expr ')'
//! ```
//!
//! `t` is only meaningful over GF(p)(t), `T` only in polynomials, and
//! division is only by nonzero constants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldSpec};
use crate::linalg::Mat;
use crate::poly::Poly;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// `Q`, `GF(p)` or `GF(p)(t)`, whitespace-insensitive.
pub fn parse_field(s: &str) -> Result<FieldSpec> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "Q" || compact == "QQ" {
        return Ok(FieldSpec::Rationals);
    }
    let rest = compact.strip_prefix("GF(").ok_or_else(|| {
        parse_err(format!(
            "unknown field {s:?}; expected Q, GF(p) or GF(p)(t)"
        ))
    })?;
    let close = rest
        .find(')')
        .ok_or_else(|| parse_err(format!("unbalanced parenthesis in {s:?}")))?;
    let p: u64 = rest[..close]
        .parse()
        .map_err(|_| parse_err(format!("bad characteristic in {s:?}")))?;
    match &rest[close + 1..] {
        "" => FieldSpec::prime_field(p),
        "(t)" => FieldSpec::rational_functions(p),
        _ => Err(parse_err(format!("unknown field {s:?}"))),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    LowerT,
    UpperT,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        i += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let start = i - 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                Token::Num(digits.parse().expect("ascii digits"))
            }
            't' => Token::LowerT,
            'T' => Token::UpperT,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            other => {
                return Err(parse_err(format!(
                    "unexpected character {other:?} in {s:?}"
                )))
            }
        };
        out.push(tok);
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    field: FieldSpec,
    allow_var: bool,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        parse_err(format!(
            "{what} at token {} in {:?}",
            self.pos + 1,
            self.src
        ))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Token::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Token::Star) {
                acc = &acc * &self.factor()?;
            } else if self.eat(&Token::Slash) {
                let d = self.factor()?;
                if d.degree() != Some(0) {
                    return Err(self.err("division by zero or by a non-constant"));
                }
                let inv = d.coeff(0).inv()?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        if self.eat(&Token::Minus) {
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(&Token::Caret) {
            let Some(Token::Num(n)) = self.peek().cloned() else {
                return Err(self.err("expected an exponent"));
            };
            self.pos += 1;
            let e = n.to_u32().ok_or_else(|| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Token::Num(n) => Ok(Poly::constant(elem_from_int(self.field, &n))),
            Token::LowerT => self
                .field
                .t()
                .map(Poly::constant)
                .ok_or_else(|| parse_err(format!("`t` is not an element of {}", self.field))),
            Token::UpperT if self.allow_var => Ok(Poly::x(self.field)),
            Token::UpperT => Err(parse_err(format!(
                "`T` is not allowed in a field element: {:?}",
                self.src
            ))),
            Token::Open => {
                let inner = self.expr()?;
                if !self.eat(&Token::Close) {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

fn elem_from_int(field: FieldSpec, n: &BigInt) -> FieldElem {
    match field {
        FieldSpec::Rationals => FieldElem::Rational(BigRational::from_integer(n.clone())),
        FieldSpec::PrimeField(p) | FieldSpec::RationalFunctions(p) => {
            let r = (n % BigInt::from(p)).to_i64().expect("residue fits");
            field.from_i64(r)
        }
    }
}

fn parse_expr(s: &str, field: FieldSpec, allow_var: bool) -> Result<Poly> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(parse_err("empty expression"));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        field,
        allow_var,
        src: s,
    };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(value)
}

/// A polynomial in `T` over `field`, e.g. `T^4 + (t+1)*T^2 + t`.
pub fn parse_poly(s: &str, field: FieldSpec) -> Result<Poly> {
    parse_expr(s, field, true)
}

/// A field element, e.g. `3/4`, `5`, `(t+1)/(t^2+t)`.
pub fn parse_elem(s: &str, field: FieldSpec) -> Result<FieldElem> {
    Ok(parse_expr(s, field, false)?.coeff(0))
}

/// Splits at top-level commas, ignoring commas nested in `()` or `[]`.
fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(parse_err(format!("unbalanced brackets in {s:?}")));
        }
    }
    if depth != 0 {
        return Err(parse_err(format!("unbalanced brackets in {s:?}")));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

fn strip_brackets(s: &str) -> Result<&str> {
    let t = s.trim();
    t.strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| parse_err(format!("expected [...], got {t:?}")))
}

/// Builds a matrix from rows of entry strings, each parsed as an element.
pub fn matrix_from_strings(rows: &[Vec<String>], field: FieldSpec) -> Result<Mat> {
    let expected = rows.first().map_or(0, Vec::len);
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if row.len() != expected {
            return Err(Error::RaggedRows {
                row: i,
                found: row.len(),
                expected,
            });
        }
        parsed.push(
            row.iter()
                .map(|e| parse_elem(e, field))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Mat::from_rows(field, parsed)
}

/// `[[e, e, ...], [...], ...]`, entries in the field-element grammar.
pub fn parse_matrix(s: &str, field: FieldSpec) -> Result<Mat> {
    let body = strip_brackets(s)?;
    if body.trim().is_empty() {
        return Ok(Mat::zeros(field, 0, 0));
    }
    let rows = split_top_level(body)?
        .into_iter()
        .map(|r| {
            let inner = strip_brackets(r)?;
            if inner.trim().is_empty() {
                return Ok(Vec::new());
            }
            Ok(split_top_level(inner)?
                .into_iter()
                .map(|e| e.trim().to_string())
                .collect())
        })
        .collect::<Result<Vec<Vec<String>>>>()?;
    matrix_from_strings(&rows, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Mat;

    fn gf2t() -> FieldSpec {
        FieldSpec::rational_functions(2).unwrap()
    }

    #[test]
    fn fields() {
        assert_eq!(parse_field("Q").unwrap(), FieldSpec::Rationals);
        assert_eq!(parse_field("GF(5)").unwrap(), FieldSpec::PrimeField(5));
        assert_eq!(
            parse_field(" GF(2)(t) ").unwrap(),
            FieldSpec::RationalFunctions(2)
        );
        assert_eq!(parse_field("GF(4)"), Err(Error::NotPrime(4)));
        assert!(matches!(parse_field("GF(2)(s)"), Err(Error::Parse(_))));
        assert!(matches!(parse_field("R"), Err(Error::Parse(_))));
    }

    #[test]
    fn polynomials() {
        let k = gf2t();
        let f = parse_poly("T^2 - t", k).unwrap();
        assert_eq!(f.coeffs(), &[k.t().unwrap(), k.zero(), k.one()]);
        assert_eq!(parse_poly("T", k).unwrap(), Poly::x(k));
        let g = parse_poly("T^2 + (t+1)*T + t", k).unwrap();
        assert_eq!(g.coeff(1), parse_elem("t+1", k).unwrap());
        assert_eq!(g.to_string(), "T^2+(t+1)*T+t");
        let q = FieldSpec::Rationals;
        assert_eq!(
            parse_poly("-T^2/2 + 3", q).unwrap().to_string(),
            "-(1/2)*T^2+3"
        );
    }

    #[test]
    fn elements() {
        let k = gf2t();
        let e = parse_elem("(t+1)/(t^2+t)", k).unwrap();
        assert_eq!(e.to_string(), "(1)/(t)");
        assert_eq!(
            parse_elem("7", FieldSpec::PrimeField(5))
                .unwrap()
                .to_string(),
            "2"
        );
        assert_eq!(
            parse_elem("-6/4", FieldSpec::Rationals)
                .unwrap()
                .to_string(),
            "-3/2"
        );
        assert!(parse_elem("T", k).is_err());
        assert!(parse_elem("t", FieldSpec::Rationals).is_err());
        assert!(parse_elem("1/0", FieldSpec::Rationals).is_err());
        assert!(parse_elem("1/t", FieldSpec::RationalFunctions(3)).is_ok());
        assert!(parse_elem("(1", FieldSpec::Rationals).is_err());
        assert!(parse_elem("1 2", FieldSpec::Rationals).is_err());
    }

    #[test]
    fn matrices() {
        let k = gf2t();
        let c = parse_matrix("[[0,t],[1,0]]", k).unwrap();
        assert_eq!(c, parse_poly("T^2-t", k).unwrap().companion().unwrap());
        assert!(parse_matrix("[[1]]", FieldSpec::Rationals)
            .unwrap()
            .is_identity());
        assert_eq!(
            parse_matrix("[[1,2],[3]]", FieldSpec::Rationals),
            Err(Error::RaggedRows {
                row: 1,
                found: 1,
                expected: 2
            })
        );
        let m = parse_matrix("[[(t+1)/(t^2+1), 1/t],[t, 0]]", k).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(parse_matrix(&m.to_string(), k).unwrap(), m);
        assert_eq!(parse_matrix("[]", k).unwrap(), Mat::zeros(k, 0, 0));
    }
}
