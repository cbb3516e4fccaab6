//! Canonical text form, a small expression parser, JSON and LaTeX output.
//!
//! Text form: terms in ascending weight, then by factor names and exponents,
//! e.g. `-16/3*l4^3 - 36*l6^2`. The parser accepts that form and also
//! general expressions with parentheses, `*`, `/ integer`, `^ integer` and
//! unary minus, so printed formulas can be transcribed as written.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Monomial, Poly, PolyError, Rational, Var};

type TermKey = (u32, Vec<(String, u32, u32)>);

fn canonical_terms(p: &Poly) -> Vec<(TermKey, &Rational)> {
    let mut out: Vec<_> = p
        .terms()
        .map(|(m, c)| ((m.weight(), m.canonical_factors()), c))
        .collect();
    out.sort_by(|a, b| cmp_key(&a.0, &b.0));
    out
}

fn cmp_key(a: &TermKey, b: &TermKey) -> Ordering {
    a.0.cmp(&b.0).then_with(|| {
        let fa = a.1.iter().map(|(n, _, e)| (n, e));
        let fb = b.1.iter().map(|(n, _, e)| (n, e));
        fa.cmp(fb)
    })
}

fn write_monomial(factors: &[(String, u32, u32)]) -> String {
    factors
        .iter()
        .map(|(n, _, e)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((_, factors), c)) in canonical_terms(self).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&write_monomial(&factors))?;
            } else {
                write!(f, "{abs}*{}", write_monomial(&factors))?;
            }
        }
        Ok(())
    }
}

/// Parses an expression into a polynomial.
pub fn parse(src: &str) -> Result<Poly, PolyError> {
    let mut p = Parser {
        src,
        toks: tokenize(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>, PolyError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            toks.push(Tok::Int(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            toks.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(PolyError::Parse {
                input: src.to_string(),
                reason: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, reason: &str) -> PolyError {
        PolyError::Parse {
            input: self.src.to_string(),
            reason: format!("{reason} at token {}", self.pos),
        }
    }

    fn peek_op(&self, c: char) -> bool {
        matches!(self.toks.get(self.pos), Some(Tok::Op(o)) if *o == c)
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.peek_op('+') {
                self.pos += 1;
                acc = acc + self.term()?;
            } else if self.peek_op('-') {
                self.pos += 1;
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.peek_op('*') {
                self.pos += 1;
                acc = acc * self.unary()?;
            } else if self.peek_op('/') {
                self.pos += 1;
                match self.toks.get(self.pos) {
                    Some(Tok::Int(d)) if !d.is_zero() => {
                        let d = Rational::from_integer(d.clone());
                        self.pos += 1;
                        acc = acc.scale(&d.recip());
                    }
                    _ => return Err(self.err("expected a nonzero integer divisor")),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, PolyError> {
        if self.peek_op('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        if self.peek_op('+') {
            self.pos += 1;
            return self.unary();
        }
        let base = self.atom()?;
        if self.peek_op('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Int(e)) => {
                    let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected an integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, PolyError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Poly::constant(Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Poly::var(Var::named(&canonical_name(&name))?))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.peek_op(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

/// Resolves `w5_3` to `w3_5`: the symmetric symbol table stores `k <= l` only.
fn canonical_name(name: &str) -> String {
    if let Some(rest) = name.strip_prefix('w') {
        if let Some((a, b)) = rest.split_once('_') {
            if let (Ok(a), Ok(b)) = (a.parse::<u32>(), b.parse::<u32>()) {
                if a > b {
                    return format!("w{b}_{a}");
                }
            }
        }
    }
    name.to_string()
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    c: String,
    m: BTreeMap<String, u32>,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = canonical_terms(self)
            .into_iter()
            .map(|((_, factors), c)| JsonTerm {
                c: c.to_string(),
                m: factors.into_iter().map(|(n, _, e)| (n, e)).collect(),
            })
            .collect();
        JsonPoly { terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: Rational = t.c.parse().map_err(D::Error::custom)?;
            let mut factors = Vec::with_capacity(t.m.len());
            for (name, e) in t.m {
                factors.push((Var::named(&name).map_err(D::Error::custom)?, e));
            }
            terms.push((Monomial::from_factors(factors), c));
        }
        Ok(Poly::from_terms(terms))
    }
}

/// LaTeX rendering of a variable name.
pub fn latex_var(name: &str) -> String {
    match name {
        "alpha" => return r"\alpha".into(),
        "beta" => return r"\beta".into(),
        "gamma1" => return r"\gamma_{1}".into(),
        "gamma2" => return r"\gamma_{2}".into(),
        "X" => return "X".into(),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("wp") {
        let mut it = rest.split('_');
        let i = it.next().unwrap_or("");
        let ks: Vec<&str> = it.collect();
        return if ks.is_empty() {
            format!(r"\wp_{{{i}}}")
        } else {
            format!(r"\wp_{{{i};{}}}", ks.join(","))
        };
    }
    let (head, rest) = name.split_at(1);
    let head = if head == "l" { r"\lambda" } else { head };
    format!("{head}_{{{}}}", rest.replace('_', ","))
}

fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!(r"\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

impl Poly {
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, ((_, factors), c)) in canonical_terms(self).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            out.push_str(match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            if factors.is_empty() || !abs.is_one() {
                out.push_str(&latex_rational(&abs));
                if !factors.is_empty() {
                    out.push(' ');
                }
            }
            let mono: Vec<String> = factors
                .iter()
                .map(|(n, _, e)| {
                    if *e == 1 {
                        latex_var(n)
                    } else {
                        format!("{}^{{{e}}}", latex_var(n))
                    }
                })
                .collect();
            out.push_str(&mono.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text() {
        let p = parse("27*l6^2 + 4*l4^3").unwrap();
        assert_eq!(p.to_string(), "4*l4^3 + 27*l6^2");
        assert_eq!(parse("-4/3*l4^3").unwrap().to_string(), "-4/3*l4^3");
        assert_eq!(parse("x4 - 3*x2^2*1").unwrap().to_string(), "-3*x2^2 + x4");
        assert_eq!(parse("0").unwrap().to_string(), "0");
        assert_eq!(parse("-(1/2)").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn parser_handles_grouping() {
        let a = parse("1/5*(2*(alpha - beta)*(x4 - 6*x2^2))*x3").unwrap();
        let b = parse("2/5*alpha*x3*x4 - 12/5*alpha*x2^2*x3 - 2/5*beta*x3*x4 + 12/5*beta*x2^2*x3")
            .unwrap();
        assert_eq!(a, b);
        assert_eq!(parse("w5_3").unwrap(), parse("w3_5").unwrap());
        assert!(parse("x2 +").is_err());
        assert!(parse("x2 / y4").is_err());
        assert!(parse("qq7").is_err());
    }

    #[test]
    fn json_shape() {
        let p = parse("-4/3*l4^3").unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"terms":[{"c":"-4/3","m":{"l4":3}}]}"#
        );
        let back: Poly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn latex_output() {
        let p = parse("-4/3*l4^2 + 6*l6 + x1_7").unwrap();
        assert_eq!(p.to_latex(), r"6 \lambda_{6} - \frac{4}{3} \lambda_{4}^{2} + x_{1,7}");
    }
}
