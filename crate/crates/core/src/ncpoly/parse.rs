//! Recursive-descent parser for relation expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-' term | factor ('*' factor)*
//! factor := uint ['/' uint] | name ['^' uint] | 't' ['^' uint] | 'i' | '(' expr ')'
//! ```
//!
//! `t` is the deformation parameter and `i` the imaginary unit; neither may
//! be used as a generator name. Juxtaposition is rejected: `xy` is a single
//! (probably unknown) name, never `x*y`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{NcPoly, NcPolyError, TPoly, Word};
use crate::linalg::{Field, Scalar};

/// Longest word or `t` power a single expression may produce.
pub const MAX_EXPONENT: usize = 1024;
/// Largest number of distinct terms an intermediate product may hold.
pub const MAX_TERMS: usize = 1 << 16;
/// Nesting limit for parentheses and unary minus.
pub const MAX_NESTING: usize = 256;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, NcPolyError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &src[start..i];
                out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Name(src[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                return Err(NcPolyError::Syntax { pos: start, msg: format!("unexpected character {ch:?}") });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    depth: usize,
    generators: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, NcPolyError> {
        Err(NcPolyError::Syntax { pos: self.offset(), msg: msg.into() })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<NcPoly, NcPolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.add(&rhs)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs)?;
                }
                _ => break,
            }
            self.check_size(&acc)?;
        }
        Ok(acc)
    }

    fn nested<T>(&mut self, f: impl FnOnce(&mut Self) -> Result<T, NcPolyError>) -> Result<T, NcPolyError> {
        if self.depth >= MAX_NESTING {
            return self.syntax("nesting too deep");
        }
        self.depth += 1;
        let out = f(self);
        self.depth -= 1;
        out
    }

    fn term(&mut self) -> Result<NcPoly, NcPolyError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(self.nested(Self::term)?.neg());
        }
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let rhs = self.factor()?;
            if acc.num_terms().saturating_mul(rhs.num_terms()) > MAX_TERMS {
                return self.syntax("expression too large");
            }
            acc = acc.mul(&rhs)?;
            self.check_size(&acc)?;
        }
        Ok(acc)
    }

    fn check_size(&self, p: &NcPoly) -> Result<(), NcPolyError> {
        let too_long = p.degree().is_some_and(|d| d > MAX_EXPONENT)
            || p.terms().any(|(_, c)| c.degree().is_some_and(|d| d > MAX_EXPONENT));
        if too_long || p.num_terms() > MAX_TERMS {
            return self.syntax("expression too large");
        }
        Ok(())
    }

    fn exponent(&mut self) -> Result<usize, NcPolyError> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.bump();
        match self.bump() {
            Some(Tok::Int(n)) => match usize::try_from(&n) {
                Ok(e) if e <= MAX_EXPONENT => Ok(e),
                _ => {
                    self.pos -= 1;
                    self.syntax(format!("exponent exceeds {MAX_EXPONENT}"))
                }
            },
            _ => {
                self.pos -= 1;
                self.syntax("expected an unsigned exponent after '^'")
            }
        }
    }

    fn factor(&mut self) -> Result<NcPoly, NcPolyError> {
        let gens = self.generators;
        let start = self.offset();
        match self.bump() {
            Some(Tok::Int(num)) => {
                let mut value = BigRational::from_integer(num);
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(den)) if !den.is_zero() => value /= BigRational::from_integer(den),
                        Some(Tok::Int(_)) => {
                            return Err(NcPolyError::Scalar { pos: start, msg: "zero denominator".into() })
                        }
                        _ => {
                            return Err(NcPolyError::Scalar {
                                pos: start,
                                msg: "expected an unsigned denominator after '/'".into(),
                            })
                        }
                    }
                }
                Ok(NcPoly::constant(gens, TPoly::constant(Scalar::real(value))))
            }
            Some(Tok::Name(name)) => {
                if let Some(g) = gens.iter().position(|n| *n == name) {
                    let e = self.exponent()?;
                    Ok(NcPoly::monomial(gens, Word(vec![g as u32; e]), TPoly::one()))
                } else if name == "t" {
                    let e = self.exponent()?;
                    Ok(NcPoly::constant(gens, TPoly::monomial(Scalar::one(), e)))
                } else if name == "i" {
                    Ok(NcPoly::constant(gens, TPoly::constant(Scalar::i())))
                } else {
                    Err(NcPolyError::UnknownGenerator { pos: start, name })
                }
            }
            Some(Tok::LParen) => {
                let inner = self.nested(Self::expr)?;
                if self.bump() != Some(Tok::RParen) {
                    self.pos -= 1;
                    return self.syntax("expected ')'");
                }
                Ok(inner)
            }
            Some(Tok::Slash) => {
                self.pos -= 1;
                Err(NcPolyError::Scalar { pos: start, msg: "'/' must follow an integer".into() })
            }
            Some(_) => {
                self.pos -= 1;
                self.syntax("expected a number, name or '('")
            }
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// Rejects generator lists that clash with the reserved names or repeat.
pub fn check_generator_names(generators: &[String]) -> Result<(), NcPolyError> {
    for (idx, g) in generators.iter().enumerate() {
        let valid_ident = g.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && g.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid_ident || g == "t" || g == "i" || generators[..idx].contains(g) {
            return Err(NcPolyError::BadGeneratorName(g.clone()));
        }
    }
    Ok(())
}

/// Parses `src` as a polynomial in the given generators.
pub fn parse_ncpoly(src: &str, generators: &[String]) -> Result<NcPoly, NcPolyError> {
    check_generator_names(generators)?;
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len(), depth: 0, generators };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return p.syntax("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn parses_anticommutator() {
        let p = parse_ncpoly("x*y + y*x", &xy()).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert!(p.terms().all(|(_, c)| *c == TPoly::one()));
    }

    #[test]
    fn parses_acon_relation() {
        let p = parse_ncpoly("y^6 - x^3 - y^2*x", &xy()).unwrap();
        let lens: Vec<usize> = p.terms().map(|(w, _)| w.len()).collect();
        assert_eq!(lens, vec![3, 3, 6]);
        assert_eq!(p.coefficient(&Word(vec![0, 0, 0])), Some(&-TPoly::one()));
    }

    #[test]
    fn zero_and_cancellation() {
        assert!(parse_ncpoly("0", &xy()).unwrap().is_zero());
        assert!(parse_ncpoly("x*y - x*y", &xy()).unwrap().is_zero());
    }

    #[test]
    fn t_coefficients_and_gaussian_units() {
        let p = parse_ncpoly("x^2 - t", &["x".to_string()]).unwrap();
        assert_eq!(p.coefficient(&Word::one()), Some(&-TPoly::t()));
        let q = parse_ncpoly("(1/2 + 3*i)*x", &["x".to_string()]).unwrap();
        assert_eq!(q.coefficient(&Word(vec![0])).unwrap().constant_term(), "1/2+3*i".parse::<Scalar>().unwrap());
    }

    #[test]
    fn distributes_products() {
        let p = parse_ncpoly("(x+y)*(x-y)", &xy()).unwrap();
        let q = parse_ncpoly("x^2 - x*y + y*x - y^2", &xy()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_ncpoly("x + z", &xy()) {
            Err(NcPolyError::UnknownGenerator { pos, name }) => assert_eq!((pos, name.as_str()), (4, "z")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_ncpoly("x + ", &xy()), Err(NcPolyError::Syntax { pos: 4, .. })));
        assert!(matches!(parse_ncpoly("1/0*x", &xy()), Err(NcPolyError::Scalar { .. })));
        assert!(matches!(parse_ncpoly("xy", &xy()), Err(NcPolyError::UnknownGenerator { .. })));
        assert!(matches!(parse_ncpoly("x y", &xy()), Err(NcPolyError::Syntax { .. })));
        assert!(matches!(parse_ncpoly("(x", &xy()), Err(NcPolyError::Syntax { .. })));
        assert!(matches!(parse_ncpoly("x^99999", &xy()), Err(NcPolyError::Syntax { .. })));
        assert!(matches!(parse_ncpoly("x", &["t".to_string()]), Err(NcPolyError::BadGeneratorName(_))));
        let deep = "(".repeat(10_000) + "x";
        assert!(matches!(parse_ncpoly(&deep, &xy()), Err(NcPolyError::Syntax { .. })));
    }

    #[test]
    fn prints_canonically() {
        let p = parse_ncpoly("y^6 - x^3 - y^2*x + 1/2 - (t + 2)*x*y", &xy()).unwrap();
        assert_eq!(p.to_string(), "1/2 + (-2 - t)*x*y - x^3 - y^2*x + y^6");
        assert_eq!(parse_ncpoly(&p.to_string(), &xy()).unwrap(), p);
    }
}
