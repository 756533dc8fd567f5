//! Parser for polynomial expressions such as `x^3 - 481*x + 3600`.
//!
//! Grammar: an optional sign, then monomials `c*x^e`, `x^e`, `c*x`, `x` or
//! `c` joined by `+` or `-` (ASCII or U+2212). Whitespace is ignored between
//! tokens. Each exponent may appear once and the result must be monic.

use std::collections::BTreeMap;
use std::fmt;

use flt_lab_core::polysplit::MonicIntPoly;
use flt_lab_core::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    /// 1-based character column.
    Syntax { column: usize, expected: &'static str, found: String },
    DuplicateExponent { column: usize, exponent: u32 },
    Empty,
    NotMonic { leading: ExactInt },
    Constant,
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyParseError::Syntax { column, expected, found } => {
                write!(f, "column {column}: expected {expected}, found {found}")
            }
            PolyParseError::DuplicateExponent { column, exponent } => {
                write!(f, "column {column}: exponent {exponent} appears more than once")
            }
            PolyParseError::Empty => f.write_str("empty polynomial"),
            PolyParseError::NotMonic { leading } => {
                write!(f, "polynomial is not monic: leading coefficient {leading}")
            }
            PolyParseError::Constant => f.write_str("polynomial must have degree at least 1"),
        }
    }
}

impl std::error::Error for PolyParseError {}

/// Source text with its parsed polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExpr {
    pub source: String,
    pub poly: MonicIntPoly,
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
}

impl Lexer {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn found(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".into(),
        }
    }

    fn err(&mut self, expected: &'static str) -> PolyParseError {
        let found = self.found();
        PolyParseError::Syntax { column: self.pos + 1, expected, found }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-' | '\u{2212}') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// `c*x^e | x^e | c*x | x | c`, returning `(coefficient, exponent)`.
    fn monomial(&mut self) -> Result<(ExactInt, u32), PolyParseError> {
        let coeff = match self.digits() {
            Some(d) => {
                let c: ExactInt = d.parse().expect("digits parse");
                if !self.eat('*') {
                    return Ok((c, 0));
                }
                if self.peek() != Some('x') {
                    return Err(self.err("'x' after '*'"));
                }
                c
            }
            None if self.peek() == Some('x') => ExactInt::ONE,
            None => return Err(self.err("a coefficient or 'x'")),
        };
        self.pos += 1; // the 'x'
        if !self.eat('^') {
            return Ok((coeff, 1));
        }
        let Some(d) = self.digits() else { return Err(self.err("an exponent")) };
        let e = d.parse().map_err(|_| PolyParseError::Syntax {
            column: self.pos + 1 - d.len(),
            expected: "an exponent below 2^32",
            found: d.clone(),
        })?;
        Ok((coeff, e))
    }
}

pub fn parse_poly(text: &str) -> Result<PolyExpr, PolyParseError> {
    let mut lx = Lexer { chars: text.chars().collect(), pos: 0 };
    if lx.peek().is_none() {
        return Err(PolyParseError::Empty);
    }
    let mut terms: BTreeMap<u32, ExactInt> = BTreeMap::new();
    let mut negative = lx.sign().unwrap_or(false);
    loop {
        lx.skip_ws();
        let column = lx.pos + 1;
        let (c, e) = lx.monomial()?;
        if terms.insert(e, if negative { -c } else { c }).is_some() {
            return Err(PolyParseError::DuplicateExponent { column, exponent: e });
        }
        if lx.peek().is_none() {
            break;
        }
        negative = match lx.sign() {
            Some(neg) => neg,
            None => return Err(lx.err("'+' or '-'")),
        };
    }
    let Some((&degree, _)) = terms.iter().rev().find(|(_, c)| !c.is_zero()) else {
        return Err(PolyParseError::Constant);
    };
    if degree == 0 {
        return Err(PolyParseError::Constant);
    }
    let leading = terms[&degree].clone();
    if !leading.is_one() {
        return Err(PolyParseError::NotMonic { leading });
    }
    let coeffs = (0..=degree).rev().map(|e| terms.get(&e).cloned().unwrap_or(ExactInt::ZERO)).collect();
    let poly = MonicIntPoly::new(coeffs).expect("monic with degree >= 1");
    Ok(PolyExpr { source: text.to_string(), poly })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(s: &str) -> Vec<i128> {
        parse_poly(s).unwrap().poly.coeffs().iter().map(|c| c.as_i128().unwrap()).collect()
    }

    #[test]
    fn accepted_forms() {
        assert_eq!(coeffs("x^3 - 481*x + 3600"), [1, 0, -481, 3600]);
        assert_eq!(coeffs("x"), [1, 0]);
        assert_eq!(coeffs("  x^2+x+1 "), [1, 1, 1]);
        assert_eq!(coeffs("3 + x^2"), [1, 0, 3]);
        assert_eq!(coeffs("x^3 \u{2212} 7*x + 6"), [1, 0, -7, 6]);
        assert_eq!(coeffs("1*x^4 - 0*x"), [1, 0, 0, 0, 0]);
    }

    #[test]
    fn rejected_forms() {
        assert_eq!(parse_poly("2*x^3 + 1").unwrap_err(), PolyParseError::NotMonic { leading: 2.into() });
        assert_eq!(parse_poly("-x^2").unwrap_err(), PolyParseError::NotMonic { leading: (-1).into() });
        assert_eq!(parse_poly("   ").unwrap_err(), PolyParseError::Empty);
        assert_eq!(parse_poly("7").unwrap_err(), PolyParseError::Constant);
        assert_eq!(
            parse_poly("x^2 + x + x").unwrap_err(),
            PolyParseError::DuplicateExponent { column: 11, exponent: 1 }
        );
        let PolyParseError::Syntax { column, .. } = parse_poly("x^2 + * 3").unwrap_err() else { panic!() };
        assert_eq!(column, 7);
        let PolyParseError::Syntax { column, expected, .. } = parse_poly("x^ + 1").unwrap_err() else { panic!() };
        assert_eq!((column, expected), (4, "an exponent"));
        assert!(matches!(parse_poly("x^2 x"), Err(PolyParseError::Syntax { column: 5, .. })));
        assert!(matches!(parse_poly("3*y"), Err(PolyParseError::Syntax { column: 3, .. })));
    }

    #[test]
    fn render_roundtrip() {
        for s in ["x^3 - 481*x + 3600", "x", "x^5 - x^4 + 2*x - 1", "-0 + x^2"] {
            let p = parse_poly(s).unwrap().poly;
            assert_eq!(parse_poly(&p.to_string()).unwrap().poly, p);
        }
    }
}
