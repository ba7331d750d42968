//! Text forms of polynomials and series.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr  := sign? term (sign term)*
//! term  := coeff ('*'? mono)? | mono | "O(h^" int ")"
//! mono  := var ('^' exp)?
//! exp   := int | '(' int ('/' int)? ')'
//! coeff := digits ('/' digits)?
//! ```
//!
//! The variable decides the kind: `t` for [`HalfLaurent`], `z` for [`ZPoly`],
//! `h` for [`HSeries`]. Renderers in `nabla-core` produce this grammar.

use std::collections::BTreeMap;

use nabla_core::{HSeries, HalfLaurent, Rational, ZPoly};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

/// A parsed polynomial, tagged by the variable it was written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Polynomial {
    Laurent(HalfLaurent),
    Z(ZPoly),
    Series(HSeries),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    T,
    Z,
    H,
}

/// Exponents are in units of 1/2 for `t`, plain integers otherwise.
struct Parsed {
    var: Option<Var>,
    terms: BTreeMap<i64, Rational>,
    big_o: Option<(usize, usize)>,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser {
            chars,
            pos: 0,
            text,
        }
    }

    /// Byte offset of the current token in the original text.
    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(i, _)| i)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            err(self.offset(), format!("expected '{c}'"))
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return err(self.offset(), "expected digits");
        }
        let s: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn signed_int(&mut self) -> Result<BigInt, ParseError> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let d = self.digits()?;
        Ok(if neg { -d } else { d })
    }

    fn small(&self, at: usize, v: BigInt) -> Result<i64, ParseError> {
        i64::try_from(v).or_else(|_| err(at, "exponent out of range"))
    }

    fn coeff(&mut self) -> Result<Rational, ParseError> {
        let num = self.digits()?;
        if self.eat('/') {
            let at = self.offset();
            let den = self.digits()?;
            if den.is_zero() {
                return err(at, "zero denominator");
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    /// Exponent in half units.
    fn exponent(&mut self) -> Result<i64, ParseError> {
        if !self.eat('^') {
            return Ok(2);
        }
        let at = self.offset();
        if self.eat('(') {
            let num = self.signed_int()?;
            let num = self.small(at, num)?;
            let twice = if self.eat('/') {
                let dat = self.offset();
                let den = self.digits()?;
                match self.small(dat, den)? {
                    1 => 2 * num,
                    2 => num,
                    _ => return err(dat, "exponent denominator must be 1 or 2"),
                }
            } else {
                2 * num
            };
            self.expect(')')?;
            Ok(twice)
        } else {
            let n = self.signed_int()?;
            Ok(2 * self.small(at, n)?)
        }
    }

    fn parse(mut self) -> Result<Parsed, ParseError> {
        let mut out = Parsed {
            var: None,
            terms: BTreeMap::new(),
            big_o: None,
        };
        if self.chars.is_empty() {
            return err(0, "empty input");
        }
        let mut first = true;
        loop {
            let at = self.offset();
            let negative = match self.peek() {
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some('+') => {
                    self.pos += 1;
                    false
                }
                None => break,
                Some(_) if first => false,
                Some(c) => return err(at, format!("unexpected '{c}'")),
            };
            first = false;
            if out.big_o.is_some() {
                return err(at, "terms after O(h^k)");
            }
            let term_at = self.offset();
            if self.peek() == Some('O') {
                if negative {
                    return err(term_at, "O(h^k) cannot be negated");
                }
                self.pos += 1;
                self.expect('(')?;
                self.set_var(&mut out, Var::H, term_at)?;
                self.expect('h')?;
                self.expect('^')?;
                let kat = self.offset();
                let k = self.digits()?;
                let k = self.small(kat, k)?;
                if k < 1 {
                    return err(kat, "O(h^k) needs k >= 1");
                }
                self.expect(')')?;
                out.big_o = Some(((k - 1) as usize, term_at));
                continue;
            }
            let mut c = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let c = self.coeff()?;
                if self.eat('*') && !matches!(self.peek(), Some('t' | 'z' | 'h')) {
                    return err(self.offset(), "expected a variable after '*'");
                }
                Some(c)
            } else {
                None
            };
            let var_at = self.offset();
            let var = match self.peek() {
                Some('t') => Some(Var::T),
                Some('z') => Some(Var::Z),
                Some('h') => Some(Var::H),
                Some(ch) if c.is_none() => return err(var_at, format!("unexpected '{ch}'")),
                None if c.is_none() => return err(var_at, "unexpected end of input"),
                _ => None,
            };
            let exp = match var {
                Some(v) => {
                    self.pos += 1;
                    self.set_var(&mut out, v, var_at)?;
                    let e = self.exponent()?;
                    if v != Var::T && (e < 0 || e % 2 != 0) {
                        return err(var_at, "exponents of z and h must be non-negative integers");
                    }
                    e
                }
                None => 0,
            };
            let mut coeff = c.take().unwrap_or_else(|| Rational::from_integer(1.into()));
            if negative {
                coeff = -coeff;
            }
            let slot = out.terms.entry(exp).or_insert_with(Rational::zero);
            *slot += coeff;
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn set_var(&self, out: &mut Parsed, v: Var, at: usize) -> Result<(), ParseError> {
        match out.var {
            Some(w) if w != v => err(at, "mixed variables"),
            _ => {
                out.var = Some(v);
                Ok(())
            }
        }
    }
}

fn to_laurent(p: &Parsed) -> HalfLaurent {
    HalfLaurent::from_terms(p.terms.iter().map(|(&k, c)| (k, c.clone())))
}

fn to_zpoly(p: &Parsed) -> Result<ZPoly, ParseError> {
    let Some((&top, _)) = p.terms.iter().next_back() else {
        return Ok(ZPoly::new(0, Vec::new()));
    };
    // exponents are stored doubled
    let parity = (top / 2) % 2;
    if p.terms.keys().any(|&k| (k / 2) % 2 != parity) {
        return err(0, "z-polynomial mixes even and odd powers of z");
    }
    let mut coeffs = vec![Rational::zero(); ((top / 2 - parity) / 2 + 1) as usize];
    for (&k, c) in &p.terms {
        coeffs[((k / 2 - parity) / 2) as usize] = c.clone();
    }
    Ok(ZPoly::new(parity as u32, coeffs))
}

fn to_series(p: &Parsed, default_order: usize) -> Result<HSeries, ParseError> {
    let order = p.big_o.map_or(default_order, |(o, _)| o);
    if let Some((&top, _)) = p.terms.iter().next_back() {
        if (top / 2) as usize > order {
            let at = p.big_o.map_or(0, |(_, at)| at);
            return err(
                at,
                format!("term h^{} beyond the truncation order", top / 2),
            );
        }
    }
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (&k, c) in &p.terms {
        coeffs[(k / 2) as usize] = c.clone();
    }
    Ok(HSeries::from_coeffs(coeffs, order))
}

/// Parses any polynomial; constants read as Laurent polynomials.
pub fn parse_polynomial(text: &str, default_order: usize) -> Result<Polynomial, ParseError> {
    let p = Parser::new(text).parse()?;
    match p.var {
        None | Some(Var::T) => Ok(Polynomial::Laurent(to_laurent(&p))),
        Some(Var::Z) => Ok(Polynomial::Z(to_zpoly(&p)?)),
        Some(Var::H) => Ok(Polynomial::Series(to_series(&p, default_order)?)),
    }
}

fn expect_var(text: &str, want: Var) -> Result<Parsed, ParseError> {
    let p = Parser::new(text).parse()?;
    match p.var {
        Some(v) if v != want => {
            let name = match want {
                Var::T => "t",
                Var::Z => "z",
                Var::H => "h",
            };
            err(0, format!("expected a polynomial in {name}"))
        }
        _ => Ok(p),
    }
}

/// Parses a Laurent polynomial in `t^(1/2)`.
pub fn parse_laurent(text: &str) -> Result<HalfLaurent, ParseError> {
    expect_var(text, Var::T).map(|p| to_laurent(&p))
}

/// Parses a polynomial in `z` of a single parity.
pub fn parse_zpoly(text: &str) -> Result<ZPoly, ParseError> {
    to_zpoly(&expect_var(text, Var::Z)?)
}

/// Parses a truncated series in `h`. Without an `O(h^k)` term the order is
/// `default_order`.
pub fn parse_series(text: &str, default_order: usize) -> Result<HSeries, ParseError> {
    to_series(&expect_var(text, Var::H)?, default_order)
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let t = text.trim();
    let mut p = Parser::new(t);
    let neg = p.eat('-');
    let c = p.coeff()?;
    if p.peek().is_some() {
        return err(p.offset(), "trailing characters in rational");
    }
    Ok(if neg { -c } else { c })
}

/// Positive integer, as used for torsion orders.
pub fn parse_positive(text: &str) -> Result<u64, ParseError> {
    match text.trim().parse::<u64>() {
        Ok(v) if v > 0 => Ok(v),
        _ => err(0, format!("expected a positive integer, found {text:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nabla_core::rational::{frac, int};

    #[test]
    fn examples() {
        assert_eq!(
            parse_zpoly("1 + z^2").unwrap(),
            ZPoly::new(0, vec![int(1), int(1)])
        );
        assert_eq!(
            parse_zpoly("1+z^2").unwrap(),
            ZPoly::new(0, vec![int(1), int(1)])
        );
        assert_eq!(
            parse_laurent("t - 1 + t^-1").unwrap(),
            HalfLaurent::from_terms([(-2, int(1)), (0, int(-1)), (2, int(1))])
        );
        assert_eq!(parse_laurent("t^(1/2)").unwrap(), HalfLaurent::t_half());
        assert_eq!(
            parse_laurent("-1/2*t^(-3/2)").unwrap(),
            HalfLaurent::monomial(-3, frac(-1, 2))
        );
        assert_eq!(parse_zpoly("3*z").unwrap(), ZPoly::new(1, vec![int(3)]));
        assert_eq!(parse_zpoly("0").unwrap(), ZPoly::new(0, vec![]));
    }

    #[test]
    fn series_order() {
        let s = parse_series("1 - 1/24*h^2 + O(h^5)", 16).unwrap();
        assert_eq!(s.order(), 4);
        assert_eq!(s.coeff(2), frac(-1, 24));
        assert_eq!(parse_series("h", 3).unwrap().order(), 3);
        assert!(parse_series("h^5 + O(h^3)", 16).is_err());
    }

    #[test]
    fn positions() {
        assert_eq!(parse_laurent("1 + t^x").unwrap_err().position, 6);
        assert_eq!(parse_zpoly("1 + z + z^2").unwrap_err().position, 0);
        assert_eq!(parse_laurent("t + z").unwrap_err().position, 4);
        assert_eq!(parse_laurent("1 +").unwrap_err().position, 3);
        assert_eq!(parse_laurent("").unwrap_err().position, 0);
        assert!(parse_zpoly("z^-1").is_err());
        assert!(parse_laurent("t^(1/3)").is_err());
        assert!(parse_laurent("1/0").is_err());
    }

    #[test]
    fn kinds() {
        assert!(matches!(
            parse_polynomial("2", 4).unwrap(),
            Polynomial::Laurent(_)
        ));
        assert!(matches!(
            parse_polynomial("z", 4).unwrap(),
            Polynomial::Z(_)
        ));
        assert!(matches!(
            parse_polynomial("O(h^2)", 4).unwrap(),
            Polynomial::Series(_)
        ));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/").is_err());
        assert_eq!(parse_positive("25").unwrap(), 25);
        assert!(parse_positive("0").is_err());
    }
}
