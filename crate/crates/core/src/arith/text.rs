//! Text form of polynomials: `3 * qh^2 u^-1 - 1/2 * v^1 + 4`.
//!
//! Terms are printed in descending monomial order; coefficient one is
//! omitted in front of a non-trivial monomial. Parsing accepts that form
//! plus bare symbols without an exponent.

use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::symbol::Sym;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial at byte {pos}: {msg}")]
pub struct ParsePolyError {
    pub pos: usize,
    pub msg: String,
}

fn write_term(f: &mut fmt::Formatter<'_>, m: &Monomial, c: &Rational, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let a = c.abs();
    if m.is_one() {
        write!(f, "{a}")
    } else if a.is_one() {
        write!(f, "{m}")
    } else {
        write!(f, "{a} * {m}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().iter().rev().enumerate() {
            write_term(f, m, c, i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_factors().is_empty() {
            return write!(f, "{}", self.num());
        }
        write!(f, "({}) / (", self.num())?;
        for (i, (p, e)) in self.den_factors().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})^{e}")?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { s: s.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParsePolyError> {
        Err(ParsePolyError { pos: self.pos, msg: msg.to_string() })
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        core::str::from_utf8(&self.s[start..self.pos]).expect("ascii")
    }

    fn coeff(&mut self) -> Result<Rational, ParsePolyError> {
        let n = self.digits();
        let mut text = String::from(n);
        if self.eat(b'/') {
            self.ws();
            let d = self.digits();
            if d.is_empty() {
                return self.err("expected denominator");
            }
            text.push('/');
            text.push_str(d);
        }
        text.parse::<Rational>().or_else(|_| self.err("bad coefficient"))
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            if self.pos == start && self.s[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        (self.pos > start).then(|| core::str::from_utf8(&self.s[start..self.pos]).expect("ascii"))
    }

    fn monomial(&mut self) -> Result<Monomial, ParsePolyError> {
        let mut m = Monomial::one();
        let mut any = false;
        loop {
            let save = self.pos;
            let Some(name) = self.ident() else {
                self.pos = save;
                break;
            };
            let Some(s) = Sym::from_name(name) else {
                self.pos = save;
                return self.err("unknown symbol");
            };
            let mut e: i64 = 1;
            if self.eat(b'^') {
                let neg = self.eat(b'-');
                self.ws();
                let d = self.digits();
                e = match d.parse::<i64>() {
                    Ok(v) => v,
                    Err(_) => return self.err("bad exponent"),
                };
                if neg {
                    e = -e;
                }
            }
            let total = m.exp(s) as i64 + e;
            let Ok(total) = i32::try_from(total) else {
                return self.err("exponent out of range");
            };
            m.set(s, total);
            any = true;
        }
        if !any {
            return self.err("expected symbol");
        }
        Ok(m)
    }

    fn term(&mut self) -> Result<(Monomial, Rational), ParsePolyError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.coeff()?;
                if self.eat(b'*') {
                    Ok((self.monomial()?, c))
                } else {
                    Ok((Monomial::one(), c))
                }
            }
            Some(_) => Ok((self.monomial()?, Rational::one())),
            None => self.err("unexpected end"),
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly, ParsePolyError> {
        let mut terms = alloc::vec::Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if neg { -c } else { c }));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }

    fn finish(&mut self) -> Result<(), ParsePolyError> {
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = ParsePolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser::new(s);
        let out = p.poly()?;
        p.finish()?;
        Ok(out)
    }
}

impl FromStr for RatFunc {
    type Err = ParsePolyError;
    /// Accepts a bare polynomial, `(num) / (den)` or `(num) / ((f1)^e1 (f2) ...)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser::new(s);
        if !p.eat(b'(') {
            let out = p.poly()?;
            p.finish()?;
            return Ok(RatFunc::from(out));
        }
        let num = p.poly()?;
        if !p.eat(b')') || !p.eat(b'/') || !p.eat(b'(') {
            return p.err("expected `) / (`");
        }
        if p.peek() != Some(b'(') {
            let den = p.poly()?;
            if !p.eat(b')') {
                return p.err("expected `)`");
            }
            p.finish()?;
            return RatFunc::new(num, den).or_else(|_| p.err("zero denominator"));
        }
        let mut den = RatFunc::one();
        while p.eat(b'(') {
            let f = p.poly()?;
            if !p.eat(b')') {
                return p.err("expected `)`");
            }
            let mut e = 1u32;
            if p.eat(b'^') {
                p.ws();
                e = match p.digits().parse() {
                    Ok(v) => v,
                    Err(_) => return p.err("bad exponent"),
                };
            }
            let Ok(fe) = RatFunc::from(f).pow(e as i32) else {
                return p.err("bad factor");
            };
            den = &den * &fe;
        }
        if !p.eat(b')') {
            return p.err("expected `)`");
        }
        p.finish()?;
        let num = RatFunc::from(num);
        num.checked_div(&den).or_else(|_| p.err("zero denominator"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_forms() {
        let p: LaurentPoly = "3 * qh^2 u^-1 - 1/2 * v^1 + 4".parse().unwrap();
        assert_eq!(p.to_string(), "3 * qh^2 u^-1 - 1/2 * v^1 + 4");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let q: LaurentPoly = "-u - u^-1".parse().unwrap();
        assert_eq!(q.to_string(), "-u^1 - u^-1");
    }

    #[test]
    fn rejects_garbage() {
        assert!("3 * zz^2".parse::<LaurentPoly>().is_err());
        assert!("3 +".parse::<LaurentPoly>().is_err());
        assert!("u^".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn ratfunc_round_trip() {
        let a: RatFunc = "(u^2 - 1) / ((qh^2 u^1 - qh^-2 u^-1)^2 (u^1 + 3))".parse().unwrap();
        let again: RatFunc = a.to_string().parse().unwrap();
        assert_eq!(a, again);
    }
}
