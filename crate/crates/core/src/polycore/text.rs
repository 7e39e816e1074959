//! Canonical text form of [`MPoly`]: `2*y - y^-1`, `3/2*x1^2*t`, `0`.

use std::fmt;

use num::{BigInt, One, Signed, Zero};

use super::{MPoly, Monomial, Rat, VarId};
use crate::error::{Error, Result};

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(v, e)) in self.factors().iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

fn write_rat(f: &mut fmt::Formatter<'_>, c: &Rat) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write_rat(f, &mag)?;
            } else {
                if !mag.is_one() {
                    write_rat(f, &mag)?;
                    f.write_str("*")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(u8),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((st, Tok::Num(s[st..i].parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < b.len() && b[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((st, Tok::Ident(s[st..i].to_string())));
        } else if b"+-*/^()".contains(&c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character {:?}", c as char) });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|&(p, _)| p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn eat(&mut self, sym: u8) -> bool {
        if self.peek() == Some(&Tok::Sym(sym)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut neg = false;
        if self.eat(b'-') {
            neg = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let d = match self.peek() {
                    Some(Tok::Num(n)) if !n.is_zero() => n.clone(),
                    _ => return self.err("expected a nonzero integer divisor"),
                };
                self.pos += 1;
                acc = acc.scale(&Rat::new(BigInt::one(), d));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                MPoly::constant(Rat::from_integer(n))
            }
            Some(Tok::Ident(name)) => {
                let v = match VarId::from_name(&name) {
                    Some(v) => v,
                    None => return self.err(format!("unknown variable {name:?}")),
                };
                self.pos += 1;
                MPoly::var(v)
            }
            Some(Tok::Sym(b'(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                inner
            }
            _ => return self.err("expected a number, variable or '('"),
        };
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let e: i64 = match self.peek() {
            Some(Tok::Num(n)) => match i64::try_from(n.clone()) {
                Ok(e) if e <= u32::MAX as i64 => e,
                _ => return self.err("exponent too large"),
            },
            _ => return self.err("expected an integer exponent"),
        };
        let at = self.here();
        self.pos += 1;
        if neg {
            let inv = base
                .monomial_inverse()
                .ok_or(Error::Parse { pos: at, msg: "negative power of a non-invertible expression".into() })?;
            Ok(inv.pow(e as u32))
        } else {
            Ok(base.pow(e as u32))
        }
    }
}

impl std::str::FromStr for MPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MPoly> {
        let toks = tokenize(s)?;
        if toks.is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty expression".into() });
        }
        let mut p = Parser { toks, pos: 0, end: s.len() };
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return p.err("trailing input");
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(p("-y^-1 + 2*y").to_string(), "2*y - y^-1");
        assert_eq!(p("s2 - s1*s1").to_string(), "-s1^2 + s2");
        assert_eq!(p("(x1+x2)^2").to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!(p("(a - a^-1)*z^-1 + 1").to_string(), "a*z^-1 + 1 - a^-1*z^-1");
        assert_eq!(p("3/2*h + 1 + 1/8*h^2").to_string(), "1/8*h^2 + 3/2*h + 1");
        assert_eq!(p("y - y").to_string(), "0");
        assert_eq!(p("-7/3").to_string(), "-7/3");
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<MPoly>().is_err());
        assert!("q + 1".parse::<MPoly>().is_err());
        assert!("t^-1".parse::<MPoly>().is_err());
        assert!("(y+1)^-1".parse::<MPoly>().is_err());
        assert!("1/0".parse::<MPoly>().is_err());
        assert!("2*".parse::<MPoly>().is_err());
        assert!("x1 x2".parse::<MPoly>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = MPoly> {
        let var = prop_oneof![
            Just(VarId::T),
            Just(VarId::Y),
            Just(VarId::A),
            Just(VarId::Z),
            (1u32..4).prop_map(VarId::X),
            (1u32..4).prop_map(VarId::S),
        ];
        let term = (-9i64..10, 1i64..5, proptest::collection::vec((var, -2i64..4), 0..3)).prop_map(|(n, d, fs)| {
            let fs: Vec<_> = fs.into_iter().map(|(v, e)| (v, if v.is_laurent() { e } else { e.abs() })).collect();
            MPoly::term(Rat::new(n.into(), d.into()), Monomial::new(fs).unwrap())
        });
        proptest::collection::vec(term, 0..5).prop_map(|ts| ts.into_iter().sum())
    }

    proptest! {
        #[test]
        fn text_round_trip(q in arb_poly()) {
            let s = q.to_string();
            prop_assert_eq!(s.parse::<MPoly>().unwrap(), q);
        }
    }
}
