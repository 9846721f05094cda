use std::fmt;
use std::str::FromStr;

use super::int::Int;
use super::poly::{Exp, LaurentPoly};
use crate::error::Error;

/// A signed monomial `c * z^z * a^a * q^q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub c: Int,
    pub z: i32,
    pub a: i32,
    pub q: i64,
}

impl Monomial {
    /// Panics if `c` is zero.
    pub fn new(c: impl Into<Int>, z: i32, a: i32, q: i64) -> Self {
        let c = c.into();
        assert!(!c.is_zero(), "monomial coefficient must be nonzero");
        Monomial { c, z, a, q }
    }

    pub fn one() -> Self {
        Self::new(1, 0, 0, 0)
    }

    pub fn int(c: i64) -> Self {
        Self::new(c, 0, 0, 0)
    }

    pub fn q(k: i64) -> Self {
        Self::new(1, 0, 0, k)
    }

    pub fn z() -> Self {
        Self::new(1, 1, 0, 0)
    }

    pub fn a() -> Self {
        Self::new(1, 0, 1, 0)
    }

    pub fn exp(&self) -> Exp {
        Exp::new(self.z, self.a)
    }

    /// The coefficient part `c * z^z * a^a` as a polynomial.
    pub fn coeff_poly(&self) -> LaurentPoly {
        LaurentPoly::term(self.c.clone(), self.exp())
    }

    pub fn is_unit(&self) -> bool {
        self.c.is_unit()
    }

    pub fn neg(&self) -> Self {
        Monomial {
            c: -&self.c,
            ..self.clone()
        }
    }

    pub fn mul(&self, o: &Monomial) -> Self {
        Monomial {
            c: &self.c * &o.c,
            z: self.z + o.z,
            a: self.a + o.a,
            q: self.q + o.q,
        }
    }

    pub fn mul_q(&self, k: i64) -> Self {
        Monomial {
            q: self.q + k,
            ..self.clone()
        }
    }

    /// Multiplies the coefficient by `(-1)^k`.
    pub fn sign_pow(&self, k: i64) -> Self {
        if k.rem_euclid(2) == 1 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Inverse, defined only for coefficient ±1.
    pub fn inv(&self) -> Option<Self> {
        self.is_unit().then(|| Monomial {
            c: self.c.clone(),
            z: -self.z,
            a: -self.a,
            q: -self.q,
        })
    }

    pub fn div(&self, o: &Monomial) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    /// Integer power; negative powers need a unit coefficient.
    pub fn pow(&self, n: i64) -> Option<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let k = n.unsigned_abs();
        let c = base.c.pow(u32::try_from(k).ok()?);
        let k = k as i64;
        Some(Monomial {
            c,
            z: base.z * k as i32,
            a: base.a * k as i32,
            q: base.q * k,
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.c)?;
        for (name, e) in [("z", self.z as i64), ("a", self.a as i64), ("q", self.q)] {
            match e {
                0 => {}
                1 => write!(f, "*{name}")?,
                _ => write!(f, "*{name}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Recursive-descent parser for the monomial grammar
///
/// ```text
/// monomial := sign? factor (('*' | '/') factor)*
/// factor   := integer | var ('^' sign? integer)?
/// var      := 'z' | 'a' | 'q'
/// ```
///
/// so `-z*q^2`, `2*z^-1*a`, `a/z` and `-1` are all accepted.
struct Parser<'s> {
    src: &'s str,
    pos: usize,
}

impl<'s> Parser<'s> {
    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at offset {} in monomial `{}`",
            self.pos, self.src
        ))
    }

    fn integer(&mut self) -> Result<Int, Error> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("bad integer"))
    }

    fn exponent(&mut self) -> Result<i64, Error> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let v = self
            .integer()?
            .as_i64()
            .ok_or_else(|| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn factor(&mut self) -> Result<Monomial, Error> {
        self.skip_ws();
        match self.peek() {
            Some(b'0'..=b'9') => {
                let c = self.integer()?;
                if c.is_zero() {
                    return Err(self.err("zero coefficient"));
                }
                Ok(Monomial {
                    c,
                    z: 0,
                    a: 0,
                    q: 0,
                })
            }
            Some(v @ (b'z' | b'a' | b'q')) => {
                self.pos += 1;
                let e = self.exponent()?;
                let mut m = Monomial::one();
                match v {
                    b'z' => {
                        m.z = i32::try_from(e).map_err(|_| self.err("exponent out of range"))?
                    }
                    b'a' => {
                        m.a = i32::try_from(e).map_err(|_| self.err("exponent out of range"))?
                    }
                    _ => m.q = e,
                }
                Ok(m)
            }
            _ => Err(self.err("expected integer or one of z, a, q")),
        }
    }

    fn monomial(&mut self) -> Result<Monomial, Error> {
        self.skip_ws();
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut m = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    m = m.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    m = m
                        .div(&d)
                        .ok_or_else(|| self.err("division by a non-unit"))?;
                }
                None => break,
                _ => return Err(self.err("unexpected character")),
            }
        }
        Ok(if neg { m.neg() } else { m })
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Parser {
            src: s.trim(),
            pos: 0,
        }
        .monomial()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar() {
        assert_eq!(
            "-z*q^2".parse::<Monomial>().unwrap(),
            Monomial::new(-1, 1, 0, 2)
        );
        assert_eq!(
            "2*z^-1*a".parse::<Monomial>().unwrap(),
            Monomial::new(2, -1, 1, 0)
        );
        assert_eq!(
            "a/z".parse::<Monomial>().unwrap(),
            Monomial::new(1, -1, 1, 0)
        );
        assert_eq!("-1".parse::<Monomial>().unwrap(), Monomial::int(-1));
        assert_eq!("q".parse::<Monomial>().unwrap(), Monomial::q(1));
    }

    #[test]
    fn rejects_bad_input() {
        for s in ["", "x", "2*", "z^", "0*z", "z**a", "2/3"] {
            assert!(s.parse::<Monomial>().is_err(), "{s}");
        }
    }

    #[test]
    fn display_round_trips() {
        let m = Monomial::new(-3, 2, -1, 5);
        assert_eq!(m.to_string(), "-3*z^2*a^-1*q^5");
        assert_eq!(m.to_string().parse::<Monomial>().unwrap(), m);
    }

    #[test]
    fn powers() {
        let m = Monomial::new(-1, 1, 0, 2);
        assert_eq!(m.pow(3).unwrap(), Monomial::new(-1, 3, 0, 6));
        assert_eq!(m.pow(-2).unwrap(), Monomial::new(1, -2, 0, -4));
        assert!(Monomial::int(2).pow(-1).is_none());
    }
}
