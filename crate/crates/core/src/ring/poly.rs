//! Laurent polynomials in the two coefficient variables `z` and `a` (alpha).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::int::Int;
use crate::error::Error;

/// Exponent pair `(z, a)`. Orders lexicographically, which is the canonical
/// term order used for storage and for the text form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exp {
    pub z: i32,
    pub a: i32,
}

impl Exp {
    pub const ZERO: Exp = Exp { z: 0, a: 0 };

    pub fn new(z: i32, a: i32) -> Self {
        Exp { z, a }
    }

    #[inline]
    pub fn shift(self, by: Exp) -> Exp {
        Exp {
            z: self.z + by.z,
            a: self.a + by.a,
        }
    }
}

/// A Laurent polynomial with integer coefficients.
///
/// Terms are kept sorted by exponent and no stored coefficient is zero, so two
/// polynomials are equal exactly when their term vectors are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Exp, Int)>,
}

// dense accumulation is used when the product's bounding box is at most this
// many times larger than the number of term pairs
const DENSE_SLACK: usize = 8;

impl LaurentPoly {
    pub const ZERO: LaurentPoly = LaurentPoly { terms: Vec::new() };

    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Int::ONE)
    }

    pub fn constant(c: Int) -> Self {
        Self::term(c, Exp::ZERO)
    }

    pub fn term(c: Int, e: Exp) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: vec![(e, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp, Int)>>(it: I) -> Self {
        let mut map: BTreeMap<Exp, Int> = BTreeMap::new();
        for (e, c) in it {
            *map.entry(e).or_insert(Int::ZERO) += &c;
        }
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Exp, Int)] {
        &self.terms
    }

    pub fn coeff(&self, e: Exp) -> Int {
        match self.terms.binary_search_by(|(x, _)| x.cmp(&e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    /// If the polynomial is a single term with coefficient ±1, returns it.
    pub fn as_unit(&self) -> Option<(i64, Exp)> {
        match self.terms.as_slice() {
            [(e, c)] if c.is_unit() => Some((c.as_i64().unwrap(), *e)),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Int::ONE, Exp::ZERO);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Int::from(-1), Exp::ZERO);
        out
    }

    /// Multiplies by the monomial `c * z^e.z * a^e.a`.
    pub fn scale(&self, c: &Int, e: Exp) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(x, v)| (x.shift(e), v * c))
                .collect(),
        }
    }

    /// `self += c * z^e.z * a^e.a * other`, merging in place.
    pub fn add_scaled(&mut self, other: &Self, c: &Int, e: Exp) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.scale(c, e);
            return;
        }
        let unit = c.as_i64();
        let lhs = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(lhs.len() + other.terms.len());
        let mut i = lhs.into_iter().peekable();
        let mut j = other.terms.iter().peekable();
        loop {
            let ord = match (i.peek(), j.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some((x, _)), Some((y, _))) => x.cmp(&y.shift(e)),
            };
            match ord {
                Ordering::Less => out.push(i.next().unwrap()),
                Ordering::Greater => {
                    let (y, v) = j.next().unwrap();
                    out.push((y.shift(e), scaled(v, c, unit)));
                }
                Ordering::Equal => {
                    let (x, mut u) = i.next().unwrap();
                    let (_, v) = j.next().unwrap();
                    match unit {
                        Some(1) => u += v,
                        Some(-1) => u -= v,
                        _ => u += &(v * c),
                    }
                    if !u.is_zero() {
                        out.push((x, u));
                    }
                }
            }
        }
        self.terms = out;
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.scale(c, *e);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.scale(c, *e);
        }
        if let Some(p) = self.mul_dense(other) {
            return p;
        }
        let mut map: BTreeMap<Exp, Int> = BTreeMap::new();
        for (x, u) in &self.terms {
            for (y, v) in &other.terms {
                *map.entry(x.shift(*y)).or_insert(Int::ZERO) += &(u * v);
            }
        }
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn bbox(&self) -> (i32, i32, i32, i32) {
        let zmin = self.terms.first().unwrap().0.z;
        let zmax = self.terms.last().unwrap().0.z;
        let amin = self.terms.iter().map(|t| t.0.a).min().unwrap();
        let amax = self.terms.iter().map(|t| t.0.a).max().unwrap();
        (zmin, zmax, amin, amax)
    }

    /// Word-size accumulation on a dense grid; `None` when coefficients are big,
    /// the grid would be too sparse, or an accumulator overflows.
    fn mul_dense(&self, other: &Self) -> Option<Self> {
        let small =
            |p: &Self| -> Option<Vec<i64>> { p.terms.iter().map(|(_, c)| c.as_i64()).collect() };
        let cu = small(self)?;
        let cv = small(other)?;
        let (z0, z1, a0, a1) = self.bbox();
        let (w0, w1, b0, b1) = other.bbox();
        let zlo = z0 + w0;
        let alo = a0 + b0;
        let width = (a1 + b1 - alo + 1) as usize;
        let height = (z1 + w1 - zlo + 1) as usize;
        let cells = width.checked_mul(height)?;
        if cells > DENSE_SLACK * self.terms.len() * other.terms.len() + 64 {
            return None;
        }
        let mut grid = vec![0i128; cells];
        for ((x, _), u) in self.terms.iter().zip(&cu) {
            for ((y, _), v) in other.terms.iter().zip(&cv) {
                let idx = (x.z + y.z - zlo) as usize * width + (x.a + y.a - alo) as usize;
                grid[idx] = grid[idx].checked_add(*u as i128 * *v as i128)?;
            }
        }
        let mut terms = Vec::new();
        for (idx, v) in grid.into_iter().enumerate() {
            if v != 0 {
                let e = Exp::new(zlo + (idx / width) as i32, alo + (idx % width) as i32);
                terms.push((e, Int::from_i128(v)));
            }
        }
        Some(LaurentPoly { terms })
    }

    /// Applies `z -> sz * z`, `a -> sa * a` for signs `sz, sa`.
    pub fn sign_substitute(&self, sz: i64, sa: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut s = 1;
                    if sz < 0 && e.z.rem_euclid(2) == 1 {
                        s = -s;
                    }
                    if sa < 0 && e.a.rem_euclid(2) == 1 {
                        s = -s;
                    }
                    (*e, if s < 0 { -c } else { c.clone() })
                })
                .collect(),
        }
    }
}

#[inline]
fn scaled(v: &Int, c: &Int, unit: Option<i64>) -> Int {
    match unit {
        Some(1) => v.clone(),
        Some(-1) => -v,
        _ => v * c,
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical form: terms ascending by `(z, a)`, each `<int>[*z^i][*a^j]`,
    /// joined by ` + `; exponent 1 is written bare and exponent 0 omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            write_var(f, "z", e.z)?;
            write_var(f, "a", e.a)?;
        }
        Ok(())
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, e: i32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "*{name}"),
        _ => write!(f, "*{name}^{e}"),
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the canonical form. Terms may appear in any order and repeated
    /// exponents are summed.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        for raw in s.split(" + ") {
            let mut parts = raw.trim().split('*');
            let c: Int = parts
                .next()
                .unwrap_or("")
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in term `{raw}`")))?;
            let mut e = Exp::ZERO;
            for p in parts {
                let (name, exp) = match p.split_once('^') {
                    Some((n, x)) => (
                        n.trim(),
                        x.trim()
                            .parse::<i32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{raw}`")))?,
                    ),
                    None => (p.trim(), 1),
                };
                match name {
                    "z" => e.z += exp,
                    "a" => e.a += exp,
                    _ => {
                        return Err(Error::Parse(format!(
                            "unknown variable `{name}` in `{raw}`"
                        )))
                    }
                }
            }
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation_in_sum() {
        // (z + a) + (z - a) = 2z
        assert_eq!(p("1*z + 1*a").add(&p("1*z + -1*a")), p("2*z"));
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p("1 + -1*z").mul(&p("1 + 1*z")), p("1 + -1*z^2"));
    }

    #[test]
    fn inverse_monomials() {
        assert_eq!(p("1*z*a^-1").mul(&p("1*z^-1*a")), LaurentPoly::one());
    }

    #[test]
    fn canonical_text() {
        let x = p("3*a^2 + -1*z^-1 + 2*z*a + 5");
        assert_eq!(x.to_string(), "-1*z^-1 + 5 + 3*a^2 + 2*z*a");
        assert_eq!(p(&x.to_string()), x);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn dense_and_sparse_products_agree() {
        let a = p("1*z^-7*a^3 + 2*z*a + -3*z^9*a^-4 + 1");
        let b = p("1*z^5 + -1*a^6 + 4*z^-2*a^-2");
        let dense = a.mul(&b);
        let sparse = LaurentPoly::from_terms(
            a.terms()
                .iter()
                .flat_map(|(x, u)| b.terms().iter().map(move |(y, v)| (x.shift(*y), u * v))),
        );
        assert_eq!(dense, sparse);
    }

    #[test]
    fn products_overflowing_i64_fall_back() {
        let big = LaurentPoly::from_terms([
            (Exp::ZERO, Int::from(i64::MAX)),
            (Exp::new(1, 0), Int::from(i64::MAX)),
        ]);
        let sq = big.mul(&big);
        assert_eq!(
            sq.coeff(Exp::new(1, 0)),
            &(&Int::from(i64::MAX) * &Int::from(i64::MAX)) * &Int::from(2)
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("1*w".parse::<LaurentPoly>().is_err());
        assert!("x*z".parse::<LaurentPoly>().is_err());
    }
}
