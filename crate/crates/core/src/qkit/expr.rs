//! Closed series expressions: sums, products and quotients of term families.
//!
//! Identities are stored as pairs of [`Expr`] values. Evaluation runs every
//! node at one working accuracy and [`Expr::eval`] raises that accuracy until
//! the root is known through the requested order.

use std::ops::{Add, Div, Mul, Neg, Sub};

use super::family::{sum_family, HyperFamily, Len, Poch};
use crate::error::Result;
use crate::ring::{at_accuracy, Monomial, QSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Fam(HyperFamily),
    Sum(Vec<Expr>),
    Prod(Vec<Expr>),
    Neg(Box<Expr>),
    Quot(Box<Expr>, Box<Expr>),
    /// Multiplication by a monomial.
    Scale(Monomial, Box<Expr>),
    /// `q -> q^t`.
    QPower(i64, Box<Expr>),
    /// `q -> -q` applied to an already-built series.
    QNegate(Box<Expr>),
    /// A series computed elsewhere, known only through its own accuracy.
    Known(QSeries),
}

impl Expr {
    pub fn mono(m: Monomial) -> Self {
        Expr::Fam(HyperFamily::product(m))
    }

    pub fn int(c: i64) -> Self {
        Self::mono(Monomial::int(c))
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// Product of Pochhammer factors times `coeff`, all evaluated with `qsign`.
    pub fn product<I: IntoIterator<Item = Poch>>(coeff: Monomial, factors: I) -> Self {
        let mut f = HyperFamily::product(coeff);
        f.factors.extend(factors);
        Expr::Fam(f)
    }

    pub fn scale(self, m: Monomial) -> Self {
        Expr::Scale(m, Box::new(self))
    }

    pub fn q_power(self, t: i64) -> Self {
        Expr::QPower(t, Box::new(self))
    }

    pub fn q_negate(self) -> Self {
        Expr::QNegate(Box::new(self))
    }

    /// Evaluates at working accuracy `w`; the result may be known to less.
    pub fn eval_at(&self, w: i64) -> Result<QSeries> {
        Ok(match self {
            Expr::Fam(f) => sum_family(f, w)?,
            Expr::Sum(xs) => {
                let mut it = xs.iter();
                let mut s = match it.next() {
                    Some(x) => x.eval_at(w)?,
                    None => return Ok(QSeries::zero(w)),
                };
                for x in it {
                    s.add_assign(&x.eval_at(w)?);
                }
                s
            }
            Expr::Prod(xs) => {
                let mut s = QSeries::one(w);
                for x in xs {
                    s = s.mul(&x.eval_at(w)?);
                }
                s
            }
            Expr::Neg(x) => x.eval_at(w)?.neg(),
            Expr::Quot(a, b) => a.eval_at(w)?.div(&b.eval_at(w)?)?,
            Expr::Scale(m, x) => x.eval_at(w - m.q)?.scale(m),
            Expr::QPower(t, x) => x.eval_at(w.div_euclid(*t))?.q_power(*t)?,
            Expr::QNegate(x) => x.eval_at(w)?.q_negate(),
            Expr::Known(s) => s.truncate(w),
        })
    }

    /// The expansion through exactly `q^acc`.
    pub fn eval(&self, acc: i64) -> Result<QSeries> {
        at_accuracy(acc, |w| self.eval_at(w))
    }
}

impl From<HyperFamily> for Expr {
    fn from(f: HyperFamily) -> Self {
        Expr::Fam(f)
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        match self {
            Expr::Sum(mut xs) => {
                xs.push(rhs);
                Expr::Sum(xs)
            }
            x => Expr::Sum(vec![x, rhs]),
        }
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        self + (-rhs)
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        match self {
            Expr::Neg(x) => *x,
            x => Expr::Neg(Box::new(x)),
        }
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        match self {
            Expr::Prod(mut xs) => {
                xs.push(rhs);
                Expr::Prod(xs)
            }
            x => Expr::Prod(vec![x, rhs]),
        }
    }
}

impl Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::Quot(Box::new(self), Box::new(rhs))
    }
}

/// `(arg; q^t)_inf`.
pub fn pinf(arg: Monomial, t: i64) -> Poch {
    Poch::new(arg, t, Len::Inf)
}

/// `(arg; q^t)_{k n + c}`.
pub fn pfin(arg: Monomial, t: i64, k: i64, c: i64) -> Poch {
    Poch::new(arg, t, Len::Fin(k, c))
}

/// Shorthand for [`Monomial::new`].
pub fn mono(c: i64, z: i32, a: i32, q: i64) -> Monomial {
    Monomial::new(c, z, a, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_valuation_quotients_reach_target() {
        // 1/(1 - z^-1 q^-2) = -z q^2 / (1 - z q^2)
        let e = Expr::one() / Expr::product(Monomial::one(), [pfin(mono(1, -1, 0, -2), 1, 0, 1)]);
        let s = e.eval(9).unwrap();
        assert_eq!(s.acc(), 9);
        assert_eq!(s.val(), 2);
        let direct = Expr::product(mono(-1, 1, 0, 2), [pfin(mono(1, 1, 0, 2), 1, 0, 1).inv()])
            .eval(9)
            .unwrap();
        assert_eq!(s, direct);
    }

    #[test]
    fn q_power_node() {
        let e = Expr::product(Monomial::one(), [pinf(Monomial::q(1), 1)]).q_power(2);
        let direct = Expr::product(Monomial::one(), [pinf(Monomial::q(2), 2)])
            .eval(15)
            .unwrap();
        assert_eq!(e.eval(15).unwrap(), direct);
    }
}
