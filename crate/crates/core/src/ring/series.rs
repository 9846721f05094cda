//! Truncated Laurent series in `q` with coefficients in [`LaurentPoly`].

use super::int::Int;
use super::monomial::Monomial;
use super::poly::{Exp, LaurentPoly};
use crate::error::{Error, Result};

/// A Laurent series `sum_{k >= val} c_k q^k` known exactly through `q^acc`.
///
/// Coefficients are stored densely for `val..=acc`. The representation is
/// normalized so that the coefficient at `val` is nonzero; the zero series
/// has `val = acc + 1` and no stored coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    pub(super) val: i64,
    pub(super) acc: i64,
    pub(super) coeffs: Vec<LaurentPoly>,
}

static ZERO_POLY: LaurentPoly = LaurentPoly::ZERO;

impl QSeries {
    pub fn zero(acc: i64) -> Self {
        QSeries {
            val: acc + 1,
            acc,
            coeffs: Vec::new(),
        }
    }

    pub fn one(acc: i64) -> Self {
        Self::monomial(&Monomial::one(), acc)
    }

    pub fn monomial(m: &Monomial, acc: i64) -> Self {
        if m.q > acc {
            return Self::zero(acc);
        }
        let mut coeffs = vec![LaurentPoly::zero(); (acc - m.q + 1) as usize];
        coeffs[0] = m.coeff_poly();
        QSeries {
            val: m.q,
            acc,
            coeffs,
        }
    }

    pub fn from_poly(p: LaurentPoly, acc: i64) -> Self {
        Self::from_terms([(0, p)], acc)
    }

    /// Builds a series from `(exponent, coefficient)` pairs; repeated exponents
    /// are summed and exponents above `acc` are dropped.
    pub fn from_terms<I: IntoIterator<Item = (i64, LaurentPoly)>>(terms: I, acc: i64) -> Self {
        let terms: Vec<(i64, LaurentPoly)> = terms
            .into_iter()
            .filter(|(k, p)| *k <= acc && !p.is_zero())
            .collect();
        let Some(val) = terms.iter().map(|(k, _)| *k).min() else {
            return Self::zero(acc);
        };
        let mut coeffs = vec![LaurentPoly::zero(); (acc - val + 1) as usize];
        for (k, p) in terms {
            coeffs[(k - val) as usize].add_scaled(&p, &Int::ONE, Exp::ZERO);
        }
        Self::normalized(val, acc, coeffs)
    }

    fn normalized(val: i64, acc: i64, mut coeffs: Vec<LaurentPoly>) -> Self {
        debug_assert_eq!(coeffs.len() as i64, (acc - val + 1).max(0));
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Self::zero(acc),
            Some(0) => QSeries { val, acc, coeffs },
            Some(i) => {
                coeffs.drain(..i);
                QSeries {
                    val: val + i as i64,
                    acc,
                    coeffs,
                }
            }
        }
    }

    /// Lowest exponent with a nonzero coefficient (`acc + 1` for zero).
    pub fn val(&self) -> i64 {
        self.val
    }

    pub fn acc(&self) -> i64 {
        self.acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^k`; zero below the valuation.
    ///
    /// Panics if `k > acc`, since that coefficient is unknown.
    pub fn coeff(&self, k: i64) -> &LaurentPoly {
        assert!(
            k <= self.acc,
            "coefficient of q^{k} requested beyond accuracy {}",
            self.acc
        );
        if k < self.val {
            &ZERO_POLY
        } else {
            &self.coeffs[(k - self.val) as usize]
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> {
        let val = self.val;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (val + i as i64, c))
    }

    /// Drops everything above `acc`. Truncating to a higher accuracy is a no-op.
    pub fn truncate(&self, acc: i64) -> Self {
        if acc >= self.acc {
            return self.clone();
        }
        if acc < self.val {
            return Self::zero(acc);
        }
        let coeffs = self.coeffs[..(acc - self.val + 1) as usize].to_vec();
        QSeries {
            val: self.val,
            acc,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        QSeries {
            val: self.val,
            acc: self.acc,
            coeffs: self.coeffs.iter().map(LaurentPoly::neg).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.add_scaled(o, &Int::ONE)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add_scaled(o, &Int::from(-1))
    }

    /// `self + c * o`.
    pub fn add_scaled(&self, o: &Self, c: &Int) -> Self {
        let acc = self.acc.min(o.acc);
        let val = self.val.min(o.val);
        if val > acc {
            return Self::zero(acc);
        }
        let mut coeffs = vec![LaurentPoly::zero(); (acc - val + 1) as usize];
        for (k, p) in self.terms().take_while(|(k, _)| *k <= acc) {
            coeffs[(k - val) as usize] = p.clone();
        }
        for (k, p) in o.terms().take_while(|(k, _)| *k <= acc) {
            coeffs[(k - val) as usize].add_scaled(p, c, Exp::ZERO);
        }
        Self::normalized(val, acc, coeffs)
    }

    /// In-place `self += o`, lowering accuracy to the smaller of the two.
    pub fn add_assign(&mut self, o: &Self) {
        let acc = self.acc.min(o.acc);
        let val = self.val.min(o.val);
        if val > acc {
            *self = Self::zero(acc);
            return;
        }
        if val == self.val && acc == self.acc {
            for (k, p) in o.terms().take_while(|(k, _)| *k <= acc) {
                self.coeffs[(k - val) as usize].add_scaled(p, &Int::ONE, Exp::ZERO);
            }
            if self.coeffs[0].is_zero() {
                *self = Self::normalized(self.val, self.acc, std::mem::take(&mut self.coeffs));
            }
            return;
        }
        *self = self.add(o);
    }

    pub fn mul(&self, o: &Self) -> Self {
        let val = self.val + o.val;
        let acc = (self.acc + o.val).min(o.acc + self.val);
        if self.is_zero() || o.is_zero() || val > acc {
            return Self::zero(acc);
        }
        let len = (acc - val + 1) as usize;
        let mut coeffs = Vec::with_capacity(len);
        for k in 0..len {
            let mut c = LaurentPoly::zero();
            let lo = k.saturating_sub(o.coeffs.len() - 1);
            let hi = k.min(self.coeffs.len() - 1);
            for i in lo..=hi {
                let (x, y) = (&self.coeffs[i], &o.coeffs[k - i]);
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                match (x.terms(), y.terms()) {
                    ([(e, u)], _) => c.add_scaled(y, u, *e),
                    (_, [(e, u)]) => c.add_scaled(x, u, *e),
                    _ => c.add_scaled(&x.mul(y), &Int::ONE, Exp::ZERO),
                }
            }
            coeffs.push(c);
        }
        Self::normalized(val, acc, coeffs)
    }

    /// Multiplicative inverse. The lowest coefficient must be `±z^i a^j`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible("zero series".into()));
        }
        let (sign, e) = self.coeffs[0].as_unit().ok_or_else(|| {
            Error::NotInvertible(format!(
                "lowest coefficient {} is not a unit",
                self.coeffs[0]
            ))
        })?;
        let inv_e = Exp::new(-e.z, -e.a);
        let u = Int::from(sign);
        let neg_u = Int::from(-sign);
        let n = self.coeffs.len();
        let mut r: Vec<LaurentPoly> = Vec::with_capacity(n);
        r.push(LaurentPoly::term(u.clone(), inv_e));
        for k in 1..n {
            let mut acc = LaurentPoly::zero();
            for j in 1..=k {
                let (x, y) = (&self.coeffs[j], &r[k - j]);
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                match (x.terms(), y.terms()) {
                    ([(e, c)], _) => acc.add_scaled(y, c, *e),
                    (_, [(e, c)]) => acc.add_scaled(x, c, *e),
                    _ => acc.add_scaled(&x.mul(y), &Int::ONE, Exp::ZERO),
                }
            }
            r.push(acc.scale(&neg_u, inv_e));
        }
        Ok(QSeries {
            val: -self.val,
            acc: self.acc - 2 * self.val,
            coeffs: r,
        })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.invert()?))
    }

    /// Multiplies by the monomial `m`, shifting exponents and accuracy by `m.q`.
    pub fn scale(&self, m: &Monomial) -> Self {
        QSeries {
            val: self.val + m.q,
            acc: self.acc + m.q,
            coeffs: self.coeffs.iter().map(|p| p.scale(&m.c, m.exp())).collect(),
        }
    }

    pub fn scale_int(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero(self.acc);
        }
        self.scale(&Monomial {
            c: c.clone(),
            z: 0,
            a: 0,
            q: 0,
        })
    }

    /// Substitutes `q -> -q`.
    pub fn q_negate(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if (self.val + i as i64).rem_euclid(2) == 1 {
                    p.neg()
                } else {
                    p.clone()
                }
            })
            .collect();
        QSeries {
            val: self.val,
            acc: self.acc,
            coeffs,
        }
    }

    /// Substitutes `q -> q^t`.
    pub fn q_power(&self, t: i64) -> Result<Self> {
        if t < 1 {
            return Err(Error::BadParams(format!(
                "q-power must be positive, got {t}"
            )));
        }
        let acc = t * self.acc + t - 1;
        if self.is_zero() {
            return Ok(Self::zero(acc));
        }
        let val = t * self.val;
        let mut coeffs = vec![LaurentPoly::zero(); (acc - val + 1) as usize];
        for (i, p) in self.coeffs.iter().enumerate() {
            coeffs[i * t as usize] = p.clone();
        }
        Ok(QSeries { val, acc, coeffs })
    }

    /// Multiplies by `(1 - m)`. The factor is known exactly, so accuracy only
    /// moves when `m.q < 0`, in which case both bounds shift by `m.q`.
    pub fn mul_binomial(&self, m: &Monomial) -> Self {
        let e = m.q;
        let (mc, me) = (&m.c, m.exp());
        if e == 0 {
            let f = LaurentPoly::one().sub(&m.coeff_poly());
            let coeffs = self.coeffs.iter().map(|p| p.mul(&f)).collect();
            return Self::normalized(self.val, self.acc, coeffs);
        }
        let neg = -mc;
        let (val, acc) = if e > 0 {
            (self.val, self.acc)
        } else {
            (self.val + e, self.acc + e)
        };
        if val > acc {
            return Self::zero(acc);
        }
        let mut coeffs = vec![LaurentPoly::zero(); (acc - val + 1) as usize];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let k = val + k as i64;
            if k >= self.val {
                *c = self.coeffs[(k - self.val) as usize].clone();
            }
            let j = k - e;
            if j >= self.val && j <= self.acc {
                c.add_scaled(&self.coeffs[(j - self.val) as usize], &neg, me);
            }
        }
        Self::normalized(val, acc, coeffs)
    }

    /// Divides by `(1 - m)`.
    ///
    /// For `m.q > 0` this is the recurrence `r_k = s_k + m r_{k - m.q}`; for
    /// `m.q < 0` the factor is rewritten as `-m (1 - 1/m)`, which needs a unit
    /// `m`; for `m.q = 0` the factor itself must be a unit.
    pub fn div_binomial(&self, m: &Monomial) -> Result<Self> {
        let e = m.q;
        if e == 0 {
            let f = LaurentPoly::one().sub(&m.coeff_poly());
            let (sign, fe) = f.as_unit().ok_or_else(|| {
                Error::NotInvertible(format!("factor (1 - {m}) has no q-free unit inverse"))
            })?;
            let inv = Monomial {
                c: Int::from(sign),
                z: -fe.z,
                a: -fe.a,
                q: 0,
            };
            return Ok(self.scale(&inv));
        }
        if e < 0 {
            let mi = m.inv().ok_or_else(|| {
                Error::NotInvertible(format!("factor (1 - {m}) has a non-unit lowest term"))
            })?;
            return Ok(self.div_binomial(&mi)?.scale(&mi.neg()));
        }
        let e = e as usize;
        let me = m.exp();
        let mut coeffs: Vec<LaurentPoly> = Vec::with_capacity(self.coeffs.len());
        for i in 0..self.coeffs.len() {
            let mut c = self.coeffs[i].clone();
            if i >= e {
                let prev = &coeffs[i - e];
                if !prev.is_zero() {
                    c.add_scaled(prev, &m.c, me);
                }
            }
            coeffs.push(c);
        }
        Ok(QSeries {
            val: self.val,
            acc: self.acc,
            coeffs,
        })
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.invert()? } else { self.clone() };
        if n == 0 {
            return Ok(QSeries::one(base.acc - base.val));
        }
        let mut out = base.clone();
        for _ in 1..n.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }
}

/// Runs `build` at working accuracies `target, target + 4, target + 8, ...`
/// until the result is known through `target`, then truncates to `target`.
///
/// Builders whose intermediate products involve negative valuations lose
/// accuracy in ways that are easier to absorb with a margin than to predict;
/// truncating makes the result independent of the margin that was needed.
pub fn at_accuracy<F>(target: i64, build: F) -> Result<QSeries>
where
    F: Fn(i64) -> Result<QSeries>,
{
    let mut best = i64::MIN;
    for margin in [0, 4, 8, 16, 32, 64, 128] {
        let s = build(target + margin)?;
        if s.acc >= target {
            return Ok(s.truncate(target));
        }
        best = best.max(s.acc);
    }
    Err(Error::InsufficientAccuracy {
        through: target,
        available: best,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> Monomial {
        Monomial::q(k)
    }

    fn geometric(acc: i64) -> QSeries {
        QSeries::from_terms((0..=acc).map(|k| (k, LaurentPoly::one())), acc)
    }

    #[test]
    fn add_cancels() {
        let a = QSeries::one(5).add(&QSeries::monomial(&q(1), 5));
        let b = QSeries::one(5).sub(&QSeries::monomial(&q(1), 5));
        assert_eq!(
            a.add(&b),
            QSeries::from_poly(LaurentPoly::constant(Int::from(2)), 5)
        );
    }

    #[test]
    fn add_disjoint_support() {
        let x = QSeries::monomial(&Monomial::new(1, -1, 1, -1), 5);
        let y = QSeries::monomial(&Monomial::new(1, 1, 0, 1), 5);
        let s = x.add(&y);
        assert_eq!(s.val(), -1);
        assert_eq!(s.terms().count(), 2);
    }

    #[test]
    fn geometric_times_one_minus_q() {
        let g = geometric(10);
        let p = g.mul(&QSeries::one(10).sub(&QSeries::monomial(&q(1), 10)));
        assert_eq!(p, QSeries::one(10));
        assert_eq!(g.mul_binomial(&q(1)), QSeries::one(10));
    }

    #[test]
    fn mul_accuracy_rule() {
        let a = QSeries::one(10).add(&QSeries::monomial(&Monomial::new(1, -1, 1, -1), 10));
        let b = QSeries::one(10).add(&QSeries::monomial(&Monomial::new(1, 1, 0, 1), 10));
        let p = a.mul(&b);
        assert_eq!(p.val(), -1);
        assert_eq!(p.acc(), 9);
        assert_eq!(p.coeff(0), &"1 + 1*a".parse().unwrap());
    }

    #[test]
    fn invert_contracts() {
        let s = QSeries::one(8).sub(&QSeries::monomial(&q(1), 8));
        assert_eq!(s.invert().unwrap(), geometric(8));
        let t = s.scale(&q(1));
        let ti = t.invert().unwrap();
        assert_eq!(ti.val(), -1);
        assert_eq!(ti.acc(), 9 - 2);
        let two_q = QSeries::one(8).add(&QSeries::monomial(&Monomial::new(2, 0, 0, 1), 8));
        assert!(two_q.invert().is_ok());
        let two = QSeries::monomial(&Monomial::int(2), 8).add(&QSeries::monomial(&q(1), 8));
        assert!(matches!(two.invert(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn binomial_division_matches_inversion() {
        let s = geometric(12)
            .scale(&Monomial::new(-1, 2, 1, 0))
            .add(&QSeries::monomial(&Monomial::z(), 12));
        for m in [
            Monomial::new(-1, 1, 0, 3),
            Monomial::new(1, 0, -1, -2),
            Monomial::new(1, 2, 0, 1),
        ] {
            let f = QSeries::one(40).sub(&QSeries::monomial(&m, 40));
            let direct = s.div(&f).unwrap();
            let fast = s.div_binomial(&m).unwrap();
            let through = direct.acc().min(fast.acc());
            assert_eq!(direct.truncate(through), fast.truncate(through), "{m}");
            assert_eq!(fast.mul_binomial(&m), s, "{m}");
        }
    }

    #[test]
    fn q_negate_and_power() {
        let s = QSeries::from_terms((0..=2).map(|k| (k, LaurentPoly::one())), 2);
        let n = s.q_negate();
        assert_eq!(n.coeff(1), &LaurentPoly::one().neg());
        assert_eq!(n.q_negate(), s);
        let p = QSeries::from_terms([(0, LaurentPoly::one()), (1, LaurentPoly::one())], 1)
            .q_power(2)
            .unwrap();
        assert_eq!(p.acc(), 3);
        assert_eq!(p.coeff(2), &LaurentPoly::one());
        assert!(p.coeff(1).is_zero());
    }

    #[test]
    fn accuracy_helper_truncates() {
        let s = at_accuracy(5, |w| Ok(geometric(w).scale(&q(-3)))).unwrap();
        assert_eq!(s.acc(), 5);
        assert_eq!(s.val(), -3);
    }
}
