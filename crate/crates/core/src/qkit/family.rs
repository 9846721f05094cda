//! Hypergeometric-type term families and the valuation-driven summation engine.
//!
//! A [`HyperFamily`] describes summands of the shape
//!
//! ```text
//! term(n) = coeff * ratio^n * q^((P n^2 + Q n)/2 + R) * prod_f (arg_f q^(base_f + slope_f n); q^step_f)_{len_f(n)}^{power_f}
//! ```
//!
//! where every `coeff`, `ratio` and `arg` is a fixed monomial argument and the
//! remaining powers of `q` belong to the base. Evaluating with `qsign = -1`
//! substitutes `q -> -q` in the base powers only, so arguments that themselves
//! contain `q` are left alone, exactly as when a series `f(x; q)` is evaluated
//! at `q -> -q` with `x` already fixed.

use crate::error::{Error, Result};
use crate::ring::{Monomial, QSeries};

/// Length of a Pochhammer factor as a function of the summation index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Len {
    /// `per_n * n + offset` factors.
    Fin(i64, i64),
    Inf,
}

/// The base `q^t` of a Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QStep(i64);

impl QStep {
    pub fn new(t: i64) -> Result<Self> {
        if t < 1 {
            return Err(Error::BadParams(format!(
                "Pochhammer step must be at least 1, got {t}"
            )));
        }
        Ok(QStep(t))
    }

    pub fn get(self) -> i64 {
        self.0
    }
}

/// One Pochhammer factor `(arg q^(base + slope n); q^step)_len` raised to `power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poch {
    pub arg: Monomial,
    pub base: i64,
    pub slope: i64,
    pub step: i64,
    pub len: Len,
    pub power: i64,
}

impl Poch {
    pub fn new(arg: Monomial, step: i64, len: Len) -> Self {
        Poch {
            arg,
            base: 0,
            slope: 0,
            step,
            len,
            power: 1,
        }
    }

    /// Adds `q^(base + slope n)` to the argument, as base powers of `q`.
    pub fn shift(mut self, base: i64, slope: i64) -> Self {
        self.base += base;
        self.slope += slope;
        self
    }

    pub fn pow(mut self, power: i64) -> Self {
        self.power *= power;
        self
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }

    fn length(&self, n: i64) -> Result<Option<i64>> {
        match self.len {
            Len::Inf => Ok(None),
            Len::Fin(k, c) => {
                let l = k * n + c;
                if l < 0 {
                    return Err(Error::IllegalSpec(format!(
                        "Pochhammer length {k}*n+{c} is negative at n={n}"
                    )));
                }
                Ok(Some(l))
            }
        }
    }

    /// `q`-exponent of the `m`-th factor at index `n`.
    fn exponent(&self, n: i64, m: i64) -> i64 {
        self.arg.q + self.base + self.slope * n + self.step * m
    }

    fn monomial(&self, n: i64, m: i64, qsign: i64) -> Monomial {
        let b = self.base + self.slope * n + self.step * m;
        let mu = self.arg.mul_q(b);
        if qsign < 0 {
            mu.sign_pow(b)
        } else {
            mu
        }
    }

    /// How far multiplying by this factor can lower the valuation at index `n`.
    fn drop_at(&self, n: i64) -> Result<i64> {
        if self.power <= 0 {
            return Ok(0);
        }
        let len = self.length(n)?;
        let mut d = 0;
        let mut m = 0;
        while len.is_none_or(|l| m < l) {
            let e = self.exponent(n, m);
            if e >= 0 {
                break;
            }
            d -= e;
            m += 1;
        }
        Ok(d * self.power)
    }

    /// Index-independent bound on [`Self::drop_at`], valid when `slope >= 0`.
    fn drop_bound(&self) -> i64 {
        if self.power <= 0 {
            return 0;
        }
        let mut d = 0;
        let mut e = self.arg.q + self.base;
        while e < 0 {
            d -= e;
            e += self.step;
        }
        d * self.power
    }

    fn apply(&self, mut s: QSeries, n: i64, qsign: i64) -> Result<QSeries> {
        let len = self.length(n)?;
        let mut m = 0;
        while len.is_none_or(|l| m < l) {
            let mu = self.monomial(n, m, qsign);
            // the factor differs from 1 only beyond the known window from here on
            if mu.q > 0 && mu.q > s.acc() - s.val() {
                break;
            }
            for _ in 0..self.power.abs() {
                s = if self.power > 0 {
                    s.mul_binomial(&mu)
                } else {
                    s.div_binomial(&mu)?
                };
            }
            m += 1;
        }
        Ok(s)
    }
}

/// A family of summands indexed by `n` in `start..=end` (unbounded if `end` is `None`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperFamily {
    pub coeff: Monomial,
    pub ratio: Monomial,
    /// `(P, Q, R)` for the base exponent `(P n^2 + Q n)/2 + R`.
    pub quad: (i64, i64, i64),
    pub factors: Vec<Poch>,
    pub start: i64,
    pub end: Option<i64>,
    pub qsign: i64,
}

impl Default for HyperFamily {
    fn default() -> Self {
        HyperFamily {
            coeff: Monomial::one(),
            ratio: Monomial::one(),
            quad: (0, 0, 0),
            factors: Vec::new(),
            start: 0,
            end: None,
            qsign: 1,
        }
    }
}

impl HyperFamily {
    pub fn new() -> Self {
        Self::default()
    }

    /// A single product: the family restricted to `n = 0`.
    pub fn product(coeff: Monomial) -> Self {
        HyperFamily {
            coeff,
            end: Some(0),
            ..Self::default()
        }
    }

    pub fn coeff(mut self, m: Monomial) -> Self {
        self.coeff = m;
        self
    }

    pub fn ratio(mut self, m: Monomial) -> Self {
        self.ratio = m;
        self
    }

    pub fn quad(mut self, p: i64, q: i64, r: i64) -> Self {
        self.quad = (p, q, r);
        self
    }

    pub fn with(mut self, f: Poch) -> Self {
        self.factors.push(f);
        self
    }

    pub fn start(mut self, n0: i64) -> Self {
        self.start = n0;
        self
    }

    pub fn end(mut self, n1: i64) -> Self {
        self.end = Some(n1);
        self
    }

    pub fn qsign(mut self, s: i64) -> Self {
        self.qsign = if s < 0 { -1 } else { 1 };
        self
    }

    /// Base exponent `(P n^2 + Q n)/2 + R`.
    fn base_exponent(&self, n: i64) -> i64 {
        let (p, q, r) = self.quad;
        (p * n * n + q * n) / 2 + r
    }

    fn validate(&self) -> Result<()> {
        let (p, q, _) = self.quad;
        if (p - q).rem_euclid(2) != 0 {
            return Err(Error::ParityViolation { p, q });
        }
        if self.start < 0 {
            return Err(Error::IllegalSpec(format!(
                "summation must start at n >= 0, got {}",
                self.start
            )));
        }
        for f in &self.factors {
            if f.step < 1 {
                return Err(Error::IllegalSpec(format!(
                    "Pochhammer step must be positive, got {}",
                    f.step
                )));
            }
            if f.power > 0 && f.slope < 0 {
                return Err(Error::IllegalSpec(
                    "numerator factors need a non-negative slope".into(),
                ));
            }
        }
        Ok(())
    }

    /// A proven lower bound on the `q`-valuation of `term(n)`.
    ///
    /// The lead monomial contributes its exponent exactly; denominators never
    /// lower the valuation; each numerator factor lowers it by at most the sum of
    /// its negative exponents, which is bounded independently of `n`.
    pub fn vbound(&self, n: i64) -> i64 {
        let drop: i64 = self.factors.iter().map(Poch::drop_bound).sum();
        self.coeff.q + n * self.ratio.q + self.base_exponent(n) - drop
    }

    /// The `n`-th summand, known through `q^acc`.
    pub fn term(&self, n: i64, acc: i64) -> Result<QSeries> {
        self.validate()?;
        self.term_unchecked(n, acc)
    }

    fn term_unchecked(&self, n: i64, acc: i64) -> Result<QSeries> {
        let e = self.base_exponent(n);
        let ratio = self
            .ratio
            .pow(n)
            .ok_or_else(|| Error::IllegalSpec("negative power of a non-unit ratio".into()))?;
        let mut lead = self.coeff.mul(&ratio).mul_q(e);
        if self.qsign < 0 {
            lead = lead.sign_pow(e);
        }
        let mut margin = 0;
        for f in &self.factors {
            margin += f.drop_at(n)?;
        }
        let mut s = QSeries::monomial(&lead, acc + margin);
        for f in &self.factors {
            if s.is_zero() {
                break;
            }
            s = f.apply(s, n, self.qsign)?;
        }
        debug_assert!(s.acc() >= acc);
        Ok(s.truncate(acc))
    }
}

/// Default index cap for [`sum_family`].
pub fn default_cap(acc: i64) -> i64 {
    10 * (acc + 5)
}

/// Sums the family through `q^acc` with the default index cap.
pub fn sum_family(f: &HyperFamily, acc: i64) -> Result<QSeries> {
    sum_family_capped(f, acc, default_cap(acc))
}

/// Sums `term(n)` over every `n` whose valuation bound is at most `acc`.
///
/// The bound is quadratic with a non-negative leading coefficient whenever the
/// family can converge, so once it exceeds `acc` while non-decreasing, no later
/// index can contribute. Running past `cap` indices signals a family whose
/// bound never exceeds `acc`.
pub fn sum_family_capped(f: &HyperFamily, acc: i64, cap: i64) -> Result<QSeries> {
    f.validate()?;
    let mut total = QSeries::zero(acc);
    let mut n = f.start;
    loop {
        if f.end.is_some_and(|e| n > e) {
            break;
        }
        if n - f.start > cap {
            return Err(Error::NonTerminating { cap, acc });
        }
        let vb = f.vbound(n);
        if vb > acc {
            if f.quad.0 >= 0 && f.vbound(n + 1) >= vb {
                break;
            }
        } else {
            total.add_assign(&f.term_unchecked(n, acc)?);
        }
        n += 1;
    }
    Ok(total)
}

/// `(a; q^t)_n`, exact through `q^acc`.
pub fn poch_finite(a: &Monomial, step: QStep, n: i64, acc: i64) -> Result<QSeries> {
    if n < 0 {
        return Err(Error::BadParams(format!(
            "Pochhammer length must be non-negative, got {n}"
        )));
    }
    sum_family(
        &HyperFamily::product(Monomial::one()).with(Poch::new(
            a.clone(),
            step.get(),
            Len::Fin(0, n),
        )),
        acc,
    )
}

/// `(a; q^t)_inf` through `q^acc`. Factors whose exponent exceeds the known
/// window contribute exactly 1 there and are skipped.
pub fn poch_inf(a: &Monomial, step: QStep, acc: i64) -> Result<QSeries> {
    sum_family(
        &HyperFamily::product(Monomial::one()).with(Poch::new(a.clone(), step.get(), Len::Inf)),
        acc,
    )
}

/// `sum_{n >= 0} m^n q^((P n^2 + Q n)/2)`.
pub fn partial_theta(m: &Monomial, p: i64, q: i64, acc: i64) -> Result<QSeries> {
    if (p - q).rem_euclid(2) != 0 {
        return Err(Error::ParityViolation { p, q });
    }
    if p <= 0 {
        return Err(Error::BadParams(format!(
            "partial theta needs P > 0, got {p}"
        )));
    }
    sum_family(&HyperFamily::new().ratio(m.clone()).quad(p, q, 0), acc)
}

/// `sum_{n in Z} m^n q^(n^2)`, as the `n >= 0` and `n <= -1` halves.
pub fn theta_bilateral(m: &Monomial, acc: i64) -> Result<QSeries> {
    let inv = m.inv().ok_or_else(|| {
        Error::BadParams(format!("bilateral theta needs a unit argument, got {m}"))
    })?;
    let pos = sum_family(&HyperFamily::new().ratio(m.clone()).quad(2, 0, 0), acc)?;
    let neg = sum_family(&HyperFamily::new().ratio(inv).quad(2, 0, 0).start(1), acc)?;
    Ok(pos.add(&neg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Int, LaurentPoly};

    fn coeffs(s: &QSeries) -> Vec<i64> {
        (0..=s.acc())
            .map(|k| s.coeff(k).coeff(Default::default()).as_i64().unwrap())
            .collect()
    }

    #[test]
    fn geometric_family() {
        let s = sum_family(&HyperFamily::new().quad(0, 2, 0), 5).unwrap();
        assert_eq!(coeffs(&s), vec![1; 6]);
    }

    #[test]
    fn finite_poch_expansion() {
        let p = poch_finite(&Monomial::new(1, 1, 0, 1), QStep::new(2).unwrap(), 2, 10).unwrap();
        let want = QSeries::from_terms(
            [
                (0, LaurentPoly::one()),
                (1, "-1*z".parse().unwrap()),
                (3, "-1*z".parse().unwrap()),
                (4, "1*z^2".parse().unwrap()),
            ],
            10,
        );
        assert_eq!(p, want);
        assert_eq!(
            poch_finite(&Monomial::z(), QStep::new(1).unwrap(), 0, 7).unwrap(),
            QSeries::one(7)
        );
    }

    #[test]
    fn euler_product() {
        let p = poch_inf(&Monomial::q(1), QStep::new(1).unwrap(), 12).unwrap();
        assert_eq!(coeffs(&p), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
    }

    #[test]
    fn bilateral_theta_range() {
        let t = theta_bilateral(&Monomial::z(), 4).unwrap();
        assert_eq!(t.coeff(0), &LaurentPoly::one());
        assert_eq!(t.coeff(1), &"1*z^-1 + 1*z".parse().unwrap());
        assert_eq!(t.coeff(4), &"1*z^-2 + 1*z^2".parse().unwrap());
    }

    #[test]
    fn partial_theta_rules() {
        let s = partial_theta(&Monomial::one(), 2, 2, 12).unwrap();
        let want: Vec<i64> = (0..=12)
            .map(|k| [0, 2, 6, 12].contains(&k) as i64)
            .collect();
        assert_eq!(coeffs(&s), want);
        assert_eq!(
            partial_theta(&Monomial::one(), 2, 1, 12),
            Err(Error::ParityViolation { p: 2, q: 1 })
        );
    }

    #[test]
    fn non_divergent_family_is_reported() {
        let f = HyperFamily::new().ratio(Monomial::z());
        assert_eq!(
            sum_family_capped(&f, 5, 50),
            Err(Error::NonTerminating { cap: 50, acc: 5 })
        );
    }

    #[test]
    fn negative_exponent_numerators_keep_accuracy() {
        // (-a/(z q); q^2)_{n+1} lowers the valuation by one
        let f = HyperFamily::new()
            .ratio(Monomial::z())
            .quad(0, 2, 0)
            .with(Poch::new(Monomial::new(-1, -1, 1, -1), 2, Len::Fin(1, 1)));
        let s = sum_family(&f, 8).unwrap();
        assert_eq!(s.acc(), 8);
        assert_eq!(s.val(), -1);
        assert_eq!(
            s.coeff(-1),
            &LaurentPoly::term(Int::ONE, crate::ring::Exp::new(-1, 1))
        );
    }

    #[test]
    fn qsign_leaves_arguments_fixed() {
        // (x q; q)_1 with x = q: at q -> -q the factor is 1 - q * (-q) = 1 + q^2
        let f = HyperFamily::product(Monomial::one())
            .with(Poch::new(Monomial::q(1), 1, Len::Fin(0, 1)).shift(1, 0))
            .qsign(-1);
        let s = sum_family(&f, 4).unwrap();
        assert_eq!(coeffs(&s), vec![1, 0, 1, 0, 0]);
    }
}
