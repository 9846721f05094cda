//! Classical q-series identities with monomial parameters.
//!
//! Each entry takes its parameters by name plus an optional `base` (a pure
//! power `q^k`, default `q`), meaning the identity is stated with `q -> q^k`
//! while the parameters themselves stay fixed. Analytic side conditions such
//! as `|t| < 1` become formal ones: every sum must have a divergent valuation
//! bound and every denominator must be formally invertible. Violations surface
//! as [`Error::BadParams`].

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::expr::{pfin, pinf, Expr};
use super::family::{HyperFamily, Len, Poch};
use crate::error::{Error, Result};
use crate::instance::{Citation, Expected, IdentityInstance};
use crate::ring::Monomial;

pub type Params = BTreeMap<String, Monomial>;

pub struct ClassicalSpec {
    pub name: &'static str,
    pub title: &'static str,
    pub params: &'static [&'static str],
    pub note: &'static str,
    sides: fn(&Args) -> Result<(Expr, Expr)>,
}

/// Resolved parameters with the base exponent split off.
pub struct Args<'p> {
    params: &'p Params,
    k: i64,
}

impl Args<'_> {
    fn get(&self, name: &str) -> Result<Monomial> {
        self.params
            .get(name)
            .cloned()
            .ok_or_else(|| Error::BadParams(format!("missing parameter `{name}`")))
    }

    fn q(&self, e: i64) -> Monomial {
        Monomial::q(self.k * e)
    }
}

fn inv(m: &Monomial) -> Result<Monomial> {
    m.inv()
        .ok_or_else(|| Error::BadParams(format!("parameter {m} must have coefficient +-1 here")))
}

fn fam() -> HyperFamily {
    HyperFamily::new()
}

fn prod<I: IntoIterator<Item = Poch>>(fs: I) -> Expr {
    Expr::product(Monomial::one(), fs)
}

/// `1 - m` as an expression.
fn one_minus(m: Monomial) -> Expr {
    Expr::product(Monomial::one(), [Poch::new(m, 1, Len::Fin(0, 1))])
}

/// `(1 + 1/b) sum_n (c)_n (-1)^n q^{n(n+1)/2} a^n b^{-n} / ((-aq)_n (-c/b)_{n+1})` in base `q^k`.
pub fn rho3(a: &Monomial, b: &Monomial, c: &Monomial, k: i64) -> Result<Expr> {
    let bi = inv(b)?;
    let sum = fam()
        .ratio(a.mul(&bi).neg())
        .quad(k, k, 0)
        .with(pfin(c.clone(), k, 1, 0))
        .with(pfin(a.mul_q(k).neg(), k, 1, 0).inv())
        .with(pfin(c.mul(&bi).neg(), k, 1, 1).inv());
    Ok(one_minus(bi.neg()) * sum.into())
}

fn q_binomial(p: &Args) -> Result<(Expr, Expr)> {
    let (a, z, k) = (p.get("a")?, p.get("z")?, p.k);
    let lhs = fam()
        .ratio(z.clone())
        .with(pfin(a.clone(), k, 1, 0))
        .with(pfin(p.q(1), k, 1, 0).inv());
    let rhs = prod([pinf(a.mul(&z), k), pinf(z, k).inv()]);
    Ok((lhs.into(), rhs))
}

fn heine(p: &Args) -> Result<(Expr, Expr)> {
    let (a, b, c, z, k) = (p.get("a")?, p.get("b")?, p.get("c")?, p.get("z")?, p.k);
    let lhs = fam()
        .ratio(z.clone())
        .with(pfin(a.clone(), k, 1, 0))
        .with(pfin(b.clone(), k, 1, 0))
        .with(pfin(c.clone(), k, 1, 0).inv())
        .with(pfin(p.q(1), k, 1, 0).inv());
    let az = a.mul(&z);
    let pre = prod([
        pinf(b.clone(), k),
        pinf(az.clone(), k),
        pinf(c.clone(), k).inv(),
        pinf(z.clone(), k).inv(),
    ]);
    let sum = fam()
        .ratio(b.clone())
        .with(pfin(c.mul(&inv(&b)?), k, 1, 0))
        .with(pfin(z, k, 1, 0))
        .with(pfin(az, k, 1, 0).inv())
        .with(pfin(p.q(1), k, 1, 0).inv());
    Ok((lhs.into(), pre * sum.into()))
}

fn gauss_second(p: &Args) -> Result<(Expr, Expr)> {
    let (a, b, k) = (p.get("a")?, p.get("b")?, p.k);
    let qab = a.mul(&b).mul_q(k);
    let lhs = fam()
        .quad(k, k, 0)
        .with(pfin(a.clone(), k, 1, 0))
        .with(pfin(b.clone(), k, 1, 0))
        .with(pfin(p.q(1), k, 1, 0).inv())
        .with(pfin(qab.clone(), 2 * k, 1, 0).inv());
    let rhs = prod([
        pinf(p.q(1).neg(), k),
        pinf(a.mul_q(k), 2 * k),
        pinf(b.mul_q(k), 2 * k),
        pinf(qab, 2 * k).inv(),
    ]);
    Ok((lhs.into(), rhs))
}

fn one_psi_one(p: &Args) -> Result<(Expr, Expr)> {
    let (a, b, t, k) = (p.get("a")?, p.get("b")?, p.get("t")?, p.k);
    let (ai, bi) = (inv(&a)?, inv(&b)?);
    let at = a.mul(&t);
    let b_at = b.mul(&inv(&at)?);
    let pos = fam()
        .ratio(t.clone())
        .with(pfin(a.clone(), k, 1, 0))
        .with(pfin(b.clone(), k, 1, 0).inv());
    let neg = fam()
        .start(1)
        .ratio(b_at.clone())
        .with(pfin(bi.mul_q(k), k, 1, 0))
        .with(pfin(ai.mul_q(k), k, 1, 0).inv());
    let rhs = prod([
        pinf(p.q(1), k),
        pinf(b.mul(&ai), k),
        pinf(at.clone(), k),
        pinf(inv(&at)?.mul_q(k), k),
        pinf(b, k).inv(),
        pinf(ai.mul_q(k), k).inv(),
        pinf(t, k).inv(),
        pinf(b_at, k).inv(),
    ]);
    Ok((Expr::from(pos) + neg.into(), rhs))
}

fn pfaff(p: &Args) -> Result<(Expr, Expr)> {
    let (a, b, c, x, k) = (p.get("a")?, p.get("b")?, p.get("c")?, p.get("x")?, p.k);
    let cb = c.mul(&inv(&b)?);
    let lhs = fam()
        .ratio(x.clone())
        .with(pfin(cb.clone(), k, 1, 0))
        .with(pfin(a.clone(), k, 1, 0))
        .with(pfin(p.q(1), k, 1, 0).inv())
        .with(pfin(c.clone(), k, 1, 0).inv());
    let ax = a.mul(&x);
    let sum = fam()
        .ratio(x.mul(&cb).neg())
        .quad(k, -k, 0)
        .with(pfin(a, k, 1, 0))
        .with(pfin(b, k, 1, 0))
        .with(pfin(p.q(1), k, 1, 0).inv())
        .with(pfin(c, k, 1, 0).inv())
        .with(pfin(ax.clone(), k, 1, 0).inv());
    Ok((
        lhs.into(),
        prod([pinf(ax, k), pinf(x, k).inv()]) * sum.into(),
    ))
}

fn andrews_deep(p: &Args) -> Result<(Expr, Expr)> {
    let (ca, cb, a, b, k) = (p.get("A")?, p.get("B")?, p.get("a")?, p.get("b")?, p.k);
    let (ai, cai) = (inv(&a)?, inv(&ca)?);
    let abq = ca.mul(&b).mul_q(k);
    let lhs = fam()
        .quad(0, 2 * k, 0)
        .with(pfin(cb.clone(), k, 1, 0))
        .with(pfin(abq.neg(), k, 1, 0))
        .with(pfin(a.mul_q(k).neg(), k, 1, 0).inv())
        .with(pfin(b.mul_q(k).neg(), k, 1, 0).inv());
    let pre = Expr::product(
        ai.neg(),
        [
            pinf(cb.clone(), k),
            pinf(abq.neg(), k),
            pinf(b.mul_q(k).neg(), k).inv(),
            pinf(a.mul_q(k).neg(), k).inv(),
        ],
    );
    let s1 = fam()
        .ratio(abq.mul(&ai))
        .with(pfin(cai, k, 1, 0))
        .with(pfin(cb.mul(&ai).neg(), k, 1, 1).inv());
    let s2 = fam()
        .ratio(b.neg())
        .with(pfin(ai.neg(), k, 1, 1))
        .with(pfin(ca.mul(&cb).mul(&ai).mul_q(k).neg(), k, 1, 0))
        .with(pfin(cb.mul(&ai).neg(), k, 1, 1).inv())
        .with(pfin(abq.mul(&ai), k, 1, 1).inv());
    Ok((lhs.into(), pre * s1.into() + one_minus(b.neg()) * s2.into()))
}

fn fine(p: &Args) -> Result<(Expr, Expr)> {
    let (b, u, k) = (p.get("b")?, p.get("u")?, p.k);
    let bu = b.mul(&inv(&u)?);
    let theta = || fam().ratio(bu.clone()).quad(k, k, 0);
    let s1 = theta().with(pfin(b.mul_q(k), k, 1, 0).inv());
    let s2 = fam()
        .quad(0, 2 * k, 0)
        .with(pfin(b.mul_q(k), k, 1, 0).inv())
        .with(pfin(u.mul_q(k).neg(), k, 1, 0).inv());
    let frac = Expr::product(u.clone(), [pfin(u.neg(), k, 0, 1).inv()]);
    let lhs = Expr::from(s1) - frac * s2.into();
    let rhs = prod([pinf(b.mul_q(k), k).inv(), pinf(u.neg(), k).inv()]) * theta().into();
    Ok((lhs, rhs))
}

fn rogers_fine_lhs(a: &Monomial, t: &Monomial, k: i64) -> Expr {
    one_minus(t.clone())
        * fam()
            .ratio(t.clone())
            .with(pfin(a.mul_q(k), k, 1, 0))
            .into()
}

fn rogers_fine_short(p: &Args) -> Result<(Expr, Expr)> {
    let (a, t, k) = (p.get("a")?, p.get("t")?, p.k);
    let rhs = fam()
        .ratio(a.mul(&t).neg())
        .quad(k, k, 0)
        .with(pfin(t.mul_q(k), k, 1, 0).inv());
    Ok((rogers_fine_lhs(&a, &t, k), rhs.into()))
}

fn rogers_fine_long(p: &Args) -> Result<(Expr, Expr)> {
    let (a, t, k) = (p.get("a")?, p.get("t")?, p.k);
    let rhs = fam()
        .ratio(a.mul(&t).mul(&t).neg())
        .quad(3 * k, k, 0)
        .with(pfin(a.mul_q(k), k, 1, 0))
        .with(pfin(t.mul_q(k), k, 1, 0).inv())
        .with(pfin(a.mul(&t), k, 0, 1).shift(k, 2 * k));
    Ok((rogers_fine_lhs(&a, &t, k), rhs.into()))
}

fn geometric_odd(p: &Args) -> Result<(Expr, Expr)> {
    let (x, k) = (p.get("x")?, p.k);
    let lhs = fam().ratio(x.clone()).with(pfin(x.neg(), k, 1, 1).inv());
    let rhs = fam().ratio(x.mul(&x)).with(pfin(p.q(1), 2 * k, 1, 0));
    Ok((lhs.into(), rhs.into()))
}

fn exercise_six(p: &Args) -> Result<(Expr, Expr)> {
    let (x, y, k) = (p.get("x")?, p.get("y")?, p.k);
    let lhs = fam()
        .ratio(y.clone())
        .with(pfin(x.mul(&inv(&y)?).mul_q(k).neg(), 2 * k, 1, 0));
    let rhs = fam()
        .ratio(x)
        .quad(2 * k, 0, 0)
        .with(pfin(y, 2 * k, 1, 1).inv());
    Ok((lhs.into(), rhs.into()))
}

fn two_denominators(p: &Args) -> Result<(Expr, Expr)> {
    let (a, b, k) = (p.get("a")?, p.get("b")?, p.k);
    let lhs = fam()
        .ratio(a.mul(&b))
        .quad(2 * k, 4 * k, 0)
        .with(pfin(a.mul_q(k), k, 1, 1).inv())
        .with(pfin(b.mul_q(k), k, 1, 1).inv());
    let rhs = fam()
        .ratio(a)
        .quad(0, 2 * k, 0)
        .with(pfin(b.mul_q(k), k, 1, 1).inv());
    Ok((lhs.into(), rhs.into()))
}

fn shifted_partial_theta(p: &Args) -> Result<(Expr, Expr)> {
    let (a, k) = (p.get("a")?, p.k);
    let lhs = fam().ratio(a.clone()).quad(2 * k, 4 * k, 0);
    let rhs = fam()
        .ratio(a.clone())
        .quad(k, 3 * k, 0)
        .with(pfin(p.q(1).neg(), k, 1, 0))
        .with(pfin(a.mul_q(2 * k).neg(), 2 * k, 1, 1).inv());
    Ok((lhs.into(), rhs.into()))
}

fn reciprocity(p: &Args) -> Result<(Expr, Expr)> {
    let (a, b, k) = (p.get("a")?, p.get("b")?, p.k);
    let (ai, bi) = (inv(&a)?, inv(&b)?);
    let half = |x: &Monomial, yi: &Monomial| -> Expr {
        one_minus(yi.neg())
            * fam()
                .ratio(x.mul(yi).neg())
                .quad(k, k, 0)
                .with(pfin(x.mul_q(k).neg(), k, 1, 0).inv())
                .into()
    };
    let lhs = half(&a, &bi) - half(&b, &ai);
    let rhs = (Expr::mono(bi.clone()) - Expr::mono(ai.clone()))
        * prod([
            pinf(a.mul(&bi).mul_q(k), k),
            pinf(b.mul(&ai).mul_q(k), k),
            pinf(p.q(1), k),
            pinf(a.mul_q(k).neg(), k).inv(),
            pinf(b.mul_q(k).neg(), k).inv(),
        ]);
    Ok((lhs, rhs))
}

fn kang(p: &Args) -> Result<(Expr, Expr)> {
    let (a, b, c, k) = (p.get("a")?, p.get("b")?, p.get("c")?, p.k);
    let (ai, bi) = (inv(&a)?, inv(&b)?);
    let lhs = rho3(&a, &b, &c, k)? - rho3(&b, &a, &c, k)?;
    let rhs = (Expr::mono(bi.clone()) - Expr::mono(ai.clone()))
        * prod([
            pinf(c.clone(), k),
            pinf(a.mul(&bi).mul_q(k), k),
            pinf(b.mul(&ai).mul_q(k), k),
            pinf(p.q(1), k),
            pinf(c.mul(&ai).neg(), k).inv(),
            pinf(c.mul(&bi).neg(), k).inv(),
            pinf(a.mul_q(k).neg(), k).inv(),
            pinf(b.mul_q(k).neg(), k).inv(),
        ]);
    Ok((lhs, rhs))
}

/// `sum_{n in Z} z^n q^{k n^2}` as two unilateral families.
pub fn theta_expr(z: &Monomial, k: i64) -> Result<Expr> {
    let zi = inv(z)?;
    Ok(Expr::from(fam().ratio(z.clone()).quad(2 * k, 0, 0))
        + fam().start(1).ratio(zi).quad(2 * k, 0, 0).into())
}

fn triple_product(p: &Args) -> Result<(Expr, Expr)> {
    let (z, k) = (p.get("z")?, p.k);
    let rhs = prod([
        pinf(p.q(2), 2 * k),
        pinf(z.mul_q(k).neg(), 2 * k),
        pinf(inv(&z)?.mul_q(k).neg(), 2 * k),
    ]);
    Ok((theta_expr(&z, k)?, rhs))
}

fn euler(p: &Args) -> Result<(Expr, Expr)> {
    let (z, k) = (p.get("z")?, p.k);
    let lhs = fam()
        .ratio(z.neg())
        .quad(2 * k, -2 * k, 0)
        .with(pfin(p.q(2), 2 * k, 1, 0).inv());
    Ok((lhs.into(), prod([pinf(z, 2 * k)])))
}

pub static CLASSICAL: &[ClassicalSpec] = &[
    ClassicalSpec {
        name: "q_binomial",
        title: "q-binomial theorem",
        params: &["a", "z"],
        note: "sum (a)_n z^n/(q)_n = (az)_inf/(z)_inf",
        sides: q_binomial,
    },
    ClassicalSpec {
        name: "heine",
        title: "Heine's transformation of 2phi1",
        params: &["a", "b", "c", "z"],
        note: "2phi1(a,b;c;z) = (b,az)_inf/(c,z)_inf 2phi1(c/b,z;az;b); b must be a unit",
        sides: heine,
    },
    ClassicalSpec {
        name: "gauss_second",
        title: "q-analogue of Gauss's second theorem",
        params: &["a", "b"],
        note: "sum (a)_n(b)_n q^{n(n+1)/2}/((q)_n(qab;q^2)_n) = (-q)_inf(aq,bq;q^2)_inf/(qab;q^2)_inf",
        sides: gauss_second,
    },
    ClassicalSpec {
        name: "one_psi_one",
        title: "Ramanujan's 1psi1 summation",
        params: &["a", "b", "t"],
        note: "bilateral sum as two unilateral halves; formal side condition: both halves have divergent valuation bounds",
        sides: one_psi_one,
    },
    ClassicalSpec {
        name: "pfaff",
        title: "Jackson's q-analogue of Pfaff's transformation",
        params: &["a", "b", "c", "x"],
        note: "sum (c/b)_n(a)_n x^n/((q)_n(c)_n) = (ax)_inf/(x)_inf sum (a)_n(b)_n(-1)^n q^{n(n-1)/2}(xc/b)^n/((q)_n(c)_n(ax)_n)",
        sides: pfaff,
    },
    ClassicalSpec {
        name: "andrews_deep",
        title: "Andrews' three-sum transformation",
        params: &["A", "B", "a", "b"],
        note: "parameters A and a must be units",
        sides: andrews_deep,
    },
    ClassicalSpec {
        name: "fine",
        title: "Fine's identity, corrected signs",
        params: &["b", "u"],
        note: "sum (b/u)^n q^{(n^2+n)/2}/(bq)_n - u/(1+u) sum q^n/((bq)_n(-uq)_n) = sum (b/u)^n q^{(n^2+n)/2}/((bq)_inf(-u)_inf)",
        sides: fine,
    },
    ClassicalSpec {
        name: "rogers_fine_short",
        title: "Fine's function F(a,0;t), first expansion",
        params: &["a", "t"],
        note: "(1-t) sum (aq)_n t^n = sum (-at)^n q^{n(n+1)/2}/(tq)_n",
        sides: rogers_fine_short,
    },
    ClassicalSpec {
        name: "rogers_fine_long",
        title: "Fine's function F(a,0;t), Rogers-Fine expansion",
        params: &["a", "t"],
        note: "(1-t) sum (aq)_n t^n = sum (aq)_n/(tq)_n (-at^2)^n (1-atq^{2n+1}) q^{(3n^2+n)/2}",
        sides: rogers_fine_long,
    },
    ClassicalSpec {
        name: "geometric_odd",
        title: "Andrews-Dixit-Yee expansion",
        params: &["x"],
        note: "sum x^m/(-x)_{m+1} = sum (q;q^2)_m x^{2m}",
        sides: geometric_odd,
    },
    ClassicalSpec {
        name: "exercise_six",
        title: "textbook exercise on (-xq/y;q^2)_m",
        params: &["x", "y"],
        note: "sum (-xq/y;q^2)_m y^m = sum q^{m^2} x^m/(y;q^2)_{m+1}; y must be a unit",
        sides: exercise_six,
    },
    ClassicalSpec {
        name: "two_denominators",
        title: "Andrews' two-denominator identity",
        params: &["a", "b"],
        note: "sum a^n b^n q^{n^2+2n}/((aq)_{n+1}(bq)_{n+1}) = sum a^n q^n/(bq)_{n+1}",
        sides: two_denominators,
    },
    ClassicalSpec {
        name: "shifted_partial_theta",
        title: "lost notebook partial theta expansion",
        params: &["a"],
        note: "sum a^n q^{n^2+2n} = sum (-q)_n a^n q^{n(n+3)/2}/(-aq^2;q^2)_{n+1}",
        sides: shifted_partial_theta,
    },
    ClassicalSpec {
        name: "reciprocity",
        title: "Ramanujan's reciprocity theorem",
        params: &["a", "b"],
        note: "a and b must be units",
        sides: reciprocity,
    },
    ClassicalSpec {
        name: "kang",
        title: "Kang's three-parameter reciprocity theorem",
        params: &["a", "b", "c"],
        note: "verified at monomial specializations only; a and b must be units",
        sides: kang,
    },
    ClassicalSpec {
        name: "triple_product",
        title: "Jacobi triple product",
        params: &["z"],
        note: "sum z^n q^{n^2} = (q^2, -zq, -q/z; q^2)_inf; z must be a unit",
        sides: triple_product,
    },
    ClassicalSpec {
        name: "euler",
        title: "Euler's product expansion",
        params: &["z"],
        note: "sum (-z)^n q^{n^2-n}/(q^2;q^2)_n = (z;q^2)_inf",
        sides: euler,
    },
];

pub fn lookup(name: &str) -> Result<&'static ClassicalSpec> {
    CLASSICAL
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

fn base_exponent(params: &Params) -> Result<i64> {
    match params.get("base") {
        None => Ok(1),
        Some(m) if m.c.is_unit() && m.c.as_i64() == Some(1) && m.z == 0 && m.a == 0 && m.q >= 1 => {
            Ok(m.q)
        }
        Some(m) => Err(Error::BadParams(format!(
            "base must be q^k with k >= 1, got {m}"
        ))),
    }
}

/// The two sides of a classical identity as expressions.
pub fn classical_sides(name: &str, params: &Params) -> Result<(Expr, Expr)> {
    let spec = lookup(name)?;
    for key in params.keys() {
        if key != "base" && !spec.params.contains(&key.as_str()) {
            return Err(Error::BadParams(format!(
                "`{name}` takes no parameter `{key}`"
            )));
        }
    }
    let k = base_exponent(params)?;
    (spec.sides)(&Args { params, k })
}

/// Builds both sides of the named identity through `q^acc`.
pub fn classical(name: &str, params: &Params, acc: i64) -> Result<IdentityInstance> {
    let spec = lookup(name)?;
    let (lhs, rhs) = classical_sides(name, params)?;
    let as_bad = |e: Error| match e {
        Error::NotInvertible(m) | Error::IllegalSpec(m) => Error::BadParams(m),
        Error::NonTerminating { .. } => Error::BadParams(format!(
            "a sum in `{name}` does not converge formally for these parameters"
        )),
        other => other,
    };
    Ok(IdentityInstance {
        id: name.to_string(),
        lhs: lhs.eval(acc).map_err(as_bad)?,
        rhs: rhs.eval(acc).map_err(as_bad)?,
        citation: Citation {
            anchor: spec.title.to_string(),
            quote: spec.note.to_string(),
        },
        default_acc: acc,
        expected: Expected::Pass,
    })
}

/// Machine-readable description of the classical identities.
pub fn classical_catalog() -> Value {
    Value::Array(
        CLASSICAL
            .iter()
            .map(|c| json!({ "name": c.name, "title": c.title, "params": c.params, "optional": ["base"], "note": c.note }))
            .collect(),
    )
}
