//! The third-order mock theta family: omega, nu and phi, their two- and
//! three-variable generalizations, and the auxiliary series built from them.
//!
//! Every builder takes monomial arguments and a `q`-sign. With `qsign = -1`
//! the series is evaluated at `-q` while the arguments stay fixed, so
//! `nu_tri(a^2/z, -a^2/z)` at `-q` negates only the `q`-powers written in the
//! definition. This is folded into each term; [`MockSpec::build_negated`] is
//! the independent route through [`QSeries::q_negate`].

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::instance::{Citation, Expected, IdentityInstance};
use crate::qkit::{Expr, HyperFamily, Len, Poch, QStep};
use crate::ring::{Monomial, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Omega,
    Nu,
    OmegaBi,
    NuBi,
    Nu1,
    Omega0,
    Nu0,
    Omega1,
    NuTri,
    Phi,
    BigG,
    G3,
    Rho3,
    OmegaStar,
    NuStar,
    FFunc,
    GDef,
    HDef,
}

impl Family {
    pub const ALL: [Family; 18] = [
        Family::Omega,
        Family::Nu,
        Family::OmegaBi,
        Family::NuBi,
        Family::Nu1,
        Family::Omega0,
        Family::Nu0,
        Family::Omega1,
        Family::NuTri,
        Family::Phi,
        Family::BigG,
        Family::G3,
        Family::Rho3,
        Family::OmegaStar,
        Family::NuStar,
        Family::FFunc,
        Family::GDef,
        Family::HDef,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Omega => "omega",
            Family::Nu => "nu",
            Family::OmegaBi => "omega_bi",
            Family::NuBi => "nu_bi",
            Family::Nu1 => "nu1",
            Family::Omega0 => "omega0",
            Family::Nu0 => "nu0",
            Family::Omega1 => "omega1",
            Family::NuTri => "nu_tri",
            Family::Phi => "phi",
            Family::BigG => "bigG",
            Family::G3 => "g3",
            Family::Rho3 => "rho3",
            Family::OmegaStar => "omega_star",
            Family::NuStar => "nu_star",
            Family::FFunc => "F_func",
            Family::GDef => "G_def",
            Family::HDef => "H_def",
        }
    }

    /// Argument names in positional order.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Family::Omega | Family::Nu | Family::Phi => &[],
            Family::OmegaBi | Family::NuBi | Family::Nu1 => &["z"],
            Family::G3 => &["x"],
            Family::Omega0 | Family::Nu0 => &["y", "z"],
            Family::BigG => &["a", "b"],
            Family::Rho3 => &["a", "b", "c"],
            Family::Omega1
            | Family::NuTri
            | Family::OmegaStar
            | Family::NuStar
            | Family::FFunc
            | Family::GDef
            | Family::HDef => &["a", "z"],
        }
    }

    pub fn arity(self) -> usize {
        self.params().len()
    }

    pub fn from_name(name: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    fn summary(self) -> &'static str {
        match self {
            Family::Omega => "sum q^(2n^2+2n)/(q;q^2)_(n+1)^2",
            Family::Nu => "sum q^(n^2+n)/(-q;q^2)_(n+1)",
            Family::OmegaBi => "sum z^n q^(2n^2+2n)/((q;q^2)_(n+1)(zq;q^2)_(n+1))",
            Family::NuBi => "sum q^(n^2+n)/(-zq;q^2)_(n+1)",
            Family::Nu1 => "sum z^n q^(n^2+n)/(-q;q^2)_(n+1)",
            Family::Omega0 => "sum y^n z^n q^(2n^2+2n)/((yq;q^2)_(n+1)(zq;q^2)_(n+1)); y lives in the a slot",
            Family::Nu0 => "sum y^n z^n q^(n^2+n)/(yq;q^2)_(n+1); y lives in the a slot",
            Family::Omega1 => "sum q^(2n)/((-zq;q^2)_(n+1)(zq/a;q^2)_(n+1))",
            Family::NuTri => "sum a^n q^(n^2+n)/(-zq;q^2)_(n+1)",
            Family::Phi => "sum q^(n^2)/(-q^2;q^2)_n",
            Family::BigG => "sum a^n b^n q^(t n^2)/((aq^t;q^t)_n(bq^t;q^t)_n), base q^t from step",
            Family::G3 => "sum q^(n(n+1))/((x;q)_(n+1)(q/x;q)_(n+1)); needs 1-x invertible",
            Family::Rho3 => "(1+1/b) sum (c)_n (-1)^n q^(n(n+1)/2) a^n b^-n/((-aq)_n(-c/b)_(n+1))",
            Family::OmegaStar => "sum q^(2(n-1)^2-6) a^(2n) z^(4n+4)/((z^2/q;q^2)_(n+1)(a^2z^2/q^3;q^2)_(n+1))",
            Family::NuStar => "sum q^(n^2-n) z^(2n)/(-a^2z^2/q^3;q^2)_(n+1)",
            Family::FFunc => "the correction term F(a,z;q) of the three-variable omega identity",
            Family::GDef => "sum_(m>=1) (z^2q^2/a;q^2)_(m-1) q^(2m)/((-zq/a)_(2m)(zq)_(2m)(-zq^(2m+2)/a;q^2)_inf(zq^(2m+2);q^2)_inf)",
            Family::HDef => "q^2 (z^2q^2/a;q^2)_inf/((zq)_inf(-zq/a)_inf) omega1(a,z)",
        }
    }
}

/// One member of the family with its arguments bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MockSpec {
    pub family: Family,
    pub args: Vec<Monomial>,
    pub qsign: i64,
    /// Base `q^t` for [`Family::BigG`]; other families reject it.
    pub step: Option<QStep>,
}

fn unit_inv(m: &Monomial) -> Result<Monomial> {
    m.inv()
        .ok_or_else(|| Error::IllegalSpec(format!("argument {m} must have coefficient +-1 here")))
}

fn ratio(n: &Monomial, d: &Monomial) -> Result<Monomial> {
    Ok(n.mul(&unit_inv(d)?))
}

/// `(arg q^off; q^step)_len` with `off` a defined power of `q`.
fn p(arg: Monomial, off: i64, step: i64, len: Len) -> Poch {
    Poch::new(arg, step, len).shift(off, 0)
}

const N1: Len = Len::Fin(1, 1);
const N0: Len = Len::Fin(1, 0);
const ONE: Len = Len::Fin(0, 1);

fn m1() -> Monomial {
    Monomial::one()
}

fn neg1() -> Monomial {
    Monomial::int(-1)
}

/// Builds each piece with the common `q`-sign.
struct B {
    s: i64,
}

impl B {
    fn fam(&self) -> HyperFamily {
        HyperFamily::new().qsign(self.s)
    }

    /// `coeff * q^r * prod factors`, with `r` a defined power of `q`.
    fn prod<I: IntoIterator<Item = Poch>>(&self, coeff: Monomial, r: i64, factors: I) -> Expr {
        let mut f = HyperFamily::product(coeff).quad(0, 0, r).qsign(self.s);
        f.factors.extend(factors);
        Expr::Fam(f)
    }

    fn omega1(&self, a: &Monomial, z: &Monomial) -> Result<Expr> {
        Ok(self
            .fam()
            .quad(0, 4, 0)
            .with(p(z.neg(), 1, 2, N1).inv())
            .with(p(ratio(z, a)?, 1, 2, N1).inv())
            .into())
    }

    fn rho3(&self, a: &Monomial, b: &Monomial, c: &Monomial) -> Result<Expr> {
        let bi = unit_inv(b)?;
        let sum = self
            .fam()
            .ratio(a.mul(&bi).neg())
            .quad(1, 1, 0)
            .with(p(c.clone(), 0, 1, N0))
            .with(p(a.neg(), 1, 1, N0).inv())
            .with(p(c.mul(&bi).neg(), 0, 1, N1).inv());
        Ok(self.prod(m1(), 0, [p(bi.neg(), 0, 1, ONE)]) * sum.into())
    }

    fn f_func(&self, a: &Monomial, z: &Monomial) -> Result<Expr> {
        let za = ratio(z, a)?;
        let az = ratio(a, z)?;
        let pre = self.prod(
            m1(),
            0,
            [
                p(za.neg(), 2, 2, Len::Inf).inv(),
                p(z.clone(), 2, 2, Len::Inf).inv(),
            ],
        );
        let s1 = self
            .fam()
            .ratio(z.clone())
            .quad(0, 2, 0)
            .with(p(az.neg(), -1, 2, N1))
            .with(p(z.neg(), 1, 2, N1).inv());
        let t1 = self.prod(m1(), 2, [p(za.neg(), 1, 1, ONE).inv()]) * s1.into();
        let z2 = z.mul(z);
        let t2 = self.prod(
            az,
            1,
            [
                p(ratio(&z2, a)?, 2, 2, Len::Inf),
                p(z2.clone(), 2, 4, Len::Inf).inv(),
                p(ratio(&z2, &a.mul(a))?, 2, 4, Len::Inf).inv(),
            ],
        ) * self.fam().ratio(a.clone()).quad(2, 2, 0).into();
        Ok(pre * (t1 - t2))
    }

    fn g_def(&self, a: &Monomial, z: &Monomial) -> Result<Expr> {
        let za = ratio(z, a)?;
        Ok(self
            .fam()
            .start(1)
            .quad(0, 4, 0)
            .with(p(ratio(&z.mul(z), a)?, 2, 2, Len::Fin(1, -1)))
            .with(p(za.neg(), 1, 1, Len::Fin(2, 0)).inv())
            .with(p(z.clone(), 1, 1, Len::Fin(2, 0)).inv())
            .with(p(za.neg(), 2, 2, Len::Inf).shift(0, 2).inv())
            .with(p(z.clone(), 2, 2, Len::Inf).shift(0, 2).inv())
            .into())
    }

    fn h_def(&self, a: &Monomial, z: &Monomial) -> Result<Expr> {
        let pre = self.prod(
            m1(),
            2,
            [
                p(ratio(&z.mul(z), a)?, 2, 2, Len::Inf),
                p(z.clone(), 1, 1, Len::Inf).inv(),
                p(ratio(z, a)?.neg(), 1, 1, Len::Inf).inv(),
            ],
        );
        Ok(pre * self.omega1(a, z)?)
    }
}

impl MockSpec {
    pub fn new(family: Family, args: Vec<Monomial>) -> Self {
        MockSpec {
            family,
            args,
            qsign: 1,
            step: None,
        }
    }

    pub fn qsign(mut self, s: i64) -> Self {
        self.qsign = if s < 0 { -1 } else { 1 };
        self
    }

    pub fn step(mut self, t: QStep) -> Self {
        self.step = Some(t);
        self
    }

    fn check(&self) -> Result<()> {
        if self.args.len() != self.family.arity() {
            return Err(Error::IllegalSpec(format!(
                "{} takes {} argument(s), got {}",
                self.family.name(),
                self.family.arity(),
                self.args.len()
            )));
        }
        if self.step.is_some() && self.family != Family::BigG {
            return Err(Error::IllegalSpec(format!(
                "{} takes no step",
                self.family.name()
            )));
        }
        Ok(())
    }

    /// The defining series as an expression tree.
    pub fn expr(&self) -> Result<Expr> {
        self.check()?;
        let b = B { s: self.qsign };
        let a = &self.args;
        Ok(match self.family {
            Family::Omega => b.fam().quad(4, 4, 0).with(p(m1(), 1, 2, N1).pow(-2)).into(),
            Family::Nu => b.fam().quad(2, 2, 0).with(p(neg1(), 1, 2, N1).inv()).into(),
            Family::OmegaBi => b
                .fam()
                .ratio(a[0].clone())
                .quad(4, 4, 0)
                .with(p(m1(), 1, 2, N1).inv())
                .with(p(a[0].clone(), 1, 2, N1).inv())
                .into(),
            Family::NuBi => b
                .fam()
                .quad(2, 2, 0)
                .with(p(a[0].neg(), 1, 2, N1).inv())
                .into(),
            Family::Nu1 => b
                .fam()
                .ratio(a[0].clone())
                .quad(2, 2, 0)
                .with(p(neg1(), 1, 2, N1).inv())
                .into(),
            Family::Omega0 => b
                .fam()
                .ratio(a[0].mul(&a[1]))
                .quad(4, 4, 0)
                .with(p(a[0].clone(), 1, 2, N1).inv())
                .with(p(a[1].clone(), 1, 2, N1).inv())
                .into(),
            Family::Nu0 => b
                .fam()
                .ratio(a[0].mul(&a[1]))
                .quad(2, 2, 0)
                .with(p(a[0].clone(), 1, 2, N1).inv())
                .into(),
            Family::Omega1 => b.omega1(&a[0], &a[1])?,
            Family::NuTri => b
                .fam()
                .ratio(a[0].clone())
                .quad(2, 2, 0)
                .with(p(a[1].neg(), 1, 2, N1).inv())
                .into(),
            Family::Phi => b.fam().quad(2, 0, 0).with(p(neg1(), 2, 2, N0).inv()).into(),
            Family::BigG => {
                let t = self.step.map_or(1, QStep::get);
                b.fam()
                    .ratio(a[0].mul(&a[1]))
                    .quad(2 * t, 0, 0)
                    .with(p(a[0].clone(), t, t, N0).inv())
                    .with(p(a[1].clone(), t, t, N0).inv())
                    .into()
            }
            Family::G3 => b
                .fam()
                .quad(2, 2, 0)
                .with(p(a[0].clone(), 0, 1, N1).inv())
                .with(p(unit_inv(&a[0])?, 1, 1, N1).inv())
                .into(),
            Family::Rho3 => b.rho3(&a[0], &a[1], &a[2])?,
            Family::OmegaStar => {
                let a2 = a[0].mul(&a[0]);
                let z2 = a[1].mul(&a[1]);
                let z4 = z2.mul(&z2);
                b.fam()
                    .coeff(z4.clone())
                    .ratio(a2.mul(&z4))
                    .quad(4, -8, -4)
                    .with(p(z2.clone(), -1, 2, N1).inv())
                    .with(p(a2.mul(&z2), -3, 2, N1).inv())
                    .into()
            }
            Family::NuStar => {
                let z2 = a[1].mul(&a[1]);
                b.fam()
                    .ratio(z2.clone())
                    .quad(2, -2, 0)
                    .with(p(a[0].mul(&a[0]).mul(&z2).neg(), -3, 2, N1).inv())
                    .into()
            }
            Family::FFunc => b.f_func(&a[0], &a[1])?,
            Family::GDef => b.g_def(&a[0], &a[1])?,
            Family::HDef => b.h_def(&a[0], &a[1])?,
        })
    }

    /// The expansion through exactly `q^acc`.
    pub fn build(&self, acc: i64) -> Result<QSeries> {
        self.expr()?.eval(acc).map_err(illegal)
    }

    /// The same expansion computed at `+q` with each argument `m` replaced by
    /// its image under `q -> -q`, then negated back.
    pub fn build_negated(&self, acc: i64) -> Result<QSeries> {
        if self.qsign > 0 {
            return self.build(acc);
        }
        let args = self.args.iter().map(|m| m.sign_pow(m.q)).collect();
        let plus = MockSpec {
            args,
            qsign: 1,
            ..self.clone()
        };
        Ok(plus.build(acc)?.q_negate())
    }
}

fn illegal(e: Error) -> Error {
    match e {
        Error::NotInvertible(m) => {
            Error::IllegalSpec(format!("a denominator is not invertible: {m}"))
        }
        Error::NonTerminating { cap, acc } => Error::IllegalSpec(format!(
            "the defining sum does not converge formally (cap {cap} at order {acc})"
        )),
        other => other,
    }
}

/// Builds `spec` through `q^acc`.
pub fn build(spec: &MockSpec, acc: i64) -> Result<QSeries> {
    spec.build(acc)
}

fn z() -> Monomial {
    Monomial::z()
}

/// `(1-x)(1-q/x) g3(x,q)`, which stays formal when `1-x` is not invertible.
pub fn g3_cleared(x: &Monomial) -> Result<Expr> {
    Ok(HyperFamily::new()
        .quad(2, 2, 0)
        .with(p(x.clone(), 1, 1, N0).inv())
        .with(p(unit_inv(x)?, 2, 1, N0).inv())
        .into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AltForm {
    OmegaBi,
    NuBi,
}

/// The defining series of `omega(z;q)` or `nu(z;q)` against its single-sum
/// alternative `sum z^n q^n/(q;q^2)_(n+1)` or `sum (q/z;q^2)_n (-zq)^n`.
pub fn andrews_alt_sides(which: AltForm, arg: &Monomial) -> Result<(Expr, Expr)> {
    Ok(match which {
        AltForm::OmegaBi => (
            MockSpec::new(Family::OmegaBi, vec![arg.clone()]).expr()?,
            HyperFamily::new()
                .ratio(arg.clone())
                .quad(0, 2, 0)
                .with(p(m1(), 1, 2, N1).inv())
                .into(),
        ),
        AltForm::NuBi => (
            MockSpec::new(Family::NuBi, vec![arg.clone()]).expr()?,
            HyperFamily::new()
                .ratio(arg.neg())
                .quad(0, 2, 0)
                .with(p(unit_inv(arg)?, 1, 2, N0))
                .into(),
        ),
    })
}

fn instance(
    id: &str,
    anchor: &str,
    note: &str,
    lhs: &Expr,
    rhs: &Expr,
    acc: i64,
) -> Result<IdentityInstance> {
    Ok(IdentityInstance {
        id: id.to_string(),
        lhs: lhs.eval(acc).map_err(illegal)?,
        rhs: rhs.eval(acc).map_err(illegal)?,
        citation: Citation {
            anchor: anchor.to_string(),
            quote: note.to_string(),
        },
        default_acc: acc,
        expected: Expected::Pass,
    })
}

pub fn andrews_alt_forms(which: AltForm, arg: &Monomial, acc: i64) -> Result<IdentityInstance> {
    let (l, r) = andrews_alt_sides(which, arg)?;
    let (id, note) = match which {
        AltForm::OmegaBi => (
            "ANDREWS_ALT",
            "omega(z;q) = sum_(n>=1) z^(n-1) q^(n-1)/(q;q^2)_n",
        ),
        AltForm::NuBi => ("ANDREWS_ALT_NU", "nu(z;q) = sum (q/z;q^2)_n (-zq)^n"),
    };
    instance(
        id,
        "alternative single-sum forms of omega(z;q) and nu(z;q)",
        note,
        &l,
        &r,
        acc,
    )
}

/// Sides of the two equivalences between the two- and three-variable families
/// of Li-Yang type and Choi's trivariate functions.
pub fn equivalence_sides() -> Result<[(Expr, Expr); 2]> {
    let a = Monomial::a();
    let z2 = z().mul(&z());
    let a2 = a.mul(&a);
    let a2z2 = a2.mul(&z2);
    let om0 = MockSpec::new(Family::Omega0, vec![z2.mul_q(-2), a2z2.mul_q(-4)]).expr()?;
    let om_star = MockSpec::new(Family::OmegaStar, vec![a.clone(), z()])
        .expr()?
        .scale(Monomial::new(1, -4, 0, 4));
    let nu0 = MockSpec::new(
        Family::Nu0,
        vec![a2z2.mul_q(-4).neg(), Monomial::new(-1, 0, -2, 2)],
    )
    .expr()?;
    let nu_star = MockSpec::new(Family::NuStar, vec![a, z()]).expr()?;
    Ok([(om0, om_star), (nu0, nu_star)])
}

pub fn equivalence_choi(acc: i64) -> Result<Vec<IdentityInstance>> {
    let [(l1, r1), (l2, r2)] = equivalence_sides()?;
    let anchor = "equivalence with Choi's trivariate generalizations";
    Ok(vec![
        instance(
            "EQUIV",
            anchor,
            "omega0(z^2/q^2, a^2z^2/q^4; q) = (q^4/z^4) omega_star(a,z;q)",
            &l1,
            &r1,
            acc,
        )?,
        instance(
            "EQUIV_NU",
            anchor,
            "nu0(-a^2z^2/q^4, -q^2/a^2; q) = nu_star(a,z;q)",
            &l2,
            &r2,
            acc,
        )?,
    ])
}

/// Names, arities and argument names of every family.
pub fn family_catalog() -> Value {
    Value::Array(
        Family::ALL
            .iter()
            .map(|f| {
                let mut v = json!({ "name": f.name(), "arity": f.arity(), "params": f.params(), "definition": f.summary() });
                if *f == Family::BigG {
                    v["step"] = json!("optional positive integer t, default 1");
                }
                v
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::LaurentPoly;

    fn ints(s: &QSeries, through: i64) -> Vec<i64> {
        (0..=through)
            .map(|k| s.coeff(k).coeff(Default::default()).as_i64().unwrap())
            .collect()
    }

    #[test]
    fn omega_and_nu_leading_coefficients() {
        let om = MockSpec::new(Family::Omega, vec![]).build(8).unwrap();
        assert_eq!(ints(&om, 8), vec![1, 2, 3, 4, 6, 8, 10, 14, 18]);
        let nu = MockSpec::new(Family::Nu, vec![]).build(8).unwrap();
        assert_eq!(ints(&nu, 8), vec![1, -1, 2, -2, 2, -3, 4, -4, 5]);
    }

    #[test]
    fn phi_leading_coefficients() {
        let phi = MockSpec::new(Family::Phi, vec![]).build(4).unwrap();
        assert_eq!(ints(&phi, 4), vec![1, 1, 0, -1, 1]);
    }

    #[test]
    fn arity_and_step_are_checked() {
        let e = MockSpec::new(Family::Omega1, vec![z()]).build(5);
        assert!(matches!(e, Err(Error::IllegalSpec(_))));
        let e = MockSpec::new(Family::Nu, vec![])
            .step(QStep::new(2).unwrap())
            .build(5);
        assert!(matches!(e, Err(Error::IllegalSpec(_))));
    }

    #[test]
    fn g3_is_never_formal() {
        assert!(matches!(
            MockSpec::new(Family::G3, vec![z()]).build(5),
            Err(Error::IllegalSpec(_))
        ));
        // (x;q) and (q/x;q) cannot both start with 1 for a monomial x
        assert!(matches!(
            MockSpec::new(Family::G3, vec![z().mul_q(1)]).build(5),
            Err(Error::IllegalSpec(_))
        ));
    }

    #[test]
    fn omega_star_starts_below_zero() {
        let s = MockSpec::new(Family::OmegaStar, vec![Monomial::a(), z()])
            .build(6)
            .unwrap();
        assert_eq!(s.val(), -1);
        assert_eq!(s.coeff(-1), &"-1*z^2*a^-2".parse::<LaurentPoly>().unwrap());
    }
}
