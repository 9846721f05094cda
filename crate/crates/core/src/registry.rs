//! The catalog of verifiable identities and the harness that checks them.
//!
//! Every entry is a closed recipe producing two [`Expr`] sides from the
//! builders in [`crate::qkit`], [`crate::mock`] and [`crate::partitions`].
//! Variables `z` and `a` stay symbolic unless the entry is a specialization.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::instance::{Citation, Expected, IdentityInstance};
use crate::mock::{self, AltForm, Family, MockSpec};
use crate::partitions::{self, PartFamily};
use crate::qkit::{classical_sides, rho3, theta_expr, Expr, HyperFamily, Len, Params, Poch, QStep};
use crate::ring::{series_compare, LaurentPoly, Monomial, QSeries};

pub struct Entry {
    pub id: &'static str,
    pub anchor: &'static str,
    pub note: &'static str,
    /// Both `z` and `a` appear symbolically.
    pub two_var: bool,
    /// Smallest order at which the entry may be instantiated.
    pub min_acc: i64,
    pub expected: Expected,
    sides: fn(i64) -> Result<(Expr, Expr)>,
}

impl Entry {
    pub fn default_acc(&self) -> i64 {
        if self.two_var {
            30
        } else {
            40
        }
    }

    pub fn sides(&self, acc: i64) -> Result<(Expr, Expr)> {
        (self.sides)(acc)
    }
}

fn m(c: i64, z: i32, a: i32, q: i64) -> Monomial {
    Monomial::new(c, z, a, q)
}

fn one() -> Monomial {
    Monomial::one()
}

fn z() -> Monomial {
    Monomial::z()
}

fn a() -> Monomial {
    Monomial::a()
}

fn q(k: i64) -> Monomial {
    Monomial::q(k)
}

fn fam() -> HyperFamily {
    HyperFamily::new()
}

/// `(arg q^(off + slope n); q^step)_len`.
fn pn(arg: Monomial, off: i64, slope: i64, step: i64, len: Len) -> Poch {
    Poch::new(arg, step, len).shift(off, slope)
}

fn p(arg: Monomial, off: i64, step: i64, len: Len) -> Poch {
    pn(arg, off, 0, step, len)
}

/// `(arg q^off; q^step)_inf`.
fn pi(arg: Monomial, off: i64, step: i64) -> Poch {
    p(arg, off, step, Len::Inf)
}

const N0: Len = Len::Fin(1, 0);
const N1: Len = Len::Fin(1, 1);
const ONE: Len = Len::Fin(0, 1);
const INF: Len = Len::Inf;

fn prod<I: IntoIterator<Item = Poch>>(coeff: Monomial, factors: I) -> Expr {
    Expr::product(coeff, factors)
}

fn int(c: i64) -> Expr {
    Expr::int(c)
}

fn mk(f: Family, args: &[Monomial]) -> Result<Expr> {
    MockSpec::new(f, args.to_vec()).expr()
}

/// The same family at `-q` with fixed arguments.
fn mk_neg(f: Family, args: &[Monomial]) -> Result<Expr> {
    MockSpec::new(f, args.to_vec()).qsign(-1).expr()
}

fn pt(mm: Monomial, pp: i64, qq: i64) -> Expr {
    fam().ratio(mm).quad(pp, qq, 0).into()
}

fn classical(name: &str, kv: &[(&str, Monomial)]) -> Result<(Expr, Expr)> {
    let params: Params = kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    classical_sides(name, &params)
}

fn base2() -> (&'static str, Monomial) {
    ("base", q(2))
}

// Left sides shared by several entries.

/// `sum_{n>=1} q^n / ((x q^n;q)_(n+1) (x q^(2n+2);q^2)_inf)`.
fn ay_omega_lhs(x: Monomial) -> Expr {
    fam()
        .start(1)
        .quad(0, 2, 0)
        .with(pn(x.clone(), 0, 1, 1, N1).inv())
        .with(pn(x, 2, 2, 2, INF).inv())
        .into()
}

/// `sum q^n (x q^(n+1);q)_n (x q^(2n+2);q^2)_inf`.
fn ay_nu_lhs(x: Monomial) -> Expr {
    fam()
        .quad(0, 2, 0)
        .with(pn(x.clone(), 1, 1, 1, N0))
        .with(pn(x, 2, 2, 2, INF))
        .into()
}

/// `sum (-1)^j q^(P j^2/2 + Q1 j/2) + sum (-1)^j q^(P j^2/2 + Q2 j/2 + R2)`.
fn signed_pair(pp: i64, q1: i64, r1: i64, q2: i64, r2: i64) -> Expr {
    Expr::from(fam().ratio(m(-1, 0, 0, 0)).quad(pp, q1, r1))
        + fam().ratio(m(-1, 0, 0, 0)).quad(pp, q2, r2).into()
}

/// `sum (-zq^(n+1);q)_inf q^n / (-z q^(2n+1);q^2)_inf` with the sign of the
/// numerator argument given by `s`.
fn sum_a(s: i64, zz: Monomial) -> Expr {
    fam()
        .quad(0, 2, 0)
        .with(pn(m(s, 0, 0, 0), 1, 1, 1, INF))
        .with(pn(zz, 1, 2, 2, INF).inv())
        .into()
}

fn spac_lhs() -> Expr {
    fam()
        .quad(1, 1, 0)
        .with(p(m(-1, -1, 0, 0), 0, 1, N1))
        .with(p(m(-1, -1, 0, 0), 1, 2, N1).inv())
        .into()
}

fn nu_mz_neg() -> Result<Expr> {
    mk_neg(Family::NuTri, &[z(), z().neg()])
}

fn omega1_mz_neg() -> Result<Expr> {
    mk_neg(Family::Omega1, &[z(), z().neg()])
}

fn counted(f: PartFamily, acc: i64) -> Result<Expr> {
    Ok(Expr::Known(partitions::counting_series(
        f,
        acc.max(f.min_n() as i64),
    )?))
}

static ENTRIES: &[Entry] = &[
    Entry {
        id: "PW",
        anchor: "partition identity for omega",
        note: "sum_(n>=1) q^n/((q^n;q)_(n+1)(q^(2n+2);q^2)_inf) = q omega(q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((ay_omega_lhs(one()), mk(Family::Omega, &[])?.scale(q(1)))),
    },
    Entry {
        id: "PN",
        anchor: "partition identity for nu",
        note: "sum q^n (-q^(n+1);q)_n (-q^(2n+2);q^2)_inf = nu(-q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((ay_nu_lhs(m(-1, 0, 0, 0)), mk_neg(Family::Nu, &[])?)),
    },
    Entry {
        id: "EPNT1",
        anchor: "pentagonal-type analogue for omega",
        note: "sum_(n>=1) q^n/((-q^n;q)_(n+1)(-q^(2n+2);q^2)_inf) = sum (-1)^j q^(6j^2+4j+1)(1+q^(4j+2))",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((ay_omega_lhs(m(-1, 0, 0, 0)), signed_pair(12, 8, 1, 16, 3))),
    },
    Entry {
        id: "EPNT2",
        anchor: "pentagonal-type analogue for nu",
        note: "sum q^n (q^(n+1);q)_n (q^(2n+2);q^2)_inf = sum (-1)^j q^(j(3j+2))(1+q^(2j+1))",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((ay_nu_lhs(one()), signed_pair(6, 4, 0, 8, 1))),
    },
    Entry {
        id: "AY_OMEGA",
        anchor: "Andrews-Yee two-variable omega identity",
        note: "sum_(n>=1) q^n/((zq^n;q)_(n+1)(zq^(2n+2);q^2)_inf) = q omega(z;q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((ay_omega_lhs(z()), mk(Family::OmegaBi, &[z()])?.scale(q(1)))),
    },
    Entry {
        id: "AY_NU",
        anchor: "Andrews-Yee two-variable nu identity",
        note: "sum q^n (-zq^(n+1);q)_n (-zq^(2n+2);q^2)_inf = nu1(z;-q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((ay_nu_lhs(z().neg()), mk_neg(Family::Nu1, &[z()])?)),
    },
    Entry {
        id: "FUNC_REL",
        anchor: "functional relation between nu(a,z) and omega1(a,z)",
        note: "nu(a,z;q) = sum a^n q^(n^2+n)/((-zq;q^2)_inf (zq/a;q^2)_inf) - (zq/a) omega1(a,z;q)",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = pt(a(), 2, 2) * prod(one(), [pi(z().neg(), 1, 2).inv(), pi(m(1, 1, -1, 0), 1, 2).inv()])
                + mk(Family::Omega1, &[a(), z()])?.scale(m(-1, 1, -1, 1));
            Ok((mk(Family::NuTri, &[a(), z()])?, rhs))
        },
    },
    Entry {
        id: "RAM_Z",
        anchor: "two-variable omega-nu relation",
        note: "nu(z;q) = (q^2;q^2)_inf (-q^2;q^2)_inf^2/(z^2q^2;q^4)_inf - zq omega(z^2;q^2)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let pr = prod(one(), [pi(one(), 2, 2), pi(m(-1, 0, 0, 0), 2, 2).pow(2), pi(m(1, 2, 0, 0), 2, 4).inv()]);
            let om = mk(Family::OmegaBi, &[m(1, 2, 0, 0)])?.q_power(2).scale(m(-1, 1, 0, 1));
            Ok((mk(Family::NuBi, &[z()])?, pr + om))
        },
    },
    Entry {
        id: "RAM",
        anchor: "Ramanujan's omega-nu relation",
        note: "nu(q) = (q^2;q^2)_inf (-q^2;q^2)_inf^3 - q omega(q^2)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let pr = prod(one(), [pi(one(), 2, 2), pi(m(-1, 0, 0, 0), 2, 2).pow(3)]);
            Ok((mk(Family::Nu, &[])?, pr + mk(Family::Omega, &[])?.q_power(2).scale(m(-1, 0, 0, 1))))
        },
    },
    Entry {
        id: "THM3",
        anchor: "three-variable omega identity with correction term F",
        note: "G(a,z;q) = H(a,z;q) + F(a,z;q) with H = q^2 (z^2q^2/a;q^2)_inf/((zq)_inf(-zq/a)_inf) omega1(a,z;q)",
        two_var: true,
        min_acc: 10,
        expected: Expected::Pass,
        sides: |_| {
            let args = [a(), z()];
            Ok((mk(Family::GDef, &args)?, mk(Family::HDef, &args)? + mk(Family::FFunc, &args)?))
        },
    },
    Entry {
        id: "THM3_A1",
        anchor: "three-variable omega identity at a = 1",
        note: "G(1,z;q) = H(1,z;q) + F(1,z;q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let args = [one(), z()];
            Ok((mk(Family::GDef, &args)?, mk(Family::HDef, &args)? + mk(Family::FFunc, &args)?))
        },
    },
    Entry {
        id: "F_AT_1",
        anchor: "the correction term vanishes at a = 1",
        note: "F(1,z;q) = 0, a consequence of the 1psi1 special case LEM_1PSI1",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((mk(Family::FFunc, &[one(), z()])?, Expr::Sum(Vec::new()))),
    },
    Entry {
        id: "G_AT_1",
        anchor: "G(1,z;q) as the Andrews-Yee omega sum",
        note: "G(1,z;q) is the left side of AY_OMEGA under (z,q) -> (z^2,q^2)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((mk(Family::GDef, &[one(), z()])?, ay_omega_lhs(m(1, 2, 0, 0)).q_power(2))),
    },
    Entry {
        id: "H_AT_1",
        anchor: "H(1,z;q) as a two-variable omega",
        note: "H(1,z;q) = q^2 omega(z^2;q^2)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            Ok((mk(Family::HDef, &[one(), z()])?, mk(Family::OmegaBi, &[m(1, 2, 0, 0)])?.q_power(2).scale(q(2))))
        },
    },
    Entry {
        id: "F_SYM",
        anchor: "symmetry of the correction term",
        note: "F(a,z;q) = F(1/a,-z/a;q)",
        two_var: true,
        min_acc: 10,
        expected: Expected::Pass,
        sides: |_| Ok((mk(Family::FFunc, &[a(), z()])?, mk(Family::FFunc, &[m(1, 0, -1, 0), m(-1, 1, -1, 0)])?)),
    },
    Entry {
        id: "GH_SYM",
        anchor: "symmetry of G",
        note: "G(a,z;q) = G(1/a,-z/a;q)",
        two_var: true,
        min_acc: 10,
        expected: Expected::Pass,
        sides: |_| Ok((mk(Family::GDef, &[a(), z()])?, mk(Family::GDef, &[m(1, 0, -1, 0), m(-1, 1, -1, 0)])?)),
    },
    Entry {
        id: "GH_SYM_H",
        anchor: "symmetry of H",
        note: "H(a,z;q) = H(1/a,-z/a;q)",
        two_var: true,
        min_acc: 10,
        expected: Expected::Pass,
        sides: |_| Ok((mk(Family::HDef, &[a(), z()])?, mk(Family::HDef, &[m(1, 0, -1, 0), m(-1, 1, -1, 0)])?)),
    },
    Entry {
        id: "THM4",
        anchor: "three-variable nu identity",
        note: "sum (-zq;q)_(2n)(-zq^(2n+2);q^2)_inf q^n/(-zq/a;q)_n = -(a/z)(-zq)_inf/(-zq/a)_inf nu(a^2/z,-a^2/z;-q) + (-zq^2;q^2)_inf sum (-a/z;q)_(n+1) a^n q^(n(n+1)/2)/(-a^2q/z;q^2)_(n+1)",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let lhs = fam()
                .quad(0, 2, 0)
                .with(p(z().neg(), 1, 1, Len::Fin(2, 0)))
                .with(pn(z().neg(), 2, 2, 2, INF))
                .with(p(m(-1, 1, -1, 0), 1, 1, N0).inv());
            let t1 = prod(m(-1, -1, 1, 0), [pi(z().neg(), 1, 1), pi(m(-1, 1, -1, 0), 1, 1).inv()])
                * mk_neg(Family::NuTri, &[m(1, -1, 2, 0), m(-1, -1, 2, 0)])?;
            let t2 = prod(one(), [pi(z().neg(), 2, 2)])
                * fam()
                    .ratio(a())
                    .quad(1, 1, 0)
                    .with(p(m(-1, -1, 1, 0), 0, 1, N1))
                    .with(p(m(-1, -1, 2, 0), 1, 2, N1).inv())
                    .into();
            Ok((lhs.into(), t1 + t2))
        },
    },
    Entry {
        id: "SUM_THETA",
        anchor: "partial theta sum as a product",
        note: "sum q^(n^2+n) = (q^2;q^2)_inf (-q^2;q^2)_inf^2",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((pt(one(), 2, 2), prod(one(), [pi(one(), 2, 2), pi(m(-1, 0, 0, 0), 2, 2).pow(2)]))),
    },
    Entry {
        id: "JTP",
        anchor: "Jacobi triple product",
        note: "sum_(n in Z) z^n q^(n^2) = (q^2;q^2)_inf (-zq;q^2)_inf (-q/z;q^2)_inf",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = prod(one(), [pi(one(), 2, 2), pi(z().neg(), 1, 2), pi(m(-1, -1, 0, 0), 1, 2)]);
            Ok((theta_expr(&z(), 1)?, rhs))
        },
    },
    Entry {
        id: "JTP_PRINTED",
        anchor: "Jacobi triple product with (-q^2;q^2)_inf in place of (q^2;q^2)_inf",
        note: "(-q^2;q^2)_inf (-zq;q^2)_inf (-q/z;q^2)_inf = sum z^n q^(n^2) is false; the sides first differ at q^2",
        two_var: false,
        min_acc: 0,
        expected: Expected::Fail,
        sides: |_| {
            let lhs = prod(one(), [pi(m(-1, 0, 0, 0), 2, 2), pi(z().neg(), 1, 2), pi(m(-1, -1, 0, 0), 1, 2)]);
            Ok((lhs, theta_expr(&z(), 1)?))
        },
    },
    Entry {
        id: "JAC",
        anchor: "triple product at z = a/q",
        note: "sum (a/q)^n q^(n^2) = (-a;q^2)_inf (-q^2/a;q^2)_inf (q^2;q^2)_inf",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = prod(one(), [pi(a().neg(), 0, 2), pi(m(-1, 0, -1, 0), 2, 2), pi(one(), 2, 2)]);
            Ok((theta_expr(&m(1, 0, 1, -1), 1)?, rhs))
        },
    },
    Entry {
        id: "LEM_1PSI1",
        anchor: "1psi1 special case",
        note: "sum (-q/z;q^2)_m (zq)^m/(-zq^3;q^2)_m = (1+zq)(z^2q^4;q^4)_inf (q^2,-q^2,-q^2;q^2)_inf/(z^2q^2;q^4)_inf",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let lhs = fam().ratio(z()).quad(0, 2, 0).with(p(m(-1, -1, 0, 0), 1, 2, N0)).with(p(z().neg(), 3, 2, N0).inv());
            let rhs = prod(
                one(),
                [
                    p(z().neg(), 1, 1, ONE),
                    pi(m(1, 2, 0, 0), 4, 4),
                    pi(one(), 2, 2),
                    pi(m(-1, 0, 0, 0), 2, 2).pow(2),
                    pi(m(1, 2, 0, 0), 2, 4).inv(),
                ],
            );
            Ok((lhs.into(), rhs))
        },
    },
    Entry {
        id: "ONE_PSI_ONE",
        anchor: "Ramanujan's 1psi1 summation",
        note: "1psi1 with a = -q/z, b = -zq^3, t = zq in base q^2",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("one_psi_one", &[("a", m(-1, -1, 0, 1)), ("b", m(-1, 1, 0, 3)), ("t", m(1, 1, 0, 1)), base2()]),
    },
    Entry {
        id: "HEINE_INST",
        anchor: "Heine's transformation",
        note: "2phi1(-q/y, q; -yq; y) with y = zq",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("heine", &[("a", m(-1, -1, 0, 0)), ("b", q(1)), ("c", m(-1, 1, 0, 2)), ("z", m(1, 1, 0, 1))]),
    },
    Entry {
        id: "QBINOM",
        anchor: "q-binomial theorem",
        note: "q-binomial theorem with a = z^2, z = q in base q^2",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("q_binomial", &[("a", m(1, 2, 0, 0)), ("z", q(1)), base2()]),
    },
    Entry {
        id: "GAUSS2",
        anchor: "q-analogue of Gauss's second theorem",
        note: "with a = q, b = -q/z",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("gauss_second", &[("a", q(1)), ("b", m(-1, -1, 0, 1))]),
    },
    Entry {
        id: "GEA90",
        anchor: "Andrews' three-sum transformation",
        note: "with A = a, B = zq, a = z, b = aq",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("andrews_deep", &[("A", a()), ("B", m(1, 1, 0, 1)), ("a", z()), ("b", m(1, 0, 1, 1))]),
    },
    Entry {
        id: "FINE",
        anchor: "Fine's identity, corrected",
        note: "with b = -zq, u = -zq/a in base q^2",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("fine", &[("b", m(-1, 1, 0, 1)), ("u", m(-1, 1, -1, 1)), base2()]),
    },
    Entry {
        id: "RAM_RECIP",
        anchor: "Ramanujan's reciprocity theorem",
        note: "with a = zq, b = -zq/a in base q^2",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("reciprocity", &[("a", m(1, 1, 0, 1)), ("b", m(-1, 1, -1, 1)), base2()]),
    },
    Entry {
        id: "KANG_SPECIAL",
        anchor: "Kang's three-parameter reciprocity theorem",
        note: "with a = zq, b = -zq/a, c = z^2q^2/a in base q^2",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            classical("kang", &[("a", m(1, 1, 0, 1)), ("b", m(-1, 1, -1, 1)), ("c", m(1, 2, -1, 2)), base2()])
        },
    },
    Entry {
        id: "RHO3_LHS",
        anchor: "first sum as rho3",
        note: "sum (-aq/z;q^2)_m (zq)^m/(-zq^3;q^2)_m = rho3(zq,-zq/a,z^2q^2/a;q^2)/(1-a/(zq))",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let lhs = fam().ratio(z()).quad(0, 2, 0).with(p(m(-1, -1, 1, 0), 1, 2, N0)).with(p(z().neg(), 3, 2, N0).inv());
            let r = rho3(&m(1, 1, 0, 1), &m(-1, 1, -1, 1), &m(1, 2, -1, 2), 2)?;
            Ok((lhs.into(), prod(one(), [p(m(1, -1, 1, 0), -1, 1, ONE).inv()]) * r))
        },
    },
    Entry {
        id: "RHO3_RHS",
        anchor: "second sum as rho3",
        note: "sum (q/z;q^2)_m (-zq/a)^m/(zq^3/a;q^2)_m = rho3(-zq/a,zq,z^2q^2/a;q^2)/(1+1/(zq))",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let lhs =
                fam().ratio(m(-1, 1, -1, 0)).quad(0, 2, 0).with(p(m(1, -1, 0, 0), 1, 2, N0)).with(p(m(1, 1, -1, 0), 3, 2, N0).inv());
            let r = rho3(&m(-1, 1, -1, 1), &m(1, 1, 0, 1), &m(1, 2, -1, 2), 2)?;
            Ok((lhs.into(), prod(one(), [p(m(-1, -1, 0, 0), -1, 1, ONE).inv()]) * r))
        },
    },
    Entry {
        id: "COV",
        anchor: "change of summation index in a partial theta sum",
        note: "sum_(n>=0) a^(n+1) q^(n^2+n) = sum_(n>=1) a^n q^(n^2-n)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((fam().coeff(a()).ratio(a()).quad(2, 2, 0).into(), fam().start(1).ratio(a()).quad(2, -2, 0).into())),
    },
    Entry {
        id: "PFAFF",
        anchor: "Jackson's q-Pfaff transformation",
        note: "with a = q^2, b = z^2q^2/a, c = -zq^3, x = zq in base q^2",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            classical("pfaff", &[("a", q(2)), ("b", m(1, 2, -1, 2)), ("c", m(-1, 1, 0, 3)), ("x", m(1, 1, 0, 1)), base2()])
        },
    },
    Entry {
        id: "EQ41",
        anchor: "Andrews-Dixit-Yee geometric expansion",
        note: "sum x^m/(-x;q)_(m+1) = sum (q;q^2)_m x^(2m) at x = zq",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("geometric_odd", &[("x", m(1, 1, 0, 1))]),
    },
    Entry {
        id: "EX6",
        anchor: "textbook exercise specialized to nu",
        note: "sum (q;q^2)_m (-qa^2/z)^m = nu(a^2/z,-a^2/z;-q)",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let lhs = fam().ratio(m(-1, -1, 2, 0)).quad(0, 2, 0).with(p(one(), 1, 2, N0));
            Ok((lhs.into(), mk_neg(Family::NuTri, &[m(1, -1, 2, 0), m(-1, -1, 2, 0)])?))
        },
    },
    Entry {
        id: "NU_RECIP",
        anchor: "reciprocity for nu(a,z)",
        note: "nu(a,z;q) + nu(1/a,-z/a;q)/a = (-aq^2,-1/a,q^2;q^2)_inf/(-zq,zq/a;q^2)_inf",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let lhs = mk(Family::NuTri, &[a(), z()])?
                + mk(Family::NuTri, &[m(1, 0, -1, 0), m(-1, 1, -1, 0)])?.scale(m(1, 0, -1, 0));
            let rhs = prod(
                one(),
                [
                    pi(a().neg(), 2, 2),
                    pi(m(-1, 0, -1, 0), 0, 2),
                    pi(one(), 2, 2),
                    pi(z().neg(), 1, 2).inv(),
                    pi(m(1, 1, -1, 0), 1, 2).inv(),
                ],
            );
            Ok((lhs, rhs))
        },
    },
    Entry {
        id: "COR52",
        anchor: "nu1 at -q as a single sum",
        note: "sum q^n (-zq^(n+1);q)_n (-zq^(2n+2);q^2)_inf = sum z^n q^(n^2+n)/(q;q^2)_(n+1); holds for symbolic z",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((ay_nu_lhs(z().neg()), fam().ratio(z()).quad(2, 2, 0).with(p(one(), 1, 2, N1).inv()).into())),
    },
    Entry {
        id: "SPAB",
        anchor: "nu reciprocity at (a,z,q) -> (1/z,-1/z,-q)",
        note: "nu(1/z,-1/z;-q) = (-z,-q^2/z,q^2;q^2)_inf/(q,-q/z;q^2)_inf - z nu1(z;-q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let pr = prod(
                one(),
                [
                    pi(z().neg(), 0, 2),
                    pi(m(-1, -1, 0, 0), 2, 2),
                    pi(one(), 2, 2),
                    pi(one(), 1, 2).inv(),
                    pi(m(-1, -1, 0, 0), 1, 2).inv(),
                ],
            );
            Ok((mk_neg(Family::NuTri, &[m(1, -1, 0, 0), m(-1, -1, 0, 0)])?, pr + mk_neg(Family::Nu1, &[z()])?.scale(z().neg())))
        },
    },
    Entry {
        id: "SPAC",
        anchor: "q-Gauss second theorem at a = q, b = -q/z",
        note: "sum (-1/z;q)_(n+1) q^(n(n+1)/2)/(-q/z;q^2)_(n+1) = (q^2,-1/z;q^2)_inf/(q,-q/z;q^2)_inf",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = prod(
                one(),
                [pi(one(), 2, 2), pi(m(-1, -1, 0, 0), 0, 2), pi(one(), 1, 2).inv(), pi(m(-1, -1, 0, 0), 1, 2).inv()],
            );
            Ok((spac_lhs(), rhs))
        },
    },
    Entry {
        id: "SPAD",
        anchor: "three-variable nu identity at a = 1",
        note: "sum q^n (-zq^(n+1);q)_n (-zq^(2n+2);q^2)_inf = -nu(1/z,-1/z;-q)/z + (-zq^2;q^2)_inf (left side of SPAC)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = mk_neg(Family::NuTri, &[m(1, -1, 0, 0), m(-1, -1, 0, 0)])?.scale(m(-1, -1, 0, 0))
                + prod(one(), [pi(z().neg(), 2, 2)]) * spac_lhs();
            Ok((ay_nu_lhs(z().neg()), rhs))
        },
    },
    Entry {
        id: "THM_AZ",
        anchor: "functional relation at a = z",
        note: "nu(z,-z;-q) + 2q omega1(z,-z;-q) = sum (-q^(n+1);q)_inf q^n/(-zq^(2n+1);q^2)_inf",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((nu_mz_neg()? + omega1_mz_neg()?.scale(m(2, 0, 0, 1)), sum_a(-1, z().neg()))),
    },
    Entry {
        id: "P25",
        anchor: "lost notebook partial theta expansion",
        note: "sum z^n q^(n^2+2n) = sum (-q)_n z^n q^(n(n+3)/2)/(-zq^2;q^2)_(n+1)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("shifted_partial_theta", &[("a", z())]),
    },
    Entry {
        id: "P24",
        anchor: "Andrews' two-denominator identity",
        note: "sum (za)^n q^(n^2+2n)/((zq)_(n+1)(aq)_(n+1)) = sum z^n q^n/(aq)_(n+1)",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("two_denominators", &[("a", z()), ("b", a())]),
    },
    Entry {
        id: "REL_MZ",
        anchor: "partial theta in terms of nu and omega1 at a = z, -q",
        note: "sum z^n q^(n^2+n) = (-zq,q;q^2)_inf (nu(z,-z;-q) + q omega1(z,-z;-q))",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = prod(one(), [pi(z().neg(), 1, 2), pi(one(), 1, 2)]) * (nu_mz_neg()? + omega1_mz_neg()?.scale(q(1)));
            Ok((pt(z(), 2, 2), rhs))
        },
    },
    Entry {
        id: "SOS_A",
        anchor: "lost notebook sum, first form",
        note: "sum (-zq;q^2)_n q^n/(-q;q)_n = 2 sum z^n q^(n^2+n) - (q,-zq;q^2)_inf nu(z,-z;-q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = pt(z(), 2, 2).scale(Monomial::int(2)) - prod(one(), [pi(one(), 1, 2), pi(z().neg(), 1, 2)]) * nu_mz_neg()?;
            Ok((sos_lhs(), rhs))
        },
    },
    Entry {
        id: "SOS_B",
        anchor: "lost notebook sum, second form",
        note: "sum (-zq;q^2)_n q^n/(-q;q)_n = sum z^n q^(n^2+n) + q (q,-zq;q^2)_inf omega1(z,-z;-q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = pt(z(), 2, 2) + prod(q(1), [pi(one(), 1, 2), pi(z().neg(), 1, 2)]) * omega1_mz_neg()?;
            Ok((sos_lhs(), rhs))
        },
    },
    Entry {
        id: "RF2",
        anchor: "Rogers-Fine special case, first expansion",
        note: "with a = 1/q, t = -zq in base q^2",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("rogers_fine_short", &[("a", q(-1)), ("t", m(-1, 1, 0, 1)), base2()]),
    },
    Entry {
        id: "RF",
        anchor: "Rogers-Fine special case, second expansion",
        note: "with a = 1/q, t = -zq in base q^2",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("rogers_fine_long", &[("a", q(-1)), ("t", m(-1, 1, 0, 1)), base2()]),
    },
    Entry {
        id: "COR_AZ",
        anchor: "functional relation at a = z, Rogers-Fine form",
        note: "sum (-q^(n+1);q)_inf q^n/(-zq^(2n+1);q^2)_inf - 2q omega1(z,-z;-q) = sum (q;q^2)_n (-z^2)^n (1+zq^(4n+2)) q^(3n^2+2n)/(-zq;q^2)_(n+1)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = fam()
                .ratio(m(-1, 2, 0, 0))
                .quad(6, 4, 0)
                .with(p(one(), 1, 2, N0))
                .with(p(z().neg(), 1, 2, N1).inv())
                .with(pn(z().neg(), 2, 4, 1, ONE));
            Ok((sum_a(-1, z().neg()) - omega1_mz_neg()?.scale(m(2, 0, 0, 1)), rhs.into()))
        },
    },
    Entry {
        id: "AZ_NEG1",
        anchor: "functional relation at a = z = -1",
        note: "sum (-q^(n+1);q)_inf q^n/(q^(2n+1);q^2)_inf - 2 sum q^(2n+1)/(q;q^2)_(n+1)^2 = sum (-1)^n q^(3n^2+2n)(1+q^(2n+1))",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let sub = fam().quad(0, 4, 1).with(p(one(), 1, 2, N1).pow(-2));
            Ok((sum_a(-1, one()) - Expr::from(sub).scale(Monomial::int(2)), signed_pair(6, 4, 0, 8, 1)))
        },
    },
    Entry {
        id: "EULER_DISG",
        anchor: "Euler's odd-distinct theorem in disguise",
        note: "sum q^n (-q^(n+1);q)_inf = 1 + 2 sum q^(2n+1)/(q;q^2)_(n+1)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let lhs = fam().quad(0, 2, 0).with(pn(m(-1, 0, 0, 0), 1, 1, 1, INF));
            let odd = fam().quad(0, 4, 1).with(p(one(), 1, 2, N1).inv());
            Ok((lhs.into(), int(1) + Expr::from(odd).scale(Monomial::int(2))))
        },
    },
    Entry {
        id: "EULER_DISG_DISTINCT",
        anchor: "Euler's odd-distinct theorem in disguise, distinct-parts side",
        note: "1 + sum_(n>=1) q^n (-q^(n+1);q)_inf = (-q;q)_inf",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let lhs = int(1) + fam().start(1).quad(0, 2, 0).with(pn(m(-1, 0, 0, 0), 1, 1, 1, INF)).into();
            Ok((lhs, prod(one(), [pi(m(-1, 0, 0, 0), 1, 1)])))
        },
    },
    Entry {
        id: "PSTAR_GF",
        anchor: "generating function of p*",
        note: "sum_n q^n (-q^(n+1);q)_inf/(q^(2n+1);q^2)_inf = 1 + sum p*(n) q^n, counts by enumeration",
        two_var: false,
        min_acc: 1,
        expected: Expected::Pass,
        sides: |acc| Ok((partitions::generating_function(PartFamily::PStar)?, int(1) + counted(PartFamily::PStar, acc)?)),
    },
    Entry {
        id: "PSUBSTAR_GF",
        anchor: "generating function of p_*",
        note: "sum q^(2n+1)/(q;q^2)_(n+1)^2 = sum p_*(n) q^n, counts by enumeration",
        two_var: false,
        min_acc: 1,
        expected: Expected::Pass,
        sides: |acc| Ok((partitions::generating_function(PartFamily::PSubstar)?, counted(PartFamily::PSubstar, acc)?)),
    },
    Entry {
        id: "PPRIME_GF",
        anchor: "generating function of p'",
        note: "sum q^n (-q^n;q)_n (-q^(2n+1);q^2)_inf = sum p'(n) q^n, counts by enumeration",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |acc| Ok((partitions::generating_function(PartFamily::PPrime)?, counted(PartFamily::PPrime, acc)?)),
    },
    Entry {
        id: "Z_NEG_QINV",
        anchor: "functional relation at z = -1/q",
        note: "sum a^n q^(n(n+1)/2)/(-aq;q)_(n+1) = 1",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((fam().ratio(a()).quad(1, 1, 0).with(p(a().neg(), 1, 1, N1).inv()).into(), int(1))),
    },
    Entry {
        id: "ALPHA_NEG_Z",
        anchor: "nu(z,-z;-q) as a sum of infinite products",
        note: "nu(z,-z;-q) = sum (q^(n+1);q)_inf q^n/(-zq^(2n+1);q^2)_inf",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((nu_mz_neg()?, sum_a(1, z().neg()))),
    },
    Entry {
        id: "OMEGA_DIFF",
        anchor: "omega1(z,-z;-q) as a difference of products",
        note: "2q omega1(z,-z;-q) = sum ((-q^(n+1);q)_inf - (q^(n+1);q)_inf) q^n/(-zq^(2n+1);q^2)_inf; the two-argument omega written there is omega1",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((omega1_mz_neg()?.scale(m(2, 0, 0, 1)), sum_a(-1, z().neg()) - sum_a(1, z().neg()))),
    },
    Entry {
        id: "EULER_AT",
        anchor: "functional relation at a = -z = -q",
        note: "sum_(n>=1) q^n/(-q^n;q)_inf = 1 - (q;q^2)_inf",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let lhs = fam().start(1).quad(0, 2, 0).with(pn(m(-1, 0, 0, 0), 0, 1, 1, INF).inv());
            Ok((lhs.into(), int(1) - prod(one(), [pi(one(), 1, 2)])))
        },
    },
    Entry {
        id: "EULER_THM",
        anchor: "Euler's product expansion",
        note: "sum (-z)^n q^(n^2-n)/(q^2;q^2)_n = (z;q^2)_inf",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| classical("euler", &[("z", z())]),
    },
    Entry {
        id: "CORA",
        anchor: "Euler's theorem at z = q",
        note: "(q;q^2)_inf - 1 = sum_(n>=1) (-1)^n q^(n^2)/(q^2;q^2)_n",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = fam().start(1).ratio(m(-1, 0, 0, 0)).quad(2, 0, 0).with(p(one(), 2, 2, N0).inv());
            Ok((prod(one(), [pi(one(), 1, 2)]) - int(1), rhs.into()))
        },
    },
    Entry {
        id: "CORA_NU",
        anchor: "Euler's theorem through nu",
        note: "(q;q^2)_inf - 1 = -q nu(-q,q;-q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = mk_neg(Family::NuTri, &[m(-1, 0, 0, 1), q(1)])?.scale(m(-1, 0, 0, 1));
            Ok((prod(one(), [pi(one(), 1, 2)]) - int(1), rhs))
        },
    },
    Entry {
        id: "THM_AQ",
        anchor: "functional relation at a = q",
        note: "sum q^n (-zq^n;q)_(n+1)(-zq^(2n+2);q^2)_inf = -(q/z) nu(q^2/z,-q^2/z;-q) + q^-1 (-z;q^2)_inf (-1 + (-q)_inf (q^2,-q^2/z;q^2)_inf/(-q^3/z;q^2)_inf)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let lhs = fam().quad(0, 2, 0).with(pn(z().neg(), 0, 1, 1, N1)).with(pn(z().neg(), 2, 2, 2, INF));
            let t1 = mk_neg(Family::NuTri, &[m(1, -1, 0, 2), m(-1, -1, 0, 2)])?.scale(m(-1, -1, 0, 1));
            let inner = int(-1)
                + prod(
                    one(),
                    [
                        pi(m(-1, 0, 0, 0), 1, 1),
                        pi(one(), 2, 2),
                        pi(m(-1, -1, 0, 0), 2, 2),
                        pi(m(-1, -1, 0, 0), 3, 2).inv(),
                    ],
                );
            Ok((lhs.into(), t1 + prod(q(-1), [pi(z().neg(), 0, 2)]) * inner))
        },
    },
    Entry {
        id: "PHI_COR",
        anchor: "phi(q) through the a = q relation",
        note: "sum q^n (-q^n;q)_n (-q^(2n+1);q^2)_inf = 1 - phi(q) + (q^2;q^2)_inf (-q;q^2)_inf^3",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = int(1) - mk(Family::Phi, &[])? + prod(one(), [pi(one(), 2, 2), pi(m(-1, 0, 0, 0), 1, 2).pow(3)]);
            Ok((phi_lhs(), rhs))
        },
    },
    Entry {
        id: "COR_ZQ",
        anchor: "a = q relation at z = -1",
        note: "sum q^n (-q^n;q)_n (-q^(2n+1);q^2)_inf = 1 + 2q nu(q,-1;q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((phi_lhs(), int(1) + mk(Family::NuTri, &[q(1), m(-1, 0, 0, 0)])?.scale(m(2, 0, 0, 1)))),
    },
    Entry {
        id: "CORC",
        anchor: "nu(1/q,1;-q) as a single sum",
        note: "nu(1/q,1;-q) = sum q^(n^2)/(q;q^2)_(n+1)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = fam().quad(2, 0, 0).with(p(one(), 1, 2, N1).inv());
            Ok((mk_neg(Family::NuTri, &[q(-1), one()])?, rhs.into()))
        },
    },
    Entry {
        id: "CORC_ALT",
        anchor: "nu(1/q,1;-q) through nu(q,-1;q)",
        note: "nu(1/q,1;-q) = 1 + 2q sum q^(n^2+2n)/(q;q^2)_(n+1)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let s = fam().quad(2, 4, 0).with(p(one(), 1, 2, N1).inv());
            Ok((mk_neg(Family::NuTri, &[q(-1), one()])?, int(1) + Expr::from(s).scale(m(2, 0, 0, 1))))
        },
    },
    Entry {
        id: "AQ_ZNEG1",
        anchor: "a = q relation at z = -1, corrected denominator",
        note: "sum q^n (q^n;q)_(n+1)(q^(2n+2);q^2)_inf = -q^-1 sum_(n>=1) (-1)^n q^(n^2+n)/(q^3;q^2)_n",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let rhs = fam().start(1).ratio(m(-1, 0, 0, 0)).quad(2, 2, 0).with(p(one(), 3, 2, N0).inv());
            Ok((aq_zneg1_lhs(), Expr::from(rhs).scale(m(-1, 0, 0, -1))))
        },
    },
    Entry {
        id: "AQ_ZNEG1_NU",
        anchor: "a = q relation at z = -1 through nu",
        note: "sum q^n (q^n;q)_(n+1)(q^(2n+2);q^2)_inf = q nu(-q^2,q^2;-q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((aq_zneg1_lhs(), mk_neg(Family::NuTri, &[m(-1, 0, 0, 2), q(2)])?.scale(q(1)))),
    },
    Entry {
        id: "FINAL_COR",
        anchor: "shifted a = q relation",
        note: "sum q^n (q^(n+2);q)_(n+1)(q^(2n+4);q^2)_inf = q^-1 sum (-1)^n q^(n^2+n)/(q;q^2)_(n+1) - q^-1 (q^2;q^2)_inf",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let lhs = fam().quad(0, 2, 0).with(pn(one(), 2, 1, 1, N1)).with(pn(one(), 4, 2, 2, INF));
            let s = fam().ratio(m(-1, 0, 0, 0)).quad(2, 2, 0).with(p(one(), 1, 2, N1).inv());
            Ok((lhs.into(), Expr::from(s).scale(q(-1)) - prod(q(-1), [pi(one(), 2, 2)])))
        },
    },
    Entry {
        id: "EQUIV",
        anchor: "equivalence with Choi's trivariate omega",
        note: "omega0(z^2/q^2, a^2z^2/q^4; q) = (q^4/z^4) omega_star(a,z;q)",
        two_var: true,
        min_acc: 10,
        expected: Expected::Pass,
        sides: |_| {
            let [e, _] = mock::equivalence_sides()?;
            Ok(e)
        },
    },
    Entry {
        id: "EQUIV_NU",
        anchor: "equivalence with Choi's trivariate nu",
        note: "nu0(-a^2z^2/q^4, -q^2/a^2; q) = nu_star(a,z;q)",
        two_var: true,
        min_acc: 10,
        expected: Expected::Pass,
        sides: |_| {
            let [_, e] = mock::equivalence_sides()?;
            Ok(e)
        },
    },
    Entry {
        id: "NU0_REL",
        anchor: "nu(a,z) through nu0",
        note: "nu(a,z;q) = nu0(-z,-a/z;q)",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((mk(Family::NuTri, &[a(), z()])?, mk(Family::Nu0, &[z().neg(), m(-1, -1, 1, 0)])?)),
    },
    Entry {
        id: "G_OMEGA",
        anchor: "omega0 through G(a,b;q)",
        note: "omega0(a,z;q) = G(aq,zq;q^2)/((1-aq)(1-zq))",
        two_var: true,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| {
            let g = MockSpec::new(Family::BigG, vec![m(1, 0, 1, 1), m(1, 1, 0, 1)]).step(QStep::new(2)?).expr()?;
            let den = prod(one(), [p(a(), 1, 1, ONE).inv(), p(z(), 1, 1, ONE).inv()]);
            Ok((mk(Family::Omega0, &[a(), z()])?, g * den))
        },
    },
    Entry {
        id: "G_G3",
        anchor: "G(x,q/x;q) and the universal mock theta function g3 at x = z",
        note: "G(z,q/z;q) = (1-z)(1-q/z) g3(z,q), with the factors cleared into g3's denominators since 1-z is not invertible",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((mk(Family::BigG, &[z(), m(1, -1, 0, 1)])?, mock::g3_cleared(&z())?)),
    },
    Entry {
        id: "ANDREWS_ALT",
        anchor: "alternative single-sum form of omega(z;q)",
        note: "omega(z;q) = sum_(n>=1) z^(n-1) q^(n-1)/(q;q^2)_n",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| mock::andrews_alt_sides(AltForm::OmegaBi, &z()),
    },
    Entry {
        id: "ANDREWS_ALT_NU",
        anchor: "alternative single-sum form of nu(z;q)",
        note: "nu(z;q) = sum (q/z;q^2)_n (-zq)^n",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| mock::andrews_alt_sides(AltForm::NuBi, &z()),
    },
    Entry {
        id: "OMEGA1_OMEGA",
        anchor: "omega1 at a = 1",
        note: "omega1(1,z;q) = omega(z^2;q^2)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((mk(Family::Omega1, &[one(), z()])?, mk(Family::OmegaBi, &[m(1, 2, 0, 0)])?.q_power(2))),
    },
    Entry {
        id: "NU_SPEC",
        anchor: "nu(a,z) at a = 1",
        note: "nu(1,z;q) = nu(z;q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((mk(Family::NuTri, &[one(), z()])?, mk(Family::NuBi, &[z()])?)),
    },
    Entry {
        id: "NU1_SPEC",
        anchor: "nu(a,z) at z = 1",
        note: "nu(z,1;q) = nu1(z;q)",
        two_var: false,
        min_acc: 0,
        expected: Expected::Pass,
        sides: |_| Ok((mk(Family::NuTri, &[z(), one()])?, mk(Family::Nu1, &[z()])?)),
    },
];

fn sos_lhs() -> Expr {
    fam()
        .quad(0, 2, 0)
        .with(p(z().neg(), 1, 2, N0))
        .with(p(m(-1, 0, 0, 0), 1, 1, N0).inv())
        .into()
}

fn phi_lhs() -> Expr {
    fam()
        .quad(0, 2, 0)
        .with(pn(m(-1, 0, 0, 0), 0, 1, 1, N0))
        .with(pn(m(-1, 0, 0, 0), 1, 2, 2, INF))
        .into()
}

fn aq_zneg1_lhs() -> Expr {
    fam()
        .quad(0, 2, 0)
        .with(pn(one(), 0, 1, 1, N1))
        .with(pn(one(), 2, 2, 2, INF))
        .into()
}

/// Every entry, in catalog order.
pub fn catalog() -> &'static [Entry] {
    ENTRIES
}

pub fn lookup(id: &str) -> Result<&'static Entry> {
    ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Machine-readable catalog listing.
pub fn catalog_json() -> Value {
    Value::Array(
        ENTRIES
            .iter()
            .map(|e| {
                json!({
                    "id": e.id,
                    "anchor": e.anchor,
                    "quote": e.note,
                    "default_order": e.default_acc(),
                    "min_order": e.min_acc,
                    "expected": e.expected,
                })
            })
            .collect(),
    )
}

fn check_acc(e: &Entry, acc: i64) -> Result<()> {
    if acc < e.min_acc {
        return Err(Error::AccuracyTooLow {
            id: e.id.to_string(),
            requested: acc,
            minimum: e.min_acc,
        });
    }
    Ok(())
}

/// Both sides of `id` expanded through `q^acc`.
pub fn instantiate(id: &str, acc: i64) -> Result<IdentityInstance> {
    let e = lookup(id)?;
    check_acc(e, acc)?;
    let (l, r) = e.sides(acc)?;
    Ok(IdentityInstance {
        id: e.id.to_string(),
        lhs: l.eval(acc)?,
        rhs: r.eval(acc)?,
        citation: Citation {
            anchor: e.anchor.to_string(),
            quote: e.note.to_string(),
        },
        default_acc: e.default_acc(),
        expected: e.expected,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// An expected-fail entry failed; the mismatch is attached.
    ExpectedFail,
    Error,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::ExpectedFail => "expected-fail",
            Outcome::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstMismatch {
    pub q_exp: i64,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub id: String,
    pub anchor: String,
    pub quote: String,
    pub order: i64,
    pub status: Outcome,
    pub first_mismatch: Option<FirstMismatch>,
    pub error: Option<Error>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    /// The entry met its expectation.
    pub fn ok(&self) -> bool {
        matches!(self.status, Outcome::Pass | Outcome::ExpectedFail)
    }

    pub fn to_json(&self, with_timing: bool) -> Value {
        let mut v = json!({
            "id": self.id,
            "anchor": self.anchor,
            "quote": self.quote,
            "order": self.order,
            "status": self.status.as_str(),
            "first_mismatch": self.first_mismatch.as_ref().map(|m| json!({
                "q_exp": m.q_exp,
                "lhs": m.lhs.to_string(),
                "rhs": m.rhs.to_string(),
            })),
        });
        if let Some(e) = &self.error {
            v["error"] = json!(e.to_string());
        }
        if with_timing {
            v["elapsed_ms"] = json!(self.elapsed_ms);
        }
        v
    }
}

/// Verifies `id` through `q^acc`, optionally adding `z q^k` to the right side.
pub fn verify_perturbed(id: &str, acc: i64, perturb: Option<i64>) -> Result<VerifyReport> {
    let start = Instant::now();
    let e = lookup(id)?;
    let mut inst = instantiate(id, acc)?;
    if let Some(k) = perturb {
        inst.rhs = inst
            .rhs
            .add(&QSeries::monomial(&Monomial::new(1, 1, 0, k), acc));
    }
    let cmp = series_compare(&inst.lhs, &inst.rhs, acc)?;
    let first_mismatch = cmp.first_mismatch.map(|m| FirstMismatch {
        q_exp: m.q_exp,
        lhs: m.lhs,
        rhs: m.rhs,
    });
    let status = match (first_mismatch.is_some(), e.expected) {
        (false, Expected::Pass) => Outcome::Pass,
        (true, Expected::Fail) => Outcome::ExpectedFail,
        _ => Outcome::Fail,
    };
    Ok(VerifyReport {
        id: e.id.to_string(),
        anchor: e.anchor.to_string(),
        quote: e.note.to_string(),
        order: acc,
        status,
        first_mismatch,
        error: None,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn verify(id: &str, acc: i64) -> Result<VerifyReport> {
    verify_perturbed(id, acc, None)
}

fn verify_or_report(e: &Entry, acc: Option<i64>, perturb: Option<i64>) -> VerifyReport {
    let order = acc.unwrap_or_else(|| e.default_acc());
    verify_perturbed(e.id, order, perturb).unwrap_or_else(|err| VerifyReport {
        id: e.id.to_string(),
        anchor: e.anchor.to_string(),
        quote: e.note.to_string(),
        order,
        status: Outcome::Error,
        first_mismatch: None,
        error: Some(err),
        elapsed_ms: 0,
    })
}

/// Verifies every entry at `acc` (each entry's default when `None`) on
/// `workers` threads. Reports come back in catalog order.
pub fn verify_all(acc: Option<i64>, workers: usize) -> Vec<VerifyReport> {
    verify_all_perturbed(acc, workers, None)
}

/// [`verify_all`] with `z q^k` added to the right side of entry `id` only.
pub fn verify_all_perturbed(
    acc: Option<i64>,
    workers: usize,
    perturb: Option<(&str, i64)>,
) -> Vec<VerifyReport> {
    let workers = workers.max(1);
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<VerifyReport>>> = Mutex::new(vec![None; ENTRIES.len()]);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(e) = ENTRIES.get(i) else { break };
                let k = perturb.filter(|(id, _)| *id == e.id).map(|(_, k)| k);
                let r = verify_or_report(e, acc, k);
                slots.lock().unwrap()[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every slot is filled"))
        .collect()
}

/// Classical identities, mock families, partition families and catalog
/// entries in one document.
pub fn full_catalog() -> Value {
    json!({
        "schema": "qmock/1",
        "classical": crate::qkit::classical_catalog(),
        "families": mock::family_catalog(),
        "partitions": PartFamily::ALL.iter().map(|f| f.name()).collect::<Vec<_>>(),
        "identities": catalog_json(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = ENTRIES.iter().map(|e| e.id).collect();
        ids.sort();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn unknown_and_low_accuracy() {
        assert!(matches!(instantiate("NOPE", 10), Err(Error::UnknownId(_))));
        assert!(matches!(
            instantiate("THM3", 5),
            Err(Error::AccuracyTooLow { .. })
        ));
    }

    #[test]
    fn every_entry_meets_expectation_at_low_order() {
        for e in ENTRIES {
            let r = verify(e.id, 12.max(e.min_acc)).unwrap_or_else(|err| panic!("{}: {err}", e.id));
            assert!(r.ok(), "{}: {:?}", e.id, r.first_mismatch);
        }
    }
}
