//! One pass/fail line per acceptance criterion. Exits nonzero if any fails.

use std::process::Command;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use qmock::partitions::{self, PartFamily};
use qmock::registry::{self, Outcome};
use qmock::ring::{Exp, Int, LaurentPoly, QSeries};
use qmock::Error;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn identity_suite() -> Check {
    let t = Instant::now();
    let o = Command::new(env!("CARGO_BIN_EXE_qmock"))
        .args([
            "verify",
            "--all",
            "--order",
            "30",
            "--workers",
            "1",
            "--format",
            "json",
            "--stable",
        ])
        .env_remove("QMOCK_DEFAULT_ORDER")
        .output()
        .map_err(|e| e.to_string())?;
    let secs = t.elapsed().as_secs_f64();
    ensure(o.status.code() == Some(0), || {
        format!("exit code {:?}", o.status.code())
    })?;
    let v: Value = serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())?;
    let reports = v["reports"].as_array().ok_or("no reports")?;
    ensure(reports.len() >= 55, || {
        format!("only {} entries", reports.len())
    })?;
    let status = |id: &str| {
        reports
            .iter()
            .find(|r| r["id"] == id)
            .map(|r| r["status"].as_str().unwrap_or("").to_string())
    };
    for r in reports {
        let s = r["status"].as_str().unwrap_or("");
        let want = if r["id"] == "JTP_PRINTED" {
            "expected-fail"
        } else {
            "pass"
        };
        ensure(s == want, || format!("{} is {s}", r["id"]))?;
    }
    for id in [
        "THM3",
        "THM4",
        "FUNC_REL",
        "AY_OMEGA",
        "AY_NU",
        "KANG_SPECIAL",
        "EULER_DISG",
        "CORC",
        "FINAL_COR",
    ] {
        ensure(status(id).as_deref() == Some("pass"), || {
            format!("{id} missing or not passing")
        })?;
    }
    let jtp = reports
        .iter()
        .find(|r| r["id"] == "JTP_PRINTED")
        .ok_or("JTP_PRINTED missing")?;
    ensure(jtp["first_mismatch"]["q_exp"] == 2, || {
        format!("JTP_PRINTED mismatch at {}", jtp["first_mismatch"])
    })?;
    ensure(secs <= 120.0, || format!("took {secs:.1} s"))?;
    Ok(format!(
        "{} entries at order 30 on one worker in {secs:.2} s; JTP_PRINTED fails at q^2",
        reports.len()
    ))
}

fn reference_numerics() -> Check {
    let e = |r: Result<u64, Error>| r.map_err(|e| e.to_string());
    let star5 = e(partitions::count(PartFamily::PStar, 5))?;
    let sub5 = e(partitions::p_substar(5))?;
    let star6 = e(partitions::count(PartFamily::PStar, 6))?;
    let sub6 = e(partitions::p_substar(6))?;
    ensure((star5, sub5) == (17, 9), || {
        format!("p*(5), p_*(5) = {star5}, {sub5}")
    })?;
    ensure(star5 as i64 - 2 * sub5 as i64 == -1, || {
        "difference at 5".into()
    })?;
    ensure((star6, sub6) == (28, 14), || {
        format!("p*(6), p_*(6) = {star6}, {sub6}")
    })?;
    ensure(
        e(partitions::count(PartFamily::Overpartitions, 3))? == 8,
        || "overpartitions(3)".into(),
    )?;
    ensure(e(partitions::count(PartFamily::PPrime, 5))? == 4, || {
        "p'(5)".into()
    })?;
    let want = [
        1, 2, 2, 2, 4, 4, 4, 6, 6, 8, 10, 10, 12, 14, 16, 18, 22, 24, 26, 32, 34, 38, 44, 48, 54,
        62,
    ];
    let got = (0..=25)
        .map(|n| e(partitions::count(PartFamily::PPrime, n)))
        .collect::<Result<Vec<_>, _>>()?;
    ensure(got == want, || format!("p'(0..25) = {got:?}"))?;
    let rows = partitions::pnt_check(30).map_err(|e| e.to_string())?;
    if let Some(r) = rows.iter().find(|r| r.difference != r.predicted) {
        return Err(format!(
            "p*({0}) - 2p_*({0}) = {1}, predicted {2}",
            r.n, r.difference, r.predicted
        ));
    }
    Ok("p*(5)=17 p_*(5)=9 p*(6)=28 p_*(6)=14 overpartitions(3)=8 p'(5)=4, p'(0..25) list, difference pattern n<=30".into())
}

fn enumerator_oracles() -> Check {
    let plan = [
        (PartFamily::POmega, 25),
        (PartFamily::PNu, 25),
        (PartFamily::PStar, 20),
        (PartFamily::PSubstar, 20),
        (PartFamily::PPrime, 25),
    ];
    for (f, n) in plan {
        let c = partitions::crosscheck(f, n).map_err(|e| e.to_string())?;
        ensure(c.ok(), || {
            format!("{} mismatch {:?}", f.name(), c.first_mismatch)
        })?;
    }
    Ok("p_omega, p_nu, p_prime through 25; p_star, p_substar through 20".into())
}

fn pentagonal_support(
    id: &str,
    first: impl Fn(i64) -> i64,
    second: impl Fn(i64) -> i64,
) -> Result<(), String> {
    let inst = registry::instantiate(id, 60).map_err(|e| e.to_string())?;
    let mut want = std::collections::BTreeMap::new();
    for j in 0..10i64 {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for k in [first(j), second(j)] {
            if k <= 60 {
                want.insert(k, sign);
            }
        }
    }
    for k in inst.lhs.val().min(0)..=60 {
        let c = inst.lhs.coeff(k);
        let expect = want.get(&k).copied().unwrap_or(0);
        let got = if c.is_zero() {
            0
        } else {
            c.coeff(Exp::ZERO).as_i64().unwrap_or(i64::MAX)
        };
        let pure = c.is_zero() || c.len() == 1;
        ensure(pure && got == expect, || {
            format!("{id}: coefficient of q^{k} is {c}, expected {expect}")
        })?;
    }
    Ok(())
}

fn pentagonal_analogues() -> Check {
    pentagonal_support(
        "EPNT1",
        |j| 6 * j * j + 4 * j + 1,
        |j| 6 * j * j + 8 * j + 3,
    )?;
    pentagonal_support("EPNT2", |j| j * (3 * j + 2), |j| (j + 1) * (3 * j + 1))?;
    Ok("support and signs of both analogues through q^60".into())
}

fn random_series(rng: &mut StdRng) -> QSeries {
    let val = rng.gen_range(-2..=2);
    let len = rng.gen_range(0..=8);
    let terms = (0..=len).map(|i| {
        let n = if i == 0 {
            rng.gen_range(1..4)
        } else {
            rng.gen_range(0..4)
        };
        let p = LaurentPoly::from_terms((0..n).map(|_| {
            let c: i64 = if rng.gen_bool(0.1) {
                rng.gen_range(-1..=1) * (1 << 40) + 3
            } else {
                rng.gen_range(-3..=3)
            };
            (
                Exp::new(rng.gen_range(-2..=2), rng.gen_range(-2..=2)),
                Int::from(c),
            )
        }));
        (
            val + i,
            if i == 0 && p.is_zero() {
                LaurentPoly::one()
            } else {
                p
            },
        )
    });
    QSeries::from_terms(terms.collect::<Vec<_>>(), val + len)
}

fn same(x: &QSeries, y: &QSeries) -> bool {
    let acc = x.acc().min(y.acc());
    x.truncate(acc) == y.truncate(acc)
}

fn property_suites() -> Check {
    let mut rng = StdRng::seed_from_u64(0x9e37_79b9);
    for case in 0..200 {
        let (a, b, c) = (
            random_series(&mut rng),
            random_series(&mut rng),
            random_series(&mut rng),
        );
        let ok = a.add(&b) == b.add(&a)
            && a.add(&b).add(&c) == a.add(&b.add(&c))
            && a.mul(&b) == b.mul(&a)
            && same(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c)))
            && same(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c)))
            && a.q_negate().q_negate() == a;
        ensure(ok, || format!("ring axiom failed on case {case}"))?;
        // Force a unit lowest coefficient, then check the inversion contract.
        let u = LaurentPoly::term(
            Int::from(if rng.gen_bool(0.5) { 1i64 } else { -1 }),
            Exp::new(rng.gen_range(-2..=2), 0),
        );
        let v = a.val();
        let unit = QSeries::from_terms(
            a.terms()
                .map(|(k, p)| (k, if k == v { u.clone() } else { p.clone() }))
                .collect::<Vec<_>>(),
            a.acc(),
        );
        let inv = unit.invert().map_err(|e| format!("case {case}: {e}"))?;
        let p = unit.mul(&inv);
        ensure(
            inv.val() == -v && inv.acc() == unit.acc() - 2 * v && same(&p, &QSeries::one(p.acc())),
            || format!("inversion contract failed on case {case}"),
        )?;
        let two = QSeries::from_terms([(v, LaurentPoly::constant(Int::from(2i64)))], a.acc());
        ensure(matches!(two.invert(), Err(Error::NotInvertible(_))), || {
            "2 inverted".into()
        })?;
    }

    let mut ids: Vec<&str> = registry::catalog().iter().map(|e| e.id).collect();
    ids.shuffle(&mut rng);
    for id in &ids[..10] {
        let r = registry::verify(id, 40).map_err(|e| format!("{id}: {e}"))?;
        ensure(r.ok(), || format!("{id} at order 40: {:?}", r.status))?;
    }

    let target = ids[10];
    let reports = registry::verify_all_perturbed(Some(16), 4, Some((target, 7)));
    for r in &reports {
        let flipped = r.id == target;
        let want = match (flipped, r.id.as_str()) {
            (true, "JTP_PRINTED") => Outcome::ExpectedFail,
            (true, _) => Outcome::Fail,
            (false, "JTP_PRINTED") => Outcome::ExpectedFail,
            (false, _) => Outcome::Pass,
        };
        ensure(r.status == want, || {
            format!("fault injection on {target}: {} is {:?}", r.id, r.status)
        })?;
    }
    Ok(format!("200 ring cases, inversion contract, 10 entries stable at order 40 ({}), fault injection flips only {target}", ids[..10].join(" ")))
}

fn specialization_chains() -> Check {
    let chains: [(&str, &[&str]); 2] = [
        (
            "omega",
            &[
                "THM3",
                "THM3_A1",
                "LEM_1PSI1",
                "F_AT_1",
                "G_AT_1",
                "H_AT_1",
                "AY_OMEGA",
            ],
        ),
        (
            "nu",
            &["THM4", "SPAD", "NU_RECIP", "SPAB", "SPAC", "COR52", "AY_NU"],
        ),
    ];
    for (_, links) in chains {
        for id in links.iter() {
            let r = registry::verify(id, 30).map_err(|e| format!("{id}: {e}"))?;
            ensure(r.status == Outcome::Pass, || {
                format!("{id}: {:?}", r.status)
            })?;
        }
    }
    Ok(chains
        .iter()
        .map(|(n, l)| format!("{n}: {}", l.join(" -> ")))
        .collect::<Vec<_>>()
        .join("; "))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("1 identity suite", identity_suite),
        ("2 reference numerics", reference_numerics),
        ("3 enumerator/GF oracles", enumerator_oracles),
        ("4 pentagonal analogues", pentagonal_analogues),
        ("5 property suites", property_suites),
        ("6 specialization chains", specialization_chains),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
