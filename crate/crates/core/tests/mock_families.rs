use qmock::mock::{self, AltForm, Family, MockSpec};
use qmock::qkit::QStep;
use qmock::ring::{series_compare, Monomial, Status};
use qmock::Error;

fn m(s: &str) -> Monomial {
    s.parse().unwrap()
}

fn sample_args(f: Family) -> Vec<Monomial> {
    f.params()
        .iter()
        .map(|p| match *p {
            "z" => m("-z*q"),
            "a" => m("a"),
            "y" => m("a*q^3"),
            "x" => m("z*q"),
            "b" => m("-z*q/a"),
            "c" => m("z^2*q^2/a"),
            other => panic!("unexpected parameter {other}"),
        })
        .collect()
}

#[test]
fn folded_and_post_hoc_sign_change_agree() {
    for f in Family::ALL {
        let spec = MockSpec::new(f, sample_args(f)).qsign(-1);
        let folded = spec.build(16);
        let post = spec.build_negated(16);
        match (folded, post) {
            (Ok(x), Ok(y)) => assert_eq!(x, y, "{}", f.name()),
            (Err(Error::IllegalSpec(_)), Err(Error::IllegalSpec(_))) => {
                assert_eq!(f, Family::G3, "only g3 may be rejected, got {}", f.name())
            }
            (x, y) => panic!(
                "{}: routes disagree: {:?} vs {:?}",
                f.name(),
                x.err(),
                y.err()
            ),
        }
    }
}

#[test]
fn folded_and_post_hoc_agree_with_a_step() {
    let spec = MockSpec::new(Family::BigG, vec![m("a*q"), m("z*q")])
        .step(QStep::new(2).unwrap())
        .qsign(-1);
    assert_eq!(spec.build(20).unwrap(), spec.build_negated(20).unwrap());
}

#[test]
fn every_family_is_named_in_the_catalog() {
    let cat = mock::family_catalog();
    let names: Vec<&str> = cat
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["name"].as_str().unwrap())
        .collect();
    for f in Family::ALL {
        assert!(names.contains(&f.name()));
        assert_eq!(Family::from_name(f.name()).unwrap(), f);
    }
    assert!(matches!(
        Family::from_name("omega2"),
        Err(Error::UnknownName(_))
    ));
}

#[test]
fn wrong_arity_is_illegal() {
    let e = MockSpec::new(Family::NuTri, vec![m("a")])
        .build(5)
        .unwrap_err();
    assert!(matches!(e, Error::IllegalSpec(_)));
}

#[test]
fn omega_q_squared_two_ways() {
    // omega(q^2) by substitution against the direct sum of q^(4n^2+4n)/(q^2;q^4)_(n+1)^2.
    let sub = MockSpec::new(Family::Omega, vec![])
        .expr()
        .unwrap()
        .q_power(2)
        .eval(30)
        .unwrap();
    let direct = qmock::qkit::HyperFamily::new().quad(8, 8, 0).with(
        qmock::qkit::Poch::new(Monomial::one(), 4, qmock::qkit::Len::Fin(1, 1))
            .shift(2, 0)
            .pow(-2),
    );
    let direct = qmock::qkit::Expr::from(direct).eval(30).unwrap();
    assert_eq!(
        series_compare(&sub, &direct, 30).unwrap().status,
        Status::Pass
    );
}

#[test]
fn alternative_forms_and_equivalences_hold() {
    for which in [AltForm::OmegaBi, AltForm::NuBi] {
        let inst = mock::andrews_alt_forms(which, &Monomial::z(), 20).unwrap();
        assert_eq!(inst.lhs, inst.rhs, "{}", inst.id);
    }
    for inst in mock::equivalence_choi(16).unwrap() {
        assert_eq!(
            series_compare(&inst.lhs, &inst.rhs, 16).unwrap().status,
            Status::Pass,
            "{}",
            inst.id
        );
    }
}
