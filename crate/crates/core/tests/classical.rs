use qmock::qkit::{self, Params};
use qmock::ring::{series_compare, Monomial, Status};
use qmock::Error;

fn params(kv: &[(&str, &str)]) -> Params {
    kv.iter()
        .map(|(k, v)| (k.to_string(), v.parse::<Monomial>().unwrap()))
        .collect()
}

#[test]
fn generic_specializations_hold() {
    let cases: &[(&str, &[(&str, &str)])] = &[
        ("q_binomial", &[("a", "a"), ("z", "z*q")]),
        ("gauss_second", &[("a", "z"), ("b", "a")]),
        ("rogers_fine_short", &[("a", "z"), ("t", "a*q")]),
        ("rogers_fine_long", &[("a", "z"), ("t", "a*q")]),
        (
            "andrews_deep",
            &[("A", "z"), ("B", "z*q"), ("a", "a"), ("b", "a*q")],
        ),
        ("triple_product", &[("z", "-z")]),
        ("fine", &[("b", "z"), ("u", "a*q")]),
    ];
    for (name, kv) in cases {
        let inst = qkit::classical(name, &params(kv), 18).unwrap_or_else(|e| panic!("{name}: {e}"));
        let r = series_compare(&inst.lhs, &inst.rhs, 18).unwrap();
        assert_eq!(
            r.status,
            Status::Pass,
            "{name}: {:?}",
            r.first_mismatch.map(|m| m.q_exp)
        );
    }
}

#[test]
fn bad_names_and_parameters() {
    assert!(matches!(
        qkit::classical("nope", &Params::new(), 5),
        Err(Error::UnknownName(_))
    ));
    assert!(matches!(
        qkit::classical("euler", &params(&[("w", "z")]), 5),
        Err(Error::BadParams(_))
    ));
    assert!(matches!(
        qkit::classical("euler", &params(&[("base", "z")]), 5),
        Err(Error::BadParams(_))
    ));
}
