use qmock::partitions::{self, PartFamily};
use qmock::Error;

#[test]
fn small_counts() {
    assert_eq!(partitions::p_star(5, false).unwrap().count, 17);
    assert_eq!(partitions::p_substar(5).unwrap(), 9);
    assert_eq!(partitions::p_star(6, false).unwrap().count, 28);
    assert_eq!(partitions::p_substar(6).unwrap(), 14);
    assert_eq!(partitions::overpartition_count(3, false).unwrap().count, 8);
    assert_eq!(partitions::overpartition_count(1, false).unwrap().count, 2);
    assert_eq!(partitions::p_prime(5, false).unwrap().count, 4);
    assert_eq!(partitions::p_omega(1, false).unwrap().count, 1);
    assert_eq!(partitions::p_omega(2, false).unwrap().count, 2);
}

#[test]
fn p_prime_sequence() {
    let want = [
        1, 2, 2, 2, 4, 4, 4, 6, 6, 8, 10, 10, 12, 14, 16, 18, 22, 24, 26, 32, 34, 38, 44, 48, 54,
        62,
    ];
    let got: Vec<u64> = (0..=25)
        .map(|n| partitions::p_prime(n, false).unwrap().count)
        .collect();
    assert_eq!(got, want);
}

#[test]
fn p_prime_five_follows_the_generating_function() {
    // A zero smallest part contributes an empty (-q^0;q)_0, so 0 never repeats;
    // 3+1+1 comes from the smallest-part-1 term.
    let (_, items) = partitions::listing(PartFamily::PPrime, 5).unwrap();
    let mut names: Vec<String> = items.into_iter().map(|(t, _)| t).collect();
    names.sort();
    assert_eq!(names, ["3+1+1", "3+2", "5", "5+0"]);
}

#[test]
fn p_star_five_listing() {
    let (count, items) = partitions::listing(PartFamily::PStar, 5).unwrap();
    assert_eq!(count, 17);
    assert_eq!(items.len(), 17);
    let names: Vec<&str> = items.iter().map(|(t, _)| t.as_str()).collect();
    assert!(names.contains(&"5~"));
    assert!(names.contains(&"3+1+1+0~"));
    assert_eq!(
        items[0].1,
        serde_json::json!([{ "value": 5, "over": true }])
    );
}

#[test]
fn enumerators_match_generating_functions() {
    for (f, n) in [
        (PartFamily::POmega, 25),
        (PartFamily::PNu, 25),
        (PartFamily::PStar, 20),
        (PartFamily::PSubstar, 20),
        (PartFamily::PPrime, 25),
        (PartFamily::Overpartitions, 20),
    ] {
        let c = partitions::crosscheck(f, n).unwrap();
        assert!(c.ok(), "{}: {:?}", f.name(), c.first_mismatch);
    }
}

#[test]
fn pentagonal_difference_pattern() {
    for row in partitions::pnt_check(30).unwrap() {
        assert_eq!(row.difference, row.predicted, "n = {}", row.n);
    }
    assert_eq!(partitions::pentagonal_sign(5), -1);
    assert_eq!(partitions::pentagonal_sign(6), 0);
    assert_eq!(partitions::pentagonal_sign(1), 1);
}

#[test]
fn parity() {
    let v = partitions::parity_check(25).unwrap();
    assert!(v.ok(), "{:?}", v.failures);
}

#[test]
fn domain_errors() {
    assert!(partitions::p_omega(0, false).is_err());
    assert!(partitions::p_nu(-1, false).is_err());
    assert!(partitions::p_star(0, false).is_err());
    assert!(matches!(
        PartFamily::from_name("p_bogus"),
        Err(Error::UnknownName(_))
    ));
    assert!(partitions::listing(PartFamily::PSubstar, 3).is_err());
}
