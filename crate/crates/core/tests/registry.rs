use std::time::Instant;

use qmock::registry::{self, Outcome};

#[test]
fn full_suite_at_default_orders() {
    let t = Instant::now();
    let reports = registry::verify_all(None, 4);
    for r in &reports {
        assert!(r.ok(), "{} {:?} {:?}", r.id, r.status, r.error);
    }
    eprintln!("{} entries in {:?}", reports.len(), t.elapsed());
    let slow: Vec<_> = {
        let mut v: Vec<_> = reports
            .iter()
            .map(|r| (r.elapsed_ms, r.id.clone()))
            .collect();
        v.sort();
        v.into_iter().rev().take(8).collect()
    };
    eprintln!("slowest: {slow:?}");
}

#[test]
fn perturbation_is_caught_for_every_entry() {
    for e in registry::catalog() {
        let acc = 12.max(e.min_acc);
        let r = registry::verify_perturbed(e.id, acc, Some(acc)).unwrap();
        if e.expected == qmock::instance::Expected::Pass {
            assert_eq!(r.status, Outcome::Fail, "{}", e.id);
        }
    }
}
