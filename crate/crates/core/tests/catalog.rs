use qmock::registry;
use serde_json::Value;

const SHIPPED: &str = include_str!("../catalog.json");

#[test]
fn shipped_catalog_matches_code() {
    let shipped: Value = serde_json::from_str(SHIPPED).unwrap();
    assert_eq!(
        shipped,
        registry::full_catalog(),
        "regenerate with `qmock catalog > crates/core/catalog.json`"
    );
}

#[test]
fn catalog_lists_every_entry_once_in_order() {
    let cat = registry::full_catalog();
    let ids: Vec<&str> = cat["identities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["id"].as_str().unwrap())
        .collect();
    let expected: Vec<&str> = registry::catalog().iter().map(|e| e.id).collect();
    assert_eq!(ids, expected);
    assert!(ids.len() >= 55);
}

#[test]
fn classical_entries_carry_parameter_schemas() {
    let cat = registry::full_catalog();
    for c in cat["classical"].as_array().unwrap() {
        assert!(c["name"].is_string());
        assert!(c["params"].is_array(), "{c}");
    }
}
