use wordrev::corpus::{check_entry, entries};
use wordrev::engine::Budget;

#[test]
fn bundled_claims_hold() {
    let mut failed = Vec::new();
    for e in entries() {
        for c in check_entry(e, &Budget::default()) {
            if c.passed == Some(false) {
                failed.push(format!("{}.{}: expected {} got {}", e.name, c.claim.property.key(), c.claim.expected.render(), c.observed));
            }
        }
    }
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn external_claims_are_not_checked() {
    for e in entries() {
        for c in check_entry(e, &Budget::default()) {
            assert_eq!(c.passed.is_none(), c.claim.external, "{}.{}", e.name, c.claim.property.key());
        }
    }
}
