//! Exhaustive box enumeration against the frozen class list.

use lattice_polygon::{
    enumerate_toda_classes, LatticeBox, TodaClass, DEFAULT_ENUMERATION_BUDGET,
};
use std::collections::BTreeSet;

/// Every class with at most eight interior points, independently listed:
/// Y(n,k) for 1 <= n <= 8, 0 <= k <= n, and L(n) for 3 <= n <= 8.
fn expected_classes() -> BTreeSet<TodaClass> {
    let mut expected = BTreeSet::new();
    for n in 1..=8 {
        for k in 0..=n {
            expected.insert(TodaClass::Y { n, k });
        }
    }
    for n in 3..=8 {
        expected.insert(TodaClass::L { n });
    }
    expected
}

#[test]
fn default_box_recovers_all_fifty_classes() {
    let report =
        enumerate_toda_classes(8, &LatticeBox::default(), DEFAULT_ENUMERATION_BUDGET).unwrap();
    let found: BTreeSet<TodaClass> = report.classes.iter().copied().collect();
    let expected = expected_classes();
    assert_eq!(expected.len(), 50);
    assert_eq!(found, expected);
    assert!(report.candidates_examined <= DEFAULT_ENUMERATION_BUDGET);
}

#[test]
fn exactly_three_classes_have_one_interior_point() {
    let report =
        enumerate_toda_classes(8, &LatticeBox::default(), DEFAULT_ENUMERATION_BUDGET).unwrap();
    let singles: Vec<TodaClass> = report
        .classes
        .iter()
        .copied()
        .filter(|c| c.interior_count() == 1)
        .collect();
    assert_eq!(
        singles,
        vec![
            TodaClass::Y { n: 2, k: 0 },
            TodaClass::Y { n: 2, k: 1 },
            TodaClass::Y { n: 2, k: 2 },
        ]
    );
}
