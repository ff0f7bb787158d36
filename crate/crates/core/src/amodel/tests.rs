use super::*;
use crate::homcat::dims_table;
use crate::mirror_core::tilting_length;
use VanishingCycleId::*;

fn counts(f: &Family, ell: u32) -> Vec<usize> {
    critical_inventory(f, ell).unwrap().counts.values().copied().collect()
}

#[test]
fn inventory_counts() {
    assert_eq!(counts(&Family::loop_(5, 3), 2), vec![2, 1, 2, 4]);
    assert_eq!(critical_inventory(&Family::loop_(5, 3), 2).unwrap().total(), 9);
    assert_eq!(counts(&Family::chain(4, 3), 2), vec![1, 2, 3]);
    assert_eq!(counts(&Family::bp(4, 4), 2), vec![2, 4]);
}

#[test]
fn loop_5_3_has_four_v0_cycles() {
    let inv = critical_inventory(&Family::loop_(5, 3), 2).unwrap();
    let v0: Vec<_> = inv.cycles().into_iter().filter(|c| matches!(c, V0(..))).collect();
    assert_eq!(v0, vec![V0(0, 0), V0(0, 1), V0(1, 0), V0(1, 1)]);
    for pt in &inv.points {
        assert_eq!(pt.value == CriticalValue::Zero, pt.kind != CriticalKind::IV);
    }
}

#[test]
fn unsupported_cases_name_their_reduction() {
    match critical_inventory(&Family::chain(2, 5), 2) {
        Err(MirrorError::UnsupportedCase { reduction, .. }) => assert_eq!(reduction.as_deref(), Some("loop:2,3 --index 1")),
        other => panic!("{other:?}"),
    }
    assert!(matches!(critical_inventory(&Family::bp(3, 3), 1), Err(MirrorError::UnsupportedCase { .. })));
    assert!(matches!(critical_inventory(&Family::loop_(5, 3), 3), Err(MirrorError::BadIndex { .. })));
}

#[test]
fn theta_values() {
    assert_eq!(theta(&Family::loop_(5, 3), 2, 0, 0), Turns::from_integer(0));
    assert_eq!(theta(&Family::loop_(5, 3), 2, 1, 1), Turns::new(3, 4));
    assert_eq!(theta(&Family::bp(4, 4), 2, 1, 0), Turns::new(1, 4));
    assert_eq!(theta(&Family::chain(4, 3), 2, 1, 0), Turns::new(1, 3));
}

#[test]
fn loop_5_3_order() {
    let f = Family::loop_(5, 3);
    let order = distinguished_order(&f, 2).unwrap();
    assert_eq!(&order[..4], &[V0(1, 1), V0(0, 1), V0(1, 0), V0(0, 0)]);
    let mut sorted = order.clone();
    sorted.sort();
    let mut inv = critical_inventory(&f, 2).unwrap().cycles();
    inv.sort();
    assert_eq!(sorted, inv);
}

#[test]
fn equal_angles_are_ordered_by_m() {
    // loop(5,5;2): θ(1,0) = θ(0,1) = 1/4
    let order = distinguished_order(&Family::loop_(5, 5), 2).unwrap();
    let a = order.iter().position(|c| *c == V0(0, 1)).unwrap();
    let b = order.iter().position(|c| *c == V0(1, 0)).unwrap();
    assert!(a < b);
}

#[test]
fn intersection_examples() {
    let f = Family::loop_(5, 5);
    assert_eq!(intersection_count(&f, 2, V0(1, 1), V0(0, 0)), 1);
    assert!(!is_degenerate(&f, 2, V0(1, 1), V0(0, 0)));
    // 0 < m − M < P and κQ < n − N < (κ+1)Q with κ = 1
    assert_eq!(intersection_count(&f, 2, V0(1, 3), V0(0, 0)), 2);
    // 0 < M − m < P and κ = 1
    assert_eq!(intersection_count(&f, 2, V0(0, 3), V0(1, 0)), 1);
    for r in 1..=2 {
        assert_eq!(intersection_count(&f, 2, V0(1, 2), Vlambdamu(r)), 1);
    }
    assert_eq!(intersection_count(&f, 2, V0(1, 2), Vmuw(1)), 1);
    assert_eq!(intersection_count(&f, 2, V0(1, 2), Vmuw(0)), 0);
    assert_eq!(intersection_count(&f, 2, V0(1, 3), Vlambdaw(1)), 1);
    assert_eq!(intersection_count(&f, 2, Vmuw(1), Vlambdaw(1)), 0);
}

#[test]
fn degenerate_pair_matches_b_side() {
    let f = Family::loop_(5, 3);
    assert!(is_degenerate(&f, 2, V0(1, 1), V0(0, 1)));
    let (objects, dims) = dims_table(&f, 2, (0, 0)).unwrap();
    let s = objects.iter().position(|o| *o == object_match(&f, V0(1, 1)).0).unwrap();
    let t = objects.iter().position(|o| *o == object_match(&f, V0(0, 1)).0).unwrap();
    assert_eq!(intersection_count(&f, 2, V0(1, 1), V0(0, 1)), dims[&(s, t, 0)]);
}

#[test]
fn winding_across_the_cylinder() {
    let f = Family::loop_(7, 5);
    for (m, n) in v0_indices(&f, 2) {
        let w = winding(&f, 2, m, n);
        assert_eq!(w.winding, Turns::new(2 * m as i64, 6) + Turns::new(2 * n as i64, 4));
        assert_eq!(w.entry, Turns::new(-2 * n as i64, 4));
    }
}

#[test]
fn surface_examples() {
    let s = surface_invariants(&Family::loop_(5, 3), 2).unwrap();
    assert_eq!((s.genus, s.punctures, s.rank_h1, s.euler), (3, 3, 8, -7));
    let s = surface_invariants(&Family::loop_(3, 3), 1).unwrap();
    assert_eq!((s.genus, s.punctures), (3, 4));
    let s = surface_invariants(&Family::chain(4, 3), 2).unwrap();
    assert_eq!((s.genus, s.punctures), (1, 4));
}

#[test]
fn object_match_is_a_bijection() {
    let f = Family::loop_(5, 3);
    assert_eq!(object_match(&f, V0(0, 0)), (ObjectId::K0(4, 2), 0));
    assert_eq!(object_match(&f, Vlambdamu(2)), (ObjectId::Kw(2), 3));
    for f in [Family::loop_(7, 4), Family::chain(6, 5), Family::bp(6, 3)] {
        for ell in f.admissible_indices() {
            let Ok(inv) = critical_inventory(&f, ell) else { continue };
            let mut matched: Vec<ObjectId> = inv.cycles().into_iter().map(|c| object_match(&f, c).0).collect();
            let mut objects = crate::matfac::basic_objects(&f, ell).unwrap();
            matched.sort();
            objects.sort();
            assert_eq!(matched, objects, "{f} ell {ell}");
            assert_eq!(inv.total() as u64, tilting_length(&f, ell).unwrap().length);
        }
    }
}

#[test]
fn compare_examples() {
    for (f, ell) in [(Family::loop_(5, 3), 2), (Family::chain(6, 5), 2), (Family::bp(6, 3), 3)] {
        let report = compare_ab(&f, ell).unwrap();
        assert!(report.passed(), "{f}: {:?}", report.mismatches());
        let n = report.cycles.len();
        assert_eq!(report.pairs.len(), n * n);
        let json = report.to_json();
        assert_eq!(json["pairs"][0]["match"], true);
    }
}

#[test]
fn bp_regrouping_is_flagged() {
    assert_eq!(critical_inventory(&Family::bp(4, 2), 2).unwrap().regrouping.as_deref(), Some("p > q = ℓ"));
    assert_eq!(critical_inventory(&Family::bp(3, 3), 3).unwrap().regrouping.as_deref(), Some("p = q = ℓ"));
    assert_eq!(critical_inventory(&Family::bp(4, 4), 2).unwrap().regrouping, None);
}

#[test]
fn incidence_dot_is_deterministic() {
    let r = compare_ab(&Family::loop_(3, 3), 2).unwrap();
    let dot = incidence_dot(&r);
    assert_eq!(dot, incidence_dot(&r));
    assert!(dot.starts_with("digraph"));
}
