//! Property tests over randomly drawn families, indices and objects.

use proptest::prelude::*;

use bhmirror::amodel::{self, VanishingCycleId};
use bhmirror::cli;
use bhmirror::galg::{monomials_of_degree, GradedModulePresentation};
use bhmirror::homcat;
use bhmirror::matfac::{basic_objects, build_basic_object, coker_module, shift, verify_mf};
use bhmirror::mirror_core::{self, Family, FamilyKind};
use bhmirror::quiverlab;

fn kind() -> impl Strategy<Value = FamilyKind> {
    prop_oneof![Just(FamilyKind::Loop), Just(FamilyKind::Chain), Just(FamilyKind::Bp)]
}

/// A family with p, q ≤ max and one of its admissible indices.
fn point(max: u32) -> impl Strategy<Value = (Family, u32)> {
    (kind(), 2..=max, 2..=max, any::<prop::sample::Index>()).prop_map(|(k, p, q, i)| {
        let f = Family::new(k, p, q).unwrap();
        let ls = f.admissible_indices();
        (f, ls[i.index(ls.len())])
    })
}

/// A point carrying a B-side collection.
fn b_point(max: u32) -> impl Strategy<Value = (Family, u32)> {
    point(max).prop_filter("BP needs ℓ ≥ 2", |(f, ell)| !(f.kind == FamilyKind::Bp && *ell == 1))
}

/// A point inside the A-model's range.
fn a_point(max: u32) -> impl Strategy<Value = (Family, u32)> {
    b_point(max).prop_filter("chain needs p > 2", |(f, _)| !(f.kind == FamilyKind::Chain && f.p == 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transpose_is_an_involution((f, _) in point(9)) {
        let poly = f.polynomial();
        prop_assert_eq!(mirror_core::transpose(&mirror_core::transpose(&poly)), poly);
    }

    #[test]
    fn weights_solve_the_exponent_system((f, _) in point(9)) {
        let poly = f.polynomial();
        let ws = mirror_core::weight_system(&poly);
        for row in &poly.matrix.entries {
            let total: u64 = row.iter().zip(&ws.d).map(|(a, d)| *a as u64 * d).sum();
            prop_assert_eq!(total, ws.h);
        }
    }

    #[test]
    fn milnor_closed_form_matches_the_jacobian((f, _) in point(9)) {
        let poly = f.polynomial();
        prop_assert_eq!(mirror_core::milnor_number(&poly).unwrap(), mirror_core::jacobian_basis(&poly).len() as u64);
    }

    #[test]
    fn gorenstein_parameter_is_negative((f, ell) in point(9)) {
        let a = mirror_core::gorenstein_free_part(&f, ell).unwrap();
        if f.kind == FamilyKind::Bp && (f.p, f.q) == (2, 2) {
            prop_assert_eq!(a, 0);
        } else {
            prop_assert!(a < 0, "{} ℓ {}: {}", f, ell, a);
        }
    }

    #[test]
    fn tilting_length_counts((f, ell) in point(9)) {
        let t = mirror_core::tilting_length(&f, ell).unwrap();
        prop_assert_eq!(t.length, f.object_count(ell));
        prop_assert_eq!(t.length, mirror_core::fjrw_dimension(&f.transpose_polynomial(), ell).unwrap().total);
        if let Ok(inv) = amodel::critical_inventory(&f, ell) {
            prop_assert_eq!(inv.total() as u64, t.length);
        }
    }

    #[test]
    fn w_is_the_product_of_its_factors((f, ell) in point(9)) {
        let prod = f.w_factors(ell).iter().fold(f.w_cofactor(), |acc, g| acc.mul(g));
        prop_assert_eq!(prod, f.w());
    }

    #[test]
    fn hilbert_function_of_the_hypersurface((f, ell) in point(7), a in -4i64..12, b in -4i64..12) {
        let ring = f.ring(ell);
        let l = ring.deg(a, b);
        let free = GradedModulePresentation::cyclic(ring.group, ring.group.zero(), vec![], None);
        prop_assert_eq!(free.graded_piece(l).dim(), monomials_of_degree(&ring.group, l).len());
        let r = GradedModulePresentation::cyclic(ring.group, ring.group.zero(), vec![], Some(ring.w.clone()));
        let expected = monomials_of_degree(&ring.group, l).len() - monomials_of_degree(&ring.group, l - ring.c).len();
        prop_assert_eq!(r.graded_piece(l).dim(), expected);
    }

    #[test]
    fn basic_objects_are_factorisations((f, ell) in b_point(9), pick in any::<prop::sample::Index>()) {
        let objects = basic_objects(&f, ell).unwrap();
        let id = objects[pick.index(objects.len())];
        let k = build_basic_object(&f, ell, id).unwrap();
        let r = verify_mf(&k);
        prop_assert!(r.passed(), "{} ℓ {} {}: {:?}", f, ell, id, r.failures);
    }

    #[test]
    fn cokernel_dimensions((f, ell) in b_point(7), pick in any::<prop::sample::Index>(), a in -4i64..10, b in -4i64..10) {
        // d1 is injective over S, so dim coker(d1)_l = Σ|S_{l+e}| − Σ|S_{l+o}|
        let objects = basic_objects(&f, ell).unwrap();
        let k = build_basic_object(&f, ell, objects[pick.index(objects.len())]).unwrap();
        let l = k.group.deg(a, b);
        let count = |v: &[bhmirror::galg::LDegree]| v.iter().map(|d| monomials_of_degree(&k.group, l + *d).len()).sum::<usize>();
        let expected = count(&k.even_gen_degrees) - count(&k.odd_gen_degrees);
        prop_assert_eq!(coker_module(&k).graded_piece(l).dim(), expected);
    }

    #[test]
    fn cycle_data_is_consistent((f, ell) in a_point(9)) {
        let s = amodel::surface_invariants(&f, ell).unwrap();
        prop_assert_eq!(s.rank_h1 as i64, 2 * s.genus as i64 + s.punctures as i64 - 1);
        let order = amodel::distinguished_order(&f, ell).unwrap();
        let thetas: Vec<_> = order
            .iter()
            .filter_map(|c| match c {
                VanishingCycleId::V0(m, n) => Some((amodel::theta(&f, ell, *m, *n), *m)),
                _ => None,
            })
            .collect();
        for w in thetas.windows(2) {
            prop_assert!(w[0].0 > w[1].0 || (w[0].0 == w[1].0 && w[0].1 < w[1].1));
        }
        for a in &order {
            for b in &order {
                prop_assert_eq!(amodel::intersection_count(&f, ell, *a, *b), amodel::intersection_count(&f, ell, *b, *a));
            }
        }
    }

    #[test]
    fn loop_winding((p, q, i) in (2u32..12, 2u32..12, any::<prop::sample::Index>())) {
        let f = Family::loop_(p, q);
        let ls = f.admissible_indices();
        let ell = ls[i.index(ls.len())];
        for (m, n) in amodel::v0_indices(&f, ell) {
            let w = amodel::winding(&f, ell, m, n);
            let l = ell as i64;
            prop_assert_eq!(w.exit - w.entry, amodel::Turns::new(l * m as i64, p as i64 - 1) + amodel::Turns::new(l * n as i64, q as i64 - 1));
        }
    }

    #[test]
    fn quiver_vertices_and_acyclicity((f, ell) in b_point(9)) {
        let q = quiverlab::expected_quiver(&f, ell).unwrap();
        prop_assert_eq!(q.vertices.len() as u64, mirror_core::tilting_length(&f, ell).unwrap().length);
        prop_assert!(!q.has_cycle());
    }

    #[test]
    fn analyze_is_deterministic((f, ell) in point(9)) {
        let spec = format!("{}:{},{}", format!("{:?}", f.kind).to_lowercase(), f.p, f.q);
        let args = ["bhmirror", "analyze", spec.as_str(), "--index", &ell.to_string(), "--json"];
        let first = cli::run(args);
        prop_assert_eq!(first.code, cli::EXIT_PASS);
        prop_assert_eq!(first, cli::run(args));
    }

    #[test]
    fn inadmissible_index_exits_with_three((f, extra) in (point(9).prop_map(|(f, _)| f), 1u32..5)) {
        let bad = f.d_max() * extra + 1;
        prop_assume!(f.check_index(bad).is_err());
        let spec = format!("{}:{},{}", format!("{:?}", f.kind).to_lowercase(), f.p, f.q);
        let o = cli::run(["bhmirror", "analyze", spec.as_str(), "--index", &bad.to_string()]);
        prop_assert_eq!(o.code, cli::EXIT_INPUT);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn routes_agree((f, ell) in b_point(6), s in any::<prop::sample::Index>(), t in any::<prop::sample::Index>(), n in -3i64..=4) {
        let objects = basic_objects(&f, ell).unwrap();
        let a = build_basic_object(&f, ell, objects[s.index(objects.len())]).unwrap();
        let b = build_basic_object(&f, ell, objects[t.index(objects.len())]).unwrap();
        prop_assert_eq!(homcat::route_a_dim(&a, &b, n), homcat::route_b_dim(&a, &b, n));
    }

    #[test]
    fn serre_duality_and_periodicity((f, ell) in b_point(6), s in any::<prop::sample::Index>(), t in any::<prop::sample::Index>()) {
        let objects = basic_objects(&f, ell).unwrap();
        let a = build_basic_object(&f, ell, objects[s.index(objects.len())]).unwrap();
        let b = build_basic_object(&f, ell, objects[t.index(objects.len())]).unwrap();
        prop_assert!(homcat::serre_check(&a, &b).holds);
        let lo = homcat::hom_dims(&a, &b, -3, 3);
        let hi = homcat::hom_dims(&a, &shift(&b, -b.c), -1, 5);
        prop_assert_eq!(lo, hi);
    }

    #[test]
    fn hom_tables_are_directed((f, ell) in b_point(6)) {
        let table = homcat::assemble_endomorphism_table(&f, ell).unwrap();
        prop_assert!(table.concentrated_in_degree_zero());
        let m = table.degree_zero_matrix();
        let q = quiverlab::expected_quiver(&f, ell).unwrap();
        let order = quiverlab::topological_order(&q).unwrap();
        let pos: Vec<usize> = table.objects.iter().map(|o| order.iter().position(|v| q.vertices[*v] == *o).unwrap()).collect();
        for s in 0..m.len() {
            prop_assert_eq!(m[s][s], 1);
            for t in 0..m.len() {
                if pos[t] < pos[s] {
                    prop_assert_eq!(m[s][t], 0, "{} → {}", table.objects[s], table.objects[t]);
                }
            }
        }
    }
}
