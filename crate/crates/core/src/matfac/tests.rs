use super::*;
use crate::galg::CycScalar;
use crate::mirror_core::FamilyKind;

fn grid(max: u32) -> Vec<(Family, u32)> {
    let mut out = Vec::new();
    for p in 2..=max {
        for q in 2..=max {
            for kind in [FamilyKind::Loop, FamilyKind::Chain, FamilyKind::Bp] {
                let f = Family::new(kind, p, q).unwrap();
                for ell in f.admissible_indices() {
                    if kind == FamilyKind::Bp && ell == 1 {
                        continue;
                    }
                    out.push((f, ell));
                }
            }
        }
    }
    out
}

#[test]
fn every_object_verifies() {
    for (f, ell) in grid(7) {
        for id in basic_objects(&f, ell).unwrap() {
            let k = build_basic_object(&f, ell, id).unwrap();
            let rep = verify_mf(&k);
            assert!(rep.passed(), "{f} ℓ={ell} {id}: {:?}", rep.failures);
        }
    }
}

#[test]
fn loop_kx_is_rank_one() {
    let f = Family::loop_(5, 3);
    let k = build_basic_object(&f, 2, ObjectId::Kx(4)).unwrap();
    assert_eq!(k.rank, 1);
    assert_eq!(k.d1[0][0], Poly::x());
    assert_eq!(k.d1[0][0].mul(&k.d0[0][0]), f.w());
}

#[test]
fn k0_ranks() {
    let k = build_basic_object(&Family::loop_(5, 3), 2, ObjectId::K0(4, 2)).unwrap();
    assert_eq!(k.rank, 3);
    assert_eq!(det(&k.d0), Family::loop_(5, 3).w());
    let k = build_basic_object(&Family::bp(4, 4), 2, ObjectId::K0(2, 3)).unwrap();
    assert_eq!(k.rank, 2);
    assert!(build_basic_object(&Family::loop_(5, 3), 2, ObjectId::K0(2, 2)).is_err());
    assert!(build_basic_object(&Family::loop_(5, 3), 2, ObjectId::Kx(2)).is_err());
}

#[test]
fn k0_degrees_of_loop_5_3() {
    let f = Family::loop_(5, 3);
    let g = f.grading_group(2);
    let k = build_basic_object(&f, 2, ObjectId::K0(4, 2)).unwrap();
    let c = g.deg(5, 1);
    let expect_even = vec![c.scale(2) - g.deg(2, 0), c.scale(2) - g.deg(2, 0), g.deg(5, 3)];
    assert_eq!(k.even_gen_degrees, expect_even.iter().map(|d| g.canon(*d)).collect::<Vec<_>>());
}

#[test]
fn corrupted_entry_fails() {
    let f = Family::loop_(5, 3);
    let mut k = build_basic_object(&f, 2, ObjectId::K0(4, 2)).unwrap();
    k.d0[0][0] = k.d0[0][0].scale(&CycScalar::from_int(2));
    let rep = verify_mf(&k);
    assert!(!rep.product_d0_d1);
    assert!(!rep.passed());
}

#[test]
fn shifts_and_suspensions() {
    let f = Family::chain(4, 3);
    let k = build_basic_object(&f, 2, ObjectId::K0(2, 2)).unwrap();
    assert_eq!(shift(&k, k.group.zero()), k);
    let twice = suspend(&suspend(&k));
    let s = shift(&k, k.c);
    assert_eq!(twice.even_gen_degrees, s.even_gen_degrees);
    assert_eq!(twice.odd_gen_degrees, s.odd_gen_degrees);
    assert_eq!((twice.d0.clone(), twice.d1.clone()), (s.d0, s.d1));
    assert!(verify_mf(&suspend(&k)).passed());
}

#[test]
fn kx_shift_relation() {
    let f = Family::loop_(7, 4);
    let g = f.grading_group(3);
    let kx = build_basic_object(&f, 3, ObjectId::Kx(5)).unwrap();
    assert_eq!(kx.even_gen_degrees, vec![g.canon(g.x().scale(-1))]);
    assert_eq!(kx.odd_gen_degrees, vec![g.canon(g.x().scale(-2))]);
}

#[test]
fn cones() {
    let f = Family::loop_(3, 3);
    let k = build_basic_object(&f, 2, ObjectId::K0(2, 1)).unwrap();
    let id = MFMorphism::identity(&k);
    assert!(id.is_closed());
    let c = cone(&id).unwrap();
    let rep = verify_mf(&c);
    assert!(rep.product_d0_d1 && rep.product_d1_d0 && rep.homogeneous, "{:?}", rep.failures);
    let kp = build_basic_object(&f, 2, ObjectId::Kw(1)).unwrap();
    let z = cone(&MFMorphism::zero(&k, &kp, 0)).unwrap();
    let k1 = suspend(&k);
    assert_eq!(z.even_gen_degrees[..k.rank], k1.even_gen_degrees[..]);
    assert_eq!(z.even_gen_degrees[k.rank..], kp.even_gen_degrees[..]);
    assert_eq!(z.d1[0][0], k1.d1[0][0]);
    let mut bad = MFMorphism::identity(&k);
    bad.f_even[0][0] = Poly::x();
    assert_eq!(cone(&bad), Err(MirrorError::NotClosed));
}

#[test]
fn coker_of_kx() {
    let f = Family::loop_(3, 3);
    let k = build_basic_object(&f, 1, ObjectId::Kx(2)).unwrap();
    let m = coker_module(&k);
    assert_eq!(m.shifts, vec![k.group.zero()]);
    assert_eq!(m.relations, vec![vec![Poly::x()]]);
    // w ≡ 0 mod x, so R/(x) = C[y] has one monomial in each degree d·y⃗
    for d in 0..6 {
        assert_eq!(m.graded_piece_dim(k.group.deg(0, d)), 1);
        assert_eq!(m.graded_piece_dim(k.group.deg(0, -d - 1)), 0);
    }
}

#[test]
fn chain_ky_shift() {
    let f = Family::chain(4, 3);
    let k = build_basic_object(&f, 2, ObjectId::Ky(2)).unwrap();
    assert_eq!(k.even_gen_degrees, vec![k.group.zero()]);
    let m = coker_module(&k);
    assert_eq!(m.relations, vec![vec![Poly::y()]]);
}

#[test]
fn json_shape() {
    let k = build_basic_object(&Family::loop_(3, 3), 1, ObjectId::K0(2, 1)).unwrap();
    let s = serde_json::to_string(&k).unwrap();
    let back: MatrixFactorisation = serde_json::from_str(&s).unwrap();
    assert_eq!(back, k);
}

#[test]
fn object_names_parse() {
    for id in [ObjectId::Kx(3), ObjectId::Ky(1), ObjectId::Kw(2), ObjectId::K0(4, 2)] {
        assert_eq!(id.to_string().parse::<ObjectId>().unwrap(), id);
    }
    assert!("K1(2)".parse::<ObjectId>().is_err());
}
