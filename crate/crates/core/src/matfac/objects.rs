//! Constructors of the basic objects Kx(i), Ky(j), Kw(r) and K0(i,j).

use crate::error::{MirrorError, Result};
use crate::galg::{GradedModulePresentation, LDegree, Poly};
use crate::mirror_core::{Family, FamilyKind};

use super::matrix::{self, PolyMatrix};
use super::{shift, MatrixFactorisation, ObjectId};

fn mono(a: u32, b: u32) -> Poly {
    Poly::monomial(a, b)
}

fn out_of_range(family: &Family, ell: u32, id: ObjectId) -> MirrorError {
    MirrorError::IndexOutOfRange(format!("{id} for {family} with ℓ={ell}"))
}

/// Ordered list of the basic objects making up the tilting collection.
pub fn basic_objects(family: &Family, ell: u32) -> Result<Vec<ObjectId>> {
    family.check_index(ell)?;
    let (p, q) = (family.p, family.q);
    let (pp, qq) = family.block_sizes(ell);
    let mut v = Vec::new();
    match family.kind {
        FamilyKind::Loop => {
            for i in p - pp..p {
                for j in 1..q {
                    v.push(ObjectId::K0(i, j));
                }
            }
            v.extend((p - pp..p).map(ObjectId::Kx));
            v.extend((q - qq..q).map(ObjectId::Ky));
        }
        FamilyKind::Chain => {
            for i in 1..p {
                for j in q - qq..q {
                    v.push(ObjectId::K0(i, j));
                }
            }
            v.extend((q - qq..q).map(ObjectId::Ky));
        }
        FamilyKind::Bp => {
            if ell == 1 {
                return Err(MirrorError::UnsupportedCase {
                    reason: "the Brieskorn–Pham collection needs ℓ ≥ 2".into(),
                    reduction: None,
                });
            }
            for i in (ell - 1) * pp..p {
                let jmin = if i == (ell - 1) * pp { qq + 1 } else { 1 };
                for j in jmin..q {
                    v.push(ObjectId::K0(i, j));
                }
            }
        }
    }
    v.extend((1..=ell).map(ObjectId::Kw));
    debug_assert_eq!(v.len() as u64, family.object_count(ell));
    Ok(v)
}

fn base(family: &Family, ell: u32, label: String, even: Vec<LDegree>, odd: Vec<LDegree>, d0: PolyMatrix, d1: PolyMatrix) -> MatrixFactorisation {
    let ring = family.ring(ell);
    let g = ring.group;
    MatrixFactorisation {
        label,
        group: g,
        c: ring.c,
        w: ring.w,
        rank: even.len(),
        even_gen_degrees: even.into_iter().map(|d| g.canon(d)).collect(),
        odd_gen_degrees: odd.into_iter().map(|d| g.canon(d)).collect(),
        d0,
        d1,
    }
}

/// Rank one factorisation with d1 = f, d0 = w/f and K^0 = S.
fn rank_one(family: &Family, ell: u32, label: String, f: Poly, cofactor: Poly) -> MatrixFactorisation {
    let g = family.grading_group(ell);
    let deg = f.degree(&g).expect("homogeneous factor");
    base(family, ell, label, vec![g.zero()], vec![-deg], vec![vec![cofactor]], vec![vec![f]])
}

/// The ladder matrix shared by all rank k+2 objects.
fn ladder(k: usize, a: u32, b: Poly, pp: u32, qq: u32, c: u32, e: Poly) -> PolyMatrix {
    let n = k + 2;
    let mut m = matrix::zeros(n, n);
    m[0][0] = mono(0, a);
    m[0][n - 1] = b;
    for t in 1..=k {
        m[t][t - 1] = mono(pp, 0).neg();
        m[t][t] = mono(0, qq);
    }
    m[n - 1][n - 2] = mono(c, 0).neg();
    m[n - 1][n - 1] = e;
    m
}

pub fn build_basic_object(family: &Family, ell: u32, id: ObjectId) -> Result<MatrixFactorisation> {
    family.check_index(ell)?;
    if !basic_objects(family, ell)?.contains(&id) {
        return Err(out_of_range(family, ell, id));
    }
    let g = family.grading_group(ell);
    let (p, q) = (family.p, family.q);
    let (xv, yv) = (g.x(), g.y());
    let w = family.w();
    let label = id.to_string();
    Ok(match id {
        ObjectId::Kx(i) => {
            let k = rank_one(family, ell, "Kx".into(), Poly::x(), w.div_monomial((1, 0)).unwrap());
            MatrixFactorisation { label, ..shift(&k, xv.scale(i as i64 + 1 - p as i64)) }
        }
        ObjectId::Ky(j) => {
            let k = rank_one(family, ell, "Ky".into(), Poly::y(), w.div_monomial((0, 1)).unwrap());
            MatrixFactorisation { label, ..shift(&k, yv.scale(j as i64 + 1 - q as i64)) }
        }
        ObjectId::Kw(r) => {
            let factors = family.w_factors(ell);
            let cof = factors
                .iter()
                .enumerate()
                .filter(|(s, _)| *s + 1 != r as usize)
                .fold(family.w_cofactor(), |acc, (_, f)| acc.mul(f));
            rank_one(family, ell, label, factors[r as usize - 1].clone(), cof)
        }
        ObjectId::K0(i, j) => {
            let (d0, even, odd) = k0_data(family, ell, i, j);
            let d1 = matrix::adjugate(&d0);
            base(family, ell, label, even, odd, d0, d1)
        }
    })
}

/// d0 and the generator degrees (even, odd) of K0(i,j).
fn k0_data(family: &Family, ell: u32, i: u32, j: u32) -> (PolyMatrix, Vec<LDegree>, Vec<LDegree>) {
    let ring = family.ring(ell);
    let g = ring.group;
    let (p, q) = (family.p, family.q);
    let (pp, qq) = family.block_sizes(ell);
    let c = ring.c;
    let xd = |a: i64| g.x().scale(a);
    let yd = |b: i64| g.y().scale(b);
    let (i64_, j64) = (i as i64, j as i64);
    let (pp64, qq64) = (pp as i64, qq as i64);
    match family.kind {
        FamilyKind::Loop => {
            let k = ((j - 1) * ell / (q - 1)) as usize;
            let k32 = k as u32;
            let d0 = ladder(
                k,
                j - k32 * qq,
                mono(p - i + pp * (ell - 1 - k32), 1),
                pp,
                qq,
                i - (ell - 1) * pp,
                mono(1, q - j),
            );
            let mut even = vec![c.scale(2) - xd(pp64); k + 1];
            even.push(xd(i64_ + 1) + yd(j64 + 1));
            let mut odd = vec![c - xd((k as i64 + 1) * pp64) + yd(j64)];
            odd.extend(vec![c; k]);
            odd.push(xd(i64_ + 1) + yd(1));
            (d0, even, odd)
        }
        FamilyKind::Chain => {
            let k = ((i - 1) * ell / p) as usize;
            let k32 = k as u32;
            let d0 = ladder(
                k,
                j - (ell - 1) * qq,
                mono(p - i, 1),
                pp,
                qq,
                i - k32 * pp,
                mono(0, q - j + (ell - k32 - 1) * qq),
            );
            let mut even = vec![c.scale(2) - yd(qq64); k + 1];
            even.push(xd(i64_) + yd(j64 + 1));
            let mut odd = vec![yd(j64 + 1)];
            odd.extend(vec![c; k]);
            odd.push(c + xd(i64_) - yd((k as i64 + 1) * qq64));
            (d0, even, odd)
        }
        FamilyKind::Bp => {
            let k = ((j - 1) * ell / q) as usize;
            let k32 = k as u32;
            if i > (ell - 1) * pp {
                let d0 = ladder(
                    k,
                    j - k32 * qq,
                    mono(p - i + pp * (ell - 1 - k32), 0),
                    pp,
                    qq,
                    i - (ell - 1) * pp,
                    mono(0, q - j),
                );
                let mut even = vec![c.scale(2) - xd(pp64); k + 1];
                even.push(xd(i64_) + yd(j64));
                let mut odd = vec![c - xd((k as i64 + 1) * pp64) + yd(j64)];
                odd.extend(vec![c; k]);
                odd.push(xd(i64_));
                (d0, even, odd)
            } else {
                // i = (ℓ−1)P: the unit entry of the ladder is eliminated, leaving rank k+1
                let n = k + 1;
                let mut d0 = matrix::zeros(n, n);
                d0[0][0] = mono(0, j - k32 * qq);
                d0[0][k] = mono(pp * (ell - k32), 0);
                for t in 1..k {
                    d0[t][t - 1] = mono(pp, 0).neg();
                    d0[t][t] = mono(0, qq);
                }
                d0[k][k - 1] = mono(pp, 0).neg();
                d0[k][k] = mono(0, q - j + qq);
                let mut even = vec![c.scale(2) - xd(pp64); k];
                even.push(xd(i64_) + yd(j64));
                let mut odd = vec![even[0] - c + yd(j64 - k as i64 * qq64)];
                odd.extend(vec![c; k]);
                (d0, even, odd)
            }
        }
    }
}

/// The cyclic module R(l)/I whose stabilisation is the object.
pub fn origin_module(family: &Family, ell: u32, id: ObjectId) -> Result<GradedModulePresentation> {
    let k = build_basic_object(family, ell, id)?;
    let g = k.group;
    let w = Some(family.w());
    let (pp, qq) = family.block_sizes(ell);
    Ok(match id {
        ObjectId::Kx(_) | ObjectId::Ky(_) | ObjectId::Kw(_) => {
            GradedModulePresentation::cyclic(g, k.even_gen_degrees[0], vec![k.d1[0][0].clone()], w)
        }
        ObjectId::K0(i, j) => {
            let last = *k.even_gen_degrees.last().unwrap();
            let gens = k0_ideal(family, ell, i, j, pp, qq);
            GradedModulePresentation::cyclic(g, last, gens, w)
        }
    })
}

fn k0_ideal(family: &Family, ell: u32, i: u32, j: u32, pp: u32, qq: u32) -> Vec<Poly> {
    let (p, q) = (family.p, family.q);
    let mut gens = Vec::new();
    let generic_bp = family.kind == FamilyKind::Bp && i > (ell - 1) * pp;
    match family.kind {
        FamilyKind::Loop | FamilyKind::Bp if family.kind == FamilyKind::Loop || generic_bp => {
            let den = if generic_bp { q } else { q - 1 };
            let k = (j - 1) * ell / den;
            gens.push(mono(i - (ell - 1 - k) * pp, 0));
            for t in (1..=k).rev() {
                gens.push(mono(i - (ell - t) * pp, j - t * qq));
            }
            gens.push(mono(0, j));
        }
        FamilyKind::Bp => {
            let k = (j - 1) * ell / q;
            gens.push(mono(k * pp, 0));
            for u in (0..k).rev() {
                gens.push(mono(u * pp, j - (u + 1) * qq));
            }
        }
        FamilyKind::Chain => {
            let k = (i - 1) * ell / p;
            gens.push(mono(i, 0));
            for t in 1..=k {
                gens.push(mono(i - t * pp, j - (ell - t) * qq));
            }
            gens.push(mono(0, j - (ell - k - 1) * qq));
        }
        FamilyKind::Loop => unreachable!("handled by the first arm"),
    }
    gens
}
