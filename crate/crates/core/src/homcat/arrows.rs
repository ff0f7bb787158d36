//! Cocycle representatives of the quiver arrows.
//!
//! Arrows between K0 objects are lifts of multiplication by a monomial on the
//! cyclic modules R(l)/I: the last row of f^0 is (0, …, 0, m) modulo I' + (w).
//! Arrows into Kx, Ky, Kw live in degree 3 and are pinned by their cochain
//! in the Ext complex, using explicit column vectors for the rank one Ext groups.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{MirrorError, Result};
use crate::galg::linalg::{solve, svec_from_map};
use crate::galg::{CycScalar, Echelon, Monomial, Poly, SVec};
use crate::matfac::{build_basic_object, origin_module, MFMorphism, MatrixFactorisation, ObjectId};
use crate::mirror_core::Family;

use super::route_a::{differential_columns, HomBasis, HomComplex};
use super::route_b::{cochain_space, route_b_vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArrowLabel {
    X,
    Y,
    XWrap,
    YWrap,
    A,
    B,
    C(u32),
}

impl ArrowLabel {
    pub fn is_x_type(&self) -> bool {
        matches!(self, ArrowLabel::X | ArrowLabel::XWrap)
    }
    pub fn is_y_type(&self) -> bool {
        matches!(self, ArrowLabel::Y | ArrowLabel::YWrap)
    }
    pub fn name(&self) -> String {
        match self {
            ArrowLabel::X | ArrowLabel::XWrap => "x".into(),
            ArrowLabel::Y | ArrowLabel::YWrap => "y".into(),
            ArrowLabel::A => "a".into(),
            ArrowLabel::B => "b".into(),
            ArrowLabel::C(r) => format!("c{r}"),
        }
    }
    /// Cohomological degree between the unshifted objects.
    pub fn degree(&self) -> i64 {
        match self {
            ArrowLabel::A | ArrowLabel::B | ArrowLabel::C(_) => 3,
            _ => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub source: ObjectId,
    pub target: ObjectId,
    pub label: ArrowLabel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Normalisation {
    /// lift of a monomial map of cyclic modules
    Monomial,
    /// an explicit column vector in the Ext complex
    ColumnVector,
    /// an arbitrary generator of a one-dimensional cohomology group
    Generic,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowRep {
    pub arrow: Arrow,
    pub normalisation: Normalisation,
    pub morphism: MFMorphism,
}

/// Find a cocycle f of degree n with N(f) ≡ rhs, where N is given by its
/// values on the basis and both sides are already reduced.
fn normalised_cocycle(k: &MatrixFactorisation, kp: &MatrixFactorisation, n: i64, norm: &[SVec], rhs: &SVec) -> Option<SVec> {
    let cur = HomBasis::new(k, kp, n);
    let next = HomBasis::new(k, kp, n + 1);
    let d = differential_columns(k, kp, &cur, &next);
    let off = next.dim();
    let cols: Vec<SVec> = d
        .iter()
        .zip(norm)
        .map(|(dc, nc)| dc.iter().cloned().chain(nc.iter().map(|(i, c)| (i + off, c.clone()))).collect())
        .collect();
    let rhs: SVec = rhs.iter().map(|(i, c)| (i + off, c.clone())).collect();
    solve(&cols, &rhs).map(|z| svec_from_map(z.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()))
}

fn monomial_of(m: Monomial) -> Poly {
    Poly::monomial(m.0, m.1)
}

/// Degree 0 lift of multiplication by m between K0 objects.
pub fn monomial_lift(family: &Family, ell: u32, source: ObjectId, target: ObjectId, m: Monomial) -> Result<MFMorphism> {
    let k = build_basic_object(family, ell, source)?;
    let kp = build_basic_object(family, ell, target)?;
    let g = k.group;
    let ideal = origin_module(family, ell, target)?;
    let last_t = kp.rank - 1;
    let last_s = k.rank - 1;
    // normalisation slots: (s, monomial) for the last row of f^0, reduced modulo I' + (w)
    let mut slot_index = BTreeMap::new();
    let mut ech = Echelon::new();
    let mut gens: Vec<Poly> = ideal.relations.iter().map(|r| r[0].clone()).collect();
    gens.push(family.w());
    for (s, src) in k.even_gen_degrees.iter().enumerate() {
        let deg = kp.even_gen_degrees[last_t] - *src;
        for mono in g.monomials_of_degree(deg) {
            let i = slot_index.len();
            slot_index.insert((s, mono), i);
        }
        for gen in &gens {
            let gd = gen.degree(&g).expect("homogeneous generator");
            for mono in g.monomials_of_degree(deg - gd) {
                let v: BTreeMap<usize, CycScalar> =
                    gen.mul_monomial(mono).terms().map(|(mm, c)| (slot_index[&(s, *mm)], c.clone())).collect();
                ech.insert(svec_from_map(v));
            }
        }
    }
    let basis = HomBasis::new(&k, &kp, 0);
    let norm: Vec<SVec> = basis
        .slots
        .iter()
        .map(|&(comp, r, s, mono)| {
            if comp == 0 && r == last_t {
                ech.reduce(&vec![(slot_index[&(s, mono)], CycScalar::one())])
            } else {
                Vec::new()
            }
        })
        .collect();
    let target_slot = slot_index
        .get(&(last_s, m))
        .ok_or_else(|| MirrorError::NotComposable(format!("{m:?} has the wrong degree for {source} → {target}")))?;
    let rhs = ech.reduce(&vec![(*target_slot, CycScalar::one())]);
    let z = normalised_cocycle(&k, &kp, 0, &norm, &rhs)
        .ok_or_else(|| MirrorError::NotClosed)?;
    Ok(basis.morphism(&k, &kp, &z))
}

/// Degree n cocycle whose Ext cochain is the given component matrix
/// K^{-n} → K'^0 (rows: generators of K'^0).
pub fn cochain_lift(k: &MatrixFactorisation, kp: &MatrixFactorisation, n: i64, comp: &[Vec<Poly>]) -> Option<MFMorphism> {
    let space = cochain_space(k, kp, n);
    let basis = HomBasis::new(k, kp, n);
    let odd = n.rem_euclid(2) == 1;
    let norm: Vec<SVec> = basis
        .slots
        .iter()
        .map(|&(c, r, s, mono)| {
            // the component leaving K^{-n} is f^{-1} for odd n and f^0 for even n
            if (c == 1) == odd {
                let mut m = vec![vec![Poly::zero(); k.rank]; kp.rank];
                m[r][s] = monomial_of(mono);
                space.relations.reduce(&route_b_vector(&space, &m))
            } else {
                Vec::new()
            }
        })
        .collect();
    let rhs = space.relations.reduce(&route_b_vector(&space, comp));
    if rhs.is_empty() {
        return None;
    }
    normalised_cocycle(k, kp, n, &norm, &rhs).map(|z| basis.morphism(k, kp, &z))
}

/// Nonzero classes of H^n(K, K') as morphisms.
pub fn cohomology_generators(k: &MatrixFactorisation, kp: &MatrixFactorisation, n: i64) -> Vec<MFMorphism> {
    let cx = HomComplex::new(k, kp, n, n);
    let basis = cx.basis(n).clone();
    cx.cohomology_basis(n).iter().map(|v| basis.morphism(k, kp, v)).collect()
}

/// The entry monomial of a given degree that is a pure power of x (or y).
fn pure_power(g: &crate::galg::GradingGroup, deg: crate::galg::LDegree, in_x: bool) -> Option<Poly> {
    g.monomials_of_degree(deg)
        .into_iter()
        .find(|m| if in_x { m.1 == 0 } else { m.0 == 0 })
        .map(monomial_of)
}

/// The column vector (y^•, ξ, ξ², …, ξ^{k+1} x^•) with ξ = e^{−πi/ℓ} η^{−r}.
fn c_vector(k: &MatrixFactorisation, kp: &MatrixFactorisation, ell: u32, r: u32) -> Option<Vec<Vec<Poly>>> {
    let g = k.group;
    let src = k.term(-3);
    let e = kp.even_gen_degrees[0];
    let xi = CycScalar::root_of_unity(2 * ell, -1 - 2 * r as i64);
    let n = k.rank;
    let mut row = Vec::new();
    let mut pow = CycScalar::one();
    for (t, a) in src.iter().enumerate() {
        let deg = e - *a;
        let entry = if t == 0 {
            pure_power(&g, deg, false)?
        } else if t == n - 1 {
            pure_power(&g, deg, true)?.scale(&pow)
        } else if g.canon(deg) == g.zero() {
            Poly::constant(pow.clone())
        } else {
            return None;
        };
        row.push(entry);
        pow = &pow * &xi;
    }
    Some(vec![row])
}

/// Representative of an arrow of the expected quiver.
pub fn arrow_representative(family: &Family, ell: u32, arrow: &Arrow) -> Result<ArrowRep> {
    let k = build_basic_object(family, ell, arrow.source)?;
    let kp = build_basic_object(family, ell, arrow.target)?;
    let g = k.group;
    let (normalisation, morphism) = match arrow.label {
        ArrowLabel::X | ArrowLabel::XWrap => {
            (Normalisation::Monomial, monomial_lift(family, ell, arrow.source, arrow.target, (1, 0))?)
        }
        ArrowLabel::Y | ArrowLabel::YWrap => {
            (Normalisation::Monomial, monomial_lift(family, ell, arrow.source, arrow.target, (0, 1))?)
        }
        ArrowLabel::A | ArrowLabel::B => {
            // a single nonzero entry, first for a and last for b
            let src = k.term(-3);
            let t = if arrow.label == ArrowLabel::A { 0 } else { k.rank - 1 };
            let deg = kp.even_gen_degrees[0] - src[t];
            let mono = pure_power(&g, deg, arrow.label == ArrowLabel::A)
                .ok_or_else(|| MirrorError::NotComposable(format!("no {} entry for {:?}", arrow.label.name(), arrow)))?;
            let mut row = vec![Poly::zero(); k.rank];
            row[t] = mono;
            let f = cochain_lift(&k, &kp, 3, &[row]).ok_or(MirrorError::NotClosed)?;
            (Normalisation::ColumnVector, f)
        }
        ArrowLabel::C(r) => {
            let pinned = c_vector(&k, &kp, ell, r).and_then(|v| cochain_lift(&k, &kp, 3, &v));
            match pinned {
                Some(f) => (Normalisation::ColumnVector, f),
                None => {
                    let gens = cohomology_generators(&k, &kp, 3);
                    let f = gens.into_iter().next().ok_or(MirrorError::NotClosed)?;
                    (Normalisation::Generic, f)
                }
            }
        }
    };
    debug_assert!(morphism.is_closed());
    Ok(ArrowRep { arrow: *arrow, normalisation, morphism })
}
