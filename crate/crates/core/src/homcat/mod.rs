//! Morphism spaces between matrix factorisations.
//!
//! Route A is the cohomology of the dg Hom complex; route B is Ext of the
//! cokernel modules computed from the periodic resolution. Both are exact.

pub mod arrows;
pub mod route_a;
pub mod route_b;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{MirrorError, Result};
use crate::matfac::{basic_objects, build_basic_object, shift, MFMorphism, MatrixFactorisation, ObjectId};
use crate::mirror_core::Family;

pub use arrows::{arrow_representative, Arrow, ArrowLabel, ArrowRep, Normalisation};
pub use route_a::{HomBasis, HomComplex};

/// Degrees k ∈ [−5, 5].
pub const WINDOW: (i64, i64) = (-5, 5);

pub fn route_a_dim(k: &MatrixFactorisation, kp: &MatrixFactorisation, n: i64) -> usize {
    route_a::route_a_dim(k, kp, n)
}

pub fn route_b_dim(k: &MatrixFactorisation, kp: &MatrixFactorisation, n: i64) -> usize {
    route_b::route_b_dim(k, kp, n)
}

/// dim Hom^n(K, K') in the stable category, computed by both routes.
pub fn hom_dim(k: &MatrixFactorisation, kp: &MatrixFactorisation, n: i64) -> Result<usize> {
    let a = route_a_dim(k, kp, n);
    let b = route_b_dim(k, kp, n);
    if a != b {
        return Err(MirrorError::RouteMismatch(format!("Hom^{n}({}, {}): route A {a}, route B {b}", k.label, kp.label)));
    }
    Ok(a)
}

/// dim Hom^n for n = lo ..= hi by route A, sharing the differentials.
pub fn hom_dims(k: &MatrixFactorisation, kp: &MatrixFactorisation, lo: i64, hi: i64) -> Vec<usize> {
    let cx = HomComplex::new(k, kp, lo, hi);
    (lo..=hi).map(|n| cx.cohomology_dim(n)).collect()
}

/// g∘f.
pub fn compose(f: &MFMorphism, g: &MFMorphism) -> Result<MFMorphism> {
    if f.target != g.source {
        return Err(MirrorError::NotComposable(format!("{} ≠ {}", f.target.label, g.source.label)));
    }
    Ok(route_a::compose_matrices(f, g))
}

/// Whether a closed morphism is null-homotopic.
pub fn is_coboundary(h: &MFMorphism) -> Result<bool> {
    if !h.is_closed() {
        return Err(MirrorError::NotClosed);
    }
    let cx = HomComplex::new(&h.source, &h.target, h.degree, h.degree);
    let v = cx.basis(h.degree).vector(h);
    Ok(cx.is_coboundary(h.degree, &v))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SerreReport {
    pub source: String,
    pub target: String,
    /// (k, dim Hom^k(M,N), dim Hom^{-k}(N, M(−α)))
    pub rows: Vec<(i64, usize, usize)>,
    pub holds: bool,
}

/// dim Hom^k(M, N) = dim Hom^{−k}(N, M(−α)) for k in the window.
pub fn serre_check(m: &MatrixFactorisation, n: &MatrixFactorisation) -> SerreReport {
    let (lo, hi) = WINDOW;
    let alpha = m.group.x() + m.group.y() - m.c;
    let left = hom_dims(m, n, lo, hi);
    let right = hom_dims(n, &shift(m, -alpha), -hi, -lo);
    let rows: Vec<(i64, usize, usize)> =
        (lo..=hi).map(|k| (k, left[(k - lo) as usize], right[(-k - (-hi)) as usize])).collect();
    let holds = rows.iter().all(|(_, a, b)| a == b);
    SerreReport { source: m.label.clone(), target: n.label.clone(), rows, holds }
}

/// Cohomological shift of a basic object inside the collection.
pub fn collection_shift(id: ObjectId) -> i64 {
    match id {
        ObjectId::K0(..) => 0,
        _ => 3,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomTable {
    pub family: Family,
    pub ell: u32,
    pub objects: Vec<ObjectId>,
    pub shifts: Vec<i64>,
    pub window: (i64, i64),
    /// (source index, target index, degree) → dimension, nonzero entries only
    pub dims: BTreeMap<(usize, usize, i64), usize>,
    pub arrows: Vec<ArrowRep>,
    pub relations_verified: Vec<String>,
}

impl HomTable {
    pub fn dim(&self, s: usize, t: usize, k: i64) -> usize {
        self.dims.get(&(s, t, k)).copied().unwrap_or(0)
    }

    /// Whether every nonzero entry sits in degree 0.
    pub fn concentrated_in_degree_zero(&self) -> bool {
        self.dims.keys().all(|(_, _, k)| *k == 0)
    }

    pub fn degree_zero_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.objects.len();
        (0..n).map(|s| (0..n).map(|t| self.dim(s, t, 0)).collect()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let dims: serde_json::Map<String, serde_json::Value> = self
            .dims
            .iter()
            .map(|((s, t, k), d)| (format!("({s},{t},{k})"), serde_json::Value::from(*d)))
            .collect();
        serde_json::json!({
            "family": self.family.to_string(),
            "ell": self.ell,
            "objects": self.objects.iter().zip(&self.shifts).map(|(o, s)| if *s == 0 { o.to_string() } else { format!("{o}[{s}]") }).collect::<Vec<_>>(),
            "window": [self.window.0, self.window.1],
            "dims": dims,
            "arrows": self.arrows.iter().map(|a| serde_json::json!({
                "source": a.arrow.source.to_string(),
                "target": a.arrow.target.to_string(),
                "label": a.arrow.label.name(),
                "normalisation": format!("{:?}", a.normalisation),
            })).collect::<Vec<_>>(),
            "relations_verified": self.relations_verified,
        })
    }
}

/// Degree-window dimensions between the shifted basic objects.
pub fn dims_table(family: &Family, ell: u32, window: (i64, i64)) -> Result<(Vec<ObjectId>, BTreeMap<(usize, usize, i64), usize>)> {
    let objects = basic_objects(family, ell)?;
    let mfs: Vec<MatrixFactorisation> =
        objects.iter().map(|id| build_basic_object(family, ell, *id)).collect::<Result<_>>()?;
    let n = objects.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).collect();
    let (lo, hi) = window;
    let results: Vec<((usize, usize), Vec<usize>)> = pairs
        .par_iter()
        .map(|&(s, t)| {
            // Hom^k(A[a], B[b]) = Hom^{k+b−a}(A, B)
            let off = collection_shift(objects[t]) - collection_shift(objects[s]);
            ((s, t), hom_dims(&mfs[s], &mfs[t], lo + off, hi + off))
        })
        .collect();
    let mut dims = BTreeMap::new();
    for ((s, t), v) in results {
        for (i, d) in v.into_iter().enumerate() {
            if d > 0 {
                dims.insert((s, t, lo + i as i64), d);
            }
        }
    }
    Ok((objects, dims))
}

/// All pairwise Hom dimensions of the collection together with arrow representatives.
pub fn assemble_endomorphism_table(family: &Family, ell: u32) -> Result<HomTable> {
    let (objects, dims) = dims_table(family, ell, WINDOW)?;
    let quiver = crate::quiverlab::expected_quiver(family, ell)?;
    let arrows = quiver
        .arrows
        .par_iter()
        .map(|a| arrow_representative(family, ell, a))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomTable {
        family: *family,
        ell,
        shifts: objects.iter().map(|o| collection_shift(*o)).collect(),
        objects,
        window: WINDOW,
        dims,
        arrows,
        relations_verified: Vec::new(),
    })
}

#[cfg(test)]
mod tests;
