//! L-graded matrix factorisations of the three two-variable families.
//!
//! A factorisation K is stored through its degree 0 and degree −1 terms:
//! K^0 = ⊕ S(even_gen_degrees) and K^{-1} = ⊕ S(odd_gen_degrees), with
//! d1: K^{-1} → K^0 and d0: K^0 → K^1 = K^{-1}(c⃗). A polynomial entry of a
//! map S(a) → S(b) has degree b − a.

pub mod matrix;
mod objects;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{MirrorError, Result};
use crate::galg::{GradedModulePresentation, GradingGroup, LDegree, Poly};
use crate::mirror_core::Family;

pub use matrix::{adjugate, det, PolyMatrix};
pub use objects::{basic_objects, build_basic_object, origin_module};

/// Names of the basic objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ObjectId {
    Kx(u32),
    Ky(u32),
    Kw(u32),
    K0(u32, u32),
}

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectId::Kx(i) => write!(f, "Kx({i})"),
            ObjectId::Ky(j) => write!(f, "Ky({j})"),
            ObjectId::Kw(r) => write!(f, "Kw({r})"),
            ObjectId::K0(i, j) => write!(f, "K0({i},{j})"),
        }
    }
}

impl std::str::FromStr for ObjectId {
    type Err = MirrorError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || MirrorError::Parse(format!("bad object name {s}"));
        let open = s.find('(').ok_or_else(bad)?;
        if !s.ends_with(')') {
            return Err(bad());
        }
        let args: Vec<u32> = s[open + 1..s.len() - 1]
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (&s[..open], args.as_slice()) {
            ("Kx", [i]) => Ok(ObjectId::Kx(*i)),
            ("Ky", [j]) => Ok(ObjectId::Ky(*j)),
            ("Kw", [r]) => Ok(ObjectId::Kw(*r)),
            ("K0", [i, j]) => Ok(ObjectId::K0(*i, *j)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFactorisation {
    pub label: String,
    pub group: GradingGroup,
    pub c: LDegree,
    pub w: Poly,
    pub rank: usize,
    pub even_gen_degrees: Vec<LDegree>,
    pub odd_gen_degrees: Vec<LDegree>,
    /// K^0 → K^{-1}(c⃗): rows indexed by odd generators, columns by even ones
    pub d0: PolyMatrix,
    /// K^{-1} → K^0: rows indexed by even generators, columns by odd ones
    pub d1: PolyMatrix,
}

impl MatrixFactorisation {
    /// Generator degrees of the term in cohomological degree m.
    pub fn term(&self, m: i64) -> Vec<LDegree> {
        if m.rem_euclid(2) == 0 {
            let s = self.c.scale(m / 2);
            self.even_gen_degrees.iter().map(|d| *d + s).collect()
        } else {
            let s = self.c.scale((m + 1).div_euclid(2));
            self.odd_gen_degrees.iter().map(|d| *d + s).collect()
        }
    }

    /// Differential leaving the term in cohomological degree m.
    pub fn differential(&self, m: i64) -> &PolyMatrix {
        if m.rem_euclid(2) == 0 {
            &self.d0
        } else {
            &self.d1
        }
    }

    fn canon(&self, d: LDegree) -> LDegree {
        self.group.canon(d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MFMorphism {
    pub source: MatrixFactorisation,
    pub target: MatrixFactorisation,
    pub degree: i64,
    /// K^0 → K'^n
    pub f_even: PolyMatrix,
    /// K^{-1} → K'^{n-1}
    pub f_odd: PolyMatrix,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct VerifyReport {
    pub label: String,
    pub product_d0_d1: bool,
    pub product_d1_d0: bool,
    pub homogeneous: bool,
    pub two_periodic: bool,
    pub det_is_w: Option<bool>,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.product_d0_d1 && self.product_d1_d0 && self.homogeneous && self.two_periodic && self.det_is_w != Some(false)
    }
}

/// Check every entry of a map ⊕S(src) → ⊕S(tgt) for the forced degree.
pub fn map_is_homogeneous(group: &GradingGroup, m: &PolyMatrix, src: &[LDegree], tgt: &[LDegree]) -> bool {
    m.len() == tgt.len()
        && m.iter().enumerate().all(|(r, row)| {
            row.len() == src.len()
                && row.iter().enumerate().all(|(s, e)| e.is_homogeneous_of(group, group.canon(tgt[r] - src[s])))
        })
}

/// Check the factorisation identities, homogeneity and graded two-periodicity.
pub fn verify_mf(k: &MatrixFactorisation) -> VerifyReport {
    let mut rep = VerifyReport { label: k.label.clone(), ..Default::default() };
    let n = k.rank;
    let wi = matrix::scalar_identity(n, &k.w);
    let shapes = k.d0.len() == n && k.d1.len() == n && k.even_gen_degrees.len() == n && k.odd_gen_degrees.len() == n;
    if !shapes {
        rep.failures.push("shape".into());
        return rep;
    }
    rep.product_d0_d1 = matrix::mul(&k.d0, &k.d1) == wi;
    rep.product_d1_d0 = matrix::mul(&k.d1, &k.d0) == wi;
    if !rep.product_d0_d1 {
        rep.failures.push("d0·d1 ≠ w·Id".into());
    }
    if !rep.product_d1_d0 {
        rep.failures.push("d1·d0 ≠ w·Id".into());
    }
    rep.homogeneous = map_is_homogeneous(&k.group, &k.d1, &k.term(-1), &k.term(0))
        && map_is_homogeneous(&k.group, &k.d0, &k.term(0), &k.term(1))
        && k.w.is_homogeneous_of(&k.group, k.c);
    if !rep.homogeneous {
        rep.failures.push("inhomogeneous entry".into());
    }
    let twice = suspend(&suspend(k));
    let shifted = shift(k, k.c);
    rep.two_periodic = same_structure(&twice, &shifted)
        && k.term(2).iter().zip(&k.even_gen_degrees).all(|(a, b)| k.canon(*a) == k.canon(*b + k.c));
    if !rep.two_periodic {
        rep.failures.push("two-periodicity".into());
    }
    if matches!(k.label.parse::<ObjectId>(), Ok(ObjectId::K0(..))) {
        let ok = det(&k.d0) == k.w && k.d1 == adjugate(&k.d0);
        rep.det_is_w = Some(ok);
        if !ok {
            rep.failures.push("det(d0) ≠ w or d1 ≠ Adj(d0)".into());
        }
    }
    rep
}

fn same_structure(a: &MatrixFactorisation, b: &MatrixFactorisation) -> bool {
    let canon = |v: &[LDegree]| v.iter().map(|d| a.group.canon(*d)).collect::<Vec<_>>();
    canon(&a.even_gen_degrees) == canon(&b.even_gen_degrees)
        && canon(&a.odd_gen_degrees) == canon(&b.odd_gen_degrees)
        && a.d0 == b.d0
        && a.d1 == b.d1
}

/// K(l): every generator degree moves by l.
pub fn shift(k: &MatrixFactorisation, l: LDegree) -> MatrixFactorisation {
    let mv = |v: &[LDegree]| v.iter().map(|d| k.group.canon(*d + l)).collect();
    MatrixFactorisation {
        label: if l == k.group.zero() { k.label.clone() } else { format!("{}({})", k.label, l) },
        even_gen_degrees: mv(&k.even_gen_degrees),
        odd_gen_degrees: mv(&k.odd_gen_degrees),
        ..k.clone()
    }
}

/// K[1]: halves swapped, differentials negated.
pub fn suspend(k: &MatrixFactorisation) -> MatrixFactorisation {
    MatrixFactorisation {
        label: format!("{}[1]", k.label),
        even_gen_degrees: k.odd_gen_degrees.iter().map(|d| k.group.canon(*d + k.c)).collect(),
        odd_gen_degrees: k.even_gen_degrees.clone(),
        d0: matrix::neg(&k.d1),
        d1: matrix::neg(&k.d0),
        ..k.clone()
    }
}

pub fn suspend_n(k: &MatrixFactorisation, n: u32) -> MatrixFactorisation {
    (0..n).fold(k.clone(), |acc, _| suspend(&acc))
}

impl MFMorphism {
    /// The two components of the dg differential; both vanish iff f is closed.
    pub fn differential(&self) -> (PolyMatrix, PolyMatrix) {
        let n = self.degree;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let t = &self.target;
        let s = &self.source;
        let a0 = matrix::mul(t.differential(n), &self.f_even);
        let b0 = matrix::mul(&self.f_odd, &s.d0);
        let a1 = matrix::mul(t.differential(n - 1), &self.f_odd);
        let b1 = matrix::mul(&self.f_even, &s.d1);
        if sign == 1 {
            (matrix::add(&a0, &matrix::neg(&b0)), matrix::add(&a1, &matrix::neg(&b1)))
        } else {
            (matrix::add(&a0, &b0), matrix::add(&a1, &b1))
        }
    }

    pub fn is_closed(&self) -> bool {
        let (a, b) = self.differential();
        matrix::is_zero(&a) && matrix::is_zero(&b)
    }

    pub fn is_homogeneous(&self) -> bool {
        let g = &self.source.group;
        map_is_homogeneous(g, &self.f_even, &self.source.term(0), &self.target.term(self.degree))
            && map_is_homogeneous(g, &self.f_odd, &self.source.term(-1), &self.target.term(self.degree - 1))
    }

    pub fn identity(k: &MatrixFactorisation) -> MFMorphism {
        let id = matrix::scalar_identity(k.rank, &Poly::one());
        MFMorphism { source: k.clone(), target: k.clone(), degree: 0, f_even: id.clone(), f_odd: id }
    }

    pub fn zero(source: &MatrixFactorisation, target: &MatrixFactorisation, degree: i64) -> MFMorphism {
        MFMorphism {
            source: source.clone(),
            target: target.clone(),
            degree,
            f_even: matrix::zeros(target.rank, source.rank),
            f_odd: matrix::zeros(target.rank, source.rank),
        }
    }
}

/// Mapping cone of a closed degree 0 morphism f: K → K'.
pub fn cone(f: &MFMorphism) -> Result<MatrixFactorisation> {
    if f.degree != 0 || !f.is_closed() {
        return Err(MirrorError::NotClosed);
    }
    let (k, kp) = (&f.source, &f.target);
    let z = |r: usize, c: usize| matrix::zeros(r, c);
    let mut even: Vec<LDegree> = k.odd_gen_degrees.iter().map(|d| k.group.canon(*d + k.c)).collect();
    even.extend(kp.even_gen_degrees.iter().cloned());
    let mut odd = k.even_gen_degrees.clone();
    odd.extend(kp.odd_gen_degrees.iter().cloned());
    let d1 = matrix::block(&matrix::neg(&k.d0), &z(k.rank, kp.rank), &f.f_even, &kp.d1);
    let d0 = matrix::block(&matrix::neg(&k.d1), &z(k.rank, kp.rank), &f.f_odd, &kp.d0);
    Ok(MatrixFactorisation {
        label: format!("Cone({}→{})", k.label, kp.label),
        group: k.group,
        c: k.c,
        w: k.w.clone(),
        rank: k.rank + kp.rank,
        even_gen_degrees: even,
        odd_gen_degrees: odd,
        d0,
        d1,
    })
}

/// coker(d1) as a graded R-module generated in the degrees of K^0.
pub fn coker_module(k: &MatrixFactorisation) -> GradedModulePresentation {
    GradedModulePresentation {
        group: k.group,
        shifts: k.even_gen_degrees.clone(),
        relations: (0..k.rank).map(|s| (0..k.rank).map(|r| k.d1[r][s].clone()).collect()).collect(),
        w: Some(k.w.clone()),
    }
}

/// Family, index and object bundled together.
#[derive(Clone, Debug)]
pub struct BasicObject {
    pub family: Family,
    pub ell: u32,
    pub id: ObjectId,
    pub mf: MatrixFactorisation,
}

#[cfg(test)]
mod tests;
