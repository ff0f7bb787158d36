//! The dg Hom complex of two matrix factorisations.
//!
//! A degree n element is a pair f^0: K^0 → K'^n, f^{-1}: K^{-1} → K'^{n-1};
//! its differential is
//!   (Df)^0    = d'·f^0    − (−1)^n f^{-1}·d0,
//!   (Df)^{-1} = d'·f^{-1} − (−1)^n f^0·d1.

use std::collections::{BTreeMap, HashMap};

use crate::galg::linalg::svec_from_map;
use crate::galg::{CycScalar, Echelon, Monomial, Poly, SVec};
use crate::matfac::{matrix, MFMorphism, MatrixFactorisation};

/// Which component a basis element lives in: 0 for f^0, 1 for f^{-1}.
pub type Slot = (u8, usize, usize, Monomial);

/// Monomial basis of Hom^n(K, K').
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub n: i64,
    pub slots: Vec<Slot>,
    pub index: HashMap<Slot, usize>,
}

impl HomBasis {
    pub fn new(k: &MatrixFactorisation, kp: &MatrixFactorisation, n: i64) -> Self {
        let g = &k.group;
        let mut slots = Vec::new();
        for (comp, src, tgt) in [(0u8, k.term(0), kp.term(n)), (1u8, k.term(-1), kp.term(n - 1))] {
            for (r, t) in tgt.iter().enumerate() {
                for (s, so) in src.iter().enumerate() {
                    for m in g.monomials_of_degree(*t - *so) {
                        slots.push((comp, r, s, m));
                    }
                }
            }
        }
        let index = slots.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        HomBasis { n, slots, index }
    }

    pub fn dim(&self) -> usize {
        self.slots.len()
    }

    /// Coordinates of a morphism of degree n.
    pub fn vector(&self, f: &MFMorphism) -> SVec {
        let mut acc = BTreeMap::new();
        for (comp, mat) in [(0u8, &f.f_even), (1u8, &f.f_odd)] {
            for (r, row) in mat.iter().enumerate() {
                for (s, e) in row.iter().enumerate() {
                    for (m, c) in e.terms() {
                        let i = *self.index.get(&(comp, r, s, *m)).expect("morphism entry of the wrong degree");
                        acc.insert(i, c.clone());
                    }
                }
            }
        }
        svec_from_map(acc)
    }

    pub fn morphism(&self, k: &MatrixFactorisation, kp: &MatrixFactorisation, v: &SVec) -> MFMorphism {
        let mut f = MFMorphism::zero(k, kp, self.n);
        for (i, c) in v {
            let (comp, r, s, m) = self.slots[*i];
            let mat = if comp == 0 { &mut f.f_even } else { &mut f.f_odd };
            mat[r][s].add_term(m, c);
        }
        f
    }
}

fn push(acc: &mut BTreeMap<usize, CycScalar>, next: &HomBasis, slot: Slot, c: &CycScalar) {
    let i = *next.index.get(&slot).expect("differential leaves the graded piece");
    let e = acc.entry(i).or_default();
    *e += c;
    if e.is_zero() {
        acc.remove(&i);
    }
}

fn push_poly(acc: &mut BTreeMap<usize, CycScalar>, next: &HomBasis, comp: u8, r: usize, s: usize, p: &Poly, m: Monomial, sign: &CycScalar) {
    for (mm, c) in p.terms() {
        push(acc, next, (comp, r, s, (mm.0 + m.0, mm.1 + m.1)), &(c * sign));
    }
}

/// Columns of D_n: Hom^n → Hom^{n+1}, in the coordinates of the two bases.
pub fn differential_columns(k: &MatrixFactorisation, kp: &MatrixFactorisation, cur: &HomBasis, next: &HomBasis) -> Vec<SVec> {
    let n = cur.n;
    let one = CycScalar::one();
    let sgn = if n % 2 == 0 { CycScalar::from_int(-1) } else { CycScalar::one() };
    let dn = kp.differential(n);
    let dn1 = kp.differential(n - 1);
    cur.slots
        .iter()
        .map(|&(comp, r, s, m)| {
            let mut acc = BTreeMap::new();
            if comp == 0 {
                for (r2, row) in dn.iter().enumerate() {
                    push_poly(&mut acc, next, 0, r2, s, &row[r], m, &one);
                }
                for (s2, e) in k.d1[s].iter().enumerate() {
                    push_poly(&mut acc, next, 1, r, s2, e, m, &sgn);
                }
            } else {
                for (r2, row) in dn1.iter().enumerate() {
                    push_poly(&mut acc, next, 1, r2, s, &row[r], m, &one);
                }
                for (s2, e) in k.d0[s].iter().enumerate() {
                    push_poly(&mut acc, next, 0, r, s2, e, m, &sgn);
                }
            }
            svec_from_map(acc)
        })
        .collect()
}

/// The Hom complex restricted to degrees lo−1 ..= hi+1.
pub struct HomComplex {
    pub lo: i64,
    pub bases: Vec<HomBasis>,
    /// columns of D_n for n = lo−1 ..= hi
    pub diffs: Vec<Vec<SVec>>,
    pub ranks: Vec<usize>,
}

impl HomComplex {
    pub fn new(k: &MatrixFactorisation, kp: &MatrixFactorisation, lo: i64, hi: i64) -> Self {
        let bases: Vec<HomBasis> = (lo - 1..=hi + 1).map(|n| HomBasis::new(k, kp, n)).collect();
        let mut diffs = Vec::new();
        let mut ranks = Vec::new();
        for w in bases.windows(2) {
            let cols = differential_columns(k, kp, &w[0], &w[1]);
            ranks.push(crate::galg::linalg::rank_of(cols.iter()));
            diffs.push(cols);
        }
        HomComplex { lo, bases, diffs, ranks }
    }

    fn at(&self, n: i64) -> usize {
        (n - self.lo + 1) as usize
    }

    pub fn basis(&self, n: i64) -> &HomBasis {
        &self.bases[self.at(n)]
    }

    /// D_n as columns.
    pub fn d(&self, n: i64) -> &Vec<SVec> {
        &self.diffs[self.at(n)]
    }

    pub fn cohomology_dim(&self, n: i64) -> usize {
        let i = self.at(n);
        self.bases[i].dim() - self.ranks[i] - self.ranks[i - 1]
    }

    /// Cocycles of degree n whose classes form a basis of H^n.
    pub fn cohomology_basis(&self, n: i64) -> Vec<SVec> {
        let ker = crate::galg::kernel_basis(self.d(n));
        let mut ech = Echelon::new();
        for c in self.d(n - 1) {
            ech.insert(c.clone());
        }
        ker.into_iter().filter(|z| ech.insert(z.clone())).collect()
    }

    pub fn is_coboundary(&self, n: i64, v: &SVec) -> bool {
        let mut ech = Echelon::new();
        for c in self.d(n - 1) {
            ech.insert(c.clone());
        }
        ech.contains(v)
    }
}

pub fn route_a_dim(k: &MatrixFactorisation, kp: &MatrixFactorisation, n: i64) -> usize {
    HomComplex::new(k, kp, n, n).cohomology_dim(n)
}

pub fn is_cocycle(k: &MatrixFactorisation, kp: &MatrixFactorisation, n: i64, v: &SVec) -> bool {
    let cur = HomBasis::new(k, kp, n);
    let next = HomBasis::new(k, kp, n + 1);
    let cols = differential_columns(k, kp, &cur, &next);
    let mut acc = BTreeMap::new();
    for (i, c) in v {
        crate::galg::linalg::svec_add_scaled(&mut acc, &cols[*i], c);
    }
    acc.is_empty()
}

/// Degree n+m composite g∘f.
pub fn compose_matrices(f: &MFMorphism, g: &MFMorphism) -> MFMorphism {
    let n = f.degree;
    let (ge, go) = (&g.f_even, &g.f_odd);
    // g on K'^s uses the even matrix for even s and the odd one for odd s
    let on = |s: i64| if s.rem_euclid(2) == 0 { ge } else { go };
    MFMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        degree: n + g.degree,
        f_even: matrix::mul(on(n), &f.f_even),
        f_odd: matrix::mul(on(n - 1), &f.f_odd),
    }
}
