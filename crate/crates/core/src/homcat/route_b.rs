//! Ext groups of R-modules computed from the periodic free resolution.
//!
//! For M = coker(d1 of K) the complex ... → K^{-2} → K^{-1} → K^0 → M is a
//! free resolution, so Ext^N(M, M') is the cohomology of
//! C^n = Hom_R(K^{-n}, M')_0 = ⊕_t M'_{-a_t} with a_t the generator degrees
//! of K^{-n}. The stable Hom^N(K, K') equals Ext^N for N ≥ 1.

use std::collections::{BTreeMap, HashMap};

use crate::galg::linalg::{svec_add_scaled, svec_from_map};
use crate::galg::{CycScalar, Echelon, GradedModulePresentation, LDegree, Monomial, Poly, SVec};
use crate::matfac::{coker_module, shift, MatrixFactorisation};

/// Slots of C^n: (generator t of K^{-n}, generator u of M', monomial).
pub struct CochainSpace {
    pub slots: Vec<(usize, usize, Monomial)>,
    pub index: HashMap<(usize, usize, Monomial), usize>,
    /// span of the relations of M' inside the slots
    pub relations: Echelon,
}

fn target_presentation(kp: &MatrixFactorisation) -> GradedModulePresentation {
    // w·e_u lies in the image of d1, so it need not be listed
    GradedModulePresentation { w: None, ..coker_module(kp) }
}

impl CochainSpace {
    pub fn new(m: &GradedModulePresentation, degrees: &[LDegree]) -> Self {
        let g = &m.group;
        let mut slots = Vec::new();
        for (t, a) in degrees.iter().enumerate() {
            for (u, e) in m.shifts.iter().enumerate() {
                for mono in g.monomials_of_degree(*e - *a) {
                    slots.push((t, u, mono));
                }
            }
        }
        let index: HashMap<_, _> = slots.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut relations = Echelon::new();
        let mut rels: Vec<(Vec<Poly>, LDegree)> = Vec::new();
        for rel in &m.relations {
            if let Some(d) = m.relation_degree(rel) {
                rels.push((rel.clone(), d));
            }
        }
        if let Some(w) = &m.w {
            let wd = w.degree(g).expect("homogeneous w");
            for u in 0..m.shifts.len() {
                let mut rel = vec![Poly::zero(); m.shifts.len()];
                rel[u] = w.clone();
                rels.push((rel, wd - m.shifts[u]));
            }
        }
        for (t, a) in degrees.iter().enumerate() {
            for (rel, d) in &rels {
                for mono in g.monomials_of_degree(-*a - *d) {
                    let mut acc = BTreeMap::new();
                    for (u, p) in rel.iter().enumerate() {
                        for (mm, c) in p.terms() {
                            let i = index[&(t, u, (mm.0 + mono.0, mm.1 + mono.1))];
                            let e: &mut CycScalar = acc.entry(i).or_default();
                            *e += c;
                        }
                    }
                    relations.insert(svec_from_map(acc));
                }
            }
        }
        CochainSpace { slots, index, relations }
    }

    pub fn dim(&self) -> usize {
        self.slots.len() - self.relations.rank()
    }
}

/// Images of the slot basis of C^n under φ ↦ φ∘k^{-(n+1)}.
fn delta(k: &MatrixFactorisation, n: i64, cur: &CochainSpace, next: &CochainSpace) -> Vec<SVec> {
    let kmat = k.differential(-(n + 1));
    cur.slots
        .iter()
        .map(|&(t, u, m)| {
            let mut acc = BTreeMap::new();
            for (s, e) in kmat[t].iter().enumerate() {
                for (mm, c) in e.terms() {
                    let i = next.index[&(s, u, (mm.0 + m.0, mm.1 + m.1))];
                    let x: &mut CycScalar = acc.entry(i).or_default();
                    *x += c;
                }
            }
            svec_from_map(acc)
        })
        .collect()
}

fn induced_rank(images: &[SVec], target: &CochainSpace) -> usize {
    let mut e = target.relations.clone();
    let base = e.rank();
    for v in images {
        e.insert(v.clone());
    }
    e.rank() - base
}

/// dim Ext^N(coker K, M') for N ≥ 1.
pub fn ext_dim(k: &MatrixFactorisation, m: &GradedModulePresentation, n: i64) -> usize {
    assert!(n >= 1, "the resolution computes Ext only in positive degrees");
    let spaces: Vec<CochainSpace> = (n - 1..=n + 1).map(|i| CochainSpace::new(m, &k.term(-i))).collect();
    let d_prev = delta(k, n - 1, &spaces[0], &spaces[1]);
    let d_cur = delta(k, n, &spaces[1], &spaces[2]);
    spaces[1].dim() - induced_rank(&d_cur, &spaces[2]) - induced_rank(&d_prev, &spaces[1])
}

/// Stable Hom^n(K, K') via Ext, using K'(c⃗) ≅ K'[2] to reach N ∈ {1, 2}.
pub fn route_b_dim(k: &MatrixFactorisation, kp: &MatrixFactorisation, n: i64) -> usize {
    let big_n = if n.rem_euclid(2) == 1 { 1 } else { 2 };
    let m = (big_n - n) / 2;
    let target = shift(kp, kp.c.scale(-m));
    ext_dim(k, &target_presentation(&target), big_n)
}

/// Route B coordinates of a degree n morphism: the component K^{-n} → K'^0
/// read as a cochain in C^n (only meaningful for n ≥ 1).
pub fn route_b_vector(space: &CochainSpace, comp: &[Vec<Poly>]) -> SVec {
    let mut acc = BTreeMap::new();
    for (u, row) in comp.iter().enumerate() {
        for (t, e) in row.iter().enumerate() {
            for (m, c) in e.terms() {
                let i = space.index[&(t, u, *m)];
                svec_add_scaled(&mut acc, &vec![(i, CycScalar::one())], c);
            }
        }
    }
    svec_from_map(acc)
}

/// C^n for morphisms K → K' (target presented as coker d1').
pub fn cochain_space(k: &MatrixFactorisation, kp: &MatrixFactorisation, n: i64) -> CochainSpace {
    CochainSpace::new(&target_presentation(kp), &k.term(-n))
}
