//! Graded rings S = C[x,y], R = S/(w), and finitely presented graded modules.

use serde::{Deserialize, Serialize};

use super::grading::{GradingGroup, LDegree};
use super::linalg::{Echelon, SVec};
use super::poly::{Monomial, Poly};
use super::scalar::CycScalar;

/// The L-graded polynomial ring together with the potential w of degree c⃗.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GradedRing {
    pub group: GradingGroup,
    pub w: Poly,
    pub c: LDegree,
    /// conductor of the coefficient field (2ℓ)
    pub conductor: u32,
}

impl GradedRing {
    pub fn x(&self) -> LDegree {
        self.group.x()
    }
    pub fn y(&self) -> LDegree {
        self.group.y()
    }
    pub fn deg(&self, a: i64, b: i64) -> LDegree {
        self.group.deg(a, b)
    }
    pub fn monomials(&self, l: LDegree) -> Vec<Monomial> {
        self.group.monomials_of_degree(l)
    }
    /// Gorenstein parameter x⃗ + y⃗ − c⃗.
    pub fn alpha(&self) -> LDegree {
        self.x() + self.y() - self.c
    }
}

/// ⊕_u S(shift_u) modulo the listed relations (and w·e_u when `over_r`).
///
/// A relation is a vector (ρ_u) with ρ_u ∈ S(shift_u) homogeneous of a common degree.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GradedModulePresentation {
    pub group: GradingGroup,
    pub shifts: Vec<LDegree>,
    pub relations: Vec<Vec<Poly>>,
    pub w: Option<Poly>,
}

/// Degree-l piece of a presented module: ambient monomial slots, the span of
/// relations, and the slots whose classes form a basis of the quotient.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub slots: Vec<(usize, Monomial)>,
    pub relations: Echelon,
    pub basis: Vec<usize>,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl GradedModulePresentation {
    /// R(shift)/(g_1, …, g_k) for a cyclic module with monomial or polynomial generators.
    pub fn cyclic(group: GradingGroup, shift: LDegree, gens: Vec<Poly>, w: Option<Poly>) -> Self {
        GradedModulePresentation { group, shifts: vec![shift], relations: gens.into_iter().map(|g| vec![g]).collect(), w }
    }

    /// Degree of a relation vector as an element of ⊕ S(shift_u).
    pub fn relation_degree(&self, rel: &[Poly]) -> Option<LDegree> {
        for (u, p) in rel.iter().enumerate() {
            if let Some(d) = p.degree(&self.group) {
                return Some(d - self.shifts[u]);
            }
        }
        None
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(|rel| match self.relation_degree(rel) {
            None => true,
            Some(d) => rel.iter().enumerate().all(|(u, p)| p.is_homogeneous_of(&self.group, d + self.shifts[u])),
        })
    }

    pub fn graded_piece(&self, l: LDegree) -> GradedPiece {
        let g = &self.group;
        let mut slots = Vec::new();
        let mut offsets = Vec::new();
        for (u, s) in self.shifts.iter().enumerate() {
            offsets.push(slots.len());
            for m in g.monomials_of_degree(l + *s) {
                slots.push((u, m));
            }
        }
        let index = |u: usize, m: Monomial| -> usize {
            let start = offsets[u];
            let end = if u + 1 < offsets.len() { offsets[u + 1] } else { slots.len() };
            let local = &slots[start..end];
            // lex order lets us binary search
            start + local.binary_search_by(|(_, mm)| mm.cmp(&m)).expect("monomial in graded piece")
        };
        let mut ech = Echelon::new();
        let push_multiple = |ech: &mut Echelon, rel: &[Poly], mult: Monomial| {
            let mut acc = std::collections::BTreeMap::new();
            for (u, p) in rel.iter().enumerate() {
                for (m, c) in p.terms() {
                    let mm = (m.0 + mult.0, m.1 + mult.1);
                    let e: &mut CycScalar = acc.entry(index(u, mm)).or_default();
                    *e += c;
                }
            }
            ech.insert(super::linalg::svec_from_map(acc));
        };
        for rel in &self.relations {
            if let Some(d) = self.relation_degree(rel) {
                for m in g.monomials_of_degree(l - d) {
                    push_multiple(&mut ech, rel, m);
                }
            }
        }
        if let Some(w) = &self.w {
            let wd = w.degree(g).expect("w homogeneous");
            for u in 0..self.shifts.len() {
                let mut rel = vec![Poly::zero(); self.shifts.len()];
                rel[u] = w.clone();
                for m in g.monomials_of_degree(l + self.shifts[u] - wd) {
                    push_multiple(&mut ech, &rel, m);
                }
            }
        }
        let basis = (0..slots.len()).filter(|i| !ech.is_pivot(*i)).collect();
        GradedPiece { slots, relations: ech, basis }
    }

    pub fn graded_piece_dim(&self, l: LDegree) -> usize {
        self.graded_piece(l).dim()
    }
}

/// Coordinates of a vector of polynomials in a graded piece (slot space).
pub fn piece_vector(piece: &GradedPiece, v: &[Poly]) -> SVec {
    let mut acc = std::collections::BTreeMap::new();
    for (u, p) in v.iter().enumerate() {
        for (m, c) in p.terms() {
            let i = piece.slots.iter().position(|s| *s == (u, *m)).expect("term lies in piece");
            let e: &mut CycScalar = acc.entry(i).or_default();
            *e += c;
        }
    }
    super::linalg::svec_from_map(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop33() -> (GradingGroup, Poly) {
        let g = GradingGroup::new(1, 1);
        let w = Poly::monomial(3, 1).add(&Poly::monomial(1, 3));
        (g, w)
    }

    #[test]
    fn skyscraper() {
        let (g, w) = loop33();
        let m = GradedModulePresentation::cyclic(g, g.zero(), vec![Poly::x(), Poly::y()], Some(w));
        assert_eq!(m.graded_piece_dim(g.zero()), 1);
        for k in 1..6 {
            assert_eq!(m.graded_piece_dim(g.deg(k, 0)), 0);
            assert_eq!(m.graded_piece_dim(g.deg(-k, 0)), 0);
        }
    }

    #[test]
    fn ring_pieces() {
        let (g, w) = loop33();
        let r = GradedModulePresentation::cyclic(g, g.zero(), vec![], Some(w.clone()));
        assert_eq!(r.graded_piece_dim(g.deg(4, 0)), 4);
        assert_eq!(r.graded_piece_dim(g.deg(3, 0)), 4);
        // shift law: R(c)/(w) in degree l equals R in degree l + c
        let rc = GradedModulePresentation::cyclic(g, g.deg(4, 0), vec![], Some(w));
        for k in -2..9 {
            assert_eq!(rc.graded_piece_dim(g.deg(k, 0)), r.graded_piece_dim(g.deg(k + 4, 0)));
        }
        // Krull dimension one: eventually constant
        let dims: Vec<usize> = (8..16).map(|k| r.graded_piece_dim(g.deg(k, 0))).collect();
        assert!(dims.iter().all(|d| *d == 4));
    }
}
