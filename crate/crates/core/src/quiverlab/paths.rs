//! Path algebra of a quiver with relations, computed one source vertex at a
//! time: A(s, u) is the span of (arrow into u) ∘ A(s, v) modulo the
//! relations ending at u, precomposed with A(s, source of the relation).

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::galg::linalg::svec_from_map;
use crate::galg::{CycScalar, Echelon, SVec};
use crate::homcat::{compose, ArrowRep, HomComplex, HomTable};
use crate::matfac::{MFMorphism, ObjectId};

use super::QuiverWithRelations;

/// Vertex indices in an order where every arrow goes forward, or None if the
/// quiver has an oriented cycle.
pub fn topological_order(quiver: &QuiverWithRelations) -> Option<Vec<usize>> {
    let n = quiver.vertices.len();
    let idx: HashMap<ObjectId, usize> = quiver.vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in &quiver.arrows {
        indeg[idx[&a.target]] += 1;
        out[idx[&a.source]].push(idx[&a.target]);
    }
    let mut ready: Vec<usize> = (0..n).rev().filter(|v| indeg[*v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for &t in out[v].iter().rev() {
            indeg[t] -= 1;
            if indeg[t] == 0 {
                ready.push(t);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Paths from one vertex, vertex by vertex.
#[derive(Clone, Debug, Default)]
struct Piece {
    /// (arrow index, basis position at the arrow's source)
    candidates: Vec<(usize, usize)>,
    cand_index: HashMap<(usize, usize), usize>,
    relations: Echelon,
    /// candidate index of each basis element
    basis: Vec<usize>,
    basis_pos: HashMap<usize, usize>,
    /// arrow sequence of each basis element
    reps: Vec<Vec<usize>>,
}

impl Piece {
    /// Reduce a candidate vector to basis coordinates.
    fn to_basis(&self, v: &SVec) -> SVec {
        self.relations.reduce(v).into_iter().map(|(i, c)| (self.basis_pos[&i], c)).collect()
    }
}

/// The path algebra seen from a fixed source vertex.
#[derive(Clone, Debug)]
pub struct PathSpace {
    pub source: usize,
    pieces: Vec<Piece>,
}

impl PathSpace {
    pub fn dim(&self, target: usize) -> usize {
        self.pieces[target].basis.len()
    }

    /// Representative paths of a basis of A(source, target).
    pub fn basis_paths(&self, target: usize) -> &[Vec<usize>] {
        &self.pieces[target].reps
    }

    /// Candidate vector at the end of the arrow for an element of the piece at its source.
    fn extend_raw(&self, quiver: &QuiverWithRelations, v: &SVec, arrow: usize) -> SVec {
        let t = quiver.vertex_index(quiver.arrows[arrow].target).unwrap();
        let piece = &self.pieces[t];
        let m: BTreeMap<usize, CycScalar> = v
            .iter()
            .map(|(b, c)| (piece.cand_index[&(arrow, *b)], c.clone()))
            .collect();
        svec_from_map(m)
    }

    /// Element obtained by following arrows, all of whose vertices are already built.
    fn follow(&self, quiver: &QuiverWithRelations, start: &SVec, arrows: &[usize]) -> SVec {
        let mut v = start.clone();
        for &a in arrows {
            let t = quiver.vertex_index(quiver.arrows[a].target).unwrap();
            let raw = self.extend_raw(quiver, &v, a);
            v = self.pieces[t].to_basis(&raw);
        }
        v
    }

    /// Coordinates of a path from the source in the basis at its end.
    pub fn coordinates(&self, quiver: &QuiverWithRelations, path: &[usize]) -> SVec {
        self.follow(quiver, &vec![(0, CycScalar::one())], path)
    }
}

/// Build A(s, u) for all u.
pub fn path_space(quiver: &QuiverWithRelations, source: usize) -> PathSpace {
    let order = topological_order(quiver).expect("acyclic quiver");
    let n = quiver.vertices.len();
    let idx: HashMap<ObjectId, usize> = quiver.vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut space = PathSpace { source, pieces: vec![Piece::default(); n] };
    let start = order.iter().position(|v| *v == source).unwrap();
    space.pieces[source] = Piece {
        candidates: Vec::new(),
        cand_index: HashMap::new(),
        relations: Echelon::new(),
        basis: vec![0],
        basis_pos: [(0, 0)].into_iter().collect(),
        reps: vec![Vec::new()],
    };
    for &u in &order[start + 1..] {
        let mut piece = Piece::default();
        for (ai, a) in quiver.arrows.iter().enumerate() {
            if idx[&a.target] != u {
                continue;
            }
            let v = idx[&a.source];
            for b in 0..space.pieces[v].basis.len() {
                piece.cand_index.insert((ai, b), piece.candidates.len());
                piece.candidates.push((ai, b));
            }
        }
        space.pieces[u] = piece;
        let mut rels = Echelon::new();
        for rel in quiver.relations.iter().filter(|r| idx[&r.target] == u) {
            let v0 = idx[&rel.source];
            for b in 0..space.pieces[v0].basis.len() {
                let unit = vec![(b, CycScalar::one())];
                let mut acc: BTreeMap<usize, CycScalar> = BTreeMap::new();
                for (c, path) in &rel.terms {
                    let (last, init) = path.split_last().expect("nonempty relation path");
                    let mid = space.follow(quiver, &unit, init);
                    let raw = space.extend_raw(quiver, &mid, *last);
                    crate::galg::linalg::svec_add_scaled(&mut acc, &raw, c);
                }
                rels.insert(svec_from_map(acc));
            }
        }
        let piece = &mut space.pieces[u];
        piece.basis = (0..piece.candidates.len()).filter(|i| !rels.is_pivot(*i)).collect();
        piece.basis_pos = piece.basis.iter().enumerate().map(|(k, i)| (*i, k)).collect();
        piece.relations = rels;
        let reps: Vec<Vec<usize>> = piece
            .basis
            .iter()
            .map(|&ci| {
                let (a, b) = piece.candidates[ci];
                let v = idx[&quiver.arrows[a].source];
                (v, b, a)
            })
            .collect::<Vec<_>>()
            .into_iter()
            .map(|(v, b, a)| {
                let mut p = space.pieces[v].reps[b].clone();
                p.push(a);
                p
            })
            .collect();
        space.pieces[u].reps = reps;
    }
    space
}

/// dim e_t A e_s for all ordered pairs, as a matrix indexed [s][t].
pub fn path_space_dims(quiver: &QuiverWithRelations) -> Vec<Vec<usize>> {
    let n = quiver.vertices.len();
    (0..n)
        .map(|s| {
            let space = path_space(quiver, s);
            (0..n).map(|t| space.dim(t)).collect()
        })
        .collect()
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CompareReport {
    /// (source, target, path algebra dim, Hom dim)
    pub dim_mismatches: Vec<(String, String, usize, usize)>,
    pub concentrated_in_degree_zero: bool,
    /// relation description and whether its image is null-homotopic
    pub relations: Vec<(String, bool)>,
    /// arrows and length two paths, and whether each is a non-coboundary
    pub nonrelations: Vec<(String, bool)>,
    /// pairs whose basis paths fail to give independent classes
    pub dependent_pairs: Vec<(String, String)>,
}

impl CompareReport {
    pub fn passed(&self) -> bool {
        self.dim_mismatches.is_empty()
            && self.concentrated_in_degree_zero
            && self.relations.iter().all(|(_, ok)| *ok)
            && self.nonrelations.iter().all(|(_, ok)| *ok)
            && self.dependent_pairs.is_empty()
    }
}

fn combine(terms: &[(CycScalar, MFMorphism)]) -> MFMorphism {
    let mut it = terms.iter();
    let (c0, f0) = it.next().expect("nonempty sum");
    let scale = |c: &CycScalar, m: &crate::matfac::PolyMatrix| crate::matfac::matrix::scale(m, c);
    let mut out = MFMorphism { f_even: scale(c0, &f0.f_even), f_odd: scale(c0, &f0.f_odd), ..f0.clone() };
    for (c, f) in it {
        out.f_even = crate::matfac::matrix::add(&out.f_even, &scale(c, &f.f_even));
        out.f_odd = crate::matfac::matrix::add(&out.f_odd, &scale(c, &f.f_odd));
    }
    out
}

fn path_morphism(quiver: &QuiverWithRelations, reps: &HashMap<usize, &ArrowRep>, path: &[usize]) -> MFMorphism {
    let mut f = reps[&path[0]].morphism.clone();
    for a in &path[1..] {
        f = compose(&f, &reps[a].morphism).expect("consecutive arrows compose");
    }
    let _ = quiver;
    f
}

fn null_homotopic(f: &MFMorphism) -> bool {
    crate::homcat::is_coboundary(f).expect("composites of cocycles are closed")
}

/// Compare the path algebra of the quiver with the Hom table: dimensions,
/// relations mapping to zero, arrows and short paths mapping to nonzero
/// classes, and basis paths mapping to independent classes.
pub fn compare_with_homcat(quiver: &QuiverWithRelations, table: &HomTable) -> CompareReport {
    let n = quiver.vertices.len();
    let mut report = CompareReport { concentrated_in_degree_zero: table.concentrated_in_degree_zero(), ..Default::default() };
    let hom = table.degree_zero_matrix();
    let reps: HashMap<usize, &ArrowRep> = quiver
        .arrows
        .iter()
        .enumerate()
        .filter_map(|(i, a)| table.arrows.iter().find(|r| r.arrow == *a).map(|r| (i, r)))
        .collect();
    let spaces: Vec<PathSpace> = (0..n).map(|s| path_space(quiver, s)).collect();
    for s in 0..n {
        for t in 0..n {
            let d = spaces[s].dim(t);
            if d != hom[s][t] {
                report.dim_mismatches.push((quiver.vertices[s].to_string(), quiver.vertices[t].to_string(), d, hom[s][t]));
            }
        }
    }
    if reps.len() != quiver.arrows.len() {
        report.nonrelations.push(("arrow representatives missing".into(), false));
        return report;
    }
    for rel in &quiver.relations {
        let terms: Vec<(CycScalar, MFMorphism)> =
            rel.terms.iter().map(|(c, p)| (c.clone(), path_morphism(quiver, &reps, p))).collect();
        let desc: Vec<String> = rel.terms.iter().map(|(c, p)| format!("({c}) {}", quiver.path_label(p))).collect();
        let ok = null_homotopic(&combine(&terms));
        report.relations.push((format!("{} -> {}: {}", rel.source, rel.target, desc.join(" + ")), ok));
    }
    // arrows and length two paths that survive in the path algebra
    for (i, a) in quiver.arrows.iter().enumerate() {
        report.nonrelations.push((format!("{} {} -> {}", a.label.name(), a.source, a.target), !null_homotopic(&reps[&i].morphism)));
        for (j, b) in quiver.arrows_from(a.target) {
            let s = quiver.vertex_index(a.source).unwrap();
            if spaces[s].coordinates(quiver, &[i, j]).is_empty() {
                continue;
            }
            let f = path_morphism(quiver, &reps, &[i, j]);
            report.nonrelations.push((format!("{}·{} {} -> {}", a.label.name(), b.label.name(), a.source, b.target), !null_homotopic(&f)));
        }
    }
    // basis paths give independent classes
    for s in 0..n {
        for t in 0..n {
            let paths = spaces[s].basis_paths(t);
            if s == t || paths.is_empty() {
                continue;
            }
            let fs: Vec<MFMorphism> = paths.iter().map(|p| path_morphism(quiver, &reps, p)).collect();
            let deg = fs[0].degree;
            let cx = HomComplex::new(&fs[0].source, &fs[0].target, deg, deg);
            let mut ech = Echelon::new();
            for c in cx.d(deg - 1) {
                ech.insert(c.clone());
            }
            let independent = fs.iter().all(|f| ech.insert(cx.basis(deg).vector(f)));
            if !independent {
                report.dependent_pairs.push((quiver.vertices[s].to_string(), quiver.vertices[t].to_string()));
            }
        }
    }
    report
}
