//! Quivers with relations for the three families, dimensions of their path
//! algebras, and the comparison with the morphism spaces of the B-model.

mod paths;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{MirrorError, Result};
use crate::galg::CycScalar;
use crate::homcat::{Arrow, ArrowLabel};
use crate::matfac::{basic_objects, ObjectId};
use crate::mirror_core::{Family, FamilyKind};

pub use paths::{compare_with_homcat, path_space, path_space_dims, topological_order, CompareReport, PathSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationKind {
    /// xy = yx
    Commutativity,
    /// ay = 0 or bx = 0
    Zero,
    /// c_r (x^P − λ y^Q) = 0
    Cyclotomic(u32),
}

/// A formal sum of paths from one vertex to another. Paths list arrow
/// indices in the order they are traversed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub kind: RelationKind,
    pub source: ObjectId,
    pub target: ObjectId,
    pub terms: Vec<(CycScalar, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverWithRelations {
    pub family: Family,
    pub ell: u32,
    pub vertices: Vec<ObjectId>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl QuiverWithRelations {
    pub fn vertex_index(&self, v: ObjectId) -> Option<usize> {
        self.vertices.iter().position(|u| *u == v)
    }

    pub fn arrows_from(&self, v: ObjectId) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v)
    }

    /// The unique arrow out of v passing the filter, if any.
    fn step(&self, v: ObjectId, pick: impl Fn(&ArrowLabel) -> bool) -> Option<usize> {
        self.arrows_from(v).find(|(_, a)| pick(&a.label)).map(|(i, _)| i)
    }

    /// Follow n arrows of one type from v.
    fn walk(&self, v: ObjectId, n: u32, pick: impl Fn(&ArrowLabel) -> bool + Copy) -> Option<(Vec<usize>, ObjectId)> {
        let mut path = Vec::new();
        let mut at = v;
        for _ in 0..n {
            let i = self.step(at, pick)?;
            path.push(i);
            at = self.arrows[i].target;
        }
        Some((path, at))
    }

    /// Whether the underlying graph has an oriented cycle.
    pub fn has_cycle(&self) -> bool {
        paths::topological_order(self).is_none()
    }

    /// Same quiver with one relation kind removed (used as a negative control).
    pub fn without_relations(&self, drop: impl Fn(&RelationKind) -> bool) -> Self {
        let mut q = self.clone();
        q.relations.retain(|r| !drop(&r.kind));
        q
    }

    pub fn path_label(&self, path: &[usize]) -> String {
        path.iter().map(|i| self.arrows[*i].label.name()).collect::<Vec<_>>().join("·")
    }
}

fn k0(i: u32, j: u32) -> ObjectId {
    ObjectId::K0(i, j)
}

/// The quiver drawn for the family: K0 grid with x and y arrows, wrap arrows
/// between blocks, and arrows a, b, c_r into the rank one objects.
pub fn expected_quiver(family: &Family, ell: u32) -> Result<QuiverWithRelations> {
    let vertices = basic_objects(family, ell)?;
    let (p, q) = (family.p, family.q);
    let (pp, qq) = family.block_sizes(ell);
    let has = |v: ObjectId| vertices.contains(&v);
    let mut arrows = Vec::new();
    let mut add = |s: ObjectId, t: ObjectId, label: ArrowLabel| {
        if has(s) && has(t) {
            arrows.push(Arrow { source: s, target: t, label });
        }
    };
    for v in &vertices {
        let ObjectId::K0(i, j) = *v else { continue };
        add(k0(i, j), k0(i + 1, j), ArrowLabel::X);
        add(k0(i, j), k0(i, j + 1), ArrowLabel::Y);
        match family.kind {
            FamilyKind::Loop => {
                if i == p - 1 {
                    add(k0(i, j), k0(p - pp, j + qq), ArrowLabel::XWrap);
                    add(k0(i, j), ObjectId::Ky(j), ArrowLabel::A);
                }
                if j == q - 1 {
                    add(k0(i, j), ObjectId::Kx(i), ArrowLabel::B);
                }
            }
            FamilyKind::Chain => {
                if j == q - 1 {
                    add(k0(i, j), k0(i + pp, q - qq), ArrowLabel::YWrap);
                }
                if i == p - 1 {
                    add(k0(i, j), ObjectId::Ky(j), ArrowLabel::A);
                }
            }
            FamilyKind::Bp => {
                if i == p - 1 {
                    add(k0(i, j), k0((ell - 1) * pp, j + qq), ArrowLabel::XWrap);
                }
            }
        }
        if i == p - 1 && j == q - 1 {
            for r in 1..=ell {
                add(k0(i, j), ObjectId::Kw(r), ArrowLabel::C(r));
            }
        }
    }
    let mut quiver = QuiverWithRelations { family: *family, ell, vertices, arrows, relations: Vec::new() };
    quiver.relations = relations(&quiver, pp, qq);
    Ok(quiver)
}

fn relations(quiver: &QuiverWithRelations, pp: u32, qq: u32) -> Vec<Relation> {
    let one = CycScalar::one();
    let minus = CycScalar::from_int(-1);
    let mut out = Vec::new();
    let arrows = &quiver.arrows;
    for v in &quiver.vertices {
        // xy = yx on every square
        for (ix, ax) in quiver.arrows_from(*v).filter(|(_, a)| a.label.is_x_type()) {
            for (iy, ay) in quiver.arrows_from(*v).filter(|(_, a)| a.label.is_y_type()) {
                let xy = quiver.arrows_from(ax.target).find(|(_, b)| b.label.is_y_type());
                let yx = quiver.arrows_from(ay.target).find(|(_, b)| b.label.is_x_type());
                if let (Some((i2, b1)), Some((j2, b2))) = (xy, yx) {
                    if b1.target == b2.target {
                        out.push(Relation {
                            kind: RelationKind::Commutativity,
                            source: *v,
                            target: b1.target,
                            terms: vec![(one.clone(), vec![ix, i2]), (minus.clone(), vec![iy, j2])],
                        });
                    }
                }
            }
        }
    }
    // ay = 0 and bx = 0
    for (i, a) in arrows.iter().enumerate() {
        let into = |pick: fn(&ArrowLabel) -> bool| {
            arrows.iter().enumerate().filter(move |(_, b)| b.target == a.source && pick(&b.label))
        };
        let before: Vec<usize> = match a.label {
            ArrowLabel::A => into(ArrowLabel::is_y_type).map(|(j, _)| j).collect(),
            ArrowLabel::B => into(ArrowLabel::is_x_type).map(|(j, _)| j).collect(),
            _ => Vec::new(),
        };
        for j in before {
            out.push(Relation {
                kind: RelationKind::Zero,
                source: arrows[j].source,
                target: a.target,
                terms: vec![(one.clone(), vec![j, i])],
            });
        }
    }
    // c_r (x^P − λ_r y^Q) = 0 with λ_r = e^{πi/ℓ} η^r
    let ell = quiver.ell;
    let (p, q) = (quiver.family.p, quiver.family.q);
    let src = match quiver.family.kind {
        FamilyKind::Loop | FamilyKind::Bp => (q - 1).checked_sub(qq).map(|j| k0(p - 1, j)),
        FamilyKind::Chain => (p - 1).checked_sub(pp).map(|i| k0(i, q - 1)),
    };
    let corner = k0(p - 1, q - 1);
    if let Some(src) = src.filter(|s| quiver.vertex_index(*s).is_some()) {
        let xs = quiver.walk(src, pp, ArrowLabel::is_x_type);
        let ys = quiver.walk(src, qq, ArrowLabel::is_y_type);
        if let (Some((xp, xe)), Some((yp, ye))) = (xs, ys) {
            if xe == corner && ye == corner {
                for r in 1..=ell {
                    let Some((ci, _)) = quiver.arrows_from(corner).find(|(_, a)| a.label == ArrowLabel::C(r)) else {
                        continue;
                    };
                    let lambda = CycScalar::root_of_unity(2 * ell, 1 + 2 * r as i64);
                    let mut px = xp.clone();
                    px.push(ci);
                    let mut py = yp.clone();
                    py.push(ci);
                    out.push(Relation {
                        kind: RelationKind::Cyclotomic(r),
                        source: src,
                        target: ObjectId::Kw(r),
                        terms: vec![(one.clone(), px), (-&lambda, py)],
                    });
                }
            }
        }
    }
    out
}

/// DOT or JSON text of the quiver.
pub fn export(quiver: &QuiverWithRelations, format: &str) -> Result<String> {
    match format {
        "json" => serde_json::to_string_pretty(quiver).map_err(|e| MirrorError::Parse(e.to_string())),
        "dot" => Ok(to_dot(quiver)),
        other => Err(MirrorError::UnknownFormat(other.to_string())),
    }
}

pub fn parse_json(text: &str) -> Result<QuiverWithRelations> {
    serde_json::from_str(text).map_err(|e| MirrorError::Parse(e.to_string()))
}

fn to_dot(quiver: &QuiverWithRelations) -> String {
    let mut s = format!("digraph \"{} l={}\" {{\n  rankdir=LR;\n", quiver.family, quiver.ell);
    for v in &quiver.vertices {
        s += &format!("  \"{v}\";\n");
    }
    for a in &quiver.arrows {
        s += &format!("  \"{}\" -> \"{}\" [label=\"{}\"];\n", a.source, a.target, a.label.name());
    }
    for r in &quiver.relations {
        let terms: Vec<String> =
            r.terms.iter().map(|(c, path)| format!("({c}) {}", quiver.path_label(path))).collect();
        s += &format!("  // relation {} -> {}: {} = 0\n", r.source, r.target, terms.join(" + "));
    }
    s += "}\n";
    s
}

/// Vertex orderings of two quivers that match arrows label-blind, found by
/// backtracking over vertices with equal in/out degree profiles.
pub fn isomorphic_dims(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let profile = |m: &[Vec<usize>], v: usize| {
        let mut out: Vec<usize> = m[v].clone();
        let mut inn: Vec<usize> = m.iter().map(|r| r[v]).collect();
        out.sort();
        inn.sort();
        (out, inn)
    };
    let pa: Vec<_> = (0..n).map(|v| profile(a, v)).collect();
    let pb: Vec<_> = (0..n).map(|v| profile(b, v)).collect();
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        v: usize,
        a: &[Vec<usize>],
        b: &[Vec<usize>],
        pa: &[(Vec<usize>, Vec<usize>)],
        pb: &[(Vec<usize>, Vec<usize>)],
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if v == a.len() {
            return true;
        }
        for w in 0..b.len() {
            if used[w] || pa[v] != pb[w] {
                continue;
            }
            let fits = (0..v).all(|u| a[u][v] == b[assign[u]][w] && a[v][u] == b[w][assign[u]]) && a[v][v] == b[w][w];
            if fits {
                assign[v] = w;
                used[w] = true;
                if go(v + 1, a, b, pa, pb, assign, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    go(0, a, b, &pa, &pb, &mut assign, &mut used)
}

/// Arrows grouped by ordered vertex pair.
pub fn arrow_counts(quiver: &QuiverWithRelations) -> BTreeMap<(ObjectId, ObjectId), usize> {
    let mut m = BTreeMap::new();
    for a in &quiver.arrows {
        *m.entry((a.source, a.target)).or_insert(0) += 1;
    }
    m
}
