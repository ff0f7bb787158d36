//! Sparse exact row reduction over CycScalar.

use std::collections::{BTreeMap, HashMap};

use super::scalar::CycScalar;

/// Sparse vector: strictly increasing indices, no zero entries.
pub type SVec = Vec<(usize, CycScalar)>;

pub fn svec_from_map(m: BTreeMap<usize, CycScalar>) -> SVec {
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn svec_add_scaled(acc: &mut BTreeMap<usize, CycScalar>, v: &SVec, s: &CycScalar) {
    for (i, c) in v {
        let t = c * s;
        let e = acc.entry(*i).or_default();
        *e += &t;
        if e.is_zero() {
            acc.remove(i);
        }
    }
}

#[derive(Clone, Debug)]
struct Row {
    v: SVec,
    combo: Option<BTreeMap<usize, CycScalar>>,
}

/// Incremental echelon form. Rows are normalized to have leading coefficient 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Row>,
    pivot_of: HashMap<usize, usize>,
    track: bool,
    inserted: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Echelon form that remembers how each row arises from the inserted vectors.
    pub fn tracked() -> Self {
        Echelon { track: true, ..Default::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivot_of.contains_key(&i)
    }

    fn reduce_inner(
        &self,
        v: &SVec,
        mut combo: Option<BTreeMap<usize, CycScalar>>,
    ) -> (BTreeMap<usize, CycScalar>, Option<BTreeMap<usize, CycScalar>>) {
        let mut work: BTreeMap<usize, CycScalar> = v.iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = work.range(cursor..).next().map(|(k, _)| *k);
            let Some(k) = next else { break };
            cursor = k + 1;
            if let Some(&ri) = self.pivot_of.get(&k) {
                let coef = work.remove(&k).unwrap();
                let row = &self.rows[ri];
                let neg = -&coef;
                for (j, c) in row.v.iter().skip(1) {
                    let t = c * &neg;
                    let e = work.entry(*j).or_default();
                    *e += &t;
                    if e.is_zero() {
                        work.remove(j);
                    }
                }
                if let (Some(cb), Some(rc)) = (combo.as_mut(), row.combo.as_ref()) {
                    for (j, c) in rc {
                        let t = c * &neg;
                        let e = cb.entry(*j).or_default();
                        *e += &t;
                        if e.is_zero() {
                            cb.remove(j);
                        }
                    }
                }
            }
        }
        (work, combo)
    }

    /// Normal form of v: entries at pivot positions eliminated.
    pub fn reduce(&self, v: &SVec) -> SVec {
        svec_from_map(self.reduce_inner(v, None).0)
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce_inner(v, None).0.is_empty()
    }

    /// Insert a vector; returns true if it increased the rank.
    pub fn insert(&mut self, v: SVec) -> bool {
        let label = self.inserted_count();
        let combo = if self.track {
            let mut m = BTreeMap::new();
            m.insert(label, CycScalar::one());
            Some(m)
        } else {
            None
        };
        self.inserted += 1;
        let (work, combo) = self.reduce_inner(&v, combo);
        if work.is_empty() {
            return false;
        }
        let (&lead, lc) = work.iter().next().unwrap();
        let inv = lc.inv().expect("nonzero leading coefficient");
        let v: SVec = work.iter().map(|(i, c)| (*i, c * &inv)).collect();
        let combo = combo.map(|m| m.into_iter().map(|(i, c)| (i, &c * &inv)).collect());
        self.pivot_of.insert(lead, self.rows.len());
        self.rows.push(Row { v, combo });
        true
    }

    /// Insert a vector; if it is dependent on the earlier ones, return the
    /// vanishing combination of inserted vectors (tracked mode only).
    pub fn insert_or_relation(&mut self, v: SVec) -> Option<BTreeMap<usize, CycScalar>> {
        assert!(self.track, "relations require a tracked echelon");
        let label = self.inserted;
        let mut start = BTreeMap::new();
        start.insert(label, CycScalar::one());
        let (work, combo) = self.reduce_inner(&v, Some(start));
        if work.is_empty() {
            self.inserted += 1;
            return combo;
        }
        self.inserted += 1;
        let combo = combo.unwrap();
        let (&lead, lc) = work.iter().next().unwrap();
        let inv = lc.inv().expect("nonzero leading coefficient");
        let v: SVec = work.iter().map(|(i, c)| (*i, c * &inv)).collect();
        let combo = combo.into_iter().map(|(i, c)| (i, &c * &inv)).collect();
        self.pivot_of.insert(lead, self.rows.len());
        self.rows.push(Row { v, combo: Some(combo) });
        None
    }

    fn inserted_count(&self) -> usize {
        self.inserted
    }

    /// Express v as a combination of inserted vectors (tracked mode only).
    pub fn express(&self, v: &SVec) -> Option<BTreeMap<usize, CycScalar>> {
        assert!(self.track, "express requires a tracked echelon");
        let (work, combo) = self.reduce_inner(v, Some(BTreeMap::new()));
        if !work.is_empty() {
            return None;
        }
        // v − Σ(combo) reduced to zero, so v = −combo
        Some(combo.unwrap().into_iter().map(|(i, c)| (i, -c)).collect())
    }
}

pub fn rank_of<'a, I: IntoIterator<Item = &'a SVec>>(vs: I) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v.clone());
    }
    e.rank()
}

/// Solve Σ z_k·cols[k] = rhs. Returns one particular solution.
pub fn solve(cols: &[SVec], rhs: &SVec) -> Option<Vec<CycScalar>> {
    let mut e = Echelon::tracked();
    for c in cols {
        e.insert(c.clone());
    }
    let combo = e.express(rhs)?;
    let mut z = vec![CycScalar::zero(); cols.len()];
    for (i, c) in combo {
        z[i] = c;
    }
    Some(z)
}

/// Basis of {z : Σ z_k·cols[k] = 0}.
pub fn kernel_basis(cols: &[SVec]) -> Vec<SVec> {
    let mut e = Echelon::tracked();
    let mut out = Vec::new();
    for c in cols {
        if let Some(rel) = e.insert_or_relation(c.clone()) {
            out.push(svec_from_map(rel));
        }
    }
    out
}
