//! Combinatorial A-model on the Milnor fibre of the pulled-back Morsification.
//!
//! Angles and windings are exact rationals in units of 2π. Intersection
//! numbers between two V0 cycles are read off from how far apart their
//! arguments start and finish across the cylinder they share.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{MirrorError, Result};
use crate::matfac::ObjectId;
use crate::mirror_core::{Family, FamilyKind};

/// A rational multiple of 2π.
pub type Turns = Rational64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VanishingCycleId {
    V0(u32, u32),
    Vmuw(u32),
    Vlambdaw(u32),
    Vlambdamu(u32),
}

impl fmt::Display for VanishingCycleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VanishingCycleId::V0(m, n) => write!(f, "V0({m},{n})"),
            VanishingCycleId::Vmuw(m) => write!(f, "Vμw({m})"),
            VanishingCycleId::Vlambdaw(n) => write!(f, "Vλw({n})"),
            VanishingCycleId::Vlambdamu(r) => write!(f, "Vλμ({r})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CriticalKind {
    I,
    II,
    III,
    IV,
}

/// Critical value ε-scaled: zero, or e^{2πi·phase}·c_crit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CriticalValue {
    Zero,
    Rotated { phase: Turns, c_crit: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub kind: CriticalKind,
    pub chart: u32,
    pub coordinates: String,
    pub value: CriticalValue,
    pub cycle: VanishingCycleId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inventory {
    pub points: Vec<CriticalPoint>,
    pub counts: BTreeMap<CriticalKind, usize>,
    /// Set when the BP regrouping at q = ℓ applies.
    pub regrouping: Option<String>,
}

impl Inventory {
    pub fn total(&self) -> usize {
        self.points.len()
    }

    pub fn cycles(&self) -> Vec<VanishingCycleId> {
        self.points.iter().map(|p| p.cycle).collect()
    }
}

fn check(family: &Family, ell: u32) -> Result<()> {
    family.check_index(ell)?;
    match family.kind {
        FamilyKind::Chain if family.p == 2 => {
            let reduction = if ell == 2 {
                Some(format!("loop:2,{} --index 1", (family.q + 1) / 2))
            } else {
                None
            };
            Err(MirrorError::UnsupportedCase { reason: "the chain A-model needs p > 2".into(), reduction })
        }
        FamilyKind::Bp if ell == 1 => Err(MirrorError::UnsupportedCase {
            reason: "the Brieskorn–Pham fibre at ℓ = 1 carries no collection".into(),
            reduction: None,
        }),
        _ => Ok(()),
    }
}

/// Index pairs (m, n) of the V0 cycles in the family's range.
pub fn v0_indices(family: &Family, ell: u32) -> Vec<(u32, u32)> {
    let (p, q) = (family.p, family.q);
    let (pp, qq) = family.block_sizes(ell);
    let mut v = Vec::new();
    match family.kind {
        FamilyKind::Loop => {
            for m in 0..pp {
                for n in 0..q - 1 {
                    v.push((m, n));
                }
            }
        }
        FamilyKind::Chain => {
            for m in 0..p - 1 {
                for n in 0..qq {
                    v.push((m, n));
                }
            }
        }
        FamilyKind::Bp => {
            for m in 0..pp {
                let top = if m + 1 == pp { q - 1 - qq } else { q - 1 };
                for n in 0..top {
                    v.push((m, n));
                }
            }
        }
    }
    v
}

fn c_crit(family: &Family) -> &'static str {
    match family.kind {
        FamilyKind::Loop => "−εμ₁λ₁/(pq−1)",
        FamilyKind::Chain => "−εμ_ℓλ_ℓ(p−1)(q−1)/(pq)",
        FamilyKind::Bp => "−ελμ(pq−p−q)/(pq)",
    }
}

pub fn critical_inventory(family: &Family, ell: u32) -> Result<Inventory> {
    check(family, ell)?;
    let (p, q) = (family.p, family.q);
    let (pp, qq) = family.block_sizes(ell);
    let mut points = Vec::new();
    let zero = |kind, chart, coordinates: String, cycle| CriticalPoint {
        kind,
        chart,
        coordinates,
        value: CriticalValue::Zero,
        cycle,
    };
    let mut regrouping = None;
    match family.kind {
        FamilyKind::Loop => {
            for m in 0..pp {
                points.push(zero(CriticalKind::I, 1, format!("μ₁ = 0, λ₁ = ζ_{pp}^{m}·ε^(1/{pp})"), VanishingCycleId::Vmuw(m)));
            }
            for n in 0..qq {
                points.push(zero(CriticalKind::II, ell, format!("λ_ℓ = 0, μ_ℓ = ζ_{qq}^{n}·ε^(1/{qq})"), VanishingCycleId::Vlambdaw(n)));
            }
        }
        FamilyKind::Chain => {
            for n in 0..qq {
                points.push(zero(CriticalKind::I, ell, format!("λ_ℓ = 0, μ_ℓ = ζ_{qq}^{n}·ε^(1/{qq})"), VanishingCycleId::Vlambdaw(n)));
            }
        }
        FamilyKind::Bp => {
            if q == ell {
                regrouping = Some(if p == q { "p = q = ℓ" } else { "p > q = ℓ" }.to_string());
            }
        }
    }
    let w_kind = match family.kind {
        FamilyKind::Loop => CriticalKind::III,
        FamilyKind::Chain => CriticalKind::II,
        FamilyKind::Bp => CriticalKind::I,
    };
    for r in 1..=ell {
        points.push(zero(w_kind, r, format!("node of the exceptional chain at E_{r}"), VanishingCycleId::Vlambdamu(r)));
    }
    let v0_kind = match family.kind {
        FamilyKind::Loop => CriticalKind::IV,
        FamilyKind::Chain => CriticalKind::III,
        FamilyKind::Bp => CriticalKind::II,
    };
    let value = c_crit(family).to_string();
    for (m, n) in v0_indices(family, ell) {
        let coordinates = match family.kind {
            FamilyKind::Loop => format!("λ₁ = ζ^{m}·λ⁺_crit, μ₁ = η^{n}·μ⁺_crit (ζ = e^(2πi/{}), η = e^(2πi/{}))", p - 1, q - 1),
            FamilyKind::Chain => format!("μ_ℓ = α^{}·μ⁺_crit (α = e^(2πi/{}))", m * (q - 1) + n * p, (p - 1) * (q - 1)),
            FamilyKind::Bp => format!("λ = α^{}·λ⁺_crit (α = e^(2πiℓ/{}))", n + m * (q - 1), p * q - p - q),
        };
        points.push(CriticalPoint {
            kind: v0_kind,
            chart: 1,
            coordinates,
            value: CriticalValue::Rotated { phase: reduce_turn(theta(family, ell, m, n)), c_crit: value.clone() },
            cycle: VanishingCycleId::V0(m, n),
        });
    }
    let mut counts = BTreeMap::new();
    for pt in &points {
        *counts.entry(pt.kind).or_insert(0) += 1;
    }
    Ok(Inventory { points, counts, regrouping })
}

fn reduce_turn(t: Turns) -> Turns {
    t - Turns::from_integer(t.floor().to_integer())
}

fn r(n: u32, d: u32) -> Turns {
    Turns::new(n as i64, d as i64)
}

/// Angle θ_{m,n} of the preliminary vanishing path, in units of 2π.
pub fn theta(family: &Family, ell: u32, m: u32, n: u32) -> Turns {
    let (p, q) = (family.p, family.q);
    match family.kind {
        FamilyKind::Loop => r(m, p - 1) + r(n, q - 1),
        FamilyKind::Chain => r(m, p - 1) + r(p * n, (p - 1) * (q - 1)),
        FamilyKind::Bp => r(n * p + m * q, p * q - p - q) / Turns::from_integer(ell as i64),
    }
}

/// V0 cycles by decreasing θ (ties by m ascending), then the remaining cycles.
pub fn distinguished_order(family: &Family, ell: u32) -> Result<Vec<VanishingCycleId>> {
    let inv = critical_inventory(family, ell)?;
    let mut v0 = v0_indices(family, ell);
    v0.sort_by(|a, b| theta(family, ell, b.0, b.1).cmp(&theta(family, ell, a.0, a.1)).then(a.0.cmp(&b.0)));
    let mut order: Vec<VanishingCycleId> = v0.into_iter().map(|(m, n)| VanishingCycleId::V0(m, n)).collect();
    order.extend(inv.cycles().into_iter().filter(|c| !matches!(c, VanishingCycleId::V0(..))));
    Ok(order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindingData {
    pub entry: Turns,
    pub exit: Turns,
    pub winding: Turns,
}

/// Arguments at which V0(m, n) enters and leaves the cylinder it winds across.
pub fn winding(family: &Family, ell: u32, m: u32, n: u32) -> WindingData {
    let (p, q) = (family.p, family.q);
    let l = Turns::from_integer(ell as i64);
    let (entry, exit) = match family.kind {
        FamilyKind::Loop => (-l * r(n, q - 1), l * r(m, p - 1)),
        FamilyKind::Chain => (-l * r(m, p - 1), l * r(n, q - 1)),
        FamilyKind::Bp => (-l * r(n * (p - 1) + m, p * q - p - q), l * r(m * (q - 1) + n, p * q - p - q)),
    };
    WindingData { entry, exit, winding: exit - entry }
}

fn integers_between(a: Turns, b: Turns) -> usize {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    (hi.floor().to_integer() - lo.ceil().to_integer() + 1).max(0) as usize
}

/// Whether an endpoint of the argument interval lands on a multiple of 2π, so the
/// count depends on the closed-interval convention.
pub fn is_degenerate(family: &Family, ell: u32, a: VanishingCycleId, b: VanishingCycleId) -> bool {
    let (VanishingCycleId::V0(m, n), VanishingCycleId::V0(mm, nn)) = (a, b) else { return false };
    if a == b {
        return false;
    }
    let (wa, wb) = (winding(family, ell, m, n), winding(family, ell, mm, nn));
    (wa.entry - wb.entry).is_integer() || (wa.exit - wb.exit).is_integer()
}

/// Number of intersection points between two vanishing cycles.
pub fn intersection_count(family: &Family, ell: u32, a: VanishingCycleId, b: VanishingCycleId) -> usize {
    use VanishingCycleId::*;
    let (_, qq) = family.block_sizes(ell);
    match (a, b) {
        (V0(m, n), V0(mm, nn)) => {
            if a == b {
                return 1;
            }
            let (wa, wb) = (winding(family, ell, m, n), winding(family, ell, mm, nn));
            integers_between(wa.entry - wb.entry, wa.exit - wb.exit)
        }
        (V0(..), Vlambdamu(_)) | (Vlambdamu(_), V0(..)) => 1,
        (V0(m, _), Vmuw(t)) | (Vmuw(t), V0(m, _)) => usize::from(m == t),
        (V0(_, n), Vlambdaw(t)) | (Vlambdaw(t), V0(_, n)) => usize::from(n % qq == t),
        _ => usize::from(a == b),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub genus: u64,
    pub punctures: u64,
    pub rank_h1: u64,
    pub euler: i64,
}

/// Genus and punctures of the Milnor fibre; the rank of H₁ counts the vanishing
/// cycles with the ℓ exceptional-sphere cycles identified.
pub fn surface_invariants(family: &Family, ell: u32) -> Result<SurfaceInvariants> {
    family.check_index(ell)?;
    let (p, q, l) = (family.p as u64, family.q as u64, ell as u64);
    let exact = |num: u64, den: u64| -> Result<u64> {
        if num % den != 0 {
            return Err(MirrorError::InconsistentInvariants(format!("{num}/{den} is not an integer for {family} ℓ {ell}")));
        }
        Ok(num / den)
    };
    let (g_num, punctures, rank_h1) = match family.kind {
        FamilyKind::Loop => (
            (p * q - 1).checked_sub((l * (p - 1)).gcd(&(p + q - 2))),
            2 + (p - 1).gcd(&((p + q - 2) / l)),
            (p * q - 1) / l + 1,
        ),
        FamilyKind::Chain => (
            (p * q - p + l).checked_sub((l * q).gcd(&(p + q - 1))),
            1 + q.gcd(&((p + q - 1) / l)),
            p * (q - 1) / l + 1,
        ),
        FamilyKind::Bp => (
            (2 * l - 1 + (p - 1) * (q - 1)).checked_sub((l * q).gcd(&(p + q))),
            p.gcd(&((p + q) / l)),
            ((p - 1) * (q - 1) - 1) / l + 1,
        ),
    };
    let g_num = g_num.ok_or_else(|| MirrorError::InconsistentInvariants(format!("negative genus for {family} ℓ {ell}")))?;
    let genus = exact(g_num, 2 * l)?;
    let euler = 2 - 2 * genus as i64 - punctures as i64;
    if euler != 1 - rank_h1 as i64 {
        return Err(MirrorError::InconsistentInvariants(format!(
            "{family} ℓ {ell}: 2 − 2·{genus} − {punctures} ≠ 1 − {rank_h1}"
        )));
    }
    Ok(SurfaceInvariants { genus, punctures, rank_h1, euler })
}

/// B-side object and cohomological shift matched with a vanishing cycle.
pub fn object_match(family: &Family, v: VanishingCycleId) -> (ObjectId, i64) {
    let (p, q) = (family.p, family.q);
    match v {
        VanishingCycleId::V0(m, n) => (ObjectId::K0(p - 1 - m, q - 1 - n), 0),
        VanishingCycleId::Vmuw(m) => (ObjectId::Kx(p - 1 - m), 3),
        VanishingCycleId::Vlambdaw(n) => (ObjectId::Ky(q - 1 - n), 3),
        VanishingCycleId::Vlambdamu(r) => (ObjectId::Kw(r), 3),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub a: String,
    pub b: String,
    pub count_a: usize,
    pub dim_b: usize,
    #[serde(rename = "match")]
    pub matches: bool,
    pub degenerate_flag: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbReport {
    pub family: String,
    pub p: u32,
    pub q: u32,
    pub ell: u32,
    pub cycles: Vec<String>,
    pub pairs: Vec<PairRow>,
    pub invariants: SurfaceInvariants,
    pub regrouping: Option<String>,
}

impl AbReport {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(|r| r.matches)
    }

    pub fn mismatches(&self) -> Vec<&PairRow> {
        self.pairs.iter().filter(|r| !r.matches).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialises")
    }
}

/// Compares intersection counts along the distinguished order with the B-side
/// degree-0 Hom dimensions. Later-to-earlier pairs must have vanishing Hom.
pub fn compare_ab(family: &Family, ell: u32) -> Result<AbReport> {
    let inv = critical_inventory(family, ell)?;
    let order = distinguished_order(family, ell)?;
    let invariants = surface_invariants(family, ell)?;
    let (objects, dims) = crate::homcat::dims_table(family, ell, (0, 0))?;
    let index: BTreeMap<ObjectId, usize> = objects.iter().enumerate().map(|(i, o)| (*o, i)).collect();
    let mut pairs = Vec::new();
    for (ia, &a) in order.iter().enumerate() {
        for (ib, &b) in order.iter().enumerate() {
            let (s, t) = (index[&object_match(family, a).0], index[&object_match(family, b).0]);
            let dim_b = dims.get(&(s, t, 0)).copied().unwrap_or(0);
            let count_a = if ia <= ib { intersection_count(family, ell, a, b) } else { 0 };
            pairs.push(PairRow {
                a: a.to_string(),
                b: b.to_string(),
                count_a,
                dim_b,
                matches: count_a == dim_b,
                degenerate_flag: ia < ib && is_degenerate(family, ell, a, b),
            });
        }
    }
    Ok(AbReport {
        family: family.to_string(),
        p: family.p,
        q: family.q,
        ell,
        cycles: order.iter().map(|c| c.to_string()).collect(),
        pairs,
        invariants,
        regrouping: inv.regrouping,
    })
}

/// DOT rendering of the cycles with an edge for each nonzero count along the order.
pub fn incidence_dot(report: &AbReport) -> String {
    let mut s = format!("digraph \"{} ell {}\" {{\n", report.family, report.ell);
    for c in &report.cycles {
        s.push_str(&format!("  \"{c}\";\n"));
    }
    for row in report.pairs.iter().filter(|r| r.a != r.b && r.count_a > 0) {
        s.push_str(&format!("  \"{}\" -> \"{}\" [label=\"{}\"];\n", row.a, row.b, row.count_a));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests;
