//! Invertible polynomials: classification into atoms, Berglund–Hübsch
//! transpose, weights, Milnor numbers, grading data, tilting length and the
//! FJRW state-space dimension.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{MirrorError, Result};
use crate::galg::{CycScalar, GradedRing, GradingGroup, LDegree, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentMatrix {
    pub entries: Vec<Vec<u32>>,
}

impl ExponentMatrix {
    pub fn new(entries: Vec<Vec<u32>>) -> Self {
        ExponentMatrix { entries }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n();
        ExponentMatrix { entries: (0..n).map(|i| (0..n).map(|j| self.entries[j][i]).collect()).collect() }
    }

    fn rational(&self) -> Vec<Vec<BigRational>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&a| BigRational::from_integer(BigInt::from(a))).collect())
            .collect()
    }

    /// Solve A·z = rhs over Q.
    fn solve(&self, rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
        let n = self.n();
        let mut m = self.rational();
        for (r, v) in m.iter_mut().zip(rhs) {
            r.push(v);
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x = &*x * &inv;
            }
            let prow = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, p) in row.iter_mut().zip(prow.iter()) {
                        *x -= &f * p;
                    }
                }
            }
        }
        Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
    }

    pub fn is_rationally_invertible(&self) -> bool {
        let n = self.n();
        self.solve(vec![BigRational::zero(); n]).is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Atom {
    Fermat { p: u32, var: usize },
    /// x_1^{p_1} x_2 + x_2^{p_2} x_3 + … + x_n^{p_n} x_1
    Loop { exps: Vec<u32>, vars: Vec<usize> },
    /// x_1^{p_1} x_2 + … + x_{n−1}^{p_{n−1}} x_n + x_n^{p_n}
    Chain { exps: Vec<u32>, vars: Vec<usize> },
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Atom::Fermat { p, var } => write!(f, "Fermat({p}) on x{var}"),
            Atom::Loop { exps, vars } => write!(f, "Loop({}) on {:?}", list(exps), vars),
            Atom::Chain { exps, vars } => write!(f, "Chain({}) on {:?}", list(exps), vars),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvertiblePolynomial {
    pub matrix: ExponentMatrix,
    pub atoms: Vec<Atom>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSystem {
    pub d: Vec<u64>,
    pub h: u64,
    pub d0: i64,
}

/// Two-variable atoms that carry the matrix factorisation machinery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    Loop,
    Chain,
    Bp,
}

/// w = x^p y + y^q x (loop), x^p y + y^q (chain), x^p + y^q (BP).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Family {
    pub kind: FamilyKind,
    pub p: u32,
    pub q: u32,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            FamilyKind::Loop => "loop",
            FamilyKind::Chain => "chain",
            FamilyKind::Bp => "bp",
        };
        write!(f, "{}({},{})", k, self.p, self.q)
    }
}

impl Family {
    pub fn new(kind: FamilyKind, p: u32, q: u32) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(MirrorError::NotInvertible(format!("exponents must be at least 2, got ({p},{q})")));
        }
        Ok(Family { kind, p, q })
    }

    pub fn loop_(p: u32, q: u32) -> Self {
        Family::new(FamilyKind::Loop, p, q).unwrap()
    }
    pub fn chain(p: u32, q: u32) -> Self {
        Family::new(FamilyKind::Chain, p, q).unwrap()
    }
    pub fn bp(p: u32, q: u32) -> Self {
        Family::new(FamilyKind::Bp, p, q).unwrap()
    }

    pub fn matrix(&self) -> ExponentMatrix {
        let (p, q) = (self.p, self.q);
        ExponentMatrix::new(match self.kind {
            FamilyKind::Loop => vec![vec![p, 1], vec![1, q]],
            FamilyKind::Chain => vec![vec![p, 1], vec![0, q]],
            FamilyKind::Bp => vec![vec![p, 0], vec![0, q]],
        })
    }

    pub fn polynomial(&self) -> InvertiblePolynomial {
        classify(&self.matrix()).expect("family templates are invertible")
    }

    pub fn w(&self) -> Poly {
        let (p, q) = (self.p, self.q);
        match self.kind {
            FamilyKind::Loop => Poly::monomial(p, 1).add(&Poly::monomial(1, q)),
            FamilyKind::Chain => Poly::monomial(p, 1).add(&Poly::monomial(0, q)),
            FamilyKind::Bp => Poly::monomial(p, 0).add(&Poly::monomial(0, q)),
        }
    }

    /// Largest admissible index.
    pub fn d_max(&self) -> u32 {
        let (p, q) = (self.p, self.q);
        match self.kind {
            FamilyKind::Loop => (p - 1).gcd(&(q - 1)),
            FamilyKind::Chain => p.gcd(&(q - 1)),
            FamilyKind::Bp => p.gcd(&q),
        }
    }

    pub fn check_index(&self, ell: u32) -> Result<()> {
        let d_max = self.d_max();
        if ell == 0 || d_max % ell != 0 {
            return Err(MirrorError::BadIndex { ell, d_max });
        }
        Ok(())
    }

    pub fn admissible_indices(&self) -> Vec<u32> {
        let d = self.d_max();
        (1..=d).filter(|l| d % l == 0).collect()
    }

    /// (P, Q) with the L-relation P·x⃗ = Q·y⃗.
    pub fn block_sizes(&self, ell: u32) -> (u32, u32) {
        let (p, q) = (self.p, self.q);
        match self.kind {
            FamilyKind::Loop => ((p - 1) / ell, (q - 1) / ell),
            FamilyKind::Chain => (p / ell, (q - 1) / ell),
            FamilyKind::Bp => (p / ell, q / ell),
        }
    }

    /// c⃗ = a·x⃗ + b·y⃗.
    pub fn c_coeffs(&self) -> (i64, i64) {
        match self.kind {
            FamilyKind::Loop | FamilyKind::Chain => (self.p as i64, 1),
            FamilyKind::Bp => (self.p as i64, 0),
        }
    }

    pub fn grading_group(&self, ell: u32) -> GradingGroup {
        let (a, b) = self.block_sizes(ell);
        GradingGroup::new(a as i64, b as i64)
    }

    pub fn ring(&self, ell: u32) -> GradedRing {
        let group = self.grading_group(ell);
        let (a, b) = self.c_coeffs();
        GradedRing { group, w: self.w(), c: group.deg(a, b), conductor: 2 * ell }
    }

    /// Number of basic objects of the family-specific collection.
    pub fn object_count(&self, ell: u32) -> u64 {
        let (p, q, l) = (self.p as u64, self.q as u64, ell as u64);
        match self.kind {
            FamilyKind::Loop => (p * q - 1) / l + l,
            FamilyKind::Chain => p * (q - 1) / l + l,
            FamilyKind::Bp => ((p - 1) * (q - 1) - 1) / l + l,
        }
    }

    /// The transpose as a 2-variable invertible polynomial.
    pub fn transpose_polynomial(&self) -> InvertiblePolynomial {
        transpose(&self.polynomial())
    }

    /// Factors w_1..w_ℓ of the potential.
    ///
    /// loop: w = xy·∏w_r, chain: w = y·∏w_r, BP: w = ∏w_r, with
    /// w_r = x^P − e^{πi/ℓ}η^r y^Q.
    pub fn w_factors(&self, ell: u32) -> Vec<Poly> {
        let (pp, qq) = self.block_sizes(ell);
        (1..=ell)
            .map(|r| {
                let coef = CycScalar::root_of_unity(2 * ell, 1 + 2 * r as i64);
                Poly::monomial(pp, 0).sub(&Poly::term(coef, 0, qq))
            })
            .collect()
    }

    /// The monomial u with u·∏w_r = w.
    pub fn w_cofactor(&self) -> Poly {
        match self.kind {
            FamilyKind::Loop => Poly::monomial(1, 1),
            FamilyKind::Chain => Poly::y(),
            FamilyKind::Bp => Poly::one(),
        }
    }
}

pub fn w_factors(family: &Family, ell: u32) -> Vec<Poly> {
    family.w_factors(ell)
}

/// Decompose an exponent matrix into Fermat, loop and chain atoms.
pub fn classify(matrix: &ExponentMatrix) -> Result<InvertiblePolynomial> {
    let n = matrix.n();
    let bad = |s: String| Err(MirrorError::NotInvertible(s));
    if n == 0 || matrix.entries.iter().any(|r| r.len() != n) {
        return bad("matrix must be square and nonempty".into());
    }
    // pivot variable and optional pointer of each row
    let mut pivot = vec![usize::MAX; n];
    let mut pointer: Vec<Option<usize>> = vec![None; n];
    let mut row_of_var = vec![usize::MAX; n];
    for (r, row) in matrix.entries.iter().enumerate() {
        let nz: Vec<(usize, u32)> = row.iter().cloned().enumerate().filter(|(_, a)| *a > 0).collect();
        let (v, ptr) = match nz.as_slice() {
            [] => return bad(format!("row {r} is zero")),
            [(v, a)] if *a >= 2 => (*v, None),
            [(_, _)] => return bad(format!("row {r} is linear")),
            [(v1, a1), (v2, a2)] => match (*a1, *a2) {
                (a, 1) if a >= 2 => (*v1, Some(*v2)),
                (1, b) if b >= 2 => (*v2, Some(*v1)),
                _ => return bad(format!("row {r} is not of the form x^a·y")),
            },
            _ => return bad(format!("row {r} has more than two variables")),
        };
        if row_of_var[v] != usize::MAX {
            return bad(format!("variable {v} is the leading variable of two rows"));
        }
        row_of_var[v] = r;
        pivot[r] = v;
        pointer[r] = ptr;
    }
    // pointer graph on variables: v → pointer(row_of_var[v])
    let next: Vec<Option<usize>> = (0..n).map(|v| pointer[row_of_var[v]]).collect();
    let mut indeg = vec![0usize; n];
    for t in next.iter().flatten() {
        indeg[*t] += 1;
    }
    if indeg.iter().any(|d| *d > 1) {
        return bad("a variable occurs in more than two monomials".into());
    }
    if !matrix.is_rationally_invertible() {
        return bad("matrix is singular".into());
    }
    let exp = |v: usize| matrix.entries[row_of_var[v]][v];
    let mut seen = vec![false; n];
    let mut atoms = Vec::new();
    // chains and Fermat atoms start at variables nobody points to
    for start in 0..n {
        if indeg[start] == 0 {
            let mut vars = vec![start];
            seen[start] = true;
            let mut cur = start;
            while let Some(nx) = next[cur] {
                vars.push(nx);
                seen[nx] = true;
                cur = nx;
            }
            if vars.len() == 1 {
                atoms.push(Atom::Fermat { p: exp(start), var: start });
            } else {
                atoms.push(Atom::Chain { exps: vars.iter().map(|v| exp(*v)).collect(), vars });
            }
        }
    }
    for start in 0..n {
        if !seen[start] {
            let mut vars = vec![start];
            seen[start] = true;
            let mut cur = next[start].unwrap();
            while cur != start {
                vars.push(cur);
                seen[cur] = true;
                cur = next[cur].unwrap();
            }
            if vars.len() == 1 {
                return bad("x^a·x is not allowed".into());
            }
            atoms.push(Atom::Loop { exps: vars.iter().map(|v| exp(*v)).collect(), vars });
        }
    }
    Ok(InvertiblePolynomial { matrix: matrix.clone(), atoms })
}

pub fn transpose(poly: &InvertiblePolynomial) -> InvertiblePolynomial {
    classify(&poly.matrix.transpose()).expect("transpose of an invertible polynomial is invertible")
}

impl InvertiblePolynomial {
    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    /// The 2-variable family this polynomial is (after renaming variables), if any.
    pub fn family(&self) -> Option<Family> {
        if self.n() != 2 {
            return None;
        }
        match self.atoms.as_slice() {
            [Atom::Loop { exps, vars }] => {
                let (p, q) = if vars[0] == 0 { (exps[0], exps[1]) } else { (exps[1], exps[0]) };
                Some(Family::loop_(p, q))
            }
            [Atom::Chain { exps, .. }] => Some(Family::chain(exps[0], exps[1])),
            [Atom::Fermat { p: a, var: va }, Atom::Fermat { p: b, .. }] => {
                let (p, q) = if *va == 0 { (*a, *b) } else { (*b, *a) };
                Some(Family::bp(p, q))
            }
            _ => None,
        }
    }

    /// Monomials of w as exponent vectors.
    pub fn monomials(&self) -> Vec<Vec<u32>> {
        self.matrix.entries.clone()
    }
}

impl fmt::Display for InvertiblePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "y", "z", "u", "v", "t", "s"];
        let var = |i: usize| names.get(i).map(|s| s.to_string()).unwrap_or(format!("x{i}"));
        let terms: Vec<String> = self
            .matrix
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, a)| **a > 0)
                    .map(|(i, a)| if *a == 1 { var(i) } else { format!("{}^{}", var(i), a) })
                    .collect::<Vec<_>>()
                    .join("")
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

pub fn weight_system(poly: &InvertiblePolynomial) -> WeightSystem {
    let n = poly.n();
    let sol = poly.matrix.solve(vec![BigRational::one(); n]).expect("invertible");
    // d = h·A^{-1}·1; clear denominators then make primitive
    let mut lcm = BigInt::one();
    for s in &sol {
        lcm = lcm.lcm(s.denom());
    }
    let mut d: Vec<BigInt> = sol.iter().map(|s| (s * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut h = lcm;
    let mut g = h.clone();
    for x in &d {
        g = g.gcd(x);
    }
    for x in d.iter_mut() {
        *x = &*x / &g;
    }
    h = &h / &g;
    let d: Vec<u64> = d.iter().map(|x| x.to_u64().expect("positive weight")).collect();
    let h = h.to_u64().unwrap();
    let d0 = h as i64 - d.iter().sum::<u64>() as i64;
    WeightSystem { d, h, d0 }
}

/// Π (h/d_i − 1).
pub fn milnor_closed_form(ws: &WeightSystem) -> u64 {
    let mut acc = BigRational::one();
    for &d in &ws.d {
        acc *= BigRational::new(BigInt::from(ws.h - d), BigInt::from(d));
    }
    assert!(acc.is_integer(), "Milnor closed form not integral");
    acc.to_integer().to_u64().unwrap()
}

/// Jacobian ring C[x]/(∂w) by graded pieces: returns (degree, monomial basis) pairs.
///
/// Each graded piece is the span of monomials of that weighted degree modulo
/// the multiples of the partial derivatives; the quotient basis consists of
/// the non-pivot monomials, scanning monomials in lex order.
pub fn jacobian_basis(poly: &InvertiblePolynomial) -> Vec<Vec<u32>> {
    let ws = weight_system(poly);
    let n = poly.n();
    let rows = poly.monomials();
    // ∂_i w as (coefficient, exponent) lists
    let partials: Vec<Vec<(i64, Vec<u32>)>> = (0..n)
        .map(|i| {
            rows.iter()
                .filter(|m| m[i] > 0)
                .map(|m| {
                    let mut e = m.clone();
                    e[i] -= 1;
                    (m[i] as i64, e)
                })
                .collect()
        })
        .collect();
    let wdeg = |e: &[u32]| -> u64 { e.iter().zip(&ws.d).map(|(a, d)| *a as u64 * d).sum() };
    let socle: u64 = ws.d.iter().map(|d| ws.h - 2 * d).sum();
    let mut basis = Vec::new();
    for deg in 0..=socle + ws.h {
        let monos = monomials_of_weight(&ws.d, deg);
        if monos.is_empty() {
            continue;
        }
        let index: BTreeMap<Vec<u32>, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut ech = crate::galg::Echelon::new();
        for (i, part) in partials.iter().enumerate() {
            let pd = ws.h - ws.d[i];
            if deg < pd {
                continue;
            }
            for m in monomials_of_weight(&ws.d, deg - pd) {
                let mut acc = BTreeMap::new();
                for (c, e) in part {
                    let prod: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                    debug_assert_eq!(wdeg(&prod), deg);
                    let e: &mut CycScalar = acc.entry(index[&prod]).or_default();
                    *e += &CycScalar::from_int(*c);
                }
                ech.insert(crate::galg::linalg::svec_from_map(acc));
            }
        }
        for (i, m) in monos.iter().enumerate() {
            if !ech.is_pivot(i) {
                basis.push(m.clone());
            }
        }
    }
    basis
}

fn monomials_of_weight(d: &[u64], deg: u64) -> Vec<Vec<u32>> {
    fn rec(d: &[u64], deg: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == d.len() {
            if deg == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = d[cur.len()];
        let mut a = 0u64;
        while a * w <= deg {
            cur.push(a as u32);
            rec(d, deg - a * w, cur, out);
            cur.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    rec(d, deg, &mut Vec::new(), &mut out);
    out
}

pub fn milnor_number(poly: &InvertiblePolynomial) -> Result<u64> {
    let closed = milnor_closed_form(&weight_system(poly));
    let oracle = jacobian_basis(poly).len() as u64;
    if closed != oracle {
        return Err(MirrorError::OracleMismatch { closed, oracle });
    }
    Ok(closed)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymmetryData {
    pub family: Family,
    pub d_max: u32,
    pub ell: u32,
    pub group: GradingGroup,
    /// c⃗ = a·x⃗ + b·y⃗
    pub c_coeffs: (i64, i64),
    pub c: LDegree,
    pub alpha: LDegree,
    pub torsion_order: i64,
    pub quotient_order: i64,
}

pub fn symmetry_data(family: &Family, ell: u32) -> Result<SymmetryData> {
    family.check_index(ell)?;
    let ring = family.ring(ell);
    let (a, b) = family.c_coeffs();
    Ok(SymmetryData {
        family: *family,
        d_max: family.d_max(),
        ell,
        group: ring.group,
        c_coeffs: (a, b),
        c: ring.c,
        alpha: ring.alpha(),
        torsion_order: ring.group.torsion,
        quotient_order: ring.group.quotient_order(a, b),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TiltingLength {
    pub length: u64,
    pub mu_transpose: u64,
    pub family_count: u64,
}

pub fn tilting_length(family: &Family, ell: u32) -> Result<TiltingLength> {
    family.check_index(ell)?;
    let mu = milnor_number(&family.transpose_polynomial())?;
    let l = ell as u64;
    assert_eq!((mu - 1) % l, 0, "ℓ must divide μ − 1");
    let length = (mu - 1) / l + l;
    let family_count = family.object_count(ell);
    assert_eq!(length, family_count, "tilting length vs family count for {family}, ℓ={ell}");
    Ok(TiltingLength { length, mu_transpose: mu, family_count })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FjrwSector {
    /// group element ξ^k
    pub k: u32,
    pub narrow: bool,
    pub dim: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FjrwDimension {
    pub total: u64,
    pub sectors: Vec<FjrwSector>,
    /// invariant Jacobian monomials x^a y^b (a ≡ b mod ℓ)
    pub invariant_monomials: Vec<(u32, u32)>,
}

/// State-space dimension of (w̌, μ_ℓ) with ξ·(x, y) = (ξx, ξ⁻¹y).
pub fn fjrw_dimension(poly_check: &InvertiblePolynomial, ell: u32) -> Result<FjrwDimension> {
    if poly_check.n() != 2 {
        return Err(MirrorError::NotInvertible("FJRW dimension needs two variables".into()));
    }
    let l = ell as i64;
    for m in poly_check.monomials() {
        if (m[0] as i64 - m[1] as i64).rem_euclid(l) != 0 {
            return Err(MirrorError::BadIndex { ell, d_max: 0 });
        }
    }
    let invariant: Vec<(u32, u32)> = jacobian_basis(poly_check)
        .into_iter()
        .filter(|m| (m[0] as i64 - m[1] as i64).rem_euclid(l) == 0)
        .map(|m| (m[0], m[1]))
        .collect();
    let mut sectors = vec![FjrwSector { k: 0, narrow: false, dim: invariant.len() as u64 }];
    for k in 1..ell {
        sectors.push(FjrwSector { k, narrow: true, dim: 1 });
    }
    let total = sectors.iter().map(|s| s.dim).sum();
    Ok(FjrwDimension { total, sectors, invariant_monomials: invariant })
}

/// Free part of the Gorenstein parameter (equals −d0).
pub fn gorenstein_free_part(family: &Family, ell: u32) -> Result<i64> {
    Ok(symmetry_data(family, ell)?.alpha.free)
}

/// Parse `loop:p,q`, `chain:p,q`, `bp:p,q` or an explicit matrix `[[..],[..]]`.
pub fn parse_polynomial(spec: &str) -> Result<InvertiblePolynomial> {
    let s = spec.trim();
    if s.starts_with('[') {
        let rows: Vec<Vec<u32>> =
            serde_json::from_str(s).map_err(|e| MirrorError::Parse(format!("bad matrix {s}: {e}")))?;
        return classify(&ExponentMatrix::new(rows));
    }
    Ok(parse_family(s)?.polynomial())
}

pub fn parse_family(spec: &str) -> Result<Family> {
    let s = spec.trim();
    let (kind, rest) = s.split_once(':').ok_or_else(|| MirrorError::Parse(format!("expected family:p,q, got {s}")))?;
    let kind = match kind {
        "loop" => FamilyKind::Loop,
        "chain" => FamilyKind::Chain,
        "bp" => FamilyKind::Bp,
        other => return Err(MirrorError::Parse(format!("unknown family {other}"))),
    };
    let nums: Vec<u32> = rest
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| MirrorError::Parse(format!("bad exponent in {s}"))))
        .collect::<Result<_>>()?;
    if nums.len() != 2 {
        return Err(MirrorError::Parse(format!("expected two exponents in {s}")));
    }
    Family::new(kind, nums[0], nums[1])
}

pub fn is_negative_or_x2y2(family: &Family, ell: u32) -> bool {
    let a = gorenstein_free_part(family, ell).unwrap();
    if family.kind == FamilyKind::Bp && family.p == 2 && family.q == 2 {
        a == 0
    } else {
        a.is_negative()
    }
}
