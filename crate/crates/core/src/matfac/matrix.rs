//! Dense matrices of polynomials.

use crate::galg::{CycScalar, Poly};

pub type PolyMatrix = Vec<Vec<Poly>>;

pub fn zeros(rows: usize, cols: usize) -> PolyMatrix {
    vec![vec![Poly::zero(); cols]; rows]
}

pub fn scalar_identity(n: usize, f: &Poly) -> PolyMatrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.clone();
    }
    m
}

pub fn cols(m: &PolyMatrix) -> usize {
    m.first().map_or(0, |r| r.len())
}

pub fn mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let (n, k, m) = (a.len(), b.len(), cols(b));
    assert!(a.iter().all(|r| r.len() == k), "inner dimensions differ");
    let mut out = zeros(n, m);
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[t][j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][t].mul(&b[t][j]));
                }
            }
        }
    }
    out
}

pub fn neg(a: &PolyMatrix) -> PolyMatrix {
    a.iter().map(|r| r.iter().map(|p| p.neg()).collect()).collect()
}

pub fn add(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(p, q)| p.add(q)).collect()).collect()
}

pub fn scale(a: &PolyMatrix, s: &CycScalar) -> PolyMatrix {
    a.iter().map(|r| r.iter().map(|p| p.scale(s)).collect()).collect()
}

pub fn is_zero(a: &PolyMatrix) -> bool {
    a.iter().all(|r| r.iter().all(|p| p.is_zero()))
}

pub fn transpose(a: &PolyMatrix) -> PolyMatrix {
    let (n, m) = (a.len(), cols(a));
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

/// 2×2 block matrix [[a, b], [c, d]].
pub fn block(a: &PolyMatrix, b: &PolyMatrix, c: &PolyMatrix, d: &PolyMatrix) -> PolyMatrix {
    let mut out: PolyMatrix = a.iter().zip(b).map(|(r, s)| r.iter().chain(s).cloned().collect()).collect();
    out.extend(c.iter().zip(d).map(|(r, s)| r.iter().chain(s).cloned().collect()));
    out
}

/// Determinant by dynamic programming over column subsets (division free).
pub fn det(m: &PolyMatrix) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "square matrix expected");
    // dp[mask] = signed sum over bijections rows 0..|mask| → mask
    let mut dp = vec![Poly::zero(); 1 << n];
    dp[0] = Poly::one();
    for mask in 0usize..(1 << n) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for col in 0..n {
            if mask & (1 << col) != 0 || m[row][col].is_zero() {
                continue;
            }
            // sign: parity of columns already used that lie to the right of col
            let above = (mask >> (col + 1)).count_ones();
            let term = dp[mask].mul(&m[row][col]);
            let next = mask | (1 << col);
            dp[next] = if above % 2 == 0 { dp[next].add(&term) } else { dp[next].sub(&term) };
        }
    }
    dp[(1 << n) - 1].clone()
}

fn minor(m: &PolyMatrix, skip_r: usize, skip_c: usize) -> PolyMatrix {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_r)
        .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| *j != skip_c).map(|(_, p)| p.clone()).collect())
        .collect()
}

/// Classical adjugate: Adj(M)_{ij} = (−1)^{i+j} det(M with row j and column i removed).
pub fn adjugate(m: &PolyMatrix) -> PolyMatrix {
    let n = m.len();
    if n == 1 {
        return vec![vec![Poly::one()]];
    }
    let mut out = zeros(n, n);
    for (i, row) in out.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            let d = det(&minor(m, j, i));
            *e = if (i + j) % 2 == 0 { d } else { d.neg() };
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: u32, b: u32) -> Poly {
        Poly::monomial(a, b)
    }

    #[test]
    fn small_adjugates() {
        let one = vec![vec![p(2, 1)]];
        assert_eq!(adjugate(&one), vec![vec![Poly::one()]]);
        let (a, b, c, d) = (p(1, 0), p(0, 1), p(2, 0), p(0, 2));
        let m = vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]];
        assert_eq!(adjugate(&m), vec![vec![d, b.neg()], vec![c.neg(), a]]);
    }

    #[test]
    fn adjugate_identity() {
        let m = vec![
            vec![p(0, 1), Poly::zero(), p(1, 1)],
            vec![p(2, 0).neg(), p(0, 1), Poly::zero()],
            vec![Poly::zero(), p(2, 0).neg(), p(1, 1)],
        ];
        let d = det(&m);
        assert_eq!(d, p(5, 1).add(&p(1, 3)));
        assert_eq!(mul(&m, &adjugate(&m)), scalar_identity(3, &d));
        assert_eq!(mul(&adjugate(&m), &m), scalar_identity(3, &d));
    }

    #[test]
    fn permutation_sign() {
        let m = vec![vec![Poly::zero(), Poly::one()], vec![Poly::one(), Poly::zero()]];
        assert_eq!(det(&m), Poly::one().neg());
    }
}
