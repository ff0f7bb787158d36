//! Exact scalars in the cyclotomic field Q(ζ_n).
//!
//! Elements are stored as rational coefficient vectors reduced modulo the
//! n-th cyclotomic polynomial. Rational numbers are kept with conductor 1 so
//! that they combine with elements of any field.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::MirrorError;

pub type Q = BigRational;

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1);
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_poly(d);
            num = int_poly_div_exact(&num, &den);
        }
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

fn int_poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    assert!(lead == 1);
    let qlen = rem.len() - dd;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &di) in den.iter().enumerate() {
                rem[k + i] -= c * di;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// An element of Q(ζ_n).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    n: u32,
    c: Vec<Q>,
}

impl CycScalar {
    pub fn zero() -> Self {
        CycScalar { n: 1, c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_q(Q::from_integer(BigInt::from(k)))
    }

    pub fn from_q(q: Q) -> Self {
        let mut s = CycScalar { n: 1, c: vec![q] };
        s.trim();
        s
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_q(Q::new(BigInt::from(num), BigInt::from(den)))
    }

    /// ζ_n^k for the primitive root ζ_n = e^{2πi/n}.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let k = k.rem_euclid(n as i64) as usize;
        let mut c = vec![Q::zero(); k + 1];
        c[k] = Q::one();
        Self::reduced(n, c)
    }

    fn reduced(n: u32, mut c: Vec<Q>) -> Self {
        if n > 1 {
            let phi = cyclotomic_poly(n);
            let d = phi.len() - 1;
            while c.len() > d {
                let top = c.pop().unwrap();
                if !top.is_zero() {
                    let base = c.len() - d;
                    for (i, &pi) in phi.iter().take(d).enumerate() {
                        if pi != 0 {
                            c[base + i] -= &top * Q::from_integer(BigInt::from(pi));
                        }
                    }
                }
            }
        }
        let mut s = CycScalar { n, c };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.c.last().map_or(false, |x| x.is_zero()) {
            self.c.pop();
        }
        if self.c.len() <= 1 {
            self.n = 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coefficients(&self) -> &[Q] {
        &self.c
    }

    /// Rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Q> {
        match self.c.len() {
            0 => Some(Q::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    fn common(a: u32, b: u32) -> u32 {
        if a == 1 {
            b
        } else if b == 1 || a == b {
            a
        } else {
            panic!("mixing cyclotomic conductors {a} and {b}")
        }
    }

    pub fn scale(&self, q: &Q) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        CycScalar { n: self.n, c: self.c.iter().map(|x| x * q).collect() }
    }

    pub fn inv(&self) -> Result<Self, MirrorError> {
        if self.is_zero() {
            return Err(MirrorError::DivisionByZero);
        }
        if self.c.len() == 1 {
            return Ok(Self::from_q(self.c[0].recip()));
        }
        // solve a·z = 1 using the multiplication matrix of a
        let n = self.n;
        let d = euler_phi(n);
        let mut cols: Vec<Vec<Q>> = Vec::with_capacity(d);
        for k in 0..d {
            let prod = self * &Self::root_of_unity(n, k as i64);
            let mut v = prod.c.clone();
            v.resize(d, Q::zero());
            cols.push(v);
        }
        let mut rhs = vec![Q::zero(); d];
        rhs[0] = Q::one();
        let z = dense_solve(cols, rhs).ok_or(MirrorError::DivisionByZero)?;
        Ok(Self::reduced(n, z))
    }

    /// Integer coefficient vector, if all coefficients are integral.
    pub fn integer_coefficients(&self) -> Option<Vec<i64>> {
        self.c
            .iter()
            .map(|q| if q.is_integer() { q.to_integer().to_i64() } else { None })
            .collect()
    }

    /// Coefficients as strings, used by JSON reports.
    pub fn to_strings(&self) -> Vec<String> {
        self.c.iter().map(|q| q.to_string()).collect()
    }
}

/// Solve the square system given by its columns. Small dense Gaussian elimination.
fn dense_solve(cols: Vec<Vec<Q>>, rhs: Vec<Q>) -> Option<Vec<Q>> {
    let d = rhs.len();
    let mut m: Vec<Vec<Q>> = (0..d)
        .map(|r| {
            let mut row: Vec<Q> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    for col in 0..d {
        let piv = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

impl Default for CycScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, o: &CycScalar) -> CycScalar {
        let n = CycScalar::common(self.n, o.n);
        let len = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(len);
        for i in 0..len {
            match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => c.push(a + b),
                (Some(a), None) => c.push(a.clone()),
                (None, Some(b)) => c.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        let mut s = CycScalar { n, c };
        s.trim();
        s
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, o: &CycScalar) -> CycScalar {
        self + &(-o)
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, o: &CycScalar) -> CycScalar {
        if self.is_zero() || o.is_zero() {
            return CycScalar::zero();
        }
        let n = CycScalar::common(self.n, o.n);
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        CycScalar::reduced(n, c)
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl Add for CycScalar {
    type Output = CycScalar;
    fn add(self, o: CycScalar) -> CycScalar {
        &self + &o
    }
}

impl Sub for CycScalar {
    type Output = CycScalar;
    fn sub(self, o: CycScalar) -> CycScalar {
        &self - &o
    }
}

impl Mul for CycScalar {
    type Output = CycScalar;
    fn mul(self, o: CycScalar) -> CycScalar {
        &self * &o
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, o: &CycScalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, o: &CycScalar) {
        *self = &*self - o;
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if q.is_negative() { " - " } else { " + " })?;
            } else if q.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = q.abs();
            match k {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if k == 1 {
                        write!(f, "z{}", self.n)?
                    } else {
                        write!(f, "z{}^{}", self.n, k)?
                    }
                }
            }
        }
        Ok(())
    }
}

/// Serialized as conductor plus coefficient strings ("p/q").
#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    n: u32,
    c: Vec<String>,
}

impl Serialize for CycScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarRepr { n: self.n, c: self.to_strings() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(d)?;
        let mut c = Vec::with_capacity(r.c.len());
        for s in &r.c {
            let q: Q = s.parse().map_err(|_| serde::de::Error::custom(format!("bad rational {s}")))?;
            c.push(q);
        }
        Ok(CycScalar::reduced(r.n.max(1), c))
    }
}

/// e^{πi/ℓ} inside Q(ζ_{2ℓ}).
pub fn half_turn_root(ell: u32) -> CycScalar {
    CycScalar::root_of_unity(2 * ell, 1)
}

/// η = e^{2πi/ℓ} inside Q(ζ_{2ℓ}).
pub fn eta(ell: u32) -> CycScalar {
    CycScalar::root_of_unity(2 * ell, 2)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(16), 8);
    }

    #[test]
    fn roots_of_unity_orders() {
        for ell in 1..=8u32 {
            let e = eta(ell);
            let mut acc = CycScalar::one();
            for _ in 0..ell {
                acc = &acc * &e;
            }
            assert!(acc.is_one(), "eta^ell for ell={ell}");
            let h = half_turn_root(ell);
            let mut acc = CycScalar::one();
            for _ in 0..ell {
                acc = &acc * &h;
            }
            assert_eq!(acc, CycScalar::from_int(-1));
        }
    }

    #[test]
    fn gaussian_integers() {
        let i = CycScalar::root_of_unity(4, 1);
        let a = &CycScalar::one() + &i;
        let b = &CycScalar::one() - &i;
        assert_eq!(&a * &b, CycScalar::from_int(2));
    }

    #[test]
    fn inverses() {
        for n in [3u32, 4, 8, 10, 12] {
            let z = CycScalar::root_of_unity(n, 1);
            let a = &(&CycScalar::from_int(2) + &z) + &(&z * &z);
            let ai = a.inv().unwrap();
            assert!((&a * &ai).is_one());
        }
        assert!(CycScalar::zero().inv().is_err());
    }

    #[test]
    fn serde_roundtrip() {
        let z = &CycScalar::root_of_unity(6, 1) + &CycScalar::from_frac(3, 7);
        let s = serde_json::to_string(&z).unwrap();
        let back: CycScalar = serde_json::from_str(&s).unwrap();
        assert_eq!(z, back);
    }
}
