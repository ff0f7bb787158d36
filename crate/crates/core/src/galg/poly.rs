//! Polynomials in x, y with cyclotomic coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::grading::{GradingGroup, LDegree};
use super::scalar::CycScalar;

pub type Monomial = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Poly {
    #[serde(with = "term_list")]
    terms: BTreeMap<Monomial, CycScalar>,
}

/// Terms serialise as a list of ([a, b], scalar) pairs.
mod term_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<Monomial, CycScalar>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(m.iter())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Monomial, CycScalar>, D::Error> {
        let v: Vec<(Monomial, CycScalar)> = Vec::deserialize(d)?;
        Ok(v.into_iter().collect())
    }
}

pub type GradedPolynomial = Poly;

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: CycScalar) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(CycScalar::one())
    }

    pub fn monomial(a: u32, b: u32) -> Self {
        Self::term(CycScalar::one(), a, b)
    }

    pub fn term(c: CycScalar, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Poly { terms }
    }

    pub fn x() -> Self {
        Self::monomial(1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Monomial) -> CycScalar {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c);
        }
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, s: &CycScalar) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::zero();
        for ((a, b), c) in &self.terms {
            for ((u, v), d) in &o.terms {
                r.add_term((a + u, b + v), &(c * d));
            }
        }
        r
    }

    pub fn mul_monomial(&self, m: Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|((a, b), c)| ((a + m.0, b + m.1), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut r = Poly::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Exact division by a monomial, if every term is divisible.
    pub fn div_monomial(&self, m: Monomial) -> Option<Poly> {
        let mut terms = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            if *a < m.0 || *b < m.1 {
                return None;
            }
            terms.insert((a - m.0, b - m.1), c.clone());
        }
        Some(Poly { terms })
    }

    /// Degree if the polynomial is nonzero and L-homogeneous.
    pub fn degree(&self, g: &GradingGroup) -> Option<LDegree> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let d = g.deg(first.0 as i64, first.1 as i64);
        for m in it {
            if g.deg(m.0 as i64, m.1 as i64) != d {
                return None;
            }
        }
        Some(d)
    }

    pub fn is_homogeneous_of(&self, g: &GradingGroup, d: LDegree) -> bool {
        self.terms.keys().all(|m| g.deg(m.0 as i64, m.1 as i64) == g.canon(d))
    }

    /// Partial derivatives with respect to x and y.
    pub fn dx(&self) -> Poly {
        let mut r = Poly::zero();
        for ((a, b), c) in &self.terms {
            if *a > 0 {
                r.add_term((a - 1, *b), &c.scale(&super::scalar::Q::from_integer((*a).into())));
            }
        }
        r
    }

    pub fn dy(&self) -> Poly {
        let mut r = Poly::zero();
        for ((a, b), c) in &self.terms {
            if *b > 0 {
                r.add_term((*a, b - 1), &c.scale(&super::scalar::Q::from_integer((*b).into())));
            }
        }
        r
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match (a, b) {
                (0, 0) => String::new(),
                _ => {
                    let mut s = String::new();
                    if *a > 0 {
                        s.push('x');
                        if *a > 1 {
                            s.push_str(&format!("^{a}"));
                        }
                    }
                    if *b > 0 {
                        s.push('y');
                        if *b > 1 {
                            s.push_str(&format!("^{b}"));
                        }
                    }
                    s
                }
            };
            if mono.is_empty() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", mono)?;
            } else if *c == CycScalar::from_int(-1) {
                write!(f, "-{}", mono)?;
            } else {
                write!(f, "({})*{}", c, mono)?;
            }
        }
        Ok(())
    }
}
