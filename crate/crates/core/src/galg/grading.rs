//! The rank-one abelian group L generated by x⃗ and y⃗ modulo a single
//! relation a·x⃗ = b·y⃗.
//!
//! Canonical form: L ≅ Z ⊕ Z/g with g = gcd(a, b). The free coordinate is the
//! weight functional (x⃗ ↦ b/g, y⃗ ↦ a/g); the torsion coordinate sends
//! x⃗ ↦ u, y⃗ ↦ −v where u·a/g + v·b/g = 1.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradingGroup {
    /// relation rel_x·x⃗ = rel_y·y⃗
    pub rel_x: i64,
    pub rel_y: i64,
    pub fx: i64,
    pub fy: i64,
    pub torsion: i64,
    tx: i64,
    ty: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LDegree {
    pub free: i64,
    pub tors: i64,
    pub modulus: i64,
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = ext_gcd(b, a.rem_euclid(b));
        (g, t, s - (a.div_euclid(b)) * t)
    }
}

impl GradingGroup {
    pub fn new(rel_x: i64, rel_y: i64) -> Self {
        assert!(rel_x > 0 && rel_y > 0, "relation coefficients must be positive");
        let (g, u, v) = ext_gcd(rel_x, rel_y);
        let (a1, b1) = (rel_x / g, rel_y / g);
        // u·rel_x + v·rel_y = g  ⇒  u·a1 + v·b1 = 1
        GradingGroup {
            rel_x,
            rel_y,
            fx: b1,
            fy: a1,
            torsion: g,
            tx: u.rem_euclid(g.max(1)),
            ty: (-v).rem_euclid(g.max(1)),
        }
    }

    pub fn zero(&self) -> LDegree {
        LDegree { free: 0, tors: 0, modulus: self.torsion }
    }

    /// The class of a·x⃗ + b·y⃗.
    pub fn deg(&self, a: i64, b: i64) -> LDegree {
        LDegree {
            free: a * self.fx + b * self.fy,
            tors: (a * self.tx + b * self.ty).rem_euclid(self.torsion),
            modulus: self.torsion,
        }
    }

    pub fn x(&self) -> LDegree {
        self.deg(1, 0)
    }

    pub fn y(&self) -> LDegree {
        self.deg(0, 1)
    }

    /// Canonicalize an arbitrary (free, torsion) pair.
    pub fn canon(&self, d: LDegree) -> LDegree {
        LDegree { free: d.free, tors: d.tors.rem_euclid(self.torsion), modulus: self.torsion }
    }

    /// All monomials x^a y^b of degree l, in lex order of (a, b).
    pub fn monomials_of_degree(&self, l: LDegree) -> Vec<(u32, u32)> {
        let l = self.canon(l);
        let mut out = Vec::new();
        if l.free < 0 {
            return out;
        }
        let mut a = 0i64;
        while a * self.fx <= l.free {
            let rest = l.free - a * self.fx;
            if rest % self.fy == 0 {
                let b = rest / self.fy;
                if self.deg(a, b) == l {
                    out.push((a as u32, b as u32));
                }
            }
            a += 1;
        }
        out
    }

    /// Order of L/Z·c for c given as a·x⃗ + b·y⃗: |det [[rel_x, −rel_y], [a, b]]|.
    pub fn quotient_order(&self, a: i64, b: i64) -> i64 {
        (self.rel_x * b + self.rel_y * a).abs()
    }
}

impl LDegree {
    pub fn scale(self, k: i64) -> LDegree {
        LDegree { free: self.free * k, tors: (self.tors * k).rem_euclid(self.modulus), modulus: self.modulus }
    }
}

impl Add for LDegree {
    type Output = LDegree;
    fn add(self, o: LDegree) -> LDegree {
        debug_assert_eq!(self.modulus, o.modulus);
        LDegree { free: self.free + o.free, tors: (self.tors + o.tors).rem_euclid(self.modulus), modulus: self.modulus }
    }
}

impl Sub for LDegree {
    type Output = LDegree;
    fn sub(self, o: LDegree) -> LDegree {
        self + (-o)
    }
}

impl Neg for LDegree {
    type Output = LDegree;
    fn neg(self) -> LDegree {
        LDegree { free: -self.free, tors: (-self.tors).rem_euclid(self.modulus), modulus: self.modulus }
    }
}

impl fmt::Display for LDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus > 1 {
            write!(f, "({}, {} mod {})", self.free, self.tors, self.modulus)
        } else {
            write!(f, "{}", self.free)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn relation_vanishes() {
        for (a, b) in [(2, 1), (3, 3), (6, 6), (4, 6), (1, 1), (2, 4)] {
            let g = GradingGroup::new(a, b);
            assert_eq!(g.deg(a, -b), g.zero(), "relation {a}x = {b}y");
            assert_eq!(g.torsion, num_integer::gcd(a, b));
        }
    }

    #[test]
    fn injective_on_small_box() {
        // distinct classes modulo the relation stay distinct
        let g = GradingGroup::new(4, 6);
        for a in -6..6i64 {
            for b in -6..6i64 {
                for c in -6..6i64 {
                    for d in -6..6i64 {
                        let same = g.deg(a, b) == g.deg(c, d);
                        // (a−c, b−d) must be a multiple of (4, −6)
                        let (da, db) = (a - c, b - d);
                        let mult = da % 4 == 0 && db % 6 == 0 && da / 4 == -db / 6;
                        assert_eq!(same, mult, "{a},{b} vs {c},{d}");
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_enumeration() {
        let g = GradingGroup::new(1, 1); // loop(3,3;2): x⃗ = y⃗
        assert_eq!(g.monomials_of_degree(g.deg(2, 0)), vec![(0, 2), (1, 1), (2, 0)]);
        let g = GradingGroup::new(2, 1); // loop(5,3;2): 2x⃗ = y⃗
        assert_eq!(g.monomials_of_degree(g.deg(2, 0)), vec![(0, 1), (2, 0)]);
        assert_eq!(g.monomials_of_degree(g.zero()), vec![(0, 0)]);
        let g = GradingGroup::new(6, 6);
        assert_eq!(g.torsion, 6);
        assert_eq!(g.monomials_of_degree(g.deg(1, 1)), vec![(1, 1)]);
    }

    proptest! {
        #[test]
        fn canon_idempotent_and_additive(ra in 1i64..8, rb in 1i64..8, a in -20i64..20, b in -20i64..20, c in -20i64..20, d in -20i64..20) {
            let g = GradingGroup::new(ra, rb);
            let x = g.deg(a, b);
            prop_assert_eq!(g.canon(g.canon(x)), g.canon(x));
            prop_assert_eq!(g.deg(a, b) + g.deg(c, d), g.deg(a + c, b + d));
            prop_assert_eq!(g.deg(a + ra, b - rb), g.deg(a, b));
        }

        #[test]
        fn monomials_have_the_degree(ra in 1i64..6, rb in 1i64..6, a in 0i64..10, b in 0i64..10) {
            let g = GradingGroup::new(ra, rb);
            let l = g.deg(a, b);
            let ms = g.monomials_of_degree(l);
            prop_assert!(ms.contains(&(a as u32, b as u32)));
            for (u, v) in ms {
                prop_assert_eq!(g.deg(u as i64, v as i64), l);
            }
        }
    }
}
