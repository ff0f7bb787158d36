//! Exact arithmetic: cyclotomic scalars, the grading group L, graded
//! polynomials, presented graded modules and sparse row reduction.

pub mod grading;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod scalar;

pub use grading::{GradingGroup, LDegree};
pub use linalg::{kernel_basis, Echelon, SVec};
pub use module::{GradedModulePresentation, GradedPiece, GradedRing};
pub use poly::{GradedPolynomial, Monomial, Poly};
pub use scalar::{CycScalar, Q};

/// Monomials of degree l in the grading group L.
pub fn monomials_of_degree(group: &GradingGroup, l: LDegree) -> Vec<Monomial> {
    group.monomials_of_degree(l)
}

/// Basis slots of the degree-l piece of a presented module.
pub fn graded_piece_basis(m: &GradedModulePresentation, l: LDegree) -> GradedPiece {
    m.graded_piece(l)
}
