//! Gröbner bases, finite-dimensional quotient rings and the exact linear
//! algebra used to read off their structure.

mod buchberger;
mod eigen;
pub mod linalg;
mod quotient;

pub use buchberger::{buchberger, GroebnerBasis};
pub use eigen::{factor_over_candidates, standard_candidates, EigenReport, UniPoly};
pub use linalg::{char_poly, kernel_rank, Matrix, Vector};
pub use quotient::{staircase_basis, QuotientRing};

use crate::poly::Poly;

/// Normal form of `p` modulo `gb`.
pub fn normal_form(p: &Poly, gb: &GroebnerBasis) -> Poly {
    gb.normal_form(p)
}

/// Matrix of multiplication by `v` on `ring`.
pub fn mult_matrix(ring: &QuotientRing, v: crate::poly::Var) -> Matrix {
    ring.mult_matrix(v).clone()
}
