//! Multilinear polynomials on the P side, sparse polynomials on the Q side,
//! the differential action between them and higher Hessians.

mod general;
mod hessian;
mod monomial;
mod squarefree;
mod text;

pub use general::{DiffPoly, Poly};
pub use hessian::{
    bareiss_det, hessian_det_at, hessian_det_symbolic, hessian_matrix, MAX_DIFF_DEGREE,
    MAX_SYMBOLIC_HESSIAN,
};
pub use monomial::Monomial;
pub use squarefree::{apply_diff, f_tau, phi, phi_level, SquareFreePoly};
pub use text::{parse_poly, parse_squarefree};
