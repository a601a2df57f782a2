//! Exact computations with the Gorenstein algebras attached to matroids:
//! inverse systems, Lefschetz and Sperner checks, Gröbner fans and tropical
//! hypersurfaces.

pub mod builtins;
pub mod error;
pub mod field;
pub mod groebner;
pub mod inverse;
pub mod lattice;
pub mod lefschetz;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod polyhedral;
pub mod set;

pub use error::{Error, Result};
pub use matroid::{Matroid, MatroidSpec};
pub use set::ElemSet;
