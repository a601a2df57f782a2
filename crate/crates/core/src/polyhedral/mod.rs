//! Exact polyhedral geometry: cones, fans, linear programming, matroid
//! polytopes, tropical hypersurfaces and the Gröbner fan of `J_M`.

mod bits;
mod cone;
mod fan;
mod gfan;
mod lp;
mod polytope;
mod tropical;

pub use bits::Bits;
pub use cone::{double_description, ivec, Facet, Generators, IVec, RationalCone};
pub use fan::{ones, Fan, FanCounts, FanJson};
pub use gfan::{
    hypersurf_identities, jm_fan, jm_fan_by_chambers, phi_fan, walls, HypersurfIdentities, Wall, ARRANGEMENT_LIMIT,
    JM_FAN_LIMIT,
};
pub use lp::{Lp, LpOutcome};
pub use polytope::{incidence, EdmondsCheck, MatroidPolytope};
pub use tropical::{
    normal_fan, support_function_check, support_vectors, trop, trop_nonsmooth, tropical_hypersurface, SupportCheck,
};
