//! The lattice of flats, ranked posets and two independent Sperner checks.

mod flats;
mod poset;
mod raising;

pub use flats::{FlatLattice, LatticePredicates};
pub use poset::{Antichain, RankedPoset, SpernerCheck, ANTICHAIN_LIMIT};
pub use raising::{order_raising_maps, raising_matrix, RaisingMap, RaisingReport, RANDOM_FALLBACKS};
