//! Monomial orders, Buchberger's algorithm, the generating set Λ_M of `J_M`
//! and Gröbner fan traversal.

mod initial;
mod lambda;
mod order;
mod reduce;
mod traverse;

pub use initial::{groebner_cone, initial_form, initial_ideal_w, integral_weight, marked_basis, weight_order, MarkedPoly};
pub use lambda::{generic_weight, set_weight, set_weight_q, structured_orders, universal_gb_probe, LambdaSet, UgbReport};
pub use order::{MonomialOrder, Tiebreak};
pub use reduce::{buchberger, divide, first_bad_pair, in_ideal, is_groebner, reduced_groebner_basis, remainder, s_polynomial};
pub use traverse::{traverse, BuchbergerOracle, Cell, CellOracle, LambdaOracle, Traversal, TRAVERSAL_VAR_LIMIT};
