//! Inverse systems: catalecticant matrices, Hilbert vectors of `Q/Ann F` and
//! `Q/J_M`, Poincaré pairings and the comparison of `Ann Φ_M` with `J_M`.

mod compare;
mod hilbert;
mod oracle;
mod quotient;

pub use compare::{ann_equals_jm, catalecticant_rank_lemma, inverse_report, AnnJmComparison, InverseReport, RankLemmaCheck};
pub use hilbert::{gaussian_binomial, HilbertVector};
pub use oracle::{ann_generators, AnnOracle};
pub use quotient::{
    ann_hilbert, is_gorenstein, jm_hilbert, poincare_pairing_ranks, Catalecticant, GradedQuotient, IdealKind, PairingRank,
};
