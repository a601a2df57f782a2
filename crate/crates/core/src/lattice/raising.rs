//! Order-raising maps between the levels of `L(M)` given by multiplication
//! with a linear form in `Q/J_M`.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::flats::FlatLattice;
use crate::error::{Error, Result};
use crate::inverse::{ann_hilbert, jm_hilbert, GradedQuotient, HilbertVector};
use crate::linalg::{q, rank, QMatrix};
use crate::matroid::Matroid;
use crate::poly::phi;

/// Number of random linear forms tried after the all-ones form fails.
pub const RANDOM_FALLBACKS: u64 = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaisingMap {
    /// Source level `i`; the map goes from level `i` to level `i+1`.
    pub level: usize,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub full_rank: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RaisingReport {
    /// Coefficients `a_e` of the form that was finally used.
    pub coefficients: Vec<String>,
    pub attempts: usize,
    pub maps: Vec<RaisingMap>,
    /// Nonzero entries only on cover relations `u < v`.
    pub support_ok: bool,
    /// Agrees with multiplication in `Q/J_M` computed independently.
    pub matches_quotient: bool,
    pub unimodal: bool,
    pub certificate: bool,
    #[serde(skip)]
    pub matrices: Vec<QMatrix>,
}

/// Matrix of `×L` from level `i` to level `i+1` in the flat basis: the entry
/// at `(v, u)` is `Σ_{e ∈ v∖u} a_e` when `v` covers `u`.
pub fn raising_matrix(lat: &FlatLattice, a: &[BigRational], i: usize) -> QMatrix {
    let (src, dst) = (lat.level(i), lat.level(i + 1));
    let mut out = vec![vec![BigRational::zero(); src.len()]; dst.len()];
    for (col, &u) in src.iter().enumerate() {
        for (row, &v) in dst.iter().enumerate() {
            if lat.covers(u).contains(&v) {
                let diff = lat.flat(v) - lat.flat(u);
                out[row][col] = diff.iter().fold(BigRational::zero(), |s, e| s + &a[e]);
            }
        }
    }
    out
}

fn evaluate(m: &Matroid, lat: &FlatLattice, jm: &GradedQuotient, a: &[BigRational]) -> RaisingReport {
    let r = m.rank_total();
    let mut maps = Vec::new();
    let mut matrices = Vec::new();
    let mut matches = true;
    for i in 0..r {
        let mat = raising_matrix(lat, a, i);
        matches &= jm.multiplication_matrix(i, a) == mat;
        let rk = if mat.is_empty() || mat[0].is_empty() { 0 } else { rank(&mat) };
        let (rows, cols) = (lat.level(i + 1).len(), lat.level(i).len());
        maps.push(RaisingMap { level: i, rows, cols, rank: rk, full_rank: rk == rows.min(cols) });
        matrices.push(mat);
    }
    // a nonzero entry off the cover relation is impossible by construction;
    // it is verified against the strict order anyway
    let above = lat.poset().strictly_above();
    let support_ok = (0..r).all(|i| {
        lat.level(i).iter().enumerate().all(|(c, &u)| {
            lat.level(i + 1).iter().enumerate().all(|(rw, &v)| matrices[i][rw][c].is_zero() || above[u].contains(v))
        })
    });
    let unimodal = HilbertVector::new(lat.level_sizes()).is_unimodal();
    let certificate = support_ok && unimodal && maps.iter().all(|m| m.full_rank);
    RaisingReport {
        coefficients: a.iter().map(ToString::to_string).collect(),
        attempts: 1,
        maps,
        support_ok,
        matches_quotient: matches,
        unimodal,
        certificate,
        matrices,
    }
}

/// Order-raising maps for `L = Σ a_e X_e`, all-ones by default, retried with
/// up to [`RANDOM_FALLBACKS`] random forms while some map is rank deficient.
/// Requires `Ann Φ_M = J_M` so that the quotient basis is indexed by flats.
pub fn order_raising_maps(m: &Matroid, coeffs: Option<&[BigRational]>, seed: u64) -> Result<RaisingReport> {
    let (ha, hj) = (ann_hilbert(&phi(m))?, jm_hilbert(m)?);
    if ha != hj {
        return Err(Error::DimensionMismatch(format!("Q/Ann has Hilbert vector {ha}, Q/J_M has {hj}")));
    }
    let lat = FlatLattice::new(m)?;
    let jm = GradedQuotient::jm(m)?;
    if let Some(a) = coeffs {
        if a.len() != m.size() {
            return Err(Error::InvalidInput(format!("{} coefficients for {} elements", a.len(), m.size())));
        }
        return Ok(evaluate(m, &lat, &jm, a));
    }
    let mut report = evaluate(m, &lat, &jm, &vec![q(1); m.size()]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 1;
    while !report.certificate && attempts <= RANDOM_FALLBACKS as usize {
        let a: Vec<BigRational> = (0..m.size()).map(|_| q(rng.gen_range(-99..=99))).collect();
        report = evaluate(m, &lat, &jm, &a);
        attempts += 1;
    }
    report.attempts = attempts;
    Ok(report)
}
