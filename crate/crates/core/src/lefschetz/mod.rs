//! Strong Lefschetz checks for `A_M = Q/Ann Φ_M` (and `Q/J_M`): ranks of the
//! maps `×L^{D−2i}` and Watanabe's Hessian criterion.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::inverse::{GradedQuotient, IdealKind};
use crate::linalg::{mat_mul, q, rank, QMatrix};
use crate::matroid::Matroid;
use crate::poly::{
    apply_diff, hessian_det_at, hessian_det_symbolic, phi, DiffPoly, Monomial, Poly, SquareFreePoly,
    MAX_SYMBOLIC_HESSIAN,
};
use crate::set::ElemSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzLevel {
    pub i: usize,
    pub dim_i: usize,
    pub dim_dual: usize,
    /// Rank of `×L^{D−2i}: A_i → A_{D−i}`.
    pub rank: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HessianValue {
    pub d: usize,
    /// The degree-`d` monomial basis the Hessian is taken over.
    pub basis: Vec<String>,
    pub value: String,
    pub nonzero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzReport {
    pub method: String,
    pub ideal: IdealKind,
    pub coefficients: Vec<String>,
    pub top_degree: usize,
    pub levels: Vec<LefschetzLevel>,
    /// `F(a)`, Hessian method only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_value: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub hessians: Vec<HessianValue>,
    pub pass: bool,
}

fn linear_form(a: &[BigRational]) -> Poly {
    Poly::from_terms(a.iter().enumerate().map(|(e, c)| (Monomial::var(e), c.clone())))
}

fn strings(a: &[BigRational]) -> Vec<String> {
    a.iter().map(ToString::to_string).collect()
}

fn check_len(m: &Matroid, a: &[BigRational]) -> Result<()> {
    if a.len() != m.size() {
        return Err(Error::InvalidInput(format!("{} coefficients for {} elements", a.len(), m.size())));
    }
    Ok(())
}

fn rank_or_zero(rows: &QMatrix) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        0
    } else {
        rank(rows)
    }
}

/// Ranks of `×L^{D−2i}`, `i ≤ D/2`, for `L = Σ a_e X_e`.
///
/// On `Q/Ann Φ_M` the rank is that of `{(L^{D−2i} X^S)(∂)Φ_M : S in the basis
/// of A_i}`; on `Q/J_M` it is the rank of the product of the multiplication
/// matrices.
pub fn slp_rank_check(m: &Matroid, a: &[BigRational], ideal: IdealKind) -> Result<LefschetzReport> {
    check_len(m, a)?;
    let f = phi(m);
    let quo = match ideal {
        IdealKind::Ann => GradedQuotient::ann(&f, m.size())?,
        IdealKind::Jm => GradedQuotient::jm(m)?,
    };
    let top = quo.top_degree();
    let l = linear_form(a);
    let mut levels = Vec::new();
    for i in 0..=top / 2 {
        let k = top - 2 * i;
        let rk = match ideal {
            IdealKind::Ann => {
                let mut g = f.clone();
                for _ in 0..k {
                    g = apply_diff(&l, &g);
                }
                let images: Vec<SquareFreePoly> = quo.basis(i).iter().map(|s| g.partial(*s)).collect();
                let mut support: Vec<ElemSet> = images.iter().flat_map(|p| p.terms().map(|(s, _)| s)).collect();
                support.sort();
                support.dedup();
                rank_or_zero(&images.iter().map(|p| support.iter().map(|s| p.coeff(*s)).collect()).collect())
            }
            IdealKind::Jm => {
                let mut prod: QMatrix = (0..quo.dim(i))
                    .map(|r| (0..quo.dim(i)).map(|c| if r == c { BigRational::one() } else { BigRational::zero() }).collect())
                    .collect();
                for d in i..top - i {
                    prod = mat_mul(&quo.multiplication_matrix(d, a), &prod);
                }
                rank_or_zero(&prod)
            }
        };
        let (dim_i, dim_dual) = (quo.dim(i), quo.dim(top - i));
        levels.push(LefschetzLevel { i, dim_i, dim_dual, rank: rk, pass: rk == dim_i && rk == dim_dual });
    }
    Ok(LefschetzReport {
        method: "rank".into(),
        ideal,
        coefficients: strings(a),
        top_degree: top,
        pass: levels.iter().all(|l| l.pass),
        levels,
        f_value: None,
        hessians: vec![],
    })
}

/// The monomial basis of `(Q/Ann Φ_M)_d` as operators.
pub fn hessian_basis(quo: &GradedQuotient, d: usize) -> Vec<DiffPoly> {
    quo.basis(d).iter().map(|s| Poly::monomial(Monomial::from_set(*s))).collect()
}

/// Watanabe's criterion: `Φ_M(a) ≠ 0` and `Hess^(d) Φ_M (a) ≠ 0` for
/// `d = 1..⌊D/2⌋`, each Hessian over the quotient's degree-`d` monomial basis.
pub fn slp_hessian_check(m: &Matroid, a: &[BigRational]) -> Result<LefschetzReport> {
    check_len(m, a)?;
    let f = phi(m);
    let quo = GradedQuotient::ann(&f, m.size())?;
    let top = quo.top_degree();
    let f_value = f.eval(a);
    let mut hessians = Vec::new();
    for d in 1..=top / 2 {
        let basis = hessian_basis(&quo, d);
        let value = if basis.is_empty() { BigRational::one() } else { hessian_det_at(&basis, &f, a)? };
        hessians.push(HessianValue {
            d,
            basis: basis.iter().map(ToString::to_string).collect(),
            nonzero: !value.is_zero(),
            value: value.to_string(),
        });
    }
    Ok(LefschetzReport {
        method: "hessian".into(),
        ideal: IdealKind::Ann,
        coefficients: strings(a),
        top_degree: top,
        levels: vec![],
        pass: !f_value.is_zero() && hessians.iter().all(|h| h.nonzero),
        f_value: Some(f_value.to_string()),
        hessians,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SlpComparison {
    pub rank: LefschetzReport,
    pub hessian: LefschetzReport,
    pub agree: bool,
}

/// Both checks on `Q/Ann Φ_M` at the same point.
pub fn slp_both(m: &Matroid, a: &[BigRational]) -> Result<SlpComparison> {
    let rank = slp_rank_check(m, a, IdealKind::Ann)?;
    let hessian = slp_hessian_check(m, a)?;
    let agree = rank.pass == hessian.pass;
    Ok(SlpComparison { rank, hessian, agree })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroProbe {
    pub d: usize,
    pub points_tried: usize,
    /// Some evaluation was nonzero.
    pub nonzero_found: bool,
    /// Symbolic confirmation, when all evaluations vanished and the basis is small.
    pub symbolically_zero: Option<bool>,
}

/// Probes whether `Hess^(d) Φ_M` vanishes identically: random integer points
/// first, then the symbolic determinant when every value was zero.
pub fn hessian_zero_probe(m: &Matroid, d: usize, points: usize, seed: u64) -> Result<ZeroProbe> {
    let f = phi(m);
    let quo = GradedQuotient::ann(&f, m.size())?;
    let basis = hessian_basis(&quo, d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..points {
        let a: Vec<BigRational> = (0..m.size()).map(|_| q(rng.gen_range(-99..=99))).collect();
        if !hessian_det_at(&basis, &f, &a)?.is_zero() {
            return Ok(ZeroProbe { d, points_tried: k + 1, nonzero_found: true, symbolically_zero: None });
        }
    }
    let symbolic = if basis.len() <= MAX_SYMBOLIC_HESSIAN {
        Some(hessian_det_symbolic(&basis, &f)?.is_zero())
    } else {
        None
    };
    Ok(ZeroProbe { d, points_tried: points, nonzero_found: false, symbolically_zero: symbolic })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureProbe {
    pub all_ones: bool,
    pub random_points: Vec<(Vec<String>, bool)>,
    /// "pass" when some tested form is a strong Lefschetz element.
    pub evidence: String,
    pub note: String,
}

/// Experimental: looks for a strong Lefschetz element of `A_M` at all-ones
/// and at `seeds` random points. Reports what was observed and nothing more.
pub fn slp_probe_conjecture(m: &Matroid, seeds: usize, seed: u64) -> Result<ConjectureProbe> {
    let ones = vec![q(1); m.size()];
    let all_ones = slp_rank_check(m, &ones, IdealKind::Ann)?.pass;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_points = Vec::new();
    for _ in 0..seeds {
        let a: Vec<BigRational> = (0..m.size()).map(|_| q(rng.gen_range(-99..=99))).collect();
        let pass = slp_rank_check(m, &a, IdealKind::Ann)?.pass;
        random_points.push((strings(&a), pass));
    }
    let any = all_ones || random_points.iter().any(|p| p.1);
    Ok(ConjectureProbe {
        all_ones,
        random_points,
        evidence: if any { "pass" } else { "no Lefschetz element found" }.into(),
        note: "experimental evidence only".into(),
    })
}
