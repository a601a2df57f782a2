use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::hilbert::HilbertVector;
use super::quotient::{is_gorenstein, GradedQuotient};
use crate::error::{guard, Error, Result};
use crate::groebner::{remainder, LambdaSet, MonomialOrder};
use crate::linalg::{left_null_space, rank, rref};
use crate::matroid::Matroid;
use crate::poly::{apply_diff, phi, phi_level, Monomial, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnJmComparison {
    pub equal: bool,
    pub hilbert_ann: HilbertVector,
    pub hilbert_jm: HilbertVector,
    /// Per degree, a basis of `(Ann Φ_M)_d / (J_M)_d` in normal form modulo
    /// `J_M` (grevlex), row-reduced so each element is monic.
    pub extra_generators: BTreeMap<usize, Vec<Poly>>,
}

/// Normal forms modulo `Λ_M`, reduced to echelon form over the monomials in
/// decreasing grevlex order.
fn canonical_span(polys: Vec<Poly>, order: &MonomialOrder) -> Vec<Poly> {
    let mut mons: Vec<Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    mons.sort_by(|a, b| order.cmp(b, a));
    mons.dedup();
    let rows: Vec<Vec<BigRational>> = polys.iter().map(|p| mons.iter().map(|m| p.coeff(m)).collect()).collect();
    rref(&rows)
        .0
        .into_iter()
        .map(|r| Poly::from_terms(mons.iter().cloned().zip(r).filter(|(_, c)| !c.is_zero())))
        .collect()
}

/// Compares `Ann Φ_M` with `J_M`. Fails with `Consistency` if some element of
/// `Λ_M` does not annihilate `Φ_M`.
pub fn ann_equals_jm(m: &Matroid) -> Result<AnnJmComparison> {
    guard("ground set size", m.size(), 20)?;
    let f = phi(m);
    let lambda = LambdaSet::new(m)?;
    let gens = lambda.generators();
    if let Some(g) = gens.iter().find(|g| !apply_diff(g, &f).is_zero()) {
        return Err(Error::Consistency(format!("{g} does not annihilate the basis polynomial")));
    }
    let ann = GradedQuotient::ann(&f, m.size())?;
    let classes = m.equivalence_classes()?;
    let order = MonomialOrder::grevlex(m.size());
    let mut extra = BTreeMap::new();
    for (d, level) in classes.levels.iter().enumerate() {
        let cat = ann.catalecticant(d).expect("degree within socle degree");
        // equivalent monomials have equal catalecticant rows, so the class
        // representatives span the image of Q_d / (J_M)_d
        let rows: Vec<Vec<BigRational>> =
            level.iter().map(|c| cat.row_of(c.representative()).expect("row").to_vec()).collect();
        let kernel = left_null_space(&rows, cat.cols.len());
        if kernel.is_empty() {
            continue;
        }
        let lifted: Vec<Poly> = kernel
            .iter()
            .map(|k| {
                let p = Poly::from_terms(
                    level
                        .iter()
                        .zip(k)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(cl, c)| (Monomial::from_set(cl.representative()), c.clone())),
                );
                remainder(&p, &gens, &order)
            })
            .collect();
        extra.insert(d, canonical_span(lifted, &order));
    }
    let hilbert_ann = ann.hilbert();
    let hilbert_jm = HilbertVector::new(classes.counts());
    Ok(AnnJmComparison { equal: hilbert_ann == hilbert_jm, hilbert_ann, hilbert_jm, extra_generators: extra })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankLemmaCheck {
    pub l: usize,
    pub rank: usize,
    pub classes: usize,
    pub holds: bool,
}

/// Rank of `{∂^F Φ^(2l)}` over one representative `F` per level-`l` class,
/// compared with the number of classes.
pub fn catalecticant_rank_lemma(m: &Matroid, l: usize) -> Result<RankLemmaCheck> {
    if 2 * l > m.rank_total() {
        return Err(Error::InvalidInput(format!("2l = {} exceeds the rank {}", 2 * l, m.rank_total())));
    }
    let g = phi_level(m, 2 * l)?;
    let classes = m.equivalence_classes()?;
    let level = &classes.levels[l];
    let derivs: Vec<_> = level.iter().map(|c| g.partial(c.representative())).collect();
    let mut support: Vec<_> = derivs.iter().flat_map(|p| p.terms().map(|(s, _)| s)).collect();
    support.sort();
    support.dedup();
    let rows: Vec<Vec<BigRational>> = derivs.iter().map(|p| support.iter().map(|s| p.coeff(*s)).collect()).collect();
    let r = if support.is_empty() { 0 } else { rank(&rows) };
    Ok(RankLemmaCheck { l, rank: r, classes: level.len(), holds: r == level.len() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InverseReport {
    pub hilbert_ann: HilbertVector,
    pub hilbert_jm: HilbertVector,
    pub gorenstein_ann: bool,
    pub gorenstein_jm: bool,
    pub ann_equals_jm: bool,
    pub extra_generators: BTreeMap<usize, Vec<String>>,
}

pub fn inverse_report(m: &Matroid) -> Result<InverseReport> {
    let cmp = ann_equals_jm(m)?;
    let ann = GradedQuotient::ann(&phi(m), m.size())?;
    let jm = GradedQuotient::jm(m)?;
    Ok(InverseReport {
        hilbert_ann: cmp.hilbert_ann.clone(),
        hilbert_jm: cmp.hilbert_jm.clone(),
        gorenstein_ann: is_gorenstein(&ann),
        gorenstein_jm: is_gorenstein(&jm),
        ann_equals_jm: cmp.equal,
        extra_generators: cmp
            .extra_generators
            .iter()
            .map(|(d, ps)| (*d, ps.iter().map(ToString::to_string).collect()))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::groebner::in_ideal;
    use crate::poly::parse_poly;

    #[test]
    fn five_vector_extra_generator() {
        let m = builtins::five_vector();
        let c = ann_equals_jm(&m).unwrap();
        assert!(!c.equal);
        assert_eq!(c.extra_generators.len(), 1);
        let gens = &c.extra_generators[&2];
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].to_string(), "x1*x3 - x1*x5 - x3*x4 + x4*x5");
        assert!(apply_diff(&gens[0], &phi(&m)).is_zero());
        // not in J_M
        let lambda = LambdaSet::new(&m).unwrap().generators();
        assert!(!in_ideal(&gens[0], &lambda, &MonomialOrder::grevlex(5)));
        let printed = parse_poly("x1*x3 + x4*x5 - x1*x5 - x3*x4").unwrap();
        assert!(in_ideal(&gens[0].sub(&printed), &lambda, &MonomialOrder::grevlex(5)));
    }

    #[test]
    fn equal_cases() {
        for m in [builtins::m22(), Matroid::boolean(3).unwrap(), builtins::matroid("m23").unwrap()] {
            let c = ann_equals_jm(&m).unwrap();
            assert!(c.equal && c.extra_generators.is_empty());
        }
    }

    #[test]
    fn rank_lemma() {
        let m22 = builtins::m22();
        assert_eq!(catalecticant_rank_lemma(&m22, 1).unwrap(), RankLemmaCheck { l: 1, rank: 3, classes: 3, holds: true });
        assert!(catalecticant_rank_lemma(&builtins::matroid("m23").unwrap(), 1).unwrap().holds);
        assert_eq!(catalecticant_rank_lemma(&m22, 0).unwrap().rank, 1);
        assert!(catalecticant_rank_lemma(&m22, 2).is_err());
    }

    #[test]
    fn report_json() {
        let r = inverse_report(&builtins::five_vector()).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"hilbert_ann":[1,5,5,1],"hilbert_jm":[1,5,6,1],"gorenstein_ann":true,"gorenstein_jm":false,"ann_equals_jm":false,"extra_generators":{"2":["x1*x3 - x1*x5 - x3*x4 + x4*x5"]}}"#
        );
    }
}
