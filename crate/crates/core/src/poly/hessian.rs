use num_rational::BigRational;
use num_traits::One;

use super::general::{DiffPoly, Poly};
use super::squarefree::{apply_diff, SquareFreePoly};
use crate::error::{guard, Error, Result};
use crate::linalg::det;

/// Largest DiffPoly total degree accepted by Hessian construction.
pub const MAX_DIFF_DEGREE: u32 = 12;
/// Largest matrix for which the symbolic determinant is expanded.
pub const MAX_SYMBOLIC_HESSIAN: usize = 8;

fn common_degree(basis: &[DiffPoly]) -> Result<u32> {
    let mut degs = basis.iter().map(|a| a.homogeneous_degree().ok_or(Error::MixedDegrees));
    let d = match degs.next() {
        Some(d) => d?,
        None => return Err(Error::InvalidInput("empty Hessian basis".into())),
    };
    for e in degs {
        if e? != d {
            return Err(Error::MixedDegrees);
        }
    }
    if d == 0 {
        return Err(Error::InvalidInput("Hessian basis must have degree at least 1".into()));
    }
    if d > MAX_DIFF_DEGREE {
        return Err(Error::GuardExceeded(format!("basis degree {d} > {MAX_DIFF_DEGREE}")));
    }
    Ok(d)
}

/// The matrix `(α_i(X) α_j(X) g)_{i,j}` for a basis of equal-degree operators.
pub fn hessian_matrix(basis: &[DiffPoly], g: &SquareFreePoly) -> Result<Vec<Vec<SquareFreePoly>>> {
    common_degree(basis)?;
    let once: Vec<SquareFreePoly> = basis.iter().map(|a| apply_diff(a, g)).collect();
    let n = basis.len();
    let mut m = vec![vec![SquareFreePoly::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let e = apply_diff(&basis[i], &once[j]);
            m[j][i] = e.clone();
            m[i][j] = e;
        }
    }
    Ok(m)
}

pub fn hessian_det_at(basis: &[DiffPoly], g: &SquareFreePoly, point: &[BigRational]) -> Result<BigRational> {
    let width = g.support().max_elem().map_or(0, |m| m + 1);
    if point.len() < width {
        return Err(Error::DimensionMismatch(format!(
            "point has {} coordinates, polynomial uses {width}",
            point.len()
        )));
    }
    let h = hessian_matrix(basis, g)?;
    let vals: Vec<Vec<BigRational>> =
        h.iter().map(|row| row.iter().map(|e| e.eval(point)).collect()).collect();
    Ok(det(&vals))
}

/// Symbolic determinant by fraction-free elimination over `Q[x]`.
pub fn hessian_det_symbolic(basis: &[DiffPoly], g: &SquareFreePoly) -> Result<Poly> {
    guard("symbolic Hessian size", basis.len(), MAX_SYMBOLIC_HESSIAN)?;
    let h = hessian_matrix(basis, g)?;
    let m = h.iter().map(|row| row.iter().map(SquareFreePoly::to_poly).collect()).collect();
    bareiss_det(m)
}

/// Determinant of a square polynomial matrix (Bareiss; divisions are exact).
pub fn bareiss_det(mut m: Vec<Vec<Poly>>) -> Result<Poly> {
    let n = m.len();
    if n == 0 {
        return Ok(Poly::constant(BigRational::one()));
    }
    let mut negate = false;
    let mut prev = Poly::constant(BigRational::one());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Poly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::linalg::q;
    use crate::matroid::Matroid;
    use crate::poly::{parse_poly, phi, Monomial};
    use crate::set::ElemSet;

    fn first_order(n: usize) -> Vec<DiffPoly> {
        (0..n).map(DiffPoly::var).collect()
    }

    /// Cofactor expansion along the first row.
    fn laplace(m: &[Vec<Poly>]) -> Poly {
        let n = m.len();
        if n == 0 {
            return Poly::constant(q(1));
        }
        let mut total = Poly::zero();
        for j in 0..n {
            let minor: Vec<Vec<Poly>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect())
                .collect();
            let t = m[0][j].mul(&laplace(&minor));
            total = if j % 2 == 0 { total.add(&t) } else { total.sub(&t) };
        }
        total
    }

    #[test]
    fn ordinary_hessian_entries() {
        let g = SquareFreePoly::monomial(ElemSet::from_elems([0, 1, 2]));
        let h = hessian_matrix(&first_order(3), &g).unwrap();
        assert_eq!(h[0][1].to_string(), "x3");
        assert!(h[0][0].is_zero());
        let p = phi(&builtins::five_vector());
        let h5 = hessian_matrix(&first_order(5), &p).unwrap();
        assert_eq!(h5[0][2].to_string(), "x2 + x4 + x5");
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(h5[i][j], h5[j][i]);
            }
        }
    }

    #[test]
    fn five_vector_hessian_factorisation() {
        let p = phi(&builtins::five_vector());
        let det = hessian_det_symbolic(&first_order(5), &p).unwrap();
        let expected = parse_poly("8*x1 + 8*x4").unwrap().mul(&parse_poly("x3 + x5").unwrap()).mul(&p.to_poly());
        assert_eq!(det, expected);
        let h = hessian_matrix(&first_order(5), &p).unwrap();
        let hp: Vec<Vec<Poly>> = h.iter().map(|r| r.iter().map(|e| e.to_poly()).collect()).collect();
        assert_eq!(laplace(&hp), det);
        let ones = vec![q(1); 5];
        assert_eq!(hessian_det_at(&first_order(5), &p, &ones).unwrap(), q(256));
    }

    #[test]
    fn m23_hessian_nonzero_at_ones() {
        let p = phi(&Matroid::projective_geometry(2, 3).unwrap());
        let v = hessian_det_at(&first_order(7), &p, &vec![q(1); 7]).unwrap();
        assert_ne!(v, q(0));
    }

    #[test]
    fn vanishing_and_errors() {
        let g = SquareFreePoly::monomial(ElemSet::from_elems([0, 1]));
        // X3 kills g, so the third row is zero
        assert_eq!(hessian_det_at(&first_order(3), &g, &[q(2), q(3), q(5)]).unwrap(), q(0));
        let mixed = vec![DiffPoly::var(0), DiffPoly::monomial(Monomial::new(vec![1, 1]))];
        assert!(matches!(hessian_matrix(&mixed, &g), Err(Error::MixedDegrees)));
        assert!(matches!(
            hessian_det_symbolic(&first_order(9), &g),
            Err(Error::GuardExceeded(_))
        ));
    }
}
