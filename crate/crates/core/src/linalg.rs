//! Exact linear algebra over the rationals and integers.
//!
//! Ranks and determinants run fraction-free over `BigInt` after clearing
//! denominators row by row; kernels and echelon forms run over `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QMatrix = Vec<Vec<BigRational>>;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Scales a rational row to a primitive integer row with the same direction.
pub fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    primitive(ints)
}

/// Divides an integer vector by the gcd of its entries (zero stays zero).
pub fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_q(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// Rank of an integer matrix by gcd-normalised integer elimination.
pub fn rank_int(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            let row = std::mem::take(&mut rows[r]);
            let combined: Vec<BigInt> = row
                .iter()
                .zip(&pivot_row)
                .map(|(x, y)| x * &pv - y * &f)
                .collect();
            rows[r] = primitive(combined);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    rank_int(rows.iter().map(|r| clear_denominators(r)).collect())
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn det_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Determinant of a square rational matrix (rows are scaled to integers first).
pub fn det(m: &[Vec<BigRational>]) -> BigRational {
    let mut scale = BigInt::one();
    let ints: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    BigRational::new(det_int(ints), scale)
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<BigRational>]) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut m: QMatrix = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of the right null space `{v : M v = 0}`.
pub fn null_space(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let (red, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Basis of the left null space `{c : c^T M = 0}`.
pub fn left_null_space(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let t = transpose(rows, ncols);
    null_space(&t, rows.len())
}

pub fn transpose(rows: &[Vec<BigRational>], ncols: usize) -> QMatrix {
    (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect()
}

/// Indices of the rows kept by greedy selection in the given order: a row is
/// kept when it is independent of the rows kept before it.
pub fn greedy_independent_rows(rows: &[Vec<BigRational>]) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut kept = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut v = row.clone();
        for (pc, b) in &basis {
            if !v[*pc].is_zero() {
                let f = v[*pc].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x = &*x - &f * y;
                    }
                }
            }
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[pc].recip();
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
            for (_, b) in basis.iter_mut() {
                if !b[pc].is_zero() {
                    let f = b[pc].clone();
                    for (x, y) in b.iter_mut().zip(&v) {
                        if !y.is_zero() {
                            *x = &*x - &f * y;
                        }
                    }
                }
            }
            basis.push((pc, v));
            kept.push(i);
        }
    }
    kept
}

pub fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> QMatrix {
    let inner = b.len();
    let ncols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| {
                    (0..inner).fold(BigRational::zero(), |acc, k| {
                        if row[k].is_zero() {
                            acc
                        } else {
                            acc + &row[k] * &b[k][j]
                        }
                    })
                })
                .collect()
        })
        .collect()
}

pub fn is_zero_vec(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn abs_int(x: &BigInt) -> BigInt {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: &[&[i64]]) -> QMatrix {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn rank_and_det_small() {
        let m = qm(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(rank(&m), 2);
        assert!(det(&m).is_zero());
        let m = qm(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(det(&m), q(2));
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn det_with_fractions_and_swaps() {
        let half = BigRational::new(1.into(), 2.into());
        let m = vec![vec![q(0), half.clone()], vec![q(3), q(1)]];
        assert_eq!(det(&m), -(q(3) * half));
    }

    #[test]
    fn kernels_are_kernels() {
        let m = qm(&[&[1, 1, 0, 0], &[0, 1, 1, 0]]);
        let ns = null_space(&m, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                assert!(dot_q(row, v).is_zero());
            }
        }
        let ls = left_null_space(&qm(&[&[1, 2], &[2, 4], &[0, 1]]), 2);
        assert_eq!(ls.len(), 1);
    }

    #[test]
    fn greedy_rows_respect_order() {
        let m = qm(&[&[1, 0], &[2, 0], &[0, 1], &[1, 1]]);
        assert_eq!(greedy_independent_rows(&m), vec![0, 2]);
    }
}
