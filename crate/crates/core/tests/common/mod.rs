//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's own linear algebra or counting routines.
#![allow(dead_code)]

use std::collections::BTreeSet;

use matgor::groebner::MonomialOrder;
use matgor::poly::{Monomial, Poly};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Every monomial of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, d, &mut Vec::new(), &mut out);
    }
    out
}

/// Row echelon form by plain Gaussian elimination; returns pivot columns.
fn pivots(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> Vec<usize> {
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][c];
        let pivot_row: Vec<BigRational> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = pivot_row;
        piv.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    piv
}

/// Leading monomials of the degree-`d` part of the ideal generated by
/// homogeneous `gens`, from the Macaulay matrix of all monomial multiples
/// with columns sorted by decreasing `order`.
pub fn macaulay_initial_monomials(gens: &[Poly], order: &MonomialOrder, n: usize, d: u32) -> BTreeSet<Monomial> {
    let mut cols = monomials(n, d);
    cols.sort_by(|a, b| order.cmp(b, a));
    let index = |m: &Monomial| cols.iter().position(|c| c == m).expect("degree-d monomial");
    let mut rows = Vec::new();
    for g in gens {
        let Some(dg) = g.homogeneous_degree() else { panic!("inhomogeneous generator") };
        if dg > d {
            continue;
        }
        for mult in monomials(n, d - dg) {
            let mut row = vec![BigRational::zero(); cols.len()];
            for (m, c) in g.terms() {
                row[index(&m.mul(&mult))] += c;
            }
            rows.push(row);
        }
    }
    pivots(rows, cols.len()).into_iter().map(|c| cols[c].clone()).collect()
}

/// Degree-`d` monomials divisible by one of the monomial generators.
pub fn monomial_ideal_part(gens: &[Poly], n: usize, d: u32) -> BTreeSet<Monomial> {
    let leads: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            assert_eq!(g.len(), 1, "expected a monomial, got {g}");
            g.terms().next().unwrap().0.clone()
        })
        .collect();
    monomials(n, d).into_iter().filter(|m| leads.iter().any(|l| l.divides(m))).collect()
}

/// Gaussian binomial `[n, k]_q` from the product formula.
pub fn q_binomial(n: u32, k: u32, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

pub fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Largest antichain by exhaustive search; `less[i][j]` means `i < j`.
pub fn brute_force_max_antichain(less: &[Vec<bool>]) -> usize {
    let n = less.len();
    assert!(n <= 20, "exhaustive antichain search on {n} elements");
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let elems: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if elems.len() <= best {
            continue;
        }
        let ok = elems.iter().all(|&a| elems.iter().all(|&b| !less[a][b]));
        if ok {
            best = elems.len();
        }
    }
    best
}
