//! Exact linear programming: dense two-phase simplex over the rationals with
//! Bland's anti-cycling rule.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::dot_q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: BigRational, point: Vec<BigRational> },
    Infeasible,
    Unbounded,
}

/// Maximise `c·x` subject to `A x <= b`, `E x = f`, with free variables.
#[derive(Clone, Debug, Default)]
pub struct Lp {
    pub n: usize,
    pub le: Vec<(Vec<BigRational>, BigRational)>,
    pub eq: Vec<(Vec<BigRational>, BigRational)>,
}

impl Lp {
    pub fn new(n: usize) -> Self {
        Lp { n, ..Default::default() }
    }

    pub fn leq(&mut self, a: Vec<BigRational>, b: BigRational) -> &mut Self {
        self.le.push((a, b));
        self
    }

    pub fn geq(&mut self, a: Vec<BigRational>, b: BigRational) -> &mut Self {
        self.le.push((a.into_iter().map(|x| -x).collect(), -b));
        self
    }

    pub fn equal(&mut self, a: Vec<BigRational>, b: BigRational) -> &mut Self {
        self.eq.push((a, b));
        self
    }

    pub fn feasible_point(&self) -> Option<Vec<BigRational>> {
        match self.maximize(&vec![BigRational::zero(); self.n]) {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }

    pub fn maximize(&self, c: &[BigRational]) -> LpOutcome {
        // columns: x+ (n), x- (n), slacks (le rows), artificials (as needed)
        let n = self.n;
        let m = self.le.len() + self.eq.len();
        let ns = self.le.len();
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
        let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
        for (i, (a, b)) in self.le.iter().chain(&self.eq).enumerate() {
            let mut row = vec![BigRational::zero(); 2 * n + ns];
            for j in 0..n {
                row[j] = a[j].clone();
                row[n + j] = -a[j].clone();
            }
            if i < ns {
                row[2 * n + i] = BigRational::one();
            }
            let mut b = b.clone();
            if b.is_negative() {
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
                b = -b;
            }
            rows.push(row);
            rhs.push(b);
        }
        let base_cols = 2 * n + ns;
        let mut basis = vec![usize::MAX; m];
        let mut n_art = 0;
        for i in 0..m {
            if i < ns && rows[i][2 * n + i].is_one() {
                basis[i] = 2 * n + i;
            } else {
                basis[i] = base_cols + n_art;
                n_art += 1;
            }
        }
        let total = base_cols + n_art;
        for (i, row) in rows.iter_mut().enumerate() {
            row.resize(total, BigRational::zero());
            if basis[i] >= base_cols {
                row[basis[i]] = BigRational::one();
            }
        }
        let mut t = Tableau { rows, rhs, basis };
        if n_art > 0 {
            let mut obj = vec![BigRational::zero(); total];
            for j in base_cols..total {
                obj[j] = -BigRational::one();
            }
            t.optimize(&obj, total);
            let art_sum: BigRational = t
                .basis
                .iter()
                .zip(&t.rhs)
                .filter(|(b, _)| **b >= base_cols)
                .fold(BigRational::zero(), |s, (_, v)| s + v);
            if !art_sum.is_zero() {
                return LpOutcome::Infeasible;
            }
            t.drive_out_artificials(base_cols);
        }
        let mut obj = vec![BigRational::zero(); total];
        for j in 0..n {
            obj[j] = c[j].clone();
            obj[n + j] = -c[j].clone();
        }
        if !t.optimize(&obj, base_cols) {
            return LpOutcome::Unbounded;
        }
        let mut xs = vec![BigRational::zero(); total];
        for (i, &b) in t.basis.iter().enumerate() {
            xs[b] = t.rhs[i].clone();
        }
        let point: Vec<BigRational> = (0..n).map(|j| &xs[j] - &xs[n + j]).collect();
        LpOutcome::Optimal { value: dot_q(c, &point), point }
    }
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for x in self.rows[r].iter_mut() {
            *x = &*x / &p;
        }
        self.rhs[r] = &self.rhs[r] / &p;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.rhs[i] = &self.rhs[i] - &f * &prhs;
        }
        self.basis[r] = col;
    }

    /// Maximises `obj` using columns `< allowed`; false when unbounded.
    fn optimize(&mut self, obj: &[BigRational], allowed: usize) -> bool {
        loop {
            // reduced cost c_j - c_B B^{-1} A_j
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut rc = obj[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        rc -= &obj[b] * &self.rows[i][j];
                    }
                }
                rc.is_positive()
            });
            let Some(col) = entering else { return true };
            let mut best: Option<(BigRational, usize)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][col].is_positive() {
                    let ratio = &self.rhs[i] / &self.rows[i][col];
                    let better = match &best {
                        None => true,
                        Some((r, bi)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((ratio, i));
                    }
                }
            }
            let Some((_, r)) = best else { return false };
            self.pivot(r, col);
        }
    }

    fn drive_out_artificials(&mut self, base_cols: usize) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= base_cols {
                if let Some(col) = (0..base_cols).find(|&j| !self.rows[i][j].is_zero()) {
                    self.pivot(i, col);
                } else {
                    // redundant equality row
                    self.rows.remove(i);
                    self.rhs.remove(i);
                    self.basis.remove(i);
                    continue;
                }
            }
            i += 1;
        }
        for row in self.rows.iter_mut() {
            row.truncate(base_cols);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn v(x: &[i64]) -> Vec<BigRational> {
        x.iter().map(|&a| q(a)).collect()
    }

    #[test]
    fn small_maximisation() {
        // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0
        let mut lp = Lp::new(2);
        lp.leq(v(&[1, 2]), q(4)).leq(v(&[3, 1]), q(6)).geq(v(&[1, 0]), q(0)).geq(v(&[0, 1]), q(0));
        match lp.maximize(&v(&[1, 1])) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, BigRational::new(14.into(), 5.into()));
                assert_eq!(point, vec![BigRational::new(8.into(), 5.into()), BigRational::new(6.into(), 5.into())]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = Lp::new(1);
        lp.geq(v(&[1]), q(2)).leq(v(&[1]), q(1));
        assert_eq!(lp.maximize(&v(&[1])), LpOutcome::Infeasible);
        let mut lp = Lp::new(2);
        lp.geq(v(&[1, 0]), q(0));
        assert_eq!(lp.maximize(&v(&[1, 0])), LpOutcome::Unbounded);
    }

    #[test]
    fn equalities_with_free_variables() {
        let mut lp = Lp::new(3);
        lp.equal(v(&[1, 1, 1]), q(0)).equal(v(&[1, -1, 0]), q(-2)).leq(v(&[0, 0, 1]), q(4)).geq(v(&[0, 0, 1]), q(-4));
        match lp.maximize(&v(&[1, 0, 0])) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(1)),
            other => panic!("{other:?}"),
        }
        // duplicated equality is harmless
        lp.equal(v(&[2, 2, 2]), q(0));
        assert!(lp.feasible_point().is_some());
    }
}
