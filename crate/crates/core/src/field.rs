//! Arithmetic in GF(p^k) and Gaussian elimination over it.
//!
//! An element of GF(p^k) is encoded as an integer in `0..p^k` whose base-`p`
//! digits (least significant first) are the coefficients of its polynomial
//! representative modulo the field's irreducible polynomial.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order for which moduli are verified exhaustively.
pub const MAX_FIELD_ORDER: u32 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, coefficients low to high; empty for prime fields.
    modulus: Vec<u32>,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Built-in irreducible moduli (low to high, monic).
fn builtin_modulus(p: u32, k: u32) -> Option<Vec<u32>> {
    match (p, k) {
        (2, 2) => Some(vec![1, 1, 1]),
        (2, 3) => Some(vec![1, 1, 0, 1]),
        (2, 4) => Some(vec![1, 1, 0, 0, 1]),
        (3, 2) => Some(vec![1, 0, 1]),
        (3, 3) => Some(vec![1, 2, 0, 1]),
        (5, 2) => Some(vec![2, 0, 1]),
        _ => None,
    }
}

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let idx = i + shift;
                a[idx] = (a[idx] + p - (lead * c) % p) % p;
            }
        }
        a.pop();
    }
    poly_trim(a)
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let k = m.len() - 1;
    // try every monic divisor of degree 1..=k/2
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut x = idx;
            for _ in 0..d {
                div.push((x % p as u64) as u32);
                x /= p as u64;
            }
            div.push(1);
            if poly_rem(m, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::UnsupportedField("extension degree must be >= 1".into()));
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_FIELD_ORDER as u64).ok_or_else(
            || Error::UnsupportedField(format!("{p}^{k} exceeds {MAX_FIELD_ORDER}")),
        )? as u32;
        if k == 1 {
            return Ok(FiniteField { p, k, q, modulus: Vec::new() });
        }
        let modulus = match modulus {
            Some(m) => m,
            None => builtin_modulus(p, k).ok_or_else(|| {
                Error::UnsupportedField(format!("no built-in modulus for GF({p}^{k})"))
            })?,
        };
        if modulus.len() != k as usize + 1
            || *modulus.last().unwrap() != 1
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(Error::UnsupportedField(format!(
                "modulus {modulus:?} must be monic of degree {k} with coefficients below {p}"
            )));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus(modulus));
        }
        Ok(FiniteField { p, k, q, modulus })
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// The field of order `q`, using a built-in modulus when `q` is not prime.
    pub fn of_order(q: u32) -> Result<Self> {
        for p in 2..=q {
            if q % p == 0 {
                let mut k = 0;
                let mut r = q;
                while r % p == 0 {
                    r /= p;
                    k += 1;
                }
                if r != 1 {
                    return Err(Error::UnsupportedField(format!("{q} is not a prime power")));
                }
                return Self::new(p, k, None);
            }
        }
        Err(Error::UnsupportedField(format!("{q} is not a prime power")))
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Self> {
        Self::new(spec.p, spec.k, spec.modulus.clone())
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            k: self.k,
            modulus: if self.k == 1 { None } else { Some(self.modulus.clone()) },
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.q
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            d.push(a % self.p);
            a /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&s)
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let d: Vec<u32> = self.digits(a).iter().map(|x| (self.p - x) % self.p).collect();
        self.undigits(&d)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; da.len() + db.len()];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.k as usize, 0);
        self.undigits(&r)
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.q as u64 - 2))
        }
    }
}

/// A dense matrix over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFMatrix {
    field: FiniteField,
    nrows: usize,
    ncols: usize,
    entries: Vec<u32>,
}

impl GFMatrix {
    pub fn new(field: FiniteField, nrows: usize, ncols: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != nrows * ncols {
            return Err(Error::InvalidInput(format!(
                "expected {} entries, got {}",
                nrows * ncols,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&x| !field.contains(x)) {
            return Err(Error::InvalidInput(format!(
                "entry {bad} is not an element of GF({})",
                field.order()
            )));
        }
        Ok(GFMatrix { field, nrows, ncols, entries })
    }

    /// Builds a matrix from its columns (all of equal length).
    pub fn from_columns(field: FiniteField, columns: &[Vec<u32>]) -> Result<Self> {
        let nrows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != nrows) {
            return Err(Error::InvalidInput("columns have different lengths".into()));
        }
        let ncols = columns.len();
        let mut entries = vec![0; nrows * ncols];
        for (j, col) in columns.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                entries[i * ncols + j] = x;
            }
        }
        Self::new(field, nrows, ncols, entries)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.ncols + j]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }
}

/// Rank of the selected columns of `m`.
pub fn gf_rank(m: &GFMatrix, cols: &[usize]) -> Result<usize> {
    if let Some(&bad) = cols.iter().find(|&&c| c >= m.ncols) {
        return Err(Error::IndexOutOfRange { index: bad, limit: m.ncols });
    }
    let f = &m.field;
    // work on the selected columns as rows
    let mut rows: Vec<Vec<u32>> = cols.iter().map(|&c| m.column(c)).collect();
    let mut rank = 0;
    for col in 0..m.nrows {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][col]).expect("nonzero pivot");
        let pivot: Vec<u32> = rows[rank].iter().map(|&x| f.mul(x, inv)).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let factor = row[col];
            if factor != 0 {
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

/// Normalised representatives of the points of P^{n-1}(GF(q)), in
/// lexicographic order of their coordinate tuples.
pub fn projective_points(field: &FiniteField, n: usize) -> Vec<Vec<u32>> {
    let q = field.order();
    let mut out = Vec::new();
    // first nonzero coordinate at position `lead`, equal to 1
    let mut tuples: Vec<Vec<u32>> = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let count = (q as u64).pow(free as u32);
        for idx in 0..count {
            let mut v = vec![0u32; n];
            v[lead] = 1;
            let mut x = idx;
            for pos in (lead + 1..n).rev() {
                v[pos] = (x % q as u64) as u32;
                x /= q as u64;
            }
            tuples.push(v);
        }
    }
    tuples.sort();
    out.extend(tuples);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five_vector() -> GFMatrix {
        let f = FiniteField::prime(2).unwrap();
        GFMatrix::from_columns(
            f,
            &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0], vec![0, 1, 1]],
        )
        .unwrap()
    }

    #[test]
    fn rank_examples() {
        let m = five_vector();
        assert_eq!(gf_rank(&m, &[1, 2, 4]).unwrap(), 2);
        assert_eq!(gf_rank(&m, &[]).unwrap(), 0);
        assert_eq!(gf_rank(&m, &[0, 1, 2]).unwrap(), 3);
        assert!(matches!(gf_rank(&m, &[7]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn projective_point_counts() {
        let f2 = FiniteField::prime(2).unwrap();
        assert_eq!(projective_points(&f2, 2).len(), 3);
        assert_eq!(projective_points(&f2, 3).len(), 7);
        let f3 = FiniteField::prime(3).unwrap();
        assert_eq!(projective_points(&f3, 1), vec![vec![1]]);
        assert_eq!(projective_points(&f3, 3).len(), 13);
        let f4 = FiniteField::of_order(4).unwrap();
        assert_eq!(projective_points(&f4, 3).len(), 21);
    }

    #[test]
    fn builtin_fields_are_fields() {
        for q in [4u32, 8, 9, 16, 25, 27] {
            let f = FiniteField::of_order(q).unwrap();
            for a in 1..q {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), 1, "q={q} a={a}");
            }
            // distributivity on a sample
            for a in 0..q.min(9) {
                for b in 0..q.min(9) {
                    let c = q - 1;
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_fields() {
        assert_eq!(FiniteField::prime(6), Err(Error::NotPrime(6)));
        assert!(matches!(
            FiniteField::new(2, 2, Some(vec![1, 0, 1])),
            Err(Error::ReducibleModulus(_))
        ));
        assert!(FiniteField::of_order(6).is_err());
        assert!(FiniteField::new(2, 21, None).is_err());
    }
}
