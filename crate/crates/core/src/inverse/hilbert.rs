use std::fmt;

use serde::Serialize;

/// Per-degree dimensions `h_0..h_D` of a graded quotient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct HilbertVector(pub Vec<usize>);

impl HilbertVector {
    pub fn new(h: Vec<usize>) -> Self {
        let mut h = h;
        while h.len() > 1 && h.last() == Some(&0) {
            h.pop();
        }
        HilbertVector(h)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Largest degree with a nonzero entry.
    pub fn top_degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn get(&self, d: usize) -> usize {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `h_d = h_{D-d}` for all `d`.
    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// No increase after a decrease.
    pub fn is_unimodal(&self) -> bool {
        let mut falling = false;
        for w in self.0.windows(2) {
            if w[1] < w[0] {
                falling = true;
            } else if w[1] > w[0] && falling {
                return false;
            }
        }
        true
    }

    /// Hilbert vector of a tensor product: the polynomial product.
    pub fn product(&self, other: &HilbertVector) -> HilbertVector {
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        HilbertVector::new(out)
    }
}

impl fmt::Display for HilbertVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The Gaussian binomial `[n, k]_q`, the number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        // [m]_q = 1 + q + ... + q^(m-1); at q = 1 this is the ordinary binomial
        num *= (0..(n - i) as u32).map(|e| q.pow(e)).sum::<u128>();
        den *= (0..(i + 1) as u32).map(|e| q.pow(e)).sum::<u128>();
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_shape() {
        let h = HilbertVector::new(vec![1, 5, 5, 1, 0]);
        assert_eq!(h.to_string(), "(1,5,5,1)");
        assert!(h.is_symmetric() && h.is_unimodal());
        assert_eq!(h.top_degree(), 3);
        assert!(!HilbertVector::new(vec![1, 5, 6, 1]).is_symmetric());
        assert!(!HilbertVector::new(vec![1, 3, 1, 3]).is_unimodal());
        assert_eq!(gaussian_binomial(5, 2, 1), 10);
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(serde_json::to_string(&h).unwrap(), "[1,5,5,1]");
    }

    #[test]
    fn products() {
        let a = HilbertVector::new(vec![1, 1]);
        assert_eq!(a.product(&a).product(&a).0, vec![1, 3, 3, 1]);
    }

    #[test]
    fn q_binomials() {
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(gaussian_binomial(2, 1, 3), 4);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(5, 0, 7), 1);
    }
}
