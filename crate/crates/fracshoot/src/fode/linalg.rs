//! Dense LU factorization for the small systems that arise in starting
//! weight construction and coupled Newton steps (dimension <= 6 or so).

/// LU factorization with partial pivoting, stored in packed row-major form.
pub(crate) struct Lu {
    n: usize,
    lu: Vec<f64>,
    piv: Vec<usize>,
}

impl Lu {
    /// Factors the row-major `n x n` matrix. Returns `None` if a pivot
    /// column is exactly zero (matrix numerically singular).
    pub(crate) fn factor(mat: &[f64], n: usize) -> Option<Self> {
        assert_eq!(mat.len(), n * n);
        let mut lu = mat.to_vec();
        let mut piv: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let mut p = k;
            let mut best = lu[k * n + k].abs();
            for r in k + 1..n {
                let v = lu[r * n + k].abs();
                if v > best {
                    best = v;
                    p = r;
                }
            }
            if best == 0.0 {
                return None;
            }
            if p != k {
                for c in 0..n {
                    lu.swap(k * n + c, p * n + c);
                }
                piv.swap(k, p);
            }
            let d = lu[k * n + k];
            for r in k + 1..n {
                let m = lu[r * n + k] / d;
                lu[r * n + k] = m;
                for c in k + 1..n {
                    lu[r * n + c] -= m * lu[k * n + c];
                }
            }
        }
        Some(Self { n, lu, piv })
    }

    /// Solves `A x = b` in place.
    pub(crate) fn solve(&self, b: &mut [f64]) {
        let n = self.n;
        assert_eq!(b.len(), n);
        let permuted: Vec<f64> = self.piv.iter().map(|&p| b[p]).collect();
        b.copy_from_slice(&permuted);
        for r in 1..n {
            for c in 0..r {
                b[r] -= self.lu[r * n + c] * b[c];
            }
        }
        for r in (0..n).rev() {
            for c in r + 1..n {
                b[r] -= self.lu[r * n + c] * b[c];
            }
            b[r] /= self.lu[r * n + r];
        }
    }
}
