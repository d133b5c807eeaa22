//! Sparse LDL^T factorization of symmetric positive definite matrices:
//! elimination-tree symbolic analysis followed by an up-looking numeric pass,
//! on a fill-reducing permutation.

use super::{nested_dissection, CsrMatrix};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LdlError {
    #[error("matrix is not positive definite (pivot {pivot:.3e} at elimination step {step})")]
    NotPositiveDefinite { step: usize, pivot: f64 },
}

/// LDL^T factor of P A P^T for a symmetric positive definite `A`.
pub struct LdlFactor {
    n: usize,
    /// perm[k] = original index eliminated k-th.
    perm: Vec<usize>,
    lp: Vec<usize>,
    li: Vec<usize>,
    lx: Vec<f64>,
    d: Vec<f64>,
}

impl LdlFactor {
    /// Factor a symmetric positive definite matrix given in full (both
    /// triangles) CSR form. `positions`, when present, drive the geometric
    /// nested-dissection ordering; otherwise the natural order is used.
    pub fn new(matrix: &CsrMatrix, positions: Option<&[[f64; 2]]>) -> Result<Self, LdlError> {
        let n = matrix.n;
        let perm = match positions {
            Some(pos) if n > 64 => nested_dissection(matrix, pos),
            _ => (0..n).collect(),
        };
        let mut iperm = vec![0usize; n];
        for (k, &p) in perm.iter().enumerate() {
            iperm[p] = k;
        }

        // Upper triangle of P A P^T in CSC form (column pointers cp, row
        // indices ci, values cx), rows within a column unsorted.
        let mut col_counts = vec![0usize; n];
        for i in 0..n {
            let (cols, _) = matrix.row(i);
            for &j in cols {
                let (pi, pj) = (iperm[i], iperm[j]);
                if pi <= pj {
                    col_counts[pj] += 1;
                }
            }
        }
        let mut cp = vec![0usize; n + 1];
        for k in 0..n {
            cp[k + 1] = cp[k] + col_counts[k];
        }
        let nnz_upper = cp[n];
        let mut ci = vec![0usize; nnz_upper];
        let mut cx = vec![0f64; nnz_upper];
        let mut fill = cp.clone();
        for i in 0..n {
            let (cols, vals) = matrix.row(i);
            for (&j, &v) in cols.iter().zip(vals) {
                let (pi, pj) = (iperm[i], iperm[j]);
                if pi <= pj {
                    let slot = fill[pj];
                    ci[slot] = pi;
                    cx[slot] = v;
                    fill[pj] += 1;
                }
            }
        }

        // Symbolic pass: elimination tree and column counts of L.
        let mut parent = vec![usize::MAX; n];
        let mut flag = vec![usize::MAX; n];
        let mut lnz = vec![0usize; n];
        for k in 0..n {
            flag[k] = k;
            for p in cp[k]..cp[k + 1] {
                let mut i = ci[p];
                while i < k && flag[i] != k {
                    if parent[i] == usize::MAX {
                        parent[i] = k;
                    }
                    lnz[i] += 1;
                    flag[i] = k;
                    i = parent[i];
                }
            }
        }
        let mut lp = vec![0usize; n + 1];
        for k in 0..n {
            lp[k + 1] = lp[k] + lnz[k];
        }
        let mut li = vec![0usize; lp[n]];
        let mut lx = vec![0f64; lp[n]];
        let mut d = vec![0f64; n];

        // Numeric pass: for each row k of L, a sparse triangular solve along
        // the elimination tree.
        let mut y = vec![0f64; n];
        let mut pattern = vec![0usize; n];
        let mut stack = vec![0usize; n];
        let mut lnz_done = vec![0usize; n];
        flag.iter_mut().for_each(|f| *f = usize::MAX);
        for k in 0..n {
            let mut top = n;
            flag[k] = k;
            for p in cp[k]..cp[k + 1] {
                let mut i = ci[p];
                y[i] += cx[p];
                let mut len = 0usize;
                while i < k && flag[i] != k {
                    stack[len] = i;
                    len += 1;
                    flag[i] = k;
                    i = parent[i];
                }
                while len > 0 {
                    len -= 1;
                    top -= 1;
                    pattern[top] = stack[len];
                }
            }
            d[k] = y[k];
            y[k] = 0.0;
            for t in top..n {
                let i = pattern[t];
                let yi = y[i];
                y[i] = 0.0;
                let lki = yi / d[i];
                for p in lp[i]..lp[i] + lnz_done[i] {
                    y[li[p]] -= lx[p] * yi;
                }
                let slot = lp[i] + lnz_done[i];
                li[slot] = k;
                lx[slot] = lki;
                lnz_done[i] += 1;
                d[k] -= lki * yi;
            }
            if d[k] <= 0.0 || !d[k].is_finite() {
                return Err(LdlError::NotPositiveDefinite {
                    step: k,
                    pivot: d[k],
                });
            }
        }

        Ok(LdlFactor {
            n,
            perm,
            lp,
            li,
            lx,
            d,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nnz_l(&self) -> usize {
        self.li.len()
    }

    /// Solve A x = b.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        debug_assert_eq!(b.len(), self.n);
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for j in 0..self.n {
            let xj = x[j];
            for p in self.lp[j]..self.lp[j + 1] {
                x[self.li[p]] -= self.lx[p] * xj;
            }
        }
        for k in 0..self.n {
            x[k] /= self.d[k];
        }
        for j in (0..self.n).rev() {
            let mut acc = x[j];
            for p in self.lp[j]..self.lp[j + 1] {
                acc -= self.lx[p] * x[self.li[p]];
            }
            x[j] = acc;
        }
        let mut out = vec![0.0; self.n];
        for (k, &p) in self.perm.iter().enumerate() {
            out[p] = x[k];
        }
        out
    }
}
