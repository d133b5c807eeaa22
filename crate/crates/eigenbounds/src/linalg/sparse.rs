//! Compressed sparse row matrices and triplet assembly.

/// Accumulator for finite element assembly: duplicate entries are summed when
/// compressed.
#[derive(Debug, Clone)]
pub struct Triplets {
    n: usize,
    entries: Vec<(usize, usize, f64)>,
}

impl Triplets {
    pub fn new(n: usize) -> Self {
        Triplets {
            n,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, row: usize, col: usize, value: f64) {
        debug_assert!(row < self.n && col < self.n);
        if value != 0.0 {
            self.entries.push((row, col, value));
        }
    }

    pub fn into_csr(mut self) -> CsrMatrix {
        self.entries
            .sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut indptr = Vec::with_capacity(self.n + 1);
        let mut indices = Vec::new();
        let mut data = Vec::new();
        indptr.push(0);
        let mut row = 0usize;
        for (r, c, v) in self.entries {
            while row < r {
                indptr.push(indices.len());
                row += 1;
            }
            if let (Some(&last_c), Some(last_v)) = (indices.last(), data.last_mut()) {
                if indptr.len() - 1 == row && last_c == c && indptr[row] < indices.len() {
                    *last_v += v;
                    continue;
                }
            }
            indices.push(c);
            data.push(v);
        }
        while row < self.n {
            indptr.push(indices.len());
            row += 1;
        }
        CsrMatrix {
            n: self.n,
            indptr,
            indices,
            data,
        }
    }
}

/// Square CSR matrix with sorted column indices per row.
#[derive(Debug, Clone)]
pub struct CsrMatrix {
    pub n: usize,
    pub indptr: Vec<usize>,
    pub indices: Vec<usize>,
    pub data: Vec<f64>,
}

impl CsrMatrix {
    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    pub fn row(&self, i: usize) -> (&[usize], &[f64]) {
        let span = self.indptr[i]..self.indptr[i + 1];
        (&self.indices[span.clone()], &self.data[span])
    }

    /// y = A x.
    pub fn mul_vec(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        debug_assert_eq!(y.len(), self.n);
        for i in 0..self.n {
            let (cols, vals) = self.row(i);
            let mut acc = 0.0;
            for (c, v) in cols.iter().zip(vals) {
                acc += v * x[*c];
            }
            y[i] = acc;
        }
    }

    pub fn mul_vec_alloc(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        self.mul_vec(x, &mut y);
        y
    }

    /// x^T A y.
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.n {
            let (cols, vals) = self.row(i);
            let mut row_acc = 0.0;
            for (c, v) in cols.iter().zip(vals) {
                row_acc += v * y[*c];
            }
            acc += x[i] * row_acc;
        }
        acc
    }

    /// Largest absolute asymmetry |A - A^T|_max; zero for exactly symmetric
    /// assembly.
    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            let (cols, vals) = self.row(i);
            for (&j, &v) in cols.iter().zip(vals) {
                let vt = self.get(j, i);
                worst = worst.max((v - vt).abs());
            }
        }
        worst
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (cols, vals) = self.row(i);
        match cols.binary_search(&j) {
            Ok(k) => vals[k],
            Err(_) => 0.0,
        }
    }

    pub fn to_dense(&self) -> nalgebra::DMatrix<f64> {
        let mut m = nalgebra::DMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            let (cols, vals) = self.row(i);
            for (c, v) in cols.iter().zip(vals) {
                m[(i, *c)] = *v;
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_sum_duplicates_and_sort() {
        let mut t = Triplets::new(3);
        t.push(2, 0, 1.0);
        t.push(0, 1, 2.0);
        t.push(0, 1, 3.0);
        t.push(1, 1, -1.0);
        t.push(0, 0, 4.0);
        let a = t.into_csr();
        assert_eq!(a.nnz(), 4);
        assert_eq!(a.get(0, 1), 5.0);
        assert_eq!(a.get(0, 0), 4.0);
        assert_eq!(a.get(1, 1), -1.0);
        assert_eq!(a.get(2, 0), 1.0);
        assert_eq!(a.get(2, 2), 0.0);
        let y = a.mul_vec_alloc(&[1.0, 1.0, 1.0]);
        assert_eq!(y, vec![9.0, -1.0, 1.0]);
    }

    #[test]
    fn empty_rows_are_handled() {
        let mut t = Triplets::new(4);
        t.push(3, 3, 2.0);
        let a = t.into_csr();
        assert_eq!(a.indptr, vec![0, 0, 0, 0, 1]);
        assert_eq!(a.bilinear(&[0.0, 0.0, 0.0, 2.0], &[0.0, 0.0, 0.0, 1.0]), 4.0);
    }
}
