//! Dense matrix carriers.
//!
//! Operator matrices (coboundaries, Laplacians, adjacency) are built in exact
//! integer arithmetic as [`IntMatrix`] and only converted to floating point at
//! the linear-algebra boundary, which rules out sign-convention drift. The
//! floating-point side is [`SymMatrix`], a dense symmetric matrix whose
//! row/column order always derives from a `FaceIndex`.

use crate::error::LinalgError;

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn matmul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(l, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn trace(&self) -> i64 {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Entrywise inner product (both matrices square of equal shape).
    pub fn inner(&self, other: &IntMatrix) -> i64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Conversion to the floating-point symmetric carrier.
    pub fn to_sym(&self) -> Result<SymMatrix, LinalgError> {
        if !self.is_symmetric() {
            return Err(LinalgError::NotSymmetric {
                max_asymmetry: f64::INFINITY,
            });
        }
        Ok(SymMatrix {
            dim: self.rows,
            data: self.data.iter().map(|&x| x as f64).collect(),
        })
    }
}

/// Dense real symmetric matrix. Construction rejects asymmetric data and the
/// stored matrix is exactly symmetric thereafter.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Maximum tolerated relative asymmetry on construction.
    pub const SYMMETRY_TOL: f64 = 1e-12;

    /// Builds from row-major data of length `dim*dim`; rejects matrices whose
    /// asymmetry exceeds `1e-12` relative to the largest entry, and stores the
    /// symmetrized part.
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self, LinalgError> {
        if data.len() != dim * dim {
            return Err(LinalgError::DimensionMismatch(format!(
                "expected {} entries, got {}",
                dim * dim,
                data.len()
            )));
        }
        let scale = data.iter().fold(1.0f64, |m, &x| m.max(x.abs()));
        let mut max_asym: f64 = 0.0;
        for i in 0..dim {
            for j in i + 1..dim {
                max_asym = max_asym.max((data[i * dim + j] - data[j * dim + i]).abs());
            }
        }
        if max_asym > Self::SYMMETRY_TOL * scale {
            return Err(LinalgError::NotSymmetric {
                max_asymmetry: max_asym,
            });
        }
        let mut m = SymMatrix { dim, data };
        for i in 0..dim {
            for j in i + 1..dim {
                let v = 0.5 * (m.get(i, j) + m.get(j, i));
                m.data[i * dim + j] = v;
                m.data[j * dim + i] = v;
            }
        }
        Ok(m)
    }

    pub fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = SymMatrix::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    pub fn all_ones(dim: usize) -> Self {
        SymMatrix {
            dim,
            data: vec![1.0; dim * dim],
        }
    }

    /// Builds from a symmetric generator `f(i, j)`; only `i <= j` is consulted.
    pub fn from_fn<F: FnMut(usize, usize) -> f64>(dim: usize, mut f: F) -> Self {
        let mut m = SymMatrix::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                m.data[i * dim + j] = v;
                m.data[j * dim + i] = v;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    /// Sets the `(i,j)` and `(j,i)` entries.
    #[inline]
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] = v;
        self.data[j * self.dim + i] = v;
    }

    #[inline]
    pub fn add_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] += v;
        if i != j {
            self.data[j * self.dim + i] += v;
        }
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Frobenius inner product `<A, B> = trace(AB)`.
    pub fn inner(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &x| m.max(x.abs()))
    }

    pub fn scaled(&self, s: f64) -> SymMatrix {
        SymMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, other.dim);
        SymMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, other.dim);
        SymMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn axpy(&mut self, s: f64, other: &SymMatrix) {
        assert_eq!(self.dim, other.dim);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
    }

    /// Matrix-vector product.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim);
        let mut y = vec![0.0; self.dim];
        for i in 0..self.dim {
            let row = &self.data[i * self.dim..(i + 1) * self.dim];
            y[i] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    }

    /// Full product `A·B` (not symmetric in general), returned row major.
    pub fn matmul_full(&self, other: &SymMatrix) -> Vec<f64> {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for l in 0..n {
                let a = self.data[i * n + l];
                if a == 0.0 {
                    continue;
                }
                let row = &other.data[l * n..(l + 1) * n];
                let dst = &mut out[i * n..(i + 1) * n];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetric_data() {
        let data = vec![1.0, 2.0, 3.0, 4.0];
        assert!(matches!(
            SymMatrix::new(2, data),
            Err(LinalgError::NotSymmetric { .. })
        ));
        let ok = SymMatrix::new(2, vec![1.0, 2.0, 2.0, 4.0]).unwrap();
        assert_eq!(ok.get(0, 1), 2.0);
    }

    #[test]
    fn int_matmul_and_transpose() {
        let mut a = IntMatrix::zeros(2, 3);
        a.set(0, 0, 1);
        a.set(0, 2, -1);
        a.set(1, 1, 2);
        let at = a.transpose();
        let g = at.matmul(&a); // 3x3 Gram
        assert!(g.is_symmetric());
        assert_eq!(g.get(0, 0), 1);
        assert_eq!(g.get(2, 2), 1);
        assert_eq!(g.get(0, 2), -1);
        assert_eq!(g.get(1, 1), 4);
    }

    #[test]
    fn inner_and_trace() {
        let i = SymMatrix::identity(3);
        let j = SymMatrix::all_ones(3);
        assert_eq!(i.inner(&j), 3.0);
        assert_eq!(j.trace(), 3.0);
        assert_eq!(j.frob_norm(), 3.0);
    }
}
