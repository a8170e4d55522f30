//! Self-contained dense symmetric linear algebra.
//!
//! Everything here is deterministic and dependency free: a cyclic Jacobi
//! eigensolver (adequate at desk scale, matrices up to a few hundred rows),
//! the PSD cone projection built on it, and a Cholesky solve for symmetric
//! positive definite systems. All tolerances live in [`tol`].

use crate::error::LinalgError;
use crate::matrix::SymMatrix;

/// Numerical tolerances used across the crate, collected in one place.
pub mod tol {
    /// Jacobi stops when the off-diagonal Frobenius norm drops below this
    /// fraction of the full Frobenius norm.
    pub const JACOBI_REL: f64 = 1e-12;
    /// Relative reconstruction error allowed for an eigendecomposition.
    pub const EIG_RECONSTRUCTION: f64 = 1e-9;
    /// Numerical rank threshold: eigenvalues below
    /// `RANK_REL * dim * max|eig|` count as zero.
    pub const RANK_REL: f64 = 1e-8;
    /// Relative residual allowed for a positive definite solve.
    pub const SOLVE_RESIDUAL: f64 = 1e-10;
    /// Eigenvalues above this (negative) floor are accepted as nonnegative.
    pub const PSD_FLOOR: f64 = -1e-9;
}

/// Full eigendecomposition of a symmetric matrix: `A = V diag(λ) Vᵀ` with
/// eigenvalues ascending and orthonormal columns in `V`.
#[derive(Clone, Debug)]
pub struct EigDecomposition {
    dim: usize,
    eigenvalues: Vec<f64>,
    /// Row-major `dim x dim`; column `j` is the eigenvector of `eigenvalues[j]`.
    vectors: Vec<f64>,
}

impl EigDecomposition {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn vector(&self, j: usize) -> Vec<f64> {
        (0..self.dim).map(|i| self.vectors[i * self.dim + j]).collect()
    }

    pub fn vectors(&self) -> &[f64] {
        &self.vectors
    }

    /// `V diag(f(λ)) Vᵀ` for an entrywise spectral map.
    pub fn apply_spectral<F: Fn(f64) -> f64>(&self, f: F) -> SymMatrix {
        let n = self.dim;
        let mut out = SymMatrix::zeros(n);
        let data = out.data_mut();
        for (l, &lam) in self.eigenvalues.iter().enumerate() {
            let w = f(lam);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vi = self.vectors[i * n + l];
                if vi == 0.0 {
                    continue;
                }
                let wvi = w * vi;
                for j in i..n {
                    data[i * n + j] += wvi * self.vectors[j * n + l];
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                data[j * n + i] = data[i * n + j];
            }
        }
        out
    }

    /// Orthogonal projector onto the span of eigenvectors whose eigenvalue is
    /// within `atol` of `target`.
    pub fn spectral_projector(&self, target: f64, atol: f64) -> SymMatrix {
        self.apply_spectral(|lam| if (lam - target).abs() <= atol { 1.0 } else { 0.0 })
    }
}

fn off_diag_frob(m: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let x = m[i * n + j];
            s += 2.0 * x * x;
        }
    }
    s.sqrt()
}

/// Full spectrum of a symmetric matrix by cyclic Jacobi rotations.
///
/// Converges when the off-diagonal Frobenius norm falls below
/// `1e-12 * ||A||_F`. Deterministic: identical input yields an identical
/// decomposition.
pub fn sym_eig(a: &SymMatrix) -> EigDecomposition {
    let n = a.dim();
    let mut m = a.data().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    if n > 1 {
        jacobi(&mut m, &mut v, n);
    }
    // extract and sort ascending, permuting eigenvector columns alongside
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    order.sort_by(|&a, &b| diag[a].partial_cmp(&diag[b]).expect("finite eigenvalues"));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (jnew, &jold) in order.iter().enumerate() {
        for i in 0..n {
            vectors[i * n + jnew] = v[i * n + jold];
        }
    }
    EigDecomposition {
        dim: n,
        eigenvalues,
        vectors,
    }
}

fn jacobi(m: &mut [f64], v: &mut [f64], n: usize) {
    let norm = {
        let s: f64 = m.iter().map(|x| x * x).sum();
        s.sqrt()
    };
    if norm == 0.0 {
        return;
    }
    let target = tol::JACOBI_REL * norm;
    const MAX_SWEEPS: usize = 100;
    for sweep in 0..MAX_SWEEPS {
        let off = off_diag_frob(m, n);
        if off <= target {
            return;
        }
        // small rotations are skipped in early sweeps (classical threshold)
        let thresh = if sweep < 3 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = m[p * n + q];
                let g = 100.0 * apq.abs();
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    m[p * n + q] = 0.0;
                    m[q * n + p] = 0.0;
                    continue;
                }
                if apq.abs() <= thresh {
                    continue;
                }
                let theta = 0.5 * (aqq - app) / apq;
                let t = if theta.abs() > 1e10 {
                    0.5 / theta
                } else {
                    let sgn = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sgn / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                m[p * n + p] = app - h;
                m[q * n + q] = aqq + h;
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = m[r * n + p];
                    let arq = m[r * n + q];
                    let new_p = arp - s * (arq + tau * arp);
                    let new_q = arq + s * (arp - tau * arq);
                    m[r * n + p] = new_p;
                    m[p * n + r] = new_p;
                    m[r * n + q] = new_q;
                    m[q * n + r] = new_q;
                }
                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = vrp - s * (vrq + tau * vrp);
                    v[r * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
}

/// Largest eigenvalue.
pub fn lambda_max(a: &SymMatrix) -> f64 {
    if a.dim() == 0 {
        return 0.0;
    }
    *sym_eig(a).eigenvalues().last().unwrap()
}

/// Smallest eigenvalue.
pub fn lambda_min(a: &SymMatrix) -> f64 {
    if a.dim() == 0 {
        return 0.0;
    }
    sym_eig(a).eigenvalues()[0]
}

/// Nearest positive semidefinite matrix in Frobenius norm: negative
/// eigenvalues are clipped to zero.
pub fn psd_project(a: &SymMatrix) -> SymMatrix {
    psd_project_eig(&sym_eig(a))
}

/// PSD projection from a precomputed decomposition.
pub fn psd_project_eig(eig: &EigDecomposition) -> SymMatrix {
    eig.apply_spectral(|lam| lam.max(0.0))
}

/// Count of eigenvalues treated as nonzero by the standard numerical-rank
/// heuristic: `λ > 1e-8 · dim · max|λ|` (eigenvalues of a PSD Gram matrix).
pub fn numerical_rank(eigenvalues: &[f64], dim: usize) -> usize {
    let max = eigenvalues.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    if max == 0.0 {
        return 0;
    }
    let cut = tol::RANK_REL * dim as f64 * max;
    eigenvalues.iter().filter(|&&x| x.abs() > cut).count()
}

/// Cholesky factorization of a symmetric positive definite matrix.
#[derive(Clone, Debug)]
pub struct Cholesky {
    n: usize,
    /// Lower-triangular factor, row major (upper part unused).
    l: Vec<f64>,
}

impl Cholesky {
    pub fn new(m: &SymMatrix) -> Result<Self, LinalgError> {
        let n = m.dim();
        let mut l = m.data().to_vec();
        for j in 0..n {
            let mut d = l[j * n + j];
            for k in 0..j {
                d -= l[j * n + k] * l[j * n + k];
            }
            if d <= 0.0 || !d.is_finite() {
                return Err(LinalgError::NotPositiveDefinite { pivot: d, index: j });
            }
            let dj = d.sqrt();
            l[j * n + j] = dj;
            for i in j + 1..n {
                let mut s = l[i * n + j];
                for k in 0..j {
                    s -= l[i * n + k] * l[j * n + k];
                }
                l[i * n + j] = s / dj;
            }
        }
        Ok(Cholesky { n, l })
    }

    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>, LinalgError> {
        if b.len() != self.n {
            return Err(LinalgError::DimensionMismatch(format!(
                "rhs length {} for system of size {}",
                b.len(),
                self.n
            )));
        }
        let n = self.n;
        let mut y = b.to_vec();
        for i in 0..n {
            for k in 0..i {
                y[i] -= self.l[i * n + k] * y[k];
            }
            y[i] /= self.l[i * n + i];
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                y[i] -= self.l[k * n + i] * y[k];
            }
            y[i] /= self.l[i * n + i];
        }
        Ok(y)
    }
}

/// Solves `M x = b` for symmetric positive definite `M` via Cholesky.
/// Reports non-positive-definite input distinctly from shape mismatches.
pub fn solve_spd(m: &SymMatrix, b: &[f64]) -> Result<Vec<f64>, LinalgError> {
    Cholesky::new(m)?.solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn identity_eigenvalues() {
        let eig = sym_eig(&SymMatrix::identity(5));
        for &l in eig.eigenvalues() {
            assert_close(l, 1.0, 1e-14);
        }
    }

    #[test]
    fn all_ones_spectrum() {
        // rank one: eigenvalues {n, 0^(n-1)}
        for n in [2usize, 5, 8] {
            let eig = sym_eig(&SymMatrix::all_ones(n));
            let ev = eig.eigenvalues();
            assert_close(ev[n - 1], n as f64, 1e-10);
            for &l in &ev[..n - 1] {
                assert_close(l, 0.0, 1e-10);
            }
        }
    }

    #[test]
    fn analytic_2x2_and_3x3() {
        let a = SymMatrix::new(2, vec![2.0, 1.0, 1.0, 2.0]).unwrap();
        let ev = sym_eig(&a);
        assert_close(ev.eigenvalues()[0], 1.0, 1e-10);
        assert_close(ev.eigenvalues()[1], 3.0, 1e-10);

        // circulant 3x3 with first row (0, 1, 1): eigenvalues {2, -1, -1}
        let c = SymMatrix::new(3, vec![0., 1., 1., 1., 0., 1., 1., 1., 0.]).unwrap();
        let ev = sym_eig(&c);
        assert_close(ev.eigenvalues()[0], -1.0, 1e-10);
        assert_close(ev.eigenvalues()[1], -1.0, 1e-10);
        assert_close(ev.eigenvalues()[2], 2.0, 1e-10);
    }

    #[test]
    fn reconstruction_and_orthogonality() {
        // deterministic pseudo-random symmetric matrix
        let n = 20;
        let mut seed = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let a = SymMatrix::from_fn(n, |_, _| next());
        let eig = sym_eig(&a);
        let recon = eig.apply_spectral(|l| l);
        let err = recon.sub(&a).frob_norm();
        assert!(err <= tol::EIG_RECONSTRUCTION * a.frob_norm().max(1.0));
        // VᵀV = I
        let mut max_dev = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = (0..n)
                    .map(|r| eig.vectors()[r * n + i] * eig.vectors()[r * n + j])
                    .sum();
                let want = if i == j { 1.0 } else { 0.0 };
                max_dev = max_dev.max((dot - want).abs());
            }
        }
        assert!(max_dev <= 1e-10, "orthogonality deviation {max_dev}");
    }

    #[test]
    fn psd_project_examples() {
        let d = SymMatrix::new(2, vec![1.0, 0.0, 0.0, -1.0]).unwrap();
        let p = psd_project(&d);
        assert_close(p.get(0, 0), 1.0, 1e-12);
        assert_close(p.get(1, 1), 0.0, 1e-12);

        let negj = SymMatrix::all_ones(3).scaled(-1.0);
        assert!(psd_project(&negj).frob_norm() <= 1e-10);

        // idempotence on a PSD input
        let psd = SymMatrix::new(2, vec![2.0, 1.0, 1.0, 2.0]).unwrap();
        let p = psd_project(&psd);
        assert!(p.sub(&psd).frob_norm() <= 1e-9);
    }

    #[test]
    fn cholesky_solves() {
        let m = SymMatrix::new(3, vec![4., 1., 0., 1., 3., 1., 0., 1., 2.]).unwrap();
        let b = vec![1.0, 2.0, 3.0];
        let x = solve_spd(&m, &b).unwrap();
        let r: Vec<f64> = m
            .matvec(&x)
            .iter()
            .zip(&b)
            .map(|(a, b)| a - b)
            .collect();
        let rn = r.iter().map(|x| x * x).sum::<f64>().sqrt();
        let bn = b.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!(rn <= tol::SOLVE_RESIDUAL * bn);

        // identity solve returns b
        let x = solve_spd(&SymMatrix::identity(3), &b).unwrap();
        assert_eq!(x, b);

        // non-PD input is a distinct error from shape mismatch
        let bad = SymMatrix::new(2, vec![1.0, 2.0, 2.0, 1.0]).unwrap();
        assert!(matches!(
            solve_spd(&bad, &[1.0, 1.0]),
            Err(LinalgError::NotPositiveDefinite { .. })
        ));
        assert!(matches!(
            solve_spd(&SymMatrix::identity(2), &[1.0]),
            Err(LinalgError::DimensionMismatch(_))
        ));
    }
}
