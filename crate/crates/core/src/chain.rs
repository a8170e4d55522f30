//! Coboundary/boundary operators, combinatorial Laplacians, the adjacency
//! matrix of a complex, spectra and Betti numbers.
//!
//! All operators over a complex index only the faces actually present; the
//! complete-complex down-Laplacian and the variants ending in `_on` index an
//! arbitrary `FaceIndex` (used by the theta programs, which run over every
//! `k`-subset and embed complex-specific matrices by zero padding).

use std::io::{BufRead, Write};

use crate::complex::{epsilon, incidence, Complex, FaceIndex};
use crate::error::ComplexError;
use crate::linalg;
use crate::matrix::{IntMatrix, SymMatrix};

/// The coboundary operator `δ_i` in the elementary-cochain basis: rows are the
/// `(i+1)`-faces, columns the `i`-faces, entries the incidence numbers.
/// Valid for `-1 <= i < k`.
pub fn coboundary(x: &Complex, i: i32) -> Result<IntMatrix, ComplexError> {
    if i < -1 || i >= x.k() as i32 {
        return Err(ComplexError::DimensionOutOfRange { dim: i, k: x.k() });
    }
    let rows = x.faces(i + 1);
    let cols = x.faces(i);
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (r, h) in rows.iter().enumerate() {
        for (c, f) in cols.iter().enumerate() {
            m.set(r, c, incidence(h, f));
        }
    }
    Ok(m)
}

/// The boundary operator `∂_{i+1} = δ_i*`: the transpose of the coboundary.
pub fn boundary(x: &Complex, i_plus_1: i32) -> Result<IntMatrix, ComplexError> {
    Ok(coboundary(x, i_plus_1 - 1)?.transpose())
}

/// Up-Laplacian `L↑_i = ∂_{i+1} δ_i` over the `i`-faces, exact integers.
pub fn up_laplacian_int(x: &Complex, i: i32) -> Result<IntMatrix, ComplexError> {
    let d = coboundary(x, i)?;
    Ok(d.transpose().matmul(&d))
}

/// Down-Laplacian `L↓_i = δ_{i-1} ∂_i` over the `i`-faces, exact integers.
pub fn down_laplacian_int(x: &Complex, i: i32) -> Result<IntMatrix, ComplexError> {
    if i > x.k() as i32 || i < 0 {
        return Err(ComplexError::DimensionOutOfRange { dim: i, k: x.k() });
    }
    let d = coboundary(x, i - 1)?;
    Ok(d.matmul(&d.transpose()))
}

pub fn up_laplacian(x: &Complex, i: i32) -> Result<SymMatrix, ComplexError> {
    Ok(up_laplacian_int(x, i)?.to_sym().expect("Gram matrices are symmetric"))
}

pub fn down_laplacian(x: &Complex, i: i32) -> Result<SymMatrix, ComplexError> {
    Ok(down_laplacian_int(x, i)?.to_sym().expect("Gram matrices are symmetric"))
}

/// Entry-formula down-Laplacian over an arbitrary family of `d`-faces:
/// diagonal `d+1`, off-diagonal `ε(F, F')` when the faces share `d` vertices.
/// On the faces of a pure complex this coincides with `δ∂`.
pub fn down_laplacian_on(index: &FaceIndex) -> IntMatrix {
    let n = index.len();
    let diag = index.dim() + 1;
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, i, diag as i64);
        for j in i + 1..n {
            let e = epsilon(index.face(i), index.face(j));
            m.set(i, j, e);
            m.set(j, i, e);
        }
    }
    m
}

/// The down-Laplacian `L↓_{k-1}` of the complete complex: indexed by all
/// `k`-subsets of the vertex set, diagonal `k`, off-diagonal `ε`. Its unique
/// nonzero eigenvalue is `n`, with multiplicity `binom(n-1, k-1)`.
pub fn complete_down_laplacian_int(n: usize, k: usize) -> IntMatrix {
    down_laplacian_on(&FaceIndex::all_subsets(n, k as i32 - 1))
}

pub fn complete_down_laplacian(n: usize, k: usize) -> SymMatrix {
    complete_down_laplacian_int(n, k)
        .to_sym()
        .expect("entry formula is symmetric")
}

/// Adjacency matrix of the complex over an arbitrary index of `(k-1)`-faces:
/// `ε(F, F')` when `F ∪ F'` is a `k`-face, 0 otherwise. With `D` the degree
/// diagonal, `L↑_{k-1}(X) = D - A` on the faces actually present.
pub fn adjacency_on(x: &Complex, index: &FaceIndex) -> IntMatrix {
    assert_eq!(index.dim(), x.k() as i32 - 1);
    let n = index.len();
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let f = index.face(i);
            let g = index.face(j);
            if f.intersection_len(g) as i32 == index.dim() && x.contains(&f.union(g)) {
                let e = epsilon(f, g);
                m.set(i, j, e);
                m.set(j, i, e);
            }
        }
    }
    m
}

/// Adjacency matrix over the `(k-1)`-faces of the complex itself.
pub fn adjacency_int(x: &Complex) -> IntMatrix {
    adjacency_on(x, &x.face_index(x.k() as i32 - 1))
}

pub fn adjacency(x: &Complex) -> SymMatrix {
    adjacency_int(x).to_sym().expect("adjacency is symmetric")
}

/// Degrees of the `(k-1)`-faces, in face-index order.
pub fn degrees(x: &Complex) -> Vec<usize> {
    x.faces(x.k() as i32 - 1)
        .iter()
        .map(|f| x.degree(f))
        .collect()
}

/// Eigenvalues in ascending order.
pub fn spectrum(m: &SymMatrix) -> Vec<f64> {
    linalg::sym_eig(m).eigenvalues().to_vec()
}

/// Reduced Betti number `dim H_i = dim ker δ_i - rank δ_{i-1}`, computed by
/// numerical rank of the coboundary Gram matrices (`δ_k` is the zero map).
pub fn betti(x: &Complex, i: i32) -> Result<usize, ComplexError> {
    if i < 0 || i > x.k() as i32 {
        return Err(ComplexError::DimensionOutOfRange { dim: i, k: x.k() });
    }
    let dim_ci = x.face_count(i);
    let rank_up = if i == x.k() as i32 {
        0
    } else {
        rank_of(&coboundary(x, i)?)
    };
    let rank_down = rank_of(&coboundary(x, i - 1)?);
    Ok(dim_ci - rank_up - rank_down)
}

fn rank_of(d: &IntMatrix) -> usize {
    if d.rows() == 0 || d.cols() == 0 {
        return 0;
    }
    let gram = d.transpose().matmul(d).to_sym().expect("Gram is symmetric");
    let eigs = linalg::sym_eig(&gram);
    linalg::numerical_rank(eigs.eigenvalues(), gram.dim())
}

/// Writes a matrix as CSV with a header row of face labels (vertices joined
/// by `-`).
pub fn write_matrix_csv<W: Write>(
    mut w: W,
    index: &FaceIndex,
    m: &SymMatrix,
) -> std::io::Result<()> {
    assert_eq!(index.len(), m.dim());
    writeln!(w, "{}", index.labels().join(","))?;
    for i in 0..m.dim() {
        let row: Vec<String> = (0..m.dim()).map(|j| fmt_entry(m.get(i, j))).collect();
        writeln!(w, "{}", row.join(","))?;
    }
    Ok(())
}

fn fmt_entry(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x:.12e}")
    }
}

/// Reads a matrix written by [`write_matrix_csv`], checking that the header
/// labels match the expected face order.
pub fn read_matrix_csv<R: BufRead>(
    r: R,
    index: &FaceIndex,
) -> Result<SymMatrix, ComplexError> {
    let mut lines = r.lines();
    let header = lines
        .next()
        .ok_or_else(|| ComplexError::Format("empty matrix file".into()))?
        .map_err(|e| ComplexError::Format(e.to_string()))?;
    let labels: Vec<&str> = header.trim().split(',').collect();
    let expected = index.labels();
    if labels.len() != expected.len() || labels.iter().zip(&expected).any(|(a, b)| a != b) {
        return Err(ComplexError::Format(format!(
            "matrix header does not match the face order ({} labels, expected {})",
            labels.len(),
            expected.len()
        )));
    }
    let n = index.len();
    let mut data = Vec::with_capacity(n * n);
    for (i, line) in lines.enumerate() {
        let line = line.map_err(|e| ComplexError::Format(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let row: Result<Vec<f64>, _> = line.trim().split(',').map(str::parse::<f64>).collect();
        let row = row.map_err(|e| ComplexError::Format(format!("row {}: {e}", i + 2)))?;
        if row.len() != n {
            return Err(ComplexError::Format(format!(
                "row {} has {} entries, expected {n}",
                i + 2,
                row.len()
            )));
        }
        data.extend(row);
    }
    if data.len() != n * n {
        return Err(ComplexError::Format(format!(
            "expected {n} rows of {n} entries"
        )));
    }
    SymMatrix::new(n, data).map_err(|e| ComplexError::Format(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{binomial, Face};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    /// Multiset comparison of a numeric spectrum against (value, multiplicity)
    /// pairs; zeros fill the rest.
    fn assert_spectrum(m: &SymMatrix, expected: &[(f64, usize)], tol: f64) {
        let eigs = spectrum(m);
        let mut want: Vec<f64> = expected
            .iter()
            .flat_map(|&(v, mult)| std::iter::repeat(v).take(mult))
            .collect();
        want.resize(m.dim(), 0.0);
        want.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(eigs.len(), want.len());
        for (e, w) in eigs.iter().zip(&want) {
            assert!(close(*e, *w, tol), "eig {e} vs expected {w}");
        }
    }

    #[test]
    fn coboundary_minus_one_is_all_ones_row() {
        let x = Complex::complete(4, 1).unwrap();
        let d = coboundary(&x, -1).unwrap();
        assert_eq!((d.rows(), d.cols()), (4, 1));
        for i in 0..4 {
            assert_eq!(d.get(i, 0), 1);
        }
    }

    #[test]
    fn graph_coboundary_is_signed_incidence() {
        let x = Complex::complete(3, 1).unwrap();
        let d = coboundary(&x, 0).unwrap();
        // edges in lex order: {0,1},{0,2},{1,2}; [e:v] = -1 for the smaller
        // endpoint (position 0) removed... sign is (-1)^position of removed:
        // [ {0,1} : {1} ] = +1 (remove 0 at position 0), [ {0,1} : {0} ] = -1.
        assert_eq!(d.get(0, 0), -1);
        assert_eq!(d.get(0, 1), 1);
        assert_eq!(d.get(0, 2), 0);
    }

    #[test]
    fn coboundary_composition_vanishes() {
        for x in [
            Complex::complete(5, 2).unwrap(),
            Complex::tripartite(2),
            Complex::complete(6, 3).unwrap(),
        ] {
            for i in 0..x.k() as i32 {
                let a = coboundary(&x, i).unwrap();
                let b = coboundary(&x, i - 1).unwrap();
                assert!(a.matmul(&b).is_zero(), "δ_{i} δ_{} != 0", i - 1);
            }
        }
    }

    #[test]
    fn laplacian_entry_formulas_match_products() {
        for x in [
            Complex::complete(5, 2).unwrap(),
            Complex::tripartite(2),
            Complex::bipartite(2),
        ] {
            for i in 0..x.k() as i32 {
                let faces = x.face_index(i);
                // up: diag deg(F), off-diag -ε when the union is a face
                let up = up_laplacian_int(&x, i).unwrap();
                for a in 0..faces.len() {
                    for b in 0..faces.len() {
                        let fa = faces.face(a);
                        let fb = faces.face(b);
                        let want = if a == b {
                            x.degree(fa) as i64
                        } else if fa.intersection_len(fb) as i32 == i
                            && x.contains(&fa.union(fb))
                        {
                            -epsilon(fa, fb)
                        } else {
                            0
                        };
                        assert_eq!(up.get(a, b), want, "up i={i} ({fa}, {fb})");
                    }
                }
                // down: diag i+1, off-diag ε
                let down = down_laplacian_int(&x, i).unwrap();
                let formula = down_laplacian_on(&faces);
                assert_eq!(down, formula, "down formula i={i}");
            }
        }
    }

    #[test]
    fn graph_down_laplacian_is_all_ones_and_up_is_d_minus_a() {
        let g = crate::graph::Graph::cycle(5);
        let x = g.as_complex();
        let j = down_laplacian_int(&x, 0).unwrap();
        for i in 0..5 {
            for l in 0..5 {
                assert_eq!(j.get(i, l), 1);
            }
        }
        let up = up_laplacian_int(&x, 0).unwrap();
        let a = g.adjacency();
        for i in 0..5 {
            for l in 0..5 {
                let want = if i == l { 2.0 } else { -a.get(i, l) };
                assert_eq!(up.get(i, l) as f64, want);
            }
        }
    }

    #[test]
    fn complete_complex_laplacian_identity() {
        // L↑_i + L↓_i = nI on the complete complex, exact in integers
        for (n, k) in [(5usize, 2usize), (6, 2), (6, 3), (7, 3)] {
            let x = Complex::complete(n, k).unwrap();
            for i in 0..k as i32 {
                let up = up_laplacian_int(&x, i).unwrap();
                let down = down_laplacian_int(&x, i).unwrap();
                let sum = up.add(&down);
                let ni = IntMatrix::identity(sum.rows()).scale(n as i64);
                assert_eq!(sum, ni, "n={n} k={k} i={i}");
            }
        }
    }

    #[test]
    fn complete_down_laplacian_properties() {
        // k = 1 gives the all-ones matrix
        let j = complete_down_laplacian_int(4, 1);
        for i in 0..4 {
            for l in 0..4 {
                assert_eq!(j.get(i, l), 1);
            }
        }
        // (n=4, k=2): 6x6 with spectrum {4:3, 0:3}
        let m = complete_down_laplacian(4, 2);
        assert_eq!(m.dim(), 6);
        assert_spectrum(&m, &[(4.0, 3)], 1e-9);
        // trace = k * binom(n, k)
        for (n, k) in [(5usize, 2usize), (6, 3)] {
            let m = complete_down_laplacian_int(n, k);
            assert_eq!(m.trace(), (k * binomial(n, k)) as i64);
        }
    }

    #[test]
    fn tripartite_laplacian_spectra() {
        for m in [2usize, 3] {
            let x = Complex::tripartite(m);
            let up = up_laplacian(&x, 1).unwrap();
            let mf = m as f64;
            assert_spectrum(
                &up,
                &[
                    (3.0 * mf, 1),
                    (2.0 * mf, 3 * (m - 1)),
                    (mf, 3 * (m - 1) * (m - 1)),
                ],
                1e-9,
            );
            let down = down_laplacian(&x, 1).unwrap();
            assert_spectrum(&down, &[(3.0 * mf, 2), (2.0 * mf, 3 * (m - 1))], 1e-9);
        }
    }

    #[test]
    fn up_down_products_vanish_and_are_psd() {
        for x in [Complex::tripartite(2), Complex::complete(5, 2).unwrap()] {
            for i in 0..=x.k() as i32 - 1 {
                let up = up_laplacian_int(&x, i).unwrap();
                let down = down_laplacian_int(&x, i).unwrap();
                assert!(up.matmul(&down).is_zero());
                assert!(down.matmul(&up).is_zero());
                let min_up = linalg::lambda_min(&up.to_sym().unwrap());
                let min_down = linalg::lambda_min(&down.to_sym().unwrap());
                assert!(min_up >= -1e-9 && min_down >= -1e-9);
            }
        }
    }

    #[test]
    fn complete_laplacians_are_projector_multiples() {
        // (L↑)² = n·L↑ and (L↓)² = n·L↓, with eigenvalue-n multiplicities
        // binom(n-1, i+1) and binom(n-1, i)
        for (n, k) in [(5usize, 2usize), (6, 3)] {
            let x = Complex::complete(n, k).unwrap();
            for i in 0..k as i32 {
                let up = up_laplacian_int(&x, i).unwrap();
                let down = down_laplacian_int(&x, i).unwrap();
                assert_eq!(up.matmul(&up), up.scale(n as i64));
                assert_eq!(down.matmul(&down), down.scale(n as i64));
                // multiplicity = trace / n since the only nonzero eigenvalue is n
                assert_eq!(
                    up.trace() / n as i64,
                    binomial(n - 1, (i + 1) as usize) as i64
                );
                assert_eq!(down.trace() / n as i64, binomial(n - 1, i as usize) as i64);
            }
        }
    }

    #[test]
    fn adjacency_examples() {
        // a graph complex reproduces the usual adjacency matrix
        let g = crate::graph::Graph::cycle(5);
        let a = adjacency_int(&g.as_complex());
        for i in 0..5 {
            for j in 0..5 {
                let want = if g.has_edge(i, j) { 1 } else { 0 };
                assert_eq!(a.get(i, j), want);
            }
        }
        // empty complex: nothing is adjacent
        let e = Complex::empty(5, 2);
        assert!(adjacency_on(&e, &FaceIndex::all_subsets(5, 1)).is_zero());
        // D - A equals the up-Laplacian on the (k-1)-faces
        let x = Complex::tripartite(2);
        let up = up_laplacian_int(&x, 1).unwrap();
        let a = adjacency_int(&x);
        let deg = degrees(&x);
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                let d = if i == j { deg[i] as i64 } else { 0 };
                assert_eq!(up.get(i, j), d - a.get(i, j));
            }
        }
    }

    #[test]
    fn bipartite_block_identity() {
        // order binom(V,2) as in-part edges then crossing edges; the
        // off-diagonal block M of the up-Laplacian satisfies MᵀM = mN - 2J
        for m in [2usize, 3] {
            let x = Complex::bipartite(m);
            let idx = x.face_index(1);
            let is_in = |f: &Face| {
                let a = f.vertices()[0] < m;
                let b = f.vertices()[1] < m;
                a == b
            };
            let mut order: Vec<usize> = (0..idx.len()).collect();
            order.sort_by_key(|&i| (!is_in(idx.face(i)), i));
            let n_in = order.iter().filter(|&&i| is_in(idx.face(i))).count();
            let up = up_laplacian_int(&x, 1).unwrap();
            let perm = |r: usize, c: usize| up.get(order[r], order[c]);
            let n_out = idx.len() - n_in;
            // M = -(up-Laplacian in×out block); N = 2mI - out×out block
            let mut mt_m = IntMatrix::zeros(n_out, n_out);
            for a in 0..n_out {
                for b in 0..n_out {
                    let mut s = 0;
                    for r in 0..n_in {
                        s += perm(r, n_in + a) * perm(r, n_in + b);
                    }
                    mt_m.set(a, b, s);
                }
            }
            for a in 0..n_out {
                for b in 0..n_out {
                    let upab = perm(n_in + a, n_in + b);
                    let nn = if a == b { 2 * m as i64 - upab } else { -upab };
                    let want = m as i64 * nn - 2;
                    assert_eq!(mt_m.get(a, b), want, "m={m} ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn betti_numbers() {
        // complete complexes have vanishing reduced homology below the top
        for (n, k) in [(5usize, 2usize), (6, 3)] {
            let x = Complex::complete(n, k).unwrap();
            for i in 0..k as i32 {
                assert_eq!(betti(&x, i).unwrap(), 0, "H_{i} of complete");
            }
        }
        // a single triangle is contractible
        let t = Complex::complete(3, 2).unwrap();
        assert_eq!(betti(&t, 0).unwrap(), 0);
        assert_eq!(betti(&t, 1).unwrap(), 0);
        // hollow triangle: one 1-cycle
        let hollow = crate::graph::Graph::cycle(3).as_complex();
        assert_eq!(betti(&hollow, 0).unwrap(), 0);
        assert_eq!(betti(&hollow, 1).unwrap(), 1);
        // two disjoint edges: reduced H_0 has rank 1
        let g = crate::graph::Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(betti(&g.as_complex(), 0).unwrap(), 1);
    }

    #[test]
    fn hodge_dimension_accounting() {
        // dim H_i + rank L↓_i + rank L↑_i = dim C^i on every test complex
        for x in [
            Complex::tripartite(2),
            Complex::bipartite(2),
            Complex::complete(5, 2).unwrap(),
        ] {
            for i in 0..=x.k() as i32 {
                let dim_ci = x.face_count(i);
                let h = betti(&x, i).unwrap();
                let rank_down = rank_of(&coboundary(&x, i - 1).unwrap());
                let rank_up = if i == x.k() as i32 {
                    0
                } else {
                    rank_of(&coboundary(&x, i).unwrap())
                };
                assert_eq!(h + rank_down + rank_up, dim_ci);
            }
        }
    }

    #[test]
    fn matrix_csv_round_trip() {
        let x = Complex::tripartite(2);
        let idx = x.face_index(1);
        let m = up_laplacian(&x, 1).unwrap();
        let mut buf = Vec::new();
        write_matrix_csv(&mut buf, &idx, &m).unwrap();
        let back = read_matrix_csv(std::io::Cursor::new(&buf), &idx).unwrap();
        assert!(back.sub(&m).frob_norm() == 0.0);
        // a wrong index is rejected
        let other = FaceIndex::all_subsets(6, 1);
        assert!(read_matrix_csv(std::io::Cursor::new(&buf), &other).is_err());
    }
}
