//! Theta numbers of complexes and graphs, eigenvalue bounds, and the
//! hierarchy of strengthened theta numbers.
//!
//! For a pure `k`-complex `X` on `n` vertices, the level-`k` program runs over
//! matrices indexed by all `k`-subsets of the vertex set, maximizing the inner
//! product with the complete-complex down-Laplacian subject to: unit trace,
//! `Y_{F,F'} = 0` when `F ∪ F'` is a `k`-face or has at least `k+2` vertices,
//! and the sign-symmetry conditions `ε_{F,F'} Y_{F,F'} = ε_{F'',F†} Y_{F'',F†}`
//! whenever the two pairs share the same union. The optimum upper-bounds the
//! independence number. Higher levels `ℓ` run over the independent
//! `ℓ`-subsets, with the down-Laplacian of the independence complex as
//! objective; at `ℓ = α(X)` the feasible matrices are diagonal and the value
//! is exactly `α(X)`.

use std::collections::BTreeMap;
use std::ops::{Add, Div, Mul};

use num_traits::{FromPrimitive, Zero};

use crate::chain;
use crate::complex::{epsilon, Complex, Face, FaceIndex};
use crate::error::ThetaError;
use crate::graph::Graph;
use crate::linalg;
use crate::matrix::SymMatrix;
use crate::sdp::{
    self, CertificateCondition, Constraint, SdpProblem, SolveReport, SolverParams,
};

/// All pairs of index positions whose union is a fixed independent set `H`,
/// together with their `ε` signs. The first pair is the canonical
/// representative (lexicographically smallest).
#[derive(Clone, Debug)]
pub struct SymClass {
    pub union: Face,
    /// `(row, col, ε)` with `row < col`.
    pub pairs: Vec<(usize, usize, i64)>,
}

/// The assembled level-`ℓ` program for one complex.
#[derive(Clone, Debug)]
pub struct ThetaInstance {
    pub level: usize,
    /// Indexing face set: the independent `(ℓ-1)`-dimensional sets; for
    /// `ℓ = k` this is every `k`-subset of the vertex set.
    pub index: FaceIndex,
    /// The independent `ℓ`-dimensional sets, keying the symmetry classes.
    pub unions: FaceIndex,
    /// Down-Laplacian of the independence complex on `index`.
    pub objective: SymMatrix,
    /// Entry positions forced to zero (union not independent or too large).
    pub zero_pairs: Vec<(usize, usize)>,
    pub classes: Vec<SymClass>,
}

/// Builds the level-`ℓ` instance. Fails when `ℓ < k` or when there is no
/// independent set of size `ℓ` (i.e. `ℓ` exceeds the independence number).
pub fn build_theta_instance(x: &Complex, level: usize) -> Result<ThetaInstance, ThetaError> {
    if level < x.k() || level == 0 {
        return Err(ThetaError::LevelOutOfRange {
            level,
            min: x.k().max(1),
            max: usize::MAX,
        });
    }
    build_instance_any_level(x, level)
}

impl ThetaInstance {
    /// The single-block semidefinite program of this instance.
    pub fn to_sdp(&self) -> SdpProblem {
        let n = self.index.len();
        let mut constraints =
            vec![Constraint::single_block(0, (0..n).map(|i| (i, i, 1.0)).collect(), 1.0)];
        for &(i, j) in &self.zero_pairs {
            constraints.push(Constraint::single_block(0, vec![(i, j, 1.0)], 0.0));
        }
        constraints.extend(self.symmetry_constraints(0));
        SdpProblem {
            block_dims: vec![n],
            objectives: vec![self.objective.clone()],
            constraints,
        }
    }

    /// Pairwise equalities against the canonical representative of each class.
    fn symmetry_constraints(&self, block: usize) -> Vec<Constraint> {
        let mut out = Vec::new();
        for class in &self.classes {
            let (i0, j0, e0) = class.pairs[0];
            for &(i, j, e) in &class.pairs[1..] {
                out.push(Constraint {
                    coeffs: vec![(
                        block,
                        sdp::SparseSym::new(vec![
                            (i, j, e as f64),
                            (i0, j0, -(e0 as f64)),
                        ]),
                    )],
                    rhs: 0.0,
                });
            }
        }
        out
    }

    /// Reads the compressed vector `y` off a matrix in the feasible pattern:
    /// diagonal entries on the faces, `ε`-weighted representative entries on
    /// the unions.
    pub fn compress(&self, y: &SymMatrix) -> HierarchyVector<f64> {
        assert_eq!(y.dim(), self.index.len());
        // every independent union has at least one pair, so the class list is
        // parallel to the union index
        assert_eq!(self.classes.len(), self.unions.len());
        let on_faces = (0..self.index.len()).map(|i| y.get(i, i)).collect();
        let on_unions = self
            .classes
            .iter()
            .map(|c| {
                let (i, j, e) = c.pairs[0];
                e as f64 * y.get(i, j)
            })
            .collect();
        HierarchyVector {
            level: self.level,
            faces: self.index.clone(),
            unions: self.unions.clone(),
            on_faces,
            on_unions,
        }
    }

    /// Expands a compressed vector back to the matrix it determines.
    pub fn expand(&self, y: &HierarchyVector<f64>) -> SymMatrix {
        assert_eq!(y.level, self.level);
        let mut m = SymMatrix::zeros(self.index.len());
        for (i, v) in y.on_faces.iter().enumerate() {
            m.set_sym(i, i, *v);
        }
        for (c, v) in self.classes.iter().zip(&y.on_unions) {
            for &(i, j, e) in &c.pairs {
                m.set_sym(i, j, e as f64 * *v);
            }
        }
        m
    }
}

/// Solves the level-`ℓ` theta program.
pub fn theta_ell(
    x: &Complex,
    level: usize,
    params: &SolverParams,
) -> Result<SolveReport, ThetaError> {
    let inst = build_theta_instance(x, level)?;
    Ok(sdp::solve(&inst.to_sdp(), params)?)
}

/// The theta number of the complex: the level-`k` program.
pub fn theta_k(x: &Complex, params: &SolverParams) -> Result<SolveReport, ThetaError> {
    theta_ell(x, x.k(), params)
}

/// The Lovász theta number of a graph: maximize `<J, Y>` over PSD `Y` with
/// unit trace and `Y_{uv} = 0` on edges. Coincides with the level-1 program
/// of the graph complex.
pub fn lovasz_theta(g: &Graph, params: &SolverParams) -> Result<SolveReport, ThetaError> {
    let n = g.n();
    if n == 0 {
        return Err(ThetaError::EmptyIndexSet { size: 1 });
    }
    let mut constraints =
        vec![Constraint::single_block(0, (0..n).map(|i| (i, i, 1.0)).collect(), 1.0)];
    for &(u, v) in g.edges() {
        constraints.push(Constraint::single_block(0, vec![(u, v, 1.0)], 0.0));
    }
    let p = SdpProblem {
        block_dims: vec![n],
        objectives: vec![SymMatrix::all_ones(n)],
        constraints,
    };
    Ok(sdp::solve(&p, params)?)
}

/// Hoffman's ratio bound `-n λ_min(A) / (d - λ_min(A))` for a `d`-regular
/// graph; rejects irregular input. An edgeless graph gets the vacuous bound `n`.
pub fn ratio_bound(g: &Graph) -> Result<f64, ThetaError> {
    let degs = g.degrees();
    let d = match g.regular_degree() {
        Some(d) => d,
        None => {
            let d0 = degs[0];
            let other = degs.iter().copied().find(|&x| x != d0).unwrap();
            return Err(ThetaError::NotRegular(d0, other));
        }
    };
    if d == 0 {
        return Ok(g.n() as f64);
    }
    let lam_min = linalg::lambda_min(&g.adjacency());
    Ok(-(g.n() as f64) * lam_min / (d as f64 - lam_min))
}

/// The degree/eigenvalue upper bound on the independence number, evaluated
/// from the minimal face degrees `d_i` and the largest up-Laplacian
/// eigenvalues `μ_i`:
///
/// ```text
/// n · (1 - (d_0+1)(d_1+2)…(d_{k-2}+k-1) · d_{k-1} / (μ_0 ⋯ μ_{k-1}))
/// ```
///
/// When the `(k-1)`-skeleton is complete this reduces to
/// `n (1 - d_{k-1}/μ_{k-1})`, which is used verbatim in that case. Vacuous
/// cases (no `k`-faces) return `n`.
pub fn golubev_bound(x: &Complex) -> f64 {
    let n = x.n() as f64;
    let k = x.k();
    if x.k_faces().is_empty() {
        return n;
    }
    let min_degree = |i: i32| {
        x.faces(i)
            .iter()
            .map(|f| x.degree(f))
            .min()
            .expect("nonempty face set of a nonempty pure complex")
    };
    if x.has_complete_skeleton() {
        let d = min_degree(k as i32 - 1) as f64;
        let mu = linalg::lambda_max(&chain::up_laplacian(x, k as i32 - 1).expect("valid dim"));
        return n * (1.0 - d / mu);
    }
    let mut numerator = min_degree(k as i32 - 1) as f64;
    let mut denominator = 1.0;
    for i in 0..k as i32 - 1 {
        numerator *= (min_degree(i) + i as usize + 1) as f64;
    }
    for i in 0..k as i32 {
        denominator *= linalg::lambda_max(&chain::up_laplacian(x, i).expect("valid dim"));
    }
    n * (1.0 - numerator / denominator)
}

/// The link bound `k · max_K θ(lk_X(K))` over all `(k-1)`-subsets `K` of the
/// vertex set, with links taken in the complex with completed `(k-1)`-skeleton
/// (which leaves the theta program unchanged).
pub fn link_bound(x: &Complex, params: &SolverParams) -> Result<f64, ThetaError> {
    let k = x.k();
    let mut best = 0.0f64;
    let subsets = FaceIndex::all_subsets(x.n(), k as i32 - 2);
    for kf in subsets.faces() {
        let g = x.link_completed(kf);
        let r = lovasz_theta(&g, params)?;
        best = best.max(r.value);
    }
    Ok(k as f64 * best)
}

/// The random-graph dual certificate `λ_max(J - A/p)`: a valid theta upper
/// bound for any graph and any `0 < p <= 1`.
pub fn juhasz_certificate(g: &Graph, p: f64) -> f64 {
    assert!(p > 0.0 && p <= 1.0, "p must lie in (0, 1]");
    let n = g.n();
    let a = g.adjacency();
    let z = SymMatrix::all_ones(n).sub(&a.scaled(1.0 / p));
    linalg::lambda_max(&z)
}

/// Compressed representation of a feasible matrix at level `ℓ`: one value per
/// independent `ℓ`-subset (the diagonal) and one per independent
/// `(ℓ+1)`-subset (the common `ε`-weighted off-diagonal value of its class).
#[derive(Clone, Debug)]
pub struct HierarchyVector<T> {
    pub level: usize,
    /// Independent sets of size `level`.
    pub faces: FaceIndex,
    /// Independent sets of size `level + 1`.
    pub unions: FaceIndex,
    pub on_faces: Vec<T>,
    pub on_unions: Vec<T>,
}

impl<T: Clone + Zero> HierarchyVector<T> {
    /// The zero vector at the given level.
    pub fn zeros(x: &Complex, level: usize) -> Self {
        let faces = FaceIndex::new(level as i32 - 1, x.independent_faces(level as i32 - 1));
        let unions = FaceIndex::new(level as i32, x.independent_faces(level as i32));
        HierarchyVector {
            level,
            on_faces: vec![T::zero(); faces.len()],
            on_unions: vec![T::zero(); unions.len()],
            faces,
            unions,
        }
    }
}

/// The witness vector of an independent set `S` with `|S| >= ℓ`: value `ℓ` on
/// the `ℓ`-subsets of `S`, value 1 on the `(ℓ+1)`-subsets of `S`, 0 elsewhere.
/// Its matrix is the restriction of the down-Laplacian to `S`.
pub fn witness_vector<T>(x: &Complex, s: &[usize], level: usize) -> HierarchyVector<T>
where
    T: Clone + Zero + FromPrimitive,
{
    assert!(x.is_independent(s), "witness requires an independent set");
    assert!(s.len() >= level);
    let sface = Face::new(s.to_vec()).expect("distinct vertices");
    let mut hv = HierarchyVector::<T>::zeros(x, level);
    for (i, f) in hv.faces.faces().iter().enumerate() {
        if f.is_subset_of(&sface) {
            hv.on_faces[i] = T::from_usize(level).expect("small integer");
        }
    }
    for (i, h) in hv.unions.faces().iter().enumerate() {
        if h.is_subset_of(&sface) {
            hv.on_unions[i] = T::from_usize(1).expect("small integer");
        }
    }
    hv
}

/// The compression map from level `ℓ` to level `ℓ-1` (`ℓ >= 2`):
///
/// ```text
/// z(K) = (1/ℓ) Σ_{F ∈ Ind_{ℓ-1}, K ⊂ F} y(F)
/// z(F) = (1/(ℓ(ℓ-1))) y(F) + (1/(ℓ-1)) Σ_{H ∈ Ind_ℓ, F ⊂ H} y(H)
/// ```
///
/// Linear, exact over any field-like scalar (rationals in tests, floats in
/// the solver).
pub fn tau<T>(x: &Complex, y: &HierarchyVector<T>) -> HierarchyVector<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T> + Div<Output = T> + FromPrimitive,
{
    let ell = y.level;
    assert!(ell >= 2, "tau needs level >= 2");
    let mut z = HierarchyVector::<T>::zeros(x, ell - 1);
    let l = T::from_usize(ell).expect("small integer");
    let l1 = T::from_usize(ell - 1).expect("small integer");
    // z on Ind_{ℓ-2}: sum of y over the faces extending K, divided by ℓ
    for (fi, f) in y.faces.faces().iter().enumerate() {
        let v = y.on_faces[fi].clone();
        if v.is_zero() {
            continue;
        }
        for k in f.facets() {
            let ki = z.faces.position(&k).expect("subsets of independent sets");
            z.on_faces[ki] = z.on_faces[ki].clone() + v.clone();
        }
    }
    for zf in z.on_faces.iter_mut() {
        *zf = zf.clone() / l.clone();
    }
    // z on Ind_{ℓ-1}: y(F)/(ℓ(ℓ-1)) plus the sum of y over unions above F,
    // divided by ℓ-1
    for (hi, h) in y.unions.faces().iter().enumerate() {
        let v = y.on_unions[hi].clone();
        if v.is_zero() {
            continue;
        }
        for f in h.facets() {
            let fi = z.unions.position(&f).expect("subsets of independent sets");
            z.on_unions[fi] = z.on_unions[fi].clone() + v.clone();
        }
    }
    for (fi, zf) in z.on_unions.iter_mut().enumerate() {
        let direct = y.on_faces[fi].clone() / (l.clone() * l1.clone());
        *zf = direct + zf.clone() / l1.clone();
    }
    z
}

/// Builds the strengthened level-`ℓ` program: the level-`ℓ` matrix plus one
/// PSD block per compression level `ℓ-1, …, 1`, tied to the free variables of
/// the block above by the linear compression map.
pub fn build_theta_hat(x: &Complex, level: usize) -> Result<SdpProblem, ThetaError> {
    // compressed blocks exist below level k, so skip the level floor here
    let levels: Vec<ThetaInstance> = (1..=level)
        .rev()
        .map(|t| build_instance_any_level(x, t))
        .collect::<Result<_, _>>()?;
    let nblocks = levels.len();
    let block_dims: Vec<usize> = levels.iter().map(|l| l.index.len()).collect();
    let mut objectives: Vec<SymMatrix> =
        block_dims.iter().map(|&d| SymMatrix::zeros(d)).collect();
    objectives[0] = levels[0].objective.clone();

    let mut constraints = vec![Constraint::single_block(
        0,
        (0..block_dims[0]).map(|i| (i, i, 1.0)).collect(),
        1.0,
    )];
    for (b, lev) in levels.iter().enumerate() {
        for &(i, j) in &lev.zero_pairs {
            constraints.push(Constraint::single_block(b, vec![(i, j, 1.0)], 0.0));
        }
        constraints.extend(lev.symmetry_constraints(b));
    }
    // coupling: block b+1 (level s-1) is the compression of block b (level s)
    for b in 0..nblocks - 1 {
        let src = &levels[b];
        let dst = &levels[b + 1];
        let s = src.level; // source level; dst.level == s - 1
        let inv_s = 1.0 / s as f64;
        let inv_s1 = 1.0 / (s as f64 - 1.0);
        // diagonal of the compressed block
        for (ki, kf) in dst.index.faces().iter().enumerate() {
            let mut src_terms: Vec<(usize, usize, f64)> = Vec::new();
            for (fi, f) in src.index.faces().iter().enumerate() {
                if kf.is_subset_of(f) {
                    src_terms.push((fi, fi, -inv_s));
                }
            }
            constraints.push(Constraint {
                coeffs: vec![
                    (b + 1, sdp::SparseSym::new(vec![(ki, ki, 1.0)])),
                    (b, sdp::SparseSym::new(src_terms)),
                ],
                rhs: 0.0,
            });
        }
        // class values of the compressed block: every H in dst.unions is a
        // face of the source index
        for class in &dst.classes {
            let (i0, j0, e0) = class.pairs[0];
            let h = &class.union;
            let hi = src
                .index
                .position(h)
                .expect("dst unions are src faces");
            let mut src_terms: Vec<(usize, usize, f64)> =
                vec![(hi, hi, -inv_s * inv_s1)];
            for upper in &src.classes {
                if h.is_subset_of(&upper.union) {
                    let (a, bb, e) = upper.pairs[0];
                    src_terms.push((a, bb, -(e as f64) * inv_s1));
                }
            }
            constraints.push(Constraint {
                coeffs: vec![
                    (b + 1, sdp::SparseSym::new(vec![(i0, j0, e0 as f64)])),
                    (b, sdp::SparseSym::new(src_terms)),
                ],
                rhs: 0.0,
            });
        }
    }
    Ok(SdpProblem {
        block_dims,
        objectives,
        constraints,
    })
}

/// The instance builder without the `level >= k` floor, for the compressed
/// blocks of the strengthened program (their index sets are still the
/// independent sets of the appropriate size).
fn build_instance_any_level(x: &Complex, level: usize) -> Result<ThetaInstance, ThetaError> {
    if level == 0 {
        return Err(ThetaError::LevelOutOfRange {
            level,
            min: 1,
            max: usize::MAX,
        });
    }
    let index = FaceIndex::new(level as i32 - 1, x.independent_faces(level as i32 - 1));
    if index.is_empty() {
        return Err(ThetaError::EmptyIndexSet { size: level });
    }
    let unions = FaceIndex::new(level as i32, x.independent_faces(level as i32));
    let objective = chain::down_laplacian_on(&index)
        .to_sym()
        .expect("symmetric");
    let mut zero_pairs = Vec::new();
    let mut class_map: BTreeMap<Face, Vec<(usize, usize, i64)>> = BTreeMap::new();
    for i in 0..index.len() {
        for j in i + 1..index.len() {
            let u = index.face(i).union(index.face(j));
            if u.vertices().len() > level + 1 {
                zero_pairs.push((i, j));
            } else if unions.position(&u).is_some() {
                let e = epsilon(index.face(i), index.face(j));
                class_map.entry(u).or_default().push((i, j, e));
            } else {
                zero_pairs.push((i, j));
            }
        }
    }
    let classes = class_map
        .into_iter()
        .map(|(union, pairs)| SymClass { union, pairs })
        .collect();
    Ok(ThetaInstance {
        level,
        index,
        unions,
        objective,
        zero_pairs,
        classes,
    })
}

/// Solves the strengthened level-`ℓ` program.
pub fn theta_hat_ell(
    x: &Complex,
    level: usize,
    params: &SolverParams,
) -> Result<SolveReport, ThetaError> {
    if level < x.k() || level == 0 {
        return Err(ThetaError::LevelOutOfRange {
            level,
            min: x.k().max(1),
            max: usize::MAX,
        });
    }
    let p = build_theta_hat(x, level)?;
    Ok(sdp::solve(&p, params)?)
}

/// Feasibility conditions for a level-`k` dual certificate `T`: zero diagonal
/// plus, for every `(k+1)`-subset `H` that is not a face, the vanishing of
/// `Σ_{F∪F'=H} ε_{F,F'} T_{F,F'}` over unordered pairs.
pub fn certificate_conditions(x: &Complex) -> (FaceIndex, Vec<CertificateCondition>) {
    let index = FaceIndex::all_subsets(x.n(), x.k() as i32 - 1);
    let mut conditions = Vec::new();
    for h in FaceIndex::all_subsets(x.n(), x.k() as i32).faces() {
        if x.contains(h) {
            continue;
        }
        let mut terms = Vec::new();
        let sub: Vec<&Face> = index
            .faces()
            .iter()
            .filter(|f| f.is_subset_of(h))
            .collect();
        for a in 0..sub.len() {
            for b in a + 1..sub.len() {
                if sub[a].union(sub[b]) == *h {
                    let i = index.position(sub[a]).unwrap();
                    let j = index.position(sub[b]).unwrap();
                    terms.push((i, j, epsilon(sub[a], sub[b]) as f64));
                }
            }
        }
        conditions.push(CertificateCondition {
            label: format!("sum over pairs with union {h}"),
            terms,
        });
    }
    (index, conditions)
}

/// Evaluates a dual certificate for the level-`k` program: checks feasibility
/// (to `1e-9`) and returns `λ_max(L↓ + T)`, an upper bound on the theta number
/// by weak duality.
pub fn dual_certificate_bound(x: &Complex, t: &SymMatrix) -> Result<f64, ThetaError> {
    let (_, conditions) = certificate_conditions(x);
    let l = chain::complete_down_laplacian(x.n(), x.k());
    Ok(sdp::dual_eigenvalue_bound(&l, t, &conditions, 1e-9)?)
}

/// The eigenvalue certificate `T = γ (L↑_{k-1}(X) - D(X))` with
/// `γ = n / λ_max(L↑_{k-1}(X))`, zero-padded to all `k`-subsets. Always dual
/// feasible; on complete-skeleton complexes its bound is at most
/// `n (1 - d_min/μ)`.
pub fn golubev_certificate(x: &Complex) -> Result<SymMatrix, ThetaError> {
    let n = x.n();
    let k = x.k();
    let full = FaceIndex::all_subsets(n, k as i32 - 1);
    let own = x.face_index(k as i32 - 1);
    let up = chain::up_laplacian(x, k as i32 - 1)?;
    let mu = linalg::lambda_max(&up);
    if mu <= 0.0 {
        // no k-faces: T = 0
        return Ok(SymMatrix::zeros(full.len()));
    }
    let gamma = n as f64 / mu;
    let mut t = SymMatrix::zeros(full.len());
    let positions: Vec<usize> = own
        .faces()
        .iter()
        .map(|f| full.position(f).expect("own faces are subsets"))
        .collect();
    for a in 0..own.len() {
        for b in a + 1..own.len() {
            let v = gamma * up.get(a, b);
            if v != 0.0 {
                t.set_sym(positions[a], positions[b], v);
            }
        }
    }
    Ok(t)
}

/// The explicit dual certificate for the complete tripartite 2-complex with
/// parts of size `m`: `T = 2m (P↑_{3m} + P↑_{2m} + P↓_{3m}) - L↓_1(X)` over
/// all 2-subsets, where the `P`s are the spectral projectors of the up- and
/// down-Laplacians of the complex at the named eigenvalues. Certifies that the
/// theta number is `2m`.
pub fn tripartite_certificate(m: usize) -> (Complex, SymMatrix) {
    assert!(m >= 1);
    let x = Complex::tripartite(m);
    let full = FaceIndex::all_subsets(x.n(), 1);
    let own = x.face_index(1);
    let up = chain::up_laplacian(&x, 1).expect("valid dim");
    let down = chain::down_laplacian(&x, 1).expect("valid dim");
    let up_eig = linalg::sym_eig(&up);
    let down_eig = linalg::sym_eig(&down);
    let mf = m as f64;
    let p_up = up_eig
        .spectral_projector(3.0 * mf, 0.5)
        .add(&up_eig.spectral_projector(2.0 * mf, 0.5));
    let p_down = down_eig.spectral_projector(3.0 * mf, 0.5);
    let small = p_up.add(&p_down).scaled(2.0 * mf).sub(&down);
    let mut t = SymMatrix::zeros(full.len());
    let positions: Vec<usize> = own
        .faces()
        .iter()
        .map(|f| full.position(f).expect("faces are 2-subsets"))
        .collect();
    for a in 0..own.len() {
        for b in 0..own.len() {
            let v = small.get(a, b);
            if v.abs() > 1e-13 {
                t.set_sym(positions[a], positions[b], v);
            }
        }
    }
    // the construction has exactly zero diagonal; scrub projector round-off
    for i in 0..t.dim() {
        t.set_sym(i, i, 0.0);
    }
    (x, t)
}

/// Solves the level-`k` program and also evaluates the best available dual
/// certificate (`T = 0`, and the eigenvalue certificate when the complex has
/// `k`-faces), returning `(report, dual upper bound)`. By weak duality the
/// reported value cannot exceed the bound beyond solver tolerance.
pub fn theta_k_with_bound(
    x: &Complex,
    params: &SolverParams,
) -> Result<(SolveReport, f64), ThetaError> {
    let report = theta_k(x, params)?;
    let mut bound = x.n() as f64; // T = 0
    if !x.k_faces().is_empty() {
        let t = golubev_certificate(x)?;
        bound = bound.min(dual_certificate_bound(x, &t)?);
    }
    Ok((report, bound))
}
