//! A small deterministic solver for semidefinite programs in primal form:
//!
//! ```text
//! maximize   Σ_b <C_b, Z_b>
//! subject to Σ_b <A_{i,b}, Z_b> = c_i          (i = 1..m)
//!            Z_b positive semidefinite          (one or more blocks)
//! ```
//!
//! The method is ADMM operator splitting: alternate projection of the
//! affine-constraint subproblem (through pre-factorized SPD normal systems),
//! PSD cone projection per block, and a scaled dual update. Constraints are
//! canonicalized to unit Frobenius norm and partitioned into groups with
//! disjoint entry support, so each group projects independently through its
//! own small Gram factor.
//!
//! One solve is single threaded and bitwise deterministic; distinct solves may
//! run concurrently.

use std::collections::BTreeMap;
use std::io::Write;

use crate::error::SdpError;
use crate::linalg::{self, Cholesky};
use crate::matrix::SymMatrix;

/// Sparse symmetric coefficient matrix for one block: entries `(i, j, v)` with
/// `i <= j`, each standing for the symmetric pair `A_ij = A_ji = v`.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseSym {
    pub entries: Vec<(usize, usize, f64)>,
}

impl SparseSym {
    pub fn new(mut entries: Vec<(usize, usize, f64)>) -> Self {
        for e in entries.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0, e.2);
            }
        }
        entries.sort_by_key(|&(i, j, _)| (i, j));
        SparseSym { entries }
    }

    /// Frobenius norm of the symmetric matrix represented by the entries.
    pub fn frob(&self) -> f64 {
        self.entries
            .iter()
            .map(|&(i, j, v)| if i == j { v * v } else { 2.0 * v * v })
            .sum::<f64>()
            .sqrt()
    }

    /// `<A, Z>` against a dense symmetric block.
    pub fn inner(&self, z: &SymMatrix) -> f64 {
        self.entries
            .iter()
            .map(|&(i, j, v)| {
                let w = if i == j { 1.0 } else { 2.0 };
                w * v * z.get(i, j)
            })
            .sum()
    }

}

/// One sparse equality constraint `Σ_b <A_{i,b}, Z_b> = rhs`, with
/// coefficients listed per block.
#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<(usize, SparseSym)>,
    pub rhs: f64,
}

impl Constraint {
    pub fn single_block(block: usize, entries: Vec<(usize, usize, f64)>, rhs: f64) -> Self {
        Constraint {
            coeffs: vec![(block, SparseSym::new(entries))],
            rhs,
        }
    }
}

/// A complete problem instance; the sense is always maximize.
#[derive(Clone, Debug)]
pub struct SdpProblem {
    pub block_dims: Vec<usize>,
    /// One objective matrix per block.
    pub objectives: Vec<SymMatrix>,
    pub constraints: Vec<Constraint>,
}

impl SdpProblem {
    fn validate(&self) -> Result<(), SdpError> {
        if self.constraints.is_empty() {
            return Err(SdpError::NoConstraints);
        }
        if self.objectives.len() != self.block_dims.len() {
            return Err(SdpError::BadBlock {
                index: usize::MAX,
                block: self.objectives.len(),
                blocks: self.block_dims.len(),
            });
        }
        for (b, obj) in self.objectives.iter().enumerate() {
            if obj.dim() != self.block_dims[b] {
                return Err(SdpError::EntryOutOfRange {
                    index: usize::MAX,
                    row: obj.dim(),
                    col: obj.dim(),
                    dim: self.block_dims[b],
                });
            }
            if obj.data().iter().any(|x| !x.is_finite()) {
                return Err(SdpError::NonFinite);
            }
        }
        for (idx, c) in self.constraints.iter().enumerate() {
            if !c.rhs.is_finite() {
                return Err(SdpError::NonFinite);
            }
            for (b, mat) in &c.coeffs {
                if *b >= self.block_dims.len() {
                    return Err(SdpError::BadBlock {
                        index: idx,
                        block: *b,
                        blocks: self.block_dims.len(),
                    });
                }
                for &(i, j, v) in &mat.entries {
                    if !v.is_finite() {
                        return Err(SdpError::NonFinite);
                    }
                    if i >= self.block_dims[*b] || j >= self.block_dims[*b] {
                        return Err(SdpError::EntryOutOfRange {
                            index: idx,
                            row: i,
                            col: j,
                            dim: self.block_dims[*b],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Writes the instance in SDPA sparse format (1-based indices, matrix 0 is
    /// the objective), for cross-checking against external solvers.
    pub fn write_sdpa<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{}", self.constraints.len())?;
        writeln!(w, "{}", self.block_dims.len())?;
        writeln!(
            w,
            "{}",
            self.block_dims
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        )?;
        writeln!(
            w,
            "{}",
            self.constraints
                .iter()
                .map(|c| format!("{:.17e}", c.rhs))
                .collect::<Vec<_>>()
                .join(" ")
        )?;
        for (b, obj) in self.objectives.iter().enumerate() {
            for i in 0..obj.dim() {
                for j in i..obj.dim() {
                    let v = obj.get(i, j);
                    if v != 0.0 {
                        writeln!(w, "0 {} {} {} {:.17e}", b + 1, i + 1, j + 1, v)?;
                    }
                }
            }
        }
        for (t, c) in self.constraints.iter().enumerate() {
            for (b, mat) in &c.coeffs {
                for &(i, j, v) in &mat.entries {
                    if v != 0.0 {
                        writeln!(w, "{} {} {} {} {:.17e}", t + 1, b + 1, i + 1, j + 1, v)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Solver configuration. `tol_feas` drives both ADMM residual thresholds;
/// `tol_psd` is the eigenvalue floor accepted as nonnegative.
#[derive(Clone, Debug)]
pub struct SolverParams {
    pub tol_feas: f64,
    pub tol_psd: f64,
    pub max_iter: usize,
    pub rho: f64,
}

impl Default for SolverParams {
    fn default() -> Self {
        SolverParams {
            tol_feas: 1e-7,
            tol_psd: 1e-9,
            max_iter: 200_000,
            rho: 1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Converged,
    MaxIter,
    InfeasibleSuspected,
}

/// Outcome of a solve. The value and residuals refer to the cone-feasible
/// iterate (the PSD-projected blocks).
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub value: f64,
    pub solution: Vec<SymMatrix>,
    pub primal_residual: f64,
    pub dual_residual: f64,
    pub min_eigenvalue: f64,
    pub iterations: usize,
    pub status: SolveStatus,
}

/// Canonicalized constraint: unit Frobenius norm, flat entry list.
struct Canon {
    /// (block, i, j, v) with i <= j.
    entries: Vec<(usize, usize, usize, f64)>,
    rhs: f64,
    /// Original norm, to report residuals in the caller's scaling.
    scale: f64,
}

fn canonicalize(p: &SdpProblem) -> Result<Vec<Canon>, SdpError> {
    let mut out: Vec<Canon> = Vec::with_capacity(p.constraints.len());
    let mut seen: BTreeMap<Vec<(usize, usize, usize, u64)>, u64> = BTreeMap::new();
    for (idx, c) in p.constraints.iter().enumerate() {
        let mut merged: BTreeMap<(usize, usize, usize), f64> = BTreeMap::new();
        for (b, mat) in &c.coeffs {
            for &(i, j, v) in &mat.entries {
                if v != 0.0 {
                    *merged.entry((*b, i, j)).or_insert(0.0) += v;
                }
            }
        }
        merged.retain(|_, v| *v != 0.0);
        let norm = merged
            .iter()
            .map(|(&(_, i, j), &v)| if i == j { v * v } else { 2.0 * v * v })
            .sum::<f64>()
            .sqrt();
        if norm == 0.0 {
            if c.rhs != 0.0 {
                return Err(SdpError::ZeroRow {
                    index: idx,
                    rhs: c.rhs,
                });
            }
            continue; // trivially satisfied
        }
        // sign convention: first coefficient positive, for duplicate detection
        let sign = if merged.values().next().copied().unwrap_or(1.0) < 0.0 {
            -1.0
        } else {
            1.0
        };
        let s = sign / norm;
        let entries: Vec<(usize, usize, usize, f64)> = merged
            .iter()
            .map(|(&(b, i, j), &v)| (b, i, j, v * s))
            .collect();
        let key: Vec<(usize, usize, usize, u64)> = entries
            .iter()
            .map(|&(b, i, j, v)| (b, i, j, v.to_bits()))
            .collect();
        let rhs = c.rhs * s;
        match seen.get(&key) {
            Some(&prev_rhs) if prev_rhs == rhs.to_bits() => continue, // duplicate
            _ => {
                seen.insert(key, rhs.to_bits());
            }
        }
        out.push(Canon {
            entries,
            rhs,
            scale: norm * sign,
        });
    }
    if out.is_empty() {
        return Err(SdpError::NoConstraints);
    }
    Ok(out)
}

/// Constraints partitioned into groups with pairwise disjoint entry support;
/// the joint affine projection then splits exactly across groups.
struct Group {
    members: Vec<usize>,
    chol: Cholesky,
}

fn build_groups(cons: &[Canon]) -> Result<Vec<Group>, SdpError> {
    let m = cons.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut owner: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for (a, c) in cons.iter().enumerate() {
        for &(b, i, j, _) in &c.entries {
            match owner.get(&(b, i, j)) {
                Some(&first) => {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, first));
                    if ra != rb {
                        parent[ra] = rb;
                    }
                }
                None => {
                    owner.insert((b, i, j), a);
                }
            }
        }
    }
    let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for a in 0..m {
        let r = find(&mut parent, a);
        members.entry(r).or_default().push(a);
    }
    let mut groups = Vec::with_capacity(members.len());
    for mem in members.into_values() {
        let g = gram(cons, &mem);
        let chol = match Cholesky::new(&g) {
            Ok(c) => c,
            Err(_) => {
                // dependent rows: regularize and carry on; a genuinely
                // inconsistent system then surfaces as a residual stall
                let mut ridged = g.clone();
                for i in 0..ridged.dim() {
                    let v = ridged.get(i, i) + 1e-10;
                    ridged.set_sym(i, i, v);
                }
                Cholesky::new(&ridged).map_err(SdpError::Linalg)?
            }
        };
        groups.push(Group { members: mem, chol });
    }
    Ok(groups)
}

fn gram(cons: &[Canon], members: &[usize]) -> SymMatrix {
    let m = members.len();
    let mut g = SymMatrix::zeros(m);
    for (a, &ca) in members.iter().enumerate() {
        for (b, &cb) in members.iter().enumerate().skip(a) {
            let mut s = 0.0;
            // entries are sorted; merge join
            let (ea, eb) = (&cons[ca].entries, &cons[cb].entries);
            let (mut x, mut y) = (0, 0);
            while x < ea.len() && y < eb.len() {
                let ka = (ea[x].0, ea[x].1, ea[x].2);
                let kb = (eb[y].0, eb[y].1, eb[y].2);
                match ka.cmp(&kb) {
                    std::cmp::Ordering::Less => x += 1,
                    std::cmp::Ordering::Greater => y += 1,
                    std::cmp::Ordering::Equal => {
                        let w = if ea[x].1 == ea[x].2 { 1.0 } else { 2.0 };
                        s += w * ea[x].3 * eb[y].3;
                        x += 1;
                        y += 1;
                    }
                }
            }
            g.set_sym(a, b, s);
        }
    }
    g
}

fn inner_canon(c: &Canon, blocks: &[SymMatrix]) -> f64 {
    c.entries
        .iter()
        .map(|&(b, i, j, v)| {
            let w = if i == j { 1.0 } else { 2.0 };
            w * v * blocks[b].get(i, j)
        })
        .sum()
}

/// Solves the problem by ADMM. Identical problems and parameters produce
/// bitwise-identical iterates, counts and values.
pub fn solve(p: &SdpProblem, params: &SolverParams) -> Result<SolveReport, SdpError> {
    p.validate()?;
    let cons = canonicalize(p)?;
    let groups = build_groups(&cons)?;
    let nb = p.block_dims.len();

    let mut x: Vec<SymMatrix> = p.block_dims.iter().map(|&d| SymMatrix::zeros(d)).collect();
    let mut z = x.clone();
    let mut u = x.clone();
    let mut rho = params.rho;

    let mut primal_res = f64::INFINITY;
    let mut dual_res = f64::INFINITY;
    let mut iterations = 0;
    let mut status = SolveStatus::MaxIter;
    // residual history for infeasibility detection, sampled every 1000 iters
    let mut history: Vec<(f64, f64)> = Vec::new();

    for iter in 1..=params.max_iter {
        iterations = iter;
        // affine step: project Z - U + C/rho onto the constraint set
        for b in 0..nb {
            x[b] = z[b].clone();
            x[b].axpy(-1.0, &u[b]);
            x[b].axpy(1.0 / rho, &p.objectives[b]);
        }
        for g in &groups {
            let r: Vec<f64> = g
                .members
                .iter()
                .map(|&a| cons[a].rhs - inner_canon(&cons[a], &x))
                .collect();
            let y = g.chol.solve(&r).map_err(SdpError::Linalg)?;
            for (y_a, &a) in y.iter().zip(&g.members) {
                for &(b, i, j, v) in &cons[a].entries {
                    x[b].add_sym(i, j, y_a * v);
                }
            }
        }
        // cone step
        let mut dual_sq = 0.0;
        for b in 0..nb {
            let mut w = x[b].clone();
            w.axpy(1.0, &u[b]);
            let znew = linalg::psd_project(&w);
            dual_sq += znew.sub(&z[b]).frob_norm().powi(2);
            z[b] = znew;
        }
        dual_res = rho * dual_sq.sqrt();
        // dual step
        for b in 0..nb {
            u[b].axpy(1.0, &x[b]);
            u[b].axpy(-1.0, &z[b]);
        }
        // residual of the cone-feasible iterate, in the caller's scaling
        primal_res = cons
            .iter()
            .map(|c| ((inner_canon(c, &z) - c.rhs) * c.scale).abs())
            .fold(0.0, f64::max);

        if !primal_res.is_finite() || !dual_res.is_finite() {
            status = SolveStatus::InfeasibleSuspected;
            break;
        }
        if primal_res <= params.tol_feas && dual_res <= params.tol_feas {
            status = SolveStatus::Converged;
            break;
        }
        if iter % 1000 == 0 {
            let unorm: f64 = u
                .iter()
                .map(|m| m.frob_norm().powi(2))
                .sum::<f64>()
                .sqrt();
            history.push((primal_res, unorm));
            let h = history.len();
            if h >= 6 {
                let stalled = primal_res > 1e3 * params.tol_feas
                    && primal_res >= 0.999 * history[h - 6].0;
                let exploding = (1..6).all(|d| history[h - d].1 > history[h - d - 1].1)
                    && unorm > 1e6;
                if stalled && exploding {
                    status = SolveStatus::InfeasibleSuspected;
                    break;
                }
            }
        }
        if iter % 100 == 0 {
            // residual balancing, factor 2 when the ratio exceeds 10
            if primal_res > 10.0 * dual_res && rho < 1e8 {
                rho *= 2.0;
                for m in u.iter_mut() {
                    *m = m.scaled(0.5);
                }
            } else if dual_res > 10.0 * primal_res && rho > 1e-6 {
                rho *= 0.5;
                for m in u.iter_mut() {
                    *m = m.scaled(2.0);
                }
            }
        }
    }

    let value = (0..nb).map(|b| p.objectives[b].inner(&z[b])).sum();
    let min_eigenvalue = z
        .iter()
        .filter(|m| m.dim() > 0)
        .map(linalg::lambda_min)
        .fold(f64::INFINITY, f64::min);
    let min_eigenvalue = if min_eigenvalue.is_finite() {
        min_eigenvalue
    } else {
        0.0
    };

    Ok(SolveReport {
        value,
        solution: z,
        primal_residual: primal_res,
        dual_residual: dual_res,
        min_eigenvalue,
        iterations,
        status,
    })
}

/// A linear condition `Σ coef · T_ij = 0` that a dual certificate must satisfy,
/// with a human-readable label for violation reports.
#[derive(Clone, Debug)]
pub struct CertificateCondition {
    pub label: String,
    /// Entries `(i, j, coef)` with `i < j`, referring to `T_ij = T_ji`.
    pub terms: Vec<(usize, usize, f64)>,
}

/// Checks a dual certificate `T` (zero diagonal plus the given linear
/// conditions, to tolerance `tol`) and returns `λ_max(L + T)`; by weak duality
/// this upper-bounds the corresponding primal optimum.
pub fn dual_eigenvalue_bound(
    l: &SymMatrix,
    t: &SymMatrix,
    conditions: &[CertificateCondition],
    tol: f64,
) -> Result<f64, SdpError> {
    if l.dim() != t.dim() {
        return Err(SdpError::Linalg(crate::error::LinalgError::DimensionMismatch(
            format!("L is {}x{0}, T is {1}x{1}", l.dim(), t.dim()),
        )));
    }
    for i in 0..t.dim() {
        let v = t.get(i, i).abs();
        if v > tol {
            return Err(SdpError::InfeasibleCertificate {
                condition: format!("zero diagonal at index {i}"),
                violation: v,
            });
        }
    }
    for cond in conditions {
        let s: f64 = cond
            .terms
            .iter()
            .map(|&(i, j, coef)| coef * t.get(i, j))
            .sum();
        if s.abs() > tol {
            return Err(SdpError::InfeasibleCertificate {
                condition: cond.label.clone(),
                violation: s.abs(),
            });
        }
    }
    Ok(linalg::lambda_max(&l.add(t)))
}
