//! Random complexes and seeded scaling experiments.
//!
//! The sampler draws each candidate face from a counter-based generator keyed
//! by `(seed, subset rank)` rather than a sequential stream, so identical
//! seeds reproduce identical complexes, samples can be generated in parallel,
//! and raising `p` under a fixed seed never removes a face (the inclusion test
//! is a threshold comparison on the same uniform draw).

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::chain;
use crate::complex::{binomial, Complex, Face, FaceIndex};
use crate::graph::Graph;
use crate::linalg;
use crate::sdp::{SolveStatus, SolverParams};
use crate::theta;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform draw in `[0, 1)` determined entirely by `(seed, counter)`.
pub fn unit_uniform(seed: u64, counter: u64) -> f64 {
    let h = splitmix64(splitmix64(seed) ^ splitmix64(counter.wrapping_mul(0xA24B_AED4_963E_E407)));
    (h >> 11) as f64 / (1u64 << 53) as f64
}

/// Lexicographic rank of a strictly increasing `k`-subset of `{0, …, n-1}`.
pub fn subset_rank(n: usize, subset: &[usize]) -> u64 {
    let k = subset.len();
    let mut rank = 0u64;
    let mut prev: isize = -1;
    for (i, &c) in subset.iter().enumerate() {
        for v in (prev + 1) as usize..c {
            rank += binomial(n - 1 - v, k - 1 - i) as u64;
        }
        prev = c as isize;
    }
    rank
}

/// A sample from the Linial–Meshulam model: complete `(k-1)`-skeleton by
/// construction, each `(k+1)`-subset included independently with probability
/// `p`. The returned value stores only the `k`-faces; lower faces follow by
/// closure, so a sparse sample may lose skeleton faces that sit in no
/// `k`-face (the bounds that need every `k`-subset index over all of them).
pub fn sample_lm(n: usize, k: usize, p: f64, seed: u64) -> Complex {
    assert!((0.0..=1.0).contains(&p), "p must lie in [0, 1]");
    let faces = (0..n)
        .combinations(k + 1)
        .filter(|c| unit_uniform(seed, subset_rank(n, c)) < p)
        .map(Face::from_sorted);
    Complex::from_k_faces(n, k, faces).expect("sampled faces are valid")
}

/// An Erdős–Rényi graph with the same counter-based construction.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "p must lie in [0, 1]");
    let edges = (0..n)
        .combinations(2)
        .filter(|c| unit_uniform(seed, subset_rank(n, c)) < p)
        .map(|c| (c[0], c[1]))
        .collect();
    Graph::new(n, edges).expect("sampled edges are valid")
}

/// The feasible-solution lower bound on the theta number built from the
/// complement adjacency matrix `Ā` over all `k`-subsets:
/// `k (1 + (k+1)|X̄_k| / (-binom(n,k) λ_min(Ā)))`. Falls back to the trivial
/// bound `k` when `Ā` has no negative eigenvalue (complete complex).
pub fn spectral_lower_bound(x: &Complex) -> f64 {
    let k = x.k();
    let comp = x.complement();
    let index = FaceIndex::all_subsets(x.n(), k as i32 - 1);
    let abar = chain::adjacency_on(&comp, &index)
        .to_sym()
        .expect("adjacency is symmetric");
    let lam_min = linalg::lambda_min(&abar);
    if lam_min >= -1e-12 {
        return k as f64;
    }
    let faces = comp.k_faces().len() as f64;
    k as f64 * (1.0 + (k as f64 + 1.0) * faces / (-(binomial(x.n(), k) as f64) * lam_min))
}

/// Outcome of the eigenvalue localization check: the smallest eigenvalue of
/// the complement adjacency matrix against `k` times the worst link.
#[derive(Clone, Debug, Serialize)]
pub struct LinkSpectraReport {
    pub lambda_min: f64,
    pub localized_bound: f64,
    pub holds: bool,
}

/// Verifies `λ_min(Ā) >= k · min_K λ_min(A_{lk(K)}) - 1e-6`, where `Ā` is the
/// complement adjacency over all `k`-subsets and `K` ranges over all
/// `(k-1)`-subsets with links taken in the completed skeleton.
pub fn link_spectra_check(x: &Complex) -> LinkSpectraReport {
    let k = x.k();
    let comp = x.complement();
    let index = FaceIndex::all_subsets(x.n(), k as i32 - 1);
    let abar = chain::adjacency_on(&comp, &index)
        .to_sym()
        .expect("adjacency is symmetric");
    let lambda_min = linalg::lambda_min(&abar);
    let worst_link = FaceIndex::all_subsets(x.n(), k as i32 - 2)
        .faces()
        .iter()
        .map(|kf| linalg::lambda_min(&comp.link_completed(kf).adjacency()))
        .fold(0.0f64, f64::min);
    let localized_bound = k as f64 * worst_link;
    LinkSpectraReport {
        lambda_min,
        localized_bound,
        holds: lambda_min >= localized_bound - 1e-6,
    }
}

/// Which scaling law an experiment probes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalingKind {
    /// Theta of a random complex against `sqrt((n-k) q / p)`.
    ThetaK,
    /// Level-`ℓ` theta of a random graph against `sqrt(n q^ℓ / p)`.
    ThetaEll,
}

impl ScalingKind {
    fn name(self) -> &'static str {
        match self {
            ScalingKind::ThetaK => "theta_k",
            ScalingKind::ThetaEll => "theta_ell",
        }
    }
}

/// The grid of an experiment; `level` is `k` for [`ScalingKind::ThetaK`] and
/// `ℓ` for [`ScalingKind::ThetaEll`].
#[derive(Clone, Debug)]
pub struct ScalingGrid {
    pub kind: ScalingKind,
    pub ns: Vec<usize>,
    pub ps: Vec<f64>,
    pub level: usize,
}

/// Largest PSD block the experiment runner accepts.
pub const MAX_EXPERIMENT_BLOCK: usize = 500;

/// One measured sample.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentRow {
    pub kind: &'static str,
    pub n: usize,
    pub k_or_ell: usize,
    pub p: f64,
    pub seed: u64,
    pub value: Option<f64>,
    pub reference: f64,
    pub ratio: Option<f64>,
    pub status: String,
}

fn in_regime(n: usize, p: f64) -> bool {
    let edge = (n as f64).ln() / n as f64;
    p >= edge && p <= 1.0 - edge
}

fn run_row(grid: &ScalingGrid, n: usize, p: f64, seed: u64, params: &SolverParams) -> ExperimentRow {
    let q = 1.0 - p;
    let (reference, block) = match grid.kind {
        ScalingKind::ThetaK => (
            ((n as f64 - grid.level as f64) * q / p).sqrt(),
            binomial(n, grid.level),
        ),
        ScalingKind::ThetaEll => (
            (n as f64 * q.powi(grid.level as i32) / p).sqrt(),
            binomial(n, grid.level), // upper bound on |Ind_{ℓ-1}|
        ),
    };
    let mut row = ExperimentRow {
        kind: grid.kind.name(),
        n,
        k_or_ell: grid.level,
        p,
        seed,
        value: None,
        reference,
        ratio: None,
        status: String::new(),
    };
    if block > MAX_EXPERIMENT_BLOCK {
        row.status = "block_exceeds_limit".into();
        return row;
    }
    let solved = match grid.kind {
        ScalingKind::ThetaK => {
            let x = sample_lm(n, grid.level, p, seed);
            theta::theta_k(&x, params)
        }
        ScalingKind::ThetaEll => {
            let g = sample_gnp(n, p, seed);
            theta::theta_ell(&g.as_complex(), grid.level, params)
        }
    };
    match solved {
        Err(e) => {
            row.status = format!("error: {e}");
        }
        Ok(report) => {
            row.value = Some(report.value);
            row.ratio = if reference > 0.0 {
                Some(report.value / reference)
            } else {
                None
            };
            row.status = match report.status {
                SolveStatus::Converged if in_regime(n, p) => "ok".into(),
                SolveStatus::Converged => "out_of_regime".into(),
                SolveStatus::MaxIter => "max_iter".into(),
                SolveStatus::InfeasibleSuspected => "infeasible_suspected".into(),
            };
        }
    }
    row
}

/// Runs the grid: one row per `(n, p, seed)`, executed in parallel with
/// deterministic per-row seeds; the returned order is by grid position.
pub fn scaling_experiment(
    grid: &ScalingGrid,
    seeds: &[u64],
    params: &SolverParams,
) -> Vec<ExperimentRow> {
    let cells: Vec<(usize, f64, u64)> = grid
        .ns
        .iter()
        .flat_map(|&n| {
            grid.ps
                .iter()
                .flat_map(move |&p| seeds.iter().map(move |&s| (n, p, s)))
        })
        .collect();
    cells
        .par_iter()
        .map(|&(n, p, seed)| run_row(grid, n, p, seed, params))
        .collect()
}

/// Per-cell aggregate of the measured ratios.
#[derive(Clone, Debug, Serialize)]
pub struct CellSummary {
    pub kind: &'static str,
    pub n: usize,
    pub k_or_ell: usize,
    pub p: f64,
    pub count: usize,
    pub median_value: Option<f64>,
    pub median_ratio: Option<f64>,
    pub iqr_ratio: Option<f64>,
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    // nearest-rank with linear interpolation; deterministic
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    if lo == hi {
        sorted[lo]
    } else {
        sorted[lo] + (pos - lo as f64) * (sorted[hi] - sorted[lo])
    }
}

/// Aggregates rows by `(n, p)`; medians are order-independent.
pub fn summarize(rows: &[ExperimentRow]) -> Vec<CellSummary> {
    let mut cells: std::collections::BTreeMap<(usize, u64), Vec<&ExperimentRow>> =
        Default::default();
    for row in rows {
        cells
            .entry((row.n, row.p.to_bits()))
            .or_default()
            .push(row);
    }
    cells
        .into_values()
        .map(|group| {
            let mut values: Vec<f64> = group.iter().filter_map(|r| r.value).collect();
            let mut ratios: Vec<f64> = group.iter().filter_map(|r| r.ratio).collect();
            values.sort_by(|a, b| a.partial_cmp(b).unwrap());
            ratios.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let first = group[0];
            CellSummary {
                kind: first.kind,
                n: first.n,
                k_or_ell: first.k_or_ell,
                p: first.p,
                count: group.len(),
                median_value: (!values.is_empty()).then(|| quantile(&values, 0.5)),
                median_ratio: (!ratios.is_empty()).then(|| quantile(&ratios, 0.5)),
                iqr_ratio: (!ratios.is_empty())
                    .then(|| quantile(&ratios, 0.75) - quantile(&ratios, 0.25)),
            }
        })
        .collect()
}

/// CSV with columns `(kind, n, k_or_ell, p, seed, value, reference, ratio,
/// status)`; missing values are empty fields.
pub fn rows_to_csv(rows: &[ExperimentRow]) -> String {
    let mut out = String::from("kind,n,k_or_ell,p,seed,value,reference,ratio,status\n");
    for r in rows {
        let fmt_opt = |v: Option<f64>| v.map(|x| format!("{x:.12e}")).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{:.12e},{},{}\n",
            r.kind,
            r.n,
            r.k_or_ell,
            r.p,
            r.seed,
            fmt_opt(r.value),
            r.reference,
            fmt_opt(r.ratio),
            r.status
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics;

    #[test]
    fn subset_rank_is_lexicographic() {
        for (n, k) in [(6usize, 2usize), (7, 3), (5, 1)] {
            for (expect, combo) in (0..n).combinations(k).enumerate() {
                assert_eq!(subset_rank(n, &combo), expect as u64);
            }
        }
    }

    #[test]
    fn extreme_probabilities() {
        let full = sample_lm(6, 2, 1.0, 7);
        assert_eq!(full, Complex::complete(6, 2).unwrap());
        let none = sample_lm(6, 2, 0.0, 7);
        assert_eq!(none.k_faces().len(), 0);
        assert_eq!(sample_gnp(5, 1.0, 3), Graph::complete(5));
    }

    #[test]
    fn determinism_and_fixture() {
        let a = sample_lm(8, 2, 0.5, 42);
        let b = sample_lm(8, 2, 0.5, 42);
        assert_eq!(a, b);
        // pinned at the first verified generation
        assert_eq!(a.k_faces().len(), 30);
    }

    #[test]
    fn monotone_coupling_in_p() {
        for seed in [1u64, 2, 3] {
            let lo = sample_lm(7, 2, 0.3, seed);
            let hi = sample_lm(7, 2, 0.7, seed);
            for f in lo.k_faces() {
                assert!(hi.contains(f), "face {f} lost when p grew");
            }
            assert!(lo.k_faces().len() <= hi.k_faces().len());
        }
    }

    #[test]
    fn uniform_draws_look_uniform() {
        let m = 20_000;
        let mean: f64 = (0..m).map(|i| unit_uniform(9, i)).sum::<f64>() / m as f64;
        assert!((mean - 0.5).abs() < 0.01, "mean {mean}");
    }

    #[test]
    fn lower_bound_below_theta_on_samples() {
        let params = SolverParams::default();
        for seed in [11u64, 12] {
            let x = sample_lm(7, 2, 0.5, seed);
            let lower = spectral_lower_bound(&x);
            let theta = theta::theta_k(&x, &params).unwrap().value;
            assert!(lower <= theta + 1e-4, "{lower} vs {theta}");
        }
    }

    #[test]
    fn link_spectra_check_cases() {
        // complete complex: complement adjacency vanishes
        let complete = Complex::complete(6, 2).unwrap();
        let r = link_spectra_check(&complete);
        assert!(r.holds);
        assert!(r.lambda_min.abs() <= 1e-9);
        // empty complex: the full adjacency against all its links
        let empty = Complex::empty(6, 2);
        assert!(link_spectra_check(&empty).holds);
        // seeded samples
        for seed in [5u64, 6] {
            assert!(link_spectra_check(&sample_lm(8, 2, 0.5, seed)).holds);
        }
    }

    #[test]
    fn sandwich_on_samples() {
        let params = SolverParams::default();
        for seed in [21u64, 22] {
            let x = sample_lm(8, 2, 0.5, seed);
            let a = combinatorics::alpha(&x).value as f64;
            let t = theta::theta_k(&x, &params).unwrap().value;
            let l = theta::link_bound(&x, &params).unwrap();
            assert!(a <= t + 1e-4, "alpha {a} vs theta {t}");
            assert!(t <= l + 1e-4, "theta {t} vs link bound {l}");
        }
    }

    #[test]
    fn experiment_rows_and_summary() {
        let grid = ScalingGrid {
            kind: ScalingKind::ThetaK,
            ns: vec![6, 7],
            ps: vec![0.5, 1.0],
            level: 2,
        };
        let rows = scaling_experiment(&grid, &[1, 2], &SolverParams::default());
        assert_eq!(rows.len(), 8);
        // p = 1 rows: theta = k exactly, no reference
        for row in rows.iter().filter(|r| r.p == 1.0) {
            assert!((row.value.unwrap() - 2.0).abs() <= 1e-4);
            assert!(row.ratio.is_none());
            assert_eq!(row.status, "out_of_regime");
        }
        for row in rows.iter().filter(|r| r.p == 0.5) {
            assert_eq!(row.status, "ok");
            assert!(row.ratio.is_some());
        }
        let summary = summarize(&rows);
        assert_eq!(summary.len(), 4);
        let csv = rows_to_csv(&rows);
        assert_eq!(csv.lines().count(), 9);
        assert!(csv.starts_with("kind,n,"));
    }

    #[test]
    fn oversized_blocks_are_skipped() {
        let grid = ScalingGrid {
            kind: ScalingKind::ThetaK,
            ns: vec![40],
            ps: vec![0.5],
            level: 2,
        };
        let rows = scaling_experiment(&grid, &[1], &SolverParams::default());
        assert_eq!(rows[0].status, "block_exceeds_limit");
        assert!(rows[0].value.is_none());
    }
}
