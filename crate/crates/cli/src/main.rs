//! `stheta`: compute theta numbers, Laplacians, bounds and chromatic
//! invariants of pure simplicial complexes from the command line.
//!
//! Exit codes: 0 on success, 1 on computation failure (solver
//! non-convergence, search budget exhaustion), 2 on input errors. Errors are
//! reported as one JSON object on stderr. All JSON output is deterministic:
//! floating values are rounded to 12 significant digits before serialization.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use simplicial_theta::combinatorics;
use simplicial_theta::complex::binomial;
use simplicial_theta::random::{self, ScalingGrid, ScalingKind};
use simplicial_theta::theta;
use simplicial_theta::{chain, Complex, FaceIndex, SolveStatus, SolverParams};

#[derive(Parser)]
#[command(name = "stheta", about = "Theta numbers of pure simplicial complexes", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    solver: SolverFlags,
    /// Output format for report commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Print progress notes to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct SolverFlags {
    /// Residual tolerance for the SDP solver.
    #[arg(long, global = true, default_value_t = 1e-7)]
    tol_feas: f64,
    /// Eigenvalue floor accepted as nonnegative.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_psd: f64,
    /// Iteration cap for the SDP solver.
    #[arg(long, global = true, default_value_t = 200_000)]
    max_iter: usize,
    /// Initial ADMM penalty parameter.
    #[arg(long, global = true, default_value_t = 1.0)]
    rho: f64,
}

impl SolverFlags {
    fn params(&self) -> SolverParams {
        SolverParams {
            tol_feas: self.tol_feas,
            tol_psd: self.tol_psd,
            max_iter: self.max_iter,
            rho: self.rho,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Summary of a complex: sizes, skeleton completeness, components.
    Info { complex: PathBuf },
    /// Laplacian/adjacency matrices as CSV, optionally their spectrum.
    Laplacian {
        complex: PathBuf,
        /// Face dimension the operator acts on.
        #[arg(long)]
        dim: i32,
        #[arg(long, value_enum)]
        which: Which,
        /// Print eigenvalues (JSON) instead of the matrix.
        #[arg(long)]
        spectrum: bool,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve a theta program, or evaluate a dual certificate from a file.
    Theta {
        complex: PathBuf,
        /// Level of the program (defaults to the dimension of the complex).
        #[arg(long)]
        level: Option<usize>,
        /// Solve the strengthened program with compression constraints.
        #[arg(long)]
        hat: bool,
        /// Evaluate this certificate (CSV over all k-subsets) instead of solving.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Eigenvalue and link bounds, with a sandwich summary against alpha.
    Bounds { complex: PathBuf },
    /// Exact independence number with witness.
    Alpha { complex: PathBuf },
    /// Exact weak chromatic number with coloring.
    Chi { complex: PathBuf },
    /// Exact homomorphism chromatic number with witness.
    Chik {
        complex: PathBuf,
        /// Search-node budget.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Generate built-in or random complexes as JSON.
    Gen {
        #[command(subcommand)]
        family: GenCmd,
    },
    /// Seeded experiments.
    Experiment {
        #[command(subcommand)]
        what: ExperimentCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Up,
    Down,
    Adjacency,
}

#[derive(Subcommand)]
enum GenCmd {
    /// Complete k-complex on n vertices.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Complete tripartite 2-complex with parts of size m.
    Tripartite {
        #[arg(long)]
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Complete bipartite 2-complex with parts of size m.
    Bipartite {
        #[arg(long)]
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Linial–Meshulam random complex.
    Lm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Erdős–Rényi random graph (as a 1-complex).
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ExperimentCmd {
    /// Ratio-to-reference scaling across a grid of (n, p) cells.
    Scaling {
        /// Which program to measure.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Grid such as "n=8,10,12;p=0.5;level=2".
        #[arg(long)]
        grid: String,
        /// Comma-separated seeds.
        #[arg(long)]
        seeds: String,
        /// Write the row CSV to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the per-cell JSON summary to this file.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    ThetaK,
    ThetaEll,
}

/// Failure modes mapped to exit codes.
enum Failure {
    /// Bad input: exit 2.
    Input(String),
    /// Computation failed (non-convergence, search budget): exit 1.
    Computation(String),
}

impl Failure {
    fn report(&self) -> ExitCode {
        let (kind, msg, code) = match self {
            Failure::Input(m) => ("input", m, 2),
            Failure::Computation(m) => ("computation", m, 1),
        };
        let err = json!({"error": msg, "kind": kind});
        eprintln!("{err}");
        ExitCode::from(code)
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

/// Rounds to 12 significant digits so repeated runs serialize byte-identically.
fn jf(x: f64) -> Value {
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float");
    Value::from(rounded)
}

fn read_complex(path: &Path) -> Result<Complex, Failure> {
    let f = File::open(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    Complex::read_from(BufReader::new(f)).map_err(input)
}

fn write_out(path: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            let mut f = File::create(p).map_err(|e| input(format!("{}: {e}", p.display())))?;
            f.write_all(content.as_bytes())
                .map_err(|e| input(e.to_string()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn print_value(v: &Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("serializable")),
        Format::Table => print_table(v, 0),
    }
}

fn print_table(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}{k}:");
                        print_table(val, indent + 1);
                    }
                    _ => println!("{pad}{k}: {val}"),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => print_table(item, indent),
                    _ => println!("{pad}- {item}"),
                }
            }
        }
        _ => println!("{pad}{v}"),
    }
}

fn status_str(s: SolveStatus) -> &'static str {
    match s {
        SolveStatus::Converged => "converged",
        SolveStatus::MaxIter => "max_iter",
        SolveStatus::InfeasibleSuspected => "infeasible_suspected",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(f) => f.report(),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    let params = cli.solver.params();
    match &cli.cmd {
        Cmd::Info { complex } => {
            let x = read_complex(complex)?;
            let counts: Vec<usize> = (-1..=x.k() as i32).map(|d| x.face_count(d)).collect();
            let v = json!({
                "n": x.n(),
                "k": x.k(),
                "face_counts": counts,
                "has_complete_skeleton": x.has_complete_skeleton(),
                "components": x.connected_components().len(),
            });
            print_value(&v, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Laplacian {
            complex,
            dim,
            which,
            spectrum,
            output,
        } => {
            let x = read_complex(complex)?;
            let (index, matrix) = match which {
                Which::Up => (
                    x.face_index(*dim),
                    chain::up_laplacian(&x, *dim).map_err(input)?,
                ),
                Which::Down => (
                    x.face_index(*dim),
                    chain::down_laplacian(&x, *dim).map_err(input)?,
                ),
                Which::Adjacency => {
                    if *dim != x.k() as i32 - 1 {
                        return Err(input(format!(
                            "adjacency acts on dimension {}, got {dim}",
                            x.k() as i32 - 1
                        )));
                    }
                    (x.face_index(*dim), chain::adjacency(&x))
                }
            };
            if *spectrum {
                let eigs: Vec<Value> = chain::spectrum(&matrix).into_iter().map(jf).collect();
                let v = json!({"dim": dim, "eigenvalues": eigs});
                print_value(&v, cli.format);
            } else {
                let mut buf = Vec::new();
                chain::write_matrix_csv(&mut buf, &index, &matrix)
                    .map_err(|e| input(e.to_string()))?;
                write_out(output, &String::from_utf8(buf).expect("ascii csv"))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Theta {
            complex,
            level,
            hat,
            certificate,
        } => {
            let x = read_complex(complex)?;
            let level = level.unwrap_or(x.k());
            if let Some(cert_path) = certificate {
                if level != x.k() {
                    return Err(input("certificates are evaluated at the base level"));
                }
                let f = File::open(cert_path)
                    .map_err(|e| input(format!("{}: {e}", cert_path.display())))?;
                let index = FaceIndex::all_subsets(x.n(), x.k() as i32 - 1);
                let t = chain::read_matrix_csv(BufReader::new(f), &index).map_err(input)?;
                let bound = theta::dual_certificate_bound(&x, &t).map_err(input)?;
                let v = json!({
                    "complex": complex.display().to_string(),
                    "level": level,
                    "certificate_bound": jf(bound),
                });
                print_value(&v, cli.format);
                return Ok(ExitCode::SUCCESS);
            }
            if cli.verbose {
                eprintln!(
                    "solving level-{level} program{}",
                    if *hat { " with compression blocks" } else { "" }
                );
            }
            let report = if *hat {
                theta::theta_hat_ell(&x, level, &params)
            } else {
                theta::theta_ell(&x, level, &params)
            }
            .map_err(|e| match e {
                simplicial_theta::error::ThetaError::EmptyIndexSet { .. } => {
                    Failure::Input(format!("level {level} exceeds alpha: {e}"))
                }
                other => input(other),
            })?;
            let v = json!({
                "complex": complex.display().to_string(),
                "level": level,
                "hat": hat,
                "value": jf(report.value),
                "status": status_str(report.status),
                "residuals": {
                    "primal": jf(report.primal_residual),
                    "dual": jf(report.dual_residual),
                },
                "min_eigenvalue": jf(report.min_eigenvalue),
                "iterations": report.iterations,
            });
            print_value(&v, cli.format);
            if report.status == SolveStatus::Converged {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Bounds { complex } => {
            let x = read_complex(complex)?;
            let (report, dual_bound) = theta::theta_k_with_bound(&x, &params).map_err(input)?;
            let golubev = theta::golubev_bound(&x);
            let one_skel = x.one_skeleton();
            let ratio = theta::ratio_bound(&one_skel).ok();
            let link = theta::link_bound(&x, &params).map_err(input)?;
            let alpha = (x.n() <= 20).then(|| combinatorics::alpha(&x));
            let sandwich_ok = alpha
                .as_ref()
                .map(|a| a.value as f64 <= report.value + 1e-4)
                .unwrap_or(true)
                && report.value <= link + 1e-4;
            let v = json!({
                "complex": complex.display().to_string(),
                "theta": jf(report.value),
                "theta_status": status_str(report.status),
                "dual_certificate_bound": jf(dual_bound),
                "golubev": jf(golubev),
                "ratio_1_skeleton": ratio.map(jf),
                "link_bound": jf(link),
                "alpha": alpha.as_ref().map(|a| a.value),
                "sandwich_ok": sandwich_ok,
            });
            print_value(&v, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Alpha { complex } => {
            let x = read_complex(complex)?;
            let w = combinatorics::alpha(&x);
            let v = json!({"alpha": w.value, "witness": w.set});
            print_value(&v, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Chi { complex } => {
            let x = read_complex(complex)?;
            let w = combinatorics::chi_weak(&x);
            let v = json!({"chi": w.value, "colors": w.colors});
            print_value(&v, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Chik { complex, budget } => {
            let x = read_complex(complex)?;
            let r = combinatorics::chi_k(&x, *budget)
                .map_err(|e| Failure::Computation(e.to_string()))?;
            let v = json!({
                "chi_k": r.value,
                "face_map": r.face_map,
                "witness": serde_json::to_value(&r.witness).expect("serializable"),
            });
            print_value(&v, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gen { family } => {
            let (x, output) = match family {
                GenCmd::Complete { n, k, output } => {
                    (Complex::complete(*n, *k).map_err(input)?, output)
                }
                GenCmd::Tripartite { m, output } => {
                    if *m == 0 {
                        return Err(input("m must be positive"));
                    }
                    (Complex::tripartite(*m), output)
                }
                GenCmd::Bipartite { m, output } => {
                    if *m == 0 {
                        return Err(input("m must be positive"));
                    }
                    (Complex::bipartite(*m), output)
                }
                GenCmd::Lm {
                    n,
                    k,
                    p,
                    seed,
                    output,
                } => {
                    if !(0.0..=1.0).contains(p) {
                        return Err(input("p must lie in [0, 1]"));
                    }
                    (random::sample_lm(*n, *k, *p, *seed), output)
                }
                GenCmd::Gnp { n, p, seed, output } => {
                    if !(0.0..=1.0).contains(p) {
                        return Err(input("p must lie in [0, 1]"));
                    }
                    (random::sample_gnp(*n, *p, *seed).as_complex(), output)
                }
            };
            write_out(output, &(x.to_json() + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Experiment { what } => match what {
            ExperimentCmd::Scaling {
                kind,
                grid,
                seeds,
                output,
                summary,
            } => {
                let grid = parse_grid(*kind, grid)?;
                let seeds = parse_seeds(seeds)?;
                let max_block = grid
                    .ns
                    .iter()
                    .map(|&n| binomial(n, grid.level))
                    .max()
                    .unwrap_or(0);
                if cli.verbose {
                    eprintln!(
                        "running {} rows (largest block {max_block})",
                        grid.ns.len() * grid.ps.len() * seeds.len()
                    );
                }
                let rows = random::scaling_experiment(&grid, &seeds, &params);
                write_out(output, &random::rows_to_csv(&rows))?;
                if let Some(path) = summary {
                    let cells = random::summarize(&rows);
                    let text = serde_json::to_string_pretty(&cells).expect("serializable");
                    write_out(&Some(path.clone()), &(text + "\n"))?;
                }
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}

fn parse_grid(kind: KindArg, grid: &str) -> Result<ScalingGrid, Failure> {
    let mut ns = None;
    let mut ps = None;
    let mut level = None;
    for part in grid.split(';') {
        let (key, vals) = part
            .split_once('=')
            .ok_or_else(|| input(format!("grid part {part:?} is not key=values")))?;
        match key.trim() {
            "n" => {
                ns = Some(
                    vals.split(',')
                        .map(|v| v.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(input)?,
                )
            }
            "p" => {
                ps = Some(
                    vals.split(',')
                        .map(|v| v.trim().parse::<f64>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(input)?,
                )
            }
            "level" | "k" | "ell" => {
                level = Some(vals.trim().parse::<usize>().map_err(input)?)
            }
            other => return Err(input(format!("unknown grid key {other:?}"))),
        }
    }
    let grid = ScalingGrid {
        kind: match kind {
            KindArg::ThetaK => ScalingKind::ThetaK,
            KindArg::ThetaEll => ScalingKind::ThetaEll,
        },
        ns: ns.ok_or_else(|| input("grid needs n=..."))?,
        ps: ps.ok_or_else(|| input("grid needs p=..."))?,
        level: level.ok_or_else(|| input("grid needs level=..."))?,
    };
    if grid.ps.iter().any(|p| !(0.0..=1.0).contains(p)) {
        return Err(input("grid probabilities must lie in [0, 1]"));
    }
    Ok(grid)
}

fn parse_seeds(s: &str) -> Result<Vec<u64>, Failure> {
    s.split(',')
        .map(|v| v.trim().parse::<u64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(input)
}
