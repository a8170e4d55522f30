use simplicial_theta::{random, theta, SolverParams};
use std::time::Instant;

fn main() {
    for (n, tol) in [(12usize, 1e-6), (14, 1e-6), (14, 1e-7)] {
        let x = random::sample_lm(n, 2, 0.5, 1);
        let params = SolverParams { tol_feas: tol, ..Default::default() };
        let t0 = Instant::now();
        let r = theta::theta_k(&x, &params).unwrap();
        println!(
            "n={n} tol={tol:.0e} block={} value={:.6} iters={} status={:?} elapsed={:.2?}",
            (n * (n - 1)) / 2, r.value, r.iterations, r.status, t0.elapsed()
        );
    }
}
