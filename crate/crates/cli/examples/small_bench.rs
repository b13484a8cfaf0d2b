//! A reduced benchmark: ℓ150 greedy plus SMMAE lift against the direct
//! max-norm greedy, both held to a max error of 2.5, on random systems.
//!
//! Run with `cargo run --release --example small_bench [trials]`.

use maxplus_sparse_cli::bench::{run_bench, BenchConfig};

fn main() -> anyhow::Result<()> {
    let trials = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20);
    let config = BenchConfig {
        rows: 100,
        cols: 100,
        trials,
        ..BenchConfig::desk(42)
    };
    let report = run_bench(&config)?;
    print!("{}", report.to_csv());
    println!(
        "median support: heuristic {:?}, greedy {:?}",
        report.median_heuristic, report.median_greedy
    );
    Ok(())
}
