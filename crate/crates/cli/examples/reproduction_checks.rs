//! Runs the reference reproduction checks in-process and prints each
//! verdict, as `tropfit repro` does.
//!
//! Run with `cargo run --release --example reproduction_checks`.

use maxplus_sparse_cli::repro::{default_curve_data, run_all};

fn main() -> anyhow::Result<()> {
    let checks = run_all(&default_curve_data(), 0, false)?;
    for c in &checks {
        println!(
            "[{}] {}: {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    if checks.iter().any(|c| !c.passed) {
        std::process::exit(1);
    }
    Ok(())
}
