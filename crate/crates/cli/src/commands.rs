//! Subcommand handlers.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use log::info;
use maxplus_sparse::io::{
    parse_dataset, parse_matrix, parse_vector, write_dataset, write_model, write_report,
    write_table, write_vector, Report,
};
use maxplus_sparse::regression::{
    default_neighbors, fit_detailed, gradient_slopes, grid_slopes, Dataset, PwlModel, SlopeSet,
};
use maxplus_sparse::solver::{solve, Budget, FitProblem, Norm, Objective};
use rayon::prelude::*;
use serde_json::json;

use crate::bench::{run_bench, BenchConfig};
use crate::cli::{
    BenchArgs, BudgetArgs, Cli, Command, FitArgs, GenArgs, ReproArgs, SlopeArgs, SolveArgs,
    SweepArgs,
};
use crate::config::{RunConfig, SlopeSpec};
use crate::datasets::{example1, example2, example3, linspace};
use crate::repro;

/// How a successful command ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Done,
    Infeasible,
    ChecksFailed,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    fs::create_dir_all(&cli.out)
        .with_context(|| format!("creating output directory {}", cli.out.display()))?;
    match &cli.command {
        Command::Solve(args) => cmd_solve(cli, args),
        Command::Fit(args) => cmd_fit(cli, args),
        Command::Sweep(args) => cmd_sweep(cli, args),
        Command::Bench(args) => cmd_bench(cli, args),
        Command::Repro(args) => cmd_repro(cli, args),
        Command::GenExample(args) => cmd_gen(cli, args),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: PathBuf, text: &str) -> Result<()> {
    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    info!("wrote {}", path.display());
    Ok(())
}

fn budget(args: &BudgetArgs) -> Result<Budget> {
    match (args.theta, args.epsilon) {
        (Some(t), None) => Ok(Budget::Theta(t)),
        (None, Some(e)) => Ok(Budget::Epsilon(e)),
        _ => bail!("give exactly one of --theta or --epsilon"),
    }
}

fn cmd_solve(cli: &Cli, args: &SolveArgs) -> Result<Outcome> {
    let a = parse_matrix(&read(&args.matrix)?)
        .with_context(|| format!("parsing {}", args.matrix.display()))?;
    let b = parse_vector(&read(&args.vector)?)
        .with_context(|| format!("parsing {}", args.vector.display()))?;
    let norm = match args.p {
        Some(p) if !args.norm_inf_greedy => Norm::Lp(p),
        _ => Norm::Inf,
    };
    let objective = Objective::new(norm, budget(&args.budget)?, args.budget.estimator)?;
    let mut config = RunConfig::new("solve", cli.seed, cli.threads);
    config.inputs = vec![
        args.matrix.display().to_string(),
        args.vector.display().to_string(),
    ];
    config.objective = Some(objective);

    let problem = FitProblem::new(a, b, objective)?;
    match solve(&problem) {
        Ok(solution) => {
            let mut csv = config.csv_comment();
            csv.push_str(&write_vector(&solution.x));
            write(cli.out.join("solution.csv"), &csv)?;
            write(
                cli.out.join("report.json"),
                &write_report(&Report::from_solution(&solution, config.to_json())),
            )?;
            println!(
                "support ({} columns, 0-based, in selection order): {:?}",
                solution.support_size(),
                solution.support
            );
            if let Some(e) = solution.error_p {
                println!("error_p   = {e}");
            }
            println!("error_inf = {}", solution.error_inf);
            match solution.ratio_bound {
                Some(r) => println!("ratio bound = {r}"),
                None => println!("ratio bound: absent"),
            }
            Ok(Outcome::Done)
        }
        Err(maxplus_sparse::Error::Infeasible {
            full_support_error,
            budget,
        }) => {
            write(
                cli.out.join("report.json"),
                &write_report(&Report::infeasible(full_support_error, config.to_json())),
            )?;
            println!("infeasible: full-support error {full_support_error} exceeds budget {budget}");
            Ok(Outcome::Infeasible)
        }
        Err(e) => Err(e.into()),
    }
}

fn slope_set(args: &SlopeArgs, data: &Dataset) -> Result<(SlopeSet, SlopeSpec)> {
    if let (Some(lo), Some(hi), Some(step)) = (&args.grid_lo, &args.grid_hi, args.grid_step) {
        let set = grid_slopes(lo, hi, step, args.grid_cap)?;
        return Ok((
            set,
            SlopeSpec::Grid {
                lo: lo.clone(),
                hi: hi.clone(),
                step,
                cap: args.grid_cap,
            },
        ));
    }
    if let Some(path) = &args.slopes {
        let m =
            parse_matrix(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
        let rows: Vec<Vec<f64>> = (0..m.rows())
            .map(|i| m.row(i).iter().map(|v| v.value()).collect())
            .collect();
        let set = SlopeSet::explicit(rows)?;
        return Ok((
            set,
            SlopeSpec::Explicit {
                path: path.display().to_string(),
            },
        ));
    }
    if args.gradients {
        let k = args
            .neighbors
            .unwrap_or_else(|| default_neighbors(data.dim()));
        return Ok((
            gradient_slopes(data, k)?,
            SlopeSpec::Gradients {
                neighbors: args.neighbors,
            },
        ));
    }
    bail!("choose a slope source: --grid-lo/--grid-hi/--grid-step, --slopes FILE or --gradients")
}

/// Training points with their targets and model values.
fn fitted_table(model: &PwlModel, data: &Dataset) -> Result<String> {
    let mut header: Vec<String> = (1..=data.dim()).map(|d| format!("x{d}")).collect();
    header.extend(["f".to_string(), "p".to_string()]);
    let rows: Vec<Vec<f64>> = data
        .points()
        .zip(data.targets())
        .map(|(x, &f)| Ok(x.iter().copied().chain([f, model.evaluate(x)?]).collect()))
        .collect::<Result<_>>()?;
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    Ok(write_table(&header, &rows))
}

/// The model over a regular grid spanning the data, for 1-D and 2-D inputs.
fn plot_table(model: &PwlModel, data: &Dataset, points: Option<usize>) -> Result<Option<String>> {
    let dim = data.dim();
    if dim > 2 {
        return Ok(None);
    }
    let n = points.unwrap_or(if dim == 1 { 200 } else { 50 });
    let axes: Vec<Vec<f64>> = (0..dim)
        .map(|d| {
            let (lo, hi) = data
                .points()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), x| {
                    (l.min(x[d]), h.max(x[d]))
                });
            linspace(lo, hi, n)
        })
        .collect();
    let mut rows = Vec::new();
    if dim == 1 {
        for &x in &axes[0] {
            rows.push(vec![x, model.evaluate(&[x])?]);
        }
        Ok(Some(write_table(&["x", "p"], &rows)))
    } else {
        for &x in &axes[0] {
            for &y in &axes[1] {
                rows.push(vec![x, y, model.evaluate(&[x, y])?]);
            }
        }
        Ok(Some(write_table(&["x", "y", "p"], &rows)))
    }
}

fn cmd_fit(cli: &Cli, args: &FitArgs) -> Result<Outcome> {
    let data = parse_dataset(&read(&args.data)?)
        .with_context(|| format!("parsing {}", args.data.display()))?;
    let (slopes, spec) = slope_set(&args.slopes, &data)?;
    let objective = Objective::new(
        Norm::Lp(args.p),
        budget(&args.budget)?,
        args.budget.estimator,
    )?;
    let mut config = RunConfig::new("fit", cli.seed, cli.threads);
    config.inputs = vec![args.data.display().to_string()];
    config.objective = Some(objective);
    config.slopes = Some(spec);

    let (mut model, solution) = match fit_detailed(&data, &slopes, objective) {
        Err(maxplus_sparse::Error::Infeasible {
            full_support_error,
            budget,
        }) => {
            write(
                cli.out.join("report.json"),
                &write_report(&Report::infeasible(full_support_error, config.to_json())),
            )?;
            println!("infeasible: full-support error {full_support_error} exceeds budget {budget}");
            return Ok(Outcome::Infeasible);
        }
        other => other?,
    };
    model.metadata.seed = Some(cli.seed);
    write(cli.out.join("model.json"), &write_model(&model))?;
    write(
        cli.out.join("report.json"),
        &write_report(&Report::from_solution(&solution, config.to_json())),
    )?;
    write(
        cli.out.join("fitted.csv"),
        &(config.csv_comment() + &fitted_table(&model, &data)?),
    )?;
    if let Some(plot) = plot_table(&model, &data, args.plot_points)? {
        write(cli.out.join("plot.csv"), &(config.csv_comment() + &plot))?;
    }
    let score = model.score(&data)?;
    println!(
        "{} candidate slopes, {} regions",
        slopes.len(),
        score.support
    );
    println!("rms = {:.6}, max_abs = {:.6}", score.rms, score.max_abs);
    Ok(Outcome::Done)
}

fn cmd_sweep(cli: &Cli, args: &SweepArgs) -> Result<Outcome> {
    let data = parse_dataset(&read(&args.data)?)
        .with_context(|| format!("parsing {}", args.data.display()))?;
    let (slopes, spec) = slope_set(&args.slopes, &data)?;
    let budgets: Vec<Budget> = match (args.theta.is_empty(), args.epsilon.is_empty()) {
        (false, true) => args.theta.iter().map(|&t| Budget::Theta(t)).collect(),
        (true, false) => args.epsilon.iter().map(|&e| Budget::Epsilon(e)).collect(),
        _ => bail!("give a list of --theta or of --epsilon values"),
    };
    let mut jobs = Vec::new();
    for &p in &args.p {
        for &b in &budgets {
            for &est in &args.estimator {
                jobs.push(Objective::new(Norm::Lp(p), b, est)?);
            }
        }
    }
    let mut config = RunConfig::new("sweep", cli.seed, cli.threads);
    config.inputs = vec![args.data.display().to_string()];
    config.slopes = Some(spec);
    config.extra = json!({ "p": args.p, "theta": args.theta, "epsilon": args.epsilon, "estimator": args.estimator });

    let results: Vec<Option<(PwlModel, String)>> = jobs
        .par_iter()
        .map(|&obj| match fit_detailed(&data, &slopes, obj) {
            Ok((model, _)) => {
                let table = fitted_table(&model, &data)?;
                Ok(Some((model, table)))
            }
            Err(e) if e.is_infeasible() => Ok(None),
            Err(e) => Err(e.into()),
        })
        .collect::<Result<_>>()?;

    let dir = cli.out.join("sweep");
    fs::create_dir_all(&dir)?;
    let mut table = config.csv_comment();
    table.push_str("p,theta,epsilon,estimator,rms,max_abs,support\n");
    println!(
        "{:>6} {:>10} {:>8} {:>10} {:>10} {:>6}",
        "p", "theta", "est", "rms", "max_abs", "|supp|"
    );
    for (obj, result) in jobs.iter().zip(&results) {
        let p = obj.norm.order().expect("sweeps use finite p");
        let theta = obj.theta();
        let eps = obj.budget.epsilon(obj.norm);
        match result {
            Some((model, fitted)) => {
                let s = model.score(&data)?;
                table.push_str(&format!(
                    "{p},{theta},{eps},{},{},{},{}\n",
                    obj.estimator, s.rms, s.max_abs, s.support
                ));
                println!(
                    "{p:>6} {theta:>10.4} {:>8} {:>10.4} {:>10.4} {:>6}",
                    obj.estimator, s.rms, s.max_abs, s.support
                );
                let name = format!("fit_p{p}_theta{theta}_{}.csv", obj.estimator);
                write(dir.join(name), &(config.csv_comment() + fitted))?;
            }
            None => {
                table.push_str(&format!("{p},{theta},{eps},{},,,\n", obj.estimator));
                println!(
                    "{p:>6} {theta:>10.4} {:>8} {:>10} {:>10} {:>6}",
                    obj.estimator, "-", "-", "infeasible"
                );
            }
        }
    }
    write(cli.out.join("sweep.csv"), &table)?;
    Ok(Outcome::Done)
}

fn cmd_bench(cli: &Cli, args: &BenchArgs) -> Result<Outcome> {
    let base = if args.paper_scale {
        BenchConfig::full_scale(cli.seed)
    } else {
        BenchConfig::desk(cli.seed)
    };
    let config = BenchConfig {
        rows: args.rows.unwrap_or(base.rows),
        cols: args.cols.unwrap_or(base.cols),
        trials: args.trials.unwrap_or(base.trials),
        ..base
    };
    let report = run_bench(&config)?;
    let mut run = RunConfig::new("bench", cli.seed, cli.threads);
    run.extra = serde_json::to_value(config)?;
    write(
        cli.out.join("bench.csv"),
        &(run.csv_comment() + &report.to_csv()),
    )?;
    let summary = json!({ "config": run, "median_heuristic": report.median_heuristic, "median_greedy": report.median_greedy });
    write(
        cli.out.join("bench.json"),
        &serde_json::to_string_pretty(&summary)?,
    )?;
    let fmt = |m: Option<f64>| m.map_or_else(|| "n/a".to_string(), |v| v.to_string());
    println!(
        "{} trials of {}x{}",
        config.trials, config.rows, config.cols
    );
    println!(
        "median support: heuristic {}, greedy {}",
        fmt(report.median_heuristic),
        fmt(report.median_greedy)
    );
    let infeasible = report
        .rows
        .iter()
        .filter(|r| r.heuristic_support.is_none())
        .count();
    if infeasible > 0 {
        println!("{infeasible} trials infeasible for the heuristic");
    }
    Ok(Outcome::Done)
}

fn cmd_repro(cli: &Cli, args: &ReproArgs) -> Result<Outcome> {
    let data = match &args.data {
        Some(path) => {
            parse_dataset(&read(path)?).with_context(|| format!("parsing {}", path.display()))?
        }
        None => repro::default_curve_data(),
    };
    let checks = repro::run_all(&data, cli.seed, args.paper_scale)?;
    let mut config = RunConfig::new("repro", cli.seed, cli.threads);
    config.extra = json!({ "paper_scale": args.paper_scale });
    let mut csv = config.csv_comment();
    csv.push_str("check,passed,detail\n");
    for c in &checks {
        println!(
            "[{}] {}: {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
        csv.push_str(&format!(
            "{},{},\"{}\"\n",
            c.name,
            c.passed,
            c.detail.replace('"', "'")
        ));
    }
    write(cli.out.join("repro.csv"), &csv)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!(
        "{} of {} checks passed",
        checks.len() - failed,
        checks.len()
    );
    Ok(if failed == 0 {
        Outcome::Done
    } else {
        Outcome::ChecksFailed
    })
}

fn cmd_gen(cli: &Cli, args: &GenArgs) -> Result<Outcome> {
    let data = match args.example {
        1 => example1(args.points.unwrap_or(100)),
        2 => example2(args.points.unwrap_or(500), cli.seed),
        _ => example3(),
    };
    let mut config = RunConfig::new("gen-example", cli.seed, cli.threads);
    config.extra = json!({ "example": args.example, "points": data.len() });
    let path = cli.out.join(format!("example{}.csv", args.example));
    write(
        path.clone(),
        &(config.csv_comment() + &write_dataset(&data)),
    )?;
    println!(
        "{} points of dimension {} -> {}",
        data.len(),
        data.dim(),
        path.display()
    );
    Ok(Outcome::Done)
}
