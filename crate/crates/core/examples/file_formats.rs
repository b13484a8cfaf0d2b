//! Writes a matrix, a dataset and a fitted model to the text formats the
//! command line uses, and reads them back.
//!
//! Run with `cargo run --example file_formats`.

use maxplus_sparse::io::{
    parse_dataset, parse_matrix, parse_model, write_dataset, write_matrix, write_model,
};
use maxplus_sparse::regression::{fit, grid_slopes, Dataset, DEFAULT_GRID_CAP};
use maxplus_sparse::solver::{Budget, Estimator, Norm, Objective};
use maxplus_sparse::MpMatrix;

fn main() -> Result<(), maxplus_sparse::Error> {
    let a = MpMatrix::from_f64(
        2,
        3,
        &[0.0, f64::NEG_INFINITY, 1.5, -2.25, 4.0, f64::INFINITY],
    )?;
    let text = write_matrix(&a);
    println!("matrix CSV:\n{text}");
    assert_eq!(parse_matrix(&text)?, a);

    let xs: Vec<f64> = (0..9).map(|i| -1.0 + 0.25 * i as f64).collect();
    let ys: Vec<f64> = xs.iter().map(|x| x.abs()).collect();
    let data = Dataset::from_flat(1, xs, ys)?;
    let text = write_dataset(&data);
    println!("dataset CSV:\n{text}");
    assert_eq!(parse_dataset(&text)?, data);

    let slopes = grid_slopes(&[-2.0], &[2.0], 0.5, DEFAULT_GRID_CAP)?;
    let model = fit(
        &data,
        &slopes,
        Objective::new(Norm::Lp(1.0), Budget::Theta(0.01), Estimator::Smmae)?,
    )?;
    let text = write_model(&model);
    println!("model JSON:\n{text}");
    assert_eq!(parse_model(&text)?, model);
    Ok(())
}
