//! Serialisation round-trips and malformed-input handling.

use maxplus_sparse::io::{
    parse_dataset, parse_matrix, parse_model, parse_vector, write_dataset, write_matrix,
    write_model, write_vector,
};
use maxplus_sparse::regression::{fit, grid_slopes, Dataset, DEFAULT_GRID_CAP};
use maxplus_sparse::solver::{Budget, Estimator, Norm, Objective};
use maxplus_sparse::{MpMatrix, MpVector};
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = f64> {
    prop_oneof![
        8 => any::<f64>().prop_filter("finite", |v| v.is_finite()),
        1 => Just(f64::NEG_INFINITY),
        1 => Just(f64::INFINITY),
    ]
}

proptest! {
    #[test]
    fn matrices_round_trip_bit_for_bit((m, n) in (1..6usize, 1..6usize), vals in prop::collection::vec(entry(), 36)) {
        let a = MpMatrix::from_f64(m, n, &vals[..m * n]).unwrap();
        prop_assert_eq!(parse_matrix(&write_matrix(&a)).unwrap(), a);
    }

    #[test]
    fn vectors_round_trip_bit_for_bit(vals in prop::collection::vec(entry(), 1..20)) {
        let v = MpVector::from_f64(&vals).unwrap();
        prop_assert_eq!(parse_vector(&write_vector(&v)).unwrap(), v);
    }

    #[test]
    fn datasets_round_trip_bit_for_bit(dim in 1..4usize, rows in prop::collection::vec(prop::collection::vec(-1e9..1e9f64, 4), 1..30)) {
        let inputs: Vec<f64> = rows.iter().flat_map(|r| r[..dim].to_vec()).collect();
        let targets: Vec<f64> = rows.iter().map(|r| r[3]).collect();
        let d = Dataset::from_flat(dim, inputs, targets).unwrap();
        prop_assert_eq!(parse_dataset(&write_dataset(&d)).unwrap(), d);
    }

    #[test]
    fn arbitrary_text_never_panics(text in ".{0,200}") {
        let _ = parse_matrix(&text);
        let _ = parse_vector(&text);
        let _ = parse_dataset(&text);
        let _ = parse_model(&text);
    }

    #[test]
    fn numeric_looking_text_never_panics(text in "[-0-9.,einfINF# \n]{0,120}") {
        let _ = parse_matrix(&text);
        let _ = parse_vector(&text);
        let _ = parse_dataset(&text);
    }
}

#[test]
fn models_round_trip_and_rescore_identically() {
    let xs: Vec<f64> = (0..30).map(|i| -1.0 + i as f64 / 14.5).collect();
    let ys: Vec<f64> = xs.iter().map(|x| x * x * x * x + 0.1 * x).collect();
    let data = Dataset::from_flat(1, xs, ys).unwrap();
    let slopes = grid_slopes(&[-5.0], &[5.0], 0.1, DEFAULT_GRID_CAP).unwrap();
    let model = fit(
        &data,
        &slopes,
        Objective::new(Norm::Lp(2.0), Budget::Theta(0.05), Estimator::Smmae).unwrap(),
    )
    .unwrap();
    let back = parse_model(&write_model(&model)).unwrap();
    assert_eq!(back, model);
    assert_eq!(back.score(&data).unwrap(), model.score(&data).unwrap());
}

#[test]
fn csv_errors_point_at_the_offending_cell() {
    let err = parse_matrix("1,2\n3,x\n").unwrap_err().to_string();
    assert!(err.contains('2') && err.contains("x"), "{err}");
    assert!(parse_matrix("1,2\n3\n").is_err());
    assert!(parse_vector("").is_err());
    assert!(parse_dataset("1,nan\n").is_err());
}
