//! Expected values computed once by the exhaustive oracle and pinned.

use approx::assert_relative_eq;
use maxplus_sparse::solver::{
    brute_force_oracle, greedy_sparse_solve, solve, Budget, ErrorModel, Estimator, FitProblem,
    Norm, Objective, SolutionKind,
};
use maxplus_sparse::{MpMatrix, MpVector};

fn worked() -> (MpMatrix, MpVector) {
    (
        MpMatrix::from_rows(&[[0.0, 5.0, 2.0], [4.0, 1.0, 0.0], [0.0, 1.0, 0.0]]).unwrap(),
        MpVector::from_f64(&[3.0, 1.0, 0.0]).unwrap(),
    )
}

fn four_by_five() -> (MpMatrix, MpVector) {
    (
        MpMatrix::from_rows(&[
            [0.0, 2.0, -1.0, 3.0, 1.0],
            [1.0, 0.0, 2.0, -2.0, 0.5],
            [-1.0, 1.0, 0.0, 1.0, 2.0],
            [2.0, -1.0, 1.0, 0.0, -0.5],
        ])
        .unwrap(),
        MpVector::from_f64(&[2.0, 1.5, 1.0, 0.5]).unwrap(),
    )
}

fn problem(
    (a, b): (MpMatrix, MpVector),
    norm: Norm,
    theta: f64,
    estimator: Estimator,
) -> FitProblem {
    FitProblem::new(
        a,
        b,
        Objective::new(norm, Budget::Theta(theta), estimator).unwrap(),
    )
    .unwrap()
}

struct Case {
    p: f64,
    theta: f64,
    greedy: &'static [usize],
    greedy_error: f64,
    oracle: &'static [usize],
    oracle_error: f64,
    ratio: f64,
}

#[test]
fn worked_instance_across_orders_and_budgets() {
    let cases = [
        Case {
            p: 1.0,
            theta: 1.0,
            greedy: &[2, 0],
            greedy_error: 1.0,
            oracle: &[0, 1],
            oracle_error: 1.0,
            ratio: 3.8332133440562157,
        },
        Case {
            p: 1.0,
            theta: 3.0,
            greedy: &[2],
            greedy_error: 2.0,
            oracle: &[1],
            oracle_error: 3.0,
            ratio: 1.6286086594223734,
        },
        Case {
            p: 1.0,
            theta: 0.5,
            greedy: &[2, 0, 1],
            greedy_error: 0.0,
            oracle: &[0, 1, 2],
            oracle_error: 0.0,
            ratio: 4.555348061489413,
        },
        Case {
            p: 2.0,
            theta: 1.0,
            greedy: &[2, 0],
            greedy_error: 1.0,
            oracle: &[0, 1],
            oracle_error: 1.0,
            ratio: 5.672828834461907,
        },
        Case {
            p: 2.0,
            theta: 2.0,
            greedy: &[2],
            greedy_error: std::f64::consts::SQRT_2,
            oracle: &[2],
            oracle_error: std::f64::consts::SQRT_2,
            ratio: 1.8377284093710529,
        },
        Case {
            p: 5.0,
            theta: 1.5,
            greedy: &[2],
            greedy_error: 1.148698354997035,
            oracle: &[2],
            oracle_error: 1.148698354997035,
            ratio: 2.0644761255931083,
        },
        Case {
            p: 150.0,
            theta: 1.0,
            greedy: &[2, 0],
            greedy_error: 1.0,
            oracle: &[0, 1],
            oracle_error: 1.0,
            ratio: 270.86253267287634,
        },
    ];
    for c in cases {
        let prob = problem(worked(), Norm::Lp(c.p), c.theta, Estimator::Sgle);
        let g = greedy_sparse_solve(&prob).unwrap();
        let o = brute_force_oracle(&prob).unwrap();
        assert_eq!(g.support, c.greedy, "p={} theta={}", c.p, c.theta);
        assert_relative_eq!(g.error_p.unwrap(), c.greedy_error, max_relative = 1e-12);
        assert_relative_eq!(g.ratio_bound.unwrap(), c.ratio, max_relative = 1e-12);
        assert_eq!(o.sorted_support(), c.oracle, "p={} theta={}", c.p, c.theta);
        assert_relative_eq!(o.error_p.unwrap(), c.oracle_error, max_relative = 1e-12);
    }
}

#[test]
fn worked_instance_solution_vectors() {
    let prob = problem(worked(), Norm::Lp(1.0), 1.0, Estimator::Sgle);
    let g = greedy_sparse_solve(&prob).unwrap();
    assert_eq!(g.x.to_f64(), vec![-3.0, f64::NEG_INFINITY, 0.0]);
    assert_eq!(g.error_inf, 1.0);
    let prob = problem(worked(), Norm::Lp(1.0), 1.0, Estimator::Smmae);
    let s = solve(&prob).unwrap();
    assert_eq!(s.x.to_f64(), vec![-2.5, f64::NEG_INFINITY, 0.5]);
    assert_eq!(s.error_inf, 0.5);
}

#[test]
fn four_by_five_error_model() {
    let (a, b) = four_by_five();
    let m = ErrorModel::new(&a, &b).unwrap();
    assert_eq!(
        m.principal_solution().to_f64(),
        vec![-1.5, 0.0, -0.5, -1.0, -1.0]
    );
    assert_eq!(m.empty_error(), vec![3.5, 4.5, 3.5, 2.0]);
    assert_eq!(m.full_error(), vec![0.0; 4]);
    assert_eq!(m.delta(), 4.5);
}

#[test]
fn four_by_five_greedy_and_oracle() {
    // (p, θ, greedy support, greedy error, oracle support, oracle error)
    type Row = (f64, f64, &'static [usize], f64, &'static [usize], f64);
    let cases: [Row; 6] = [
        (1.0, 1.0, &[1, 2], 0.0, &[1, 2], 0.0),
        (2.0, 1.0, &[1, 2], 0.0, &[1, 2], 0.0),
        (1.0, 2.0, &[1, 2], 0.0, &[0, 1], 1.5),
        (2.0, 2.0, &[1, 2], 0.0, &[0, 1], 1.5),
        (1.0, 3.0, &[1], 3.0, &[1], 3.0),
        (2.0, 3.0, &[1], 2.121320343559643, &[1], 2.121320343559643),
    ];
    for (p, theta, gs, ge, os, oe) in cases {
        let prob = problem(four_by_five(), Norm::Lp(p), theta, Estimator::Sgle);
        let g = greedy_sparse_solve(&prob).unwrap();
        let o = brute_force_oracle(&prob).unwrap();
        assert_eq!(g.support, gs, "p={p} theta={theta}");
        assert_relative_eq!(g.error_p.unwrap(), ge, max_relative = 1e-12);
        assert_eq!(o.sorted_support(), os, "p={p} theta={theta}");
        assert_relative_eq!(o.error_p.unwrap(), oe, max_relative = 1e-12);
    }
}

#[test]
fn four_by_five_max_norm() {
    for eps in [1.0, 1.5] {
        let s = solve(&problem(four_by_five(), Norm::Inf, eps, Estimator::Smmae)).unwrap();
        assert_eq!(s.support, vec![1]);
        assert_eq!(s.error_inf, 0.75);
        assert_eq!(s.kind, SolutionKind::LinfProjection);
        assert_eq!(s.x.to_f64()[1], 0.75);
    }
    let s = solve(&problem(four_by_five(), Norm::Inf, 3.0, Estimator::Smmae)).unwrap();
    assert!(s.support.is_empty());
}
