//! Cross-module consistency checks that are too heavy for in-module unit
//! tests: the classical/matrix objective identity up to d = 5, single-copy
//! cone soundness, and the crossover/source consistency for d = 4.

use hwbounds::capacity::{channel_bounds, crossover_eta};
use hwbounds::matrix::{
    is_psd, partial_transpose, partial_transpose_multi, relative_entropy, tensor_power, PSD_TOL,
};
use hwbounds::measures::{
    ncopy_objective, ppt_cone_check, sigma_x_state, MeasureTag, SymmetricPptPoint,
};
use hwbounds::werner::{werner_state, WernerParams};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn params(eta: f64, d: usize) -> WernerParams {
    WernerParams::new(eta, d).unwrap()
}

#[test]
fn classical_objective_equals_matrix_relative_entropy_up_to_d5() {
    let mut rng = StdRng::seed_from_u64(91);
    for &(n, d) in &[(1usize, 5usize), (2, 5)] {
        let eta = rng.gen_range(-0.9..-0.1);
        let raw: Vec<f64> = (0..=n).map(|_| rng.gen_range(0.05f64..1.0)).collect();
        let sum: f64 = raw.iter().sum();
        let point = SymmetricPptPoint::new(n, raw.iter().map(|v| v / sum).collect()).unwrap();
        let classical = ncopy_objective(eta, &point);
        let rho = tensor_power(&werner_state(&params(eta, d)), n);
        let sigma = sigma_x_state(&point, d).unwrap();
        let matrix_form = relative_entropy(&rho, &sigma).unwrap();
        assert!(
            (classical - matrix_form).abs() <= 1e-9,
            "n={n}, d={d}: classical {classical} vs matrix {matrix_form}"
        );
    }
}

#[test]
fn single_copy_cone_check_matches_the_spectral_test() {
    let mut rng = StdRng::seed_from_u64(92);
    for _ in 0..200 {
        let d = rng.gen_range(2..=5);
        let x0: f64 = rng.gen_range(0.0..1.0);
        let point = SymmetricPptPoint::new(1, vec![x0, 1.0 - x0]).unwrap();
        let cone = ppt_cone_check(&point, d).unwrap();
        let sigma = sigma_x_state(&point, d).unwrap();
        let pt = partial_transpose(&sigma.hermitian(), (d, d)).unwrap();
        assert_eq!(cone, is_psd(&pt, PSD_TOL), "d={d}, x0={x0}");
    }
}

#[test]
fn two_copy_ppt_family_spectral_test_via_multipartite_transpose() {
    // PT over (B1, B2) of sigma_x^2, checked against the cone on a coarse
    // deterministic simplex grid for d = 3.
    let steps = 6usize;
    for i in 0..=steps {
        for j in 0..=(steps - i) {
            let x0 = i as f64 / steps as f64;
            let x1 = j as f64 / steps as f64;
            let x2 = 1.0 - x0 - x1;
            let point = SymmetricPptPoint::new(2, vec![x0, x1, x2.max(0.0)]).unwrap();
            let sigma = sigma_x_state(&point, 3).unwrap();
            let pt = partial_transpose_multi(
                &sigma.hermitian(),
                &[3, 3, 3, 3],
                &[false, true, false, true],
            )
            .unwrap();
            // Points on the cone boundary can fall either way within the
            // numerical tolerance band; skip the razor edge.
            let margins = hwbounds::measures::ppt_cone_margins(&point, 3).unwrap();
            let min_margin = margins.iter().cloned().fold(f64::INFINITY, f64::min);
            if min_margin.abs() < 1e-9 {
                continue;
            }
            assert_eq!(
                ppt_cone_check(&point, 3).unwrap(),
                is_psd(&pt, PSD_TOL),
                "x = {:?}",
                point.weights()
            );
        }
    }
}

#[test]
fn crossover_separates_the_bound_sources_for_d4() {
    let tol = 1e-6;
    let roots = crossover_eta(4, tol).unwrap();
    assert_eq!(roots.len(), 1, "expected a single crossover for d = 4");
    let star = roots[0];
    let mut eta = -0.999;
    while eta < -1e-3 {
        let report = channel_bounds(&params(eta, 4));
        if eta < star - 1e-3 {
            assert!(
                matches!(
                    report.k_bound_source,
                    MeasureTag::SquashedPurification | MeasureTag::SquashedConvexity
                ),
                "squashed family expected at eta={eta} (crossover {star})"
            );
        } else if eta > star + 1e-3 {
            assert_eq!(
                report.k_bound_source,
                MeasureTag::ReeTwoCopy,
                "REE family expected at eta={eta} (crossover {star})"
            );
        }
        eta += 0.007;
    }
}
