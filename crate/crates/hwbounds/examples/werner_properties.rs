//! Structural checks on Werner states and Holevo-Werner channels: the four
//! parametrisations, the closed-form spectrum, the Choi identity, the
//! teleportation covariance probe and the qubit Bloch-sphere picture.
//!
//! Run with: cargo run --example werner_properties

use hwbounds::matrix::eigvalsh;
use hwbounds::werner::{
    check_teleportation_covariance, convert_representation, hw_choi, qubit_shrink_factor,
    werner_spectrum, werner_state, ReprKind, WernerParams, WernerRepresentation,
};

fn main() {
    let d = 3usize;
    let eta = -0.6f64;
    let from = WernerRepresentation::new(ReprKind::Expectation, eta);
    println!("eta = {eta}, d = {d} in the four parametrisations:");
    for kind in [
        ReprKind::Alpha,
        ReprKind::Weighting,
        ReprKind::Expectation,
        ReprKind::Anti,
    ] {
        let conv = convert_representation(from, kind, d).unwrap();
        let (lo, hi) = kind.range(d);
        println!(
            "  {kind:?}: value = {:+.6}  (valid range [{lo:+.4}, {hi:+.4}])",
            conv.value
        );
    }
    println!();

    let p = WernerParams::new(eta, d).unwrap();
    let spec = werner_spectrum(&p);
    println!(
        "spectrum: gamma+ = {:.6} (x{}), gamma- = {:.6} (x{})",
        spec.gamma_plus, spec.n_plus, spec.gamma_minus, spec.n_minus
    );
    let numeric = eigvalsh(&werner_state(&p).hermitian());
    println!(
        "numeric eigenvalues range [{:.6}, {:.6}] over {} values",
        numeric.first().unwrap(),
        numeric.last().unwrap(),
        numeric.len()
    );
    println!();

    let dev = hw_choi(&p).max_abs_diff(&werner_state(&p));
    println!("Choi matrix vs Werner state: max entry deviation {dev:.2e}");
    let cov = check_teleportation_covariance(&p, 50, 7);
    println!("teleportation covariance over 50 random unitaries: max deviation {cov:.2e}");
    println!();

    println!("qubit channel action on the Bloch sphere:");
    for eta in [-1.0, 0.0, 0.5, 1.0] {
        let s = qubit_shrink_factor(eta);
        println!(
            "  eta = {eta:+.1}: shrink factor {:.4}, {}",
            s.factor,
            if s.factor == 0.0 {
                "collapse to the maximally mixed state"
            } else if s.reflected {
                "with an x-z reflection"
            } else {
                "with a pi rotation about y"
            }
        );
    }
}
