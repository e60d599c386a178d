//! Finite-size weak-converse rates: how the n-use rate bound tightens toward
//! the regularised RPPT as the closeness parameter epsilon shrinks and the
//! use count n grows.
//!
//! Run with: cargo run --example finite_size

use hwbounds::capacity::{
    binary_entropy, continuity_f, finite_rate_bound, FiniteSizeParams, LogDim,
};
use hwbounds::measures::{rppt_ncopy_numeric, rppt_regularised};
use hwbounds::werner::WernerParams;

fn main() {
    let p = WernerParams::new(-1.0, 4).unwrap();
    let e_inf = rppt_regularised(&p);
    println!("channel (eta, d) = (-1, 4): E_P_inf = {e_inf:.9}");
    println!();

    println!("exact small-n rates from the family minimisation:");
    for n in 1..=3 {
        let rate = rppt_ncopy_numeric(n, &p, 1e-9).unwrap();
        println!("  E_P^{n}/{n} = {rate:.9}");
    }
    println!();

    println!("asymptotic-continuity correction f(eps, d): f(0.1, 2) = H2-driven");
    println!(
        "  H2(0.047619) = {:.9}, f(0.1, 2) = {:.9}",
        binary_entropy(0.047619).unwrap(),
        continuity_f(0.1, LogDim::Dim(2)).unwrap()
    );
    println!(
        "  power form f(0.1, 2^30) = {:.6} (no overflow at huge dimensions)",
        continuity_f(
            0.1,
            LogDim::Power {
                base: 2,
                exponent: 30.0
            }
        )
        .unwrap()
    );
    println!();

    println!("rate bound at n channel uses (proxy input n * E_P_inf):");
    println!(
        "{:>8} {:>9} {:>14} {:>14}",
        "n", "epsilon", "bound", "gap to limit"
    );
    for eps in [0.1, 0.01] {
        let fs1 = FiniteSizeParams::new(eps, 4, 1).unwrap();
        let limit = e_inf / fs1.denominator();
        for n in [10usize, 100, 1000, 10000] {
            let fs = FiniteSizeParams::new(eps, 4, n).unwrap();
            let bound = finite_rate_bound(&fs, n as f64 * e_inf);
            println!("{n:>8} {eps:>9} {bound:>14.9} {:>14.3e}", bound - limit);
        }
    }
    println!();
    println!("As eps -> 0 the bound collapses onto the n-copy rate exactly; as");
    println!("n -> inf it approaches E_P_inf / (1 - (eps/2) log2 d).");
}
