//! Plot-ready CSV sweep of every bound over eta for a set of dimensions —
//! the data behind the usual bound-comparison figures: the one- vs two-copy
//! REE gap that widens with d, and the ordering E_P_inf <= E_R2 <= E_R.
//!
//! Run with: cargo run --example capacity_sweep > sweep.csv

use hwbounds::capacity::channel_bounds;
use hwbounds::cli::{fmt_sig, CSV_HEADER};
use hwbounds::werner::WernerParams;

fn main() {
    println!("{CSV_HEADER}");
    for d in [3usize, 4, 5, 6, 7, 8] {
        for i in 0..=100 {
            let eta = -1.0 + i as f64 * 0.01;
            let r = channel_bounds(&WernerParams::new(eta, d).unwrap());
            println!(
                "{},{},{},{},{},{},{},{},{},{}",
                fmt_sig(r.eta),
                r.d,
                fmt_sig(r.e_r),
                fmt_sig(r.e_r2),
                fmt_sig(r.e_p_inf),
                fmt_sig(r.esq_tilde),
                fmt_sig(r.esq_star),
                fmt_sig(r.k_bound),
                r.k_bound_source.label(),
                fmt_sig(r.q2_bound)
            );
        }
    }
}
