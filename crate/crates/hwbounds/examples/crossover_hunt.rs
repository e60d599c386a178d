//! Where does the best K bound switch family? For d = 4 the squashed
//! entanglement bounds win at low eta and the REE bounds near the
//! separability boundary; this locates the switching point by bisection and
//! scans the other dimensions (exploratory: only d = 4 is established).
//!
//! Run with: cargo run --example crossover_hunt

use hwbounds::capacity::{channel_bounds, crossover_eta};
use hwbounds::werner::WernerParams;

fn main() {
    for d in 3..=8 {
        match crossover_eta(d, 1e-8) {
            Ok(roots) => {
                let descr: Vec<String> = roots.iter().map(|r| format!("{r:.8}")).collect();
                println!("d = {d}: crossover eta* = {}", descr.join(", "));
                if let Some(&star) = roots.first() {
                    for eta in [star - 0.05, star + 0.05] {
                        let r = channel_bounds(&WernerParams::new(eta, d).unwrap());
                        println!(
                            "    eta = {eta:>9.5}: K <= {:.7} via {}",
                            r.k_bound,
                            r.k_bound_source.label()
                        );
                    }
                }
            }
            Err(err) => println!("d = {d}: {err}"),
        }
    }
    println!();
    println!("(Only the d = 4 competition is an established result; the other");
    println!("rows are exploratory output of the same bisection.)");
}
