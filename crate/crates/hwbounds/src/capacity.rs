//! Per-channel converse bounds on the two-way assisted capacities.
//!
//! For a Holevo-Werner channel `𝒲_{η,d}` the secret-key capacity K is upper
//! bounded by each member of the computable pool `{E_R² ≤ E_R, Ẽ_sq, E*_sq}`
//! evaluated on the Choi matrix `W_{η,d}`; the two-way quantum capacity Q₂ is
//! bounded by the regularised RPPT `E_P^∞`. [`channel_bounds`] assembles all
//! five measures and selects the best admissible bound of each kind.
//!
//! Which K-bound family wins depends on η: squashed-entanglement bounds are
//! tighter deep in the entangled region, the REE bounds near the separability
//! boundary. [`crossover_eta`] locates the switching points.
//!
//! [`finite_rate_bound`] implements the finite-size weak-converse arithmetic:
//! an n-use rate R_n with ε-closeness to the target obeys
//!
//! ```text
//! R_n ≤ [E_P(χ^{⊗n}) + (1 + ε/2) H₂(ε/(2+ε))] / (n (1 - (ε/2) log2 d))
//! ```
//!
//! which tends to `E_P^∞` as ε → 0 and n → ∞.

use serde::Serialize;

use crate::measures::{
    ree_one_copy, ree_two_copy, rppt_regularised, squashed_convexity_bound,
    squashed_purification_bound, MeasureTag,
};
use crate::werner::WernerParams;
use crate::{Error, Result};

/// All five per-channel measures plus the selected K- and Q₂-bounds.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub eta: f64,
    pub d: usize,
    /// One-copy REE (= one-copy RPPT).
    pub e_r: f64,
    /// Two-copy REE.
    pub e_r2: f64,
    /// Regularised RPPT.
    pub e_p_inf: f64,
    /// Squashed-entanglement bound via the purification extension.
    pub esq_tilde: f64,
    /// Squashed-entanglement bound via convexity.
    pub esq_star: f64,
    /// `min(e_r2, esq_tilde, esq_star)`.
    pub k_bound: f64,
    /// Which member of the pool attains `k_bound` (first of the pool order on
    /// exact ties).
    pub k_bound_source: MeasureTag,
    /// `e_p_inf`, the tightest computable Q₂ bound.
    pub q2_bound: f64,
}

/// Evaluates every measure for one channel and selects the bounds.
///
/// `E_R` is reported for context but never selected: `E_R² ≤ E_R` always.
pub fn channel_bounds(p: &WernerParams) -> BoundReport {
    let e_r = ree_one_copy(p);
    let e_r2 = ree_two_copy(p).value;
    let e_p_inf = rppt_regularised(p);
    let esq_tilde = squashed_purification_bound(p);
    let esq_star = squashed_convexity_bound(p);

    let mut k_bound = e_r2;
    let mut k_bound_source = MeasureTag::ReeTwoCopy;
    for (tag, value) in [
        (MeasureTag::SquashedPurification, esq_tilde),
        (MeasureTag::SquashedConvexity, esq_star),
    ] {
        if value < k_bound {
            k_bound = value;
            k_bound_source = tag;
        }
    }

    BoundReport {
        eta: p.eta(),
        d: p.d(),
        e_r,
        e_r2,
        e_p_inf,
        esq_tilde,
        esq_star,
        k_bound,
        k_bound_source,
        q2_bound: e_p_inf,
    }
}

/// Signs of `min(Ẽ_sq, E*_sq) - E_R²`: positive where the REE bound is the
/// better (smaller) one.
fn bound_gap(eta: f64, d: usize) -> f64 {
    let p = WernerParams::new(eta, d).expect("scan stays in range");
    let squashed = squashed_purification_bound(&p).min(squashed_convexity_bound(&p));
    squashed - ree_two_copy(&p).value
}

/// Locates every η in `(-1, 0)` where the best squashed bound and the
/// two-copy REE bound exchange roles, by a 200-interval sign scan followed by
/// bisection to `tol`. Multiple sign changes (none are known, but unimodality
/// is unproven) are all returned, ascending.
///
/// Only `d = 4` is established to have a crossover; results for other
/// dimensions are exploratory.
pub fn crossover_eta(d: usize, tol: f64) -> Result<Vec<f64>> {
    if d < 3 {
        return Err(Error::BadDimension { d });
    }
    const SCAN: usize = 200;
    let grid: Vec<f64> = (0..=SCAN)
        .map(|i| -1.0 + i as f64 * (1.0 - 1e-6) / SCAN as f64)
        .collect();
    let values: Vec<f64> = grid.iter().map(|&eta| bound_gap(eta, d)).collect();

    let mut roots = Vec::new();
    for i in 0..SCAN {
        let (a, b) = (values[i], values[i + 1]);
        if a == 0.0 {
            roots.push(grid[i]);
            continue;
        }
        if a * b < 0.0 {
            let (mut lo, mut hi) = (grid[i], grid[i + 1]);
            let mut f_lo = a;
            while hi - lo > tol {
                let mid = 0.5 * (lo + hi);
                let f_mid = bound_gap(mid, d);
                if f_mid == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if f_lo * f_mid < 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    f_lo = f_mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
    }
    if roots.is_empty() {
        let dominant = if values.iter().all(|v| *v >= 0.0) {
            "REE"
        } else {
            "squashed-entanglement"
        };
        return Err(Error::NoCrossover { dominant });
    }
    Ok(roots)
}

/// Binary Shannon entropy `H₂(q) = -q log2 q - (1-q) log2 (1-q)`, zero at the
/// endpoints.
pub fn binary_entropy(q: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&q) || q.is_nan() {
        return Err(Error::OutOfRange {
            name: "q",
            value: q,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let term = |v: f64| if v > 0.0 { -v * v.log2() } else { 0.0 };
    Ok(term(q) + term(1.0 - q))
}

/// A dimension whose base-2 logarithm is needed, either directly or in the
/// overflow-safe power form `base^exponent` (so `log2(d^{nR}) = nR log2 d`
/// never materialises `d^{nR}`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogDim {
    Dim(u64),
    Power { base: u64, exponent: f64 },
}

impl LogDim {
    pub fn log2(&self) -> f64 {
        match self {
            LogDim::Dim(d) => (*d as f64).log2(),
            LogDim::Power { base, exponent } => exponent * (*base as f64).log2(),
        }
    }
}

/// Asymptotic-continuity correction
/// `f(ε, d) = (ε/2) log2 d + (1 + ε/2) H₂(ε/(2+ε))`; vanishes as ε → 0 and is
/// monotone increasing in both arguments.
pub fn continuity_f(epsilon: f64, d: LogDim) -> Result<f64> {
    if epsilon < 0.0 || epsilon.is_nan() {
        return Err(Error::OutOfRange {
            name: "epsilon",
            value: epsilon,
            lo: 0.0,
            hi: f64::INFINITY,
        });
    }
    let h = binary_entropy(epsilon / (2.0 + epsilon))?;
    Ok(epsilon / 2.0 * d.log2() + (1.0 + epsilon / 2.0) * h)
}

/// Inputs of the finite-size rate bound: closeness ε, output dimension d and
/// number of channel uses n. Requires `1 - (ε/2) log2 d > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteSizeParams {
    epsilon: f64,
    d: usize,
    n: usize,
}

impl FiniteSizeParams {
    pub fn new(epsilon: f64, d: usize, n: usize) -> Result<Self> {
        if !(0.0..2.0).contains(&epsilon) || epsilon.is_nan() {
            return Err(Error::OutOfRange {
                name: "epsilon",
                value: epsilon,
                lo: 0.0,
                hi: 2.0,
            });
        }
        if d < 2 {
            return Err(Error::BadDimension { d });
        }
        if n < 1 {
            return Err(Error::OutOfRange {
                name: "n",
                value: n as f64,
                lo: 1.0,
                hi: f64::INFINITY,
            });
        }
        let denom = 1.0 - epsilon / 2.0 * (d as f64).log2();
        if denom <= 0.0 {
            return Err(Error::NonPositiveDenominator { value: denom });
        }
        Ok(Self { epsilon, d, n })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `1 - (ε/2) log2 d`, positive by construction.
    pub fn denominator(&self) -> f64 {
        1.0 - self.epsilon / 2.0 * (self.d as f64).log2()
    }
}

/// Finite-size weak-converse rate bound
/// `[e_p_n + (1 + ε/2) H₂(ε/(2+ε))] / (n (1 - (ε/2) log2 d))`, where `e_p_n`
/// is an n-copy RPPT value (e.g. `n` times an n-copy rate). At ε = 0 this is
/// exactly `e_p_n / n`; as n → ∞ with `e_p_n/n → E_P^∞` it tends to
/// `E_P^∞ / (1 - (ε/2) log2 d)`.
pub fn finite_rate_bound(fs: &FiniteSizeParams, e_p_n: f64) -> f64 {
    let eps = fs.epsilon();
    let h = binary_entropy(eps / (2.0 + eps)).expect("argument in [0, 1) by construction");
    let numerator = e_p_n + (1.0 + eps / 2.0) * h;
    numerator / (fs.n() as f64 * fs.denominator())
}
