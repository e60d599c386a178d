//! Entanglement measures of Werner states: one-copy REE/RPPT, the regularised
//! RPPT, the two-copy REE (closed form plus an independent numerical
//! minimiser), the general-n symmetric PPT family, and two squashed
//! entanglement upper bounds.
//!
//! The n-copy minimisations run over the `U⊗U⊗…⊗U⊗U`-invariant family
//!
//! ```text
//! σ_x^n = Σ_k (x_k / C(n,k)) · Σ_perms W_{-1,d}^{⊗(n-k)} ⊗ W_{1,d}^{⊗k}
//! ```
//!
//! parametrised by a probability vector `x = (x_0, …, x_n)`; the closest state
//! to `W_{η,d}^{⊗n}` in both the separable and the PPT sense lies in this
//! family. Because `W^{⊗n}` and `σ_x^n` commute, the relative entropy
//! collapses to a classical divergence `Σ y_i log2(y_i / x_i)` with binomial
//! weights `y_i = C(n,i) (1-η)^{n-i} (1+η)^i / 2^n` (the index counts
//! symmetric-extreme factors; the middle weight for `n = 2` is
//! `(1-η)(1+η)/2`). The PPT condition on `σ_x^n` is the linear cone
//! `M^{⊗n} x' ≥ 0` with `M = [[-1, 1], [1, (d-1)/(d+1)]]` and `x'` the
//! expansion of `x` over position patterns.
//!
//! All measures are clamped at zero from below and vanish for `η ≥ 0`
//! (separable states), except that the purification bound keeps its small
//! positive residue at `η = 0` exactly.

use serde::Serialize;

use crate::matrix::{tensor, DensityMatrix};
use crate::werner::{werner_state, WernerParams};
use crate::{Error, Result};

/// Largest total Hilbert-space dimension `d^{2n}` accepted when explicitly
/// constructing `σ_x^n` as a dense matrix.
pub const SIGMA_DIM_GUARD: usize = 4096;
/// Componentwise slack accepted by [`ppt_cone_check`].
pub const CONE_TOL: f64 = 1e-10;

fn log2_pos(v: f64) -> f64 {
    debug_assert!(v > 0.0);
    v.log2()
}

/// `v log2 v`, extended by continuity with `0 log 0 = 0`.
fn xlog2(v: f64) -> f64 {
    if v > 0.0 {
        v * v.log2()
    } else {
        0.0
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut out = 1.0f64;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as f64 / (i + 1) as f64;
    }
    out
}

/// One-copy REE of `W_{η,d}` (equal to the one-copy RPPT), in bits.
///
/// Zero for `η ≥ 0`; otherwise
/// `(1+η)/2 log2(1+η) + (1-η)/2 log2(1-η)`, independent of `d`. The closest
/// separable and PPT state is the boundary Werner state `W_{0,d}`.
pub fn ree_one_copy(p: &WernerParams) -> f64 {
    let eta = p.eta();
    if eta >= 0.0 {
        return 0.0;
    }
    (xlog2(1.0 + eta) + xlog2(1.0 - eta)) / 2.0
}

/// Regularised RPPT `E_P^∞(W_{η,d})` in bits.
///
/// Equal to the one-copy value in the additivity region `-2/d ≤ η ≤ 0`, and
/// `log2((d+2)/d) + (1+η)/2 log2((d-2)/(d+2))` below it; continuous at the
/// branch point.
pub fn rppt_regularised(p: &WernerParams) -> f64 {
    let eta = p.eta();
    let d = p.d() as f64;
    if eta >= 0.0 {
        0.0
    } else if eta >= -2.0 / d {
        ree_one_copy(p)
    } else {
        let value = log2_pos((d + 2.0) / d) + (1.0 + eta) / 2.0 * log2_pos((d - 2.0) / (d + 2.0));
        value.max(0.0)
    }
}

/// A point of the invariant family: `n` copies and a probability vector
/// `x = (x_0, …, x_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricPptPoint {
    n: usize,
    x: Vec<f64>,
}

impl SymmetricPptPoint {
    /// Validates length `n + 1`, entrywise `x_i ≥ -1e-12` and `Σ x_i = 1`
    /// within `1e-12`.
    pub fn new(n: usize, x: Vec<f64>) -> Result<Self> {
        if x.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                got: x.len(),
            });
        }
        for (i, &xi) in x.iter().enumerate() {
            if xi < -1e-12 || xi.is_nan() {
                return Err(Error::OutOfRange {
                    name: "x_i",
                    value: xi,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
            let _ = i;
        }
        let sum: f64 = x.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidTrace { trace: sum });
        }
        Ok(Self { n, x })
    }

    pub fn copies(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[f64] {
        &self.x
    }
}

/// Explicit dense construction of `σ_x^n` for `n ≤ 3` and `d^{2n} ≤ 4096`.
pub fn sigma_x_state(point: &SymmetricPptPoint, d: usize) -> Result<DensityMatrix> {
    let n = point.copies();
    if !(1..=3).contains(&n) {
        return Err(Error::UnsupportedCopies {
            n,
            expected: "1..=3",
        });
    }
    let dim = (d * d).pow(n as u32);
    if dim > SIGMA_DIM_GUARD {
        return Err(Error::SizeGuard {
            dim,
            guard: SIGMA_DIM_GUARD,
        });
    }
    let w_minus = werner_state(&WernerParams::new(-1.0, d)?);
    let w_plus = werner_state(&WernerParams::new(1.0, d)?);
    let mut acc = nalgebra::DMatrix::<num_complex::Complex64>::zeros(dim, dim);
    for mask in 0..(1usize << n) {
        let k = mask.count_ones() as usize;
        let weight = point.weights()[k] / binomial(n, k);
        if weight == 0.0 {
            continue;
        }
        let mut term = if mask & 1 != 0 {
            w_plus.clone()
        } else {
            w_minus.clone()
        };
        for bit in 1..n {
            let factor = if mask & (1 << bit) != 0 {
                &w_plus
            } else {
                &w_minus
            };
            term = tensor(&term, factor);
        }
        acc += term.matrix() * num_complex::Complex64::new(weight, 0.0);
    }
    DensityMatrix::new(acc)
}

/// The rows of `M^{⊗n} x'` with `M = [[-1, 1], [1, (d-1)/(d+1)]]`; the state
/// `σ_x^n` is PPT iff every row is non-negative.
pub fn ppt_cone_margins(point: &SymmetricPptPoint, d: usize) -> Result<Vec<f64>> {
    let n = point.copies();
    if n > 12 {
        return Err(Error::UnsupportedCopies {
            n,
            expected: "1..=12",
        });
    }
    Ok(cone_margins_raw(n, point.weights(), d))
}

fn cone_margins_raw(n: usize, x: &[f64], d: usize) -> Vec<f64> {
    let c = (d as f64 - 1.0) / (d as f64 + 1.0);
    let m = [[-1.0, 1.0], [1.0, c]];
    let rows = 1usize << n;
    // Expanded weights per position pattern b: x_{|b|} / C(n, |b|).
    let xprime: Vec<f64> = (0..rows)
        .map(|b| {
            let k = (b as u32).count_ones() as usize;
            x[k] / binomial(n, k)
        })
        .collect();
    (0..rows)
        .map(|a| {
            let mut sum = 0.0;
            for (b, &w) in xprime.iter().enumerate() {
                if w == 0.0 {
                    continue;
                }
                let mut coeff = 1.0;
                for bit in 0..n {
                    let ai = (a >> bit) & 1;
                    let bi = (b >> bit) & 1;
                    coeff *= m[ai][bi];
                }
                sum += coeff * w;
            }
            sum
        })
        .collect()
}

/// `true` iff `σ_x^n` is PPT, i.e. `M^{⊗n} x' ≥ -1e-10` componentwise.
pub fn ppt_cone_check(point: &SymmetricPptPoint, d: usize) -> Result<bool> {
    Ok(ppt_cone_margins(point, d)?
        .into_iter()
        .all(|margin| margin >= -CONE_TOL))
}

/// Binomial weights of `W_{η,d}^{⊗n}` over the invariant family:
/// `y_i = C(n,i) (1-η)^{n-i} (1+η)^i / 2^n`.
pub fn ncopy_weights(n: usize, eta: f64) -> Vec<f64> {
    (0..=n)
        .map(|i| {
            binomial(n, i) * (1.0 - eta).powi((n - i) as i32) * (1.0 + eta).powi(i as i32)
                / 2f64.powi(n as i32)
        })
        .collect()
}

fn objective_raw(eta: f64, x: &[f64]) -> f64 {
    let n = x.len() - 1;
    let ys = ncopy_weights(n, eta);
    let mut sum = 0.0;
    for (yi, xi) in ys.iter().zip(x.iter()) {
        if *yi <= 0.0 {
            continue;
        }
        if *xi <= 0.0 {
            return f64::INFINITY;
        }
        sum += yi * (yi / xi).log2();
    }
    sum
}

/// `S(W^{⊗n} || σ_x^n) = Σ y_i log2(y_i / x_i)` in bits, with the conventions
/// `0 log(0/x) = 0` and `y_i > 0, x_i = 0 ⇒ +∞`. Equals the matrix relative
/// entropy of the explicitly constructed states whenever those are tractable.
pub fn ncopy_objective(eta: f64, point: &SymmetricPptPoint) -> f64 {
    debug_assert!((-1.0..=1.0).contains(&eta));
    objective_raw(eta, point.weights())
}

/// Solution of the two-copy minimisation: the discriminant `θ`, the optimal
/// weights `(x_0, x_1)`, and the halved two-copy REE in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoCopySolution {
    pub theta: f64,
    pub x0: f64,
    pub x1: f64,
    pub value: f64,
}

/// Discriminant of the two-copy Lagrange solution.
pub fn two_copy_theta(eta: f64, d: usize) -> f64 {
    let d = d as f64;
    let e2 = eta * eta;
    d.powi(4) * (e2 + 1.0).powi(2)
        - 4.0 * d.powi(3) * eta * (e2 - 3.0)
        - 4.0 * d * d * (e2 * e2 + 3.0 * e2 - 1.0)
        + 8.0 * d * eta * (e2 - 3.0)
        + 4.0 * (e2 + 1.0).powi(2)
}

/// Closed-form two-copy REE `E_R²(W_{η,d})`, valid for `d ≥ 3` and
/// `η ≤ -2/d`:
///
/// ```text
/// x_0 = [d²(η²+1) + √θ - 2d(η-2) - 2η² - 2] / (8d(d+2))
/// x_1 = -[d²(η²-3) + √θ - 2dη - 2η² + 6] / (4(d²-4))
/// ```
///
/// with the value `Σ y_i log2(y_i/x_i) / 2` evaluated at
/// `(x_0, x_1, 1-x_0-x_1)`.
pub fn ree_two_copy_closed(p: &WernerParams) -> Result<TwoCopySolution> {
    let eta = p.eta();
    let d = p.d();
    if d < 3 || eta > -2.0 / d as f64 {
        return Err(Error::OutsideClosedFormRegion { eta, d });
    }
    let df = d as f64;
    let theta = two_copy_theta(eta, d);
    let root = theta.sqrt();
    let e2 = eta * eta;
    let mut x0 = (df * df * (e2 + 1.0) + root - 2.0 * df * (eta - 2.0) - 2.0 * e2 - 2.0)
        / (8.0 * df * (df + 2.0));
    let mut x1 =
        -(df * df * (e2 - 3.0) + root - 2.0 * df * eta - 2.0 * e2 + 6.0) / (4.0 * (df * df - 4.0));
    // Round-off at the region ends can leave -1e-17 style dust.
    if x0.abs() < 1e-12 {
        x0 = 0.0;
    }
    if x1.abs() < 1e-12 {
        x1 = 0.0;
    }
    let value = objective_raw(eta, &[x0, x1, 1.0 - x0 - x1]) / 2.0;
    Ok(TwoCopySolution {
        theta,
        x0,
        x1,
        value,
    })
}

/// Two-copy REE `E_R²(W_{η,d})` for any parameters.
///
/// Dispatch: zero at the separable point `η ≥ 0` (minimiser `x = y`), the
/// one-copy value in the additivity region `-2/d ≤ η ≤ 0` (minimiser at the
/// vertex `(1/4, 1/2)`, i.e. `W_{0,d}^{⊗2}`), and the closed form below
/// `-2/d`. The branches agree at both seams.
pub fn ree_two_copy(p: &WernerParams) -> TwoCopySolution {
    let eta = p.eta();
    let d = p.d();
    let theta = two_copy_theta(eta, d);
    if eta >= 0.0 {
        let y = ncopy_weights(2, eta);
        TwoCopySolution {
            theta,
            x0: y[0],
            x1: y[1],
            value: 0.0,
        }
    } else if d == 2 || eta >= -2.0 / d as f64 {
        TwoCopySolution {
            theta,
            x0: 0.25,
            x1: 0.5,
            value: ree_one_copy(p),
        }
    } else {
        ree_two_copy_closed(p).expect("inside the closed-form region")
    }
}

/// Golden-section minimisation of a unimodal (convex, possibly +∞ off its
/// feasible interval) function. A coarse scan seeds the bracket so infinite
/// plateaus at the ends cannot trap the search.
fn scan_golden_min<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    if hi <= lo {
        let v = f(lo);
        return (lo, v);
    }
    const SCAN: usize = 48;
    let mut best_x = f64::NAN;
    let mut best_v = f64::INFINITY;
    for i in 0..=SCAN {
        let x = lo + (hi - lo) * i as f64 / SCAN as f64;
        let v = f(x);
        if v < best_v {
            best_v = v;
            best_x = x;
        }
    }
    if best_v.is_infinite() {
        return (f64::NAN, f64::INFINITY);
    }
    let step = (hi - lo) / SCAN as f64;
    let mut a = (best_x - step).max(lo);
    let mut b = (best_x + step).min(hi);
    let inv_phi = 0.618_033_988_749_894_9_f64;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    let mid = 0.5 * (a + b);
    let fmid = f(mid);
    let mut out = (mid, fmid);
    if f1 < out.1 {
        out = (x1, f1);
    }
    if f2 < out.1 {
        out = (x2, f2);
    }
    if best_v < out.1 {
        out = (best_x, best_v);
    }
    out
}

const AXIS_TOL: f64 = 1e-12;

/// Numerical two-copy minimiser, independent of the closed-form `θ/x_0/x_1`
/// expressions: minimises `Σ y_i log2(y_i/x_i) / 2` over `(x_0, x_1)` subject
/// to
///
/// ```text
/// 1 - 2x_1 ≥ 0
/// (d-1) - 2d x_0 + (2-d) x_1 ≥ 0
/// (d-1)² + 4d x_0 + 2(d-1) x_1 ≥ 0
/// x_0 + x_1 ≤ 1,  x_0, x_1 ≥ 0
/// ```
///
/// by nested golden-section over the convex objective (the inner feasible
/// `x_0` interval is solved exactly from the linear constraints). Serves as
/// the independent oracle for [`ree_two_copy_closed`]; the result is well
/// within `tol` of the true minimum for any `tol ≥ 1e-8`.
pub fn ree_two_copy_numeric(p: &WernerParams, tol: f64) -> TwoCopySolution {
    let eta = p.eta();
    let d = p.d() as f64;
    let theta = two_copy_theta(eta, p.d());
    if eta >= 0.0 {
        let y = ncopy_weights(2, eta);
        return TwoCopySolution {
            theta,
            x0: y[0],
            x1: y[1],
            value: 0.0,
        };
    }
    let _ = tol;
    let inner = |x1: f64| -> (f64, f64) {
        // Feasible x_0 interval at fixed x_1.
        let hi = ((d - 1.0 + (2.0 - d) * x1) / (2.0 * d)).min(1.0 - x1);
        let lo = (-((d - 1.0) * (d - 1.0) + 2.0 * (d - 1.0) * x1) / (4.0 * d)).max(0.0);
        if hi < lo {
            return (f64::NAN, f64::INFINITY);
        }
        scan_golden_min(
            &|x0: f64| objective_raw(eta, &[x0, x1, 1.0 - x0 - x1]),
            lo,
            hi,
            AXIS_TOL,
        )
    };
    let (x1, _) = scan_golden_min(&|x1: f64| inner(x1).1, 0.0, 0.5, AXIS_TOL);
    let (x0, value) = inner(x1);
    TwoCopySolution {
        theta,
        x0,
        x1,
        value: value / 2.0,
    }
}

/// Exact n-copy RPPT rate `E_P(W^{⊗n})/n` for `n ∈ {1, 2, 3}`, minimising the
/// classical objective over the probability simplex intersected with the PPT
/// cone. The minimiser lies in the invariant family, so this is an exact
/// value, sandwiched between the regularised RPPT and the one-copy value.
///
/// The result is reported strictly as an RPPT quantity: for `n ≥ 3` it is not
/// known whether the PPT members of the family are separable.
pub fn rppt_ncopy_numeric(n: usize, p: &WernerParams, tol: f64) -> Result<f64> {
    if !(1..=3).contains(&n) {
        return Err(Error::UnsupportedCopies {
            n,
            expected: "1..=3",
        });
    }
    let eta = p.eta();
    if eta >= 0.0 {
        return Ok(0.0);
    }
    let _ = tol;
    let d = p.d();
    let value = match n {
        1 => {
            // Cone rows reduce to x_0 ≤ 1/2.
            let (_, v) = scan_golden_min(
                &|x0: f64| objective_raw(eta, &[x0, 1.0 - x0]),
                0.0,
                0.5,
                AXIS_TOL,
            );
            v
        }
        2 => {
            let inner = |x1: f64| -> f64 {
                let (lo, hi) = inner_x0_interval(2, &[x1], d);
                if hi < lo {
                    return f64::INFINITY;
                }
                scan_golden_min(
                    &|x0: f64| objective_raw(eta, &[x0, x1, 1.0 - x0 - x1]),
                    lo,
                    hi,
                    AXIS_TOL,
                )
                .1
            };
            scan_golden_min(&inner, 0.0, 1.0, AXIS_TOL).1
        }
        3 => {
            let inner = |x1: f64, x2: f64| -> f64 {
                let (lo, hi) = inner_x0_interval(3, &[x1, x2], d);
                if hi < lo {
                    return f64::INFINITY;
                }
                scan_golden_min(
                    &|x0: f64| objective_raw(eta, &[x0, x1, x2, 1.0 - x0 - x1 - x2]),
                    lo,
                    hi,
                    AXIS_TOL,
                )
                .1
            };
            let middle = |x2: f64| -> f64 {
                scan_golden_min(&|x1: f64| inner(x1, x2), 0.0, 1.0 - x2, AXIS_TOL).1
            };
            scan_golden_min(&middle, 0.0, 1.0, AXIS_TOL).1
        }
        _ => unreachable!(),
    };
    Ok((value / n as f64).max(0.0))
}

/// Feasible interval of `x_0` given the remaining free weights
/// `rest = (x_1, …, x_{n-1})`; the cone margins are affine in `x_0` once the
/// dependent weight `x_n = 1 - x_0 - Σ rest` is substituted.
fn inner_x0_interval(n: usize, rest: &[f64], d: usize) -> (f64, f64) {
    let rest_sum: f64 = rest.iter().sum();
    let mut lo = 0.0f64;
    let mut hi = 1.0 - rest_sum;
    let assemble = |x0: f64| -> Vec<f64> {
        let mut x = Vec::with_capacity(n + 1);
        x.push(x0);
        x.extend_from_slice(rest);
        x.push(1.0 - x0 - rest_sum);
        x
    };
    let at0 = cone_margins_raw(n, &assemble(0.0), d);
    let at1 = cone_margins_raw(n, &assemble(1.0), d);
    for (b, a1) in at0.iter().zip(at1.iter()) {
        let slope = a1 - b;
        // slope * x0 + b >= 0
        if slope.abs() < 1e-15 {
            if *b < -1e-12 {
                return (1.0, 0.0); // infeasible for every x0
            }
        } else if slope > 0.0 {
            lo = lo.max(-b / slope);
        } else {
            hi = hi.min(-b / slope);
        }
    }
    (lo, hi)
}

/// Squashed-entanglement upper bound from the purification extension:
/// `Ẽ_sq = log2 d + (1+η)/4 log2[(1+η)/(d(d+1))] + (1-η)/4 log2[(1-η)/(d(d-1))]`,
/// which is half the mutual information of `W_{η,d}`. Reported as zero for
/// `η > 0` (the state is separable there, so zero is the better bound); the
/// small positive residue at `η = 0` is kept.
pub fn squashed_purification_bound(p: &WernerParams) -> f64 {
    let eta = p.eta();
    if eta > 0.0 {
        return 0.0;
    }
    let d = p.d() as f64;
    let mut value = d.log2();
    if 1.0 + eta > 0.0 {
        value += (1.0 + eta) / 4.0 * ((1.0 + eta) / (d * (d + 1.0))).log2();
    }
    if 1.0 - eta > 0.0 {
        value += (1.0 - eta) / 4.0 * ((1.0 - eta) / (d * (d - 1.0))).log2();
    }
    value.max(0.0)
}

/// Squashed-entanglement upper bound from convexity,
/// `W_{η,d} = (1+η) W_{0,d} + (-η) W_{-1,d}` for `η ∈ [-1, 0]`:
///
/// ```text
/// E*_sq = -η log2((d+2)/d)          (d even)
///       = -η/2 log2((d+3)/(d-1))    (d odd)
/// ```
///
/// and zero otherwise. Linear in `η` on `[-1, 0]`.
pub fn squashed_convexity_bound(p: &WernerParams) -> f64 {
    let eta = p.eta();
    if eta > 0.0 {
        return 0.0;
    }
    let d = p.d() as f64;
    let slope = if p.d().is_multiple_of(2) {
        ((d + 2.0) / d).log2()
    } else {
        ((d + 3.0) / (d - 1.0)).log2() / 2.0
    };
    (-eta * slope).max(0.0)
}

/// Names for the per-channel measures, used as CSV/JSON labels and as
/// edge-weight selectors in the network bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MeasureTag {
    #[serde(rename = "E_R")]
    ReeOneCopy,
    #[serde(rename = "E_R2")]
    ReeTwoCopy,
    #[serde(rename = "E_P_inf")]
    RpptRegularised,
    #[serde(rename = "Esq_tilde")]
    SquashedPurification,
    #[serde(rename = "Esq_star")]
    SquashedConvexity,
}

impl MeasureTag {
    pub const ALL: [MeasureTag; 5] = [
        MeasureTag::ReeOneCopy,
        MeasureTag::ReeTwoCopy,
        MeasureTag::RpptRegularised,
        MeasureTag::SquashedPurification,
        MeasureTag::SquashedConvexity,
    ];

    /// The K-bound pool: measures admissible as secret-key capacity bounds.
    pub const K_POOL: [MeasureTag; 3] = [
        MeasureTag::ReeTwoCopy,
        MeasureTag::SquashedPurification,
        MeasureTag::SquashedConvexity,
    ];

    pub fn evaluate(&self, p: &WernerParams) -> f64 {
        match self {
            MeasureTag::ReeOneCopy => ree_one_copy(p),
            MeasureTag::ReeTwoCopy => ree_two_copy(p).value,
            MeasureTag::RpptRegularised => rppt_regularised(p),
            MeasureTag::SquashedPurification => squashed_purification_bound(p),
            MeasureTag::SquashedConvexity => squashed_convexity_bound(p),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            MeasureTag::ReeOneCopy => "E_R",
            MeasureTag::ReeTwoCopy => "E_R2",
            MeasureTag::RpptRegularised => "E_P_inf",
            MeasureTag::SquashedPurification => "Esq_tilde",
            MeasureTag::SquashedConvexity => "Esq_star",
        }
    }

    pub fn from_label(label: &str) -> Option<MeasureTag> {
        Self::ALL.into_iter().find(|t| t.label() == label)
    }
}

impl std::fmt::Display for MeasureTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}
