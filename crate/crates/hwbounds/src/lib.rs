//! # hwbounds
//!
//! Converse (upper) bounds on the two-way assisted quantum capacity Q₂ and
//! secret-key capacity K of Holevo-Werner channels, with propagation of those
//! bounds through repeater chains and quantum networks.
//!
//! A Werner state `W_{η,d}` is the two-qudit state fixed by every `U ⊗ U`
//! conjugation, parametrised by the flip-operator expectation `η = Tr(W 𝔽)`
//! and the local dimension `d`. The Holevo-Werner channel `𝒲_{η,d}` is the
//! channel whose Choi matrix is `W_{η,d}`; it is teleportation covariant, so
//! its two-way capacities are bounded by entanglement measures of the Choi
//! matrix alone. This crate computes the computable members of that family:
//!
//! - the one-copy relative entropy of entanglement `E_R` (equal to the
//!   one-copy RPPT `E_P` for Werner states),
//! - the two-copy REE `E_R²` (closed form and an independent numerical
//!   minimiser over the invariant two-copy family),
//! - the regularised RPPT `E_P^∞` (closed form),
//! - two squashed-entanglement upper bounds: `Ẽ_sq` (purification choice)
//!   and `E*_sq` (convex decomposition into extremal Werner states),
//!
//! selects the best available K- and Q₂-bound per channel, and extends the
//! bounds to repeater chains (bottleneck), single-path routing (widest path /
//! minimum cut-set maximum) and multi-path flooding routing (max-flow /
//! minimum cut-set sum).
//!
//! All logarithms are base 2; every bound is in bits per channel use.
//!
//! The crate is organised around runnable examples (`examples/`), one per
//! capability; a thin `hwbounds` binary exposes the same operations as CLI
//! subcommands (`bounds`, `sweep`, `chain`, `network`, `finite`, `selftest`).

pub mod capacity;
pub mod cli;
pub mod matrix;
pub mod measures;
pub mod network;
pub mod werner;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian (max asymmetry {asym:.3e})")]
    NotHermitian { asym: f64 },

    #[error("trace is {trace}, expected 1")]
    InvalidTrace { trace: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue below -{tol:.1e})")]
    NotPsd { tol: f64 },

    #[error("{name} = {value} outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("local dimension d = {d} must be at least 2")]
    BadDimension { d: usize },

    #[error("state dimension {dim} exceeds the dense-matrix guard {guard}")]
    SizeGuard { dim: usize, guard: usize },

    #[error("copy count n = {n} unsupported (expected {expected})")]
    UnsupportedCopies { n: usize, expected: &'static str },

    #[error("(eta, d) = ({eta}, {d}) outside the closed-form region (d >= 3 and eta <= -2/d)")]
    OutsideClosedFormRegion { eta: f64, d: usize },

    #[error("empty repeater chain")]
    EmptyChain,

    #[error("no sign change on (-1, 0): the {dominant} bounds dominate throughout")]
    NoCrossover { dominant: &'static str },

    #[error("denominator 1 - (epsilon/2) log2(d) = {value} is not positive")]
    NonPositiveDenominator { value: f64 },

    #[error("cut enumeration limited to {guard} non-terminal nodes, got {got}; use the flow-based bounds instead")]
    TooManyNodesForEnumeration { got: usize, guard: usize },

    #[error("invalid network: {0}")]
    Network(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
