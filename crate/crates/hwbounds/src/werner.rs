//! Werner states and Holevo-Werner channels.
//!
//! The canonical parametrisation here is the expectation value
//! `η = Tr(W 𝔽) ∈ [-1, 1]` of the flip operator together with the local
//! dimension `d >= 2`:
//!
//! ```text
//! W_{η,d} = [(d - η) 𝕀 + (dη - 1) 𝔽] / (d³ - d)
//! ```
//!
//! `W_{η,d}` is separable iff `η >= 0`. Three other parametrisations are in
//! common use (α-form, mixing weight p, deviation t from the maximally mixed
//! state); conversions between all four are derived by equating the state
//! matrices and are exact rational maps.
//!
//! The Holevo-Werner channel `𝒲_{η,d}` acts as
//! `ρ ↦ [(d - η) 𝕀 + (dη - 1) ρ^T] / (d² - 1)`; its Choi matrix is `W_{η,d}`
//! and it is teleportation covariant: `𝒲(U ρ U†) = U* 𝒲(ρ) U^T` for every
//! unitary `U`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::matrix::{
    haar_random_unitary, max_abs_diff, random_density_matrix, DensityMatrix, HermitianMatrix,
};
use crate::{Error, Result};

/// Expectation-representation parameters `(η, d)` of a Werner state / HW channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerParams {
    eta: f64,
    d: usize,
}

impl WernerParams {
    pub fn new(eta: f64, d: usize) -> Result<Self> {
        if !(-1.0..=1.0).contains(&eta) || eta.is_nan() {
            return Err(Error::OutOfRange {
                name: "eta",
                value: eta,
                lo: -1.0,
                hi: 1.0,
            });
        }
        if d < 2 {
            return Err(Error::BadDimension { d });
        }
        Ok(Self { eta, d })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Werner states are separable exactly when `η >= 0`.
    pub fn is_separable(&self) -> bool {
        self.eta >= 0.0
    }
}

/// The four parametrisations of the Werner family.
///
/// | kind        | state                                          | separable extreme | boundary | entangled extreme |
/// |-------------|------------------------------------------------|-------------------|----------|-------------------|
/// | Alpha       | `(𝕀 - α𝔽) / (d² - dα)`                         | `-1`              | `1/d`    | `1`               |
/// | Weighting   | `(1-p) W_{1,d} + p W_{-1,d}`                   | `0`               | `1/2`    | `1`               |
/// | Expectation | `[(d-η)𝕀 + (dη-1)𝔽] / (d³-d)`                  | `1`               | `0`      | `-1`              |
/// | Anti        | `t (𝕀 - d𝔽) / (d²(d-1)) + 𝕀/d²`                | `-(d-1)/(d+1)`    | `1/(d+1)`| `1`               |
///
/// The anti-form extreme `-(d-1)/(d+1)` is forced by positivity and by
/// matching state matrices against `η = 1`; the often-quoted `-1/(d-1)`
/// coincides with it only at `d = 3` and is not a valid state for `d = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReprKind {
    Alpha,
    Weighting,
    Expectation,
    Anti,
}

impl ReprKind {
    /// Valid closed parameter interval for this representation at dimension `d`.
    pub fn range(&self, d: usize) -> (f64, f64) {
        match self {
            ReprKind::Alpha => (-1.0, 1.0),
            ReprKind::Weighting => (0.0, 1.0),
            ReprKind::Expectation => (-1.0, 1.0),
            ReprKind::Anti => (-((d as f64) - 1.0) / ((d as f64) + 1.0), 1.0),
        }
    }

    fn name(&self) -> &'static str {
        match self {
            ReprKind::Alpha => "alpha",
            ReprKind::Weighting => "p",
            ReprKind::Expectation => "eta",
            ReprKind::Anti => "t",
        }
    }
}

/// A Werner-state parameter value in one of the four representations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerRepresentation {
    pub kind: ReprKind,
    pub value: f64,
}

impl WernerRepresentation {
    pub fn new(kind: ReprKind, value: f64) -> Self {
        Self { kind, value }
    }
}

/// The flip (swap) operator `𝔽 = Σ |ij⟩⟨ji|` on two qudits: `𝔽² = 𝕀`,
/// `Tr 𝔽 = d`, eigenvalues `+1` on the symmetric and `-1` on the
/// antisymmetric subspace.
pub fn flip_operator(d: usize) -> HermitianMatrix {
    let dim = d * d;
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    for i in 0..d {
        for j in 0..d {
            m[(i * d + j, j * d + i)] = Complex64::new(1.0, 0.0);
        }
    }
    HermitianMatrix::new_unchecked(m)
}

/// The Werner state `W_{η,d} = [(d-η)𝕀 + (dη-1)𝔽] / (d³-d)`.
pub fn werner_state(p: &WernerParams) -> DensityMatrix {
    let d = p.d as f64;
    let dim = p.d * p.d;
    let norm = d * d * d - d;
    let a = (d - p.eta) / norm;
    let b = (d * p.eta - 1.0) / norm;
    let mut m = flip_operator(p.d).into_matrix() * Complex64::new(b, 0.0);
    for i in 0..dim {
        m[(i, i)] += Complex64::new(a, 0.0);
    }
    DensityMatrix::new_unchecked(m)
}

/// Spectrum of `W_{η,d}`: `n± = d(d±1)/2` eigenvectors with eigenvalue
/// `γ± = (1±η) / (d(d±1))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerSpectrum {
    pub gamma_plus: f64,
    pub n_plus: usize,
    pub gamma_minus: f64,
    pub n_minus: usize,
}

pub fn werner_spectrum(p: &WernerParams) -> WernerSpectrum {
    let d = p.d as f64;
    WernerSpectrum {
        gamma_plus: (1.0 + p.eta) / (d * (d + 1.0)),
        n_plus: p.d * (p.d + 1) / 2,
        gamma_minus: (1.0 - p.eta) / (d * (d - 1.0)),
        n_minus: p.d * (p.d - 1) / 2,
    }
}

fn eta_from(repr: WernerRepresentation, d: usize) -> Result<f64> {
    let (lo, hi) = repr.kind.range(d);
    // Allow round-off dust at the interval ends.
    if !(lo - 1e-12..=hi + 1e-12).contains(&repr.value) || repr.value.is_nan() {
        return Err(Error::OutOfRange {
            name: repr.kind.name(),
            value: repr.value,
            lo,
            hi,
        });
    }
    let v = repr.value.clamp(lo, hi);
    let d = d as f64;
    Ok(match repr.kind {
        ReprKind::Expectation => v,
        ReprKind::Alpha => (1.0 - v * d) / (d - v),
        ReprKind::Weighting => 1.0 - 2.0 * v,
        ReprKind::Anti => (1.0 - v * (d + 1.0)) / d,
    })
}

fn eta_to(kind: ReprKind, eta: f64, d: usize) -> f64 {
    let d = d as f64;
    match kind {
        ReprKind::Expectation => eta,
        ReprKind::Alpha => (1.0 - eta * d) / (d - eta),
        ReprKind::Weighting => (1.0 - eta) / 2.0,
        ReprKind::Anti => (1.0 - eta * d) / (d + 1.0),
    }
}

/// Converts a Werner parametrisation into another one describing the same
/// state. Round trips are exact to floating-point accuracy; boundaries map to
/// boundaries and extremes to extremes.
pub fn convert_representation(
    from: WernerRepresentation,
    to: ReprKind,
    d: usize,
) -> Result<WernerRepresentation> {
    if d < 2 {
        return Err(Error::BadDimension { d });
    }
    let eta = eta_from(from, d)?;
    Ok(WernerRepresentation::new(to, eta_to(to, eta, d)))
}

/// Explicit state matrix for any of the four representations; used to verify
/// conversions by matrix equality.
pub fn representation_state(repr: WernerRepresentation, d: usize) -> Result<DensityMatrix> {
    let dim = d * d;
    let df = d as f64;
    let (lo, hi) = repr.kind.range(d);
    if !(lo - 1e-12..=hi + 1e-12).contains(&repr.value) {
        return Err(Error::OutOfRange {
            name: repr.kind.name(),
            value: repr.value,
            lo,
            hi,
        });
    }
    let v = repr.value.clamp(lo, hi);
    // Every representation is of the form a·𝕀 + b·𝔽.
    let (a, b) = match repr.kind {
        ReprKind::Alpha => {
            let norm = df * df - df * v;
            (1.0 / norm, -v / norm)
        }
        ReprKind::Weighting => {
            let sym = df * df + df;
            let asym = df * df - df;
            ((1.0 - v) / sym + v / asym, (1.0 - v) / sym - v / asym)
        }
        ReprKind::Expectation => {
            let norm = df * df * df - df;
            ((df - v) / norm, (df * v - 1.0) / norm)
        }
        ReprKind::Anti => {
            let norm = df * df * (df - 1.0);
            (v / norm + 1.0 / (df * df), -v * df / norm)
        }
    };
    let mut m = flip_operator(d).into_matrix() * Complex64::new(b, 0.0);
    for i in 0..dim {
        m[(i, i)] += Complex64::new(a, 0.0);
    }
    DensityMatrix::new(m)
}

/// Holevo-Werner channel action `𝒲_{η,d}(ρ) = [(d-η)𝕀 + (dη-1)ρ^T] / (d²-1)`.
pub fn hw_apply(p: &WernerParams, rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.dim() != p.d {
        return Err(Error::DimensionMismatch {
            expected: p.d,
            got: rho.dim(),
        });
    }
    Ok(DensityMatrix::new_unchecked(hw_apply_linear(
        p,
        rho.matrix(),
    )))
}

/// Linear extension `X ↦ [(d-η) Tr(X) 𝕀 + (dη-1) X^T] / (d²-1)`, needed to
/// act on the blocks of a bipartite operator.
fn hw_apply_linear(p: &WernerParams, x: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let d = p.d as f64;
    let norm = d * d - 1.0;
    let trace: Complex64 = x.diagonal().iter().sum();
    let mut out = x.transpose() * Complex64::new((d * p.eta - 1.0) / norm, 0.0);
    let diag_term = trace * Complex64::new((d - p.eta) / norm, 0.0);
    for i in 0..p.d {
        out[(i, i)] += diag_term;
    }
    out
}

/// Choi matrix `(𝐈 ⊗ 𝒲)(|Φ⟩⟨Φ|)` with `|Φ⟩ = d^{-1/2} Σ |ii⟩`; equals
/// `werner_state(p)` up to round-off.
pub fn hw_choi(p: &WernerParams) -> DensityMatrix {
    let d = p.d;
    let dim = d * d;
    let mut out = DMatrix::<Complex64>::zeros(dim, dim);
    let weight = Complex64::new(1.0 / d as f64, 0.0);
    for i in 0..d {
        for j in 0..d {
            // Block (i, j) of |Φ⟩⟨Φ| is |i⟩⟨j| / d on the second factor.
            let mut block = DMatrix::<Complex64>::zeros(d, d);
            block[(i, j)] = weight;
            let mapped = hw_apply_linear(p, &block);
            for r in 0..d {
                for c in 0..d {
                    out[(i * d + r, j * d + c)] = mapped[(r, c)];
                }
            }
        }
    }
    DensityMatrix::new_unchecked(out)
}

/// Maximum deviation `‖𝒲(UρU†) - U* 𝒲(ρ) U^T‖_max` over `trials` seeded
/// Haar-random unitaries and random mixed inputs. Zero (to round-off) for
/// every Holevo-Werner channel.
pub fn check_teleportation_covariance(p: &WernerParams, trials: usize, seed: u64) -> f64 {
    covariance_deviation(p, p, trials, seed)
}

/// Same probe with independently chosen channels on the two sides; a
/// mismatch (`lhs != rhs`) serves as a negative control.
pub fn covariance_deviation(
    lhs: &WernerParams,
    rhs: &WernerParams,
    trials: usize,
    seed: u64,
) -> f64 {
    assert!(trials >= 1, "at least one trial required");
    assert_eq!(lhs.d(), rhs.d(), "channels must share a dimension");
    let mut rng = StdRng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let u = haar_random_unitary(lhs.d(), &mut rng);
        let rho = random_density_matrix(lhs.d(), &mut rng);
        let rotated = &u * rho.matrix() * u.adjoint();
        let left = hw_apply_linear(lhs, &rotated);
        let u_conj = u.map(|z| z.conj());
        let right = &u_conj * hw_apply_linear(rhs, rho.matrix()) * u.transpose();
        worst = worst.max(max_abs_diff(&left, &right));
    }
    worst
}

/// Bloch-sphere action of the qubit (`d = 2`) channel: the sphere is shrunk
/// by `|(2η-1)/3|`; a positive `(2η-1)/3` additionally reflects in the x-z
/// plane, a negative one rotates by π around the y axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitShrink {
    pub factor: f64,
    pub reflected: bool,
}

pub fn qubit_shrink_factor(eta: f64) -> QubitShrink {
    let s = (2.0 * eta - 1.0) / 3.0;
    QubitShrink {
        factor: s.abs(),
        reflected: s > 0.0,
    }
}
