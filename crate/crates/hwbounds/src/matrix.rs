//! Dense complex Hermitian linear algebra and the entropic functionals built
//! on top of it: eigenvalues, von Neumann entropy, quantum relative entropy,
//! trace distance, Kronecker products and partial transposition.
//!
//! Everything here works on explicit dense matrices. Dimensions stay small in
//! this crate (at most `d^4` for two copies of a two-qudit state with
//! `d <= 8`), so `O(n^3)` eigendecompositions are perfectly adequate.
//!
//! All functions are pure; values are immutable after construction and safe
//! to share across threads.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::{Error, Result};

/// Asymmetry tolerance accepted by [`HermitianMatrix::new`].
pub const HERMITICITY_TOL: f64 = 1e-9;
/// Hermiticity and trace tolerance enforced by [`DensityMatrix::new`].
pub const DENSITY_TOL: f64 = 1e-12;
/// Most negative eigenvalue accepted as "positive semidefinite".
pub const PSD_TOL: f64 = 1e-10;
/// Eigenvalues below this are treated as zero inside entropy sums.
pub const ENTROPY_CLIP: f64 = 1e-12;
/// Eigenvalues of σ below this count as its kernel in the support test of
/// [`relative_entropy`].
pub const SUPPORT_TOL: f64 = 1e-10;
/// Weight of ρ allowed inside the kernel of σ before the relative entropy is
/// declared infinite.
pub const SUPPORT_WEIGHT_TOL: f64 = 1e-9;

/// A square complex matrix validated to be Hermitian (within
/// [`HERMITICITY_TOL`]).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    mat: DMatrix<Complex64>,
}

impl HermitianMatrix {
    /// Validates squareness and Hermiticity.
    pub fn new(mat: DMatrix<Complex64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(Error::NotSquare {
                rows: mat.nrows(),
                cols: mat.ncols(),
            });
        }
        let asym = max_asymmetry(&mat);
        if asym > HERMITICITY_TOL {
            return Err(Error::NotHermitian { asym });
        }
        Ok(Self { mat })
    }

    /// For operations that preserve Hermiticity structurally (partial
    /// transposition, flip operators, sums of Hermitian terms).
    pub(crate) fn new_unchecked(mat: DMatrix<Complex64>) -> Self {
        debug_assert!(max_asymmetry(&mat) <= HERMITICITY_TOL);
        Self { mat }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.mat
    }

    /// Real trace (the imaginary part of a Hermitian trace vanishes).
    pub fn trace(&self) -> f64 {
        self.mat.diagonal().iter().map(|z| z.re).sum()
    }

    /// Largest entrywise absolute difference to `other`.
    pub fn max_abs_diff(&self, other: &HermitianMatrix) -> f64 {
        max_abs_diff(&self.mat, &other.mat)
    }
}

/// A density matrix: Hermitian (within 1e-12), unit trace (within 1e-12) and
/// positive semidefinite (minimum eigenvalue >= -1e-10).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validating constructor.
    ///
    /// For real-valued matrices positivity is checked by a Cholesky
    /// factorisation of the shifted matrix `m + (PSD_TOL + 1e-12) I`, which
    /// accepts exactly the matrices whose minimum eigenvalue clears
    /// `-PSD_TOL` (up to factorisation round-off, far below the tolerance at
    /// these dimensions). Genuinely complex matrices fall back to an
    /// eigenvalue check: complex Cholesky cannot reject indefinite inputs.
    pub fn new(mat: DMatrix<Complex64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(Error::NotSquare {
                rows: mat.nrows(),
                cols: mat.ncols(),
            });
        }
        let asym = max_asymmetry(&mat);
        if asym > DENSITY_TOL {
            return Err(Error::NotHermitian { asym });
        }
        let trace: Complex64 = mat.diagonal().iter().sum();
        if (trace.re - 1.0).abs() > DENSITY_TOL || trace.im.abs() > DENSITY_TOL {
            return Err(Error::InvalidTrace { trace: trace.re });
        }
        let psd = if is_exactly_real(&mat) {
            let n = mat.nrows();
            let mut shifted = mat.map(|z| z.re);
            for i in 0..n {
                shifted[(i, i)] += PSD_TOL + 1e-12;
            }
            shifted.cholesky().is_some()
        } else {
            mat.clone()
                .symmetric_eigenvalues()
                .iter()
                .all(|&l| l >= -PSD_TOL)
        };
        if !psd {
            return Err(Error::NotPsd { tol: PSD_TOL });
        }
        Ok(Self { mat })
    }

    /// For constructions that are valid states by algebra (spectra known in
    /// closed form, convex mixtures of valid states, Kronecker products).
    pub(crate) fn new_unchecked(mat: DMatrix<Complex64>) -> Self {
        Self { mat }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    /// View as a plain Hermitian matrix (clones the storage).
    pub fn hermitian(&self) -> HermitianMatrix {
        HermitianMatrix::new_unchecked(self.mat.clone())
    }

    /// The maximally mixed state `I/d`.
    pub fn maximally_mixed(dim: usize) -> Self {
        let p = Complex64::new(1.0 / dim as f64, 0.0);
        Self::new_unchecked(DMatrix::from_diagonal_element(dim, dim, p))
    }

    /// `|ψ⟩⟨ψ|` for a (normalised on entry) state vector.
    pub fn from_pure_state(psi: &DVector<Complex64>) -> Self {
        let norm = psi.norm();
        let normalized = psi / Complex64::new(norm, 0.0);
        let mat = &normalized * normalized.adjoint();
        Self::new_unchecked(mat)
    }

    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        max_abs_diff(&self.mat, &other.mat)
    }
}

fn max_asymmetry(mat: &DMatrix<Complex64>) -> f64 {
    let n = mat.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let diff = mat[(i, j)] - mat[(j, i)].conj();
            worst = worst.max(diff.norm());
        }
    }
    worst
}

pub(crate) fn max_abs_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Kronecker product of two states; `dim = a.dim * b.dim`, trace preserved.
pub fn tensor(a: &DensityMatrix, b: &DensityMatrix) -> DensityMatrix {
    DensityMatrix::new_unchecked(a.matrix().kronecker(b.matrix()))
}

/// `n`-fold Kronecker power.
pub fn tensor_power(rho: &DensityMatrix, n: usize) -> DensityMatrix {
    assert!(n >= 1, "tensor power needs at least one factor");
    let mut out = rho.clone();
    for _ in 1..n {
        out = tensor(&out, rho);
    }
    out
}

/// Transposition of the second subsystem of a bipartite operator with local
/// dimensions `(d_a, d_b)`. Hermiticity and trace are preserved; applying it
/// twice returns the input exactly (entries only move, no arithmetic).
pub fn partial_transpose(m: &HermitianMatrix, dims: (usize, usize)) -> Result<HermitianMatrix> {
    let (da, db) = dims;
    partial_transpose_multi(m, &[da, db], &[false, true])
}

/// Partial transposition over an arbitrary subset of subsystems.
///
/// `dims` lists the local dimensions in tensor order; `transpose[k]` marks
/// subsystem `k` for transposition.
pub fn partial_transpose_multi(
    m: &HermitianMatrix,
    dims: &[usize],
    transpose: &[bool],
) -> Result<HermitianMatrix> {
    assert_eq!(dims.len(), transpose.len());
    let total: usize = dims.iter().product();
    if total != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            got: total,
        });
    }
    let k = dims.len();
    let src = m.matrix();
    let mut out = DMatrix::<Complex64>::zeros(total, total);
    let mut row_digits = vec![0usize; k];
    let mut col_digits = vec![0usize; k];
    for row in 0..total {
        decompose(row, dims, &mut row_digits);
        for col in 0..total {
            decompose(col, dims, &mut col_digits);
            let mut r = 0usize;
            let mut c = 0usize;
            for (i, &d) in dims.iter().enumerate() {
                let (ri, ci) = if transpose[i] {
                    (col_digits[i], row_digits[i])
                } else {
                    (row_digits[i], col_digits[i])
                };
                r = r * d + ri;
                c = c * d + ci;
            }
            out[(row, col)] = src[(r, c)];
        }
    }
    Ok(HermitianMatrix::new_unchecked(out))
}

fn decompose(mut index: usize, dims: &[usize], digits: &mut [usize]) {
    for i in (0..dims.len()).rev() {
        digits[i] = index % dims[i];
        index /= dims[i];
    }
}

fn is_exactly_real(mat: &DMatrix<Complex64>) -> bool {
    mat.iter().all(|z| z.im == 0.0)
}

/// Eigenvalues of a Hermitian matrix, sorted ascending.
///
/// Real-valued matrices take a real symmetric path, which is a few times
/// faster than the complex Hermitian solver at the dimensions used here.
pub fn eigvalsh(m: &HermitianMatrix) -> Vec<f64> {
    let mut vals: Vec<f64> = if is_exactly_real(m.matrix()) {
        let real = m.matrix().map(|z| z.re);
        real.symmetric_eigenvalues().iter().copied().collect()
    } else {
        m.matrix()
            .clone()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect()
    };
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}

/// Full eigendecomposition `(eigenvalues, eigenvectors)`; the k-th column of
/// the returned matrix is the eigenvector for the k-th eigenvalue.
///
/// Implemented by cyclic Jacobi rotations rather than the tridiagonal
/// QL solver: the states handled here have heavily clustered spectra, on
/// which Jacobi keeps both eigenvalues and eigenvectors at machine accuracy.
pub fn eigen_decompose(m: &HermitianMatrix) -> (Vec<f64>, DMatrix<Complex64>) {
    if is_exactly_real(m.matrix()) {
        let (vals, vecs) = jacobi_eigen_real(m.matrix().map(|z| z.re));
        (vals, vecs.map(|x| Complex64::new(x, 0.0)))
    } else {
        jacobi_eigen_complex(m.matrix().clone())
    }
}

/// Jacobi rotation angle zeroing the symmetric 2x2 block
/// `[[app, g], [g, aqq]]` (`g > 0`): returns `(c, s, t)`.
fn jacobi_angle(app: f64, aqq: f64, g: f64) -> (f64, f64, f64) {
    let tau = (aqq - app) / (2.0 * g);
    let t = if tau == 0.0 {
        1.0
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, t * c, t)
}

fn off_diagonal_norm_real(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    let mut sum = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            sum += a[(p, q)] * a[(p, q)];
        }
    }
    (2.0 * sum).sqrt()
}

fn jacobi_eigen_real(mut a: DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let n = a.nrows();
    let mut v = DMatrix::<f64>::identity(n, n);
    let scale = a.norm().max(f64::MIN_POSITIVE);
    for _sweep in 0..40 {
        if off_diagonal_norm_real(&a) <= 1e-15 * scale {
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= 1e-18 * scale {
                    continue;
                }
                let (c, s, t) = jacobi_angle(a[(p, p)], a[(q, q)], apq);
                a[(p, p)] -= t * apq;
                a[(q, q)] += t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    if k != p && k != q {
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        a[(k, p)] = c * akp - s * akq;
                        a[(k, q)] = s * akp + c * akq;
                        a[(p, k)] = a[(k, p)];
                        a[(q, k)] = a[(k, q)];
                    }
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let vals: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    (vals, v)
}

fn jacobi_eigen_complex(mut a: DMatrix<Complex64>) -> (Vec<f64>, DMatrix<Complex64>) {
    let n = a.nrows();
    let mut v = DMatrix::<Complex64>::identity(n, n);
    let scale = a.norm().max(f64::MIN_POSITIVE);
    for _sweep in 0..40 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        if (2.0 * off).sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let g = apq.norm();
                if g <= 1e-18 * scale {
                    continue;
                }
                // Phase-folded rotation: J[p][p] = c, J[p][q] = s·u,
                // J[q][p] = -s·conj(u), J[q][q] = c with u = apq/|apq|.
                let u = apq / g;
                let (c, s, t) = jacobi_angle(a[(p, p)].re, a[(q, q)].re, g);
                let su = Complex64::new(s, 0.0) * u;
                let su_conj = su.conj();
                a[(p, p)] = Complex64::new(a[(p, p)].re - t * g, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re + t * g, 0.0);
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    if k != p && k != q {
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        a[(k, p)] = akp * c - akq * su_conj;
                        a[(k, q)] = akp * su + akq * c;
                        a[(p, k)] = a[(k, p)].conj();
                        a[(q, k)] = a[(k, q)].conj();
                    }
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * su_conj;
                    v[(k, q)] = vkp * su + vkq * c;
                }
            }
        }
    }
    let vals: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    (vals, v)
}

/// `true` iff the minimum eigenvalue is at least `-tol`.
pub fn is_psd(m: &HermitianMatrix, tol: f64) -> bool {
    let vals = eigvalsh(m);
    vals.first().is_none_or(|&min| min >= -tol)
}

/// Von Neumann entropy `-Σ λ log2 λ` in bits, with `0 log 0 = 0`.
pub fn vn_entropy(rho: &DensityMatrix) -> f64 {
    eigvalsh(&rho.hermitian())
        .into_iter()
        .filter(|&l| l >= ENTROPY_CLIP)
        .map(|l| -l * l.log2())
        .sum()
}

/// Quantum relative entropy `S(ρ||σ) = Tr(ρ log2 ρ - ρ log2 σ)` in bits.
///
/// Returns `f64::INFINITY` when the support of ρ is not contained in the
/// support of σ: ρ is projected onto the kernel of σ (eigenvalues below
/// [`SUPPORT_TOL`]) and any projected weight above [`SUPPORT_WEIGHT_TOL`]
/// counts as divergence. Otherwise the result is finite, non-negative, and
/// zero iff the states coincide.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            got: sigma.dim(),
        });
    }
    let (sig_vals, sig_vecs) = eigen_decompose(&sigma.hermitian());

    // Diagonal of V† ρ V: the weight of ρ on each eigenvector of σ.
    let real_inputs = is_exactly_real(rho.matrix()) && sig_vecs.iter().all(|z| z.im == 0.0);
    let weights: Vec<f64> = if real_inputs {
        let rho_r = rho.matrix().map(|z| z.re);
        let vecs_r = sig_vecs.map(|z| z.re);
        let prod = &rho_r * &vecs_r;
        (0..rho.dim())
            .map(|k| vecs_r.column(k).dot(&prod.column(k)))
            .collect()
    } else {
        let prod = rho.matrix() * &sig_vecs;
        (0..rho.dim())
            .map(|k| sig_vecs.column(k).dotc(&prod.column(k)).re)
            .collect()
    };

    let kernel_weight: f64 = sig_vals
        .iter()
        .zip(&weights)
        .filter(|(l, _)| **l < SUPPORT_TOL)
        .map(|(_, w)| w.max(0.0))
        .sum();
    if kernel_weight > SUPPORT_WEIGHT_TOL {
        return Ok(f64::INFINITY);
    }

    let rho_term: f64 = eigvalsh(&rho.hermitian())
        .into_iter()
        .filter(|&l| l >= ENTROPY_CLIP)
        .map(|l| l * l.log2())
        .sum();
    let sigma_term: f64 = sig_vals
        .iter()
        .zip(&weights)
        .filter(|(l, _)| **l >= SUPPORT_TOL)
        .map(|(l, w)| w * l.log2())
        .sum();
    Ok((rho_term - sigma_term).max(0.0))
}

/// Trace distance `||a - b||_1 / 2`, in `[0, 1]`.
pub fn trace_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    let diff = HermitianMatrix::new_unchecked(a.matrix() - b.matrix());
    let sum: f64 = eigvalsh(&diff).into_iter().map(f64::abs).sum();
    Ok((sum / 2.0).clamp(0.0, 1.0))
}

/// Haar-distributed random unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases folded into Q.
pub fn haar_random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let qr = g.qr();
    let r_diag: Vec<Complex64> = (0..dim).map(|i| qr.r()[(i, i)]).collect();
    let mut q = qr.q();
    for (j, r) in r_diag.iter().enumerate() {
        let phase = if r.norm() > 0.0 {
            r / r.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Random full-rank mixed state `G G† / Tr(G G†)` with complex Gaussian `G`.
pub fn random_density_matrix<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    let g = DMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let mut m = &g * g.adjoint();
    let trace: f64 = m.diagonal().iter().map(|z| z.re).sum();
    m /= Complex64::new(trace, 0.0);
    // Symmetrise away round-off from the product.
    let herm = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
    DensityMatrix::new_unchecked(herm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::werner::{flip_operator, werner_state, WernerParams};
    use approx::assert_abs_diff_eq;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn diag(entries: &[f64]) -> DMatrix<Complex64> {
        DMatrix::from_diagonal(&DVector::from_iterator(
            entries.len(),
            entries.iter().map(|&x| Complex64::new(x, 0.0)),
        ))
    }

    #[test]
    fn density_matrix_rejects_bad_inputs() {
        assert!(matches!(
            DensityMatrix::new(diag(&[0.7, 0.7])),
            Err(Error::InvalidTrace { .. })
        ));
        assert!(matches!(
            DensityMatrix::new(diag(&[1.5, -0.5])),
            Err(Error::NotPsd { .. })
        ));
        let mut m = diag(&[0.5, 0.5]);
        m[(0, 1)] = Complex64::new(0.0, 0.3);
        m[(1, 0)] = Complex64::new(0.0, 0.3);
        assert!(matches!(
            DensityMatrix::new(m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn tensor_of_maximally_mixed_states() {
        let half = DensityMatrix::maximally_mixed(2);
        let quarter = tensor(&half, &half);
        assert_eq!(quarter.dim(), 4);
        assert_abs_diff_eq!(
            quarter.max_abs_diff(&DensityMatrix::maximally_mixed(4)),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn tensor_of_basis_states() {
        let p0 = DensityMatrix::new(diag(&[1.0, 0.0])).unwrap();
        let p1 = DensityMatrix::new(diag(&[0.0, 1.0])).unwrap();
        let prod = tensor(&p0, &p1);
        let expected = DensityMatrix::new(diag(&[0.0, 1.0, 0.0, 0.0])).unwrap();
        assert_abs_diff_eq!(prod.max_abs_diff(&expected), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn tensor_square_of_werner_state() {
        let w = werner_state(&WernerParams::new(-1.0, 3).unwrap());
        let ww = tensor(&w, &w);
        assert_eq!(ww.dim(), 81);
        let trace: f64 = ww.matrix().diagonal().iter().map(|z| z.re).sum();
        assert_abs_diff_eq!(trace, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn partial_transpose_of_product_state_is_psd() {
        let p = DensityMatrix::new(diag(&[0.25, 0.25, 0.25, 0.25])).unwrap();
        let pt = partial_transpose(&p.hermitian(), (2, 2)).unwrap();
        assert!(is_psd(&pt, PSD_TOL));
    }

    #[test]
    fn partial_transpose_of_boundary_werner_state_is_psd() {
        for d in [2usize, 3, 4, 5] {
            let w = werner_state(&WernerParams::new(0.0, d).unwrap());
            let pt = partial_transpose(&w.hermitian(), (d, d)).unwrap();
            assert!(is_psd(&pt, PSD_TOL), "W(0,{d}) should be PPT");
        }
    }

    #[test]
    fn partial_transpose_of_extremal_werner_state_has_negative_eigenvalue() {
        let w = werner_state(&WernerParams::new(-1.0, 3).unwrap());
        let pt = partial_transpose(&w.hermitian(), (3, 3)).unwrap();
        let vals = eigvalsh(&pt);
        // PT(W_{η,d}) has the eigenvalue η/d on the maximally entangled vector.
        assert_abs_diff_eq!(vals[0], -1.0 / 3.0, epsilon = 1e-12);
        assert!(!is_psd(&pt, PSD_TOL));
    }

    #[test]
    fn partial_transpose_eta_positive_is_psd() {
        let w = werner_state(&WernerParams::new(0.1, 5).unwrap());
        let pt = partial_transpose(&w.hermitian(), (5, 5)).unwrap();
        assert!(is_psd(&pt, PSD_TOL));
    }

    #[test]
    fn partial_transpose_dimension_mismatch() {
        let w = werner_state(&WernerParams::new(-1.0, 2).unwrap());
        assert!(matches!(
            partial_transpose(&w.hermitian(), (3, 2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn partial_transpose_is_an_involution() {
        let mut rng = StdRng::seed_from_u64(7);
        let rho = random_density_matrix(6, &mut rng);
        let pt = partial_transpose(&rho.hermitian(), (2, 3)).unwrap();
        let back = partial_transpose(&pt, (2, 3)).unwrap();
        // Exact: entries only move.
        assert_eq!(back.matrix(), rho.matrix());
    }

    #[test]
    fn eigvalsh_identity() {
        let id = HermitianMatrix::new(diag(&[1.0, 1.0])).unwrap();
        assert_eq!(eigvalsh(&id), vec![1.0, 1.0]);
    }

    #[test]
    fn eigvalsh_flip_operator_d2() {
        let f = flip_operator(2);
        let vals = eigvalsh(&f);
        let expected = [-1.0, 1.0, 1.0, 1.0];
        for (v, e) in vals.iter().zip(expected.iter()) {
            assert_abs_diff_eq!(v, e, epsilon = 1e-12);
        }
    }

    #[test]
    fn eigvalsh_matches_werner_spectrum() {
        use crate::werner::werner_spectrum;
        for &(eta, d) in &[(-1.0, 3usize), (-0.37, 5), (0.6, 2), (1.0, 4)] {
            let p = WernerParams::new(eta, d).unwrap();
            let vals = eigvalsh(&werner_state(&p).hermitian());
            let spec = werner_spectrum(&p);
            let mut expected: Vec<f64> = std::iter::repeat_n(spec.gamma_minus, spec.n_minus)
                .chain(std::iter::repeat_n(spec.gamma_plus, spec.n_plus))
                .collect();
            expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (v, e) in vals.iter().zip(expected.iter()) {
                assert_abs_diff_eq!(v, e, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn eigen_decomposition_reconstructs_the_input() {
        let mut rng = StdRng::seed_from_u64(11);
        let rho = random_density_matrix(9, &mut rng);
        let (vals, vecs) = eigen_decompose(&rho.hermitian());
        let lambda = DMatrix::from_diagonal(&DVector::from_iterator(
            vals.len(),
            vals.iter().map(|&v| Complex64::new(v, 0.0)),
        ));
        let rebuilt = &vecs * lambda * vecs.adjoint();
        assert!(max_abs_diff(&rebuilt, rho.matrix()) <= 1e-10);
    }

    #[test]
    fn hermitian_matrix_rejects_asymmetry() {
        let mut m = diag(&[1.0, 2.0]);
        m[(0, 1)] = Complex64::new(1e-6, 0.0);
        assert!(matches!(
            HermitianMatrix::new(m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn vn_entropy_of_pure_state() {
        let psi = DVector::from_vec(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)]);
        let rho = DensityMatrix::from_pure_state(&psi);
        assert_abs_diff_eq!(vn_entropy(&rho), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn vn_entropy_of_maximally_mixed_two_qudit_state() {
        for d in [2usize, 3, 4] {
            let rho = DensityMatrix::maximally_mixed(d * d);
            assert_abs_diff_eq!(vn_entropy(&rho), 2.0 * (d as f64).log2(), epsilon = 1e-10);
        }
    }

    #[test]
    fn vn_entropy_of_extremal_werner_state() {
        // W_{-1,4} is uniform over the 6-dimensional antisymmetric subspace.
        let w = werner_state(&WernerParams::new(-1.0, 4).unwrap());
        assert_abs_diff_eq!(vn_entropy(&w), 6.0f64.log2(), epsilon = 1e-10);
    }

    #[test]
    fn relative_entropy_of_identical_states_is_zero() {
        let w = werner_state(&WernerParams::new(-0.4, 3).unwrap());
        assert_abs_diff_eq!(relative_entropy(&w, &w).unwrap(), 0.0, epsilon = 1e-10);
    }

    #[test]
    fn relative_entropy_pure_versus_mixed() {
        let rho = DensityMatrix::new(diag(&[1.0, 0.0])).unwrap();
        let sigma = DensityMatrix::maximally_mixed(2);
        assert_abs_diff_eq!(
            relative_entropy(&rho, &sigma).unwrap(),
            1.0,
            epsilon = 1e-10
        );
    }

    #[test]
    fn relative_entropy_divergence_on_disjoint_support() {
        let rho = DensityMatrix::new(diag(&[1.0, 0.0])).unwrap();
        let sigma = DensityMatrix::new(diag(&[0.0, 1.0])).unwrap();
        assert!(relative_entropy(&rho, &sigma).unwrap().is_infinite());
    }

    #[test]
    fn relative_entropy_of_extremal_to_boundary_werner_state() {
        // The closest separable state to W_{-1,d} is W_{0,d}; the distance is 1 bit.
        let rho = werner_state(&WernerParams::new(-1.0, 3).unwrap());
        let sigma = werner_state(&WernerParams::new(0.0, 3).unwrap());
        assert_abs_diff_eq!(
            relative_entropy(&rho, &sigma).unwrap(),
            1.0,
            epsilon = 1e-10
        );
    }

    #[test]
    fn relative_entropy_dimension_mismatch() {
        let a = DensityMatrix::maximally_mixed(2);
        let b = DensityMatrix::maximally_mixed(3);
        assert!(matches!(
            relative_entropy(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn klein_inequality_on_random_werner_pairs() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..40 {
            let d = rng.gen_range(2..=4);
            let eta1 = rng.gen_range(-1.0..=1.0);
            let eta2 = rng.gen_range(-1.0..=1.0);
            let rho = werner_state(&WernerParams::new(eta1, d).unwrap());
            let sigma = werner_state(&WernerParams::new(eta2, d).unwrap());
            let s = relative_entropy(&rho, &sigma).unwrap();
            assert!(
                s >= 0.0,
                "S(ρ||σ) = {s} negative for η=({eta1},{eta2}), d={d}"
            );
        }
    }

    #[test]
    fn entropy_is_additive_under_tensor_products() {
        let mut rng = StdRng::seed_from_u64(3);
        let a = random_density_matrix(3, &mut rng);
        let b = random_density_matrix(4, &mut rng);
        let sum = vn_entropy(&a) + vn_entropy(&b);
        assert_abs_diff_eq!(vn_entropy(&tensor(&a, &b)), sum, epsilon = 1e-9);
    }

    #[test]
    fn trace_distance_basics() {
        let rho = DensityMatrix::new(diag(&[1.0, 0.0])).unwrap();
        let sigma = DensityMatrix::new(diag(&[0.0, 1.0])).unwrap();
        assert_abs_diff_eq!(trace_distance(&rho, &rho).unwrap(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(trace_distance(&rho, &sigma).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn trace_distance_of_orthogonal_werner_states() {
        // d = 2: antisymmetric vs symmetric subspaces are orthogonal.
        let a = werner_state(&WernerParams::new(-1.0, 2).unwrap());
        let b = werner_state(&WernerParams::new(1.0, 2).unwrap());
        assert_abs_diff_eq!(trace_distance(&a, &b).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn is_psd_on_identity() {
        let id = HermitianMatrix::new(diag(&[1.0, 1.0, 1.0])).unwrap();
        assert!(is_psd(&id, 1e-10));
    }

    #[test]
    fn haar_unitary_is_unitary_and_seeded() {
        let mut rng = StdRng::seed_from_u64(5);
        let u = haar_random_unitary(4, &mut rng);
        let id = DMatrix::<Complex64>::identity(4, 4);
        assert!(max_abs_diff(&(&u * u.adjoint()), &id) < 1e-12);

        let mut rng2 = StdRng::seed_from_u64(5);
        let u2 = haar_random_unitary(4, &mut rng2);
        assert_eq!(u, u2);
    }
}
