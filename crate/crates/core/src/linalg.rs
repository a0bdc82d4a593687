//! Dense complex matrix kernels: Hermitian eigendecomposition, matrix
//! functions on the spectrum, trace norm, and Kronecker products.
//!
//! Everything operates on value-semantic `Array2<c64>` in row-major layout;
//! all functions are pure and safe to call concurrently.

use ndarray::{Array1, Array2, ArrayView1};
use ndarray_linalg::{c64, Eigh, Eigvalsh, SVD, UPLO};

use crate::error::{Error, Result};

/// Dense complex matrix, row-major.
pub type CMatrix = Array2<c64>;

/// Relative Hermiticity tolerance accepted by [`eig_hermitian`].
pub const HERMITICITY_TOL: f64 = 1e-9;

/// Eigenvalue clamp for [`matrix_sqrt`]: values in [-PSD_CLAMP, 0) are
/// rounded-off zeros, anything below is a genuine negative eigenvalue.
pub const PSD_CLAMP: f64 = 1e-10;

/// Relative support cutoff used by [`pinv_sqrt`] when none is given.
pub const SUPPORT_RTOL: f64 = 1e-10;

fn require_square(m: &CMatrix) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(m.nrows())
}

/// Frobenius norm.
pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Frobenius distance between two matrices of equal shape.
pub fn frobenius_distance(a: &CMatrix, b: &CMatrix) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Complex trace.
pub fn trace(m: &CMatrix) -> c64 {
    m.diag().sum()
}

/// Conjugate transpose.
pub fn adjoint(m: &CMatrix) -> CMatrix {
    m.t().mapv(|z| z.conj())
}

/// (M + M†)/2. The output is exactly Hermitian.
pub fn hermitize(m: &CMatrix) -> Result<CMatrix> {
    let n = require_square(m)?;
    let mut out = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
        }
    }
    Ok(out)
}

/// How far M is from its own adjoint, in Frobenius norm.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let n = m.nrows().min(m.ncols());
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            let diff = m[(i, j)] - m[(j, i)].conj();
            sum += diff.norm_sqr();
        }
    }
    // (M - M†) double-counts each off-diagonal pair; keep the exact norm.
    (sum).sqrt()
}

/// Spectral decomposition of a Hermitian matrix.
///
/// Eigenvalues are sorted descending; eigenvector columns follow the same
/// order, so `V diag(λ) V†` reconstructs the input.
#[derive(Debug, Clone)]
pub struct HermitianEig {
    pub eigenvalues: Array1<f64>,
    pub eigenvectors: CMatrix,
}

impl HermitianEig {
    /// V diag(f(λ)) V†.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let n = self.eigenvalues.len();
        let mut scaled = self.eigenvectors.clone();
        for (j, &lam) in self.eigenvalues.iter().enumerate() {
            let flam = f(lam);
            for i in 0..n {
                scaled[(i, j)] *= flam;
            }
        }
        let vdag = adjoint(&self.eigenvectors);
        scaled.dot(&vdag)
    }

    /// V diag(λ) V†.
    pub fn reconstruct(&self) -> CMatrix {
        self.map_eigenvalues(|x| x)
    }
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
///
/// The input must be Hermitian within [`HERMITICITY_TOL`] (relative to its
/// Frobenius norm); callers with asymmetric round-off hermitize first.
pub fn eig_hermitian(h: &CMatrix) -> Result<HermitianEig> {
    require_square(h)?;
    let defect = hermiticity_defect(h);
    let scale = frobenius(h).max(1.0);
    if defect > HERMITICITY_TOL * scale {
        return Err(Error::NotHermitian {
            deviation: defect,
            tol: HERMITICITY_TOL * scale,
        });
    }
    let hh = hermitize(h)?;
    let (vals, vecs) = hh.eigh(UPLO::Lower)?;
    // LAPACK returns ascending order.
    let n = vals.len();
    let eigenvalues = Array1::from_iter(vals.iter().rev().copied());
    let mut eigenvectors = Array2::zeros((n, n));
    for j in 0..n {
        for i in 0..n {
            eigenvectors[(i, j)] = vecs[(i, n - 1 - j)];
        }
    }
    Ok(HermitianEig {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigenvalues only (descending) of a Hermitian matrix.
pub fn eigvals_hermitian(h: &CMatrix) -> Result<Array1<f64>> {
    require_square(h)?;
    let defect = hermiticity_defect(h);
    let scale = frobenius(h).max(1.0);
    if defect > HERMITICITY_TOL * scale {
        return Err(Error::NotHermitian {
            deviation: defect,
            tol: HERMITICITY_TOL * scale,
        });
    }
    let hh = hermitize(h)?;
    let vals = hh.eigvalsh(UPLO::Lower)?;
    Ok(Array1::from_iter(vals.iter().rev().copied()))
}

/// Principal square root of a Hermitian PSD matrix.
///
/// Eigenvalues in [-1e-10, 0) are clamped to zero; anything more negative is
/// rejected as non-PSD.
pub fn matrix_sqrt(h: &CMatrix) -> Result<CMatrix> {
    let eig = eig_hermitian(h)?;
    let min_eig = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    if min_eig < -PSD_CLAMP {
        return Err(Error::NotPositiveSemidefinite { min_eig });
    }
    Ok(eig.map_eigenvalues(|lam| if lam > 0.0 { lam.sqrt() } else { 0.0 }))
}

/// Pseudo-inverse square root of a Hermitian PSD matrix on its support.
///
/// Eigenvalues above `support_tol` map to λ^{-1/2}, the rest to zero. When
/// `support_tol` is `None` the cutoff is 1e-10 times the largest eigenvalue,
/// so weakly populated levels stay inside the support.
pub fn pinv_sqrt(h: &CMatrix, support_tol: Option<f64>) -> Result<CMatrix> {
    let eig = eig_hermitian(h)?;
    let min_eig = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    if min_eig < -PSD_CLAMP {
        return Err(Error::NotPositiveSemidefinite { min_eig });
    }
    let lam_max = eig.eigenvalues.iter().copied().fold(0.0, f64::max);
    let cutoff = support_tol.unwrap_or(SUPPORT_RTOL * lam_max);
    if lam_max <= cutoff.max(0.0) {
        return Err(Error::EmptySupport);
    }
    Ok(eig.map_eigenvalues(|lam| if lam > cutoff { 1.0 / lam.sqrt() } else { 0.0 }))
}

/// Trace norm ‖M‖₁ = Tr √(MM†), the sum of singular values.
///
/// Hermitian inputs take the cheaper eigenvalue route (Σ|λ|); anything else
/// goes through the SVD.
pub fn trace_norm(m: &CMatrix) -> Result<f64> {
    require_square(m)?;
    let scale = frobenius(m).max(1.0);
    if hermiticity_defect(m) <= HERMITICITY_TOL * scale {
        let vals = eigvals_hermitian(m)?;
        return Ok(vals.iter().map(|l| l.abs()).sum());
    }
    let (_, singular, _) = m.svd(false, false)?;
    Ok(singular.sum())
}

/// Kronecker product with block layout A_ij · B.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ar, ac) = (a.nrows(), a.ncols());
    let (br, bc) = (b.nrows(), b.ncols());
    let mut out = Array2::zeros((ar * br, ac * bc));
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[(i, j)];
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Row-major vectorization |M⟩⟩: row i of M occupies entries i·d .. (i+1)·d.
pub fn vectorize(m: &CMatrix) -> Array1<c64> {
    Array1::from_iter(m.iter().copied())
}

/// Inverse of [`vectorize`] for a d×d matrix.
pub fn unvectorize(v: ArrayView1<c64>, d: usize) -> CMatrix {
    debug_assert_eq!(v.len(), d * d);
    Array2::from_shape_fn((d, d), |(i, j)| v[i * d + j])
}
