//! Generalized convolution, translation, modulation and dilation.
//!
//! Vertex and eigenpair indices are 0-based.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::Result;
use crate::kernel::{Scale, SpectralKernel};
use crate::spectral::{check_dim, check_index, gft, igft, Signal, SpectralBasis, SpectralCoefficients};

/// `f * g`, the inverse transform of `f̂ ĝ`.
pub fn convolve(basis: &SpectralBasis, f: &Signal, g: &Signal) -> Result<Signal> {
    let fh = gft(basis, f)?;
    let gh = gft(basis, g)?;
    let prod = fh.iter().zip(gh.iter()).map(|(a, b)| a * b).collect();
    igft(basis, &SpectralCoefficients::new(prod))
}

/// Spectral coefficients of `T_i f`: `√N f̂(λ_l) χ_l(i)`.
pub fn translate_coefficients(
    basis: &SpectralBasis,
    fhat: &SpectralCoefficients,
    i: usize,
) -> Result<SpectralCoefficients> {
    let n = basis.dim();
    check_dim(n, fhat.len())?;
    check_index(i, n)?;
    let root_n = (n as f64).sqrt();
    Ok(SpectralCoefficients::new((0..n).map(|l| fhat[l] * (root_n * basis.chi(l, i))).collect()))
}

/// Generalized translation `T_i f = √N (f * δ_i)`.
pub fn translate(basis: &SpectralBasis, f: &Signal, i: usize) -> Result<Signal> {
    check_index(i, basis.dim())?;
    let fhat = gft(basis, f)?;
    igft(basis, &translate_coefficients(basis, &fhat, i)?)
}

/// Generalized modulation `M_i f(n) = χ_i(n) f(n)`.
pub fn modulate(basis: &SpectralBasis, f: &Signal, i: usize) -> Result<Signal> {
    let n = basis.dim();
    check_dim(n, f.len())?;
    check_index(i, n)?;
    Ok(Signal::new((0..n).map(|v| f[v] * basis.chi(i, v)).collect()))
}

/// Spectral coefficients `ĝ(s λ_l)` of the dilated kernel.
pub fn dilate_coefficients(basis: &SpectralBasis, kernel: &SpectralKernel, s: Scale) -> SpectralCoefficients {
    SpectralCoefficients::new(basis.eigenvalues().iter().map(|&lambda| kernel.eval_real(s.value() * lambda)).collect())
}

/// The signal whose transform is `ĝ(s λ_l)`.
pub fn dilate_to_signal(basis: &SpectralBasis, kernel: &SpectralKernel, s: Scale) -> Signal {
    igft(basis, &dilate_coefficients(basis, kernel, s)).expect("coefficients sized from basis")
}

/// The matrix `χ diag(ĝ) χᵀ`, i.e. `ĝ(A)` for the given coefficients.
pub fn spectral_multiplier_matrix(basis: &SpectralBasis, ghat: &SpectralCoefficients) -> Result<DMatrix<Complex64>> {
    let n = basis.dim();
    check_dim(n, ghat.len())?;
    Ok(DMatrix::from_fn(n, n, |r, c| (0..n).map(|l| ghat[l] * (basis.chi(l, r) * basis.chi(l, c))).sum()))
}
