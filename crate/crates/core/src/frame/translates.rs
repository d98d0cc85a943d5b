use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{FrameBounds, GeneratorSet};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, outer_product_sum};
use crate::spectral::{check_dim, gft, Signal, SpectralBasis};
use crate::vertex::translate;

/// `N × m` matrix whose column `i` is `T_i g`, for `i < m`.
pub fn translates_matrix(basis: &SpectralBasis, g: &Signal, m: usize) -> Result<DMatrix<Complex64>> {
    let n = basis.dim();
    if m == 0 || m > n {
        return Err(Error::IndexOutOfRange { index: m, min: 1, max: n });
    }
    check_dim(n, g.len())?;
    let mut out = DMatrix::zeros(n, m);
    for i in 0..m {
        let t = translate(basis, g, i)?;
        out.column_mut(i).copy_from_slice(t.as_slice());
    }
    Ok(out)
}

/// All `N·M` translates `T_i g_s`, generator-major.
pub(crate) fn all_translates(basis: &SpectralBasis, gens: &GeneratorSet) -> Result<Vec<Signal>> {
    let n = basis.dim();
    let mut out = Vec::with_capacity(n * gens.len());
    for g in gens.generators() {
        for i in 0..n {
            out.push(translate(basis, g, i)?);
        }
    }
    Ok(out)
}

/// Optimal frame bounds of an arbitrary finite system: the extreme
/// eigenvalues of `S = Σ_k v_k v_k*`. A tiny negative round-off in the
/// lower bound is clamped to zero.
pub fn frame_bounds_oracle(vectors: &[Signal]) -> Result<FrameBounds> {
    let Some(first) = vectors.first() else {
        return Err(Error::EmptySystem);
    };
    let n = first.len();
    for v in vectors {
        check_dim(n, v.len())?;
    }
    let s = outer_product_sum(n, vectors.iter().map(|v| v.as_slice()));
    let eig = hermitian_eigenvalues(&s)?;
    let lower = eig.first().copied().unwrap_or(0.0).max(0.0);
    let upper = eig.last().copied().unwrap_or(0.0).max(lower);
    Ok(FrameBounds::new(lower, upper))
}

/// Frame operator `S = Σ_{i,s} (T_i g_s)(T_i g_s)*`, assembled densely.
pub fn frame_operator_matrix(basis: &SpectralBasis, gens: &GeneratorSet) -> Result<DMatrix<Complex64>> {
    let vectors = all_translates(basis, gens)?;
    Ok(outer_product_sum(basis.dim(), vectors.iter().map(|v| v.as_slice())))
}

/// Diagonal of `χᵀ S χ`, i.e. `N Σ_s |ĝ_s(λ_l)|²`.
pub fn spectral_frame_operator_diagonal(basis: &SpectralBasis, gens: &GeneratorSet) -> Result<Vec<f64>> {
    let n = basis.dim();
    let mut diag = vec![0.0; n];
    for g in gens.generators() {
        let ghat = gft(basis, g)?;
        for (d, c) in diag.iter_mut().zip(ghat.iter()) {
            *d += n as f64 * c.norm_sqr();
        }
    }
    Ok(diag)
}
