//! Dense linear algebra used by the verification oracles.
//!
//! Hermitian eigenvalues come from a cyclic Jacobi solver on the real
//! symmetric embedding `[[X, -Y], [Y, X]]` of `H = X + iY`, so the oracles
//! never share an eigensolver with the spectral engine.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix, ascending. Only the upper
/// triangle is read.
pub fn jacobi_eigenvalues(matrix: &DMatrix<f64>) -> Result<Vec<f64>> {
    let n = matrix.nrows();
    if n != matrix.ncols() {
        return Err(Error::DimensionMismatch { expected: n, found: matrix.ncols() });
    }
    let mut a = DMatrix::from_fn(n, n, |r, c| if r <= c { matrix[(r, c)] } else { matrix[(c, r)] });
    let frob = a.norm();
    if frob == 0.0 {
        return Ok(vec![0.0; n]);
    }

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)] * a[(p, q)])
            .sum::<f64>()
            .sqrt();
        if off <= f64::EPSILON * frob {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[(r, p)];
                    let arq = a[(r, q)];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[(r, p)] = new_rp;
                    a[(p, r)] = new_rp;
                    a[(r, q)] = new_rq;
                    a[(q, r)] = new_rq;
                }
                a[(p, p)] -= t * apq;
                a[(q, q)] += t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
            }
        }
    }
    if !converged {
        return Err(Error::ConvergenceFailure(format!("Jacobi did not converge in {MAX_SWEEPS} sweeps")));
    }
    let mut eig: Vec<f64> = (0..n).map(|k| a[(k, k)]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// Eigenvalues of a Hermitian matrix, ascending. The matrix is
/// Hermitized from its upper triangle.
pub fn hermitian_eigenvalues(h: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    let n = h.nrows();
    if n != h.ncols() {
        return Err(Error::DimensionMismatch { expected: n, found: h.ncols() });
    }
    let entry = |r: usize, c: usize| if r <= c { h[(r, c)] } else { h[(c, r)].conj() };
    let embed = DMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let z = entry(r % n, c % n);
        match (r < n, c < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    // every eigenvalue of H appears twice in the embedding
    let doubled = jacobi_eigenvalues(&embed)?;
    Ok(doubled.chunks(2).map(|pair| 0.5 * (pair[0] + pair[1])).collect())
}

/// Singular values, descending.
pub fn singular_values(m: &DMatrix<Complex64>) -> Vec<f64> {
    if m.is_empty() {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Spectral norm.
pub fn operator_norm(m: &DMatrix<Complex64>) -> f64 {
    singular_values(m).first().copied().unwrap_or(0.0)
}

/// Number of singular values above `rel_tol * σ_max`.
pub fn numerical_rank(m: &DMatrix<Complex64>, rel_tol: f64) -> usize {
    let s = singular_values(m);
    let Some(&top) = s.first() else { return 0 };
    if top == 0.0 {
        return 0;
    }
    s.iter().filter(|&&x| x > rel_tol * top).count()
}

/// Largest entry magnitude of `m - I`.
pub fn max_identity_deviation(m: &DMatrix<Complex64>) -> f64 {
    let mut worst: f64 = 0.0;
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            let target = if r == c { 1.0 } else { 0.0 };
            worst = worst.max((m[(r, c)] - Complex64::new(target, 0.0)).norm());
        }
    }
    worst
}

/// `Σ_k v_k v_k*` for equal-length columns.
pub fn outer_product_sum<'a>(n: usize, vectors: impl IntoIterator<Item = &'a [Complex64]>) -> DMatrix<Complex64> {
    let mut s = DMatrix::zeros(n, n);
    for v in vectors {
        for r in 0..n {
            if v[r] == Complex64::new(0.0, 0.0) {
                continue;
            }
            for c in 0..n {
                s[(r, c)] += v[r] * v[c].conj();
            }
        }
    }
    s
}
