#![allow(dead_code)]

use std::f64::consts::TAU;

use gsp_frames::graph::operator;
use gsp_frames::{
    decompose, Complex64, Graph, OperatorKind, Signal, SpectralBasis, SpectralCoefficients, DEFAULT_ORTHO_TOL,
};
use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random spanning tree plus extra edges with probability 0.3, weights in
/// `[0.1, 2)`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v, rng.gen_range(0.1..2.0)));
    }
    for i in 0..n {
        for j in i + 1..n {
            let in_tree = edges.iter().any(|&(a, b, _)| (a, b) == (i, j));
            if !in_tree && rng.gen_bool(0.3) {
                edges.push((i, j, rng.gen_range(0.1..2.0)));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_basis(rng: &mut ChaCha8Rng, n_min: usize, n_max: usize) -> SpectralBasis {
    let n = rng.gen_range(n_min..=n_max);
    let g = random_connected_graph(rng, n);
    let kind = if rng.gen_bool(0.75) { OperatorKind::Laplacian } else { OperatorKind::Adjacency };
    decompose(&operator(&g, kind), DEFAULT_ORTHO_TOL).unwrap()
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_signal(rng: &mut ChaCha8Rng, n: usize) -> Signal {
    Signal::new((0..n).map(|_| random_complex(rng)).collect())
}

pub fn phase(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(1.0, rng.gen_range(0.0..TAU))
}

/// Coefficients with magnitudes drawn from `[lo, hi)` and random phases.
pub fn random_coefficients(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> SpectralCoefficients {
    SpectralCoefficients::new((0..n).map(|_| phase(rng) * rng.gen_range(lo..hi)).collect())
}

pub fn to_complex(m: &DMatrix<f64>) -> DMatrix<Complex64> {
    m.map(|x| Complex64::new(x, 0.0))
}

/// `χ diag(c) χᵀ` built straight from the eigenvector matrix.
pub fn multiplier(basis: &SpectralBasis, c: &SpectralCoefficients) -> DMatrix<Complex64> {
    let chi = to_complex(basis.eigenvectors());
    let d = DMatrix::from_diagonal(c.vector());
    &chi * d * chi.transpose()
}

/// Extreme eigenvalues of a Hermitian matrix via nalgebra's complex
/// symmetric eigensolver.
pub fn hermitian_extremes(s: &DMatrix<Complex64>) -> (f64, f64) {
    let eig = s.clone().symmetric_eigenvalues();
    let lo = eig.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = eig.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (lo, hi)
}

pub fn rel_close(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}
