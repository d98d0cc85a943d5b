//! Deterministic fixtures shared by the benchmarks.

use gsp_frames::{decompose, laplacian, Complex64, Graph, Signal, SpectralBasis, SpectralKernel, DEFAULT_ORTHO_TOL};

/// Cycle on `n` vertices with chords `i ~ i + 3` and weights cycling
/// through `1, 1.5, 2`.
pub fn ring_with_chords(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        let w = 1.0 + 0.5 * (i % 3) as f64;
        edges.push((i, (i + 1) % n, w));
        if n > 6 {
            edges.push((i, (i + 3) % n, 0.5));
        }
    }
    edges.retain(|&(i, j, _)| i != j);
    edges.sort_by_key(|&(i, j, _)| (i.min(j), i.max(j)));
    edges.dedup_by_key(|&mut (i, j, _)| (i.min(j), i.max(j)));
    Graph::new(n, edges).expect("fixture graph is valid")
}

pub fn basis(n: usize) -> SpectralBasis {
    decompose(&laplacian(&ring_with_chords(n)), DEFAULT_ORTHO_TOL).expect("fixture decomposes")
}

/// Heat-like kernel `1 - x/4 + x²/32`.
pub fn kernel() -> SpectralKernel {
    SpectralKernel::from_real(&[1.0, -0.25, 1.0 / 32.0]).expect("nonempty kernel")
}

pub fn signal(n: usize) -> Signal {
    Signal::new((0..n).map(|k| Complex64::new((k as f64 * 0.7).sin(), (k as f64 * 0.3).cos())).collect())
}
