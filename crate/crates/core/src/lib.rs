//! Graph Fourier analysis on undirected weighted graphs, and frame/basis
//! criteria for systems of generalized translates.
//!
//! * [`graph`]: edge lists, Laplacian and adjacency operators
//! * [`spectral`]: eigendecomposition and the graph Fourier transform pair
//! * [`kernel`], [`vertex`]: polynomial spectral kernels, convolution,
//!   translation, modulation and dilation
//! * [`frame`]: orthonormal-basis, biorthogonality, independence, frame,
//!   wavelet, modulation and duality checks, each certified by a dense
//!   linear-algebra oracle
//! * [`star`]: the K(1,3) wavelet example end to end
//!
//! Vertex and eigenpair indices are 0-based throughout the library.
//!
//! ```
//! use gsp_frames::kernel::scale_set;
//! use gsp_frames::{decompose, laplacian, wavelet_frame_check, Graph, SpectralKernel, Verdict, DEFAULT_ORTHO_TOL};
//!
//! # fn main() -> gsp_frames::Result<()> {
//! let basis = decompose(&laplacian(&Graph::star(4)?), DEFAULT_ORTHO_TOL)?;
//! let kernel: SpectralKernel = "lagrange: 0 1; 1 1; 4 0".parse()?;
//! let report = wavelet_frame_check(&basis, &kernel, &scale_set(&[0.5])?)?;
//! assert_eq!(report.verdict, Verdict::Frame);
//! assert!(report.agreement);
//! # Ok(())
//! # }
//! ```

pub mod error;
pub mod frame;
pub mod graph;
pub mod kernel;
pub mod linalg;
pub mod spectral;
pub mod star;
pub mod vertex;

pub use error::{Error, Result};
pub use frame::{
    biorthogonality_check, canonical_dual_generator, canonical_dual_generators, canonical_dual_via_frame_operator,
    commutation_residual, dual_frames_check, frame_bounds_oracle, frame_operator_matrix, linear_independence_check,
    modulation_frame_check, multi_generator_frame_bounds, onb_translates_check, orthonormal_subsystem_check,
    shift_invariance_residual, translates_matrix, wavelet_frame_check, CoefficientSource, FrameBounds, FrameReport,
    GeneratorSet, Verdict, DEFAULT_TOL,
};
pub use graph::{
    adjacency, connectivity_check, laplacian, parse_edge_list, Connectivity, Graph, GraphOperator, OperatorKind,
};
pub use kernel::{Scale, SpectralKernel};
pub use spectral::{decompose, gft, igft, Signal, SpectralBasis, SpectralCoefficients, DEFAULT_ORTHO_TOL};
pub use vertex::{convolve, dilate_to_signal, modulate, translate};

pub use num_complex::Complex64;
