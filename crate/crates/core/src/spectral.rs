//! Eigendecomposition of a symmetric graph operator and the graph Fourier
//! transform pair.

use std::ops::{Add, Index, Mul, Range, Sub};

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{fmt17, GraphOperator, OperatorKind};

pub const DEFAULT_ORTHO_TOL: f64 = 1e-10;

macro_rules! complex_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq)]
        pub struct $name(DVector<Complex64>);

        impl $name {
            pub fn new(values: Vec<Complex64>) -> Self {
                $name(DVector::from_vec(values))
            }

            pub fn from_real(values: &[f64]) -> Self {
                $name(DVector::from_iterator(values.len(), values.iter().map(|&x| Complex64::new(x, 0.0))))
            }

            pub fn zeros(n: usize) -> Self {
                $name(DVector::zeros(n))
            }

            pub fn from_vector(values: DVector<Complex64>) -> Self {
                $name(values)
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn vector(&self) -> &DVector<Complex64> {
                &self.0
            }

            pub fn into_vector(self) -> DVector<Complex64> {
                self.0
            }

            pub fn as_slice(&self) -> &[Complex64] {
                self.0.as_slice()
            }

            pub fn iter(&self) -> impl Iterator<Item = &Complex64> {
                self.0.iter()
            }

            /// Euclidean norm.
            pub fn norm(&self) -> f64 {
                self.0.norm()
            }

            /// Largest entry magnitude.
            pub fn max_abs(&self) -> f64 {
                self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
            }

            /// Hermitian inner product, linear in `self`.
            pub fn inner(&self, other: &Self) -> Complex64 {
                self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b.conj()).sum()
            }

            pub fn scale(&self, alpha: Complex64) -> Self {
                $name(&self.0 * alpha)
            }
        }

        impl Index<usize> for $name {
            type Output = Complex64;
            fn index(&self, i: usize) -> &Complex64 {
                &self.0[i]
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                $name(&self.0 + &rhs.0)
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                $name(&self.0 - &rhs.0)
            }
        }

        impl Mul<Complex64> for &$name {
            type Output = $name;
            fn mul(self, rhs: Complex64) -> $name {
                self.scale(rhs)
            }
        }
    };
}

complex_vector!(
    /// A complex-valued function on the vertices.
    Signal
);

complex_vector!(
    /// Graph Fourier coefficients, one per eigenpair (not per distinct
    /// eigenvalue), so repeated eigenvalues carry independent entries.
    SpectralCoefficients
);

impl Signal {
    /// Kronecker delta at vertex `i`.
    pub fn delta(n: usize, i: usize) -> Result<Self> {
        check_index(i, n)?;
        let mut v = DVector::zeros(n);
        v[i] = Complex64::new(1.0, 0.0);
        Ok(Signal(v))
    }

    pub fn ones(n: usize) -> Self {
        Signal(DVector::from_element(n, Complex64::new(1.0, 0.0)))
    }
}

pub(crate) fn check_index(i: usize, n: usize) -> Result<()> {
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, min: 0, max: n.saturating_sub(1) });
    }
    Ok(())
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Eigenvalues in ascending order and an orthonormal matrix of eigenvectors
/// (column `l` belongs to eigenvalue `l`).
#[derive(Debug, Clone)]
pub struct SpectralBasis {
    operator: GraphOperator,
    eigenvalues: Vec<f64>,
    eigenvectors: DMatrix<f64>,
    ortho_tol: f64,
}

impl SpectralBasis {
    /// Assembles a basis from caller-supplied eigenpairs, sorting them and
    /// checking orthonormality and the eigen residual at `tol`.
    pub fn from_parts(
        operator: GraphOperator,
        eigenvalues: Vec<f64>,
        eigenvectors: DMatrix<f64>,
        tol: f64,
    ) -> Result<Self> {
        let n = operator.dim();
        check_dim(n, eigenvalues.len())?;
        check_dim(n, eigenvectors.nrows())?;
        check_dim(n, eigenvectors.ncols())?;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| eigenvalues[a].total_cmp(&eigenvalues[b]));
        let values = order.iter().map(|&k| eigenvalues[k]).collect();
        let vectors = DMatrix::from_fn(n, n, |r, c| eigenvectors[(r, order[c])]);
        let basis = SpectralBasis { operator, eigenvalues: values, eigenvectors: vectors, ortho_tol: tol };
        basis.validate()?;
        Ok(basis)
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn operator(&self) -> &GraphOperator {
        &self.operator
    }

    pub fn source_kind(&self) -> OperatorKind {
        self.operator.kind()
    }

    pub fn ortho_tol(&self) -> f64 {
        self.ortho_tol
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// The matrix whose `l`-th column is the `l`-th eigenvector.
    pub fn eigenvectors(&self) -> &DMatrix<f64> {
        &self.eigenvectors
    }

    /// Entry `n` of eigenvector `l`.
    #[inline]
    pub fn chi(&self, l: usize, n: usize) -> f64 {
        self.eigenvectors[(n, l)]
    }

    /// Eigenvector `l` as a signal.
    pub fn eigenvector_signal(&self, l: usize) -> Result<Signal> {
        check_index(l, self.dim())?;
        Ok(Signal::from_real(self.eigenvectors.column(l).as_slice()))
    }

    fn cluster_gap(&self) -> f64 {
        let scale = self.eigenvalues.iter().map(|x| x.abs()).fold(0.0, f64::max);
        self.ortho_tol * (1.0 + scale)
    }

    /// Index ranges of numerically repeated eigenvalues.
    pub fn clusters(&self) -> Vec<Range<usize>> {
        clusters_of(&self.eigenvalues, self.cluster_gap())
    }

    /// `max |(χᵀχ - I)_{ab}|`.
    pub fn orthonormality_residual(&self) -> f64 {
        let n = self.dim();
        let g = self.eigenvectors.transpose() * &self.eigenvectors;
        let mut worst: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((g[(a, b)] - target).abs());
            }
        }
        worst
    }

    /// `max_l ‖Aχ_l - λ_l χ_l‖∞ / (1 + |λ_l|)`.
    pub fn eigen_residual(&self) -> f64 {
        let av = self.operator.matrix() * &self.eigenvectors;
        let mut worst: f64 = 0.0;
        for (l, &lambda) in self.eigenvalues.iter().enumerate() {
            let r =
                (0..self.dim()).map(|n| (av[(n, l)] - lambda * self.eigenvectors[(n, l)]).abs()).fold(0.0, f64::max);
            worst = worst.max(r / (1.0 + lambda.abs()));
        }
        worst
    }

    fn validate(&self) -> Result<()> {
        if self.eigenvalues.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::ConvergenceFailure("eigenvalues not sorted".into()));
        }
        let ortho = self.orthonormality_residual();
        if ortho.is_nan() || ortho > self.ortho_tol {
            return Err(Error::ConvergenceFailure(format!(
                "orthonormality residual {ortho:e} exceeds {:e}",
                self.ortho_tol
            )));
        }
        let res = self.eigen_residual();
        if res.is_nan() || res > self.ortho_tol {
            return Err(Error::ConvergenceFailure(format!("eigen residual {res:e} exceeds {:e}", self.ortho_tol)));
        }
        Ok(())
    }

    /// Rotates eigenvectors `a` and `b` by `theta` in their common plane.
    /// Both must lie in the same repeated-eigenvalue cluster, so the result
    /// is another valid basis of the same operator.
    pub fn rotate_within_eigenspace(&self, a: usize, b: usize, theta: f64) -> Result<SpectralBasis> {
        check_index(a, self.dim())?;
        check_index(b, self.dim())?;
        let same = a != b && self.clusters().iter().any(|c| c.contains(&a) && c.contains(&b));
        if !same {
            return Err(Error::NotAnEigenspace { a, b });
        }
        let (c, s) = (theta.cos(), theta.sin());
        let mut v = self.eigenvectors.clone();
        for n in 0..self.dim() {
            let (x, y) = (v[(n, a)], v[(n, b)]);
            v[(n, a)] = c * x - s * y;
            v[(n, b)] = s * x + c * y;
        }
        Ok(SpectralBasis { eigenvectors: v, ..self.clone() })
    }

    /// Text block `lambda: …` followed by the rows of the eigenvector
    /// matrix, 17 significant digits.
    pub fn dump(&self) -> String {
        let lambdas: Vec<String> = self.eigenvalues.iter().map(|&x| fmt17(x)).collect();
        let mut out = format!("lambda: {}\n", lambdas.join(" "));
        for r in 0..self.dim() {
            let row: Vec<String> = (0..self.dim()).map(|c| fmt17(self.eigenvectors[(r, c)])).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

fn clusters_of(sorted: &[f64], gap: f64) -> Vec<Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for k in 1..=sorted.len() {
        if k == sorted.len() || sorted[k] - sorted[k - 1] > gap {
            out.push(start..k);
            start = k;
        }
    }
    out
}

/// Decomposes a symmetric operator into sorted eigenpairs. Eigenvectors of
/// repeated eigenvalues are re-orthonormalized within their cluster, and
/// every eigenvector has a positive leading entry.
pub fn decompose(op: &GraphOperator, tol: f64) -> Result<SpectralBasis> {
    let n = op.dim();
    let max_iter = 1000 * n.max(1);
    let eig = SymmetricEigen::try_new(op.matrix().clone(), f64::EPSILON, max_iter)
        .ok_or_else(|| Error::ConvergenceFailure(format!("no convergence after {max_iter} iterations")))?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut vectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);

    let scale = eigenvalues.iter().map(|x| x.abs()).fold(0.0, f64::max);
    for cluster in clusters_of(&eigenvalues, tol * (1.0 + scale)) {
        orthonormalize_columns(&mut vectors, cluster)?;
    }
    canonicalize_signs(&mut vectors);

    let basis = SpectralBasis { operator: op.clone(), eigenvalues, eigenvectors: vectors, ortho_tol: tol };
    basis.validate()?;
    Ok(basis)
}

/// Flips each column so that its first entry above `1e-8` in magnitude is
/// positive. Translation of a vertex-domain signal is odd in each
/// eigenvector, so this pins down results that would otherwise depend on
/// the solver's sign choice.
fn canonicalize_signs(v: &mut DMatrix<f64>) {
    for c in 0..v.ncols() {
        if let Some(&lead) = v.column(c).iter().find(|x| x.abs() > 1e-8) {
            if lead < 0.0 {
                v.column_mut(c).neg_mut();
            }
        }
    }
}

/// Two passes of modified Gram-Schmidt over a column range.
fn orthonormalize_columns(v: &mut DMatrix<f64>, cols: Range<usize>) -> Result<()> {
    for _ in 0..2 {
        for c in cols.clone() {
            for p in cols.start..c {
                let dot = v.column(c).dot(&v.column(p));
                let prev = v.column(p).clone_owned();
                v.column_mut(c).axpy(-dot, &prev, 1.0);
            }
            let norm = v.column(c).norm();
            if norm < 0.5 {
                return Err(Error::ConvergenceFailure(format!(
                    "eigenvector {c} lost rank during re-orthonormalization"
                )));
            }
            v.column_mut(c).unscale_mut(norm);
        }
    }
    Ok(())
}

/// `f̂(λ_l) = Σ_n f(n) χ_l(n)`.
pub fn gft(basis: &SpectralBasis, f: &Signal) -> Result<SpectralCoefficients> {
    let n = basis.dim();
    check_dim(n, f.len())?;
    let coeffs = (0..n).map(|l| (0..n).map(|v| f[v] * basis.chi(l, v)).sum()).collect();
    Ok(SpectralCoefficients::new(coeffs))
}

/// `f(n) = Σ_l f̂(λ_l) χ_l(n)`.
pub fn igft(basis: &SpectralBasis, c: &SpectralCoefficients) -> Result<Signal> {
    let n = basis.dim();
    check_dim(n, c.len())?;
    let values = (0..n).map(|v| (0..n).map(|l| c[l] * basis.chi(l, v)).sum()).collect();
    Ok(Signal::new(values))
}
