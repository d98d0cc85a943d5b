//! Frame, basis and duality criteria for systems of generalized translates.
//!
//! Every checker decides its property twice: once from spectral
//! coefficients (`ĝ(λ_l)`) and once by an independent dense computation on
//! the vertex-domain vectors (Gram matrices, frame-operator eigenvalues,
//! singular values, reconstruction residuals). Both outcomes go into the
//! [`FrameReport`].

mod bases;
mod bounds;
mod duality;
mod translates;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectral::{check_dim, gft, igft, Signal, SpectralBasis, SpectralCoefficients};

pub use bases::{
    biorthogonality_check, linear_independence_check, onb_translates_check, orthonormal_subsystem_check,
    shift_invariance_residual,
};
pub use bounds::{modulation_frame_check, multi_generator_frame_bounds, wavelet_frame_check};
pub use duality::{
    canonical_dual_generator, canonical_dual_generators, canonical_dual_via_frame_operator, commutation_residual,
    dual_frames_check,
};
pub use translates::{frame_bounds_oracle, frame_operator_matrix, spectral_frame_operator_diagonal, translates_matrix};

/// Default absolute tolerance on spectral-domain identities.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Relative tolerance for criterion/oracle bound agreement.
pub const AGREEMENT_TOL: f64 = 1e-8;

/// Scale-aware zero test for a lower frame bound.
pub fn frame_threshold(upper: f64) -> f64 {
    1e-10 * (upper + 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrameBounds {
    #[serde(rename = "A")]
    pub lower: f64,
    #[serde(rename = "B")]
    pub upper: f64,
}

impl FrameBounds {
    pub fn new(lower: f64, upper: f64) -> Self {
        FrameBounds { lower, upper }
    }

    fn deviation(&self, oracle: &FrameBounds) -> f64 {
        (self.lower - oracle.lower).abs().max((self.upper - oracle.upper).abs())
    }

    /// Both bounds within `AGREEMENT_TOL * (1 + |oracle|)`.
    pub fn agrees_with(&self, oracle: &FrameBounds) -> bool {
        (self.lower - oracle.lower).abs() <= AGREEMENT_TOL * (1.0 + oracle.lower.abs())
            && (self.upper - oracle.upper).abs() <= AGREEMENT_TOL * (1.0 + oracle.upper.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Frame,
    NotFrame,
    Onb,
    NotOnb,
    Biorthogonal,
    NotBiorthogonal,
    Independent,
    Dependent,
    Orthonormal,
    NotOrthonormal,
    DualPair,
    NotDual,
}

impl Verdict {
    pub fn is_positive(self) -> bool {
        matches!(
            self,
            Verdict::Frame
                | Verdict::Onb
                | Verdict::Biorthogonal
                | Verdict::Independent
                | Verdict::Orthonormal
                | Verdict::DualPair
        )
    }

    fn pick(positive: bool, yes: Verdict, no: Verdict) -> Verdict {
        if positive {
            yes
        } else {
            no
        }
    }
}

/// Where the spectral coefficients of the generators came from. Kernel
/// generators carry equal coefficients on repeated eigenvalues; index-based
/// generators need not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientSource {
    Kernel,
    Index,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameReport {
    pub system: String,
    pub generator_source: CoefficientSource,
    /// Bounds from the spectral criterion, when the check has bounds.
    pub criterion_bounds: Option<FrameBounds>,
    /// Extreme eigenvalues of the assembled frame operator.
    pub oracle_bounds: Option<FrameBounds>,
    pub verdict: Verdict,
    /// Verdict reached by the second, independent route.
    pub crosscheck_verdict: Verdict,
    /// Eigenpair indices (0-based), e.g. the nonzero minor found for an
    /// independent system.
    pub witnesses: Option<Vec<usize>>,
    pub per_eigenvalue_energy: Vec<f64>,
    /// Primary residual of the check; see each checker.
    pub max_deviation: f64,
    /// Bounds agree (when present) and both verdicts coincide.
    pub agreement: bool,
    /// Named auxiliary quantities (ranks, formula residuals, ...).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metrics: BTreeMap<String, f64>,
}

impl FrameReport {
    #[allow(clippy::too_many_arguments)]
    fn assemble(
        system: String,
        generator_source: CoefficientSource,
        criterion_bounds: Option<FrameBounds>,
        oracle_bounds: Option<FrameBounds>,
        verdict: Verdict,
        crosscheck_verdict: Verdict,
        per_eigenvalue_energy: Vec<f64>,
        max_deviation: f64,
    ) -> Self {
        let bounds_ok = match (&criterion_bounds, &oracle_bounds) {
            (Some(c), Some(o)) => c.agrees_with(o),
            _ => true,
        };
        FrameReport {
            system,
            generator_source,
            criterion_bounds,
            oracle_bounds,
            verdict,
            crosscheck_verdict,
            witnesses: None,
            per_eigenvalue_energy,
            max_deviation,
            agreement: bounds_ok && verdict == crosscheck_verdict,
            metrics: BTreeMap::new(),
        }
    }

    fn metric(mut self, name: &str, value: f64) -> Self {
        self.metrics.insert(name.to_string(), value);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("system: {}\nverdict: {:?}\n", self.system, self.verdict);
        let fmt_bounds = |b: &Option<FrameBounds>| match b {
            Some(b) => format!("A = {:.12e}, B = {:.12e}", b.lower, b.upper),
            None => "n/a".to_string(),
        };
        out.push_str(&format!("criterion bounds: {}\n", fmt_bounds(&self.criterion_bounds)));
        out.push_str(&format!("oracle bounds:    {}\n", fmt_bounds(&self.oracle_bounds)));
        out.push_str(&format!("crosscheck verdict: {:?}\n", self.crosscheck_verdict));
        out.push_str(&format!("agreement: {} (max deviation {:.3e})\n", self.agreement, self.max_deviation));
        if let Some(w) = &self.witnesses {
            out.push_str(&format!("witnesses: {w:?}\n"));
        }
        let energy: Vec<String> = self.per_eigenvalue_energy.iter().map(|e| format!("{e:.12e}")).collect();
        out.push_str(&format!("per-eigenvalue energy: [{}]\n", energy.join(", ")));
        for (k, v) in &self.metrics {
            out.push_str(&format!("{k}: {v:.6e}\n"));
        }
        out
    }
}

/// Generators `g_1..g_M` of a translate system, all of length `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSet {
    generators: Vec<Signal>,
    source: CoefficientSource,
}

impl GeneratorSet {
    pub fn new(generators: Vec<Signal>) -> Result<Self> {
        Self::with_source(generators, CoefficientSource::Index)
    }

    pub fn with_source(generators: Vec<Signal>, source: CoefficientSource) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::EmptyGeneratorSet);
        };
        let n = first.len();
        for g in &generators {
            check_dim(n, g.len())?;
        }
        Ok(GeneratorSet { generators, source })
    }

    /// Builds generators from their spectral coefficients.
    pub fn from_coefficients(basis: &SpectralBasis, coeffs: &[SpectralCoefficients]) -> Result<Self> {
        let gens = coeffs.iter().map(|c| igft(basis, c)).collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }

    pub fn generators(&self) -> &[Signal] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn source(&self) -> CoefficientSource {
        self.source
    }

    fn coefficients(&self, basis: &SpectralBasis) -> Result<Vec<SpectralCoefficients>> {
        self.generators.iter().map(|g| gft(basis, g)).collect()
    }
}
