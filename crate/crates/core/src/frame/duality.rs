use nalgebra::DMatrix;
use num_complex::Complex64;

use super::translates::{all_translates, frame_bounds_oracle, frame_operator_matrix};
use super::{frame_threshold, FrameBounds, FrameReport, GeneratorSet, Verdict};
use crate::error::{Error, Result};
use crate::linalg::operator_norm;
use crate::spectral::{gft, igft, Signal, SpectralBasis, SpectralCoefficients};
use crate::vertex::translate;

/// Duality of `{T_i g_s}` and `{T_i h_s}`.
///
/// Criterion: `|Σ_s conj(ĝ_s(λ_l)) ĥ_s(λ_l) - 1/N| ≤ tol` for every `l`.
/// Crosscheck: the reconstruction operator
/// `R = Σ_{i,s} (T_i h_s)(T_i g_s)*` is applied to every standard basis
/// vector; the system is dual when `‖R - I‖₂ ≤ N·tol`. `max_deviation` is
/// the worst reconstruction residual `‖R e_k - e_k‖`. The bounds are those
/// of the analysis system `{T_i g_s}`.
pub fn dual_frames_check(
    basis: &SpectralBasis,
    gens: &GeneratorSet,
    duals: &GeneratorSet,
    tol: f64,
) -> Result<FrameReport> {
    if gens.len() != duals.len() {
        return Err(Error::GeneratorCountMismatch { left: gens.len(), right: duals.len() });
    }
    let n = basis.dim();
    let nf = n as f64;
    let ghats = gens.coefficients(basis)?;
    let hhats = duals.coefficients(basis)?;

    let pairing: Vec<Complex64> =
        (0..n).map(|l| ghats.iter().zip(&hhats).map(|(g, h)| g[l].conj() * h[l]).sum()).collect();
    let criterion_dev = pairing.iter().map(|p| (p - 1.0 / nf).norm()).fold(0.0, f64::max);

    let analysis = all_translates(basis, gens)?;
    let synthesis = all_translates(basis, duals)?;
    let mut recon = DMatrix::<Complex64>::zeros(n, n);
    for (a, s) in analysis.iter().zip(&synthesis) {
        for r in 0..n {
            for c in 0..n {
                recon[(r, c)] += s[r] * a[c].conj();
            }
        }
    }
    let residual = &recon - DMatrix::<Complex64>::identity(n, n);
    let worst_column = (0..n).map(|k| residual.column(k).norm()).fold(0.0, f64::max);
    let oracle_norm = operator_norm(&residual);

    let energy: Vec<f64> = (0..n).map(|l| ghats.iter().map(|g| g[l].norm_sqr()).sum()).collect();
    let lo = energy.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = energy.iter().copied().fold(0.0, f64::max);

    let report = FrameReport::assemble(
        format!("duality of {{T_i g_s}} and {{T_i h_s}}, M = {}, N = {n}", gens.len()),
        gens.source(),
        Some(FrameBounds::new(nf * lo, nf * hi)),
        Some(frame_bounds_oracle(&analysis)?),
        Verdict::pick(criterion_dev <= tol, Verdict::DualPair, Verdict::NotDual),
        Verdict::pick(oracle_norm <= nf * tol, Verdict::DualPair, Verdict::NotDual),
        energy,
        worst_column,
    );
    Ok(report.metric("criterion_deviation", criterion_dev).metric("reconstruction_operator_deviation", oracle_norm))
}

/// Generator of the canonical dual `{T_i S⁻¹ g}`:
/// `ĥ(λ_l) = ĝ(λ_l) / (N |ĝ(λ_l)|²) = 1 / (N conj(ĝ(λ_l)))`.
pub fn canonical_dual_generator(basis: &SpectralBasis, g: &Signal, tol: f64) -> Result<Signal> {
    let nf = basis.dim() as f64;
    let ghat = gft(basis, g)?;
    if let Some((index, c)) = ghat.iter().enumerate().find(|(_, c)| c.norm() <= tol) {
        return Err(Error::SingularFrameOperator { index, magnitude: c.norm() });
    }
    let hhat = ghat.iter().map(|c| c / (nf * c.norm_sqr())).collect();
    igft(basis, &SpectralCoefficients::new(hhat))
}

/// Generators of the canonical dual of `{T_i g_s}`:
/// `ĥ_s(λ_l) = ĝ_s(λ_l) / (N Σ_r |ĝ_r(λ_l)|²)`. Reduces to
/// [`canonical_dual_generator`] for a single generator.
pub fn canonical_dual_generators(basis: &SpectralBasis, gens: &GeneratorSet, tol: f64) -> Result<GeneratorSet> {
    let nf = basis.dim() as f64;
    let ghats = gens.coefficients(basis)?;
    let energy: Vec<f64> = (0..basis.dim()).map(|l| ghats.iter().map(|g| g[l].norm_sqr()).sum()).collect();
    if let Some((index, e)) = energy.iter().enumerate().find(|(_, e)| e.sqrt() <= tol) {
        return Err(Error::SingularFrameOperator { index, magnitude: e.sqrt() });
    }
    let duals = ghats
        .iter()
        .map(|g| {
            let h = g.iter().zip(&energy).map(|(c, e)| c / (nf * e)).collect();
            igft(basis, &SpectralCoefficients::new(h))
        })
        .collect::<Result<Vec<_>>>()?;
    GeneratorSet::with_source(duals, gens.source())
}

/// `S⁻¹ g` computed by assembling the frame operator of `{T_i g}` and
/// solving densely. Independent of the closed form above.
pub fn canonical_dual_via_frame_operator(basis: &SpectralBasis, g: &Signal) -> Result<Signal> {
    let gens = GeneratorSet::new(vec![g.clone()])?;
    let s = frame_operator_matrix(basis, &gens)?;
    let oracle = frame_bounds_oracle(&all_translates(basis, &gens)?)?;
    if oracle.lower <= frame_threshold(oracle.upper) {
        return Err(Error::SingularFrameOperator { index: 0, magnitude: oracle.lower });
    }
    let x = s.lu().solve(g.vector()).ok_or(Error::SingularFrameOperator { index: 0, magnitude: 0.0 })?;
    Ok(Signal::from_vector(x))
}

/// `max_i ‖S T_i f - T_i S f‖∞` for the frame operator of `gens`.
pub fn commutation_residual(basis: &SpectralBasis, gens: &GeneratorSet, f: &Signal) -> Result<f64> {
    let s = frame_operator_matrix(basis, gens)?;
    let sf = Signal::from_vector(&s * f.vector());
    let mut worst: f64 = 0.0;
    for i in 0..basis.dim() {
        let ti_f = translate(basis, f, i)?;
        let left = Signal::from_vector(&s * ti_f.vector());
        let right = translate(basis, &sf, i)?;
        worst = worst.max((&left - &right).max_abs());
    }
    Ok(worst)
}
