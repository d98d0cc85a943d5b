use super::translates::{all_translates, frame_bounds_oracle};
use super::{frame_threshold, CoefficientSource, FrameBounds, FrameReport, GeneratorSet, Verdict};
use crate::error::{Error, Result};
use crate::kernel::{Scale, SpectralKernel};
use crate::spectral::{check_dim, gft, Signal, SpectralBasis};
use crate::vertex::{dilate_to_signal, modulate};

/// Compares `(N·min_l E_l, N·max_l E_l)` against the frame-operator
/// eigenvalues of all translates of `gens`. `max_deviation` is the larger
/// of the two bound discrepancies.
fn translate_frame_report(
    basis: &SpectralBasis,
    gens: &GeneratorSet,
    energy: Vec<f64>,
    system: String,
) -> Result<FrameReport> {
    let nf = basis.dim() as f64;
    let lo = energy.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = energy.iter().copied().fold(0.0, f64::max);
    let criterion = FrameBounds::new(nf * lo, nf * hi);
    let oracle = frame_bounds_oracle(&all_translates(basis, gens)?)?;
    let threshold = frame_threshold(oracle.upper);
    let deviation = criterion.deviation(&oracle);
    Ok(FrameReport::assemble(
        system,
        gens.source(),
        Some(criterion),
        Some(oracle),
        Verdict::pick(criterion.lower > threshold, Verdict::Frame, Verdict::NotFrame),
        Verdict::pick(oracle.lower > threshold, Verdict::Frame, Verdict::NotFrame),
        energy,
        deviation,
    ))
}

/// Frame test for `{T_i g_s : i < N, s < M}` with optimal bounds
/// `N·min_l Σ_s |ĝ_s(λ_l)|²` and `N·max_l Σ_s |ĝ_s(λ_l)|²`.
pub fn multi_generator_frame_bounds(basis: &SpectralBasis, gens: &GeneratorSet) -> Result<FrameReport> {
    let n = basis.dim();
    let mut energy = vec![0.0; n];
    for g in gens.generators() {
        check_dim(n, g.len())?;
        for (e, c) in energy.iter_mut().zip(gft(basis, g)?.iter()) {
            *e += c.norm_sqr();
        }
    }
    let system = format!("translates of {} generator(s), N = {n}", gens.len());
    translate_frame_report(basis, gens, energy, system)
}

/// Spectral graph wavelet system `{T_i D_s g : i < N, s ∈ scales}`; the
/// per-eigenvalue energy is `Σ_s |ĝ(s λ_l)|²` evaluated from the kernel.
pub fn wavelet_frame_check(basis: &SpectralBasis, kernel: &SpectralKernel, scales: &[Scale]) -> Result<FrameReport> {
    if scales.is_empty() {
        return Err(Error::EmptyScaleSet);
    }
    let energy: Vec<f64> = basis
        .eigenvalues()
        .iter()
        .map(|&lambda| scales.iter().map(|s| kernel.eval_real(s.value() * lambda).norm_sqr()).sum())
        .collect();
    let gens = GeneratorSet::with_source(
        scales.iter().map(|&s| dilate_to_signal(basis, kernel, s)).collect(),
        CoefficientSource::Kernel,
    )?;
    let listed: Vec<String> = scales.iter().map(|s| format!("{}", s.value())).collect();
    let system = format!("spectral graph wavelets, scales {{{}}}, N = {}", listed.join(", "), basis.dim());
    translate_frame_report(basis, &gens, energy, system)
}

/// Frame test for `{T_i M_s g : i, s < N}` with energy
/// `Σ_n |χ_l(n)|² |g(n)|²`. The metric `modulated_energy_deviation`
/// compares that closed form with `Σ_s |(M_s g)^(λ_l)|²`.
pub fn modulation_frame_check(basis: &SpectralBasis, g: &Signal) -> Result<FrameReport> {
    let n = basis.dim();
    check_dim(n, g.len())?;
    let energy: Vec<f64> = (0..n).map(|l| (0..n).map(|v| basis.chi(l, v).powi(2) * g[v].norm_sqr()).sum()).collect();
    let modulated = (0..n).map(|s| modulate(basis, g, s)).collect::<Result<Vec<_>>>()?;
    let gens = GeneratorSet::new(modulated)?;

    let mut direct = vec![0.0; n];
    for m in gens.generators() {
        for (d, c) in direct.iter_mut().zip(gft(basis, m)?.iter()) {
            *d += c.norm_sqr();
        }
    }
    let closed_form_dev = energy.iter().zip(&direct).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);

    let report = translate_frame_report(basis, &gens, energy, format!("modulated translates {{T_i M_s g}}, N = {n}"))?;
    Ok(report.metric("modulated_energy_deviation", closed_form_dev))
}
