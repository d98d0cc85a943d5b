use nalgebra::DMatrix;
use num_complex::Complex64;

use super::translates::translates_matrix;
use super::{CoefficientSource, FrameBounds, FrameReport, Verdict};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, max_identity_deviation, numerical_rank, operator_norm, singular_values};
use crate::spectral::{check_dim, check_index, gft, Signal, SpectralBasis};
use crate::vertex::translate;

fn criterion_bounds_single(n: usize, energy: &[f64]) -> FrameBounds {
    let nf = n as f64;
    let lo = energy.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = energy.iter().copied().fold(0.0, f64::max);
    FrameBounds::new(nf * lo, nf * hi)
}

/// Gram matrix `G_ij = ⟨T_j, T_i⟩` of the columns of `t`.
fn gram(t: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    t.adjoint() * t
}

/// True when every eigenvalue `μ` of a Gram matrix has `|√μ - 1| ≤ slack`.
fn gram_is_identity(g: &DMatrix<Complex64>, slack: f64) -> Result<bool> {
    let eig = hermitian_eigenvalues(g)?;
    Ok(eig.iter().all(|&mu| (mu.max(0.0).sqrt() - 1.0).abs() <= slack))
}

/// Orthonormal-basis test for `{T_i g : i < N}`.
///
/// Criterion: `| |ĝ(λ_l)| - 1/√N | ≤ tol` for every `l`. Crosscheck: the
/// Gram matrix of the translates has all eigenvalues `μ` with
/// `|√μ - 1| ≤ √N·tol` (the same tolerance expressed on the Gram side).
/// `max_deviation` is the largest entry of `Gram - I`.
pub fn onb_translates_check(basis: &SpectralBasis, g: &Signal, tol: f64) -> Result<FrameReport> {
    let n = basis.dim();
    let ghat = gft(basis, g)?;
    let target = 1.0 / (n as f64).sqrt();
    let criterion_dev = ghat.iter().map(|c| (c.norm() - target).abs()).fold(0.0, f64::max);
    let energy: Vec<f64> = ghat.iter().map(|c| c.norm_sqr()).collect();

    let t = translates_matrix(basis, g, n)?;
    let gm = gram(&t);
    let gram_dev = max_identity_deviation(&gm);
    let oracle_onb = gram_is_identity(&gm, (n as f64).sqrt() * tol)?;
    let oracle_bounds = super::translates::frame_bounds_oracle(&columns(&t))?;

    let report = FrameReport::assemble(
        "orthonormal basis test for {T_i g : 1 <= i <= N}".into(),
        CoefficientSource::Index,
        Some(criterion_bounds_single(n, &energy)),
        Some(oracle_bounds),
        Verdict::pick(criterion_dev <= tol, Verdict::Onb, Verdict::NotOnb),
        Verdict::pick(oracle_onb, Verdict::Onb, Verdict::NotOnb),
        energy,
        gram_dev,
    );
    Ok(report.metric("criterion_deviation", criterion_dev))
}

pub(crate) fn columns(t: &DMatrix<Complex64>) -> Vec<Signal> {
    (0..t.ncols()).map(|c| Signal::from_vector(t.column(c).clone_owned())).collect()
}

/// Biorthogonality of `{T_i g}` and `{T_j h}`: `⟨T_i g, T_j h⟩ = δ_ij`.
///
/// Criterion: `|N·conj(ĝ(λ_l))·ĥ(λ_l) - 1| ≤ tol`. Crosscheck: spectral
/// norm of `C - I` for the cross-Gram `C_ij = ⟨T_i g, T_j h⟩`, which is at
/// most `tol` exactly when the criterion holds. `max_deviation` is the
/// largest entry of `C - I`.
pub fn biorthogonality_check(basis: &SpectralBasis, g: &Signal, h: &Signal, tol: f64) -> Result<FrameReport> {
    let n = basis.dim();
    let nf = n as f64;
    let ghat = gft(basis, g)?;
    let hhat = gft(basis, h)?;
    let products: Vec<Complex64> = (0..n).map(|l| ghat[l].conj() * hhat[l] * nf).collect();
    let criterion_dev = products.iter().map(|p| (p - 1.0).norm()).fold(0.0, f64::max);

    let tg = translates_matrix(basis, g, n)?;
    let th = translates_matrix(basis, h, n)?;
    // C_ij = Σ_v T_i g(v) conj(T_j h(v))
    let cross = (th.adjoint() * &tg).transpose();
    let deviation = &cross - DMatrix::<Complex64>::identity(n, n);
    let oracle_norm = operator_norm(&deviation);

    let report = FrameReport::assemble(
        "biorthogonality of {T_i g} and {T_j h}".into(),
        CoefficientSource::Index,
        None,
        None,
        Verdict::pick(criterion_dev <= tol, Verdict::Biorthogonal, Verdict::NotBiorthogonal),
        Verdict::pick(oracle_norm <= tol, Verdict::Biorthogonal, Verdict::NotBiorthogonal),
        products.iter().map(|p| p.norm()).collect(),
        max_identity_deviation(&cross),
    );
    Ok(report.metric("criterion_deviation", criterion_dev).metric("cross_gram_operator_deviation", oracle_norm))
}

/// Greedy row selection on `B[l, i] = ĝ(λ_l) χ_l(i)`, `i < m`: walks `l`
/// upward and keeps each row that is independent of those already kept.
/// The result is the lexicographically smallest index set spanning the
/// row space, i.e. a nonsingular `m × m` minor when one exists.
fn witness_rows(basis: &SpectralBasis, ghat: &[Complex64], m: usize, tol: f64) -> Vec<usize> {
    let n = basis.dim();
    let rows: Vec<Vec<Complex64>> = (0..n).map(|l| (0..m).map(|i| ghat[l] * basis.chi(l, i)).collect()).collect();
    let row_norm = |r: &[Complex64]| r.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let scale = rows.iter().map(|r| row_norm(r)).fold(0.0, f64::max);
    let threshold = tol * scale.max(1.0);

    let mut kept: Vec<Vec<Complex64>> = Vec::new();
    let mut chosen = Vec::new();
    for (l, row) in rows.iter().enumerate() {
        if chosen.len() == m {
            break;
        }
        let mut r = row.clone();
        for _ in 0..2 {
            for q in &kept {
                let dot: Complex64 = r.iter().zip(q).map(|(a, b)| a * b.conj()).sum();
                for (x, y) in r.iter_mut().zip(q) {
                    *x -= dot * y;
                }
            }
        }
        let norm = row_norm(&r);
        if norm > threshold {
            kept.push(r.iter().map(|z| z / norm).collect());
            chosen.push(l);
        }
    }
    chosen
}

/// Linear independence of `{T_i g : i < m}`.
///
/// Verdict: numerical rank of the translates matrix (singular values above
/// `tol·σ_max`). Crosscheck: the greedy search for `m` eigenpair indices
/// whose rows form a nonzero `m × m` minor; on an independent verdict those
/// indices are the witnesses, and each carries `|ĝ(λ_l)| > tol`.
/// `max_deviation` is `σ_min / σ_max`, the relative distance to dependence.
pub fn linear_independence_check(basis: &SpectralBasis, g: &Signal, m: usize, tol: f64) -> Result<FrameReport> {
    let n = basis.dim();
    let ghat = gft(basis, g)?;
    let t = translates_matrix(basis, g, m)?;
    let sv = singular_values(&t);
    let rank = numerical_rank(&t, tol);
    let top = sv.first().copied().unwrap_or(0.0);
    let rel_min = if top > 0.0 { sv.last().copied().unwrap_or(0.0) / top } else { 0.0 };
    let witnesses = witness_rows(basis, ghat.as_slice(), m, tol);
    let sufficient = ghat.iter().all(|c| c.norm() > tol);

    let mut report = FrameReport::assemble(
        format!("linear independence of {{T_i g : 1 <= i <= {m}}}, N = {n}"),
        CoefficientSource::Index,
        None,
        None,
        Verdict::pick(rank == m, Verdict::Independent, Verdict::Dependent),
        Verdict::pick(witnesses.len() == m, Verdict::Independent, Verdict::Dependent),
        ghat.iter().map(|c| c.norm_sqr()).collect(),
        rel_min,
    );
    if report.verdict == Verdict::Independent && witnesses.len() == m {
        report.witnesses = Some(witnesses);
    }
    // A sufficient condition that holds must not be contradicted.
    if sufficient && report.verdict != Verdict::Independent {
        report.agreement = false;
    }
    Ok(report.metric("rank", rank as f64).metric("sufficient_condition", if sufficient { 1.0 } else { 0.0 }))
}

/// Orthonormality of `{T_i g : i < m}`.
///
/// Verdict from the Gram matrix of the `m` translates (eigenvalues within
/// `√N·tol` of one, as in [`onb_translates_check`]). Two theorem-backed
/// implications are cross-checked: `|ĝ| ≡ 1/√N` forces orthonormality, and
/// when exactly `m` coefficients are nonzero an orthonormal system must
/// satisfy `|ĝ(λ_l)| = 1 / (√N·√(Σ_{q<m} χ_l(q)²))` on that support; the
/// residual of that identity is reported as `formula_residual`.
pub fn orthonormal_subsystem_check(basis: &SpectralBasis, g: &Signal, m: usize, tol: f64) -> Result<FrameReport> {
    let n = basis.dim();
    let nf = n as f64;
    let ghat = gft(basis, g)?;
    let t = translates_matrix(basis, g, m)?;
    let gm = gram(&t);
    let orthonormal = gram_is_identity(&gm, nf.sqrt() * tol)?;
    let verdict = Verdict::pick(orthonormal, Verdict::Orthonormal, Verdict::NotOrthonormal);

    let target = 1.0 / nf.sqrt();
    let sufficient = ghat.iter().all(|c| (c.norm() - target).abs() <= tol);
    let support: Vec<usize> = (0..n).filter(|&l| ghat[l].norm() > tol).collect();
    let formula_residual = (support.len() == m).then(|| {
        support
            .iter()
            .map(|&l| {
                let mass: f64 = (0..m).map(|q| basis.chi(l, q).powi(2)).sum();
                if mass <= 0.0 {
                    // the formula has no finite value at this index
                    return f64::MAX;
                }
                (ghat[l].norm() - 1.0 / (nf.sqrt() * mass.sqrt())).abs()
            })
            .fold(0.0, f64::max)
    });

    let contradicted =
        (sufficient && !orthonormal) || (orthonormal && formula_residual.is_some_and(|r| r > nf.sqrt() * tol));
    let crosscheck =
        if contradicted { Verdict::pick(!orthonormal, Verdict::Orthonormal, Verdict::NotOrthonormal) } else { verdict };

    let mut report = FrameReport::assemble(
        format!("orthonormality of {{T_i g : 1 <= i <= {m}}}, N = {n}"),
        CoefficientSource::Index,
        None,
        None,
        verdict,
        crosscheck,
        ghat.iter().map(|c| c.norm_sqr()).collect(),
        max_identity_deviation(&gm),
    );
    report = report.metric("sufficient_condition", if sufficient { 1.0 } else { 0.0 });
    if let Some(r) = formula_residual {
        report = report.metric("formula_residual", r);
        report.witnesses = Some(support);
    }
    Ok(report)
}

/// Distance from `T_k f` to `span{T_i g}` where `f = Σ_i coeffs_i T_i g`.
/// The span is taken from the left singular vectors of the translates
/// matrix above `1e-10·σ_max`.
pub fn shift_invariance_residual(basis: &SpectralBasis, g: &Signal, coeffs: &[Complex64], k: usize) -> Result<f64> {
    let n = basis.dim();
    check_dim(n, coeffs.len())?;
    check_index(k, n)?;
    let t = translates_matrix(basis, g, n)?;
    let f = Signal::from_vector(&t * nalgebra::DVector::from_column_slice(coeffs));
    let tk = translate(basis, &f, k)?;

    let svd = t.svd(true, false);
    let u = svd.u.ok_or_else(|| Error::ConvergenceFailure("SVD without U".into()))?;
    let top = svd.singular_values.iter().copied().fold(0.0, f64::max);
    if top == 0.0 {
        return Ok(tk.norm());
    }
    let mut residual = tk.vector().clone();
    for (c, &sigma) in svd.singular_values.iter().enumerate() {
        if sigma > 1e-10 * top {
            let col = u.column(c);
            let dot = col.dotc(tk.vector());
            residual -= col * dot;
        }
    }
    Ok(residual.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::DEFAULT_TOL;
    use crate::graph::{laplacian, Graph};
    use crate::spectral::{decompose, igft, SpectralCoefficients, DEFAULT_ORTHO_TOL};

    fn star() -> SpectralBasis {
        decompose(&laplacian(&Graph::star(4).unwrap()), DEFAULT_ORTHO_TOL).unwrap()
    }

    fn p2() -> SpectralBasis {
        decompose(&laplacian(&Graph::path(2).unwrap()), DEFAULT_ORTHO_TOL).unwrap()
    }

    fn gen(b: &SpectralBasis, coeffs: Vec<Complex64>) -> Signal {
        igft(b, &SpectralCoefficients::new(coeffs)).unwrap()
    }

    fn re(xs: &[f64]) -> Vec<Complex64> {
        xs.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    #[test]
    fn onb_with_phases() {
        let b = star();
        let g = gen(&b, (0..4).map(|k| Complex64::from_polar(0.5, 0.9 * k as f64)).collect());
        let r = onb_translates_check(&b, &g, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Onb);
        assert!(r.agreement);
        assert!(r.max_deviation < 1e-10);
    }

    #[test]
    fn star_kernel_is_not_onb() {
        let b = star();
        let g = gen(&b, re(&[1.0, 1.0, 1.0, 0.0]));
        let r = onb_translates_check(&b, &g, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::NotOnb);
        assert_eq!(r.crosscheck_verdict, Verdict::NotOnb);
        assert!(r.agreement);
    }

    #[test]
    fn p2_onb_any_phase() {
        let b = p2();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for theta in [0.0, 0.4, 2.9, -1.3] {
            let g = gen(&b, vec![Complex64::new(h, 0.0), Complex64::from_polar(h, theta)]);
            let r = onb_translates_check(&b, &g, DEFAULT_TOL).unwrap();
            assert_eq!(r.verdict, Verdict::Onb);
            assert!(r.agreement);
        }
    }

    #[test]
    fn biorthogonal_pairs() {
        let b = p2();
        let g = gen(&b, re(&[1.0, 0.5]));
        let h = gen(&b, re(&[0.5, 1.0]));
        let r = biorthogonality_check(&b, &g, &h, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Biorthogonal);
        assert!(r.agreement && r.max_deviation < 1e-12);

        let onb = gen(&b, re(&[0.5f64.sqrt(), 0.5f64.sqrt()]));
        assert_eq!(biorthogonality_check(&b, &onb, &onb, DEFAULT_TOL).unwrap().verdict, Verdict::Biorthogonal);

        let zero_at_one = gen(&b, re(&[0.5, 0.0]));
        let r = biorthogonality_check(&b, &g, &zero_at_one, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::NotBiorthogonal);
        assert!(r.agreement);
    }

    #[test]
    fn independence_examples() {
        let b = star();
        let g = gen(&b, re(&[0.5; 4]));
        let r = linear_independence_check(&b, &g, 3, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Independent);
        assert_eq!(r.metrics["sufficient_condition"], 1.0);
        let w = r.witnesses.clone().unwrap();
        assert_eq!(w.len(), 3);
        assert!(r.agreement);

        let g = gen(&b, re(&[1.0, 1.0, 1.0, 0.0]));
        let r = linear_independence_check(&b, &g, 4, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Dependent);
        assert!(r.metrics["rank"] <= 3.0);
        assert!(r.witnesses.is_none());
        assert!(r.agreement);

        let r = linear_independence_check(&b, &Signal::zeros(4), 2, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Dependent);
        assert!(linear_independence_check(&b, &g, 5, DEFAULT_TOL).is_err());
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        let b = star();
        // every row nonzero: the first m rows with an independent minor win
        let g = gen(&b, re(&[0.5; 4]));
        let r = linear_independence_check(&b, &g, 1, DEFAULT_TOL).unwrap();
        // χ_1(0) = 1/2 ≠ 0, so index 0 alone already spans
        assert_eq!(r.witnesses, Some(vec![0]));
    }

    #[test]
    fn orthonormal_subsystems() {
        let b = star();
        let onb = gen(&b, (0..4).map(|k| Complex64::from_polar(0.5, k as f64)).collect());
        let r = orthonormal_subsystem_check(&b, &onb, 4, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Orthonormal);
        assert!(r.agreement);
        // m = N and full support: the formula reduces to |ĝ| = 1/√N
        assert!(r.metrics["formula_residual"] < 1e-12);

        let r = orthonormal_subsystem_check(&b, &onb, 2, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Orthonormal);
        assert!(r.agreement);

        let g = gen(&b, re(&[1.0, 1.0, 1.0, 0.0]));
        let r = orthonormal_subsystem_check(&b, &g, 4, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::NotOrthonormal);
        assert!(r.agreement);
    }

    #[test]
    fn unique_support_formula() {
        // P2 with ĝ supported on one index, m = 1: T_1 g is a unit vector
        // exactly when |ĝ(λ_l)| = 1/(√2·|χ_l(0)|) = 1.
        let b = p2();
        let g = gen(&b, re(&[1.0, 0.0]));
        let r = orthonormal_subsystem_check(&b, &g, 1, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Orthonormal);
        assert!(r.metrics["formula_residual"] < 1e-12);
        assert_eq!(r.witnesses, Some(vec![0]));
        assert!(r.agreement);
    }

    #[test]
    fn shift_invariance() {
        let b = star();
        let g = gen(&b, re(&[0.3, -1.2, 0.8, 2.0]));
        let coeffs = re(&[1.0, -0.5, 0.25, 2.0]);
        for k in 0..4 {
            let tk = translate(
                &b,
                &Signal::from_vector(
                    translates_matrix(&b, &g, 4).unwrap() * nalgebra::DVector::from_column_slice(&coeffs),
                ),
                k,
            )
            .unwrap();
            let r = shift_invariance_residual(&b, &g, &coeffs, k).unwrap();
            assert!(r <= 1e-10 * tk.norm().max(1.0));
        }
        assert_eq!(shift_invariance_residual(&b, &Signal::zeros(4), &coeffs, 1).unwrap(), 0.0);
        // a rank-deficient generator still spans a shift invariant space
        let g = gen(&b, re(&[1.0, 0.0, 1.0, 0.0]));
        assert!(shift_invariance_residual(&b, &g, &coeffs, 2).unwrap() < 1e-12);
        assert!(shift_invariance_residual(&b, &g, &coeffs, 4).is_err());
    }
}
