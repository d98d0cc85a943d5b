//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::time::{Duration, Instant};

use common::*;
use gsp_frames::frame::{frame_threshold, spectral_frame_operator_diagonal};
use gsp_frames::graph::laplacian;
use gsp_frames::kernel::scale_set;
use gsp_frames::linalg::outer_product_sum;
use gsp_frames::star::{reproduce_star_example, DEFAULT_SCALES};
use gsp_frames::vertex::spectral_multiplier_matrix;
use gsp_frames::*;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn within(elapsed: Duration, limit_s: f64) -> bool {
    elapsed.as_secs_f64() < limit_s
}

fn star_reproduction() -> Outcome {
    let start = Instant::now();
    let r = reproduce_star_example(&DEFAULT_SCALES).unwrap();
    let elapsed = start.elapsed();
    let failed: Vec<&str> = r.facts.iter().filter(|f| !f.passed).map(|f| f.name.as_str()).collect();
    let frame = r.wavelet_report.verdict == Verdict::Frame;
    outcome(
        failed.is_empty() && frame && within(elapsed, 1.0),
        format!(
            "{} facts, failed {:?}, verdict {:?}, {:.3} s",
            r.facts.len(),
            failed,
            r.wavelet_report.verdict,
            elapsed.as_secs_f64()
        ),
    )
}

fn onb_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let start = Instant::now();
    let tol = DEFAULT_TOL;
    let (mut trials, mut mismatches, mut wrong, mut positives) = (0, 0, 0, 0);
    let mut worst_gram: f64 = 0.0;
    for t in 0..600 {
        let b = random_basis(&mut rng, 2, 8);
        let n = b.dim();
        let target = 1.0 / (n as f64).sqrt();
        let mut c: Vec<Complex64> = (0..n).map(|_| phase(&mut rng) * target).collect();
        // 0: exact, 1: +10 tol, 2: -10 tol, 3: unconstrained
        let kind = t % 4;
        let l = rng.gen_range(0..n);
        match kind {
            1 => c[l] *= (target + 10.0 * tol) / target,
            2 => c[l] *= (target - 10.0 * tol) / target,
            3 => c = random_coefficients(&mut rng, n, 0.0, 1.0).as_slice().to_vec(),
            _ => {}
        }
        let g = igft(&b, &SpectralCoefficients::new(c)).unwrap();
        let r = onb_translates_check(&b, &g, tol).unwrap();
        trials += 1;
        if r.verdict != r.crosscheck_verdict {
            mismatches += 1;
        }
        if (kind == 0) != (r.verdict == Verdict::Onb) {
            wrong += 1;
        }
        if r.verdict == Verdict::Onb {
            positives += 1;
            let t = translates_matrix(&b, &g, n).unwrap();
            let gram = t.adjoint() * &t;
            let dev = (gram - DMatrix::<Complex64>::identity(n, n)).camax();
            worst_gram = worst_gram.max(dev).max(r.max_deviation);
        }
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches == 0 && wrong == 0 && worst_gram <= 1e-10 && within(elapsed, 30.0),
        format!(
            "{trials} trials, {positives} positives, {mismatches} verdict mismatches, {wrong} misclassified, \
             max Gram deviation {worst_gram:.2e}, {:.2} s",
            elapsed.as_secs_f64()
        ),
    )
}

fn frame_bound_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let start = Instant::now();
    let (mut failures, mut frames, mut verdict_mismatch) = (0, 0, 0);
    let mut worst: f64 = 0.0;
    let trials = 600;
    for t in 0..trials {
        let b = random_basis(&mut rng, 2, 8);
        let n = b.dim();
        let m = rng.gen_range(1..=3);
        let mut gens = Vec::new();
        for _ in 0..m {
            let mut g = random_signal(&mut rng, n);
            if t % 3 == 0 {
                // zero one spectral coefficient in every generator
                let l = t % n;
                let mut c = gft(&b, &g).unwrap().as_slice().to_vec();
                c[l] = Complex64::new(0.0, 0.0);
                g = igft(&b, &SpectralCoefficients::new(c)).unwrap();
            }
            gens.push(g);
        }
        let set = GeneratorSet::new(gens.clone()).unwrap();
        let r = multi_generator_frame_bounds(&b, &set).unwrap();
        let crit = r.criterion_bounds.unwrap();

        let mut vectors = Vec::new();
        for g in &gens {
            for i in 0..n {
                vectors.push(translate(&b, g, i).unwrap());
            }
        }
        let s = outer_product_sum(n, vectors.iter().map(|v| v.as_slice()));
        let (lo, hi) = hermitian_extremes(&s);
        let scale = 1e-8 * (1.0 + hi);
        let dev = (crit.lower - lo).abs().max((crit.upper - hi).abs());
        worst = worst.max(dev / (1.0 + hi));
        if dev > scale {
            failures += 1;
        }
        let oracle_frame = lo > frame_threshold(hi);
        if oracle_frame != (r.verdict == Verdict::Frame) || !r.agreement {
            verdict_mismatch += 1;
        }
        if oracle_frame {
            frames += 1;
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures == 0 && verdict_mismatch == 0 && within(elapsed, 60.0),
        format!(
            "{trials} trials ({frames} frames), {failures} bound failures, {verdict_mismatch} verdict mismatches, \
             max relative deviation {worst:.2e}, {:.2} s",
            elapsed.as_secs_f64()
        ),
    )
}

fn duality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut not_dual, mut recon_fail, mut lu_fail) = (0, 0, 0);
    let (mut worst_recon, mut worst_lu): (f64, f64) = (0.0, 0.0);
    let trials = 250;
    for _ in 0..trials {
        let b = random_basis(&mut rng, 2, 8);
        let n = b.dim();
        let nf = n as f64;
        let ghat = random_coefficients(&mut rng, n, 0.11, 1.5);
        let g = igft(&b, &ghat).unwrap();
        let h = canonical_dual_generator(&b, &g, DEFAULT_TOL).unwrap();

        let hhat = gft(&b, &h).unwrap();
        let closed: Vec<Complex64> = ghat.iter().map(|c| c / (nf * c.norm_sqr())).collect();
        let closed_dev = hhat.iter().zip(&closed).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);

        let gens = GeneratorSet::new(vec![g.clone()]).unwrap();
        let duals = GeneratorSet::new(vec![h.clone()]).unwrap();
        let r = dual_frames_check(&b, &gens, &duals, DEFAULT_TOL).unwrap();
        if r.verdict != Verdict::DualPair || r.crosscheck_verdict != Verdict::DualPair || closed_dev > 1e-12 {
            not_dual += 1;
        }

        // f = Σ_i ⟨f, T_i g⟩ T_i h on every standard basis vector
        let tg: Vec<Signal> = (0..n).map(|i| translate(&b, &g, i).unwrap()).collect();
        let th: Vec<Signal> = (0..n).map(|i| translate(&b, &h, i).unwrap()).collect();
        for k in 0..n {
            let e = Signal::delta(n, k).unwrap();
            let mut rec = Signal::zeros(n);
            for i in 0..n {
                rec = &rec + &th[i].scale(e.inner(&tg[i]));
            }
            let res = (&rec - &e).norm();
            worst_recon = worst_recon.max(res);
            if res > 1e-9 {
                recon_fail += 1;
            }
        }

        let via_lu = canonical_dual_via_frame_operator(&b, &g).unwrap();
        let d = (&via_lu - &h).max_abs();
        worst_lu = worst_lu.max(d);
        if d > 1e-8 {
            lu_fail += 1;
        }
    }
    outcome(
        not_dual == 0 && recon_fail == 0 && lu_fail == 0,
        format!(
            "{trials} trials, {not_dual} not dual, max reconstruction residual {worst_recon:.2e}, \
             max LU mismatch {worst_lu:.2e}"
        ),
    )
}

fn commutation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst: f64 = 0.0;
    let mut failures = 0;
    for _ in 0..20 {
        let b = random_basis(&mut rng, 2, 8);
        let n = b.dim();
        let g = igft(&b, &random_coefficients(&mut rng, n, 0.1, 1.5)).unwrap();
        let gens = GeneratorSet::new(vec![g]).unwrap();
        assert_eq!(multi_generator_frame_bounds(&b, &gens).unwrap().verdict, Verdict::Frame);
        let s = frame_operator_matrix(&b, &gens).unwrap();
        for _ in 0..50 {
            let f = random_signal(&mut rng, n);
            let sf = Signal::from_vector(&s * f.vector());
            let mut r: f64 = 0.0;
            for i in 0..n {
                let lhs = Signal::from_vector(&s * translate(&b, &f, i).unwrap().vector());
                let rhs = translate(&b, &sf, i).unwrap();
                r = r.max((&lhs - &rhs).max_abs());
            }
            let lib = commutation_residual(&b, &gens, &f).unwrap();
            let rel = r.max(lib) / f.norm();
            worst = worst.max(rel);
            if rel > 1e-9 {
                failures += 1;
            }
        }
    }
    outcome(
        failures == 0,
        format!("20 generators x 50 signals, {failures} failures, max ||ST_if - T_iSf||inf/||f|| {worst:.2e}"),
    )
}

fn convolution_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = 0;
    let mut worst: f64 = 0.0;
    let trials = 1000;
    let rel = |a: &Signal, b: &Signal| (a - b).norm() / (1.0 + b.norm());
    for _ in 0..trials {
        let b = random_basis(&mut rng, 1, 8);
        let n = b.dim();
        let f = random_signal(&mut rng, n);
        let g = random_signal(&mut rng, n);
        let h = random_signal(&mut rng, n);
        let alpha = random_complex(&mut rng);
        let fg = convolve(&b, &f, &g).unwrap();
        let devs = [
            rel(&fg, &convolve(&b, &g, &f).unwrap()),
            rel(&convolve(&b, &f, &(&g + &h)).unwrap(), &(&fg + &convolve(&b, &f, &h).unwrap())),
            rel(&convolve(&b, &f.scale(alpha), &g).unwrap(), &fg.scale(alpha)),
            rel(&convolve(&b, &f, &g.scale(alpha)).unwrap(), &fg.scale(alpha)),
            // f * g = ĝ(A) f with ĝ(A) = χ diag(ĝ) χᵀ
            rel(&fg, &Signal::from_vector(multiplier(&b, &gft(&b, &g).unwrap()) * f.vector())),
            rel(
                &Signal::from_vector(spectral_multiplier_matrix(&b, &gft(&b, &g).unwrap()).unwrap() * f.vector()),
                &Signal::from_vector(multiplier(&b, &gft(&b, &g).unwrap()) * f.vector()),
            ),
        ];
        let d = devs.iter().copied().fold(0.0, f64::max);
        worst = worst.max(d);
        if d > 1e-10 {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{trials} trials, {failures} failures, max relative deviation {worst:.2e}"))
}

fn independence_witness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let tol = DEFAULT_TOL;
    let (mut independent, mut bad_witness, mut sparse_cases, mut sparse_wrong, mut disagreements) = (0, 0, 0, 0, 0);
    let trials = 300;
    for _ in 0..trials {
        let b = random_basis(&mut rng, 2, 8);
        let n = b.dim();
        let m = rng.gen_range(1..=n);
        let mut c = random_coefficients(&mut rng, n, 0.05, 1.0).as_slice().to_vec();
        let r_nonzero = rng.gen_range(0..=n);
        let mut idx: Vec<usize> = (0..n).collect();
        for k in (1..n).rev() {
            idx.swap(k, rng.gen_range(0..=k));
        }
        for &l in &idx[r_nonzero..] {
            c[l] = Complex64::new(0.0, 0.0);
        }
        let g = igft(&b, &SpectralCoefficients::new(c)).unwrap();
        let rep = linear_independence_check(&b, &g, m, tol).unwrap();
        if !rep.agreement {
            disagreements += 1;
        }
        let ghat = gft(&b, &g).unwrap();
        if rep.verdict == Verdict::Independent {
            independent += 1;
            let w = rep.witnesses.clone().unwrap_or_default();
            let minor = DMatrix::from_fn(m, m, |r, col| ghat[w[r]] * b.chi(w[r], col));
            let ok = w.len() == m && w.iter().all(|&l| ghat[l].norm() > tol) && minor.determinant().norm() > 0.0;
            if !ok {
                bad_witness += 1;
            }
        }
        if r_nonzero < m {
            sparse_cases += 1;
            if rep.verdict != Verdict::Dependent {
                sparse_wrong += 1;
            }
        }
    }
    outcome(
        bad_witness == 0 && sparse_wrong == 0 && disagreements == 0,
        format!(
            "{trials} trials, {independent} independent with {bad_witness} bad witness sets, \
             {sparse_cases} cases with r < m nonzero coefficients, {sparse_wrong} not dependent"
        ),
    )
}

fn rotation_invariance() -> Outcome {
    let b = decompose(&laplacian(&Graph::star(4).unwrap()), DEFAULT_ORTHO_TOL).unwrap();
    let kernel: SpectralKernel = "lagrange: 0 1; 1 1; 4 0".parse().unwrap();
    let mut worst: f64 = 0.0;
    let mut verdicts_differ = 0;
    let mut cases = 0;
    for theta in [0.3, 1.0, 2.2, std::f64::consts::FRAC_PI_2] {
        let rotated = b.rotate_within_eigenspace(1, 2, theta).unwrap();
        let moved = (rotated.eigenvectors() - b.eigenvectors()).amax();
        assert!(moved > 1e-3, "rotation must change the basis");
        for scales in [&DEFAULT_SCALES[..], &[0.5], &[1.0], &[1.0, 2.0], &[0.25, 0.75, 1.25]] {
            let j = scale_set(scales).unwrap();
            let a = wavelet_frame_check(&b, &kernel, &j).unwrap();
            let c = wavelet_frame_check(&rotated, &kernel, &j).unwrap();
            cases += 1;
            for (x, y) in [
                (a.criterion_bounds.unwrap(), c.criterion_bounds.unwrap()),
                (a.oracle_bounds.unwrap(), c.oracle_bounds.unwrap()),
            ] {
                worst = worst.max((x.lower - y.lower).abs()).max((x.upper - y.upper).abs());
            }
            let e = a.per_eigenvalue_energy.iter().zip(&c.per_eigenvalue_energy).map(|(p, q)| (p - q).abs());
            worst = worst.max(e.fold(0.0, f64::max));
            if a.verdict != c.verdict || a.crosscheck_verdict != c.crosscheck_verdict || a.agreement != c.agreement {
                verdicts_differ += 1;
            }
            let diag_a = spectral_frame_operator_diagonal(
                &b,
                &GeneratorSet::new(vec![dilate_to_signal(&b, &kernel, j[0])]).unwrap(),
            )
            .unwrap();
            let diag_c = spectral_frame_operator_diagonal(
                &rotated,
                &GeneratorSet::new(vec![dilate_to_signal(&rotated, &kernel, j[0])]).unwrap(),
            )
            .unwrap();
            worst = worst.max(diag_a.iter().zip(&diag_c).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max));
        }
    }
    outcome(
        worst <= 1e-9 && verdicts_differ == 0,
        format!("{cases} (rotation, scale set) cases, max bound difference {worst:.2e}, {verdicts_differ} verdict differences"),
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("star-graph reproduction", star_reproduction),
        ("ONB characterization equivalence", onb_equivalence),
        ("frame-bound equivalence", frame_bound_equivalence),
        ("duality and canonical dual", duality),
        ("commutation S T_i = T_i S", commutation),
        ("convolution algebra", convolution_algebra),
        ("independence necessity witness", independence_witness),
        ("basis-rotation invariance", rotation_invariance),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.passed;
        println!("criterion {} {:<34} {}  {}", k + 1, name, if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    if !all {
        std::process::exit(1);
    }
}
