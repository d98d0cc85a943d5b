use gsp_frames::kernel::scale_set;
use gsp_frames::star::{reproduce_star_example, DEFAULT_SCALES};
use gsp_frames::{
    biorthogonality_check, canonical_dual_generators, dilate_to_signal, dual_frames_check, gft, igft,
    linear_independence_check, modulation_frame_check, multi_generator_frame_bounds, onb_translates_check,
    orthonormal_subsystem_check, wavelet_frame_check, CoefficientSource, FrameReport, GeneratorSet, Scale, Signal,
    SpectralBasis,
};
use serde_json::json;

use crate::args::{Check, Command, GeneratorArgs, Output};
use crate::error::CliError;
use crate::input::{coefficients, load_basis, load_kernel, parse_list, parse_real_list};

/// What a command produced: the rendered report and whether its verdict is
/// positive.
pub struct Outcome {
    pub body: String,
    pub positive: bool,
}

fn report_outcome(report: &FrameReport, output: Output, extra_text: &str) -> Result<Outcome, CliError> {
    if !report.agreement {
        eprintln!("error: criterion and oracle disagree");
        print!("{}", render_report(report, output, extra_text));
        return Err(CliError::Disagreement);
    }
    Ok(Outcome { body: render_report(report, output, extra_text), positive: report.verdict.is_positive() })
}

fn render_report(report: &FrameReport, output: Output, extra_text: &str) -> String {
    match output {
        Output::Json => report.to_json() + "\n",
        Output::Text => report.to_text() + extra_text,
    }
}

fn generators(basis: &SpectralBasis, args: &GeneratorArgs) -> Result<GeneratorSet, CliError> {
    if let Some(spec) = &args.kernel {
        let kernel = load_kernel(spec)?;
        let g = dilate_to_signal(basis, &kernel, Scale::new(1.0)?);
        return Ok(GeneratorSet::with_source(vec![g], CoefficientSource::Kernel)?);
    }
    let gens = args
        .ghat
        .iter()
        .enumerate()
        .map(|(s, text)| coefficients(text, basis.dim(), &format!("--ghat #{}", s + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GeneratorSet::from_coefficients(basis, &gens)?)
}

fn single(gens: &GeneratorSet, check: Check) -> Result<&Signal, CliError> {
    match gens.generators() {
        [g] => Ok(g),
        _ => Err(CliError::Usage(format!("--check {check:?} takes exactly one generator").to_lowercase())),
    }
}

fn fmt_list(xs: impl IntoIterator<Item = String>) -> String {
    xs.into_iter().collect::<Vec<_>>().join(", ")
}

pub fn run(command: &Command, output: Output, tol: f64) -> Result<Outcome, CliError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Usage(format!("--tol must be a positive number, got {tol}")));
    }
    match command {
        Command::Spectrum { graph } => {
            let basis = load_basis(graph)?;
            let body = match output {
                Output::Json => {
                    let value = json!({
                        "operator": basis.source_kind(),
                        "n_vertices": basis.dim(),
                        "eigenvalues": basis.eigenvalues(),
                        "eigen_residual": basis.eigen_residual(),
                        "orthonormality_residual": basis.orthonormality_residual(),
                    });
                    serde_json::to_string_pretty(&value).expect("json value serializes") + "\n"
                }
                Output::Text => format!(
                    "operator: {}\nN: {}\neigenvalues: [{}]\neigen residual: {:.3e}\northonormality residual: {:.3e}\n",
                    basis.source_kind(),
                    basis.dim(),
                    fmt_list(basis.eigenvalues().iter().map(|x| format!("{x:.12e}"))),
                    basis.eigen_residual(),
                    basis.orthonormality_residual()
                ),
            };
            Ok(Outcome { body, positive: true })
        }

        Command::Translates { graph, generator, check, m, hhat } => {
            let basis = load_basis(graph)?;
            let n = basis.dim();
            let gens = generators(&basis, generator)?;
            let m = m.unwrap_or(n);
            if hhat.is_some() && *check != Check::Biorthogonal {
                return Err(CliError::Usage("--hhat is only used with --check biorthogonal".into()));
            }
            let mut report = match check {
                Check::Onb => onb_translates_check(&basis, single(&gens, *check)?, tol)?,
                Check::Frame => multi_generator_frame_bounds(&basis, &gens)?,
                Check::Independence => linear_independence_check(&basis, single(&gens, *check)?, m, tol)?,
                Check::Orthonormal => orthonormal_subsystem_check(&basis, single(&gens, *check)?, m, tol)?,
                Check::Biorthogonal => {
                    let text =
                        hhat.as_deref().ok_or_else(|| CliError::Usage("--check biorthogonal needs --hhat".into()))?;
                    let h = igft(&basis, &coefficients(text, n, "--hhat")?)?;
                    biorthogonality_check(&basis, single(&gens, *check)?, &h, tol)?
                }
            };
            report.generator_source = gens.source();
            report_outcome(&report, output, "")
        }

        Command::Wavelet { graph, kernel, scales } => {
            let scales = parse_real_list(scales, "--scales")?;
            let scales = scale_set(&scales)?;
            let kernel = load_kernel(kernel)?;
            let basis = load_basis(graph)?;
            report_outcome(&wavelet_frame_check(&basis, &kernel, &scales)?, output, "")
        }

        Command::Modulation { graph, signal, ghat } => {
            let basis = load_basis(graph)?;
            let n = basis.dim();
            let g = match (signal, ghat) {
                (Some(text), _) => {
                    let values = parse_list(text, "--signal")?;
                    if values.len() != n {
                        return Err(CliError::Usage(format!("--signal: expected {n} values, found {}", values.len())));
                    }
                    Signal::new(values)
                }
                (None, Some(text)) => igft(&basis, &coefficients(text, n, "--ghat")?)?,
                (None, None) => return Err(CliError::Usage("modulation needs --signal or --ghat".into())),
            };
            report_outcome(&modulation_frame_check(&basis, &g)?, output, "")
        }

        Command::Dual { graph, ghat, hhat } => {
            let basis = load_basis(graph)?;
            let n = basis.dim();
            let gens = generators(&basis, &GeneratorArgs { kernel: None, ghat: ghat.clone() })?;
            let duals = if hhat.is_empty() {
                canonical_dual_generators(&basis, &gens, tol)?
            } else {
                let h = hhat
                    .iter()
                    .enumerate()
                    .map(|(s, text)| coefficients(text, n, &format!("--hhat #{}", s + 1)))
                    .collect::<Result<Vec<_>, _>>()?;
                GeneratorSet::from_coefficients(&basis, &h)?
            };
            let report = dual_frames_check(&basis, &gens, &duals, tol)?;
            let mut extra = String::new();
            for (s, h) in duals.generators().iter().enumerate() {
                let hhat = gft(&basis, h)?;
                extra.push_str(&format!("hhat #{}: [{}]\n", s + 1, fmt_list(hhat.iter().map(|c| format!("{c:.12e}")))));
            }
            report_outcome(&report, output, &extra)
        }

        Command::StarExample { scales } => {
            let scales = match scales {
                Some(text) => parse_real_list(text, "--scales")?,
                None => DEFAULT_SCALES.to_vec(),
            };
            let r = reproduce_star_example(&scales)?;
            let body = match output {
                Output::Json => serde_json::to_string_pretty(&r).expect("reproduction serializes") + "\n",
                Output::Text => r.to_text(),
            };
            Ok(Outcome { body, positive: r.all_passed() })
        }
    }
}
