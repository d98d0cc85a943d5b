use std::fs;
use std::path::Path;

use gsp_frames::graph::{operator, parse_edge_list_with_header};
use gsp_frames::kernel::parse_complex;
use gsp_frames::{
    connectivity_check, decompose, Complex64, Connectivity, SpectralBasis, SpectralCoefficients, SpectralKernel,
    DEFAULT_ORTHO_TOL,
};

use crate::args::GraphArgs;
use crate::error::CliError;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Reads the graph, warns on stderr when it is disconnected, and
/// decomposes the requested operator.
pub fn load_basis(args: &GraphArgs) -> Result<SpectralBasis, CliError> {
    let text = read(&args.graph)?;
    let graph =
        parse_edge_list_with_header(&text, args.n).map_err(CliError::parse(args.graph.display().to_string()))?;
    if let Connectivity::Components(k) = connectivity_check(&graph) {
        eprintln!("warning: graph has {k} connected components; eigenvalue 0 of the Laplacian has multiplicity {k}");
    }
    Ok(decompose(&operator(&graph, args.operator.into()), DEFAULT_ORTHO_TOL)?)
}

/// A kernel file, or the kernel text itself when it starts with `poly:` or
/// `lagrange:`.
pub fn load_kernel(spec: &str) -> Result<SpectralKernel, CliError> {
    let trimmed = spec.trim_start();
    let text = if trimmed.starts_with("poly:") || trimmed.starts_with("lagrange:") {
        spec.to_string()
    } else {
        read(Path::new(spec))?
    };
    text.parse().map_err(CliError::parse(format!("kernel `{spec}`")))
}

pub fn parse_list(text: &str, what: &str) -> Result<Vec<Complex64>, CliError> {
    let tokens: Vec<&str> = text.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
    tokens.iter().map(|t| parse_complex(t, 0)).collect::<gsp_frames::Result<Vec<_>>>().map_err(CliError::parse(what))
}

pub fn parse_real_list(text: &str, what: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>().map_err(|_| CliError::Parse {
                context: what.to_string(),
                source: gsp_frames::Error::MalformedLine { line: 0, reason: format!("bad number `{t}`") },
            })
        })
        .collect()
}

pub fn coefficients(text: &str, n: usize, what: &str) -> Result<SpectralCoefficients, CliError> {
    let values = parse_list(text, what)?;
    if values.len() != n {
        return Err(CliError::Usage(format!("{what}: expected {n} coefficients, found {}", values.len())));
    }
    Ok(SpectralCoefficients::new(values))
}
