//! Polynomial spectral kernels and positive dilation scales.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A polynomial `ĝ(z) = Σ c_k z^k` on the complex plane. The trailing
/// coefficient may be zero; degree is nominal.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralKernel {
    coefficients: Vec<Complex64>,
}

impl SpectralKernel {
    pub fn new(coefficients: Vec<Complex64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::EmptyKernel);
        }
        Ok(SpectralKernel { coefficients })
    }

    pub fn from_real(coefficients: &[f64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coefficients.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn eval_real(&self, x: f64) -> Complex64 {
        self.eval(Complex64::new(x, 0.0))
    }

    /// The interpolating polynomial of degree `< points.len()` through
    /// `(x_k, y_k)`, expanded into monomial coefficients.
    pub fn from_lagrange(points: &[(f64, Complex64)]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyKernel);
        }
        for (a, (xa, _)) in points.iter().enumerate() {
            if !xa.is_finite() {
                return Err(Error::InvalidScale(*xa));
            }
            if points[..a].iter().any(|(xb, _)| xb == xa) {
                return Err(Error::DuplicateAbscissa(*xa));
            }
        }
        let n = points.len();
        let mut total = vec![Complex64::new(0.0, 0.0); n];
        for (k, &(xk, yk)) in points.iter().enumerate() {
            // basis polynomial ℓ_k(x) = Π_{j≠k} (x - x_j) / (x_k - x_j)
            let mut basis = vec![1.0];
            let mut denom = 1.0;
            for (j, &(xj, _)) in points.iter().enumerate() {
                if j == k {
                    continue;
                }
                let mut next = vec![0.0; basis.len() + 1];
                for (d, &b) in basis.iter().enumerate() {
                    next[d + 1] += b;
                    next[d] -= xj * b;
                }
                basis = next;
                denom *= xk - xj;
            }
            for (d, &b) in basis.iter().enumerate() {
                total[d] += yk * (b / denom);
            }
        }
        Ok(SpectralKernel { coefficients: total })
    }
}

/// Displays in the `poly:` file syntax.
impl fmt::Display for SpectralKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("poly:")?;
        for c in &self.coefficients {
            if c.im == 0.0 {
                write!(f, " {:?}", c.re)?;
            } else {
                write!(f, " {:?}{:+?}i", c.re, c.im)?;
            }
        }
        Ok(())
    }
}

/// Parses `poly: c0 c1 …` or `lagrange: x1 y1; x2 y2; …`. Coefficient and
/// ordinate tokens are real or `a+bi`. Blank lines and `#` comments are
/// ignored; exactly one kernel line is expected.
impl FromStr for SpectralKernel {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut found = None;
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if found.is_some() {
                return Err(malformed(k + 1, "more than one kernel definition"));
            }
            found = Some((k + 1, line));
        }
        let (line_no, line) = found.ok_or_else(|| malformed(1, "no kernel definition"))?;
        let (tag, body) = line.split_once(':').ok_or_else(|| malformed(line_no, "expected `poly:` or `lagrange:`"))?;
        match tag.trim() {
            "poly" => {
                let coeffs = body.split_whitespace().map(|t| parse_complex(t, line_no)).collect::<Result<Vec<_>>>()?;
                SpectralKernel::new(coeffs)
            }
            "lagrange" => {
                let mut points = Vec::new();
                for pair in body.split(';').map(str::trim).filter(|p| !p.is_empty()) {
                    let tokens: Vec<&str> = pair.split_whitespace().collect();
                    if tokens.len() != 2 {
                        return Err(malformed(line_no, &format!("bad point `{pair}`")));
                    }
                    let x = tokens[0]
                        .parse::<f64>()
                        .map_err(|_| malformed(line_no, &format!("bad abscissa `{}`", tokens[0])))?;
                    points.push((x, parse_complex(tokens[1], line_no)?));
                }
                SpectralKernel::from_lagrange(&points)
            }
            other => Err(malformed(line_no, &format!("unknown kernel kind `{other}`"))),
        }
    }
}

/// Parses a real or `a+bi` token.
pub fn parse_complex(token: &str, line: usize) -> Result<Complex64> {
    Complex64::from_str(token.trim()).map_err(|_| malformed(line, &format!("bad number `{token}`")))
}

fn malformed(line: usize, reason: &str) -> Error {
    Error::MalformedLine { line, reason: reason.to_string() }
}

/// A dilation scale, a positive finite real.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Scale(f64);

impl Scale {
    pub fn new(s: f64) -> Result<Self> {
        if s.is_finite() && s > 0.0 {
            Ok(Scale(s))
        } else {
            Err(Error::InvalidScale(s))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Validates a list of scales; the set must be non-empty.
pub fn scale_set(values: &[f64]) -> Result<Vec<Scale>> {
    if values.is_empty() {
        return Err(Error::EmptyScaleSet);
    }
    values.iter().map(|&s| Scale::new(s)).collect()
}
