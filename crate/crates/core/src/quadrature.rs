//! Quadrature transforms and analytic signals.
//!
//! The cosine quadrature of variant `i` synthesises the DCT-`i` coefficients of a
//! signal on the sine partner basis: `x̃_c = S̃ᵢ (Cᵢᵀ x)`. The sine quadrature does
//! the reverse with DST-`i` and `C̃ᵢ`. The Fourier-Singh analytic signal pairs the
//! signal with its quadrature; the Gabor analytic signal is built from the DFT by
//! suppressing negative-frequency bins.
//!
//! Neither quadrature removes the mean; use [`demean`] first when invertibility
//! matters.

use rustfft::num_complex::Complex64;

use crate::error::{Error, Result};
use crate::signal::Signal;
use crate::transforms::{self, fast, TransformVariant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureFamily {
    Cosine,
    Sine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalyticKind {
    Gas,
    FsasCosine(u8),
    FsasSine(u8),
}

/// A complex extension of a real signal, stored as two real sequences.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSignal {
    real: Vec<f64>,
    imag: Vec<f64>,
    fs: f64,
    kind: AnalyticKind,
}

impl AnalyticSignal {
    pub(crate) fn from_parts(real: Vec<f64>, imag: Vec<f64>, fs: f64, kind: AnalyticKind) -> Self {
        debug_assert_eq!(real.len(), imag.len());
        Self {
            real,
            imag,
            fs,
            kind,
        }
    }

    pub fn real(&self) -> &[f64] {
        &self.real
    }

    pub fn imag(&self) -> &[f64] {
        &self.imag
    }

    pub fn fs(&self) -> f64 {
        self.fs
    }

    pub fn kind(&self) -> AnalyticKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.real.len()
    }

    pub fn is_empty(&self) -> bool {
        self.real.is_empty()
    }

    pub fn into_parts(self) -> (Vec<f64>, Vec<f64>) {
        (self.real, self.imag)
    }
}

fn check_variant(variant: u8) -> Result<()> {
    if !(1..=8).contains(&variant) {
        return Err(Error::domain(format!(
            "quadrature variant must be in 1..=8, got {variant}"
        )));
    }
    Ok(())
}

/// Cosine quadrature `S̃ᵢ Cᵢᵀ x`.
///
/// Variant 2 runs on the FFT path; every variant is also available densely through
/// [`fcqt_dense`].
pub fn fcqt(x: &Signal, variant: u8) -> Result<Vec<f64>> {
    check_variant(variant)?;
    if variant == 2 {
        let coeffs = fast::fast_dct2(x.samples())?;
        return Ok(fast::dct2_analytic_synthesis(&coeffs)?.1);
    }
    fcqt_dense(x, variant)
}

/// Dense-matrix cosine quadrature for any variant.
pub fn fcqt_dense(x: &Signal, variant: u8) -> Result<Vec<f64>> {
    let analysis = transforms::matrix(TransformVariant::dct(variant)?, x.len())?;
    let partner = transforms::matrix(TransformVariant::aux_sine(variant)?, x.len())?;
    let coeffs = analysis.forward(x.samples())?;
    Ok(partner.synthesize(&coeffs, analysis.cols().start))
}

/// Sine quadrature `C̃ᵢ Sᵢᵀ x` (dense for every variant).
pub fn fsqt(x: &Signal, variant: u8) -> Result<Vec<f64>> {
    check_variant(variant)?;
    let analysis = transforms::matrix(TransformVariant::dst(variant)?, x.len())?;
    let partner = transforms::matrix(TransformVariant::aux_cosine(variant)?, x.len())?;
    let coeffs = analysis.forward(x.samples())?;
    Ok(partner.synthesize(&coeffs, analysis.cols().start))
}

/// Fourier-Singh analytic signal.
///
/// Cosine family: `x + j·fcqt(x)`. Sine family: `fsqt(x) + j·x`. Real and imaginary
/// parts are in general not orthogonal.
pub fn fsas(x: &Signal, family: QuadratureFamily, variant: u8) -> Result<AnalyticSignal> {
    match family {
        QuadratureFamily::Cosine => {
            let imag = fcqt(x, variant)?;
            Ok(AnalyticSignal::from_parts(
                x.samples().to_vec(),
                imag,
                x.fs(),
                AnalyticKind::FsasCosine(variant),
            ))
        }
        QuadratureFamily::Sine => {
            let real = fsqt(x, variant)?;
            Ok(AnalyticSignal::from_parts(
                real,
                x.samples().to_vec(),
                x.fs(),
                AnalyticKind::FsasSine(variant),
            ))
        }
    }
}

/// Recovers `X̃[k]` from a DCT-2 cosine quadrature: equal to the DCT-2 of the
/// original signal for `k ≥ 1`, zero at `k = 0`.
pub fn inverse_fcqt2(quadrature: &[f64]) -> Result<Vec<f64>> {
    fast::dct2_sine_analysis(quadrature)
}

/// Gabor analytic signal via the DFT.
///
/// `z[n] = X[0] + Σ 2X[k] e^{j2πkn/N} (+ X[N/2] e^{jπn} for even N)`, with
/// `X[k] = (1/N) Σ x[n] e^{−j2πkn/N}`. The real part is the input itself.
pub fn gas(x: &Signal) -> AnalyticSignal {
    let imag = hilbert(x.samples());
    AnalyticSignal::from_parts(x.samples().to_vec(), imag, x.fs(), AnalyticKind::Gas)
}

/// Imaginary part of the Gabor analytic signal (the discrete Hilbert transform).
pub fn hilbert(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    if n == 0 {
        return Vec::new();
    }
    let mut buf: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fast::fft(&mut buf);
    let inv_n = 1.0 / n as f64;
    for (k, v) in buf.iter_mut().enumerate() {
        let weight = if k == 0 {
            1.0
        } else if n.is_multiple_of(2) {
            match k.cmp(&(n / 2)) {
                std::cmp::Ordering::Less => 2.0,
                std::cmp::Ordering::Equal => 1.0,
                std::cmp::Ordering::Greater => 0.0,
            }
        } else if k <= (n - 1) / 2 {
            2.0
        } else {
            0.0
        };
        *v *= weight * inv_n;
    }
    fast::ifft(&mut buf);
    buf.into_iter().map(|z| z.im).collect()
}

/// Subtracts the sample mean.
pub fn demean(x: &Signal) -> Signal {
    let mean = x.samples().iter().sum::<f64>() / x.len() as f64;
    let samples = x.samples().iter().map(|v| v - mean).collect();
    x.with_samples(samples)
        .expect("demeaning preserves length and finiteness")
}
