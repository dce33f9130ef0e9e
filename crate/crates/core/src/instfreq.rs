//! Instantaneous amplitude, phase and frequency of analytic signals.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quadrature::AnalyticSignal;

/// Relative amplitude below which the phase is pinned to zero.
pub const DEFAULT_AMPLITUDE_FLOOR: f64 = 1e-12;

/// Finite-difference scheme for the phase derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DiffScheme {
    /// `φ[n+1] − φ[n]`
    #[default]
    Ffd,
    /// `φ[n] − φ[n−1]`
    Bfd,
    /// `(φ[n+1] − φ[n−1]) / 2`
    Cfd,
}

impl FromStr for DiffScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ffd" | "forward" => Ok(DiffScheme::Ffd),
            "bfd" | "backward" => Ok(DiffScheme::Bfd),
            "cfd" | "central" => Ok(DiffScheme::Cfd),
            other => Err(Error::domain(format!("unknown difference scheme `{other}`"))),
        }
    }
}

impl fmt::Display for DiffScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiffScheme::Ffd => "ffd",
            DiffScheme::Bfd => "bfd",
            DiffScheme::Cfd => "cfd",
        })
    }
}

/// Amplitude, wrapped phase and phase derivative of an analytic signal.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarTrace {
    pub ia: Vec<f64>,
    /// Radians in `(−π, π]`.
    pub iphase: Vec<f64>,
    /// Radians per sample in `[0, π]`.
    pub ifreq: Vec<f64>,
    pub fs: f64,
}

impl PolarTrace {
    pub fn from_analytic(z: &AnalyticSignal, scheme: DiffScheme) -> Result<Self> {
        let (ia, iphase) = polar(z);
        let ifreq = inst_freq(&iphase, scheme)?;
        Ok(Self {
            ia,
            iphase,
            ifreq,
            fs: z.fs(),
        })
    }

    pub fn freq_hz(&self) -> Vec<f64> {
        to_hz(&self.ifreq, self.fs)
    }
}

/// `(|z|, arg z)` with the default amplitude floor.
pub fn polar(z: &AnalyticSignal) -> (Vec<f64>, Vec<f64>) {
    polar_with_floor(z.real(), z.imag(), DEFAULT_AMPLITUDE_FLOOR)
}

/// `(|z|, arg z)`; the phase is 0 wherever `|z| < rel_floor · max|z|`.
pub fn polar_with_floor(real: &[f64], imag: &[f64], rel_floor: f64) -> (Vec<f64>, Vec<f64>) {
    let ia: Vec<f64> = real.iter().zip(imag).map(|(r, i)| r.hypot(*i)).collect();
    let floor = rel_floor * ia.iter().cloned().fold(0.0, f64::max);
    let iphase = real
        .iter()
        .zip(imag)
        .zip(&ia)
        .map(|((r, i), &a)| if a < floor || a == 0.0 { 0.0 } else { i.atan2(*r) })
        .collect();
    (ia, iphase)
}

fn wrap(d: f64) -> f64 {
    d.sin().atan2(d.cos())
}

fn make_positive(d: f64) -> f64 {
    if d < 0.0 {
        d + PI
    } else {
        d
    }
}

/// Phase derivative in radians/sample.
///
/// Differences are wrapped into `(−π, π]`, then negative values get `+π`. CFD
/// uses one-sided differences at the two endpoints.
pub fn inst_freq(iphase: &[f64], scheme: DiffScheme) -> Result<Vec<f64>> {
    let n = iphase.len();
    if n < 2 {
        return Err(Error::size(format!(
            "instantaneous frequency needs at least 2 phase samples, got {n}"
        )));
    }
    let forward = |i: usize| wrap(iphase[i + 1] - iphase[i]);
    let raw: Vec<f64> = match scheme {
        DiffScheme::Ffd => (0..n)
            .map(|i| if i + 1 < n { forward(i) } else { forward(n - 2) })
            .collect(),
        DiffScheme::Bfd => (0..n)
            .map(|i| if i > 0 { forward(i - 1) } else { forward(0) })
            .collect(),
        DiffScheme::Cfd => (0..n)
            .map(|i| {
                if i == 0 {
                    forward(0)
                } else if i == n - 1 {
                    forward(n - 2)
                } else {
                    wrap(iphase[i + 1] - iphase[i - 1]) / 2.0
                }
            })
            .collect(),
    };
    Ok(raw.into_iter().map(make_positive).collect())
}

/// Radians/sample to Hz.
pub fn to_hz(ifreq: &[f64], fs: f64) -> Vec<f64> {
    ifreq.iter().map(|w| w * fs / (2.0 * PI)).collect()
}
