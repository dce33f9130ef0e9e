//! Browser bindings for the demo page in `www/`.

use std::f64::consts::PI;

use fqt_core::fdm::{self, BandStrategy, Route};
use fqt_core::instfreq::{DiffScheme, PolarTrace};
use fqt_core::quadrature::{self, QuadratureFamily};
use fqt_core::transforms::fast_dct2;
use fqt_core::Signal;
use wasm_bindgen::prelude::*;

type Result<T> = std::result::Result<T, String>;

fn signal(samples: &[f64], fs: f64) -> Result<Signal> {
    Signal::new(samples.to_vec(), fs).map_err(|e| e.to_string())
}

pub fn make_demo_signal(kind: &str, n: usize, fs: f64) -> Result<Vec<f64>> {
    if n < 2 || fs.is_nan() || fs <= 0.0 {
        return Err("need at least 2 samples and a positive rate".into());
    }
    let t = |i: usize| i as f64 / fs;
    let dur = n as f64 / fs;
    let nyq = fs / 2.0;
    Ok(match kind {
        "impulse" => (0..n).map(|i| if i == (n - 1) / 2 { 1.0 } else { 0.0 }).collect(),
        "chirp" => {
            let (f0, f1) = (0.005 * fs, 0.1 * fs);
            let rate = (f1 - f0) / dur;
            (0..n)
                .map(|i| (2.0 * PI * (f0 * t(i) + 0.5 * rate * t(i) * t(i))).cos())
                .collect()
        }
        "two-tone" => (0..n)
            .map(|i| {
                let env = 0.5 + 0.5 * (PI * t(i) / dur).sin();
                (2.0 * PI * 0.05 * nyq * t(i)).sin() + env * (2.0 * PI * 0.4 * nyq * t(i)).cos()
            })
            .collect(),
        "drift" => (0..n)
            .map(|i| {
                let pulse_at = (t(i) / 0.8).round() * 0.8;
                (-0.5 * ((t(i) - pulse_at) / 0.012).powi(2)).exp()
                    + 0.8 * (2.0 * PI * 0.3 * t(i)).cos()
                    + 0.3 * (2.0 * PI * 0.28 * nyq * t(i)).sin()
            })
            .collect(),
        other => return Err(format!("unknown demo signal `{other}`")),
    })
}

pub fn inst_freq(samples: &[f64], fs: f64, kind: &str) -> Result<Vec<f64>> {
    let x = signal(samples, fs)?;
    let z = match kind {
        "gas" => quadrature::gas(&x),
        "fsas" => quadrature::fsas(&x, QuadratureFamily::Cosine, 2).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown analytic kind `{other}`")),
    };
    let trace = PolarTrace::from_analytic(&z, DiffScheme::Cfd).map_err(|e| e.to_string())?;
    Ok(trace.freq_hz())
}

/// Band functions concatenated band after band (`bands × N` values).
pub fn split_bands(samples: &[f64], fs: f64, strategy: &str, bands: usize) -> Result<Vec<f64>> {
    let x = signal(samples, fs)?;
    let strategy: BandStrategy = strategy.parse().map_err(|e: fqt_core::Error| e.to_string())?;
    let coeffs = fast_dct2(x.samples()).map_err(|e| e.to_string())?;
    let plan = fdm::plan_bands(&coeffs, strategy, bands).map_err(|e| e.to_string())?;
    let d = fdm::decompose(&x, &plan, Route::Fsas).map_err(|e| e.to_string())?;
    Ok(d.fibfs.concat())
}

/// Frequency of the highest-energy band at each sample (NaN where all bands are silent).
pub fn ridge(samples: &[f64], fs: f64, bands: usize) -> Result<Vec<f64>> {
    let x = signal(samples, fs)?;
    let coeffs = fast_dct2(x.samples()).map_err(|e| e.to_string())?;
    let plan = fdm::plan_bands(&coeffs, BandStrategy::Dyadic, bands).map_err(|e| e.to_string())?;
    let d = fdm::decompose(&x, &plan, Route::Fsas).map_err(|e| e.to_string())?;
    let grid = fdm::tfe(&d, DiffScheme::Ffd).map_err(|e| e.to_string())?;
    Ok(grid
        .ridge()
        .into_iter()
        .map(|p| p.map_or(f64::NAN, |p| p.freq_hz))
        .collect())
}

#[wasm_bindgen]
pub fn demo_signal(kind: &str, n: usize, fs: f64) -> std::result::Result<Vec<f64>, JsError> {
    make_demo_signal(kind, n, fs).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn instantaneous_frequency(samples: &[f64], fs: f64, kind: &str) -> std::result::Result<Vec<f64>, JsError> {
    inst_freq(samples, fs, kind).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn band_split(samples: &[f64], fs: f64, strategy: &str, bands: usize) -> std::result::Result<Vec<f64>, JsError> {
    split_bands(samples, fs, strategy, bands).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn tfe_ridge(samples: &[f64], fs: f64, bands: usize) -> std::result::Result<Vec<f64>, JsError> {
    ridge(samples, fs, bands).map_err(|e| JsError::new(&e))
}
