//! DCT-2 / IDCT-2 through a length-`2N` complex FFT.
//!
//! With `y = [x, reverse(x)]`, `FFT(y)[k] = 2 e^{jπk/2N} Σ_n x[n] cos(πk(2n+1)/2N)`.
//! Synthesis runs the same embedding backwards: the complex sum
//! `Σ_k w_k e^{jπk(2n+1)/2N}` is an inverse FFT of `w_k e^{jπk/2N}` zero-padded
//! to `2N`. Its real part is the IDCT-2 and its imaginary part is the sine-basis
//! synthesis of the same coefficients.

use std::cell::RefCell;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn fft_in_place(buf: &mut [Complex64], inverse: bool) {
    let fft = PLANNER.with(|p| {
        let mut p = p.borrow_mut();
        if inverse {
            p.plan_fft_inverse(buf.len())
        } else {
            p.plan_fft_forward(buf.len())
        }
    });
    fft.process(buf);
}

/// Forward complex FFT, unnormalised.
pub(crate) fn fft(buf: &mut [Complex64]) {
    fft_in_place(buf, false);
}

/// Inverse complex FFT, unnormalised.
pub(crate) fn ifft(buf: &mut [Complex64]) {
    fft_in_place(buf, true);
}

fn check_len(len: usize) -> Result<()> {
    if len < 2 {
        return Err(Error::size(format!("DCT-2 needs at least 2 values, got {len}")));
    }
    Ok(())
}

fn sigma(k: usize) -> f64 {
    if k == 0 {
        FRAC_1_SQRT_2
    } else {
        1.0
    }
}

/// Orthonormal DCT-2: `X[k] = √(2/N) σ_k Σ_n x[n] cos(πk(2n+1)/2N)`.
pub fn fast_dct2(x: &[f64]) -> Result<Vec<f64>> {
    check_len(x.len())?;
    let n = x.len();
    let mut buf: Vec<Complex64> = x
        .iter()
        .chain(x.iter().rev())
        .map(|&v| Complex64::new(v, 0.0))
        .collect();
    fft(&mut buf);
    let scale = (2.0 / n as f64).sqrt();
    Ok((0..n)
        .map(|k| {
            let twiddle = Complex64::from_polar(1.0, -PI * k as f64 / (2 * n) as f64);
            0.5 * (twiddle * buf[k]).re * scale * sigma(k)
        })
        .collect())
}

/// `Σ_k √(2/N) σ_k X[k] e^{jπk(2n+1)/2N}` for `n = 0…N−1`, returned as (real, imag).
///
/// The real part is the IDCT-2 of `coeffs`; the imaginary part is the sine-basis
/// synthesis of the same coefficients (the DCT-2 quadrature).
pub fn dct2_analytic_synthesis(coeffs: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    check_len(coeffs.len())?;
    let n = coeffs.len();
    let scale = (2.0 / n as f64).sqrt();
    let mut buf = vec![Complex64::new(0.0, 0.0); 2 * n];
    for (k, (slot, &c)) in buf.iter_mut().zip(coeffs).enumerate() {
        let w = scale * sigma(k) * c;
        *slot = Complex64::from_polar(w, PI * k as f64 / (2 * n) as f64);
    }
    ifft(&mut buf);
    Ok(buf[..n].iter().map(|z| (z.re, z.im)).unzip())
}

/// Orthonormal IDCT-2, the inverse of [`fast_dct2`].
pub fn fast_idct2(coeffs: &[f64]) -> Result<Vec<f64>> {
    dct2_analytic_synthesis(coeffs).map(|(re, _)| re)
}

/// `√(2/N) σ_k Σ_n y[n] sin(πk(2n+1)/2N)` for `k = 0…N−1`.
///
/// Recovers DCT-2 coefficients `k ≥ 1` from a DCT-2 quadrature signal; the `k = 0`
/// output is always zero.
pub fn dct2_sine_analysis(y: &[f64]) -> Result<Vec<f64>> {
    check_len(y.len())?;
    let n = y.len();
    let mut buf = vec![Complex64::new(0.0, 0.0); 2 * n];
    for (slot, &v) in buf.iter_mut().zip(y) {
        slot.re = v;
    }
    fft(&mut buf);
    let scale = (2.0 / n as f64).sqrt();
    Ok((0..n)
        .map(|k| {
            if k == 0 {
                return 0.0;
            }
            // Σ y e^{-jπk(2n+1)/2N}; the sine sum is minus its imaginary part.
            let twiddle = Complex64::from_polar(1.0, -PI * k as f64 / (2 * n) as f64);
            -(twiddle * buf[k]).im * scale
        })
        .collect())
}
