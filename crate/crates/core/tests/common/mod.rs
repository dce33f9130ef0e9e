//! Test-only oracles. Nothing here calls into the FFT paths of the crate.
#![allow(dead_code)]

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn max_abs(a: &[f64]) -> f64 {
    a.iter().map(|v| v.abs()).fold(0.0, f64::max)
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn sigma(k: usize) -> f64 {
    if k == 0 {
        std::f64::consts::FRAC_1_SQRT_2
    } else {
        1.0
    }
}

/// Direct O(N²) DCT-2 from its defining sum.
pub fn dct2_direct(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let b = (2.0 / n as f64).sqrt();
    (0..n)
        .map(|k| {
            b * sigma(k)
                * x.iter()
                    .enumerate()
                    .map(|(i, v)| v * (PI * k as f64 * (2 * i + 1) as f64 / (2 * n) as f64).cos())
                    .sum::<f64>()
        })
        .collect()
}

/// `Σ_k √(2/N) σ_k X[k] e^{jπk(2n+1)/2N}` evaluated directly for `n in 0..len`.
pub fn dct2_exponential_sum(coeffs: &[f64], len: usize) -> (Vec<f64>, Vec<f64>) {
    let n = coeffs.len();
    let b = (2.0 / n as f64).sqrt();
    (0..len)
        .map(|i| {
            coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
                let w = b * sigma(k) * c;
                let th = PI * k as f64 * (2 * i + 1) as f64 / (2 * n) as f64;
                (re + w * th.cos(), im + w * th.sin())
            })
        })
        .unzip()
}

/// Brute-force DFT magnitudes `|Σ z[n] e^{-j2πkn/N}|`.
pub fn dft_magnitudes(re: &[f64], im: &[f64]) -> Vec<f64> {
    let n = re.len();
    (0..n)
        .map(|k| {
            let (mut sr, mut si) = (0.0, 0.0);
            for i in 0..n {
                let th = -2.0 * PI * ((k * i) % n) as f64 / n as f64;
                let (c, s) = (th.cos(), th.sin());
                sr += re[i] * c - im[i] * s;
                si += re[i] * s + im[i] * c;
            }
            sr.hypot(si)
        })
        .collect()
}

/// Removes the DC and (for even N) Nyquist DFT components by projection.
pub fn strip_dc_and_nyquist(x: &mut [f64]) {
    let n = x.len();
    let mean = x.iter().sum::<f64>() / n as f64;
    x.iter_mut().for_each(|v| *v -= mean);
    if n.is_multiple_of(2) {
        let alt = x
            .iter()
            .enumerate()
            .map(|(i, v)| if i % 2 == 0 { *v } else { -*v })
            .sum::<f64>()
            / n as f64;
        x.iter_mut()
            .enumerate()
            .for_each(|(i, v)| *v -= if i % 2 == 0 { alt } else { -alt });
    }
}

/// Largest deviation from the cosine, sine and mixed basis inner-product
/// identities over all `k, m < n`. Mixed sums must vanish when `m + k` is even and
/// split into the two half sums over `m + k` and `m − k` when it is odd.
pub fn inner_product_identity_error(n: usize) -> f64 {
    let nf = n as f64;
    let arg = |k: i64, i: usize| PI * k as f64 * (2 * i + 1) as f64 / (2.0 * nf);
    let sum = |f: &dyn Fn(usize) -> f64| (0..n).map(f).sum::<f64>();
    let half_sine_sum = |p: i64| 0.5 * sum(&|i| arg(p, i).sin());
    let mut worst: f64 = 0.0;
    for k in 0..n as i64 {
        for m in 0..n as i64 {
            let cc = sum(&|i| arg(k, i).cos() * arg(m, i).cos());
            let cc_want = match (k, m) {
                (0, 0) => nf,
                _ if k == m => nf / 2.0,
                _ => 0.0,
            };
            let ss = sum(&|i| arg(k, i).sin() * arg(m, i).sin());
            let ss_want = if k == m && k != 0 { nf / 2.0 } else { 0.0 };
            let cs = sum(&|i| arg(k, i).cos() * arg(m, i).sin());
            let cs_want = if (m + k) % 2 == 0 {
                0.0
            } else {
                half_sine_sum(m + k) + half_sine_sum(m - k)
            };
            worst = worst
                .max((cc - cc_want).abs())
                .max((ss - ss_want).abs())
                .max((cs - cs_want).abs());
        }
    }
    worst
}
