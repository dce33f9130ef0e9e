//! Fourier decomposition over DCT-2 coefficient bands.
//!
//! A [`BandPlan`] partitions the coefficient indices `1…N−1` into `M` contiguous
//! bands `N_{i−1}+1 … N_i` (with `N_0 = 0`, `N_M = N−1`); the DC coefficient is
//! kept apart. Each band is synthesised back to the time domain through a
//! zero-phase mask, giving the band functions `x_i[n]`. Their analytic
//! counterparts come either from the sine-basis synthesis of the same
//! coefficients ([`Route::Fsas`]) or from the DFT Hilbert transform of `x_i`
//! ([`Route::Gas`]).

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::instfreq::{self, DiffScheme, PolarTrace};
use crate::quadrature::{self, AnalyticKind, AnalyticSignal};
use crate::signal::Signal;
use crate::transforms::fast;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandStrategy {
    Equal,
    /// Widths halve from the top band down; the highest band is the widest.
    Dyadic,
    EqualEnergy,
    Manual,
}

impl FromStr for BandStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "equal" => Ok(BandStrategy::Equal),
            "dyadic" => Ok(BandStrategy::Dyadic),
            "energy" | "equal-energy" | "equalenergy" => Ok(BandStrategy::EqualEnergy),
            "manual" => Ok(BandStrategy::Manual),
            other => Err(Error::domain(format!("unknown band strategy `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandPlan {
    edges: Vec<usize>,
    strategy: BandStrategy,
}

impl BandPlan {
    /// Validates explicit edges `0 = N_0 < N_1 < … < N_M = n − 1`.
    pub fn from_edges(edges: Vec<usize>, n: usize) -> Result<Self> {
        Self::validated(edges, n, BandStrategy::Manual)
    }

    fn validated(edges: Vec<usize>, n: usize, strategy: BandStrategy) -> Result<Self> {
        if edges.len() < 2 {
            return Err(Error::domain("a band plan needs at least one band"));
        }
        if edges[0] != 0 {
            return Err(Error::domain(format!(
                "band edges must start at 0, got {}",
                edges[0]
            )));
        }
        if edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain("band edges must be strictly increasing"));
        }
        let last = *edges.last().expect("len checked");
        if n < 2 || last != n - 1 {
            return Err(Error::size(format!(
                "band edges must end at N-1 = {}, got {last}",
                n.saturating_sub(1)
            )));
        }
        Ok(Self { edges, strategy })
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn strategy(&self) -> BandStrategy {
        self.strategy
    }

    pub fn band_count(&self) -> usize {
        self.edges.len() - 1
    }

    /// Signal length the plan covers.
    pub fn signal_len(&self) -> usize {
        self.edges[self.edges.len() - 1] + 1
    }

    /// Coefficient indices of band `i` (1-based).
    pub fn band(&self, i: usize) -> RangeInclusive<usize> {
        self.edges[i - 1] + 1..=self.edges[i]
    }

    /// Band containing coefficient `k`, or `None` for DC / out of range.
    pub fn band_of(&self, k: usize) -> Option<usize> {
        if k == 0 || k >= self.signal_len() {
            return None;
        }
        Some(self.edges.partition_point(|&e| e < k))
    }

    /// 0/1 weights selecting band `i` (1-based).
    pub fn mask(&self, i: usize) -> Vec<f64> {
        let mut w = vec![0.0; self.signal_len()];
        for k in self.band(i) {
            w[k] = 1.0;
        }
        w
    }
}

/// Builds an `m`-band plan from DCT-2 coefficients `coeffs` (length `N`).
///
/// `Manual` plans carry explicit edges; use [`BandPlan::from_edges`].
pub fn plan_bands(coeffs: &[f64], strategy: BandStrategy, m: usize) -> Result<BandPlan> {
    let n = coeffs.len();
    if m == 0 {
        return Err(Error::domain("band count must be at least 1"));
    }
    if n < m + 1 {
        return Err(Error::size(format!(
            "{m} bands need at least {} samples, got {n}",
            m + 1
        )));
    }
    let top = n - 1;
    let edges = match strategy {
        BandStrategy::Equal => (0..=m).map(|i| i * top / m).collect(),
        BandStrategy::Dyadic => {
            let lowest = u32::try_from(m - 1)
                .ok()
                .and_then(|s| top.checked_shr(s))
                .unwrap_or(0);
            if lowest == 0 {
                return Err(Error::size(format!(
                    "{m} dyadic bands need N-1 >= 2^{}, got N = {n}",
                    m - 1
                )));
            }
            std::iter::once(0)
                .chain((1..=m).map(|i| top >> (m - i)))
                .collect()
        }
        BandStrategy::EqualEnergy => equal_energy_edges(coeffs, m)?,
        BandStrategy::Manual => {
            return Err(Error::domain(
                "manual band plans are built from explicit edges",
            ))
        }
    };
    BandPlan::validated(edges, n, strategy)
}

/// Greedy cumulative scan: boundary `i` is the smallest `k` whose cumulative energy
/// over `1..=k` reaches `i·total/m`, pushed right if needed so every band keeps at
/// least one coefficient.
fn equal_energy_edges(coeffs: &[f64], m: usize) -> Result<Vec<usize>> {
    let top = coeffs.len() - 1;
    let mut cumulative = Vec::with_capacity(coeffs.len());
    let mut acc = 0.0;
    cumulative.push(0.0);
    for c in &coeffs[1..] {
        acc += c * c;
        cumulative.push(acc);
    }
    let total = acc;
    if total.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::Degenerate(
            "equal-energy bands need nonzero energy outside DC".into(),
        ));
    }
    let slack = total * 1e-12;
    let mut edges = vec![0];
    for i in 1..m {
        let target = total * i as f64 / m as f64 - slack;
        let lo = edges[i - 1] + 1;
        let hi = top - (m - i);
        let k = (lo..=hi)
            .find(|&k| cumulative[k] >= target)
            .unwrap_or(hi);
        edges.push(k);
    }
    edges.push(top);
    Ok(edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    #[default]
    Fsas,
    Gas,
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "fsas" => Ok(Route::Fsas),
            "gas" => Ok(Route::Gas),
            other => Err(Error::domain(format!("unknown analytic route `{other}`"))),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Fsas => "fsas",
            Route::Gas => "gas",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    /// `X[0]/√N`, the signal mean.
    pub dc: f64,
    pub fibfs: Vec<Vec<f64>>,
    pub afibfs: Vec<AnalyticSignal>,
    pub route: Route,
    pub plan: BandPlan,
    pub fs: f64,
}

impl Decomposition {
    pub fn band_count(&self) -> usize {
        self.fibfs.len()
    }

    pub fn len(&self) -> usize {
        self.plan.signal_len()
    }

    pub fn is_empty(&self) -> bool {
        self.fibfs.is_empty()
    }

    pub fn dc_term(&self) -> Vec<f64> {
        vec![self.dc; self.len()]
    }

    /// `dc + Σ x_i[n]`.
    pub fn reconstruct(&self) -> Vec<f64> {
        let mut out = self.dc_term();
        for band in &self.fibfs {
            for (o, v) in out.iter_mut().zip(band) {
                *o += v;
            }
        }
        out
    }
}

/// Masked DCT-2 synthesis shared by every filter in this module: returns the
/// real (zero-phase filtered) and sine-quadrature parts.
fn masked_synthesis(coeffs: &[f64], weights: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let masked: Vec<f64> = coeffs.iter().zip(weights).map(|(c, w)| c * w).collect();
    fast::dct2_analytic_synthesis(&masked)
}

fn check_plan(x: &Signal, plan: &BandPlan) -> Result<()> {
    if plan.signal_len() != x.len() {
        return Err(Error::size(format!(
            "band plan covers {} samples, signal has {}",
            plan.signal_len(),
            x.len()
        )));
    }
    Ok(())
}

fn band_component(coeffs: &[f64], plan: &BandPlan, band: usize, route: Route, fs: f64)
    -> Result<(Vec<f64>, AnalyticSignal)>
{
    let (re, im) = masked_synthesis(coeffs, &plan.mask(band))?;
    let imag = match route {
        Route::Fsas => im,
        Route::Gas => quadrature::hilbert(&re),
    };
    let kind = match route {
        Route::Fsas => AnalyticKind::FsasCosine(2),
        Route::Gas => AnalyticKind::Gas,
    };
    let z = AnalyticSignal::from_parts(re.clone(), imag, fs, kind);
    Ok((re, z))
}

/// Splits `x` into one band function per band of `plan`, plus the mean.
///
/// Bands may be synthesised concurrently; the output order always follows the plan.
pub fn decompose(x: &Signal, plan: &BandPlan, route: Route) -> Result<Decomposition> {
    check_plan(x, plan)?;
    let coeffs = fast::fast_dct2(x.samples())?;
    let bands: Vec<usize> = (1..=plan.band_count()).collect();
    let build = |&i: &usize| band_component(&coeffs, plan, i, route, x.fs());
    #[cfg(feature = "parallel")]
    let parts: Vec<_> = bands.par_iter().map(build).collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<_> = bands.iter().map(build).collect::<Result<_>>()?;
    let (fibfs, afibfs) = parts.into_iter().unzip();
    Ok(Decomposition {
        dc: coeffs[0] / (x.len() as f64).sqrt(),
        fibfs,
        afibfs,
        route,
        plan: plan.clone(),
        fs: x.fs(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TfePoint {
    pub n: usize,
    /// 1-based band index.
    pub band: usize,
    pub freq_hz: f64,
    pub energy: f64,
}

/// Time-frequency-energy triplets, ordered by time then band.
#[derive(Debug, Clone, PartialEq)]
pub struct TfeGrid {
    pub points: Vec<TfePoint>,
    pub fs: f64,
}

impl TfeGrid {
    /// Highest-energy point at each time index (lowest band wins ties); `None`
    /// where every band has zero energy.
    pub fn ridge(&self) -> Vec<Option<TfePoint>> {
        let len = self.points.iter().map(|p| p.n + 1).max().unwrap_or(0);
        let mut best: Vec<Option<TfePoint>> = vec![None; len];
        for p in &self.points {
            if p.energy <= 0.0 {
                continue;
            }
            let slot = &mut best[p.n];
            if slot.is_none_or(|b| p.energy > b.energy) {
                *slot = Some(*p);
            }
        }
        best
    }
}

/// `(n, f_i[n], a_i²[n])` for every band and time index.
pub fn tfe(d: &Decomposition, scheme: DiffScheme) -> Result<TfeGrid> {
    let traces = d
        .afibfs
        .iter()
        .map(|z| PolarTrace::from_analytic(z, scheme))
        .collect::<Result<Vec<_>>>()?;
    let hz: Vec<Vec<f64>> = traces
        .iter()
        .map(|t| instfreq::to_hz(&t.ifreq, d.fs))
        .collect();
    let mut points = Vec::with_capacity(d.len() * traces.len());
    for n in 0..d.len() {
        for (b, (trace, f)) in traces.iter().zip(&hz).enumerate() {
            points.push(TfePoint {
                n,
                band: b + 1,
                freq_hz: f[n],
                energy: trace.ia[n] * trace.ia[n],
            });
        }
    }
    Ok(TfeGrid { points, fs: d.fs })
}

/// Zero-phase filtering with arbitrary nonnegative per-coefficient weights.
pub fn zero_phase_filter(x: &Signal, weights: &[f64]) -> Result<Signal> {
    if weights.len() != x.len() {
        return Err(Error::size(format!(
            "{} filter weights for {} samples",
            weights.len(),
            x.len()
        )));
    }
    if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w >= 0.0)) {
        return Err(Error::domain(format!(
            "filter weights must be finite and nonnegative, got {w}"
        )));
    }
    let coeffs = fast::fast_dct2(x.samples())?;
    let (re, _) = masked_synthesis(&coeffs, weights)?;
    x.with_samples(re)
}

/// Output of [`separate_bands`]: the cleaned signal and what was taken out.
#[derive(Debug, Clone, PartialEq)]
pub struct BandRemoval {
    pub cleaned: Signal,
    /// `(band index, component)` in ascending band order.
    pub removed: Vec<(usize, Vec<f64>)>,
    /// The mean, when DC was dropped.
    pub dc: Option<f64>,
}

/// Removes the listed bands (1-based) and optionally DC, keeping the removed parts.
pub fn separate_bands(
    x: &Signal,
    plan: &BandPlan,
    drop: &[usize],
    drop_dc: bool,
) -> Result<BandRemoval> {
    check_plan(x, plan)?;
    let mut bands = drop.to_vec();
    bands.sort_unstable();
    bands.dedup();
    if let Some(&bad) = bands.iter().find(|&&b| b == 0 || b > plan.band_count()) {
        return Err(Error::domain(format!(
            "band index {bad} outside 1..={}",
            plan.band_count()
        )));
    }
    let coeffs = fast::fast_dct2(x.samples())?;
    let mut keep = vec![1.0; x.len()];
    if drop_dc {
        keep[0] = 0.0;
    }
    let mut removed = Vec::with_capacity(bands.len());
    for &b in &bands {
        for k in plan.band(b) {
            keep[k] = 0.0;
        }
        removed.push((b, masked_synthesis(&coeffs, &plan.mask(b))?.0));
    }
    let (cleaned, _) = masked_synthesis(&coeffs, &keep)?;
    Ok(BandRemoval {
        cleaned: x.with_samples(cleaned)?,
        removed,
        dc: drop_dc.then(|| coeffs[0] / (x.len() as f64).sqrt()),
    })
}

/// `x` with the listed bands (and optionally DC) zeroed in the DCT-2 domain.
pub fn remove_bands(x: &Signal, plan: &BandPlan, drop: &[usize], drop_dc: bool) -> Result<Signal> {
    separate_bands(x, plan, drop, drop_dc).map(|r| r.cleaned)
}

/// Splits `x` into a trend holding DC and every DCT-2 component whose period
/// `2N/k` is at least `cutoff_scale_samples`, and the variability `x − trend`.
pub fn trend(x: &Signal, cutoff_scale_samples: f64) -> Result<(Signal, Signal)> {
    if !(cutoff_scale_samples.is_finite() && cutoff_scale_samples > 2.0) {
        return Err(Error::domain(format!(
            "trend cutoff must exceed 2 samples, got {cutoff_scale_samples}"
        )));
    }
    let two_n = 2.0 * x.len() as f64;
    let weights: Vec<f64> = (0..x.len())
        .map(|k| {
            if k == 0 || two_n / k as f64 >= cutoff_scale_samples {
                1.0
            } else {
                0.0
            }
        })
        .collect();
    let smooth = zero_phase_filter(x, &weights)?;
    let variability = x
        .samples()
        .iter()
        .zip(smooth.samples())
        .map(|(a, t)| a - t)
        .collect();
    let variability = x.with_samples(variability)?;
    Ok((smooth, variability))
}
