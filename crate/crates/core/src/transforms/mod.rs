//! Dense DCT/DST matrices and their auxiliary quadrature partners.
//!
//! Every matrix is stored with entry `(n, k)` where `n` indexes time and `k`
//! indexes the coefficient, so column `k` is the `k`-th basis vector. With that
//! layout the analysis step is `X = Mᵀ x` ([`TransformMatrix::forward`]) and
//! synthesis is `x = M X` ([`TransformMatrix::inverse`], [`TransformMatrix::synthesize`]).
//!
//! Constants for a nominal length `N`:
//! `a = √(2/(N−1))`, `b = √(2/N)`, `c = 2/√(2N−1)`, `d = 2/√(2N+1)`,
//! `γ_n = 1/√2` at `n ∈ {0, N−1}`, `σ_n = 1/√2` at `n = 0`, `ε_n = 1/√2` at `n = N−1`.
//!
//! DST-1 and DST-5 live on indices `1…N−1`. The auxiliary matrices are evaluated on
//! the index grid of the transform they pair with; where their formula is
//! identically zero along an edge index, that index is dropped, which gives the
//! seven order-`(N−1)` matrices `S̃1, S̃2, S̃3, S̃5, S̃7, C̃1, C̃5`.
//!
//! `S̃8` uses `d` and `2N+1` while `C̃8` uses `c` and `2N−1` with `ε` factors; both
//! are kept as defined even though they are not mirror images of each other.

pub mod fast;

use std::collections::HashMap;
use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

pub use fast::{dct2_analytic_synthesis, dct2_sine_analysis, fast_dct2, fast_idct2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Dct,
    Dst,
    /// `S̃ᵢ`, the sine partner of `Cᵢ`.
    AuxSine,
    /// `C̃ᵢ`, the cosine partner of `Sᵢ`.
    AuxCosine,
}

impl Family {
    fn prefix(self) -> &'static str {
        match self {
            Family::Dct => "dct",
            Family::Dst => "dst",
            Family::AuxSine => "aux-sine",
            Family::AuxCosine => "aux-cosine",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransformVariant {
    family: Family,
    index: u8,
}

impl TransformVariant {
    pub fn new(family: Family, index: u8) -> Result<Self> {
        if !(1..=8).contains(&index) {
            return Err(Error::domain(format!(
                "transform index must be in 1..=8, got {index}"
            )));
        }
        Ok(Self { family, index })
    }

    pub fn dct(index: u8) -> Result<Self> {
        Self::new(Family::Dct, index)
    }

    pub fn dst(index: u8) -> Result<Self> {
        Self::new(Family::Dst, index)
    }

    pub fn aux_sine(index: u8) -> Result<Self> {
        Self::new(Family::AuxSine, index)
    }

    pub fn aux_cosine(index: u8) -> Result<Self> {
        Self::new(Family::AuxCosine, index)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> u8 {
        self.index
    }

    /// DCTs and DSTs are orthonormal; the auxiliary matrices are not.
    pub fn is_orthogonal(&self) -> bool {
        matches!(self.family, Family::Dct | Family::Dst)
    }

    /// Row (time) and column (coefficient) index spans for nominal length `n`.
    pub fn spans(&self, n: usize) -> (IndexSpan, IndexSpan) {
        let full = IndexSpan::new(0, n);
        let inner = IndexSpan::new(1, n.saturating_sub(1));
        match (self.family, self.index) {
            (Family::Dst, 1 | 5) => (inner, inner),
            (Family::AuxCosine, 1 | 5) => (inner, inner),
            (Family::AuxSine, 1 | 5) => (inner, inner),
            (Family::AuxSine, 2) => (full, inner),
            (Family::AuxSine, 3 | 7) => (inner, full),
            _ => (full, full),
        }
    }

    /// Smallest nominal length accepted by [`build_matrix`].
    pub fn min_len(&self) -> usize {
        let (rows, cols) = self.spans(8);
        if rows.len < 8 || cols.len < 8 {
            3
        } else {
            2
        }
    }

    /// Every one of the 32 variants, DCTs first.
    pub fn all() -> impl Iterator<Item = TransformVariant> {
        [Family::Dct, Family::Dst, Family::AuxSine, Family::AuxCosine]
            .into_iter()
            .flat_map(|family| (1..=8).map(move |index| TransformVariant { family, index }))
    }
}

impl fmt::Display for TransformVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.prefix(), self.index)
    }
}

impl FromStr for TransformVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        for family in [Family::AuxCosine, Family::AuxSine, Family::Dct, Family::Dst] {
            if let Some(rest) = lower.strip_prefix(family.prefix()) {
                let index = rest
                    .trim_start_matches('-')
                    .parse::<u8>()
                    .map_err(|_| Error::domain(format!("unknown transform variant `{s}`")))?;
                return TransformVariant::new(family, index);
            }
        }
        Err(Error::domain(format!("unknown transform variant `{s}`")))
    }
}

/// A contiguous run of absolute indices `start..start + len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexSpan {
    pub start: usize,
    pub len: usize,
}

impl IndexSpan {
    pub const fn new(start: usize, len: usize) -> Self {
        Self { start, len }
    }

    pub fn end(&self) -> usize {
        self.start + self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= self.start && i < self.end()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransformMatrix {
    variant: TransformVariant,
    n: usize,
    rows: IndexSpan,
    cols: IndexSpan,
    /// Row-major, `rows.len × cols.len`.
    entries: Vec<f64>,
}

impl TransformMatrix {
    pub fn variant(&self) -> TransformVariant {
        self.variant
    }

    /// Nominal signal length the matrix was built for.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.rows.len.min(self.cols.len)
    }

    pub fn rows(&self) -> IndexSpan {
        self.rows
    }

    pub fn cols(&self) -> IndexSpan {
        self.cols
    }

    /// Entry at absolute indices; zero outside the stored spans.
    pub fn get(&self, n: usize, k: usize) -> f64 {
        if self.rows.contains(n) && self.cols.contains(k) {
            self.entries[(n - self.rows.start) * self.cols.len + (k - self.cols.start)]
        } else {
            0.0
        }
    }

    pub fn row(&self, n: usize) -> &[f64] {
        let r = n - self.rows.start;
        &self.entries[r * self.cols.len..(r + 1) * self.cols.len]
    }

    /// Analysis `X = Mᵀ x`.
    ///
    /// `x` has the nominal length `N`. For matrices living on `1…N−1` the sample
    /// `x[0]` is not part of the transform and is ignored. The result has one
    /// value per column, i.e. coefficient indices `cols().start ..`.
    pub fn forward(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::size(format!(
                "{} of length {} applied to {} samples",
                self.variant,
                self.n,
                x.len()
            )));
        }
        let mut out = vec![0.0; self.cols.len];
        for (r, &xn) in x[self.rows.start..self.rows.end()].iter().enumerate() {
            let row = &self.entries[r * self.cols.len..(r + 1) * self.cols.len];
            for (o, &m) in out.iter_mut().zip(row) {
                *o += m * xn;
            }
        }
        Ok(out)
    }

    /// Synthesis `x = M X` for the orthonormal families.
    ///
    /// `coeffs` must hold exactly `order()` values. The output has the nominal
    /// length `N`; samples outside the row span (`x[0]` for DST-1/DST-5) are zero.
    pub fn inverse(&self, coeffs: &[f64]) -> Result<Vec<f64>> {
        if !self.variant.is_orthogonal() {
            return Err(Error::domain(format!(
                "{} is not orthogonal and has no transpose inverse",
                self.variant
            )));
        }
        if coeffs.len() != self.cols.len {
            return Err(Error::size(format!(
                "{} inverse expects {} coefficients, got {}",
                self.variant,
                self.cols.len,
                coeffs.len()
            )));
        }
        Ok(self.synthesize(coeffs, self.cols.start))
    }

    /// `y[n] = Σ_k M[n,k] c[k]` where `coeffs[j]` is coefficient index `first + j`.
    ///
    /// Coefficients outside the column span contribute nothing. Output length is `N`.
    pub fn synthesize(&self, coeffs: &[f64], first: usize) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        let lo = self.cols.start.max(first);
        let hi = self.cols.end().min(first + coeffs.len());
        if lo >= hi {
            return out;
        }
        for (r, y) in out[self.rows.start..self.rows.end()].iter_mut().enumerate() {
            let row = &self.entries[r * self.cols.len..(r + 1) * self.cols.len];
            *y = (lo..hi)
                .map(|k| row[k - self.cols.start] * coeffs[k - first])
                .sum();
        }
        out
    }

    /// `max |M Mᵀ − I|` over the stored block.
    pub fn orthogonality_defect(&self) -> f64 {
        let (r, c) = (self.rows.len, self.cols.len);
        let mut worst: f64 = 0.0;
        for i in 0..r {
            for j in 0..r {
                let dot: f64 = (0..c)
                    .map(|k| self.entries[i * c + k] * self.entries[j * c + k])
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// Evaluates the matrix for `variant` at nominal length `n`.
pub fn build_matrix(variant: TransformVariant, n: usize) -> Result<TransformMatrix> {
    if n < variant.min_len() {
        return Err(Error::size(format!(
            "{variant} needs N >= {}, got {n}",
            variant.min_len()
        )));
    }
    let (rows, cols) = variant.spans(n);
    let consts = Constants::new(n);
    let mut entries = Vec::with_capacity(rows.len * cols.len);
    for i in rows.start..rows.end() {
        for k in cols.start..cols.end() {
            entries.push(consts.entry(variant, i, k));
        }
    }
    Ok(TransformMatrix {
        variant,
        n,
        rows,
        cols,
        entries,
    })
}

type Cache = RwLock<HashMap<(TransformVariant, usize), Arc<TransformMatrix>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Cached [`build_matrix`]. Concurrent first requests may both build; the
/// first one inserted wins and all callers see identical entries.
pub fn matrix(variant: TransformVariant, n: usize) -> Result<Arc<TransformMatrix>> {
    if let Some(m) = cache()
        .read()
        .unwrap_or_else(|e| e.into_inner())
        .get(&(variant, n))
    {
        return Ok(Arc::clone(m));
    }
    let built = Arc::new(build_matrix(variant, n)?);
    let mut guard = cache().write().unwrap_or_else(|e| e.into_inner());
    Ok(Arc::clone(guard.entry((variant, n)).or_insert(built)))
}

struct Constants {
    n: usize,
    nf: f64,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl Constants {
    fn new(n: usize) -> Self {
        let nf = n as f64;
        Self {
            n,
            nf,
            a: (2.0 / (nf - 1.0)).sqrt(),
            b: (2.0 / nf).sqrt(),
            c: 2.0 / (2.0 * nf - 1.0).sqrt(),
            d: 2.0 / (2.0 * nf + 1.0).sqrt(),
        }
    }

    fn gamma(&self, i: usize) -> f64 {
        if i == 0 || i == self.n - 1 {
            FRAC_1_SQRT_2
        } else {
            1.0
        }
    }

    fn sigma(&self, i: usize) -> f64 {
        if i == 0 {
            FRAC_1_SQRT_2
        } else {
            1.0
        }
    }

    fn eps(&self, i: usize) -> f64 {
        if i == self.n - 1 {
            FRAC_1_SQRT_2
        } else {
            1.0
        }
    }

    fn entry(&self, v: TransformVariant, n: usize, k: usize) -> f64 {
        let (nf, kf, big) = (n as f64, k as f64, self.nf);
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let odd = 2.0 * big - 1.0;
        let even = 2.0 * big + 1.0;
        let half = |i: f64| i + 0.5;
        match (v.family, v.index) {
            (Family::Dct, 1) => a * self.gamma(n) * self.gamma(k) * (nf * kf * PI / (big - 1.0)).cos(),
            (Family::Dct, 2) => b * self.sigma(k) * (half(nf) * kf * PI / big).cos(),
            (Family::Dct, 3) => b * self.sigma(n) * (half(kf) * nf * PI / big).cos(),
            (Family::Dct, 4) => b * (half(nf) * half(kf) * PI / big).cos(),
            (Family::Dct, 5) => c * self.sigma(n) * self.sigma(k) * (nf * kf * 2.0 * PI / odd).cos(),
            (Family::Dct, 6) => c * self.eps(n) * self.sigma(k) * (half(nf) * kf * 2.0 * PI / odd).cos(),
            (Family::Dct, 7) => c * self.eps(k) * self.sigma(n) * (half(kf) * nf * 2.0 * PI / odd).cos(),
            (Family::Dct, 8) => d * (half(nf) * half(kf) * 2.0 * PI / even).cos(),

            (Family::Dst, 1) => b * (nf * kf * PI / big).sin(),
            (Family::Dst, 2) => b * self.eps(k) * (half(nf) * (kf + 1.0) * PI / big).sin(),
            (Family::Dst, 3) => b * self.eps(n) * (half(kf) * (nf + 1.0) * PI / big).sin(),
            (Family::Dst, 4) => b * (half(nf) * half(kf) * PI / big).sin(),
            (Family::Dst, 5) => c * (nf * kf * 2.0 * PI / odd).sin(),
            // Orthonormal DST-6/DST-7 pair on 2N+1; transposes of each other.
            (Family::Dst, 6) => d * (half(nf) * (kf + 1.0) * 2.0 * PI / even).sin(),
            (Family::Dst, 7) => d * (half(kf) * (nf + 1.0) * 2.0 * PI / even).sin(),
            (Family::Dst, 8) => c * self.eps(n) * self.eps(k) * (half(nf) * half(kf) * 2.0 * PI / odd).sin(),

            (Family::AuxSine, 1) => a * self.gamma(n) * self.gamma(k) * (nf * kf * PI / (big - 1.0)).sin(),
            (Family::AuxSine, 2) => b * self.sigma(k) * (half(nf) * kf * PI / big).sin(),
            (Family::AuxSine, 3) => b * self.sigma(n) * (half(kf) * nf * PI / big).sin(),
            (Family::AuxSine, 4) => b * (half(nf) * half(kf) * PI / big).sin(),
            (Family::AuxSine, 5) => c * self.sigma(n) * self.sigma(k) * (nf * kf * 2.0 * PI / odd).sin(),
            (Family::AuxSine, 6) => c * self.eps(n) * self.sigma(k) * (half(nf) * kf * 2.0 * PI / odd).sin(),
            (Family::AuxSine, 7) => c * self.eps(k) * self.sigma(n) * (half(kf) * nf * 2.0 * PI / odd).sin(),
            (Family::AuxSine, 8) => d * (half(nf) * half(kf) * 2.0 * PI / even).sin(),

            (Family::AuxCosine, 1) => b * (nf * kf * PI / big).cos(),
            (Family::AuxCosine, 2) => b * self.eps(k) * (half(nf) * (kf + 1.0) * PI / big).cos(),
            (Family::AuxCosine, 3) => b * self.eps(n) * (half(kf) * (nf + 1.0) * PI / big).cos(),
            (Family::AuxCosine, 4) => b * (half(nf) * half(kf) * PI / big).cos(),
            (Family::AuxCosine, 5) => c * (nf * kf * 2.0 * PI / odd).cos(),
            (Family::AuxCosine, 6) => c * (half(nf) * half(kf) * 2.0 * PI / odd).cos(),
            (Family::AuxCosine, 7) => c * (half(kf) * (nf + 1.0) * 2.0 * PI / odd).cos(),
            (Family::AuxCosine, 8) => c * self.eps(n) * self.eps(k) * (half(nf) * half(kf) * 2.0 * PI / odd).cos(),

            _ => unreachable!("variant index validated at construction"),
        }
    }
}
