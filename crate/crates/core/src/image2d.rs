//! Separable 2D DCT-2 and the 2D analytic image.
//!
//! The quadrature image uses the sine basis along the first (row, `m`/`k`) axis and
//! the cosine basis along the second (column, `n`/`l`) axis. Transpose the input
//! to get the other orientation.

use crate::error::{Error, Result};
use crate::transforms::fast;

/// Dense row-major `rows × cols` real matrix. Used for images and for their
/// coefficient grids.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Image {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows < 2 || cols < 2 {
            return Err(Error::size(format!(
                "image dimensions must be at least 2x2, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::size(format!(
                "{rows}x{cols} image needs {} values, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(i) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::size(format!(
                "ragged rows: expected {cols} columns, found {}",
                bad.len()
            )));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![0.0; rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, m: usize, n: usize) -> f64 {
        self.data[m * self.cols + n]
    }

    pub fn row(&self, m: usize) -> &[f64] {
        &self.data[m * self.cols..(m + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.cols).map(<[f64]>::to_vec).collect()
    }

    fn map_rows(&self, f: impl Fn(&[f64]) -> Result<Vec<f64>>) -> Result<Self> {
        let mut data = Vec::with_capacity(self.data.len());
        for row in self.data.chunks(self.cols) {
            data.extend(f(row)?);
        }
        Ok(Self {
            data,
            ..self.clone()
        })
    }

    fn map_cols(&self, f: impl Fn(&[f64]) -> Result<Vec<f64>>) -> Result<Self> {
        let mut data = vec![0.0; self.data.len()];
        let mut column = vec![0.0; self.rows];
        for n in 0..self.cols {
            for (m, c) in column.iter_mut().enumerate() {
                *c = self.data[m * self.cols + n];
            }
            for (m, v) in f(&column)?.into_iter().enumerate() {
                data[m * self.cols + n] = v;
            }
        }
        Ok(Self {
            data,
            ..self.clone()
        })
    }
}

/// Image whose real part is the source and whose imaginary part is its quadrature.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticImage {
    pub real: Image,
    pub imag: Image,
}

/// 2D DCT-2 (rows, then columns).
pub fn dct2d(img: &Image) -> Image {
    img.map_rows(fast::fast_dct2)
        .and_then(|r| r.map_cols(fast::fast_dct2))
        .expect("dimensions validated on construction")
}

pub fn idct2d(coeffs: &Image) -> Image {
    coeffs
        .map_cols(fast::fast_idct2)
        .and_then(|r| r.map_rows(fast::fast_idct2))
        .expect("dimensions validated on construction")
}

/// `x̃[m,n] = (2/√(MN)) ΣΣ σ_k σ_l X[k,l] sin(πk(2m+1)/2M) cos(πl(2n+1)/2N)`.
pub fn fsas2d(img: &Image) -> AnalyticImage {
    let coeffs = dct2d(img);
    let imag = coeffs
        .map_rows(fast::fast_idct2)
        .and_then(|r| r.map_cols(|col| fast::dct2_analytic_synthesis(col).map(|(_, im)| im)))
        .expect("dimensions validated on construction");
    AnalyticImage {
        real: img.clone(),
        imag,
    }
}

/// `X̃[k,l]` from a quadrature image: equals the 2D DCT-2 for `k ≥ 1`, zero at `k = 0`.
pub fn recover_coeffs(quadrature: &Image) -> Image {
    quadrature
        .map_rows(fast::fast_dct2)
        .and_then(|r| r.map_cols(fast::dct2_sine_analysis))
        .expect("dimensions validated on construction")
}
