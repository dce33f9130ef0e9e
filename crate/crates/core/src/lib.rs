//! Fourier quadrature transforms and the DCT-based Fourier decomposition method.
//!
//! The crate is organised bottom-up:
//!
//! - [`transforms`]: the eight DCTs, eight DSTs and sixteen auxiliary sine/cosine
//!   matrices, plus an FFT-backed DCT-2 pair in [`transforms::fast`].
//! - [`quadrature`]: cosine/sine quadrature transforms (FCQT/FSQT), the Fourier-Singh
//!   analytic signal (FSAS) and the Gabor analytic signal (GAS).
//! - [`instfreq`]: polar form, finite-difference instantaneous frequency.
//! - [`fdm`]: zero-phase DCT filter banks, band plans, time-frequency-energy grids,
//!   band removal and trend extraction.
//! - [`image2d`]: separable 2D DCT-2 and the 2D analytic image.

pub mod error;
pub mod fdm;
pub mod image2d;
pub mod instfreq;
pub mod quadrature;
pub mod signal;
pub mod transforms;

pub use error::{Error, Result};
pub use signal::Signal;
