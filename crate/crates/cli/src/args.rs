use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "fqt", version, about = "Fourier quadrature transforms and Fourier decomposition of sampled signals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Forward transform with one of the DCT/DST matrices (k,value rows)
    Transform {
        #[command(flatten)]
        io: SignalIo,
        /// dct1..dct8 or dst1..dst8
        #[arg(long, default_value = "dct2")]
        variant: String,
    },
    /// Analytic signal with amplitude, phase and instantaneous frequency
    Analytic {
        #[command(flatten)]
        io: SignalIo,
        /// gas, fsasN (cosine family) or fsas-sN (sine family), N in 1..=8
        #[arg(long, default_value = "fsas2")]
        kind: String,
        #[arg(long, default_value = "ffd")]
        scheme: String,
    },
    /// Band functions of the DCT-2 filter bank, one column per band
    Decompose {
        #[command(flatten)]
        io: SignalIo,
        #[command(flatten)]
        plan: PlanArgs,
        #[arg(long, default_value = "fsas")]
        route: String,
    },
    /// Time-frequency-energy triplets (n, f_hz, energy)
    Tfe {
        #[command(flatten)]
        io: SignalIo,
        #[command(flatten)]
        plan: PlanArgs,
        #[arg(long, default_value = "fsas")]
        route: String,
        #[arg(long, default_value = "ffd")]
        scheme: String,
        /// Only the highest-energy point per time index
        #[arg(long)]
        ridge: bool,
    },
    /// Remove bands; writes the cleaned signal and each removed band
    Denoise {
        #[command(flatten)]
        io: SignalIo,
        #[command(flatten)]
        plan: PlanArgs,
        /// Band indices to drop (1-based), e.g. 1,3
        #[arg(long, value_delimiter = ',', required = true)]
        drop: Vec<usize>,
        /// Also remove the mean
        #[arg(long)]
        drop_dc: bool,
    },
    /// Trend (periods of at least CUTOFF samples) and variability
    Trend {
        #[command(flatten)]
        io: SignalIo,
        /// Shortest period kept in the trend, in samples (> 2)
        #[arg(long)]
        cutoff: f64,
    },
    /// 2D analytic image of a row-per-line matrix; writes the quadrature part
    ImageFsas {
        input: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct SignalIo {
    /// One value per line, or time,value columns
    pub input: PathBuf,
    /// Sampling rate in Hz (required for single-column input)
    #[arg(long)]
    pub fs: Option<f64>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct PlanArgs {
    /// equal, dyadic, energy or manual
    #[arg(long, default_value = "dyadic")]
    pub strategy: String,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    pub bands: u64,
    /// Band edges for the manual strategy, e.g. 0,10,99
    #[arg(long, value_delimiter = ',')]
    pub edges: Vec<usize>,
}
