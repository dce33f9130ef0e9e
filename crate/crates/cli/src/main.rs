mod args;
mod error;
mod input;
mod table;

use std::process::ExitCode;
use std::str::FromStr;

use clap::Parser;
use fqt_core::fdm::{self, BandPlan, BandStrategy, Route};
use fqt_core::image2d;
use fqt_core::instfreq::{DiffScheme, PolarTrace};
use fqt_core::quadrature::{self, AnalyticSignal, QuadratureFamily};
use fqt_core::transforms::{self, TransformVariant};
use fqt_core::Signal;

use args::{Cli, Command, PlanArgs};
use error::CliError;
use table::{Cell, Output, Table};

fn option<T: FromStr>(name: &str, value: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

enum Kind {
    Gas,
    Fsas(QuadratureFamily, u8),
}

fn parse_kind(s: &str) -> Result<Kind, CliError> {
    let s = s.trim().to_ascii_lowercase();
    if s == "gas" {
        return Ok(Kind::Gas);
    }
    let (family, digits) = if let Some(d) = s.strip_prefix("fsas-s") {
        (QuadratureFamily::Sine, d)
    } else if let Some(d) = s.strip_prefix("fsas-c") {
        (QuadratureFamily::Cosine, d)
    } else if let Some(d) = s.strip_prefix("fsas") {
        (QuadratureFamily::Cosine, d)
    } else {
        return Err(CliError::Usage(format!("--kind: unknown analytic kind `{s}`")));
    };
    match digits.parse::<u8>() {
        Ok(v) if (1..=8).contains(&v) => Ok(Kind::Fsas(family, v)),
        _ => Err(CliError::Usage(format!("--kind: variant must be 1..=8 in `{s}`"))),
    }
}

fn analytic(x: &Signal, kind: &Kind) -> Result<AnalyticSignal, CliError> {
    Ok(match *kind {
        Kind::Gas => quadrature::gas(x),
        Kind::Fsas(family, v) => quadrature::fsas(x, family, v)?,
    })
}

fn build_plan(x: &Signal, p: &PlanArgs) -> Result<BandPlan, CliError> {
    let strategy: BandStrategy = option("strategy", &p.strategy)?;
    match strategy {
        BandStrategy::Manual => {
            if p.edges.is_empty() {
                return Err(CliError::Usage("--strategy manual needs --edges".into()));
            }
            Ok(BandPlan::from_edges(p.edges.clone(), x.len())?)
        }
        _ if !p.edges.is_empty() => Err(CliError::Usage(
            "--edges is only valid with --strategy manual".into(),
        )),
        _ => {
            let coeffs = transforms::fast_dct2(x.samples())?;
            let m = usize::try_from(p.bands)
                .map_err(|_| CliError::Usage("--bands is too large".into()))?;
            Ok(fdm::plan_bands(&coeffs, strategy, m)?)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (output, out) = match cli.command {
        Command::Transform { io, variant } => {
            let v: TransformVariant = option("variant", &variant)?;
            if !v.is_orthogonal() {
                return Err(CliError::Usage(format!(
                    "--variant: {v} is an auxiliary matrix, not a transform"
                )));
            }
            let x = input::read_signal(&io.input, io.fs)?;
            let m = transforms::matrix(v, x.len())?;
            let coeffs = m.forward(x.samples())?;
            let mut t = Table::new(["k", "value"]);
            for (i, c) in coeffs.iter().enumerate() {
                t.push(vec![Cell::Int(m.cols().start + i), Cell::Float(*c)]);
            }
            (Output::Table(t), io.out)
        }
        Command::Analytic { io, kind, scheme } => {
            let kind = parse_kind(&kind)?;
            let scheme: DiffScheme = option("scheme", &scheme)?;
            let x = input::read_signal(&io.input, io.fs)?;
            let z = analytic(&x, &kind)?;
            let trace = PolarTrace::from_analytic(&z, scheme)?;
            let hz = trace.freq_hz();
            let t = Table::indexed(
                ["real", "imag", "ia", "iphase", "if_hz"].map(String::from).to_vec(),
                &[z.real(), z.imag(), &trace.ia, &trace.iphase, &hz],
            );
            (Output::Table(t), io.out)
        }
        Command::Decompose { io, plan, route } => {
            let route: Route = option("route", &route)?;
            let x = input::read_signal(&io.input, io.fs)?;
            let plan = build_plan(&x, &plan)?;
            let d = fdm::decompose(&x, &plan, route)?;
            let dc = d.dc_term();
            let mut names: Vec<String> = (1..=d.band_count()).map(|i| format!("fibf_{i}")).collect();
            names.push("dc".into());
            let mut cols: Vec<&[f64]> = d.fibfs.iter().map(Vec::as_slice).collect();
            cols.push(&dc);
            (Output::Table(Table::indexed(names, &cols)), io.out)
        }
        Command::Tfe {
            io,
            plan,
            route,
            scheme,
            ridge,
        } => {
            let route: Route = option("route", &route)?;
            let scheme: DiffScheme = option("scheme", &scheme)?;
            let x = input::read_signal(&io.input, io.fs)?;
            let plan = build_plan(&x, &plan)?;
            let grid = fdm::tfe(&fdm::decompose(&x, &plan, route)?, scheme)?;
            let mut t = Table::new(["n", "f_hz", "energy"]);
            let row = |p: &fdm::TfePoint| {
                vec![Cell::Int(p.n), Cell::Float(p.freq_hz), Cell::Float(p.energy)]
            };
            if ridge {
                for p in grid.ridge().iter().flatten() {
                    t.push(row(p));
                }
            } else {
                for p in &grid.points {
                    t.push(row(p));
                }
            }
            (Output::Table(t), io.out)
        }
        Command::Denoise {
            io,
            plan,
            drop,
            drop_dc,
        } => {
            let x = input::read_signal(&io.input, io.fs)?;
            let plan = build_plan(&x, &plan)?;
            let r = fdm::separate_bands(&x, &plan, &drop, drop_dc)?;
            let dc = r.dc.map(|m| vec![m; x.len()]);
            let mut names = vec!["cleaned".to_string()];
            let mut cols: Vec<&[f64]> = vec![r.cleaned.samples()];
            for (b, part) in &r.removed {
                names.push(format!("band_{b}"));
                cols.push(part);
            }
            if let Some(dc) = &dc {
                names.push("dc".into());
                cols.push(dc);
            }
            (Output::Table(Table::indexed(names, &cols)), io.out)
        }
        Command::Trend { io, cutoff } => {
            let x = input::read_signal(&io.input, io.fs)?;
            let (tr, var) = fdm::trend(&x, cutoff)?;
            let t = Table::indexed(
                vec!["trend".into(), "variability".into()],
                &[tr.samples(), var.samples()],
            );
            (Output::Table(t), io.out)
        }
        Command::ImageFsas { input, out } => {
            let img = input::read_matrix(&input)?;
            let z = image2d::fsas2d(&img);
            (Output::Matrix(z.imag.row_vecs()), out)
        }
    };
    table::emit(&output, out.format, out.output.as_deref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fqt: {e}");
            e.exit_code()
        }
    }
}
