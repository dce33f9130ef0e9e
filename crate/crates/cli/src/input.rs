use std::path::Path;

use fqt_core::image2d::Image;
use fqt_core::Signal;

use crate::error::CliError;

/// Relative deviation allowed between a timestep and the median timestep.
const MAX_JITTER: f64 = 1e-6;

fn reader(path: &Path) -> Result<csv::Reader<std::fs::File>, CliError> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .map_err(|e| CliError::from_csv(path, e))
}

/// Numeric rows of a CSV file; a first row that does not parse is taken as a header.
fn numeric_rows(path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let mut rows = Vec::new();
    for (i, record) in reader(path)?.records().enumerate() {
        let record = record.map_err(|e| CliError::from_csv(path, e))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(values) => {
                if let Some(v) = values.iter().find(|v| !v.is_finite()) {
                    return Err(CliError::Parse(format!(
                        "{}:{}: non-finite value {v}",
                        path.display(),
                        i + 1
                    )));
                }
                rows.push(values);
            }
            Err(_) if i == 0 => continue,
            Err(e) => {
                return Err(CliError::Parse(format!("{}:{}: {e}", path.display(), i + 1)));
            }
        }
    }
    if rows.is_empty() {
        return Err(CliError::Parse(format!("{}: no numeric rows", path.display())));
    }
    Ok(rows)
}

fn median(v: &mut [f64]) -> f64 {
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len().is_multiple_of(2) {
        0.5 * (v[mid - 1] + v[mid])
    } else {
        v[mid]
    }
}

fn sample_rate(times: &[f64]) -> Result<f64, CliError> {
    let mut steps: Vec<f64> = times.windows(2).map(|w| w[1] - w[0]).collect();
    let dt = median(&mut steps.clone());
    if dt.is_nan() || dt <= 0.0 {
        return Err(CliError::Parse("timestamps must increase".into()));
    }
    steps.retain(|s| ((s - dt) / dt).abs() > MAX_JITTER);
    if let Some(s) = steps.first() {
        return Err(CliError::Parse(format!(
            "non-uniform sampling: step {s} differs from median step {dt}"
        )));
    }
    Ok(1.0 / dt)
}

/// Reads a signal from one value per line (needs `fs`) or `time,value` rows.
pub fn read_signal(path: &Path, fs: Option<f64>) -> Result<Signal, CliError> {
    let rows = numeric_rows(path)?;
    let width = rows[0].len();
    if let Some(i) = rows.iter().position(|r| r.len() != width) {
        return Err(CliError::Parse(format!(
            "{}: row {} has {} columns, expected {width}",
            path.display(),
            i + 1,
            rows[i].len()
        )));
    }
    let (samples, fs) = match width {
        1 => {
            let fs = fs.ok_or_else(|| {
                CliError::Usage("--fs is required for single-column input".into())
            })?;
            (rows.into_iter().map(|r| r[0]).collect(), fs)
        }
        2 => {
            let times: Vec<f64> = rows.iter().map(|r| r[0]).collect();
            let inferred = if times.len() >= 2 {
                Some(sample_rate(&times)?)
            } else {
                None
            };
            let fs = fs.or(inferred).ok_or_else(|| {
                CliError::Parse("cannot infer a sampling rate from one sample".into())
            })?;
            (rows.into_iter().map(|r| r[1]).collect(), fs)
        }
        n => {
            return Err(CliError::Parse(format!(
                "{}: expected 1 or 2 columns, found {n}",
                path.display()
            )))
        }
    };
    if !(fs.is_finite() && fs > 0.0) {
        return Err(CliError::Usage(format!("sampling rate must be positive, got {fs}")));
    }
    Ok(Signal::new(samples, fs)?)
}

/// Reads a row-per-line numeric matrix.
pub fn read_matrix(path: &Path) -> Result<Image, CliError> {
    let rows = numeric_rows(path)?;
    Image::from_rows(&rows).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}
