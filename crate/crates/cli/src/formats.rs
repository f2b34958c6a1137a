//! File formats: state files, bound tables and volume output.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use voss::certificates::{entangled_ball_radius, purity_threshold, separable_ball_radius};
use voss::tensor::validate_density;
use voss::volume::{
    separable_volume_lower_bound, separable_volume_upper_bound, SandwichReport, VolumeEstimate,
};
use voss::{ComplexMatrix, DensityMatrix, DimensionSpec};

use crate::CliError;

/// `{"dims": [..], "matrix": [[[re, im], ..], ..]}`, row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

impl StateFile {
    pub fn from_state(rho: &DensityMatrix) -> Self {
        Self {
            dims: rho.dims().dims().to_vec(),
            matrix: grid(rho.matrix()),
        }
    }

    /// Parses the grid and validates it as a state on `dims`, or on the
    /// override when one is given.
    pub fn into_state(self, dims_override: Option<&[usize]>) -> Result<DensityMatrix, CliError> {
        let dims = match dims_override {
            Some(d) => {
                let file_total: usize = self.dims.iter().product();
                let total: usize = d.iter().product();
                if total != file_total {
                    return Err(CliError::Usage(format!(
                        "--dims {d:?} has total dimension {total}, state file has {file_total}"
                    )));
                }
                d.to_vec()
            }
            None => self.dims,
        };
        let dims = DimensionSpec::new(dims).map_err(CliError::state)?;
        let n = self.matrix.len();
        if let Some(row) = self.matrix.iter().find(|row| row.len() != n) {
            return Err(CliError::State {
                invariant: "SizeMismatch",
                message: format!("matrix has {n} rows but a row of length {}", row.len()),
            });
        }
        let data = self
            .matrix
            .into_iter()
            .flatten()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        let m = ComplexMatrix::new(n, n, data).map_err(CliError::state)?;
        validate_density(m, &dims).map_err(CliError::state)
    }
}

/// Row-major `[re, im]` grid of a matrix.
pub fn grid(m: &ComplexMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| [m[(r, c)].re, m[(r, c)].im])
                .collect()
        })
        .collect()
}

pub fn read_state(path: &Path, dims_override: Option<&[usize]>) -> Result<DensityMatrix, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let file: StateFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: not a state file: {e}", path.display())))?;
    file.into_state(dims_override)
}

pub fn write_state(path: &Path, rho: &DensityMatrix) -> Result<(), CliError> {
    write_json(path, &StateFile::from_state(rho))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output types serialize") + "\n"
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    write_text(path, &to_json(value))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TotalDimensionRow {
    pub n: usize,
    pub purity_threshold: f64,
    pub separable_ball_radius: f64,
    pub lower_bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalDimensionRow {
    pub d: usize,
    pub entangled_ball_radius: f64,
    pub upper_bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsTable {
    pub total: Vec<TotalDimensionRow>,
    pub local: Vec<LocalDimensionRow>,
}

impl BoundsTable {
    pub fn new(
        ns: impl IntoIterator<Item = usize>,
        ds: impl IntoIterator<Item = usize>,
    ) -> Result<Self, CliError> {
        let total = ns
            .into_iter()
            .map(|n| {
                Ok(TotalDimensionRow {
                    n,
                    purity_threshold: purity_threshold(n)?,
                    separable_ball_radius: separable_ball_radius(n)?,
                    lower_bound: separable_volume_lower_bound(n)?,
                })
            })
            .collect::<voss::Result<_>>()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let local = ds
            .into_iter()
            .map(|d| {
                Ok(LocalDimensionRow {
                    d,
                    entangled_ball_radius: entangled_ball_radius(d)?,
                    upper_bound: separable_volume_upper_bound(d)?,
                })
            })
            .collect::<voss::Result<_>>()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(Self { total, local })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("N\tpurity_threshold\tseparable_ball_radius\tlower_bound\n");
        for r in &self.total {
            out += &format!(
                "{}\t{:.6}\t{:.6}\t{:.4e}\n",
                r.n, r.purity_threshold, r.separable_ball_radius, r.lower_bound
            );
        }
        out += "\nd\tentangled_ball_radius\tupper_bound\n";
        for r in &self.local {
            out += &format!(
                "{}\t{:.6}\t{:.6}\n",
                r.d, r.entangled_ball_radius, r.upper_bound
            );
        }
        out
    }

    /// One table with a `table` column; cells that do not apply are empty.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["table", "size", "purity_threshold", "radius", "bound"])
            .unwrap();
        for r in &self.total {
            w.write_record([
                "total".to_string(),
                r.n.to_string(),
                r.purity_threshold.to_string(),
                r.separable_ball_radius.to_string(),
                r.lower_bound.to_string(),
            ])
            .unwrap();
        }
        for r in &self.local {
            w.write_record([
                "local".to_string(),
                r.d.to_string(),
                String::new(),
                r.entangled_ball_radius.to_string(),
                r.upper_bound.to_string(),
            ])
            .unwrap();
        }
        finish_csv(w)
    }
}

/// Bound comparison attached to two-qudit volume runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SandwichFlags {
    pub ppt_fraction: f64,
    pub ppt_fraction_label: String,
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub passed: bool,
}

impl From<&SandwichReport> for SandwichFlags {
    fn from(r: &SandwichReport) -> Self {
        Self {
            ppt_fraction: r.ppt_fraction,
            ppt_fraction_label: r.ppt_fraction_label.clone(),
            lower_ok: r.lower_ok,
            upper_ok: r.upper_ok,
            passed: r.passed(),
        }
    }
}

/// JSON document written by `voss volume`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VolumeOutput {
    #[serde(flatten)]
    pub estimate: VolumeEstimate,
    pub sandwich: Option<SandwichFlags>,
    pub wall_time_seconds: f64,
}

#[derive(Debug, Serialize)]
struct CsvRow<'a> {
    dims: String,
    measure: String,
    certificate: &'a str,
    n: u64,
    separable: u64,
    entangled: u64,
    inconclusive: u64,
    fraction: f64,
    ci_lo: f64,
    ci_hi: f64,
    lower_bound: f64,
    upper_bound: Option<f64>,
    seed: u64,
}

/// One row per certificate.
pub fn volume_csv(est: &VolumeEstimate) -> String {
    let dims = est
        .dims
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("x");
    let mut w = csv::Writer::from_writer(Vec::new());
    for t in &est.certificates {
        w.serialize(CsvRow {
            dims: dims.clone(),
            measure: est.measure.short_name().to_string(),
            certificate: &t.certificate,
            n: t.total(),
            separable: t.separable,
            entangled: t.entangled,
            inconclusive: t.inconclusive,
            fraction: t.fraction,
            ci_lo: t.ci95.0,
            ci_hi: t.ci95.1,
            lower_bound: est.lower_bound,
            upper_bound: est.upper_bound,
            seed: est.seed.seed,
        })
        .expect("rows serialize");
    }
    finish_csv(w)
}

fn finish_csv(mut w: csv::Writer<Vec<u8>>) -> String {
    w.flush().expect("in-memory writer");
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is UTF-8")
}

/// Writes to `path`, or to stdout when there is none.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_text(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| CliError::io(Path::new("<stdout>"), e))
        }
    }
}
