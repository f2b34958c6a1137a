//! Subcommand bodies. Each returns the text it would print.

use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use voss::certificates::{
    certify_all, certify_entangled_ball, certify_separable_ball, summarize, CertificateResult,
    Verdict,
};
use voss::sampling::MeasureKind;
use voss::spin::spin_matrix;
use voss::volume::{sandwich_from_estimate, IntervalMethod, VolumeRun};
use voss::{DensityMatrix, DimensionSpec};

use crate::formats::{self, grid, BoundsTable, SandwichFlags, VolumeOutput};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Serialize)]
pub struct CertifyReport {
    pub dims: Vec<usize>,
    pub purity: f64,
    pub certificates: Vec<CertificateResult>,
    pub summary: Verdict,
}

pub fn certify_report(rho: &DensityMatrix) -> CertifyReport {
    let certificates = certify_all(rho);
    CertifyReport {
        dims: rho.dims().dims().to_vec(),
        purity: rho.purity(),
        summary: summarize(&certificates),
        certificates,
    }
}

pub fn certify(
    state: &Path,
    dims: Option<&[usize]>,
    out: Option<&Path>,
) -> Result<String, CliError> {
    let rho = formats::read_state(state, dims)?;
    let report = certify_report(&rho);
    let mut text = format!("dims {}  purity {:.6}\n", rho.dims(), report.purity);
    for r in &report.certificates {
        text += &format!(
            "{:<15} {:<12} witness {:>12.6e}  threshold {:>12.6e}  margin {:>12.6e}\n",
            r.certificate.name(),
            r.verdict.to_string(),
            r.witness,
            r.threshold,
            r.margin
        );
    }
    text += &format!("{}\n", report.summary.to_string().to_uppercase());
    if let Some(path) = out {
        formats::write_json(path, &report)?;
    }
    Ok(text)
}

pub fn bounds(ns: &[usize], ds: &[usize], format: Format) -> Result<String, CliError> {
    let table = BoundsTable::new(ns.iter().copied(), ds.iter().copied())?;
    Ok(match format {
        Format::Text => table.to_text(),
        Format::Json => formats::to_json(&table),
        Format::Csv => table.to_csv(),
    })
}

#[derive(Clone, Debug)]
pub struct VolumeArgs {
    pub dims: Vec<usize>,
    pub samples: u64,
    pub seed: u64,
    pub measure: MeasureKind,
    pub workers: usize,
    pub interval: IntervalMethod,
}

pub fn volume_output(args: &VolumeArgs) -> Result<VolumeOutput, CliError> {
    let usage = |e: voss::Error| CliError::Usage(e.to_string());
    let dims = DimensionSpec::new(args.dims.clone()).map_err(usage)?;
    let local = dims.equal_bipartite();
    let start = Instant::now();
    let estimate = VolumeRun::new(dims, args.samples, args.seed)
        .measure(args.measure)
        .workers(args.workers)
        .interval(args.interval)
        .run()
        .map_err(usage)?;
    let wall_time_seconds = start.elapsed().as_secs_f64();
    let sandwich = match local {
        Some(d) if d >= 2 => Some(SandwichFlags::from(
            &sandwich_from_estimate(d, estimate.clone()).map_err(usage)?,
        )),
        _ => None,
    };
    Ok(VolumeOutput {
        estimate,
        sandwich,
        wall_time_seconds,
    })
}

pub fn volume(args: &VolumeArgs, format: Format) -> Result<String, CliError> {
    let output = volume_output(args)?;
    Ok(match format {
        Format::Csv => formats::volume_csv(&output.estimate),
        Format::Json | Format::Text => formats::to_json(&output),
    })
}

#[derive(Debug, Serialize)]
pub struct BasisEntry {
    pub j: usize,
    pub l: usize,
    pub trace: [f64; 2],
    pub matrix: Vec<Vec<[f64; 2]>>,
}

/// One spin matrix, or all `d²` of them.
pub fn basis(d: usize, jl: Option<(usize, usize)>) -> Result<String, CliError> {
    let usage = |e: voss::Error| CliError::Usage(e.to_string());
    let pairs: Vec<(usize, usize)> = match jl {
        Some(p) => vec![p],
        None => (0..d).flat_map(|j| (0..d).map(move |l| (j, l))).collect(),
    };
    let entries = pairs
        .into_iter()
        .map(|(j, l)| {
            let s = spin_matrix(d, j, l).map_err(usage)?;
            let tr = s.trace();
            Ok(BasisEntry {
                j,
                l,
                trace: [tr.re, tr.im],
                matrix: grid(&s),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(formats::to_json(&entries))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Center {
    Mixed,
    Entangled,
}

/// Mixes the state toward the chosen center and writes the result.
pub fn mix(state: &Path, epsilon: f64, center: Center, out: &Path) -> Result<String, CliError> {
    let usage = |e: voss::Error| CliError::Usage(e.to_string());
    let rho = formats::read_state(state, None)?;
    let (result, mixture) = match center {
        Center::Mixed => certify_separable_ball(&rho, epsilon).map_err(usage)?,
        Center::Entangled => {
            let d = rho.dims().equal_bipartite().ok_or_else(|| {
                CliError::Usage(format!(
                    "--center entangled needs two equal subsystems, got {}",
                    rho.dims()
                ))
            })?;
            certify_entangled_ball(&rho, epsilon, d).map_err(usage)?
        }
    };
    formats::write_state(out, &mixture)?;
    Ok(format!(
        "{} {}: epsilon {epsilon} vs radius {:.6e}\n",
        result.certificate.name(),
        result.verdict,
        result.threshold
    ))
}
