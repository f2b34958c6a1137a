//! Closed-form bounds on the separable volume and their Monte Carlo check.
//!
//! The lower bound is the separable-ball radius raised to `N−1`; the upper
//! bound, for two qudits, is one minus the entangled-ball radius raised to
//! `d²−1`. [`estimate_fractions`] samples states, runs every applicable
//! certificate and tallies the verdicts.
//!
//! Sampling is split into fixed blocks of [`SAMPLES_PER_STREAM`] states; block
//! `b` always draws from stream `b` of the root seed. Workers take blocks
//! round-robin and only add integer counts, so the tallies do not depend on
//! the number of workers.

use std::thread;

use serde::{Deserialize, Serialize};
use statrs::distribution::{Beta, ContinuousCDF};

use crate::certificates::{
    certify_all, entangled_ball_radius, separable_ball_radius, Certificate, Verdict,
};
use crate::error::{Error, Result};
use crate::sampling::{sample_state, MeasureKind, SeedSpec, GENERATOR_NAME};
use crate::tensor::DimensionSpec;

/// States drawn from each RNG stream before moving to the next one.
pub const SAMPLES_PER_STREAM: u64 = 256;

/// Two-sided 95% standard normal quantile.
const Z_95: f64 = 1.959_963_984_540_054;

/// `[(N²−1)(N−1)]^{−(N−1)/2}`.
pub fn separable_volume_lower_bound(n: usize) -> Result<f64> {
    let radius = separable_ball_radius(n)?;
    let base = (n * n - 1) as f64 * (n - 1) as f64;
    debug_assert!((radius - base.powf(-0.5)).abs() <= 1e-15);
    Ok(base.powf(-((n - 1) as f64) / 2.0))
}

/// `ε*(d)^{d²−1}`: the volume of the entangled ball around `|Φ⟩`.
pub fn entangled_ball_volume(d: usize) -> Result<f64> {
    let radius = entangled_ball_radius(d)?;
    Ok(radius.powi((d * d - 1) as i32))
}

/// `1 − ε*(d)^{d²−1}` for two qudits.
///
/// The subtracted term falls below `f64::EPSILON` from `d = 7` on, where this
/// evaluates to exactly `1.0`; use [`entangled_ball_volume`] to compare
/// bounds at larger `d`.
pub fn separable_volume_upper_bound(d: usize) -> Result<f64> {
    Ok(1.0 - entangled_ball_volume(d)?)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalMethod {
    #[default]
    Wilson,
    ClopperPearson,
}

/// Wilson score interval at 95% for `k` successes in `n` trials.
pub fn wilson_interval(k: u64, n: u64) -> (f64, f64) {
    assert!(n > 0 && k <= n);
    let n = n as f64;
    let p = k as f64 / n;
    let z2 = Z_95 * Z_95;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z_95 * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // containment of p can be lost to rounding at k = 0 or k = n
    ((center - half).clamp(0.0, p), (center + half).clamp(p, 1.0))
}

/// Exact (Clopper–Pearson) interval at 95%.
pub fn clopper_pearson_interval(k: u64, n: u64) -> (f64, f64) {
    assert!(n > 0 && k <= n);
    let alpha = 0.05;
    let (kf, nf) = (k as f64, n as f64);
    let lo = if k == 0 {
        0.0
    } else {
        Beta::new(kf, nf - kf + 1.0)
            .expect("positive shape parameters")
            .inverse_cdf(alpha / 2.0)
    };
    let hi = if k == n {
        1.0
    } else {
        Beta::new(kf + 1.0, nf - kf)
            .expect("positive shape parameters")
            .inverse_cdf(1.0 - alpha / 2.0)
    };
    (lo, hi)
}

impl IntervalMethod {
    pub fn interval(self, k: u64, n: u64) -> (f64, f64) {
        match self {
            IntervalMethod::Wilson => wilson_interval(k, n),
            IntervalMethod::ClopperPearson => clopper_pearson_interval(k, n),
        }
    }
}

/// What `fraction` counts for a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FractionOf {
    /// Samples certified separable: a lower estimate of the separable volume.
    CertifiedSeparable,
    /// Samples certified entangled: a lower estimate of the entangled volume.
    CertifiedEntangled,
    /// Samples with a positive partial transpose: the separable volume on
    /// `2×2` and `2×3`, an upper proxy elsewhere.
    PositivePartialTranspose,
}

impl FractionOf {
    fn for_certificate(c: Certificate) -> Self {
        match c {
            Certificate::Ppt { .. } => FractionOf::PositivePartialTranspose,
            c if c.proves_separability() => FractionOf::CertifiedSeparable,
            _ => FractionOf::CertifiedEntangled,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateTally {
    pub certificate: String,
    pub fraction_of: FractionOf,
    pub separable: u64,
    pub entangled: u64,
    pub inconclusive: u64,
    pub fraction: f64,
    pub ci95: (f64, f64),
}

impl CertificateTally {
    fn new(certificate: Certificate, counts: [u64; 3], interval: IntervalMethod) -> Self {
        let [separable, entangled, inconclusive] = counts;
        let n = separable + entangled + inconclusive;
        let fraction_of = FractionOf::for_certificate(certificate);
        let hits = match fraction_of {
            FractionOf::CertifiedSeparable => separable,
            FractionOf::CertifiedEntangled => entangled,
            FractionOf::PositivePartialTranspose => n - entangled,
        };
        Self {
            certificate: certificate.name(),
            fraction_of,
            separable,
            entangled,
            inconclusive,
            fraction: hits as f64 / n as f64,
            ci95: interval.interval(hits, n),
        }
    }

    pub fn total(&self) -> u64 {
        self.separable + self.entangled + self.inconclusive
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VolumeEstimate {
    pub dims: Vec<usize>,
    pub measure: MeasureKind,
    pub n_samples: u64,
    pub seed: SeedSpec,
    pub generator: String,
    pub samples_per_stream: u64,
    pub interval: IntervalMethod,
    pub certificates: Vec<CertificateTally>,
    pub lower_bound: f64,
    pub upper_bound: Option<f64>,
}

impl VolumeEstimate {
    pub fn tally(&self, name: &str) -> Option<&CertificateTally> {
        self.certificates.iter().find(|t| t.certificate == name)
    }
}

/// Full configuration of a Monte Carlo run.
#[derive(Clone, Debug, PartialEq)]
pub struct VolumeRun {
    pub dims: DimensionSpec,
    pub measure: MeasureKind,
    pub n_samples: u64,
    pub seed: u64,
    pub workers: usize,
    pub interval: IntervalMethod,
}

impl VolumeRun {
    pub fn new(dims: DimensionSpec, n_samples: u64, seed: u64) -> Self {
        Self {
            dims,
            measure: MeasureKind::Natural,
            n_samples,
            seed,
            workers: 1,
            interval: IntervalMethod::Wilson,
        }
    }

    pub fn measure(mut self, measure: MeasureKind) -> Self {
        self.measure = measure;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn interval(mut self, interval: IntervalMethod) -> Self {
        self.interval = interval;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n_samples == 0 {
            return Err(Error::invalid("n_samples must be >= 1"));
        }
        if self.workers == 0 {
            return Err(Error::invalid("workers must be >= 1"));
        }
        if self.dims.total() < 2 {
            return Err(Error::invalid("volume estimates need total dimension >= 2"));
        }
        Ok(())
    }

    /// Counts `[separable, entangled, inconclusive]` per certificate for
    /// the blocks `first, first + step, …`.
    fn tally_blocks(&self, certificates: usize, first: u64, step: u64) -> Vec<[u64; 3]> {
        let mut counts = vec![[0u64; 3]; certificates];
        let blocks = self.n_samples.div_ceil(SAMPLES_PER_STREAM);
        let mut block = first;
        while block < blocks {
            let start = block * SAMPLES_PER_STREAM;
            let end = (start + SAMPLES_PER_STREAM).min(self.n_samples);
            let mut rng = SeedSpec::new(self.seed, block).rng();
            for _ in start..end {
                let rho = sample_state(&self.dims, self.measure, &mut rng);
                for (slot, result) in counts.iter_mut().zip(certify_all(&rho)) {
                    slot[match result.verdict {
                        Verdict::Separable => 0,
                        Verdict::Entangled => 1,
                        Verdict::Inconclusive => 2,
                    }] += 1;
                }
            }
            block += step;
        }
        counts
    }

    pub fn run(&self) -> Result<VolumeEstimate> {
        self.validate()?;
        let probe = crate::tensor::DensityMatrix::maximally_mixed(&self.dims);
        let order: Vec<Certificate> = certify_all(&probe).iter().map(|r| r.certificate).collect();

        let n_certs = order.len();
        let step = self.workers as u64;
        let partials: Vec<Vec<[u64; 3]>> = if self.workers == 1 {
            vec![self.tally_blocks(n_certs, 0, 1)]
        } else {
            thread::scope(|scope| {
                let handles: Vec<_> = (0..step)
                    .map(|w| scope.spawn(move || self.tally_blocks(n_certs, w, step)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("sampling worker panicked"))
                    .collect()
            })
        };

        let mut counts = vec![[0u64; 3]; n_certs];
        for partial in &partials {
            for (total, part) in counts.iter_mut().zip(partial) {
                for (t, p) in total.iter_mut().zip(part) {
                    *t += p;
                }
            }
        }

        let certificates = order
            .iter()
            .zip(counts)
            .map(|(&c, counts)| CertificateTally::new(c, counts, self.interval))
            .collect();
        let upper_bound = match self.dims.equal_bipartite() {
            Some(d) => Some(separable_volume_upper_bound(d)?),
            None => None,
        };
        Ok(VolumeEstimate {
            dims: self.dims.dims().to_vec(),
            measure: self.measure,
            n_samples: self.n_samples,
            seed: SeedSpec::new(self.seed, 0),
            generator: GENERATOR_NAME.to_string(),
            samples_per_stream: SAMPLES_PER_STREAM,
            interval: self.interval,
            certificates,
            lower_bound: separable_volume_lower_bound(self.dims.total())?,
            upper_bound,
        })
    }
}

/// Samples `n_samples` states and tallies every certificate's verdicts.
pub fn estimate_fractions(
    dims: &DimensionSpec,
    measure: MeasureKind,
    n_samples: u64,
    seed: SeedSpec,
    workers: usize,
) -> Result<VolumeEstimate> {
    VolumeRun::new(dims.clone(), n_samples, seed.seed)
        .measure(measure)
        .workers(workers)
        .run()
}

/// Label for the PPT fraction on `d×d` systems.
pub fn ppt_fraction_label(d: usize) -> &'static str {
    if d == 2 {
        "exact"
    } else {
        "proxy (bound entanglement not excluded)"
    }
}

/// Monte Carlo estimate on two qudits checked against both volume bounds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SandwichReport {
    pub d: usize,
    pub estimate: VolumeEstimate,
    pub ppt_fraction: f64,
    pub ppt_fraction_label: String,
    pub lower_bound: f64,
    pub upper_bound: f64,
    /// `lower_bound < ppt_fraction`.
    pub lower_ok: bool,
    /// `ppt_fraction < upper_bound`.
    pub upper_ok: bool,
}

impl SandwichReport {
    pub fn passed(&self) -> bool {
        self.lower_ok && self.upper_ok
    }
}

pub fn sandwich_report(
    d: usize,
    measure: MeasureKind,
    n_samples: u64,
    seed: SeedSpec,
    workers: usize,
) -> Result<SandwichReport> {
    if d < 2 {
        return Err(Error::invalid(format!(
            "local dimension must be >= 2, got {d}"
        )));
    }
    let dims = DimensionSpec::qudits(d)?;
    sandwich_from_estimate(
        d,
        estimate_fractions(&dims, measure, n_samples, seed, workers)?,
    )
}

/// Builds the bound comparison for an existing two-qudit estimate.
pub fn sandwich_from_estimate(d: usize, estimate: VolumeEstimate) -> Result<SandwichReport> {
    if estimate.dims != [d, d] {
        return Err(Error::invalid(format!(
            "estimate on {:?} does not describe two {d}-level systems",
            estimate.dims
        )));
    }
    let ppt = estimate
        .certificates
        .iter()
        .find(|t| t.fraction_of == FractionOf::PositivePartialTranspose)
        .ok_or_else(|| Error::invalid("estimate has no partial-transpose tally"))?;
    let ppt_fraction = ppt.fraction;
    let lower_bound = separable_volume_lower_bound(d * d)?;
    let upper_bound = separable_volume_upper_bound(d)?;
    Ok(SandwichReport {
        d,
        ppt_fraction,
        ppt_fraction_label: ppt_fraction_label(d).to_string(),
        lower_bound,
        upper_bound,
        lower_ok: lower_bound < ppt_fraction,
        upper_ok: ppt_fraction < upper_bound,
        estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn lower_bound_values() {
        assert!(rel(separable_volume_lower_bound(4).unwrap(), 45f64.powf(-1.5)) < 1e-14);
        assert!(rel(separable_volume_lower_bound(4).unwrap(), 3.3127e-3) < 1e-4);
        assert!(rel(separable_volume_lower_bound(2).unwrap(), 0.57735) < 1e-5);
        assert!(rel(separable_volume_lower_bound(9).unwrap(), 5.9605e-12) < 1e-4);
        assert!(separable_volume_lower_bound(1).is_err());
    }

    #[test]
    fn upper_bound_values() {
        assert!((separable_volume_upper_bound(2).unwrap() - 0.978226).abs() < 1e-6);
        assert!((separable_volume_upper_bound(3).unwrap() - 0.999702).abs() < 1e-6);
        for d in 2..=10 {
            let (now, next) = (
                entangled_ball_volume(d).unwrap(),
                entangled_ball_volume(d + 1).unwrap(),
            );
            assert!(next < now, "d = {d}");
            assert!(
                separable_volume_upper_bound(d + 1).unwrap()
                    >= separable_volume_upper_bound(d).unwrap()
            );
        }
        for d in 2..=5 {
            assert!(
                separable_volume_upper_bound(d + 1).unwrap()
                    > separable_volume_upper_bound(d).unwrap()
            );
        }
        assert!(separable_volume_upper_bound(1).is_err());
    }

    #[test]
    fn wilson_interval_contains_point_estimate() {
        for (k, n) in [(0, 10), (10, 10), (3, 10), (500, 1000), (1, 100_000)] {
            let (lo, hi) = wilson_interval(k, n);
            let p = k as f64 / n as f64;
            assert!(lo <= p && p <= hi, "{k}/{n}: [{lo}, {hi}]");
            assert!((0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi));
        }
        // 50/100: centre 0.5, half-width z·√(0.0025 + z²/40000)/(1 + z²/100)
        let (lo, hi) = wilson_interval(50, 100);
        assert!((lo - 0.403_831).abs() < 1e-5 && (hi - 0.596_169).abs() < 1e-5);
    }

    #[test]
    fn clopper_pearson_is_wider_than_wilson() {
        let (wlo, whi) = wilson_interval(30, 100);
        let (clo, chi) = clopper_pearson_interval(30, 100);
        assert!(clo < wlo && chi > whi);
        assert_eq!(clopper_pearson_interval(0, 20).0, 0.0);
        assert_eq!(clopper_pearson_interval(20, 20).1, 1.0);
        // 0 of n: upper limit 1 − 0.025^{1/n}
        let (_, hi) = clopper_pearson_interval(0, 20);
        assert!((hi - (1.0 - 0.025f64.powf(1.0 / 20.0))).abs() < 1e-9);
    }

    #[test]
    fn single_sample_run() {
        let dims = DimensionSpec::new(vec![2, 3]).unwrap();
        let est =
            estimate_fractions(&dims, MeasureKind::Natural, 1, SeedSpec::new(5, 0), 1).unwrap();
        for t in &est.certificates {
            assert_eq!(t.total(), 1);
            assert!(t.fraction == 0.0 || t.fraction == 1.0);
            assert!(t.ci95.0 <= t.fraction && t.fraction <= t.ci95.1);
        }
        assert_eq!(est.upper_bound, None);
    }

    #[test]
    fn rejects_empty_runs() {
        let dims = DimensionSpec::qudits(2).unwrap();
        assert!(
            estimate_fractions(&dims, MeasureKind::Natural, 0, SeedSpec::new(1, 0), 1).is_err()
        );
        assert!(
            estimate_fractions(&dims, MeasureKind::Natural, 10, SeedSpec::new(1, 0), 0).is_err()
        );
        assert!(sandwich_report(1, MeasureKind::Natural, 10, SeedSpec::new(1, 0), 1).is_err());
    }

    #[test]
    fn worker_count_does_not_change_counts() {
        let dims = DimensionSpec::qudits(2).unwrap();
        let base =
            estimate_fractions(&dims, MeasureKind::Natural, 1500, SeedSpec::new(11, 0), 1).unwrap();
        for workers in [2, 3, 8] {
            let other = estimate_fractions(
                &dims,
                MeasureKind::Natural,
                1500,
                SeedSpec::new(11, 0),
                workers,
            )
            .unwrap();
            assert_eq!(base, other, "workers = {workers}");
        }
    }

    #[test]
    fn small_sandwich_reports() {
        let r = sandwich_report(2, MeasureKind::Natural, 10, SeedSpec::new(3, 0), 1).unwrap();
        assert_eq!(r.estimate.n_samples, 10);
        assert_eq!(r.ppt_fraction_label, "exact");
        let (lo, hi) = r.estimate.tally("ppt_1").unwrap().ci95;
        assert!(hi - lo > 0.2);
        assert_eq!(r.lower_ok, r.lower_bound < r.ppt_fraction);

        let r3 = sandwich_report(3, MeasureKind::Natural, 20, SeedSpec::new(3, 0), 2).unwrap();
        assert_eq!(
            r3.ppt_fraction_label,
            "proxy (bound entanglement not excluded)"
        );
    }
}
