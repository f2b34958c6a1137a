//! Seeded random density matrices.
//!
//! The natural measure draws eigenvalues uniformly from the probability
//! simplex and eigenvectors from the Haar measure on `U(N)`. Hilbert–Schmidt
//! and pure Haar states are provided for comparison.
//!
//! Every stream is a ChaCha20 generator keyed by `seed` and positioned on the
//! 64-bit ChaCha stream `stream`, so a `(seed, stream)` pair reproduces the
//! same sequence on any thread.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::{Exp1, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::{hermitize, ComplexMatrix, DensityMatrix, DimensionSpec};

/// Generator behind every [`SeedSpec`] stream.
pub type StreamRng = ChaCha20Rng;

/// Name recorded in output metadata.
pub const GENERATOR_NAME: &str = "ChaCha20Rng (rand_chacha 0.9, seed_from_u64 + set_stream)";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureKind {
    /// Flat simplex eigenvalues with Haar eigenvectors.
    #[default]
    Natural,
    /// `G G† / Tr(G G†)` for a complex Ginibre matrix `G`.
    HilbertSchmidt,
    /// Projectors onto Haar-random unit vectors.
    PureHaar,
}

impl MeasureKind {
    /// Short form used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            MeasureKind::Natural => "natural",
            MeasureKind::HilbertSchmidt => "hs",
            MeasureKind::PureHaar => "pure",
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "natural" => Ok(MeasureKind::Natural),
            "hs" | "hilbert_schmidt" => Ok(MeasureKind::HilbertSchmidt),
            "pure" | "pure_haar" => Ok(MeasureKind::PureHaar),
            other => Err(Error::invalid(format!(
                "unknown measure {other:?}, expected natural|hs|pure"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedSpec {
    pub seed: u64,
    pub stream: u64,
}

impl SeedSpec {
    pub fn new(seed: u64, stream: u64) -> Self {
        Self { seed, stream }
    }

    pub fn with_stream(self, stream: u64) -> Self {
        Self { stream, ..self }
    }

    pub fn rng(&self) -> StreamRng {
        let mut rng = ChaCha20Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

/// A point drawn uniformly from the probability simplex in `R^n`.
pub fn sample_simplex<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::invalid("simplex dimension must be >= 1"));
    }
    if n == 1 {
        return Ok(vec![1.0]);
    }
    let mut draws: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = draws.iter().sum();
    for x in &mut draws {
        *x /= total;
    }
    Ok(draws)
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

fn ginibre<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let data = (0..n * n).map(|_| complex_gaussian(rng)).collect();
    ComplexMatrix::new(n, n, data).expect("n >= 1")
}

/// Haar-distributed unitary: QR of a Ginibre matrix, with the phases of
/// `diag(R)` moved onto `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<ComplexMatrix> {
    if n == 0 {
        return Err(Error::invalid("unitary dimension must be >= 1"));
    }
    let qr = ginibre(n, rng).to_nalgebra().qr();
    let mut q = qr.q();
    let r = qr.r();
    for k in 0..n {
        let diag = r[(k, k)];
        let phase = if diag.norm() > 0.0 {
            diag / diag.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for row in 0..n {
            q[(row, k)] *= phase;
        }
    }
    Ok(ComplexMatrix::from_nalgebra(&q))
}

fn haar_ket<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..n).map(|_| complex_gaussian(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut v {
        *z /= norm;
    }
    v
}

fn normalize_trace(m: &ComplexMatrix) -> ComplexMatrix {
    m.scale_real(1.0 / m.trace().re)
}

pub fn sample_state<R: Rng + ?Sized>(
    dims: &DimensionSpec,
    measure: MeasureKind,
    rng: &mut R,
) -> DensityMatrix {
    let n = dims.total();
    let matrix = match measure {
        MeasureKind::Natural => {
            let spectrum = sample_simplex(n, rng).expect("n >= 1");
            let u = haar_unitary(n, rng).expect("n >= 1");
            let mut scaled = u.clone();
            for r in 0..n {
                for (c, &lambda) in spectrum.iter().enumerate() {
                    scaled[(r, c)] *= lambda;
                }
            }
            let m = scaled.matmul(&u.adjoint()).expect("square");
            normalize_trace(&hermitize(&m))
        }
        MeasureKind::HilbertSchmidt => {
            let g = ginibre(n, rng);
            let m = g.matmul(&g.adjoint()).expect("square");
            normalize_trace(&hermitize(&m))
        }
        MeasureKind::PureHaar => ComplexMatrix::outer(&haar_ket(n, rng)),
    };
    DensityMatrix::from_trusted(dims.clone(), matrix)
}
