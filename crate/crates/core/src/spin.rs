//! Generalized spin matrices built from the finite Fourier transform.
//!
//! For a `d`-level system the adjusted basis is `A_{j,l} = E_{j, j⊕l}` (a
//! cyclic shift of the computational basis) and the spin matrices are
//! `S_{j,l} = Σ_m F(j,m) A_{m,l}` with `F(j,m) = exp(2πi·jm/d)`. On a
//! composite system both bases are tensor products of the per-subsystem
//! ones, and a density matrix expands as
//!
//! ```text
//! ρ = Σ a_{j̃,l̃} A_{j̃,l̃} = (1/N) Σ s_{j̃,l̃} S_{j̃,l̃},   a_{j̃,l̃} = ρ_{j̃, j̃⊕l̃},   s = conj(F)·a
//! ```
//!
//! where the transform acts on the first tuple index. The composite transform
//! is applied one subsystem at a time rather than as an `N×N` matrix.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::{kron, validate_density, ComplexMatrix, DensityMatrix, DimensionSpec};

/// A tuple `(j_1, …, j_n)` with `0 ≤ j_k < d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    parts: Vec<usize>,
}

impl MultiIndex {
    pub fn new(dims: &DimensionSpec, parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts = parts.into();
        if parts.len() != dims.len() {
            return Err(Error::invalid(format!(
                "multi-index of length {} for {} subsystems",
                parts.len(),
                dims.len()
            )));
        }
        for (k, (&j, &d)) in parts.iter().zip(dims.dims()).enumerate() {
            if j >= d {
                return Err(Error::invalid(format!(
                    "component {k} of multi-index is {j}, must be < {d}"
                )));
            }
        }
        Ok(Self { parts })
    }

    pub fn zero(dims: &DimensionSpec) -> Self {
        Self {
            parts: vec![0; dims.len()],
        }
    }

    pub fn from_flat(dims: &DimensionSpec, flat: usize) -> Result<Self> {
        if flat >= dims.total() {
            return Err(Error::invalid(format!(
                "flat index {flat} out of range for dimension {}",
                dims.total()
            )));
        }
        Ok(Self {
            parts: dims.unflatten(flat),
        })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn flat(&self, dims: &DimensionSpec) -> usize {
        dims.flatten(&self.parts)
    }

    /// Componentwise addition modulo each `d_k`.
    pub fn add(&self, other: &Self, dims: &DimensionSpec) -> Self {
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .zip(dims.dims())
            .map(|((&a, &b), &d)| (a + b) % d)
            .collect();
        Self { parts }
    }
}

fn root_of_unity(d: usize, power: usize) -> Complex64 {
    let k = power % d;
    // quarter turns are exact; from_polar leaves ~1e-16 residue at ±1 and ±i
    if (4 * k).is_multiple_of(d) {
        return [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, -1.0),
        ][4 * k / d];
    }
    Complex64::from_polar(1.0, TAU * k as f64 / d as f64)
}

/// The `d×d` matrix `F(j,l) = exp(2πi·jl/d)`.
pub fn fourier_matrix(d: usize) -> Result<ComplexMatrix> {
    if d == 0 {
        return Err(Error::invalid("Fourier matrix dimension must be >= 1"));
    }
    let mut f = ComplexMatrix::zeros(d, d);
    for j in 0..d {
        for l in 0..d {
            f[(j, l)] = root_of_unity(d, j * l);
        }
    }
    Ok(f)
}

fn check_pair(d: usize, j: usize, l: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::invalid("dimension must be >= 1"));
    }
    if j >= d || l >= d {
        return Err(Error::invalid(format!(
            "indices ({j}, {l}) out of range for d = {d}"
        )));
    }
    Ok(())
}

/// `A_{j,l} = E_{j, (j+l) mod d}`.
pub fn adjusted_basis_element(d: usize, j: usize, l: usize) -> Result<ComplexMatrix> {
    check_pair(d, j, l)?;
    let mut a = ComplexMatrix::zeros(d, d);
    a[(j, (j + l) % d)] = Complex64::new(1.0, 0.0);
    Ok(a)
}

/// `S_{j,l} = Σ_m F(j,m) A_{m,l}`: a phase-weighted cyclic shift by `l`.
pub fn spin_matrix(d: usize, j: usize, l: usize) -> Result<ComplexMatrix> {
    check_pair(d, j, l)?;
    let mut s = ComplexMatrix::zeros(d, d);
    for m in 0..d {
        s[(m, (m + l) % d)] = root_of_unity(d, j * m);
    }
    Ok(s)
}

/// Tensor product of per-subsystem spin matrices, left to right.
pub fn spin_matrix_multi(
    dims: &DimensionSpec,
    j: &MultiIndex,
    l: &MultiIndex,
) -> Result<ComplexMatrix> {
    if j.parts.len() != dims.len() || l.parts.len() != dims.len() {
        return Err(Error::invalid(format!(
            "multi-index lengths ({}, {}) do not match {} subsystems",
            j.parts.len(),
            l.parts.len(),
            dims.len()
        )));
    }
    let mut out = ComplexMatrix::identity(1);
    for (k, &d) in dims.dims().iter().enumerate() {
        out = kron(&out, &spin_matrix(d, j.parts[k], l.parts[k])?);
    }
    Ok(out)
}

/// `a_{j̃,l̃} = ρ_{j̃, j̃⊕l̃}` as an `N×N` array.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjustedCoefficients {
    dims: DimensionSpec,
    a: ComplexMatrix,
}

impl AdjustedCoefficients {
    pub fn dims(&self) -> &DimensionSpec {
        &self.dims
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.a
    }
}

/// Coefficients `s_{j̃,l̃}` of `ρ = (1/N) Σ s_{j̃,l̃} S_{j̃,l̃}`, stored as an
/// `N×N` array indexed by the flattened tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinCoefficients {
    dims: DimensionSpec,
    s: ComplexMatrix,
}

impl SpinCoefficients {
    /// Wraps an arbitrary coefficient array, e.g. for [`from_spin_coeffs`].
    pub fn from_matrix(dims: &DimensionSpec, s: ComplexMatrix) -> Result<Self> {
        let n = dims.total();
        if s.rows() != n || s.cols() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                rows: s.rows(),
                cols: s.cols(),
            });
        }
        Ok(Self {
            dims: dims.clone(),
            s,
        })
    }

    pub fn dims(&self) -> &DimensionSpec {
        &self.dims
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.s
    }

    pub fn get(&self, j: &MultiIndex, l: &MultiIndex) -> Complex64 {
        self.s[(j.flat(&self.dims), l.flat(&self.dims))]
    }

    /// `s_{0̃,0̃}`, which equals `Tr ρ`.
    pub fn identity_coefficient(&self) -> Complex64 {
        self.s[(0, 0)]
    }

    /// `Σ_{(j̃,l̃) ≠ (0̃,0̃)} |s_{j̃,l̃}|`.
    pub fn l1_norm_off_identity(&self) -> f64 {
        self.s.as_slice()[1..].iter().map(|z| z.norm()).sum()
    }

    /// `Σ |s_{j̃,l̃}|²` over all pairs.
    pub fn sum_sqr(&self) -> f64 {
        self.s.frobenius_norm_sqr()
    }
}

/// For each column, applies `v_j ← Σ_m exp(sign·2πi·jm/d_k) v_m` along the
/// component-`k` digit of the row index, for every subsystem `k`.
fn transform_rows(m: &mut ComplexMatrix, dims: &DimensionSpec, sign: f64) {
    let n = dims.total();
    for (k, &d) in dims.dims().iter().enumerate() {
        if d == 1 {
            continue;
        }
        let stride = dims.stride(k);
        let twiddle: Vec<Complex64> = (0..d)
            .map(|p| Complex64::from_polar(1.0, sign * TAU * p as f64 / d as f64))
            .collect();
        let mut gathered = vec![Complex64::new(0.0, 0.0); d];
        for base in (0..n).filter(|r| (r / stride).is_multiple_of(d)) {
            for c in 0..n {
                for (mm, g) in gathered.iter_mut().enumerate() {
                    *g = m[(base + mm * stride, c)];
                }
                for j in 0..d {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (mm, &g) in gathered.iter().enumerate() {
                        acc += twiddle[(j * mm) % d] * g;
                    }
                    m[(base + j * stride, c)] = acc;
                }
            }
        }
    }
}

/// Flat index of `j̃ ⊕ l̃` for every pair, row-major.
fn shifted_index_table(dims: &DimensionSpec) -> Vec<usize> {
    let n = dims.total();
    let parts: Vec<Vec<usize>> = (0..n).map(|i| dims.unflatten(i)).collect();
    let mut table = Vec::with_capacity(n * n);
    for j in &parts {
        for l in &parts {
            let sum: Vec<usize> = j
                .iter()
                .zip(l)
                .zip(dims.dims())
                .map(|((&a, &b), &d)| (a + b) % d)
                .collect();
            table.push(dims.flatten(&sum));
        }
    }
    table
}

/// Reads `ρ` along its shifted diagonals.
pub fn adjusted_coeffs(rho: &DensityMatrix) -> AdjustedCoefficients {
    let dims = rho.dims().clone();
    let n = dims.total();
    let table = shifted_index_table(&dims);
    let mut a = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        for l in 0..n {
            a[(j, l)] = rho.matrix()[(j, table[j * n + l])];
        }
    }
    AdjustedCoefficients { dims, a }
}

pub fn to_spin_coeffs(rho: &DensityMatrix) -> SpinCoefficients {
    let AdjustedCoefficients { dims, mut a } = adjusted_coeffs(rho);
    transform_rows(&mut a, &dims, -1.0);
    SpinCoefficients { dims, s: a }
}

/// Inverse of [`to_spin_coeffs`]; the result is validated as a state, so
/// coefficient arrays that do not describe one are rejected.
pub fn from_spin_coeffs(coeffs: &SpinCoefficients) -> Result<DensityMatrix> {
    let dims = &coeffs.dims;
    let n = dims.total();
    let mut a = coeffs.s.clone();
    transform_rows(&mut a, dims, 1.0);
    let table = shifted_index_table(dims);
    let scale = 1.0 / n as f64;
    let mut rho = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        for l in 0..n {
            rho[(j, table[j * n + l])] = a[(j, l)] * scale;
        }
    }
    validate_density(rho, dims)
}

/// `|Σ|s|² − N·Σ|ρ|²|`; zero up to rounding for every state.
pub fn parseval_residual(rho: &DensityMatrix) -> f64 {
    let n = rho.dims().total() as f64;
    (to_spin_coeffs(rho).sum_sqr() - n * rho.purity()).abs()
}
