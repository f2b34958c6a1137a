//! Dense complex linear algebra on small composite systems.
//!
//! Composite indices are flattened with the leftmost subsystem most
//! significant, so for dimensions `(d_1, …, d_n)` the tuple `(j_1, …, j_n)`
//! maps to `Σ_k j_k · ∏_{m>k} d_m`. [`kron`] uses the same convention, which
//! makes `kron(a, b)` act as `a` on subsystem 0 and `b` on subsystem 1.

use std::fmt;
use std::ops::{Index, IndexMut};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance on `|m_jl - conj(m_lj)|` for a matrix to count as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Allowed deviation of the trace from one.
pub const TRACE_TOL: f64 = 1e-10;
/// Smallest eigenvalue tolerated for a positive semidefinite matrix.
pub const PSD_TOL: f64 = 1e-10;

/// Row-major dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::invalid("matrix dimensions must be at least 1"));
        }
        if data.len() != rows * cols {
            return Err(Error::invalid(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be at least 1");
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &x) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(x, 0.0);
        }
        m
    }

    /// Builds a matrix from real rows; panics on ragged input.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)))
            .collect();
        Self::new(rows.len(), cols, data).expect("non-empty rows")
    }

    /// `|ψ⟩⟨ψ|` for an unnormalized ket.
    pub fn outer(ket: &[Complex64]) -> Self {
        let n = ket.len();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = ket[i] * ket[j].conj();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)];
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let rhs_row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let out_row = &mut out.data[r * rhs.cols..(r + 1) * rhs.cols];
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// `alpha * self + beta * other`.
    pub fn combine(&self, alpha: f64, other: &Self, beta: f64) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a * alpha + b * beta)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_shape(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// `max |m_jl - conj(m_lj)|` for a square matrix.
    pub fn hermitian_residual(&self) -> f64 {
        assert!(self.is_square());
        let mut worst: f64 = 0.0;
        for r in 0..self.rows {
            for c in r..self.cols {
                worst = worst.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        worst
    }

    /// Sum of squared moduli of all entries.
    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::invalid(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub(crate) fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(self.rows, self.cols, &self.data)
    }

    pub(crate) fn from_nalgebra(m: &DMatrix<Complex64>) -> Self {
        let mut out = Self::zeros(m.nrows(), m.ncols());
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                out[(r, c)] = m[(r, c)];
            }
        }
        out
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, " ")?;
            for c in 0..self.cols {
                let z = self[(r, c)];
                write!(f, " {:+.4}{:+.4}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Kronecker product; the row index of the result is `j_a · r_b + j_b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for ar in 0..a.rows {
        for ac in 0..a.cols {
            let x = a[(ar, ac)];
            if x == Complex64::new(0.0, 0.0) {
                continue;
            }
            for br in 0..b.rows {
                for bc in 0..b.cols {
                    out[(ar * b.rows + br, ac * b.cols + bc)] = x * b[(br, bc)];
                }
            }
        }
    }
    out
}

/// Subsystem dimensions `(d_1, …, d_n)` of a composite Hilbert space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DimensionSpec {
    dims: Vec<usize>,
    total: usize,
}

impl DimensionSpec {
    pub fn new(dims: impl Into<Vec<usize>>) -> Result<Self> {
        let dims = dims.into();
        if dims.is_empty() {
            return Err(Error::invalid("at least one subsystem is required"));
        }
        if dims.contains(&0) {
            return Err(Error::invalid(format!(
                "subsystem dimensions must be >= 1, got {dims:?}"
            )));
        }
        let total = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::invalid("total dimension overflows"))?;
        Ok(Self { dims, total })
    }

    /// Two subsystems of dimension `d` each.
    pub fn qudits(d: usize) -> Result<Self> {
        Self::new(vec![d, d])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of index steps between consecutive values of component `k`.
    pub fn stride(&self, k: usize) -> usize {
        self.dims[k + 1..].iter().product()
    }

    /// Returns `Some(d)` when the system is two subsystems of equal dimension.
    pub fn equal_bipartite(&self) -> Option<usize> {
        match self.dims.as_slice() {
            [a, b] if a == b => Some(*a),
            _ => None,
        }
    }

    pub fn flatten(&self, parts: &[usize]) -> usize {
        debug_assert_eq!(parts.len(), self.dims.len());
        parts
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&j, &d)| acc * d + j)
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut parts = vec![0; self.dims.len()];
        for (slot, &d) in parts.iter_mut().zip(&self.dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        parts
    }

    fn check_subsystem(&self, k: usize) -> Result<()> {
        if k >= self.dims.len() {
            return Err(Error::invalid(format!(
                "subsystem {k} out of range for {} subsystems",
                self.dims.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for DimensionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// A validated density matrix on a composite system.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    dims: DimensionSpec,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// `I/N`.
    pub fn maximally_mixed(dims: &DimensionSpec) -> Self {
        let n = dims.total();
        Self {
            dims: dims.clone(),
            matrix: ComplexMatrix::identity(n).scale_real(1.0 / n as f64),
        }
    }

    /// Projector onto the normalized ket.
    pub fn pure(ket: &[Complex64], dims: &DimensionSpec) -> Result<Self> {
        if ket.len() != dims.total() {
            return Err(Error::invalid(format!(
                "ket of length {} does not match dimension {}",
                ket.len(),
                dims.total()
            )));
        }
        let norm = ket.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::invalid("ket has zero or non-finite norm"));
        }
        let normalized: Vec<Complex64> = ket.iter().map(|&z| z / norm).collect();
        Ok(Self {
            dims: dims.clone(),
            matrix: ComplexMatrix::outer(&normalized),
        })
    }

    /// Tensor product of states, subsystems concatenated left to right.
    pub fn product(&self, other: &Self) -> Self {
        let mut dims = self.dims.dims().to_vec();
        dims.extend_from_slice(other.dims.dims());
        Self {
            dims: DimensionSpec::new(dims).expect("concatenation of valid specs"),
            matrix: kron(&self.matrix, &other.matrix),
        }
    }

    pub fn dims(&self) -> &DimensionSpec {
        &self.dims
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// `Tr ρ²`, computed as `Σ |ρ_jl|²`.
    pub fn purity(&self) -> f64 {
        self.matrix.frobenius_norm_sqr()
    }

    /// Reduced matrix on the kept subsystems (0-based indices).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<ComplexMatrix> {
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() || sorted.len() == self.dims.len() {
            return Err(Error::invalid(
                "partial trace needs a nonempty proper subset of subsystems to keep",
            ));
        }
        for &k in &sorted {
            self.dims.check_subsystem(k)?;
        }
        Ok(partial_trace_matrix(&self.matrix, &self.dims, &sorted))
    }

    /// Partial transpose on `subsystem` (0-based).
    pub fn partial_transpose(&self, subsystem: usize) -> Result<ComplexMatrix> {
        partial_transpose_matrix(&self.matrix, &self.dims, subsystem)
    }

    /// Unitary conjugation `U ρ U†`; the result is re-symmetrized.
    pub fn conjugate_by(&self, u: &ComplexMatrix) -> Result<Self> {
        let m = u.matmul(&self.matrix)?.matmul(&u.adjoint())?;
        Ok(Self {
            dims: self.dims.clone(),
            matrix: hermitize(&m),
        })
    }

    /// Convex combination `(1 - t) self + t other`.
    pub fn mix(&self, other: &Self, t: f64) -> Result<Self> {
        if self.dims != other.dims {
            return Err(Error::invalid(format!(
                "cannot mix states on {} and {}",
                self.dims, other.dims
            )));
        }
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::invalid(format!("mixing weight {t} outside [0, 1]")));
        }
        Ok(Self {
            dims: self.dims.clone(),
            matrix: self.matrix.combine(1.0 - t, &other.matrix, t)?,
        })
    }

    /// Wraps a matrix that is a state by construction.
    pub(crate) fn from_trusted(dims: DimensionSpec, matrix: ComplexMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), dims.total());
        Self { dims, matrix }
    }
}

/// `(m + m†) / 2`.
pub(crate) fn hermitize(m: &ComplexMatrix) -> ComplexMatrix {
    m.combine(0.5, &m.adjoint(), 0.5)
        .expect("square matrix has same shape as its adjoint")
}

/// Checks Hermiticity, unit trace and positivity, in that order.
pub fn validate_density(m: ComplexMatrix, dims: &DimensionSpec) -> Result<DensityMatrix> {
    let n = dims.total();
    if m.rows() != n || m.cols() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.as_slice()
        .iter()
        .any(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return Err(Error::invalid("matrix has non-finite entries"));
    }
    let residual = m.hermitian_residual();
    if residual > HERMITIAN_TOL {
        return Err(Error::NotHermitian { residual });
    }
    let trace = m.trace().re;
    if (trace - 1.0).abs() > TRACE_TOL {
        return Err(Error::TraceNotOne { trace });
    }
    let min_eigenvalue = hermitian_eigenvalues(&m)?[0];
    if min_eigenvalue < -PSD_TOL {
        return Err(Error::NotPsd { min_eigenvalue });
    }
    Ok(DensityMatrix {
        dims: dims.clone(),
        matrix: m,
    })
}

/// All eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::invalid(format!(
            "eigenvalues need a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let residual = m.hermitian_residual();
    if residual > HERMITIAN_TOL {
        return Err(Error::NotHermitian { residual });
    }
    let mut values: Vec<f64> = hermitize(m)
        .to_nalgebra()
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Traces out every subsystem not listed in `keep` (sorted, 0-based).
pub fn partial_trace_matrix(
    m: &ComplexMatrix,
    dims: &DimensionSpec,
    keep: &[usize],
) -> ComplexMatrix {
    let n = dims.total();
    assert_eq!(m.rows(), n);
    let kept_dims: Vec<usize> = keep.iter().map(|&k| dims.dims()[k]).collect();
    let kept_spec = DimensionSpec::new(kept_dims).expect("kept subsystems are valid");
    let traced: Vec<usize> = (0..dims.len()).filter(|k| !keep.contains(k)).collect();

    let parts: Vec<Vec<usize>> = (0..n).map(|i| dims.unflatten(i)).collect();
    let reduced_index: Vec<usize> = parts
        .iter()
        .map(|p| {
            let kept: Vec<usize> = keep.iter().map(|&k| p[k]).collect();
            kept_spec.flatten(&kept)
        })
        .collect();

    let mut out = ComplexMatrix::zeros(kept_spec.total(), kept_spec.total());
    for r in 0..n {
        for c in 0..n {
            if traced.iter().all(|&t| parts[r][t] == parts[c][t]) {
                out[(reduced_index[r], reduced_index[c])] += m[(r, c)];
            }
        }
    }
    out
}

/// Swaps the row and column components of `subsystem` (0-based).
pub fn partial_transpose_matrix(
    m: &ComplexMatrix,
    dims: &DimensionSpec,
    subsystem: usize,
) -> Result<ComplexMatrix> {
    dims.check_subsystem(subsystem)?;
    let n = dims.total();
    if m.rows() != n || m.cols() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let d = dims.dims()[subsystem];
    let stride = dims.stride(subsystem);
    let digit = |i: usize| (i / stride) % d;
    let mut out = ComplexMatrix::zeros(n, n);
    for r in 0..n {
        let jr = digit(r);
        for c in 0..n {
            let jc = digit(c);
            let r2 = r - jr * stride + jc * stride;
            let c2 = c - jc * stride + jr * stride;
            out[(r2, c2)] = m[(r, c)];
        }
    }
    Ok(out)
}
