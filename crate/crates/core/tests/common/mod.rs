#![allow(dead_code, clippy::needless_range_loop)]

use num_complex::Complex64;
use rand::Rng;
use voss::certificates::{max_entangled_state, mix_with_identity};
use voss::sampling::{sample_state, MeasureKind, StreamRng};
use voss::spin::{adjusted_basis_element, fourier_matrix, spin_matrix_multi, MultiIndex};
use voss::tensor::kron;
use voss::{ComplexMatrix, DensityMatrix, DimensionSpec};

pub fn dims(d: &[usize]) -> DimensionSpec {
    DimensionSpec::new(d.to_vec()).unwrap()
}

/// `(1−ε) I/4 + ε |Φ⁺⟩⟨Φ⁺|`.
pub fn werner(eps: f64) -> DensityMatrix {
    mix_with_identity(&max_entangled_state(2).unwrap(), eps).unwrap()
}

pub fn natural(dims: &DimensionSpec, rng: &mut StreamRng) -> DensityMatrix {
    sample_state(dims, MeasureKind::Natural, rng)
}

pub fn random_hermitian<R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix {
    let data = (0..n * n)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let g = ComplexMatrix::new(n, n, data).unwrap();
    g.combine(0.5, &g.adjoint(), 0.5).unwrap()
}

/// Spin coefficients by projection, `s_{j̃,l̃} = Tr[S_{j̃,l̃}† ρ]`, using the
/// explicit tensor-product spin matrices.
pub fn spin_coeffs_by_projection(rho: &DensityMatrix) -> ComplexMatrix {
    let dims = rho.dims();
    let n = dims.total();
    let mut s = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        for l in 0..n {
            let sj = MultiIndex::from_flat(dims, j).unwrap();
            let sl = MultiIndex::from_flat(dims, l).unwrap();
            let op = spin_matrix_multi(dims, &sj, &sl).unwrap();
            s[(j, l)] = op.adjoint().matmul(rho.matrix()).unwrap().trace();
        }
    }
    s
}

/// `F^[N] = F^(d_1) ⊗ … ⊗ F^(d_n)` as a dense matrix.
pub fn composite_fourier(dims: &DimensionSpec) -> ComplexMatrix {
    dims.dims()
        .iter()
        .fold(ComplexMatrix::identity(1), |acc, &d| {
            kron(&acc, &fourier_matrix(d).unwrap())
        })
}

/// `A^[N]_{j̃,l̃} = ⊗_k A^(d_k)_{j_k,l_k}`.
pub fn composite_adjusted(dims: &DimensionSpec, j: &[usize], l: &[usize]) -> ComplexMatrix {
    dims.dims()
        .iter()
        .enumerate()
        .fold(ComplexMatrix::identity(1), |acc, (k, &d)| {
            kron(&acc, &adjusted_basis_element(d, j[k], l[k]).unwrap())
        })
}

/// Sorted real eigenvalues of a Hermitian matrix via its real symmetric
/// embedding `[[Re, −Im], [Im, Re]]`, computed by cyclic Jacobi rotations.
pub fn jacobi_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    let n = m.rows();
    let size = 2 * n;
    let mut a = vec![vec![0.0f64; size]; size];
    for r in 0..n {
        for c in 0..n {
            let z = m[(r, c)];
            a[r][c] = z.re;
            a[r + n][c + n] = z.re;
            a[r][c + n] = -z.im;
            a[r + n][c] = z.im;
        }
    }
    for _sweep in 0..100 {
        let off: f64 = (0..size)
            .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..size {
            for q in p + 1..size {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..size {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..size {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut diag: Vec<f64> = (0..size).map(|i| a[i][i]).collect();
    diag.sort_by(f64::total_cmp);
    // every eigenvalue appears twice in the embedding
    diag.chunks(2)
        .map(|pair| 0.5 * (pair[0] + pair[1]))
        .collect()
}

/// Permutation matrix sending basis vector `i` to `perm[i]`.
pub fn permutation_matrix(perm: &[usize]) -> ComplexMatrix {
    let n = perm.len();
    let mut p = ComplexMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p[(j, i)] = Complex64::new(1.0, 0.0);
    }
    p
}

/// Two-sample Kolmogorov–Smirnov distance.
pub fn ks_distance(a: &mut [f64], b: &mut [f64]) -> f64 {
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (mut i, mut j, mut worst) = (0usize, 0usize, 0.0f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        let fa = i as f64 / a.len() as f64;
        let fb = j as f64 / b.len() as f64;
        worst = worst.max((fa - fb).abs());
    }
    worst
}
