//! One-sided separability and entanglement certificates.
//!
//! Every check here is sufficient but not necessary, so a failed check
//! yields [`Verdict::Inconclusive`] rather than the opposite verdict. The
//! partial-transpose test is the one exception on `2×2` and `2×3` systems,
//! where a positive partial transpose is equivalent to separability.
//!
//! | certificate      | proves     | witness                          | threshold               |
//! |------------------|------------|----------------------------------|-------------------------|
//! | `SpinNorm`       | separable  | `Σ' |s_{j̃,l̃}|`                  | `1`                     |
//! | `Purity`         | separable  | `Tr ρ²`                          | `N/(N²−1)`              |
//! | `SeparableBall`  | separable  | mixing weight `ε` toward `ρ'`    | `1/√((N²−1)(N−1))`      |
//! | `Concurrence`    | entangled  | `2(Tr ρ² − Tr ρ_A²)`             | `0`                     |
//! | `EntangledBall`  | entangled  | admixture weight `ε`             | `(d²−√(d⁴−d(d²−1)))/(1+d)` |
//! | `Ppt`            | entangled  | min eigenvalue of `ρ^{T_k}`      | `0`                     |

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spin::to_spin_coeffs;
use crate::tensor::{hermitian_eigenvalues, DensityMatrix, DimensionSpec, PSD_TOL};

/// Absolute slack applied when comparing a witness to its threshold.
pub const THRESHOLD_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Separable,
    Entangled,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Separable => "separable",
            Verdict::Entangled => "entangled",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Certificate {
    SpinNorm,
    Purity,
    SeparableBall,
    Concurrence,
    EntangledBall,
    /// Partial transpose on the given subsystem (0-based).
    Ppt {
        subsystem: usize,
    },
}

impl Certificate {
    /// True when a positive outcome proves separability.
    pub fn proves_separability(self) -> bool {
        matches!(
            self,
            Certificate::SpinNorm | Certificate::Purity | Certificate::SeparableBall
        )
    }

    /// Stable short name; PPT cuts are suffixed with the subsystem.
    pub fn name(self) -> String {
        match self {
            Certificate::SpinNorm => "spin_norm".into(),
            Certificate::Purity => "purity".into(),
            Certificate::SeparableBall => "separable_ball".into(),
            Certificate::Concurrence => "concurrence".into(),
            Certificate::EntangledBall => "entangled_ball".into(),
            Certificate::Ppt { subsystem } => format!("ppt_{subsystem}"),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Outcome of one certificate.
///
/// `margin` is the signed distance to the threshold, oriented so that a
/// positive value is on the side where the certificate fires.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateResult {
    pub certificate: Certificate,
    pub verdict: Verdict,
    pub witness: f64,
    pub threshold: f64,
    pub margin: f64,
}

impl CertificateResult {
    /// Separable when `witness ≤ threshold` up to [`THRESHOLD_SLACK`].
    fn separability(certificate: Certificate, witness: f64, threshold: f64) -> Self {
        let fired = witness <= threshold + THRESHOLD_SLACK;
        Self {
            certificate,
            verdict: if fired {
                Verdict::Separable
            } else {
                Verdict::Inconclusive
            },
            witness,
            threshold,
            margin: threshold - witness,
        }
    }

    fn entanglement(certificate: Certificate, fired: bool, witness: f64, threshold: f64) -> Self {
        Self {
            certificate,
            verdict: if fired {
                Verdict::Entangled
            } else {
                Verdict::Inconclusive
            },
            witness,
            threshold,
            margin: witness - threshold,
        }
    }
}

/// Which state a ball is centred on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BallCenter {
    MaximallyMixed,
    MaximallyEntangled { d: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BallSpec {
    pub center: BallCenter,
    pub epsilon: f64,
    pub epsilon_star: f64,
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::invalid(format!("epsilon {epsilon} outside [0, 1]")));
    }
    Ok(())
}

fn check_total(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "total dimension must be >= 2, got {n}"
        )));
    }
    Ok(())
}

fn check_local(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::invalid(format!(
            "local dimension must be >= 2, got {d}"
        )));
    }
    Ok(())
}

/// `‖ρ‖_{1,D} = Σ_{(j̃,l̃)≠(0̃,0̃)} |s_{j̃,l̃}|`.
pub fn l1_spin_norm(rho: &DensityMatrix) -> f64 {
    to_spin_coeffs(rho).l1_norm_off_identity()
}

/// Separable whenever the off-identity spin coefficients have `ℓ1` norm at most one.
pub fn certify_spin_norm(rho: &DensityMatrix) -> CertificateResult {
    CertificateResult::separability(Certificate::SpinNorm, l1_spin_norm(rho), 1.0)
}

/// `N/(N²−1)`: every state with purity at or below this is fully separable.
pub fn purity_threshold(n: usize) -> Result<f64> {
    check_total(n)?;
    let n = n as f64;
    Ok(n / (n * n - 1.0))
}

pub fn certify_purity(rho: &DensityMatrix) -> CertificateResult {
    let threshold = purity_threshold(rho.dims().total()).unwrap_or(f64::INFINITY);
    CertificateResult::separability(Certificate::Purity, rho.purity(), threshold)
}

/// `1/√((N²−1)(N−1))`: radius of the separable ball around `I/N`.
pub fn separable_ball_radius(n: usize) -> Result<f64> {
    check_total(n)?;
    let n = n as f64;
    Ok(1.0 / ((n * n - 1.0) * (n - 1.0)).sqrt())
}

/// `(1−ε) I/N + ε ρ'`.
pub fn mix_with_identity(rho_prime: &DensityMatrix, epsilon: f64) -> Result<DensityMatrix> {
    check_epsilon(epsilon)?;
    DensityMatrix::maximally_mixed(rho_prime.dims()).mix(rho_prime, epsilon)
}

/// Separable whenever `ε ≤ ε*`; returns the mixture alongside the verdict.
pub fn certify_separable_ball(
    rho_prime: &DensityMatrix,
    epsilon: f64,
) -> Result<(CertificateResult, DensityMatrix)> {
    let mixture = mix_with_identity(rho_prime, epsilon)?;
    let radius = separable_ball_radius(rho_prime.dims().total())?;
    let result = CertificateResult::separability(Certificate::SeparableBall, epsilon, radius);
    Ok((result, mixture))
}

fn require_equal_bipartite(dims: &DimensionSpec) -> Result<usize> {
    match dims.equal_bipartite() {
        Some(d) if d >= 2 => Ok(d),
        _ => Err(Error::invalid(format!(
            "concurrence bound needs two subsystems of equal dimension >= 2, got {dims}"
        ))),
    }
}

/// `2(Tr ρ² − Tr ρ_A²)`, the quantity the squared concurrence dominates.
pub fn concurrence_witness(rho: &DensityMatrix) -> Result<f64> {
    require_equal_bipartite(rho.dims())?;
    let marginal = rho.partial_trace(&[0])?;
    Ok(2.0 * (rho.purity() - marginal.frobenius_norm_sqr()))
}

/// `√max(0, 2(Tr ρ² − Tr ρ_A²)) ≤ C(ρ)`.
pub fn concurrence_lower_bound(rho: &DensityMatrix) -> Result<f64> {
    Ok(concurrence_witness(rho)?.max(0.0).sqrt())
}

pub fn certify_concurrence(rho: &DensityMatrix) -> Result<CertificateResult> {
    let witness = concurrence_witness(rho)?;
    Ok(CertificateResult::entanglement(
        Certificate::Concurrence,
        witness > THRESHOLD_SLACK,
        witness,
        0.0,
    ))
}

/// `(d² − √(d⁴ − d(d²−1)))/(1+d)`: radius of the entangled ball around `|Φ⟩`.
pub fn entangled_ball_radius(d: usize) -> Result<f64> {
    check_local(d)?;
    let d = d as f64;
    let d2 = d * d;
    let disc = d2 * d2 - d * (d2 - 1.0);
    // d² − √disc loses digits for large d; use the conjugate form.
    Ok((d2 * d2 - disc) / ((d2 + disc.sqrt()) * (1.0 + d)))
}

/// `|Φ⟩⟨Φ|` with `|Φ⟩ = Σ_i |ii⟩/√d`.
pub fn max_entangled_state(d: usize) -> Result<DensityMatrix> {
    check_local(d)?;
    let dims = DimensionSpec::qudits(d)?;
    let mut ket = vec![Complex64::new(0.0, 0.0); d * d];
    for i in 0..d {
        ket[i * d + i] = Complex64::new(1.0, 0.0);
    }
    DensityMatrix::pure(&ket, &dims)
}

/// Entangled whenever `ε < ε*`; returns `(1−ε)|Φ⟩⟨Φ| + ε ρ'` alongside.
pub fn certify_entangled_ball(
    rho_prime: &DensityMatrix,
    epsilon: f64,
    d: usize,
) -> Result<(CertificateResult, DensityMatrix)> {
    check_epsilon(epsilon)?;
    let center = max_entangled_state(d)?;
    if rho_prime.dims() != center.dims() {
        return Err(Error::invalid(format!(
            "admixed state lives on {}, expected {}",
            rho_prime.dims(),
            center.dims()
        )));
    }
    let mixture = center.mix(rho_prime, epsilon)?;
    let radius = entangled_ball_radius(d)?;
    let result = CertificateResult {
        certificate: Certificate::EntangledBall,
        verdict: if epsilon < radius - THRESHOLD_SLACK {
            Verdict::Entangled
        } else {
            Verdict::Inconclusive
        },
        witness: epsilon,
        threshold: radius,
        margin: radius - epsilon,
    };
    Ok((result, mixture))
}

fn ppt_is_exact(dims: &DimensionSpec) -> bool {
    matches!(dims.dims(), [2, 2] | [2, 3] | [3, 2])
}

/// Minimum eigenvalue of the partial transpose on `subsystem` (0-based).
pub fn min_partial_transpose_eigenvalue(rho: &DensityMatrix, subsystem: usize) -> Result<f64> {
    let pt = rho.partial_transpose(subsystem)?;
    Ok(hermitian_eigenvalues(&pt)?[0])
}

/// Peres test on one cut; also proves separability on `2×2` and `2×3`.
pub fn ppt_check(rho: &DensityMatrix, subsystem: usize) -> Result<CertificateResult> {
    let min_eig = min_partial_transpose_eigenvalue(rho, subsystem)?;
    let certificate = Certificate::Ppt { subsystem };
    let verdict = if min_eig < -PSD_TOL {
        Verdict::Entangled
    } else if ppt_is_exact(rho.dims()) {
        Verdict::Separable
    } else {
        Verdict::Inconclusive
    };
    Ok(CertificateResult {
        certificate,
        verdict,
        witness: min_eig,
        threshold: 0.0,
        margin: -min_eig,
    })
}

/// Subsystems whose partial transpose is tested by [`certify_all`]. On two
/// subsystems both cuts are the same bipartition, so only one is used.
pub fn ppt_cuts(dims: &DimensionSpec) -> Vec<usize> {
    match dims.len() {
        1 => vec![],
        2 => vec![1],
        n => (0..n).collect(),
    }
}

/// Spin norm, purity, every PPT cut, then concurrence when it applies.
pub fn certify_all(rho: &DensityMatrix) -> Vec<CertificateResult> {
    let mut out = vec![certify_spin_norm(rho), certify_purity(rho)];
    for cut in ppt_cuts(rho.dims()) {
        out.push(ppt_check(rho, cut).expect("cut index is in range"));
    }
    if require_equal_bipartite(rho.dims()).is_ok() {
        out.push(certify_concurrence(rho).expect("dims checked"));
    }
    out
}

/// Overall verdict of a set of results. Contradictory sets are reported as
/// inconclusive.
pub fn summarize(results: &[CertificateResult]) -> Verdict {
    let separable = results.iter().any(|r| r.verdict == Verdict::Separable);
    let entangled = results.iter().any(|r| r.verdict == Verdict::Entangled);
    match (separable, entangled) {
        (true, false) => Verdict::Separable,
        (false, true) => Verdict::Entangled,
        _ => Verdict::Inconclusive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn werner(eps: f64) -> DensityMatrix {
        mix_with_identity(&max_entangled_state(2).unwrap(), eps).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn spin_norm_examples() {
        let dims = DimensionSpec::qudits(2).unwrap();
        assert!(l1_spin_norm(&DensityMatrix::maximally_mixed(&dims)) < 1e-14);
        assert!(close(
            l1_spin_norm(&max_entangled_state(2).unwrap()),
            3.0,
            1e-12
        ));
        assert!(close(l1_spin_norm(&werner(0.2)), 0.6, 1e-12));
    }

    #[test]
    fn spin_norm_certificate() {
        let dims = DimensionSpec::qudits(2).unwrap();
        let r = certify_spin_norm(&DensityMatrix::maximally_mixed(&dims));
        assert_eq!(r.verdict, Verdict::Separable);
        assert!(r.witness.abs() < 1e-14);

        let r = certify_spin_norm(&werner(0.3));
        assert_eq!(r.verdict, Verdict::Separable);
        assert!(close(r.witness, 0.9, 1e-12));

        let r = certify_spin_norm(&werner(0.4));
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert!(close(r.witness, 1.2, 1e-12));
        assert_eq!(r.threshold, 1.0);
    }

    #[test]
    fn purity_thresholds() {
        assert!(close(purity_threshold(4).unwrap(), 4.0 / 15.0, 1e-15));
        assert!(close(purity_threshold(6).unwrap(), 6.0 / 35.0, 1e-15));
        assert!(close(purity_threshold(9).unwrap(), 0.1125, 1e-15));
        assert!(purity_threshold(1).is_err());
    }

    #[test]
    fn purity_certificate() {
        let r = certify_purity(&werner(0.1));
        assert_eq!(r.verdict, Verdict::Separable);
        assert!(close(r.witness, 0.2575, 1e-12));
        let r = certify_purity(&werner(1.0 / 3.0));
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert!(close(r.witness, 1.0 / 3.0, 1e-12));
        assert_eq!(
            certify_purity(&max_entangled_state(3).unwrap()).verdict,
            Verdict::Inconclusive
        );
    }

    #[test]
    fn separable_ball() {
        assert!(close(separable_ball_radius(4).unwrap(), 0.149071, 1e-6));
        assert!(close(separable_ball_radius(9).unwrap(), 0.0395285, 1e-7));
        assert!(close(separable_ball_radius(2).unwrap(), 0.57735, 1e-5));
        assert!(separable_ball_radius(0).is_err());

        let phi = max_entangled_state(2).unwrap();
        let (r, mixture) = certify_separable_ball(&phi, 0.14).unwrap();
        assert_eq!(r.verdict, Verdict::Separable);
        assert_eq!(certify_purity(&mixture).verdict, Verdict::Separable);
        assert_eq!(
            certify_separable_ball(&phi, 0.16).unwrap().0.verdict,
            Verdict::Inconclusive
        );
        assert_eq!(
            certify_separable_ball(&phi, 0.0).unwrap().0.verdict,
            Verdict::Separable
        );
        assert!(certify_separable_ball(&phi, 1.5).is_err());
    }

    #[test]
    fn mixing_endpoints() {
        let phi = max_entangled_state(2).unwrap();
        let dims = phi.dims().clone();
        let at0 = mix_with_identity(&phi, 0.0).unwrap();
        assert!(
            at0.matrix()
                .max_abs_diff(DensityMatrix::maximally_mixed(&dims).matrix())
                .unwrap()
                < 1e-15
        );
        let at1 = mix_with_identity(&phi, 1.0).unwrap();
        assert!(at1.matrix().max_abs_diff(phi.matrix()).unwrap() < 1e-15);
        assert!(mix_with_identity(&phi, -0.1).is_err());
    }

    #[test]
    fn concurrence_bounds() {
        assert!(close(
            concurrence_lower_bound(&max_entangled_state(2).unwrap()).unwrap(),
            1.0,
            1e-12
        ));
        let dims = DimensionSpec::new(vec![2]).unwrap();
        let up = DensityMatrix::pure(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], &dims)
            .unwrap();
        let product = up.product(&up);
        assert!(concurrence_lower_bound(&product).unwrap().abs() < 1e-7);
        assert!(close(
            concurrence_lower_bound(&werner(0.8)).unwrap(),
            0.46f64.sqrt(),
            1e-12
        ));

        let unequal = DensityMatrix::maximally_mixed(&DimensionSpec::new(vec![2, 3]).unwrap());
        assert!(concurrence_lower_bound(&unequal).is_err());
        let tri = DensityMatrix::maximally_mixed(&DimensionSpec::new(vec![2, 2, 2]).unwrap());
        assert!(certify_concurrence(&tri).is_err());
    }

    #[test]
    fn concurrence_certificate() {
        assert_eq!(
            certify_concurrence(&max_entangled_state(2).unwrap())
                .unwrap()
                .verdict,
            Verdict::Entangled
        );
        let dims = DimensionSpec::qudits(2).unwrap();
        let r = certify_concurrence(&DensityMatrix::maximally_mixed(&dims)).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert!(close(r.witness, -0.5, 1e-14));
        let r = certify_concurrence(&werner(0.5)).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert!(close(r.witness, 2.0 * (0.4375 - 0.5), 1e-12));
    }

    #[test]
    fn entangled_ball_radii() {
        assert!(close(
            entangled_ball_radius(2).unwrap(),
            (4.0 - 10f64.sqrt()) / 3.0,
            1e-15
        ));
        assert!(close(
            entangled_ball_radius(3).unwrap(),
            (9.0 - 57f64.sqrt()) / 4.0,
            1e-15
        ));
        let big = entangled_ball_radius(1000).unwrap();
        assert!(big < 0.5 && 0.5 - big < 1e-3);
        for d in 2..50 {
            assert!(entangled_ball_radius(d + 1).unwrap() > entangled_ball_radius(d).unwrap());
        }
        assert!(entangled_ball_radius(1).is_err());
    }

    #[test]
    fn maximally_entangled_states() {
        let phi = max_entangled_state(2).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                let expected = if [0, 3].contains(&r) && [0, 3].contains(&c) {
                    0.5
                } else {
                    0.0
                };
                assert!((phi.matrix()[(r, c)] - Complex64::new(expected, 0.0)).norm() < 1e-15);
            }
        }
        let phi3 = max_entangled_state(3).unwrap();
        assert!(close(phi3.purity(), 1.0, 1e-14));
        assert!(close(
            phi3.partial_trace(&[0]).unwrap().frobenius_norm_sqr(),
            1.0 / 3.0,
            1e-14
        ));
        for d in 2..6 {
            let lb = concurrence_lower_bound(&max_entangled_state(d).unwrap()).unwrap();
            assert!(close(lb, (2.0 * (1.0 - 1.0 / d as f64)).sqrt(), 1e-12));
        }
        assert!(max_entangled_state(1).is_err());
    }

    #[test]
    fn entangled_ball_certificate() {
        let dims = DimensionSpec::qudits(2).unwrap();
        let mixed = DensityMatrix::maximally_mixed(&dims);
        let (r, mixture) = certify_entangled_ball(&mixed, 0.2, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Entangled);
        assert!(mixture.matrix().max_abs_diff(werner(0.8).matrix()).unwrap() < 1e-15);
        assert!(close(
            concurrence_lower_bound(&mixture).unwrap(),
            0.46f64.sqrt(),
            1e-12
        ));

        assert_eq!(
            certify_entangled_ball(&mixed, 0.3, 2).unwrap().0.verdict,
            Verdict::Inconclusive
        );
        assert_eq!(
            certify_entangled_ball(&mixed, 0.0, 2).unwrap().0.verdict,
            Verdict::Entangled
        );
        assert!(certify_entangled_ball(&mixed, 0.1, 3).is_err());
        assert!(certify_entangled_ball(&mixed, 1.1, 2).is_err());
    }

    #[test]
    fn ppt_examples() {
        let r = ppt_check(&werner(0.5), 1).unwrap();
        assert_eq!(r.verdict, Verdict::Entangled);
        assert!(close(r.witness, -0.125, 1e-12));
        let r = ppt_check(&werner(1.0 / 3.0 - 1e-6), 1).unwrap();
        assert_eq!(r.verdict, Verdict::Separable);
        assert!(r.witness > 0.0);

        let q = DimensionSpec::new(vec![3]).unwrap();
        let a = DensityMatrix::maximally_mixed(&q)
            .mix(
                &DensityMatrix::pure(
                    &[
                        Complex64::new(1.0, 0.0),
                        Complex64::new(0.0, 1.0),
                        Complex64::new(0.5, 0.0),
                    ],
                    &q,
                )
                .unwrap(),
                0.7,
            )
            .unwrap();
        let product = a.product(&a);
        let r = ppt_check(&product, 1).unwrap();
        assert_ne!(r.verdict, Verdict::Entangled);
        assert!(r.witness >= -PSD_TOL);
        assert!(ppt_check(&product, 2).is_err());
    }

    #[test]
    fn certify_all_ordering_and_verdicts() {
        let dims = DimensionSpec::qudits(2).unwrap();
        let verdicts = |rho: &DensityMatrix| -> Vec<(String, Verdict)> {
            certify_all(rho)
                .iter()
                .map(|r| (r.certificate.name(), r.verdict))
                .collect()
        };
        use Verdict::*;
        assert_eq!(
            verdicts(&DensityMatrix::maximally_mixed(&dims)),
            vec![
                ("spin_norm".into(), Separable),
                ("purity".into(), Separable),
                ("ppt_1".into(), Separable),
                ("concurrence".into(), Inconclusive),
            ]
        );
        assert_eq!(
            verdicts(&max_entangled_state(2).unwrap()),
            vec![
                ("spin_norm".into(), Inconclusive),
                ("purity".into(), Inconclusive),
                ("ppt_1".into(), Entangled),
                ("concurrence".into(), Entangled),
            ]
        );
        let w = certify_all(&werner(0.2));
        assert_eq!(w[0].verdict, Separable);
        assert_eq!(w[2].verdict, Separable);
        assert_eq!(summarize(&w), Separable);

        let tri = DensityMatrix::maximally_mixed(&DimensionSpec::new(vec![2, 2, 2]).unwrap());
        let names: Vec<String> = certify_all(&tri)
            .iter()
            .map(|r| r.certificate.name())
            .collect();
        assert_eq!(names, ["spin_norm", "purity", "ppt_0", "ppt_1", "ppt_2"]);
    }

    #[test]
    fn summary_of_mixed_results() {
        let r = |verdict| CertificateResult {
            certificate: Certificate::SpinNorm,
            verdict,
            witness: 0.0,
            threshold: 0.0,
            margin: 0.0,
        };
        assert_eq!(
            summarize(&[r(Verdict::Inconclusive)]),
            Verdict::Inconclusive
        );
        assert_eq!(
            summarize(&[r(Verdict::Entangled), r(Verdict::Inconclusive)]),
            Verdict::Entangled
        );
        assert_eq!(
            summarize(&[r(Verdict::Entangled), r(Verdict::Separable)]),
            Verdict::Inconclusive
        );
    }
}
