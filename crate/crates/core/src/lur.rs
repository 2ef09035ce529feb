//! Correlation and local-uncertainty quantities for qutrit pairs.
//!
//! For eight operator pairs `(A_i, B_i)` the LUR sum is
//! `Σ_i δ(A_i ⊗ 1 − 1 ⊗ B_i)²`; no separable state goes below 8. With both
//! sides generator bases it splits as `32/3 − 2·K_total − Σ_i mismatch_i²`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{bisect_root, kron, nuclear_norm, ComplexMatrix, RealMatrix};
use crate::qutrit::{check_a, make_asymmetric_frame, make_canonical_basis, GeneratorBasis};
use crate::states::{make_bound_state, mix_with_white_noise, BipartiteState, Side};
use crate::witnesses::ppt_check;

/// Imaginary residue tolerated on expectation values of Hermitian operators.
const IMAG_TOL: f64 = 1e-12;

/// Separable lower bound on the LUR sum.
pub const SEPARABLE_BOUND: f64 = 8.0;

/// Σ_i ⟨(A_i ⊗ 1 − 1 ⊗ B_i)²⟩ for two generator bases.
pub const SQUARE_SUM: f64 = 32.0 / 3.0;

/// Eight aligned operator pairs `(side-1 operator, side-2 operator)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorPairing {
    pub pairs: Vec<(ComplexMatrix, ComplexMatrix)>,
}

impl OperatorPairing {
    /// Pairs `basis1[i]` with `basis2[i]`; both must be generator bases.
    pub fn from_bases(basis1: &GeneratorBasis, basis2: &GeneratorBasis) -> Result<Self> {
        for b in [basis1, basis2] {
            let worst = b.residuals().worst();
            if worst > 1e-10 {
                return Err(Error::argument(format!("operator set is not a generator basis (residual {worst:.3e})")));
            }
        }
        Ok(Self { pairs: basis1.lambdas.iter().cloned().zip(basis2.lambdas.iter().cloned()).collect() })
    }

    pub fn side(&self, side: Side) -> GeneratorBasis {
        let lambdas = self
            .pairs
            .iter()
            .map(|(a, b)| match side {
                Side::One => a.clone(),
                Side::Two => b.clone(),
            })
            .collect();
        GeneratorBasis { lambdas, labels: (1..=self.pairs.len()).map(|i| format!("lambda{i}")).collect() }
    }
}

/// The analytic alignment:
///
/// ```text
/// (l_x, l_x) (−l_y, l_y) (−Q_xy, Q_xy) (−Q_yz, Q_yz) (Q_zx, Q_zx)
/// (Z, l_z)   (F_xy, S_xy) (F_z, G_z)
/// ```
///
/// with `Z, F_xy, F_z` from [`make_asymmetric_frame`].
pub fn make_aligned_pairing(a: f64) -> Result<OperatorPairing> {
    let frame = make_asymmetric_frame(a)?;
    let canon = make_canonical_basis();
    let l = &canon.lambdas;
    let side1 = [
        l[0].clone(),
        l[1].scale(-1.0),
        l[2].scale(-1.0),
        l[3].scale(-1.0),
        l[4].clone(),
        frame.z,
        frame.fxy,
        frame.fz,
    ];
    Ok(OperatorPairing { pairs: side1.into_iter().zip(l.iter().cloned()).collect() })
}

fn real_part(z: Complex64, what: &str) -> Result<f64> {
    if z.im.abs() > IMAG_TOL {
        return Err(Error::contract(format!("{what} has imaginary residue {:.3e}", z.im)));
    }
    Ok(z.re)
}

/// `K_total = Σ_i ⟨A_i ⊗ B_i⟩`.
pub fn correlation_sum(state: &BipartiteState, pairing: &OperatorPairing) -> Result<f64> {
    let total: Complex64 = pairing.pairs.iter().map(|(a, b)| state.expectation(&kron(a, b))).sum();
    real_part(total, "correlation sum")
}

/// `C[i, j] = ⟨λ_i(1) ⊗ λ_j(2)⟩`.
pub fn correlation_matrix(state: &BipartiteState, basis1: &GeneratorBasis, basis2: &GeneratorBasis) -> Result<RealMatrix> {
    let n = basis1.len();
    if basis2.len() != n {
        return Err(Error::Dimension { expected: n, found: basis2.len() });
    }
    let mut out = RealMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = real_part(state.expectation(&kron(&basis1.lambdas[i], &basis2.lambdas[j])), "correlation entry")?;
        }
    }
    Ok(out)
}

/// Maximum of `K_total` over all orthogonal re-alignments of the side-1
/// frame: the nuclear norm of the canonical correlation matrix.
pub fn optimal_k_total(state: &BipartiteState) -> Result<f64> {
    let canon = make_canonical_basis();
    Ok(nuclear_norm(&correlation_matrix(state, &canon, &canon)?))
}

/// `⟨A_i ⊗ 1⟩ − ⟨1 ⊗ B_i⟩` for each pair.
pub fn mismatch(state: &BipartiteState, pairing: &OperatorPairing) -> Vec<f64> {
    let (r1, r2) = (state.reduced(Side::One), state.reduced(Side::Two));
    pairing.pairs.iter().map(|(a, b)| r1.trace_product(a).re - r2.trace_product(b).re).collect()
}

/// `Σ_i [⟨D_i²⟩ − ⟨D_i⟩²]` with `D_i = A_i ⊗ 1 − 1 ⊗ B_i`, evaluated directly.
pub fn lur_sum(state: &BipartiteState, pairing: &OperatorPairing) -> Result<f64> {
    let id = ComplexMatrix::identity(3);
    let mut total = 0.0;
    for (a, b) in &pairing.pairs {
        let d = &kron(a, &id) - &kron(&id, b);
        let mean = real_part(state.expectation(&d), "difference mean")?;
        let second = real_part(state.expectation(&d.matmul(&d)), "difference second moment")?;
        total += second - mean * mean;
    }
    Ok(total)
}

/// `C_LUR = 1 − lur_sum/8`; positive values certify entanglement.
pub fn c_lur(state: &BipartiteState, pairing: &OperatorPairing) -> Result<f64> {
    Ok(1.0 - lur_sum(state, pairing)? / SEPARABLE_BOUND)
}

/// `3a²(1−a) / (4(2+a)(1+8a)²)`.
pub fn c_lur_closed_form(a: f64) -> Result<f64> {
    check_a(a)?;
    Ok(3.0 * a * a * (1.0 - a) / (4.0 * (2.0 + a) * (1.0 + 8.0 * a).powi(2)))
}

/// Closed forms of the two non-vanishing mismatch components (pairs 7, 8).
pub fn mismatch_closed_form(a: f64) -> Result<(f64, f64)> {
    check_a(a)?;
    let denom = (2.0 + a) * (1.0 + 8.0 * a);
    Ok((-3.0 * a * (1.0 - a * a).sqrt() / denom, 3f64.sqrt() * a * (1.0 - a) / denom))
}

/// Largest white-noise weight `p` for which `ρ(a; p)` still violates the LUR:
/// the root of `p / (3(1−p)²) = C_LUR(a)` on `[0, 0.5]`, to 1e-12.
pub fn noise_threshold(a: f64) -> Result<f64> {
    let c = c_lur_closed_form(a)?;
    if c <= 0.0 {
        return Ok(0.0);
    }
    bisect_root(|p| p / (3.0 * (1.0 - p).powi(2)) - c, 0.0, 0.5, 1e-12)
}

/// Two-route check of the noise threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseCheck {
    pub a: f64,
    pub c_lur: f64,
    /// From the closed-form inequality.
    pub threshold: f64,
    /// From bisection on the directly simulated mixture.
    pub numeric_threshold: f64,
    pub c_lur_below: f64,
    pub c_lur_above: f64,
}

impl NoiseCheck {
    pub fn flips(&self) -> bool {
        self.c_lur_below > 0.0 && self.c_lur_above < 0.0
    }
}

/// Numeric `C_LUR` of `ρ(a; p)` with the analytic pairing.
pub fn c_lur_with_noise(a: f64, p_noise: f64) -> Result<f64> {
    let state = mix_with_white_noise(&make_bound_state(a)?, p_noise)?;
    c_lur(&state, &make_aligned_pairing(a)?)
}

/// Evaluates the mixture at `threshold ± delta` and re-derives the threshold
/// from full numerics. Disagreement above 1e-6 in `p` is a contract error.
pub fn check_noise_threshold(a: f64, delta: f64) -> Result<NoiseCheck> {
    let c = c_lur_closed_form(a)?;
    let threshold = noise_threshold(a)?;
    let numeric_threshold = if c > 0.0 {
        let state = make_bound_state(a)?;
        let pairing = make_aligned_pairing(a)?;
        let f = |p: f64| {
            let mixed = mix_with_white_noise(&state, p).expect("p in [0, 0.5]");
            c_lur(&mixed, &pairing).expect("Hermitian pairing")
        };
        bisect_root(f, 0.0, 0.5, 1e-12)?
    } else {
        0.0
    };
    if (numeric_threshold - threshold).abs() > 1e-6 {
        return Err(Error::contract(format!(
            "noise threshold mismatch at a = {a}: closed form {threshold}, numeric {numeric_threshold}"
        )));
    }
    let below = (threshold - delta).max(0.0);
    Ok(NoiseCheck {
        a,
        c_lur: c,
        threshold,
        numeric_threshold,
        c_lur_below: c_lur_with_noise(a, below)?,
        c_lur_above: c_lur_with_noise(a, threshold + delta)?,
    })
}

/// `Σ_i [⟨λ_i²⟩ − ⟨λ_i⟩²]` for a single qutrit; at least 4, with equality on
/// pure states.
pub fn purity_uncertainty_sum(rho_local: &ComplexMatrix, basis: &GeneratorBasis) -> Result<f64> {
    validate_local_state(rho_local)?;
    let mut total = 0.0;
    for l in &basis.lambdas {
        let mean = real_part(rho_local.trace_product(l), "local mean")?;
        let second = real_part(rho_local.trace_product(&l.matmul(l)), "local second moment")?;
        total += second - mean * mean;
    }
    Ok(total)
}

fn validate_local_state(rho: &ComplexMatrix) -> Result<()> {
    if rho.dim() != 3 {
        return Err(Error::Dimension { expected: 3, found: rho.dim() });
    }
    if !rho.is_hermitian(crate::HERMITIAN_TOL) {
        return Err(Error::contract("local state is not Hermitian"));
    }
    if (rho.trace() - 1.0).norm() > 1e-12 {
        return Err(Error::contract(format!("local state trace is {}, expected 1", rho.trace())));
    }
    let min = crate::numerics::eig_hermitian(rho)?.min();
    if min < -crate::POSITIVITY_FLOOR {
        return Err(Error::contract(format!("local state has negative eigenvalue {min:.3e}")));
    }
    Ok(())
}

/// Every scalar diagnostic for one `(a, p_N)` point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViolationReport {
    pub a: f64,
    pub p_noise: f64,
    pub k_total: f64,
    pub lur_sum: f64,
    pub mismatch7: f64,
    pub mismatch8: f64,
    pub c_lur: f64,
    pub min_pt_eigenvalue: f64,
    pub noise_threshold: f64,
}

pub fn violation_report(a: f64, p_noise: f64) -> Result<ViolationReport> {
    let state = mix_with_white_noise(&make_bound_state(a)?, p_noise)?;
    let pairing = make_aligned_pairing(a)?;
    let lur = lur_sum(&state, &pairing)?;
    let mis = mismatch(&state, &pairing);
    Ok(ViolationReport {
        a,
        p_noise,
        k_total: correlation_sum(&state, &pairing)?,
        lur_sum: lur,
        mismatch7: mis[6],
        mismatch8: mis[7],
        c_lur: 1.0 - lur / SEPARABLE_BOUND,
        min_pt_eigenvalue: ppt_check(&state)?.min_eigenvalue,
        noise_threshold: noise_threshold(a)?,
    })
}
