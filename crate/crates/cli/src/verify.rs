//! The bundled invariant suite behind `lur verify`.

use std::io::Write;

use lur_core::lur::{
    c_lur, c_lur_closed_form, check_noise_threshold, correlation_sum, lur_sum, make_aligned_pairing, mismatch, optimal_k_total,
    purity_uncertainty_sum, SEPARABLE_BOUND, SQUARE_SUM,
};
use lur_core::qutrit::{make_canonical_basis, GeneratorBasis};
use lur_core::states::{make_bound_state, random_density_matrix, random_pure_qutrit, sample_separable};
use lur_core::witnesses::ppt_check;
use lur_core::{ComplexMatrix, Result, POSITIVITY_FLOOR};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub tolerance: f64,
    pub seed: u64,
    pub separable_samples: u64,
    pub random_states: usize,
    /// Basis used by the generator-algebra, purity and uncertainty-saturation checks.
    pub basis: GeneratorBasis,
}

impl VerifyConfig {
    pub fn new(tolerance: f64, seed: u64) -> Self {
        Self { tolerance, seed, separable_samples: 10_000, random_states: 1000, basis: make_canonical_basis() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub worst: f64,
    pub passed: bool,
}

impl Check {
    fn within(name: &'static str, worst: f64, tol: f64) -> Self {
        Self { name, worst, passed: worst.is_finite() && worst <= tol }
    }

    pub fn line(&self) -> String {
        format!("{} {:<24} worst={:.3e}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.worst)
    }
}

fn grid(n: usize) -> Vec<f64> {
    (0..n).map(|k| k as f64 / (n - 1) as f64).collect()
}

fn max_of(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(0.0, f64::max)
}

pub fn run_checks(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let tol = cfg.tolerance;
    let basis = &cfg.basis;
    let mut checks = Vec::new();

    checks.push(Check::within("generator-algebra", basis.residuals().worst(), tol.min(1e-12)));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut purity_worst: f64 = 0.0;
    let mut saturation_worst: f64 = 0.0;
    for _ in 0..cfg.random_states {
        let rho = random_density_matrix(&mut rng);
        let b = basis.expectations(&rho);
        let rhs = 1.0 / 3.0 + 0.5 * b.iter().map(|x| x * x).sum::<f64>();
        purity_worst = purity_worst.max((rho.trace_product(&rho).re - rhs).abs());

        let sum = purity_uncertainty_sum(&rho, basis)?;
        saturation_worst = saturation_worst.max((4.0 - sum).max(sum - 16.0 / 3.0).max(0.0));
        let pure = ComplexMatrix::projector(&random_pure_qutrit(&mut rng));
        saturation_worst = saturation_worst.max((purity_uncertainty_sum(&pure, basis)? - 4.0).abs());
    }
    checks.push(Check::within("purity-identity", purity_worst, tol.min(1e-12)));
    checks.push(Check::within("uncertainty-saturation", saturation_worst, tol));

    let a_grid = grid(101);
    let per_a: Vec<(f64, f64, f64)> = a_grid
        .par_iter()
        .map(|&a| -> Result<(f64, f64, f64)> {
            let s = make_bound_state(a)?;
            let p = make_aligned_pairing(a)?;
            let k = correlation_sum(&s, &p)?;
            let k_err = (k - 4.0 / 3.0).abs().max((optimal_k_total(&s)? - 4.0 / 3.0).abs());
            let lur = lur_sum(&s, &p)?;
            let m2: f64 = mismatch(&s, &p).iter().map(|x| x * x).sum();
            let identity_err = (lur - (SQUARE_SUM - 2.0 * k - m2)).abs();
            let closed_err = (c_lur(&s, &p)? - c_lur_closed_form(a)?).abs();
            Ok((k_err, identity_err, closed_err))
        })
        .collect::<Result<_>>()?;
    checks.push(Check::within("k-total", max_of(per_a.iter().map(|r| r.0)), tol));
    checks.push(Check::within("lur-identity", max_of(per_a.iter().map(|r| r.1)), tol));
    checks.push(Check::within("c-lur-closed-form", max_of(per_a.iter().map(|r| r.2)), tol));

    let pairings: Vec<_> = [0.1, 0.3077, 0.5, 0.9].iter().map(|&a| make_aligned_pairing(a)).collect::<Result<_>>()?;
    let seed_base = cfg.seed.wrapping_mul(1_000_003);
    let separable_deficit = (0..cfg.separable_samples)
        .into_par_iter()
        .map(|k| -> Result<f64> {
            let s = sample_separable(seed_base.wrapping_add(k), 1 + (k % 9) as usize)?;
            let lur = lur_sum(&s, &pairings[(k % 4) as usize])?;
            Ok((SEPARABLE_BOUND - lur).max(0.0))
        })
        .collect::<Result<Vec<_>>>()?;
    checks.push(Check::within("separable-bound", max_of(separable_deficit.into_iter()), 1e-9));

    let ppt_deficit = grid(1001)
        .par_iter()
        .map(|&a| Ok((-ppt_check(&make_bound_state(a)?)?.min_eigenvalue).max(0.0)))
        .collect::<Result<Vec<_>>>()?;
    checks.push(Check::within("ppt-grid", max_of(ppt_deficit.into_iter()), POSITIVITY_FLOOR));

    let mut noise_worst: f64 = 0.0;
    let mut noise_ok = true;
    for a in [0.2, 0.3077, 0.5] {
        match check_noise_threshold(a, 1e-6) {
            Ok(c) => {
                noise_ok &= c.flips();
                noise_worst = noise_worst.max((c.numeric_threshold - c.threshold).abs());
            }
            Err(_) => noise_ok = false,
        }
    }
    checks.push(Check { name: "noise-flip", worst: noise_worst, passed: noise_ok && noise_worst <= 1e-6 });

    Ok(checks)
}

/// Prints one line per check; returns whether all passed.
pub fn report<W: Write>(out: &mut W, checks: &[Check]) -> std::io::Result<bool> {
    for c in checks {
        writeln!(out, "{}", c.line())?;
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    writeln!(out, "{} checks, {} failed", checks.len(), failed)?;
    Ok(failed == 0)
}
