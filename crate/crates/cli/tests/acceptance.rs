//! Exit criteria. Run with `cargo test -p lur-cli --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use lur_cli::sweep::sweep_rows;
use lur_cli::{cmd_sweep, Exit};
use lur_core::lur::{
    c_lur, c_lur_closed_form, c_lur_with_noise, correlation_sum, lur_sum, make_aligned_pairing, mismatch, mismatch_closed_form,
    noise_threshold, optimal_k_total, purity_uncertainty_sum,
};
use lur_core::numerics::golden_section_max;
use lur_core::qutrit::make_canonical_basis;
use lur_core::states::{make_bound_state, maximally_entangled, random_density_matrix, random_pure_qutrit, sample_separable};
use lur_core::witnesses::ppt_check;
use lur_core::ComplexMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn grid(n: usize) -> Vec<f64> {
    (0..n).map(|k| k as f64 / (n - 1) as f64).collect()
}

fn generator_algebra() -> Outcome {
    let start = Instant::now();
    let r = make_canonical_basis().residuals();
    let elapsed = start.elapsed();
    let ok = r.trace < 1e-12 && r.gram < 1e-12 && r.square_sum < 1e-12 && elapsed < Duration::from_secs(1);
    outcome(ok, format!("trace={:.1e} gram={:.1e} square_sum={:.1e} in {:?}", r.trace, r.gram, r.square_sum, elapsed))
}

fn purity_identity() -> Outcome {
    let basis = make_canonical_basis();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let worst = (0..1000)
        .map(|_| {
            let rho = random_density_matrix(&mut rng);
            let b = basis.expectations(&rho);
            (rho.trace_product(&rho).re - (1.0 / 3.0 + 0.5 * b.iter().map(|x| x * x).sum::<f64>())).abs()
        })
        .fold(0.0, f64::max);
    outcome(worst < 1e-12, format!("worst residual {worst:.2e} over 1000 states"))
}

fn sum_uncertainty_bound() -> Outcome {
    let basis = make_canonical_basis();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut lo, mut hi, mut pure_worst) = (f64::INFINITY, f64::NEG_INFINITY, 0.0f64);
    for _ in 0..1000 {
        let s = purity_uncertainty_sum(&random_density_matrix(&mut rng), &basis).unwrap();
        lo = lo.min(s);
        hi = hi.max(s);
        let pure = ComplexMatrix::projector(&random_pure_qutrit(&mut rng));
        pure_worst = pure_worst.max((purity_uncertainty_sum(&pure, &basis).unwrap() - 4.0).abs());
    }
    let ok = lo >= 4.0 - 1e-10 && hi <= 16.0 / 3.0 + 1e-10 && pure_worst < 1e-10;
    outcome(ok, format!("mixed range [{lo:.6}, {hi:.6}], pure saturation residual {pure_worst:.2e}"))
}

fn k_total() -> Outcome {
    let mut worst: f64 = 0.0;
    for a in grid(101) {
        let s = make_bound_state(a).unwrap();
        let k = correlation_sum(&s, &make_aligned_pairing(a).unwrap()).unwrap();
        worst = worst.max((k - 4.0 / 3.0).abs()).max((optimal_k_total(&s).unwrap() - 4.0 / 3.0).abs());
    }
    outcome(worst < 1e-10, format!("max |K - 4/3| = {worst:.2e} (pairing and nuclear norm, 101 points)"))
}

fn mismatch_closed_forms() -> Outcome {
    let (mut worst, mut signs_match) = (0.0f64, true);
    for a in grid(101) {
        let s = make_bound_state(a).unwrap();
        let m = mismatch(&s, &make_aligned_pairing(a).unwrap());
        let (m7, m8) = mismatch_closed_form(a).unwrap();
        worst = worst.max((m[6].abs() - m7.abs()).abs()).max((m[7].abs() - m8.abs()).abs());
        signs_match &= (m[6] - m7).abs() < 1e-10 && (m[7] - m8).abs() < 1e-10;
    }
    let signs = if signs_match { "signs match" } else { "convention flip" };
    outcome(worst < 1e-10, format!("max ||m| - |closed|| = {worst:.2e}; {signs}"))
}

fn c_lur_curve() -> Outcome {
    let worst = grid(101)
        .into_iter()
        .map(|a| {
            let s = make_bound_state(a).unwrap();
            (c_lur(&s, &make_aligned_pairing(a).unwrap()).unwrap() - c_lur_closed_form(a).unwrap()).abs()
        })
        .fold(0.0, f64::max);
    let (a_star, c_star) = golden_section_max(|a| c_lur_closed_form(a).unwrap(), 0.0, 1.0, 1e-10).unwrap();
    let half = c_lur(&make_bound_state(0.5).unwrap(), &make_aligned_pairing(0.5).unwrap()).unwrap();
    let start = Instant::now();
    let rows = sweep_rows(0.0, 1.0, 1001, 0.0).unwrap();
    let elapsed = start.elapsed();
    let ok = worst < 1e-10
        && (a_star - 0.3077).abs() <= 1e-3
        && (c_star - 0.00178).abs() <= 1e-5
        && (half - 0.0015).abs() <= 1e-10
        && rows.len() == 1001
        && elapsed < Duration::from_secs(10);
    outcome(
        ok,
        format!("closed-form residual {worst:.2e}; a*={a_star:.5} C*={c_star:.6}; C(0.5)={half:.12}; 1001-point sweep in {elapsed:?}"),
    )
}

fn lur_violation() -> Outcome {
    let (mut worst, mut strict) = (0.0f64, true);
    for a in grid(101) {
        let s = make_bound_state(a).unwrap();
        let lur = lur_sum(&s, &make_aligned_pairing(a).unwrap()).unwrap();
        worst = worst.max((lur - (8.0 - 8.0 * c_lur_closed_form(a).unwrap())).abs());
        if a > 0.0 && a < 1.0 {
            strict &= lur < 8.0;
        }
    }
    outcome(worst < 1e-10 && strict, format!("max |lur - (8 - 8 C)| = {worst:.2e}; strictly below 8 on (0,1): {strict}"))
}

fn separability_guard() -> Outcome {
    let start = Instant::now();
    let pairings: Vec<_> = [0.1, 0.3077, 0.5, 0.9].iter().map(|&a| make_aligned_pairing(a).unwrap()).collect();
    let n = 10_000u64;
    let min = (0..n)
        .map(|k| lur_sum(&sample_separable(k, 1 + (k % 9) as usize).unwrap(), &pairings[(k % 4) as usize]).unwrap())
        .fold(f64::INFINITY, f64::min);
    let elapsed = start.elapsed();
    outcome(min >= 8.0 - 1e-9 && elapsed < Duration::from_secs(60), format!("min lur_sum over {n} samples = {min:.12} in {elapsed:?}"))
}

fn ppt_character() -> Outcome {
    let min = grid(1001).into_iter().map(|a| ppt_check(&make_bound_state(a).unwrap()).unwrap().min_eigenvalue).fold(f64::INFINITY, f64::min);
    let e = ppt_check(&maximally_entangled()).unwrap().min_eigenvalue;
    outcome(min >= -1e-12 && (e + 1.0 / 3.0).abs() < 1e-10, format!("min PT eigenvalue on grid {min:.2e}; E_max control {e:.12}"))
}

fn noise_robustness() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for a in [0.2, 0.3077, 0.5] {
        let t = noise_threshold(a).unwrap();
        let below = c_lur_with_noise(a, t - 1e-6).unwrap();
        let above = c_lur_with_noise(a, t + 1e-6).unwrap();
        ok &= below > 0.0 && above < 0.0;
        parts.push(format!("a={a}: t={t:.7} ({below:+.1e}/{above:+.1e})"));
    }
    let (a_star, _) = golden_section_max(|a| c_lur_closed_form(a).unwrap(), 0.0, 1.0, 1e-10).unwrap();
    let t_star = noise_threshold(a_star).unwrap();
    ok &= (t_star - 0.0053).abs() < 5e-5 && t_star < 0.005 + 5e-4;
    parts.push(format!("t(a*)={t_star:.6}"));
    outcome(ok, parts.join("; "))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let (p1, p2) = (dir.path().join("one.csv"), dir.path().join("two.csv"));
    let mut sink = Vec::new();
    let e1 = cmd_sweep(&mut sink, 0.0, 1.0, 1001, 0.001, &p1);
    let e2 = cmd_sweep(&mut sink, 0.0, 1.0, 1001, 0.001, &p2);
    let (b1, b2) = (std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
    outcome(e1 == Exit::Success && e2 == Exit::Success && b1 == b2, format!("{} bytes, identical: {}", b1.len(), b1 == b2))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 11] = [
        ("1 generator algebra", generator_algebra),
        ("2 purity identity", purity_identity),
        ("3 sum uncertainty bound", sum_uncertainty_bound),
        ("4 K_total = 4/3", k_total),
        ("5 mismatch closed forms", mismatch_closed_forms),
        ("6 C_LUR curve", c_lur_curve),
        ("7 LUR violation", lur_violation),
        ("8 separability guard", separability_guard),
        ("9 PPT / bound character", ppt_character),
        ("10 noise robustness", noise_robustness),
        ("11 sweep determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let o = run();
        println!("{} {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        if !o.passed {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
