use lur_core::lur::{c_lur, c_lur_closed_form, make_aligned_pairing, noise_threshold};
use lur_core::numerics::{eig_hermitian, golden_section_max, partial_transpose_b};
use lur_core::states::{make_bound_state, mix_with_white_noise};
use lur_core::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub a: Vec<f64>,
    pub c_lur: Vec<f64>,
    pub c_lur_closed: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateView {
    pub magnitudes: Vec<f64>,
    pub pt_eigenvalues: Vec<f64>,
}

fn grid(steps: usize) -> Result<Vec<f64>> {
    if steps < 2 {
        return Err(Error::Argument(format!("need at least 2 grid points, got {steps}")));
    }
    Ok((0..steps).map(|k| k as f64 / (steps - 1) as f64).collect())
}

pub(crate) fn c_lur_closed_with_noise(a: f64, p: f64) -> f64 {
    (1.0 - p).powi(2) * c_lur_closed_form(a).unwrap_or(0.0) - p / 3.0
}

pub fn curve(steps: usize, p_noise: f64) -> Result<Curve> {
    let a = grid(steps)?;
    let mut numeric = Vec::with_capacity(steps);
    for &x in &a {
        let state = mix_with_white_noise(&make_bound_state(x)?, p_noise)?;
        numeric.push(c_lur(&state, &make_aligned_pairing(x)?)?);
    }
    let closed = a.iter().map(|&x| c_lur_closed_with_noise(x, p_noise)).collect();
    Ok(Curve { a, c_lur: numeric, c_lur_closed: closed })
}

pub fn noise_threshold_curve(steps: usize) -> Result<Vec<f64>> {
    grid(steps)?.into_iter().map(noise_threshold).collect()
}

pub fn state_view(a: f64, p_noise: f64) -> Result<StateView> {
    let state = mix_with_white_noise(&make_bound_state(a)?, p_noise)?;
    let rho = state.rho();
    let magnitudes = rho.as_slice().iter().map(|z| z.norm()).collect();
    let pt_eigenvalues = eig_hermitian(&partial_transpose_b(rho)?)?.eigenvalues;
    Ok(StateView { magnitudes, pt_eigenvalues })
}

pub fn peak() -> (f64, f64) {
    golden_section_max(|a| c_lur_closed_form(a).unwrap_or(f64::NEG_INFINITY), 0.0, 1.0, 1e-10).expect("valid bracket")
}
