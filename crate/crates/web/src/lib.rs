//! wasm-bindgen bindings for the static demo page in `www/`.
//!
//! The page drives three operations: the `C_LUR(a)` curve under a chosen noise
//! weight, the per-point diagnostics for a selected `a`, and the 9×9 density
//! matrix with the spectrum of its partial transpose.

mod explore;

use wasm_bindgen::prelude::*;

pub use explore::{curve, noise_threshold_curve, state_view, Curve, StateView};

fn to_js(e: lur_core::Error) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// Diagnostics for one `(a, p_noise)` point.
#[wasm_bindgen]
#[derive(Debug, Clone, Copy)]
pub struct Report {
    pub a: f64,
    pub p_noise: f64,
    pub k_total: f64,
    pub lur_sum: f64,
    pub mismatch7: f64,
    pub mismatch8: f64,
    pub c_lur: f64,
    pub c_lur_closed: f64,
    pub min_pt_eigenvalue: f64,
    pub noise_threshold: f64,
}

impl From<lur_core::ViolationReport> for Report {
    fn from(r: lur_core::ViolationReport) -> Self {
        let closed = explore::c_lur_closed_with_noise(r.a, r.p_noise);
        Report {
            a: r.a,
            p_noise: r.p_noise,
            k_total: r.k_total,
            lur_sum: r.lur_sum,
            mismatch7: r.mismatch7,
            mismatch8: r.mismatch8,
            c_lur: r.c_lur,
            c_lur_closed: closed,
            min_pt_eigenvalue: r.min_pt_eigenvalue,
            noise_threshold: r.noise_threshold,
        }
    }
}

#[wasm_bindgen]
pub fn report(a: f64, p_noise: f64) -> Result<Report, JsValue> {
    lur_core::lur::violation_report(a, p_noise).map(Report::from).map_err(to_js)
}

/// Numeric `C_LUR` on `steps` evenly spaced points of `[0, 1]`.
#[wasm_bindgen]
pub fn c_lur_curve(steps: usize, p_noise: f64) -> Result<Vec<f64>, JsValue> {
    curve(steps, p_noise).map(|c| c.c_lur).map_err(to_js)
}

/// Closed-form `C_LUR` on the same grid.
#[wasm_bindgen]
pub fn c_lur_closed_curve(steps: usize, p_noise: f64) -> Result<Vec<f64>, JsValue> {
    curve(steps, p_noise).map(|c| c.c_lur_closed).map_err(to_js)
}

#[wasm_bindgen]
pub fn threshold_curve(steps: usize) -> Result<Vec<f64>, JsValue> {
    noise_threshold_curve(steps).map_err(to_js)
}

/// `|ρ_ij|`, 81 values row-major.
#[wasm_bindgen]
pub fn density_magnitudes(a: f64, p_noise: f64) -> Result<Vec<f64>, JsValue> {
    state_view(a, p_noise).map(|v| v.magnitudes).map_err(to_js)
}

/// Eigenvalues of the partial transpose, ascending.
#[wasm_bindgen]
pub fn pt_spectrum(a: f64, p_noise: f64) -> Result<Vec<f64>, JsValue> {
    state_view(a, p_noise).map(|v| v.pt_eigenvalues).map_err(to_js)
}

/// Argmax and maximum of the closed-form curve.
#[wasm_bindgen]
pub fn peak() -> Vec<f64> {
    let (a, c) = explore::peak();
    vec![a, c]
}
