//! The `C_LUR(a)` curve as CSV rows.

use std::io::Write;

use lur_core::lur::{
    c_lur_closed_form, correlation_sum, lur_sum, make_aligned_pairing, mismatch, noise_threshold, optimal_k_total, SEPARABLE_BOUND,
};
use lur_core::states::{make_bound_state, mix_with_white_noise};
use lur_core::witnesses::ppt_check;
use lur_core::Result;
use rayon::prelude::*;

use crate::format::sig17;

pub const CSV_HEADER: &str =
    "a,c_lur,c_lur_closed,k_total_pairing,k_total_svd,lur_sum,mismatch7,mismatch8,min_pt_eigenvalue,noise_threshold";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub a: f64,
    pub p_noise: f64,
    pub c_lur: f64,
    pub c_lur_closed: f64,
    pub k_total_pairing: f64,
    pub k_total_svd: f64,
    pub lur_sum: f64,
    pub mismatch7: f64,
    pub mismatch8: f64,
    pub min_pt_eigenvalue: f64,
    pub noise_threshold: f64,
}

/// `C_LUR` of `ρ(a; p)` from closed forms: `(1−p)²·C_LUR(a) − p/3`.
///
/// White noise scales every Bloch vector and correlation by `(1−p)` and adds
/// `(8/3)·p` to the LUR sum.
pub fn c_lur_closed_with_noise(a: f64, p_noise: f64) -> Result<f64> {
    Ok((1.0 - p_noise).powi(2) * c_lur_closed_form(a)? - p_noise / 3.0)
}

impl SweepRow {
    pub fn compute(a: f64, p_noise: f64) -> Result<Self> {
        let state = mix_with_white_noise(&make_bound_state(a)?, p_noise)?;
        let pairing = make_aligned_pairing(a)?;
        let lur = lur_sum(&state, &pairing)?;
        let mis = mismatch(&state, &pairing);
        Ok(Self {
            a,
            p_noise,
            c_lur: 1.0 - lur / SEPARABLE_BOUND,
            c_lur_closed: c_lur_closed_with_noise(a, p_noise)?,
            k_total_pairing: correlation_sum(&state, &pairing)?,
            k_total_svd: optimal_k_total(&state)?,
            lur_sum: lur,
            mismatch7: mis[6],
            mismatch8: mis[7],
            min_pt_eigenvalue: ppt_check(&state)?.min_eigenvalue,
            noise_threshold: noise_threshold(a)?,
        })
    }

    /// Row invariants; the correlation target is `(1−p)·4/3` under noise.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let k_target = (1.0 - self.p_noise) * 4.0 / 3.0;
        if (self.c_lur - self.c_lur_closed).abs() > 1e-10 {
            out.push(format!("a={}: c_lur {} vs closed form {}", self.a, self.c_lur, self.c_lur_closed));
        }
        if (self.k_total_pairing - k_target).abs() > 1e-10 {
            out.push(format!("a={}: k_total_pairing {} vs {}", self.a, self.k_total_pairing, k_target));
        }
        if (self.k_total_svd - k_target).abs() > 1e-10 {
            out.push(format!("a={}: k_total_svd {} vs {}", self.a, self.k_total_svd, k_target));
        }
        out
    }

    pub fn csv_line(&self) -> String {
        [
            self.a,
            self.c_lur,
            self.c_lur_closed,
            self.k_total_pairing,
            self.k_total_svd,
            self.lur_sum,
            self.mismatch7,
            self.mismatch8,
            self.min_pt_eigenvalue,
            self.noise_threshold,
        ]
        .iter()
        .map(|&x| sig17(x))
        .collect::<Vec<_>>()
        .join(",")
    }
}

/// `steps` evenly spaced points from `a_min` to `a_max` inclusive.
pub fn a_grid(a_min: f64, a_max: f64, steps: usize) -> Vec<f64> {
    let span = a_max - a_min;
    (0..steps)
        .map(|i| if i + 1 == steps { a_max } else { a_min + span * i as f64 / (steps - 1) as f64 })
        .collect()
}

/// Rows in ascending `a`; points are evaluated in parallel.
pub fn sweep_rows(a_min: f64, a_max: f64, steps: usize, p_noise: f64) -> Result<Vec<SweepRow>> {
    a_grid(a_min, a_max, steps).into_par_iter().map(|a| SweepRow::compute(a, p_noise)).collect()
}

pub fn write_csv<W: Write>(out: &mut W, rows: &[SweepRow]) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.csv_line())?;
    }
    Ok(())
}
