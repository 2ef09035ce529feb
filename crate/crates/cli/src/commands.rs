use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use lur_core::lur::{c_lur_closed_form, check_noise_threshold, noise_threshold};
use lur_core::numerics::golden_section_max;
use lur_core::states::StateParams;

use crate::format::{sig17, state_to_csv, state_to_json};
use crate::sweep::{sweep_rows, write_csv};
use crate::verify::{report, run_checks, VerifyConfig};
use crate::Exit;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateFormat {
    Csv,
    Json,
}

pub fn cmd_verify<W: Write>(out: &mut W, tolerance: f64, seed: u64) -> Exit {
    verify_with(out, &VerifyConfig::new(tolerance, seed))
}

pub fn verify_with<W: Write>(out: &mut W, cfg: &VerifyConfig) -> Exit {
    let checks = match run_checks(cfg) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(out, "FAIL verification aborted: {e}");
            return Exit::VerificationFailed;
        }
    };
    match report(out, &checks) {
        Ok(true) => Exit::Success,
        Ok(false) => Exit::VerificationFailed,
        Err(_) => Exit::UsageOrIo,
    }
}

pub fn cmd_sweep<W: Write>(log: &mut W, a_min: f64, a_max: f64, steps: usize, p_noise: f64, out_path: &Path) -> Exit {
    if !(0.0..=1.0).contains(&a_min) || !(0.0..=1.0).contains(&a_max) || a_min >= a_max || steps < 2 {
        let _ = writeln!(log, "error: need 0 <= a_min < a_max <= 1 and steps >= 2");
        return Exit::UsageOrIo;
    }
    let rows = match sweep_rows(a_min, a_max, steps, p_noise) {
        Ok(rows) => rows,
        Err(e) => {
            let _ = writeln!(log, "error: {e}");
            return Exit::UsageOrIo;
        }
    };
    let written = File::create(out_path).and_then(|f| {
        let mut w = BufWriter::new(f);
        write_csv(&mut w, &rows)?;
        w.flush()
    });
    if let Err(e) = written {
        let _ = writeln!(log, "error: cannot write {}: {e}", out_path.display());
        return Exit::UsageOrIo;
    }
    let violations: Vec<String> = rows.iter().flat_map(|r| r.invariant_violations()).collect();
    for v in &violations {
        let _ = writeln!(log, "invariant violated: {v}");
    }
    let _ = writeln!(log, "wrote {} rows to {}", rows.len(), out_path.display());
    if violations.is_empty() {
        Exit::Success
    } else {
        Exit::VerificationFailed
    }
}

pub fn cmd_optimize<W: Write>(out: &mut W, tol: f64) -> Exit {
    let best = golden_section_max(|a| c_lur_closed_form(a).unwrap_or(f64::NEG_INFINITY), 0.0, 1.0, tol);
    let (a_star, c_star) = match best {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return Exit::UsageOrIo;
        }
    };
    let threshold = noise_threshold(a_star).expect("argmax lies in [0, 1]");
    let written = writeln!(out, "a_star={}", sig17(a_star))
        .and_then(|_| writeln!(out, "c_lur={}", sig17(c_star)))
        .and_then(|_| writeln!(out, "noise_threshold={}", sig17(threshold)));
    if written.is_err() {
        return Exit::UsageOrIo;
    }
    Exit::Success
}

pub fn cmd_state<W: Write>(out: &mut W, a: f64, p_noise: f64, format: StateFormat) -> Exit {
    let state = match StateParams::new(a, p_noise).and_then(|p| p.build()) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return Exit::UsageOrIo;
        }
    };
    let text = match format {
        StateFormat::Csv => state_to_csv(state.rho()),
        StateFormat::Json => state_to_json(state.rho(), a, p_noise),
    };
    match out.write_all(text.as_bytes()) {
        Ok(()) => Exit::Success,
        Err(_) => Exit::UsageOrIo,
    }
}

pub fn cmd_noise<W: Write>(out: &mut W, a: f64) -> Exit {
    let check = match check_noise_threshold(a, 1e-4) {
        Ok(c) => c,
        Err(lur_core::Error::Argument(e)) => {
            let _ = writeln!(out, "error: {e}");
            return Exit::UsageOrIo;
        }
        Err(e) => {
            let _ = writeln!(out, "FAIL {e}");
            return Exit::VerificationFailed;
        }
    };
    let _ = writeln!(out, "a={}", sig17(a));
    let _ = writeln!(out, "c_lur={}", sig17(check.c_lur));
    let _ = writeln!(out, "noise_threshold={}", sig17(check.threshold));
    if check.c_lur <= 0.0 {
        let _ = writeln!(out, "no violation at this a");
        return Exit::Success;
    }
    let _ = writeln!(out, "numeric_threshold={}", sig17(check.numeric_threshold));
    let _ = writeln!(out, "c_lur(threshold-1e-4)={}", sig17(check.c_lur_below));
    let _ = writeln!(out, "c_lur(threshold+1e-4)={}", sig17(check.c_lur_above));
    if check.flips() {
        let _ = writeln!(out, "flip: confirmed");
        Exit::Success
    } else {
        let _ = writeln!(out, "flip: NOT confirmed");
        Exit::VerificationFailed
    }
}
