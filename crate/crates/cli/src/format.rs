//! Number formatting and the 9×9 state export formats.

use lur_core::states::BASIS_CONVENTION;
use lur_core::ComplexMatrix;
use num_complex::Complex64;

/// 17 significant digits, scientific notation, locale-free.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn state_preamble() -> String {
    format!("# {BASIS_CONVENTION}")
}

/// Preamble line, then one line per row with `re,im` pairs for each column.
pub fn state_to_csv(m: &ComplexMatrix) -> String {
    let mut out = state_preamble();
    out.push('\n');
    for i in 0..m.dim() {
        let row: Vec<String> = (0..m.dim())
            .map(|j| {
                let z = m[(i, j)];
                format!("{},{}", sig17(z.re), sig17(z.im))
            })
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn state_to_json(m: &ComplexMatrix, a: f64, p_noise: f64) -> String {
    let part = |f: fn(&Complex64) -> f64| -> Vec<Vec<f64>> {
        (0..m.dim()).map(|i| (0..m.dim()).map(|j| f(&m[(i, j)])).collect()).collect()
    };
    let doc = serde_json::json!({
        "basis": BASIS_CONVENTION,
        "a": a,
        "p_noise": p_noise,
        "dim": m.dim(),
        "re": part(|z| z.re),
        "im": part(|z| z.im),
    });
    serde_json::to_string_pretty(&doc).expect("json values are finite") + "\n"
}

/// Parses the CSV export back into a matrix. Lines starting with `#` are skipped.
pub fn parse_state_csv(text: &str) -> Result<ComplexMatrix, String> {
    let rows: Vec<Vec<f64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| l.split(',').map(|t| t.trim().parse::<f64>().map_err(|e| format!("bad number {t:?}: {e}"))).collect())
        .collect::<Result<_, _>>()?;
    let dim = rows.len();
    let mut data = Vec::with_capacity(dim * dim);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != 2 * dim {
            return Err(format!("row {i} has {} values, expected {}", row.len(), 2 * dim));
        }
        data.extend(row.chunks(2).map(|p| Complex64::new(p[0], p[1])));
    }
    ComplexMatrix::from_vec(dim, data).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use lur_core::states::make_bound_state;

    #[test]
    fn seventeen_digits() {
        assert_eq!(sig17(0.0015), "1.5000000000000000e-3");
        assert_eq!(sig17(-1.0), "-1.0000000000000000e0");
        let third = sig17(1.0 / 3.0);
        assert_eq!(third.split('e').next().unwrap().replace(['.', '-'], "").len(), 17);
    }

    #[test]
    fn csv_round_trip_is_exact() {
        for a in [0.0, 0.3077, 0.5, 1.0] {
            let rho = make_bound_state(a).unwrap().into_inner();
            let text = state_to_csv(&rho);
            assert!(text.starts_with("# basis: |+1>,|0>,|-1> per side; index = 3*idx(m1)+idx(m2)\n"));
            assert_eq!(parse_state_csv(&text).unwrap(), rho);
        }
    }

    #[test]
    fn parse_rejects_ragged_rows() {
        assert!(parse_state_csv("1,0,0\n0,0,1,0\n").is_err());
        assert!(parse_state_csv("x,0\n").is_err());
    }

    #[test]
    fn json_has_convention_and_parts() {
        let rho = make_bound_state(0.5).unwrap().into_inner();
        let v: serde_json::Value = serde_json::from_str(&state_to_json(&rho, 0.5, 0.0)).unwrap();
        assert_eq!(v["dim"], 9);
        assert_eq!(v["basis"], BASIS_CONVENTION);
        assert_eq!(v["re"][4][4].as_f64().unwrap(), rho[(4, 4)].re);
    }
}
