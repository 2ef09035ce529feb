//! Positivity of the partial transpose.

use crate::error::Result;
use crate::numerics::{eig_hermitian, partial_transpose_a, partial_transpose_b};
use crate::states::BipartiteState;
use crate::POSITIVITY_FLOOR;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptReport {
    pub min_eigenvalue: f64,
    pub is_ppt: bool,
}

/// Smallest eigenvalue of the side-2 partial transpose.
pub fn ppt_check(state: &BipartiteState) -> Result<PptReport> {
    let min_eigenvalue = eig_hermitian(&partial_transpose_b(state.rho())?)?.min();
    Ok(PptReport { min_eigenvalue, is_ppt: min_eigenvalue >= -POSITIVITY_FLOOR })
}

/// Same as [`ppt_check`] but transposing side 1.
pub fn ppt_check_side_one(state: &BipartiteState) -> Result<PptReport> {
    let min_eigenvalue = eig_hermitian(&partial_transpose_a(state.rho())?)?.min();
    Ok(PptReport { min_eigenvalue, is_ppt: min_eigenvalue >= -POSITIVITY_FLOOR })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{make_bound_state, maximally_entangled, sample_separable};
    use approx::assert_abs_diff_eq;

    #[test]
    fn bound_family_is_ppt() {
        for k in 0..=10 {
            let r = ppt_check(&make_bound_state(k as f64 / 10.0).unwrap()).unwrap();
            assert!(r.is_ppt, "a = {}: {r:?}", k as f64 / 10.0);
        }
    }

    #[test]
    fn maximally_entangled_is_npt() {
        let r = ppt_check(&maximally_entangled()).unwrap();
        assert!(!r.is_ppt);
        assert_abs_diff_eq!(r.min_eigenvalue, -1.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn separable_samples_are_ppt() {
        for seed in 0..100 {
            assert!(ppt_check(&sample_separable(seed, 1 + seed as usize % 9).unwrap()).unwrap().is_ppt);
        }
    }

    #[test]
    fn side_choice_does_not_matter() {
        for k in 0..=20 {
            let s = make_bound_state(k as f64 / 20.0).unwrap();
            let (b, a) = (ppt_check(&s).unwrap(), ppt_check_side_one(&s).unwrap());
            assert_abs_diff_eq!(a.min_eigenvalue, b.min_eigenvalue, epsilon = 1e-12);
        }
        let e = maximally_entangled();
        assert_abs_diff_eq!(ppt_check_side_one(&e).unwrap().min_eigenvalue, -1.0 / 3.0, epsilon = 1e-12);
    }
}
