use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::HERMITIAN_TOL;

const MAX_SWEEPS: usize = 64;

/// Real eigenvalues of a Hermitian matrix, sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianSpectrum {
    pub eigenvalues: Vec<f64>,
}

impl HermitianSpectrum {
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// Eigenvalues of a Hermitian matrix (cyclic complex Jacobi).
///
/// Fails with [`Error::Contract`] when the input is further than
/// [`HERMITIAN_TOL`] from Hermitian in max-norm.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<HermitianSpectrum> {
    eigh(m).map(|(spectrum, _)| spectrum)
}

/// Eigenvalues and eigenvectors. Column `k` of the returned unitary belongs
/// to `eigenvalues[k]`.
pub fn eigh(m: &ComplexMatrix) -> Result<(HermitianSpectrum, ComplexMatrix)> {
    let residual = m.hermitian_residual();
    if residual > HERMITIAN_TOL {
        return Err(Error::contract(format!("matrix is not Hermitian (max-norm residual {residual:.3e})")));
    }
    let n = m.dim();
    // Symmetrize exactly so the sweep works on a true Hermitian matrix.
    let mut h = ComplexMatrix::from_fn(n, |i, j| {
        if i == j {
            Complex64::new(m[(i, i)].re, 0.0)
        } else {
            (m[(i, j)] + m[(j, i)].conj()) * 0.5
        }
    });
    let mut v = ComplexMatrix::identity(n);

    let scale = h.max_abs().max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| h[(i, j)].norm_sqr())
            .sum();
        if off.sqrt() <= f64::EPSILON * 1e-3 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut h, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| h[(a, a)].re.total_cmp(&h[(b, b)].re));
    let eigenvalues = order.iter().map(|&k| h[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok((HermitianSpectrum { eigenvalues }, vectors))
}

/// One Jacobi step annihilating `h[p, q]`: a phase on column `q` makes the
/// pivot real, then a real Givens rotation zeroes it.
fn rotate(h: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = h.dim();
    let hpq = h[(p, q)];
    let mag = hpq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = hpq / mag;
    // h <- D† h D with D = diag(.., e^{-iφ} at q, ..)
    for k in 0..n {
        h[(k, q)] *= phase.conj();
    }
    for k in 0..n {
        h[(q, k)] *= phase;
    }
    for k in 0..n {
        v[(k, q)] *= phase.conj();
    }

    let (app, aqq) = (h[(p, p)].re, h[(q, q)].re);
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 { 1.0 / (tau + (1.0 + tau * tau).sqrt()) } else { -1.0 / (-tau + (1.0 + tau * tau).sqrt()) };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    for k in 0..n {
        let (hkp, hkq) = (h[(k, p)], h[(k, q)]);
        h[(k, p)] = hkp * c - hkq * s;
        h[(k, q)] = hkp * s + hkq * c;
    }
    for k in 0..n {
        let (hpk, hqk) = (h[(p, k)], h[(q, k)]);
        h[(p, k)] = hpk * c - hqk * s;
        h[(q, k)] = hpk * s + hqk * c;
    }
    h[(p, q)] = Complex64::new(0.0, 0.0);
    h[(q, p)] = Complex64::new(0.0, 0.0);
    h[(p, p)].im = 0.0;
    h[(q, q)].im = 0.0;
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * c - vkq * s;
        v[(k, q)] = vkp * s + vkq * c;
    }
}
