//! Spin-1 operators, the eight-generator qutrit basis and the asymmetric
//! side-1 frame.
//!
//! Basis ordering is `(|+1⟩, |0⟩, |−1⟩) ↔ (0, 1, 2)`, so `l_z = diag(1, 0, −1)`.
//! Every sign in this crate is relative to that ordering; it is the one lever
//! to flip if a different convention is wanted.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{ComplexMatrix, RealMatrix};

const SQRT3: f64 = 1.732_050_807_568_877_2;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpinOperators {
    pub lx: ComplexMatrix,
    pub ly: ComplexMatrix,
    pub lz: ComplexMatrix,
}

/// Standard spin-1 matrices in the `l_z` eigenbasis.
pub fn make_spin_operators() -> SpinOperators {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let zero = c(0.0, 0.0);
    let lx = ComplexMatrix::from_fn(3, |i, j| if i.abs_diff(j) == 1 { c(r, 0.0) } else { zero });
    let ly = ComplexMatrix::from_fn(3, |i, j| match (i, j) {
        (0, 1) | (1, 2) => c(0.0, -r),
        (1, 0) | (2, 1) => c(0.0, r),
        _ => zero,
    });
    let lz = ComplexMatrix::from_real_diag(&[1.0, 0.0, -1.0]);
    SpinOperators { lx, ly, lz }
}

/// Quadratic spin functions.
#[derive(Debug, Clone, PartialEq)]
pub struct Quadratics {
    pub qxy: ComplexMatrix,
    pub qyz: ComplexMatrix,
    pub qzx: ComplexMatrix,
    pub sxy: ComplexMatrix,
    pub gz: ComplexMatrix,
}

/// `Q_ij = l_i l_j + l_j l_i`, `S_xy = l_x² − l_y²`, `G_z = √3 (l_z² − 2/3)`.
pub fn make_quadratics(s: &SpinOperators) -> Quadratics {
    let lx2 = s.lx.matmul(&s.lx);
    let ly2 = s.ly.matmul(&s.ly);
    let lz2 = s.lz.matmul(&s.lz);
    let shifted = &lz2 - &ComplexMatrix::identity(3).scale(2.0 / 3.0);
    Quadratics {
        qxy: s.lx.anticommutator(&s.ly),
        qyz: s.ly.anticommutator(&s.lz),
        qzx: s.lz.anticommutator(&s.lx),
        sxy: &lx2 - &ly2,
        gz: shifted.scale(SQRT3),
    }
}

/// Residuals of the generator-basis defining relations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisResiduals {
    /// max |Tr λ_i|
    pub trace: f64,
    /// max |Tr(λ_i λ_j) − 2δ_ij|
    pub gram: f64,
    /// max-norm of Σ λ_i² − (16/3) I
    pub square_sum: f64,
    /// max Hermiticity residual
    pub hermitian: f64,
}

impl BasisResiduals {
    pub fn worst(&self) -> f64 {
        self.trace.max(self.gram).max(self.square_sum).max(self.hermitian)
    }
}

/// Ordered set of eight traceless Hermitian 3×3 operators with
/// `Tr(λ_i λ_j) = 2δ_ij` and `Σ λ_i² = (16/3)·I`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorBasis {
    pub lambdas: Vec<ComplexMatrix>,
    pub labels: Vec<String>,
}

pub const CANONICAL_LABELS: [&str; 8] = ["lx", "ly", "Qxy", "Qyz", "Qzx", "lz", "Sxy", "Gz"];

impl GeneratorBasis {
    pub fn new(lambdas: Vec<ComplexMatrix>, labels: Vec<String>) -> Result<Self> {
        if lambdas.len() != 8 || labels.len() != 8 {
            return Err(Error::Dimension { expected: 8, found: lambdas.len().min(labels.len()) });
        }
        if let Some(bad) = lambdas.iter().find(|m| m.dim() != 3) {
            return Err(Error::Dimension { expected: 3, found: bad.dim() });
        }
        Ok(Self { lambdas, labels })
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    /// Gram matrix `Tr(λ_i λ_j)` (real part).
    pub fn gram(&self) -> RealMatrix {
        RealMatrix::from_fn(self.len(), |i, j| self.lambdas[i].trace_product(&self.lambdas[j]).re)
    }

    pub fn residuals(&self) -> BasisResiduals {
        let n = self.len();
        let trace = self.lambdas.iter().map(|l| l.trace().norm()).fold(0.0, f64::max);
        let mut gram: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { 2.0 } else { 0.0 };
                gram = gram.max((self.lambdas[i].trace_product(&self.lambdas[j]) - target).norm());
            }
        }
        let square_sum = self
            .lambdas
            .iter()
            .fold(ComplexMatrix::zeros(3), |acc, l| &acc + &l.matmul(l))
            .max_abs_diff(&ComplexMatrix::identity(3).scale(16.0 / 3.0));
        let hermitian = self.lambdas.iter().map(ComplexMatrix::hermitian_residual).fold(0.0, f64::max);
        BasisResiduals { trace, gram, square_sum, hermitian }
    }

    /// `⟨λ_i⟩ = Tr(ρ λ_i)` for a 3×3 state.
    pub fn expectations(&self, rho: &ComplexMatrix) -> Vec<f64> {
        self.lambdas.iter().map(|l| rho.trace_product(l).re).collect()
    }
}

/// `(l_x, l_y, Q_xy, Q_yz, Q_zx, l_z, S_xy, G_z)`.
pub fn make_canonical_basis() -> GeneratorBasis {
    let s = make_spin_operators();
    let q = make_quadratics(&s);
    GeneratorBasis {
        lambdas: vec![s.lx, s.ly, q.qxy, q.qyz, q.qzx, s.lz, q.sxy, q.gz],
        labels: CANONICAL_LABELS.iter().map(|s| s.to_string()).collect(),
    }
}

/// `λ'_i = Σ_j rot[i, j] λ_j` for an orthogonal 8×8 `rot`.
pub fn rotate_basis(basis: &GeneratorBasis, rot: &RealMatrix) -> Result<GeneratorBasis> {
    if rot.dim() != basis.len() {
        return Err(Error::Dimension { expected: basis.len(), found: rot.dim() });
    }
    let residual = rot.orthogonality_residual();
    if residual > 1e-10 {
        return Err(Error::argument(format!("rotation is not orthogonal (residual {residual:.3e})")));
    }
    let lambdas = (0..basis.len())
        .map(|i| {
            basis
                .lambdas
                .iter()
                .enumerate()
                .fold(ComplexMatrix::zeros(3), |acc, (j, l)| &acc + &l.scale(rot[(i, j)]))
        })
        .collect();
    let labels = (0..basis.len()).map(|i| format!("rot{}", i + 1)).collect();
    Ok(GeneratorBasis { lambdas, labels })
}

/// The `a`-dependent side-1 operators `(Z, F_xy, F_z)`, linear combinations
/// of `(l_z, S_xy, G_z)` that align side 1 with `(l_z, S_xy, G_z)` on side 2.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymmetricFrame {
    pub a: f64,
    pub z: ComplexMatrix,
    pub fxy: ComplexMatrix,
    pub fz: ComplexMatrix,
    /// Rows give `(Z, F_xy, F_z)` in the basis `(l_z, S_xy, G_z)`.
    pub mixing: RealMatrix,
}

/// Coefficients of the asymmetric frame.
///
/// With `c = (1+2a)/(2+a)`, `w = √(3(1−a²))/(2+a)` and
/// `U = (√3/2) l_z + (1/2) G_z`:
///
/// ```text
/// Z    = (1/2) l_z − (√3/2) G_z
/// F_xy = c S_xy + w U
/// F_z  = c U − w S_xy
/// ```
///
/// The `G_z` sign is fixed by requiring the total correlation with `ρ_a` to
/// reach the nuclear-norm maximum 4/3 under the ordering above.
pub fn frame_mixing(a: f64) -> Result<RealMatrix> {
    check_a(a)?;
    let cc = (1.0 + 2.0 * a) / (2.0 + a);
    let w = (3.0 * (1.0 - a * a)).sqrt() / (2.0 + a);
    let u = [SQRT3 / 2.0, 0.0, 0.5];
    let sxy = [0.0, 1.0, 0.0];
    let row = |x: f64, p: [f64; 3], y: f64, q: [f64; 3]| [x * p[0] + y * q[0], x * p[1] + y * q[1], x * p[2] + y * q[2]];
    Ok(RealMatrix::from_rows([[0.5, 0.0, -SQRT3 / 2.0], row(cc, sxy, w, u), row(cc, u, -w, sxy)]))
}

pub fn make_asymmetric_frame(a: f64) -> Result<AsymmetricFrame> {
    let mixing = frame_mixing(a)?;
    let s = make_spin_operators();
    let q = make_quadratics(&s);
    let combo = |r: usize| {
        let m = mixing.row(r);
        &(&s.lz.scale(m[0]) + &q.sxy.scale(m[1])) + &q.gz.scale(m[2])
    };
    Ok(AsymmetricFrame { a, z: combo(0), fxy: combo(1), fz: combo(2), mixing })
}

pub(crate) fn check_a(a: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::argument(format!("a must lie in [0, 1], got {a}")));
    }
    Ok(())
}
