//! Bipartite qutrit states: the bound entangled family `ρ_a`, white-noise
//! mixtures and a seeded separable-state sampler.
//!
//! Index layout: `|m₁; m₂⟩ ↦ 3·idx(m₁) + idx(m₂)` with `idx(+1) = 0`,
//! `idx(0) = 1`, `idx(−1) = 2`; side 1 is the major (row-block) index.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::error::{Error, Result};
use crate::numerics::{eig_hermitian, kron, partial_trace, ComplexMatrix};
pub use crate::numerics::Side;
use crate::qutrit::{check_a, GeneratorBasis};
use crate::{HERMITIAN_TOL, POSITIVITY_FLOOR};

/// Human-readable statement of the index convention.
pub const BASIS_CONVENTION: &str = "basis: |+1>,|0>,|-1> per side; index = 3*idx(m1)+idx(m2)";

/// Position of spin projection `m ∈ {+1, 0, −1}` in the single-qutrit basis.
pub fn spin_index(m: i8) -> usize {
    match m {
        1 => 0,
        0 => 1,
        -1 => 2,
        _ => panic!("spin-1 projection must be -1, 0 or +1, got {m}"),
    }
}

/// Position of `|m₁; m₂⟩` in the 9-dimensional product basis.
pub fn product_index(m1: i8, m2: i8) -> usize {
    3 * spin_index(m1) + spin_index(m2)
}

/// Parameters of `ρ(a; p_N)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateParams {
    pub a: f64,
    pub p_noise: f64,
}

impl StateParams {
    pub fn new(a: f64, p_noise: f64) -> Result<Self> {
        check_a(a)?;
        check_noise(p_noise)?;
        Ok(Self { a, p_noise })
    }

    pub fn build(&self) -> Result<BipartiteState> {
        mix_with_white_noise(&make_bound_state(self.a)?, self.p_noise)
    }
}

impl Default for StateParams {
    fn default() -> Self {
        Self { a: 0.5, p_noise: 0.0 }
    }
}

fn check_noise(p: f64) -> Result<()> {
    if !(0.0..1.0).contains(&p) {
        return Err(Error::argument(format!("p_noise must lie in [0, 1), got {p}")));
    }
    Ok(())
}

/// A 9×9 density matrix over qutrit ⊗ qutrit.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteState {
    rho: ComplexMatrix,
}

impl BipartiteState {
    /// Validates Hermiticity, unit trace and positivity (all to 1e-12).
    pub fn new(rho: ComplexMatrix) -> Result<Self> {
        if rho.dim() != 9 {
            return Err(Error::Dimension { expected: 9, found: rho.dim() });
        }
        let herm = rho.hermitian_residual();
        if herm > HERMITIAN_TOL {
            return Err(Error::contract(format!("state is not Hermitian (residual {herm:.3e})")));
        }
        let tr = rho.trace();
        if (tr - 1.0).norm() > 1e-12 {
            return Err(Error::contract(format!("state trace is {tr}, expected 1")));
        }
        let min = eig_hermitian(&rho)?.min();
        if min < -POSITIVITY_FLOOR {
            return Err(Error::contract(format!("state has negative eigenvalue {min:.3e}")));
        }
        Ok(Self { rho })
    }

    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn into_inner(self) -> ComplexMatrix {
        self.rho
    }

    pub fn reduced(&self, side: Side) -> ComplexMatrix {
        partial_trace(&self.rho, side).expect("state is 9x9")
    }

    /// `⟨op⟩ = Tr(ρ·op)` for a 9×9 operator.
    pub fn expectation(&self, op: &ComplexMatrix) -> Complex64 {
        self.rho.trace_product(op)
    }

    pub fn purity(&self) -> f64 {
        self.rho.trace_product(&self.rho).re
    }
}

/// The maximally entangled projector `|E_max⟩⟨E_max|`,
/// `|E_max⟩ = (|−1;−1⟩ + |0;0⟩ + |+1;+1⟩)/√3`.
pub fn maximally_entangled() -> BipartiteState {
    BipartiteState { rho: ComplexMatrix::projector(&e_max()) }
}

fn e_max() -> Vec<Complex64> {
    let mut v = vec![Complex64::new(0.0, 0.0); 9];
    let amp = Complex64::new(1.0 / 3f64.sqrt(), 0.0);
    for m in [-1, 0, 1] {
        v[product_index(m, m)] = amp;
    }
    v
}

fn basis_ket(m1: i8, m2: i8) -> Vec<Complex64> {
    let mut v = vec![Complex64::new(0.0, 0.0); 9];
    v[product_index(m1, m2)] = Complex64::new(1.0, 0.0);
    v
}

/// The bound entangled family `ρ_a`, `a ∈ [0, 1]`.
///
/// ```text
/// ρ_a = a/(1+8a) · Σ₅ |m₁;m₂⟩⟨m₁;m₂|  +  3a/(1+8a) · |E_max⟩⟨E_max|  +  1/(1+8a) · |Π⟩⟨Π|
/// |Π⟩ = √((1+a)/2) |+1;−1⟩ + √((1−a)/2) |+1;+1⟩
/// ```
///
/// with the five product states `|−1;0⟩, |−1;+1⟩, |0;−1⟩, |0;+1⟩, |+1;0⟩`.
pub fn make_bound_state(a: f64) -> Result<BipartiteState> {
    check_a(a)?;
    let norm = 1.0 + 8.0 * a;
    let mut rho = ComplexMatrix::zeros(9);
    for (m1, m2) in [(-1, 0), (-1, 1), (0, -1), (0, 1), (1, 0)] {
        let i = product_index(m1, m2);
        rho[(i, i)] += a / norm;
    }
    rho = &rho + &ComplexMatrix::projector(&e_max()).scale(3.0 * a / norm);

    let (up, down) = (((1.0 + a) / 2.0).sqrt(), ((1.0 - a) / 2.0).sqrt());
    let pi: Vec<Complex64> = basis_ket(1, -1).iter().zip(basis_ket(1, 1)).map(|(x, y)| x * up + y * down).collect();
    rho = &rho + &ComplexMatrix::projector(&pi).scale(1.0 / norm);
    Ok(BipartiteState { rho })
}

/// `p·I₉/9 + (1 − p)·ρ`, `p ∈ [0, 1)`.
pub fn mix_with_white_noise(state: &BipartiteState, p_noise: f64) -> Result<BipartiteState> {
    check_noise(p_noise)?;
    let noise = ComplexMatrix::identity(9).scale(p_noise / 9.0);
    Ok(BipartiteState { rho: &noise + &state.rho.scale(1.0 - p_noise) })
}

/// `I₉/9`.
pub fn maximally_mixed() -> BipartiteState {
    BipartiteState { rho: ComplexMatrix::identity(9).scale(1.0 / 9.0) }
}

/// `ρ₁ ⊗ ρ₂` for two valid 3×3 density matrices.
pub fn product_state(rho1: &ComplexMatrix, rho2: &ComplexMatrix) -> Result<BipartiteState> {
    if rho1.dim() != 3 || rho2.dim() != 3 {
        return Err(Error::Dimension { expected: 3, found: if rho1.dim() != 3 { rho1.dim() } else { rho2.dim() } });
    }
    BipartiteState::new(kron(rho1, rho2))
}

/// Haar-random pure qutrit: a normalized complex Gaussian vector.
pub fn random_pure_qutrit<R: Rng + ?Sized>(rng: &mut R) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..3)
        .map(|_| Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng)))
        .collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|z| *z /= norm);
    v
}

/// Random full-rank qutrit density matrix `G G† / Tr(G G†)` with Gaussian `G`.
pub fn random_density_matrix<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(3, |_, _| Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng)));
    let gg = g.matmul(&g.adjoint());
    let tr = gg.trace().re;
    let mut rho = gg.scale(1.0 / tr);
    // Exact Hermitian diagonal.
    for i in 0..3 {
        rho[(i, i)].im = 0.0;
    }
    rho
}

/// Flat-Dirichlet weights on the `k`-simplex.
fn simplex_weights<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec<f64> {
    let draws: Vec<f64> = (0..k).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = draws.iter().sum();
    draws.into_iter().map(|x| x / total).collect()
}

/// `Σ_k p_k |ψ_k⟩⟨ψ_k| ⊗ |φ_k⟩⟨φ_k|` with Haar-random pure factors and
/// flat-simplex weights; deterministic in `seed`.
pub fn sample_separable(seed: u64, components: usize) -> Result<BipartiteState> {
    if !(1..=9).contains(&components) {
        return Err(Error::argument(format!("components must lie in [1, 9], got {components}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights = simplex_weights(&mut rng, components);
    let mut rho = ComplexMatrix::zeros(9);
    for w in weights {
        let psi = ComplexMatrix::projector(&random_pure_qutrit(&mut rng));
        let phi = ComplexMatrix::projector(&random_pure_qutrit(&mut rng));
        rho = &rho + &kron(&psi, &phi).scale(w);
    }
    Ok(BipartiteState { rho })
}

/// Local Bloch vector `Tr(ρ_side λ_i)`.
pub fn local_bloch(state: &BipartiteState, side: Side, basis: &GeneratorBasis) -> Vec<f64> {
    basis.expectations(&state.reduced(side))
}
