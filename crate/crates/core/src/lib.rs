//! Numerics for the non-symmetric local uncertainty relation (LUR) violated by
//! the 3×3 bound entangled family `ρ_a`.
//!
//! The crate is split bottom-up:
//!
//! * [`numerics`]: dense complex matrices, Kronecker products, partial
//!   transpose/trace, a Jacobi Hermitian eigensolver, real singular values and
//!   a golden-section maximizer.
//! * [`qutrit`]: spin-1 operators, the eight-generator basis and the
//!   `a`-dependent asymmetric frame used on side 1.
//! * [`states`]: the `ρ_a` family, white-noise mixtures and a seeded sampler of
//!   separable states.
//! * [`lur`]: total correlation, the nuclear-norm alignment oracle, the LUR sum,
//!   the local mismatch, `C_LUR` and the noise threshold.
//! * [`witnesses`]: positivity of the partial transpose.

pub mod error;
pub mod lur;
pub mod numerics;
pub mod qutrit;
pub mod states;
pub mod witnesses;

pub use error::{Error, Result};
pub use lur::{OperatorPairing, ViolationReport};
pub use numerics::{ComplexMatrix, HermitianSpectrum, RealMatrix};
pub use qutrit::{AsymmetricFrame, GeneratorBasis, Quadratics, SpinOperators};
pub use states::{BipartiteState, Side, StateParams};
pub use witnesses::PptReport;

/// Max-norm tolerance for Hermiticity checks.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Eigenvalues at or above `-POSITIVITY_FLOOR` count as non-negative.
pub const POSITIVITY_FLOOR: f64 = 1e-12;
