//! Dense linear algebra and scalar optimization primitives.

mod eigen;
mod matrix;
mod optimize;
mod svd;

pub use eigen::{eig_hermitian, eigh, HermitianSpectrum};
pub use matrix::{kron, partial_trace, partial_transpose_a, partial_transpose_b, ComplexMatrix, RealMatrix, Side};
pub use optimize::{bisect_root, golden_section_max};
pub use svd::{nuclear_norm, singular_values};
