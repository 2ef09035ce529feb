use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Which factor of a qutrit ⊗ qutrit product space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Side::One),
            2 => Ok(Side::Two),
            _ => Err(Error::argument(format!("side must be 1 or 2, got {i}"))),
        }
    }
}

/// Dense square complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds a matrix from `dim * dim` row-major entries.
    pub fn from_vec(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::Dimension { expected: dim * dim, found: data.len() });
        }
        Ok(Self { dim, data })
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, |i, j| if i == j { Complex64::new(diag[i], 0.0) } else { Complex64::new(0.0, 0.0) })
    }

    /// Projector `|v⟩⟨v|`.
    pub fn projector(v: &[Complex64]) -> Self {
        Self::from_fn(v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// `Tr(self · other)` without forming the product.
    pub fn trace_product(&self, other: &ComplexMatrix) -> Complex64 {
        assert_eq!(self.dim, other.dim, "trace_product dimension mismatch");
        let n = self.dim;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for k in 0..n {
                acc += self.data[i * n + k] * other.data[k * n + i];
            }
        }
        acc
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn scale_complex(&self, s: Complex64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z * s).collect() }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "max_abs_diff dimension mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max-norm distance to the adjoint.
    pub fn hermitian_residual(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_residual() <= tol
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, other.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    /// `self · other + other · self`.
    pub fn anticommutator(&self, other: &ComplexMatrix) -> ComplexMatrix {
        &self.matmul(other) + &other.matmul(self)
    }

    /// `self · other − other · self`.
    pub fn commutator(&self, other: &ComplexMatrix) -> ComplexMatrix {
        &self.matmul(other) - &other.matmul(self)
    }

    /// Real part as a row-major `f64` vector.
    pub fn real_parts(&self) -> Vec<f64> {
        self.data.iter().map(|z| z.re).collect()
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| {
                    let z = self[(i, j)];
                    format!("{:+.4}{:+.4}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "add dimension mismatch");
        ComplexMatrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "sub dimension mismatch");
        ComplexMatrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale(-1.0)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

/// Kronecker product; block `(i, j)` of the result is `a[i, j] · b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (m, n) = (a.dim, b.dim);
    ComplexMatrix::from_fn(m * n, |r, c| a[(r / n, c / n)] * b[(r % n, c % n)])
}

fn expect_nine(m: &ComplexMatrix) -> Result<()> {
    if m.dim != 9 {
        return Err(Error::Dimension { expected: 9, found: m.dim });
    }
    Ok(())
}

/// Transposes every 3×3 sub-block of a 9×9 matrix (transpose on side 2).
pub fn partial_transpose_b(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    expect_nine(m)?;
    Ok(ComplexMatrix::from_fn(9, |r, c| {
        let (i1, i2, j1, j2) = (r / 3, r % 3, c / 3, c % 3);
        m[(3 * i1 + j2, 3 * j1 + i2)]
    }))
}

/// Swaps the 3×3 block grid while keeping each block intact (transpose on side 1).
pub fn partial_transpose_a(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    expect_nine(m)?;
    Ok(ComplexMatrix::from_fn(9, |r, c| {
        let (i1, i2, j1, j2) = (r / 3, r % 3, c / 3, c % 3);
        m[(3 * j1 + i2, 3 * i1 + j2)]
    }))
}

/// Reduced 3×3 matrix on `keep`, tracing out the other qutrit.
pub fn partial_trace(m: &ComplexMatrix, keep: Side) -> Result<ComplexMatrix> {
    expect_nine(m)?;
    Ok(match keep {
        Side::One => ComplexMatrix::from_fn(3, |i, j| (0..3).map(|k| m[(3 * i + k, 3 * j + k)]).sum()),
        Side::Two => ComplexMatrix::from_fn(3, |i, j| (0..3).map(|k| m[(3 * k + i, 3 * k + j)]).sum()),
    })
}

/// Dense square real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![0.0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        Self::from_fn(diag.len(), |i, j| if i == j { diag[i] } else { 0.0 })
    }

    pub fn from_rows<const N: usize>(rows: [[f64; N]; N]) -> Self {
        Self::from_fn(N, |i, j| rows[i][j])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn matmul(&self, other: &RealMatrix) -> RealMatrix {
        assert_eq!(self.dim, other.dim, "matmul dimension mismatch");
        let n = self.dim;
        Self::from_fn(n, |i, j| (0..n).map(|k| self[(i, k)] * other[(k, j)]).sum())
    }

    pub fn max_abs_diff(&self, other: &RealMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "max_abs_diff dimension mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// Max-norm distance of `self · selfᵀ` from the identity.
    pub fn orthogonality_residual(&self) -> f64 {
        self.matmul(&self.transpose()).max_abs_diff(&RealMatrix::identity(self.dim))
    }
}

impl Index<(usize, usize)> for RealMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for RealMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.dim + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn spin_x() -> ComplexMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        ComplexMatrix::from_fn(3, |i, j| if i.abs_diff(j) == 1 { c(s, 0.0) } else { c(0.0, 0.0) })
    }

    fn scrambled(dim: usize, seed: u64) -> ComplexMatrix {
        // Deterministic non-symmetric fill.
        let mut x = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ComplexMatrix::from_fn(dim, |_, _| {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let re = ((x >> 11) as f64 / (1u64 << 53) as f64) - 0.5;
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let im = ((x >> 11) as f64 / (1u64 << 53) as f64) - 0.5;
            c(re, im)
        })
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let i9 = kron(&ComplexMatrix::identity(3), &ComplexMatrix::identity(3));
        assert_eq!(i9, ComplexMatrix::identity(9));
    }

    #[test]
    fn kron_diagonal_case() {
        let k = kron(&ComplexMatrix::from_real_diag(&[1.0, 0.0, -1.0]), &ComplexMatrix::identity(3));
        let expected = ComplexMatrix::from_real_diag(&[1.0, 1.0, 1.0, 0.0, 0.0, 0.0, -1.0, -1.0, -1.0]);
        assert_eq!(k, expected);
    }

    #[test]
    fn kron_matches_elementwise_product() {
        let lx = spin_x();
        let k = kron(&lx, &lx);
        for i1 in 0..3 {
            for i2 in 0..3 {
                for j1 in 0..3 {
                    for j2 in 0..3 {
                        let expected = lx[(i1, j1)] * lx[(i2, j2)];
                        assert_eq!(k[(3 * i1 + i2, 3 * j1 + j2)], expected);
                    }
                }
            }
        }
        // Row 1 (|+1;0⟩) has exactly two entries, each 1/2.
        let row_sum: Complex64 = (0..9).map(|j| k[(1, j)]).sum();
        assert!((row_sum - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn kron_is_associative_and_bilinear() {
        let (a, b, d) = (scrambled(2, 1), scrambled(3, 2), scrambled(2, 3));
        let left = kron(&kron(&a, &b), &d);
        let right = kron(&a, &kron(&b, &d));
        assert!(left.max_abs_diff(&right) < 1e-12);

        let a2 = scrambled(2, 4);
        let s = c(0.3, -1.2);
        let lhs = kron(&(&a + &a2.scale_complex(s)), &b);
        let rhs = &kron(&a, &b) + &kron(&a2, &b).scale_complex(s);
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn partial_transpose_identity_and_involution() {
        let i9 = ComplexMatrix::identity(9);
        assert_eq!(partial_transpose_b(&i9).unwrap(), i9);
        let m = scrambled(9, 7);
        assert_eq!(partial_transpose_b(&partial_transpose_b(&m).unwrap()).unwrap(), m);
        assert_eq!(partial_transpose_a(&partial_transpose_a(&m).unwrap()).unwrap(), m);
    }

    #[test]
    fn partial_transpose_on_product_transposes_second_factor() {
        let (a, b) = (scrambled(3, 11), scrambled(3, 12));
        let pt = partial_transpose_b(&kron(&a, &b)).unwrap();
        assert!(pt.max_abs_diff(&kron(&a, &b.transpose())) < 1e-15);
        let pta = partial_transpose_a(&kron(&a, &b)).unwrap();
        assert!(pta.max_abs_diff(&kron(&a.transpose(), &b)) < 1e-15);
    }

    #[test]
    fn partial_ops_reject_wrong_dimension() {
        let m = ComplexMatrix::identity(8);
        assert_eq!(partial_transpose_b(&m), Err(Error::Dimension { expected: 9, found: 8 }));
        assert!(partial_trace(&m, Side::One).is_err());
    }

    #[test]
    fn partial_trace_of_product_state() {
        let rho1 = ComplexMatrix::from_fn(3, |i, j| if i == j { c([0.5, 0.3, 0.2][i], 0.0) } else { c(0.0, 0.0) });
        let mut rho2 = ComplexMatrix::from_real_diag(&[0.25, 0.25, 0.5]);
        rho2[(0, 2)] = c(0.1, 0.2);
        rho2[(2, 0)] = c(0.1, -0.2);
        let prod = kron(&rho1, &rho2);
        assert!(partial_trace(&prod, Side::One).unwrap().max_abs_diff(&rho1) < 1e-15);
        assert!(partial_trace(&prod, Side::Two).unwrap().max_abs_diff(&rho2) < 1e-15);
    }

    #[test]
    fn partial_trace_of_maximally_entangled_is_maximally_mixed() {
        let amp = 1.0 / 3f64.sqrt();
        let mut v = vec![c(0.0, 0.0); 9];
        for k in 0..3 {
            v[4 * k] = c(amp, 0.0);
        }
        let e = ComplexMatrix::projector(&v);
        let mixed = ComplexMatrix::identity(3).scale(1.0 / 3.0);
        for side in [Side::One, Side::Two] {
            assert!(partial_trace(&e, side).unwrap().max_abs_diff(&mixed) < 1e-15);
        }
    }

    #[test]
    fn partial_trace_preserves_trace() {
        let m = scrambled(9, 21);
        let h = &m + &m.adjoint();
        for side in [Side::One, Side::Two] {
            assert!((partial_trace(&h, side).unwrap().trace() - h.trace()).norm() < 1e-12);
        }
    }

    #[test]
    fn trace_product_matches_matmul() {
        let (a, b) = (scrambled(9, 5), scrambled(9, 6));
        assert!((a.trace_product(&b) - a.matmul(&b).trace()).norm() < 1e-12);
    }

    #[test]
    fn side_from_index() {
        assert_eq!(Side::from_index(1).unwrap(), Side::One);
        assert_eq!(Side::from_index(2).unwrap(), Side::Two);
        assert!(Side::from_index(3).is_err());
    }
}
