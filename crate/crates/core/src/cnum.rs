//! Complex-number helpers: serde representations and small dense
//! linear-algebra utilities used across the crate.
//!
//! JSON conventions (documented in `docs/formats.md`): a complex scalar is
//! a two-element array `[re, im]`, a complex vector is an array of those,
//! and a complex matrix is an array of rows (row-major).

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Hermitian inner product `⟨v, w⟩ = Σ v_i conj(w_i)`.
pub fn hdot(v: &[Complex64], w: &[Complex64]) -> Complex64 {
    v.iter().zip(w).map(|(a, b)| a * b.conj()).sum()
}

pub fn norm_sq(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum()
}

pub fn norm(v: &[Complex64]) -> f64 {
    norm_sq(v).sqrt()
}

/// Eigenvalues of a complex Hermitian matrix via its real symmetric
/// embedding `[[Re H, −Im H], [Im H, Re H]]` (each eigenvalue appears
/// twice in the embedding).
pub fn hermitian_eigenvalues(h: &CMatrix) -> Vec<f64> {
    let n = h.nrows();
    let mut real = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let e = h[(i, j)];
            real[(i, j)] = e.re;
            real[(i, j + n)] = -e.im;
            real[(i + n, j)] = e.im;
            real[(i + n, j + n)] = e.re;
        }
    }
    let eig = nalgebra::SymmetricEigen::new(real);
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    // keep one copy of each doubled eigenvalue
    vals.into_iter().step_by(2).collect()
}

/// Smallest eigenvalue of `I − Z Zᴴ`.
pub fn min_eig_one_minus_zzh(z: &CMatrix) -> f64 {
    let n = z.nrows();
    let h = CMatrix::identity(n, n) - z * z.adjoint();
    hermitian_eigenvalues(&h)
        .into_iter()
        .fold(f64::INFINITY, f64::min)
}

/// Largest singular value of `Z`.
pub fn sigma_max(z: &CMatrix) -> f64 {
    let h = z * z.adjoint();
    hermitian_eigenvalues(&h)
        .into_iter()
        .fold(0.0f64, f64::max)
        .max(0.0)
        .sqrt()
}

/// Operator (spectral) norm of a complex matrix.
pub fn op_norm(z: &CMatrix) -> f64 {
    sigma_max(z)
}

pub fn determinant(z: &CMatrix) -> Complex64 {
    z.clone().determinant()
}

// ---------------------------------------------------------------------------
// serde helpers
// ---------------------------------------------------------------------------

/// Serialize a `Complex64` as `[re, im]`.
pub mod serde_complex {
    use super::*;

    pub fn serialize<S: Serializer>(c: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
        [c.re, c.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

/// Serialize a `Vec<Complex64>` as `[[re, im], …]`.
pub mod serde_cvec {
    use super::*;

    pub fn serialize<S: Serializer>(
        v: &Vec<Complex64>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let raw: Vec<[f64; 2]> = v.iter().map(|c| [c.re, c.im]).collect();
        raw.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Complex64>, D::Error> {
        let raw = Vec::<[f64; 2]>::deserialize(d)?;
        Ok(raw.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
    }
}

/// Serialize a `CMatrix` as row-major nested arrays of `[re, im]`.
pub mod serde_cmatrix {
    use super::*;

    pub fn serialize<S: Serializer>(m: &CMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<CMatrix, D::Error> {
        let rows = Vec::<Vec<[f64; 2]>>::deserialize(d)?;
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != nc) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        let mut m = CMatrix::zeros(nr, nc);
        for (i, row) in rows.iter().enumerate() {
            for (j, &[re, im]) in row.iter().enumerate() {
                m[(i, j)] = Complex64::new(re, im);
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian_eig_matches_known() {
        // diag(3, 1) with a conjugate pair mixed in
        let mut h = CMatrix::zeros(2, 2);
        h[(0, 0)] = Complex64::new(2.0, 0.0);
        h[(1, 1)] = Complex64::new(2.0, 0.0);
        h[(0, 1)] = Complex64::new(0.0, 1.0);
        h[(1, 0)] = Complex64::new(0.0, -1.0);
        let eigs = hermitian_eigenvalues(&h);
        assert!((eigs[0] - 1.0).abs() < 1e-12);
        assert!((eigs[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn sigma_max_of_diag() {
        let mut z = CMatrix::zeros(2, 2);
        z[(0, 0)] = Complex64::new(0.5, 0.0);
        z[(1, 1)] = Complex64::new(-0.25, 0.0);
        assert!((sigma_max(&z) - 0.5).abs() < 1e-12);
    }
}
