//! Classical bounded symmetric domains and their generic norms.
//!
//! Types I–III are matrix domains `{ σ_max(Z) < 1 }` (with a symmetry
//! constraint for II/III); type IV is the Lie ball in ℂⁿ. Points are the
//! matrix entries stored row-major in the ambient coordinate list.

use crate::cnum::{self, CMatrix};
use crate::error::{Result, SqueezeError};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum SymmetricFamily {
    /// `r×s` complex matrices with `I − Z Zᴴ > 0`, `r ≤ s`.
    TypeI { r: usize, s: usize },
    /// Symmetric `p×p` matrices with `I − Z Zᴴ > 0`.
    TypeIi { p: usize },
    /// Skew-symmetric `q×q` matrices with `I − Z Zᴴ > 0`.
    TypeIii { q: usize },
    /// Lie ball `{ z ∈ ℂⁿ : 1 + |z zᵗ|² − 2 z z̄ᵗ > 0, |z zᵗ| < 1 }`.
    TypeIv { n: usize },
}

impl std::fmt::Display for SymmetricFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SymmetricFamily::TypeI { r, s } => write!(f, "I({r};{s})"),
            SymmetricFamily::TypeIi { p } => write!(f, "II({p})"),
            SymmetricFamily::TypeIii { q } => write!(f, "III({q})"),
            SymmetricFamily::TypeIv { n } => write!(f, "IV({n})"),
        }
    }
}

impl SymmetricFamily {
    pub fn validate(&self) -> Result<()> {
        match *self {
            SymmetricFamily::TypeI { r, s } => {
                if r == 0 || s == 0 || r > s {
                    return Err(SqueezeError::InvalidParam(
                        "type I requires 1 ≤ r ≤ s".into(),
                    ));
                }
            }
            SymmetricFamily::TypeIi { p } => {
                if p == 0 {
                    return Err(SqueezeError::InvalidParam("matrix order must be ≥ 1".into()));
                }
            }
            SymmetricFamily::TypeIii { q } => {
                if q < 2 {
                    return Err(SqueezeError::InvalidParam(
                        "type III needs order ≥ 2 (order 1 degenerates to a point)".into(),
                    ));
                }
            }
            SymmetricFamily::TypeIv { n } => {
                if n == 0 {
                    return Err(SqueezeError::InvalidParam("type IV dimension must be ≥ 1".into()));
                }
            }
        }
        Ok(())
    }

    /// Number of ambient complex coordinates (full row-major matrix entries).
    pub fn ambient_dim(&self) -> usize {
        match *self {
            SymmetricFamily::TypeI { r, s } => r * s,
            SymmetricFamily::TypeIi { p } => p * p,
            SymmetricFamily::TypeIii { q } => q * q,
            SymmetricFamily::TypeIv { n } => n,
        }
    }

    pub fn matrix_shape(&self) -> (usize, usize) {
        match *self {
            SymmetricFamily::TypeI { r, s } => (r, s),
            SymmetricFamily::TypeIi { p } => (p, p),
            SymmetricFamily::TypeIii { q } => (q, q),
            SymmetricFamily::TypeIv { n } => (1, n),
        }
    }

    /// Constant `c_Ω` in `s_{Ω×Bᵐ} = (1 + c_Ω)^{−1/2}`: `r`, `p`, `⌊q/2⌋`, `2`.
    pub fn squeeze_constant(&self) -> f64 {
        match *self {
            SymmetricFamily::TypeI { r, .. } => r as f64,
            SymmetricFamily::TypeIi { p } => p as f64,
            SymmetricFamily::TypeIii { q } => (q / 2) as f64,
            SymmetricFamily::TypeIv { .. } => 2.0,
        }
    }

    /// Reassemble the row-major coordinate list into the matrix shape,
    /// validating the family's symmetry constraint.
    pub fn coords_to_matrix(&self, coords: &[Complex64]) -> Result<CMatrix> {
        let (rows, cols) = self.matrix_shape();
        if coords.len() != rows * cols {
            return Err(SqueezeError::DimensionMismatch {
                expected: rows * cols,
                got: coords.len(),
            });
        }
        let m = CMatrix::from_fn(rows, cols, |i, j| coords[i * cols + j]);
        match self {
            SymmetricFamily::TypeIi { .. } => {
                if sym_defect(&m) > 1e-9 {
                    return Err(SqueezeError::ShapeViolation(
                        "type II requires a symmetric matrix".into(),
                    ));
                }
            }
            SymmetricFamily::TypeIii { .. } => {
                if skew_defect(&m) > 1e-9 {
                    return Err(SqueezeError::ShapeViolation(
                        "type III requires a skew-symmetric matrix".into(),
                    ));
                }
            }
            _ => {}
        }
        Ok(m)
    }

    /// Frobenius-norm radius of the smallest origin-centered ball containing
    /// the domain closure.
    pub fn circumradius(&self) -> f64 {
        match *self {
            SymmetricFamily::TypeI { r, .. } => (r as f64).sqrt(),
            SymmetricFamily::TypeIi { p } => (p as f64).sqrt(),
            SymmetricFamily::TypeIii { q } => ((2 * (q / 2)) as f64).sqrt(),
            SymmetricFamily::TypeIv { .. } => 1.0,
        }
    }

    /// Defining value: negative inside, 0 on the boundary, positive outside.
    /// Types I–III use `−λ_min(I − Z Zᴴ)`; type IV uses
    /// `max(2 z z̄ᵗ − |z zᵗ|² − 1, |z zᵗ| − 1)`.
    pub fn defining_value(&self, coords: &[Complex64]) -> Result<f64> {
        match self {
            SymmetricFamily::TypeIv { .. } => {
                let s: Complex64 = coords.iter().map(|z| z * z).sum();
                let q: f64 = coords.iter().map(|z| z.norm_sqr()).sum();
                Ok((2.0 * q - s.norm_sqr() - 1.0).max(s.norm() - 1.0))
            }
            _ => {
                let m = self.coords_to_matrix(coords)?;
                Ok(-cnum::min_eig_one_minus_zzh(&m))
            }
        }
    }

    /// Euclidean distance from an interior point to the boundary
    /// (`1 − σ_max` for types I–III; a certified lower bound for type IV).
    pub fn dist_to_boundary(&self, coords: &[Complex64]) -> Result<f64> {
        match self {
            SymmetricFamily::TypeIv { .. } => {
                let l = lie_norm(coords);
                if l >= 1.0 {
                    return Err(SqueezeError::OutsideDomain);
                }
                // Lie norm satisfies L ≤ √2‖·‖, so the L-ball of radius 1−L(z)
                // around z stays inside; its Euclidean inradius is (1−L)/√2.
                Ok((1.0 - l) / std::f64::consts::SQRT_2)
            }
            _ => {
                let m = self.coords_to_matrix(coords)?;
                let s = cnum::sigma_max(&m);
                if s >= 1.0 {
                    return Err(SqueezeError::OutsideDomain);
                }
                Ok(1.0 - s)
            }
        }
    }

    /// Exact Euclidean diameter of the closure.
    pub fn diameter(&self) -> f64 {
        match *self {
            SymmetricFamily::TypeI { r, .. } => 2.0 * (r as f64).sqrt(),
            SymmetricFamily::TypeIi { p } => 2.0 * (p as f64).sqrt(),
            SymmetricFamily::TypeIii { q } => 2.0 * ((2 * (q / 2)) as f64).sqrt().max(0.0),
            SymmetricFamily::TypeIv { .. } => 2.0,
        }
    }

    /// Lower bound for `N` over the closed Frobenius ball of radius `δ`
    /// around `Z` (clamped at 0). Monotone non-increasing in `δ`.
    pub fn norm_min_on_ball(&self, coords: &[Complex64], delta: f64) -> Result<f64> {
        match self {
            SymmetricFamily::TypeIv { .. } => {
                let l = lie_norm(coords) + std::f64::consts::SQRT_2 * delta;
                if l >= 1.0 {
                    return Ok(0.0);
                }
                // N = (1−λ₊²)(1−λ₋²) ≥ (1−L²)² since λ₋ ≤ λ₊ = L
                Ok((1.0 - l * l).powi(2))
            }
            _ => {
                let m = self.coords_to_matrix(coords)?;
                let h = &m * m.adjoint();
                let eigs = cnum::hermitian_eigenvalues(&h);
                let mut n_min = 1.0;
                for lam in eigs {
                    let sv = lam.max(0.0).sqrt() + delta; // Weyl: σ_i(Z') ≤ σ_i(Z) + δ
                    let f = 1.0 - (sv.min(1.0)).powi(2);
                    n_min *= f.max(0.0);
                }
                Ok(n_min)
            }
        }
    }
}

fn sym_defect(m: &CMatrix) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            d = d.max((m[(i, j)] - m[(j, i)]).norm());
        }
    }
    d
}

fn skew_defect(m: &CMatrix) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            d = d.max((m[(i, j)] + m[(j, i)]).norm());
        }
    }
    d
}

/// Lie norm of `z ∈ ℂⁿ`: `L(z)² = z z̄ᵗ + sqrt((z z̄ᵗ)² − |z zᵗ|²)`.
pub fn lie_norm(coords: &[Complex64]) -> f64 {
    let s: Complex64 = coords.iter().map(|z| z * z).sum();
    let q: f64 = coords.iter().map(|z| z.norm_sqr()).sum();
    let disc = (q * q - s.norm_sqr()).max(0.0);
    (q + disc.sqrt()).sqrt()
}

/// Generic norm `N(Z, Z)` of a symmetric domain evaluated at a coordinate
/// list. Positive exactly on the domain, `N(0,0) = 1`, vanishing on the
/// boundary:
/// types I/II `det(I − Z Zᴴ)`, type III `det(I + Z Z̄)` (which equals
/// `det(I − Z Zᴴ)` for skew-symmetric `Z`), type IV `1 + |z zᵗ|² − 2 z z̄ᵗ`.
pub fn generic_norm(family: &SymmetricFamily, coords: &[Complex64]) -> Result<f64> {
    match family {
        SymmetricFamily::TypeIv { n } => {
            if coords.len() != *n {
                return Err(SqueezeError::DimensionMismatch {
                    expected: *n,
                    got: coords.len(),
                });
            }
            let s: Complex64 = coords.iter().map(|z| z * z).sum();
            let q: f64 = coords.iter().map(|z| z.norm_sqr()).sum();
            Ok(1.0 + s.norm_sqr() - 2.0 * q)
        }
        SymmetricFamily::TypeIii { q } => {
            let m = family.coords_to_matrix(coords)?;
            let id = CMatrix::identity(*q, *q);
            let conj = m.map(|e| e.conj());
            let det = cnum::determinant(&(id + &m * conj));
            Ok(det.re)
        }
        _ => {
            let m = family.coords_to_matrix(coords)?;
            let k = m.nrows();
            let id = CMatrix::identity(k, k);
            let det = cnum::determinant(&(id - &m * m.adjoint()));
            Ok(det.re)
        }
    }
}

/// Same as [`generic_norm`] but taking the matrix directly.
pub fn generic_norm_matrix(family: &SymmetricFamily, z: &CMatrix) -> Result<f64> {
    let coords: Vec<Complex64> = (0..z.nrows())
        .flat_map(|i| (0..z.ncols()).map(move |j| (i, j)))
        .map(|(i, j)| z[(i, j)])
        .collect();
    generic_norm(family, &coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_at_zero_is_one() {
        let families = [
            SymmetricFamily::TypeI { r: 2, s: 3 },
            SymmetricFamily::TypeIi { p: 2 },
            SymmetricFamily::TypeIii { q: 2 },
            SymmetricFamily::TypeIv { n: 3 },
        ];
        for fam in families {
            let z = vec![Complex64::new(0.0, 0.0); fam.ambient_dim()];
            assert!((generic_norm(&fam, &z).unwrap() - 1.0).abs() < 1e-14, "{fam}");
        }
    }

    #[test]
    fn type_i_diag() {
        let fam = SymmetricFamily::TypeI { r: 2, s: 2 };
        let z = vec![
            Complex64::new(0.5, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.5, 0.0),
        ];
        assert!((generic_norm(&fam, &z).unwrap() - 0.5625).abs() < 1e-12);
    }

    #[test]
    fn type_iv_example() {
        let fam = SymmetricFamily::TypeIv { n: 2 };
        let z = vec![Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.0)];
        assert!((generic_norm(&fam, &z).unwrap() - 0.5625).abs() < 1e-12);
    }

    #[test]
    fn type_ii_shape_check() {
        let fam = SymmetricFamily::TypeIi { p: 2 };
        let bad = vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.3, 0.0),
            Complex64::new(-0.3, 0.0),
            Complex64::new(0.0, 0.0),
        ];
        assert!(generic_norm(&fam, &bad).is_err());
    }

    #[test]
    fn type_iii_matches_one_minus_zzh() {
        let fam = SymmetricFamily::TypeIii { q: 2 };
        let z = vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.4, 0.3),
            Complex64::new(-0.4, -0.3),
            Complex64::new(0.0, 0.0),
        ];
        let m = fam.coords_to_matrix(&z).unwrap();
        let id = CMatrix::identity(2, 2);
        let direct = cnum::determinant(&(id - &m * m.adjoint())).re;
        assert!((generic_norm(&fam, &z).unwrap() - direct).abs() < 1e-12);
    }
}
