//! Composable holomorphic maps with exact evaluation and complex Jacobians.
//!
//! A [`HoloMap`] is an ordered list of primitives applied left to right.
//! Jacobians are exact (chain rule over closed-form primitive Jacobians);
//! inverses are exact except for the quadratic first-coordinate shear,
//! which inverts by a locally convergent Newton step.

use crate::cnum::{hdot, serde_cmatrix, serde_cvec, CMatrix, ONE, ZERO};
use crate::error::{Result, SqueezeError};
use crate::point::CPoint;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Primitive {
    Identity {
        dim: usize,
    },
    /// `z ↦ M z` with an invertible square matrix.
    Linear {
        #[serde(with = "serde_cmatrix")]
        matrix: CMatrix,
    },
    Translate {
        #[serde(with = "serde_cvec")]
        offset: Vec<Complex64>,
    },
    DiagonalScale {
        #[serde(with = "serde_cvec")]
        factors: Vec<Complex64>,
    },
    /// Per-coordinate disc automorphism `z_i ↦ (z_i − a_i)/(1 − ā_i z_i)`.
    FactorMoebius {
        #[serde(with = "serde_cvec")]
        params: Vec<Complex64>,
    },
    /// Unit-ball automorphism `φ_a` with `φ_a(a) = 0`, `φ_a(0) = a`
    /// (an involution).
    BallRecenter {
        #[serde(with = "serde_cvec")]
        center: Vec<Complex64>,
    },
    /// Automorphism of the tangent ball `{2 Re z₁ + |z|² < 0}` contracting
    /// along the normal axis:
    /// `w₁ = ε z₁/D`, `w' = √(ε(2−ε)) z'/D`, `D = 2 − ε + (1−ε) z₁`.
    BallDilation {
        eps: f64,
        dim: usize,
        #[serde(default)]
        inverse: bool,
    },
    /// `z₁ ↦ z₁ + Σ_j b_j z₁ z_j` (first coordinate only; the sum includes
    /// `j = 1`).
    NormalQuadShear {
        #[serde(with = "serde_cvec")]
        coeffs: Vec<Complex64>,
    },
    /// `z₁ ↦ z₁ + Σ_{i,j≥2} b_{ij} z_i z_j` with symmetric coefficients on
    /// the tangential coordinates.
    TangentQuadShear {
        #[serde(with = "serde_cmatrix")]
        quad: CMatrix,
    },
    /// `(z₁, z₂) ↦ (z₁, z₂/z₁)` on the Hartogs triangle (inverse:
    /// `(w₁, w₂) ↦ (w₁, w₁ w₂)`).
    HartogsQuotient {
        #[serde(default)]
        inverse: bool,
    },
}

impl Primitive {
    pub fn dim(&self) -> usize {
        match self {
            Primitive::Identity { dim } => *dim,
            Primitive::Linear { matrix } => matrix.ncols(),
            Primitive::Translate { offset } => offset.len(),
            Primitive::DiagonalScale { factors } => factors.len(),
            Primitive::FactorMoebius { params } => params.len(),
            Primitive::BallRecenter { center } => center.len(),
            Primitive::BallDilation { dim, .. } => *dim,
            Primitive::NormalQuadShear { coeffs } => coeffs.len(),
            Primitive::TangentQuadShear { quad } => quad.nrows() + 1,
            Primitive::HartogsQuotient { .. } => 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Primitive::Identity { dim } | Primitive::BallDilation { dim, .. } => {
                if *dim == 0 {
                    return Err(SqueezeError::InvalidParam("zero-dimensional map".into()));
                }
            }
            Primitive::Linear { matrix } => {
                if matrix.nrows() != matrix.ncols() {
                    return Err(SqueezeError::ShapeViolation("linear map must be square".into()));
                }
                if crate::cnum::determinant(matrix).norm() < 1e-14 {
                    return Err(SqueezeError::InvalidParam("linear map must be invertible".into()));
                }
            }
            Primitive::DiagonalScale { factors } => {
                if factors.iter().any(|f| f.norm() < 1e-15) {
                    return Err(SqueezeError::InvalidParam("zero scale factor".into()));
                }
            }
            Primitive::FactorMoebius { params } => {
                if params.iter().any(|a| a.norm() >= 1.0) {
                    return Err(SqueezeError::InvalidParam(
                        "Moebius parameters must lie in the open unit disc".into(),
                    ));
                }
            }
            Primitive::BallRecenter { center } => {
                if crate::cnum::norm(center) >= 1.0 {
                    return Err(SqueezeError::InvalidParam(
                        "recentering point must lie in the open unit ball".into(),
                    ));
                }
            }
            Primitive::TangentQuadShear { quad } => {
                if quad.nrows() != quad.ncols() {
                    return Err(SqueezeError::ShapeViolation("quadratic shear matrix must be square".into()));
                }
                for i in 0..quad.nrows() {
                    for j in 0..quad.ncols() {
                        if (quad[(i, j)] - quad[(j, i)]).norm() > 1e-12 {
                            return Err(SqueezeError::ShapeViolation(
                                "quadratic shear coefficients must be symmetric".into(),
                            ));
                        }
                    }
                }
            }
            _ => {}
        }
        if let Primitive::BallDilation { eps, .. } = self {
            if !(*eps > 0.0 && *eps <= 1.0) {
                return Err(SqueezeError::InvalidParam("dilation parameter must lie in (0, 1]".into()));
            }
        }
        Ok(())
    }

    fn apply(&self, z: &[Complex64]) -> Result<Vec<Complex64>> {
        match self {
            Primitive::Identity { .. } => Ok(z.to_vec()),
            Primitive::Linear { matrix } => {
                let v = nalgebra::DVector::from_column_slice(z);
                Ok((matrix * v).iter().copied().collect())
            }
            Primitive::Translate { offset } => {
                Ok(z.iter().zip(offset).map(|(a, b)| a + b).collect())
            }
            Primitive::DiagonalScale { factors } => {
                Ok(z.iter().zip(factors).map(|(a, b)| a * b).collect())
            }
            Primitive::FactorMoebius { params } => Ok(z
                .iter()
                .zip(params)
                .map(|(zi, a)| (zi - a) / (ONE - a.conj() * zi))
                .collect()),
            Primitive::BallRecenter { center } => Ok(ball_recenter(center, z)),
            Primitive::BallDilation { eps, inverse, .. } => {
                if *inverse {
                    ball_dilation_inv(*eps, z)
                } else {
                    ball_dilation(*eps, z)
                }
            }
            Primitive::NormalQuadShear { coeffs } => {
                let mut w = z.to_vec();
                let s: Complex64 = coeffs.iter().zip(z).map(|(b, zj)| b * zj).sum();
                w[0] = z[0] + z[0] * s;
                Ok(w)
            }
            Primitive::TangentQuadShear { quad } => {
                let mut w = z.to_vec();
                let mut s = ZERO;
                for i in 0..quad.nrows() {
                    for j in 0..quad.ncols() {
                        s += quad[(i, j)] * z[i + 1] * z[j + 1];
                    }
                }
                w[0] = z[0] + s;
                Ok(w)
            }
            Primitive::HartogsQuotient { inverse } => {
                if *inverse {
                    Ok(vec![z[0], z[0] * z[1]])
                } else {
                    if z[0].norm() < 1e-300 {
                        return Err(SqueezeError::SingularPoint(
                            "Hartogs quotient undefined at z₁ = 0".into(),
                        ));
                    }
                    Ok(vec![z[0], z[1] / z[0]])
                }
            }
        }
    }

    fn jacobian(&self, z: &[Complex64]) -> Result<CMatrix> {
        let n = z.len();
        match self {
            Primitive::Identity { .. } => Ok(CMatrix::identity(n, n)),
            Primitive::Linear { matrix } => Ok(matrix.clone()),
            Primitive::Translate { .. } => Ok(CMatrix::identity(n, n)),
            Primitive::DiagonalScale { factors } => {
                Ok(CMatrix::from_fn(n, n, |i, j| if i == j { factors[i] } else { ZERO }))
            }
            Primitive::FactorMoebius { params } => Ok(CMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    let a = params[i];
                    let d = ONE - a.conj() * z[i];
                    (ONE - Complex64::new(a.norm_sqr(), 0.0)) / (d * d)
                } else {
                    ZERO
                }
            })),
            Primitive::BallRecenter { center } => Ok(ball_recenter_jacobian(center, z)),
            Primitive::BallDilation { eps, inverse, .. } => {
                if *inverse {
                    ball_dilation_inv_jacobian(*eps, z)
                } else {
                    ball_dilation_jacobian(*eps, z)
                }
            }
            Primitive::NormalQuadShear { coeffs } => {
                let mut m = CMatrix::identity(n, n);
                let s: Complex64 = coeffs.iter().zip(z).map(|(b, zj)| b * zj).sum();
                m[(0, 0)] = ONE + s + coeffs[0] * z[0];
                for j in 1..n {
                    m[(0, j)] = coeffs[j] * z[0];
                }
                Ok(m)
            }
            Primitive::TangentQuadShear { quad } => {
                let mut m = CMatrix::identity(n, n);
                for j in 1..n {
                    let mut d = ZERO;
                    for i in 0..quad.nrows() {
                        d += (quad[(i, j - 1)] + quad[(j - 1, i)]) * z[i + 1];
                    }
                    m[(0, j)] = d;
                }
                Ok(m)
            }
            Primitive::HartogsQuotient { inverse } => {
                let mut m = CMatrix::identity(2, 2);
                if *inverse {
                    m[(1, 0)] = z[1];
                    m[(1, 1)] = z[0];
                } else {
                    if z[0].norm() < 1e-300 {
                        return Err(SqueezeError::SingularPoint(
                            "Hartogs quotient undefined at z₁ = 0".into(),
                        ));
                    }
                    m[(1, 0)] = -z[1] / (z[0] * z[0]);
                    m[(1, 1)] = ONE / z[0];
                }
                Ok(m)
            }
        }
    }

    fn inverse_apply(&self, w: &[Complex64]) -> Result<Vec<Complex64>> {
        match self {
            Primitive::Identity { .. } => Ok(w.to_vec()),
            Primitive::Linear { matrix } => {
                let v = nalgebra::DVector::from_column_slice(w);
                let lu = matrix.clone().lu();
                let sol = lu
                    .solve(&v)
                    .ok_or_else(|| SqueezeError::InvalidParam("singular linear map".into()))?;
                Ok(sol.iter().copied().collect())
            }
            Primitive::Translate { offset } => {
                Ok(w.iter().zip(offset).map(|(a, b)| a - b).collect())
            }
            Primitive::DiagonalScale { factors } => {
                Ok(w.iter().zip(factors).map(|(a, b)| a / b).collect())
            }
            Primitive::FactorMoebius { params } => Ok(w
                .iter()
                .zip(params)
                .map(|(wi, a)| (wi + a) / (ONE + a.conj() * wi))
                .collect()),
            // φ_a is an involution
            Primitive::BallRecenter { center } => Ok(ball_recenter(center, w)),
            Primitive::BallDilation { eps, inverse, .. } => {
                if *inverse {
                    ball_dilation(*eps, w)
                } else {
                    ball_dilation_inv(*eps, w)
                }
            }
            Primitive::NormalQuadShear { coeffs } => {
                // solve z₁ (1 + b₁ z₁ + Σ_{j≥2} b_j w_j) = w₁ by Newton from w₁
                let mut z = w.to_vec();
                let tail: Complex64 = coeffs
                    .iter()
                    .zip(w)
                    .skip(1)
                    .map(|(b, wj)| b * wj)
                    .sum();
                let b1 = coeffs[0];
                let mut z1 = w[0];
                for _ in 0..60 {
                    let f = z1 * (ONE + b1 * z1 + tail) - w[0];
                    let df = ONE + tail + 2.0 * b1 * z1;
                    if df.norm() < 1e-14 {
                        return Err(SqueezeError::SingularPoint(
                            "quadratic shear inverse: vanishing derivative".into(),
                        ));
                    }
                    let step = f / df;
                    z1 -= step;
                    if step.norm() < 1e-15 {
                        break;
                    }
                }
                z[0] = z1;
                Ok(z)
            }
            Primitive::TangentQuadShear { quad } => {
                let mut z = w.to_vec();
                let mut s = ZERO;
                for i in 0..quad.nrows() {
                    for j in 0..quad.ncols() {
                        s += quad[(i, j)] * w[i + 1] * w[j + 1];
                    }
                }
                z[0] = w[0] - s;
                Ok(z)
            }
            Primitive::HartogsQuotient { inverse } => {
                let flipped = Primitive::HartogsQuotient { inverse: !inverse };
                flipped.apply(w)
            }
        }
    }

    /// Conservative flag: primitives known to be injective on their
    /// declared sub-domains. The quadratic shears are only locally
    /// injective and stay off the list.
    fn injective_whitelisted(&self) -> bool {
        !matches!(
            self,
            Primitive::NormalQuadShear { .. } | Primitive::TangentQuadShear { .. }
        )
    }
}

fn ball_recenter(a: &[Complex64], z: &[Complex64]) -> Vec<Complex64> {
    let asq = crate::cnum::norm_sq(a);
    if asq < 1e-30 {
        return z.iter().map(|c| -c).collect();
    }
    let s = (1.0 - asq).sqrt();
    let za = hdot(z, a);
    let denom = ONE - za;
    let proj = za / Complex64::new(asq, 0.0);
    z.iter()
        .zip(a)
        .map(|(zi, ai)| {
            let p = proj * ai; // P_a z component
            let q = zi - p;
            (ai - p - s * q) / denom
        })
        .collect()
}

fn ball_recenter_jacobian(a: &[Complex64], z: &[Complex64]) -> CMatrix {
    let n = z.len();
    let asq = crate::cnum::norm_sq(a);
    if asq < 1e-30 {
        return CMatrix::identity(n, n) * Complex64::new(-1.0, 0.0);
    }
    let s = (1.0 - asq).sqrt();
    let za = hdot(z, a);
    let denom = ONE - za;
    // φ(z) = (a − P z − s Q z) / (1 − ⟨z,a⟩), both parts ℂ-linear in z
    // dφ v = [−(P + sQ) v] / denom + (a − Pz − sQz) ⟨v,a⟩ / denom²
    let proj = za / Complex64::new(asq, 0.0);
    let num: Vec<Complex64> = z
        .iter()
        .zip(a)
        .map(|(zi, ai)| {
            let p = proj * ai;
            ai - p - s * (zi - p)
        })
        .collect();
    CMatrix::from_fn(n, n, |i, j| {
        // column j = dφ(e_j)
        let vj_a = a[j].conj(); // ⟨e_j, a⟩
        let pv_i = vj_a / Complex64::new(asq, 0.0) * a[i]; // (P e_j)_i
        let qv_i = (if i == j { ONE } else { ZERO }) - pv_i;
        (-(pv_i + s * qv_i)) / denom + num[i] * vj_a / (denom * denom)
    })
}

fn ball_dilation(eps: f64, z: &[Complex64]) -> Result<Vec<Complex64>> {
    let d = Complex64::new(2.0 - eps, 0.0) + (1.0 - eps) * z[0];
    if d.norm() < 1e-14 {
        return Err(SqueezeError::SingularPoint("dilation denominator vanishes".into()));
    }
    let root = (eps * (2.0 - eps)).sqrt();
    let mut w = Vec::with_capacity(z.len());
    w.push(eps * z[0] / d);
    for zj in &z[1..] {
        w.push(root * zj / d);
    }
    Ok(w)
}

fn ball_dilation_jacobian(eps: f64, z: &[Complex64]) -> Result<CMatrix> {
    let n = z.len();
    let d = Complex64::new(2.0 - eps, 0.0) + (1.0 - eps) * z[0];
    if d.norm() < 1e-14 {
        return Err(SqueezeError::SingularPoint("dilation denominator vanishes".into()));
    }
    let root = (eps * (2.0 - eps)).sqrt();
    let mut m = CMatrix::zeros(n, n);
    m[(0, 0)] = Complex64::new(eps * (2.0 - eps), 0.0) / (d * d);
    for j in 1..n {
        m[(j, 0)] = -root * (1.0 - eps) * z[j] / (d * d);
        m[(j, j)] = Complex64::new(root, 0.0) / d;
    }
    Ok(m)
}

fn ball_dilation_inv(eps: f64, w: &[Complex64]) -> Result<Vec<Complex64>> {
    let denom = Complex64::new(eps, 0.0) - (1.0 - eps) * w[0];
    if denom.norm() < 1e-14 {
        return Err(SqueezeError::SingularPoint("dilation inverse denominator vanishes".into()));
    }
    let z1 = (2.0 - eps) * w[0] / denom;
    let d = Complex64::new(2.0 - eps, 0.0) + (1.0 - eps) * z1;
    let root = (eps * (2.0 - eps)).sqrt();
    let mut z = Vec::with_capacity(w.len());
    z.push(z1);
    for wj in &w[1..] {
        z.push(wj * d / root);
    }
    Ok(z)
}

fn ball_dilation_inv_jacobian(eps: f64, w: &[Complex64]) -> Result<CMatrix> {
    let n = w.len();
    let denom = Complex64::new(eps, 0.0) - (1.0 - eps) * w[0];
    if denom.norm() < 1e-14 {
        return Err(SqueezeError::SingularPoint("dilation inverse denominator vanishes".into()));
    }
    let root = (eps * (2.0 - eps)).sqrt();
    let dz1_dw1 = Complex64::new((2.0 - eps) * eps, 0.0) / (denom * denom);
    let z1 = (2.0 - eps) * w[0] / denom;
    let d = Complex64::new(2.0 - eps, 0.0) + (1.0 - eps) * z1;
    let mut m = CMatrix::zeros(n, n);
    m[(0, 0)] = dz1_dw1;
    for j in 1..n {
        m[(j, 0)] = w[j] * (1.0 - eps) * dz1_dw1 / root;
        m[(j, j)] = d / root;
    }
    Ok(m)
}

/// Composable holomorphic map (primitives applied left to right).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HoloMap {
    pub primitives: Vec<Primitive>,
}

impl HoloMap {
    pub fn primitive(p: Primitive) -> Result<Self> {
        p.validate()?;
        Ok(Self { primitives: vec![p] })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            primitives: vec![Primitive::Identity { dim }],
        }
    }

    pub fn linear(matrix: CMatrix) -> Result<Self> {
        Self::primitive(Primitive::Linear { matrix })
    }

    pub fn translate(offset: Vec<Complex64>) -> Self {
        Self {
            primitives: vec![Primitive::Translate { offset }],
        }
    }

    pub fn diagonal_scale(factors: Vec<Complex64>) -> Result<Self> {
        Self::primitive(Primitive::DiagonalScale { factors })
    }

    pub fn uniform_scale(dim: usize, t: f64) -> Result<Self> {
        Self::diagonal_scale(vec![Complex64::new(t, 0.0); dim])
    }

    pub fn factor_moebius(params: Vec<Complex64>) -> Result<Self> {
        Self::primitive(Primitive::FactorMoebius { params })
    }

    pub fn ball_recenter(center: Vec<Complex64>) -> Result<Self> {
        Self::primitive(Primitive::BallRecenter { center })
    }

    pub fn ball_dilation(eps: f64, dim: usize) -> Result<Self> {
        Self::primitive(Primitive::BallDilation {
            eps,
            dim,
            inverse: false,
        })
    }

    pub fn ball_dilation_inv(eps: f64, dim: usize) -> Result<Self> {
        Self::primitive(Primitive::BallDilation {
            eps,
            dim,
            inverse: true,
        })
    }

    pub fn normal_quad_shear(coeffs: Vec<Complex64>) -> Result<Self> {
        Self::primitive(Primitive::NormalQuadShear { coeffs })
    }

    pub fn tangent_quad_shear(quad: CMatrix) -> Result<Self> {
        Self::primitive(Primitive::TangentQuadShear { quad })
    }

    pub fn hartogs_quotient() -> Self {
        Self {
            primitives: vec![Primitive::HartogsQuotient { inverse: false }],
        }
    }

    /// Linear shear `H_j(z) = z_j + (c_j / (2 N_j)) z₁` removing mixed
    /// `z₁ z̄_j` terms; `c` and `nvec` are indexed by the tangential
    /// coordinates `j = 2..n`.
    pub fn tangential_shear(dim: usize, c: &[Complex64], nvec: &[f64]) -> Result<Self> {
        if c.len() != dim - 1 || nvec.len() != dim - 1 {
            return Err(SqueezeError::DimensionMismatch {
                expected: dim - 1,
                got: c.len(),
            });
        }
        if nvec.iter().any(|n| n.abs() < 1e-14) {
            return Err(SqueezeError::InvalidParam(
                "tangential shear requires nonzero diagonal coefficients".into(),
            ));
        }
        let mut m = CMatrix::identity(dim, dim);
        for j in 1..dim {
            m[(j, 0)] = c[j - 1] / (2.0 * nvec[j - 1]);
        }
        Self::linear(m)
    }

    /// The anisotropic rescale `(z₁, z') ↦ ((14/15) z₁, √(14/15) z')`.
    pub fn graph_rescale(dim: usize) -> Result<Self> {
        let t: f64 = 14.0 / 15.0;
        let mut factors = vec![Complex64::new(t.sqrt(), 0.0); dim];
        factors[0] = Complex64::new(t, 0.0);
        Self::diagonal_scale(factors)
    }

    pub fn then(mut self, mut other: HoloMap) -> HoloMap {
        self.primitives.append(&mut other.primitives);
        self
    }

    pub fn dim(&self) -> usize {
        self.primitives.first().map_or(0, Primitive::dim)
    }

    pub fn validate(&self) -> Result<()> {
        for p in &self.primitives {
            p.validate()?;
        }
        Ok(())
    }

    pub fn apply(&self, p: &CPoint) -> Result<CPoint> {
        let mut z = p.coords.clone();
        for prim in &self.primitives {
            z = prim.apply(&z)?;
        }
        Ok(CPoint { coords: z })
    }

    /// Complex Jacobian of the composition at `p` (chain rule).
    pub fn jacobian(&self, p: &CPoint) -> Result<CMatrix> {
        let n = p.dim();
        let mut z = p.coords.clone();
        let mut jac = CMatrix::identity(n, n);
        for prim in &self.primitives {
            let jp = prim.jacobian(&z)?;
            jac = jp * jac;
            z = prim.apply(&z)?;
        }
        Ok(jac)
    }

    pub fn jacobian_det(&self, p: &CPoint) -> Result<Complex64> {
        Ok(crate::cnum::determinant(&self.jacobian(p)?))
    }

    /// Apply the inverse map (primitives inverted right to left).
    pub fn inverse_apply(&self, w: &CPoint) -> Result<CPoint> {
        let mut z = w.coords.clone();
        for prim in self.primitives.iter().rev() {
            z = prim.inverse_apply(&z)?;
        }
        Ok(CPoint { coords: z })
    }

    /// True when every primitive is on the injectivity whitelist.
    pub fn injective_whitelisted(&self) -> bool {
        self.primitives.iter().all(Primitive::injective_whitelisted)
    }

    /// True when the map is affine (translation + linear pieces only).
    pub fn is_affine(&self) -> bool {
        self.primitives.iter().all(|p| {
            matches!(
                p,
                Primitive::Identity { .. }
                    | Primitive::Linear { .. }
                    | Primitive::Translate { .. }
                    | Primitive::DiagonalScale { .. }
            )
        })
    }

    /// Extremal singular values of the linear part of an affine map.
    pub fn affine_singular_range(&self, dim: usize) -> Result<(f64, f64)> {
        if !self.is_affine() {
            return Err(SqueezeError::InvalidParam("map is not affine".into()));
        }
        let jac = self.jacobian(&CPoint::zero(dim))?;
        let h = &jac * jac.adjoint();
        let eigs = crate::cnum::hermitian_eigenvalues(&h);
        let lo = eigs.iter().cloned().fold(f64::INFINITY, f64::min).max(0.0);
        let hi = eigs.iter().cloned().fold(0.0f64, f64::max);
        Ok((lo.sqrt(), hi.sqrt()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn dilation_at_eps_one_is_identity() {
        let f = HoloMap::ball_dilation(1.0, 2).unwrap();
        let p = CPoint::new(vec![c(-0.5, 0.2), c(0.1, -0.3)]).unwrap();
        let q = f.apply(&p).unwrap();
        assert!(p.dist(&q) < 1e-14);
    }

    #[test]
    fn quad_shear_example() {
        // b₂₂ = 1 in ℂ²: (0.1, 0.2) ↦ (0.14, 0.2)
        let quad = CMatrix::from_fn(1, 1, |_, _| c(1.0, 0.0));
        let f = HoloMap::tangent_quad_shear(quad).unwrap();
        let q = f.apply(&CPoint::from_re(&[0.1, 0.2])).unwrap();
        assert!((q.coords[0] - c(0.14, 0.0)).norm() < 1e-15);
        assert!((q.coords[1] - c(0.2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn normal_shear_zero_is_identity() {
        let f = HoloMap::normal_quad_shear(vec![c(0.0, 0.0); 3]).unwrap();
        let p = CPoint::from_re(&[0.3, -0.1, 0.2]);
        assert!(f.apply(&p).unwrap().dist(&p) < 1e-15);
    }

    #[test]
    fn recenter_involution_and_values() {
        let a = vec![c(0.3, 0.1), c(-0.2, 0.4)];
        let f = HoloMap::ball_recenter(a.clone()).unwrap();
        let at_a = f.apply(&CPoint { coords: a.clone() }).unwrap();
        assert!(at_a.norm() < 1e-13);
        let at_0 = f.apply(&CPoint::zero(2)).unwrap();
        assert!(at_0.dist(&CPoint { coords: a.clone() }) < 1e-13);
        let p = CPoint::new(vec![c(0.2, -0.3), c(0.1, 0.2)]).unwrap();
        let back = f.apply(&f.apply(&p).unwrap()).unwrap();
        assert!(back.dist(&p) < 1e-12);
    }

    #[test]
    fn inverses_roundtrip() {
        let maps = vec![
            HoloMap::ball_dilation(0.4, 3).unwrap(),
            HoloMap::factor_moebius(vec![c(0.3, 0.2), c(-0.1, 0.0), c(0.0, 0.5)]).unwrap(),
            HoloMap::normal_quad_shear(vec![c(0.05, 0.02), c(-0.03, 0.0), c(0.02, 0.04)]).unwrap(),
            HoloMap::tangential_shear(3, &[c(0.3, -0.2), c(0.1, 0.1)], &[1.0, 2.0]).unwrap(),
        ];
        let p = CPoint::new(vec![c(-0.31, 0.12), c(0.21, -0.05), c(0.02, 0.17)]).unwrap();
        for f in maps {
            let w = f.apply(&p).unwrap();
            let back = f.inverse_apply(&w).unwrap();
            assert!(back.dist(&p) < 1e-11, "{:?}", f.primitives);
        }
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        let maps = vec![
            HoloMap::ball_dilation(0.35, 2).unwrap(),
            HoloMap::ball_dilation_inv(0.6, 2).unwrap(),
            HoloMap::ball_recenter(vec![c(0.25, -0.15), c(0.1, 0.3)]).unwrap(),
            HoloMap::factor_moebius(vec![c(0.4, 0.1), c(-0.2, 0.3)]).unwrap(),
            HoloMap::normal_quad_shear(vec![c(0.1, 0.05), c(-0.07, 0.02)]).unwrap(),
            HoloMap::tangent_quad_shear(CMatrix::from_fn(1, 1, |_, _| c(0.3, -0.2))).unwrap(),
            HoloMap::hartogs_quotient(),
        ];
        let p = CPoint::new(vec![c(0.41, 0.12), c(0.18, -0.22)]).unwrap();
        let h = 1e-6;
        for f in maps {
            let jac = f.jacobian(&p).unwrap();
            for j in 0..2 {
                for (step, scale) in [(c(h, 0.0), c(1.0, 0.0)), (c(0.0, h), c(0.0, -1.0))] {
                    let mut zp = p.coords.clone();
                    let mut zm = p.coords.clone();
                    zp[j] += step;
                    zm[j] -= step;
                    let fp = f.apply(&CPoint { coords: zp }).unwrap();
                    let fm = f.apply(&CPoint { coords: zm }).unwrap();
                    for i in 0..2 {
                        let fd = (fp.coords[i] - fm.coords[i]) / (2.0 * h) * scale;
                        assert!(
                            (fd - jac[(i, j)]).norm() < 1e-7 * (1.0 + jac[(i, j)].norm()),
                            "{:?} entry ({i},{j})",
                            f.primitives
                        );
                    }
                }
            }
        }
    }
}
