//! Bounded-domain descriptions, membership, and defining functions.
//!
//! Every variant is bounded and carries a canonical global defining
//! function `ρ` with `ρ < 0` inside, `ρ = 0` on the boundary, `ρ > 0`
//! outside. Piecewise-gauge variants (annulus, punctured disk, Hartogs
//! triangle, polydisk) are C² away from their switch loci; Hessian
//! queries there are rejected.

mod defining;
pub mod geometry;
pub mod sample;
mod symmetric;

pub use defining::{contains, contains_with_tol, defining_value, DefiningValue};
pub use symmetric::{generic_norm, generic_norm_matrix, SymmetricFamily};

use crate::cnum::serde_cmatrix;
use crate::cnum::CMatrix;
use crate::error::{Result, SqueezeError};
use crate::holomap::HoloMap;
use crate::point::CPoint;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Tri-state membership verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Inside,
    BoundaryWithinTol,
    Outside,
}

/// A real-quadratic defining function on ℂⁿ written in the normal form
/// `ρ(z) = 2 Re z₁ + Re Σ a_{ij} z_i z_j + Re Σ_{j≥2} c_j z₁ z̄_j
///         + d |z₁|² + Σ_{j≥2} N_j |z_j|²`.
///
/// `a` is complex symmetric `n×n`; `c` and `nvec` are indexed by the
/// tangential coordinates `j = 2..n` (stored from index 0).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadricForm {
    #[serde(with = "serde_cmatrix")]
    pub a: CMatrix,
    #[serde(with = "crate::cnum::serde_cvec")]
    pub c: Vec<Complex64>,
    pub d: f64,
    pub nvec: Vec<f64>,
}

impl QuadricForm {
    pub fn dim(&self) -> usize {
        self.a.nrows()
    }

    pub fn eval(&self, z: &[Complex64]) -> f64 {
        let n = self.dim();
        let mut v = 2.0 * z[0].re;
        let mut quad = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                quad += self.a[(i, j)] * z[i] * z[j];
            }
        }
        v += quad.re;
        for j in 1..n {
            v += (self.c[j - 1] * z[0] * z[j].conj()).re;
            v += self.nvec[j - 1] * z[j].norm_sqr();
        }
        v += self.d * z[0].norm_sqr();
        v
    }

    /// Crude Lipschitz bound for the gradient over `|z| ≤ r`.
    pub fn gradient_sup(&self, r: f64) -> f64 {
        let n = self.dim();
        let mut quad_norm = 0.0;
        for i in 0..n {
            for j in 0..n {
                quad_norm += self.a[(i, j)].norm();
            }
        }
        let c_norm: f64 = self.c.iter().map(|c| c.norm()).sum();
        let n_norm: f64 = self.nvec.iter().map(|x| x.abs()).sum();
        2.0 + 2.0 * r * (quad_norm + c_norm + self.d.abs() + n_norm)
    }
}

/// Built-in sublevel defining functions. The handle keeps sublevel domains
/// serializable without embedding closures into the spec.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SublevelFn {
    /// The normal-form quadric above. Bounded instances only.
    Quadric(QuadricForm),
    /// Planar ellipse `(x/a)² + (y/b)² < 1` in ℂ.
    Ellipse { a: f64, b: f64 },
    /// The Hartogs triangle thickened with a tube along its bottom edge:
    /// `{0<|z₂|<|z₁|<1} ∪ {0<|z₁|<1, 0<|z₂|<eps}`.
    HartogsThickened { eps: f64 },
}

impl SublevelFn {
    pub fn dim(&self) -> usize {
        match self {
            SublevelFn::Quadric(q) => q.dim(),
            SublevelFn::Ellipse { .. } => 1,
            SublevelFn::HartogsThickened { .. } => 2,
        }
    }

    pub fn eval(&self, z: &[Complex64]) -> f64 {
        match self {
            SublevelFn::Quadric(q) => q.eval(z),
            SublevelFn::Ellipse { a, b } => {
                let x = z[0].re / a;
                let y = z[0].im / b;
                x * x + y * y - 1.0
            }
            SublevelFn::HartogsThickened { eps } => {
                let r1 = z[0].norm();
                let r2 = z[1].norm();
                let triangle = (r1 - 1.0).max(r2 - r1).max(-r2);
                let tube = (r1 - 1.0).max(r2 - eps).max(-r2).max(-r1);
                triangle.min(tube)
            }
        }
    }

    /// Upper bound for `‖∇ρ‖` over the bounding box (used to turn the
    /// defining value into a certified distance lower bound).
    pub fn gradient_sup(&self, box_radius: f64) -> f64 {
        match self {
            SublevelFn::Quadric(q) => q.gradient_sup(box_radius),
            SublevelFn::Ellipse { a, b } => {
                let gx = 2.0 * box_radius / (a * a);
                let gy = 2.0 * box_radius / (b * b);
                (gx * gx + gy * gy).sqrt().max(1.0)
            }
            SublevelFn::HartogsThickened { .. } => std::f64::consts::SQRT_2,
        }
    }

    /// A point strictly inside the sublevel set, used as ray-cast anchor.
    pub fn anchor(&self) -> CPoint {
        match self {
            SublevelFn::Quadric(q) => {
                let mut z = vec![Complex64::new(0.0, 0.0); q.dim()];
                // walk inward along −Re z₁ until comfortably negative
                let mut t = 0.05;
                for _ in 0..20 {
                    z[0] = Complex64::new(-t, 0.0);
                    if q.eval(&z) < -0.5 * t {
                        break;
                    }
                    t *= 0.5;
                }
                z[0] = Complex64::new(-t, 0.0);
                CPoint { coords: z }
            }
            SublevelFn::Ellipse { .. } => CPoint::from_re(&[0.0]),
            SublevelFn::HartogsThickened { .. } => {
                CPoint::new(vec![Complex64::new(0.6, 0.0), Complex64::new(0.3, 0.0)]).unwrap()
            }
        }
    }
}

/// Tagged description of a bounded domain in ℂⁿ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum DomainSpec {
    /// Euclidean ball `{ |z − center| < radius }`.
    Ball { center: CPoint, radius: f64 },
    /// Polydisk centered at 0 with per-coordinate radii.
    Polydisk { radii: Vec<f64> },
    /// Punctured unit disk `{ 0 < |z| < 1 }` in ℂ.
    PuncturedDisk,
    /// Annulus `{ inner < |z| < 1 }` in ℂ.
    Annulus { inner: f64 },
    /// Hartogs triangle `{ 0 < |z₂| < |z₁| < 1 }` in ℂ².
    HartogsTriangle,
    /// Classical bounded symmetric domain; points are matrices stored
    /// row-major in the coordinate list.
    SymmetricDomain { family: SymmetricFamily },
    /// Cartan-Hartogs domain `{ (Z, W) ∈ Ω × ℂᵐ : ‖W‖² < N(Z,Z)^k }`.
    CartanHartogs {
        base: SymmetricFamily,
        k: f64,
        m: usize,
    },
    /// Cartesian product with concatenated coordinates.
    Product { factors: Vec<DomainSpec> },
    /// Image of a domain under an invertible affine map.
    AffineImage {
        inner: Box<DomainSpec>,
        map: Box<HoloMap>,
    },
    /// Sublevel set `{ ρ < 0 }` of a built-in defining function,
    /// intersected with a finite bounding box `|Re z_i|, |Im z_i| ≤ box_radius`.
    Sublevel { f: SublevelFn, box_radius: f64 },
}

impl DomainSpec {
    pub fn ball(center: CPoint, radius: f64) -> Result<Self> {
        if radius <= 0.0 || !radius.is_finite() {
            return Err(SqueezeError::InvalidParam("ball radius must be positive".into()));
        }
        Ok(DomainSpec::Ball { center, radius })
    }

    pub fn unit_ball(n: usize) -> Self {
        DomainSpec::Ball {
            center: CPoint::zero(n),
            radius: 1.0,
        }
    }

    pub fn unit_disk() -> Self {
        Self::unit_ball(1)
    }

    pub fn polydisk(radii: Vec<f64>) -> Result<Self> {
        if radii.is_empty() || radii.iter().any(|r| *r <= 0.0 || !r.is_finite()) {
            return Err(SqueezeError::InvalidParam("polydisk radii must be positive".into()));
        }
        Ok(DomainSpec::Polydisk { radii })
    }

    pub fn annulus(inner: f64) -> Result<Self> {
        if !(0.0 < inner && inner < 1.0) {
            return Err(SqueezeError::InvalidParam(
                "annulus inner radius must lie in (0,1)".into(),
            ));
        }
        Ok(DomainSpec::Annulus { inner })
    }

    pub fn cartan_hartogs(base: SymmetricFamily, k: f64, m: usize) -> Result<Self> {
        if k <= 0.0 || !k.is_finite() {
            return Err(SqueezeError::InvalidParam("Cartan-Hartogs exponent k must be positive".into()));
        }
        if m == 0 {
            return Err(SqueezeError::InvalidParam("Cartan-Hartogs fiber dimension m must be ≥ 1".into()));
        }
        Ok(DomainSpec::CartanHartogs { base, k, m })
    }

    pub fn sublevel(f: SublevelFn, box_radius: f64) -> Result<Self> {
        if box_radius <= 0.0 || !box_radius.is_finite() {
            return Err(SqueezeError::InvalidParam("sublevel bounding box must be finite".into()));
        }
        Ok(DomainSpec::Sublevel { f, box_radius })
    }

    /// Ambient complex dimension.
    pub fn dim(&self) -> usize {
        match self {
            DomainSpec::Ball { center, .. } => center.dim(),
            DomainSpec::Polydisk { radii } => radii.len(),
            DomainSpec::PuncturedDisk | DomainSpec::Annulus { .. } => 1,
            DomainSpec::HartogsTriangle => 2,
            DomainSpec::SymmetricDomain { family } => family.ambient_dim(),
            DomainSpec::CartanHartogs { base, m, .. } => base.ambient_dim() + m,
            DomainSpec::Product { factors } => factors.iter().map(DomainSpec::dim).sum(),
            DomainSpec::AffineImage { inner, .. } => inner.dim(),
            DomainSpec::Sublevel { f, .. } => f.dim(),
        }
    }

    pub fn check_dim(&self, p: &CPoint) -> Result<()> {
        if p.dim() != self.dim() {
            return Err(SqueezeError::DimensionMismatch {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        Ok(())
    }

    /// Short label used as the domain id in CSV artifacts.
    pub fn label(&self) -> String {
        match self {
            DomainSpec::Ball { center, radius } => {
                format!("ball(n={};r={})", center.dim(), radius)
            }
            DomainSpec::Polydisk { radii } => format!(
                "polydisk({})",
                radii
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(";")
            ),
            DomainSpec::PuncturedDisk => "punctured-disk".into(),
            DomainSpec::Annulus { inner } => format!("annulus({inner})"),
            DomainSpec::HartogsTriangle => "hartogs-triangle".into(),
            DomainSpec::SymmetricDomain { family } => format!("symmetric({family})"),
            DomainSpec::CartanHartogs { base, k, m } => {
                format!("cartan-hartogs({base};k={k};m={m})")
            }
            DomainSpec::Product { factors } => format!(
                "product[{}]",
                factors
                    .iter()
                    .map(DomainSpec::label)
                    .collect::<Vec<_>>()
                    .join("*")
            ),
            DomainSpec::AffineImage { inner, .. } => format!("affine({})", inner.label()),
            DomainSpec::Sublevel { f, .. } => match f {
                SublevelFn::Quadric(_) => "sublevel-quadric".into(),
                SublevelFn::Ellipse { a, b } => format!("ellipse({a};{b})"),
                SublevelFn::HartogsThickened { eps } => format!("hartogs-thickened({eps})"),
            },
        }
    }

    /// Offsets of each factor inside the concatenated product coordinates.
    pub fn product_offsets(factors: &[DomainSpec]) -> Vec<usize> {
        let mut off = Vec::with_capacity(factors.len());
        let mut acc = 0;
        for f in factors {
            off.push(acc);
            acc += f.dim();
        }
        off
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims() {
        assert_eq!(DomainSpec::unit_disk().dim(), 1);
        assert_eq!(DomainSpec::HartogsTriangle.dim(), 2);
        let sym = DomainSpec::SymmetricDomain {
            family: SymmetricFamily::TypeI { r: 2, s: 3 },
        };
        assert_eq!(sym.dim(), 6);
        let ch = DomainSpec::cartan_hartogs(SymmetricFamily::TypeI { r: 1, s: 1 }, 1.0, 2).unwrap();
        assert_eq!(ch.dim(), 3);
    }

    #[test]
    fn serde_roundtrip() {
        let d = DomainSpec::Product {
            factors: vec![
                DomainSpec::annulus(0.3).unwrap(),
                DomainSpec::unit_ball(2),
            ],
        };
        let s = serde_json::to_string(&d).unwrap();
        let back: DomainSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(d, back);
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(DomainSpec::annulus(1.5).is_err());
        assert!(DomainSpec::polydisk(vec![1.0, -1.0]).is_err());
        assert!(DomainSpec::cartan_hartogs(SymmetricFamily::TypeI { r: 1, s: 1 }, 0.0, 1).is_err());
    }
}
