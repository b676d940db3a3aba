//! Points of ℂⁿ and tangent vectors.

use crate::cnum::{self, serde_cvec};
use crate::error::{Result, SqueezeError};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A point of ℂⁿ. Real coordinates are ordered `(Re z₁, Im z₁, Re z₂, …)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CPoint {
    #[serde(with = "serde_cvec")]
    pub coords: Vec<Complex64>,
}

impl CPoint {
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(SqueezeError::InvalidParam("empty coordinate list".into()));
        }
        if coords.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(SqueezeError::InvalidParam("non-finite coordinate".into()));
        }
        Ok(Self { coords })
    }

    /// Point from real scalars placed on the real axes.
    pub fn from_re(re: &[f64]) -> Self {
        Self {
            coords: re.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            coords: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn norm(&self) -> f64 {
        cnum::norm(&self.coords)
    }

    pub fn norm_sq(&self) -> f64 {
        cnum::norm_sq(&self.coords)
    }

    pub fn dist(&self, other: &CPoint) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn add(&self, other: &CPoint) -> CPoint {
        CPoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &CPoint) -> CPoint {
        CPoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, t: Complex64) -> CPoint {
        CPoint {
            coords: self.coords.iter().map(|a| a * t).collect(),
        }
    }

    /// Flattened real coordinates `(Re z₁, Im z₁, …)`.
    pub fn to_real(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(2 * self.dim());
        for c in &self.coords {
            out.push(c.re);
            out.push(c.im);
        }
        out
    }

    pub fn from_real(re: &[f64]) -> Self {
        Self {
            coords: re
                .chunks_exact(2)
                .map(|ab| Complex64::new(ab[0], ab[1]))
                .collect(),
        }
    }

    /// Compact display used in CSV cells: `(re+imi; …)` with `;` separators
    /// so the cell never contains a comma.
    pub fn display_compact(&self) -> String {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|c| {
                if c.im == 0.0 {
                    format!("{}", c.re)
                } else if c.im >= 0.0 {
                    format!("{}+{}i", c.re, c.im)
                } else {
                    format!("{}{}i", c.re, c.im)
                }
            })
            .collect();
        format!("({})", parts.join(";"))
    }
}

/// A tangent vector anchored at a base point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TangentVec {
    #[serde(with = "serde_cvec")]
    pub components: Vec<Complex64>,
    pub base: CPoint,
}

impl TangentVec {
    pub fn new(components: Vec<Complex64>, base: CPoint) -> Result<Self> {
        if components.len() != base.dim() {
            return Err(SqueezeError::DimensionMismatch {
                expected: base.dim(),
                got: components.len(),
            });
        }
        Ok(Self { components, base })
    }

    pub fn norm(&self) -> f64 {
        cnum::norm(&self.components)
    }

    pub fn is_zero(&self) -> bool {
        self.norm() == 0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_roundtrip() {
        let p = CPoint::new(vec![Complex64::new(0.3, -0.2), Complex64::new(1.0, 2.0)]).unwrap();
        let q = CPoint::from_real(&p.to_real());
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_empty_and_nan() {
        assert!(CPoint::new(vec![]).is_err());
        assert!(CPoint::new(vec![Complex64::new(f64::NAN, 0.0)]).is_err());
    }
}
