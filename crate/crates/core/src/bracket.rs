//! Certified numeric intervals with method provenance tags.

use crate::error::{Result, SqueezeError};
use crate::tolerances::BRACKET_SLACK;
use serde::{Deserialize, Serialize};

/// How a bracket endpoint was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Exact closed-form evaluation.
    ClosedForm,
    /// Value transported through an explicit covering map.
    CoveringMap,
    /// Product rule (max over factors).
    ProductRule,
    /// Inclusion into an enclosing ball.
    EnclosingBall,
    /// Ball inscribed in the domain.
    InscribedBall,
    /// Supremum over a finite candidate family of maps.
    CandidateFamily,
    /// Polynomial analytic-disc search.
    DiscSearch,
    /// Trapezoid integration along a segment path.
    SegmentIntegral,
    /// Restriction/extension argument (removable singularities).
    Restriction,
    /// Certified image radius of an explicit embedding.
    Embedding,
    /// Exact image radius of a recognized embedding shape.
    EmbeddingExact,
    /// Distance-to-boundary over diameter.
    TrivialBound,
    /// Carathéodory-ball escape argument.
    Escape,
    /// Exact model value.
    Exact,
    /// Osculating-ball construction.
    Osculating,
    /// Monte-Carlo estimate with reported half-width.
    MonteCarlo,
    /// Schwarz-type inequality.
    SchwarzBound,
    /// Explicit model map.
    ModelMap,
    /// Nothing known on this side.
    Unbounded,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::CoveringMap => "covering-map",
            Method::ProductRule => "product-rule",
            Method::EnclosingBall => "enclosing-ball",
            Method::InscribedBall => "inscribed-ball",
            Method::CandidateFamily => "candidate-family",
            Method::DiscSearch => "disc-search",
            Method::SegmentIntegral => "segment-integral",
            Method::Restriction => "restriction",
            Method::Embedding => "embedding",
            Method::EmbeddingExact => "embedding-exact",
            Method::TrivialBound => "trivial-bound",
            Method::Escape => "escape",
            Method::Exact => "exact",
            Method::Osculating => "osculating",
            Method::MonteCarlo => "monte-carlo",
            Method::SchwarzBound => "schwarz-bound",
            Method::ModelMap => "model-map",
            Method::Unbounded => "unbounded",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Certified interval `[lower, upper]`. An explicitly one-sided bracket
/// carries `−∞`/`+∞` on the missing side with the `Unbounded` tag.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub lower: f64,
    pub upper: f64,
    pub lower_method: Method,
    pub upper_method: Method,
}

impl Bracket {
    pub fn new(lower: f64, upper: f64, lower_method: Method, upper_method: Method) -> Result<Self> {
        if lower.is_nan() || upper.is_nan() {
            return Err(SqueezeError::InvalidParam("NaN bracket endpoint".into()));
        }
        if lower > upper + BRACKET_SLACK {
            return Err(SqueezeError::InvalidParam(format!(
                "bracket inverted: lower {lower} > upper {upper}"
            )));
        }
        Ok(Self {
            lower,
            upper,
            lower_method,
            upper_method,
        })
    }

    pub fn exact(value: f64, method: Method) -> Self {
        Self {
            lower: value,
            upper: value,
            lower_method: method,
            upper_method: method,
        }
    }

    pub fn lower_only(lower: f64, method: Method) -> Self {
        Self {
            lower,
            upper: f64::INFINITY,
            lower_method: method,
            upper_method: Method::Unbounded,
        }
    }

    pub fn upper_only(upper: f64, method: Method) -> Self {
        Self {
            lower: f64::NEG_INFINITY,
            upper,
            lower_method: Method::Unbounded,
            upper_method: method,
        }
    }

    /// Tightest combination of two valid brackets for the same quantity.
    pub fn intersect(&self, other: &Bracket) -> Bracket {
        let (lower, lower_method) = if other.lower > self.lower {
            (other.lower, other.lower_method)
        } else {
            (self.lower, self.lower_method)
        };
        let (upper, upper_method) = if other.upper < self.upper {
            (other.upper, other.upper_method)
        } else {
            (self.upper, self.upper_method)
        };
        Bracket {
            lower,
            upper,
            lower_method,
            upper_method,
        }
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lower - BRACKET_SLACK <= v && v <= self.upper + BRACKET_SLACK
    }

    pub fn overlaps(&self, other: &Bracket, rel_slack: f64) -> bool {
        let lo = self.lower.max(other.lower);
        let hi = self.upper.min(other.upper);
        lo <= hi * (1.0 + rel_slack) + rel_slack
    }

    pub fn midpoint(&self) -> f64 {
        if self.lower.is_finite() && self.upper.is_finite() {
            0.5 * (self.lower + self.upper)
        } else if self.lower.is_finite() {
            self.lower
        } else {
            self.upper
        }
    }

    /// Multiply both endpoints by a positive factor.
    pub fn scale(&self, t: f64) -> Bracket {
        debug_assert!(t > 0.0);
        Bracket {
            lower: self.lower * t,
            upper: self.upper * t,
            ..self.clone()
        }
    }

    pub fn is_valid(&self) -> bool {
        !self.lower.is_nan() && !self.upper.is_nan() && self.lower <= self.upper + BRACKET_SLACK
    }
}

impl std::fmt::Display for Bracket {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{:.12}, {:.12}] ({}, {})",
            self.lower, self.upper, self.lower_method, self.upper_method
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_inverted() {
        assert!(Bracket::new(1.0, 0.5, Method::Exact, Method::Exact).is_err());
    }

    #[test]
    fn intersect_tightens() {
        let a = Bracket::new(0.0, 2.0, Method::TrivialBound, Method::InscribedBall).unwrap();
        let b = Bracket::new(0.5, 3.0, Method::Embedding, Method::Escape).unwrap();
        let c = a.intersect(&b);
        assert_eq!(c.lower, 0.5);
        assert_eq!(c.upper, 2.0);
        assert_eq!(c.lower_method, Method::Embedding);
        assert_eq!(c.upper_method, Method::InscribedBall);
    }
}
