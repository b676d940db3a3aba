//! Numerical toolkit for squeezing functions, invariant metrics, and
//! intrinsic measures on concrete bounded domains in ℂⁿ.
//!
//! Everything here computes *certified brackets*: a lower and an upper
//! estimate, each tagged with the method that produced it, so that
//! comparison theorems can be checked in the bracket-safe direction
//! (lower of one side against upper of the other) instead of comparing
//! point estimates.
//!
//! The main pieces:
//!
//! * [`domain`] — bounded-domain descriptions (balls, polydisks, annuli,
//!   the Hartogs triangle, classical symmetric domains, Cartan-Hartogs
//!   domains, products, affine images, sublevel sets), membership,
//!   defining functions, boundary sampling, and basic geometry.
//! * [`holomap`] — composable holomorphic maps with exact Jacobians.
//! * [`metrics`] — Kobayashi / Carathéodory metric and distance brackets,
//!   closed-form Bergman data on ball and polydisk.
//! * [`squeeze`] — squeezing-function brackets: exact model values,
//!   embedding lower bounds, escape upper bounds, osculating-ball bounds,
//!   and stability experiments over domain sequences.
//! * [`measures`] — the four intrinsic measures and their sandwich checks.
//! * [`boundary`] — enclosing-ball radii, boundary-point classification,
//!   the defining-function normalization pipeline, and the Cartan-Hartogs
//!   Hessian computation.

pub mod boundary;
pub mod bracket;
pub mod cnum;
pub mod domain;
pub mod error;
pub mod holomap;
pub mod measures;
pub mod metrics;
pub mod numdiff;
pub mod point;
pub mod squeeze;
pub mod tolerances;

pub use bracket::{Bracket, Method};
pub use domain::{DomainSpec, Membership, SymmetricFamily};
pub use error::{Result, SqueezeError};
pub use holomap::HoloMap;
pub use point::{CPoint, TangentVec};

/// `σ(x) = ln((1+x)/(1−x))`, the disc distance from 0 to `x ∈ [0,1)`.
pub fn sigma(x: f64) -> f64 {
    ((1.0 + x) / (1.0 - x)).ln()
}

/// Inverse of [`sigma`]: `σ⁻¹(r) = tanh(r/2)`.
pub fn sigma_inv(r: f64) -> f64 {
    (r / 2.0).tanh()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_roundtrip() {
        for i in 1..1000 {
            let x = i as f64 * 0.999 / 1000.0;
            assert!((sigma_inv(sigma(x)) - x).abs() < 1e-12);
        }
    }

    #[test]
    fn sigma_half_is_ln3() {
        assert!((sigma(0.5) - 3.0f64.ln()).abs() < 1e-15);
    }
}
