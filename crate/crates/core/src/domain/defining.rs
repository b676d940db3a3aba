//! Canonical defining functions, membership, and derivative queries.

use super::{DomainSpec, Membership, SublevelFn};
use crate::domain::symmetric::generic_norm;
use crate::error::{Result, SqueezeError};
use crate::numdiff;
use crate::point::CPoint;
use crate::tolerances::{BOUNDARY_TOL, EXPANSION_STEP};
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// Value of the defining function with optional real derivatives in the
/// flattened coordinates `(Re z₁, Im z₁, …)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DefiningValue {
    pub value: f64,
    pub gradient: Option<Vec<f64>>,
    pub hessian: Option<DMatrix<f64>>,
}

/// Raw defining value; errors on dimension mismatch or singular points
/// reachable only through derivative-free evaluation are deferred to the
/// variant rules below.
pub fn rho(domain: &DomainSpec, p: &CPoint) -> Result<f64> {
    domain.check_dim(p)?;
    let z = &p.coords;
    match domain {
        DomainSpec::Ball { center, radius } => Ok(p.sub(center).norm_sq() - radius * radius),
        DomainSpec::Polydisk { radii } => Ok(z
            .iter()
            .zip(radii)
            .map(|(zi, ri)| zi.norm_sqr() - ri * ri)
            .fold(f64::NEG_INFINITY, f64::max)),
        DomainSpec::PuncturedDisk => {
            let r = z[0].norm();
            Ok((r - 1.0).max(-r))
        }
        DomainSpec::Annulus { inner } => {
            let r = z[0].norm();
            Ok((inner - r).max(r - 1.0))
        }
        DomainSpec::HartogsTriangle => {
            let r1 = z[0].norm();
            let r2 = z[1].norm();
            Ok((r1 - 1.0).max(r2 - r1).max(-r2))
        }
        DomainSpec::SymmetricDomain { family } => family.defining_value(z),
        DomainSpec::CartanHartogs { base, k, m } => {
            let nb = base.ambient_dim();
            let (zb, w) = z.split_at(nb);
            let base_rho = base.defining_value(zb)?;
            let wsq: f64 = w.iter().map(|c| c.norm_sqr()).sum();
            debug_assert_eq!(w.len(), *m);
            if base_rho >= 0.0 {
                // outside (or on the boundary of) the base: the fiber is empty
                return Ok(base_rho.max(if wsq > 0.0 { wsq } else { base_rho }));
            }
            let n = generic_norm(base, zb)?;
            if n <= 0.0 {
                return Ok(base_rho.max(wsq));
            }
            let x = wsq / n.powf(*k) - 1.0;
            Ok(base_rho.max(x))
        }
        DomainSpec::Product { factors } => {
            let mut best = f64::NEG_INFINITY;
            let mut off = 0;
            for f in factors {
                let d = f.dim();
                let sub = CPoint {
                    coords: z[off..off + d].to_vec(),
                };
                best = best.max(rho(f, &sub)?);
                off += d;
            }
            Ok(best)
        }
        DomainSpec::AffineImage { inner, map } => {
            let pre = map.inverse_apply(p)?;
            rho(inner, &pre)
        }
        DomainSpec::Sublevel { f, box_radius } => {
            let mut v = f.eval(z);
            for c in z {
                v = v.max(c.re.abs() - box_radius).max(c.im.abs() - box_radius);
            }
            Ok(v)
        }
    }
}

/// Tri-state membership with an explicit boundary tolerance on the
/// defining value.
pub fn contains_with_tol(domain: &DomainSpec, p: &CPoint, tol: f64) -> Result<Membership> {
    let v = rho(domain, p)?;
    Ok(if v.abs() <= tol {
        Membership::BoundaryWithinTol
    } else if v < 0.0 {
        Membership::Inside
    } else {
        Membership::Outside
    })
}

pub fn contains(domain: &DomainSpec, p: &CPoint) -> Result<Membership> {
    contains_with_tol(domain, p, BOUNDARY_TOL)
}

/// Is `p` strictly interior (up to the boundary tolerance)?
pub fn is_inside(domain: &DomainSpec, p: &CPoint) -> bool {
    matches!(contains(domain, p), Ok(Membership::Inside))
}

/// Loci where the piecewise gauges switch branches and the canonical
/// defining function fails to be C².
fn singularity(domain: &DomainSpec, p: &CPoint) -> Option<String> {
    let z = &p.coords;
    match domain {
        DomainSpec::PuncturedDisk => {
            let r = z[0].norm();
            if r < 1e-12 {
                return Some("puncture of the punctured disk".into());
            }
            if (r - 0.5).abs() < 1e-9 {
                return Some("gauge switch circle |z| = 1/2".into());
            }
            None
        }
        DomainSpec::Annulus { inner } => {
            let r = z[0].norm();
            let switch = 0.5 * (1.0 + inner);
            if (r - switch).abs() < 1e-9 {
                return Some(format!("gauge switch circle |z| = {switch}"));
            }
            None
        }
        DomainSpec::Polydisk { radii } => {
            let vals: Vec<f64> = z
                .iter()
                .zip(radii)
                .map(|(zi, ri)| zi.norm_sqr() - ri * ri)
                .collect();
            let mx = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let near: usize = vals.iter().filter(|v| (mx - **v).abs() < 1e-9).count();
            (near > 1).then(|| "polydisk corner (two active faces)".into())
        }
        DomainSpec::HartogsTriangle => {
            let r1 = z[0].norm();
            let r2 = z[1].norm();
            let vals = [r1 - 1.0, r2 - r1, -r2];
            let mx = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let near = vals.iter().filter(|v| (mx - **v).abs() < 1e-9).count();
            if near > 1 || r1 < 1e-9 {
                return Some("Hartogs triangle edge/corner".into());
            }
            None
        }
        DomainSpec::Sublevel {
            f: SublevelFn::HartogsThickened { eps },
            ..
        } => {
            let r1 = z[0].norm();
            let r2 = z[1].norm();
            if (r2 - eps).abs() < 1e-9 || (r2 - r1).abs() < 1e-9 || r2 < 1e-9 || r1 < 1e-9 {
                return Some("thickened-triangle stratum junction".into());
            }
            None
        }
        _ => None,
    }
}

/// Defining value with optional derivatives. Closed forms are exact;
/// everything else uses central differences with Richardson extrapolation.
pub fn defining_value(domain: &DomainSpec, p: &CPoint, want_derivatives: bool) -> Result<DefiningValue> {
    domain.check_dim(p)?;
    if let DomainSpec::PuncturedDisk = domain {
        if p.coords[0].norm() < 1e-12 {
            return Err(SqueezeError::SingularPoint(
                "defining function is not differentiable at the puncture".into(),
            ));
        }
    }
    let value = rho(domain, p)?;
    if !want_derivatives {
        return Ok(DefiningValue {
            value,
            gradient: None,
            hessian: None,
        });
    }
    if let Some(s) = singularity(domain, p) {
        return Err(SqueezeError::SingularPoint(s));
    }

    // closed-form quadratic cases
    match domain {
        DomainSpec::Ball { center, radius: _ } => {
            let x = p.to_real();
            let c = center.to_real();
            let gradient: Vec<f64> = x.iter().zip(&c).map(|(a, b)| 2.0 * (a - b)).collect();
            let hessian = DMatrix::identity(x.len(), x.len()) * 2.0;
            return Ok(DefiningValue {
                value,
                gradient: Some(gradient),
                hessian: Some(hessian),
            });
        }
        DomainSpec::Sublevel {
            f: SublevelFn::Ellipse { a, b },
            ..
        } => {
            let x = p.coords[0].re;
            let y = p.coords[0].im;
            let gradient = vec![2.0 * x / (a * a), 2.0 * y / (b * b)];
            let mut hessian = DMatrix::zeros(2, 2);
            hessian[(0, 0)] = 2.0 / (a * a);
            hessian[(1, 1)] = 2.0 / (b * b);
            return Ok(DefiningValue {
                value,
                gradient: Some(gradient),
                hessian: Some(hessian),
            });
        }
        _ => {}
    }

    let x = p.to_real();
    let f = |xs: &[f64]| {
        let q = CPoint::from_real(xs);
        rho(domain, &q).unwrap_or(f64::NAN)
    };
    let h = EXPANSION_STEP * (1.0 + p.norm());
    let gradient = numdiff::gradient(&f, &x, h);
    let hessian = numdiff::hessian(&f, &x, h);
    if gradient.iter().any(|g| g.is_nan()) || hessian.iter().any(|h| h.is_nan()) {
        return Err(SqueezeError::SingularPoint(
            "finite differences hit an undefined region".into(),
        ));
    }
    Ok(DefiningValue {
        value,
        gradient: Some(gradient),
        hessian: Some(hessian),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::SymmetricFamily;
    use num_complex::Complex64;

    #[test]
    fn ball_center() {
        let d = DomainSpec::unit_disk();
        let v = defining_value(&d, &CPoint::from_re(&[0.0]), false).unwrap();
        assert!((v.value + 1.0).abs() < 1e-15);
        assert_eq!(contains(&d, &CPoint::from_re(&[0.0])).unwrap(), Membership::Inside);
    }

    #[test]
    fn cartan_hartogs_membership() {
        let ch = DomainSpec::cartan_hartogs(SymmetricFamily::TypeI { r: 1, s: 1 }, 1.0, 1).unwrap();
        let inside = CPoint::from_re(&[0.0, 0.5]);
        assert_eq!(contains(&ch, &inside).unwrap(), Membership::Inside);
        let outside = CPoint::from_re(&[0.5, 0.9]);
        assert_eq!(contains(&ch, &outside).unwrap(), Membership::Outside);
    }

    #[test]
    fn cartan_hartogs_defining_example() {
        // X = ‖W‖²/N^k − 1 at ((0), (0.5)) with k = 2
        let ch = DomainSpec::cartan_hartogs(SymmetricFamily::TypeI { r: 1, s: 1 }, 2.0, 1).unwrap();
        let v = rho(&ch, &CPoint::from_re(&[0.0, 0.5])).unwrap();
        assert!((v + 0.75).abs() < 1e-14);
    }

    #[test]
    fn annulus_gauge() {
        let d = DomainSpec::annulus(0.3).unwrap();
        let v = rho(&d, &CPoint::from_re(&[0.6])).unwrap();
        assert!((v + 0.3).abs() < 1e-15);
    }

    #[test]
    fn puncture_is_singular() {
        let d = DomainSpec::PuncturedDisk;
        assert!(matches!(
            defining_value(&d, &CPoint::from_re(&[0.0]), false),
            Err(SqueezeError::SingularPoint(_))
        ));
        // membership still classifies the puncture as boundary
        assert_eq!(
            contains(&d, &CPoint::from_re(&[0.0])).unwrap(),
            Membership::BoundaryWithinTol
        );
    }

    #[test]
    fn fd_matches_closed_form_gradient_on_ball() {
        let d = DomainSpec::Ball {
            center: CPoint::from_re(&[0.1, -0.2]),
            radius: 1.5,
        };
        let p = CPoint::new(vec![Complex64::new(0.3, 0.4), Complex64::new(-0.1, 0.2)]).unwrap();
        let dv = defining_value(&d, &p, true).unwrap();
        let x = p.to_real();
        let f = |xs: &[f64]| rho(&d, &CPoint::from_real(xs)).unwrap();
        let g = numdiff::gradient(&f, &x, 1e-5);
        for (a, b) in dv.gradient.unwrap().iter().zip(&g) {
            assert!((a - b).abs() < 1e-6 * (1.0 + a.abs()));
        }
    }
}
