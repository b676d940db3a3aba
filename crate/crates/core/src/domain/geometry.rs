//! Distance to the boundary, diameters, and enclosing balls.
//!
//! The single-value API returns the conservative side of each quantity:
//! `dist` is a certified lower bound (exact for the closed-form models)
//! and `diam` a certified upper bound (exact for the models). Sublevel
//! sets additionally expose a diameter bracket per the Monte-Carlo /
//! bounding-box recipe.

use super::defining::{is_inside, rho};
use super::sample::boundary_sample;
use super::{DomainSpec, SublevelFn};
use crate::bracket::{Bracket, Method};
use crate::error::{Result, SqueezeError};
use crate::point::CPoint;
use num_complex::Complex64;

/// Certified lower bound on the Euclidean distance from `z` to `∂D`.
/// Exact for ball, polydisk, punctured disk, annulus, Hartogs triangle,
/// symmetric domains of types I–III, and products thereof.
pub fn dist_to_boundary(domain: &DomainSpec, z: &CPoint) -> Result<f64> {
    domain.check_dim(z)?;
    if !is_inside(domain, z) {
        return Err(SqueezeError::OutsideDomain);
    }
    dist_inner(domain, z)
}

fn dist_inner(domain: &DomainSpec, z: &CPoint) -> Result<f64> {
    let c = &z.coords;
    Ok(match domain {
        DomainSpec::Ball { center, radius } => radius - z.sub(center).norm(),
        DomainSpec::Polydisk { radii } => c
            .iter()
            .zip(radii)
            .map(|(zi, ri)| ri - zi.norm())
            .fold(f64::INFINITY, f64::min),
        DomainSpec::PuncturedDisk => {
            let r = c[0].norm();
            r.min(1.0 - r)
        }
        DomainSpec::Annulus { inner } => {
            let r = c[0].norm();
            (r - inner).min(1.0 - r)
        }
        DomainSpec::HartogsTriangle => {
            let r1 = c[0].norm();
            let r2 = c[1].norm();
            (1.0 - r1)
                .min(r2)
                .min((r1 - r2) / std::f64::consts::SQRT_2)
        }
        DomainSpec::SymmetricDomain { family } => family.dist_to_boundary(c)?,
        DomainSpec::CartanHartogs { base, k, m } => {
            let nb = base.ambient_dim();
            let (zb, w) = c.split_at(nb);
            debug_assert_eq!(w.len(), *m);
            let d_base = base.dist_to_boundary(zb)?;
            let wnorm = crate::cnum::norm(w);
            // largest δ with ‖W‖ + δ ≤ min_{‖Z'−Z‖≤δ} N(Z')^{k/2};
            // the left side grows and the right side shrinks in δ, so the
            // crossing is found by bisection.
            let fits = |delta: f64| -> Result<bool> {
                let nmin = base.norm_min_on_ball(zb, delta)?;
                Ok(wnorm + delta <= nmin.powf(k / 2.0))
            };
            let mut lo = 0.0;
            let mut hi = d_base.max(1.0);
            if !fits(0.0)? {
                return Err(SqueezeError::OutsideDomain);
            }
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if fits(mid)? {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            lo.min(d_base)
        }
        DomainSpec::Product { factors } => {
            let mut best = f64::INFINITY;
            let mut off = 0;
            for f in factors {
                let d = f.dim();
                let sub = CPoint {
                    coords: c[off..off + d].to_vec(),
                };
                best = best.min(dist_inner(f, &sub)?);
                off += d;
            }
            best
        }
        DomainSpec::AffineImage { inner, map } => {
            let (smin, _) = map.affine_singular_range(inner.dim())?;
            let pre = map.inverse_apply(z)?;
            smin * dist_inner(inner, &pre)?
        }
        DomainSpec::Sublevel { f, box_radius } => {
            let v = rho(domain, z)?;
            let ambient = (2.0 * f.dim() as f64).sqrt() * box_radius;
            let lip = f.gradient_sup(ambient).max(1.0);
            (-v) / lip
        }
    })
}

/// Certified upper bound on the Euclidean diameter; exact for the models.
pub fn diameter(domain: &DomainSpec) -> Result<f64> {
    Ok(match domain {
        DomainSpec::Ball { radius, .. } => 2.0 * radius,
        DomainSpec::Polydisk { radii } => {
            2.0 * radii.iter().map(|r| r * r).sum::<f64>().sqrt()
        }
        DomainSpec::PuncturedDisk | DomainSpec::Annulus { .. } => 2.0,
        DomainSpec::HartogsTriangle => 2.0 * std::f64::consts::SQRT_2,
        DomainSpec::SymmetricDomain { family } => family.diameter(),
        DomainSpec::CartanHartogs { base, .. } => {
            // Ω̂_k ⊆ Ω × B^m since N ≤ 1 on the base
            (base.diameter().powi(2) + 4.0).sqrt()
        }
        DomainSpec::Product { factors } => factors
            .iter()
            .map(|f| diameter(f).map(|d| d * d))
            .sum::<Result<f64>>()?
            .sqrt(),
        DomainSpec::AffineImage { inner, map } => {
            let (_, smax) = map.affine_singular_range(inner.dim())?;
            smax * diameter(inner)?
        }
        DomainSpec::Sublevel { f, box_radius } => match f {
            SublevelFn::Ellipse { a, b } => 2.0 * a.max(*b),
            SublevelFn::HartogsThickened { .. } => 2.0 * std::f64::consts::SQRT_2,
            SublevelFn::Quadric(_) => 2.0 * box_radius * (2.0 * f.dim() as f64).sqrt(),
        },
    })
}

/// `(distToBoundary, diameter)` with the conservative orientation
/// (distance never over-, diameter never under-estimated).
pub fn dist_and_diam(domain: &DomainSpec, z: &CPoint) -> Result<(f64, f64)> {
    Ok((dist_to_boundary(domain, z)?, diameter(domain)?))
}

/// Diameter bracket: sampled max pairwise distance below, the closed-form /
/// bounding-box value above. The Monte-Carlo side uses 10⁴ boundary samples
/// for sublevel sets and a smaller budget elsewhere.
pub fn diameter_bracket(domain: &DomainSpec, seed: u64) -> Result<Bracket> {
    let upper = diameter(domain)?;
    let budget = match domain {
        DomainSpec::Sublevel { .. } => 10_000,
        _ => 2_000,
    };
    let pts = boundary_sample(domain, budget.min(2_000), seed)?;
    // max pairwise distance over a thinned subset (full quadratic scan on
    // 10⁴ points is wasteful; the far-pair survives thinning)
    let step = (pts.len() / 400).max(1);
    let thin: Vec<&CPoint> = pts.iter().step_by(step).collect();
    let mut lower: f64 = 0.0;
    for (i, p) in thin.iter().enumerate() {
        for q in &thin[i + 1..] {
            lower = lower.max(p.dist(q));
        }
    }
    Bracket::new(
        lower.min(upper),
        upper,
        Method::MonteCarlo,
        Method::ClosedForm,
    )
}

/// Ball `B(center, R)` guaranteed to contain the domain.
pub fn enclosing_ball(domain: &DomainSpec) -> Result<(CPoint, f64)> {
    Ok(match domain {
        DomainSpec::Ball { center, radius } => (center.clone(), *radius),
        DomainSpec::Polydisk { radii } => (
            CPoint::zero(radii.len()),
            radii.iter().map(|r| r * r).sum::<f64>().sqrt(),
        ),
        DomainSpec::PuncturedDisk | DomainSpec::Annulus { .. } => (CPoint::zero(1), 1.0),
        DomainSpec::HartogsTriangle => (CPoint::zero(2), std::f64::consts::SQRT_2),
        DomainSpec::SymmetricDomain { family } => {
            (CPoint::zero(family.ambient_dim()), family.circumradius())
        }
        DomainSpec::CartanHartogs { base, m, .. } => (
            CPoint::zero(base.ambient_dim() + m),
            (base.circumradius().powi(2) + 1.0).sqrt(),
        ),
        DomainSpec::Product { factors } => {
            let mut coords = Vec::new();
            let mut rsq = 0.0;
            for f in factors {
                let (c, r) = enclosing_ball(f)?;
                coords.extend(c.coords);
                rsq += r * r;
            }
            (CPoint { coords }, rsq.sqrt())
        }
        DomainSpec::AffineImage { inner, map } => {
            let (c, r) = enclosing_ball(inner)?;
            let (_, smax) = map.affine_singular_range(inner.dim())?;
            (map.apply(&c)?, smax * r)
        }
        DomainSpec::Sublevel { f, box_radius } => (
            CPoint::zero(f.dim()),
            box_radius * (2.0 * f.dim() as f64).sqrt(),
        ),
    })
}

/// Outward unit normal (in flattened real coordinates) at a boundary
/// point, from the gradient of the defining function.
pub fn outward_normal(domain: &DomainSpec, p: &CPoint) -> Result<Vec<f64>> {
    let dv = super::defining::defining_value(domain, p, true)?;
    if dv.value.abs() > crate::tolerances::BOUNDARY_TOL * 100.0 {
        return Err(SqueezeError::NotOnBoundary(dv.value));
    }
    let g = dv
        .gradient
        .ok_or_else(|| SqueezeError::SingularPoint("no gradient at boundary point".into()))?;
    let norm = g.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm < 1e-10 {
        return Err(SqueezeError::SingularPoint("vanishing boundary gradient".into()));
    }
    Ok(g.into_iter().map(|x| x / norm).collect())
}

/// Distance lower bound specialized to Cartan-Hartogs over a 1-dimensional
/// base, reduced to a planar problem; used by tests as an independent check.
pub fn cartan_hartogs_disc_dist(k: f64, z: Complex64, w_norm: f64, grid: usize) -> f64 {
    // boundary curve (x, (1−x²)^{k/2}) in the (|z|, ‖w‖) quarter-plane
    let x0 = z.norm();
    let u0 = w_norm;
    let mut best = f64::INFINITY;
    for i in 0..=grid {
        let x = i as f64 / grid as f64;
        let u = (1.0 - x * x).max(0.0).powf(k / 2.0);
        best = best.min(((x - x0).powi(2) + (u - u0).powi(2)).sqrt());
        // parametrize by fiber height as well (steep region near x = 1)
        let uu = i as f64 / grid as f64;
        let xx = (1.0 - uu.powf(2.0 / k)).max(0.0).sqrt();
        best = best.min(((xx - x0).powi(2) + (uu - u0).powi(2)).sqrt());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::SymmetricFamily;

    #[test]
    fn ball_center_values() {
        let d = DomainSpec::unit_disk();
        let (dist, diam) = dist_and_diam(&d, &CPoint::from_re(&[0.0])).unwrap();
        assert!((dist - 1.0).abs() < 1e-15);
        assert!((diam - 2.0).abs() < 1e-15);
    }

    #[test]
    fn annulus_example() {
        let d = DomainSpec::annulus(0.3).unwrap();
        let (dist, diam) = dist_and_diam(&d, &CPoint::from_re(&[0.6])).unwrap();
        assert!((dist - 0.3).abs() < 1e-15);
        assert!((diam - 2.0).abs() < 1e-15);
    }

    #[test]
    fn polydisk_example() {
        let d = DomainSpec::polydisk(vec![1.0, 1.0]).unwrap();
        let (dist, diam) = dist_and_diam(&d, &CPoint::zero(2)).unwrap();
        assert!((dist - 1.0).abs() < 1e-15);
        assert!((diam - 2.0 * std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn outside_point_errors() {
        let d = DomainSpec::unit_disk();
        assert!(dist_to_boundary(&d, &CPoint::from_re(&[1.5])).is_err());
    }

    #[test]
    fn dist_le_half_diam() {
        let domains = vec![
            DomainSpec::unit_ball(2),
            DomainSpec::annulus(0.4).unwrap(),
            DomainSpec::HartogsTriangle,
            DomainSpec::cartan_hartogs(SymmetricFamily::TypeI { r: 1, s: 1 }, 1.0, 1).unwrap(),
        ];
        for d in domains {
            for p in crate::domain::sample::interior_sample(&d, 30, 3).unwrap() {
                let (dist, diam) = dist_and_diam(&d, &p).unwrap();
                assert!(dist <= diam / 2.0 + 1e-12, "{}", d.label());
            }
        }
    }

    #[test]
    fn cartan_hartogs_dist_is_conservative() {
        // the reduced 2-D computation dominates the product-relaxation bound
        let ch = DomainSpec::cartan_hartogs(SymmetricFamily::TypeI { r: 1, s: 1 }, 1.0, 1).unwrap();
        let z = CPoint::from_re(&[0.3, 0.2]);
        let lower = dist_to_boundary(&ch, &z).unwrap();
        let reduced = cartan_hartogs_disc_dist(1.0, z.coords[0], z.coords[1].norm(), 4000);
        assert!(lower <= reduced + 1e-9, "lower {lower} vs reduced {reduced}");
        assert!(lower > 0.0);
    }

    #[test]
    fn cartan_hartogs_dist_monotone_in_k() {
        let z = CPoint::from_re(&[0.3, 0.2]);
        let mut prev = 0.0;
        for k in [1.0, 0.75, 0.5, 0.25] {
            let ch =
                DomainSpec::cartan_hartogs(SymmetricFamily::TypeI { r: 1, s: 1 }, k, 1).unwrap();
            let d = dist_to_boundary(&ch, &z).unwrap();
            assert!(d >= prev - 1e-12, "k={k}: {d} < {prev}");
            prev = d;
        }
    }
}
