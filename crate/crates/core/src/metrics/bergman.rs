//! Closed-form Bergman kernel and metric on the ball and the polydisk,
//! and the boundary metric-ratio probes.

use super::{ball_metric, caratheodory_metric, kobayashi_metric, MetricQuery};
use crate::domain::DomainSpec;
use crate::error::{Result, SqueezeError};
use crate::point::CPoint;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Diagonal Bergman kernel. Ball `B(c, R)` in ℂⁿ:
/// `n! / (πⁿ R²ⁿ (1 − |(z−c)/R|²)^{n+1})`;
/// polydisk: product of disc kernels `r² / (π (r² − |z|²)²)`.
pub fn bergman_kernel(domain: &DomainSpec, z: &CPoint) -> Result<f64> {
    domain.check_dim(z)?;
    match domain {
        DomainSpec::Ball { center, radius } => {
            let n = z.dim();
            let t = z.sub(center).norm_sq() / (radius * radius);
            if t >= 1.0 {
                return Err(SqueezeError::OutsideDomain);
            }
            Ok(factorial(n)
                / (std::f64::consts::PI.powi(n as i32)
                    * radius.powi(2 * n as i32)
                    * (1.0 - t).powi(n as i32 + 1)))
        }
        DomainSpec::Polydisk { radii } => {
            let mut k = 1.0;
            for (zi, r) in z.coords.iter().zip(radii) {
                let d = r * r - zi.norm_sqr();
                if d <= 0.0 {
                    return Err(SqueezeError::OutsideDomain);
                }
                k *= r * r / (std::f64::consts::PI * d * d);
            }
            Ok(k)
        }
        _ => Err(SqueezeError::UnsupportedVariant {
            op: "bergman_kernel",
            variant: domain.label(),
        }),
    }
}

/// Bergman metric length of `v` at `z`. On the ball it equals
/// `√(n+1) · H^K`; on the polydisk `(Σ 2 r_i² |v_i|² / (r_i² − |z_i|²)²)^{1/2}`.
pub fn bergman_metric(domain: &DomainSpec, z: &CPoint, v: &[Complex64]) -> Result<f64> {
    domain.check_dim(z)?;
    if v.len() != z.dim() {
        return Err(SqueezeError::DimensionMismatch {
            expected: z.dim(),
            got: v.len(),
        });
    }
    match domain {
        DomainSpec::Ball { center, radius } => {
            let n = z.dim() as f64;
            let zn: Vec<Complex64> = z
                .coords
                .iter()
                .zip(&center.coords)
                .map(|(a, c)| (a - c) / radius)
                .collect();
            let vn: Vec<Complex64> = v.iter().map(|a| a / radius).collect();
            Ok((n + 1.0).sqrt() * ball_metric(&zn, &vn))
        }
        DomainSpec::Polydisk { radii } => {
            let mut s = 0.0;
            for ((zi, vi), r) in z.coords.iter().zip(v).zip(radii) {
                let d = r * r - zi.norm_sqr();
                if d <= 0.0 {
                    return Err(SqueezeError::OutsideDomain);
                }
                s += 2.0 * r * r * vi.norm_sqr() / (d * d);
            }
            Ok(s.sqrt())
        }
        _ => Err(SqueezeError::UnsupportedVariant {
            op: "bergman_metric",
            variant: domain.label(),
        }),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatioRow {
    /// Euclidean distance of the probe point from the boundary.
    pub boundary_gap: f64,
    /// `H^K / H^C` (from the closed-form brackets).
    pub hk_over_hc: f64,
    /// `√(n+1) · H^K / H^B`.
    pub scaled_hk_over_hb: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatioTable {
    pub rows: Vec<RatioRow>,
    /// Last-row ratios, reported as the limiting trend.
    pub trend: (f64, f64),
}

/// Per-point metric ratios along a path approaching the boundary.
pub fn boundary_ratio_probe(
    domain: &DomainSpec,
    path: &[CPoint],
    v: &[Complex64],
) -> Result<RatioTable> {
    if path.is_empty() {
        return Err(SqueezeError::InvalidParam("empty probe path".into()));
    }
    match domain {
        DomainSpec::Ball { .. } | DomainSpec::Polydisk { .. } => {}
        _ => {
            return Err(SqueezeError::UnsupportedVariant {
                op: "boundary_ratio_probe",
                variant: domain.label(),
            })
        }
    }
    let n = domain.dim() as f64;
    let mut rows = Vec::with_capacity(path.len());
    for z in path {
        let q = MetricQuery::new(domain.clone(), z.clone(), v.to_vec())?;
        let hk = kobayashi_metric(&q)?.lower;
        let hc = caratheodory_metric(&q)?.lower;
        let hb = bergman_metric(domain, z, v)?;
        let gap = crate::domain::geometry::dist_to_boundary(domain, z)?;
        rows.push(RatioRow {
            boundary_gap: gap,
            hk_over_hc: hk / hc,
            scaled_hk_over_hb: (n + 1.0).sqrt() * hk / hb,
        });
    }
    let trend = {
        let last = rows.last().unwrap();
        (last.hk_over_hc, last.scaled_hk_over_hb)
    };
    Ok(RatioTable { rows, trend })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disc_kernel_at_origin() {
        let d = DomainSpec::unit_disk();
        let k = bergman_kernel(&d, &CPoint::from_re(&[0.0])).unwrap();
        assert!((k - 1.0 / std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn ball2_metric_at_origin() {
        let d = DomainSpec::unit_ball(2);
        let v = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let h = bergman_metric(&d, &CPoint::zero(2), &v).unwrap();
        assert!((h - 3.0f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn polydisk_metric_at_origin() {
        let d = DomainSpec::polydisk(vec![1.0, 1.0]).unwrap();
        let v = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let h = bergman_metric(&d, &CPoint::zero(2), &v).unwrap();
        assert!((h - 2.0f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn ratios_identically_one_on_ball() {
        let d = DomainSpec::unit_ball(2);
        let v = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let path: Vec<CPoint> = (1..=6)
            .map(|j| CPoint::from_re(&[1.0 - 10f64.powi(-j), 0.0]))
            .collect();
        let t = boundary_ratio_probe(&d, &path, &v).unwrap();
        for row in &t.rows {
            assert!((row.hk_over_hc - 1.0).abs() < 1e-12);
            assert!((row.scaled_hk_over_hb - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn unsupported_variant() {
        let d = DomainSpec::annulus(0.5).unwrap();
        assert!(bergman_kernel(&d, &CPoint::from_re(&[0.7])).is_err());
    }
}
