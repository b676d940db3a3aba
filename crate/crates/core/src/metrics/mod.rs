//! Kobayashi and Carathéodory metric and distance brackets.
//!
//! Normalization: the disc metric is `k_Δ(z; v) = |v| / (1 − |z|²)` and the
//! disc distance is `c_Δ(0, t) = σ(t) = ln((1+t)/(1−t))`. Distances are
//! therefore built from `σ` of the Möbius gap; segment-path upper bounds
//! integrate `2·k` to stay on the same scale.
//!
//! Closed forms (exact brackets): ball, polydisk, punctured disk (the
//! Carathéodory side is the restriction of the disc metric; the Kobayashi
//! side goes through the universal covering), annulus (covering chain),
//! products (max rule), and affine images (pullback). Everything else
//! gets enclosing-ball lower bounds and inscribed-ball upper bounds,
//! optionally refined by a certified polynomial analytic-disc search.

pub mod bergman;
pub mod search;

use crate::bracket::{Bracket, Method};
use crate::cnum::hdot;
use crate::domain::geometry::{dist_to_boundary, enclosing_ball};
use crate::domain::{contains, DomainSpec, Membership, SublevelFn};
use crate::error::{Result, SqueezeError};
use crate::point::{CPoint, TangentVec};
use crate::sigma;
use crate::tolerances::SEGMENT_PANELS;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MetricQuery {
    pub domain: DomainSpec,
    pub z: CPoint,
    pub v: TangentVec,
}

impl MetricQuery {
    pub fn new(domain: DomainSpec, z: CPoint, v: Vec<Complex64>) -> Result<Self> {
        domain.check_dim(&z)?;
        let v = TangentVec::new(v, z.clone())?;
        if v.is_zero() {
            return Err(SqueezeError::InvalidParam("zero tangent vector".into()));
        }
        if contains(&domain, &z)? != Membership::Inside {
            return Err(SqueezeError::OutsideDomain);
        }
        Ok(Self { domain, z, v })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MetricOptions {
    /// Skip closed forms and report enclosing/inscribed bounds only.
    pub bounds_only: bool,
    /// Include pairwise products of coordinate candidates in the
    /// Carathéodory lower-bound family.
    pub candidate_products: bool,
}

impl Default for MetricOptions {
    fn default() -> Self {
        Self {
            bounds_only: false,
            candidate_products: true,
        }
    }
}

pub fn disc_metric(z: Complex64, v: Complex64) -> f64 {
    v.norm() / (1.0 - z.norm_sqr())
}

/// Kobayashi metric of the unit ball:
/// `K²(z; v) = (|v|² (1−|z|²) + |⟨v,z⟩|²) / (1−|z|²)²`.
pub fn ball_metric(z: &[Complex64], v: &[Complex64]) -> f64 {
    let zsq = crate::cnum::norm_sq(z);
    let vsq = crate::cnum::norm_sq(v);
    let mix = hdot(v, z).norm_sqr();
    ((vsq * (1.0 - zsq) + mix) / ((1.0 - zsq) * (1.0 - zsq))).sqrt()
}

/// Local inverse of the universal covering `Δ → Δ*` and the derivative
/// chain; returns `(image point, d(image)/dz)`.
fn punctured_cover(z: Complex64) -> (Complex64, Complex64) {
    let zeta = z.ln(); // any branch; Re ζ < 0
    let one = Complex64::new(1.0, 0.0);
    let w = (one + zeta) / (one - zeta);
    let dw = 2.0 / ((one - zeta) * (one - zeta)) / z;
    (w, dw)
}

/// Local inverse of the covering `Δ → A(r, 1)` with derivative.
fn annulus_cover(inner: f64, z: Complex64) -> (Complex64, Complex64) {
    let lr = inner.ln(); // < 0
    let zeta = z.ln();
    let t = (zeta - lr) / (-lr);
    let u = Complex64::new(0.0, std::f64::consts::PI) * t;
    let xi = u.exp();
    let i = Complex64::new(0.0, 1.0);
    let w = (xi - i) / (xi + i);
    // chain: dζ/dz = 1/z, dt/dζ = −1/ln r, du/dt = iπ, dξ/du = ξ,
    // dw/dξ = 2i/(ξ+i)²
    let dw = (2.0 * i / ((xi + i) * (xi + i)))
        * xi
        * Complex64::new(0.0, std::f64::consts::PI)
        * (-1.0 / lr)
        / z;
    (w, dw)
}

/// Exact Kobayashi metric where a closed form exists.
fn kobayashi_closed(domain: &DomainSpec, z: &[Complex64], v: &[Complex64]) -> Result<Option<f64>> {
    Ok(match domain {
        DomainSpec::Ball { center, radius } => {
            let zn: Vec<Complex64> = z
                .iter()
                .zip(&center.coords)
                .map(|(a, c)| (a - c) / radius)
                .collect();
            let vn: Vec<Complex64> = v.iter().map(|a| a / radius).collect();
            Some(ball_metric(&zn, &vn))
        }
        DomainSpec::Polydisk { radii } => Some(
            z.iter()
                .zip(v)
                .zip(radii)
                .map(|((zi, vi), r)| disc_metric(zi / r, vi / r))
                .fold(0.0f64, f64::max),
        ),
        DomainSpec::PuncturedDisk => {
            let (w, dw) = punctured_cover(z[0]);
            Some(disc_metric(w, dw * v[0]))
        }
        DomainSpec::Annulus { inner } => {
            let (w, dw) = annulus_cover(*inner, z[0]);
            Some(disc_metric(w, dw * v[0]))
        }
        DomainSpec::Product { factors } => {
            let mut best = 0.0f64;
            let mut off = 0;
            for f in factors {
                let d = f.dim();
                match kobayashi_closed(f, &z[off..off + d], &v[off..off + d])? {
                    Some(k) => best = best.max(k),
                    None => return Ok(None),
                }
                off += d;
            }
            Some(best)
        }
        DomainSpec::AffineImage { inner, map } => {
            let pre = map.inverse_apply(&CPoint { coords: z.to_vec() })?;
            let jac = map.jacobian(&pre)?;
            // v = J u  ⟹  u = J⁻¹ v
            let lu = jac.lu();
            let rhs = nalgebra::DVector::from_column_slice(v);
            let u = lu
                .solve(&rhs)
                .ok_or_else(|| SqueezeError::InvalidParam("singular affine map".into()))?;
            let uv: Vec<Complex64> = u.iter().copied().collect();
            kobayashi_closed(inner, &pre.coords, &uv)?
        }
        _ => None,
    })
}

/// Exact Carathéodory metric where a closed form exists.
fn caratheodory_closed(
    domain: &DomainSpec,
    z: &[Complex64],
    v: &[Complex64],
) -> Result<Option<f64>> {
    Ok(match domain {
        DomainSpec::Ball { .. } | DomainSpec::Polydisk { .. } => kobayashi_closed(domain, z, v)?,
        // holomorphic maps Δ* → Δ extend across the puncture, so the
        // metric is the restriction of the disc metric
        DomainSpec::PuncturedDisk => Some(disc_metric(z[0], v[0])),
        DomainSpec::Product { factors } => {
            let mut best = 0.0f64;
            let mut off = 0;
            for f in factors {
                let d = f.dim();
                match caratheodory_closed(f, &z[off..off + d], &v[off..off + d])? {
                    Some(k) => best = best.max(k),
                    None => return Ok(None),
                }
                off += d;
            }
            Some(best)
        }
        DomainSpec::AffineImage { inner, map } => {
            let pre = map.inverse_apply(&CPoint { coords: z.to_vec() })?;
            let jac = map.jacobian(&pre)?;
            let lu = jac.lu();
            let rhs = nalgebra::DVector::from_column_slice(v);
            let u = lu
                .solve(&rhs)
                .ok_or_else(|| SqueezeError::InvalidParam("singular affine map".into()))?;
            let uv: Vec<Complex64> = u.iter().copied().collect();
            caratheodory_closed(inner, &pre.coords, &uv)?
        }
        _ => None,
    })
}

/// Generic lower bound: the metric dominates the enclosing ball's.
fn enclosing_lower(domain: &DomainSpec, z: &[Complex64], v: &[Complex64]) -> Result<f64> {
    let (c, r) = enclosing_ball(domain)?;
    let zn: Vec<Complex64> = z.iter().zip(&c.coords).map(|(a, b)| (a - b) / r).collect();
    let vn: Vec<Complex64> = v.iter().map(|a| a / r).collect();
    Ok(ball_metric(&zn, &vn))
}

/// Generic upper bound from the ball of radius `dist(z, ∂D)` inside `D`.
fn inscribed_upper(domain: &DomainSpec, zp: &CPoint, v: &[Complex64]) -> Result<f64> {
    let d = dist_to_boundary(domain, zp)?;
    if d <= 0.0 {
        return Err(SqueezeError::OutsideDomain);
    }
    Ok(crate::cnum::norm(v) / d)
}

pub fn kobayashi_metric(q: &MetricQuery) -> Result<Bracket> {
    kobayashi_metric_with(q, &MetricOptions::default())
}

pub fn kobayashi_metric_with(q: &MetricQuery, opts: &MetricOptions) -> Result<Bracket> {
    let z = &q.z.coords;
    let v = &q.v.components;
    if !opts.bounds_only {
        if let Some(k) = kobayashi_closed(&q.domain, z, v)? {
            return Ok(Bracket::exact(k, Method::ClosedForm));
        }
    }
    let lower = enclosing_lower(&q.domain, z, v)?;
    let upper = inscribed_upper(&q.domain, &q.z, v)?;
    Bracket::new(
        lower.min(upper),
        upper,
        Method::EnclosingBall,
        Method::InscribedBall,
    )
}

/// Coordinate-based candidate maps `D → Δ` with their derivatives at `z`;
/// each contributes `|dg(z)v| / (1 − |g(z)|²)` to the Carathéodory lower
/// bound (the target-side Möbius recentering is absorbed by that formula).
fn candidate_lower(
    domain: &DomainSpec,
    z: &[Complex64],
    v: &[Complex64],
    products: bool,
) -> Result<f64> {
    let n = z.len();
    let sup = coordinate_sup(domain);
    // candidates as (value, derivative-in-direction-v) pairs
    let mut cands: Vec<(Complex64, Complex64)> = Vec::new();
    for i in 0..n {
        let s = sup[i];
        if !s.is_finite() || s <= 0.0 {
            continue;
        }
        cands.push((z[i] / s, v[i] / s));
    }
    if products {
        let singles = cands.clone();
        for (i, a) in singles.iter().enumerate() {
            for b in &singles[i + 1..] {
                // g·h: value ab, derivative a'b + ab'
                cands.push((a.0 * b.0, a.1 * b.0 + a.0 * b.1));
            }
        }
    }
    Ok(cands
        .into_iter()
        .map(|(val, der)| {
            if val.norm() >= 1.0 {
                0.0
            } else {
                der.norm() / (1.0 - val.norm_sqr())
            }
        })
        .fold(0.0f64, f64::max))
}

/// Per-coordinate modulus bound over the domain (candidates divide by it
/// to land in the unit disc).
fn coordinate_sup(domain: &DomainSpec) -> Vec<f64> {
    let n = domain.dim();
    match domain {
        DomainSpec::Ball { center, radius } => center
            .coords
            .iter()
            .map(|c| c.norm() + radius)
            .collect(),
        DomainSpec::Polydisk { radii } => radii.clone(),
        DomainSpec::PuncturedDisk | DomainSpec::Annulus { .. } => vec![1.0],
        DomainSpec::HartogsTriangle => vec![1.0, 1.0],
        DomainSpec::SymmetricDomain { family } => match family {
            crate::domain::SymmetricFamily::TypeIv { .. } => vec![1.0; n],
            _ => vec![1.0; n], // entries of a matrix with σ_max < 1 have modulus < 1
        },
        DomainSpec::CartanHartogs { base, m, .. } => {
            let mut s = coordinate_sup(&DomainSpec::SymmetricDomain { family: *base });
            s.extend(vec![1.0; *m]);
            s
        }
        DomainSpec::Product { factors } => factors.iter().flat_map(coordinate_sup).collect(),
        DomainSpec::AffineImage { .. } => {
            // no per-coordinate structure; fall back to the enclosing ball
            match enclosing_ball(domain) {
                Ok((c, r)) => c.coords.iter().map(|ci| ci.norm() + r).collect(),
                Err(_) => vec![f64::INFINITY; n],
            }
        }
        DomainSpec::Sublevel { f, box_radius } => match f {
            SublevelFn::Ellipse { a, b } => vec![a.max(*b)],
            SublevelFn::HartogsThickened { .. } => vec![1.0, 1.0],
            SublevelFn::Quadric(_) => vec![box_radius * std::f64::consts::SQRT_2; n],
        },
    }
}

pub fn caratheodory_metric(q: &MetricQuery) -> Result<Bracket> {
    caratheodory_metric_with(q, &MetricOptions::default())
}

pub fn caratheodory_metric_with(q: &MetricQuery, opts: &MetricOptions) -> Result<Bracket> {
    let z = &q.z.coords;
    let v = &q.v.components;
    if !opts.bounds_only {
        if let Some(c) = caratheodory_closed(&q.domain, z, v)? {
            return Ok(Bracket::exact(c, Method::ClosedForm));
        }
    }
    let lower = candidate_lower(&q.domain, z, v, opts.candidate_products)?;
    let upper = kobayashi_metric_with(q, opts)?.upper; // C ≤ K
    Bracket::new(
        lower.min(upper),
        upper,
        Method::CandidateFamily,
        Method::InscribedBall,
    )
}

/// Möbius gap `|(a − b) / (1 − ā b)|` of two disc points.
fn moebius_gap(a: Complex64, b: Complex64) -> f64 {
    ((a - b) / (Complex64::new(1.0, 0.0) - a.conj() * b)).norm()
}

/// Exact Carathéodory distance where a closed form exists.
fn distance_closed(domain: &DomainSpec, z: &[Complex64], w: &[Complex64]) -> Result<Option<f64>> {
    Ok(match domain {
        DomainSpec::Ball { center, radius } => {
            let zn: Vec<Complex64> = z
                .iter()
                .zip(&center.coords)
                .map(|(a, c)| (a - c) / radius)
                .collect();
            let wn: Vec<Complex64> = w
                .iter()
                .zip(&center.coords)
                .map(|(a, c)| (a - c) / radius)
                .collect();
            // 1 − |φ_z(w)|² = (1−|z|²)(1−|w|²)/|1−⟨w,z⟩|²
            let zz = crate::cnum::norm_sq(&zn);
            let ww = crate::cnum::norm_sq(&wn);
            let cross = (Complex64::new(1.0, 0.0) - hdot(&wn, &zn)).norm_sqr();
            let gap2 = (1.0 - (1.0 - zz) * (1.0 - ww) / cross).max(0.0);
            Some(sigma(gap2.sqrt().min(1.0 - 1e-16)))
        }
        DomainSpec::Polydisk { radii } => Some(
            z.iter()
                .zip(w)
                .zip(radii)
                .map(|((a, b), r)| sigma(moebius_gap(a / r, b / r)))
                .fold(0.0f64, f64::max),
        ),
        DomainSpec::PuncturedDisk => Some(sigma(moebius_gap(z[0], w[0]))),
        DomainSpec::Sublevel {
            f: SublevelFn::HartogsThickened { .. },
            ..
        } => {
            // holomorphic maps to Δ extend to the bidisc (removable
            // singularities + Hartogs continuation), so the distance is the
            // bidisc restriction
            Some(
                z.iter()
                    .zip(w)
                    .map(|(a, b)| sigma(moebius_gap(*a, *b)))
                    .fold(0.0f64, f64::max),
            )
        }
        DomainSpec::Product { factors } => {
            let mut best = 0.0f64;
            let mut off = 0;
            for f in factors {
                let d = f.dim();
                match distance_closed(f, &z[off..off + d], &w[off..off + d])? {
                    Some(c) => best = best.max(c),
                    None => return Ok(None),
                }
                off += d;
            }
            Some(best)
        }
        DomainSpec::AffineImage { inner, map } => {
            let pz = map.inverse_apply(&CPoint { coords: z.to_vec() })?;
            let pw = map.inverse_apply(&CPoint { coords: w.to_vec() })?;
            distance_closed(inner, &pz.coords, &pw.coords)?
        }
        _ => None,
    })
}

pub fn caratheodory_distance(domain: &DomainSpec, z: &CPoint, w: &CPoint) -> Result<Bracket> {
    caratheodory_distance_via(domain, z, w, &[])
}

/// Distance bracket with optional waypoints for the integration path
/// (needed when the straight segment exits the domain).
pub fn caratheodory_distance_via(
    domain: &DomainSpec,
    z: &CPoint,
    w: &CPoint,
    waypoints: &[CPoint],
) -> Result<Bracket> {
    domain.check_dim(z)?;
    domain.check_dim(w)?;
    if contains(domain, z)? == Membership::Outside || contains(domain, w)? == Membership::Outside {
        return Err(SqueezeError::OutsideDomain);
    }
    if z.dist(w) == 0.0 {
        return Ok(Bracket::exact(0.0, Method::Exact));
    }
    if let Some(c) = distance_closed(domain, &z.coords, &w.coords)? {
        return Ok(Bracket::exact(c, Method::ClosedForm));
    }

    // lower bound: coordinate candidates g with σ of the Möbius gap
    let sup = coordinate_sup(domain);
    let mut lower = 0.0f64;
    for i in 0..z.dim() {
        let s = sup[i];
        if !s.is_finite() || s <= 0.0 {
            continue;
        }
        let a = z.coords[i] / s;
        let b = w.coords[i] / s;
        if a.norm() < 1.0 && b.norm() < 1.0 {
            lower = lower.max(sigma(moebius_gap(a, b)));
        }
    }

    // upper bound: integrate 2·K_upper along the waypoint path
    let mut path = Vec::with_capacity(waypoints.len() + 2);
    path.push(z.clone());
    path.extend_from_slice(waypoints);
    path.push(w.clone());
    let mut upper = 0.0;
    for pair in path.windows(2) {
        upper += segment_upper(domain, &pair[0], &pair[1])?;
    }
    Bracket::new(
        lower.min(upper),
        upper,
        Method::CandidateFamily,
        Method::SegmentIntegral,
    )
}

fn segment_upper(domain: &DomainSpec, a: &CPoint, b: &CPoint) -> Result<f64> {
    let dir = b.sub(a);
    let len = dir.norm();
    if len == 0.0 {
        return Ok(0.0);
    }
    let panels = SEGMENT_PANELS;
    let mut total = 0.0;
    for i in 0..panels {
        let t = (i as f64 + 0.5) / panels as f64;
        let mid = CPoint {
            coords: a
                .coords
                .iter()
                .zip(&dir.coords)
                .map(|(x, d)| x + d * t)
                .collect(),
        };
        if contains(domain, &mid)? != Membership::Inside {
            return Err(SqueezeError::Precondition(
                "integration segment leaves the domain; supply waypoints".into(),
            ));
        }
        let k_up = match kobayashi_closed(domain, &mid.coords, &dir.coords)? {
            Some(k) => k,
            None => inscribed_upper(domain, &mid, &dir.coords)?,
        };
        total += 2.0 * k_up / panels as f64;
    }
    Ok(total)
}

/// Infinitesimal-metric sandwich data at one point (used by checks and the
/// report layer): Carathéodory and Kobayashi brackets for the same query.
pub fn metric_pair(q: &MetricQuery) -> Result<(Bracket, Bracket)> {
    Ok((caratheodory_metric(q)?, kobayashi_metric(q)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn q1(domain: DomainSpec, z: f64, v: f64) -> MetricQuery {
        MetricQuery::new(domain, CPoint::from_re(&[z]), vec![c(v, 0.0)]).unwrap()
    }

    #[test]
    fn disc_at_origin() {
        let b = kobayashi_metric(&q1(DomainSpec::unit_disk(), 0.0, 1.0)).unwrap();
        assert_eq!(b.lower, 1.0);
        assert_eq!(b.upper, 1.0);
    }

    #[test]
    fn disc_caratheodory_at_half() {
        let b = caratheodory_metric(&q1(DomainSpec::unit_disk(), 0.5, 1.0)).unwrap();
        assert!((b.lower - 4.0 / 3.0).abs() < 1e-14);
        assert!((b.upper - 4.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn punctured_disc_caratheodory_is_restriction() {
        let b = caratheodory_metric(&q1(DomainSpec::PuncturedDisk, 0.5, 1.0)).unwrap();
        assert!((b.lower - 4.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn punctured_disc_kobayashi_matches_density_formula() {
        // independent oracle: k(z) = 1 / (2 |z| ln(1/|z|))
        for z in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let b = kobayashi_metric(&q1(DomainSpec::PuncturedDisk, z, 1.0)).unwrap();
            let oracle = 1.0 / (2.0 * z * (1.0 / z).ln());
            assert!(
                (b.lower - oracle).abs() < 1e-10 * oracle,
                "z={z}: {} vs {oracle}",
                b.lower
            );
        }
    }

    #[test]
    fn annulus_kobayashi_matches_density_formula() {
        // independent oracle: k(z) = π / (2 h |z| sin(π ln(1/|z|) / h)),
        // h = ln(1/r)
        let r = 0.3;
        let h = (1.0f64 / r).ln();
        for z in [0.35, 0.5, 0.6, 0.8, 0.95] {
            let b = kobayashi_metric(&q1(DomainSpec::annulus(r).unwrap(), z, 1.0)).unwrap();
            let oracle =
                std::f64::consts::PI / (2.0 * h * z * (std::f64::consts::PI * (1.0 / z).ln() / h).sin());
            assert!(
                (b.lower - oracle).abs() < 1e-9 * oracle,
                "z={z}: {} vs {oracle}",
                b.lower
            );
        }
    }

    #[test]
    fn annulus_bounds_only_bracket() {
        let q = q1(DomainSpec::annulus(0.3).unwrap(), 0.6, 1.0);
        let b = kobayashi_metric_with(
            &q,
            &MetricOptions {
                bounds_only: true,
                candidate_products: true,
            },
        )
        .unwrap();
        assert!(b.lower >= 1.0 / (1.0 - 0.36) - 1e-12);
        assert!(b.upper <= 1.0 / 0.3 + 1e-12);
        // closed form sits inside the bracket
        let exact = kobayashi_metric(&q).unwrap().lower;
        assert!(b.lower <= exact && exact <= b.upper);
    }

    #[test]
    fn polydisk_max_rule() {
        let q = MetricQuery::new(
            DomainSpec::polydisk(vec![1.0, 1.0]).unwrap(),
            CPoint::zero(2),
            vec![c(1.0, 0.0), c(1.0, 0.0)],
        )
        .unwrap();
        let b = kobayashi_metric(&q).unwrap();
        assert_eq!(b.lower, 1.0);
        assert_eq!(b.upper, 1.0);
    }

    #[test]
    fn distance_disc_examples() {
        let d = DomainSpec::unit_disk();
        let b =
            caratheodory_distance(&d, &CPoint::from_re(&[0.0]), &CPoint::from_re(&[0.5])).unwrap();
        assert!((b.lower - 3.0f64.ln()).abs() < 1e-14);
        assert!((b.upper - 3.0f64.ln()).abs() < 1e-14);
        let same =
            caratheodory_distance(&d, &CPoint::from_re(&[0.3]), &CPoint::from_re(&[0.3])).unwrap();
        assert_eq!(same.lower, 0.0);
        assert_eq!(same.upper, 0.0);
    }

    #[test]
    fn distance_punctured_near_puncture_bounded() {
        let d = DomainSpec::PuncturedDisk;
        let b = caratheodory_distance(
            &d,
            &CPoint::from_re(&[0.5]),
            &CPoint::from_re(&[0.5e-6]),
        )
        .unwrap();
        assert!(b.upper <= crate::sigma(0.5) + 1e-3);
    }

    #[test]
    fn annulus_distance_bracket_consistent() {
        let d = DomainSpec::annulus(0.3).unwrap();
        let b =
            caratheodory_distance(&d, &CPoint::from_re(&[0.5]), &CPoint::from_re(&[0.8])).unwrap();
        assert!(b.lower <= b.upper);
        assert!(b.lower > 0.0);
    }

    #[test]
    fn segment_integration_matches_disc_distance() {
        // on the disc the integral of 2k along [0, t] is exactly σ(t)
        let d = DomainSpec::unit_disk();
        let up = segment_upper(&d, &CPoint::from_re(&[0.0]), &CPoint::from_re(&[0.5])).unwrap();
        assert!((up - 3.0f64.ln()).abs() < 1e-4, "{up}");
    }
}
