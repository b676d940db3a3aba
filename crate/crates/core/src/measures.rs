//! The four intrinsic measures and their sandwich comparisons.
//!
//! Densities are coefficients of the Euclidean volume form:
//!
//! * Carathéodory measure `M^C(z) = sup { |det f'(z)|² : f: D → Bⁿ, f(z)=0 }`,
//! * Eisenman-Kobayashi measure `M^K(z) = inf { 1/|det f'(0)|² : f: Bⁿ → D, f(0)=z }`,
//! * measures of the Carathéodory/Kobayashi metrics,
//!   `vol(Bⁿ) / vol({v : h(v) < 1})`, estimated by spherical Monte-Carlo
//!   integration of the directional radius.
//!
//! In one complex dimension the extremal problems coincide with the
//! metric ones, so `M^C = C²` and `M^K = K²` there.

use crate::bracket::{Bracket, Method};
use crate::domain::geometry::{dist_to_boundary, enclosing_ball};
use crate::domain::{contains, DomainSpec, Membership};
use crate::error::{Result, SqueezeError};
use crate::metrics::{caratheodory_metric, kobayashi_metric, MetricQuery};
use crate::point::CPoint;
use crate::squeeze::standard_embedding;
use crate::tolerances::{COMPARISON_TOL, MC_DIRECTIONS, MC_SIGMAS};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MeasureKind {
    Caratheodory,
    EisenmanKobayashi,
    OfCaratheodoryMetric,
    OfKobayashiMetric,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 4] = [
        MeasureKind::Caratheodory,
        MeasureKind::EisenmanKobayashi,
        MeasureKind::OfCaratheodoryMetric,
        MeasureKind::OfKobayashiMetric,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            MeasureKind::Caratheodory => "caratheodory",
            MeasureKind::EisenmanKobayashi => "eisenman-kobayashi",
            MeasureKind::OfCaratheodoryMetric => "of-caratheodory-metric",
            MeasureKind::OfKobayashiMetric => "of-kobayashi-metric",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasureValue {
    pub kind: MeasureKind,
    /// Point estimate inside the bracket.
    pub density: f64,
    pub bracket: Bracket,
    /// Reported Monte-Carlo half-width (metric measures only).
    pub mc_halfwidth: Option<f64>,
}

fn ball_measure_density(n: usize, center: &CPoint, radius: f64, z: &CPoint) -> f64 {
    let t = z.sub(center).norm_sq() / (radius * radius);
    radius.powi(-2 * n as i32) * (1.0 - t).powi(-(n as i32 + 1))
}

/// Carathéodory measure bracket.
pub fn caratheodory_measure(domain: &DomainSpec, z: &CPoint) -> Result<MeasureValue> {
    domain.check_dim(z)?;
    if contains(domain, z)? != Membership::Inside {
        return Err(SqueezeError::OutsideDomain);
    }
    let n = domain.dim();
    let bracket = match domain {
        DomainSpec::Ball { center, radius } => {
            Bracket::exact(ball_measure_density(n, center, radius, z), Method::ClosedForm)
        }
        _ if n == 1 => {
            // M^C = C² in one dimension
            let q = MetricQuery::new(domain.clone(), z.clone(), vec![Complex64::new(1.0, 0.0)])?;
            let c = caratheodory_metric(&q)?;
            Bracket::new(
                c.lower * c.lower,
                c.upper * c.upper,
                c.lower_method,
                c.upper_method,
            )?
        }
        _ => {
            // lower: best |det f'(z)|² over the embedding candidates
            let mut lower: f64 = 0.0;
            if let Ok(f) = standard_embedding(domain, z) {
                if let Ok(det) = f.jacobian_det(z) {
                    lower = lower.max(det.norm_sqr());
                }
            }
            // enclosing-ball normalization + recentering is always available
            let (c, r) = enclosing_ball(domain)?;
            let offset: Vec<Complex64> = c.coords.iter().map(|ci| -ci).collect();
            let normalize = crate::holomap::HoloMap::translate(offset)
                .then(crate::holomap::HoloMap::uniform_scale(n, 1.0 / r)?);
            let a = normalize.apply(z)?;
            let f = normalize.then(crate::holomap::HoloMap::ball_recenter(a.coords)?);
            if let Ok(det) = f.jacobian_det(z) {
                lower = lower.max(det.norm_sqr());
            }
            // upper: restriction to the inscribed ball B(z, ρ)
            let rho = dist_to_boundary(domain, z)?;
            let upper = rho.powi(-2 * n as i32);
            Bracket::new(
                lower.min(upper),
                upper,
                Method::CandidateFamily,
                Method::InscribedBall,
            )?
        }
    };
    Ok(MeasureValue {
        kind: MeasureKind::Caratheodory,
        density: bracket.midpoint(),
        bracket,
        mc_halfwidth: None,
    })
}

/// Eisenman-Kobayashi measure bracket.
pub fn eisenman_kobayashi_measure(domain: &DomainSpec, z: &CPoint) -> Result<MeasureValue> {
    domain.check_dim(z)?;
    if contains(domain, z)? != Membership::Inside {
        return Err(SqueezeError::OutsideDomain);
    }
    let n = domain.dim();
    let bracket = match domain {
        DomainSpec::Ball { center, radius } => {
            Bracket::exact(ball_measure_density(n, center, radius, z), Method::ClosedForm)
        }
        _ if n == 1 => {
            let q = MetricQuery::new(domain.clone(), z.clone(), vec![Complex64::new(1.0, 0.0)])?;
            let k = kobayashi_metric(&q)?;
            Bracket::new(
                k.lower * k.lower,
                k.upper * k.upper,
                k.lower_method,
                k.upper_method,
            )?
        }
        _ => {
            // upper: explicit maps Bⁿ → D
            let rho = dist_to_boundary(domain, z)?;
            let mut upper = rho.powi(-2 * n as i32); // affine inscribed-ball map
            if let DomainSpec::Polydisk { radii } = domain {
                // per-factor Möbius from the ball into the polydisk
                let mut det = 1.0;
                for (zi, r) in z.coords.iter().zip(radii) {
                    det *= r * (1.0 - (zi / r).norm_sqr());
                }
                upper = upper.min(det.powi(-2));
            }
            // lower: inclusion into the enclosing ball
            let (c, r) = enclosing_ball(domain)?;
            let lower = ball_measure_density(n, &c, r, z);
            Bracket::new(
                lower.min(upper),
                upper,
                Method::EnclosingBall,
                Method::ModelMap,
            )?
        }
    };
    Ok(MeasureValue {
        kind: MeasureKind::EisenmanKobayashi,
        density: bracket.midpoint(),
        bracket,
        mc_halfwidth: None,
    })
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen_range(1e-12..1.0);
    let u2: f64 = rng.gen::<f64>();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Measure of a metric: `vol(Bⁿ)/vol(Bⁿ(h)) = 1 / E_ω[h(ω)^{−2n}]` over
/// uniform directions `ω ∈ S^{2n−1}`, with antithetic pairs and the
/// half-width reported at `MC_SIGMAS` standard errors. The metric's lower
/// bracket feeds the measure's lower side (a smaller norm has a larger
/// unit ball, hence a smaller measure) and vice versa.
pub fn measure_of_metric(
    kind: MeasureKind,
    domain: &DomainSpec,
    z: &CPoint,
    mc_samples: usize,
    seed: u64,
) -> Result<MeasureValue> {
    domain.check_dim(z)?;
    if contains(domain, z)? != Membership::Inside {
        return Err(SqueezeError::OutsideDomain);
    }
    let metric_kind = match kind {
        MeasureKind::OfCaratheodoryMetric => MeasureKind::OfCaratheodoryMetric,
        MeasureKind::OfKobayashiMetric => MeasureKind::OfKobayashiMetric,
        _ => {
            return Err(SqueezeError::InvalidParam(
                "measure_of_metric expects a metric kind".into(),
            ))
        }
    };
    let n = domain.dim();
    let samples = if mc_samples == 0 { MC_DIRECTIONS } else { mc_samples };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc_lo = Welford::new();
    let mut acc_hi = Welford::new();
    let pairs = samples / 2;
    for _ in 0..pairs.max(1) {
        let dir: Vec<Complex64> = {
            let v: Vec<Complex64> = (0..n)
                .map(|_| Complex64::new(normal(&mut rng), normal(&mut rng)))
                .collect();
            let norm = crate::cnum::norm(&v);
            if norm < 1e-9 {
                continue;
            }
            v.into_iter().map(|c| c / norm).collect()
        };
        // antithetic pair; metrics are absolutely homogeneous so the pair
        // contributes the same value twice (kept for the stated recipe)
        for sign in [1.0f64, -1.0] {
            let v: Vec<Complex64> = dir.iter().map(|c| c * sign).collect();
            let q = MetricQuery::new(domain.clone(), z.clone(), v)?;
            let h = match metric_kind {
                MeasureKind::OfCaratheodoryMetric => caratheodory_metric(&q)?,
                _ => kobayashi_metric(&q)?,
            };
            if h.lower <= 0.0 {
                return Err(SqueezeError::Degenerate(
                    "metric lower bound vanishes; the norm ball is unbounded".into(),
                ));
            }
            acc_lo.push(h.lower.powi(-2 * n as i32));
            acc_hi.push(h.upper.powi(-2 * n as i32));
        }
    }
    let (e_lo, w_lo) = acc_lo.mean_and_halfwidth(MC_SIGMAS);
    let (e_hi, w_hi) = acc_hi.mean_and_halfwidth(MC_SIGMAS);
    let lower = 1.0 / (e_lo + w_lo);
    let upper = if e_hi - w_hi > 0.0 {
        1.0 / (e_hi - w_hi)
    } else {
        f64::INFINITY
    };
    let bracket = Bracket::new(lower.min(upper), upper, Method::MonteCarlo, Method::MonteCarlo)?;
    Ok(MeasureValue {
        kind,
        density: 2.0 / (e_lo + e_hi),
        bracket,
        mc_halfwidth: Some(0.5 * (w_lo / (e_lo * e_lo) + w_hi / (e_hi * e_hi))),
    })
}

struct Welford {
    n: f64,
    mean: f64,
    m2: f64,
}

impl Welford {
    fn new() -> Self {
        Self { n: 0.0, mean: 0.0, m2: 0.0 }
    }

    fn push(&mut self, x: f64) {
        self.n += 1.0;
        let d = x - self.mean;
        self.mean += d / self.n;
        self.m2 += d * (x - self.mean);
    }

    fn mean_and_halfwidth(&self, sigmas: f64) -> (f64, f64) {
        if self.n < 2.0 {
            return (self.mean, 0.0);
        }
        let var = self.m2 / (self.n - 1.0);
        (self.mean, sigmas * (var / self.n).sqrt())
    }
}

/// Convenience: all four measures at one point.
pub fn all_measures(
    domain: &DomainSpec,
    z: &CPoint,
    mc_samples: usize,
    seed: u64,
) -> Result<Vec<MeasureValue>> {
    Ok(vec![
        caratheodory_measure(domain, z)?,
        eisenman_kobayashi_measure(domain, z)?,
        measure_of_metric(MeasureKind::OfCaratheodoryMetric, domain, z, mc_samples, seed)?,
        measure_of_metric(MeasureKind::OfKobayashiMetric, domain, z, mc_samples, seed ^ 1)?,
    ])
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairCheck {
    pub m: MeasureKind,
    pub m_prime: MeasureKind,
    /// `s^{2n} · M'.lower ≤ M.upper (1+tol)`
    pub lower_ok: bool,
    /// `M.lower ≤ s^{−2n} · M'.upper (1+tol)`
    pub upper_ok: bool,
    pub slack_lower: f64,
    pub slack_upper: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub domain: String,
    pub s_lower: f64,
    pub dim: usize,
    pub pairs: Vec<PairCheck>,
    pub missing: Vec<String>,
    pub pass: bool,
}

/// Bracket-safe sandwich check `s^{2n} M' ≤ M ≤ s^{−2n} M'` over every
/// ordered pair of the four measures.
pub fn measure_comparison_check(
    domain: &DomainSpec,
    z: &CPoint,
    s_lower: f64,
    mc_samples: usize,
    seed: u64,
) -> Result<ComparisonReport> {
    if !(0.0 < s_lower && s_lower <= 1.0) {
        return Err(SqueezeError::Precondition(
            "s_lower must lie in (0, 1]".into(),
        ));
    }
    let n = domain.dim();
    let mut values = Vec::new();
    let mut missing = Vec::new();
    for kind in MeasureKind::ALL {
        let v = match kind {
            MeasureKind::Caratheodory => caratheodory_measure(domain, z),
            MeasureKind::EisenmanKobayashi => eisenman_kobayashi_measure(domain, z),
            _ => measure_of_metric(kind, domain, z, mc_samples, seed),
        };
        match v {
            Ok(v) => values.push(v),
            Err(e) => missing.push(format!("{}: {e}", kind.as_str())),
        }
    }
    let s2n = s_lower.powi(2 * n as i32);
    let tol = COMPARISON_TOL;
    let mut pairs = Vec::new();
    for m in &values {
        for mp in &values {
            if m.kind == mp.kind {
                continue;
            }
            let lhs = s2n * mp.bracket.lower;
            let rhs = m.bracket.upper * (1.0 + tol);
            let lower_ok = lhs <= rhs;
            let lhs2 = m.bracket.lower;
            let rhs2 = mp.bracket.upper / s2n * (1.0 + tol);
            let upper_ok = lhs2 <= rhs2;
            pairs.push(PairCheck {
                m: m.kind,
                m_prime: mp.kind,
                lower_ok,
                upper_ok,
                slack_lower: rhs - lhs,
                slack_upper: rhs2 - lhs2,
            });
        }
    }
    let pass = !pairs.is_empty() && pairs.iter().all(|p| p.lower_ok && p.upper_ok);
    Ok(ComparisonReport {
        domain: domain.label(),
        s_lower,
        dim: n,
        pairs,
        missing,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_measures_are_one_at_center() {
        let d = DomainSpec::unit_ball(2);
        let z = CPoint::zero(2);
        let mc = caratheodory_measure(&d, &z).unwrap();
        assert_eq!(mc.bracket.lower, 1.0);
        assert_eq!(mc.bracket.upper, 1.0);
        let mk = eisenman_kobayashi_measure(&d, &z).unwrap();
        assert_eq!(mk.bracket.lower, 1.0);
        let mm = measure_of_metric(MeasureKind::OfKobayashiMetric, &d, &z, 4096, 3).unwrap();
        assert!(mm.bracket.contains(1.0));
    }

    #[test]
    fn disc_measure_at_half() {
        let d = DomainSpec::unit_disk();
        let z = CPoint::from_re(&[0.5]);
        let m = caratheodory_measure(&d, &z).unwrap();
        let expected = (1.0f64 / 0.75).powi(2);
        assert!((m.bracket.lower - expected).abs() < 1e-12);
        assert!((m.bracket.upper - expected).abs() < 1e-12);
    }

    #[test]
    fn scaled_ball_eisenman() {
        let d = DomainSpec::Ball {
            center: CPoint::zero(2),
            radius: 2.0,
        };
        let m = eisenman_kobayashi_measure(&d, &CPoint::zero(2)).unwrap();
        assert!((m.bracket.lower - 2.0f64.powi(-4)).abs() < 1e-14);
        assert!((m.bracket.upper - 2.0f64.powi(-4)).abs() < 1e-14);
    }

    #[test]
    fn annulus_eisenman_upper() {
        let d = DomainSpec::annulus(0.3).unwrap();
        let m = eisenman_kobayashi_measure(&d, &CPoint::from_re(&[0.6])).unwrap();
        assert!(m.bracket.upper <= 0.3f64.powi(-2) + 1e-9);
    }

    #[test]
    fn polydisk_kobayashi_measure_half() {
        // vol(B²)/vol(bidisc) = (π²/2)/π² = 1/2
        let d = DomainSpec::polydisk(vec![1.0, 1.0]).unwrap();
        let m =
            measure_of_metric(MeasureKind::OfKobayashiMetric, &d, &CPoint::zero(2), 1 << 14, 5)
                .unwrap();
        assert!(m.bracket.contains(0.5), "{:?}", m.bracket);
    }

    #[test]
    fn comparison_passes_on_ball() {
        let d = DomainSpec::unit_ball(2);
        let r = measure_comparison_check(&d, &CPoint::zero(2), 1.0, 4096, 9).unwrap();
        assert!(r.pass, "{:?}", r.pairs);
        assert_eq!(r.pairs.len(), 12);
    }
}
