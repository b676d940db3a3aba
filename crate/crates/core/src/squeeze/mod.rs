//! Squeezing-function brackets.
//!
//! The squeezing value at `z` is the supremum over holomorphic embeddings
//! `f: D → Bⁿ` with `f(z) = 0` of the largest `r` with `Bⁿ(0,r) ⊆ f(D)`.
//! Nothing here attempts the supremum itself; each routine produces one
//! certified side:
//!
//! * exact model values (ball, punctured disk, symmetric-domain × ball
//!   products),
//! * lower bounds from explicit embeddings (certified image radius),
//! * the distance/diameter lower bound,
//! * upper bounds from escape witnesses via Carathéodory balls,
//! * osculating-ball lower bounds near strongly convex boundary points.

pub mod stability;

use crate::bracket::{Bracket, Method};
use crate::domain::defining::rho;
use crate::domain::geometry::{diameter, dist_to_boundary, outward_normal};
use crate::domain::sample::{boundary_strata, interior_sample};
use crate::domain::{contains, DomainSpec, Membership};
use crate::error::{Result, SqueezeError};
use crate::holomap::{HoloMap, Primitive};
use crate::point::CPoint;
use crate::tolerances::{EMBEDDING_SAMPLES, ESCAPE_DIST_TOL};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Escape evidence backing an upper bound: interior points leaving every
/// compact subset within a bounded Carathéodory ball of radius `radius`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EscapeEvidence {
    pub radius: f64,
    pub points: Vec<CPoint>,
}

/// Squeezing bracket with optional replayable witnesses.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SqueezeBracket {
    pub bracket: Bracket,
    pub witness_lower: Option<HoloMap>,
    pub witness_upper: Option<EscapeEvidence>,
}

/// Exact squeezing values for the closed-form models:
/// 1 on balls, `|z|` on the punctured disk, `(1 + c_Ω)^{−1/2}` on
/// `Ω × Bᵐ` products (and on the bidisk, which is `Δ × B¹`).
pub fn exact_value(domain: &DomainSpec, z: &CPoint) -> Result<f64> {
    domain.check_dim(z)?;
    if contains(domain, z)? != Membership::Inside {
        return Err(SqueezeError::OutsideDomain);
    }
    match domain {
        DomainSpec::Ball { .. } => Ok(1.0),
        DomainSpec::PuncturedDisk => Ok(z.coords[0].norm()),
        DomainSpec::Polydisk { radii } if radii.len() == 2 => {
            // Δ² is biholomorphic to Δ × B¹
            Ok(0.5f64.sqrt())
        }
        DomainSpec::Product { factors } if factors.len() == 2 => {
            let mut sym = None;
            let mut ball = false;
            for f in factors {
                match f {
                    DomainSpec::SymmetricDomain { family } => sym = Some(family),
                    DomainSpec::Ball { .. } => ball = true,
                    _ => {}
                }
            }
            match (sym, ball) {
                (Some(family), true) => Ok((1.0 + family.squeeze_constant()).powf(-0.5)),
                _ => Err(SqueezeError::UnsupportedVariant {
                    op: "exact_value",
                    variant: domain.label(),
                }),
            }
        }
        _ => Err(SqueezeError::UnsupportedVariant {
            op: "exact_value",
            variant: domain.label(),
        }),
    }
}

/// The distance/diameter bound `s_D(z) ≥ d(z, ∂D) / diam(D)`.
pub fn lower_trivial(domain: &DomainSpec, z: &CPoint) -> Result<f64> {
    let d = dist_to_boundary(domain, z)?;
    let diam = diameter(domain)?;
    Ok(d / diam)
}

/// Same bound with a caller-supplied diameter upper bound (stability
/// experiments share the limit domain's diameter across the sequence so
/// the reported bounds inherit the monotonicity of the distances).
pub fn lower_trivial_with_diam(domain: &DomainSpec, z: &CPoint, diam: f64) -> Result<f64> {
    if diam < diameter(domain)? - 1e-9 {
        return Err(SqueezeError::InvalidParam(
            "supplied diameter is smaller than the domain's".into(),
        ));
    }
    Ok(dist_to_boundary(domain, z)? / diam)
}

#[derive(Debug, Clone)]
pub struct EmbeddingOptions {
    pub samples: usize,
    /// Multiplier on the sampled slope used in the mesh pad.
    pub safety: f64,
    /// Accept maps outside the injectivity whitelist.
    pub allow_unverified: bool,
    pub seed: u64,
}

impl Default for EmbeddingOptions {
    fn default() -> Self {
        Self {
            samples: EMBEDDING_SAMPLES,
            safety: 1.5,
            allow_unverified: false,
            seed: 0xB07,
        }
    }
}

/// Certified lower estimate of the image radius of an embedding
/// `f: D → Bⁿ` with `f(z) = 0`.
pub fn lower_from_embedding(
    domain: &DomainSpec,
    z: &CPoint,
    f: &HoloMap,
    opts: &EmbeddingOptions,
) -> Result<f64> {
    domain.check_dim(z)?;
    f.validate()?;
    if contains(domain, z)? != Membership::Inside {
        return Err(SqueezeError::OutsideDomain);
    }
    let at_z = f.apply(z)?;
    if at_z.norm() > 1e-10 {
        return Err(SqueezeError::Precondition(format!(
            "f(z) must vanish; |f(z)| = {:.3e}",
            at_z.norm()
        )));
    }
    if !opts.allow_unverified && !f.injective_whitelisted() {
        return Err(SqueezeError::InvalidEmbedding(
            "map uses primitives outside the injectivity whitelist; pass allow_unverified to accept".into(),
        ));
    }
    // Jacobian nonsingularity spot check
    for p in interior_sample(domain, 8, opts.seed)? {
        if let Ok(det) = f.jacobian_det(&p) {
            if det.norm() < 1e-12 {
                return Err(SqueezeError::InvalidEmbedding(
                    "Jacobian numerically singular at an interior sample".into(),
                ));
            }
        }
    }

    let strata = boundary_strata(domain, opts.samples, opts.seed)?;
    // image must stay in the closed unit ball (checked on boundary samples;
    // |f| obeys the maximum principle)
    for st in &strata {
        for q in &st.points {
            if let Ok(w) = f.apply(q) {
                if w.norm() > 1.0 + 1e-10 {
                    return Err(SqueezeError::InvalidEmbedding(format!(
                        "image sample outside the closed unit ball (|f| = {:.12})",
                        w.norm()
                    )));
                }
            }
        }
    }

    if let Some(r) = exact_image_radius(domain, z, f) {
        return Ok(r.min(1.0));
    }

    let mut radius = f64::INFINITY;
    for st in &strata {
        let mut vals = Vec::with_capacity(st.points.len());
        let mut skipped = false;
        for q in &st.points {
            match f.apply(q) {
                Ok(w) => vals.push(w.norm()),
                Err(_) => skipped = true,
            }
        }
        if vals.is_empty() {
            continue;
        }
        let min = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        let pad = if st.mesh == 0.0 || vals.len() == 1 {
            0.0
        } else {
            // sampled tangential slope along the stratum ordering
            let mut slope: f64 = 0.0;
            for (i, pair) in st.points.windows(2).enumerate() {
                if i + 1 < vals.len() {
                    let dq = pair[0].dist(&pair[1]);
                    if dq > 1e-12 {
                        slope = slope.max((vals[i] - vals[i + 1]).abs() / dq);
                    }
                }
            }
            let _ = skipped;
            opts.safety * slope * st.mesh
        };
        radius = radius.min((min - pad).max(0.0));
    }
    if !radius.is_finite() {
        return Err(SqueezeError::InvalidEmbedding(
            "no boundary samples could be evaluated".into(),
        ));
    }
    Ok(radius.min(1.0))
}

/// Exact image radius for recognized embedding shapes.
///
/// * ball, normalized by an affine isometry onto `Bⁿ` and recentered by
///   ball automorphisms → radius 1;
/// * punctured disk / polydisk / Hartogs triangle mapped factor-by-factor
///   through Möbius maps and diagonal scalings → the product inscribed
///   radius `min_i s_i · d_i` (`d_i = |a_i|` for factors with a deleted
///   point, 1 otherwise).
fn exact_image_radius(domain: &DomainSpec, z: &CPoint, f: &HoloMap) -> Option<f64> {
    match domain {
        DomainSpec::Ball { center, radius } => {
            // leading affine prefix must be a similarity Ball(c,R) → Bⁿ
            let n = domain.dim();
            let mut idx = 0;
            let prims = &f.primitives;
            while idx < prims.len()
                && matches!(
                    prims[idx],
                    Primitive::Identity { .. }
                        | Primitive::Linear { .. }
                        | Primitive::Translate { .. }
                        | Primitive::DiagonalScale { .. }
                )
            {
                idx += 1;
            }
            let affine = HoloMap {
                primitives: prims[..idx].to_vec(),
            };
            for rest in &prims[idx..] {
                match rest {
                    Primitive::BallRecenter { .. } | Primitive::Identity { .. } => {}
                    Primitive::Linear { matrix } => {
                        // must be unitary
                        let u = matrix * matrix.adjoint();
                        let id = crate::cnum::CMatrix::identity(n, n);
                        if (u - id).norm() > 1e-10 {
                            return None;
                        }
                    }
                    _ => return None,
                }
            }
            let (smin, smax) = affine.affine_singular_range(n).ok()?;
            let c_img = affine.apply(center).ok()?;
            if (smin - 1.0 / radius).abs() < 1e-10
                && (smax - 1.0 / radius).abs() < 1e-10
                && c_img.norm() < 1e-10
            {
                Some(1.0)
            } else {
                None
            }
        }
        DomainSpec::PuncturedDisk => per_factor_radius(f, &[Some(z.coords[0])], &[1.0]),
        DomainSpec::Polydisk { radii } => {
            let holes = vec![None; radii.len()];
            per_factor_radius(f, &holes, radii)
        }
        DomainSpec::HartogsTriangle => {
            // the leading primitive must be the quotient; factor holes sit at
            // the deleted origin of each punctured-disk factor
            let first = f.primitives.first()?;
            if !matches!(first, Primitive::HartogsQuotient { inverse: false }) {
                return None;
            }
            let rest = HoloMap {
                primitives: f.primitives[1..].to_vec(),
            };
            let w = HoloMap::hartogs_quotient().apply(z).ok()?;
            per_factor_radius(&rest, &[Some(w.coords[0]), Some(w.coords[1])], &[1.0, 1.0])
        }
        _ => None,
    }
}

/// Image radius of `(Π factor) → (scaled Möbius per factor)`: each factor
/// is a disc of radius `r_i` minus an optional hole at `hole_i`, sent
/// through `m_{a_i}` and scaled by `s_i`. The inscribed radius of the
/// product image at 0 is `min_i |s_i| · min(1, |m_{a_i}(hole_i/r_i)|)`.
fn per_factor_radius(f: &HoloMap, holes: &[Option<Complex64>], radii: &[f64]) -> Option<f64> {
    let n = holes.len();
    let mut pre_scale = vec![Complex64::new(1.0, 0.0); n];
    let mut moebius: Option<Vec<Complex64>> = None;
    let mut post_scale = vec![Complex64::new(1.0, 0.0); n];
    for p in &f.primitives {
        match p {
            Primitive::Identity { .. } => {}
            Primitive::DiagonalScale { factors } => {
                if moebius.is_none() {
                    for (a, b) in pre_scale.iter_mut().zip(factors) {
                        *a *= b;
                    }
                } else {
                    for (a, b) in post_scale.iter_mut().zip(factors) {
                        *a *= b;
                    }
                }
            }
            Primitive::FactorMoebius { params } => {
                if moebius.is_some() {
                    return None; // one Möbius layer only
                }
                moebius = Some(params.clone());
            }
            _ => return None,
        }
    }
    let params = moebius.unwrap_or_else(|| vec![Complex64::new(0.0, 0.0); n]);
    // pre-scale must normalize each factor into the unit disc
    for (i, r) in radii.iter().enumerate() {
        if (pre_scale[i].norm() * r - 1.0).abs() > 1e-9 {
            return None;
        }
    }
    let mut radius = f64::INFINITY;
    for i in 0..n {
        let d = match holes[i] {
            Some(h) => {
                let hn = h * pre_scale[i];
                let a = params[i];
                let gap = ((hn - a) / (Complex64::new(1.0, 0.0) - a.conj() * hn)).norm();
                gap.min(1.0)
            }
            None => 1.0,
        };
        radius = radius.min(post_scale[i].norm() * d);
    }
    Some(radius)
}

/// Upper bound from an escape witness: if the points stay within
/// Carathéodory distance `r` of `z` yet leave every compact subset, then
/// `s_D(z) ≤ 2 σ⁻¹(r)`.
pub fn upper_from_escape(domain: &DomainSpec, z: &CPoint, escape: &[CPoint]) -> Result<(f64, EscapeEvidence)> {
    domain.check_dim(z)?;
    if contains(domain, z)? != Membership::Inside {
        return Err(SqueezeError::OutsideDomain);
    }
    if escape.is_empty() {
        return Err(SqueezeError::InvalidWitness("empty escape sequence".into()));
    }
    for q in escape {
        if rho(domain, q)? >= 0.0 {
            return Err(SqueezeError::InvalidWitness(
                "escape point not inside the domain".into(),
            ));
        }
    }
    // the tail must approach the boundary
    let tail = &escape[(escape.len().saturating_sub(escape.len() / 4 + 1))..];
    let tail_dist = tail
        .iter()
        .map(|q| dist_to_boundary(domain, q).unwrap_or(f64::INFINITY))
        .fold(f64::INFINITY, f64::min);
    if tail_dist > ESCAPE_DIST_TOL {
        return Err(SqueezeError::InvalidWitness(format!(
            "escape sequence stays {tail_dist:.3e} away from the boundary"
        )));
    }
    let mut r: f64 = 0.0;
    for q in escape {
        let d = crate::metrics::caratheodory_distance(domain, z, q)?;
        r = r.max(d.upper);
    }
    if r <= 0.0 {
        return Err(SqueezeError::Precondition(
            "escape sequence coincides with the base point".into(),
        ));
    }
    let upper = (2.0 * crate::sigma_inv(r)).min(1.0);
    Ok((
        upper,
        EscapeEvidence {
            radius: r,
            points: escape.to_vec(),
        },
    ))
}

/// Geometric escape sequence from `z` toward a boundary target.
pub fn escape_toward(
    domain: &DomainSpec,
    z: &CPoint,
    target: &CPoint,
    ratio: f64,
    steps: usize,
) -> Result<Vec<CPoint>> {
    if !(0.0 < ratio && ratio < 1.0) {
        return Err(SqueezeError::InvalidParam("ratio must lie in (0,1)".into()));
    }
    let mut out = Vec::with_capacity(steps);
    let mut t = ratio;
    for _ in 0..steps {
        let q = CPoint {
            coords: target
                .coords
                .iter()
                .zip(&z.coords)
                .map(|(b, a)| b + (a - b) * t)
                .collect(),
        };
        if rho(domain, &q)? < 0.0 {
            out.push(q);
        }
        t *= ratio;
    }
    if out.is_empty() {
        return Err(SqueezeError::InvalidWitness(
            "no escape points inside the domain".into(),
        ));
    }
    Ok(out)
}

/// Osculating-ball lower bound near a boundary point `p`:
/// `B(innerCenter, innerRadius) ⊆ D ⊆ B(c_out, outerRadius)`, both tangent
/// at `p`; the outer ball is normalized onto `Bⁿ`, `z` is recentered, and
/// the inscribed radius of the image of the inner ball is minimized over
/// the inner sphere (sampled, with a slope-based mesh pad).
pub fn osculating_ball_lower(
    domain: &DomainSpec,
    p: &CPoint,
    z: &CPoint,
    inner_center: &CPoint,
    inner_radius: f64,
    outer_radius: f64,
) -> Result<f64> {
    domain.check_dim(p)?;
    domain.check_dim(z)?;
    if inner_radius <= 0.0 || outer_radius < inner_radius {
        return Err(SqueezeError::InvalidOsculation(
            "need 0 < innerRadius ≤ outerRadius".into(),
        ));
    }
    let normal = outward_normal(domain, p)?;
    let nu: Vec<Complex64> = normal
        .chunks_exact(2)
        .map(|ab| Complex64::new(ab[0], ab[1]))
        .collect();
    let c_out = CPoint {
        coords: p
            .coords
            .iter()
            .zip(&nu)
            .map(|(pi, ni)| pi - outer_radius * ni)
            .collect(),
    };
    // tangency of the inner ball at p
    let gap = (p.dist(inner_center) - inner_radius).abs();
    if gap > 1e-6 * (1.0 + inner_radius) {
        return Err(SqueezeError::InvalidOsculation(format!(
            "inner ball not tangent at p (gap {gap:.3e})"
        )));
    }
    let align = p
        .sub(inner_center)
        .coords
        .iter()
        .zip(&nu)
        .map(|(u, n)| (u * n.conj()).re)
        .sum::<f64>()
        / inner_radius;
    if (align - 1.0).abs() > 1e-6 {
        return Err(SqueezeError::InvalidOsculation(format!(
            "inner ball center not aligned with the normal (cos {align:.6})"
        )));
    }
    // inclusion checks by sampling
    let inner_dom = DomainSpec::Ball {
        center: inner_center.clone(),
        radius: inner_radius,
    };
    for q in crate::domain::sample::boundary_sample(&inner_dom, 256, 11)? {
        if contains(domain, &q)? == Membership::Outside {
            return Err(SqueezeError::InvalidOsculation(
                "inner ball exits the domain".into(),
            ));
        }
    }
    for q in crate::domain::sample::boundary_sample(domain, 1024, 13)? {
        if q.dist(&c_out) > outer_radius + 1e-7 {
            return Err(SqueezeError::InvalidOsculation(
                "outer ball does not contain the domain".into(),
            ));
        }
    }
    if z.dist(inner_center) >= inner_radius {
        return Err(SqueezeError::InvalidOsculation(
            "probe point must lie inside the inner ball".into(),
        ));
    }

    // normalize: A(q) = (q − c_out)/R, then recenter ζ = A(z)
    let zeta: Vec<Complex64> = z
        .sub(&c_out)
        .coords
        .iter()
        .map(|c| c / outer_radius)
        .collect();
    let t_axis: Vec<f64> = {
        // ζ expressed along the complex normal direction (must be axial for
        // the reduced parametrization)
        let along = crate::cnum::hdot(&zeta, &nu);
        let mut perp = 0.0;
        for (zi, ni) in zeta.iter().zip(&nu) {
            let res = zi - along * ni;
            perp += res.norm_sqr();
        }
        vec![along.re, along.im, perp.sqrt()]
    };
    let axial = t_axis[1].abs() < 1e-9 && t_axis[2] < 1e-9 && t_axis[0] > 0.0;
    let t = t_axis[0];

    let d_axis = inner_center
        .sub(&c_out)
        .coords
        .iter()
        .zip(&nu)
        .map(|(u, n)| (u * n.conj()).re)
        .sum::<f64>()
        / outer_radius;
    let r_in = inner_radius / outer_radius;

    if axial {
        // |φ_ζ(w)|² = 1 − (1−t²)(1−|w|²)/|1 − t·a|² where a is the complex
        // axis coefficient of w; the inner sphere reduces to parameters
        // (θ, μ): a = d + r cosθ + i μ r sinθ, |w_⊥|² = r² sin²θ (1−μ²).
        let n_theta = 4096;
        let n_mu = 33;
        let value = |theta: f64, mu: f64| -> f64 {
            let a = Complex64::new(d_axis + r_in * theta.cos(), mu * r_in * theta.sin());
            let wsq = a.norm_sqr() + r_in * r_in * theta.sin().powi(2) * (1.0 - mu * mu);
            let denom = (Complex64::new(1.0, 0.0) - t * a).norm_sqr();
            let inside = ((1.0 - t * t) * (1.0 - wsq) / denom).clamp(0.0, 1.0);
            (1.0 - inside).max(0.0).sqrt()
        };
        let mut grid = vec![vec![0.0f64; n_mu]; n_theta];
        for (i, row) in grid.iter_mut().enumerate() {
            let theta = std::f64::consts::PI * i as f64 / (n_theta - 1) as f64;
            for (j, cell) in row.iter_mut().enumerate() {
                let mu = -1.0 + 2.0 * j as f64 / (n_mu - 1) as f64;
                *cell = value(theta, mu);
            }
        }
        let mut best = f64::INFINITY;
        for i in 0..n_theta {
            for j in 0..n_mu {
                let mut local: f64 = 0.0;
                if i > 0 {
                    local = local.max((grid[i][j] - grid[i - 1][j]).abs());
                }
                if i + 1 < n_theta {
                    local = local.max((grid[i][j] - grid[i + 1][j]).abs());
                }
                if j > 0 {
                    local = local.max((grid[i][j] - grid[i][j - 1]).abs());
                }
                if j + 1 < n_mu {
                    local = local.max((grid[i][j] - grid[i][j + 1]).abs());
                }
                best = best.min(grid[i][j] - 1.5 * local);
            }
        }
        Ok(best.clamp(0.0, 1.0))
    } else {
        // generic fallback: sampled inner sphere with a heuristic pad
        let samples = crate::domain::sample::boundary_sample(&inner_dom, 8192, 17)?;
        let recenter = HoloMap::ball_recenter(zeta)?;
        let mut min = f64::INFINITY;
        for q in &samples {
            let w = CPoint {
                coords: q
                    .sub(&c_out)
                    .coords
                    .iter()
                    .map(|c| c / outer_radius)
                    .collect(),
            };
            min = min.min(recenter.apply(&w)?.norm());
        }
        Ok((min * 0.995).clamp(0.0, 1.0))
    }
}

#[derive(Debug, Clone, Default)]
pub struct SqueezeOptions {
    /// Shared diameter upper bound for the trivial lower bound.
    pub diam_override: Option<f64>,
    /// Explicit embedding witness for the lower side.
    pub embedding: Option<HoloMap>,
    /// Explicit escape witness for the upper side.
    pub escape: Option<Vec<CPoint>>,
    pub embedding_opts: Option<EmbeddingOptions>,
}

/// Best available bracket from the configured evidence.
pub fn squeeze_bracket(domain: &DomainSpec, z: &CPoint, opts: &SqueezeOptions) -> Result<SqueezeBracket> {
    if let Ok(v) = exact_value(domain, z) {
        return Ok(SqueezeBracket {
            bracket: Bracket::exact(v, Method::Exact),
            witness_lower: None,
            witness_upper: None,
        });
    }
    let mut lower = match &opts.diam_override {
        Some(d) => lower_trivial_with_diam(domain, z, *d)?,
        None => lower_trivial(domain, z)?,
    };
    let mut lower_method = Method::TrivialBound;
    let mut witness_lower = None;
    if let Some(f) = &opts.embedding {
        let eopts = opts.embedding_opts.clone().unwrap_or_default();
        let r = lower_from_embedding(domain, z, f, &eopts)?;
        if r > lower {
            lower = r;
            lower_method = Method::Embedding;
            witness_lower = Some(f.clone());
        }
    }
    let mut upper = 1.0;
    let mut upper_method = Method::SchwarzBound;
    let mut witness_upper = None;
    if let Some(esc) = &opts.escape {
        let (u, ev) = upper_from_escape(domain, z, esc)?;
        if u < upper {
            upper = u;
            upper_method = Method::Escape;
            witness_upper = Some(ev);
        }
    }
    Ok(SqueezeBracket {
        bracket: Bracket::new(lower.min(upper), upper, lower_method, upper_method)?,
        witness_lower,
        witness_upper,
    })
}

/// Standard embedding witnesses for the models (used by tests, the CLI,
/// and the measure candidates): recentering maps sending `z` to 0.
pub fn standard_embedding(domain: &DomainSpec, z: &CPoint) -> Result<HoloMap> {
    match domain {
        DomainSpec::Ball { center, radius } => {
            let offset: Vec<Complex64> = center.coords.iter().map(|c| -c).collect();
            let normalize = HoloMap::translate(offset)
                .then(HoloMap::uniform_scale(z.dim(), 1.0 / radius)?);
            let a = normalize.apply(z)?;
            Ok(normalize.then(HoloMap::ball_recenter(a.coords)?))
        }
        DomainSpec::PuncturedDisk => Ok(HoloMap::factor_moebius(vec![z.coords[0]])?),
        DomainSpec::Polydisk { radii } => {
            let n = radii.len();
            let pre = HoloMap::diagonal_scale(
                radii.iter().map(|r| Complex64::new(1.0 / r, 0.0)).collect(),
            )?;
            let zn = pre.apply(z)?;
            let scale = (n as f64).sqrt().recip();
            Ok(pre
                .then(HoloMap::factor_moebius(zn.coords)?)
                .then(HoloMap::uniform_scale(n, scale)?))
        }
        DomainSpec::HartogsTriangle => {
            let q = HoloMap::hartogs_quotient();
            let w = q.apply(z)?;
            Ok(q
                .then(HoloMap::factor_moebius(w.coords)?)
                .then(HoloMap::uniform_scale(2, 0.5f64.sqrt())?))
        }
        _ => Err(SqueezeError::UnsupportedVariant {
            op: "standard_embedding",
            variant: domain.label(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_exact() {
        let d = DomainSpec::unit_ball(2);
        assert_eq!(exact_value(&d, &CPoint::from_re(&[0.3, 0.1])).unwrap(), 1.0);
    }

    #[test]
    fn punctured_exact_and_embedding_agree() {
        let d = DomainSpec::PuncturedDisk;
        let z = CPoint::from_re(&[0.5]);
        assert!((exact_value(&d, &z).unwrap() - 0.5).abs() < 1e-15);
        let f = standard_embedding(&d, &z).unwrap();
        let r = lower_from_embedding(&d, &z, &f, &EmbeddingOptions::default()).unwrap();
        assert!((r - 0.5).abs() < 1e-12);
    }

    #[test]
    fn product_symmetric_ball_exact() {
        let d = DomainSpec::Product {
            factors: vec![
                DomainSpec::SymmetricDomain {
                    family: crate::domain::SymmetricFamily::TypeIv { n: 2 },
                },
                DomainSpec::unit_ball(1),
            ],
        };
        let z = CPoint::zero(3);
        let v = exact_value(&d, &z).unwrap();
        assert!((v - 3.0f64.powf(-0.5)).abs() < 1e-14);
    }

    #[test]
    fn trivial_bounds() {
        assert!(
            (lower_trivial(&DomainSpec::unit_disk(), &CPoint::from_re(&[0.0])).unwrap() - 0.5)
                .abs()
                < 1e-14
        );
        assert!(
            (lower_trivial(&DomainSpec::annulus(0.3).unwrap(), &CPoint::from_re(&[0.6])).unwrap()
                - 0.15)
                .abs()
                < 1e-14
        );
        let p = DomainSpec::polydisk(vec![1.0, 1.0]).unwrap();
        assert!(
            (lower_trivial(&p, &CPoint::zero(2)).unwrap() - 1.0 / (2.0 * 2.0f64.sqrt())).abs()
                < 1e-14
        );
    }

    #[test]
    fn ball_recentering_gives_one() {
        let d = DomainSpec::unit_ball(2);
        let z = CPoint::from_re(&[0.4, -0.2]);
        let f = standard_embedding(&d, &z).unwrap();
        let r = lower_from_embedding(&d, &z, &f, &EmbeddingOptions::default()).unwrap();
        assert!((r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hartogs_quotient_lower() {
        let d = DomainSpec::HartogsTriangle;
        let z = CPoint::from_re(&[0.8, 0.64]);
        let f = standard_embedding(&d, &z).unwrap();
        let r = lower_from_embedding(&d, &z, &f, &EmbeddingOptions::default()).unwrap();
        assert!(r >= 0.7071 * 0.8 - 1e-6, "{r}");
    }

    #[test]
    fn escape_upper_on_punctured_disk() {
        let d = DomainSpec::PuncturedDisk;
        let z = CPoint::from_re(&[0.1]);
        let esc = escape_toward(&d, &z, &CPoint::from_re(&[0.0]), 0.5, 40).unwrap();
        let (u, ev) = upper_from_escape(&d, &z, &esc).unwrap();
        assert!((u - 0.2).abs() < 1e-9, "{u}");
        assert!(ev.radius > 0.0);
    }

    #[test]
    fn escape_rejects_interior_sequences() {
        let d = DomainSpec::PuncturedDisk;
        let z = CPoint::from_re(&[0.5]);
        let stuck = vec![CPoint::from_re(&[0.4]), CPoint::from_re(&[0.45])];
        assert!(matches!(
            upper_from_escape(&d, &z, &stuck),
            Err(SqueezeError::InvalidWitness(_))
        ));
    }

    #[test]
    fn osculating_disc_example() {
        let d = DomainSpec::unit_disk();
        let p = CPoint::from_re(&[1.0]);
        let inner = CPoint::from_re(&[0.5]);
        let r = osculating_ball_lower(&d, &p, &CPoint::from_re(&[0.9]), &inner, 0.5, 1.0).unwrap();
        assert!((r - 0.9).abs() < 2e-3, "{r}");
        assert!(r >= 1.0 - 2.0 * 0.1);
    }
}
