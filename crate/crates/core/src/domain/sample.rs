//! Deterministic boundary and interior sampling.
//!
//! Boundary samples are organized by stratum. Each stratum records a
//! covering-radius bound `mesh`: every point of the stratum lies within
//! `mesh` of some sample. Point strata (the puncture, the triangle
//! corner limit) have `mesh = 0` — they are sampled exactly. Strata
//! produced from unstructured random directions carry a heuristic mesh
//! and say so in their label.

use super::defining::rho;
use super::{DomainSpec, SublevelFn};
use crate::domain::symmetric::generic_norm;
use crate::domain::SymmetricFamily;
use crate::error::{Result, SqueezeError};
use crate::point::CPoint;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct Stratum {
    pub label: String,
    pub points: Vec<CPoint>,
    /// Covering radius bound; `f64::INFINITY`-free, 0 for exact point strata,
    /// negative never. Heuristic strata set `certified = false`.
    pub mesh: f64,
    pub certified: bool,
}

impl Stratum {
    fn exact_point(label: &str, p: CPoint) -> Self {
        Stratum {
            label: label.into(),
            points: vec![p],
            mesh: 0.0,
            certified: true,
        }
    }
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller
    let u1: f64 = rng.gen_range(1e-12..1.0);
    let u2: f64 = rng.gen::<f64>();
    (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}

fn random_complex_unit(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(normal(rng), normal(rng)))
            .collect();
        let norm = crate::cnum::norm(&v);
        if norm > 1e-9 {
            return v.into_iter().map(|c| c / norm).collect();
        }
    }
}

fn circle_grid(center: Complex64, radius: f64, count: usize, phase: f64) -> (Vec<Complex64>, f64) {
    let m = count.max(4);
    let pts = (0..m)
        .map(|k| {
            let t = phase + 2.0 * PI * k as f64 / m as f64;
            center + radius * Complex64::new(t.cos(), t.sin())
        })
        .collect();
    // covering radius: half the chord step, bounded by half the arc step
    (pts, PI * radius / m as f64)
}

/// Polar grid over the closed disc of given radius; returns points and a
/// covering-radius bound.
fn disc_grid(radius: f64, count: usize) -> (Vec<Complex64>, f64) {
    let side = (count as f64).sqrt().ceil() as usize;
    let nr = side.max(2);
    let nt = side.max(4);
    let mut pts = Vec::with_capacity(nr * nt + 1);
    pts.push(Complex64::new(0.0, 0.0));
    for i in 1..=nr {
        let r = radius * i as f64 / nr as f64;
        for k in 0..nt {
            let t = 2.0 * PI * k as f64 / nt as f64;
            pts.push(r * Complex64::new(t.cos(), t.sin()));
        }
    }
    let dr = radius / nr as f64;
    let arc = PI * radius / nt as f64;
    (pts, (0.5 * dr).hypot(arc))
}

fn seed_phase(seed: u64) -> f64 {
    // deterministic irrational-ish rotation so different seeds decorrelate grids
    (seed as f64 * 0.618_033_988_749_895).fract() * 2.0 * PI
}

/// Boundary samples organized by stratum, with a per-stratum budget.
pub fn boundary_strata(domain: &DomainSpec, budget: usize, seed: u64) -> Result<Vec<Stratum>> {
    let budget = budget.max(8);
    let phase = seed_phase(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match domain {
        DomainSpec::Ball { center, radius } => {
            if center.dim() == 1 {
                let (pts, mesh) = circle_grid(center.coords[0], *radius, budget, phase);
                Ok(vec![Stratum {
                    label: "circle".into(),
                    points: pts.into_iter().map(|c| CPoint { coords: vec![c] }).collect(),
                    mesh,
                    certified: true,
                }])
            } else {
                let n = center.dim();
                let points = (0..budget)
                    .map(|_| {
                        let dir = random_complex_unit(&mut rng, n);
                        CPoint {
                            coords: dir
                                .iter()
                                .zip(&center.coords)
                                .map(|(d, c)| c + radius * d)
                                .collect(),
                        }
                    })
                    .collect();
                Ok(vec![Stratum {
                    label: "sphere (random)".into(),
                    points,
                    mesh: radius * (budget as f64).powf(-1.0 / (2.0 * n as f64 - 1.0)) * 4.0,
                    certified: false,
                }])
            }
        }
        DomainSpec::Polydisk { radii } => {
            let n = radii.len();
            let mut strata = Vec::new();
            let per = budget / n.max(1);
            for i in 0..n {
                // face |z_i| = r_i, other coordinates over closed discs
                let others: Vec<usize> = (0..n).filter(|j| *j != i).collect();
                let circle_count = (per as f64).powf(1.0 / (1.0 + 2.0 * others.len() as f64));
                let mc = (circle_count.ceil() as usize).max(8);
                let (face, face_mesh) = circle_grid(Complex64::new(0.0, 0.0), radii[i], mc, phase);
                let mut pts = Vec::new();
                let mut others_mesh: f64 = 0.0;
                if others.is_empty() {
                    pts = face.iter().map(|c| CPoint { coords: vec![*c] }).collect();
                } else {
                    let per_other = ((per / mc.max(1)) as f64)
                        .powf(1.0 / others.len() as f64)
                        .ceil() as usize;
                    // tensor over the other coordinates via disc grids
                    let mut grids = Vec::new();
                    for &j in &others {
                        let (g, m) = disc_grid(radii[j], per_other.max(4));
                        others_mesh = (others_mesh * others_mesh + m * m).sqrt();
                        grids.push(g);
                    }
                    let mut combos: Vec<Vec<Complex64>> = vec![vec![]];
                    for g in &grids {
                        let mut next = Vec::new();
                        for c in &combos {
                            for val in g {
                                let mut cc = c.clone();
                                cc.push(*val);
                                next.push(cc);
                            }
                        }
                        combos = next;
                    }
                    for f in &face {
                        for combo in &combos {
                            let mut coords = vec![Complex64::new(0.0, 0.0); n];
                            coords[i] = *f;
                            for (idx, &j) in others.iter().enumerate() {
                                coords[j] = combo[idx];
                            }
                            pts.push(CPoint { coords });
                        }
                    }
                }
                strata.push(Stratum {
                    label: format!("face |z_{}| = {}", i + 1, radii[i]),
                    points: pts,
                    mesh: (face_mesh * face_mesh + others_mesh * others_mesh).sqrt(),
                    certified: true,
                });
            }
            Ok(strata)
        }
        DomainSpec::PuncturedDisk => {
            let (pts, mesh) = circle_grid(Complex64::new(0.0, 0.0), 1.0, budget, phase);
            Ok(vec![
                Stratum::exact_point("puncture", CPoint::from_re(&[0.0])),
                Stratum {
                    label: "unit circle".into(),
                    points: pts.into_iter().map(|c| CPoint { coords: vec![c] }).collect(),
                    mesh,
                    certified: true,
                },
            ])
        }
        DomainSpec::Annulus { inner } => {
            let (outer, mo) = circle_grid(Complex64::new(0.0, 0.0), 1.0, budget / 2, phase);
            let (inr, mi) = circle_grid(Complex64::new(0.0, 0.0), *inner, budget / 2, phase);
            Ok(vec![
                Stratum {
                    label: "outer circle".into(),
                    points: outer.into_iter().map(|c| CPoint { coords: vec![c] }).collect(),
                    mesh: mo,
                    certified: true,
                },
                Stratum {
                    label: "inner circle".into(),
                    points: inr.into_iter().map(|c| CPoint { coords: vec![c] }).collect(),
                    mesh: mi,
                    certified: true,
                },
            ])
        }
        DomainSpec::HartogsTriangle => Ok(hartogs_strata(budget, phase, 0.0)),
        DomainSpec::SymmetricDomain { family } => {
            family.validate()?;
            let points: Result<Vec<CPoint>> = (0..budget)
                .map(|_| symmetric_boundary_point(family, &mut rng))
                .collect();
            Ok(vec![Stratum {
                label: "symmetric-domain boundary (random)".into(),
                points: points?,
                mesh: family.diameter() * (budget as f64).powf(-1.0 / (2 * family.ambient_dim()) as f64)
                    * 4.0,
                certified: false,
            }])
        }
        DomainSpec::CartanHartogs { base, k, m } => {
            base.validate()?;
            let nb = base.ambient_dim();
            let mut fiber = Vec::new();
            for _ in 0..(3 * budget / 4) {
                let zb = symmetric_interior_point(base, &mut rng)?;
                let n = generic_norm(base, &zb)?;
                let w = random_complex_unit(&mut rng, *m);
                let r = n.max(0.0).powf(k / 2.0);
                let mut coords = zb;
                coords.extend(w.into_iter().map(|c| c * r));
                fiber.push(CPoint { coords });
            }
            let mut rim = Vec::new();
            for _ in 0..(budget / 4).max(1) {
                let zb = symmetric_boundary_point(base, &mut rng)?;
                let mut coords = zb.coords;
                coords.extend(vec![Complex64::new(0.0, 0.0); *m]);
                rim.push(CPoint { coords });
            }
            let mesh = (1.0 + base.diameter())
                * (budget as f64).powf(-1.0 / (2 * (nb + m)) as f64)
                * 4.0;
            Ok(vec![
                Stratum {
                    label: "fiber boundary ‖W‖² = N^k (random)".into(),
                    points: fiber,
                    mesh,
                    certified: false,
                },
                Stratum {
                    label: "base rim W = 0 (random)".into(),
                    points: rim,
                    mesh,
                    certified: false,
                },
            ])
        }
        DomainSpec::Product { factors } => {
            let offsets = DomainSpec::product_offsets(factors);
            let total = domain.dim();
            let mut strata = Vec::new();
            let per = (budget / factors.len().max(1)).max(4);
            for (idx, f) in factors.iter().enumerate() {
                let inner = boundary_strata(f, per, seed ^ (idx as u64 + 1))?;
                // pair each inner stratum with interior samples of the other factors
                for st in inner {
                    let fills: Vec<Vec<CPoint>> = factors
                        .iter()
                        .enumerate()
                        .map(|(j, fj)| {
                            if j == idx {
                                vec![]
                            } else {
                                interior_sample(fj, st.points.len().max(1), seed ^ 0x5eed ^ j as u64)
                                    .unwrap_or_default()
                            }
                        })
                        .collect();
                    let points = st
                        .points
                        .iter()
                        .enumerate()
                        .map(|(pi, bp)| {
                            let mut coords = vec![Complex64::new(0.0, 0.0); total];
                            for (j, fj) in factors.iter().enumerate() {
                                let src = if j == idx {
                                    bp.coords.clone()
                                } else {
                                    fills[j][pi % fills[j].len()].coords.clone()
                                };
                                coords[offsets[j]..offsets[j] + fj.dim()].copy_from_slice(&src);
                            }
                            CPoint { coords }
                        })
                        .collect();
                    strata.push(Stratum {
                        label: format!("factor {} × interior: {}", idx + 1, st.label),
                        points,
                        mesh: st.mesh,
                        certified: false, // interior fill is not a covering of the closure
                    });
                }
            }
            Ok(strata)
        }
        DomainSpec::AffineImage { inner, map } => {
            let inner_strata = boundary_strata(inner, budget, seed)?;
            let (_, smax) = map.affine_singular_range(inner.dim())?;
            inner_strata
                .into_iter()
                .map(|st| {
                    let points: Result<Vec<CPoint>> =
                        st.points.iter().map(|p| map.apply(p)).collect();
                    Ok(Stratum {
                        label: format!("affine image: {}", st.label),
                        points: points?,
                        mesh: st.mesh * smax,
                        certified: st.certified,
                    })
                })
                .collect()
        }
        DomainSpec::Sublevel { f, box_radius } => match f {
            SublevelFn::Ellipse { a, b } => {
                let m = budget.max(16);
                let points = (0..m)
                    .map(|k| {
                        let t = phase + 2.0 * PI * k as f64 / m as f64;
                        CPoint {
                            coords: vec![Complex64::new(a * t.cos(), b * t.sin())],
                        }
                    })
                    .collect();
                Ok(vec![Stratum {
                    label: "ellipse".into(),
                    points,
                    mesh: PI * a.max(*b) / m as f64,
                    certified: true,
                }])
            }
            SublevelFn::HartogsThickened { eps } => Ok(hartogs_strata(budget, phase, *eps)),
            SublevelFn::Quadric(_) => {
                let n = f.dim();
                let anchor = f.anchor();
                let mut points = Vec::new();
                for _ in 0..budget {
                    let dir = random_complex_unit(&mut rng, n);
                    if let Some(p) = ray_cast(domain, &anchor, &dir, 4.0 * box_radius) {
                        points.push(p);
                    }
                }
                if points.is_empty() {
                    return Err(SqueezeError::InvalidParam(
                        "ray casting found no boundary crossings".into(),
                    ));
                }
                let mesh =
                    2.0 * box_radius * (points.len() as f64).powf(-1.0 / (2 * n) as f64) * 4.0;
                Ok(vec![Stratum {
                    label: "sublevel boundary (ray cast)".into(),
                    points,
                    mesh,
                    certified: false,
                }])
            }
        },
    }
}

/// Strata of the Hartogs triangle; `eps > 0` produces the thickened
/// variant's strata instead.
fn hartogs_strata(budget: usize, phase: f64, eps: f64) -> Vec<Stratum> {
    let per = (budget / 3).max(27);
    let side = ((per as f64).powf(1.0 / 3.0).ceil() as usize).max(3);
    let step_t = 1.0 / side as f64;
    let step_a = 2.0 * PI / side as f64;
    let mut outer = Vec::new();
    let mut cone = Vec::new();
    let mut bottom = Vec::new();
    let mut ceiling = Vec::new();
    for it in 0..=side {
        let tau = it as f64 * step_t;
        for ia in 0..side {
            let th = phase + ia as f64 * step_a;
            let e1 = Complex64::new(th.cos(), th.sin());
            // bottom stratum {z₂ = 0, |z₁| ≤ 1} is 2-dimensional
            bottom.push(CPoint {
                coords: vec![tau * e1, Complex64::new(0.0, 0.0)],
            });
            for ib in 0..side {
                let ps = phase + ib as f64 * step_a;
                let e2 = Complex64::new(ps.cos(), ps.sin());
                outer.push(CPoint {
                    coords: vec![e1, tau * e2],
                });
                if eps == 0.0 || tau >= eps {
                    cone.push(CPoint {
                        coords: vec![tau * e1, tau * e2],
                    });
                }
                if eps > 0.0 {
                    ceiling.push(CPoint {
                        coords: vec![tau * eps * e1, eps * e2],
                    });
                }
            }
        }
    }
    let mesh3 = 0.5 * (std::f64::consts::SQRT_2 * step_t + 2.0 * step_a);
    let mesh2 = 0.5 * (step_t + step_a);
    let mut strata = vec![
        Stratum {
            label: "outer face |z₁| = 1".into(),
            points: outer,
            mesh: mesh3,
            certified: true,
        },
        Stratum {
            label: "cone |z₂| = |z₁|".into(),
            points: cone,
            mesh: mesh3,
            certified: true,
        },
        Stratum {
            label: "bottom z₂ = 0".into(),
            points: bottom,
            mesh: mesh2,
            certified: true,
        },
    ];
    if eps > 0.0 {
        strata.push(Stratum {
            label: format!("tube ceiling |z₂| = {eps}"),
            points: ceiling,
            mesh: mesh3 * eps.max(0.1),
            certified: true,
        });
    }
    strata
}

fn symmetric_boundary_point(family: &SymmetricFamily, rng: &mut ChaCha8Rng) -> Result<CPoint> {
    let n = family.ambient_dim();
    match family {
        SymmetricFamily::TypeIv { .. } => {
            // scale a random direction to the first boundary crossing
            let dir = random_complex_unit(rng, n);
            let val = |t: f64| {
                let z: Vec<Complex64> = dir.iter().map(|c| c * t).collect();
                family.defining_value(&z).unwrap()
            };
            let mut hi = 1.0;
            while val(hi) < 0.0 {
                hi *= 1.5;
                if hi > 1e3 {
                    return Err(SqueezeError::InvalidParam("unbounded ray".into()));
                }
            }
            let mut lo = 0.0;
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if val(mid) < 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let t = 0.5 * (lo + hi);
            Ok(CPoint {
                coords: dir.into_iter().map(|c| c * t).collect(),
            })
        }
        _ => {
            let (rows, cols) = family.matrix_shape();
            let mut g = crate::cnum::CMatrix::from_fn(rows, cols, |_, _| {
                Complex64::new(normal(rng), normal(rng))
            });
            match family {
                SymmetricFamily::TypeIi { .. } => {
                    g = (g.clone() + g.transpose()) * Complex64::new(0.5, 0.0)
                }
                SymmetricFamily::TypeIii { .. } => {
                    g = (g.clone() - g.transpose()) * Complex64::new(0.5, 0.0)
                }
                _ => {}
            }
            let s = crate::cnum::sigma_max(&g);
            if s < 1e-12 {
                return Err(SqueezeError::InvalidParam("degenerate random matrix".into()));
            }
            let m = g / Complex64::new(s, 0.0);
            let coords: Vec<Complex64> = (0..rows)
                .flat_map(|i| (0..cols).map(move |j| (i, j)))
                .map(|(i, j)| m[(i, j)])
                .collect();
            Ok(CPoint { coords })
        }
    }
}

fn symmetric_interior_point(family: &SymmetricFamily, rng: &mut ChaCha8Rng) -> Result<Vec<Complex64>> {
    let b = symmetric_boundary_point(family, rng)?;
    let t: f64 = rng.gen_range(0.0..0.98);
    Ok(b.coords.into_iter().map(|c| c * t).collect())
}

/// First boundary crossing along a ray from an interior anchor.
fn ray_cast(domain: &DomainSpec, anchor: &CPoint, dir: &[Complex64], max_t: f64) -> Option<CPoint> {
    let at = |t: f64| CPoint {
        coords: anchor
            .coords
            .iter()
            .zip(dir)
            .map(|(a, d)| a + d * t)
            .collect(),
    };
    let val = |t: f64| rho(domain, &at(t)).unwrap_or(f64::INFINITY);
    if val(0.0) >= 0.0 {
        return None;
    }
    // march until the sign flips, then bisect
    let mut lo = 0.0;
    let mut hi = None;
    let steps = 256;
    for i in 1..=steps {
        let t = max_t * i as f64 / steps as f64;
        if val(t) >= 0.0 {
            hi = Some(t);
            break;
        }
        lo = t;
    }
    let mut hi = hi?;
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if val(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(at(0.5 * (lo + hi)))
}

/// Flat list of boundary samples: strata interleaved round-robin, exactly
/// `count` points, bit-identical across reruns with the same seed.
pub fn boundary_sample(domain: &DomainSpec, count: usize, seed: u64) -> Result<Vec<CPoint>> {
    if count == 0 {
        return Err(SqueezeError::InvalidParam("count must be ≥ 1".into()));
    }
    let strata = boundary_strata(domain, count.max(8), seed)?;
    let mut out = Vec::with_capacity(count);
    let mut idx = 0usize;
    while out.len() < count {
        let mut progressed = false;
        for st in &strata {
            if out.len() >= count {
                break;
            }
            if idx < st.points.len() {
                out.push(st.points[idx].clone());
                progressed = true;
            }
        }
        if !progressed {
            // cycle through strata again from the start
            idx = 0;
            for st in &strata {
                if out.len() >= count {
                    break;
                }
                if !st.points.is_empty() {
                    out.push(st.points[0].clone());
                }
            }
            if out.len() < count && strata.iter().all(|s| s.points.is_empty()) {
                return Err(SqueezeError::InvalidParam("no boundary samples produced".into()));
            }
            continue;
        }
        idx += 1;
    }
    Ok(out)
}

/// Deterministic interior samples (strictly inside).
pub fn interior_sample(domain: &DomainSpec, count: usize, seed: u64) -> Result<Vec<CPoint>> {
    if count == 0 {
        return Err(SqueezeError::InvalidParam("count must be ≥ 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1));
    let mut out = Vec::with_capacity(count);
    let mut guard = 0usize;
    while out.len() < count {
        guard += 1;
        if guard > 1000 * count {
            return Err(SqueezeError::InvalidParam(
                "interior sampling failed to converge".into(),
            ));
        }
        if let Some(p) = interior_one(domain, &mut rng)? {
            if matches!(
                super::defining::contains(domain, &p),
                Ok(super::Membership::Inside)
            ) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

fn interior_one(domain: &DomainSpec, rng: &mut ChaCha8Rng) -> Result<Option<CPoint>> {
    Ok(match domain {
        DomainSpec::Ball { center, radius } => {
            let n = center.dim();
            let dir = random_complex_unit(rng, n);
            let u: f64 = rng.gen::<f64>();
            let r = radius * u.powf(1.0 / (2.0 * n as f64)) * 0.999;
            Some(CPoint {
                coords: dir
                    .iter()
                    .zip(&center.coords)
                    .map(|(d, c)| c + r * d)
                    .collect(),
            })
        }
        DomainSpec::Polydisk { radii } => {
            let coords = radii
                .iter()
                .map(|r| {
                    let t: f64 = rng.gen::<f64>();
                    let th: f64 = rng.gen_range(0.0..2.0 * PI);
                    r * 0.999 * t.sqrt() * Complex64::new(th.cos(), th.sin())
                })
                .collect();
            Some(CPoint { coords })
        }
        DomainSpec::PuncturedDisk => {
            let t: f64 = rng.gen_range(1e-6..0.999f64);
            let th: f64 = rng.gen_range(0.0..2.0 * PI);
            Some(CPoint {
                coords: vec![t * Complex64::new(th.cos(), th.sin())],
            })
        }
        DomainSpec::Annulus { inner } => {
            let t: f64 = rng.gen_range(inner + 1e-6..0.999f64);
            let th: f64 = rng.gen_range(0.0..2.0 * PI);
            Some(CPoint {
                coords: vec![t * Complex64::new(th.cos(), th.sin())],
            })
        }
        DomainSpec::HartogsTriangle => {
            let r1: f64 = rng.gen_range(1e-3..0.999f64);
            let frac: f64 = rng.gen_range(1e-3..0.999f64);
            let t1: f64 = rng.gen_range(0.0..2.0 * PI);
            let t2: f64 = rng.gen_range(0.0..2.0 * PI);
            Some(CPoint {
                coords: vec![
                    r1 * Complex64::new(t1.cos(), t1.sin()),
                    r1 * frac * Complex64::new(t2.cos(), t2.sin()),
                ],
            })
        }
        DomainSpec::SymmetricDomain { family } => Some(CPoint {
            coords: symmetric_interior_point(family, rng)?,
        }),
        DomainSpec::CartanHartogs { base, k, m } => {
            let zb = symmetric_interior_point(base, rng)?;
            let n = generic_norm(base, &zb)?;
            if n <= 0.0 {
                return Ok(None);
            }
            let w = random_complex_unit(rng, *m);
            let u: f64 = rng.gen::<f64>();
            let r = n.powf(k / 2.0) * u.powf(1.0 / (2.0 * *m as f64)) * 0.99;
            let mut coords = zb;
            coords.extend(w.into_iter().map(|c| c * r));
            Some(CPoint { coords })
        }
        DomainSpec::Product { factors } => {
            let mut coords = Vec::with_capacity(domain.dim());
            for f in factors {
                match interior_one(f, rng)? {
                    Some(p) => coords.extend(p.coords),
                    None => return Ok(None),
                }
            }
            Some(CPoint { coords })
        }
        DomainSpec::AffineImage { inner, map } => match interior_one(inner, rng)? {
            Some(p) => Some(map.apply(&p)?),
            None => None,
        },
        DomainSpec::Sublevel { f, box_radius } => {
            // rejection sampling in the bounding box, biased toward the anchor
            if rng.gen::<f64>() < 0.05 {
                return Ok(Some(f.anchor()));
            }
            let n = f.dim();
            let coords: Vec<Complex64> = (0..n)
                .map(|_| {
                    Complex64::new(
                        rng.gen_range(-box_radius..*box_radius),
                        rng.gen_range(-box_radius..*box_radius),
                    )
                })
                .collect();
            let p = CPoint { coords };
            if rho(domain, &p).map(|v| v < 0.0).unwrap_or(false) {
                Some(p)
            } else {
                None
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_boundary_norms() {
        let d = DomainSpec::unit_ball(1);
        let pts = boundary_sample(&d, 4, 7).unwrap();
        assert_eq!(pts.len(), 4);
        for p in &pts {
            assert!((p.norm() - 1.0).abs() < 1e-12);
        }
        // reproducibility is bit-exact
        let again = boundary_sample(&d, 4, 7).unwrap();
        assert_eq!(pts, again);
    }

    #[test]
    fn polydisk_distinguished_boundary() {
        let d = DomainSpec::polydisk(vec![1.0, 1.0]).unwrap();
        let pts = boundary_sample(&d, 10, 3).unwrap();
        for p in &pts {
            let m = p.coords[0].norm().max(p.coords[1].norm());
            assert!((m - 1.0).abs() < 1e-9, "max modulus {m}");
        }
    }

    #[test]
    fn hartogs_strata_cover() {
        let d = DomainSpec::HartogsTriangle;
        let strata = boundary_strata(&d, 100, 1).unwrap();
        let labels: Vec<&str> = strata.iter().map(|s| s.label.as_str()).collect();
        assert!(labels.iter().any(|l| l.contains("outer")));
        assert!(labels.iter().any(|l| l.contains("cone")));
        assert!(labels.iter().any(|l| l.contains("bottom")));
        for st in &strata {
            for p in &st.points {
                let v = rho(&d, p).unwrap();
                assert!(v.abs() < 1e-9, "{} point off boundary: {v}", st.label);
            }
        }
    }

    #[test]
    fn punctured_disk_includes_puncture() {
        let d = DomainSpec::PuncturedDisk;
        let pts = boundary_sample(&d, 16, 5).unwrap();
        assert!(pts.iter().any(|p| p.norm() < 1e-12));
    }

    #[test]
    fn interior_points_are_inside() {
        let domains = vec![
            DomainSpec::unit_ball(2),
            DomainSpec::annulus(0.3).unwrap(),
            DomainSpec::HartogsTriangle,
            DomainSpec::cartan_hartogs(SymmetricFamily::TypeI { r: 1, s: 1 }, 0.5, 1).unwrap(),
        ];
        for d in domains {
            let pts = interior_sample(&d, 50, 11).unwrap();
            for p in pts {
                assert!(rho(&d, &p).unwrap() < 0.0, "{}", d.label());
            }
        }
    }
}
