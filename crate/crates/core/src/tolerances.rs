//! Default numeric tolerances and sampling budgets.
//!
//! Collected in one place so every threshold used by the library is
//! documented and overridable at the call sites that accept options.

/// Tolerance on the defining value below which a point counts as lying
/// on the boundary.
pub const BOUNDARY_TOL: f64 = 1e-8;

/// Eigenvalue tolerance for symmetric-domain membership tests
/// (smallest eigenvalue of `I − Z Zᴴ`).
pub const EIG_TOL: f64 = 1e-10;

/// Slack permitted in the bracket invariant `lower ≤ upper`.
pub const BRACKET_SLACK: f64 = 1e-12;

/// Base step for central finite differences; scaled by `1 + |p|`.
pub const FD_STEP: f64 = 1e-5;

/// Stencil step for the degree-2 Taylor fit used by expansion extraction.
pub const EXPANSION_STEP: f64 = 1e-4;

/// Boundary samples used by the certified image-radius estimator.
pub const EMBEDDING_SAMPLES: usize = 4096;

/// Boundary samples used by the enclosing-ball containment test.
pub const ENCLOSING_SAMPLES: usize = 8192;

/// Bisection tolerance for the enclosing-ball radius.
pub const ENCLOSING_BISECT_TOL: f64 = 1e-6;

/// Radius cap (in units of the domain diameter) past which the
/// enclosing radius is reported as infinite.
pub const ENCLOSING_RADIUS_CAP: f64 = 1e6;

/// A second closure point within this distance of the tangent plane…
pub const TANGENCY_PLANE_TOL: f64 = 1e-6;
/// …and farther than this from the base point disqualifies g.s.c.
pub const TANGENCY_AWAY_TOL: f64 = 1e-3;

/// Monte-Carlo directions for measure-of-metric volume estimation.
pub const MC_DIRECTIONS: usize = 1 << 16;

/// Monte-Carlo half-widths are reported at this many standard errors.
pub const MC_SIGMAS: f64 = 3.0;

/// Relative tolerance for measure comparison checks (on top of
/// Monte-Carlo half-widths).
pub const COMPARISON_TOL: f64 = 1e-6;

/// Trapezoid panels for distance upper bounds along a segment.
pub const SEGMENT_PANELS: usize = 512;

/// Uniform constant `λ` bounding the shear coefficients in the
/// normalization pipeline.
pub const PIPELINE_LAMBDA: f64 = 0.25;

/// Default degree for the polynomial analytic-disc search.
pub const DISC_SEARCH_DEGREE: usize = 4;

/// Safety shrink applied to analytic discs before certifying an upper bound.
pub const DISC_SEARCH_SHRINK: f64 = 0.999;

/// Boundary circle samples checked during the analytic-disc search.
pub const DISC_SEARCH_CIRCLE: usize = 256;

/// Escape witnesses must reach within this boundary distance.
pub const ESCAPE_DIST_TOL: f64 = 1e-6;
