//! Stability experiments over nested domain sequences.
//!
//! Increasing sequences converge to the limit domain's squeezing value;
//! decreasing sequences satisfy only the one-sided inequality
//! `limsup_k s_{D_k}(z) ≤ s_D(z)`, and the brackets can exhibit a strict
//! gap (the Hartogs-triangle thickening does).

use super::{squeeze_bracket, SqueezeOptions};
use crate::bracket::Bracket;
use crate::domain::sample::interior_sample;
use crate::domain::{contains, DomainSpec, Membership};
use crate::error::{Result, SqueezeError};
use crate::point::CPoint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StabilityMode {
    Increasing,
    Decreasing,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StabilityRow {
    pub index: usize,
    pub domain: String,
    pub bracket: Bracket,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StabilityReport {
    pub mode: StabilityMode,
    pub rows: Vec<StabilityRow>,
    pub limit: Option<StabilityRow>,
    /// Increasing mode: lower bounds non-decreasing and consistent with the
    /// limit bracket. Decreasing mode: every member lower bound stays below
    /// the limit upper bound.
    pub verdict: bool,
    /// Decreasing mode only: certified strict inequality
    /// (some member upper < limit lower).
    pub strict_gap: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct StabilityOptions {
    pub limit: Option<DomainSpec>,
    /// Per-member squeeze evidence (escape witnesses etc.).
    pub member_opts: Vec<SqueezeOptions>,
    /// Evidence for the limit domain.
    pub limit_opts: Option<SqueezeOptions>,
    pub nesting_samples: usize,
    pub seed: u64,
}

pub fn stability_experiment(
    sequence: &[DomainSpec],
    z: &CPoint,
    mode: StabilityMode,
    opts: &StabilityOptions,
) -> Result<StabilityReport> {
    if sequence.len() < 2 {
        return Err(SqueezeError::InvalidSequence(
            "need at least two domains".into(),
        ));
    }
    let samples = if opts.nesting_samples == 0 {
        200
    } else {
        opts.nesting_samples
    };
    // verify nesting by membership sampling
    for (i, pair) in sequence.windows(2).enumerate() {
        let (small, big) = match mode {
            StabilityMode::Increasing => (&pair[0], &pair[1]),
            StabilityMode::Decreasing => (&pair[1], &pair[0]),
        };
        for p in interior_sample(small, samples, opts.seed ^ (i as u64))? {
            if contains(big, &p)? == Membership::Outside {
                return Err(SqueezeError::InvalidSequence(format!(
                    "nesting violated between members {i} and {} at {:?}",
                    i + 1,
                    p.coords
                )));
            }
        }
    }
    for d in sequence {
        if contains(d, z)? != Membership::Inside {
            return Err(SqueezeError::InvalidSequence(
                "probe point must lie inside every member".into(),
            ));
        }
    }

    // the trivial lower bound shares one diameter across the sequence so
    // monotone distances stay monotone after division
    let mut shared_diam: f64 = 0.0;
    for d in sequence {
        shared_diam = shared_diam.max(crate::domain::geometry::diameter(d)?);
    }
    if let Some(limit) = &opts.limit {
        shared_diam = shared_diam.max(crate::domain::geometry::diameter(limit)?);
    }

    let mut rows = Vec::with_capacity(sequence.len());
    for (i, d) in sequence.iter().enumerate() {
        let mut o = opts.member_opts.get(i).cloned().unwrap_or_default();
        if o.diam_override.is_none() {
            o.diam_override = Some(shared_diam);
        }
        let sb = squeeze_bracket(d, z, &o)?;
        rows.push(StabilityRow {
            index: i,
            domain: d.label(),
            bracket: sb.bracket,
        });
    }
    let limit_row = match &opts.limit {
        Some(limit) => {
            let o = opts.limit_opts.clone().unwrap_or_default();
            let sb = squeeze_bracket(limit, z, &o)?;
            Some(StabilityRow {
                index: rows.len(),
                domain: limit.label(),
                bracket: sb.bracket,
            })
        }
        None => None,
    };

    let mut notes = Vec::new();
    let mut verdict = true;
    let mut strict_gap = false;
    match mode {
        StabilityMode::Increasing => {
            for pair in rows.windows(2) {
                if pair[1].bracket.lower < pair[0].bracket.lower - 1e-9 {
                    verdict = false;
                    notes.push(format!(
                        "lower bound decreased between members {} and {}",
                        pair[0].index, pair[1].index
                    ));
                }
            }
            if let Some(lim) = &limit_row {
                let max_lower = rows.iter().map(|r| r.bracket.lower).fold(0.0f64, f64::max);
                if max_lower > lim.bracket.upper + 1e-9 {
                    verdict = false;
                    notes.push("member lower bound exceeds the limit upper bound".into());
                }
            }
        }
        StabilityMode::Decreasing => {
            if let Some(lim) = &limit_row {
                for r in &rows {
                    if r.bracket.lower > lim.bracket.upper + 1e-9 {
                        verdict = false;
                        notes.push(format!(
                            "member {} lower bound exceeds the limit upper bound",
                            r.index
                        ));
                    }
                }
                let min_upper = rows
                    .iter()
                    .map(|r| r.bracket.upper)
                    .fold(f64::INFINITY, f64::min);
                if min_upper < lim.bracket.lower - 1e-9 {
                    strict_gap = true;
                    notes.push(format!(
                        "strict inequality exhibited: member upper {min_upper:.6} < limit lower {:.6}",
                        lim.bracket.lower
                    ));
                }
            } else {
                notes.push("no limit domain supplied; one-sided check skipped".into());
            }
        }
    }

    Ok(StabilityReport {
        mode,
        rows,
        limit: limit_row,
        verdict,
        strict_gap,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn increasing_balls_all_exact_one() {
        let seq: Vec<DomainSpec> = (1..=5)
            .map(|k| DomainSpec::Ball {
                center: CPoint::zero(1),
                radius: 1.0 - 1.0 / (k as f64 + 1.0),
            })
            .collect();
        let report = stability_experiment(
            &seq,
            &CPoint::from_re(&[0.0]),
            StabilityMode::Increasing,
            &StabilityOptions {
                limit: Some(DomainSpec::unit_disk()),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(report.verdict);
        for row in &report.rows {
            assert_eq!(row.bracket.lower, 1.0);
            assert_eq!(row.bracket.upper, 1.0);
        }
    }

    #[test]
    fn nesting_violation_detected() {
        let seq = vec![DomainSpec::unit_disk(), DomainSpec::annulus(0.5).unwrap()];
        let r = stability_experiment(
            &seq,
            &CPoint::from_re(&[0.7]),
            StabilityMode::Increasing,
            &StabilityOptions::default(),
        );
        assert!(matches!(r, Err(SqueezeError::InvalidSequence(_))));
    }
}
