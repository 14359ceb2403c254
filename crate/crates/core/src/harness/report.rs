use crate::error::{Error, Result};

use super::profile::RadialProfile;

/// Both sides of an inequality `lhs ≤ rhs` at one radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MarginReport {
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs`; negative values are violations.
    pub margin: f64,
    pub converged: bool,
}

impl MarginReport {
    pub fn new(r: f64, lhs: f64, rhs: f64, converged: bool) -> Self {
        Self {
            r,
            lhs,
            rhs,
            margin: rhs - lhs,
            converged,
        }
    }

    /// `(lhs − rhs) / max(1, log r)`.
    pub fn normalized_excess(&self) -> f64 {
        -self.margin / self.r.ln().max(1.0)
    }
}

/// One row of a sweep: heights, proximities, counting functions and the
/// margin of the Second Main Theorem at one radius.
#[derive(Clone, Debug, PartialEq)]
pub struct RadiusRecord {
    pub r: f64,
    /// `T_{d,f}(r)` for `d = 1..=n+1`.
    pub t: Vec<f64>,
    /// `m_{d,f}(𝐋, r)` for `d = 0..=n+1`.
    pub m: Vec<f64>,
    pub n_w: f64,
    pub n_ram: f64,
    pub margin: MarginReport,
}

impl RadiusRecord {
    pub fn from_profile(p: &RadialProfile) -> Self {
        let n = p.n();
        let rhs = (n + 1) as f64 * p.t(1) - p.n_w();
        Self {
            r: p.r,
            t: (1..=n + 1).map(|d| p.t(d)).collect(),
            m: p.m.clone(),
            n_w: p.n_w(),
            n_ram: p.n_ram(),
            margin: MarginReport::new(p.r, p.cartan_lhs, rhs, p.converged),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    pub n: usize,
    pub records: Vec<RadiusRecord>,
}

impl SweepReport {
    pub fn all_converged(&self) -> bool {
        self.records.iter().all(|r| r.margin.converged)
    }

    pub fn margins(&self) -> Vec<MarginReport> {
        self.records.iter().map(|r| r.margin).collect()
    }
}

/// Radii where an inequality failed, with the grid mass they carry: each
/// grid point owns half of each neighbouring interval.
#[derive(Clone, Debug, PartialEq)]
pub struct ExceptionalSet {
    pub radii: Vec<f64>,
    pub measure: f64,
}

pub fn exceptional_set(reports: &[MarginReport]) -> ExceptionalSet {
    let mut radii = Vec::new();
    let mut measure = 0.0;
    for (k, rep) in reports.iter().enumerate() {
        if !(rep.margin < 0.0) {
            continue;
        }
        radii.push(rep.r);
        let left = if k > 0 { (rep.r - reports[k - 1].r) / 2.0 } else { 0.0 };
        let right = reports.get(k + 1).map_or(0.0, |next| (next.r - rep.r) / 2.0);
        measure += left + right;
    }
    ExceptionalSet { radii, measure }
}

/// `points` radii log-spaced from `r_min` to `r_max` inclusive.
pub fn log_spaced(r_min: f64, r_max: f64, points: usize) -> Result<Vec<f64>> {
    if !(r_min > 0.0) || !r_min.is_finite() {
        return Err(Error::NonPositiveRadius(r_min));
    }
    if points < 2 || !(r_max > r_min) {
        return Err(Error::Config(format!(
            "need r_max > r_min and at least two radii, got [{r_min}, {r_max}] with {points}"
        )));
    }
    let (a, b) = (r_min.ln(), r_max.ln());
    Ok((0..points)
        .map(|k| {
            if k + 1 == points {
                r_max
            } else {
                (a + (b - a) * k as f64 / (points - 1) as f64).exp()
            }
        })
        .collect())
}

/// Radii must be positive and strictly increasing.
pub fn check_radii(radii: &[f64]) -> Result<()> {
    for &r in radii {
        crate::nevanlinna::check_radius(r)?;
    }
    if radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Config("radii must be strictly increasing".into()));
    }
    Ok(())
}
