use num_complex::Complex64;
use rayon::prelude::*;

use crate::curve::{CurveLift, FormPairings};
use crate::error::{Error, Result};
use crate::exterior::{pluecker_relations_check, MultiIndex};
use crate::nevanlinna::{
    circle_integral_vec, find_breakpoints, height_t, CurveNumerics, QuadratureOptions, TupleForms,
};
use crate::poly::GaussRational;

use super::combinatorics::{distance_one_collection, PairCollection};
use super::hyperplanes::HyperplaneConfig;
use super::profile::{two_row_terms, Evaluator, RadialProfile};
use super::report::{check_radii, MarginReport, RadiusRecord, SweepReport};

fn cartan_profiles(
    x: &CurveLift,
    config: &HyperplaneConfig,
    radii: &[f64],
    opts: &QuadratureOptions,
) -> Result<Vec<RadialProfile>> {
    check_radii(radii)?;
    config.ensure_common_point_free()?;
    Evaluator::new(x, config)?.profiles(radii, opts)
}

/// Every functional at every radius, with the Second Main Theorem margin.
pub fn sweep(x: &CurveLift, config: &HyperplaneConfig, radii: &[f64], opts: &QuadratureOptions) -> Result<SweepReport> {
    let profiles = cartan_profiles(x, config, radii, opts)?;
    Ok(SweepReport {
        n: x.n(),
        records: profiles.iter().map(RadiusRecord::from_profile).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CartanRecord {
    pub margin: MarginReport,
    /// `(n+1)·m_{1,f}(𝐋, r)`, which equals the left side for the selector used.
    pub cross_check: f64,
}

/// `∫ max_J Σ_{i∈J} λ_{H_i}(f) ≤ (n+1)T_f(r) − N_W(r)` over tuples `J` in
/// general position.
pub fn verify_cartan(
    x: &CurveLift,
    config: &HyperplaneConfig,
    radii: &[f64],
    opts: &QuadratureOptions,
) -> Result<Vec<CartanRecord>> {
    let profiles = cartan_profiles(x, config, radii, opts)?;
    Ok(profiles
        .iter()
        .map(|p| CartanRecord {
            margin: RadiusRecord::from_profile(p).margin,
            cross_check: (x.n() + 1) as f64 * p.m[1],
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SecondDifferenceRecord {
    pub d: usize,
    /// Second differences of `m` against those of `T̄`.
    pub margin: MarginReport,
    /// The same inequality as the two-row inequality for `y = X^d`.
    pub route: MarginReport,
}

impl SecondDifferenceRecord {
    pub fn route_diff(&self) -> f64 {
        (self.margin.margin - self.route.margin).abs()
    }
}

fn second_difference_records(profiles: &[RadialProfile], d: usize) -> Vec<SecondDifferenceRecord> {
    profiles
        .iter()
        .map(|p| {
            let lhs = -p.m[d - 1] + 2.0 * p.m[d] - p.m[d + 1];
            let rhs = -p.t_bar[d - 1] + 2.0 * p.t_bar[d] - p.t_bar[d + 1];
            let terms = &p.route[d - 1];
            SecondDifferenceRecord {
                d,
                margin: MarginReport::new(p.r, lhs, rhs, p.converged),
                route: MarginReport::new(p.r, terms.lhs(), terms.rhs(), p.converged),
            }
        })
        .collect()
}

/// `−m_{d−1} + 2m_d − m_{d+1} ≤ −T̄_{d−1} + 2T̄_d − T̄_{d+1}` at one level.
pub fn verify_second_difference(
    x: &CurveLift,
    config: &HyperplaneConfig,
    d: usize,
    radii: &[f64],
    opts: &QuadratureOptions,
) -> Result<Vec<SecondDifferenceRecord>> {
    if d == 0 || d > x.n() {
        return Err(Error::LevelOutOfRange { d, min: 1, max: x.n() });
    }
    check_radii(radii)?;
    let profiles = Evaluator::new(x, config)?.profiles(radii, opts)?;
    Ok(second_difference_records(&profiles, d))
}

/// [`verify_second_difference`] for every `d = 1..=n`, sharing one quadrature per radius.
pub fn verify_second_differences(
    x: &CurveLift,
    config: &HyperplaneConfig,
    radii: &[f64],
    opts: &QuadratureOptions,
) -> Result<Vec<SecondDifferenceRecord>> {
    check_radii(radii)?;
    let profiles = Evaluator::new(x, config)?.profiles(radii, opts)?;
    Ok((1..=x.n())
        .flat_map(|d| second_difference_records(&profiles, d))
        .collect())
}

/// `2m_{1,y} − m_{𝒞,y∧y′} ≤ 2T̄_y − T̄_{y∧y′}` for a balanced collection of
/// two-element subsets.
pub fn verify_two_row(
    y: &CurveLift,
    config: &HyperplaneConfig,
    pairs: &PairCollection,
    radii: &[f64],
    opts: &QuadratureOptions,
) -> Result<Vec<MarginReport>> {
    check_radii(radii)?;
    config.check_dimension(y.n())?;
    if pairs.d() != 1 || pairs.n() != y.n() {
        return Err(Error::InvalidPairs(format!(
            "expected two-element subsets of 0..={}",
            y.n()
        )));
    }
    pairs.ensure_balanced()?;
    let curve = CurveNumerics::through_level(y, 2)?;
    let forms = TupleForms::new(config.forms(), config.tuples(), y.n());
    let ranks = pairs.rank_pairs();
    radii
        .par_iter()
        .map(|&r| {
            let selected = |t: f64| {
                let z = Complex64::from_polar(r, t);
                forms.select(&forms.lambdas(&curve.lift(z))).tuple
            };
            let breakpoints = find_breakpoints(selected, opts.scan_nodes);
            let q = circle_integral_vec(
                |t| {
                    let z = Complex64::from_polar(r, t);
                    let v = curve.lift(z);
                    let sel = forms.select(&forms.lambdas(&v)).tuple;
                    let terms = two_row_terms(forms.compounds(sel, 1), &ranks, &v, &curve.lift_prime(z));
                    vec![terms.lhs(), terms.rhs()]
                },
                2,
                &breakpoints,
                opts,
            );
            Ok(MarginReport::new(r, q.values[0], q.values[1], q.converged))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowthRecord {
    pub d: usize,
    pub margin: MarginReport,
}

/// `T_{d,f}(r) ≤ 2^{d−1} T_f(r) + slack` for `d = 1..=n+1`.
pub fn verify_height_growth(
    x: &CurveLift,
    radii: &[f64],
    slack: f64,
    opts: &QuadratureOptions,
) -> Result<Vec<GrowthRecord>> {
    check_radii(radii)?;
    x.ensure_nondegenerate()?;
    let per_radius: Vec<Vec<GrowthRecord>> = radii
        .par_iter()
        .map(|&r| {
            let t1 = height_t(x, 1, r, opts)?;
            (1..=x.n() + 1)
                .map(|d| {
                    let td = height_t(x, d, r, opts)?;
                    let rhs = 2f64.powi(d as i32 - 1) * t1.value + slack;
                    Ok(GrowthRecord {
                        d,
                        margin: MarginReport::new(r, td.value, rhs, td.converged && t1.converged),
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(radii.len() * (x.n() + 1));
    for d in 1..=x.n() + 1 {
        out.extend(per_radius.iter().map(|row| row[d - 1]));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McQuillanRecord {
    /// `lhs = M(r)`, `rhs = 0`.
    pub margin: MarginReport,
    pub n_ram: f64,
}

/// `M(r) = [T_{f∧f′}(r) − 2T_f(r)] + ∫ max_J μ_J(f′) dθ/2π + N_{Ram,f}(r)`.
pub fn mcquillan_monitor(
    x: &CurveLift,
    config: &HyperplaneConfig,
    radii: &[f64],
    opts: &QuadratureOptions,
) -> Result<Vec<McQuillanRecord>> {
    check_radii(radii)?;
    config.check_dimension(x.n())?;
    let curve = CurveNumerics::through_level(x, 2)?;
    let forms = TupleForms::new(config.forms(), config.tuples(), x.n());
    let ramification = x.ramification_divisor()?;
    let tuples = forms.tuples().len();
    let mu_all = |z: Complex64| {
        let (v, dv) = (curve.lift(z), curve.lift_prime(z));
        (0..tuples).map(|t| forms.mu(t, &v, &dv)).collect::<Vec<_>>()
    };
    radii
        .par_iter()
        .map(|&r| {
            let regime = |t: f64| {
                let mus = mu_all(Complex64::from_polar(r, t));
                let best = (0..tuples).fold(0, |b, k| if mus[k].value > mus[b].value { k } else { b });
                (mus.iter().map(|m| m.chart).collect::<Vec<_>>(), best)
            };
            let breakpoints = find_breakpoints(regime, opts.scan_nodes);
            let q = circle_integral_vec(
                |t| {
                    let z = Complex64::from_polar(r, t);
                    let log_norm = |v: Vec<Complex64>| 0.5 * v.iter().map(Complex64::norm_sqr).sum::<f64>().ln();
                    let mu_max = mu_all(z).iter().map(|m| m.value).fold(f64::NEG_INFINITY, f64::max);
                    vec![log_norm(curve.level(1, z)), log_norm(curve.level(2, z)), mu_max]
                },
                3,
                &breakpoints,
                opts,
            );
            let n_ram = crate::nevanlinna::counting(&ramification, r)?;
            let t1 = q.values[0];
            let t2 = q.values[1] - n_ram;
            let m = (t2 - 2.0 * t1) + q.values[2] + n_ram;
            Ok(McQuillanRecord {
                margin: MarginReport::new(r, m, 0.0, q.converged),
                n_ram,
            })
        })
        .collect()
}

/// One exact identity check; `residual` is zero exactly when it holds.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityRecord {
    pub identity: &'static str,
    pub d: usize,
    pub detail: String,
    pub residual: f64,
}

impl IdentityRecord {
    pub fn holds(&self) -> bool {
        self.residual == 0.0
    }
}

/// Exact identities of the associated curves: the Leibniz relation, the
/// two-row identity for all adjacent pairs (with the forms of the first
/// admissible tuple, or coordinate forms), the Plücker relations, and the
/// two constructions of the ramification divisor.
pub fn verify_identities(x: &CurveLift, config: Option<&HyperplaneConfig>) -> Result<Vec<IdentityRecord>> {
    let n = x.n();
    let forms: Vec<Vec<GaussRational>> = match config {
        Some(c) => {
            c.check_dimension(n)?;
            c.tuple_forms(0)
        }
        None => (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| GaussRational::from_integer(i64::from(i == j)))
                    .collect()
            })
            .collect(),
    };
    let mut out = Vec::new();
    for d in 1..=n {
        let lhs = x.associated(d)?.derivative();
        let rhs = x.leibniz_partner(d)?;
        let residual = lhs
            .coords()
            .iter()
            .zip(rhs.coords())
            .map(|(a, b)| a.residual(b))
            .fold(0.0, f64::max);
        out.push(IdentityRecord {
            identity: "leibniz",
            d,
            detail: format!("coords={}", lhs.coords().len()),
            residual,
        });
    }
    let pairings = FormPairings::new(x, &forms)?;
    for d in 1..=n {
        let collection = distance_one_collection(n, d)?;
        let mut residual: f64 = 0.0;
        for (i, j) in collection.pairs() {
            let (lhs, rhs) = pairings.two_row_identity_sides(i, j)?;
            residual = residual.max(lhs.residual(&rhs));
        }
        out.push(IdentityRecord {
            identity: "two_row",
            d,
            detail: format!("pairs={}", collection.len()),
            residual,
        });
    }
    for d in 1..=n + 1 {
        let holds = pluecker_relations_check(&x.associated(d)?);
        out.push(IdentityRecord {
            identity: "pluecker",
            d,
            detail: format!("subsets={}", MultiIndex::all(n, d).len()),
            residual: if holds { 0.0 } else { 1.0 },
        });
    }
    if n >= 1 {
        let a = x.ramification_gcd()?;
        let b = x.ramification_gcd_by_charts()?;
        out.push(IdentityRecord {
            identity: "ramification",
            d: 2,
            detail: format!("gcd={a}"),
            residual: a.residual(&b),
        });
    }
    Ok(out)
}
