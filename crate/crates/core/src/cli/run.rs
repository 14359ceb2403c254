use std::fmt::Write as _;

use crate::curve::CurveLift;
use crate::error::{Error, Result};
use crate::harness::{
    log_spaced, mcquillan_monitor, sweep, verify_cartan, verify_height_growth, verify_identities,
    verify_second_difference, verify_second_differences, verify_two_row, Evaluator, HyperplaneConfig, MarginReport,
    PairCollection,
};
use crate::nevanlinna::QuadratureOptions;
use crate::poly::GaussPoly;

use super::config::RunConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    Cartan,
    #[value(name = "lemma55")]
    TwoRow,
    #[value(name = "prop62")]
    SecondDifference,
    Growth,
    Mcquillan,
    Identities,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Compute,
    Sweep,
    Verify(Check),
}

/// Per-invocation overrides of the config.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Overrides {
    pub r: Option<f64>,
    pub tol: Option<f64>,
}

/// What a command produced. `failures` name hard invariants that failed.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn success(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Formats like C's `%.12g`.
pub fn fmt_g(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        strip_zeros(&format!("{:.*}", (DIGITS - 1 - exp) as usize, x)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn flag(b: bool) -> String {
    if b { "1" } else { "0" }.into()
}

struct Table {
    writer: csv::Writer<Vec<u8>>,
}

impl Table {
    fn new<S: AsRef<str>>(header: &[S]) -> Result<Self> {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        writer.write_record(header.iter().map(AsRef::as_ref))?;
        Ok(Self { writer })
    }

    fn row(&mut self, fields: Vec<String>) -> Result<()> {
        self.writer.write_record(&fields)?;
        Ok(())
    }

    fn finish(self) -> Result<String> {
        let bytes = self.writer.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("fields are UTF-8"))
    }
}

struct Prepared {
    curve: CurveLift,
    hyperplanes: HyperplaneConfig,
    radii: Vec<f64>,
    opts: QuadratureOptions,
}

fn prepare(config: &RunConfig, overrides: Overrides) -> Result<Prepared> {
    let curve = CurveLift::normalize(config.curve.clone())?;
    let hyperplanes = HyperplaneConfig::general_position_tuples(config.hyperplanes.clone(), curve.n())?;
    let tol = overrides.tol.unwrap_or(config.tol);
    if !(tol > 0.0) {
        return Err(Error::Config(format!("tol must be positive, got {tol}")));
    }
    Ok(Prepared {
        radii: log_spaced(config.r_min, config.r_max, config.r_points)?,
        curve,
        hyperplanes,
        opts: QuadratureOptions::with_tol(tol),
    })
}

fn unconverged(radii: impl IntoIterator<Item = (f64, bool)>) -> Vec<String> {
    radii
        .into_iter()
        .filter(|&(_, ok)| !ok)
        .map(|(r, _)| format!("quadrature did not converge at r = {}", fmt_g(r)))
        .collect()
}

fn margin_fields(m: &MarginReport) -> [String; 3] {
    [fmt_g(m.lhs), fmt_g(m.rhs), fmt_g(m.margin)]
}

/// Runs one command. Preconditions that fail are errors; failed hard
/// invariants are reported in [`Outcome::failures`] alongside the output.
pub fn run(command: Command, config: &RunConfig, overrides: Overrides) -> Result<Outcome> {
    match command {
        Command::Check => check(config),
        Command::Compute => compute(config, overrides),
        Command::Sweep => run_sweep(config, overrides),
        Command::Verify(which) => verify(which, config, overrides),
    }
}

fn check(config: &RunConfig) -> Result<Outcome> {
    let mut out = String::new();
    let mut failures = Vec::new();
    let content = GaussPoly::gcd_all(&config.curve).map_err(|_| Error::ZeroCurve)?;
    let curve = CurveLift::normalize(config.curve.clone())?;
    let n = curve.n();
    writeln!(out, "dimension: n = {n}").unwrap();
    if content.is_one() {
        writeln!(out, "primitive: yes").unwrap();
    } else {
        writeln!(out, "primitive: no, common factor {content} divided out").unwrap();
    }
    match curve.ensure_nondegenerate() {
        Ok(()) => writeln!(out, "nondegenerate: yes, Wronskian = {}", curve.wronskian()).unwrap(),
        Err(e) => {
            writeln!(out, "nondegenerate: no, {e}").unwrap();
            failures.push(e.to_string());
        }
    }
    if n >= 1 {
        if let Ok(ram) = curve.ramification_gcd() {
            writeln!(out, "ramification: {ram}").unwrap();
        }
    }
    match HyperplaneConfig::general_position_tuples(config.hyperplanes.clone(), n) {
        Ok(h) => {
            writeln!(out, "hyperplanes: {}", h.q()).unwrap();
            writeln!(out, "independent tuples: {}", h.tuples().len()).unwrap();
            let general = h.in_general_position();
            writeln!(out, "general position: {}", if general { "yes" } else { "no" }).unwrap();
            if let Err(e) = h.ensure_common_point_free() {
                writeln!(out, "common point: yes").unwrap();
                failures.push(e.to_string());
            } else {
                writeln!(out, "common point: no").unwrap();
            }
        }
        Err(e) => {
            writeln!(out, "hyperplanes: {e}").unwrap();
            failures.push(e.to_string());
        }
    }
    Ok(Outcome { output: out, failures })
}

fn compute(config: &RunConfig, overrides: Overrides) -> Result<Outcome> {
    let p = prepare(config, overrides)?;
    let r = overrides.r.unwrap_or(config.r_min);
    let profile = Evaluator::new(&p.curve, &p.hyperplanes)?.profile(r, &p.opts)?;
    let n = profile.n();
    let mut table = Table::new(&["quantity", "value"])?;
    let mut put = |name: String, value: String| table.row(vec![name, value]);
    put("r".into(), fmt_g(r))?;
    for d in 0..=n + 1 {
        put(format!("T_bar_{d}"), fmt_g(profile.t_bar[d]))?;
    }
    for d in 0..=n + 1 {
        put(format!("N_{d}"), fmt_g(profile.n_level[d]))?;
    }
    for d in 1..=n + 1 {
        put(format!("T_{d}"), fmt_g(profile.t(d)))?;
    }
    for d in 0..=n + 1 {
        put(format!("m_{d}"), fmt_g(profile.m[d]))?;
    }
    put("N_W".into(), fmt_g(profile.n_w()))?;
    put("N_Ram".into(), fmt_g(profile.n_ram()))?;
    let rhs = (n + 1) as f64 * profile.t(1) - profile.n_w();
    put("cartan_lhs".into(), fmt_g(profile.cartan_lhs))?;
    put("cartan_rhs".into(), fmt_g(rhs))?;
    put("mu_max".into(), fmt_g(profile.mu_max))?;
    put("nodes".into(), profile.nodes.to_string())?;
    put("converged".into(), flag(profile.converged))?;
    Ok(Outcome {
        output: table.finish()?,
        failures: unconverged([(r, profile.converged)]),
    })
}

fn run_sweep(config: &RunConfig, overrides: Overrides) -> Result<Outcome> {
    let p = prepare(config, overrides)?;
    let report = sweep(&p.curve, &p.hyperplanes, &p.radii, &p.opts)?;
    let n = report.n;
    let mut header = vec!["r".to_string()];
    header.extend((1..=n + 1).map(|d| format!("T_{d}")));
    header.extend((0..=n + 1).map(|d| format!("m_{d}")));
    header.extend(["N_W", "N_Ram", "lhs", "rhs", "margin", "converged"].map(String::from));
    let mut table = Table::new(&header)?;
    for rec in &report.records {
        let mut row = vec![fmt_g(rec.r)];
        row.extend(rec.t.iter().map(|&v| fmt_g(v)));
        row.extend(rec.m.iter().map(|&v| fmt_g(v)));
        row.extend([fmt_g(rec.n_w), fmt_g(rec.n_ram)]);
        row.extend(margin_fields(&rec.margin));
        row.push(flag(rec.margin.converged));
        table.row(row)?;
    }
    Ok(Outcome {
        output: table.finish()?,
        failures: unconverged(report.records.iter().map(|r| (r.r, r.margin.converged))),
    })
}

fn verify(which: Check, config: &RunConfig, overrides: Overrides) -> Result<Outcome> {
    if which == Check::Identities {
        return identities(config);
    }
    let p = prepare(config, overrides)?;
    let (x, h, radii, opts) = (&p.curve, &p.hyperplanes, &p.radii, &p.opts);
    let mut converged = Vec::new();
    let output = match which {
        Check::Cartan => {
            let mut t = Table::new(&["r", "lhs", "rhs", "margin", "cross_check", "converged"])?;
            for rec in verify_cartan(x, h, radii, opts)? {
                let m = rec.margin;
                converged.push((m.r, m.converged));
                let [lhs, rhs, margin] = margin_fields(&m);
                t.row(vec![
                    fmt_g(m.r),
                    lhs,
                    rhs,
                    margin,
                    fmt_g(rec.cross_check),
                    flag(m.converged),
                ])?;
            }
            t.finish()?
        }
        Check::TwoRow => {
            let n = x.n();
            let pairs = config
                .pairs
                .clone()
                .unwrap_or_else(|| (0..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect());
            let collection = PairCollection::from_two_subsets(&pairs, n)?;
            let mut t = Table::new(&["r", "lhs", "rhs", "margin", "converged"])?;
            for m in verify_two_row(x, h, &collection, radii, opts)? {
                converged.push((m.r, m.converged));
                let [lhs, rhs, margin] = margin_fields(&m);
                t.row(vec![fmt_g(m.r), lhs, rhs, margin, flag(m.converged)])?;
            }
            t.finish()?
        }
        Check::SecondDifference => {
            let records = match config.level {
                Some(d) => verify_second_difference(x, h, d, radii, opts)?,
                None => verify_second_differences(x, h, radii, opts)?,
            };
            let mut t = Table::new(&[
                "d",
                "r",
                "lhs",
                "rhs",
                "margin",
                "route_margin",
                "route_diff",
                "converged",
            ])?;
            for rec in &records {
                let m = rec.margin;
                converged.push((m.r, m.converged));
                let [lhs, rhs, margin] = margin_fields(&m);
                t.row(vec![
                    rec.d.to_string(),
                    fmt_g(m.r),
                    lhs,
                    rhs,
                    margin,
                    fmt_g(rec.route.margin),
                    fmt_g(rec.route_diff()),
                    flag(m.converged),
                ])?;
            }
            t.finish()?
        }
        Check::Growth => {
            let mut t = Table::new(&["d", "r", "lhs", "rhs", "margin", "converged"])?;
            for rec in verify_height_growth(x, radii, config.slack, opts)? {
                let m = rec.margin;
                converged.push((m.r, m.converged));
                let [lhs, rhs, margin] = margin_fields(&m);
                t.row(vec![rec.d.to_string(), fmt_g(m.r), lhs, rhs, margin, flag(m.converged)])?;
            }
            t.finish()?
        }
        Check::Mcquillan => {
            let mut t = Table::new(&["r", "lhs", "rhs", "margin", "n_ram", "converged"])?;
            for rec in mcquillan_monitor(x, h, radii, opts)? {
                let m = rec.margin;
                converged.push((m.r, m.converged));
                let [lhs, rhs, margin] = margin_fields(&m);
                t.row(vec![fmt_g(m.r), lhs, rhs, margin, fmt_g(rec.n_ram), flag(m.converged)])?;
            }
            t.finish()?
        }
        Check::Identities => unreachable!("handled above"),
    };
    converged.dedup();
    Ok(Outcome {
        output,
        failures: unconverged(converged),
    })
}

fn identities(config: &RunConfig) -> Result<Outcome> {
    let curve = CurveLift::normalize(config.curve.clone())?;
    let hyperplanes = HyperplaneConfig::general_position_tuples(config.hyperplanes.clone(), curve.n())?;
    let records = verify_identities(&curve, Some(&hyperplanes))?;
    let mut t = Table::new(&["identity", "d", "detail", "residual"])?;
    let mut failures = Vec::new();
    for rec in &records {
        if !rec.holds() {
            failures.push(format!("{} identity fails at d = {}", rec.identity, rec.d));
        }
        t.row(vec![
            rec.identity.to_string(),
            rec.d.to_string(),
            rec.detail.clone(),
            fmt_g(rec.residual),
        ])?;
    }
    Ok(Outcome {
        output: t.finish()?,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_g(0.0), "0");
        assert_eq!(fmt_g(1.0), "1");
        assert_eq!(fmt_g(-2.5), "-2.5");
        assert_eq!(fmt_g(std::f64::consts::PI), "3.14159265359");
        assert_eq!(fmt_g(100.0), "100");
        assert_eq!(fmt_g(1e-5), "1e-05");
        assert_eq!(fmt_g(1.5e-5), "1.5e-05");
        assert_eq!(fmt_g(0.0001), "0.0001");
        assert_eq!(fmt_g(1e12), "1e+12");
        assert_eq!(fmt_g(123456789012.0), "123456789012");
        assert_eq!(fmt_g(0.1 + 0.2), "0.3");
        assert_eq!(fmt_g(999999999999.9), "1e+12");
        assert_eq!(fmt_g(f64::NEG_INFINITY), "-inf");
    }
}
