use serde::{Deserialize, Serialize};
use toml::{Spanned, Value};

use crate::error::{Error, Result};
use crate::poly::{GaussPoly, GaussRational};

/// A validated run description.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    /// Lift coordinates as given, before normalization.
    pub curve: Vec<GaussPoly>,
    pub hyperplanes: Vec<Vec<GaussRational>>,
    pub r_min: f64,
    pub r_max: f64,
    pub r_points: usize,
    pub tol: f64,
    /// Two-element subsets for the two-row inequality; all pairs when absent.
    pub pairs: Option<Vec<(usize, usize)>>,
    pub slack: f64,
    /// Restricts second-difference checks to one level.
    pub level: Option<usize>,
}

impl RunConfig {
    pub fn n(&self) -> usize {
        self.curve.len() - 1
    }
}

pub const DEFAULT_R_MIN: f64 = 2.0;
pub const DEFAULT_R_MAX: f64 = 100.0;
pub const DEFAULT_R_POINTS: usize = 30;
pub const DEFAULT_TOL: f64 = 1e-6;
pub const DEFAULT_SLACK: f64 = 2.0;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    curve: RawCurve,
    hyperplanes: RawHyperplanes,
    sweep: Option<RawSweep>,
    verify: Option<RawVerify>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCurve {
    coords: Vec<Spanned<Value>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHyperplanes {
    forms: Vec<Vec<Spanned<Value>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    r_min: Option<Spanned<Value>>,
    r_max: Option<Spanned<Value>>,
    r_points: Option<Spanned<i64>>,
    tol: Option<Spanned<Value>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVerify {
    pairs: Option<Spanned<Vec<[usize; 2]>>>,
    slack: Option<Spanned<Value>>,
    d: Option<Spanned<usize>>,
}

/// 1-based line and column of a byte offset.
fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, column)
}

fn error_at(text: &str, offset: usize, message: impl Into<String>) -> Error {
    let (line, column) = line_column(text, offset);
    Error::ConfigAt {
        line,
        column,
        message: message.into(),
    }
}

/// Parses a grammar string held in a TOML value, or accepts an integer.
fn parse_entry<T>(
    text: &str,
    value: &Spanned<Value>,
    parse: impl Fn(&str) -> Result<T>,
    from_int: impl Fn(i64) -> T,
) -> Result<T> {
    let start = value.span().start;
    match value.get_ref() {
        Value::Integer(k) => Ok(from_int(*k)),
        Value::String(s) => parse(s).map_err(|e| match e {
            // Offset by one for the opening quote.
            Error::Parse { column, message } => error_at(text, start + column, message),
            other => error_at(text, start, other.to_string()),
        }),
        other => Err(error_at(
            text,
            start,
            format!("expected a string or integer, found {}", other.type_str()),
        )),
    }
}

fn number(text: &str, value: &Spanned<Value>) -> Result<f64> {
    match value.get_ref() {
        Value::Float(x) => Ok(*x),
        Value::Integer(k) => Ok(*k as f64),
        other => Err(error_at(
            text,
            value.span().start,
            format!("expected a number, found {}", other.type_str()),
        )),
    }
}

/// Parses and validates a TOML run description with sections `[curve]`,
/// `[hyperplanes]`, optional `[sweep]` and optional `[verify]`.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| match e.span() {
        Some(span) => error_at(text, span.start, e.message().trim()),
        None => Error::Config(e.message().trim().to_string()),
    })?;
    if raw.curve.coords.len() < 2 {
        return Err(Error::Config("curve needs at least two coordinates".into()));
    }
    let curve = raw
        .curve
        .coords
        .iter()
        .map(|v| parse_entry(text, v, |s| s.parse::<GaussPoly>(), |k| GaussPoly::from_integers(&[k])))
        .collect::<Result<Vec<_>>>()?;
    let width = curve.len();
    let mut hyperplanes = Vec::with_capacity(raw.hyperplanes.forms.len());
    for row in &raw.hyperplanes.forms {
        if row.len() != width {
            let offset = row.first().map_or(0, |v| v.span().start);
            return Err(error_at(
                text,
                offset,
                format!(
                    "hyperplane has {} coefficients but the curve has {width} coordinates",
                    row.len()
                ),
            ));
        }
        hyperplanes.push(
            row.iter()
                .map(|v| parse_entry(text, v, |s| s.parse::<GaussRational>(), GaussRational::from_integer))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    if hyperplanes.is_empty() {
        return Err(Error::Config("at least one hyperplane is required".into()));
    }

    let mut config = RunConfig {
        curve,
        hyperplanes,
        r_min: DEFAULT_R_MIN,
        r_max: DEFAULT_R_MAX,
        r_points: DEFAULT_R_POINTS,
        tol: DEFAULT_TOL,
        pairs: None,
        slack: DEFAULT_SLACK,
        level: None,
    };
    if let Some(sweep) = &raw.sweep {
        if let Some(v) = &sweep.r_min {
            config.r_min = number(text, v)?;
            if !(config.r_min > 0.0) {
                return Err(error_at(text, v.span().start, "r_min must be positive"));
            }
        }
        if let Some(v) = &sweep.r_max {
            config.r_max = number(text, v)?;
        }
        if let Some(v) = &sweep.r_points {
            if *v.get_ref() < 2 {
                return Err(error_at(text, v.span().start, "r_points must be at least 2"));
            }
            config.r_points = *v.get_ref() as usize;
        }
        if let Some(v) = &sweep.tol {
            config.tol = number(text, v)?;
            if !(config.tol > 0.0) {
                return Err(error_at(text, v.span().start, "tol must be positive"));
            }
        }
        if !(config.r_max > config.r_min) {
            let offset = sweep.r_max.as_ref().map_or(0, |v| v.span().start);
            return Err(error_at(text, offset, "r_max must exceed r_min"));
        }
    }
    if let Some(verify) = &raw.verify {
        if let Some(p) = &verify.pairs {
            let n = config.n();
            if let Some(bad) = p.get_ref().iter().find(|[a, b]| a == b || *a > n || *b > n) {
                return Err(error_at(
                    text,
                    p.span().start,
                    format!("pair {bad:?} is not a two-element subset of 0..={n}"),
                ));
            }
            config.pairs = Some(p.get_ref().iter().map(|&[a, b]| (a, b)).collect());
        }
        if let Some(v) = &verify.slack {
            config.slack = number(text, v)?;
        }
        if let Some(d) = &verify.d {
            config.level = Some(*d.get_ref());
        }
    }
    Ok(config)
}

#[derive(Serialize)]
struct OutConfig {
    curve: OutCurve,
    hyperplanes: OutHyperplanes,
    sweep: OutSweep,
    #[serde(skip_serializing_if = "OutVerify::is_empty")]
    verify: OutVerify,
}

#[derive(Serialize)]
struct OutCurve {
    coords: Vec<String>,
}

#[derive(Serialize)]
struct OutHyperplanes {
    forms: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct OutSweep {
    r_min: f64,
    r_max: f64,
    r_points: usize,
    tol: f64,
}

#[derive(Serialize)]
struct OutVerify {
    #[serde(skip_serializing_if = "Option::is_none")]
    pairs: Option<Vec<[usize; 2]>>,
    slack: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
}

impl OutVerify {
    fn is_empty(&self) -> bool {
        self.pairs.is_none() && self.d.is_none() && self.slack == DEFAULT_SLACK
    }
}

/// Renders a config that [`parse_config`] reads back to an equal value.
pub fn serialize_config(config: &RunConfig) -> String {
    let out = OutConfig {
        curve: OutCurve {
            coords: config.curve.iter().map(ToString::to_string).collect(),
        },
        hyperplanes: OutHyperplanes {
            forms: config
                .hyperplanes
                .iter()
                .map(|f| f.iter().map(ToString::to_string).collect())
                .collect(),
        },
        sweep: OutSweep {
            r_min: config.r_min,
            r_max: config.r_max,
            r_points: config.r_points,
            tol: config.tol,
        },
        verify: OutVerify {
            pairs: config.pairs.as_ref().map(|p| p.iter().map(|&(a, b)| [a, b]).collect()),
            slack: config.slack,
            d: config.level,
        },
    };
    toml::to_string(&out).expect("plain data serializes")
}
