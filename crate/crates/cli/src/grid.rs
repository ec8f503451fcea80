//! Grid and list arguments.

use std::fmt;
use std::str::FromStr;

use quasimode::{Momentum, Polarization};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

/// Either one value or `start:stop:count[:log]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridSpec {
    Single(f64),
    Range {
        start: f64,
        stop: f64,
        count: usize,
        spacing: Spacing,
    },
}

impl GridSpec {
    pub fn linear(start: f64, stop: f64, count: usize) -> Self {
        GridSpec::Range {
            start,
            stop,
            count,
            spacing: Spacing::Linear,
        }
    }

    /// Grid points; both endpoints are reproduced exactly.
    pub fn values(&self) -> Vec<f64> {
        match *self {
            GridSpec::Single(v) => vec![v],
            GridSpec::Range {
                start,
                stop,
                count,
                spacing,
            } => {
                let last = count - 1;
                (0..count)
                    .map(|i| {
                        if i == 0 {
                            return start;
                        }
                        if i == last {
                            return stop;
                        }
                        let t = i as f64 / last as f64;
                        match spacing {
                            Spacing::Linear => start + t * (stop - start),
                            Spacing::Log => (start.ln() + t * (stop.ln() - start.ln())).exp(),
                        }
                    })
                    .collect()
            }
        }
    }

    pub fn min(&self) -> f64 {
        match *self {
            GridSpec::Single(v) => v,
            GridSpec::Range { start, .. } => start,
        }
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GridSpec::Single(v) => write!(f, "{v}"),
            GridSpec::Range {
                start,
                stop,
                count,
                spacing,
            } => {
                write!(f, "{start}:{stop}:{count}")?;
                if spacing == Spacing::Log {
                    f.write_str(":log")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_number(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a number"))?;
    if !v.is_finite() {
        return Err(format!("`{s}` is not finite"));
    }
    Ok(v)
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => Ok(GridSpec::Single(parse_number(v)?)),
            [a, b, n] | [a, b, n, _] => {
                let start = parse_number(a)?;
                let stop = parse_number(b)?;
                let count: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| format!("`{n}` is not a point count"))?;
                let spacing = match parts.get(3).map(|t| t.trim()) {
                    None | Some("lin") => Spacing::Linear,
                    Some("log") => Spacing::Log,
                    Some(other) => {
                        return Err(format!("unknown spacing `{other}`, expected `log`"))
                    }
                };
                if count < 2 {
                    return Err(format!("a grid needs at least 2 points, got {count}"));
                }
                if start >= stop {
                    return Err(format!("grid start {start} must be below stop {stop}"));
                }
                if spacing == Spacing::Log && start <= 0.0 {
                    return Err(format!("log grid must start above 0, got {start}"));
                }
                Ok(GridSpec::Range {
                    start,
                    stop,
                    count,
                    spacing,
                })
            }
            _ => Err(format!(
                "`{s}` is neither a number nor start:stop:count[:log]"
            )),
        }
    }
}

/// Comma-separated polarization parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct XiList(pub Vec<Polarization>);

impl FromStr for XiList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|t| Polarization::new(parse_number(t)?).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()
            .map(XiList)
    }
}

/// Comma-separated list of numbers.
pub fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',').map(parse_number).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumList(pub Vec<f64>);

impl FromStr for NumList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_list(s).map(NumList)
    }
}

/// `major,minor,perp`.
pub fn parse_momentum(s: &str) -> Result<Momentum, String> {
    match parse_list(s)?.as_slice() {
        [a, b, c] => Ok(Momentum::new(*a, *b, *c)),
        _ => Err(format!(
            "momentum `{s}` must have three components major,minor,perp"
        )),
    }
}
