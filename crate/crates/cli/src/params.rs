//! Parameter resolution (flag > config file > default) and sweep ranges.
//!
//! Config files are plain `key = value` lines; `#` starts a comment. A
//! numeric parameter may be a single value or a range `start:stop:step`
//! (inclusive of the endpoint up to rounding); at most two parameters of a
//! run may be ranges, and the sweep is their cross product in declaration
//! order (first range outermost).

use crate::CliError;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Default)]
pub struct Config {
    map: BTreeMap<String, String>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Domain(format!(
                    "config line {}: expected `key = value`",
                    lineno + 1
                ))
            })?;
            map.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Config { map })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.map.get(key).map(String::as_str)
    }

    /// Reject config keys that no parameter of the active subcommand claims.
    pub fn check_known(&self, known: &[&str]) -> Result<(), CliError> {
        for key in self.map.keys() {
            if !known.contains(&key.as_str()) {
                return Err(CliError::Domain(format!("unknown config key `{key}`")));
            }
        }
        Ok(())
    }
}

/// Flag value > config value > built-in default.
pub fn resolve(flag: &Option<String>, key: &str, cfg: &Config, default: &str) -> String {
    flag.clone()
        .or_else(|| cfg.get(key).map(str::to_string))
        .unwrap_or_else(|| default.to_string())
}

#[derive(Debug, Clone)]
pub enum Param {
    Scalar(f64),
    Range { start: f64, stop: f64, step: f64 },
}

impl Param {
    pub fn parse(name: &str, text: &str) -> Result<Self, CliError> {
        let bad = |why: &str| CliError::Domain(format!("parameter `{name}` = `{text}`: {why}"));
        let parts: Vec<&str> = text.split(':').collect();
        let num = |s: &str| -> Result<f64, CliError> {
            s.trim().parse::<f64>().map_err(|_| bad("not a number"))
        };
        match parts.as_slice() {
            [v] => Ok(Param::Scalar(num(v)?)),
            [a, b, c] => {
                let (start, stop, step) = (num(a)?, num(b)?, num(c)?);
                if step == 0.0 {
                    return Err(bad("range step must be nonzero"));
                }
                Ok(Param::Range { start, stop, step })
            }
            _ => Err(bad("expected a number or start:stop:step")),
        }
    }

    pub fn points(&self) -> Vec<f64> {
        match *self {
            Param::Scalar(v) => vec![v],
            Param::Range { start, stop, step } => {
                let mut out = Vec::new();
                let n = ((stop - start) / step + 1e-9).floor();
                if n < 0.0 {
                    return out; // empty range
                }
                for i in 0..=(n as i64) {
                    out.push(start + step * i as f64);
                }
                out
            }
        }
    }

    pub fn is_range(&self) -> bool {
        matches!(self, Param::Range { .. })
    }
}

/// Expand named parameters into sweep points: the cross product over all
/// range parameters (≤ 2), with scalars held fixed. Each element of the
/// result is (sweep-coordinates, full parameter assignment in input order).
pub fn sweep(
    params: &[(&str, Param)],
) -> Result<Vec<(Vec<(String, f64)>, BTreeMap<String, f64>)>, CliError> {
    let ranges: Vec<usize> = params
        .iter()
        .enumerate()
        .filter(|(_, (_, p))| p.is_range())
        .map(|(i, _)| i)
        .collect();
    if ranges.len() > 2 {
        return Err(CliError::Domain(format!(
            "at most two swept parameters, got {}",
            ranges.len()
        )));
    }
    let base: BTreeMap<String, f64> = params
        .iter()
        .filter_map(|(n, p)| match p {
            Param::Scalar(v) => Some((n.to_string(), *v)),
            Param::Range { .. } => None,
        })
        .collect();
    let mut out = Vec::new();
    match ranges.as_slice() {
        [] => out.push((Vec::new(), base)),
        [i] => {
            let (name, p) = &params[*i];
            for v in p.points() {
                let mut assign = base.clone();
                assign.insert(name.to_string(), v);
                out.push((vec![(name.to_string(), v)], assign));
            }
        }
        [i, j] => {
            let (ni, pi) = &params[*i];
            let (nj, pj) = &params[*j];
            for vi in pi.points() {
                for vj in pj.points() {
                    let mut assign = base.clone();
                    assign.insert(ni.to_string(), vi);
                    assign.insert(nj.to_string(), vj);
                    out.push((vec![(ni.to_string(), vi), (nj.to_string(), vj)], assign));
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(out)
}
