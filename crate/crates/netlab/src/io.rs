//! Text formats: peering lists (`.asl`), metric reports (`.report`) and
//! distribution tables (`.csv`). Output is canonical UTF-8 with LF line
//! endings; parsers tolerate CRLF, blank lines and `#` comments.

use std::fmt::Write as _;

use crate::error::{Error, Result, UndefinedReason};
use crate::graph::{Graph, NodeId};
use crate::metrics::{DistributionTable, MetricValue, MetricsReport};
use crate::scalar::Scalar;

/// Parses a peering list: one link per line as two decimal AS numbers.
/// Repeated and reversed pairs collapse to one undirected link.
pub fn parse_peering_list(text: &str) -> Result<Graph> {
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut pair = [0 as NodeId; 2];
        let mut count = 0;
        for tok in line.split_whitespace() {
            if count == 2 {
                count = 3;
                break;
            }
            pair[count] = parse_as_number(tok, i + 1)?;
            count += 1;
        }
        if count != 2 {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected two AS numbers, got {line:?}"),
            });
        }
        edges.push((pair[0], pair[1]));
    }
    Ok(Graph::from_edge_list(&edges))
}

fn parse_as_number(tok: &str, line: usize) -> Result<NodeId> {
    if let Some(rest) = tok.strip_prefix('-') {
        if rest.chars().all(|c| c.is_ascii_digit()) && !rest.is_empty() {
            return Err(Error::Parse {
                line,
                message: format!("negative AS number {tok}"),
            });
        }
    }
    tok.parse::<NodeId>().map_err(|_| Error::Parse {
        line,
        message: format!("invalid AS number {tok:?}"),
    })
}

/// One line per link, smaller endpoint first, lines sorted. Round-trips
/// through [`parse_peering_list`] to an identical graph.
pub fn write_peering_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

const REPORT_KEYS: [&str; 11] = [
    "n",
    "l",
    "k_max",
    "gamma",
    "alpha",
    "n_clique",
    "theta",
    "mean_triangle",
    "ell_star",
    "c_max",
    "disconnected",
];

fn write_value<T: Scalar>(out: &mut String, key: &str, v: MetricValue<T>) {
    match v {
        MetricValue::Defined(x) => writeln!(out, "{key} = {x}").unwrap(),
        MetricValue::Undefined(reason) => {
            writeln!(out, "{key} = undefined({})", reason.code()).unwrap()
        }
    }
}

/// Serializes a report as `key = value` lines, one per metric. Metrics
/// without a value carry their reason code as `undefined(<reason>)`.
pub fn write_report<T: Scalar>(r: &MetricsReport<T>) -> String {
    let mut out = String::new();
    writeln!(out, "n = {}", r.n).unwrap();
    writeln!(out, "l = {}", r.l).unwrap();
    writeln!(out, "k_max = {}", r.k_max).unwrap();
    write_value(&mut out, "gamma", r.gamma);
    write_value(&mut out, "alpha", r.alpha);
    writeln!(out, "n_clique = {}", r.n_clique).unwrap();
    write_value(&mut out, "theta", r.theta);
    writeln!(out, "mean_triangle = {}", r.mean_triangle).unwrap();
    write_value(&mut out, "ell_star", r.ell_star);
    writeln!(out, "c_max = {}", r.c_max).unwrap();
    writeln!(out, "disconnected = {}", r.disconnected).unwrap();
    out
}

fn parse_value<T: Scalar>(raw: &str, line: usize) -> Result<MetricValue<T>> {
    if let Some(inner) = raw.strip_prefix("undefined(").and_then(|s| s.strip_suffix(')')) {
        let reason = UndefinedReason::from_code(inner).ok_or_else(|| Error::Parse {
            line,
            message: format!("unknown reason code {inner:?}"),
        })?;
        return Ok(MetricValue::Undefined(reason));
    }
    let x: f64 = raw.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid number {raw:?}"),
    })?;
    T::from_f64(x)
        .map(MetricValue::Defined)
        .ok_or_else(|| Error::Parse {
            line,
            message: format!("value {raw:?} is not representable"),
        })
}

/// Parses a report document written by [`write_report`]. Every key must
/// appear exactly once; unknown keys are rejected by name.
pub fn read_report<T: Scalar>(text: &str) -> Result<MetricsReport<T>> {
    let mut seen: [Option<(MetricValue<T>, bool)>; 11] = [None; 11];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: i + 1,
            message: format!("expected `key = value`, got {line:?}"),
        })?;
        let key = key.trim();
        let value = value.trim();
        let slot = REPORT_KEYS
            .iter()
            .position(|&k| k == key)
            .ok_or_else(|| Error::Parse {
                line: i + 1,
                message: format!("unknown key `{key}`"),
            })?;
        if seen[slot].is_some() {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("duplicate key `{key}`"),
            });
        }
        let parsed = if key == "disconnected" {
            let flag = match value {
                "true" => true,
                "false" => false,
                _ => {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("invalid flag {value:?}"),
                    })
                }
            };
            (MetricValue::Defined(T::zero()), flag)
        } else {
            (parse_value::<T>(value, i + 1)?, false)
        };
        seen[slot] = Some(parsed);
    }
    let missing: Vec<&str> = REPORT_KEYS
        .iter()
        .zip(&seen)
        .filter(|(_, s)| s.is_none())
        .map(|(&k, _)| k)
        .collect();
    if !missing.is_empty() {
        return Err(Error::Report(format!(
            "missing keys: {}",
            missing.join(", ")
        )));
    }
    let plain = |slot: usize| -> Result<T> {
        match seen[slot].unwrap().0 {
            MetricValue::Defined(x) => Ok(x),
            MetricValue::Undefined(_) => Err(Error::Report(format!(
                "key `{}` cannot be undefined",
                REPORT_KEYS[slot]
            ))),
        }
    };
    Ok(MetricsReport {
        n: plain(0)?,
        l: plain(1)?,
        k_max: plain(2)?,
        gamma: seen[3].unwrap().0,
        alpha: seen[4].unwrap().0,
        n_clique: plain(5)?,
        theta: seen[6].unwrap().0,
        mean_triangle: plain(7)?,
        ell_star: seen[8].unwrap().0,
        c_max: plain(9)?,
        disconnected: seen[10].unwrap().1,
    })
}

/// CSV body for a distribution table: `x,y` header then one row per point
/// in x order, full decimal precision.
pub fn write_distribution_csv<T: Scalar>(table: &DistributionTable<T>) -> String {
    let mut out = String::from("x,y\n");
    for &(x, y) in table.points() {
        writeln!(out, "{x},{y}").unwrap();
    }
    out
}
