//! Line-oriented text formats for bases, posets and point configurations.
//!
//! ```text
//! # a base file
//! elements: a b c d
//! a b -> c
//! d -> a
//! ```
//!
//! Poset files share the `elements:` header and list relations `x < y`
//! (chains `x < y < z` allowed). Point files start with `dim: d` and list
//! `name: q1 ... qd` with integer or `p/q` coordinates. `#` starts a comment
//! anywhere on a line; blank lines are ignored.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::base::{Implication, ImplicationalBase};
use crate::classes::affine::{PointConfiguration, Rational};
use crate::classes::poset::Poset;
use crate::error::{Error, Result};
use crate::ground::GroundSet;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Lines with comments stripped, paired with 1-based line numbers; blank
/// lines dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
) -> Result<(usize, &'a str)> {
    let (no, line) = lines
        .next()
        .ok_or_else(|| parse_error(1, format!("missing `{key}:` header")))?;
    let value = line
        .strip_prefix(key)
        .and_then(|rest| rest.trim_start().strip_prefix(':'))
        .ok_or_else(|| parse_error(no, format!("expected `{key}:` header")))?;
    Ok((no, value.trim()))
}

fn universe_from(no: usize, value: &str) -> Result<Arc<GroundSet>> {
    let names = value.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty());
    GroundSet::new(names)
        .map(Arc::new)
        .map_err(|e| parse_error(no, e.to_string()))
}

pub fn parse_base(text: &str) -> Result<ImplicationalBase> {
    let mut lines = content_lines(text);
    let (no, value) = header(&mut lines, "elements")?;
    let universe = universe_from(no, value)?;
    let mut imps = Vec::new();
    for (no, line) in lines {
        let (left, right) = line
            .split_once("->")
            .ok_or_else(|| parse_error(no, "expected `premise -> conclusion`"))?;
        let premise = universe
            .parse_set(left)
            .map_err(|e| parse_error(no, e.to_string()))?;
        let conclusion = universe
            .parse_set(right)
            .map_err(|e| parse_error(no, e.to_string()))?;
        imps.push(Implication::new(premise, conclusion));
    }
    ImplicationalBase::new(universe, imps)
}

fn names(universe: &GroundSet, s: crate::set::ElementSet) -> String {
    universe.set_names(s).join(" ")
}

/// Prints implications in stored order.
pub fn print_base(base: &ImplicationalBase) -> String {
    let universe = base.universe();
    let mut out = format!("elements: {}\n", universe.names().join(" "));
    for imp in base.iter() {
        let premise = names(universe, imp.premise());
        let conclusion = names(universe, imp.conclusion());
        let _ = writeln!(out, "{premise} -> {conclusion}");
    }
    out
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = content_lines(text);
    let (no, value) = header(&mut lines, "elements")?;
    let universe = universe_from(no, value)?;
    let mut pairs = Vec::new();
    for (no, line) in lines {
        let chain = line
            .split('<')
            .map(|name| universe.index_of(name.trim()).map_err(|e| parse_error(no, e.to_string())))
            .collect::<Result<Vec<usize>>>()?;
        if chain.len() < 2 {
            return Err(parse_error(no, "expected `x < y`"));
        }
        pairs.extend(chain.windows(2).map(|w| (w[0], w[1])));
    }
    Poset::from_pairs(universe, &pairs)
}

/// Prints the cover pairs.
pub fn print_poset(p: &Poset) -> String {
    let universe = p.universe();
    let mut out = format!("elements: {}\n", universe.names().join(" "));
    for (x, y) in p.covers() {
        let _ = writeln!(out, "{} < {}", universe.name(x), universe.name(y));
    }
    out
}

pub fn parse_points(text: &str) -> Result<PointConfiguration> {
    let mut lines = content_lines(text);
    let (no, value) = header(&mut lines, "dim")?;
    let dim: usize = value
        .parse()
        .map_err(|_| parse_error(no, format!("bad dimension `{value}`")))?;
    let mut names = Vec::new();
    let mut coords = Vec::new();
    for (no, line) in lines {
        let (name, rest) = line
            .split_once(':')
            .ok_or_else(|| parse_error(no, "expected `name: coordinates`"))?;
        let point = rest
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Rational>()
                    .map_err(|_| parse_error(no, format!("bad rational `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if point.len() != dim {
            return Err(Error::DimensionMismatch {
                name: name.trim().to_string(),
                expected: dim,
                found: point.len(),
            });
        }
        names.push(name.trim().to_string());
        coords.push(point);
    }
    let universe = GroundSet::new(names).map_err(|e| parse_error(no, e.to_string()))?;
    PointConfiguration::new(Arc::new(universe), dim, coords)
}

pub fn print_points(pts: &PointConfiguration) -> String {
    let mut out = format!("dim: {}\n", pts.dim());
    for (i, name) in pts.universe().names().iter().enumerate() {
        let coords: Vec<String> = pts.coords(i).iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{name}: {}", coords.join(" "));
    }
    out
}
