//! Reference tables of the Penrose rays and bases, bundled and overridable from disk.

use std::path::Path;

use thiserror::Error;

use crate::numerics::{Eisenstein, ExactRay, NumericsError};
use crate::penrose::RayLabel;

pub const TABLE1: &str = include_str!("../data/table1.txt");
pub const TABLE3: &str = include_str!("../data/table3.txt");

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn parse_err(line: usize, msg: impl Into<String>) -> GoldenError {
    GoldenError::Parse {
        line,
        msg: msg.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

pub fn parse_unit(tok: &str) -> Option<Eisenstein> {
    Some(match tok {
        "0" => Eisenstein::ZERO,
        "1" => Eisenstein::ONE,
        "-1" => -Eisenstein::ONE,
        "w" => Eisenstein::OMEGA,
        "-w" => -Eisenstein::OMEGA,
        "w2" => Eisenstein::OMEGA2,
        "-w2" => -Eisenstein::OMEGA2,
        _ => return None,
    })
}

pub fn parse_table1(text: &str) -> Result<Vec<(RayLabel, ExactRay)>, GoldenError> {
    let mut out = Vec::new();
    for (line, toks) in content_lines(text) {
        if toks.len() != 5 {
            return Err(parse_err(
                line,
                format!("expected a label and 4 components, got {} fields", toks.len()),
            ));
        }
        let label: RayLabel = toks[0]
            .parse()
            .map_err(|_| parse_err(line, format!("bad label {:?}", toks[0])))?;
        let comps = toks[1..]
            .iter()
            .map(|t| parse_unit(t).ok_or_else(|| parse_err(line, format!("bad component {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let ray = ExactRay::new(comps).map_err(|e: NumericsError| parse_err(line, e.to_string()))?;
        out.push((label, ray));
    }
    Ok(out)
}

pub fn parse_table3(text: &str) -> Result<Vec<Vec<RayLabel>>, GoldenError> {
    let mut out = Vec::new();
    for (line, toks) in content_lines(text) {
        if toks.len() != 4 {
            return Err(parse_err(line, format!("expected 4 labels, got {}", toks.len())));
        }
        let basis = toks
            .iter()
            .map(|t| t.parse().map_err(|_| parse_err(line, format!("bad label {t:?}"))))
            .collect::<Result<Vec<RayLabel>, _>>()?;
        out.push(basis);
    }
    Ok(out)
}

pub fn read_file(path: &Path) -> Result<String, GoldenError> {
    std::fs::read_to_string(path).map_err(|source| GoldenError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn table1() -> Vec<(RayLabel, ExactRay)> {
    parse_table1(TABLE1).expect("bundled table is well formed")
}

pub fn table3() -> Vec<Vec<RayLabel>> {
    parse_table3(TABLE3).expect("bundled table is well formed")
}

/// Differences between a reference ray table and a computed one, keyed by label.
pub fn diff_ray_tables(expected: &[(RayLabel, ExactRay)], actual: &[(RayLabel, ExactRay)]) -> Vec<String> {
    let mut diffs = Vec::new();
    for (label, want) in expected {
        match actual.iter().find(|(l, _)| l == label) {
            None => diffs.push(format!("{label}: missing from computed rays")),
            Some((_, got)) if got != want => diffs.push(format!("{label}: expected {want}, computed {got}")),
            _ => {}
        }
    }
    for (label, got) in actual {
        if !expected.iter().any(|(l, _)| l == label) {
            diffs.push(format!("{label}: computed {got} but absent from reference"));
        }
    }
    diffs
}
