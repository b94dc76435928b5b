//! Design file formats.
//!
//! Text: first line `n delta`, then one block per line as space-separated
//! ascending integers; blank lines and `#` comments are ignored.
//! JSON: `{"n":…,"delta":…,"blocks":[[…],…]}`.
//!
//! Parsing is lenient (see [`Design::lenient`]) so that broken designs can
//! still be loaded and verified.

use serde::Deserialize;

use super::Design;
use crate::error::{Error, Result};

pub fn to_text(d: &Design) -> String {
    let mut out = format!("{} {}\n", d.n(), d.delta());
    for b in d.blocks() {
        let line: Vec<String> = b.iter().map(|p| p.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn from_text(text: &str) -> Result<Design> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `n delta` header"))?;
    let head = parse_ints(line, header)?;
    if head.len() != 2 {
        return Err(Error::parse(line, "header must be `n delta`"));
    }
    let blocks = lines.map(|(line, l)| parse_ints(line, l)).collect::<Result<Vec<_>>>()?;
    Design::lenient(head[0], head[1], blocks)
}

pub(crate) fn parse_ints(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::parse(line, format!("bad integer `{t}`"))))
        .collect()
}

pub fn to_json(d: &Design) -> String {
    let mut s = serde_json::to_string(d).expect("design serializes");
    s.push('\n');
    s
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDesign {
    n: usize,
    delta: usize,
    blocks: Vec<Vec<usize>>,
}

pub fn from_json(text: &str) -> Result<Design> {
    let raw: RawDesign = serde_json::from_str(text)?;
    Design::lenient(raw.n, raw.delta, raw.blocks)
}

/// Reads either format, choosing JSON when the text starts with `{`.
pub fn from_any(text: &str) -> Result<Design> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}
