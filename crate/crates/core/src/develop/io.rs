//! Base-block text format: a header line `n s`, then one base block per
//! line. Blank lines and `#` comments are ignored.

use super::BaseBlockSet;
use crate::design::io::parse_ints;
use crate::error::{Error, Result};

pub fn from_text(text: &str) -> Result<BaseBlockSet> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `n s` header"))?;
    let head = parse_ints(line, header)?;
    if head.len() != 2 {
        return Err(Error::parse(line, "header must be `n s`"));
    }
    let mut blocks = Vec::new();
    let mut size = None;
    for (line, l) in lines {
        let b = parse_ints(line, l)?;
        match size {
            None => size = Some(b.len()),
            Some(k) if k != b.len() => {
                return Err(Error::parse(line, format!("block has {} points, expected {k}", b.len())));
            }
            _ => {}
        }
        blocks.push(b);
    }
    BaseBlockSet::new(head[0], head[1], blocks)
}

pub fn to_text(bbs: &BaseBlockSet) -> String {
    let mut out = format!("{} {}\n", bbs.n(), bbs.step());
    for b in bbs.blocks() {
        let line: Vec<String> = b.iter().map(|p| p.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
