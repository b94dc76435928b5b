use serde::{Deserialize, Serialize};

use super::{neighborhood_blocks, PairCounts};
use crate::error::Result;
use crate::graph::Graph;

/// How a pair is accounted for by the neighbourhood blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairClass {
    /// An edge of the graph, covered by two neighbourhood blocks.
    Edge,
    /// A non-edge at distance two, covered once by a neighbourhood block.
    Neighbourhood,
    /// Left for the remainder blocks.
    Remainder,
}

/// Classification of all pairs of a graph against its neighbourhood blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTable {
    n: usize,
    classes: Vec<PairClass>,
}

/// Builds the pair table of a regular graph with girth at least 5.
pub fn pair_table(g: &Graph) -> Result<PairTable> {
    let blocks = neighborhood_blocks(g)?;
    let n = g.order();
    let mut counts = PairCounts::new(n);
    for b in &blocks {
        counts.add_block(b);
    }
    let mut classes = vec![PairClass::Remainder; n * n.saturating_sub(1) / 2];
    for (i, j) in counts.pairs() {
        classes[PairCounts::index(i, j)] = match (g.has_edge(i, j), counts.get(i, j)) {
            (true, _) => PairClass::Edge,
            (false, 0) => PairClass::Remainder,
            (false, _) => PairClass::Neighbourhood,
        };
    }
    Ok(PairTable { n, classes })
}

impl PairTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class(&self, i: usize, j: usize) -> PairClass {
        self.classes[PairCounts::index(i, j)]
    }

    /// Number of pairs in each class: (edge, neighbourhood, remainder).
    pub fn counts(&self) -> (usize, usize, usize) {
        let count = |c| self.classes.iter().filter(|&&x| x == c).count();
        (count(PairClass::Edge), count(PairClass::Neighbourhood), count(PairClass::Remainder))
    }

    /// Upper-triangular occurrence array. Pairs inside some neighbourhood
    /// block print as `X`, remainder pairs as `-`. Labels are single
    /// characters (`0-9`, then `A`, `B`, …) up to 36 points and right-aligned
    /// decimals beyond that. Trailing blanks are trimmed.
    pub fn render(&self) -> String {
        let n = self.n;
        let width = if n <= 36 { 1 } else { (n - 1).to_string().len() };
        let label = |v: usize| -> String {
            if width == 1 {
                char::from_digit(v as u32, 36).unwrap().to_ascii_uppercase().to_string()
            } else {
                format!("{v:>width$}")
            }
        };
        let cell = |s: &str| format!(" {s:>width$}");
        let mut out = String::new();
        if n < 2 {
            return out;
        }
        let mut header = " ".repeat(width);
        for j in 1..n {
            header.push_str(&cell(&label(j)));
        }
        out.push_str(header.trim_end());
        out.push('\n');
        for i in 0..n - 1 {
            let mut row = label(i);
            for j in 1..n {
                let sym = if j <= i {
                    " "
                } else {
                    match self.class(i, j) {
                        PairClass::Edge | PairClass::Neighbourhood => "X",
                        PairClass::Remainder => "-",
                    }
                };
                row.push_str(&cell(sym));
            }
            out.push_str(row.trim_end());
            out.push('\n');
        }
        out
    }
}
