//! Cycle designs for `n ≡ 5 (mod 6)` from difference triples.
//!
//! With `n = 6m + 5` the base block `{0, 1, n−1}` supplies difference 1
//! twice and 2 once; the remaining differences `3..=(n−1)/2` are supplied by
//! `m` base blocks `(0, x, z)`, whose differences `x`, `z − x`, `z` together
//! partition [`target_differences`]. When `m ≡ 2, 3 (mod 4)` the target uses
//! `3m + 3` in place of `3m + 2`; the two are the same circular difference.
//!
//! Triples are found as an exact cover over a (hooked) Langford layout:
//! difference `i ∈ 3..m+3` is placed at positions `p < p + i` of
//! `1..=2m` (or `1..=2m+1` minus `2m` when hooked), and gives the triple
//! `{i, p + m + 2, p + i + m + 2}`.

use serde::{Deserialize, Serialize};

use crate::design::{Block, Design};
use crate::develop::{builtin_table, develop, BaseBlockSet, Family};
use crate::error::{Error, Result};
use crate::graph::{cycle, Graph};
use crate::search::dlx::{Dlx, End};

const TRIPLE_BUDGET: u64 = 200_000_000;

/// `m` triples `(x, z)` standing for base blocks `{0, x, z}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceTripleSet {
    pub m: usize,
    pub triples: Vec<(usize, usize)>,
}

impl DifferenceTripleSet {
    /// Every difference `x`, `z − x`, `z`, sorted.
    pub fn differences(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.triples.iter().flat_map(|&(x, z)| [x, z - x, z]).collect();
        out.sort_unstable();
        out
    }

    pub fn is_valid(&self) -> bool {
        self.m >= 5
            && self.triples.len() == self.m
            && self.triples.iter().all(|&(x, z)| 0 < x && x < z)
            && self.differences() == target_differences(self.m).unwrap_or_default()
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 5 {
        return Err(Error::InvalidParameter(format!("difference triples need m >= 5, got {m}")));
    }
    Ok(())
}

/// `{3, …, 3m+2}` when `m ≡ 0, 1 (mod 4)`, otherwise `{3, …, 3m+1} ∪ {3m+3}`.
pub fn target_differences(m: usize) -> Result<Vec<usize>> {
    check_m(m)?;
    Ok(if m % 4 <= 1 { (3..=3 * m + 2).collect() } else { (3..=3 * m + 1).chain([3 * m + 3]).collect() })
}

/// Finds a partition of the target differences into `m` triples
/// `{a, b, a + b}`. Deterministic.
pub fn find_difference_triples(m: usize) -> Result<DifferenceTripleSet> {
    check_m(m)?;
    let hooked = m % 4 >= 2;
    let last = if hooked { 2 * m + 1 } else { 2 * m };
    let positions: Vec<usize> = (1..=last).filter(|&p| !(hooked && p == 2 * m)).collect();
    let slot = |p: usize| positions.binary_search(&p).ok();
    // items: differences, then positions
    let diffs: Vec<usize> = (3..m + 3).collect();
    let mut options = Vec::new();
    let mut placements = Vec::new();
    for (di, &i) in diffs.iter().enumerate() {
        for &p in &positions {
            if let (Some(a), Some(b)) = (slot(p), slot(p + i)) {
                options.push(vec![di, m + a, m + b]);
                placements.push((i, p));
            }
        }
    }
    let mut found = None;
    let run = Dlx::new(m + positions.len(), &options).search(TRIPLE_BUDGET, |sol| {
        found = Some(sol.to_vec());
        false
    });
    let chosen = match (run.end, found) {
        (End::Halted, Some(sol)) => sol,
        _ => return Err(Error::SearchExhausted(m)),
    };
    let shift = m + 2;
    let mut triples: Vec<(usize, usize)> = chosen
        .into_iter()
        .map(|k| {
            let (i, p) = placements[k];
            let (a, c) = (p + shift, p + i + shift);
            (i.min(a), c)
        })
        .collect();
    triples.sort_unstable();
    let set = DifferenceTripleSet { m, triples };
    debug_assert!(set.is_valid());
    if !set.is_valid() {
        return Err(Error::VerificationFailed(format!("difference triples for m = {m} do not partition the target")));
    }
    Ok(set)
}

/// The generator set of the difference route: `{0, 1, n−1}` and one block
/// `{0, x, z}` per triple, developed with step 1.
pub fn generator_set(n: usize) -> Result<BaseBlockSet> {
    if n < 35 || n % 6 != 5 {
        return Err(Error::InvalidParameter(format!("the difference route needs n ≡ 5 (mod 6), n >= 35, got {n}")));
    }
    let t = find_difference_triples((n - 5) / 6)?;
    let mut blocks: Vec<Block> = vec![vec![0, 1, n - 1]];
    blocks.extend(t.triples.iter().map(|&(x, z)| vec![0, x, z]));
    BaseBlockSet::new(n, 1, blocks)
}

/// The base blocks that generate the design for `C_n`: a builtin table or
/// the difference route.
pub fn cycle_generators(n: usize) -> Result<BaseBlockSet> {
    match n {
        9 | 11 => Err(Error::NoDesignExists(n)),
        _ if n < 5 || !(n % 6 == 3 || n % 6 == 5) => {
            Err(Error::InvalidParameter(format!("C{n} is not admissible: need n ≡ 3, 5 (mod 6), n >= 5")))
        }
        5 | 17 | 23 | 29 | 15 | 21 | 27 | 33 | 39 => builtin_table(n, Family::Delta2),
        _ if n % 6 == 5 => generator_set(n),
        _ => Err(Error::Unsupported(format!(
            "C{n} with n ≡ 3 (mod 6) beyond 39 needs a group divisible design; use wilson_fill"
        ))),
    }
}

/// A verified design for the cycle `C_n`, with the cycle itself.
pub fn cycle_design(n: usize) -> Result<(Design, Graph)> {
    let design = develop(&cycle_generators(n)?)?;
    let g = cycle(n)?;
    let report = crate::design::verify(&design, &g)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::VerificationFailed(format!("C{n}: {v}")));
    }
    Ok((design, g))
}
