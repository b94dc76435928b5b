//! Refutation procedures. Each can prove that no design exists; none of
//! them ever claims existence.

use super::candidates::{candidate_blocks, CandidateSet};
use super::{SearchOutcome, Stage, Status};
use crate::design::Witness;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Headline witness for a failed coverage check: the smallest point with an
/// uncoverable remainder pair, paired with its largest such partner; plus
/// the number of uncoverable pairs.
pub(crate) fn coverage_witness(set: &CandidateSet) -> Option<(Witness, usize)> {
    let uncovered = set.uncovered();
    let &(i, _) = uncovered.first()?;
    let j = uncovered.iter().filter(|&&(a, _)| a == i).map(|&(_, b)| b).max()?;
    Some((Witness::Pair(i, j), uncovered.len()))
}

/// Refutes when some remainder pair lies in no candidate block.
pub fn algorithm_a(g: &Graph) -> Result<SearchOutcome> {
    let set = candidate_blocks(g)?;
    Ok(match coverage_witness(&set) {
        Some((witness, missing)) => {
            let mut out = SearchOutcome::new(
                Status::NotExists,
                Stage::A,
                format!("{missing} of {} remainder pairs lie in no candidate", set.universe().len()),
            );
            out.certificate.witness = Some(witness);
            out
        }
        None => SearchOutcome::new(Status::Inconclusive, Stage::A, "every remainder pair lies in some candidate"),
    })
}

/// Calls `f` on every partition of `items` into parts of size `part`, in
/// canonical order: each part is sorted and starts with the smallest item
/// not yet used. `f` returns `false` to stop. Returns the number of
/// partitions visited.
pub fn for_each_partition<F: FnMut(&[Vec<usize>]) -> bool>(items: &[usize], part: usize, mut f: F) -> u64 {
    assert!(part > 0 && items.len().is_multiple_of(part), "items must split into parts of size {part}");
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    let mut used = vec![false; sorted.len()];
    let mut parts = Vec::new();
    let mut visited = 0;
    partition_rec(&sorted, part, &mut used, &mut parts, &mut visited, &mut f);
    visited
}

fn partition_rec<F: FnMut(&[Vec<usize>]) -> bool>(
    items: &[usize],
    part: usize,
    used: &mut [bool],
    parts: &mut Vec<Vec<usize>>,
    visited: &mut u64,
    f: &mut F,
) -> bool {
    let Some(first) = used.iter().position(|&u| !u) else {
        *visited += 1;
        return f(parts);
    };
    used[first] = true;
    let rest: Vec<usize> = (first + 1..items.len()).filter(|&i| !used[i]).collect();
    let mut choice = vec![first];
    let keep_going = choose(items, part, &rest, 0, used, &mut choice, parts, visited, f);
    used[first] = false;
    keep_going
}

#[allow(clippy::too_many_arguments)]
fn choose<F: FnMut(&[Vec<usize>]) -> bool>(
    items: &[usize],
    part: usize,
    rest: &[usize],
    from: usize,
    used: &mut [bool],
    choice: &mut Vec<usize>,
    parts: &mut Vec<Vec<usize>>,
    visited: &mut u64,
    f: &mut F,
) -> bool {
    if choice.len() == part {
        parts.push(choice.iter().map(|&i| items[i]).collect());
        let keep_going = partition_rec(items, part, used, parts, visited, f);
        parts.pop();
        return keep_going;
    }
    for a in from..rest.len() {
        let i = rest[a];
        used[i] = true;
        choice.push(i);
        let keep_going = choose(items, part, rest, a + 1, used, choice, parts, visited, f);
        choice.pop();
        used[i] = false;
        if !keep_going {
            return false;
        }
    }
    true
}

/// Pair membership in the current remainder set, as a dense matrix.
struct PairSet {
    n: usize,
    bits: Vec<bool>,
}

impl PairSet {
    fn from_candidates(set: &CandidateSet) -> Self {
        let n = set.n();
        let mut bits = vec![false; n * n];
        for &(i, j) in set.universe() {
            bits[i * n + j] = true;
            bits[j * n + i] = true;
        }
        PairSet { n, bits }
    }

    fn has(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits[i * self.n + j] = value;
        self.bits[j * self.n + i] = value;
    }

    fn partners(&self, p: usize) -> Vec<usize> {
        (0..self.n).filter(|&q| self.has(p, q)).collect()
    }

    /// Whether `{t} ∪ part` is a usable block, given that every `t`–`part`
    /// pair is already known to be present.
    fn closes(&self, part: &[usize]) -> bool {
        part.iter().enumerate().all(|(a, &x)| part[a + 1..].iter().all(|&y| self.has(x, y)))
    }

    /// Pairs of the blocks `{t} ∪ part` over all parts.
    fn block_pairs(t: usize, parts: &[Vec<usize>]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for part in parts {
            let mut block = part.clone();
            block.push(t);
            for (a, &x) in block.iter().enumerate() {
                for &y in &block[a + 1..] {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// For `n = (δ+1)²`: point 0 has exactly `2δ` remainder partners `T`, so
/// its two remainder blocks are `{0} ∪ T₁` and `{0} ∪ T₂` for a split of
/// `T` into halves. Refutes when no split gives two valid blocks.
pub fn algorithm_c(g: &Graph) -> Result<SearchOutcome> {
    let delta = g.require_regular_girth5()?;
    let n = g.order();
    if n != (delta + 1) * (delta + 1) || delta == 0 {
        return Err(Error::PreconditionViolated(format!(
            "algorithm C needs n = (δ+1)², got n = {n}, δ = {delta}"
        )));
    }
    let set = candidate_blocks(g)?;
    let pairs = PairSet::from_candidates(&set);
    let t = pairs.partners(0);
    assert_eq!(t.len(), 2 * delta, "point 0 must have 2δ remainder partners");
    let mut valid = 0u64;
    let examined = for_each_partition(&t, delta, |parts| {
        if parts.iter().all(|p| pairs.closes(p)) {
            valid += 1;
        }
        true
    });
    let mut out = if valid == 0 {
        SearchOutcome::new(Status::NotExists, Stage::C, "no split of the remainder partners of 0 gives two blocks")
    } else {
        SearchOutcome::new(Status::Inconclusive, Stage::C, format!("{valid} splits give two valid blocks"))
    };
    out.certificate.witness = Some(Witness::Point(0));
    out.certificate.examined = Some(examined);
    Ok(out)
}

/// For cubic graphs on 22 points: point 0 has 12 remainder partners, so its
/// four remainder blocks partition them into triples. Each valid partition
/// is followed by the same step at the smallest point outside `{0} ∪ T`,
/// with the pairs already used removed. Refutes when every branch dies.
pub fn algorithm_d(g: &Graph) -> Result<SearchOutcome> {
    let delta = g.require_regular_girth5()?;
    let n = g.order();
    if n != 22 || delta != 3 {
        return Err(Error::PreconditionViolated(format!("algorithm D needs n = 22, δ = 3, got n = {n}, δ = {delta}")));
    }
    let set = candidate_blocks(g)?;
    let mut pairs = PairSet::from_candidates(&set);
    let t = pairs.partners(0);
    assert_eq!(t.len(), 12, "point 0 must have 12 remainder partners");
    let mut first_level = Vec::new();
    let mut examined = for_each_partition(&t, 3, |parts| {
        if parts.iter().all(|p| pairs.closes(p)) {
            first_level.push(parts.to_vec());
        }
        true
    });
    let next = (1..n).find(|p| !t.contains(p)).expect("22 points exceed {0} ∪ T");
    let mut survivor = None;
    for parts in &first_level {
        let used = PairSet::block_pairs(0, parts);
        for &(x, y) in &used {
            pairs.set(x, y, false);
        }
        let t2 = pairs.partners(next);
        assert_eq!(t2.len(), 12, "pairs at the second point are untouched");
        let mut ok = false;
        examined += for_each_partition(&t2, 3, |p2| {
            ok = p2.iter().all(|p| pairs.closes(p));
            !ok
        });
        for &(x, y) in &used {
            pairs.set(x, y, true);
        }
        if ok {
            survivor = Some(parts.clone());
            break;
        }
    }
    let mut out = match survivor {
        None => SearchOutcome::new(
            Status::NotExists,
            Stage::D,
            format!("{} first-step partitions, none extends at point {next}", first_level.len()),
        ),
        Some(parts) => SearchOutcome::new(
            Status::Inconclusive,
            Stage::D,
            format!("first-step partition {parts:?} extends at point {next}"),
        ),
    };
    out.certificate.witness = Some(Witness::Point(if first_level.is_empty() { 0 } else { next }));
    out.certificate.examined = Some(examined);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, disjoint_union, petersen};

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn partition_counts() {
        let twelve: Vec<usize> = (0..12).collect();
        assert_eq!(for_each_partition(&twelve, 3, |_| true), 15400);
        for delta in 1..=6u64 {
            let items: Vec<usize> = (0..2 * delta as usize).collect();
            assert_eq!(for_each_partition(&items, delta as usize, |_| true), binomial(2 * delta, delta) / 2);
        }
    }

    #[test]
    fn partitions_are_canonical_and_distinct() {
        let items = [9, 2, 7, 4, 5, 1];
        let mut seen = Vec::new();
        for_each_partition(&items, 2, |parts| {
            for w in parts.windows(2) {
                assert!(w[0][0] < w[1][0]);
            }
            let mut flat: Vec<usize> = parts.concat();
            flat.sort_unstable();
            assert_eq!(flat, vec![1, 2, 4, 5, 7, 9]);
            seen.push(parts.to_vec());
            true
        });
        assert_eq!(seen.len(), 15);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 15);
    }

    #[test]
    fn early_stop() {
        let items: Vec<usize> = (0..12).collect();
        let mut calls = 0;
        let visited = for_each_partition(&items, 3, |_| {
            calls += 1;
            calls < 5
        });
        assert_eq!(visited, 5);
    }

    #[test]
    fn algorithm_a_examples() {
        let out = algorithm_a(&cycle(9).unwrap()).unwrap();
        assert_eq!(out.status, Status::NotExists);
        assert_eq!(out.certificate.witness, Some(Witness::Pair(0, 5)));
        assert_eq!(out.to_string(), "NotExists stage=A witness={0,5}");
        assert_eq!(algorithm_a(&cycle(11).unwrap()).unwrap().status, Status::Inconclusive);
        assert_eq!(algorithm_a(&cycle(15).unwrap()).unwrap().status, Status::Inconclusive);
        let c5c6 = disjoint_union(&cycle(5).unwrap(), &cycle(6).unwrap());
        assert!(algorithm_a(&c5c6).is_ok());
    }

    #[test]
    fn algorithm_c_on_c9() {
        let g = cycle(9).unwrap();
        let set = candidate_blocks(&g).unwrap();
        assert_eq!(PairSet::from_candidates(&set).partners(0), vec![3, 4, 5, 6]);
        let out = algorithm_c(&g).unwrap();
        assert_eq!(out.status, Status::NotExists);
        assert_eq!(out.certificate.examined, Some(3));
    }

    #[test]
    fn algorithm_c_on_25_points() {
        let g = crate::search::random_regular_girth5(25, 4, 3).unwrap();
        let out = algorithm_c(&g).unwrap();
        assert_eq!(out.certificate.examined, Some(35));
    }

    #[test]
    fn preconditions() {
        assert!(matches!(algorithm_c(&petersen()), Err(Error::PreconditionViolated(_))));
        assert!(matches!(algorithm_d(&cycle(22).unwrap()), Err(Error::PreconditionViolated(_))));
        assert!(matches!(algorithm_d(&petersen()), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn algorithm_d_runs_full_first_step() {
        let g = crate::search::random_regular_girth5(22, 3, 11).unwrap();
        let out = algorithm_d(&g).unwrap();
        assert!(out.certificate.examined.unwrap() >= 15400);
        assert_ne!(out.status, Status::Exists);
    }
}
