use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Design, PairCounts};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    BlockSize,
    PairUndercovered,
    PairOvercovered,
    Replication,
    DuplicateBlock,
    /// Two points of one group share a block (group divisible designs).
    WithinGroupPair,
    /// Groups fail to partition the point set (group divisible designs).
    GroupPartition,
    PointOutOfRange,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::BlockSize => "block-size",
            ViolationKind::PairUndercovered => "pair-undercovered",
            ViolationKind::PairOvercovered => "pair-overcovered",
            ViolationKind::Replication => "replication",
            ViolationKind::DuplicateBlock => "duplicate-block",
            ViolationKind::WithinGroupPair => "within-group-pair",
            ViolationKind::GroupPartition => "group-partition",
            ViolationKind::PointOutOfRange => "point-out-of-range",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    Pair(usize, usize),
    Block(Vec<usize>),
    Point(usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Pair(a, b) => write!(f, "{{{a},{b}}}"),
            Witness::Block(b) => {
                let s: Vec<String> = b.iter().map(|p| p.to_string()).collect();
                write!(f, "{{{}}}", s.join(","))
            }
            Witness::Point(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Witness,
    pub observed: usize,
    pub expected: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} observed={} expected={}", self.kind, self.witness, self.observed, self.expected)
    }
}

/// Outcome of a verification; `ok` holds exactly when `violations` is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub(crate) fn from_violations(violations: Vec<Violation>) -> Self {
        VerificationReport { ok: violations.is_empty(), violations }
    }

    pub fn count(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }
}

/// Checks `d` against `g`: block sizes, twice-covered edges, once-covered
/// non-edges, replication `r = (n−1)/δ + 1`, and no repeated blocks
/// (δ ≥ 2). Every failure is reported with a witness; only a dimension or
/// degree mismatch between `d` and `g` is an error.
pub fn verify(d: &Design, g: &Graph) -> Result<VerificationReport> {
    let n = d.n();
    if g.order() != n {
        return Err(Error::DimensionMismatch { design: n, graph: g.order() });
    }
    let delta = d.delta();
    match g.regularity() {
        Some(gd) if gd == delta => {}
        Some(gd) => return Err(Error::DegreeMismatch { design: delta, graph: gd }),
        None => return Err(Error::NotRegular),
    }
    let k = d.k();
    let mut violations = Vec::new();

    for b in d.blocks() {
        if b.len() != k {
            violations.push(Violation {
                kind: ViolationKind::BlockSize,
                witness: Witness::Block(b.clone()),
                observed: b.len(),
                expected: k,
            });
        }
    }

    if delta >= 2 {
        let mut i = 0;
        let blocks = d.blocks();
        while i < blocks.len() {
            let mut j = i + 1;
            while j < blocks.len() && blocks[j] == blocks[i] {
                j += 1;
            }
            if j - i > 1 {
                violations.push(Violation {
                    kind: ViolationKind::DuplicateBlock,
                    witness: Witness::Block(blocks[i].clone()),
                    observed: j - i,
                    expected: 1,
                });
            }
            i = j;
        }
    }

    let mut counts = PairCounts::new(n);
    let mut replication = vec![0usize; n];
    for b in d.blocks() {
        counts.add_block(b);
        for &p in b {
            replication[p] += 1;
        }
    }
    for (i, j) in counts.pairs() {
        let expected = if g.has_edge(i, j) { 2 } else { 1 };
        let observed = counts.get(i, j) as usize;
        if observed != expected {
            let kind = if observed < expected { ViolationKind::PairUndercovered } else { ViolationKind::PairOvercovered };
            violations.push(Violation { kind, witness: Witness::Pair(i, j), observed, expected });
        }
    }

    let expected_r = if delta == 0 { Some(0) } else { (n - 1).is_multiple_of(delta).then(|| (n - 1) / delta + 1) };
    if let Some(r) = expected_r {
        for (p, &observed) in replication.iter().enumerate() {
            if observed != r {
                violations.push(Violation {
                    kind: ViolationKind::Replication,
                    witness: Witness::Point(p),
                    observed,
                    expected: r,
                });
            }
        }
    }

    Ok(VerificationReport::from_violations(violations))
}

/// Recovers the graph from a design: its edges are the pairs covered twice.
///
/// The result must be δ-regular with girth at least 5 (δ ≥ 2) and the
/// design must verify against it.
pub fn recover_graph(d: &Design) -> Result<Graph> {
    let n = d.n();
    let mut counts = PairCounts::new(n);
    for b in d.blocks() {
        counts.add_block(b);
    }
    let mut edges = Vec::new();
    for (i, j) in counts.pairs() {
        match counts.get(i, j) {
            1 => {}
            2 => edges.push((i, j)),
            c => return Err(Error::RecoveryFailed(format!("pair {{{i},{j}}} covered {c} times"))),
        }
    }
    let g = Graph::from_edges(n, edges)?;
    match g.regularity() {
        Some(delta) if delta == d.delta() => {}
        Some(delta) => {
            return Err(Error::RecoveryFailed(format!("recovered graph is {delta}-regular, design has δ = {}", d.delta())));
        }
        None if n == 0 => {}
        None => return Err(Error::RecoveryFailed("recovered graph is not regular".into())),
    }
    if d.delta() >= 2 {
        if let Some(girth) = g.girth().filter(|&girth| girth < 5) {
            return Err(Error::RecoveryFailed(format!("recovered graph has girth {girth}")));
        }
    }
    let report = verify(d, &g)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::RecoveryFailed(format!("design does not verify: {v}")));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{neighborhood_design, with_remainder};
    use crate::graph::{cycle, petersen, sylvester, Graph};

    fn sylvester_remainder() -> Vec<Vec<usize>> {
        vec![
            vec![0, 2, 10, 18, 26, 34],
            vec![0, 7, 16, 25, 30, 35],
            vec![1, 5, 13, 21, 29, 35],
            vec![1, 8, 17, 22, 31, 34],
            vec![2, 6, 9, 11, 20, 29],
            vec![3, 4, 9, 17, 25, 33],
            vec![3, 13, 14, 15, 18, 28],
            vec![4, 10, 21, 23, 24, 27],
            vec![5, 12, 19, 26, 32, 33],
            vec![6, 16, 22, 27, 28, 32],
            vec![7, 14, 19, 20, 24, 31],
            vec![8, 11, 12, 15, 23, 30],
        ]
    }

    #[test]
    fn sylvester_design_verifies() {
        let g = sylvester();
        let d = with_remainder(&g, sylvester_remainder()).unwrap();
        assert_eq!(d.len(), 48);
        let report = verify(&d, &g).unwrap();
        assert!(report.ok, "{:?}", report.violations);
    }

    #[test]
    fn removed_block_is_fifteen_undercovered_pairs() {
        let g = sylvester();
        let d = with_remainder(&g, sylvester_remainder()).unwrap();
        let blocks: Vec<_> = d.blocks().iter().filter(|b| **b != vec![0, 2, 10, 18, 26, 34]).cloned().collect();
        let report = verify(&Design::lenient(36, 5, blocks).unwrap(), &g).unwrap();
        assert!(!report.ok);
        assert_eq!(report.count(ViolationKind::PairUndercovered), 15);
        assert_eq!(report.count(ViolationKind::PairOvercovered), 0);
        assert!(report.violations.contains(&Violation {
            kind: ViolationKind::PairUndercovered,
            witness: Witness::Pair(0, 2),
            observed: 0,
            expected: 1
        }));
        // points 0, 2, 10, 18, 26, 34 each drop to 7 blocks
        assert_eq!(report.count(ViolationKind::Replication), 6);
    }

    #[test]
    fn duplicated_block_is_reported() {
        let g = sylvester();
        let d = with_remainder(&g, sylvester_remainder()).unwrap();
        let mut blocks = d.into_blocks();
        blocks.push(vec![0, 2, 10, 18, 26, 34]);
        let report = verify(&Design::lenient(36, 5, blocks).unwrap(), &g).unwrap();
        assert_eq!(report.count(ViolationKind::DuplicateBlock), 1);
        assert_eq!(report.count(ViolationKind::PairOvercovered), 15);
        assert_eq!(report.count(ViolationKind::PairUndercovered), 0);
    }

    #[test]
    fn wrong_block_size_is_reported() {
        let g = cycle(5).unwrap();
        let mut blocks = neighborhood_design(&g).unwrap().into_blocks();
        blocks.push(vec![0, 2]);
        let report = verify(&Design::lenient(5, 2, blocks).unwrap(), &g).unwrap();
        assert_eq!(report.count(ViolationKind::BlockSize), 1);
    }

    #[test]
    fn mismatches_are_errors() {
        let d = neighborhood_design(&petersen()).unwrap();
        assert!(matches!(verify(&d, &cycle(9).unwrap()), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(verify(&d, &cycle(10).unwrap()), Err(Error::DegreeMismatch { design: 3, graph: 2 })));
        let path = Graph::from_edges(10, [(0, 1)]).unwrap();
        assert!(matches!(verify(&d, &path), Err(Error::NotRegular)));
    }

    #[test]
    fn recovery_examples() {
        let g = sylvester();
        let d = with_remainder(&g, sylvester_remainder()).unwrap();
        assert_eq!(recover_graph(&d).unwrap(), g);
        let p = petersen();
        assert_eq!(recover_graph(&neighborhood_design(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn recovery_rejects_malformed_designs() {
        // triple coverage
        let d = Design::lenient(5, 2, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]).unwrap();
        assert!(matches!(recover_graph(&d), Err(Error::RecoveryFailed(_))));
        // uncovered pair
        let d = Design::lenient(5, 2, vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(recover_graph(&d), Err(Error::RecoveryFailed(_))));
        // the Fano plane covers every pair once: recovered graph has no edges, not 2-regular
        let fano = vec![
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![0, 5, 6],
            vec![1, 3, 5],
            vec![1, 4, 6],
            vec![2, 3, 6],
            vec![2, 4, 5],
        ];
        let d = Design::lenient(7, 2, fano).unwrap();
        assert!(matches!(recover_graph(&d), Err(Error::RecoveryFailed(_))));
    }
}
