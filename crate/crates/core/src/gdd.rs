//! Group divisible designs and Wilson's fundamental construction.
//!
//! A `k`-GDD partitions its points into groups; every pair from two
//! different groups lies in exactly one block and no block meets a group
//! twice. Filling each group with a design for a graph on that many points
//! yields a design for the disjoint union of those graphs.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::design::{verify, Block, Design, PairCounts, VerificationReport, Violation, ViolationKind, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{self, Exec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gdd {
    k: usize,
    groups: Vec<Vec<usize>>,
    blocks: Vec<Block>,
}

impl Gdd {
    /// Stores the data with each group and block sorted; nothing else is
    /// checked here, see [`verify_gdd`].
    pub fn new(k: usize, mut groups: Vec<Vec<usize>>, mut blocks: Vec<Block>) -> Self {
        for g in &mut groups {
            g.sort_unstable();
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        Gdd { k, groups, blocks }
    }

    /// Sum of the group sizes.
    pub fn points(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// `(group size, multiplicity)`, by decreasing size.
    pub fn type_signature(&self) -> Vec<(usize, usize)> {
        let mut counts = BTreeMap::new();
        for g in &self.groups {
            *counts.entry(g.len()).or_insert(0) += 1;
        }
        counts.into_iter().rev().collect()
    }
}

/// Renders the type in exponent notation, e.g. `21^3` or `10^3 4^1`.
pub struct TypeSignature<'a>(pub &'a Gdd);

impl fmt::Display for TypeSignature<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.type_signature().iter().map(|(s, c)| format!("{s}^{c}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Checks the group partition, block sizes, and pair coverage.
pub fn verify_gdd(d: &Gdd) -> VerificationReport {
    let n = d.points();
    let mut violations = Vec::new();
    let mut group_of = vec![usize::MAX; n];
    for (gi, g) in d.groups.iter().enumerate() {
        if g.is_empty() {
            violations.push(Violation {
                kind: ViolationKind::GroupPartition,
                witness: Witness::Block(g.clone()),
                observed: 0,
                expected: 1,
            });
        }
        for &p in g {
            if p >= n {
                violations.push(Violation {
                    kind: ViolationKind::PointOutOfRange,
                    witness: Witness::Point(p),
                    observed: p,
                    expected: n,
                });
            } else if group_of[p] != usize::MAX {
                violations.push(Violation {
                    kind: ViolationKind::GroupPartition,
                    witness: Witness::Point(p),
                    observed: 2,
                    expected: 1,
                });
            } else {
                group_of[p] = gi;
            }
        }
    }
    for (p, &g) in group_of.iter().enumerate() {
        if g == usize::MAX {
            violations.push(Violation {
                kind: ViolationKind::GroupPartition,
                witness: Witness::Point(p),
                observed: 0,
                expected: 1,
            });
        }
    }

    let mut counts = PairCounts::new(n);
    for b in &d.blocks {
        let mut distinct = b.clone();
        distinct.dedup();
        if b.len() != d.k || distinct.len() != b.len() {
            violations.push(Violation {
                kind: ViolationKind::BlockSize,
                witness: Witness::Block(b.clone()),
                observed: distinct.len(),
                expected: d.k,
            });
        }
        let in_range: Vec<usize> = distinct.iter().copied().filter(|&p| p < n).collect();
        for &p in distinct.iter().filter(|&&p| p >= n) {
            violations.push(Violation {
                kind: ViolationKind::PointOutOfRange,
                witness: Witness::Point(p),
                observed: p,
                expected: n,
            });
        }
        counts.add_block(&in_range);
    }

    for (i, j) in counts.pairs() {
        let observed = counts.get(i, j) as usize;
        let same = group_of[i] != usize::MAX && group_of[i] == group_of[j];
        if same {
            if observed > 0 {
                violations.push(Violation {
                    kind: ViolationKind::WithinGroupPair,
                    witness: Witness::Pair(i, j),
                    observed,
                    expected: 0,
                });
            }
        } else if observed != 1 {
            let kind = if observed == 0 { ViolationKind::PairUndercovered } else { ViolationKind::PairOvercovered };
            violations.push(Violation { kind, witness: Witness::Pair(i, j), observed, expected: 1 });
        }
    }
    VerificationReport::from_violations(violations)
}

/// The 3-GDD of type `g^3` from the cyclic Latin square of order `g`:
/// blocks `{i, g + j, 2g + (i + j) mod g}`.
pub fn gdd_g3(g: usize) -> Result<Gdd> {
    if g == 0 {
        return Err(Error::InvalidParameter("group size must be positive".into()));
    }
    let groups = (0..3).map(|t| (t * g..(t + 1) * g).collect()).collect();
    let blocks = (0..g).flat_map(|i| (0..g).map(move |j| vec![i, g + j, 2 * g + (i + j) % g])).collect();
    Ok(Gdd::new(3, groups, blocks))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGdd {
    k: usize,
    groups: Vec<Vec<usize>>,
    blocks: Vec<Vec<usize>>,
}

pub fn to_json(d: &Gdd) -> String {
    let raw = RawGdd { k: d.k, groups: d.groups.clone(), blocks: d.blocks.clone() };
    let mut s = serde_json::to_string(&raw).expect("gdd serializes");
    s.push('\n');
    s
}

/// Parses `{"k": …, "groups": [[…]], "blocks": [[…]]}` and rejects anything
/// that fails [`verify_gdd`].
pub fn from_json(text: &str) -> Result<Gdd> {
    let raw: RawGdd = serde_json::from_str(text)?;
    let d = Gdd::new(raw.k, raw.groups, raw.blocks);
    let report = verify_gdd(&d);
    match report.violations.first() {
        None => Ok(d),
        Some(v) => Err(Error::InvalidGdd(format!("{v} ({} violations)", report.violations.len()))),
    }
}

/// Fills every group with the ingredient design for its size and returns
/// the composed design and graph, verified.
///
/// Ingredient point `i` goes to the `i`-th smallest point of the group.
pub fn wilson_fill(d: &Gdd, ingredients: &BTreeMap<usize, (Design, Graph)>) -> Result<(Design, Graph)> {
    wilson_fill_with(d, ingredients, Exec::default())
}

pub fn wilson_fill_with(
    d: &Gdd,
    ingredients: &BTreeMap<usize, (Design, Graph)>,
    exec: Exec,
) -> Result<(Design, Graph)> {
    if let Some(v) = verify_gdd(d).violations.first() {
        return Err(Error::InvalidGdd(v.to_string()));
    }
    if d.k == 0 {
        return Err(Error::InvalidGdd("block size must be positive".into()));
    }
    let delta = d.k - 1;
    for g in &d.groups {
        let (design, graph) = ingredients.get(&g.len()).ok_or(Error::MissingIngredient(g.len()))?;
        if design.n() != g.len() || graph.order() != g.len() {
            return Err(Error::InvalidParameter(format!(
                "ingredient for group size {} has {} points and {} vertices",
                g.len(),
                design.n(),
                graph.order()
            )));
        }
        if design.k() != d.k {
            return Err(Error::InvalidParameter(format!(
                "ingredient for group size {} has block size {}, GDD has {}",
                g.len(),
                design.k(),
                d.k
            )));
        }
    }

    let fills = par::map(exec, &d.groups, |g| {
        let (design, graph) = &ingredients[&g.len()];
        let blocks: Vec<Block> = design.blocks().iter().map(|b| b.iter().map(|&p| g[p]).collect()).collect();
        let edges: Vec<(usize, usize)> = graph.edges().map(|(u, v)| (g[u], g[v])).collect();
        (blocks, edges)
    });

    let n = d.points();
    let mut blocks = d.blocks.clone();
    let mut edges = Vec::new();
    for (b, e) in fills {
        blocks.extend(b);
        edges.extend(e);
    }
    let design = Design::new(n, delta, blocks)?;
    let graph = Graph::from_edges(n, edges)?;
    let report = verify(&design, &graph)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::VerificationFailed(format!("composed design: {v}")));
    }
    Ok((design, graph))
}
