use crate::design::{remainder_pairs, Block};
use crate::error::Result;
use crate::graph::Graph;

/// A possible remainder block and the indices of the remainder pairs it
/// covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub block: Block,
    pub pairs: Vec<usize>,
}

/// The remainder pairs of a graph and every `(δ+1)`-set all of whose
/// internal pairs are remainder pairs, in lexicographic order.
#[derive(Clone, Debug)]
pub struct CandidateSet {
    n: usize,
    delta: usize,
    universe: Vec<(usize, usize)>,
    index: Vec<u32>,
    candidates: Vec<Candidate>,
}

const NONE: u32 = u32::MAX;

impl CandidateSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// `P_R`, lexicographic.
    pub fn universe(&self) -> &[(usize, usize)] {
        &self.universe
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    /// Position of `{i, j}` in the universe.
    pub fn pair_index(&self, i: usize, j: usize) -> Option<usize> {
        let v = self.index[i * self.n + j];
        (v != NONE).then_some(v as usize)
    }

    pub fn is_remainder(&self, i: usize, j: usize) -> bool {
        i != j && self.index[i * self.n + j] != NONE
    }

    /// Remainder partners of `p`, ascending.
    pub fn partners(&self, p: usize) -> Vec<usize> {
        (0..self.n).filter(|&q| self.is_remainder(p, q)).collect()
    }

    /// How many candidates contain each universe pair.
    pub fn coverage(&self) -> Vec<u32> {
        let mut cov = vec![0; self.universe.len()];
        for c in &self.candidates {
            for &t in &c.pairs {
                cov[t] += 1;
            }
        }
        cov
    }

    /// Universe pairs contained in no candidate.
    pub fn uncovered(&self) -> Vec<(usize, usize)> {
        self.coverage().iter().zip(&self.universe).filter(|(&c, _)| c == 0).map(|(_, &p)| p).collect()
    }
}

/// Enumerates the candidate remainder blocks of `g` by extending
/// remainder-compatible cliques in increasing vertex order.
pub fn candidate_blocks(g: &Graph) -> Result<CandidateSet> {
    let universe = remainder_pairs(g)?;
    let n = g.order();
    let delta = g.regularity().unwrap_or(0);
    let mut index = vec![NONE; n * n];
    for (t, &(i, j)) in universe.iter().enumerate() {
        index[i * n + j] = t as u32;
        index[j * n + i] = t as u32;
    }
    let mut set = CandidateSet { n, delta, universe, index, candidates: Vec::new() };
    if delta == 0 {
        return Ok(set);
    }
    let forward: Vec<Vec<usize>> = (0..n).map(|v| (v + 1..n).filter(|&w| set.is_remainder(v, w)).collect()).collect();
    let mut found = Vec::new();
    let mut stack = Vec::with_capacity(delta + 1);
    for (v, pool) in forward.iter().enumerate() {
        stack.push(v);
        extend(&set, &mut stack, pool, delta + 1, &mut found);
        stack.pop();
    }
    set.candidates = found
        .into_iter()
        .map(|block: Block| {
            let mut pairs = Vec::with_capacity(delta * (delta + 1) / 2);
            for (a, &i) in block.iter().enumerate() {
                for &j in &block[a + 1..] {
                    pairs.push(set.pair_index(i, j).expect("clique pairs are remainder pairs"));
                }
            }
            Candidate { block, pairs }
        })
        .collect();
    Ok(set)
}

fn extend(
    set: &CandidateSet,
    stack: &mut Vec<usize>,
    pool: &[usize],
    k: usize,
    out: &mut Vec<Block>,
) {
    if stack.len() == k {
        out.push(stack.clone());
        return;
    }
    for (a, &w) in pool.iter().enumerate() {
        if pool.len() - a < k - stack.len() {
            break;
        }
        let next: Vec<usize> = pool[a + 1..].iter().copied().filter(|&x| set.is_remainder(w, x)).collect();
        stack.push(w);
        extend(set, stack, &next, k, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, disjoint_union, petersen, sylvester};

    /// Every `k`-subset of `0..n`, kept when all its pairs are remainder pairs.
    fn brute(set: &CandidateSet, k: usize) -> Vec<Block> {
        fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(n, k, v + 1, cur, out);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        rec(set.n(), k, 0, &mut Vec::new(), &mut all);
        all.into_iter()
            .filter(|b| b.iter().enumerate().all(|(a, &i)| b[a + 1..].iter().all(|&j| set.is_remainder(i, j))))
            .collect()
    }

    #[test]
    fn c9_cannot_cover_0_5() {
        let set = candidate_blocks(&cycle(9).unwrap()).unwrap();
        assert!(set.candidates().iter().all(|c| !(c.block.contains(&0) && c.block.contains(&5))));
        assert!(set.uncovered().contains(&(0, 5)));
    }

    #[test]
    fn moore_graphs_have_nothing_to_cover() {
        for g in [cycle(5).unwrap(), petersen()] {
            let set = candidate_blocks(&g).unwrap();
            assert!(set.universe().is_empty());
            assert!(set.candidates().is_empty());
        }
    }

    #[test]
    fn matches_brute_force() {
        let graphs = [
            cycle(11).unwrap(),
            cycle(15).unwrap(),
            disjoint_union(&cycle(5).unwrap(), &cycle(6).unwrap()),
            crate::graph::generalized_petersen(8, 3).unwrap(),
            crate::search::random_regular_girth5(22, 3, 1).unwrap(),
        ];
        for g in graphs {
            let set = candidate_blocks(&g).unwrap();
            let k = set.delta() + 1;
            let blocks: Vec<Block> = set.candidates().iter().map(|c| c.block.clone()).collect();
            assert_eq!(blocks, brute(&set, k));
            for c in set.candidates() {
                assert_eq!(c.pairs.len(), k * (k - 1) / 2);
            }
        }
    }

    #[test]
    fn sylvester_universe() {
        let set = candidate_blocks(&sylvester()).unwrap();
        assert_eq!(set.universe().len(), 180);
        assert!(set.uncovered().is_empty());
        assert!(set.partners(0).len() == 36 - 25 - 1);
    }
}
