//! Regular-graph designs with λ = 1.
//!
//! A design for a δ-regular graph `G` on `n` points has blocks of size
//! `k = δ + 1`; edges of `G` lie in two blocks, all other pairs in one. The
//! closed neighbourhoods `N[i]` (`B_N`) carry the doubled pairs when the
//! girth is at least 5, and the remainder blocks (`B_R`) cover the pairs
//! `B_N` misses.

pub mod io;
mod pairs;
mod table;
mod verify;

pub(crate) use pairs::PairCounts;
pub use table::{pair_table, PairClass, PairTable};
pub use verify::{recover_graph, verify, VerificationReport, Violation, ViolationKind, Witness};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Block = Vec<usize>;

/// A block design on points `0..n` with block size `delta + 1`.
///
/// Blocks are stored sorted and the block list is sorted lexicographically,
/// so equal designs have equal representations and file output is stable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Design {
    n: usize,
    delta: usize,
    blocks: Vec<Block>,
}

impl Design {
    /// Builds a design, enforcing block size, point range, distinct points
    /// within a block, and (for δ ≥ 2) no repeated blocks.
    ///
    /// For δ = 1 the matching edges legitimately appear twice as blocks.
    pub fn new(n: usize, delta: usize, blocks: Vec<Block>) -> Result<Self> {
        let d = Self::lenient(n, delta, blocks)?;
        if let Some(b) = d.blocks.iter().find(|b| b.len() != delta + 1) {
            return Err(Error::InvalidBlock { block: b.clone(), reason: format!("expected {} points", delta + 1) });
        }
        if delta >= 2 {
            if let Some(w) = d.blocks.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateBlock(w[0].clone()));
            }
        }
        Ok(d)
    }

    /// Builds a possibly-invalid design for inspection by [`verify`]. Only
    /// point range and distinctness within each block are enforced, since
    /// pair counting needs them.
    pub fn lenient(n: usize, delta: usize, blocks: Vec<Block>) -> Result<Self> {
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
            if let Some(&p) = b.iter().find(|&&p| p >= n) {
                return Err(Error::VertexOutOfRange { vertex: p, n });
            }
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidBlock { block: b.clone(), reason: "repeated point".into() });
            }
        }
        blocks.sort();
        Ok(Design { n, delta, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Block size `δ + 1`.
    pub fn k(&self) -> usize {
        self.delta + 1
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn into_blocks(self) -> Vec<Block> {
        self.blocks
    }

    /// Splits the blocks into the closed neighbourhoods of `g` and the rest.
    /// Fails if some `N[i]` is missing from the design.
    pub fn split(&self, g: &Graph) -> Result<(Vec<Block>, Vec<Block>)> {
        let mut remainder = self.blocks.clone();
        let mut neighbourhood = Vec::with_capacity(g.order());
        for v in 0..g.order() {
            let nb = g.closed_neighborhood(v);
            match remainder.binary_search(&nb) {
                Ok(pos) => neighbourhood.push(remainder.remove(pos)),
                Err(_) => {
                    return Err(Error::VerificationFailed(format!("neighbourhood block N[{v}] = {nb:?} missing")));
                }
            }
        }
        Ok((neighbourhood, remainder))
    }

    /// For every point, its partners inside remainder blocks (sorted, with
    /// repetition if a pair is repeated).
    pub fn remainder_partners(&self, g: &Graph) -> Result<Vec<Vec<usize>>> {
        let (_, remainder) = self.split(g)?;
        let mut partners = vec![Vec::new(); self.n];
        for b in &remainder {
            for &p in b {
                partners[p].extend(b.iter().copied().filter(|&q| q != p));
            }
        }
        for list in &mut partners {
            list.sort_unstable();
        }
        Ok(partners)
    }

    /// The δ = 1 design on `n` (even) points: the perfect matching
    /// `{2i, 2i+1}` doubled up with every pair of `K_n`.
    pub fn matching(n: usize) -> Result<(Design, Graph)> {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!("matching design needs even n >= 2, got {n}")));
        }
        let g = Graph::from_edges(n, (0..n / 2).map(|i| (2 * i, 2 * i + 1)))?;
        let mut blocks: Vec<Block> = g.edges().map(|(u, v)| vec![u, v]).collect();
        blocks.extend((0..n).flat_map(|u| (u + 1..n).map(move |v| vec![u, v])));
        Ok((Design::new(n, 1, blocks)?, g))
    }

    /// The δ = 0 design: the empty design on `K_1`.
    pub fn trivial() -> (Design, Graph) {
        (Design { n: 1, delta: 0, blocks: Vec::new() }, Graph::empty(1))
    }
}

/// Counting data for order `n` and degree `δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignParams {
    pub n: u64,
    pub delta: u64,
    /// Block size `δ + 1`.
    pub k: u64,
    /// `n(n+δ−1) / (δ(δ+1))`, when integral.
    pub b: Option<u64>,
    /// `(n−1)/δ + 1`, when integral.
    pub r: Option<u64>,
    /// `n(n−δ²−1) / (δ(δ+1))`, when `n ≥ δ²+1` and integral.
    pub remainder_count: Option<u64>,
    pub admissible: bool,
}

/// Block and replication counts plus the admissibility test
/// `n ≥ δ²+1`, `n ≡ 1 (mod δ)`, `n(n+δ−1) ≡ 0 (mod δ(δ+1))`.
///
/// δ = 0 admits only `n = 1`, whose design is empty.
pub fn params(n: u64, delta: u64) -> DesignParams {
    let k = delta + 1;
    if delta == 0 {
        let zero = (n == 1).then_some(0);
        return DesignParams { n, delta, k, b: zero, r: zero, remainder_count: zero, admissible: n == 1 };
    }
    let (nw, dw) = (n as u128, delta as u128);
    let denom = dw * (dw + 1);
    let exact = |num: u128, den: u128| num.is_multiple_of(den).then(|| (num / den) as u64);
    let b = if n >= 1 { exact(nw * (nw + dw - 1), denom) } else { None };
    let r = if n >= 1 { exact(nw - 1, dw).map(|q| q + 1) } else { None };
    let moore = dw * dw + 1;
    let remainder_count = if nw >= moore { exact(nw * (nw - moore), denom) } else { None };
    let admissible = nw >= moore && (nw - 1) % dw == 0 && (nw * (nw + dw - 1)) % denom == 0;
    DesignParams { n, delta, k, b, r, remainder_count, admissible }
}

/// The closed neighbourhoods `N[i]`, one block per vertex, sorted by vertex.
///
/// Requires a regular graph of girth at least 5. For δ = 0 the design is
/// empty, so no blocks are returned.
pub fn neighborhood_blocks(g: &Graph) -> Result<Vec<Block>> {
    let delta = g.require_regular_girth5()?;
    if delta == 0 {
        return Ok(Vec::new());
    }
    Ok((0..g.order()).map(|v| g.closed_neighborhood(v)).collect())
}

/// Pairs `{i, j}`, `i < j`, contained in no closed neighbourhood, in
/// lexicographic order.
pub fn remainder_pairs(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let blocks = neighborhood_blocks(g)?;
    let mut counts = PairCounts::new(g.order());
    for b in &blocks {
        counts.add_block(b);
    }
    Ok(counts.pairs().filter(|&(i, j)| counts.get(i, j) == 0).collect())
}

/// The design consisting of `B_N` alone; valid exactly for Moore graphs.
pub fn neighborhood_design(g: &Graph) -> Result<Design> {
    let delta = g.require_regular_girth5()?;
    Design::new(g.order(), delta, neighborhood_blocks(g)?)
}

/// `B_N` of `g` together with the given remainder blocks.
pub fn with_remainder(g: &Graph, remainder: Vec<Block>) -> Result<Design> {
    let delta = g.require_regular_girth5()?;
    let mut blocks = neighborhood_blocks(g)?;
    blocks.extend(remainder);
    Design::new(g.order(), delta, blocks)
}
