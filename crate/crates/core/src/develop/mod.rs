//! Cyclic development of base blocks under `x ↦ x + s (mod n)`.
//!
//! A base block's orbit is the list of its distinct translates. The orbit
//! length always divides `n / gcd(n, s)`; a shorter orbit is called short and
//! is detected here by closure, never by a block's position in a table.

pub mod io;
mod tables;

pub use tables::{all_builtin, builtin_orders, builtin_table, verify_checksums, Family};

use crate::design::{Block, Design};
use crate::error::{Error, Result};
use crate::par::{self, Exec};

/// Base blocks together with the modulus `n` and step `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseBlockSet {
    n: usize,
    step: usize,
    blocks: Vec<Block>,
}

impl BaseBlockSet {
    /// Validates and canonicalises: every block is sorted, all blocks share
    /// one size, points lie in `0..n`, and `1 <= s <= n`.
    pub fn new(n: usize, step: usize, blocks: Vec<Block>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("modulus must be positive".into()));
        }
        if step == 0 || step > n {
            return Err(Error::InvalidParameter(format!("step {step} must lie in 1..={n}")));
        }
        let Some(size) = blocks.first().map(Vec::len) else {
            return Err(Error::InvalidParameter("no base blocks".into()));
        };
        if size == 0 {
            return Err(Error::InvalidParameter("empty base block".into()));
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.len() != size {
                return Err(Error::InvalidBlock { block: b.clone(), reason: format!("expected {size} points") });
            }
            if let Some(&p) = b.iter().find(|&&p| p >= n) {
                return Err(Error::VertexOutOfRange { vertex: p, n });
            }
            b.sort_unstable();
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidBlock { block: b.clone(), reason: "repeated point".into() });
            }
        }
        Ok(BaseBlockSet { n, step, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    /// Length of a full orbit, `n / gcd(n, s)`.
    pub fn full_orbit_len(&self) -> usize {
        self.n / gcd(self.n, self.step)
    }

    /// Orbit length of each base block, in table order.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| orbit(b, self.n, self.step).len()).collect()
    }

    /// Number of base blocks whose orbit is short.
    pub fn short_orbits(&self) -> usize {
        let full = self.full_orbit_len();
        self.orbit_lengths().into_iter().filter(|&l| l < full).count()
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The distinct translates of `block` under `x ↦ x + s (mod n)`, starting
/// with the block itself; each translate is sorted.
pub fn orbit(block: &[usize], n: usize, s: usize) -> Vec<Block> {
    let mut start = block.to_vec();
    start.sort_unstable();
    let cap = n / gcd(n, s % n);
    let mut out = vec![start.clone()];
    let mut cur = start.clone();
    for _ in 1..cap {
        for x in &mut cur {
            *x = (*x + s) % n;
        }
        cur.sort_unstable();
        if cur == start {
            break;
        }
        out.push(cur.clone());
    }
    out
}

/// Develops every base block and returns the union of the orbits as a
/// design with `δ = block size − 1`.
///
/// Two base blocks generating a common block is an error: it always breaks
/// the pair counts.
pub fn develop(bbs: &BaseBlockSet) -> Result<Design> {
    develop_with(bbs, Exec::default())
}

pub fn develop_with(bbs: &BaseBlockSet, exec: Exec) -> Result<Design> {
    let orbits = par::map(exec, bbs.blocks(), |b| orbit(b, bbs.n, bbs.step));
    let mut blocks: Vec<Block> = orbits.into_iter().flatten().collect();
    blocks.sort_unstable();
    if let Some(w) = blocks.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateBlock(w[0].clone()));
    }
    Design::new(bbs.n, bbs.block_size() - 1, blocks)
}
