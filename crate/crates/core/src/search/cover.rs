use std::collections::HashMap;

use super::candidates::{candidate_blocks, CandidateSet};
use super::dlx::{Dlx, End, Symmetry};
use super::refute::coverage_witness;
use super::{Mode, SearchOutcome, Stage, Status, DEFAULT_BUDGET};
use crate::design::{neighborhood_blocks, verify, Block, Design};
use crate::error::{Error, Result};
use crate::graph::{automorphisms, Graph};

/// Most automorphisms used for pruning.
const SYMMETRY_LIMIT: usize = 4096;

/// The `|P_R| × |K|` incidence matrix, one bitset row per remainder pair.
#[derive(Clone, Debug)]
pub struct CoverInstance {
    rows: Vec<(usize, usize)>,
    columns: Vec<Block>,
    words: usize,
    bits: Vec<u64>,
}

impl CoverInstance {
    pub fn new(set: &CandidateSet) -> Self {
        let rows = set.universe().to_vec();
        let columns: Vec<Block> = set.candidates().iter().map(|c| c.block.clone()).collect();
        let words = columns.len().div_ceil(64);
        let mut bits = vec![0u64; rows.len() * words];
        for (k, c) in set.candidates().iter().enumerate() {
            for &t in &c.pairs {
                bits[t * words + k / 64] |= 1 << (k % 64);
            }
        }
        CoverInstance { rows, columns, words, bits }
    }

    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    pub fn columns(&self) -> &[Block] {
        &self.columns
    }

    /// `M[t][k]`: whether remainder pair `t` lies in candidate `k`.
    pub fn get(&self, t: usize, k: usize) -> bool {
        self.bits[t * self.words + k / 64] >> (k % 64) & 1 == 1
    }

    fn row_columns(&self, t: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[t * self.words..(t + 1) * self.words];
        row.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Searches for a 0/1 vector `d` with `M d = j`. Rows are taken
    /// fewest-live-columns first. Also returns the nodes expanded.
    pub fn solve(&self, budget: u64) -> (MatrixResult, u64) {
        let col_rows: Vec<Vec<usize>> = {
            let mut cr = vec![Vec::new(); self.columns.len()];
            for t in 0..self.rows.len() {
                for k in self.row_columns(t) {
                    cr[k].push(t);
                }
            }
            cr
        };
        let live: Vec<usize> = (0..self.rows.len()).map(|t| self.row_columns(t).count()).collect();
        let mut st = MatrixSearch {
            m: self,
            col_rows,
            covered: vec![false; self.rows.len()],
            blocked: vec![0; self.columns.len()],
            live,
            chosen: Vec::new(),
            nodes: 0,
            budget,
        };
        let result = st.search();
        (result, st.nodes)
    }
}

/// Result of [`CoverInstance::solve`]; `Solution` lists chosen columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixResult {
    Solution(Vec<usize>),
    Infeasible,
    OutOfBudget,
}

struct MatrixSearch<'a> {
    m: &'a CoverInstance,
    col_rows: Vec<Vec<usize>>,
    covered: Vec<bool>,
    /// Covered rows inside each column; a column is usable when this is zero.
    blocked: Vec<u32>,
    /// Usable columns through each row.
    live: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl MatrixSearch<'_> {
    fn search(&mut self) -> MatrixResult {
        if self.nodes >= self.budget {
            return MatrixResult::OutOfBudget;
        }
        self.nodes += 1;
        let row = (0..self.covered.len()).filter(|&t| !self.covered[t]).min_by_key(|&t| (self.live[t], t));
        let Some(row) = row else {
            return MatrixResult::Solution(self.chosen.clone());
        };
        let options: Vec<usize> = self.m.row_columns(row).filter(|&k| self.blocked[k] == 0).collect();
        for k in options {
            self.select(k);
            self.chosen.push(k);
            let r = self.search();
            self.chosen.pop();
            self.deselect(k);
            if r != MatrixResult::Infeasible {
                return r;
            }
        }
        MatrixResult::Infeasible
    }

    fn select(&mut self, k: usize) {
        for i in 0..self.col_rows[k].len() {
            let t = self.col_rows[k][i];
            self.covered[t] = true;
            for k2 in self.m.row_columns(t) {
                self.blocked[k2] += 1;
                if self.blocked[k2] == 1 {
                    for &t2 in &self.col_rows[k2] {
                        self.live[t2] -= 1;
                    }
                }
            }
        }
    }

    fn deselect(&mut self, k: usize) {
        for i in (0..self.col_rows[k].len()).rev() {
            let t = self.col_rows[k][i];
            for k2 in self.m.row_columns(t) {
                self.blocked[k2] -= 1;
                if self.blocked[k2] == 0 {
                    for &t2 in &self.col_rows[k2] {
                        self.live[t2] += 1;
                    }
                }
            }
            self.covered[t] = false;
        }
    }
}

fn assemble(g: &Graph, delta: usize, remainder: Vec<Block>) -> Result<Design> {
    let mut blocks = neighborhood_blocks(g)?;
    blocks.extend(remainder);
    let design = Design::new(g.order(), delta, blocks)?;
    let report = verify(&design, g)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::VerificationFailed(format!("search produced an invalid design: {v}")));
    }
    Ok(design)
}

fn check_delta(g: &Graph) -> Result<usize> {
    let delta = g.require_regular_girth5()?;
    if delta == 0 && g.order() != 1 {
        return Err(Error::PreconditionViolated("δ = 0 designs exist only on one point".into()));
    }
    Ok(delta)
}

pub fn exact_cover(g: &Graph, mode: Mode) -> Result<SearchOutcome> {
    exact_cover_with(g, mode, DEFAULT_BUDGET)
}

/// Exact cover of `P_R` by candidate blocks with dancing links.
///
/// Pairs are items in lexicographic order and candidates are options in
/// lexicographic order. Running out of `budget` nodes yields
/// [`Status::Inconclusive`].
pub fn exact_cover_with(g: &Graph, mode: Mode, budget: u64) -> Result<SearchOutcome> {
    let delta = check_delta(g)?;
    let set = candidate_blocks(g)?;
    let options: Vec<Vec<usize>> = set.candidates().iter().map(|c| c.pairs.clone()).collect();
    let mut dlx = Dlx::new(set.universe().len(), &options);
    if mode != Mode::Count {
        dlx = dlx.with_symmetry(symmetry(g, &set));
    }
    let mut first: Option<Vec<usize>> = None;
    let mut count = 0u64;
    let run = dlx.search(budget, |sol| {
        count += 1;
        if first.is_none() {
            first = Some(sol.to_vec());
        }
        mode == Mode::Count
    });
    let mut out = match (run.end, count) {
        (End::Budget, 0) => SearchOutcome::new(Status::Inconclusive, Stage::Cover, format!("node budget {budget} exhausted")),
        (End::Budget, _) => {
            SearchOutcome::new(Status::Exists, Stage::Cover, format!("node budget {budget} exhausted; count is a lower bound"))
        }
        (_, 0) => SearchOutcome::new(Status::NotExists, Stage::Cover, "no exact cover of the remainder pairs"),
        _ => SearchOutcome::new(Status::Exists, Stage::Cover, "exact cover found"),
    };
    out.nodes = run.nodes;
    if mode == Mode::Count {
        out.count = Some(count);
    }
    if let Some(sol) = first {
        let remainder = sol.iter().map(|&k| set.candidates()[k].block.clone()).collect();
        out.design = Some(assemble(g, delta, remainder)?);
    }
    Ok(out)
}

/// Graph automorphisms acting on remainder pairs and candidate blocks.
fn symmetry(g: &Graph, set: &CandidateSet) -> Symmetry {
    let index: HashMap<&[usize], u32> =
        set.candidates().iter().enumerate().map(|(k, c)| (c.block.as_slice(), k as u32)).collect();
    let mut sym = Symmetry::default();
    for p in automorphisms(g, SYMMETRY_LIMIT) {
        let pair = |i: usize, j: usize| set.pair_index(p[i], p[j]).expect("automorphisms preserve remainder pairs") as u32;
        sym.items.push(set.universe().iter().map(|&(i, j)| pair(i, j)).collect());
        sym.options.push(
            set.candidates()
                .iter()
                .map(|c| {
                    let mut b: Vec<usize> = c.block.iter().map(|&x| p[x]).collect();
                    b.sort_unstable();
                    index[b.as_slice()]
                })
                .collect(),
        );
    }
    sym
}

pub fn algorithm_b(g: &Graph) -> Result<SearchOutcome> {
    algorithm_b_with(g, DEFAULT_BUDGET)
}

/// Builds the incidence matrix `M`, applies the coverage pre-check, then
/// decides `M d = j` with a bitset search independent of
/// [`exact_cover`]. A solution is returned as a verified design.
pub fn algorithm_b_with(g: &Graph, budget: u64) -> Result<SearchOutcome> {
    let delta = check_delta(g)?;
    let set = candidate_blocks(g)?;
    if let Some((witness, missing)) = coverage_witness(&set) {
        let mut out = SearchOutcome::new(
            Status::NotExists,
            Stage::B,
            format!("coverage pre-check: {missing} remainder pairs lie in no candidate"),
        );
        out.certificate.witness = Some(witness);
        return Ok(out);
    }
    let m = CoverInstance::new(&set);
    let (result, nodes) = m.solve(budget);
    let mut out = match result {
        MatrixResult::OutOfBudget => SearchOutcome::new(Status::Inconclusive, Stage::B, format!("node budget {budget} exhausted")),
        MatrixResult::Infeasible => SearchOutcome::new(Status::NotExists, Stage::B, "M d = j has no 0/1 solution"),
        MatrixResult::Solution(cols) => {
            let mut out = SearchOutcome::new(Status::Exists, Stage::B, "0/1 solution of M d = j");
            out.design = Some(assemble(g, delta, cols.iter().map(|&k| m.columns()[k].clone()).collect())?);
            out
        }
    };
    out.nodes = nodes;
    Ok(out)
}
