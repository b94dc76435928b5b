//! Completing and refuting designs.
//!
//! Every design for `G` contains the closed neighbourhoods, so the question
//! is whether the remainder pairs `P_R` can be covered exactly once by
//! `(δ+1)`-sets whose internal pairs all lie in `P_R`. [`exact_cover`]
//! answers it outright; the cheaper [`algorithm_a`], [`algorithm_c`] and
//! [`algorithm_d`] can only refute, and [`algorithm_b`] decides through an
//! explicit incidence matrix with its own solver.

mod batch;
mod candidates;
mod cover;
pub mod dlx;
mod random;
mod refute;

pub use batch::{batch, batch_with, BatchLine, BatchOutcome, BatchReport, BatchSummary};
pub use candidates::{candidate_blocks, Candidate, CandidateSet};
pub use cover::{algorithm_b, algorithm_b_with, exact_cover, exact_cover_with, CoverInstance, MatrixResult};
pub use random::random_regular_girth5;
pub use refute::{algorithm_a, algorithm_c, algorithm_d, for_each_partition};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::design::{Design, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Node budget used when none is given.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Exists,
    NotExists,
    Inconclusive,
}

impl Status {
    pub fn is_decisive(self) -> bool {
        self != Status::Inconclusive
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Exists => "Exists",
            Status::NotExists => "NotExists",
            Status::Inconclusive => "Inconclusive",
        })
    }
}

/// The procedure that produced an outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stage {
    A,
    B,
    C,
    D,
    Cover,
}

impl Stage {
    pub fn run(self, g: &Graph, budget: u64) -> Result<SearchOutcome> {
        match self {
            Stage::A => algorithm_a(g),
            Stage::B => algorithm_b_with(g, budget),
            Stage::C => algorithm_c(g),
            Stage::D => algorithm_d(g),
            Stage::Cover => exact_cover_with(g, Mode::Decide, budget),
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::A => "A",
            Stage::B => "B",
            Stage::C => "C",
            Stage::D => "D",
            Stage::Cover => "cover",
        })
    }
}

impl FromStr for Stage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Stage::A),
            "b" => Ok(Stage::B),
            "c" => Ok(Stage::C),
            "d" => Ok(Stage::D),
            "cover" | "x" => Ok(Stage::Cover),
            _ => Err(Error::InvalidParameter(format!("unknown algorithm `{s}`"))),
        }
    }
}

/// What [`exact_cover`] should produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Existence, stopping at the first completion.
    Decide,
    /// Same search as `Decide`; callers use it to ask for the design.
    First,
    /// The number of distinct remainder completions.
    Count,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "decide" => Ok(Mode::Decide),
            "first" => Ok(Mode::First),
            "count" => Ok(Mode::Count),
            _ => Err(Error::InvalidParameter(format!("unknown mode `{s}`"))),
        }
    }
}

/// Why an outcome was reached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub stage: Stage,
    pub witness: Option<Witness>,
    /// Partitions examined (algorithms C and D).
    pub examined: Option<u64>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub status: Status,
    /// Present exactly when a design was found and verified.
    pub design: Option<Design>,
    pub certificate: Certificate,
    /// Search nodes expanded (exact-cover solvers only).
    pub nodes: u64,
    /// Completions found, in counting mode.
    pub count: Option<u64>,
}

impl SearchOutcome {
    fn new(status: Status, stage: Stage, note: impl Into<String>) -> Self {
        SearchOutcome {
            status,
            design: None,
            certificate: Certificate { stage, witness: None, examined: None, note: note.into() },
            nodes: 0,
            count: None,
        }
    }
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} stage={}", self.status, self.certificate.stage)?;
        if let Some(w) = &self.certificate.witness {
            write!(f, " witness={w}")?;
        }
        if let Some(e) = self.certificate.examined {
            write!(f, " examined={e}")?;
        }
        if let Some(c) = self.count {
            write!(f, " count={c}")?;
        }
        Ok(())
    }
}
