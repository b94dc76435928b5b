//! Regular-graph designs with λ = 1 and block size δ + 1.
//!
//! Given a δ-regular graph `G` of girth at least 5 on `n` points, a design is a
//! collection of (δ+1)-subsets in which every edge of `G` lies in exactly two
//! blocks and every other pair in exactly one. The closed neighbourhoods
//! `N[i]` supply the doubled pairs; the remaining blocks must cover the
//! leftover pairs exactly once.
//!
//! The crate is organised by task:
//!
//! - [`graph`]: simple graphs, named generators, girth/regularity/connectivity,
//!   graph6 and edge-list I/O.
//! - [`design`]: the design type, counting formulas and admissibility,
//!   neighbourhood/remainder decomposition, verification and graph recovery.
//! - [`develop`]: cyclic development of base blocks and the embedded tables.
//! - [`difference`]: difference-triple constructions for cycle graphs.
//! - [`gdd`]: group divisible designs and Wilson's fundamental construction.
//! - [`search`]: exact-cover completion, the refutation algorithms, batch runs
//!   and random girth-constrained regular graphs.
//!
//! Data-parallel loops go through [`par`], which uses rayon when the
//! `parallel` feature is enabled and runs sequentially otherwise.

pub mod design;
pub mod develop;
pub mod difference;
mod error;
pub mod gdd;
pub mod graph;
pub mod par;
pub mod search;

pub use design::{Design, DesignParams, PairClass, PairTable, VerificationReport, Violation, ViolationKind, Witness};
pub use develop::{BaseBlockSet, Family};
pub use error::{Error, Result};
pub use gdd::Gdd;
pub use graph::Graph;
pub use par::Exec;
pub use search::{SearchOutcome, Status};
