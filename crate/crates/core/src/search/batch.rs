//! Running a pipeline of algorithms over a stream of graph6 records.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use super::{Stage, Status};
use crate::error::Error;
use crate::graph::io::{from_graph6, graph6_records};
use crate::par::{self, Exec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BatchOutcome {
    Decided(Status),
    /// The graph is not regular or has girth below 5.
    Skipped(String),
    Error { code: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatchLine {
    pub index: usize,
    pub n: Option<usize>,
    pub delta: Option<usize>,
    pub outcome: BatchOutcome,
    /// The stage that decided, or the last stage run.
    pub stage: Option<Stage>,
    pub nodes: u64,
    pub millis: u128,
}

impl fmt::Display for BatchLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
        let (outcome, stage) = match &self.outcome {
            BatchOutcome::Decided(s) => (s.to_string(), self.stage.map_or_else(|| "-".to_string(), |s| s.to_string())),
            BatchOutcome::Skipped(_) => ("skipped".to_string(), "-".to_string()),
            BatchOutcome::Error { code, .. } => ("error".to_string(), code.clone()),
        };
        write!(f, "{}\t{}\t{}\t{}\t{}\t{}\t{}", self.index, opt(self.n), opt(self.delta), outcome, stage, self.nodes, self.millis)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub exists: usize,
    pub not_exists: usize,
    pub inconclusive: usize,
    pub errors: usize,
    pub skipped: usize,
}

impl fmt::Display for BatchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "# summary exists={} notexists={} inconclusive={} errors={} skipped={}",
            self.exists, self.not_exists, self.inconclusive, self.errors, self.skipped
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatchReport {
    pub lines: Vec<BatchLine>,
    pub summary: BatchSummary,
}

impl BatchReport {
    /// One tab-separated line per record, then the summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&l.to_string());
            out.push('\n');
        }
        out.push_str(&self.summary.to_string());
        out.push('\n');
        out
    }
}

pub fn batch(input: &str, pipeline: &[Stage], budget: u64) -> BatchReport {
    batch_with(input, pipeline, budget, Exec::default())
}

/// Runs `pipeline` on every record until a stage decides. Records may run
/// concurrently; lines come back in input order.
pub fn batch_with(input: &str, pipeline: &[Stage], budget: u64, exec: Exec) -> BatchReport {
    let records: Vec<(usize, &str)> = graph6_records(input).collect();
    let lines = par::map(exec, &records, |&(index, record)| run_record(index, record, pipeline, budget));
    let mut summary = BatchSummary::default();
    for l in &lines {
        match l.outcome {
            BatchOutcome::Decided(Status::Exists) => summary.exists += 1,
            BatchOutcome::Decided(Status::NotExists) => summary.not_exists += 1,
            BatchOutcome::Decided(Status::Inconclusive) => summary.inconclusive += 1,
            BatchOutcome::Skipped(_) => summary.skipped += 1,
            BatchOutcome::Error { .. } => summary.errors += 1,
        }
    }
    BatchReport { lines, summary }
}

fn run_record(index: usize, record: &str, pipeline: &[Stage], budget: u64) -> BatchLine {
    let start = Instant::now();
    let mut line = BatchLine {
        index,
        n: None,
        delta: None,
        outcome: BatchOutcome::Decided(Status::Inconclusive),
        stage: None,
        nodes: 0,
        millis: 0,
    };
    let error = |e: &Error| BatchOutcome::Error { code: e.code().to_string(), message: e.to_string() };
    let g = match from_graph6(record) {
        Ok(g) => g,
        Err(e) => {
            line.outcome = error(&e);
            return line;
        }
    };
    line.n = Some(g.order());
    line.delta = g.regularity();
    match g.require_regular_girth5() {
        Ok(_) => {}
        Err(e @ (Error::NotRegular | Error::GirthTooSmall(_))) => {
            line.outcome = BatchOutcome::Skipped(e.to_string());
            line.millis = start.elapsed().as_millis();
            return line;
        }
        Err(e) => {
            line.outcome = error(&e);
            return line;
        }
    }
    for &stage in pipeline {
        match stage.run(&g, budget) {
            Ok(out) => {
                line.stage = Some(stage);
                line.nodes += out.nodes;
                if out.status.is_decisive() {
                    line.outcome = BatchOutcome::Decided(out.status);
                    break;
                }
            }
            Err(Error::PreconditionViolated(_)) => {}
            Err(e) => {
                line.outcome = error(&e);
                break;
            }
        }
    }
    line.millis = start.elapsed().as_millis();
    line
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::io::to_graph6;
    use crate::graph::{cycle, disjoint_union, petersen};

    fn stream(graphs: &[crate::graph::Graph]) -> String {
        graphs.iter().map(|g| to_graph6(g) + "\n").collect()
    }

    #[test]
    fn cycle_union_stream() {
        let c = |n| cycle(n).unwrap();
        let u = |a: usize, b: usize| disjoint_union(&c(a), &c(b));
        let graphs = vec![
            c(9),
            c(11),
            u(5, 6),
            u(6, 9),
            u(7, 8),
            u(7, 10),
            u(8, 9),
            disjoint_union(&u(5, 5), &c(7)),
        ];
        let report = batch(&stream(&graphs), &[Stage::A, Stage::Cover], 50_000_000);
        assert_eq!(report.summary.not_exists, 8, "{}", report.render());
        assert_eq!(report.lines[0].stage, Some(Stage::A));
        assert_eq!(report.lines[1].stage, Some(Stage::Cover));
        assert!(report.render().ends_with("# summary exists=0 notexists=8 inconclusive=0 errors=0 skipped=0\n"));
    }

    #[test]
    fn existing_designs() {
        let graphs = vec![cycle(5).unwrap(), cycle(15).unwrap(), cycle(17).unwrap()];
        let report = batch(&stream(&graphs), &[Stage::Cover], 10_000_000);
        assert_eq!(report.summary.exists, 3);
    }

    #[test]
    fn empty_errors_and_skips() {
        let report = batch("", &[Stage::Cover], 1000);
        assert!(report.lines.is_empty());
        assert_eq!(report.render(), "# summary exists=0 notexists=0 inconclusive=0 errors=0 skipped=0\n");

        let input = format!("{}\nnot-graph6\n{}\n", to_graph6(&cycle(4).unwrap()), to_graph6(&petersen()));
        let report = batch(&input, &[Stage::C, Stage::Cover], 1000);
        assert!(matches!(report.lines[0].outcome, BatchOutcome::Skipped(_)));
        assert!(matches!(report.lines[1].outcome, BatchOutcome::Error { .. }));
        assert_eq!(report.lines[2].outcome, BatchOutcome::Decided(Status::Exists));
        assert_eq!(report.summary.errors, 1);
        assert_eq!(report.summary.skipped, 1);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let graphs: Vec<_> = (0..6).map(|s| crate::search::random_regular_girth5(22, 3, s).unwrap()).collect();
        let input = stream(&graphs);
        let strip = |r: BatchReport| r.lines.into_iter().map(|l| (l.index, l.outcome, l.stage, l.nodes)).collect::<Vec<_>>();
        assert_eq!(
            strip(batch_with(&input, &[Stage::A, Stage::D, Stage::Cover], 10_000_000, Exec::Sequential)),
            strip(batch_with(&input, &[Stage::A, Stage::D, Stage::Cover], 10_000_000, Exec::Parallel))
        );
    }
}
