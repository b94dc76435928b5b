//! `rgd`: command-line front end for the rgdesign library.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rgdesign::design::{self, params, pair_table, recover_graph, verify, Design};
use rgdesign::develop::{self, all_builtin, builtin_table, develop_with, Family};
use rgdesign::difference::{cycle_design, cycle_generators};
use rgdesign::gdd::{self, gdd_g3, verify_gdd, wilson_fill_with, Gdd, TypeSignature};
use rgdesign::graph::Generator;
use rgdesign::graph::io::{from_text as graph_from_text, to_edge_list, to_graph6};
use rgdesign::search::{self, batch_with, random_regular_girth5, Mode, Stage, Status};
use rgdesign::{Error, Exec, Graph, VerificationReport};

mod exit {
    pub const EXISTS: u8 = 0;
    pub const NOT_EXISTS: u8 = 2;
    pub const INCONCLUSIVE: u8 = 3;
    pub const USAGE: u8 = 64;
    pub const VERIFICATION: u8 = 65;
    pub const INPUT: u8 = 66;
    pub const PRECONDITION: u8 = 67;
    pub const UNSUPPORTED: u8 = 69;
}

#[derive(Parser)]
#[command(name = "rgd", version, about = "Construct, verify and refute regular-graph designs")]
struct Cli {
    /// Structured output as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Block count, replication and admissibility for order n and degree δ.
    Params {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: u64,
    },
    /// Develop base blocks into a design.
    Develop {
        /// Base-block file, '-' for standard input.
        #[arg(long = "in", conflicts_with = "table")]
        input: Option<String>,
        /// A builtin table, ORDER:FAMILY (e.g. 10:delta3).
        #[arg(long)]
        table: Option<String>,
    },
    /// List the builtin tables, or print one as base-block text.
    Table {
        /// ORDER:FAMILY; omit to list all.
        spec: Option<String>,
    },
    /// Check a design against a graph, or against the graph it encodes.
    Verify {
        /// Design file (text or JSON), '-' for standard input.
        #[arg(long, default_value = "-")]
        design: String,
        #[command(flatten)]
        against: Against,
    },
    /// Recover the graph encoded by a design.
    Recover {
        #[arg(long, default_value = "-")]
        design: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
        format: GraphFormat,
    },
    /// Print the pair classification table of a graph.
    Pairtable {
        #[arg(long)]
        graph: String,
    },
    /// Design for the cycle C_n.
    Cycle {
        #[arg(long)]
        n: usize,
        /// Print the generating base blocks instead of the design.
        #[arg(long)]
        emit_base_blocks: bool,
    },
    /// Group divisible designs.
    Gdd {
        #[command(subcommand)]
        command: GddCommand,
    },
    /// Fill the groups of a GDD with ingredient designs.
    Wilson {
        /// GDD JSON file.
        #[arg(long)]
        gdd: String,
        /// SIZE=DESIGNFILE:GRAPH, one per group size.
        #[arg(long, required = true)]
        fill: Vec<String>,
        /// Also write the composed graph (edge list) to this file.
        #[arg(long)]
        graph_out: Option<String>,
    },
    /// Decide, complete or count designs for a graph.
    Search {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value = "cover")]
        algo: String,
        #[arg(long, default_value = "decide")]
        mode: String,
        /// Node budget; overrides RGD_BUDGET.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run a pipeline of algorithms over a graph6 file.
    Batch {
        #[arg(long = "in", default_value = "-")]
        input: String,
        /// Comma-separated stages: a, b, c, d, cover.
        #[arg(long, default_value = "a,c,cover")]
        pipeline: String,
        #[arg(long)]
        budget: Option<u64>,
        /// Process records one at a time.
        #[arg(long)]
        sequential: bool,
    },
    /// Generate a graph.
    Gen {
        /// n,delta,seed for a random regular graph of girth at least 5.
        #[arg(long, conflicts_with = "name", required_unless_present = "name")]
        random: Option<String>,
        /// A named graph: cycle:N, gp:N,K, petersen, sylvester, hs, union:A+B.
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Against {
    /// Graph SPEC or file.
    #[arg(long)]
    graph: Option<String>,
    /// Use the graph recovered from the design itself.
    #[arg(long)]
    recover: bool,
}

#[derive(Subcommand)]
enum GddCommand {
    /// The 3-GDD of type g^3 from the cyclic Latin square.
    MakeG3 {
        #[arg(long)]
        g: usize,
    },
    /// Check a GDD JSON file.
    Verify {
        #[arg(long = "in", default_value = "-")]
        input: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    EdgeList,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = e.downcast_ref::<Error>().map_or(exit::USAGE, error_status);
            let tag = e.downcast_ref::<Error>().map_or("usage", Error::code);
            eprintln!("error[{tag}]: {e:#}");
            ExitCode::from(code)
        }
    }
}

fn error_status(e: &Error) -> u8 {
    match e {
        Error::NoDesignExists(_) => exit::NOT_EXISTS,
        Error::UnknownGenerator(_) | Error::InvalidParameter(_) | Error::UnknownTable { .. } => exit::USAGE,
        Error::VerificationFailed(_)
        | Error::InvalidGdd(_)
        | Error::DuplicateBlock(_)
        | Error::RecoveryFailed(_)
        | Error::ChecksumMismatch(_) => exit::VERIFICATION,
        Error::Parse { .. } | Error::Json(_) | Error::Io(_) | Error::InvalidBlock { .. } | Error::VertexOutOfRange { .. } => {
            exit::INPUT
        }
        Error::NotRegular
        | Error::GirthTooSmall(_)
        | Error::PreconditionViolated(_)
        | Error::DimensionMismatch { .. }
        | Error::DegreeMismatch { .. }
        | Error::MissingIngredient(_) => exit::PRECONDITION,
        Error::Unsupported(_) | Error::SearchExhausted(_) | Error::GenerationFailed(_) => exit::UNSUPPORTED,
    }
}

fn status_code(s: Status) -> u8 {
    match s {
        Status::Exists => exit::EXISTS,
        Status::NotExists => exit::NOT_EXISTS,
        Status::Inconclusive => exit::INCONCLUSIVE,
    }
}

fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text).map_err(Error::from).context("reading standard input")?;
    } else {
        text = fs::read_to_string(path).map_err(Error::from).with_context(|| format!("reading {path}"))?;
    }
    Ok(text)
}

/// A graph from a file path, or else from the generator mini-language.
fn load_graph(spec: &str) -> Result<Graph> {
    if Path::new(spec).is_file() {
        return graph_from_text(&read_input(spec)?).with_context(|| format!("parsing graph file {spec}"));
    }
    Ok(Generator::from_str(spec)?.build()?)
}

fn load_design(path: &str) -> Result<Design> {
    design::io::from_any(&read_input(path)?).with_context(|| format!("parsing design {path}"))
}

fn budget(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("RGD_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| anyhow!(Error::InvalidParameter(format!("RGD_BUDGET `{v}` is not a node count")))),
        Err(_) => Ok(search::DEFAULT_BUDGET),
    }
}

fn parse_table_spec(spec: &str) -> Result<(usize, Family)> {
    let (order, family) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidParameter(format!("table `{spec}` is not ORDER:FAMILY")))?;
    let order = order.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad table order `{order}`")))?;
    Ok((order, family.trim().parse()?))
}

fn design_output(d: &Design, json: bool) -> String {
    if json {
        design::io::to_json(d)
    } else {
        design::io::to_text(d)
    }
}

fn graph_output(g: &Graph, format: GraphFormat, json: bool) -> String {
    if json {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        return serde_json::json!({ "n": g.order(), "edges": edges }).to_string() + "\n";
    }
    match format {
        GraphFormat::Graph6 => to_graph6(g) + "\n",
        GraphFormat::EdgeList => to_edge_list(g),
    }
}

fn report_output(report: &VerificationReport, json: bool) -> Result<String> {
    if json {
        return Ok(serde_json::to_string(report)? + "\n");
    }
    if report.ok {
        return Ok("ok\n".into());
    }
    let mut out = format!("failed violations={}\n", report.violations.len());
    for v in &report.violations {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<u8> {
    let json = cli.json;
    let mut out = io::stdout().lock();
    let code = match cli.command {
        Command::Params { n, delta } => {
            let p = params(n, delta);
            if json {
                writeln!(out, "{}", serde_json::to_string(&p)?)?;
            } else {
                let opt = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
                let verdict = if p.admissible { "admissible" } else { "inadmissible" };
                writeln!(out, "k={} b={} r={} remainder={} {verdict}", p.k, opt(p.b), opt(p.r), opt(p.remainder_count))?;
            }
            exit::EXISTS
        }
        Command::Develop { input, table } => {
            let bbs = match (input, table) {
                (_, Some(spec)) => {
                    let (order, family) = parse_table_spec(&spec)?;
                    builtin_table(order, family)?
                }
                (Some(path), None) => develop::io::from_text(&read_input(&path)?)?,
                (None, None) => bail!("develop needs --in FILE or --table ORDER:FAMILY"),
            };
            out.write_all(design_output(&develop_with(&bbs, Exec::Sequential)?, json).as_bytes())?;
            exit::EXISTS
        }
        Command::Table { spec: None } => {
            for (family, order) in all_builtin() {
                let bbs = builtin_table(order, family)?;
                writeln!(out, "{order}:{family}\ts={}\tbase_blocks={}", bbs.step(), bbs.blocks().len())?;
            }
            exit::EXISTS
        }
        Command::Table { spec: Some(spec) } => {
            let (order, family) = parse_table_spec(&spec)?;
            out.write_all(develop::io::to_text(&builtin_table(order, family)?).as_bytes())?;
            exit::EXISTS
        }
        Command::Verify { design, against } => {
            let d = load_design(&design)?;
            let g = match against.graph {
                Some(spec) => load_graph(&spec)?,
                None => recover_graph(&d)?,
            };
            let report = verify(&d, &g)?;
            out.write_all(report_output(&report, json)?.as_bytes())?;
            if report.ok {
                exit::EXISTS
            } else {
                exit::VERIFICATION
            }
        }
        Command::Recover { design, format } => {
            let g = recover_graph(&load_design(&design)?)?;
            out.write_all(graph_output(&g, format, json).as_bytes())?;
            exit::EXISTS
        }
        Command::Pairtable { graph } => {
            let table = pair_table(&load_graph(&graph)?)?;
            if json {
                let (edges, neighbourhood, remainder) = table.counts();
                let v = serde_json::json!({ "n": table.n(), "rows": table.render().lines().collect::<Vec<_>>(),
                    "counts": { "edge": edges, "neighbourhood": neighbourhood, "remainder": remainder } });
                writeln!(out, "{v}")?;
            } else {
                out.write_all(table.render().as_bytes())?;
            }
            exit::EXISTS
        }
        Command::Cycle { n, emit_base_blocks } => {
            if emit_base_blocks {
                out.write_all(develop::io::to_text(&cycle_generators(n)?).as_bytes())?;
            } else {
                out.write_all(design_output(&cycle_design(n)?.0, json).as_bytes())?;
            }
            exit::EXISTS
        }
        Command::Gdd { command: GddCommand::MakeG3 { g } } => {
            out.write_all(gdd::to_json(&gdd_g3(g)?).as_bytes())?;
            exit::EXISTS
        }
        Command::Gdd { command: GddCommand::Verify { input } } => {
            let raw: Gdd = serde_json::from_str(&read_input(&input)?).map_err(Error::from)?;
            let d = Gdd::new(raw.k(), raw.groups().to_vec(), raw.blocks().to_vec());
            let report = verify_gdd(&d);
            if !json && report.ok {
                writeln!(out, "ok type={} blocks={}", TypeSignature(&d), d.blocks().len())?;
            } else {
                out.write_all(report_output(&report, json)?.as_bytes())?;
            }
            if report.ok {
                exit::EXISTS
            } else {
                exit::VERIFICATION
            }
        }
        Command::Wilson { gdd, fill, graph_out } => {
            let d = gdd::from_json(&read_input(&gdd)?)?;
            let mut ingredients = BTreeMap::new();
            for f in &fill {
                let (size, rest) = f.split_once('=').ok_or_else(|| anyhow!(Error::InvalidParameter(format!("fill `{f}` is not SIZE=DESIGN:GRAPH"))))?;
                let (design_path, graph_spec) =
                    rest.split_once(':').ok_or_else(|| anyhow!(Error::InvalidParameter(format!("fill `{f}` is not SIZE=DESIGN:GRAPH"))))?;
                let size: usize = size.parse().map_err(|_| Error::InvalidParameter(format!("bad group size `{size}`")))?;
                ingredients.insert(size, (load_design(design_path)?, load_graph(graph_spec)?));
            }
            let (design, graph) = wilson_fill_with(&d, &ingredients, Exec::Sequential)?;
            if let Some(path) = graph_out {
                fs::write(&path, to_edge_list(&graph)).map_err(Error::from).with_context(|| format!("writing {path}"))?;
            }
            out.write_all(design_output(&design, json).as_bytes())?;
            exit::EXISTS
        }
        Command::Search { graph, algo, mode, budget: b } => {
            let g = load_graph(&graph)?;
            let stage: Stage = algo.parse()?;
            let mode: Mode = mode.parse()?;
            let b = budget(b)?;
            let outcome = match stage {
                Stage::Cover => search::exact_cover_with(&g, mode, b)?,
                other => other.run(&g, b)?,
            };
            if json {
                writeln!(out, "{}", serde_json::to_string(&outcome)?)?;
            } else {
                writeln!(out, "{outcome}")?;
                if mode == Mode::First {
                    if let Some(d) = &outcome.design {
                        out.write_all(design::io::to_text(d).as_bytes())?;
                    }
                }
            }
            status_code(outcome.status)
        }
        Command::Batch { input, pipeline, budget: b, sequential } => {
            let stages = pipeline.split(',').map(|s| s.trim().parse::<Stage>()).collect::<rgdesign::Result<Vec<_>>>()?;
            let exec = if sequential { Exec::Sequential } else { Exec::default() };
            let report = batch_with(&read_input(&input)?, &stages, budget(b)?, exec);
            if json {
                writeln!(out, "{}", serde_json::to_string(&report)?)?;
            } else {
                out.write_all(report.render().as_bytes())?;
            }
            if report.summary.errors == 0 {
                exit::EXISTS
            } else {
                exit::INPUT
            }
        }
        Command::Gen { random, name, format } => {
            let g = match (random, name) {
                (Some(spec), _) => {
                    let v: Vec<u64> = spec
                        .split(',')
                        .map(|t| t.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad integer `{t}`"))))
                        .collect::<rgdesign::Result<_>>()?;
                    let [n, delta, seed] = v[..] else {
                        bail!(Error::InvalidParameter(format!("--random takes n,delta,seed, got `{spec}`")));
                    };
                    random_regular_girth5(n as usize, delta as usize, seed)?
                }
                (None, Some(name)) => Generator::from_str(&name)?.build()?,
                (None, None) => bail!("gen needs --random or --name"),
            };
            out.write_all(graph_output(&g, format, json).as_bytes())?;
            exit::EXISTS
        }
    };
    out.flush()?;
    Ok(code)
}
