//! Acceptance criteria, one line each:
//! `criterion N: PASS|FAIL <title> (<elapsed> s, limit <limit> s)`.
//!
//! Runs without the libtest harness so the lines always print and criteria
//! run one after another; timings are wall clock on the current machine.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rgdesign::design::{self, neighborhood_blocks, neighborhood_design, params, recover_graph, remainder_pairs, verify, Design};
use rgdesign::develop::{self, all_builtin, builtin_table, develop, Family};
use rgdesign::difference::{cycle_design, find_difference_triples};
use rgdesign::gdd::{self, gdd_g3, verify_gdd, wilson_fill};
use rgdesign::graph::io::{from_graph6, to_graph6};
use rgdesign::graph::{cycle, disjoint_union, hoffman_singleton, sylvester, Graph};
use rgdesign::search::{algorithm_a, algorithm_b, algorithm_c, algorithm_d, exact_cover, random_regular_girth5, Mode};
use rgdesign::{Error, Status, Witness};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok_against(d: &Design, g: &Graph) -> Check {
    let report = verify(d, g).map_err(|e| e.to_string())?;
    ensure!(report.ok, "verification failed: {}", report.violations[0]);
    Ok(())
}

/// Designs built along the way, re-checked by the invariant suite.
#[derive(Default)]
struct Produced {
    designs: Vec<(String, Design, Graph)>,
}

fn c1_sylvester(p: &mut Produced) -> Check {
    let g = sylvester();
    let mut blocks = neighborhood_blocks(&g).map_err(|e| e.to_string())?;
    for line in include_str!("data/sylvester_remainder_blocks.txt").lines().filter(|l| !l.trim().is_empty()) {
        blocks.push(line.split_whitespace().map(|t| t.parse().unwrap()).collect());
    }
    ensure!(blocks.len() == 48, "expected 48 blocks, got {}", blocks.len());
    let d = Design::new(36, 5, blocks).map_err(|e| e.to_string())?;
    ok_against(&d, &g)?;
    for x in 0..36 {
        let r = d.blocks().iter().filter(|b| b.contains(&x)).count();
        ensure!(r == 8, "point {x} lies in {r} blocks");
    }
    p.designs.push(("sylvester (printed)".into(), d, g.clone()));

    let out = exact_cover(&g, Mode::First).map_err(|e| e.to_string())?;
    ensure!(out.status == Status::Exists, "exact cover: {out}");
    let found = out.design.ok_or("no design attached")?;
    ensure!(found.len() == 48, "completion has {} blocks", found.len());
    ok_against(&found, &g)?;
    p.designs.push(("sylvester (search)".into(), found, g));
    Ok(())
}

/// Admissibility straight from the divisibility conditions.
fn admissible_oracle(n: u64, delta: u64) -> bool {
    n > delta * delta && (n - 1).is_multiple_of(delta) && (n * (n + delta - 1)).is_multiple_of(delta * (delta + 1))
}

fn c2_params(_: &mut Produced) -> Check {
    let p = params(36, 5);
    ensure!((p.b, p.r, p.remainder_count) == (Some(48), Some(8), Some(12)), "(36, 5): {p:?}");
    let p = params(10, 3);
    ensure!((p.b, p.r, p.remainder_count) == (Some(10), Some(4), Some(0)), "(10, 3): {p:?}");
    for delta in 1..=12 {
        for n in 1..=300 {
            ensure!(params(n, delta).admissible == admissible_oracle(n, delta), "n = {n}, δ = {delta}");
        }
    }
    for n in 1..=300u64 {
        ensure!(params(n, 2).admissible == (n >= 5 && matches!(n % 6, 3 | 5)), "δ = 2 reduction fails at n = {n}");
        ensure!(params(n, 3).admissible == (n >= 10 && n % 6 == 4), "δ = 3 reduction fails at n = {n}");
    }
    Ok(())
}

fn c3_tables(p: &mut Produced) -> Check {
    for (family, order) in all_builtin() {
        let bbs = builtin_table(order, family).map_err(|e| e.to_string())?;
        let d = develop(&bbs).map_err(|e| format!("{order}:{family}: {e}"))?;
        let delta = family.degree() as u64;
        ensure!(Some(d.len() as u64) == params(order as u64, delta).b, "{order}:{family}: {} blocks", d.len());
        if family == Family::Delta3 {
            let expected = match order % 16 {
                8 => Some(2),
                0 => Some(4),
                _ => None,
            };
            if let Some(s) = expected {
                ensure!(bbs.short_orbits() == s, "{order}:{family}: {} short orbits", bbs.short_orbits());
            }
        }
        let g = recover_graph(&d).map_err(|e| format!("{order}:{family}: {e}"))?;
        ok_against(&d, &g).map_err(|e| format!("{order}:{family}: {e}"))?;
        ensure!(g.regularity() == Some(family.degree()), "{order}:{family}: not {delta}-regular");
        let girth = g.girth().unwrap_or(usize::MAX);
        ensure!(girth >= 5, "{order}:{family}: girth {girth}");
        if family == Family::Delta4 {
            ensure!(girth == 6, "{order}:{family}: girth {girth}, expected 6");
        }
        if family != Family::Delta2 {
            ensure!(g.is_connected(), "{order}:{family}: recovered graph is disconnected");
        }
        p.designs.push((format!("table {order}:{family}"), d, g));
    }
    Ok(())
}

fn c4_refutations(_: &mut Produced) -> Check {
    let c = |n| cycle(n).unwrap();
    let graphs = [
        ("C9", c(9)),
        ("C11", c(11)),
        ("C5+C6", disjoint_union(&c(5), &c(6))),
        ("C6+C9", disjoint_union(&c(6), &c(9))),
        ("C7+C8", disjoint_union(&c(7), &c(8))),
        ("C7+C10", disjoint_union(&c(7), &c(10))),
        ("C8+C9", disjoint_union(&c(8), &c(9))),
        ("C5+C5+C7", disjoint_union(&disjoint_union(&c(5), &c(5)), &c(7))),
    ];
    for (name, g) in &graphs {
        let out = exact_cover(g, Mode::Decide).map_err(|e| e.to_string())?;
        ensure!(out.status == Status::NotExists, "{name}: {out}");
    }
    let a = algorithm_a(&c(9)).map_err(|e| e.to_string())?;
    ensure!(a.status == Status::NotExists && a.certificate.witness == Some(Witness::Pair(0, 5)), "algorithm A on C9: {a}");
    let cc = algorithm_c(&c(9)).map_err(|e| e.to_string())?;
    ensure!(cc.status == Status::NotExists && cc.certificate.examined.is_some_and(|e| e <= 3), "algorithm C on C9: {cc}");
    Ok(())
}

fn c5_cycle_designs(p: &mut Produced) -> Check {
    for n in [5, 17, 23, 29, 35, 41, 47, 53, 59, 65] {
        let (d, g) = cycle_design(n).map_err(|e| format!("C{n}: {e}"))?;
        ok_against(&d, &g)?;
        ensure!(g == cycle(n).unwrap(), "C{n}: wrong graph");
        p.designs.push((format!("C{n}"), d, g));
    }
    ensure!(matches!(cycle_design(11), Err(Error::NoDesignExists(11))), "C11 should have no design");
    for m in 5..=40 {
        let t = find_difference_triples(m).map_err(|e| e.to_string())?;
        ensure!(t.is_valid(), "m = {m}: invalid triples");
    }
    Ok(())
}

fn c6_wilson(p: &mut Produced) -> Check {
    for (g_size, order, blocks) in [(21, 63, Some(672)), (23, 69, None), (15, 45, None)] {
        let gdd = gdd_g3(g_size).map_err(|e| e.to_string())?;
        ensure!(verify_gdd(&gdd).ok, "gdd_g3({g_size}) does not verify");
        let ingredients = BTreeMap::from([(g_size, cycle_design(g_size).map_err(|e| e.to_string())?)]);
        let (d, g) = wilson_fill(&gdd, &ingredients).map_err(|e| e.to_string())?;
        ensure!(d.n() == order, "order {} instead of {order}", d.n());
        ensure!(Some(d.len() as u64) == params(order as u64, 2).b, "order {order}: {} blocks", d.len());
        if let Some(b) = blocks {
            ensure!(d.len() == b, "order {order}: {} blocks, expected {b}", d.len());
        }
        ok_against(&d, &g)?;
        ensure!(!g.is_connected(), "order {order}: composed graph is connected");
        p.designs.push((format!("wilson {order}"), d, g));
    }
    Ok(())
}

fn c7_properties(_: &mut Produced) -> Check {
    for seed in 0..20 {
        let g = random_regular_girth5(22, 3, seed).map_err(|e| e.to_string())?;
        let d = algorithm_d(&g).map_err(|e| e.to_string())?.status;
        let b = algorithm_b(&g).map_err(|e| e.to_string())?.status;
        let c = exact_cover(&g, Mode::Decide).map_err(|e| e.to_string())?.status;
        ensure!(b == c && c.is_decisive(), "(22,3) seed {seed}: B = {b}, cover = {c}");
        ensure!(d == Status::Inconclusive || d == c, "(22,3) seed {seed}: D = {d}, cover = {c}");
    }
    for seed in 0..5 {
        let g = random_regular_girth5(25, 4, seed).map_err(|e| e.to_string())?;
        let c = algorithm_c(&g).map_err(|e| e.to_string())?.status;
        if c == Status::NotExists {
            let cover = exact_cover(&g, Mode::Decide).map_err(|e| e.to_string())?.status;
            ensure!(cover == Status::NotExists, "(25,4) seed {seed}: C refutes but cover says {cover}");
        }
    }
    Ok(())
}

/// Whether the remainder pairs of a 2-regular graph split into triangles,
/// by trying every set of pairwise disjoint candidate triangles.
fn brute_force_exists(g: &Graph) -> bool {
    let n = g.order();
    let mut dist = vec![vec![usize::MAX; n]; n];
    for (s, row) in dist.iter_mut().enumerate() {
        row[s] = 0;
        let mut frontier = vec![s];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in g.neighbors(u) {
                    if row[w] == usize::MAX {
                        row[w] = d;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
    }
    // remainder pairs: distance at least 3
    let far = |a: usize, b: usize| dist[a][b] >= 3;
    let target: BTreeSet<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| far(a, b)).collect();
    let mut triangles = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if far(a, b) && far(a, c) && far(b, c) {
                    triangles.push([(a, b), (a, c), (b, c)]);
                }
            }
        }
    }
    fn go(i: usize, tris: &[[(usize, usize); 3]], used: &mut BTreeSet<(usize, usize)>, target: &BTreeSet<(usize, usize)>) -> bool {
        if used.len() == target.len() {
            return true;
        }
        if i == tris.len() {
            return false;
        }
        if tris[i].iter().all(|p| !used.contains(p)) {
            used.extend(tris[i]);
            let found = go(i + 1, tris, used, target);
            for p in &tris[i] {
                used.remove(p);
            }
            if found {
                return true;
            }
        }
        go(i + 1, tris, used, target)
    }
    go(0, &triangles, &mut BTreeSet::new(), &target)
}

fn c8_oracle(_: &mut Produced) -> Check {
    let mut graphs: Vec<(String, Graph)> = (5..=11).map(|n| (format!("C{n}"), cycle(n).unwrap())).collect();
    graphs.push(("C5+C6".into(), disjoint_union(&cycle(5).unwrap(), &cycle(6).unwrap())));
    for (name, g) in &graphs {
        let expected = brute_force_exists(g);
        let got = exact_cover(g, Mode::Decide).map_err(|e| e.to_string())?.status;
        ensure!(got == if expected { Status::Exists } else { Status::NotExists }, "{name}: cover {got}, brute force {expected}");
    }
    Ok(())
}

/// Partners of each point over the blocks that are not closed
/// neighbourhoods (one copy of each neighbourhood is set aside).
fn remainder_degrees(d: &Design, g: &Graph) -> Vec<usize> {
    let mut nbhd: Vec<Vec<usize>> = (0..g.order())
        .map(|v| {
            let mut b: Vec<usize> = g.neighbors(v).to_vec();
            b.push(v);
            b.sort_unstable();
            b
        })
        .collect();
    let mut partners = vec![0; d.n()];
    for b in d.blocks() {
        if let Some(pos) = nbhd.iter().position(|x| x == b) {
            nbhd.swap_remove(pos);
            continue;
        }
        for &x in b {
            partners[x] += b.len() - 1;
        }
    }
    partners
}

fn c9_invariants(p: &mut Produced) -> Check {
    ensure!(!p.designs.is_empty(), "no designs recorded");
    for (name, d, g) in &p.designs {
        let delta = d.delta();
        let want = d.n() - delta * delta - 1;
        ensure!(remainder_degrees(d, g).iter().all(|&x| x == want), "{name}: remainder degree is not {want}");
        let again = from_graph6(&to_graph6(g)).map_err(|e| e.to_string())?;
        ensure!(&again == g, "{name}: graph6 round trip");
        ensure!(design::io::from_text(&design::io::to_text(d)).map_err(|e| e.to_string())? == *d, "{name}: text round trip");
        ensure!(design::io::from_json(&design::io::to_json(d)).map_err(|e| e.to_string())? == *d, "{name}: JSON round trip");
    }
    for (family, order) in all_builtin() {
        let bbs = builtin_table(order, family).map_err(|e| e.to_string())?;
        let again = develop::io::from_text(&develop::io::to_text(&bbs)).map_err(|e| e.to_string())?;
        ensure!(again == bbs, "{order}:{family}: base-block round trip");
    }
    for g_size in [1, 2, 7, 21] {
        let d = gdd_g3(g_size).map_err(|e| e.to_string())?;
        ensure!(gdd::from_json(&gdd::to_json(&d)).map_err(|e| e.to_string())? == d, "gdd_g3({g_size}) JSON round trip");
    }
    let hs = hoffman_singleton();
    ensure!(remainder_pairs(&hs).map_err(|e| e.to_string())?.is_empty(), "Hoffman–Singleton has remainder pairs");
    let d = neighborhood_design(&hs).map_err(|e| e.to_string())?;
    ensure!(d.len() == 50, "Hoffman–Singleton design has {} blocks", d.len());
    ok_against(&d, &hs)
}

type Criterion = (u32, &'static str, u64, fn(&mut Produced) -> Check);

const CRITERIA: [Criterion; 9] = [
    (1, "Sylvester design and completion", 5, c1_sylvester),
    (2, "parameter formulas and admissibility", 1, c2_params),
    (3, "builtin tables develop and verify", 60, c3_tables),
    (4, "eight cycle-union refutations", 10, c4_refutations),
    (5, "cycle designs and difference triples", 30, c5_cycle_designs),
    (6, "Wilson composition", 10, c6_wilson),
    (7, "random-graph property suite", 300, c7_properties),
    (8, "brute-force soundness oracle", 60, c8_oracle),
    (9, "invariant suite", 30, c9_invariants),
];

fn main() -> ExitCode {
    let mut produced = Produced::default();
    let mut failures = 0;
    for (id, title, limit, run) in CRITERIA {
        let start = Instant::now();
        let result = run(&mut produced);
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed <= Duration::from_secs(limit) {
                Ok(())
            } else {
                Err("time limit exceeded".to_string())
            }
        });
        let verdict = if result.is_ok() { "PASS" } else { "FAIL" };
        println!("criterion {id}: {verdict} {title} ({:.2} s, limit {limit} s)", elapsed.as_secs_f64());
        if let Err(why) = result {
            println!("    {why}");
            failures += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failures, CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
