use std::collections::BTreeMap;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rgdesign::develop::{builtin_table, develop_with, Family};
use rgdesign::difference::cycle_design;
use rgdesign::gdd::{gdd_g3, wilson_fill_with};
use rgdesign::graph::hoffman_singleton;
use rgdesign::graph::io::to_graph6;
use rgdesign::search::{batch_with, random_regular_girth5, Stage};
use rgdesign::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn batch(c: &mut Criterion) {
    let input: String = (0..16).map(|s| to_graph6(&random_regular_girth5(22, 3, s).unwrap()) + "\n").collect();
    let mut group = c.benchmark_group("batch_22_3");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| batch_with(black_box(&input), &[Stage::A, Stage::D, Stage::Cover], 1_000_000, exec))
        });
    }
    group.finish();
}

fn girth(c: &mut Criterion) {
    let g = hoffman_singleton();
    let mut group = c.benchmark_group("girth_hoffman_singleton");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| black_box(&g).girth_with(exec)));
    }
    group.finish();
}

fn develop(c: &mut Criterion) {
    let tables: Vec<_> = [(202, Family::Delta3), (117, Family::Delta4)].into_iter().map(|(n, f)| builtin_table(n, f).unwrap()).collect();
    let mut group = c.benchmark_group("develop_tables");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| tables.iter().map(|t| develop_with(t, exec).unwrap().len()).sum::<usize>())
        });
    }
    group.finish();
}

fn wilson(c: &mut Criterion) {
    let gdd = gdd_g3(21).unwrap();
    let ingredients = BTreeMap::from([(21, cycle_design(21).unwrap())]);
    let mut group = c.benchmark_group("wilson_63");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| wilson_fill_with(&gdd, &ingredients, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, batch, girth, develop, wilson);
criterion_main!(benches);
