use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use ftbasis::generators::{gen_random, gen_tight, GenSpec};
use ftbasis::ops::{closure, full_rank, rank};
use ftbasis::zoo::PartitionMatroid;
use ftbasis::{
    solve_bruteforce, solve_fpt, solve_partition_unit, ElementSet, FptOptions, InstancePayload,
    SearchOptions, WeightMap,
};

fn bench_rank_and_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_ops");
    group.sample_size(30);

    let gf2 = gen_random(&GenSpec::RandomGf2 { dim: 24, n: 128, seed: 1 })
        .unwrap()
        .build_oracle()
        .unwrap();
    let all = ElementSet::full(128);
    group.bench_function("gf2_rank_128cols", |b| {
        b.iter(|| rank(&gf2, black_box(&all)).unwrap())
    });

    let k12 = gen_random(&GenSpec::GraphicComplete { n: 12 })
        .unwrap()
        .build_oracle()
        .unwrap();
    let tree_seed = ElementSet::from_ids(0u32..11);
    group.bench_function("graphic_closure_k12", |b| {
        b.iter(|| closure(&k12, black_box(&tree_seed)).unwrap())
    });
    group.finish();
}

fn bench_solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("solvers");
    group.sample_size(20);

    for n in [8usize, 16, 32] {
        let m = gen_tight(2, 1, n).unwrap().build_oracle().unwrap();
        group.bench_with_input(BenchmarkId::new("fpt_tight_r2_k1", n), &n, |b, _| {
            b.iter(|| solve_fpt(&m, 1, &FptOptions::default()).unwrap())
        });
    }

    let k4 = gen_random(&GenSpec::GraphicComplete { n: 5 })
        .unwrap()
        .build_oracle()
        .unwrap();
    group.bench_function("bruteforce_k5", |b| {
        b.iter(|| solve_bruteforce(&k4, 1, None, &SearchOptions::default()).unwrap())
    });
    assert_eq!(full_rank(&k4), 4);
    group.finish();
}

fn bench_partition_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("partition_sweep");
    group.sample_size(20);
    for n in [256usize, 1024, 4096] {
        let inst = gen_random(&GenSpec::RandomPartition { n, blocks: 8, cap_max: 1, seed: 42 })
            .unwrap();
        let pm = match &inst.payload {
            InstancePayload::Partition { blocks, capacities } => {
                PartitionMatroid::new(blocks.clone(), capacities.clone()).unwrap()
            }
            _ => unreachable!(),
        };
        let w = WeightMap::new(inst.weights.clone().unwrap());
        group.bench_with_input(BenchmarkId::new("unit_caps_r3_k2", n), &n, |b, _| {
            b.iter(|| solve_partition_unit(&pm, &w, 3, 2).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_rank_and_closure, bench_solvers, bench_partition_sweep);
criterion_main!(benches);
