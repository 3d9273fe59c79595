//! Deterministic, seedable instance generators for every family used in
//! tests and benchmarks.
//!
//! The same spec always yields byte-identical instances: randomness comes
//! from a named PRNG (ChaCha8) seeded explicitly, and the seed, parameters,
//! and PRNG name are stamped into the instance header.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::{GeneratorInfo, Instance, InstancePayload};

/// Name of the PRNG recorded in generated instance headers.
pub const PRNG_NAME: &str = "chacha8";

/// A generator family with its parameters. Identical specs generate
/// byte-identical instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSpec {
    /// Scaled standard-basis vectors `j·e_i`, `1 <= i <= r`, `1 <= j <= n`:
    /// the minimum `k`-fault-tolerant basis has size exactly `(k+1)·r`.
    Tight { r: usize, k: usize, n: usize },
    Uniform { r: usize, n: usize },
    GraphicCycle { n: usize },
    GraphicComplete { n: usize },
    RandomGf2 { dim: usize, n: usize, seed: u64 },
    RandomRational {
        dim: usize,
        n: usize,
        max_entry: u64,
        seed: u64,
    },
    RandomPartition {
        n: usize,
        blocks: usize,
        cap_max: usize,
        seed: u64,
    },
    RandomTransversal {
        n: usize,
        positions: usize,
        edge_percent: u8,
        seed: u64,
    },
    /// Random connected-ish multigraph on few vertices; parallel edges and
    /// self-loops keep the rank small while the ground set grows.
    RandomGraphic { vertices: usize, edges: usize, seed: u64 },
    /// Random distinct grid points run through the general-position
    /// construction.
    GeneralPosition {
        points: usize,
        p: usize,
        pad_to_rank: usize,
        grid: u64,
        seed: u64,
    },
}

impl GenSpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            GenSpec::Tight { .. } => "tight",
            GenSpec::Uniform { .. } => "uniform",
            GenSpec::GraphicCycle { .. } => "graphic-cycle",
            GenSpec::GraphicComplete { .. } => "graphic-complete",
            GenSpec::RandomGf2 { .. } => "random-gf2",
            GenSpec::RandomRational { .. } => "random-rational",
            GenSpec::RandomPartition { .. } => "random-partition",
            GenSpec::RandomTransversal { .. } => "random-transversal",
            GenSpec::RandomGraphic { .. } => "random-graphic",
            GenSpec::GeneralPosition { .. } => "general-position",
        }
    }
}

fn stamp(family: &str, params: &[(&str, u64)], seed: Option<u64>) -> GeneratorInfo {
    GeneratorInfo {
        family: family.to_string(),
        params: params
            .iter()
            .map(|&(k, v)| (k.to_string(), v))
            .collect::<BTreeMap<_, _>>(),
        seed,
        prng: seed.map(|_| PRNG_NAME.to_string()),
    }
}

/// The tightness construction: `r·n` scaled standard-basis vectors over the
/// rationals. Requires `k < n`; each axis must offer more copies than can
/// fail.
pub fn gen_tight(r: usize, k: usize, n: usize) -> Result<Instance> {
    if r == 0 {
        return Err(Error::input("tight family requires r >= 1"));
    }
    if k >= n {
        return Err(Error::Input(format!(
            "tight family requires k < n, got k = {k}, n = {n}"
        )));
    }
    let mut columns = Vec::with_capacity(r * n);
    for axis in 0..r {
        for j in 1..=n {
            let mut col = vec!["0".to_string(); r];
            col[axis] = j.to_string();
            columns.push(col);
        }
    }
    let mut inst = Instance::new(InstancePayload::LinearRational { dim: r, columns });
    inst.generator = Some(stamp(
        "tight",
        &[("r", r as u64), ("k", k as u64), ("n", n as u64)],
        None,
    ));
    Ok(inst)
}

/// The general-position reduction: lift each point `(x, y)` to `(x, y, 1)`,
/// pad to the requested rank with `k + 1` unit vectors per extra dimension,
/// and set `k = p - 3`. The result has a `k`-fault-tolerant basis of size
/// `b = p + (pad_to_rank - 3)·(k + 1)` iff the points contain `p` in general
/// position. Returns `(instance, k, b)`.
pub fn gen_general_position(
    points: &[(String, String)],
    p: usize,
    pad_to_rank: usize,
) -> Result<(Instance, usize, usize)> {
    if p < 3 {
        return Err(Error::input(
            "general-position reduction requires p >= 3; fewer points are always in general position",
        ));
    }
    if pad_to_rank < 3 {
        return Err(Error::input("general-position reduction requires pad_to_rank >= 3"));
    }
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if a == b {
                return Err(Error::Input(format!(
                    "points must be pairwise distinct; ({}, {}) repeats",
                    a.0, a.1
                )));
            }
        }
    }
    let k = p - 3;
    let dim = pad_to_rank;
    let mut columns = Vec::with_capacity(points.len() + (dim - 3) * (k + 1));
    for (x, y) in points {
        let mut col = vec!["0".to_string(); dim];
        col[0] = x.clone();
        col[1] = y.clone();
        col[2] = "1".to_string();
        columns.push(col);
    }
    for axis in 3..dim {
        for _ in 0..=k {
            let mut col = vec!["0".to_string(); dim];
            col[axis] = "1".to_string();
            columns.push(col);
        }
    }
    let b = p + (pad_to_rank - 3) * (k + 1);
    let mut inst = Instance::new(InstancePayload::LinearRational { dim, columns });
    inst.generator = Some(stamp(
        "general-position",
        &[
            ("points", points.len() as u64),
            ("p", p as u64),
            ("pad_to_rank", pad_to_rank as u64),
            ("k", k as u64),
            ("b", b as u64),
        ],
        None,
    ));
    Ok((inst, k, b))
}

/// Generates the instance described by `spec`.
pub fn gen_random(spec: &GenSpec) -> Result<Instance> {
    match *spec {
        GenSpec::Tight { r, k, n } => gen_tight(r, k, n),
        GenSpec::Uniform { r, n } => {
            let mut inst = Instance::new(InstancePayload::Uniform { n, r });
            inst.generator = Some(stamp("uniform", &[("r", r as u64), ("n", n as u64)], None));
            Ok(inst)
        }
        GenSpec::GraphicCycle { n } => {
            if n == 0 {
                return Err(Error::input("cycle requires n >= 1"));
            }
            let edges = (0..n).map(|i| (i as u32, ((i + 1) % n) as u32)).collect();
            let mut inst = Instance::new(InstancePayload::Graphic {
                vertex_count: n,
                edges,
            });
            inst.generator = Some(stamp("graphic-cycle", &[("n", n as u64)], None));
            Ok(inst)
        }
        GenSpec::GraphicComplete { n } => {
            if n == 0 {
                return Err(Error::input("complete graph requires n >= 1"));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u as u32, v as u32));
                }
            }
            let mut inst = Instance::new(InstancePayload::Graphic {
                vertex_count: n,
                edges,
            });
            inst.generator = Some(stamp("graphic-complete", &[("n", n as u64)], None));
            Ok(inst)
        }
        GenSpec::RandomGf2 { dim, n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let columns: Vec<String> = (0..n)
                .map(|_| (0..dim).map(|_| if rng.gen_bool(0.5) { '1' } else { '0' }).collect())
                .collect();
            let mut inst = Instance::new(InstancePayload::LinearGf2 { dim, columns });
            inst.generator = Some(stamp(
                "random-gf2",
                &[("dim", dim as u64), ("n", n as u64)],
                Some(seed),
            ));
            Ok(inst)
        }
        GenSpec::RandomRational {
            dim,
            n,
            max_entry,
            seed,
        } => {
            if max_entry == 0 {
                return Err(Error::input("random-rational requires max_entry >= 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let max = max_entry as i64;
            let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(n);
            for _ in 0..n {
                let roll: f64 = rng.gen();
                let col: Vec<BigInt> = if roll < 0.10 {
                    vec![BigInt::from(0); dim]
                } else if roll < 0.35 && !columns.is_empty() {
                    // Scalar multiple of an earlier column: collinear pairs
                    // exercise closures and collinearity classes.
                    let base = rng.gen_range(0..columns.len());
                    let mut scalar = 0i64;
                    while scalar == 0 {
                        scalar = rng.gen_range(-3..=3);
                    }
                    columns[base].iter().map(|x| x * scalar).collect()
                } else {
                    (0..dim).map(|_| BigInt::from(rng.gen_range(-max..=max))).collect()
                };
                columns.push(col);
            }
            let columns = columns
                .into_iter()
                .map(|col| col.into_iter().map(|x| x.to_string()).collect())
                .collect();
            let mut inst = Instance::new(InstancePayload::LinearRational { dim, columns });
            inst.generator = Some(stamp(
                "random-rational",
                &[
                    ("dim", dim as u64),
                    ("n", n as u64),
                    ("max_entry", max_entry),
                ],
                Some(seed),
            ));
            Ok(inst)
        }
        GenSpec::RandomPartition {
            n,
            blocks,
            cap_max,
            seed,
        } => {
            if blocks == 0 || blocks > n {
                return Err(Error::Input(format!(
                    "random-partition requires 1 <= blocks <= n, got blocks = {blocks}, n = {n}"
                )));
            }
            if cap_max == 0 {
                return Err(Error::input("random-partition requires cap_max >= 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // The first `blocks` elements seed one block each; the rest land
            // in random blocks. Every block is nonempty by construction.
            let mut block_lists: Vec<Vec<u32>> = (0..blocks).map(|b| vec![b as u32]).collect();
            for e in blocks..n {
                block_lists[rng.gen_range(0..blocks)].push(e as u32);
            }
            let capacities: Vec<usize> =
                (0..blocks).map(|_| rng.gen_range(1..=cap_max)).collect();
            let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=9)).collect();
            let mut inst = Instance::new(InstancePayload::Partition {
                blocks: block_lists,
                capacities,
            })
            .with_weights(weights);
            inst.generator = Some(stamp(
                "random-partition",
                &[
                    ("n", n as u64),
                    ("blocks", blocks as u64),
                    ("cap_max", cap_max as u64),
                ],
                Some(seed),
            ));
            Ok(inst)
        }
        GenSpec::RandomTransversal {
            n,
            positions,
            edge_percent,
            seed,
        } => {
            if edge_percent > 100 {
                return Err(Error::input("edge_percent must be at most 100"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let adjacency: Vec<Vec<u32>> = (0..n)
                .map(|_| {
                    (0..positions as u32)
                        .filter(|_| rng.gen_range(0..100u8) < edge_percent)
                        .collect()
                })
                .collect();
            let mut inst = Instance::new(InstancePayload::Transversal {
                positions,
                adjacency,
            });
            inst.generator = Some(stamp(
                "random-transversal",
                &[
                    ("n", n as u64),
                    ("positions", positions as u64),
                    ("edge_percent", edge_percent as u64),
                ],
                Some(seed),
            ));
            Ok(inst)
        }
        GenSpec::RandomGraphic {
            vertices,
            edges,
            seed,
        } => {
            if vertices == 0 {
                return Err(Error::input("random-graphic requires vertices >= 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let edge_list: Vec<(u32, u32)> = (0..edges)
                .map(|_| {
                    let u = rng.gen_range(0..vertices as u32);
                    let v = rng.gen_range(0..vertices as u32);
                    (u.min(v), u.max(v))
                })
                .collect();
            let mut inst = Instance::new(InstancePayload::Graphic {
                vertex_count: vertices,
                edges: edge_list,
            });
            inst.generator = Some(stamp(
                "random-graphic",
                &[("vertices", vertices as u64), ("edges", edges as u64)],
                Some(seed),
            ));
            Ok(inst)
        }
        GenSpec::GeneralPosition {
            points,
            p,
            pad_to_rank,
            grid,
            seed,
        } => {
            if grid == 0 {
                return Err(Error::input("general-position grid must be >= 1"));
            }
            if (points as u64) > grid * grid {
                return Err(Error::Input(format!(
                    "cannot place {points} distinct points on a {grid}x{grid} grid"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut chosen: Vec<(u64, u64)> = Vec::with_capacity(points);
            while chosen.len() < points {
                let pt = (rng.gen_range(0..grid), rng.gen_range(0..grid));
                if !chosen.contains(&pt) {
                    chosen.push(pt);
                }
            }
            let string_points: Vec<(String, String)> = chosen
                .iter()
                .map(|&(x, y)| (x.to_string(), y.to_string()))
                .collect();
            let (mut inst, k, b) = gen_general_position(&string_points, p, pad_to_rank)?;
            inst.generator = Some(stamp(
                "general-position",
                &[
                    ("points", points as u64),
                    ("p", p as u64),
                    ("pad_to_rank", pad_to_rank as u64),
                    ("grid", grid),
                    ("k", k as u64),
                    ("b", b as u64),
                ],
                Some(seed),
            ));
            Ok(inst)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::solve_bruteforce;
    use crate::ops::full_rank;
    use crate::report::SearchOptions;

    #[test]
    fn tight_family_shape_and_optimum() {
        let inst = gen_tight(2, 1, 3).unwrap();
        assert_eq!(inst.ground_size(), 6);
        let m = inst.build_oracle().unwrap();
        assert_eq!(full_rank(&m), 2);
        let report = solve_bruteforce(&m, 1, None, &SearchOptions::default()).unwrap();
        assert_eq!(report.size, Some(4));

        let single = gen_tight(1, 0, 1).unwrap();
        let m = single.build_oracle().unwrap();
        let report = solve_bruteforce(&m, 0, None, &SearchOptions::default()).unwrap();
        assert_eq!(report.size, Some(1));
    }

    #[test]
    fn tight_family_rejects_k_at_least_n() {
        assert!(gen_tight(2, 3, 3).is_err());
        assert!(gen_tight(0, 0, 1).is_err());
    }

    #[test]
    fn general_position_padding_counts() {
        let pts: Vec<(String, String)> = [(0, 0), (0, 1), (1, 0), (2, 3)]
            .iter()
            .map(|&(x, y): &(i32, i32)| (x.to_string(), y.to_string()))
            .collect();
        let (inst, k, b) = gen_general_position(&pts, 4, 5).unwrap();
        assert_eq!(k, 1);
        // b = p + (pad-3)(k+1) = 4 + 2*2 = 8; ground = 4 points + 4 padding.
        assert_eq!(b, 8);
        assert_eq!(inst.ground_size(), 8);
        let m = inst.build_oracle().unwrap();
        assert_eq!(full_rank(&m), 5);
    }

    #[test]
    fn general_position_validates() {
        let dup = vec![("1".to_string(), "2".to_string()); 3];
        assert!(gen_general_position(&dup, 3, 3).is_err());
        let pts = vec![("0".to_string(), "0".to_string())];
        assert!(gen_general_position(&pts, 2, 3).is_err());
        assert!(gen_general_position(&pts, 3, 2).is_err());
    }

    #[test]
    fn uniform_and_cycle_specs() {
        let inst = gen_random(&GenSpec::Uniform { r: 2, n: 5 }).unwrap();
        let m = inst.build_oracle().unwrap();
        assert_eq!(m.ground_size(), 5);
        assert_eq!(full_rank(&m), 2);

        // C6 with k=1: the cycle is the unique minimum, all 6 edges.
        let inst = gen_random(&GenSpec::GraphicCycle { n: 6 }).unwrap();
        let m = inst.build_oracle().unwrap();
        let report = solve_bruteforce(&m, 1, None, &SearchOptions::default()).unwrap();
        assert_eq!(report.size, Some(6));
    }

    #[test]
    fn same_spec_yields_identical_bytes() {
        for spec in [
            GenSpec::RandomGf2 { dim: 3, n: 8, seed: 11 },
            GenSpec::RandomRational { dim: 2, n: 8, max_entry: 4, seed: 7 },
            GenSpec::RandomPartition { n: 9, blocks: 3, cap_max: 2, seed: 3 },
            GenSpec::RandomTransversal { n: 7, positions: 3, edge_percent: 60, seed: 5 },
            GenSpec::RandomGraphic { vertices: 4, edges: 9, seed: 9 },
            GenSpec::GeneralPosition { points: 6, p: 4, pad_to_rank: 3, grid: 5, seed: 2 },
        ] {
            let a = gen_random(&spec).unwrap().to_json_pretty();
            let b = gen_random(&spec).unwrap().to_json_pretty();
            assert_eq!(a, b, "{spec:?}");
        }
    }

    #[test]
    fn generated_instances_validate() {
        for seed in 0..5u64 {
            for spec in [
                GenSpec::RandomGf2 { dim: 3, n: 10, seed },
                GenSpec::RandomRational { dim: 2, n: 10, max_entry: 5, seed },
                GenSpec::RandomPartition { n: 10, blocks: 3, cap_max: 1, seed },
                GenSpec::RandomTransversal { n: 10, positions: 3, edge_percent: 50, seed },
                GenSpec::RandomGraphic { vertices: 4, edges: 10, seed },
            ] {
                let inst = gen_random(&spec).unwrap();
                inst.validate().expect("generated instance must validate");
            }
        }
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(gen_random(&GenSpec::RandomPartition { n: 2, blocks: 3, cap_max: 1, seed: 0 }).is_err());
        assert!(gen_random(&GenSpec::RandomPartition { n: 2, blocks: 1, cap_max: 0, seed: 0 }).is_err());
        assert!(gen_random(&GenSpec::RandomTransversal { n: 2, positions: 1, edge_percent: 101, seed: 0 }).is_err());
        assert!(gen_random(&GenSpec::GeneralPosition { points: 30, p: 4, pad_to_rank: 3, grid: 5, seed: 0 }).is_err());
        assert!(gen_random(&GenSpec::RandomRational { dim: 2, n: 2, max_entry: 0, seed: 0 }).is_err());
    }
}
