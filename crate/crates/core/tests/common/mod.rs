//! Shared helpers for the integration and acceptance suites: definitional
//! checkers kept independent of the solver paths they validate, plus the
//! seeded instance rosters used by the equivalence criteria.

#![allow(dead_code)]

use ftbasis::combinatorics::Combinations;
use ftbasis::generators::{gen_random, GenSpec};
use ftbasis::instance::{Instance, InstancePayload};
use ftbasis::{rank, ElementSet, Matroid, WeightMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Definitional fault-tolerance check: every failure set of size at most
/// `k` (not only the maximal size), with an explicit target rank.
pub fn direct_is_fault_tolerant<M: Matroid + ?Sized>(
    m: &M,
    b: &ElementSet,
    k: usize,
    target: usize,
) -> bool {
    let ids = b.as_slice();
    for f_size in 0..=k.min(ids.len()) {
        let mut failures = Combinations::new(ids.len(), f_size);
        while let Some(f) = failures.next() {
            let rest: ElementSet = ids
                .iter()
                .enumerate()
                .filter(|(pos, _)| !f.contains(pos))
                .map(|(_, &id)| id)
                .collect();
            if rank(m, &rest).unwrap() < target {
                return false;
            }
        }
    }
    true
}

/// Edge connectivity of a multigraph by exhaustive cut enumeration
/// (vertex 0 pinned to one side). Disconnected graphs return 0; self-loops
/// never cross a cut.
pub fn edge_connectivity(vertex_count: usize, edges: &[(u32, u32)]) -> usize {
    assert!(vertex_count >= 2, "connectivity needs at least two vertices");
    assert!(vertex_count <= 20, "exhaustive cut enumeration only");
    let full = (1u64 << (vertex_count - 1)) - 1;
    let mut best = usize::MAX;
    for mask in 0..full {
        let in_s = |v: u32| v == 0 || mask >> (v - 1) & 1 == 1;
        let crossing = edges.iter().filter(|&&(u, v)| in_s(u) != in_s(v)).count();
        best = best.min(crossing);
    }
    best
}

/// The zoo families exercised by the equivalence criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    LinearGf2,
    LinearRational,
    Graphic,
    Partition,
    Uniform,
    Transversal,
}

pub const ALL_FAMILIES: [Family; 6] = [
    Family::LinearGf2,
    Family::LinearRational,
    Family::Graphic,
    Family::Partition,
    Family::Uniform,
    Family::Transversal,
];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::LinearGf2 => "linear_gf2",
            Family::LinearRational => "linear_rational",
            Family::Graphic => "graphic",
            Family::Partition => "partition",
            Family::Uniform => "uniform",
            Family::Transversal => "transversal",
        }
    }
}

/// Seeded random instance of a family with rank at most 3 and at most 12
/// elements, plus a drawn `k <= 2`. Index `i` is the draw number; the same
/// `(family, i)` always yields the same instance.
pub fn small_random_instance(family: Family, i: u64) -> (Instance, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0F7B_A515 ^ (i << 8) ^ family as u64);
    let k = rng.gen_range(0..=2usize);
    let seed = rng.gen::<u64>();
    let spec = match family {
        Family::LinearGf2 => {
            let dim = rng.gen_range(1..=3usize);
            GenSpec::RandomGf2 {
                dim,
                n: rng.gen_range(dim.max(2)..=12),
                seed,
            }
        }
        Family::LinearRational => {
            let dim = rng.gen_range(1..=3usize);
            GenSpec::RandomRational {
                dim,
                n: rng.gen_range(dim.max(2)..=12),
                max_entry: 4,
                seed,
            }
        }
        Family::Graphic => GenSpec::RandomGraphic {
            vertices: rng.gen_range(2..=4usize),
            edges: rng.gen_range(4..=12usize),
            seed,
        },
        Family::Partition => {
            let blocks = rng.gen_range(1..=3usize);
            GenSpec::RandomPartition {
                n: rng.gen_range(blocks.max(2)..=12),
                blocks,
                // Keep the rank at most 3 under arbitrary capacities.
                cap_max: 3 / blocks,
                seed,
            }
        }
        Family::Uniform => {
            let r = rng.gen_range(1..=3usize);
            GenSpec::Uniform {
                r,
                n: rng.gen_range(r..=12),
            }
        }
        Family::Transversal => GenSpec::RandomTransversal {
            n: rng.gen_range(2..=12usize),
            positions: rng.gen_range(1..=3usize),
            edge_percent: rng.gen_range(30..=90u8),
            seed,
        },
    };
    let instance = gen_random(&spec).expect("roster parameters are valid");
    (instance, k)
}

/// Seeded weighted unit-capacity partition instance (weights 0..9 come from
/// the generator) plus target rank `r <= blocks` and `k <= 2`.
pub fn small_partition_instance(i: u64) -> (Instance, usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x009A_2711 ^ i);
    let blocks = rng.gen_range(1..=3usize);
    let spec = GenSpec::RandomPartition {
        n: rng.gen_range(blocks.max(2)..=12),
        blocks,
        cap_max: 1,
        seed: rng.gen(),
    };
    let r = rng.gen_range(0..=blocks);
    let k = rng.gen_range(0..=2usize);
    (gen_random(&spec).expect("valid"), r, k)
}

/// Seeded rational instance of rank at most 2 with weights.
pub fn small_rank2_instance(i: u64) -> (Instance, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2D_C0DE ^ (i << 4));
    let n = rng.gen_range(2..=12usize);
    let spec = GenSpec::RandomRational {
        dim: 2,
        n,
        max_entry: 4,
        seed: rng.gen(),
    };
    let inst = gen_random(&spec).expect("valid");
    let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=9)).collect();
    let k = rng.gen_range(0..=2usize);
    (inst.with_weights(weights), k)
}

/// Rebuilds an instance with the given elements removed and ids compacted,
/// mirroring what the deletion view presents. This is the "freshly
/// constructed ground truth" the view is compared against.
pub fn delete_from_instance(inst: &Instance, removed: &ElementSet) -> Instance {
    let keep =
        |i: usize| -> bool { !removed.contains(ftbasis::ElementId(i as u32)) };
    let payload = match &inst.payload {
        InstancePayload::LinearGf2 { dim, columns } => InstancePayload::LinearGf2 {
            dim: *dim,
            columns: columns
                .iter()
                .enumerate()
                .filter(|(i, _)| keep(*i))
                .map(|(_, c)| c.clone())
                .collect(),
        },
        InstancePayload::LinearRational { dim, columns } => InstancePayload::LinearRational {
            dim: *dim,
            columns: columns
                .iter()
                .enumerate()
                .filter(|(i, _)| keep(*i))
                .map(|(_, c)| c.clone())
                .collect(),
        },
        InstancePayload::Graphic {
            vertex_count,
            edges,
        } => InstancePayload::Graphic {
            vertex_count: *vertex_count,
            edges: edges
                .iter()
                .enumerate()
                .filter(|(i, _)| keep(*i))
                .map(|(_, &e)| e)
                .collect(),
        },
        InstancePayload::Partition {
            blocks,
            capacities,
        } => {
            // Old id -> new id over the kept elements, ascending.
            let n: usize = blocks.iter().map(Vec::len).sum();
            let mut new_id = vec![u32::MAX; n];
            let mut next = 0u32;
            for (old, slot) in new_id.iter_mut().enumerate() {
                if keep(old) {
                    *slot = next;
                    next += 1;
                }
            }
            let mut new_blocks = Vec::new();
            let mut new_caps = Vec::new();
            for (b, block) in blocks.iter().enumerate() {
                let kept: Vec<u32> = block
                    .iter()
                    .filter(|&&e| keep(e as usize))
                    .map(|&e| new_id[e as usize])
                    .collect();
                if !kept.is_empty() {
                    new_blocks.push(kept);
                    new_caps.push(capacities[b]);
                }
            }
            InstancePayload::Partition {
                blocks: new_blocks,
                capacities: new_caps,
            }
        }
        InstancePayload::Uniform { n, r } => InstancePayload::Uniform {
            n: n - removed.len(),
            r: *r,
        },
        InstancePayload::Transversal {
            positions,
            adjacency,
        } => InstancePayload::Transversal {
            positions: *positions,
            adjacency: adjacency
                .iter()
                .enumerate()
                .filter(|(i, _)| keep(*i))
                .map(|(_, a)| a.clone())
                .collect(),
        },
    };
    Instance::new(payload)
}

/// All subsets of `0..n` as element sets (for exhaustive small-n checks).
pub fn all_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    assert!(n <= 16);
    (0u32..1 << n).map(move |mask| (0..n as u32).filter(|i| mask >> i & 1 == 1).collect())
}

/// Least-squares slope of `ln(y)` against `ln(x)`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let sx: f64 = logs.iter().map(|p| p.0).sum();
    let sy: f64 = logs.iter().map(|p| p.1).sum();
    let sxx: f64 = logs.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = logs.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Minimum weight over all feasible subsets by full enumeration; the
/// fully-independent cross-check for the weighted solvers on tiny instances.
pub fn exhaustive_weighted_minimum<M: Matroid + ?Sized>(
    m: &M,
    w: &WeightMap,
    k: usize,
    target: usize,
) -> Option<u128> {
    let mut best: Option<u128> = None;
    for cand in all_subsets(m.ground_size()) {
        if direct_is_fault_tolerant(m, &cand, k, target) {
            let total = w.total(&cand);
            best = Some(best.map_or(total, |b| b.min(total)));
        }
    }
    best
}
