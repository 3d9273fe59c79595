//! Minimum fault-tolerant bases in matroids.
//!
//! A `k`-fault-tolerant basis of a matroid is a minimum-size element set
//! that still spans the whole matroid after the removal of any `k` of its
//! elements (for graphs: a minimum `(k+1)`-edge-connected spanning
//! subgraph; for vector configurations: a smallest spanning set that
//! survives `k` lost vectors). This crate provides:
//!
//! - generic matroid operations over independence oracles ([`ops`]);
//! - concrete oracles: linear over GF(2) and the exact rationals, graphic,
//!   partition, uniform, transversal ([`zoo`]);
//! - a brute-force reference solver ([`exact`]), the fixed-parameter solver
//!   driven by important-element extraction ([`fpt`]), and polynomial-time
//!   weighted solvers for partition matroids and rank at most two
//!   ([`partition_solver`]);
//! - deterministic instance generators ([`generators`]) and a JSON wire
//!   format ([`instance`]);
//! - sampled axiom checkers for oracle implementations ([`axioms`]).

pub mod axioms;
pub mod combinatorics;
pub mod element;
pub mod error;
pub mod exact;
pub mod fpt;
pub mod generators;
pub mod instance;
pub mod ops;
pub mod oracle;
pub mod partition_solver;
pub mod report;
pub mod weights;
pub mod zoo;

pub use element::{ElementId, ElementSet};
pub use error::{Error, Result};
pub use exact::{exists_ft_basis, solve_bruteforce};
pub use fpt::{solve_fpt, FptOptions, FptOutcome, ImportantConfig};
pub use instance::{Instance, InstancePayload};
pub use ops::{
    closure, delete, fault_witness, find_basis, full_rank, is_fault_tolerant, is_h_uniform,
    rank, rank_profile, remove_loops, size_bounds, truncate, RankProfile,
};
pub use oracle::{Deletion, Matroid, Truncation};
pub use partition_solver::{
    collinearity_classes, solve_partition_general, solve_partition_unit, solve_rank_le2,
};
pub use report::{SearchOptions, SolveReport};
pub use weights::WeightMap;
