//! Concrete matroid implementations.
//!
//! Each type owns its payload, answers independence queries from private
//! scratch space, and counts queries through a shared atomic counter, so
//! concurrent queries never share mutable state.

mod gf2;
mod graphic;
mod partition;
mod rational;
mod transversal;
mod uniform;

pub use gf2::{gf2_rank, LinearGf2Matroid};
pub use graphic::{graphic_is_independent, GraphicMatroid};
pub use partition::PartitionMatroid;
pub use rational::{rational_rank, LinearRationalMatroid};
pub use transversal::TransversalMatroid;
pub use uniform::UniformMatroid;
