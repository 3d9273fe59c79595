//! Serializable instance descriptions.
//!
//! An instance is a JSON document: a format version, a matroid kind with its
//! kind-specific payload, optional per-element weights, and optional
//! generator provenance. Rationals are carried as strings so exactness
//! survives the wire.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::Matroid;
use crate::weights::WeightMap;
use crate::zoo::{
    GraphicMatroid, LinearGf2Matroid, LinearRationalMatroid, PartitionMatroid,
    TransversalMatroid, UniformMatroid,
};

pub const INSTANCE_FORMAT_VERSION: &str = "ftb-instance/1";

/// Kind-specific matroid payload.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum InstancePayload {
    LinearGf2 {
        dim: usize,
        /// One bit string per column, e.g. `"101"`; character `i` is the
        /// entry in dimension `i`.
        columns: Vec<String>,
    },
    LinearRational {
        dim: usize,
        /// One column per element; entries are `"n"` or `"n/d"`.
        columns: Vec<Vec<String>>,
    },
    Graphic {
        vertex_count: usize,
        edges: Vec<(u32, u32)>,
    },
    Partition {
        blocks: Vec<Vec<u32>>,
        capacities: Vec<usize>,
    },
    Uniform {
        n: usize,
        r: usize,
    },
    Transversal {
        positions: usize,
        adjacency: Vec<Vec<u32>>,
    },
}

impl InstancePayload {
    pub fn kind_name(&self) -> &'static str {
        match self {
            InstancePayload::LinearGf2 { .. } => "linear_gf2",
            InstancePayload::LinearRational { .. } => "linear_rational",
            InstancePayload::Graphic { .. } => "graphic",
            InstancePayload::Partition { .. } => "partition",
            InstancePayload::Uniform { .. } => "uniform",
            InstancePayload::Transversal { .. } => "transversal",
        }
    }

    pub fn ground_size(&self) -> usize {
        match self {
            InstancePayload::LinearGf2 { columns, .. } => columns.len(),
            InstancePayload::LinearRational { columns, .. } => columns.len(),
            InstancePayload::Graphic { edges, .. } => edges.len(),
            InstancePayload::Partition { blocks, .. } => blocks.iter().map(Vec::len).sum(),
            InstancePayload::Uniform { n, .. } => *n,
            InstancePayload::Transversal { adjacency, .. } => adjacency.len(),
        }
    }
}

/// Provenance stamp for generated instances; parameters plus the named,
/// versioned PRNG make corpora reproducible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorInfo {
    pub family: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prng: Option<String>,
}

/// A complete instance document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub version: String,
    #[serde(flatten)]
    pub payload: InstancePayload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorInfo>,
}

impl Instance {
    pub fn new(payload: InstancePayload) -> Self {
        Instance {
            version: INSTANCE_FORMAT_VERSION.to_string(),
            payload,
            weights: None,
            generator: None,
        }
    }

    pub fn with_weights(mut self, weights: Vec<u64>) -> Self {
        self.weights = Some(weights);
        self
    }

    pub fn ground_size(&self) -> usize {
        self.payload.ground_size()
    }

    /// Parses and validates a JSON document. Syntax errors keep serde's
    /// line/column report; semantic errors name the offending field.
    pub fn from_json(text: &str) -> Result<Instance> {
        let instance: Instance =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("instance parse: {e}")))?;
        instance.validate()?;
        Ok(instance)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instance serialization is infallible")
    }

    pub fn to_json_pretty(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("instance serialization is infallible");
        text.push('\n');
        text
    }

    /// Structural validation beyond what construction enforces.
    pub fn validate(&self) -> Result<()> {
        if self.version != INSTANCE_FORMAT_VERSION {
            return Err(Error::Input(format!(
                "version: expected {:?}, found {:?}",
                INSTANCE_FORMAT_VERSION, self.version
            )));
        }
        // Constructing the oracle runs every payload consistency check.
        self.build_oracle()?;
        if let Some(w) = &self.weights {
            if w.len() != self.ground_size() {
                return Err(Error::Input(format!(
                    "weights: {} entries for a ground set of {}",
                    w.len(),
                    self.ground_size()
                )));
            }
        }
        Ok(())
    }

    /// Builds the concrete oracle for this payload.
    pub fn build_oracle(&self) -> Result<Box<dyn Matroid>> {
        Ok(match &self.payload {
            InstancePayload::LinearGf2 { dim, columns } => {
                Box::new(LinearGf2Matroid::from_bit_strings(*dim, columns)?)
            }
            InstancePayload::LinearRational { dim, columns } => {
                for (j, col) in columns.iter().enumerate() {
                    if col.len() != *dim {
                        return Err(Error::Input(format!(
                            "payload.columns[{}]: dimension {} does not match dim {}",
                            j,
                            col.len(),
                            dim
                        )));
                    }
                }
                Box::new(LinearRationalMatroid::from_rational_strings(columns)?)
            }
            InstancePayload::Graphic {
                vertex_count,
                edges,
            } => Box::new(GraphicMatroid::new(*vertex_count, edges.clone())?),
            InstancePayload::Partition {
                blocks,
                capacities,
            } => Box::new(PartitionMatroid::new(blocks.clone(), capacities.clone())?),
            InstancePayload::Uniform { n, r } => Box::new(UniformMatroid::new(*n, *r)),
            InstancePayload::Transversal {
                positions,
                adjacency,
            } => Box::new(TransversalMatroid::new(*positions, adjacency.clone())?),
        })
    }

    /// The instance's weight map, or `None` for unweighted instances.
    pub fn weight_map(&self) -> Option<WeightMap> {
        self.weights.clone().map(WeightMap::new)
    }
}
