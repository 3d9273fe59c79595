//! Graphic matroid: edges of a multigraph, independent iff they form a
//! forest.

use crate::element::ElementSet;
use crate::error::{Error, Result};
use crate::oracle::{Matroid, QueryCounter};

/// Graphic matroid of a multigraph. Parallel edges and self-loops are
/// allowed; a self-loop is a matroid loop.
#[derive(Debug, Clone)]
pub struct GraphicMatroid {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
    calls: QueryCounter,
}

impl GraphicMatroid {
    pub fn new(vertex_count: usize, edges: Vec<(u32, u32)>) -> Result<Self> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u as usize >= vertex_count || v as usize >= vertex_count {
                return Err(Error::Input(format!(
                    "edge {} = ({}, {}) has an endpoint >= vertex_count {}",
                    i, u, v, vertex_count
                )));
            }
        }
        Ok(GraphicMatroid {
            vertex_count,
            edges,
            calls: QueryCounter::new(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Cycle of length `n` on vertices `0..n`.
    pub fn cycle(n: usize) -> Self {
        let edges = (0..n)
            .map(|i| (i as u32, ((i + 1) % n) as u32))
            .collect();
        GraphicMatroid::new(n, edges).expect("cycle edges are in range")
    }

    /// Complete graph on `n` vertices, edges in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u as u32, v as u32));
            }
        }
        GraphicMatroid::new(n, edges).expect("complete-graph edges are in range")
    }

    /// Path with `n` vertices (`n - 1` bridge edges).
    pub fn path(n: usize) -> Self {
        let edges = (0..n.saturating_sub(1))
            .map(|i| (i as u32, (i + 1) as u32))
            .collect();
        GraphicMatroid::new(n, edges).expect("path edges are in range")
    }
}

impl Matroid for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        self.calls.bump();
        forest_check(self.vertex_count, &self.edges, set)
    }

    fn oracle_calls(&self) -> u64 {
        self.calls.get()
    }
}

/// Whether the selected edges are acyclic, via disjoint-set union.
pub fn graphic_is_independent(
    vertex_count: usize,
    edges: &[(u32, u32)],
    set: &ElementSet,
) -> bool {
    forest_check(vertex_count, edges, set)
}

fn forest_check(vertex_count: usize, edges: &[(u32, u32)], set: &ElementSet) -> bool {
    let mut dsu = Dsu::new(vertex_count);
    for id in set.iter() {
        let (u, v) = edges[id.index()];
        if !dsu.union(u as usize, v as usize) {
            return false;
        }
    }
    true
}

struct Dsu {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        // Path halving.
        while self.parent[x] as usize != x {
            self.parent[x] = self.parent[self.parent[x] as usize];
            x = self.parent[x] as usize;
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns `false` if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        true
    }
}
