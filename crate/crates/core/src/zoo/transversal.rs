//! Transversal matroid: elements independent iff they can be matched
//! injectively into target positions.

use crate::element::ElementSet;
use crate::error::{Error, Result};
use crate::oracle::{Matroid, QueryCounter};

/// Transversal matroid over a bipartite adjacency: `adjacency[e]` lists the
/// target positions element `e` may occupy. A set is independent iff a
/// matching saturates it.
///
/// Matchings are recomputed from scratch per query with augmenting paths;
/// simple and adequate at desk scale.
#[derive(Debug, Clone)]
pub struct TransversalMatroid {
    positions: usize,
    adjacency: Vec<Vec<u32>>,
    calls: QueryCounter,
}

impl TransversalMatroid {
    pub fn new(positions: usize, adjacency: Vec<Vec<u32>>) -> Result<Self> {
        for (e, targets) in adjacency.iter().enumerate() {
            if let Some(&t) = targets.iter().find(|&&t| t as usize >= positions) {
                return Err(Error::Input(format!(
                    "element {} lists target {} but there are only {} positions",
                    e, t, positions
                )));
            }
        }
        Ok(TransversalMatroid {
            positions,
            adjacency,
            calls: QueryCounter::new(),
        })
    }

    pub fn positions(&self) -> usize {
        self.positions
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    fn saturates(&self, set: &ElementSet) -> bool {
        let mut owner: Vec<Option<u32>> = vec![None; self.positions];
        let mut visited = vec![false; self.positions];
        for id in set.iter() {
            visited.fill(false);
            if !self.augment(id.index() as u32, &mut owner, &mut visited) {
                return false;
            }
        }
        true
    }

    fn augment(&self, element: u32, owner: &mut [Option<u32>], visited: &mut [bool]) -> bool {
        for &t in &self.adjacency[element as usize] {
            let t = t as usize;
            if visited[t] {
                continue;
            }
            visited[t] = true;
            let free = match owner[t] {
                None => true,
                Some(prev) => self.augment(prev, owner, visited),
            };
            if free {
                owner[t] = Some(element);
                return true;
            }
        }
        false
    }
}

impl Matroid for TransversalMatroid {
    fn ground_size(&self) -> usize {
        self.adjacency.len()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        self.calls.bump();
        self.saturates(set)
    }

    fn oracle_calls(&self) -> u64 {
        self.calls.get()
    }
}
