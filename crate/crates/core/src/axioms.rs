//! Sampled checks of the independence axioms (I1)-(I3) and closure axioms
//! (CL1)-(CL4), plus rank monotonicity and submodularity.
//!
//! These are diagnostics for oracle implementations: they draw random
//! subsets from a seeded PRNG and report the first violated law. They are
//! deliberately independent of how any concrete oracle computes its answers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::{ElementId, ElementSet};
use crate::ops::{closure, rank};
use crate::oracle::Matroid;

/// A violated law, with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub law: &'static str,
    pub witness: String,
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} violated: {}", self.law, self.witness)
    }
}

fn random_subset<R: Rng>(rng: &mut R, n: usize) -> ElementSet {
    (0..n as u32).filter(|_| rng.gen_bool(0.5)).collect()
}

fn greedy_subset_of<M: Matroid + ?Sized>(m: &M, of: &ElementSet) -> ElementSet {
    let mut acc = ElementSet::new();
    for id in of.iter() {
        acc.insert(id);
        if !m.is_independent(&acc) {
            acc.remove(id);
        }
    }
    acc
}

/// Samples (I1)-(I3). `samples` controls how many random draws each law gets.
pub fn check_independence_axioms<M: Matroid + ?Sized>(
    m: &M,
    samples: usize,
    seed: u64,
) -> Result<(), AxiomViolation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = m.ground_size();

    // (I1): the empty set is independent.
    if !m.is_independent(&ElementSet::new()) {
        return Err(AxiomViolation {
            law: "I1",
            witness: "empty set reported dependent".into(),
        });
    }

    for _ in 0..samples {
        // Purity: repeated identical queries agree.
        let probe = random_subset(&mut rng, n);
        if m.is_independent(&probe) != m.is_independent(&probe) {
            return Err(AxiomViolation {
                law: "purity",
                witness: format!("{probe:?} answered differently on repeat"),
            });
        }

        // (I2): subsets of independent sets are independent. Build an
        // independent set greedily, then drop random elements.
        let b = greedy_subset_of(m, &random_subset(&mut rng, n));
        let a: ElementSet = b.iter().filter(|_| rng.gen_bool(0.5)).collect();
        if !m.is_independent(&a) {
            return Err(AxiomViolation {
                law: "I2",
                witness: format!("{a:?} ⊆ {b:?} but only the superset is independent"),
            });
        }

        // (I3): a larger independent set extends a smaller one.
        let x = greedy_subset_of(m, &random_subset(&mut rng, n));
        let y = greedy_subset_of(m, &random_subset(&mut rng, n));
        if x.len() == y.len() {
            continue;
        }
        let (mut small, large) = if x.len() < y.len() { (x, y) } else { (y, x) };
        let mut extended = false;
        for e in large.difference(&small).iter() {
            small.insert(e);
            let ok = m.is_independent(&small);
            small.remove(e);
            if ok {
                extended = true;
                break;
            }
        }
        if !extended {
            return Err(AxiomViolation {
                law: "I3",
                witness: format!(
                    "independent {small:?} cannot be extended from independent {large:?}"
                ),
            });
        }
    }
    Ok(())
}

/// Samples (CL1)-(CL4) plus rank monotonicity and submodularity.
pub fn check_closure_axioms<M: Matroid + ?Sized>(
    m: &M,
    samples: usize,
    seed: u64,
) -> Result<(), AxiomViolation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = m.ground_size();
    for _ in 0..samples {
        let b = random_subset(&mut rng, n);
        let a: ElementSet = b.iter().filter(|_| rng.gen_bool(0.6)).collect();
        let cl_a = closure(m, &a).expect("in range");
        let cl_b = closure(m, &b).expect("in range");

        if !a.is_subset_of(&cl_a) {
            return Err(AxiomViolation {
                law: "CL1",
                witness: format!("{a:?} ⊄ cl = {cl_a:?}"),
            });
        }
        if !cl_a.is_subset_of(&cl_b) {
            return Err(AxiomViolation {
                law: "CL2",
                witness: format!("cl({a:?}) ⊄ cl({b:?})"),
            });
        }
        let cl_cl_a = closure(m, &cl_a).expect("in range");
        if cl_cl_a != cl_a {
            return Err(AxiomViolation {
                law: "CL3",
                witness: format!("cl(cl({a:?})) = {cl_cl_a:?} != {cl_a:?}"),
            });
        }

        // (CL4) exchange: pick x outside a with cl(a+x) \ cl(a) non-empty.
        let outside: Vec<ElementId> = (0..n as u32)
            .map(ElementId)
            .filter(|id| !a.contains(*id))
            .collect();
        if let Some(&x) = outside.first() {
            let mut ax = a.clone();
            ax.insert(x);
            let cl_ax = closure(m, &ax).expect("in range");
            for y in cl_ax.difference(&cl_a).iter() {
                if y == x {
                    continue;
                }
                let mut ay = a.clone();
                ay.insert(y);
                let cl_ay = closure(m, &ay).expect("in range");
                if !cl_ay.contains(x) {
                    return Err(AxiomViolation {
                        law: "CL4",
                        witness: format!(
                            "y={y:?} ∈ cl({a:?}+{x:?}) \\ cl({a:?}) but x ∉ cl(A+y)"
                        ),
                    });
                }
            }
        }

        // Rank monotonicity and submodularity on the sampled pair.
        let union = a.union(&b);
        let inter = a.intersection(&b);
        let (ra, rb) = (rank(m, &a).unwrap(), rank(m, &b).unwrap());
        let (ru, ri) = (rank(m, &union).unwrap(), rank(m, &inter).unwrap());
        if ra > rb {
            return Err(AxiomViolation {
                law: "rank-monotone",
                witness: format!("rank({a:?}) = {ra} > rank({b:?}) = {rb} despite inclusion"),
            });
        }
        if ru + ri > ra + rb {
            return Err(AxiomViolation {
                law: "rank-submodular",
                witness: format!("r(A∪B)+r(A∩B) = {} > {} = r(A)+r(B)", ru + ri, ra + rb),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{GraphicMatroid, UniformMatroid};

    struct BogusMatroid;

    impl Matroid for BogusMatroid {
        fn ground_size(&self) -> usize {
            4
        }
        fn is_independent(&self, set: &ElementSet) -> bool {
            // Violates (I2): {0,1} in, {0} out.
            set.len() == 2
        }
        fn oracle_calls(&self) -> u64 {
            0
        }
    }

    #[test]
    fn real_matroids_pass() {
        check_independence_axioms(&UniformMatroid::new(8, 3), 100, 1).unwrap();
        check_closure_axioms(&UniformMatroid::new(8, 3), 50, 2).unwrap();
        check_independence_axioms(&GraphicMatroid::complete(4), 100, 3).unwrap();
        check_closure_axioms(&GraphicMatroid::complete(4), 50, 4).unwrap();
    }

    #[test]
    fn violations_are_caught() {
        let err = check_independence_axioms(&BogusMatroid, 50, 5).unwrap_err();
        assert!(err.law == "I1" || err.law == "I2", "{err}");
    }
}
