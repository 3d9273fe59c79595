//! Axiom suites over the matroid zoo and its deletion/truncation views, plus
//! exhaustive view-vs-ground-truth agreement on small instances.

mod common;

use common::{all_subsets, delete_from_instance, small_random_instance, Family, ALL_FAMILIES};
use ftbasis::axioms::{check_closure_axioms, check_independence_axioms};
use ftbasis::ops::{
    closure, delete, full_rank, is_fault_tolerant, is_h_uniform, rank, truncate,
};
use ftbasis::{ElementSet, Matroid};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sample_instances(per_family: u64) -> Vec<(Family, ftbasis::Instance)> {
    ALL_FAMILIES
        .iter()
        .flat_map(|&f| (0..per_family).map(move |i| (f, small_random_instance(f, i).0)))
        .collect()
}

#[test]
fn independence_axioms_hold_across_the_zoo() {
    for (family, inst) in sample_instances(12) {
        let m = inst.build_oracle().unwrap();
        check_independence_axioms(&m, 200, 17)
            .unwrap_or_else(|v| panic!("{}: {v}\n{}", family.name(), inst.to_json()));
    }
}

#[test]
fn closure_axioms_hold_across_the_zoo() {
    for (family, inst) in sample_instances(8) {
        let m = inst.build_oracle().unwrap();
        check_closure_axioms(&m, 60, 23)
            .unwrap_or_else(|v| panic!("{}: {v}\n{}", family.name(), inst.to_json()));
    }
}

#[test]
fn views_pass_axioms_too() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for (family, inst) in sample_instances(4) {
        let m = inst.build_oracle().unwrap();
        let n = m.ground_size();
        let removed: ElementSet = (0..n as u32).filter(|_| rng.gen_bool(0.3)).collect();
        let view = delete(&m, &removed);
        check_independence_axioms(&view, 120, 31)
            .unwrap_or_else(|v| panic!("{} deletion: {v}", family.name()));
        check_closure_axioms(&view, 40, 37)
            .unwrap_or_else(|v| panic!("{} deletion: {v}", family.name()));

        let limit = rng.gen_range(0..=3usize);
        let trunc = truncate(&m, limit);
        check_independence_axioms(&trunc, 120, 41)
            .unwrap_or_else(|v| panic!("{} truncation: {v}", family.name()));
        check_closure_axioms(&trunc, 40, 43)
            .unwrap_or_else(|v| panic!("{} truncation: {v}", family.name()));
    }
}

#[test]
fn deletion_views_agree_with_rebuilt_instances_exhaustively() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for family in ALL_FAMILIES {
        for i in 0..6u64 {
            let (inst, _) = small_random_instance(family, i);
            let n = inst.ground_size().min(10);
            // Work on a clipped instance so the subset loop stays 2^10.
            let clipped = delete_from_instance(
                &inst,
                &(n as u32..inst.ground_size() as u32).collect::<ElementSet>(),
            );
            let m = clipped.build_oracle().unwrap();
            let removed: ElementSet = (0..n as u32).filter(|_| rng.gen_bool(0.35)).collect();
            let view = delete(&m, &removed);
            let fresh = delete_from_instance(&clipped, &removed).build_oracle().unwrap();
            assert_eq!(view.ground_size(), fresh.ground_size());
            for subset in all_subsets(view.ground_size()) {
                assert_eq!(
                    view.is_independent(&subset),
                    fresh.is_independent(&subset),
                    "{}: subset {subset:?} disagrees after deleting {removed:?}",
                    family.name(),
                );
            }
        }
    }
}

#[test]
fn truncation_views_satisfy_the_rank_identity_exhaustively() {
    for family in ALL_FAMILIES {
        for i in 0..6u64 {
            let (inst, _) = small_random_instance(family, i);
            let n = inst.ground_size().min(10);
            let clipped = delete_from_instance(
                &inst,
                &(n as u32..inst.ground_size() as u32).collect::<ElementSet>(),
            );
            let m = clipped.build_oracle().unwrap();
            for limit in 0..=3usize {
                let view = truncate(&m, limit);
                for subset in all_subsets(n) {
                    let expected = rank(&m, &subset).unwrap().min(limit);
                    assert_eq!(
                        rank(&view, &subset).unwrap(),
                        expected,
                        "{}: rank of {subset:?} under {limit}-truncation",
                        family.name(),
                    );
                }
            }
        }
    }
}

#[test]
fn composed_views_answer_like_their_layers() {
    // Views stay lazy and stack in either order: a truncation of a deletion
    // and a deletion of a truncation agree with evaluating the layers by
    // hand on every subset.
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    for family in ALL_FAMILIES {
        let (inst, _) = small_random_instance(family, 2);
        let n = inst.ground_size().min(9);
        let clipped = delete_from_instance(
            &inst,
            &(n as u32..inst.ground_size() as u32).collect::<ElementSet>(),
        );
        let m = clipped.build_oracle().unwrap();
        let removed: ElementSet = (0..n as u32).filter(|_| rng.gen_bool(0.3)).collect();
        let limit = rng.gen_range(0..=3usize);

        let trunc_of_del = truncate(delete(&m, &removed), limit);
        let del_of_trunc = delete(truncate(&m, limit), &removed);
        let survivors: Vec<u32> = (0..n as u32)
            .filter(|&e| !removed.contains(ftbasis::ElementId(e)))
            .collect();
        for subset in all_subsets(survivors.len()) {
            let in_base: ElementSet = subset.iter().map(|i| survivors[i.index()]).collect();
            let expected = in_base.len() <= limit && m.is_independent(&in_base);
            assert_eq!(
                trunc_of_del.is_independent(&subset),
                expected,
                "{}: truncate∘delete on {subset:?}",
                family.name()
            );
            assert_eq!(
                del_of_trunc.is_independent(&subset),
                expected,
                "{}: delete∘truncate on {subset:?}",
                family.name()
            );
        }
    }
}

#[test]
fn fast_path_ranks_match_generic_greedy_exhaustively() {
    // The dedicated elimination routines agree with oracle-level greedy rank
    // on every subset of 10-element instances.
    let gf2 = small_random_instance(Family::LinearGf2, 3).0;
    let gf2 = delete_from_instance(
        &gf2,
        &(10u32..gf2.ground_size().max(10) as u32).collect::<ElementSet>(),
    );
    if let ftbasis::InstancePayload::LinearGf2 { columns, .. } = &gf2.payload {
        let bools: Vec<Vec<bool>> = columns
            .iter()
            .map(|s| s.chars().map(|c| c == '1').collect())
            .collect();
        let m = gf2.build_oracle().unwrap();
        for subset in all_subsets(m.ground_size()) {
            assert_eq!(
                ftbasis::zoo::gf2_rank(&bools, &subset),
                rank(&m, &subset).unwrap(),
                "gf2 fast path disagrees on {subset:?}"
            );
        }
    } else {
        unreachable!();
    }

    let rat = small_random_instance(Family::LinearRational, 5).0;
    let rat = delete_from_instance(
        &rat,
        &(10u32..rat.ground_size().max(10) as u32).collect::<ElementSet>(),
    );
    if let ftbasis::InstancePayload::LinearRational { columns, .. } = &rat.payload {
        let ints: Vec<Vec<num_bigint::BigInt>> = columns
            .iter()
            .map(|col| col.iter().map(|s| s.parse().unwrap()).collect())
            .collect();
        let m = rat.build_oracle().unwrap();
        for subset in all_subsets(m.ground_size()) {
            assert_eq!(
                ftbasis::zoo::rational_rank(&ints, &subset),
                rank(&m, &subset).unwrap(),
                "rational fast path disagrees on {subset:?}"
            );
        }
    } else {
        unreachable!();
    }
}

#[test]
fn fault_tolerance_matches_definitional_enumeration() {
    // The solver-facing check enumerates only maximal failure sets; the
    // definition quantifies over every |F| <= k. They agree everywhere.
    let mut rng = ChaCha8Rng::seed_from_u64(321);
    for family in ALL_FAMILIES {
        for i in 0..5u64 {
            let (inst, _) = small_random_instance(family, i);
            let m = inst.build_oracle().unwrap();
            let n = m.ground_size();
            let r = full_rank(&m);
            for k in 0..=2usize {
                for _ in 0..40 {
                    let b: ElementSet = (0..n as u32).filter(|_| rng.gen_bool(0.5)).collect();
                    assert_eq!(
                        is_fault_tolerant(&m, &b, k),
                        common::direct_is_fault_tolerant(&m, &b, k, r),
                        "{}: b={b:?} k={k}",
                        family.name(),
                    );
                }
            }
        }
    }
}

#[test]
fn minimum_size_sets_are_fault_tolerant_iff_uniform() {
    // Biconditional on |B| = k + rank(M): fault tolerance == r-uniformity.
    for family in ALL_FAMILIES {
        for i in 0..4u64 {
            let (inst, k) = small_random_instance(family, i);
            let n = inst.ground_size().min(9);
            let clipped = delete_from_instance(
                &inst,
                &(n as u32..inst.ground_size() as u32).collect::<ElementSet>(),
            );
            let m = clipped.build_oracle().unwrap();
            let r = full_rank(&m);
            if r == 0 {
                continue;
            }
            for b in all_subsets(n).filter(|b| b.len() == k + r) {
                assert_eq!(
                    is_fault_tolerant(&m, &b, k),
                    is_h_uniform(&m, &b, r),
                    "{}: B = {b:?}, k = {k}, r = {r}",
                    family.name(),
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // CL1-CL3 verbatim on random subsets of random zoo instances.
    #[test]
    fn closure_laws_hold_on_random_subsets(
        family_idx in 0..6usize,
        draw in 0..20u64,
        mask in any::<u16>(),
    ) {
        let (inst, _) = small_random_instance(ALL_FAMILIES[family_idx], draw);
        let m = inst.build_oracle().unwrap();
        let n = m.ground_size();
        let a: ElementSet = (0..n as u32).filter(|i| mask >> (i % 16) & 1 == 1).collect();
        let cl_a = closure(&m, &a).unwrap();
        prop_assert!(a.is_subset_of(&cl_a));
        prop_assert_eq!(closure(&m, &cl_a).unwrap(), cl_a.clone());
        // Monotone in the argument.
        if n > 0 {
            let b = a.union(&ElementSet::from_ids([0u32]));
            prop_assert!(cl_a.is_subset_of(&closure(&m, &b).unwrap()));
        }
    }

    #[test]
    fn rank_is_monotone_and_submodular(
        family_idx in 0..6usize,
        draw in 0..20u64,
        mask_a in any::<u16>(),
        mask_b in any::<u16>(),
    ) {
        let (inst, _) = small_random_instance(ALL_FAMILIES[family_idx], draw);
        let m = inst.build_oracle().unwrap();
        let n = m.ground_size();
        let a: ElementSet = (0..n as u32).filter(|i| mask_a >> (i % 16) & 1 == 1).collect();
        let b: ElementSet = (0..n as u32).filter(|i| mask_b >> (i % 16) & 1 == 1).collect();
        let union = a.union(&b);
        let inter = a.intersection(&b);
        let (ra, rb) = (rank(&m, &a).unwrap(), rank(&m, &b).unwrap());
        let (ru, ri) = (rank(&m, &union).unwrap(), rank(&m, &inter).unwrap());
        prop_assert!(ru + ri <= ra + rb, "submodularity: {} + {} > {} + {}", ru, ri, ra, rb);
        prop_assert!(ra <= ru && rb <= ru);
        prop_assert!(ri <= ra && ri <= rb);
    }
}
