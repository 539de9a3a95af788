use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use witting_ks::bits::BitVec;
use witting_ks::catalog::{build_system, SystemId};
use witting_ks::ksproofs::*;
use witting_ks::numerics::eis_inner;
use witting_ks::systems::*;

fn bases_of(id: SystemId) -> (RaySystem, BasisTable) {
    let sys = build_system(id).unwrap();
    let bases = enumerate_bases(&sys).unwrap();
    (sys, bases)
}

/// Counts odd-weight kernel vectors by walking all 2^k combinations.
fn brute_force_proof_count(a: &ParityAnalysis) -> u64 {
    assert!(a.kernel_dim <= EXHAUSTIVE_KERNEL_DIM);
    let mut v = BitVec::zeros(a.n_bases);
    let mut odd = 0;
    for step in 1u64..(1u64 << a.kernel_dim) {
        v.xor_assign(&a.kernel_basis[step.trailing_zeros() as usize]);
        odd += (v.count_ones() % 2) as u64;
    }
    odd
}

#[test]
fn bases_are_pairwise_orthogonal_exactly() {
    let mut ids = vec![SystemId::PenroseCanonical, SystemId::Witting, SystemId::F148];
    ids.extend((1..=8).map(SystemId::F148Sub));
    for id in ids {
        let (sys, bases) = bases_of(id);
        let rays = sys.exact_rays().unwrap();
        for b in &bases.bases {
            for (i, &x) in b.iter().enumerate() {
                for &y in &b[i + 1..] {
                    assert!(eis_inner(rays[x], rays[y]).unwrap().is_zero(), "{id}");
                }
            }
        }
        assert!(signature(&sys, &bases).incidence_identity_holds());
    }
    let (sys, bases) = bases_of(SystemId::E8);
    for b in &bases.bases {
        for (i, &x) in b.iter().enumerate() {
            for &y in &b[i + 1..] {
                let (SystemRay::Real8(p), SystemRay::Real8(q)) = (&sys.rays[x], &sys.rays[y]) else {
                    panic!()
                };
                assert!(p.realified().dot(&q.realified()).is_zero());
            }
        }
    }
}

#[test]
fn kernel_vectors_annihilate_the_incidence_matrix() {
    for id in [SystemId::PenroseCanonical, SystemId::E8, SystemId::F148] {
        let (sys, bases) = bases_of(id);
        let m = IncidenceMatrixGF2::new(sys.len(), &bases);
        let a = parity_analysis(&m);
        assert_eq!(a.rank + a.kernel_dim, bases.len());
        for v in &a.kernel_basis {
            assert!(m.left_multiply(v).is_empty());
            // The same fact by direct counting.
            let mut counts = vec![0usize; sys.len()];
            for b in v.iter_ones() {
                for &r in &bases.bases[b] {
                    counts[r] += 1;
                }
            }
            assert!(counts.iter().all(|c| c % 2 == 0), "{id}");
        }
    }
}

#[test]
fn proof_count_matches_exhaustive_enumeration_on_small_kernels() {
    let (e8, e8_bases) = bases_of(SystemId::E8);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for size in [88, 92, 96, 100] {
        for _ in 0..4 {
            let mut pick = e8_bases.bases.clone();
            pick.shuffle(&mut rng);
            pick.truncate(size);
            let sub = BasisTable::new(pick);
            let a = parity_analysis(&IncidenceMatrixGF2::new(e8.len(), &sub));
            if a.kernel_dim > EXHAUSTIVE_KERNEL_DIM {
                continue;
            }
            checked += 1;
            assert_eq!(a.proof_count, BigUint::from(brute_force_proof_count(&a)));
            for p in enumerate_parity_proofs(&a, 20, sub.len()) {
                assert!(verify_parity_proof(&sub, e8.len(), &p.basis_indices).is_valid());
            }
        }
    }
    assert!(checked >= 8, "only {checked} samples had small kernels");

    let (p, pb) = bases_of(SystemId::PenroseCanonical);
    let a = parity_analysis(&IncidenceMatrixGF2::new(p.len(), &pb));
    assert!(a.kernel_dim <= EXHAUSTIVE_KERNEL_DIM);
    assert_eq!(brute_force_proof_count(&a), 0);
}

#[test]
fn enumerated_proofs_come_lightest_first() {
    let (e8, bases) = bases_of(SystemId::E8);
    let a = parity_analysis(&IncidenceMatrixGF2::new(e8.len(), &bases));
    let proofs = enumerate_parity_proofs(&a, 100, bases.len());
    let weights: Vec<usize> = proofs.iter().map(|p| p.basis_indices.len()).collect();
    assert!(weights.windows(2).all(|w| w[0] <= w[1]));
    assert!(weights.iter().all(|w| w % 2 == 1));
    let capped = enumerate_parity_proofs(&a, 100, weights[0]);
    assert!(capped.iter().all(|p| p.basis_indices.len() == weights[0]));
    assert!(enumerate_parity_proofs(&a, 0, bases.len()).is_empty());
}

#[test]
fn penrose_minus_one_basis_still_has_no_parity_proof() {
    let (p, pb) = bases_of(SystemId::PenroseCanonical);
    for skip in 0..pb.len() {
        let mut rest = pb.bases.clone();
        rest.remove(skip);
        let a = parity_analysis(&IncidenceMatrixGF2::new(p.len(), &BasisTable::new(rest)));
        assert!(!a.odd_weight_exists, "removing basis {skip}");
        assert_eq!(a.proof_count, BigUint::from(0u8));
    }
}

#[test]
fn noncolorability_survives_random_branching_orders() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut ids = vec![SystemId::PenroseCanonical, SystemId::F148];
    ids.extend((1..=8).map(SystemId::F148Sub));
    for id in ids {
        let (sys, bases) = bases_of(id);
        assert!(!ks_colorable(&sys, &bases).is_colorable(), "{id}");
        for _ in 0..3 {
            let mut order: Vec<usize> = (0..sys.len()).collect();
            order.shuffle(&mut rng);
            match ks_colorable_with_order(&sys, &bases, &order) {
                ColoringOutcome::Noncolorable { complete, .. } => assert!(complete),
                other => panic!("{id}: {other:?}"),
            }
        }
    }
}

#[test]
fn both_search_strategies_agree_on_partial_systems() {
    let (sys, bases) = bases_of(SystemId::PenroseCanonical);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut colorable = 0;
    for keep in [10, 20, 30, 35, 38] {
        for _ in 0..5 {
            let mut pick = bases.bases.clone();
            pick.shuffle(&mut rng);
            pick.truncate(keep);
            let sub = BasisTable::new(pick);
            let a = ks_colorable(&sys, &sub);
            let mut order: Vec<usize> = (0..sys.len()).collect();
            order.shuffle(&mut rng);
            let b = ks_colorable_with_order(&sys, &sub, &order);
            assert_eq!(a.is_colorable(), b.is_colorable());
            for o in [a, b] {
                if let ColoringOutcome::Colorable { assignment, .. } = o {
                    check_coloring(&sys, &sub, &assignment).unwrap();
                    colorable += 1;
                }
            }
        }
    }
    assert!(colorable > 0);
}

#[test]
fn clique_search_matches_brute_force_everywhere_in_dimension_four() {
    let mut ids = vec![
        SystemId::PenroseCanonical,
        SystemId::PenroseEq3,
        SystemId::Witting,
        SystemId::F148,
    ];
    ids.extend((1..=8).map(SystemId::F148Sub));
    for id in ids {
        let (sys, bases) = bases_of(id);
        assert_eq!(brute_force_bases(&sys), bases, "{id}");
    }
}

#[test]
fn monomial_maps_carry_bases_for_every_pair() {
    let subs: Vec<_> = (1..=8).map(|n| bases_of(SystemId::F148Sub(n))).collect();
    for i in 0..8 {
        for j in 0..8 {
            let (a, ab) = &subs[i];
            let (b, bb) = &subs[j];
            let m = find_monomial_equivalence(a, b).unwrap().expect("equivalent");
            assert!(maps_bases(&m, a, ab, b, bb).unwrap(), "{} -> {}", i + 1, j + 1);
            for r in a.exact_rays().unwrap() {
                let img = m.apply_exact(r).unwrap();
                assert!(b.exact_rays().unwrap().contains(&&img));
            }
        }
    }
    let (p, _) = bases_of(SystemId::PenroseCanonical);
    let (e8, _) = bases_of(SystemId::E8);
    assert!(find_monomial_equivalence(&p, &e8).is_err());
}
