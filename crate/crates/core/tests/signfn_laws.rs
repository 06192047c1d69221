mod common;

use common::*;
use orchard_core::{Permutation, Sign, SignFunction, SymmetryKind};
use proptest::prelude::*;

fn identity_like(phi: &SignFunction) -> SignFunction {
    SignFunction::identity(phi.ground_size(), phi.arity()).unwrap()
}

#[test]
fn group_laws_exhaustive_small() {
    for n in 1..=4 {
        for l in 1..=n {
            let all: Vec<SignFunction> = [SymmetryKind::Symmetric, SymmetryKind::Antisymmetric]
                .into_iter()
                .flat_map(|k| all_sign_functions(n, l, k))
                .collect();
            let e = SignFunction::identity(n, l).unwrap();
            for a in &all {
                assert_eq!(a.product(&e).unwrap(), *a);
                assert_eq!(a.product(a).unwrap(), e);
                for b in all.iter().take(8) {
                    for c in all.iter().rev().take(8) {
                        let left = a.product(b).unwrap().product(c).unwrap();
                        let right = a.product(&b.product(c).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }
}

#[test]
fn debug_dump_lists_subsets_in_colex_order() {
    let phi = SignFunction::from_i8(3, 2, SymmetryKind::Symmetric, &[1, -1, 1]).unwrap();
    assert_eq!(phi.to_string(), "{0,1} +1\n{0,2} -1\n{1,2} +1\n");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn product_is_associative_and_commutative(
        (a, b, c) in shape(7).prop_flat_map(|(n, l)| (sign_function_of(n, l), sign_function_of(n, l), sign_function_of(n, l)))
    ) {
        let ab = a.product(&b).unwrap();
        prop_assert_eq!(ab.product(&c).unwrap(), a.product(&b.product(&c).unwrap()).unwrap());
        prop_assert_eq!(ab.clone(), b.product(&a).unwrap());
        let expected = if a.arity() == 1 {
            SymmetryKind::Symmetric
        } else {
            SymmetryKind::from_sign(a.kind().sign() * b.kind().sign())
        };
        prop_assert_eq!(ab.kind(), expected);
        prop_assert_eq!(a.product(&identity_like(&a)).unwrap(), a.clone());
        prop_assert_eq!(a.product(&a).unwrap(), identity_like(&a));
    }

    #[test]
    fn eval_matches_sorting_parity((phi, g) in with_permutation(sign_function(8), SignFunction::ground_size)) {
        let tuple: Vec<usize> = g.images()[..phi.arity()].to_vec();
        prop_assert_eq!(phi.eval(&tuple).unwrap(), eval_oracle(&phi, &tuple));
    }

    #[test]
    fn adjacent_transposition_picks_up_kind_sign(
        (phi, g) in with_permutation(sign_function(8), SignFunction::ground_size),
        pos in any::<prop::sample::Index>(),
    ) {
        let l = phi.arity();
        prop_assume!(l >= 2);
        let t: Vec<usize> = g.images()[..l].to_vec();
        let i = pos.index(l - 1);
        let mut s = t.clone();
        s.swap(i, i + 1);
        prop_assert_eq!(phi.eval(&s).unwrap(), phi.kind().sign() * phi.eval(&t).unwrap());
    }

    #[test]
    fn permute_is_a_left_action(
        (phi, g, h) in sign_function(8).prop_flat_map(|phi| {
            let n = phi.ground_size();
            (Just(phi), permutation(n), permutation(n))
        })
    ) {
        let id = Permutation::identity(phi.ground_size());
        prop_assert_eq!(phi.permute(&id).unwrap(), phi.clone());
        let gh = g.compose(&h).unwrap();
        prop_assert_eq!(
            phi.permute(&h).unwrap().permute(&g).unwrap(),
            phi.permute(&gh).unwrap()
        );
    }

    #[test]
    fn permute_matches_pullback_definition((phi, g) in with_permutation(sign_function(7), SignFunction::ground_size)) {
        let moved = phi.permute(&g).unwrap();
        let ginv = g.inverse();
        prop_assert_eq!(moved.kind(), phi.kind());
        for (mask, value) in moved.iter() {
            let x: Vec<usize> = (0..64).filter(|i| mask >> i & 1 == 1).collect();
            let pulled: Vec<usize> = x.iter().map(|&i| ginv.apply(i)).collect();
            prop_assert_eq!(value, eval_oracle(&phi, &pulled));
        }
    }

    #[test]
    fn permute_is_an_automorphism(
        ((phi, psi), g) in sign_function_pair(8).prop_flat_map(|p| {
            let n = p.0.ground_size();
            (Just(p), permutation(n))
        })
    ) {
        prop_assert_eq!(
            phi.product(&psi).unwrap().permute(&g).unwrap(),
            phi.permute(&g).unwrap().product(&psi.permute(&g).unwrap()).unwrap()
        );
    }

    #[test]
    fn flip_changes_one_entry((phi, g) in with_permutation(sign_function(9), SignFunction::ground_size)) {
        let mut x: Vec<usize> = g.images()[..phi.arity()].to_vec();
        x.sort_unstable();
        let flipped = phi.flip(&x).unwrap();
        prop_assert_eq!(phi.hamming_distance(&flipped).unwrap(), 1);
        let mask = x.iter().fold(0u64, |m, &i| m | 1 << i);
        prop_assert_eq!(flipped.stored(mask), -phi.stored(mask));
        prop_assert_eq!(flipped.kind(), phi.kind());
        prop_assert_eq!(flipped.flip(&x).unwrap(), phi);
    }

    #[test]
    fn constants_are_fixed_points(n in 1usize..9, l_seed in any::<prop::sample::Index>(), g_seed in any::<u64>()) {
        let l = 1 + l_seed.index(n);
        let c = SignFunction::constant(n, l, SymmetryKind::Symmetric, Sign::Minus).unwrap();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(g_seed);
        let g = Permutation::random(n, &mut rng);
        prop_assert_eq!(c.permute(&g).unwrap(), c);
    }
}
