//! Strategies and independent oracles shared by the integration tests.
#![allow(dead_code)]

use itertools::Itertools;
use orchard_core::{Permutation, Sign, SignFunction, SymmetryKind};
use proptest::prelude::*;
use rand::Rng;

pub fn kind() -> impl Strategy<Value = SymmetryKind> {
    prop_oneof![Just(SymmetryKind::Symmetric), Just(SymmetryKind::Antisymmetric)]
}

/// `(n, l)` with `2 ≤ n ≤ max_n`, `1 ≤ l ≤ n`.
pub fn shape(max_n: usize) -> impl Strategy<Value = (usize, usize)> {
    (2..=max_n).prop_flat_map(|n| (Just(n), 1..=n))
}

pub fn sign_function_of(n: usize, l: usize) -> impl Strategy<Value = SignFunction> {
    let len = binomial(n, l);
    (kind(), proptest::collection::vec(any::<bool>(), len)).prop_map(move |(k, bits)| {
        let values: Vec<Sign> = bits.into_iter().map(Sign::from_bit).collect();
        SignFunction::new(n, l, k, &values).unwrap()
    })
}

pub fn sign_function(max_n: usize) -> impl Strategy<Value = SignFunction> {
    shape(max_n).prop_flat_map(|(n, l)| sign_function_of(n, l))
}

/// Two functions of the same shape, kinds independent.
pub fn sign_function_pair(max_n: usize) -> impl Strategy<Value = (SignFunction, SignFunction)> {
    shape(max_n).prop_flat_map(|(n, l)| (sign_function_of(n, l), sign_function_of(n, l)))
}

pub fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

pub fn with_permutation<S, T>(s: S, size: fn(&T) -> usize) -> impl Strategy<Value = (T, Permutation)>
where
    S: Strategy<Value = T>,
    T: Clone + std::fmt::Debug,
{
    s.prop_flat_map(move |t| {
        let n = size(&t);
        (Just(t), permutation(n))
    })
}

pub fn random_sign_function<R: Rng>(rng: &mut R, n: usize, l: usize, kind: SymmetryKind) -> SignFunction {
    let values: Vec<Sign> = (0..binomial(n, l)).map(|_| Sign::from_bit(rng.random())).collect();
    SignFunction::new(n, l, kind, &values).unwrap()
}

/// Every function of the given shape and kind, in counting order.
pub fn all_sign_functions(n: usize, l: usize, kind: SymmetryKind) -> impl Iterator<Item = SignFunction> {
    let len = binomial(n, l);
    assert!(len < 24, "exhaustive enumeration of 2^{len} tables");
    (0u32..1 << len).map(move |code| {
        let values: Vec<Sign> = (0..len).map(|i| Sign::from_bit(code >> i & 1 == 1)).collect();
        SignFunction::new(n, l, kind, &values).unwrap()
    })
}

/// Multiplicative binomial, `C(a, b)` for `0 ≤ b ≤ a`.
pub fn binomial(a: usize, b: usize) -> usize {
    if b > a {
        return 0;
    }
    (0..b).fold(1usize, |acc, i| acc * (a - i) / (i + 1))
}

/// `C(a, b)` with the library's degenerate conventions: zero whenever
/// `b < 0`, `a < 0`, or `b > a`.
pub fn extended_binomial(a: i64, b: i64) -> usize {
    if b < 0 || a < 0 || b > a {
        0
    } else {
        binomial(a as usize, b as usize)
    }
}

/// Number of inversions of a sequence of distinct values.
pub fn inversions(seq: &[usize]) -> usize {
    seq.iter()
        .enumerate()
        .map(|(i, &a)| seq[i + 1..].iter().filter(|&&b| b < a).count())
        .sum()
}

/// `φ` at an injective tuple: stored value on the sorted tuple, times the
/// sorting sign for antisymmetric `φ`.
pub fn eval_oracle(phi: &SignFunction, tuple: &[usize]) -> Sign {
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    let mask = sorted.iter().fold(0u64, |m, &i| m | 1 << i);
    let odd = phi.kind().is_antisymmetric() && inversions(tuple) % 2 == 1;
    phi.stored(mask) * Sign::from_parity(odd)
}

/// `σ_φ(y, z)` straight from the defining product, where "increasing" means
/// increasing for the total order listed in `order` (least element first).
pub fn cocycle_oracle(phi: &SignFunction, order: &[usize]) -> Vec<Sign> {
    let (n, l) = (phi.ground_size(), phi.arity());
    let eps = phi.kind().sign();
    let pre = if extended_binomial(n as i64 - 3, l as i64 - 2) % 2 == 1 {
        eps
    } else {
        Sign::Plus
    };
    let mut out = Vec::new();
    for z in 1..n {
        for y in 0..z {
            let rest: Vec<usize> = order.iter().copied().filter(|&x| x != y && x != z).collect();
            let mut s = pre;
            for t in rest.iter().copied().combinations(l - 1) {
                let mut ty = t.clone();
                ty.push(y);
                let mut tz = t;
                tz.push(z);
                s *= eval_oracle(phi, &ty) * eval_oracle(phi, &tz);
            }
            out.push(s);
        }
    }
    out
}

pub fn pair_table(sigma: &SignFunction) -> Vec<Sign> {
    sigma.iter().map(|(_, s)| s).collect()
}

/// Canonical representative bits of a partition as a mask.
pub fn rep_mask(p: &orchard_core::TwoPartition) -> u64 {
    p.other_mask()
}
