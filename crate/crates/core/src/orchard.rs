//! The orchard cocycle and the orchard morphism.
//!
//! For `φ` in `F_±(E^(l))` with kind sign `ε`, and `y ≠ z`,
//!
//! ```text
//! σ_φ(y, z) = ε^C(n-3, l-2) · ∏ φ(x_1, …, x_{l-1}, y) · φ(x_1, …, x_{l-1}, z)
//! ```
//!
//! the product running over increasing `(l-1)`-tuples avoiding `y` and `z`.
//! `σ_φ` is always a closed 1-cochain, and `φ ↦ ∂⁻¹(σ_φ)` is a
//! `Sym(E)`-equivariant homomorphism into the group of two-partitions.

use serde::Serialize;

use crate::cochain::{self, TwoPartition};
use crate::error::{Error, Result};
use crate::sign::{Sign, SymmetryKind};
use crate::signfn::{words_for, SignFunction};
use crate::subset::{self, binomial, full_mask, Subsets};

/// Parity of `C(a, b)` extended to all integers by: `C(a, b) = 0` when
/// `b < 0`, when `a < 0`, or when `b > a`; the usual binomial otherwise.
pub fn binomial_parity(a: i64, b: i64) -> bool {
    if b < 0 || a < 0 || b > a {
        return false;
    }
    // Lucas: C(a, b) is odd iff the bits of b are a subset of those of a
    b & !a == 0
}

/// `ε^C(n-3, l-2)`.
pub fn prefactor(n: usize, arity: usize, kind: SymmetryKind) -> Sign {
    kind.sign()
        .pow_parity(binomial_parity(n as i64 - 3, arity as i64 - 2))
}

/// The orchard cocycle `σ_φ` as a symmetric function of arity 2.
pub fn orchard_cocycle(phi: &SignFunction) -> Result<SignFunction> {
    let (n, l) = (phi.ground_size(), phi.arity());
    if n < 2 {
        return Err(Error::Invalid(format!(
            "the orchard cocycle needs at least two points, got {n}"
        )));
    }
    let acc = paired_products(phi);
    let pre = prefactor(n, l, phi.kind()).bit();

    let len = binomial(n, 2) as usize;
    let mut bits = vec![0u64; words_for(len)];
    for (r, mask) in Subsets::new(n, 2).enumerate() {
        let y = mask.trailing_zeros() as usize;
        let z = 63 - mask.leading_zeros() as usize;
        if (acc[y] >> z & 1 == 1) ^ (acc[z] >> y & 1 == 1) ^ pre {
            bits[r / 64] |= 1 << (r % 64);
        }
    }
    Ok(SignFunction::from_raw(n, 2, SymmetryKind::Symmetric, bits))
}

/// `acc[y]` bit `z` is the parity of `∏ φ(T, y)` over `(l-1)`-sets `T`
/// avoiding `y` and `z`.
///
/// Each `l`-subset `S` is visited once: for `y ∈ S`, `φ(S∖y, y)` is the
/// stored value on `S` times `ε` per element of `S` above `y`, and it enters
/// every pair `(y, z)` with `z ∉ S`.
fn paired_products(phi: &SignFunction) -> Vec<u64> {
    let n = phi.ground_size();
    let all = full_mask(n);
    let anti = phi.kind().is_antisymmetric();
    let mut acc = vec![0u64; n];
    for (r, s) in Subsets::new(n, phi.arity()).enumerate() {
        let stored = phi.bit_at_rank(r);
        let outside = !s & all;
        for y in subset::elements(s) {
            let above = s >> y >> 1;
            let b = stored ^ (anti && above.count_ones() % 2 == 1);
            if b {
                acc[y] ^= outside;
            }
        }
    }
    acc
}

/// One entry of the `σ` table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairSign {
    pub pair: [usize; 2],
    pub sign: Sign,
}

/// Everything computed along the way from `φ` to its two-partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrchardReport {
    pub n: usize,
    pub l: usize,
    pub kind: SymmetryKind,
    pub prefactor: Sign,
    /// `σ_φ` on every pair `y < z`, colex order.
    pub cocycle: Vec<PairSign>,
    pub partition: TwoPartition,
}

impl OrchardReport {
    /// The cocycle table as a sign function (`None` for a single point).
    pub fn cocycle_function(&self) -> Option<SignFunction> {
        if self.n < 2 {
            return None;
        }
        let values: Vec<Sign> = self.cocycle.iter().map(|p| p.sign).collect();
        SignFunction::new(self.n, 2, SymmetryKind::Symmetric, &values).ok()
    }
}

/// The orchard morphism `φ ↦ ∂⁻¹(σ_φ)`, with its intermediate data.
pub fn orchard_partition(phi: &SignFunction) -> Result<OrchardReport> {
    let (n, l, kind) = (phi.ground_size(), phi.arity(), phi.kind());
    let pre = prefactor(n, l, kind);
    if n == 1 {
        return Ok(OrchardReport {
            n,
            l,
            kind,
            prefactor: pre,
            cocycle: Vec::new(),
            partition: TwoPartition::trivial(1)?,
        });
    }
    let sigma = orchard_cocycle(phi)?;
    let partition = cochain::integrate(&sigma, 0)?;
    let cocycle = sigma
        .iter()
        .map(|(mask, sign)| PairSign {
            pair: [mask.trailing_zeros() as usize, 63 - mask.leading_zeros() as usize],
            sign,
        })
        .collect();
    Ok(OrchardReport {
        n,
        l,
        kind,
        prefactor: pre,
        cocycle,
        partition,
    })
}

/// Just the two-partition of `φ`.
pub fn orchard_morphism(phi: &SignFunction) -> Result<TwoPartition> {
    if phi.ground_size() == 1 {
        return TwoPartition::trivial(1);
    }
    cochain::integrate(&orchard_cocycle(phi)?, 0)
}

/// The two arity-1 lifts of the orchard morphism on symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaVariant {
    /// `β_φ(y) = ∏ φ(x_1, …, x_{l-1}, y)` over `(l-1)`-sets avoiding `y`.
    Containing,
    /// `β̃_φ(y) = ∏ φ(x_1, …, x_l)` over `l`-sets avoiding `y`.
    Avoiding,
}

/// `β_φ` or `β̃_φ` for a symmetric `φ`; `∂β = σ_φ` for both variants.
pub fn beta(phi: &SignFunction, variant: BetaVariant) -> Result<SignFunction> {
    if phi.kind() != SymmetryKind::Symmetric {
        return Err(Error::WrongKind {
            expected: SymmetryKind::Symmetric,
            got: phi.kind(),
        });
    }
    let n = phi.ground_size();
    let mut containing = vec![false; n];
    let mut total = false;
    for (mask, s) in phi.iter() {
        total ^= s.bit();
        if s.bit() {
            for y in subset::elements(mask) {
                containing[y] ^= true;
            }
        }
    }
    SignFunction::from_fn(n, 1, SymmetryKind::Symmetric, |y| {
        let y = y[0];
        Sign::from_bit(match variant {
            BetaVariant::Containing => containing[y],
            BetaVariant::Avoiding => total ^ containing[y],
        })
    })
}

/// The extra equivariant homomorphism on two points in arity 2: it sends
/// the antisymmetric coset to the nontrivial partition. The orchard
/// morphism is trivial in that shape.
pub fn exotic_partition(phi: &SignFunction) -> Result<TwoPartition> {
    if phi.ground_size() != 2 || phi.arity() != 2 {
        return Err(Error::Invalid(format!(
            "the exotic homomorphism exists only for n = 2, l = 2 (got n = {}, l = {})",
            phi.ground_size(),
            phi.arity()
        )));
    }
    match phi.kind() {
        SymmetryKind::Symmetric => TwoPartition::trivial(2),
        SymmetryKind::Antisymmetric => TwoPartition::from_mask(2, 0b10),
    }
}
