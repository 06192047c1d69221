//! Symmetric and antisymmetric `±1`-valued functions on injective
//! `l`-tuples of a finite set.
//!
//! A function is determined by its values on strictly increasing tuples;
//! those are stored as one bit per `l`-subset (`0 ↔ +1`, `1 ↔ -1`) in colex
//! rank order. Evaluation on any other injective tuple sorts it and applies
//! the kind's sign once per transposition.
//!
//! The same type doubles as the `(l-1)`-cochain group of the full simplex
//! when the kind is [`SymmetryKind::Symmetric`].

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{inversion_parity, Permutation};
use crate::sign::{Sign, SymmetryKind};
use crate::subset::{self, binomial, Subsets, MAX_GROUND};

/// Upper bound on the number of stored values.
pub const MAX_TABLE: u64 = 1 << 30;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignFunction {
    n: usize,
    arity: usize,
    kind: SymmetryKind,
    bits: Vec<u64>,
}

fn check_shape(n: usize, arity: usize) -> Result<usize> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::GroundTooLarge(n));
    }
    if arity == 0 || arity > n {
        return Err(Error::ArityOutOfRange { n, arity });
    }
    let len = binomial(n, arity);
    if len > MAX_TABLE {
        return Err(Error::Budget(format!("C({n}, {arity}) = {len} stored values")));
    }
    Ok(len as usize)
}

fn canonical_kind(arity: usize, kind: SymmetryKind) -> SymmetryKind {
    if arity == 1 {
        SymmetryKind::Symmetric
    } else {
        kind
    }
}

impl SignFunction {
    /// Builds a function from its values on sorted subsets listed in colex
    /// rank order.
    pub fn new(n: usize, arity: usize, kind: SymmetryKind, values: &[Sign]) -> Result<Self> {
        let len = check_shape(n, arity)?;
        if values.len() != len {
            return Err(Error::TableLength {
                expected: len,
                got: values.len(),
            });
        }
        let mut f = Self::blank(n, arity, kind, len);
        for (r, v) in values.iter().enumerate() {
            f.set_bit(r, v.bit());
        }
        Ok(f)
    }

    /// Same as [`SignFunction::new`] with values given as `±1` integers.
    pub fn from_i8(n: usize, arity: usize, kind: SymmetryKind, values: &[i8]) -> Result<Self> {
        let signs = values
            .iter()
            .map(|&v| Sign::try_from(v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, arity, kind, &signs)
    }

    /// Builds a function from an explicit `subset -> value` table. Every
    /// sorted `arity`-subset must appear exactly once.
    pub fn from_entries<I>(n: usize, arity: usize, kind: SymmetryKind, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, i64)>,
    {
        let len = check_shape(n, arity)?;
        let mut f = Self::blank(n, arity, kind, len);
        let mut seen = vec![false; len];
        for (subset, value) in entries {
            let sorted = subset.windows(2).all(|w| w[0] < w[1]);
            if subset.len() != arity || !sorted || subset.iter().any(|&i| i >= n) {
                return Err(Error::BadEntry(subset));
            }
            let r = subset::rank(subset::mask_of(&subset).expect("sorted and in range"));
            if std::mem::replace(&mut seen[r], true) {
                return Err(Error::BadEntry(subset));
            }
            let sign = match value {
                1 => Sign::Plus,
                -1 => Sign::Minus,
                v => return Err(Error::NotASign(v)),
            };
            f.set_bit(r, sign.bit());
        }
        if let Some(r) = seen.iter().position(|s| !s) {
            return Err(Error::MissingEntry(subset::to_vec(subset::unrank(r as u64, arity))));
        }
        Ok(f)
    }

    /// Builds a function by evaluating `value` on each sorted subset.
    pub fn from_fn<F>(n: usize, arity: usize, kind: SymmetryKind, mut value: F) -> Result<Self>
    where
        F: FnMut(&[usize]) -> Sign,
    {
        let len = check_shape(n, arity)?;
        let mut f = Self::blank(n, arity, kind, len);
        let mut buf = Vec::with_capacity(arity);
        for (r, mask) in Subsets::new(n, arity).enumerate() {
            buf.clear();
            buf.extend(subset::elements(mask));
            f.set_bit(r, value(&buf).bit());
        }
        Ok(f)
    }

    pub fn constant(n: usize, arity: usize, kind: SymmetryKind, value: Sign) -> Result<Self> {
        let len = check_shape(n, arity)?;
        let mut f = Self::blank(n, arity, kind, len);
        if value == Sign::Minus {
            for r in 0..len {
                f.set_bit(r, true);
            }
        }
        Ok(f)
    }

    /// The identity element of `F_±(E^(l))`: constant `+1`, symmetric.
    pub fn identity(n: usize, arity: usize) -> Result<Self> {
        Self::constant(n, arity, SymmetryKind::Symmetric, Sign::Plus)
    }

    /// Builds from a raw bit table in colex order. The caller guarantees the
    /// shape is valid and `bits` has the right length.
    pub(crate) fn from_raw(n: usize, arity: usize, kind: SymmetryKind, bits: Vec<u64>) -> Self {
        debug_assert_eq!(bits.len(), words_for(binomial(n, arity) as usize));
        SignFunction {
            n,
            arity,
            kind: canonical_kind(arity, kind),
            bits,
        }
    }

    fn blank(n: usize, arity: usize, kind: SymmetryKind, len: usize) -> Self {
        Self::from_raw(n, arity, kind, vec![0; words_for(len)])
    }

    #[inline]
    fn set_bit(&mut self, r: usize, bit: bool) {
        let (w, b) = (r / 64, r % 64);
        if bit {
            self.bits[w] |= 1 << b;
        } else {
            self.bits[w] &= !(1 << b);
        }
    }

    #[inline]
    pub(crate) fn bit_at_rank(&self, r: usize) -> bool {
        self.bits[r / 64] >> (r % 64) & 1 == 1
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.arity
    }

    #[inline]
    pub fn kind(&self) -> SymmetryKind {
        self.kind
    }

    /// Number of stored values, `C(n, l)`.
    pub fn len(&self) -> usize {
        binomial(self.n, self.arity) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Stored value at colex rank `r`.
    #[inline]
    pub fn stored_at_rank(&self, r: usize) -> Sign {
        Sign::from_bit(self.bit_at_rank(r))
    }

    /// Stored value on a sorted subset given as a mask of popcount `arity`.
    #[inline]
    pub fn stored(&self, mask: u64) -> Sign {
        debug_assert_eq!(mask.count_ones() as usize, self.arity);
        self.stored_at_rank(subset::rank(mask))
    }

    /// `φ(t)` for an injective tuple `t` of length `arity`.
    pub fn eval(&self, tuple: &[usize]) -> Result<Sign> {
        if tuple.len() != self.arity {
            return Err(Error::TupleLength {
                expected: self.arity,
                got: tuple.len(),
            });
        }
        if let Some(&i) = tuple.iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let mask = subset::mask_of(tuple).ok_or_else(|| Error::RepeatedIndex(tuple.to_vec()))?;
        Ok(self.eval_masked(mask, tuple))
    }

    /// Evaluation for a tuple already known to be injective and in range.
    #[inline]
    pub(crate) fn eval_masked(&self, mask: u64, tuple: &[usize]) -> Sign {
        let stored = self.stored(mask);
        if self.kind.is_antisymmetric() {
            stored * Sign::from_parity(inversion_parity(tuple))
        } else {
            stored
        }
    }

    /// Iterates over `(sorted subset mask, stored value)` in colex order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, Sign)> + '_ {
        Subsets::new(self.n, self.arity)
            .enumerate()
            .map(move |(r, m)| (m, self.stored_at_rank(r)))
    }

    fn check_same_shape(&self, other: &SignFunction) -> Result<()> {
        if self.n != other.n || self.arity != other.arity {
            return Err(Error::ShapeMismatch {
                n1: self.n,
                l1: self.arity,
                n2: other.n,
                l2: other.arity,
            });
        }
        Ok(())
    }

    /// Group law of `F_±(E^(l))`: pointwise product, kinds multiply.
    pub fn product(&self, other: &SignFunction) -> Result<SignFunction> {
        self.check_same_shape(other)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect();
        Ok(Self::from_raw(self.n, self.arity, self.kind * other.kind, bits))
    }

    /// Multiplies every value by `-1`; the kind is unchanged.
    pub fn negated(&self) -> SignFunction {
        let len = self.len();
        let mut bits: Vec<u64> = self.bits.iter().map(|w| !w).collect();
        if !len.is_multiple_of(64) {
            *bits.last_mut().unwrap() &= (1u64 << (len % 64)) - 1;
        }
        Self::from_raw(self.n, self.arity, self.kind, bits)
    }

    /// Left action of `Sym(E)`: `(g·φ)(x_1, …, x_l) = φ(g⁻¹x_1, …, g⁻¹x_l)`.
    pub fn permute(&self, g: &Permutation) -> Result<SignFunction> {
        if g.size() != self.n {
            return Err(Error::SizeMismatch {
                left: g.size(),
                right: self.n,
            });
        }
        let inv = g.inverse();
        let mut out = Self::blank(self.n, self.arity, self.kind, self.len());
        let mut pre = Vec::with_capacity(self.arity);
        for (r, mask) in Subsets::new(self.n, self.arity).enumerate() {
            pre.clear();
            pre.extend(subset::elements(mask).map(|x| inv.apply(x)));
            let pre_mask = inv.apply_mask(mask);
            out.set_bit(r, self.eval_masked(pre_mask, &pre).bit());
        }
        Ok(out)
    }

    /// Negates the value on the single subset `subset` (in any order).
    pub fn flip(&self, subset: &[usize]) -> Result<SignFunction> {
        if subset.len() != self.arity {
            return Err(Error::TupleLength {
                expected: self.arity,
                got: subset.len(),
            });
        }
        if let Some(&i) = subset.iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let mask = subset::mask_of(subset).ok_or_else(|| Error::RepeatedIndex(subset.to_vec()))?;
        let r = subset::rank(mask);
        let mut out = self.clone();
        out.set_bit(r, !self.bit_at_rank(r));
        Ok(out)
    }

    /// Number of sorted subsets on which the stored values differ.
    pub fn hamming_distance(&self, other: &SignFunction) -> Result<usize> {
        self.check_same_shape(other)?;
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }

}

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(64).max(1)
}

impl fmt::Debug for SignFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignFunction(n={}, l={}, {}) ", self.n, self.arity, self.kind)?;
        f.debug_list()
            .entries(self.iter().map(|(_, s)| s.to_i8()))
            .finish()
    }
}

/// Text dump: one `{a,b,…} ±1` line per sorted subset, colex order.
impl fmt::Display for SignFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (mask, s) in self.iter() {
            let items: Vec<String> = subset::elements(mask).map(|i| i.to_string()).collect();
            writeln!(f, "{{{}}} {}", items.join(","), s)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SymmetryKind::*;

    fn anti3() -> SignFunction {
        SignFunction::from_i8(3, 3, Antisymmetric, &[1]).unwrap()
    }

    #[test]
    fn construction_examples() {
        let id = SignFunction::from_i8(3, 2, Symmetric, &[1, 1, 1]).unwrap();
        assert_eq!(id, SignFunction::identity(3, 2).unwrap());

        let vol = anti3();
        assert_eq!(vol.len(), 1);
        assert_eq!(vol.kind(), Antisymmetric);

        let l1 = SignFunction::from_i8(2, 1, Antisymmetric, &[1, -1]).unwrap();
        assert_eq!(l1.kind(), Symmetric);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            SignFunction::from_i8(3, 0, Symmetric, &[]),
            Err(Error::ArityOutOfRange { .. })
        ));
        assert!(matches!(
            SignFunction::from_i8(3, 4, Symmetric, &[]),
            Err(Error::ArityOutOfRange { .. })
        ));
        assert!(matches!(
            SignFunction::from_i8(3, 2, Symmetric, &[1, 1]),
            Err(Error::TableLength { expected: 3, got: 2 })
        ));
        assert!(matches!(
            SignFunction::from_i8(3, 2, Symmetric, &[1, 1, 1, 1]),
            Err(Error::TableLength { expected: 3, got: 4 })
        ));
        assert!(matches!(
            SignFunction::from_i8(3, 2, Symmetric, &[1, 0, 1]),
            Err(Error::NotASign(0))
        ));
    }

    #[test]
    fn entries_table() {
        let f = SignFunction::from_entries(
            3,
            2,
            Symmetric,
            vec![(vec![1, 2], 1), (vec![0, 1], -1), (vec![0, 2], 1)],
        )
        .unwrap();
        assert_eq!(f.eval(&[1, 0]).unwrap(), Sign::Minus);

        let missing = SignFunction::from_entries(3, 2, Symmetric, vec![(vec![0, 1], 1), (vec![0, 2], 1)]);
        assert_eq!(missing, Err(Error::MissingEntry(vec![1, 2])));
        let extra = SignFunction::from_entries(
            3,
            2,
            Symmetric,
            vec![(vec![0, 1], 1), (vec![0, 2], 1), (vec![1, 2], 1), (vec![0, 1], 1)],
        );
        assert_eq!(extra, Err(Error::BadEntry(vec![0, 1])));
        let unsorted = SignFunction::from_entries(3, 2, Symmetric, vec![(vec![1, 0], 1)]);
        assert_eq!(unsorted, Err(Error::BadEntry(vec![1, 0])));
        let bad = SignFunction::from_entries(3, 2, Symmetric, vec![(vec![0, 1], 3)]);
        assert_eq!(bad, Err(Error::NotASign(3)));
    }

    #[test]
    fn eval_examples() {
        let vol = anti3();
        assert_eq!(vol.eval(&[1, 0, 2]).unwrap(), Sign::Minus);
        assert_eq!(vol.eval(&[2, 0, 1]).unwrap(), Sign::Plus);
        let sym = SignFunction::from_i8(3, 2, Symmetric, &[-1, 1, 1]).unwrap();
        assert_eq!(sym.eval(&[1, 0]).unwrap(), Sign::Minus);
    }

    #[test]
    fn eval_errors() {
        let vol = anti3();
        assert!(matches!(vol.eval(&[0, 0, 1]), Err(Error::RepeatedIndex(_))));
        assert!(matches!(vol.eval(&[0, 1, 3]), Err(Error::IndexOutOfRange { index: 3, n: 3 })));
        assert!(matches!(vol.eval(&[0, 1]), Err(Error::TupleLength { .. })));
    }

    #[test]
    fn product_examples() {
        let vol = anti3();
        let sq = vol.product(&vol).unwrap();
        assert_eq!(sq, SignFunction::identity(3, 3).unwrap());
        let id = SignFunction::identity(3, 3).unwrap();
        assert_eq!(id.product(&vol).unwrap(), vol);
        let other = SignFunction::from_i8(3, 2, Symmetric, &[1, 1, 1]).unwrap();
        assert!(matches!(vol.product(&other), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn permute_examples() {
        let vol = anti3();
        assert_eq!(vol.permute(&Permutation::identity(3)).unwrap(), vol);
        let swap = Permutation::transposition(3, 0, 1).unwrap();
        let moved = vol.permute(&swap).unwrap();
        assert_eq!(moved.stored(0b111), Sign::Minus);

        let one = SignFunction::identity(4, 2).unwrap();
        let g = Permutation::new(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(one.permute(&g).unwrap(), one);
        assert!(matches!(vol.permute(&Permutation::identity(4)), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn flip_examples() {
        let id = SignFunction::identity(4, 2).unwrap();
        let f = id.flip(&[2, 1]).unwrap();
        assert_eq!(f.hamming_distance(&id).unwrap(), 1);
        assert_eq!(f.eval(&[1, 2]).unwrap(), Sign::Minus);
        assert_eq!(f.flip(&[1, 2]).unwrap(), id);
        assert!(matches!(id.flip(&[1]), Err(Error::TupleLength { .. })));
        assert!(matches!(id.flip(&[1, 4]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn negation_keeps_padding_clear() {
        let f = SignFunction::identity(5, 2).unwrap().negated();
        assert!(f.iter().all(|(_, s)| s == Sign::Minus));
        assert_eq!(f.negated(), SignFunction::identity(5, 2).unwrap());
    }

    #[test]
    fn text_dump() {
        let f = SignFunction::from_i8(3, 2, Symmetric, &[-1, 1, 1]).unwrap();
        assert_eq!(f.to_string(), "{0,1} -1\n{0,2} +1\n{1,2} +1\n");
    }
}
