//! Mod-2 cochains on the full simplex with vertex set `{0, …, n-1}`, in
//! multiplicative notation: a `k`-cochain is a symmetric sign function of
//! arity `k+1`, and the coboundary multiplies over the faces.
//!
//! Since the simplex is contractible, closed 1-cochains are exactly the
//! coboundaries `σ(x, y) = α(x)α(y)`, and `±α` is recovered from `σ` as a
//! [`TwoPartition`].

use std::collections::VecDeque;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::sign::{Sign, SymmetryKind};
use crate::signfn::{words_for, SignFunction};
use crate::subset::{self, binomial, full_mask, Subsets, MAX_GROUND};

/// An element of `{±1}^E / ±1`: a partition of `{0, …, n-1}` into at most
/// two classes.
///
/// Stored through the representative `α` with `α(0) = +1`; `other` is the
/// mask of indices where `α = -1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoPartition {
    n: usize,
    other: u64,
}

impl TwoPartition {
    pub fn trivial(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::GroundTooLarge(n));
        }
        Ok(TwoPartition { n, other: 0 })
    }

    /// The class of `±alpha`.
    pub fn from_assignment(alpha: &[Sign]) -> Result<Self> {
        let n = alpha.len();
        let mut p = Self::trivial(n)?;
        let flip = alpha[0].bit();
        for (i, s) in alpha.iter().enumerate() {
            if s.bit() ^ flip {
                p.other |= 1 << i;
            }
        }
        Ok(p)
    }

    /// The partition `members | complement`, whichever side holds 0.
    pub fn from_mask(n: usize, members: u64) -> Result<Self> {
        let p = Self::trivial(n)?;
        if members & !full_mask(n) != 0 {
            return Err(Error::IndexOutOfRange {
                index: 63 - members.leading_zeros() as usize,
                n,
            });
        }
        let other = if members & 1 == 1 {
            !members & full_mask(n)
        } else {
            members
        };
        Ok(TwoPartition { other, ..p })
    }

    /// Builds from explicit classes; they must be disjoint, cover
    /// `{0, …, n-1}`, and `class_of_0` must hold 0.
    pub fn from_classes(class_of_0: &[usize], other: &[usize]) -> Result<Self> {
        let n = class_of_0.len() + other.len();
        let p = Self::trivial(n)?;
        let a = subset::mask_of(class_of_0).ok_or_else(|| Error::RepeatedIndex(class_of_0.to_vec()))?;
        let b = subset::mask_of(other).ok_or_else(|| Error::RepeatedIndex(other.to_vec()))?;
        if a & b != 0 || (a | b) != full_mask(n) {
            return Err(Error::Invalid(format!(
                "classes {class_of_0:?} and {other:?} do not partition 0..{n}"
            )));
        }
        if a & 1 == 0 {
            return Err(Error::Invalid("index 0 must be in class_of_0".into()));
        }
        Ok(TwoPartition { other: b, ..p })
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Mask of the class not containing 0.
    #[inline]
    pub fn other_mask(&self) -> u64 {
        self.other
    }

    pub fn is_trivial(&self) -> bool {
        self.other == 0
    }

    /// The canonical representative `α` with `α(0) = +1`.
    pub fn representative(&self) -> Vec<Sign> {
        (0..self.n).map(|i| Sign::from_bit(self.other >> i & 1 == 1)).collect()
    }

    /// `(class containing 0, other class)`, each sorted ascending.
    pub fn classes(&self) -> (Vec<usize>, Vec<usize>) {
        let other = subset::to_vec(self.other);
        let first = subset::to_vec(!self.other & full_mask(self.n));
        (first, other)
    }

    /// Sizes of the two classes, smaller first.
    pub fn split(&self) -> (usize, usize) {
        let b = self.other.count_ones() as usize;
        let a = self.n - b;
        (a.min(b), a.max(b))
    }

    pub fn same_class(&self, i: usize, j: usize) -> bool {
        (self.other >> i & 1) == (self.other >> j & 1)
    }

    /// Group law of `E(E)`.
    pub fn product(&self, rhs: &TwoPartition) -> Result<TwoPartition> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        Ok(TwoPartition {
            n: self.n,
            other: self.other ^ rhs.other,
        })
    }

    /// `(g·α)(x) = α(g⁻¹x)`, recanonicalized.
    pub fn permute(&self, g: &Permutation) -> Result<TwoPartition> {
        if g.size() != self.n {
            return Err(Error::SizeMismatch {
                left: g.size(),
                right: self.n,
            });
        }
        Self::from_mask(self.n, g.apply_mask(self.other))
    }

    /// The coboundary `σ(x, y) = α(x)α(y)` of the representative.
    pub fn cocycle(&self) -> SignFunction {
        let alpha = self.representative();
        if self.n == 1 {
            // no pairs; the constant arity-1 function stands in
            return SignFunction::identity(1, 1).expect("valid shape");
        }
        SignFunction::from_fn(self.n, 2, SymmetryKind::Symmetric, |p| alpha[p[0]] * alpha[p[1]])
            .expect("valid shape")
    }
}

impl fmt::Debug for TwoPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.classes();
        write!(f, "TwoPartition({a:?} | {b:?})")
    }
}

impl fmt::Display for TwoPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.classes();
        let join = |v: &[usize]| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{}}} | {{{}}}", join(&a), join(&b))
    }
}

#[derive(Serialize, Deserialize)]
struct ClassesRecord {
    class_of_0: Vec<usize>,
    other: Vec<usize>,
}

impl Serialize for TwoPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (class_of_0, other) = self.classes();
        ClassesRecord { class_of_0, other }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwoPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = ClassesRecord::deserialize(d)?;
        TwoPartition::from_classes(&rec.class_of_0, &rec.other).map_err(D::Error::custom)
    }
}

fn require_symmetric(c: &SignFunction) -> Result<()> {
    if c.kind() != SymmetryKind::Symmetric {
        return Err(Error::WrongKind {
            expected: SymmetryKind::Symmetric,
            got: c.kind(),
        });
    }
    Ok(())
}

fn require_pair_function(sigma: &SignFunction) -> Result<()> {
    require_symmetric(sigma)?;
    if sigma.arity() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            got: sigma.arity(),
        });
    }
    Ok(())
}

/// `∂c(x_0, …, x_k) = ∏_j c(x_0, …, x̂_j, …, x_k)` for a symmetric `c`.
pub fn coboundary(c: &SignFunction) -> Result<SignFunction> {
    require_symmetric(c)?;
    let (n, k) = (c.ground_size(), c.arity());
    if k + 1 > n {
        return Err(Error::ArityOutOfRange { n, arity: k + 1 });
    }
    let len = binomial(n, k + 1) as usize;
    let mut bits = vec![0u64; words_for(len)];
    for (r, mask) in Subsets::new(n, k + 1).enumerate() {
        let odd = subset::elements(mask).fold(false, |acc, x| acc ^ c.stored(mask & !(1 << x)).bit());
        if odd {
            bits[r / 64] |= 1 << (r % 64);
        }
    }
    Ok(SignFunction::from_raw(n, k + 1, SymmetryKind::Symmetric, bits))
}

/// First triple `a < b < c` with `σ(a,b)σ(a,c)σ(b,c) = -1`, if any.
pub fn closedness_witness(sigma: &SignFunction) -> Result<Option<[usize; 3]>> {
    require_pair_function(sigma)?;
    let n = sigma.ground_size();
    let bit = |a: usize, b: usize| sigma.stored((1 << a) | (1 << b)).bit();
    for c in 2..n {
        for b in 1..c {
            for a in 0..b {
                if bit(a, b) ^ bit(a, c) ^ bit(b, c) {
                    return Ok(Some([a, b, c]));
                }
            }
        }
    }
    Ok(None)
}

/// Whether the symmetric pair function `σ` is a 1-cocycle.
pub fn is_closed(sigma: &SignFunction) -> Result<bool> {
    Ok(closedness_witness(sigma)?.is_none())
}

/// Integrates a closed `σ` from a base point: `α(x_0) = +1` and
/// `α(x) = σ(x, x_0)` elsewhere. Refuses non-closed input.
pub fn integrate(sigma: &SignFunction, basepoint: usize) -> Result<TwoPartition> {
    if let Some(w) = closedness_witness(sigma)? {
        return Err(Error::NotClosed(w));
    }
    let n = sigma.ground_size();
    if basepoint >= n {
        return Err(Error::IndexOutOfRange { index: basepoint, n });
    }
    let alpha: Vec<Sign> = (0..n)
        .map(|x| {
            if x == basepoint {
                Sign::Plus
            } else {
                sigma.stored((1 << x) | (1 << basepoint))
            }
        })
        .collect();
    TwoPartition::from_assignment(&alpha)
}

/// Integrates `σ` through the graph whose edges are the pairs with
/// `σ = +1`. `σ` is closed exactly when this graph is a disjoint union of at
/// most two cliques, which is checked here directly; the components are
/// the two classes.
pub fn integrate_via_graph(sigma: &SignFunction) -> Result<TwoPartition> {
    require_pair_function(sigma)?;
    let n = sigma.ground_size();
    let mut adj = vec![0u64; n];
    for (mask, s) in sigma.iter() {
        if s == Sign::Plus {
            let (a, b) = (mask.trailing_zeros() as usize, 63 - mask.leading_zeros() as usize);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }

    let mut component = vec![usize::MAX; n];
    let mut members: Vec<u64> = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut mask = 0u64;
        let mut queue = VecDeque::from([start]);
        component[start] = id;
        while let Some(v) = queue.pop_front() {
            mask |= 1 << v;
            for w in subset::elements(adj[v]) {
                if component[w] == usize::MAX {
                    component[w] = id;
                    queue.push_back(w);
                }
            }
        }
        members.push(mask);
    }

    if members.len() > 2 {
        let pick = |m: u64| m.trailing_zeros() as usize;
        let mut w = [pick(members[0]), pick(members[1]), pick(members[2])];
        w.sort_unstable();
        return Err(Error::NotClosed(w));
    }
    for &m in &members {
        for v in subset::elements(m) {
            if m & !adj[v] & !(1 << v) == 0 {
                continue;
            }
            // a non-clique component has a vertex u at distance exactly 2
            // from v; v - w - u with σ(v,u) = -1 is an odd triangle
            let two_hop = subset::elements(adj[v]).fold(0u64, |acc, w| acc | adj[w]) & !adj[v] & !(1 << v);
            let u = two_hop.trailing_zeros() as usize;
            let w = (adj[v] & adj[u]).trailing_zeros() as usize;
            let mut t = [v, u, w];
            t.sort_unstable();
            return Err(Error::NotClosed(t));
        }
    }
    let other = if members.len() == 2 { members[1] } else { 0 };
    TwoPartition::from_mask(n, other)
}
