//! Exhaustive search for `Sym(E)`-equivariant homomorphisms
//! `F_±(E^(l)) → E(E)` at small sizes.
//!
//! Both groups are elementary abelian 2-groups, i.e. vector spaces over the
//! two-element field, and group homomorphisms between them are exactly the
//! linear maps. Coordinates:
//!
//! * domain: one bit per sorted `l`-subset (the stored sign), plus one kind
//!   bit when `l ≥ 2` (at `l = 1` the two kinds coincide);
//! * codomain: the canonical representative's bits at indices `1, …, n-1`
//!   (the bit at 0 is normalized away).
//!
//! `Sym(n)` acts linearly in both, and is generated by the transposition
//! `(0 1)` and the rotation `i ↦ i+1`, so a linear `M` is equivariant iff
//! `M·ρ(g) = ρ'(g)·M` for those two `g`. That is a linear system in the
//! entries of `M`, solved here by elimination.

pub mod gf2;

use serde::Serialize;

use crate::cochain::TwoPartition;
use crate::error::{Error, Result};
use crate::orchard;
use crate::perm::Permutation;
use crate::sign::{Sign, SymmetryKind};
use crate::signfn::SignFunction;
use crate::subset::binomial;
use gf2::BitMatrix;

/// Largest ground set the verifier accepts.
pub const MAX_VERIFY_N: usize = 6;

fn check_budget(n: usize, l: usize) -> Result<()> {
    if n > MAX_VERIFY_N {
        return Err(Error::Budget(format!("n = {n} exceeds the verifier limit {MAX_VERIFY_N}")));
    }
    if n < 2 {
        return Err(Error::Invalid(format!("the verifier needs n ≥ 2, got {n}")));
    }
    if l == 0 || l > n {
        return Err(Error::ArityOutOfRange { n, arity: l });
    }
    Ok(())
}

/// Dimension of `F_±(E^(l))` over the two-element field.
pub fn domain_dim(n: usize, l: usize) -> usize {
    binomial(n, l) as usize + usize::from(l >= 2)
}

pub fn encode_element(phi: &SignFunction) -> Vec<bool> {
    let mut v: Vec<bool> = phi.iter().map(|(_, s)| s.bit()).collect();
    if phi.arity() >= 2 {
        v.push(phi.kind().is_antisymmetric());
    }
    v
}

pub fn decode_element(n: usize, l: usize, v: &[bool]) -> Result<SignFunction> {
    let m = binomial(n, l) as usize;
    if v.len() != domain_dim(n, l) {
        return Err(Error::TableLength {
            expected: domain_dim(n, l),
            got: v.len(),
        });
    }
    let kind = if l >= 2 && v[m] {
        SymmetryKind::Antisymmetric
    } else {
        SymmetryKind::Symmetric
    };
    let values: Vec<Sign> = v[..m].iter().map(|&b| Sign::from_bit(b)).collect();
    SignFunction::new(n, l, kind, &values)
}

pub fn encode_partition(p: &TwoPartition) -> Vec<bool> {
    (1..p.ground_size()).map(|i| p.other_mask() >> i & 1 == 1).collect()
}

pub fn decode_partition(n: usize, v: &[bool]) -> Result<TwoPartition> {
    let mask = v
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .fold(0u64, |acc, (i, _)| acc | 1 << (i + 1));
    TwoPartition::from_mask(n, mask)
}

fn unit(len: usize, i: usize) -> Vec<bool> {
    let mut v = vec![false; len];
    v[i] = true;
    v
}

/// Matrix of `φ ↦ g·φ` in domain coordinates, read off from
/// [`SignFunction::permute`] on the coordinate basis.
pub fn domain_action(n: usize, l: usize, g: &Permutation) -> Result<BitMatrix> {
    let dim = domain_dim(n, l);
    let cols = (0..dim)
        .map(|j| {
            let e = decode_element(n, l, &unit(dim, j))?;
            Ok(encode_element(&e.permute(g)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BitMatrix::from_columns(dim, &cols))
}

/// Matrix of `P ↦ g·P` in codomain coordinates.
pub fn codomain_action(n: usize, g: &Permutation) -> Result<BitMatrix> {
    let cols = (0..n - 1)
        .map(|j| {
            let p = decode_partition(n, &unit(n - 1, j))?;
            Ok(encode_partition(&p.permute(g)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BitMatrix::from_columns(n - 1, &cols))
}

/// The linear representation of `Sym(n)` on `F_±(E^(l))`, given on the two
/// generators.
#[derive(Clone, Debug)]
pub struct DomainRepresentation {
    pub n: usize,
    pub l: usize,
    pub dim: usize,
    pub transposition: BitMatrix,
    pub rotation: BitMatrix,
}

pub fn encode_domain(n: usize, l: usize) -> Result<DomainRepresentation> {
    check_budget(n, l)?;
    let (s, c) = generators(n);
    Ok(DomainRepresentation {
        n,
        l,
        dim: domain_dim(n, l),
        transposition: domain_action(n, l, &s)?,
        rotation: domain_action(n, l, &c)?,
    })
}

fn generators(n: usize) -> (Permutation, Permutation) {
    (
        Permutation::transposition(n, 0, 1).expect("n ≥ 2"),
        Permutation::rotation(n),
    )
}

/// The orchard morphism as a `(n-1) × dim` matrix.
pub fn orchard_matrix(n: usize, l: usize) -> Result<BitMatrix> {
    let dim = domain_dim(n, l);
    let cols = (0..dim)
        .map(|j| {
            let e = decode_element(n, l, &unit(dim, j))?;
            Ok(encode_partition(&orchard::orchard_morphism(&e)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BitMatrix::from_columns(n - 1, &cols))
}

/// Whether `m` commutes with both generator actions.
pub fn is_equivariant(m: &BitMatrix, n: usize, l: usize) -> Result<bool> {
    let (s, c) = generators(n);
    for g in [s, c] {
        let lhs = m.mul(&domain_action(n, l, &g)?);
        let rhs = codomain_action(n, &g)?.mul(m);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A basis of the space of equivariant homomorphisms.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub n: usize,
    pub l: usize,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub basis: Vec<BitMatrix>,
    pub orchard: BitMatrix,
    pub contains_orchard: bool,
}

impl HomBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    fn flat(m: &BitMatrix) -> Vec<bool> {
        m.to_rows().concat()
    }

    /// Some solution lies outside the span of the orchard morphism.
    pub fn has_exotic(&self) -> bool {
        let orchard_rank = usize::from(!self.orchard.is_zero());
        self.dimension() > orchard_rank
    }

    /// For a one-dimensional space: its nonzero element is the orchard
    /// morphism.
    pub fn generator_is_orchard(&self) -> bool {
        self.dimension() == 1 && self.basis[0] == self.orchard
    }

    pub fn verdict(&self) -> Verdict {
        Verdict {
            n: self.n,
            l: self.l,
            solution_dimension: self.dimension(),
            orchard_in_span: self.contains_orchard,
            exotic_detected: self.has_exotic(),
        }
    }
}

/// Summary of one `(n, l)` run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub n: usize,
    pub l: usize,
    pub solution_dimension: usize,
    pub orchard_in_span: bool,
    pub exotic_detected: bool,
}

/// Solves `M·ρ(g) + ρ'(g)·M = 0` for both generators. The unknowns are the
/// entries of `M`, indexed `r·dim + c`.
pub fn equivariant_homomorphisms(n: usize, l: usize) -> Result<HomBasis> {
    check_budget(n, l)?;
    let dim = domain_dim(n, l);
    let m = n - 1;
    let unknowns = m * dim;
    let (s, c) = generators(n);

    let mut system = BitMatrix::zeros(2 * unknowns, unknowns);
    let mut eq = 0;
    for g in [s, c] {
        let a = domain_action(n, l, &g)?;
        let b = codomain_action(n, &g)?;
        for r in 0..m {
            for col in 0..dim {
                // (M·A)[r][col] = Σ_k M[r][k]·A[k][col]
                for k in 0..dim {
                    if a.get(k, col) {
                        let u = r * dim + k;
                        system.set(eq, u, !system.get(eq, u));
                    }
                }
                // (B·M)[r][col] = Σ_k B[r][k]·M[k][col]
                for k in 0..m {
                    if b.get(r, k) {
                        let u = k * dim + col;
                        system.set(eq, u, !system.get(eq, u));
                    }
                }
                eq += 1;
            }
        }
    }

    let to_matrix = |x: &[bool]| {
        let mut mat = BitMatrix::zeros(m, dim);
        for r in 0..m {
            for col in 0..dim {
                mat.set(r, col, x[r * dim + col]);
            }
        }
        mat
    };
    let basis: Vec<BitMatrix> = system.kernel().iter().map(|x| to_matrix(x)).collect();
    let orchard = orchard_matrix(n, l)?;

    let mut vectors: Vec<Vec<bool>> = basis.iter().map(HomBasis::flat).collect();
    let before = gf2::rank_of(&vectors);
    vectors.push(HomBasis::flat(&orchard));
    let contains_orchard = gf2::rank_of(&vectors) == before;

    Ok(HomBasis {
        n,
        l,
        domain_dim: dim,
        codomain_dim: m,
        basis,
        orchard,
        contains_orchard,
    })
}

/// Verdicts for every `2 ≤ n ≤ n_max`, `1 ≤ l ≤ n`.
pub fn uniqueness_table(n_max: usize) -> Result<Vec<Verdict>> {
    if n_max > MAX_VERIFY_N {
        return Err(Error::Budget(format!(
            "n_max = {n_max} exceeds the verifier limit {MAX_VERIFY_N}"
        )));
    }
    let mut out = Vec::new();
    for n in 2..=n_max {
        for l in 1..=n {
            out.push(equivariant_homomorphisms(n, l)?.verdict());
        }
    }
    Ok(out)
}
