//! Finite point configurations in `R^d` with exact rational coordinates,
//! their orientation function, and the orchard two-coloring.
//!
//! A configuration is *generic* when every `k+1 ≤ d+1` of its points span an
//! affine subspace of dimension `k`. The orientation of `d+1` points is the
//! sign of `det(x_1 - x_0, x_2 - x_1, …, x_d - x_{d-1})`, which is nonzero on
//! generic input and alternating in the points.

pub mod det;
pub mod input;
pub mod sample;
pub mod scalar;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::cochain::{self, TwoPartition};
use crate::error::{Error, Result};
use crate::orchard::{self, binomial_parity, OrchardReport};
use crate::perm::Permutation;
use crate::sign::{Sign, SymmetryKind};
use crate::signfn::SignFunction;
use crate::subset::{self, full_mask, Subsets, MAX_GROUND};

pub use scalar::{parse_scalar, ExactScalar};

/// Outcome of the genericity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Genericity {
    Generic,
    /// The first affinely dependent subset found, smallest size first.
    Degenerate { witness: Vec<usize> },
}

impl Genericity {
    pub fn is_generic(&self) -> bool {
        matches!(self, Genericity::Generic)
    }
}

/// `n` labeled points in `R^d`.
#[derive(Clone, Debug)]
pub struct Configuration {
    dimension: usize,
    points: Vec<Vec<ExactScalar>>,
    /// Coordinates times the common denominator; same orientations.
    lattice: Vec<Vec<BigInt>>,
    /// `lattice` again when every determinant fits the `i128` path.
    small: Option<Vec<Vec<i128>>>,
    genericity: Genericity,
}

impl PartialEq for Configuration {
    fn eq(&self, other: &Self) -> bool {
        self.dimension == other.dimension && self.points == other.points
    }
}

impl Configuration {
    pub fn new(dimension: usize, points: Vec<Vec<ExactScalar>>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Invalid("dimension must be at least 1".into()));
        }
        if points.is_empty() || points.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge(points.len()));
        }
        if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.len() != dimension) {
            return Err(Error::Invalid(format!(
                "point {i} has {} coordinates, expected {dimension}",
                p.len()
            )));
        }
        let common = points
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let lattice: Vec<Vec<BigInt>> = points
            .iter()
            .map(|p| p.iter().map(|x| x.numer() * (&common / x.denom())).collect())
            .collect();
        let max_abs = lattice.iter().flatten().map(|x| x.abs()).max().unwrap_or_default();
        let small = max_abs
            .to_u128()
            .filter(|&m| m <= u64::MAX as u128 && det::fits_small(dimension, 2 * m))
            .map(|_| {
                lattice
                    .iter()
                    .map(|p| p.iter().map(|x| x.to_i128().expect("bounded")).collect())
                    .collect()
            });
        let mut config = Configuration {
            dimension,
            points,
            lattice,
            small,
            genericity: Genericity::Generic,
        };
        config.genericity = check_genericity(&config);
        Ok(config)
    }

    pub fn from_integers(dimension: usize, points: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            dimension,
            points
                .iter()
                .map(|p| p.iter().map(|&x| ExactScalar::from_integer(x.into())).collect())
                .collect(),
        )
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<ExactScalar>] {
        &self.points
    }

    pub fn genericity(&self) -> &Genericity {
        &self.genericity
    }

    pub fn is_generic(&self) -> bool {
        self.genericity.is_generic()
    }

    pub fn require_generic(&self) -> Result<()> {
        match &self.genericity {
            Genericity::Generic => Ok(()),
            Genericity::Degenerate { witness } => Err(Error::NonGeneric {
                witness: witness.clone(),
            }),
        }
    }

    /// Moves point `i` to label `g(i)`, so that the orientation function of
    /// the result is `g·φ`.
    pub fn relabel(&self, g: &Permutation) -> Result<Configuration> {
        if g.size() != self.len() {
            return Err(Error::SizeMismatch {
                left: g.size(),
                right: self.len(),
            });
        }
        let mut points = vec![Vec::new(); self.len()];
        for (i, p) in self.points.iter().enumerate() {
            points[g.apply(i)] = p.clone();
        }
        Configuration::new(self.dimension, points)
    }

    /// Mirror image through the hyperplane `x_axis = 0`.
    pub fn reflect(&self, axis: usize) -> Result<Configuration> {
        if axis >= self.dimension {
            return Err(Error::IndexOutOfRange {
                index: axis,
                n: self.dimension,
            });
        }
        let mut points = self.points.clone();
        for p in &mut points {
            p[axis] = -p[axis].clone();
        }
        Configuration::new(self.dimension, points)
    }

    /// Replaces one point.
    pub fn with_point(&self, i: usize, point: Vec<ExactScalar>) -> Result<Configuration> {
        if i >= self.len() {
            return Err(Error::IndexOutOfRange { index: i, n: self.len() });
        }
        let mut points = self.points.clone();
        points[i] = point;
        Configuration::new(self.dimension, points)
    }

    /// Sign of `det(x_1 - x_0, …, x_d - x_{d-1})` for an injective,
    /// in-range tuple of length `d+1`.
    fn orient_unchecked(&self, tuple: &[usize]) -> Ordering {
        let d = self.dimension;
        if let Some(small) = &self.small {
            let m: Vec<Vec<i128>> = (0..d)
                .map(|r| (1..=d).map(|c| small[tuple[c]][r] - small[tuple[c - 1]][r]).collect())
                .collect();
            det::det_sign_small(m)
        } else {
            let lat = &self.lattice;
            let m: Vec<Vec<BigInt>> = (0..d)
                .map(|r| (1..=d).map(|c| &lat[tuple[c]][r] - &lat[tuple[c - 1]][r]).collect())
                .collect();
            det::det_sign(m)
        }
    }

    /// Affine rank test for the points of `mask` (popcount `k+1`): do they
    /// span a `k`-dimensional affine subspace?
    fn spans_full_dimension(&self, mask: u64) -> bool {
        let idx = subset::to_vec(mask);
        let k = idx.len() - 1;
        if k == 0 {
            return true;
        }
        if k == 1 {
            return self.lattice[idx[0]] != self.lattice[idx[1]];
        }
        if k == self.dimension {
            return self.orient_unchecked(&idx) != Ordering::Equal;
        }
        let rows: Vec<Vec<BigInt>> = idx[1..]
            .iter()
            .map(|&i| {
                self.lattice[i]
                    .iter()
                    .zip(&self.lattice[idx[0]])
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        det::rank(rows) == k
    }
}

/// Checks every subset of `k+1 ≤ d+1` points, smallest subsets first, and
/// reports the first affinely dependent one.
pub fn check_genericity(config: &Configuration) -> Genericity {
    let n = config.len();
    let top = config.dimension.min(n - 1);
    for k in 1..=top {
        for mask in Subsets::new(n, k + 1) {
            if !config.spans_full_dimension(mask) {
                return Genericity::Degenerate {
                    witness: subset::to_vec(mask),
                };
            }
        }
    }
    Genericity::Generic
}

fn check_tuple(config: &Configuration, tuple: &[usize], expected: usize) -> Result<()> {
    if tuple.len() != expected {
        return Err(Error::TupleLength {
            expected,
            got: tuple.len(),
        });
    }
    if let Some(&i) = tuple.iter().find(|&&i| i >= config.len()) {
        return Err(Error::IndexOutOfRange { index: i, n: config.len() });
    }
    if subset::mask_of(tuple).is_none() {
        return Err(Error::RepeatedIndex(tuple.to_vec()));
    }
    Ok(())
}

/// Orientation of the `d+1` points of `tuple`, in that order.
pub fn orientation(config: &Configuration, tuple: &[usize]) -> Result<Sign> {
    config.require_generic()?;
    check_tuple(config, tuple, config.dimension + 1)?;
    match config.orient_unchecked(tuple) {
        Ordering::Greater => Ok(Sign::Plus),
        Ordering::Less => Ok(Sign::Minus),
        Ordering::Equal => Err(Error::NonGeneric {
            witness: {
                let mut w = tuple.to_vec();
                w.sort_unstable();
                w
            },
        }),
    }
}

/// The antisymmetric sign function of arity `d+1` given by orientations.
pub fn orientation_function(config: &Configuration) -> Result<SignFunction> {
    config.require_generic()?;
    let (n, d) = (config.len(), config.dimension);
    if n < d + 1 {
        return Err(Error::ArityOutOfRange { n, arity: d + 1 });
    }
    SignFunction::from_fn(n, d + 1, SymmetryKind::Antisymmetric, |t| {
        match config.orient_unchecked(t) {
            Ordering::Greater => Sign::Plus,
            Ordering::Less => Sign::Minus,
            Ordering::Equal => unreachable!("generic configuration has a flat simplex {t:?}"),
        }
    })
}

/// Number of hyperplanes through `d` points other than `i`, `j` that
/// strictly separate point `i` from point `j`.
pub fn separation_count(config: &Configuration, i: usize, j: usize) -> Result<usize> {
    config.require_generic()?;
    check_tuple(config, &[i, j], 2)?;
    let (n, d) = (config.len(), config.dimension);
    let rest = full_mask(n) & !(1 << i) & !(1 << j);
    let mut tuple = Vec::with_capacity(d + 1);
    let mut count = 0;
    for q in subset::subsets_of(rest, d) {
        tuple.clear();
        tuple.extend(subset::elements(q));
        tuple.push(i);
        let side_i = config.orient_unchecked(&tuple);
        *tuple.last_mut().unwrap() = j;
        let side_j = config.orient_unchecked(&tuple);
        if side_i != side_j {
            count += 1;
        }
    }
    Ok(count)
}

/// The two-partition where `i ~ j` iff `s(i, j) ≡ C(n-3, d-1) (mod 2)`.
pub fn partition_by_separation(config: &Configuration) -> Result<TwoPartition> {
    config.require_generic()?;
    let (n, d) = (config.len(), config.dimension);
    if n < 2 {
        return Err(Error::Invalid("need at least two points".into()));
    }
    let offset = binomial_parity(n as i64 - 3, d as i64 - 1);
    let mut counts = Vec::with_capacity(n * (n - 1) / 2);
    for mask in Subsets::new(n, 2) {
        let (i, j) = (mask.trailing_zeros() as usize, 63 - mask.leading_zeros() as usize);
        counts.push(separation_count(config, i, j)?);
    }
    let sigma = SignFunction::new(
        n,
        2,
        SymmetryKind::Symmetric,
        &counts
            .iter()
            .map(|&s| Sign::from_parity((s % 2 == 1) ^ offset))
            .collect::<Vec<_>>(),
    )?;
    cochain::integrate(&sigma, 0)
}

/// The orchard morphism applied to the orientation function.
pub fn orchard_coloring(config: &Configuration) -> Result<OrchardReport> {
    orchard::orchard_partition(&orientation_function(config)?)
}
