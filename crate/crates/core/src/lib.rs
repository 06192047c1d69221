//! The orchard morphism.
//!
//! Every symmetric or antisymmetric `±1`-valued function on `l`-tuples of a
//! finite set `E` determines, naturally in `E`, a partition of `E` into at
//! most two classes. Applied to the orientation function of a generic point
//! configuration in `R^d` this two-colors the points.
//!
//! * [`signfn`]: the group `F_±(E^(l))` and its `Sym(E)` action.
//! * [`cochain`]: mod-2 cochains, cocycles, and [`TwoPartition`].
//! * [`orchard`]: the orchard cocycle and morphism.
//! * [`geometry`]: exact configurations, orientations, separation counts.
//! * [`verify`]: enumeration of all equivariant homomorphisms at small sizes.

pub mod cochain;
pub mod error;
pub mod geometry;
pub mod orchard;
pub mod perm;
pub mod sign;
pub mod signfn;
pub mod subset;
pub mod verify;

pub use cochain::{coboundary, integrate, integrate_via_graph, is_closed, TwoPartition};
pub use error::{Error, Result};
pub use geometry::{
    orchard_coloring, orientation, orientation_function, partition_by_separation, separation_count,
    Configuration, ExactScalar, Genericity,
};
pub use orchard::{
    beta, exotic_partition, orchard_cocycle, orchard_morphism, orchard_partition, prefactor, BetaVariant,
    OrchardReport, PairSign,
};
pub use perm::Permutation;
pub use sign::{Sign, SymmetryKind};
pub use signfn::SignFunction;
pub use verify::{equivariant_homomorphisms, HomBasis, Verdict};
