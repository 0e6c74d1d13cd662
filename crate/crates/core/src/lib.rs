//! pbzlab: a workbench for finite bounded-involution, Brouwer-Zadeh and
//! PBZ*-lattices. Construct algebras from cover relations or the built-in
//! catalog, combine them with ordinal/horizontal sums and products, compute
//! congruence lattices, and check equational identities.

pub mod algebra;
pub mod classops;
pub mod congruence;
pub mod constructions;
pub mod error;
pub mod io;
pub mod lattice;
pub mod terms;
pub mod verify;

pub use algebra::{ClassificationReport, FiniteAlgebra, Flavor};
pub use congruence::Congruence;
pub use error::{Error, Result};
pub use lattice::FiniteBoundedLattice;
pub use terms::{Identity, Term};
