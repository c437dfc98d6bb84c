//! Symbolic Bousfield-lattice calculus.
//!
//! * [`lattice`]: finite lattices, finite/cofinite subsets of ℕ, lattice maps
//!   and inverse limits.
//! * [`class`]: class expressions, normalization by the smash-rule table, and
//!   three-valued equality/order.
//! * [`localization`]: lattice models of localized categories, smashing
//!   localization registries and classification verdicts.
//! * [`conjecture`]: telescope-conjecture variants, their implication graph
//!   and verdict tables.

pub mod class;
pub mod conjecture;
pub mod lattice;
pub mod localization;

pub use class::{normalize, Algebra, ClassExpr, Generator, NormalForm, Tri, TriValue};
pub use lattice::{FinCofSet, FiniteLattice, LatticeError, LatticeHom};
