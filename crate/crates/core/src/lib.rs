//! Good semigroups of ℕ^d: Apéry sets and their level partitions, duality
//! of levels, products, well-behaved complements and plane-curve blowups.

pub mod duality;
pub mod error;
pub mod ideal;
pub mod io;
pub mod lattice;
pub mod planecurve;
pub mod plot;
pub mod products;
pub mod levels;
pub mod semigroup;
pub mod wellbehaved;

pub use error::*;
pub use lattice::{Frame, IndexSet, Point, PointSet};
pub use semigroup::{GoodSemigroup, Membership, NumericalSemigroup};
