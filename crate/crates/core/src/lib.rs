//! Exact computations for GT-systems attached to diagonal cyclic group
//! actions: invariant monomials, Togliatti/WLP classification, Hilbert
//! functions, Betti tables, toric ideals and the Cohen–Macaulay property
//! of the associated affine semigroups.

pub mod error;
pub mod exact;
pub mod hilbert;
pub mod invariants;
pub mod resolution;
pub mod semigroup;
pub mod serde_big;
pub mod togliatti;
pub mod toric;

pub use error::{GtError, Result};
pub use invariants::{CyclicAction, ExponentVector};
