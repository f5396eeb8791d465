//! Exact degreewise computation with graded ring presentations over the integers.

pub mod catalog;
pub mod exactlin;
pub mod idealcalc;
pub mod polyring;
pub mod symfam;
pub mod verify;

pub use catalog::{lookup, CatalogEntry, CatalogError, PoincareProduct};
pub use exactlin::{IntMatrix, Lattice, LinError, SmithForm, SparseRow};
pub use idealcalc::{Closure, DegreeReport, IdealError, Membership, PresentationSpec};
pub use polyring::{GradedVariable, Monomial, PolyError, Polynomial, RingSpec, Side};
pub use verify::{ClaimResult, ClaimStatus, VerifyError};
