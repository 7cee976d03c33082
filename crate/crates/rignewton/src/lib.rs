//! Exact-arithmetic combinatorics of torsion cocharacters on reductive
//! root data.
//!
//! The crate computes, over the integers and rationals with no floating
//! point:
//!
//! - Smith normal forms, saturated kernels, and finite abelian lattice
//!   quotients ([`linalg`]);
//! - based root data for the classical families and G2, Weyl groups,
//!   closed-subsystem search, and the Levi test ([`rootdata`]);
//! - finite Galois actions on cocharacter lattices, norms, augmentation
//!   sublattices, ellipticity, and rational relative Weyl groups
//!   ([`galois`]);
//! - centralizer subsystems of torsion cocharacters (single and
//!   Galois-intersected), alcove normal forms, and facet index sets
//!   ([`newton`]);
//! - finite-level Tate-Nakayama groups of tori, the band-image membership
//!   criterion, the twisted-Levi realization construction, and
//!   Levi-suitable character enumeration ([`tate`]);
//! - a casebook of worked examples with structured pass/fail reports
//!   ([`casebook`]).
//!
//! A thin CLI (`rignewton`) exposes each operation with JSON reports; the
//! `examples/` directory has one runnable walkthrough per capability.

pub mod casebook;
pub mod cli;
pub mod error;
pub mod galois;
pub mod linalg;
pub mod newton;
pub mod rootdata;
pub mod tate;

pub use error::{Error, Result};
pub use linalg::{FiniteAbelianGroup, Int, IntMatrix, Rat, SmithDecomposition};
pub use rootdata::{BaseData, CartanType, Family, RootDatum, Subsystem};
