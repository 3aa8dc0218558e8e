//! Exact root data, PBW-degeneration polytopes and monomial bases for typical
//! representations of basic classical Lie superalgebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootdata`] builds distinguished root systems, Gram matrices and ρ-vectors.
//! * [`classical`] is a self-contained model of the simple Lie algebras
//!   `A_r`, `B_r`, `C_r`, `G_2` used both to embed the even factors and as an
//!   independent Weyl-dimension oracle.
//! * [`weights`] handles Dynkin labels, typicality and the typical dimension formula.
//! * [`polytopes`] enumerates lattice points of sum-inequality polytopes.
//! * [`dyckpaths`] generates type-A, symplectic and orthosymplectic Dyck paths.
//! * [`bases`] assembles the polytopes for each family, the fundamental split and
//!   the KT-tableaux injection.
//! * [`gradedops`] implements the differential operators on
//!   `S(n⁻₀) ⊗ Λ(n⁻₁)`.
//! * [`verify`] runs parameter sweeps and produces [`verify::VerifyReport`]s.

pub mod bases;
pub mod classical;
pub mod dyckpaths;
pub mod error;
pub mod gradedops;
pub mod linalg;
pub mod polytopes;
pub mod rootdata;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use rootdata::{AlgebraId, Parity, Root, RootSystem, WeightVector, Q};
