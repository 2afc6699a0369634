//! Exact computations on moduli spaces of stable curves.
//!
//! The crate covers four connected pieces:
//!
//! * [`stable_graphs`]: dual graphs of boundary strata of `M̄_{g,n}`, their
//!   canonical forms, automorphism counts and enumeration by degeneration.
//! * [`intersection`]: exact ψ-class intersection numbers, the λ_g formula
//!   and evaluation of formal tautological monomial combinations.
//! * [`hurwitz`] and [`elsv`]: labeled Hurwitz numbers computed three
//!   independent ways, and the simple-fixed-locus localization that
//!   expresses them as Hodge integrals.
//! * [`strata_theorems`]: stratum filters for the genus-zero component
//!   bound and its corollaries (socle strata, Diaz-type bounds and the
//!   low-dimension generator lists).
//!
//! All arithmetic is exact ([`Rational`] is an arbitrary-precision
//! fraction in lowest terms).

pub mod cache;
pub mod elsv;
mod error;
pub mod hurwitz;
pub mod intersection;
pub mod partitions;
pub mod rational;
pub mod stable_graphs;
pub mod strata_theorems;

pub use error::{Error, Result};
pub use rational::Rational;
