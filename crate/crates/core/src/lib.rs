//! Exact computational verification of the finite geometry and group theory
//! behind wild symplectic automorphisms of K3 surfaces in characteristic 11.
//!
//! Everything here is exact: finite-field arithmetic over `F_11` and its
//! extension towers, binary-form algebra, Weierstrass fibre classification,
//! automorphism calculus on the weighted projective space `P(1,1,4,6)`,
//! permutation-group enumeration for the five groups
//! `C_11, 11:5, L_2(11), M_11, M_22`, the order sieve that singles out their
//! orders, integer lattice checks, and point counts over small fields.
//! No floating point is used anywhere.

pub mod binform;
pub mod counting;
pub mod error;
pub mod ffield;
pub mod lattice;
pub mod permgrp;
pub mod sieve;
pub mod weierstrass;
pub mod wpsaut;

pub use error::Error;

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
