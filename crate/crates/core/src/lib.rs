//! Executable finite homotopy theory.
//!
//! The crate builds nerves, Bousfield–Kan colimits, Grothendieck
//! constructions, hammock-localisation hom-spaces, (co)simplicial
//! resolutions, derived hom-spaces and simplicial localisations of free
//! resolutions for finite categories, and compares them through exact
//! `π0` computations and integer homology.
//!
//! Weak homotopy equivalences are never certified: every such claim is
//! reported either as exact (an isomorphism or a `π0` bijection) or as
//! homology evidence computed with Smith normal forms.

pub mod corpus;
pub mod error;
pub mod fincat;
pub mod hammock;
pub mod hocolim;
pub mod homres;
pub mod io;
pub mod locres;
pub mod modelcat;
pub mod simplex;
pub mod sset;

pub use error::{Error, Result};

/// Default truncation level for simplicial sets.
pub const DEFAULT_TRUNCATION: usize = 3;
/// Default length bound for hammocks and localised words.
pub const DEFAULT_LENGTH_BOUND: usize = 4;
/// Default homology degree for evidence checks.
pub const DEFAULT_DEGREE: usize = 2;
