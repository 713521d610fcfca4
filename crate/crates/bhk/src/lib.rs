//! Exact-arithmetic toolkit for invertible polynomials and
//! Berglund-Hübsch-Krawitz mirror symmetry.
//!
//! The crate computes, with arbitrary-precision integers and rationals
//! throughout (no floating point anywhere):
//!
//! - Hermite/Smith normal forms, exact inverses, lattice kernels, and
//!   finite-abelian-quotient presentations ([`mat`]);
//! - parsing, atomic classification, transposition, weight systems, and
//!   the Calabi-Yau / Gorenstein predicates of invertible (Kreuzer-Skarke)
//!   polynomials ([`invertible`], [`weights`], [`parse`]);
//! - diagonal symmetry groups, Krawitz dual groups, quotient structures,
//!   and admissible-group enumeration ([`symmetry`]);
//! - the exponent-coordinate toric side of a cleave: lattice points, the
//!   two triangulations with exact verification, irrelevant ideals, and
//!   the superpotential ([`toric`], [`lp`]);
//! - sparse multivariate polynomials over Q, Buchberger Gröbner bases
//!   with cofactor tracking, and ideal/radical membership with replayable
//!   certificates ([`mpoly`], [`groebner`], [`membership`]);
//! - cleave detection, cleave paths through the Fermat polynomial, and
//!   the end-to-end derived-equivalence certification with JSON reports
//!   ([`cleave`], [`pipeline`]).
//!
//! The `examples/` directory carries one runnable walkthrough per
//! capability; the thin `bhk` binary exposes the same operations as
//! subcommands ([`cli`]).

pub mod cleave;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod invertible;
pub mod lp;
pub mod mat;
pub mod membership;
pub mod mpoly;
pub mod parse;
pub mod pipeline;
pub mod symmetry;
pub mod toric;
pub mod weights;

pub use error::{Error, Result};
pub use invertible::InvertiblePolynomial;
pub use symmetry::{DiagonalGroup, DiagonalSymmetry};
pub use weights::WeightSystem;
