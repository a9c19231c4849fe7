//! Exact symbolic computation for graded commutative algebra at desk scale.
//!
//! The crate provides:
//!
//! - exact field arithmetic over the rationals and over prime fields,
//!   together with dense linear algebra (`arith`);
//! - multivariate polynomials over those fields with selectable monomial
//!   orders and Z^k multigradings (`poly`);
//! - Groebner bases and the ideal-theoretic toolkit built on them:
//!   elimination, intersections, colons, Krull dimension, Hilbert series
//!   (`groebner`);
//! - apolarity for ternary cubics: catalecticants, apolar ideals, the
//!   degree-four invariant of the secant hypersurface, and classification
//!   of a cubic form by its secant stratum (`apolarity`);
//! - presentations of subalgebras generated by forms of equal degree, in
//!   particular coordinate rings of projections of the cubic Veronese
//!   surface (`presentation`);
//! - Rees algebras of complete intersections of three quadrics, their
//!   bigraded presentations, diagonal subalgebras, and the two-periodic
//!   complex that resolves the Rees ring over a complete-intersection
//!   subquotient (`diagonal`);
//! - truncated minimal free resolutions over graded quotient algebras,
//!   Betti tables, Castelnuovo-Mumford regularity within a window, and a
//!   Koszulness probe (`resolution`);
//! - named fixtures shared by the command-line tool, the Python bindings
//!   and the test suites (`fixtures`).
//!
//! All computations are exact; no floating point is used anywhere.

pub mod arith;
pub mod apolarity;
pub mod diagonal;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod poly;
pub mod presentation;
pub mod resolution;

pub use error::Error;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
