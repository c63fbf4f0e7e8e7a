//! Exact arithmetic for pure number fields `Q(n-th root of a)`.
//!
//! The crate computes the field discriminant and the index of the power
//! generator in closed form from the prime factorizations of `n` and `a`,
//! and independently re-derives every index valuation through a p-adic
//! Newton polygon engine (Ore's lattice-point count), so the two routes
//! verify each other. Everything is exact big-integer arithmetic; there is
//! no floating point anywhere.
//!
//! Module map:
//! - [`arith`]: valuations, factorization, perfect-power and primality
//!   tests, the Capelli irreducibility criterion;
//! - [`polygon`]: Newton polygons, residual polynomials, separability,
//!   lattice-point counts;
//! - [`field`]: validation of `(n, a)` plus every closed form;
//! - [`verify`]: brute-force oracles and the cross-checking sweep.

pub mod arith;
pub mod error;
pub mod field;
pub mod polygon;
pub mod verify;

pub use error::{Error, Result};
pub use field::{FactoredInteger, MonogenicObstruction, ValidatedPureField};
pub use polygon::{IntPolynomial, NewtonPolygon, PolygonEdge, ResidualPolynomial};
pub use verify::{SweepFailure, SweepReport};
