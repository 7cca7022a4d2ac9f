//! Exact rational conformal geometric algebra of Euclidean 3-space.
//!
//! The crate models the conformal algebra with signature (4,1) over the
//! rational numbers and the kinematics that live inside it:
//!
//! - [`multivector`] — the 32-dimensional Clifford algebra on the null basis
//!   `{e1, e2, e3, e_o, e_inf}` with exact geometric product, reversion, and
//!   grade projection;
//! - [`geometry`] — round/flat object constructors (points, planes, spheres)
//!   and classification of grade-1 elements;
//! - [`quaternion`] and [`fourquat`] — the even subalgebra written as four
//!   quaternions over the basis `{1, eps1, eps2, eps3}`, with its product,
//!   reversion, and the degree-4 norm that governs invertibility;
//! - [`study`] — the ten quadratic forms cutting out the variety of
//!   conformal displacements, the null-quadric value, and subgroup tests;
//! - [`dorst`] — straight lines in the displacement space: normalization,
//!   decomposition into a wedge of two grade-1 vectors, motion
//!   classification, null intersections, and sandwich actions on points;
//! - [`realpoly`] / [`rotorpoly`] — univariate polynomials with rational and
//!   four-quaternion coefficients, norm polynomials, quadratic splittings,
//!   and the factorization of motion polynomials into linear factors;
//! - [`json`] — the canonical JSON wire format shared with the CLI.
//!
//! All arithmetic is exact (`num_rational::BigRational`); no floating point
//! is used anywhere in the core algorithms.

pub mod dorst;
pub mod error;
pub mod fourquat;
pub mod geometry;
pub mod json;
pub mod multivector;
pub mod quaternion;
pub mod rational;
pub mod realpoly;
pub mod rotorpoly;
pub mod study;

pub use error::Error;
pub use fourquat::FourQuat;
pub use multivector::Multivector;
pub use quaternion::Quaternion;
pub use rational::Rational;
