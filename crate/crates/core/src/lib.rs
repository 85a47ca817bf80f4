//! Intersection cohomology of complete complexity-one T-varieties, in exact arithmetic.
//!
//! Inputs are divisorial fans over a smooth projective curve. The layers build on each other:
//! exact polyhedra, fans and their g/h-polynomials, polyhedral divisors, the downgrade
//! construction and finally the orbit engine in [`engine`].

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod cone;
pub mod dd;
pub mod divisor;
pub mod downgrade;
pub mod engine;
pub mod error;
pub mod examples;
pub mod face;
pub mod fan;
pub mod hf;
pub mod io;
pub mod lattice;
pub mod num;
pub mod poly;
pub mod polyhedron;
pub mod toric;

pub use cone::Cone;
pub use divisor::{Curve, DivisorialFan, Locus, Policy, PolyDivisor, Principality, QDivisor, ValidationReport};
pub use downgrade::downgrade;
pub use engine::{poincare, poincare_attractive, poincare_complete, PoincareReport};
pub use error::{Error, Result};
pub use face::{Face, FaceLattice};
pub use fan::{cayley_cone, downward_cone, star_quotient, Fan};
pub use hf::{HFElement, HFPoset};
pub use lattice::LatticeSplit;
pub use poly::{LaurentPolynomial, Polynomial};
pub use polyhedron::{HullCell, Polyhedron};
