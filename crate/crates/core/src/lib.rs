//! Exact computations for ℤ₂×ℤ₂-graded color superalgebras: structure-constant
//! algebras and their Jacobi checks, PBW normal ordering and quadratic Casimir
//! solving, graded differential realizations, and finite-dimensional
//! highest-weight representations over an exact radical ring.

pub mod algebra;
pub mod diffreal;
mod embedded;
pub mod enveloping;
pub mod error;
pub mod grading;
pub mod linalg;
pub mod linear_form;
pub mod presets;
pub mod radical;
pub mod rational;
pub mod representation;

pub use algebra::{Combination, Generator, GradedAlgebra, ValidationReport};
pub use enveloping::{
    solve_casimir, CasimirSolution, Centrality, EnvelopingPolynomial, NormalOrderer, PbwMonomial,
    WordPolynomial,
};
pub use error::Error;
pub use grading::Grading;
pub use linear_form::{Coefficient, LinearForm};
pub use presets::{preset_eight, preset_gl, preset_ten, OspGenerator, OspVersion};
pub use radical::RadicalScalar;
pub use rational::Rational;
pub use representation::{build_rep_ten, embedded_rep, verify_rep, Representation, StateLabel};
