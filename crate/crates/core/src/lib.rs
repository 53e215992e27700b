//! Exact Ehrhart polynomials of lattice-polytope constructions, a brute-force
//! lattice-point oracle, and a sign-pattern engine for their coefficients.

mod error;

pub mod analysis;
pub mod cli;
pub mod catalog;
pub mod ehrhart;
pub mod exactnum;
pub mod linalg;
pub mod oracle;
pub mod patterns;
pub mod polytopes;
pub mod search;

pub use error::{Error, Result};
pub use exactnum::{HStar, Polynomial, Rational};
pub use polytopes::Construction;
