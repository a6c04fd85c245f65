//! Exact-arithmetic toolkit for classical and q-deformed Fibonacci and Lucas
//! polynomial families.
//!
//! The crate is organized in layers:
//! - [`rational`], [`mpoly`], [`series`], [`gamma`]: exact scalar and
//!   polynomial arithmetic (big rationals, sparse Laurent-in-q polynomials,
//!   truncated power series, half-integer gamma values);
//! - [`qcalc`]: q-integers, q-shifted factorials, q-binomial coefficients,
//!   the Hahn operator and base inversion q -> 1/q;
//! - [`families`]: constructors for every polynomial family, by recurrence
//!   and by explicit sum, plus the structural identities connecting them;
//! - [`hyper`]: terminating 2F1 evaluation, the Chebyshev transformation
//!   formulas, Gauss's second summation theorem, ODE eigen-relations and
//!   generating-function checks;
//! - [`fourier`]: Gaussian Fourier transform verification for the q-families,
//!   both by a symbolic oracle and by Gauss-Hermite quadrature;
//! - [`report`], [`suites`]: machine-readable identity reports and the suite
//!   runner behind the `qfl` CLI.

pub mod rational;
pub mod mpoly;
pub mod series;
pub mod gamma;
pub mod qcalc;
pub mod families;
pub mod hyper;
pub mod fourier;
pub mod report;
pub mod suites;

mod error;

pub use error::Error;
pub use rational::Rational;
pub use mpoly::{MPoly, Monomial};
pub use series::TSeries;
pub use gamma::HalfGamma;

pub type Result<T> = std::result::Result<T, Error>;
