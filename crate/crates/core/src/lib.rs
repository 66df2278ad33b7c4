//! Exact algebra for octonions, Clifford algebras, spinors and the triality
//! automorphism of Spin(8), together with the combinatorial data attached to
//! the endoscopy of G₂.

pub mod clifford;
pub mod endoscopy;
pub mod error;
pub mod field;
pub mod lie;
pub mod octonion;
pub mod okubo;
pub mod parameters;
pub mod report;
pub mod sample;
pub mod so8;
pub mod spinor;
pub mod suites;
pub mod triality;
pub mod weyl;

pub use error::{AlgebraError, Result};
pub use field::{CycloNum, ExactMatrix, Rational};
