//! Exact scalars and linear algebra over the 24th cyclotomic field.

mod cyclo;
mod matrix;
mod poly;
mod rational;

pub use cyclo::{verify_modulus, CycloNum};
pub use matrix::ExactMatrix;
pub use poly::{cyclotomic_polynomial, Poly};
pub use rational::Rational;
