//! Exact scalars: rationals, radical extensions, level polynomials.

pub mod poly;
pub mod radical;
pub mod rational;

pub use poly::{LevelPolynomial, LevelRationalFunction};
pub use radical::{Gaussian, RadicalScalar};
pub use rational::{q, Rational};
