//! Exact scalars, dense polynomials and truncated power series.

mod poly;
mod rational;
mod series;

pub use poly::Poly;
pub use rational::Rational;
pub use series::{Coefficient, Series};
