//! Exact coefficient ring: rationals and Laurent polynomials in `q` with
//! rational exponents.

mod laurent;
mod rational;

pub use laurent::LaurentPoly;
pub use rational::Rational;
