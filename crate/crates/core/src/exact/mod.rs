//! Exact arithmetic substrate: rationals, dense rational matrices, truncated
//! power series over a pluggable commutative ring, and Laurent polynomials in `q`.

mod laurent;
mod matrix;
mod rational;
mod ring;
mod series;

pub use laurent::LaurentZ;
pub use matrix::MatrixQ;
pub use rational::{parse_rational, rat, Rational};
pub use ring::Ring;
pub use series::{neg_log_derivative, Series};

pub use num_bigint::BigInt;
