//! Exact rationals, sparse Laurent polynomials, truncated `h`-series and
//! power-sum conversion.

mod mpoly;
mod series;
mod symmetric;
mod text;
mod var;

pub use mpoly::{MPoly, Monomial};
pub use series::{expand_exponential, HSeries};
pub use symmetric::{partitions, power_sum, power_sum_bindings, power_sum_decompose};
pub use var::VarId;

/// Arbitrary-precision rational, always normalized.
pub type Rat = num::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}
