//! Exact arithmetic kernel: dense polynomials in `q`, the polynomial `p(x)`
//! that parameterizes a family, truncated power series and symmetric
//! functions of a multiset of polynomials.

mod pspec;
mod qpoly;
mod series;
mod symmetric;
mod xpoly;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

pub use pspec::{bracket_of_p, p_eval_int, p_of_bracket, PSpec};
pub use qpoly::{q_bracket, QPoly};
pub use series::{Coefficient, FieldCoefficient, Series, SeriesVar};
pub use symmetric::{complete_homogeneous, elem_symmetric};
pub use xpoly::XPoly;
