//! Exact arithmetic: rationals, polynomials and rational functions in ν, and
//! truncated formal power series over either.

mod poly;
mod ratfunc;
mod rational;
mod scalar;
mod series;

pub use poly::PolyNu;
pub use ratfunc::RatFuncNu;
pub use rational::{int, parse_rat, rat, rat_to_string, to_decimal, BigRat};
pub use scalar::{NuMode, Scalar, Value};
pub(crate) use scalar::pole;
pub use series::{series_divide, FormalSeries, Var};
