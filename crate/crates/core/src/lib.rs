//! Exact power sums of reciprocal zeros ("Rayleigh-type functions") for the
//! Bessel function J_ν, the combination N_ν = az²J_ν″ + bzJ_ν′ + cJ_ν, and
//! the confluent hypergeometric function ₁F₁(a; b; z).
//!
//! Every sum is produced twice: once by a convolution recurrence obtained
//! from a Riccati equation, and once by dividing power series. Real zeros can
//! additionally be bracketed numerically, which yields certified enclosures
//! of the sums and Euler–Rayleigh bounds on the smallest zero.

pub mod arith;
pub mod bounds;
pub mod chf;
mod error;
pub mod mercer;
pub mod oracle;
pub mod sigma;
pub mod table;
pub mod zeros;

pub use error::{Error, Result};
pub use arith::{BigRat, FormalSeries, NuMode, PolyNu, RatFuncNu, Scalar, Value, Var};
pub use chf::{s_table, ChfParams};
pub use mercer::{derive_pqr, tau_table, verify_ode, MercerParams};
pub use sigma::sigma_table;
pub use table::{Caveat, Family, Provenance, SumsTable};
pub use bounds::{euler_rayleigh, nth_root_enclosure, EulerRayleighBracket, RealZeros};
pub use zeros::{find_zeros, partial_sum_enclosure, SumEnclosure, ZeroEnclosure, ZeroFunction};
