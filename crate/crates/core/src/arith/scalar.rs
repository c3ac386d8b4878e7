//! The coefficient field abstraction shared by the fixed-ν and symbolic-ν
//! code paths.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::PolyNu;
use super::ratfunc::RatFuncNu;
use super::rational::{rat_to_string, BigRat};
use crate::error::{Error, Result};

/// Exact field elements the recurrences and series run over: `BigRat` at a
/// fixed ν₀, or `RatFuncNu` with ν symbolic.
pub trait Scalar:
    Clone + PartialEq + Zero + One + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn from_rat(r: &BigRat) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `None` when `rhs` is zero.
    fn try_div(&self, rhs: &Self) -> Option<Self>;
    fn scaled(&self, c: &BigRat) -> Self;
    /// Evaluates a polynomial in ν, with ν taking the value `nu`.
    fn lift(p: &PolyNu, nu: &Self) -> Self {
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.times(nu).plus(&Self::from_rat(c)))
    }
    fn into_value(self) -> Value;
}

impl Scalar for BigRat {
    fn from_rat(r: &BigRat) -> Self {
        r.clone()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
    fn scaled(&self, c: &BigRat) -> Self {
        self * c
    }
    fn into_value(self) -> Value {
        Value::Fixed(self)
    }
}

impl Scalar for RatFuncNu {
    fn from_rat(r: &BigRat) -> Self {
        RatFuncNu::constant(r.clone())
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs).ok()
    }
    fn scaled(&self, c: &BigRat) -> Self {
        self.scale(c)
    }
    fn lift(p: &PolyNu, _nu: &Self) -> Self {
        RatFuncNu::from_poly(p.clone())
    }
    fn into_value(self) -> Value {
        Value::Symbolic(self)
    }
}

/// Whether ν is kept symbolic or fixed to an exact rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NuMode {
    Symbolic,
    Fixed(BigRat),
}

impl NuMode {
    pub fn fixed(&self) -> Option<&BigRat> {
        match self {
            NuMode::Symbolic => None,
            NuMode::Fixed(v) => Some(v),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s.trim() == "symbolic" {
            Ok(NuMode::Symbolic)
        } else {
            super::rational::parse_rat(s).map(NuMode::Fixed)
        }
    }
}

impl fmt::Display for NuMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NuMode::Symbolic => f.write_str("symbolic"),
            NuMode::Fixed(v) => f.write_str(&rat_to_string(v)),
        }
    }
}

/// A table entry in either mode.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Fixed(BigRat),
    Symbolic(RatFuncNu),
}

impl Value {
    pub fn as_fixed(&self) -> Option<&BigRat> {
        match self {
            Value::Fixed(v) => Some(v),
            Value::Symbolic(_) => None,
        }
    }

    pub fn as_symbolic(&self) -> Option<&RatFuncNu> {
        match self {
            Value::Symbolic(r) => Some(r),
            Value::Fixed(_) => None,
        }
    }

    /// Exact value at ν₀; fixed values are returned unchanged.
    pub fn eval_at(&self, nu0: &BigRat) -> Result<BigRat> {
        match self {
            Value::Fixed(v) => Ok(v.clone()),
            Value::Symbolic(r) => r.eval_at(nu0),
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            Value::Fixed(v) if v.is_integer() => v.to_string(),
            Value::Fixed(v) => {
                let sign = if v < &<BigRat as Zero>::zero() { "-" } else { "" };
                format!("{sign}\\frac{{{}}}{{{}}}", v.numer().magnitude(), v.denom())
            }
            Value::Symbolic(r) => r.to_latex("\\nu"),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Fixed(v) => write!(f, "{v}"),
            Value::Symbolic(r) => write!(f, "{r}"),
        }
    }
}

pub(crate) fn pole(index: usize, reason: impl Into<String>) -> Error {
    Error::Pole {
        index,
        reason: reason.into(),
    }
}
