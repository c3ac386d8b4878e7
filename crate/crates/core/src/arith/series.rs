//! Truncated formal power series with exact coefficients.

use std::fmt;

use super::rational::BigRat;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Name of the series variable: `t = z²` for the Bessel/Mercer families,
/// `z` for the confluent family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    T,
    Z,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::T => "t",
            Var::Z => "z",
        })
    }
}

/// `Σ_{i ≤ order} coeffs[i] varⁱ`. Coefficients past the order are taken to
/// be zero when series of different orders are combined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries<C> {
    var: Var,
    coeffs: Vec<C>,
}

impl<C: Scalar> FormalSeries<C> {
    /// An empty coefficient list is read as the zero series of order 0.
    pub fn new(var: Var, mut coeffs: Vec<C>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(C::zero());
        }
        FormalSeries { var, coeffs }
    }

    pub fn from_rats(var: Var, coeffs: &[BigRat]) -> Self {
        Self::new(var, coeffs.iter().map(C::from_rat).collect())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// Truncates or zero-pads to exactly `order`.
    pub fn with_order(&self, order: usize) -> Self {
        FormalSeries {
            var: self.var,
            coeffs: (0..=order).map(|i| self.coeff(i)).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scaled(&BigRat::from_integer(i.into())))
            .collect();
        Self::new(self.var, coeffs)
    }

    /// Multiplies by the series variable.
    pub fn shift(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        FormalSeries {
            var: self.var,
            coeffs,
        }
    }

    pub fn negated(&self) -> Self {
        FormalSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(Scalar::negated).collect(),
        }
    }

    pub fn plus(&self, rhs: &Self) -> Result<Self> {
        self.check_var(rhs)?;
        let n = self.order().max(rhs.order());
        Ok(FormalSeries {
            var: self.var,
            coeffs: (0..=n).map(|i| self.coeff(i).plus(&rhs.coeff(i))).collect(),
        })
    }

    /// Product truncated at `order`.
    pub fn times(&self, rhs: &Self, order: usize) -> Result<Self> {
        self.check_var(rhs)?;
        let coeffs = (0..=order)
            .map(|n| {
                let lo = n.saturating_sub(rhs.order());
                let hi = n.min(self.order());
                (lo..=hi).fold(C::zero(), |acc, i| {
                    acc.plus(&self.coeffs[i].times(&rhs.coeffs[n - i]))
                })
            })
            .collect();
        Ok(FormalSeries {
            var: self.var,
            coeffs,
        })
    }

    /// The quotient `h` with `self ≡ divisor·h` modulo terms above `order`.
    pub fn divide(&self, divisor: &Self, order: usize) -> Result<Self> {
        self.check_var(divisor)?;
        let g0 = &divisor.coeffs[0];
        if g0.is_zero() {
            return Err(Error::NonInvertibleConstant);
        }
        let mut h: Vec<C> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeff(n);
            for k in 1..=n.min(divisor.order()) {
                acc = acc.minus(&divisor.coeffs[k].times(&h[n - k]));
            }
            h.push(acc.try_div(g0).ok_or(Error::NonInvertibleConstant)?);
        }
        Ok(FormalSeries {
            var: self.var,
            coeffs: h,
        })
    }

    fn check_var(&self, rhs: &Self) -> Result<()> {
        if self.var != rhs.var {
            return Err(Error::InvalidArgument(format!(
                "series in {} and {} cannot be combined",
                self.var, rhs.var
            )));
        }
        Ok(())
    }
}

/// `f ÷ g` through order `n`.
pub fn series_divide<C: Scalar>(
    f: &FormalSeries<C>,
    g: &FormalSeries<C>,
    n: usize,
) -> Result<FormalSeries<C>> {
    f.divide(g, n)
}

impl<C: Scalar> fmt::Display for FormalSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·{}", self.var)?,
                _ => write!(f, "({c})·{}^{i}", self.var)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use crate::arith::{PolyNu, RatFuncNu};

    fn fs(c: &[BigRat]) -> FormalSeries<BigRat> {
        FormalSeries::from_rats(Var::T, c)
    }

    #[test]
    fn geometric_series() {
        let one = fs(&[int(1)]);
        let g = fs(&[int(1), int(-1)]);
        let h = series_divide(&one, &g, 3).unwrap();
        assert_eq!(h.coeffs(), &[int(1), int(1), int(1), int(1)]);
    }

    #[test]
    fn self_division_is_one() {
        let f = fs(&[int(2), rat(1, 3), int(-5), int(7)]);
        let h = series_divide(&f, &f, 5).unwrap();
        assert_eq!(h, fs(&[int(1)]).with_order(5));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let f = fs(&[int(1)]);
        let g = fs(&[int(0), int(1)]);
        assert_eq!(series_divide(&f, &g, 2), Err(Error::NonInvertibleConstant));
        let gs = FormalSeries::<RatFuncNu>::new(Var::T, vec![RatFuncNu::zero()]);
        let fs_ = FormalSeries::<RatFuncNu>::new(Var::T, vec![RatFuncNu::one()]);
        assert_eq!(series_divide(&fs_, &gs, 1), Err(Error::NonInvertibleConstant));
    }

    #[test]
    fn mixed_variables_are_rejected() {
        let f = fs(&[int(1)]);
        let g = FormalSeries::from_rats(Var::Z, &[int(1)]);
        assert!(matches!(f.plus(&g), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn symbolic_division() {
        // 1 / (1 - ν t) = 1 + ν t + ν² t²
        let nu = RatFuncNu::nu();
        let g = FormalSeries::new(Var::T, vec![RatFuncNu::one(), -&nu]);
        let f = FormalSeries::new(Var::T, vec![RatFuncNu::one()]);
        let h = series_divide(&f, &g, 2).unwrap();
        assert_eq!(h.coeff(2), RatFuncNu::from_poly(PolyNu::from_ints(&[0, 0, 1])));
    }

    #[test]
    fn derivative_and_shift() {
        let f = fs(&[int(1), int(2), int(3)]);
        assert_eq!(f.derivative(), fs(&[int(2), int(6)]));
        assert_eq!(f.shift(), fs(&[int(0), int(1), int(2), int(3)]));
    }
}
