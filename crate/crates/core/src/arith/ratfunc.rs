//! Reduced rational functions in ν.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::PolyNu;
use super::rational::BigRat;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. This canonical form
/// is unique, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFuncNu {
    num: PolyNu,
    den: PolyNu,
}

impl RatFuncNu {
    /// Reduces `num / den` to canonical form.
    pub fn normalize(num: PolyNu, den: PolyNu) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: PolyNu, den: PolyNu) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        Self::make_monic(num, den)
    }

    fn make_monic(num: PolyNu, den: PolyNu) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFuncNu { num, den }
        } else {
            let inv = lc.recip();
            RatFuncNu {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFuncNu {
            num: PolyNu::zero(),
            den: PolyNu::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        RatFuncNu {
            num: PolyNu::constant(c),
            den: PolyNu::one(),
        }
    }

    pub fn nu() -> Self {
        Self::from_poly(PolyNu::nu())
    }

    pub fn from_poly(p: PolyNu) -> Self {
        RatFuncNu {
            num: p,
            den: PolyNu::one(),
        }
    }

    pub fn num(&self) -> &PolyNu {
        &self.num
    }

    pub fn den(&self) -> &PolyNu {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact value at ν₀, or a pole error when the denominator vanishes there.
    pub fn eval_at(&self, nu0: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(nu0);
        if d.is_zero() {
            return Err(Error::Pole {
                index: 0,
                reason: format!("denominator {} vanishes at ν = {}", self.den, nu0),
            });
        }
        Ok(self.num.eval(nu0) / d)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::make_monic(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFuncNu {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Integer-coefficient form `(num, den)`: no common content across both,
    /// denominator leading coefficient positive. Same value as `self`.
    pub fn integer_form(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let (np, ns) = self.num.primitive_part();
        let (dp, ds) = self.den.primitive_part();
        if np.is_empty() {
            return (Vec::new(), vec![BigInt::one()]);
        }
        // value = (ns/ds) * np/dp; write ns/ds = u/v in lowest terms.
        let ratio = ns / ds;
        let u = ratio.numer();
        let v = ratio.denom();
        (
            np.iter().map(|c| c * u).collect(),
            dp.iter().map(|c| c * v).collect(),
        )
    }

    pub fn to_latex(&self, var: &str) -> String {
        let (n, d) = self.integer_form();
        let n = PolyNu::new(n.into_iter().map(BigRat::from_integer).collect());
        let d = PolyNu::new(d.into_iter().map(BigRat::from_integer).collect());
        if d.is_constant() && d.coeff(0).is_one() {
            n.to_latex(var)
        } else {
            format!("\\frac{{{}}}{{{}}}", n.to_latex(var), d.to_latex(var))
        }
    }
}

fn int_poly_string(c: Vec<BigInt>) -> String {
    PolyNu::new(c.into_iter().map(BigRat::from_integer).collect()).to_string()
}

impl fmt::Display for RatFuncNu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.integer_form();
        let d_is_one = d.len() == 1 && d[0].is_one();
        let n_len = n.len();
        let n = int_poly_string(n);
        if d_is_one {
            return f.write_str(&n);
        }
        let n = if n_len > 1 { format!("({n})") } else { n };
        let d_len = d.len();
        let d = int_poly_string(d);
        if d_len > 1 || d.starts_with('-') {
            write!(f, "{n}/({d})")
        } else {
            write!(f, "{n}/{d}")
        }
    }
}

impl fmt::Debug for RatFuncNu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFuncNu({self})")
    }
}

impl<'a> Add<&'a RatFuncNu> for &'a RatFuncNu {
    type Output = RatFuncNu;
    fn add(self, rhs: &RatFuncNu) -> RatFuncNu {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFuncNu::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_constant() {
            // coprime denominators: the sum is already reduced
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return RatFuncNu::zero();
            }
            return RatFuncNu::make_monic(num, &self.den * &rhs.den);
        }
        let b = self.den.exact_div(&g);
        let d = rhs.den.exact_div(&g);
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        if num.is_zero() {
            return RatFuncNu::zero();
        }
        // any common factor of num and b*d*g divides g
        let h = num.gcd(&g);
        let (num, g) = if h.is_constant() {
            (num, g)
        } else {
            (num.exact_div(&h), g.exact_div(&h))
        };
        RatFuncNu::make_monic(num, &(&b * &d) * &g)
    }
}

impl<'a> Sub<&'a RatFuncNu> for &'a RatFuncNu {
    type Output = RatFuncNu;
    fn sub(self, rhs: &RatFuncNu) -> RatFuncNu {
        self + &(-rhs)
    }
}

impl Neg for &RatFuncNu {
    type Output = RatFuncNu;
    fn neg(self) -> RatFuncNu {
        RatFuncNu {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a> Mul<&'a RatFuncNu> for &'a RatFuncNu {
    type Output = RatFuncNu;
    fn mul(self, rhs: &RatFuncNu) -> RatFuncNu {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncNu::zero();
        }
        let cross = |n: &PolyNu, d: &PolyNu| -> (PolyNu, PolyNu) {
            let g = n.gcd(d);
            if g.is_constant() {
                (n.clone(), d.clone())
            } else {
                (n.exact_div(&g), d.exact_div(&g))
            }
        };
        let (n1, d2) = cross(&self.num, &rhs.den);
        let (n2, d1) = cross(&rhs.num, &self.den);
        RatFuncNu::make_monic(&n1 * &n2, &d1 * &d2)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFuncNu> for RatFuncNu {
            type Output = RatFuncNu;
            fn $m(self, rhs: RatFuncNu) -> RatFuncNu {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFuncNu {
    type Output = RatFuncNu;
    fn neg(self) -> RatFuncNu {
        -&self
    }
}

impl Zero for RatFuncNu {
    fn zero() -> Self {
        RatFuncNu::zero()
    }
    fn is_zero(&self) -> bool {
        RatFuncNu::is_zero(self)
    }
}

impl One for RatFuncNu {
    fn one() -> Self {
        RatFuncNu::one()
    }
}

impl From<PolyNu> for RatFuncNu {
    fn from(p: PolyNu) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use num_integer::Integer;
    use num_traits::Signed;

    fn p(c: &[i64]) -> PolyNu {
        PolyNu::from_ints(c)
    }

    fn content(v: &[BigInt]) -> BigInt {
        v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c)).abs()
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFuncNu {
        RatFuncNu::normalize(p(n), p(d)).unwrap()
    }

    #[test]
    fn normalize_cancels_common_factor() {
        assert_eq!(rf(&[-1, 0, 1], &[1, 1]), RatFuncNu::from_poly(p(&[-1, 1])));
        assert_eq!(rf(&[0], &[1, 1]), RatFuncNu::zero());
        assert_eq!(rf(&[2, 2], &[4, 4]), RatFuncNu::constant(rat(1, 2)));
        assert_eq!(
            RatFuncNu::normalize(p(&[1]), PolyNu::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn eval_at_values_and_poles() {
        let sigma1 = rf(&[1], &[4, 4]);
        assert_eq!(sigma1.eval_at(&int(0)).unwrap(), rat(1, 4));
        assert!(matches!(sigma1.eval_at(&int(-1)), Err(Error::Pole { .. })));
        let tau1 = rf(&[2, 1], &[0, 4, 4]);
        assert_eq!(tau1.eval_at(&int(1)).unwrap(), rat(3, 8));
    }

    #[test]
    fn sums_cancel_to_canonical_form() {
        // 1/(ν+1) - 1/(ν+2) = 1/((ν+1)(ν+2))
        let a = rf(&[1], &[1, 1]);
        let b = rf(&[1], &[2, 1]);
        assert_eq!(&a - &b, rf(&[1], &[2, 3, 1]));
        // ν/(ν²-1) + 1/(ν²-1) = 1/(ν-1)
        let c = rf(&[0, 1], &[-1, 0, 1]);
        let d = rf(&[1], &[-1, 0, 1]);
        assert_eq!(&c + &d, rf(&[1], &[-1, 1]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn shared_factor_sum() {
        // 1/((ν+1)(ν+2)) + 1/((ν+1)(ν+3)) = (2ν+5)/((ν+1)(ν+2)(ν+3))
        let a = rf(&[1], &[2, 3, 1]);
        let b = rf(&[1], &[3, 4, 1]);
        let den = &(&p(&[1, 1]) * &p(&[2, 1])) * &p(&[3, 1]);
        let want = RatFuncNu::normalize(p(&[5, 2]), den).unwrap();
        assert_eq!(&a + &b, want);
    }

    #[test]
    fn display_clears_denominators() {
        assert_eq!(rf(&[1], &[4, 4]).to_string(), "1/(4ν + 4)");
        assert_eq!(RatFuncNu::constant(rat(-3, 2)).to_string(), "-3/2");
        assert_eq!(rf(&[2, 1], &[0, 4, 4]).to_string(), "(ν + 2)/(4ν^2 + 4ν)");
        assert_eq!(
            rf(&[1], &[4, 4]).to_latex("\\nu"),
            "\\frac{1}{4\\nu + 4}"
        );
    }

    #[test]
    fn integer_form_is_primitive() {
        let r = RatFuncNu::normalize(
            PolyNu::new(vec![rat(3, 4), rat(3, 2)]),
            PolyNu::new(vec![rat(9, 5), int(0), rat(6, 5)]),
        )
        .unwrap();
        let (n, d) = r.integer_form();
        let mut all = n.clone();
        all.extend(d.iter().cloned());
        assert!(content(&all).is_one());
        assert!(d.last().unwrap().is_positive());
    }
}
