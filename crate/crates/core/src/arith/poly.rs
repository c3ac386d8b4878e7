//! Dense univariate polynomials in ν with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::BigRat;

/// A polynomial in ν; `coeffs[i]` multiplies νⁱ. No trailing zeros are
/// stored, so the empty vector is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyNu {
    coeffs: Vec<BigRat>,
}

impl PolyNu {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyNu { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRat::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        PolyNu { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial ν.
    pub fn nu() -> Self {
        Self::new(vec![BigRat::zero(), BigRat::one()])
    }

    /// ν + c
    pub fn nu_plus(c: BigRat) -> Self {
        Self::new(vec![c, BigRat::one()])
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn scale(&self, c: &BigRat) -> PolyNu {
        if c.is_zero() {
            return PolyNu::zero();
        }
        PolyNu {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> PolyNu {
        PolyNu::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRat::from_integer(i.into()))
                .collect(),
        )
    }

    /// Scales to leading coefficient one. The zero polynomial is returned as is.
    pub fn monic(&self) -> PolyNu {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Euclidean division over ℚ. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &PolyNu) -> (PolyNu, PolyNu) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let Some(nd) = self.degree() else {
            return (PolyNu::zero(), PolyNu::zero());
        };
        if nd < dd {
            return (PolyNu::zero(), self.clone());
        }
        let inv_lc = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (PolyNu::new(quot), PolyNu::new(rem))
    }

    /// Division known to be exact.
    pub fn exact_div(&self, divisor: &PolyNu) -> PolyNu {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Clears denominators and content: returns `(prim, scale)` with
    /// `self = scale * prim`, `prim` an integer polynomial of content one and
    /// positive leading coefficient.
    pub fn primitive_part(&self) -> (Vec<BigInt>, BigRat) {
        if self.is_zero() {
            return (Vec::new(), BigRat::zero());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(Signed::is_negative) {
            content = -content;
        }
        let prim = ints.into_iter().map(|c| c / &content).collect();
        (prim, BigRat::new(content, lcm))
    }

    /// Monic greatest common divisor, computed by a primitive
    /// pseudo-remainder sequence over ℤ. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &PolyNu) -> PolyNu {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return PolyNu::one();
        }
        let (mut a, _) = self.primitive_part();
        let (mut b, _) = other.primitive_part();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            if b.len() == 1 {
                return PolyNu::one();
            }
            let r = primitive(pseudo_rem(a, &b));
            a = b;
            b = r;
        }
        PolyNu::new(a.into_iter().map(BigRat::from_integer).collect()).monic()
    }

    /// Renders with descending powers, e.g. `4ν^2 - 1`.
    pub fn display_with(&self, var: &str) -> String {
        render(self, var, |k| format!("^{k}"), |c| c.to_string())
    }

    /// LaTeX rendering, descending powers, `\frac` for non-integer coefficients.
    pub fn to_latex(&self, var: &str) -> String {
        render(self, var, |k| format!("^{{{k}}}"), |c| {
            if c.is_integer() {
                c.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
            }
        })
    }
}

fn render(
    p: &PolyNu,
    var: &str,
    pow: impl Fn(usize) -> String,
    coef: impl Fn(&BigRat) -> String,
) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if k == 0 || !mag.is_one() {
            out.push_str(&coef(&mag));
        }
        if k >= 1 {
            out.push_str(var);
        }
        if k >= 2 {
            out.push_str(&pow(k));
        }
    }
    out
}

fn primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let mut content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return p;
    }
    if p.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    if !content.is_one() {
        for c in &mut p {
            *c /= &content;
        }
    }
    p
}

/// A scalar multiple of the pseudo-remainder of `a` by `b` (both trimmed,
/// `b` non-constant).
fn pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    while a.len() > db {
        let la = a.pop().expect("nonempty");
        let shift = a.len() - db;
        if !la.is_zero() {
            for c in a.iter_mut() {
                *c *= lb;
            }
            for (j, bc) in b[..db].iter().enumerate() {
                a[shift + j] -= &la * bc;
            }
        }
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
    }
    a
}

impl fmt::Display for PolyNu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("ν"))
    }
}

impl fmt::Debug for PolyNu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyNu({self})")
    }
}

impl<'a> Add<&'a PolyNu> for &'a PolyNu {
    type Output = PolyNu;
    fn add(self, rhs: &PolyNu) -> PolyNu {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        PolyNu::new(coeffs)
    }
}

impl<'a> Sub<&'a PolyNu> for &'a PolyNu {
    type Output = PolyNu;
    fn sub(self, rhs: &PolyNu) -> PolyNu {
        self + &(-rhs)
    }
}

impl Neg for &PolyNu {
    type Output = PolyNu;
    fn neg(self) -> PolyNu {
        PolyNu {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a PolyNu> for &'a PolyNu {
    type Output = PolyNu;
    fn mul(self, rhs: &PolyNu) -> PolyNu {
        if self.is_zero() || rhs.is_zero() {
            return PolyNu::zero();
        }
        let mut coeffs = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyNu::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<PolyNu> for PolyNu {
            type Output = PolyNu;
            fn $m(self, rhs: PolyNu) -> PolyNu {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyNu {
    type Output = PolyNu;
    fn neg(self) -> PolyNu {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    fn p(c: &[i64]) -> PolyNu {
        PolyNu::from_ints(c)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn gcd_of_common_linear_factor() {
        // (ν+1)(ν-2) and (ν+1)(2ν+3)
        let a = &p(&[1, 1]) * &p(&[-2, 1]);
        let b = &p(&[1, 1]) * &p(&[3, 2]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), PolyNu::one());
        assert_eq!(a.gcd(&PolyNu::zero()), a.monic());
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let f = PolyNu::new(vec![rat(1, 2), rat(1, 3)]); // ν/3 + 1/2
        let g = &f * &PolyNu::new(vec![rat(-5, 7), int(1)]);
        assert_eq!(f.gcd(&g), f.monic());
    }

    #[test]
    fn division_with_remainder() {
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2]));
        assert_eq!(q, PolyNu::new(vec![int(0), rat(1, 2)]));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn evaluation_and_derivative() {
        let f = p(&[3, 1, 1]);
        assert_eq!(f.eval(&rat(1, 2)), rat(15, 4));
        assert_eq!(f.derivative(), p(&[1, 2]));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[-1, 0, 4]).to_string(), "4ν^2 - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-ν");
        assert_eq!(PolyNu::zero().to_string(), "0");
        assert_eq!(
            PolyNu::new(vec![rat(1, 2), int(0), int(3)]).to_latex("\\nu"),
            "3\\nu^{2} + \\frac{1}{2}"
        );
    }
}
