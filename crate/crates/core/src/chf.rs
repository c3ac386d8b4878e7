//! Power sums S_p = Σ_λ a_λ^{-p} over the zeros of ₁F₁(a; b; z).
//!
//! The zeros are in general complex; the sums are computed from coefficients
//! only and are exact regardless. S₁ diverges, so tables start at p = 2.

use crate::arith::{int, pole, BigRat};
use crate::error::{Error, Result};
use crate::table::{self_convolution, Family, Provenance, SumsTable};

/// Parameters of ₁F₁(a; b; z); `b` is neither zero nor a negative integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChfParams {
    a: BigRat,
    b: BigRat,
}

impl ChfParams {
    pub fn new(a: BigRat, b: BigRat) -> Result<Self> {
        if b.is_integer() && b <= int(0) {
            return Err(Error::InvalidB(b.to_string()));
        }
        Ok(ChfParams { a, b })
    }

    pub fn a(&self) -> &BigRat {
        &self.a
    }

    pub fn b(&self) -> &BigRat {
        &self.b
    }

    pub fn family(&self) -> Family {
        Family::Chf {
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }
}

/// S₂ … S_P by the convolution recurrence
/// S_{k+1} = [(b−2a)S_k + b Σ_{m=2}^{k−1} S_m S_{k−m+1}] / (b(k+b)), k ≥ 3,
/// seeded with S₂ = a(a−b)/(b²(b+1)) and S₃ = a(a−b)(b−2a)/(b³(b+1)(b+2)).
pub fn s_table(params: &ChfParams, max_power: usize) -> Result<SumsTable> {
    if max_power < 2 {
        return Err(Error::InvalidArgument("P must be at least 2".into()));
    }
    let (a, b) = (&params.a, &params.b);
    let b_plus = |k: i64| {
        let v = b + int(k);
        if v == int(0) {
            Err(pole(k as usize, format!("b + {k} = 0")))
        } else {
            Ok(v)
        }
    };
    let a_amb = a * (a - b);
    let b_2a = b - int(2) * a;

    // s[0] unused, s[1] = 0 so the full convolution reduces to m = 2..k−1
    let mut s = vec![int(0), int(0)];
    s.push(&a_amb / (b * b * b_plus(1)?));
    if max_power >= 3 {
        s.push(&a_amb * &b_2a / (b * b * b * b_plus(1)? * b_plus(2)?));
    }
    for k in 3..max_power {
        let num = &b_2a * &s[k] + b * self_convolution(&s, k + 1);
        let next = num / (b * b_plus(k as i64)?);
        s.push(next);
    }
    Ok(SumsTable::from_scalars(
        params.family(),
        None,
        2,
        s.split_off(2),
        Provenance::Riccati,
    ))
}

/// a(a−b)[a(a−b)(5b+6) + b²(b+1)] / [b⁴(b+1)²(b+2)(b+3)].
pub fn s4_closed_form(params: &ChfParams) -> BigRat {
    let (a, b) = (&params.a, &params.b);
    let aab = a * (a - b);
    let b1 = b + int(1);
    let num = &aab * (&aab * (int(5) * b + int(6)) + b * b * &b1);
    let den = b * b * b * b * &b1 * &b1 * (b + int(2)) * (b + int(3));
    num / den
}
