//! Certified real zeros of z^{−ν}J_ν and z^{−ν}N_ν in the variable t = z²,
//! and enclosures of the power sums built from them.
//!
//! Everything is exact: the series Σ W(n) g_n tⁿ is summed in integers, and a
//! sign is accepted only once the partial sum dominates a geometric majorant
//! of the remaining terms. No floating point is involved anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::{int, rat, BigRat};
use crate::bounds::{nth_root_enclosure, RealZeros};
use crate::error::{Error, Result};

/// 333/106 < π.
fn pi_lower() -> BigRat {
    rat(333, 106)
}

/// 355/113 ≈ π, used only to lay out the search grid.
fn pi_grid() -> BigRat {
    rat(355, 113)
}

/// The function whose positive zeros are sought.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ZeroFunction {
    /// J_ν.
    Bessel { nu: BigRat },
    /// az²J_ν″ + bzJ_ν′ + cJ_ν.
    Mercer {
        a: BigRat,
        b: BigRat,
        c: BigRat,
        nu: BigRat,
    },
}

impl ZeroFunction {
    pub fn nu(&self) -> &BigRat {
        match self {
            ZeroFunction::Bessel { nu } | ZeroFunction::Mercer { nu, .. } => nu,
        }
    }

    /// Coefficients (α, β, γ) of the weight W(n) = αn² + βn + γ multiplying
    /// the Bessel coefficient g_n.
    fn weight(&self) -> [BigRat; 3] {
        match self {
            ZeroFunction::Bessel { .. } => [int(0), int(0), int(1)],
            ZeroFunction::Mercer { a, b, c, nu } => [
                a * int(4),
                a * int(2) * (nu * int(2) - int(1)) + b * int(2),
                a * nu * (nu - int(1)) + b * nu + c,
            ],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Positive,
}

/// A rational interval in t = z² holding exactly one sign change.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroEnclosure {
    pub function: ZeroFunction,
    /// 1-based position among the positive zeros.
    pub index: usize,
    pub lo: BigRat,
    pub hi: BigRat,
    pub sign_lo: Sign,
    pub sign_hi: Sign,
}

impl ZeroEnclosure {
    pub fn width(&self) -> BigRat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, t: &BigRat) -> bool {
        self.lo <= *t && *t <= self.hi
    }
}

/// Rigorous bracket for Σ_k ζ_k^{−n} over all positive zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumEnclosure {
    pub function: ZeroFunction,
    pub n: usize,
    /// Number of bracketed zeros used explicitly.
    pub count: usize,
    pub lower: BigRat,
    pub upper: BigRat,
    /// Bound on the contribution of zeros beyond the last bracketed one.
    pub tail: BigRat,
    /// Lower bound on every later gap between consecutive zeros in z.
    pub spacing: BigRat,
    /// Lower bound on the first unbracketed zero in z.
    pub beta: BigRat,
}

impl SumEnclosure {
    pub fn contains(&self, x: &BigRat) -> bool {
        self.lower <= *x && *x <= self.upper
    }

    pub fn width(&self) -> BigRat {
        &self.upper - &self.lower
    }
}

/// Search limits; the defaults keep runs at desk scale.
#[derive(Clone, Debug)]
pub struct SearchLimits {
    pub max_count: usize,
    /// Largest z scanned.
    pub max_z: BigRat,
    /// Truncation depth at which an uncertified sign is given up.
    pub max_terms: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_count: 64,
            max_z: int(250),
            max_terms: 4000,
        }
    }
}

/// Exact evaluator for y(t) = Σ W(n) g_n tⁿ with g_n = (−1)ⁿ/(4ⁿ n! (ν+1)ₙ).
struct Evaluator {
    nu_num: BigInt,
    nu_den: BigInt,
    /// W scaled to integer coefficients.
    weight: [BigInt; 3],
    weight_abs: [BigInt; 3],
    max_terms: usize,
}

impl Evaluator {
    fn new(f: &ZeroFunction, max_terms: usize) -> Self {
        let w = f.weight();
        let lcm = w
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let weight = w.map(|c| (c * BigRat::from(lcm.clone())).to_integer());
        let weight_abs = weight.clone().map(|c| c.abs());
        Evaluator {
            nu_num: f.nu().numer().clone(),
            nu_den: f.nu().denom().clone(),
            weight,
            weight_abs,
            max_terms,
        }
    }

    fn poly(c: &[BigInt; 3], n: usize) -> BigInt {
        let n = BigInt::from(n);
        (&c[0] * &n + &c[1]) * &n + &c[2]
    }

    /// Certified sign of y(t) for t > 0, or `None` if the truncation depth
    /// runs out first.
    ///
    /// With u_n = g_n tⁿ kept as an unreduced integer fraction, the loop holds
    /// S_N = acc / (L·den_N). For N ≥ 1 the majorant ratio
    /// ((j+1)/j)²·t / (4(j+1)(j+1+ν)) decreases in j, so once it is ≤ 1/2 at
    /// j = N+1 the tail is at most twice |W|(N+1)·|u_{N+1}|.
    fn sign(&self, t: &BigRat) -> Option<Sign> {
        let (tm, tk) = (t.numer(), t.denom());
        let (p, q) = (&self.nu_num, &self.nu_den);
        let step_num = -(q * tm);
        let step_num_abs = q * tm;
        let den = |n: usize| -> BigInt {
            let n_big = BigInt::from(n);
            BigInt::from(4 * n) * (p + q * &n_big) * tk
        };

        let mut acc = Self::poly(&self.weight, 0);
        let mut u = BigInt::one();
        for n in 1..=self.max_terms {
            u *= &step_num;
            acc = acc * den(n) + Self::poly(&self.weight, n) * &u;

            let (n1, n2) = (BigInt::from(n + 1), BigInt::from(n + 2));
            let ratio_ok = &n2 * &step_num_abs
                <= BigInt::from(2) * &n1 * &n1 * (&n2 * q + p) * tk;
            if !ratio_ok || acc.is_zero() {
                continue;
            }
            let tail = BigInt::from(2) * Self::poly(&self.weight_abs, n + 1) * u.abs() * &step_num_abs;
            if acc.abs() * den(n + 1) > tail {
                return Some(if acc.is_positive() { Sign::Positive } else { Sign::Negative });
            }
        }
        None
    }

    /// Sign at t, nudging the point slightly if t sits too close to a zero.
    fn sign_near(&self, t: &BigRat, nudge: &BigRat) -> Option<(BigRat, Sign)> {
        let mut offset = nudge.clone();
        if let Some(s) = self.sign(t) {
            return Some((t.clone(), s));
        }
        for _ in 0..8 {
            for cand in [t + &offset, t - &offset] {
                if cand.is_positive() {
                    if let Some(s) = self.sign(&cand) {
                        return Some((cand, s));
                    }
                }
            }
            offset /= int(2);
        }
        None
    }
}

fn check_function(f: &ZeroFunction, regime: RealZeros) -> Result<()> {
    if *f.nu() <= int(-1) {
        return Err(Error::InvalidArgument(format!(
            "zero search needs ν₀ > −1, got {}",
            f.nu()
        )));
    }
    if let ZeroFunction::Mercer { .. } = f {
        if regime == RealZeros::Unasserted {
            return Err(Error::UnassertedRegime("mercer zero search".into()));
        }
        if f.weight()[2].is_zero() {
            return Err(Error::DegenerateParameters(
                "constant term aν² + (b−a)ν + c vanishes".into(),
            ));
        }
    }
    Ok(())
}

/// A raw bracket in t found by the grid scan.
#[derive(Clone, Debug)]
struct Bracket {
    lo: BigRat,
    hi: BigRat,
    sign_lo: Sign,
    sign_hi: Sign,
}

/// Scans z on a grid of step ≈ π/4 until `count` sign changes are seen,
/// then rescans at half step between any two brackets more than 1.5π apart.
fn scan(eval: &Evaluator, count: usize, max_z: &BigRat) -> Result<Vec<Bracket>> {
    let step = pi_grid() / int(4);
    let nudge = &step * &step / int(1000);
    const CHUNK: usize = 16;

    let mut brackets = Vec::new();
    let (mut prev_t, mut prev_sign) = (int(0), {
        let d0 = Evaluator::poly(&eval.weight, 0);
        if d0.is_positive() { Sign::Positive } else { Sign::Negative }
    });
    let mut j = 1usize;
    while brackets.len() < count {
        let zs: Vec<BigRat> = (j..j + CHUNK)
            .map(|i| &step * int(i as i64))
            .take_while(|z| z <= max_z)
            .collect();
        if zs.is_empty() {
            return Err(Error::BracketingFailure {
                found: brackets.len(),
                wanted: count,
                window: max_z.to_string(),
            });
        }
        let signs: Vec<Option<(BigRat, Sign)>> = zs
            .par_iter()
            .map(|z| eval.sign_near(&(z * z), &nudge))
            .collect();
        for s in signs {
            let (t, sign) = s.ok_or_else(|| {
                Error::PrecisionUnreachable("sign undetermined on the search grid".into())
            })?;
            if sign != prev_sign {
                brackets.push(Bracket {
                    lo: prev_t.clone(),
                    hi: t.clone(),
                    sign_lo: prev_sign,
                    sign_hi: sign,
                });
            }
            prev_t = t;
            prev_sign = sign;
        }
        j += zs.len();
    }
    rescan_wide_gaps(eval, &mut brackets, &step, &nudge)?;
    brackets.truncate(count);
    Ok(brackets)
}

fn rescan_wide_gaps(
    eval: &Evaluator,
    brackets: &mut Vec<Bracket>,
    step: &BigRat,
    nudge: &BigRat,
) -> Result<()> {
    let wide = pi_grid() * rat(3, 2);
    let half = step / int(2);
    let mut extra = Vec::new();
    for pair in brackets.windows(2) {
        let (left, right) = (&pair[0], &pair[1]);
        let z_left = nth_root_enclosure(&left.hi, 2, step)?.0;
        let z_right = nth_root_enclosure(&right.lo, 2, step)?.1;
        if &z_right - &z_left <= wide {
            continue;
        }
        let (mut t_prev, mut s_prev) = (left.hi.clone(), left.sign_hi);
        let mut z = &z_left + &half;
        while z < z_right {
            let (t, s) = eval.sign_near(&(&z * &z), nudge).ok_or_else(|| {
                Error::PrecisionUnreachable("sign undetermined while rescanning".into())
            })?;
            if t > t_prev && t < right.lo {
                if s != s_prev {
                    extra.push(Bracket {
                        lo: t_prev.clone(),
                        hi: t.clone(),
                        sign_lo: s_prev,
                        sign_hi: s,
                    });
                }
                t_prev = t;
                s_prev = s;
            }
            z += &half;
        }
        if s_prev != right.sign_lo {
            extra.push(Bracket {
                lo: t_prev,
                hi: right.lo.clone(),
                sign_lo: s_prev,
                sign_hi: right.sign_lo,
            });
        }
    }
    brackets.extend(extra);
    brackets.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(())
}

/// Halves a bracket until its width is at most `precision`.
fn refine(eval: &Evaluator, bracket: Bracket, precision: &BigRat) -> Result<Bracket> {
    let Bracket {
        mut lo,
        mut hi,
        sign_lo,
        sign_hi,
    } = bracket;
    while &hi - &lo > *precision {
        let width = &hi - &lo;
        let candidates = [rat(1, 2), rat(3, 8), rat(5, 8), rat(7, 16), rat(9, 16)];
        let mut moved = false;
        for frac in candidates {
            let mid = &lo + &width * frac;
            if let Some(s) = eval.sign(&mid) {
                if s == sign_lo {
                    lo = mid;
                } else {
                    hi = mid;
                }
                moved = true;
                break;
            }
        }
        if !moved {
            return Err(Error::PrecisionUnreachable(format!(
                "cannot certify a sign inside [{lo}, {hi}] within {} terms",
                eval.max_terms
            )));
        }
    }
    Ok(Bracket {
        lo,
        hi,
        sign_lo,
        sign_hi,
    })
}

/// The first `count` positive zeros of `f` in t = z², each enclosed to width
/// at most `precision`.
pub fn find_zeros(
    f: &ZeroFunction,
    count: usize,
    precision: &BigRat,
    regime: RealZeros,
) -> Result<Vec<ZeroEnclosure>> {
    find_zeros_with(f, count, precision, regime, &SearchLimits::default())
}

pub fn find_zeros_with(
    f: &ZeroFunction,
    count: usize,
    precision: &BigRat,
    regime: RealZeros,
    limits: &SearchLimits,
) -> Result<Vec<ZeroEnclosure>> {
    check_function(f, regime)?;
    if count == 0 || count > limits.max_count {
        return Err(Error::InvalidArgument(format!(
            "zero count must be in 1..={}",
            limits.max_count
        )));
    }
    if !precision.is_positive() {
        return Err(Error::InvalidArgument("precision must be positive".into()));
    }
    let eval = Evaluator::new(f, limits.max_terms);
    let brackets = scan(&eval, count, &limits.max_z)?;
    let refined = brackets
        .into_par_iter()
        .map(|b| refine(&eval, b, precision))
        .collect::<Result<Vec<_>>>()?;
    Ok(refined
        .into_iter()
        .enumerate()
        .map(|(i, b)| ZeroEnclosure {
            function: f.clone(),
            index: i + 1,
            lo: b.lo,
            hi: b.hi,
            sign_lo: b.sign_lo,
            sign_hi: b.sign_hi,
        })
        .collect())
}

fn pow_neg(x: &BigRat, n: usize) -> BigRat {
    let e = n as u32;
    BigRat::new(x.denom().pow(e), x.numer().pow(e))
}

/// Encloses Σ_k ζ_k^{−n} from the first M bracketed zeros plus a tail bound.
///
/// The tail assumes every gap in z beyond the last bracket is at least
/// h = min(π, smallest certified gap). That holds when the gaps seen so far
/// are either nondecreasing or already ≥ π; the last few gaps are checked
/// for one of the two, and the call fails otherwise. With β ≤ z_{M+1},
/// Σ_{j≥1} (β + (j−1)h)^{−2n} ≤ β^{−2n} + β^{1−2n} / (h(2n−1)).
pub fn partial_sum_enclosure(zeros: &[ZeroEnclosure], n: usize) -> Result<SumEnclosure> {
    if n == 0 {
        return Err(Error::TailBoundInvalid("power n = 0 diverges".into()));
    }
    if zeros.len() < 2 {
        return Err(Error::TailBoundInvalid(
            "at least two bracketed zeros are needed to bound the spacing".into(),
        ));
    }
    for (i, z) in zeros.iter().enumerate() {
        if z.index != i + 1 || z.function != zeros[0].function || !z.lo.is_positive() {
            return Err(Error::TailBoundInvalid(
                "zeros must be the first M enclosures of one function, in order".into(),
            ));
        }
    }
    let width = rat(1, 1 << 40);
    let roots = zeros
        .iter()
        .map(|z| {
            let lo = nth_root_enclosure(&z.lo, 2, &width)?.0;
            let hi = nth_root_enclosure(&z.hi, 2, &width)?.1;
            Ok((lo, hi))
        })
        .collect::<Result<Vec<_>>>()?;
    // gap bounds in z between consecutive zeros
    let gaps: Vec<(BigRat, BigRat)> = roots
        .windows(2)
        .map(|w| (&w[1].0 - &w[0].1, &w[1].1 - &w[0].0))
        .collect();
    if gaps.iter().any(|g| !g.0.is_positive()) {
        return Err(Error::TailBoundInvalid("enclosures overlap in z".into()));
    }
    let recent = &gaps[gaps.len().saturating_sub(4)..];
    let all_wide = recent.iter().all(|g| g.0 >= pi_lower());
    let growing = recent.windows(2).all(|w| w[1].1 >= w[0].0);
    if !all_wide && !growing {
        return Err(Error::TailBoundInvalid(
            "gaps between the last zeros are neither growing nor at least π".into(),
        ));
    }
    let spacing = gaps
        .iter()
        .map(|g| g.0.clone())
        .fold(pi_lower(), |m, g| m.min(g));
    let beta = &roots.last().expect("nonempty").0 + &spacing;

    let two_n = 2 * n;
    let tail = pow_neg(&beta, two_n) * (int(1) + &beta / (&spacing * int(two_n as i64 - 1)));
    let lower = zeros.iter().map(|z| pow_neg(&z.hi, n)).fold(int(0), |a, b| a + b);
    let upper = zeros.iter().map(|z| pow_neg(&z.lo, n)).fold(int(0), |a, b| a + b) + &tail;
    Ok(SumEnclosure {
        function: zeros[0].function.clone(),
        n,
        count: zeros.len(),
        lower,
        upper,
        tail,
        spacing,
        beta,
    })
}
