//! Power sums read off exact truncated series, without any Riccati
//! recurrence. This is the reference side of every recurrence comparison.
//!
//! For a genus-0 function y(t) = y(0)·Π(1 − t/ζ_k) the logarithmic derivative
//! gives −t·y′/y = Σ τₙ tⁿ. For ₁F₁ the Weierstrass factors e^{z/z_k} and the
//! exponential prefactor only shift the constant term of w′/w, which must
//! come out as a/b; the higher coefficients are −S_{k+1}.

use crate::arith::{int, pole, BigRat, FormalSeries, NuMode, RatFuncNu, Scalar, Var};
use crate::chf::ChfParams;
use crate::error::{Error, Result};
use crate::mercer::MercerParams;
use crate::table::{Family, Provenance, SumsTable};

/// A series together with the function family it represents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSeries<C> {
    pub family: Family,
    pub series: FormalSeries<C>,
    pub normalization: &'static str,
}

const BESSEL_NORMALIZATION: &str = "t = z², factor (z/2)^ν/Γ(ν+1) removed";
const MERCER_NORMALIZATION: &str = "t = z², factor (z/2)^ν/Γ(ν+1) removed";
const CHF_NORMALIZATION: &str = "₁F₁(a; b; z) itself, w(0) = 1";

/// g_n = (−1)ⁿ / (4ⁿ n! (ν+1)ₙ), n = 0..=order.
pub(crate) fn bessel_coefficients<C: Scalar>(nu: &C, order: usize) -> Result<Vec<C>> {
    let mut g = Vec::with_capacity(order + 1);
    g.push(C::one());
    for n in 1..=order {
        let den = nu
            .plus(&C::from_rat(&int(n as i64)))
            .scaled(&int(-4 * n as i64));
        let next = g[n - 1]
            .try_div(&den)
            .ok_or_else(|| pole(n, format!("Pochhammer (ν+1)_{n} vanishes")))?;
        g.push(next);
    }
    Ok(g)
}

/// d_n = [a(2n+ν)(2n+ν−1) + b(2n+ν) + c]·g_n: termwise differentiation of
/// the Bessel series.
pub(crate) fn mercer_coefficients<C: Scalar>(
    params: &MercerParams,
    nu: &C,
    order: usize,
) -> Result<Vec<C>> {
    let g = bessel_coefficients(nu, order)?;
    let (a, b, c) = (
        C::from_rat(&params.a),
        C::from_rat(&params.b),
        C::from_rat(&params.c),
    );
    Ok(g.into_iter()
        .enumerate()
        .map(|(n, gn)| {
            let e = nu.plus(&C::from_rat(&int(2 * n as i64)));
            let weight = a
                .times(&e)
                .times(&e.minus(&C::one()))
                .plus(&b.times(&e))
                .plus(&c);
            weight.times(&gn)
        })
        .collect())
}

pub fn bessel_t_series<C: Scalar>(nu: &C, order: usize) -> Result<OracleSeries<C>> {
    Ok(OracleSeries {
        family: Family::Sigma,
        series: FormalSeries::new(Var::T, bessel_coefficients(nu, order)?),
        normalization: BESSEL_NORMALIZATION,
    })
}

pub fn mercer_t_series<C: Scalar>(
    params: &MercerParams,
    nu: &C,
    order: usize,
) -> Result<OracleSeries<C>> {
    let d = mercer_coefficients(params, nu, order)?;
    if d[0].is_zero() {
        return Err(Error::DegenerateParameters(
            "constant term aν² + (b−a)ν + c vanishes".into(),
        ));
    }
    Ok(OracleSeries {
        family: params.family(),
        series: FormalSeries::new(Var::T, d),
        normalization: MERCER_NORMALIZATION,
    })
}

/// τ₁ … τ_order from −t·s′/s.
pub fn genus0_sums<C: Scalar>(series: &FormalSeries<C>, order: usize) -> Result<Vec<C>> {
    let numerator = series.derivative().shift().negated();
    let quotient = numerator.divide(series, order)?;
    Ok(quotient.into_coeffs().into_iter().skip(1).collect())
}

/// σ₁ … σ_N by series division.
pub fn sigma_oracle_table(order: usize, mode: &NuMode) -> Result<SumsTable> {
    let family = Family::Sigma;
    Ok(match mode {
        NuMode::Symbolic => {
            let s = bessel_t_series(&RatFuncNu::nu(), order)?;
            SumsTable::from_scalars(
                family,
                Some(mode.clone()),
                1,
                genus0_sums(&s.series, order)?,
                Provenance::Series,
            )
        }
        NuMode::Fixed(nu0) => {
            let s = bessel_t_series(nu0, order)?;
            SumsTable::from_scalars(
                family,
                Some(mode.clone()),
                1,
                genus0_sums(&s.series, order)?,
                Provenance::Series,
            )
        }
    })
}

/// τ₁ … τ_N by series division, in the parameters' mode.
pub fn tau_oracle_table(params: &MercerParams, order: usize) -> Result<SumsTable> {
    let mode = Some(params.mode.clone());
    Ok(match &params.mode {
        NuMode::Symbolic => {
            let s = mercer_t_series(params, &RatFuncNu::nu(), order)?;
            SumsTable::from_scalars(
                params.family(),
                mode,
                1,
                genus0_sums(&s.series, order)?,
                Provenance::Series,
            )
        }
        NuMode::Fixed(nu0) => {
            let s = mercer_t_series(params, nu0, order)?;
            SumsTable::from_scalars(
                params.family(),
                mode,
                1,
                genus0_sums(&s.series, order)?,
                Provenance::Series,
            )
        }
    })
}

/// (a)ₙ / ((b)ₙ n!) for n = 0..=order.
pub fn chf_series(params: &ChfParams, order: usize) -> OracleSeries<BigRat> {
    let mut w = Vec::with_capacity(order + 1);
    w.push(int(1));
    for n in 1..=order {
        let k = int(n as i64 - 1);
        // b + k ≠ 0 is guaranteed by ChfParams validation
        let ratio = (params.a() + &k) / ((params.b() + &k) * int(n as i64));
        let next = &w[n - 1] * ratio;
        w.push(next);
    }
    OracleSeries {
        family: params.family(),
        series: FormalSeries::new(Var::Z, w),
        normalization: CHF_NORMALIZATION,
    }
}

/// S₂ … S_P from u = w′/w = a/b − Σ S_{k+1} z^k.
pub fn chf_sums_from_series(params: &ChfParams, max_power: usize) -> Result<SumsTable> {
    if max_power < 2 {
        return Err(Error::InvalidArgument("P must be at least 2".into()));
    }
    let w = chf_series(params, max_power).series;
    let u = w.derivative().divide(&w, max_power - 1)?;
    let expected = params.a() / params.b();
    if u.coeffs()[0] != expected {
        return Err(Error::ConstantTermMismatch {
            expected: expected.to_string(),
            found: u.coeffs()[0].to_string(),
        });
    }
    let sums = u.coeffs()[1..].iter().map(|c| -c).collect::<Vec<_>>();
    Ok(SumsTable::from_scalars(
        params.family(),
        None,
        2,
        sums,
        Provenance::Series,
    ))
}
