//! Zeros of N_ν(z) = az²J_ν″(z) + bzJ_ν′(z) + cJ_ν(z).
//!
//! N_ν satisfies z²y″ + A(z)zy′ + [B(z) + z² − ν²]y = 0 with
//!
//! ```text
//! A = (−3a²t² + pt + q) / D,   B = (2a(a+b)t² + 2rt) / D,   D = a²t² − pt + q,
//! p = 2a(aν²+c) + (a² − b²),  q = (aν²+c)² − ν²(a−b)²,  r = aν²(3a−b) + c(a+b),
//! ```
//!
//! where t = z². The logarithmic derivative of z^{-ν/2}N_ν(z^{1/2}) obeys a
//! Riccati equation whose power-series form yields a convolution recurrence
//! for τₙ = Σ_k ζ_k^{-n}, the ζ_k being the squared zeros.

use crate::arith::{int, pole, BigRat, NuMode, PolyNu, RatFuncNu, Scalar, Value};
use crate::error::{Error, Result};
use crate::oracle;
use crate::table::{self_convolution, Caveat, Family, Provenance, SumsTable};

/// The coefficients (a, b, c) and the derived polynomials p, q, r in ν.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MercerParams {
    pub a: BigRat,
    pub b: BigRat,
    pub c: BigRat,
    pub p: PolyNu,
    pub q: PolyNu,
    pub r: PolyNu,
    pub mode: NuMode,
}

/// p, q, r as polynomials in ν. In fixed mode they are also available as
/// values via [`MercerParams::pqr_values`].
pub fn derive_pqr(a: BigRat, b: BigRat, c: BigRat, mode: NuMode) -> MercerParams {
    let nu2 = PolyNu::new(vec![int(0), int(0), int(1)]);
    let a_nu2_c = &nu2.scale(&a) + &PolyNu::constant(c.clone());
    let p = &a_nu2_c.scale(&(int(2) * &a)) + &PolyNu::constant(&a * &a - &b * &b);
    let amb = &a - &b;
    let q = &(&a_nu2_c * &a_nu2_c) - &nu2.scale(&(&amb * &amb));
    let r = &nu2.scale(&(&a * (int(3) * &a - &b))) + &PolyNu::constant(&c * (&a + &b));
    MercerParams {
        a,
        b,
        c,
        p,
        q,
        r,
        mode,
    }
}

impl MercerParams {
    pub fn new(a: BigRat, b: BigRat, c: BigRat, mode: NuMode) -> Self {
        derive_pqr(a, b, c, mode)
    }

    pub fn family(&self) -> Family {
        Family::Tau {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
        }
    }

    /// p, q, r in the parameters' mode.
    pub fn pqr_values(&self) -> [Value; 3] {
        [&self.p, &self.q, &self.r].map(|poly| match &self.mode {
            NuMode::Symbolic => Value::Symbolic(RatFuncNu::from_poly(poly.clone())),
            NuMode::Fixed(nu0) => Value::Fixed(poly.eval(nu0)),
        })
    }

    /// aν² + (b−a)ν + c: the polynomial part of the constant factor in the
    /// product expansion of z^{-ν/2}N_ν(z^{1/2}), which is also the constant
    /// term of the normalized t-series.
    pub fn leading_constant(&self) -> PolyNu {
        PolyNu::new(vec![self.c.clone(), &self.b - &self.a, self.a.clone()])
    }

    /// The second-order ODE coefficients as polynomials in t.
    pub fn ode_coefficients(&self) -> OdeCoefficients {
        let fix = |p: PolyNu| match &self.mode {
            NuMode::Symbolic => p,
            NuMode::Fixed(nu0) => PolyNu::constant(p.eval(nu0)),
        };
        let a2 = PolyNu::constant(&self.a * &self.a);
        OdeCoefficients {
            denominator: vec![fix(self.q.clone()), fix(-&self.p), a2.clone()],
            a_numerator: vec![fix(self.q.clone()), fix(self.p.clone()), a2.scale(&int(-3))],
            b_numerator: vec![
                PolyNu::zero(),
                fix(self.r.scale(&int(2))),
                PolyNu::constant(int(2) * &self.a * (&self.a + &self.b)),
            ],
        }
    }

    /// Rejects q ≡ 0 and a vanishing constant term aν² + (b−a)ν + c.
    pub fn check_nondegenerate(&self) -> Result<()> {
        let d0 = self.leading_constant();
        match &self.mode {
            NuMode::Symbolic => {
                if self.q.is_zero() {
                    return Err(Error::DegenerateParameters("q vanishes identically".into()));
                }
                if d0.is_zero() {
                    return Err(Error::DegenerateParameters(
                        "constant term aν² + (b−a)ν + c vanishes identically".into(),
                    ));
                }
            }
            NuMode::Fixed(nu0) => {
                if d0.eval(nu0) == int(0) {
                    return Err(Error::DegenerateParameters(format!(
                        "constant term aν² + (b−a)ν + c vanishes at ν = {nu0}"
                    )));
                }
                if self.q.eval(nu0) == int(0) {
                    return Err(Error::DegenerateParameters(format!("q vanishes at ν = {nu0}")));
                }
            }
        }
        Ok(())
    }
}

/// D(t) = a²t² − pt + q and the numerators of A and B over D; index i of
/// each vector is the coefficient of tⁱ (a polynomial in ν, or a constant in
/// fixed mode).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdeCoefficients {
    pub denominator: Vec<PolyNu>,
    pub a_numerator: Vec<PolyNu>,
    pub b_numerator: Vec<PolyNu>,
}

pub fn ode_coefficients(params: &MercerParams) -> OdeCoefficients {
    params.ode_coefficients()
}

pub fn leading_constant(params: &MercerParams) -> PolyNu {
    params.leading_constant()
}

/// τ₁ … τ_order with ν taking the value `nu`.
pub fn tau_recurrence<C: Scalar>(params: &MercerParams, nu: &C, order: usize) -> Result<Vec<C>> {
    let p = C::lift(&params.p, nu);
    let q = C::lift(&params.q, nu);
    let r = C::lift(&params.r, nu);
    if q.is_zero() {
        return Err(Error::DegenerateParameters("q = 0".into()));
    }
    let a = &params.a;
    let b = &params.b;
    let a2 = C::from_rat(&(a * a));
    let k_c = |k: i64| C::from_rat(&int(k));
    let nu_plus = |k: i64| nu.plus(&k_c(k));
    let divide = |num: C, den: C, n: usize| {
        num.try_div(&den)
            .ok_or_else(|| pole(n, format!("q·(ν + {n}) = 0")))
    };

    let mut tau = vec![C::zero()];
    if order >= 1 {
        let num = nu.times(&p).scaled(&int(2)).plus(&q).plus(&r.scaled(&int(2)));
        tau.push(divide(num, q.times(&nu_plus(1)).scaled(&int(4)), 1)?);
    }
    if order >= 2 {
        let t1 = &tau[1];
        let num = q
            .times(&t1.times(t1))
            .scaled(&int(4))
            .plus(&nu.times(&p).times(t1).scaled(&int(4)))
            .minus(&p)
            .minus(&a2.times(nu).scaled(&int(4)))
            .plus(&C::from_rat(&(int(2) * a * (a + b))));
        tau.push(divide(num, q.times(&nu_plus(2)).scaled(&int(4)), 2)?);
    }
    if order >= 3 {
        let (t1, t2) = (&tau[1], &tau[2]);
        let num = p
            .times(&nu_plus(1))
            .times(t2)
            .scaled(&int(4))
            .minus(&a2.times(&nu_plus(-1)).times(t1).scaled(&int(4)))
            .plus(&a2)
            .plus(&q.times(t1).times(t2).scaled(&int(8)))
            .minus(&p.times(&t1.times(t1)).scaled(&int(4)));
        tau.push(divide(num, q.times(&nu_plus(3)).scaled(&int(4)), 3)?);
    }
    for k in 3..order {
        let ki = k as i64;
        let num = p
            .times(&nu_plus(ki - 1))
            .times(&tau[k])
            .minus(&a2.times(&nu_plus(ki - 3)).times(&tau[k - 1]))
            .plus(&q.times(&self_convolution(&tau, k + 1)))
            .minus(&p.times(&self_convolution(&tau, k)))
            .plus(&a2.times(&self_convolution(&tau, k - 1)));
        tau.push(divide(num, q.times(&nu_plus(ki + 1)), k + 1)?);
    }
    tau.remove(0);
    Ok(tau)
}

/// τ₁ … τ_N by the Riccati recurrence.
pub fn tau_table(params: &MercerParams, order: usize) -> Result<SumsTable> {
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    params.check_nondegenerate()?;
    let mut table = match &params.mode {
        NuMode::Symbolic => SumsTable::from_scalars(
            params.family(),
            Some(NuMode::Symbolic),
            1,
            tau_recurrence(params, &RatFuncNu::nu(), order)?,
            Provenance::Riccati,
        ),
        NuMode::Fixed(nu0) => SumsTable::from_scalars(
            params.family(),
            Some(params.mode.clone()),
            1,
            tau_recurrence(params, nu0, order)?,
            Provenance::Riccati,
        ),
    };
    if params.mode.fixed().is_some_and(|v| *v <= int(-1)) {
        table.caveat = Some(Caveat::FormalSums);
    }
    Ok(table)
}

/// Coefficients of the ODE residual, one per power z^{ν+2n}, n = 0..=order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualReport {
    pub coefficients: Vec<Value>,
}

impl ResidualReport {
    pub fn vanishes(&self) -> bool {
        self.coefficients.iter().all(|v| match v {
            Value::Fixed(x) => x == &int(0),
            Value::Symbolic(r) => r.is_zero(),
        })
    }

    /// Index of the lowest nonzero residual coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coefficients.iter().position(|v| match v {
            Value::Fixed(x) => x != &int(0),
            Value::Symbolic(r) => !r.is_zero(),
        })
    }
}

/// Substitutes the exact series of N_ν into D·[z²y″ + Azy′ + (B + z² − ν²)y]
/// and reports the coefficients through t^order.
pub fn verify_ode(params: &MercerParams, order: usize) -> Result<ResidualReport> {
    verify_ode_with(params, &params.ode_coefficients(), order)
}

/// As [`verify_ode`] but with caller-supplied ODE coefficients, e.g. a
/// deliberately perturbed set.
pub fn verify_ode_with(
    params: &MercerParams,
    ode: &OdeCoefficients,
    order: usize,
) -> Result<ResidualReport> {
    let coefficients = match &params.mode {
        NuMode::Symbolic => residual(params, ode, &RatFuncNu::nu(), order)?
            .into_iter()
            .map(Scalar::into_value)
            .collect(),
        NuMode::Fixed(nu0) => residual(params, ode, nu0, order)?
            .into_iter()
            .map(Scalar::into_value)
            .collect(),
    };
    Ok(ResidualReport { coefficients })
}

fn residual<C: Scalar>(
    params: &MercerParams,
    ode: &OdeCoefficients,
    nu: &C,
    order: usize,
) -> Result<Vec<C>> {
    // y = z^ν Σ d_m t^m up to a constant; the Euler operator z d/dz maps
    // z^{ν+2m} to (ν+2m) z^{ν+2m}.
    let d = oracle::mercer_coefficients(params, nu, order)?;
    let lift_all = |v: &[PolyNu]| v.iter().map(|p| C::lift(p, nu)).collect::<Vec<C>>();
    let den = lift_all(&ode.denominator);
    let anum = lift_all(&ode.a_numerator);
    let bnum = lift_all(&ode.b_numerator);
    let nu_sq = nu.times(nu);
    let at = |v: &[C], j: usize| v.get(j).cloned().unwrap_or_else(C::zero);
    let width = den.len().max(anum.len()).max(bnum.len());

    let mut out = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = C::zero();
        for j in 0..width.min(n + 1) {
            let m = n - j;
            let theta = nu.plus(&C::from_rat(&int(2 * m as i64)));
            let theta2 = theta.times(&theta.minus(&C::one()));
            let factor = at(&den, j)
                .times(&theta2.minus(&nu_sq))
                .plus(&at(&anum, j).times(&theta))
                .plus(&at(&bnum, j));
            acc = acc.plus(&factor.times(&d[m]));
            // the z²·D·y term
            if m >= 1 {
                acc = acc.plus(&at(&den, j).times(&d[m - 1]));
            }
        }
        out.push(acc);
    }
    Ok(out)
}
