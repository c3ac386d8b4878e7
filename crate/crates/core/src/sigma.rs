//! Rayleigh functions σₙ(ν) = Σ_k j_{νk}^{-2n} by a convolution
//! recurrence σₙ = (ν+n)⁻¹ Σ_{k=1}^{n-1} σ_k σ_{n-k}, σ₁ = 1/(4(ν+1)).

use crate::arith::{int, pole, NuMode, RatFuncNu, Scalar};
use crate::error::{Error, Result};
use crate::table::{self_convolution, Caveat, Family, Provenance, SumsTable};

/// σ₁ … σ_order with ν taking the value `nu`.
pub fn sigma_recurrence<C: Scalar>(nu: &C, order: usize) -> Result<Vec<C>> {
    let mut sigma = vec![C::zero()];
    for n in 1..=order {
        let shift = nu.plus(&C::from_rat(&int(n as i64)));
        let next = if n == 1 {
            C::from_rat(&int(1)).try_div(&shift.scaled(&int(4)))
        } else {
            self_convolution(&sigma, n).try_div(&shift)
        }
        .ok_or_else(|| pole(n, format!("ν + {n} = 0")))?;
        sigma.push(next);
    }
    sigma.remove(0);
    Ok(sigma)
}

/// σ₁ … σ_N, symbolic in ν or at a fixed rational ν₀.
///
/// At ν₀ ≤ −1 the entries are still exact values of the rational identity,
/// but the table is flagged since J_ν may then have non-real zeros.
pub fn sigma_table(order: usize, mode: &NuMode) -> Result<SumsTable> {
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let mut table = match mode {
        NuMode::Symbolic => SumsTable::from_scalars(
            Family::Sigma,
            Some(mode.clone()),
            1,
            sigma_recurrence(&RatFuncNu::nu(), order)?,
            Provenance::Riccati,
        ),
        NuMode::Fixed(nu0) => SumsTable::from_scalars(
            Family::Sigma,
            Some(mode.clone()),
            1,
            sigma_recurrence(nu0, order)?,
            Provenance::Riccati,
        ),
    };
    if mode.fixed().is_some_and(|v| *v <= int(-1)) {
        table.caveat = Some(Caveat::ZerosNotGuaranteedReal);
    }
    Ok(table)
}
