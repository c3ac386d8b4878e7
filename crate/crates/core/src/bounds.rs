//! Euler–Rayleigh bracketing of the smallest squared zero.
//!
//! For positive power sums over real positive ζ_k the inequalities
//! s_n^{−1/n} < ζ₁ < s_n/s_{n+1} tighten as n grows. The upper end is an
//! exact rational; the lower end is enclosed to a requested width.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::{BigRat, NuMode};
use crate::error::{Error, Result};
use crate::table::{Family, SumsTable};

/// Whether the caller vouches that every zero summed by a table is real and
/// positive. Needed for the Mercer and confluent families, where nothing in
/// the parameters guarantees it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RealZeros {
    Unasserted,
    Asserted,
}

/// Bracket for the smallest squared zero obtained from entries n and n+1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerRayleighBracket {
    pub n: usize,
    pub family: Family,
    pub nu: Option<NuMode>,
    /// Rational interval containing entry(n)^{−1/n}.
    pub lower_enclosure: (BigRat, BigRat),
    /// entry(n) / entry(n+1), exactly.
    pub exact_upper: BigRat,
}

impl EulerRayleighBracket {
    /// Certified lower bound on the smallest squared zero.
    pub fn lower(&self) -> &BigRat {
        &self.lower_enclosure.0
    }

    pub fn upper(&self) -> &BigRat {
        &self.exact_upper
    }

    /// True if `[lo, hi]` lies inside the bracket.
    pub fn contains_interval(&self, lo: &BigRat, hi: &BigRat) -> bool {
        self.lower_enclosure.1 <= *lo && *hi <= self.exact_upper
    }
}

/// Encloses x^{1/n} in [lo, hi] with hi − lo ≤ width and loⁿ ≤ x ≤ hiⁿ.
/// Exact rational roots come back as a degenerate interval.
pub fn nth_root_enclosure(x: &BigRat, n: usize, width: &BigRat) -> Result<(BigRat, BigRat)> {
    if !x.is_positive() {
        return Err(Error::InvalidArgument(format!("root of non-positive {x}")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("root index must be at least 1".into()));
    }
    if !width.is_positive() {
        return Err(Error::InvalidArgument("width must be positive".into()));
    }
    let exp = u32::try_from(n).map_err(|_| Error::InvalidArgument("root index too large".into()))?;
    let (p, q) = (x.numer(), x.denom());
    let (rp, rq) = (p.nth_root(exp), q.nth_root(exp));
    if rp.pow(exp) == *p && rq.pow(exp) == *q {
        let r = BigRat::new(rp, rq);
        return Ok((r.clone(), r));
    }

    // Smallest power of two D with 1/D ≤ width, then floor((x·Dⁿ)^{1/n}).
    let mut scale = BigInt::one();
    while BigRat::new(BigInt::one(), scale.clone()) > *width {
        scale <<= 1;
    }
    let scaled = (p * scale.pow(exp)) / q;
    let root = scaled.nth_root(exp);
    let lo = BigRat::new(root.clone(), scale.clone());
    let hi = BigRat::new(root + 1, scale);
    debug_assert!(pow(&lo, exp) <= *x && *x <= pow(&hi, exp));
    Ok((lo, hi))
}

fn pow(x: &BigRat, e: u32) -> BigRat {
    BigRat::new(x.numer().pow(e), x.denom().pow(e))
}

/// Euler–Rayleigh bracket from a fixed-ν table.
///
/// Refuses tables whose entries need not be sums over real positive zeros
/// unless `regime` is [`RealZeros::Asserted`]: the Mercer and confluent
/// families, and Bessel tables flagged for ν₀ ≤ −1.
pub fn euler_rayleigh(
    table: &SumsTable,
    n: usize,
    regime: RealZeros,
    width: &BigRat,
) -> Result<EulerRayleighBracket> {
    let needs_assertion = !matches!(table.family, Family::Sigma) || table.caveat.is_some();
    if needs_assertion && regime == RealZeros::Unasserted {
        return Err(Error::UnassertedRegime(format!("{} table", table.family.name())));
    }
    if n < table.first_index.max(1) {
        return Err(Error::MissingEntry { index: n });
    }
    let mut values = Vec::with_capacity(n + 1);
    for index in table.first_index..=n + 1 {
        let value = table
            .entry(index)
            .ok_or(Error::MissingEntry { index })?
            .as_fixed()
            .ok_or_else(|| Error::InvalidArgument("bounds need a fixed-ν table".into()))?;
        if !value.is_positive() {
            return Err(Error::NonPositiveEntry { index });
        }
        values.push(value.clone());
    }
    let current = &values[n - table.first_index];
    let next = &values[n + 1 - table.first_index];
    let (lo, hi) = nth_root_enclosure(&current.recip(), n, width)?;
    Ok(EulerRayleighBracket {
        n,
        family: table.family.clone(),
        nu: table.nu.clone(),
        lower_enclosure: (lo, hi),
        exact_upper: current / next,
    })
}

/// Brackets for n = 1 … `max_n` in order.
pub fn euler_rayleigh_sequence(
    table: &SumsTable,
    max_n: usize,
    regime: RealZeros,
    width: &BigRat,
) -> Result<Vec<EulerRayleighBracket>> {
    (table.first_index.max(1)..=max_n)
        .map(|n| euler_rayleigh(table, n, regime, width))
        .collect()
}

/// Width of the bracket, computed from the outer ends.
pub fn bracket_gap(bracket: &EulerRayleighBracket) -> BigRat {
    &bracket.exact_upper - &bracket.lower_enclosure.0
}
