//! The common result type for σₙ, τₙ and S_p tables.

use std::fmt;

use crate::arith::{BigRat, NuMode, Scalar, Value};
use crate::error::Result;

/// Which function's zeros a table sums over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// J_ν; entries are σₙ(ν).
    Sigma,
    /// N_ν = az²J_ν″ + bzJ_ν′ + cJ_ν; entries are τₙ(ν).
    Tau { a: BigRat, b: BigRat, c: BigRat },
    /// ₁F₁(a; b; z); entries are S_p, starting at p = 2.
    Chf { a: BigRat, b: BigRat },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Sigma => "sigma",
            Family::Tau { .. } => "tau",
            Family::Chf { .. } => "chf",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Convolution recurrence derived from a Riccati equation.
    Riccati,
    /// Logarithmic derivative of an exact truncated power series.
    Series,
    /// Certified numerical enclosure.
    Numeric,
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::Riccati => "riccati",
            Provenance::Series => "series",
            Provenance::Numeric => "numeric",
        }
    }
}

/// Attached when the entries are valid rational identities but do not carry
/// their usual meaning as sums over real positive zeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Caveat {
    /// ν₀ ≤ −1 for the Bessel family.
    ZerosNotGuaranteedReal,
    /// ν₀ ≤ −1 for the Mercer family: zeros possibly complex, sums are formal.
    FormalSums,
}

impl fmt::Display for Caveat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Caveat::ZerosNotGuaranteedReal => "zeros not guaranteed real",
            Caveat::FormalSums => "zeros possibly complex; sums are formal",
        })
    }
}

/// Ordered power sums `entries[i]` = sum of index `first_index + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumsTable {
    pub family: Family,
    /// `None` for the confluent family, which has no ν.
    pub nu: Option<NuMode>,
    pub first_index: usize,
    pub entries: Vec<Value>,
    pub provenance: Provenance,
    pub caveat: Option<Caveat>,
}

impl SumsTable {
    pub(crate) fn from_scalars<C: Scalar>(
        family: Family,
        nu: Option<NuMode>,
        first_index: usize,
        entries: Vec<C>,
        provenance: Provenance,
    ) -> Self {
        SumsTable {
            family,
            nu,
            first_index,
            entries: entries.into_iter().map(Scalar::into_value).collect(),
            provenance,
            caveat: None,
        }
    }

    /// Highest index present.
    pub fn order(&self) -> usize {
        self.first_index + self.entries.len() - 1
    }

    pub fn entry(&self, n: usize) -> Option<&Value> {
        n.checked_sub(self.first_index)
            .and_then(|i| self.entries.get(i))
    }

    pub fn indexed(&self) -> impl Iterator<Item = (usize, &Value)> {
        (self.first_index..).zip(&self.entries)
    }

    /// Same family, index range and entries; provenance is ignored.
    pub fn same_values(&self, other: &SumsTable) -> bool {
        self.family == other.family
            && self.nu == other.nu
            && self.first_index == other.first_index
            && self.entries == other.entries
    }

    /// Number of leading entries on which the two tables agree exactly,
    /// together with the number compared.
    pub fn agreement(&self, other: &SumsTable) -> (usize, usize) {
        let total = self.entries.len().min(other.entries.len());
        let matched = self
            .entries
            .iter()
            .zip(&other.entries)
            .filter(|(a, b)| a == b)
            .count();
        (matched, total)
    }

    /// Evaluates a symbolic table at ν₀. Fixed tables are returned unchanged.
    pub fn eval_at(&self, nu0: &BigRat) -> Result<SumsTable> {
        if self.nu != Some(NuMode::Symbolic) {
            return Ok(self.clone());
        }
        let entries = self
            .entries
            .iter()
            .map(|v| v.eval_at(nu0).map(Value::Fixed))
            .collect::<Result<Vec<_>>>()?;
        Ok(SumsTable {
            nu: Some(NuMode::Fixed(nu0.clone())),
            entries,
            ..self.clone()
        })
    }

    /// Fixed-mode entries as rationals; `None` for symbolic tables.
    pub fn fixed_values(&self) -> Option<Vec<BigRat>> {
        self.entries
            .iter()
            .map(|v| v.as_fixed().cloned())
            .collect()
    }
}

/// `Σ_{m=1}^{s-1} v[m]·v[s-m]` over a 1-based slice (`v[0]` unused).
pub(crate) fn self_convolution<C: Scalar>(v: &[C], s: usize) -> C {
    if s < 2 {
        return C::zero();
    }
    let mut acc = C::zero();
    for m in 1..=(s - 1) / 2 {
        acc = acc.plus(&v[m].times(&v[s - m]));
    }
    acc = acc.plus(&acc);
    if s.is_multiple_of(2) {
        acc = acc.plus(&v[s / 2].times(&v[s / 2]));
    }
    acc
}
