//! The JSON wire format. Rationals travel as "num/den" strings and
//! rational functions as integer coefficient arrays, lowest power first.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use rayleigh::arith::{parse_rat, rat_to_string, to_decimal};
use rayleigh::bounds::EulerRayleighBracket;
use rayleigh::zeros::{SumEnclosure, ZeroEnclosure};
use rayleigh::{
    BigRat, Caveat, Error, Family, NuMode, PolyNu, Provenance, RatFuncNu, Result, SumsTable, Value,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Symbolic {
        n: usize,
        num_coeffs: Vec<String>,
        den_coeffs: Vec<String>,
    },
    Fixed {
        n: usize,
        value: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketRecord {
    pub n: usize,
    pub lower_lo: String,
    pub lower_hi: String,
    pub upper: String,
}

/// One table of power sums, optionally with Euler–Rayleigh brackets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub family: String,
    pub params: BTreeMap<String, String>,
    /// "symbolic", "p/q", or null for the confluent family.
    pub nu: Option<String>,
    pub order: usize,
    pub entries: Vec<Entry>,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brackets: Option<Vec<BracketRecord>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub k: usize,
    pub lo: String,
    pub hi: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumRecord {
    pub n: usize,
    pub count: usize,
    pub lower: String,
    pub upper: String,
    pub tail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZerosRecord {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub nu: String,
    /// Zeros are given in t = z².
    pub variable: String,
    pub zeros: Vec<ZeroRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sums: Vec<SumRecord>,
    pub provenance: String,
}

/// Renders a rational either exactly or rounded to `decimal` places.
pub fn number(r: &BigRat, decimal: Option<usize>) -> String {
    match decimal {
        Some(d) => to_decimal(r, d),
        None => rat_to_string(r),
    }
}

pub fn family_params(family: &Family) -> BTreeMap<String, String> {
    let mut params = BTreeMap::new();
    match family {
        Family::Sigma => {}
        Family::Tau { a, b, c } => {
            params.insert("a".into(), rat_to_string(a));
            params.insert("b".into(), rat_to_string(b));
            params.insert("c".into(), rat_to_string(c));
        }
        Family::Chf { a, b } => {
            params.insert("a".into(), rat_to_string(a));
            params.insert("b".into(), rat_to_string(b));
        }
    }
    params
}

fn caveat_code(c: Caveat) -> &'static str {
    match c {
        Caveat::ZerosNotGuaranteedReal => "zeros-not-guaranteed-real",
        Caveat::FormalSums => "formal-sums",
    }
}

impl OutputRecord {
    /// Fails only when `decimal` is requested for a symbolic table.
    pub fn from_table(table: &SumsTable, decimal: Option<usize>) -> Result<Self> {
        let entries = table
            .indexed()
            .map(|(n, v)| match v {
                Value::Fixed(x) => Ok(Entry::Fixed {
                    n,
                    value: number(x, decimal),
                }),
                Value::Symbolic(_) if decimal.is_some() => Err(Error::InvalidArgument(
                    "--decimal needs a fixed ν".into(),
                )),
                Value::Symbolic(r) => {
                    let (num, den) = r.integer_form();
                    Ok(Entry::Symbolic {
                        n,
                        num_coeffs: num.iter().map(|c| c.to_string()).collect(),
                        den_coeffs: den.iter().map(|c| c.to_string()).collect(),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(OutputRecord {
            family: table.family.name().into(),
            params: family_params(&table.family),
            nu: table.nu.as_ref().map(|m| match m {
                NuMode::Symbolic => "symbolic".into(),
                NuMode::Fixed(v) => rat_to_string(v),
            }),
            order: table.order(),
            entries,
            provenance: table.provenance.name().into(),
            caveat: table.caveat.map(|c| caveat_code(c).into()),
            brackets: None,
        })
    }

    pub fn with_brackets(mut self, brackets: &[EulerRayleighBracket], decimal: Option<usize>) -> Self {
        self.brackets = Some(
            brackets
                .iter()
                .map(|b| BracketRecord {
                    n: b.n,
                    lower_lo: number(&b.lower_enclosure.0, decimal),
                    lower_hi: number(&b.lower_enclosure.1, decimal),
                    upper: number(&b.exact_upper, decimal),
                })
                .collect(),
        );
        self
    }

    /// Rebuilds the table; the inverse of [`OutputRecord::from_table`] for
    /// exact records.
    pub fn to_table(&self) -> Result<SumsTable> {
        let param = |name: &str| -> Result<BigRat> {
            let s = self
                .params
                .get(name)
                .ok_or_else(|| Error::Parse(format!("missing parameter {name}")))?;
            parse_rat(s)
        };
        let family = match self.family.as_str() {
            "sigma" => Family::Sigma,
            "tau" => Family::Tau {
                a: param("a")?,
                b: param("b")?,
                c: param("c")?,
            },
            "chf" => Family::Chf {
                a: param("a")?,
                b: param("b")?,
            },
            other => return Err(Error::Parse(format!("unknown family {other}"))),
        };
        let nu = self.nu.as_deref().map(NuMode::parse).transpose()?;
        let provenance = match self.provenance.as_str() {
            "riccati" => Provenance::Riccati,
            "series" => Provenance::Series,
            "numeric" => Provenance::Numeric,
            other => return Err(Error::Parse(format!("unknown provenance {other}"))),
        };
        let caveat = match self.caveat.as_deref() {
            None => None,
            Some("zeros-not-guaranteed-real") => Some(Caveat::ZerosNotGuaranteedReal),
            Some("formal-sums") => Some(Caveat::FormalSums),
            Some(other) => return Err(Error::Parse(format!("unknown caveat {other}"))),
        };
        let first_index = self.entries.first().map_or(1, entry_index);
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| {
                if entry_index(e) != first_index + i {
                    return Err(Error::Parse("entries are not consecutive".into()));
                }
                entry_value(e)
            })
            .collect::<Result<Vec<_>>>()?;
        let table = SumsTable {
            family,
            nu,
            first_index,
            entries,
            provenance,
            caveat,
        };
        if table.order() != self.order {
            return Err(Error::Parse("order does not match the entries".into()));
        }
        Ok(table)
    }
}

fn entry_index(e: &Entry) -> usize {
    match e {
        Entry::Symbolic { n, .. } | Entry::Fixed { n, .. } => *n,
    }
}

fn entry_value(e: &Entry) -> Result<Value> {
    let poly = |coeffs: &[String]| -> Result<PolyNu> {
        Ok(PolyNu::new(coeffs.iter().map(|c| parse_rat(c)).collect::<Result<_>>()?))
    };
    match e {
        Entry::Fixed { value, .. } => Ok(Value::Fixed(parse_rat(value)?)),
        Entry::Symbolic {
            num_coeffs,
            den_coeffs,
            ..
        } => Ok(Value::Symbolic(RatFuncNu::normalize(
            poly(num_coeffs)?,
            poly(den_coeffs)?,
        )?)),
    }
}

impl ZerosRecord {
    pub fn new(
        family: &str,
        params: BTreeMap<String, String>,
        nu: &BigRat,
        zeros: &[ZeroEnclosure],
        sums: &[SumEnclosure],
        decimal: Option<usize>,
    ) -> Self {
        ZerosRecord {
            family: family.into(),
            params,
            nu: rat_to_string(nu),
            variable: "t = z^2".into(),
            zeros: zeros
                .iter()
                .map(|z| ZeroRecord {
                    k: z.index,
                    lo: number(&z.lo, decimal),
                    hi: number(&z.hi, decimal),
                })
                .collect(),
            sums: sums
                .iter()
                .map(|s| SumRecord {
                    n: s.n,
                    count: s.count,
                    lower: number(&s.lower, decimal),
                    upper: number(&s.upper, decimal),
                    tail: number(&s.tail, decimal),
                })
                .collect(),
            provenance: Provenance::Numeric.name().into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rayleigh::arith::{int, rat};
    use rayleigh::{derive_pqr, s_table, sigma_table, tau_table, ChfParams};

    fn round_trip(table: &SumsTable) {
        let record = OutputRecord::from_table(table, None).unwrap();
        let json = serde_json::to_string(&record).unwrap();
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, record);
        assert_eq!(&back.to_table().unwrap(), table);
    }

    #[test]
    fn tables_round_trip() {
        round_trip(&sigma_table(5, &NuMode::Symbolic).unwrap());
        round_trip(&sigma_table(5, &NuMode::Fixed(rat(-7, 3))).unwrap());
        let p = derive_pqr(int(1), rat(-2, 3), int(3), NuMode::Symbolic);
        round_trip(&tau_table(&p, 4).unwrap());
        round_trip(&s_table(&ChfParams::new(rat(1, 2), rat(7, 3)).unwrap(), 6).unwrap());
    }

    #[test]
    fn symbolic_entry_shape() {
        let t = sigma_table(1, &NuMode::Symbolic).unwrap();
        let r = OutputRecord::from_table(&t, None).unwrap();
        assert_eq!(
            r.entries[0],
            Entry::Symbolic {
                n: 1,
                num_coeffs: vec!["1".into()],
                den_coeffs: vec!["4".into(), "4".into()],
            }
        );
        assert!(OutputRecord::from_table(&t, Some(3)).is_err());
    }

    #[test]
    fn decimal_values() {
        let t = sigma_table(2, &NuMode::Fixed(int(0))).unwrap();
        let r = OutputRecord::from_table(&t, Some(4)).unwrap();
        assert_eq!(
            r.entries[1],
            Entry::Fixed {
                n: 2,
                value: "0.0313".into()
            }
        );
    }
}
