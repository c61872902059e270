//! Classical function tables, promise validators and brute-force
//! classifiers. The classifiers here are the ground truth the quantum
//! routines are checked against.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number_theory::{is_coprime, mod_exp, multiplicative_order};

/// A total function `{0..domain_size} -> {0..codomain_size}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTruthTable", into = "RawTruthTable")]
pub struct TruthTable {
    domain_size: usize,
    codomain_size: usize,
    values: Vec<usize>,
}

/// Wire form; validated into [`TruthTable`] on deserialization.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTruthTable {
    domain_size: usize,
    codomain_size: usize,
    values: Vec<usize>,
}

impl TryFrom<RawTruthTable> for TruthTable {
    type Error = Error;

    fn try_from(raw: RawTruthTable) -> Result<Self> {
        TruthTable::new(raw.domain_size, raw.codomain_size, raw.values)
    }
}

impl From<TruthTable> for RawTruthTable {
    fn from(t: TruthTable) -> Self {
        RawTruthTable {
            domain_size: t.domain_size,
            codomain_size: t.codomain_size,
            values: t.values,
        }
    }
}

impl TruthTable {
    pub fn new(domain_size: usize, codomain_size: usize, values: Vec<usize>) -> Result<Self> {
        if domain_size == 0 {
            return Err(Error::InvalidTruthTable(
                "domain_size must be positive".into(),
            ));
        }
        if codomain_size == 0 {
            return Err(Error::InvalidTruthTable(
                "codomain_size must be positive".into(),
            ));
        }
        if values.len() != domain_size {
            return Err(Error::InvalidTruthTable(format!(
                "values has {} entries but domain_size is {domain_size}",
                values.len()
            )));
        }
        if let Some((x, &v)) = values.iter().enumerate().find(|(_, &v)| v >= codomain_size) {
            return Err(Error::InvalidTruthTable(format!(
                "values[{x}] = {v} is out of range for codomain_size {codomain_size}"
            )));
        }
        Ok(Self {
            domain_size,
            codomain_size,
            values,
        })
    }

    pub fn from_fn(
        domain_size: usize,
        codomain_size: usize,
        f: impl Fn(usize) -> usize,
    ) -> Result<Self> {
        Self::new(
            domain_size,
            codomain_size,
            (0..domain_size).map(f).collect(),
        )
    }

    /// Parses the JSON form `{"domain_size", "codomain_size", "values"}`.
    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("truth table serializes")
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn value(&self, x: usize) -> usize {
        self.values[x]
    }

    /// Same values over a larger codomain, e.g. to fit a power-of-two register.
    pub fn with_codomain(&self, codomain_size: usize) -> Result<Self> {
        Self::new(self.domain_size, codomain_size, self.values.clone())
    }
}

/// The four Boolean functions on one bit, by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedOracle {
    Constant0,
    Constant1,
    Identity,
    Not,
}

impl NamedOracle {
    pub const ALL: [NamedOracle; 4] = [
        NamedOracle::Constant0,
        NamedOracle::Constant1,
        NamedOracle::Identity,
        NamedOracle::Not,
    ];

    pub fn table(self) -> TruthTable {
        let values = match self {
            NamedOracle::Constant0 => vec![0, 0],
            NamedOracle::Constant1 => vec![1, 1],
            NamedOracle::Identity => vec![0, 1],
            NamedOracle::Not => vec![1, 0],
        };
        TruthTable::new(2, 2, values).expect("valid 1-bit table")
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedOracle::Constant0 => "constant0",
            NamedOracle::Constant1 => "constant1",
            NamedOracle::Identity => "identity",
            NamedOracle::Not => "not",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|o| o.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Balance {
    Constant,
    Balanced,
    Neither,
}

/// Exhaustive count of ones in a Boolean-valued table.
pub fn classify_constant_balanced(f: &TruthTable) -> Result<Balance> {
    if f.codomain_size != 2 {
        return Err(Error::Domain(format!(
            "constant/balanced needs a Boolean codomain, got size {}",
            f.codomain_size
        )));
    }
    let ones = f.values.iter().filter(|&&v| v == 1).count();
    Ok(if ones == 0 || ones == f.domain_size {
        Balance::Constant
    } else if 2 * ones == f.domain_size {
        Balance::Balanced
    } else {
        Balance::Neither
    })
}

/// The nonzero `r` with `f(x) = f(y) <=> y in {x, x ^ r}`, found by comparing
/// every pair of inputs. `None` if no such `r` exists.
pub fn brute_force_simon_period(f: &TruthTable) -> Option<usize> {
    let d = f.domain_size;
    if d < 2 || !d.is_power_of_two() {
        return None;
    }
    let mut period = None;
    let mut partner_count = vec![0usize; d];
    for x in 0..d {
        for y in x + 1..d {
            if f.values[x] == f.values[y] {
                let r = x ^ y;
                match period {
                    None => period = Some(r),
                    Some(p) if p != r => return None,
                    Some(_) => {}
                }
                partner_count[x] += 1;
                partner_count[y] += 1;
            }
        }
    }
    // 2-to-1: every input collides with exactly one other input
    partner_count.iter().all(|&c| c == 1).then_some(period?)
}

/// Random 2-to-1 table with period `r` over `n`-bit strings; codomain `2^n`.
pub fn make_simon_instance<R: Rng + ?Sized>(n: u32, r: usize, rng: &mut R) -> Result<TruthTable> {
    if n == 0 || n > 16 {
        return Err(Error::Domain(format!(
            "Simon instances need 1 <= n <= 16, got {n}"
        )));
    }
    let d = 1usize << n;
    if r == 0 || r >= d {
        return Err(Error::Domain(format!(
            "period must satisfy 0 < r < {d}, got {r}"
        )));
    }
    let mut labels: Vec<usize> = (0..d).collect();
    labels.shuffle(rng);
    let mut coset_label = HashMap::new();
    let mut next = 0;
    let values = (0..d)
        .map(|x| {
            let rep = x.min(x ^ r);
            *coset_label.entry(rep).or_insert_with(|| {
                next += 1;
                labels[next - 1]
            })
        })
        .collect();
    TruthTable::new(d, d, values)
}

/// `values[x] = a^x mod N` for `x` in `0..s`; codomain `N`.
pub fn make_modexp_table(a: u64, modulus: u64, s: usize) -> Result<TruthTable> {
    if s < 2 {
        return Err(Error::Domain(format!(
            "table length must be at least 2, got {s}"
        )));
    }
    if a >= modulus {
        return Err(Error::Domain(format!(
            "base {a} must be less than {modulus}"
        )));
    }
    if !is_coprime(a, modulus) {
        return Err(Error::NotCoprime { a, modulus });
    }
    let values = (0..s as u64)
        .map(|x| mod_exp(a, x, modulus).map(|v| v as usize))
        .collect::<Result<Vec<_>>>()?;
    TruthTable::new(s, modulus as usize, values)
}

/// Smallest `r >= 1` with `a^r = 1 mod N`, by iteration.
pub fn brute_force_order(a: u64, modulus: u64) -> Result<u64> {
    multiplicative_order(a, modulus)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PromiseTag {
    Constant,
    Balanced,
    SimonPeriodic { r: usize },
    Modexp { a: u64, modulus: u64 },
}

impl PromiseTag {
    /// Checks the tag against the table; promise violations are errors.
    pub fn validate(&self, f: &TruthTable) -> Result<()> {
        let ok = match *self {
            PromiseTag::Constant => classify_constant_balanced(f)? == Balance::Constant,
            PromiseTag::Balanced => classify_constant_balanced(f)? == Balance::Balanced,
            PromiseTag::SimonPeriodic { r } => brute_force_simon_period(f) == Some(r),
            PromiseTag::Modexp { a, modulus } => {
                make_modexp_table(a, modulus, f.domain_size)?.values == f.values
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::PromiseViolation(format!(
                "table does not satisfy {self:?}"
            )))
        }
    }
}
