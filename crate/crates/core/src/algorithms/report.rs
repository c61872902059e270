use serde::{Deserialize, Serialize};

use crate::subspace::Subspace;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgorithmKind {
    DeutschXor,
    Cleve,
    DeutschJozsa,
    Simon,
    Shor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Constant,
    Balanced,
    Inconclusive,
    /// Simon period; `bits` is most-significant bit first.
    Period {
        r: u64,
        bits: String,
    },
    Factors {
        factors: [u64; 2],
        a: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        period: Option<u64>,
    },
}

/// One computational-basis measurement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub register: usize,
    pub outcome: usize,
    pub probability: f64,
    /// Trial (Simon) or round (Shor) the measurement belongs to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trial: Option<usize>,
}

/// A named subspace and whether the relevant final state lies in it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryEntry {
    pub name: String,
    pub dimension: usize,
    pub contains_final: bool,
    /// Basis labels spanning the subspace, when it is a coordinate subspace.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<usize>>,
}

impl GeometryEntry {
    pub fn new(name: impl Into<String>, subspace: &Subspace, contains_final: bool) -> Self {
        Self {
            name: name.into(),
            dimension: subspace.dimension(),
            contains_final,
            support: subspace.coordinate_support(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoundOutcome {
    /// The random base shared a factor with N; no quantum step needed.
    NonCoprime,
    /// Outcome `c = 0`, which every period subspace contains.
    Degenerate,
    /// `a^candidate != 1 mod N`.
    OrderCheckFailed,
    OddPeriod,
    /// `a^{r/2} = -1 mod N`.
    MinusOne,
    /// Both gcds were 1 or N.
    TrivialFactors,
    Factored,
}

/// Classical bookkeeping for one round of the factoring loop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShorRound {
    pub round: usize,
    pub a: u64,
    pub s: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidate_r: Option<u64>,
    /// `a^{r/2} mod N`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub half_power: Option<u64>,
    /// `gcd(a^{r/2} - 1, N)` and `gcd(a^{r/2} + 1, N)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gcds: Option<[u64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<[u64; 2]>,
    pub outcome: RoundOutcome,
}

impl ShorRound {
    pub fn minus_one(&self) -> bool {
        self.outcome == RoundOutcome::MinusOne
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub algorithm: AlgorithmKind,
    pub verdict: Verdict,
    pub conclusive: bool,
    pub trace: Vec<TraceEntry>,
    pub geometry: Vec<GeometryEntry>,
    pub trials_used: usize,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rounds: Vec<ShorRound>,
}

impl RunReport {
    pub(crate) fn new(algorithm: AlgorithmKind, seed: u64) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            algorithm,
            verdict: Verdict::Inconclusive,
            conclusive: false,
            trace: Vec::new(),
            geometry: Vec::new(),
            trials_used: 0,
            seed,
            rounds: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn geometry_entry(&self, name: &str) -> Option<&GeometryEntry> {
        self.geometry.iter().find(|g| g.name == name)
    }
}

/// `r` as an `n`-character bit string, most significant bit first.
pub fn bit_string(r: u64, n: u32) -> String {
    (0..n)
        .rev()
        .map(|i| if r >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_strings() {
        assert_eq!(bit_string(1, 3), "001");
        assert_eq!(bit_string(0b110, 3), "110");
        assert_eq!(bit_string(0, 1), "0");
    }

    #[test]
    fn report_json_shape() {
        let mut r = RunReport::new(AlgorithmKind::Simon, 7);
        r.verdict = Verdict::Period {
            r: 1,
            bits: "001".into(),
        };
        r.conclusive = true;
        r.trace.push(TraceEntry {
            register: 0,
            outcome: 2,
            probability: 0.25,
            trial: Some(1),
        });
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["algorithm"], "simon");
        assert_eq!(v["verdict"]["kind"], "period");
        assert_eq!(v["verdict"]["bits"], "001");
        assert_eq!(v["seed"], 7);
        assert!(v.get("rounds").is_none());
        assert_eq!(RunReport::from_json(&r.to_json()).unwrap(), r);
    }
}
