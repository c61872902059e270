//! Shor's factoring algorithm: quantum order finding with a QFT over `Z_s`
//! followed by classical post-processing.

use std::collections::BTreeSet;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::report::{
    AlgorithmKind, GeometryEntry, RoundOutcome, RunReport, ShorRound, TraceEntry, Verdict,
};
use crate::error::{Error, Result};
use crate::number_theory::{
    gcd_unchecked, mod_exp, multiplicative_order, validate_shor_input, Fraction,
};
use crate::rng::SimRng;
use crate::statevector::{
    apply, basis_state, hadamard_layer, marginal_distribution, measure, oracle_modmul_unitary,
    qft_unitary, qubit_count, RegisterLayout, StateVector, Target, Unitary, TOLERANCE,
};
use crate::subspace::Subspace;

/// Size of the output register holding `a^x mod N`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputRegister {
    /// Smallest power of two that is at least `N`.
    #[default]
    PowerOfTwo,
    /// Exactly `N` levels.
    Exact,
}

impl OutputRegister {
    pub fn dimension(self, modulus: u64) -> usize {
        match self {
            OutputRegister::PowerOfTwo => (modulus as usize).next_power_of_two(),
            OutputRegister::Exact => modulus as usize,
        }
    }
}

/// Smallest power of two at least `N^2`.
pub fn default_input_dimension(modulus: u64) -> usize {
    ((modulus * modulus) as usize).next_power_of_two()
}

/// The three intermediate states of one order-finding run.
#[derive(Debug, Clone)]
pub struct ShorStages {
    /// Uniform superposition over the input register, output `|0>`.
    pub prepared: StateVector,
    pub after_oracle: StateVector,
    /// After the QFT on the input register; measured next.
    pub after_qft: StateVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PeriodSample {
    pub a: u64,
    pub s: usize,
    pub c: usize,
    pub probability: f64,
    /// Denominator of `c/s` in lowest terms.
    pub candidate_r: u64,
    /// `c = 0`, which carries no information about the period.
    pub degenerate: bool,
}

/// Order-finding circuit for a fixed modulus and input size; the QFT is
/// built once and reused across bases.
#[derive(Debug, Clone)]
pub struct PeriodFinder {
    modulus: u64,
    s: usize,
    layout: RegisterLayout,
    qft: Unitary,
}

impl PeriodFinder {
    pub fn new(modulus: u64, s: usize, output: OutputRegister) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::Domain(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        if s < modulus as usize {
            return Err(Error::Domain(format!(
                "input dimension s = {s} must be at least N = {modulus}"
            )));
        }
        let layout = RegisterLayout::pair(s, output.dimension(modulus))?;
        Ok(Self {
            modulus,
            s,
            layout,
            qft: qft_unitary(s)?,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    pub fn stages(&self, a: u64) -> Result<ShorStages> {
        let start = basis_state(&self.layout, &[0, 0])?;
        // H^{(x)k} when s = 2^k; otherwise the QFT of |0>, which is the same
        // uniform superposition for any s
        let prepared = if qubit_count(self.s).is_some() {
            hadamard_layer(&start, 0)?
        } else {
            apply(&self.qft, &start, Target::Register(0))?
        };
        let oracle = oracle_modmul_unitary(a, self.modulus, &self.layout)?;
        let after_oracle = apply(&oracle, &prepared, Target::Whole)?;
        let after_qft = apply(&self.qft, &after_oracle, Target::Register(0))?;
        Ok(ShorStages {
            prepared,
            after_oracle,
            after_qft,
        })
    }

    /// Post-QFT input-register distribution.
    pub fn input_distribution(&self, a: u64) -> Result<Vec<f64>> {
        marginal_distribution(&self.stages(a)?.after_qft, 0)
    }

    /// Input-register state after the QFT, conditioned on each reachable
    /// output value `a^m mod N`: `(value, probability, state)`.
    pub fn conditional_input_states(&self, a: u64) -> Result<Vec<(usize, f64, Vec<Complex64>)>> {
        let state = self.stages(a)?.after_qft;
        let probs = marginal_distribution(&state, 1)?;
        let mut out = Vec::new();
        for (value, &p) in probs.iter().enumerate() {
            if p <= TOLERANCE {
                continue;
            }
            let (_, post) = state.condition(1, value)?;
            let factor = post
                .register_factor(0, TOLERANCE)?
                .ok_or_else(|| Error::Internal("conditioned state is not a product".into()))?;
            out.push((value, p, factor));
        }
        Ok(out)
    }

    /// One run: prepare, oracle, QFT, measure the input register.
    pub fn sample(&self, a: u64, rng: &mut SimRng) -> Result<PeriodSample> {
        let stages = self.stages(a)?;
        let record = measure(&stages.after_qft, 0, rng)?;
        let c = record.outcome;
        Ok(PeriodSample {
            a,
            s: self.s,
            c,
            probability: record.probability,
            candidate_r: candidate_period(c, self.s)?,
            degenerate: c == 0,
        })
    }
}

/// Denominator of `c/s` in lowest terms (1 for `c = 0`).
pub fn candidate_period(c: usize, s: usize) -> Result<u64> {
    if c >= s {
        return Err(Error::LabelOutOfRange {
            register: 0,
            label: c,
            dimension: s,
        });
    }
    Ok(Fraction::new(c as u64, s as u64)?.reduce().denominator)
}

pub fn shor_period_sample(
    a: u64,
    modulus: u64,
    s: usize,
    rng: &mut SimRng,
) -> Result<PeriodSample> {
    PeriodFinder::new(modulus, s, OutputRegister::default())?.sample(a, rng)
}

/// Classical half of a round given the measured `c`. `round` is left at 0.
pub fn classical_postprocess(a: u64, modulus: u64, s: usize, c: usize) -> Result<ShorRound> {
    let r = candidate_period(c, s)?;
    let mut round = ShorRound {
        round: 0,
        a,
        s,
        c: Some(c),
        candidate_r: Some(r),
        half_power: None,
        gcds: None,
        factors: None,
        outcome: RoundOutcome::Degenerate,
    };
    if c == 0 {
        return Ok(round);
    }
    if mod_exp(a, r, modulus)? != 1 {
        round.outcome = RoundOutcome::OrderCheckFailed;
        return Ok(round);
    }
    if r % 2 == 1 {
        round.outcome = RoundOutcome::OddPeriod;
        return Ok(round);
    }
    let h = mod_exp(a, r / 2, modulus)?;
    round.half_power = Some(h);
    if h == modulus - 1 {
        round.outcome = RoundOutcome::MinusOne;
        return Ok(round);
    }
    let g = [
        gcd_unchecked((h + modulus - 1) % modulus, modulus),
        gcd_unchecked(h + 1, modulus),
    ];
    round.gcds = Some(g);
    round.outcome = RoundOutcome::TrivialFactors;
    if let Some(&p) = g.iter().find(|&&p| p > 1 && p < modulus) {
        round.factors = Some(sorted_pair(p, modulus / p));
        round.outcome = RoundOutcome::Factored;
    }
    Ok(round)
}

fn sorted_pair(p: u64, q: u64) -> [u64; 2] {
    [p.min(q), p.max(q)]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShorOptions {
    /// Input dimension; defaults to the smallest power of two `>= N^2`.
    pub s: Option<usize>,
    /// Use this base in every round instead of drawing one at random.
    pub a: Option<u64>,
    pub max_rounds: usize,
    pub output: OutputRegister,
}

impl Default for ShorOptions {
    fn default() -> Self {
        Self {
            s: None,
            a: None,
            max_rounds: 20,
            output: OutputRegister::PowerOfTwo,
        }
    }
}

/// Random-base factoring loop. Rounds that fail are recorded and retried;
/// exhausting `max_rounds` gives an inconclusive report.
pub fn shor_factor(modulus: u64, rng: &mut SimRng, options: ShorOptions) -> Result<RunReport> {
    validate_shor_input(modulus).map_err(Error::ShorInput)?;
    if options.max_rounds == 0 {
        return Err(Error::Domain("max_rounds must be at least 1".into()));
    }
    if let Some(a) = options.a {
        if a < 2 || a >= modulus {
            return Err(Error::Domain(format!(
                "base a must satisfy 2 <= a < {modulus}, got {a}"
            )));
        }
    }
    let s = options
        .s
        .unwrap_or_else(|| default_input_dimension(modulus));
    let finder = PeriodFinder::new(modulus, s, options.output)?;

    let mut report = RunReport::new(AlgorithmKind::Shor, rng.seed());
    let mut last_quantum_base = None;
    for index in 1..=options.max_rounds {
        let a = options.a.unwrap_or_else(|| rng.random_range(2..modulus));
        let g = gcd_unchecked(a, modulus);
        let round = if g > 1 {
            ShorRound {
                round: index,
                a,
                s,
                c: None,
                candidate_r: None,
                half_power: None,
                gcds: None,
                factors: Some(sorted_pair(g, modulus / g)),
                outcome: RoundOutcome::NonCoprime,
            }
        } else {
            let sample = finder.sample(a, rng)?;
            report.trace.push(TraceEntry {
                register: 0,
                outcome: sample.c,
                probability: sample.probability,
                trial: Some(index),
            });
            last_quantum_base = Some(a);
            ShorRound {
                round: index,
                ..classical_postprocess(a, modulus, s, sample.c)?
            }
        };
        report.trials_used = index;
        let done = round.factors.map(|factors| Verdict::Factors {
            factors,
            a,
            period: match round.outcome {
                RoundOutcome::Factored => round.candidate_r,
                _ => None,
            },
        });
        report.rounds.push(round);
        if let Some(verdict) = done {
            report.verdict = verdict;
            report.conclusive = true;
            break;
        }
    }

    if let Some(a) = last_quantum_base {
        let geometry = shor_geometry_with(&finder, a)?;
        for entry in &geometry.subspaces {
            report.geometry.push(GeometryEntry::new(
                format!("period_subspace_r{}", entry.r),
                &entry.subspace,
                entry.contains_final,
            ));
        }
    }
    Ok(report)
}

/// `span{|k s / r> : k = 0..r-1}`; requires `r | s`.
pub fn period_subspace(s: usize, r: u64) -> Result<Subspace> {
    if r == 0 || !(s as u64).is_multiple_of(r) {
        return Err(Error::Domain(format!("period {r} does not divide s = {s}")));
    }
    let step = s / r as usize;
    let support: Vec<usize> = (0..r as usize).map(|k| k * step).collect();
    Subspace::coordinate(s, &support)
}

#[derive(Debug, Clone)]
pub struct PeriodSubspace {
    pub r: u64,
    pub subspace: Subspace,
    /// Whether the post-QFT input register for the chosen base lies in it.
    pub contains_final: bool,
}

#[derive(Debug, Clone)]
pub struct ShorGeometry {
    pub a: u64,
    pub modulus: u64,
    pub s: usize,
    /// Multiplicative order of `a` mod `N`.
    pub order: u64,
    /// One subspace per realizable order dividing `s`, ascending in `r`.
    pub subspaces: Vec<PeriodSubspace>,
    /// Realizable orders that do not divide `s`, with an explanation.
    pub excluded: Vec<(u64, String)>,
    /// `(r1, r2)` with `r1 != r2` and `V_{r1}` contained in `V_{r2}`.
    pub nesting: Vec<(u64, u64)>,
}

impl ShorGeometry {
    pub fn subspace(&self, r: u64) -> Option<&PeriodSubspace> {
        self.subspaces.iter().find(|p| p.r == r)
    }

    pub fn nested(&self, inner: u64, outer: u64) -> bool {
        self.nesting.contains(&(inner, outer))
    }
}

/// Orders `ord_N(b)` over all `b` coprime to `N`.
pub fn realizable_orders(modulus: u64) -> Result<BTreeSet<u64>> {
    (1..modulus)
        .filter(|&b| gcd_unchecked(b, modulus) == 1)
        .map(|b| multiplicative_order(b, modulus))
        .collect()
}

/// Period subspaces of the input register for every order realizable
/// mod `N` that divides `s`, and their containment relations.
pub fn shor_geometry(a: u64, modulus: u64, s: usize) -> Result<ShorGeometry> {
    shor_geometry_with(
        &PeriodFinder::new(modulus, s, OutputRegister::default())?,
        a,
    )
}

fn shor_geometry_with(finder: &PeriodFinder, a: u64) -> Result<ShorGeometry> {
    let (modulus, s) = (finder.modulus(), finder.s());
    let order = multiplicative_order(a, modulus)?;
    let probs = finder.input_distribution(a)?;
    let mut subspaces = Vec::new();
    let mut excluded = Vec::new();
    for r in realizable_orders(modulus)? {
        if !(s as u64).is_multiple_of(r) {
            excluded.push((
                r,
                format!(
                    "r = {r} does not divide s = {s}; outcomes only cluster near multiples of s/r"
                ),
            ));
            continue;
        }
        let subspace = period_subspace(s, r)?;
        let support = subspace.coordinate_support().unwrap_or_default();
        let inside: f64 = support.iter().map(|&y| probs[y]).sum();
        subspaces.push(PeriodSubspace {
            r,
            subspace,
            contains_final: inside >= 1.0 - TOLERANCE,
        });
    }
    let mut nesting = Vec::new();
    for inner in &subspaces {
        for outer in &subspaces {
            if inner.r != outer.r && inner.subspace.is_subspace_of(&outer.subspace) {
                nesting.push((inner.r, outer.r));
            }
        }
    }
    Ok(ShorGeometry {
        a,
        modulus,
        s,
        order,
        subspaces,
        excluded,
        nesting,
    })
}
