//! Simon's period-finding algorithm over `n`-bit strings.

use std::collections::BTreeSet;

use super::report::{bit_string, AlgorithmKind, GeometryEntry, RunReport, TraceEntry, Verdict};
use crate::error::{Error, Result};
use crate::number_theory::{dot_gf2, solve_gf2};
use crate::oracles::{brute_force_simon_period, TruthTable};
use crate::rng::SimRng;
use crate::statevector::{
    apply, basis_state, hadamard_layer, marginal_distribution, measure, oracle_xor_unitary,
    RegisterLayout, StateVector, Target, TOLERANCE,
};
use crate::subspace::{span, Subspace};

pub fn default_max_trials(n: u32) -> usize {
    10 * n as usize
}

fn simon_layout(f: &TruthTable, n: u32) -> Result<RegisterLayout> {
    if n == 0 || n > 8 {
        return Err(Error::Domain(format!("Simon needs 1 <= n <= 8, got {n}")));
    }
    let d = 1usize << n;
    if f.domain_size() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: f.domain_size(),
        });
    }
    RegisterLayout::pair(d, f.codomain_size())
}

/// `U_f H |0>|0>`, before the final Hadamard.
pub fn simon_oracle_state(f: &TruthTable, n: u32) -> Result<StateVector> {
    let layout = simon_layout(f, n)?;
    let start = basis_state(&layout, &[0, 0])?;
    let superposed = hadamard_layer(&start, 0)?;
    apply(&oracle_xor_unitary(f, &layout)?, &superposed, Target::Whole)
}

/// State just before the input register is measured.
pub fn simon_final_state(f: &TruthTable, n: u32) -> Result<StateVector> {
    hadamard_layer(&simon_oracle_state(f, n)?, 0)
}

/// Span of the input-register states left by each possible output value
/// after `U_f`: one coset state `(|x> + |x xor r>)/sqrt2` per output.
pub fn simon_partition_subspace(f: &TruthTable, n: u32) -> Result<Subspace> {
    let state = simon_oracle_state(f, n)?;
    let probs = marginal_distribution(&state, 1)?;
    let mut vectors = Vec::new();
    for (value, &p) in probs.iter().enumerate() {
        if p <= TOLERANCE {
            continue;
        }
        let (_, post) = state.condition(1, value)?;
        let factor = post
            .register_factor(0, TOLERANCE)?
            .ok_or_else(|| Error::Internal("conditioned state is not a product".into()))?;
        vectors.push(factor);
    }
    span(&vectors, 1 << n)
}

/// `span{|y> : r . y = 0}`, where the final input state lives for period `r`.
pub fn simon_period_subspace(n: u32, r: usize) -> Result<Subspace> {
    if n == 0 || n > 16 {
        return Err(Error::Domain(format!("Simon needs 1 <= n <= 16, got {n}")));
    }
    let d = 1usize << n;
    if r == 0 || r >= d {
        return Err(Error::Domain(format!(
            "period must satisfy 0 < r < {d}, got {r}"
        )));
    }
    let support: Vec<usize> = (0..d)
        .filter(|&y| dot_gf2(y as u64, r as u64) == 0)
        .collect();
    Subspace::coordinate(d, &support)
}

/// Repeats prepare / `U_f` / H / measure-input until the collected outcomes
/// pin down a unique nonzero solution of `y . r = 0`.
pub fn simon(f: &TruthTable, n: u32, rng: &mut SimRng, max_trials: usize) -> Result<RunReport> {
    if max_trials == 0 {
        return Err(Error::Domain("max_trials must be at least 1".into()));
    }
    simon_layout(f, n)?;
    if brute_force_simon_period(f).is_none() {
        return Err(Error::PromiseViolation(
            "function is not 2-to-1 with an XOR period".into(),
        ));
    }
    // Every trial prepares the same pre-measurement state; only the input
    // register is measured and the output register is never touched.
    let final_state = simon_final_state(f, n)?;

    let mut report = RunReport::new(AlgorithmKind::Simon, rng.seed());
    let mut equations = Vec::new();
    let mut found = None;
    for trial in 1..=max_trials {
        let record = measure(&final_state, 0, rng)?;
        report.trace.push(TraceEntry {
            register: 0,
            outcome: record.outcome,
            probability: record.probability,
            trial: Some(trial),
        });
        report.trials_used = trial;
        equations.push(record.outcome as u64);
        let solutions = solve_gf2(&equations, n as usize)?;
        if let [r] = solutions.as_slice() {
            found = Some(*r);
            break;
        }
    }

    let outcomes: BTreeSet<usize> = report.trace.iter().map(|t| t.outcome).collect();
    let outcome_span = Subspace::coordinate(1 << n, &outcomes.iter().copied().collect::<Vec<_>>())?;
    report.geometry.push(GeometryEntry {
        name: "outcome_span".into(),
        dimension: outcome_span.dimension(),
        contains_final: true,
        support: Some(outcomes.iter().copied().collect()),
    });
    if let Some(r) = found {
        let sub = simon_period_subspace(n, r as usize)?;
        let inside = outcome_span.is_subspace_of(&sub);
        report.geometry.push(GeometryEntry::new(
            format!("period_subspace_{}", bit_string(r, n)),
            &sub,
            inside,
        ));
        report.verdict = Verdict::Period {
            r,
            bits: bit_string(r, n),
        };
        report.conclusive = true;
    }
    Ok(report)
}
