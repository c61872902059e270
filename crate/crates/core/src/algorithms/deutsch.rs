//! Deutsch's XOR algorithm, Cleve's deterministic variant and the
//! Deutsch-Jozsa generalization.

use num_complex::Complex64;

use super::report::{AlgorithmKind, GeometryEntry, RunReport, TraceEntry, Verdict};
use crate::error::{Error, Result};
use crate::oracles::{classify_constant_balanced, Balance, NamedOracle, TruthTable};
use crate::rng::SimRng;
use crate::statevector::{
    apply, basis_state, basis_vector, hadamard_layer, measure, oracle_xor_unitary, overlap,
    prime_qubit, qubit_count, RegisterLayout, StateVector, Target, TOLERANCE,
};
use crate::subspace::{meet, span, Subspace};

fn check_one_bit(f: &TruthTable) -> Result<()> {
    if f.domain_size() != 2 || f.codomain_size() != 2 {
        return Err(Error::Domain(format!(
            "expected a function on one bit, got domain {} and codomain {}",
            f.domain_size(),
            f.codomain_size()
        )));
    }
    Ok(())
}

fn one_bit_layout() -> RegisterLayout {
    RegisterLayout::pair(2, 2).expect("2x2 layout")
}

/// `U_f H |0>|0>`: the state whose plane the XOR algorithm identifies.
pub fn deutsch_xor_oracle_state(f: &TruthTable) -> Result<StateVector> {
    check_one_bit(f)?;
    let layout = one_bit_layout();
    let start = basis_state(&layout, &[0, 0])?;
    let superposed = hadamard_layer(&start, 0)?;
    apply(&oracle_xor_unitary(f, &layout)?, &superposed, Target::Whole)
}

/// The oracle state followed by a Hadamard on both registers.
pub fn deutsch_xor_final_state(f: &TruthTable) -> Result<StateVector> {
    let state = deutsch_xor_oracle_state(f)?;
    hadamard_layer(&hadamard_layer(&state, 0)?, 1)
}

/// Constant and balanced planes in the two-qubit space: each is spanned by
/// the oracle states of the two functions with that property.
pub fn deutsch_planes() -> Result<(Subspace, Subspace)> {
    let state = |o: NamedOracle| -> Result<Vec<Complex64>> {
        Ok(deutsch_xor_oracle_state(&o.table())?.into_amplitudes())
    };
    let constant = span(
        &[
            state(NamedOracle::Constant0)?,
            state(NamedOracle::Constant1)?,
        ],
        4,
    )?;
    let balanced = span(
        &[state(NamedOracle::Identity)?, state(NamedOracle::Not)?],
        4,
    )?;
    Ok((constant, balanced))
}

/// The two planes after the final Hadamards: `span{|00>,|01>}` and
/// `span{|00>,|11>}`, where a computational-basis measurement separates them.
pub fn deutsch_measurement_planes() -> Result<(Subspace, Subspace)> {
    let (constant, balanced) = deutsch_planes()?;
    let layout = one_bit_layout();
    let transform = |s: &Subspace| -> Result<Subspace> {
        let images = s
            .basis()
            .iter()
            .map(|b| {
                let st = StateVector::new(layout.clone(), b.clone())?;
                Ok(hadamard_layer(&hadamard_layer(&st, 0)?, 1)?.into_amplitudes())
            })
            .collect::<Result<Vec<_>>>()?;
        span(&images, 4)
    };
    Ok((transform(&constant)?, transform(&balanced)?))
}

/// One run of the original XOR algorithm. Outcome `00` is inconclusive,
/// `01` means constant and `11` balanced.
pub fn deutsch_xor(f: &TruthTable, rng: &mut SimRng) -> Result<RunReport> {
    let oracle_state = deutsch_xor_oracle_state(f)?;
    let final_state = hadamard_layer(&hadamard_layer(&oracle_state, 0)?, 1)?;

    let input = measure(&final_state, 0, rng)?;
    let output = measure(&input.post_state, 1, rng)?;

    let mut report = RunReport::new(AlgorithmKind::DeutschXor, rng.seed());
    report.trials_used = 1;
    report.trace = vec![
        TraceEntry {
            register: 0,
            outcome: input.outcome,
            probability: input.probability,
            trial: None,
        },
        TraceEntry {
            register: 1,
            outcome: output.outcome,
            probability: output.probability,
            trial: None,
        },
    ];
    report.verdict = match (input.outcome, output.outcome) {
        (0, 0) => Verdict::Inconclusive,
        (0, 1) => Verdict::Constant,
        (1, 1) => Verdict::Balanced,
        (i, o) => {
            return Err(Error::Internal(format!(
                "outcome {i}{o} has probability zero for every one-bit function"
            )))
        }
    };
    report.conclusive = report.verdict != Verdict::Inconclusive;

    let (constant, balanced) = deutsch_planes()?;
    let overlap_ray = meet(&constant, &balanced)?;
    let amps = oracle_state.amplitudes();
    report.geometry = vec![
        GeometryEntry::new("constant_plane", &constant, constant.contains(amps)),
        GeometryEntry::new("balanced_plane", &balanced, balanced.contains(amps)),
        GeometryEntry::new("planes_meet", &overlap_ray, overlap_ray.contains(amps)),
    ];
    Ok(report)
}

/// Cleve's variant before the final measurement: `|0>|1>`, H on both
/// registers, `U_f`, H on the input register.
pub fn cleve_final_state(f: &TruthTable) -> Result<StateVector> {
    check_one_bit(f)?;
    let layout = one_bit_layout();
    let start = basis_state(&layout, &[0, 1])?;
    let prepared = hadamard_layer(&hadamard_layer(&start, 0)?, 1)?;
    let kicked = apply(&oracle_xor_unitary(f, &layout)?, &prepared, Target::Whole)?;
    hadamard_layer(&kicked, 0)
}

/// Deterministic one-query verdict: input outcome 0 is constant, 1 balanced.
pub fn deutsch_cleve(f: &TruthTable, rng: &mut SimRng) -> Result<RunReport> {
    let final_state = cleve_final_state(f)?;
    let record = measure(&final_state, 0, rng)?;
    if (record.probability - 1.0).abs() > TOLERANCE {
        return Err(Error::Internal(format!(
            "input outcome {} had probability {}, expected certainty",
            record.outcome, record.probability
        )));
    }

    let prime_one = prime_qubit(1)?;
    let output_factor = final_state
        .register_factor(1, TOLERANCE)?
        .ok_or_else(|| Error::Internal("output register became entangled".into()))?;
    let output_unchanged = overlap(&output_factor, &prime_one) >= 1.0 - TOLERANCE;
    if !output_unchanged {
        return Err(Error::Internal(
            "output register left the state |1'>".into(),
        ));
    }

    let mut report = RunReport::new(AlgorithmKind::Cleve, rng.seed());
    report.trials_used = 1;
    report.conclusive = true;
    report.verdict = if record.outcome == 0 {
        Verdict::Constant
    } else {
        Verdict::Balanced
    };
    report.trace.push(TraceEntry {
        register: 0,
        outcome: record.outcome,
        probability: record.probability,
        trial: None,
    });

    let input_factor = final_state
        .register_factor(0, TOLERANCE)?
        .ok_or_else(|| Error::Internal("input register became entangled".into()))?;
    let constant_ray = Subspace::coordinate(2, &[0])?;
    let balanced_ray = Subspace::coordinate(2, &[1])?;
    report.geometry = vec![
        GeometryEntry::new(
            "constant_ray",
            &constant_ray,
            constant_ray.contains(&input_factor),
        ),
        GeometryEntry::new(
            "balanced_ray",
            &balanced_ray,
            balanced_ray.contains(&input_factor),
        ),
        GeometryEntry::new(
            "output_prime_one",
            &Subspace::ray(&prime_one)?,
            output_unchanged,
        ),
    ];
    Ok(report)
}

/// Deutsch-Jozsa before measurement: `|0...0>|1>`, H on both registers,
/// `U_f`, H on the input register.
pub fn deutsch_jozsa_final_state(f: &TruthTable, n: u32) -> Result<StateVector> {
    let d = 1usize
        .checked_shl(n)
        .filter(|_| n >= 1)
        .ok_or_else(|| Error::Domain(format!("unsupported input width {n}")))?;
    if f.domain_size() != d || qubit_count(d).is_none() {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: f.domain_size(),
        });
    }
    let layout = RegisterLayout::pair(d, 2)?;
    let start = basis_state(&layout, &[0, 1])?;
    let prepared = hadamard_layer(&hadamard_layer(&start, 0)?, 1)?;
    let kicked = apply(&oracle_xor_unitary(f, &layout)?, &prepared, Target::Whole)?;
    hadamard_layer(&kicked, 0)
}

/// Final input-register state of Deutsch-Jozsa, fixed up to global phase.
pub fn deutsch_jozsa_input_state(f: &TruthTable, n: u32) -> Result<Vec<Complex64>> {
    deutsch_jozsa_final_state(f, n)?
        .register_factor(0, TOLERANCE)?
        .ok_or_else(|| Error::Internal("input register became entangled".into()))
}

/// One run; outcome `0...0` means constant, anything else balanced.
pub fn deutsch_jozsa(f: &TruthTable, n: u32, rng: &mut SimRng) -> Result<RunReport> {
    match classify_constant_balanced(f)? {
        Balance::Neither => {
            return Err(Error::PromiseViolation(
                "function is neither constant nor balanced".into(),
            ))
        }
        Balance::Constant | Balance::Balanced => {}
    }
    let final_state = deutsch_jozsa_final_state(f, n)?;
    let record = measure(&final_state, 0, rng)?;

    let mut report = RunReport::new(AlgorithmKind::DeutschJozsa, rng.seed());
    report.trials_used = 1;
    report.conclusive = true;
    report.verdict = if record.outcome == 0 {
        Verdict::Constant
    } else {
        Verdict::Balanced
    };
    report.trace.push(TraceEntry {
        register: 0,
        outcome: record.outcome,
        probability: record.probability,
        trial: None,
    });

    let d = f.domain_size();
    let input = deutsch_jozsa_input_state(f, n)?;
    let zero_ray = Subspace::ray(&basis_vector(d, 0))?;
    let complement = crate::subspace::orthocomplement(&zero_ray);
    report.geometry = vec![
        GeometryEntry::new("zero_ray", &zero_ray, zero_ray.contains(&input)),
        GeometryEntry::new(
            "zero_orthocomplement",
            &complement,
            complement.contains(&input),
        ),
    ];
    Ok(report)
}
