//! Named end-to-end checks of the worked examples, evaluated at a caller
//! chosen tolerance and rendered as a pass/fail table.
//!
//! Every check is exact except `shor_worked_example_factors`, which runs the
//! sampled factoring loop with a forced base and is seeded.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algorithms::deutsch::{
    cleve_final_state, deutsch_jozsa_input_state, deutsch_planes, deutsch_xor_final_state,
};
use crate::algorithms::report::Verdict;
use crate::algorithms::shor::{
    classical_postprocess, shor_factor, shor_geometry, OutputRegister, PeriodFinder, ShorOptions,
};
use crate::algorithms::simon::{simon_final_state, simon_partition_subspace};
use crate::error::Result;
use crate::number_theory::{dot_gf2, gcd, multiplicative_order, solve_gf2};
use crate::oracles::{make_simon_instance, NamedOracle, TruthTable};
use crate::rng::SimRng;
use crate::statevector::{
    marginal_distribution, overlap, prime_basis_vector, prime_qubit, TOLERANCE,
};
use crate::subspace::{commutes_within, meet, span, Subspace};

/// Probability mass a=7, N=15, s=66 puts within 1 of a multiple of 16.5,
/// computed once by exact enumeration and pinned.
pub const NON_EXACT_NEAR_MASS: f64 = 0.906_976_747_862_668_7;

/// Regression threshold for [`NON_EXACT_NEAR_MASS`].
pub const NON_EXACT_THRESHOLD: f64 = 0.9069;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub claim: String,
    pub passed: bool,
    /// Largest numerical deviation compared against the tolerance; absent
    /// when the check errored.
    pub deviation: Option<f64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReproduceReport {
    pub tolerance: f64,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl ReproduceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `(name, passed)` pairs, the part of the report that must not depend
    /// on the seed.
    pub fn verdicts(&self) -> Vec<(String, bool)> {
        self.checks
            .iter()
            .map(|c| (c.name.clone(), c.passed))
            .collect()
    }

    pub fn table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{mark}  {:width$}  {}", c.name, c.detail);
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(
            out,
            "{passed}/{} checks passed at tolerance {:e}",
            self.checks.len(),
            self.tolerance
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// What a check measured: structural facts that must hold exactly, and a
/// numerical deviation compared against the tolerance.
struct Measured {
    structural: bool,
    deviation: f64,
    detail: String,
}

type CheckFn = fn(u64) -> Result<Measured>;

const CHECKS: &[(&str, &str, CheckFn)] = &[
    (
        "deutsch_planes_meet_in_uniform_ray",
        "constant and balanced planes commute and meet in the ray of (|00>+|01>+|10>+|11>)/2",
        deutsch_planes_meet,
    ),
    (
        "deutsch_planes_orthonormal",
        "plane bases are orthonormal and their projectors idempotent and Hermitian",
        deutsch_planes_orthonormal,
    ),
    (
        "deutsch_xor_half_probability",
        "each one-bit function gives 0'0' or the correct verdict with probability 1/2",
        deutsch_xor_probabilities,
    ),
    (
        "cleve_deterministic_output_unchanged",
        "Cleve's variant decides with certainty and leaves the output in |1'>",
        cleve_deterministic,
    ),
    (
        "deutsch_jozsa_n2_phase_classes",
        "n=2: constant f ends in |00>, balanced f in three orthogonal states",
        deutsch_jozsa_n2,
    ),
    (
        "simon_n2_period_planes",
        "n=2 coset planes are span{0'0',1'0'}, span{0'0',0'1'}, span{0'0',1'1'} and meet in |0'0'>",
        simon_n2_planes,
    ),
    (
        "simon_n3_outcome_supports",
        "n=3: outcomes are uniform on {y : r.y = 0}; pairwise meets are planes",
        simon_n3_supports,
    ),
    (
        "simon_n3_two_outcomes_determine_r",
        "n=3: any two distinct nonzero outcomes determine r",
        simon_n3_two_outcomes,
    ),
    (
        "shor_output_register_outcomes",
        "a=7, N=15, s=64: output register reads 1, 7, 4 or 13 with probability 1/4",
        shor_output_outcomes,
    ),
    (
        "shor_post_qft_distribution",
        "a=7, N=15, s=64: input register is uniform on {0,16,32,48} after the QFT",
        shor_post_qft,
    ),
    (
        "shor_offset_phase_patterns",
        "conditional post-QFT states are (|0> + i^m|16> + (-1)^m|32> + (-i)^m|48>)/2",
        shor_phase_patterns,
    ),
    (
        "shor_ambiguous_outcome",
        "c=32 gives candidate r=2, rejected since 7^2 != 1 mod 15; c=16, 48 give r=4",
        shor_ambiguity,
    ),
    (
        "shor_gcd_factors",
        "gcd(48, 15) = 3 and gcd(50, 15) = 5",
        shor_gcds,
    ),
    (
        "shor_worked_example_factors",
        "N=15 with a=7, s=64 factors as 3 x 5",
        shor_worked_factors,
    ),
    (
        "shor_a_survey_orders",
        "orders of 2, 4, 8, 11, 13, 14 mod 15 are 4, 2, 4, 2, 4, 2",
        shor_a_survey,
    ),
    (
        "shor_a14_minus_one",
        "a=14 fails: r=2 and 14 = -1 mod 15",
        shor_a14,
    ),
    (
        "shor_period_subspace_nesting",
        "V_{r=1} in V_{r=2} in V_{r=4} = span{0,16,32,48}",
        shor_nesting,
    ),
    (
        "shor_non_exact_division",
        "s=66: mass near multiples of 16.5 dominates the small amplitudes elsewhere",
        shor_non_exact,
    ),
];

/// Runs every check. Only `shor_worked_example_factors` uses `seed`.
pub fn reproduce(tolerance: f64, seed: u64) -> ReproduceReport {
    let checks = CHECKS
        .iter()
        .map(|&(name, claim, run)| {
            let (passed, deviation, detail) = match run(seed) {
                Ok(m) => (
                    m.structural && m.deviation <= tolerance,
                    Some(m.deviation),
                    format!("{} (max deviation {:.1e})", m.detail, m.deviation),
                ),
                Err(e) => (false, None, format!("error: {e}")),
            };
            CheckResult {
                name: name.to_string(),
                claim: claim.to_string(),
                passed,
                deviation,
                detail,
            }
        })
        .collect();
    ReproduceReport {
        tolerance,
        seed,
        checks,
    }
}

pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|c| c.0)
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `1 - |<a|b>|` for unit vectors.
fn phase_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    (1.0 - overlap(a, b)).abs()
}

/// Largest distance of either subspace's basis from the other.
fn subspace_distance(a: &Subspace, b: &Subspace) -> f64 {
    let one = a.basis().iter().map(|v| b.residual(v));
    let two = b.basis().iter().map(|v| a.residual(v));
    one.chain(two).fold(0.0, f64::max)
}

fn deutsch_planes_meet(_: u64) -> Result<Measured> {
    let (constant, balanced) = deutsch_planes()?;
    let ray = meet(&constant, &balanced)?;
    let uniform = vec![c(0.5); 4];
    let commute = commutes_within(&constant, &balanced, TOLERANCE)?;
    let proj = constant.projector().matrix() * balanced.projector().matrix()
        - balanced.projector().matrix() * constant.projector().matrix();
    let comm_defect = crate::subspace::max_entry(&proj);
    let deviation = if ray.dimension() == 1 {
        phase_distance(&ray.basis()[0], &uniform).max(comm_defect)
    } else {
        f64::INFINITY
    };
    Ok(Measured {
        structural: ray.dimension() == 1 && commute,
        deviation,
        detail: format!("meet dimension {}, commute {}", ray.dimension(), commute),
    })
}

fn deutsch_planes_orthonormal(_: u64) -> Result<Measured> {
    let (constant, balanced) = deutsch_planes()?;
    let mut deviation: f64 = 0.0;
    for plane in [&constant, &balanced] {
        let p = plane.projector();
        deviation = deviation
            .max(plane.orthonormality_defect())
            .max(p.idempotence_defect())
            .max(p.hermiticity_defect())
            .max((p.trace() - 2.0).abs());
    }
    Ok(Measured {
        structural: constant.dimension() == 2 && balanced.dimension() == 2,
        deviation,
        detail: "two planes of rank 2".into(),
    })
}

fn deutsch_xor_probabilities(_: u64) -> Result<Measured> {
    let mut deviation: f64 = 0.0;
    for oracle in NamedOracle::ALL {
        let f = oracle.table();
        let verdict_label = if f.value(0) == f.value(1) { 0b01 } else { 0b11 };
        let state = deutsch_xor_final_state(&f)?;
        for (label, a) in state.amplitudes().iter().enumerate() {
            let expect = if label == 0b00 || label == verdict_label {
                0.5
            } else {
                0.0
            };
            deviation = deviation.max((a.norm_sqr() - expect).abs());
        }
    }
    Ok(Measured {
        structural: true,
        deviation,
        detail: "4 functions".into(),
    })
}

fn cleve_deterministic(_: u64) -> Result<Measured> {
    let prime_one = prime_qubit(1)?;
    let mut deviation: f64 = 0.0;
    let mut structural = true;
    for oracle in NamedOracle::ALL {
        let f = oracle.table();
        let expect = usize::from(f.value(0) != f.value(1));
        let state = cleve_final_state(&f)?;
        let p = marginal_distribution(&state, 0)?;
        deviation = deviation.max((p[expect] - 1.0).abs());
        match state.register_factor(1, TOLERANCE)? {
            Some(out) => deviation = deviation.max(phase_distance(&out, &prime_one)),
            None => structural = false,
        }
    }
    Ok(Measured {
        structural,
        deviation,
        detail: "4 functions".into(),
    })
}

fn deutsch_jozsa_n2(_: u64) -> Result<Measured> {
    let mut deviation: f64 = 0.0;
    for v in 0..2 {
        let f = TruthTable::new(4, 2, vec![v; 4])?;
        let state = deutsch_jozsa_input_state(&f, 2)?;
        deviation = deviation.max((state[0].norm() - 1.0).abs());
    }
    let mut balanced = Vec::new();
    for mask in 0u32..16 {
        if mask.count_ones() != 2 {
            continue;
        }
        let f = TruthTable::from_fn(4, 2, |x| (mask >> x & 1) as usize)?;
        let state = deutsch_jozsa_input_state(&f, 2)?;
        deviation = deviation.max(state[0].norm());
        balanced.push(state);
    }
    // group into classes equal up to phase; distinct classes must be orthogonal
    let mut classes: Vec<Vec<Complex64>> = Vec::new();
    for s in &balanced {
        match classes.iter().find(|r| overlap(r, s) > 0.5) {
            Some(rep) => deviation = deviation.max(phase_distance(rep, s)),
            None => classes.push(s.clone()),
        }
    }
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            deviation = deviation.max(overlap(&classes[i], &classes[j]));
        }
    }
    Ok(Measured {
        structural: balanced.len() == 6 && classes.len() == 3,
        deviation,
        detail: format!(
            "{} balanced functions, {} phase classes",
            balanced.len(),
            classes.len()
        ),
    })
}

fn simon_n2_planes(_: u64) -> Result<Measured> {
    let prime = |label| prime_basis_vector(2, label);
    let table = [(0b01, 0b10), (0b10, 0b01), (0b11, 0b11)];
    let mut rng = SimRng::new(0);
    let mut deviation: f64 = 0.0;
    let mut planes = Vec::new();
    for (r, partner) in table {
        let f = make_simon_instance(2, r, &mut rng)?;
        let plane = simon_partition_subspace(&f, 2)?;
        let expect = span(&[prime(0b00)?, prime(partner)?], 4)?;
        deviation = deviation.max(subspace_distance(&plane, &expect));
        planes.push(plane);
    }
    let ray = Subspace::ray(&prime(0b00)?)?;
    let mut structural = true;
    for i in 0..3 {
        for j in i + 1..3 {
            let m = meet(&planes[i], &planes[j])?;
            structural &= m.dimension() == 1;
            deviation = deviation.max(subspace_distance(&m, &ray));
        }
    }
    Ok(Measured {
        structural,
        deviation,
        detail: "3 planes, 3 pairwise meets".into(),
    })
}

fn simon_n3_support(r: usize) -> Vec<usize> {
    (0..8)
        .filter(|&y| dot_gf2(y as u64, r as u64) == 0)
        .collect()
}

fn simon_n3_supports(_: u64) -> Result<Measured> {
    let mut rng = SimRng::new(0);
    let mut deviation: f64 = 0.0;
    let mut subspaces = Vec::new();
    for r in 1..8 {
        let f = make_simon_instance(3, r, &mut rng)?;
        let probs = marginal_distribution(&simon_final_state(&f, 3)?, 0)?;
        let support = simon_n3_support(r);
        for (y, p) in probs.iter().enumerate() {
            let expect = if support.contains(&y) { 0.25 } else { 0.0 };
            deviation = deviation.max((p - expect).abs());
        }
        subspaces.push(Subspace::coordinate(8, &support)?);
    }
    let mut structural = true;
    for i in 0..7 {
        for j in i + 1..7 {
            structural &= meet(&subspaces[i], &subspaces[j])?.dimension() == 2;
        }
    }
    Ok(Measured {
        structural,
        deviation,
        detail: "7 periods, 21 meets".into(),
    })
}

fn simon_n3_two_outcomes(_: u64) -> Result<Measured> {
    let mut structural = true;
    for r in 1..8usize {
        let nonzero: Vec<usize> = simon_n3_support(r)
            .into_iter()
            .filter(|&y| y != 0)
            .collect();
        for (i, &y1) in nonzero.iter().enumerate() {
            for &y2 in &nonzero[i + 1..] {
                structural &= solve_gf2(&[y1 as u64, y2 as u64], 3)? == vec![r as u64];
            }
        }
    }
    Ok(Measured {
        structural,
        deviation: 0.0,
        detail: "7 periods, all outcome pairs".into(),
    })
}

fn worked_finder() -> Result<PeriodFinder> {
    PeriodFinder::new(15, 64, OutputRegister::PowerOfTwo)
}

fn shor_output_outcomes(_: u64) -> Result<Measured> {
    let stages = worked_finder()?.stages(7)?;
    let probs = marginal_distribution(&stages.after_oracle, 1)?;
    let deviation = probs
        .iter()
        .enumerate()
        .map(|(y, p)| {
            let expect = if [1, 7, 4, 13].contains(&y) {
                0.25
            } else {
                0.0
            };
            (p - expect).abs()
        })
        .fold(0.0, f64::max);
    Ok(Measured {
        structural: true,
        deviation,
        detail: "16 output labels".into(),
    })
}

fn shor_post_qft(_: u64) -> Result<Measured> {
    let probs = worked_finder()?.input_distribution(7)?;
    let deviation = probs
        .iter()
        .enumerate()
        .map(|(y, p)| {
            let expect = if y % 16 == 0 { 0.25 } else { 0.0 };
            (p - expect).abs()
        })
        .fold(0.0, f64::max);
    Ok(Measured {
        structural: true,
        deviation,
        detail: "64 input labels".into(),
    })
}

fn shor_phase_patterns(_: u64) -> Result<Measured> {
    let states = worked_finder()?.conditional_input_states(7)?;
    let i = Complex64::i();
    let mut deviation: f64 = 0.0;
    let mut structural = states.len() == 4;
    for (m, value) in [1usize, 7, 4, 13].into_iter().enumerate() {
        let Some((_, _, state)) = states.iter().find(|(v, _, _)| *v == value) else {
            structural = false;
            continue;
        };
        let mut expect = vec![c(0.0); 64];
        expect[0] = c(0.5);
        expect[16] = 0.5 * i.powi(m as i32);
        expect[32] = c(0.5 * (-1.0f64).powi(m as i32));
        expect[48] = 0.5 * (-i).powi(m as i32);
        deviation = deviation.max(phase_distance(state, &expect));
    }
    Ok(Measured {
        structural,
        deviation,
        detail: "offsets m = 0..3".into(),
    })
}

fn shor_ambiguity(_: u64) -> Result<Measured> {
    use crate::algorithms::report::RoundOutcome;
    let r32 = classical_postprocess(7, 15, 64, 32)?;
    let r16 = classical_postprocess(7, 15, 64, 16)?;
    let r48 = classical_postprocess(7, 15, 64, 48)?;
    let structural = r32.candidate_r == Some(2)
        && r32.outcome == RoundOutcome::OrderCheckFailed
        && [&r16, &r48]
            .iter()
            .all(|r| r.candidate_r == Some(4) && r.outcome == RoundOutcome::Factored);
    Ok(Measured {
        structural,
        deviation: 0.0,
        detail: format!(
            "c=32 -> r={:?}, c=16 -> r={:?}, c=48 -> r={:?}",
            r32.candidate_r, r16.candidate_r, r48.candidate_r
        ),
    })
}

fn shor_gcds(_: u64) -> Result<Measured> {
    let (g1, g2) = (gcd(48, 15)?, gcd(50, 15)?);
    let round = classical_postprocess(7, 15, 64, 16)?;
    Ok(Measured {
        structural: g1 == 3 && g2 == 5 && round.gcds == Some([3, 5]),
        deviation: 0.0,
        detail: format!("gcd(48,15)={g1}, gcd(50,15)={g2}"),
    })
}

fn shor_worked_factors(seed: u64) -> Result<Measured> {
    let opts = ShorOptions {
        s: Some(64),
        a: Some(7),
        ..ShorOptions::default()
    };
    let report = shor_factor(15, &mut SimRng::new(seed), opts)?;
    let structural = matches!(
        report.verdict,
        Verdict::Factors {
            factors: [3, 5],
            ..
        }
    );
    Ok(Measured {
        structural,
        deviation: 0.0,
        detail: format!("{} round(s)", report.rounds.len()),
    })
}

fn shor_a_survey(_: u64) -> Result<Measured> {
    let orders = [2, 4, 8, 11, 13, 14]
        .iter()
        .map(|&a| multiplicative_order(a, 15))
        .collect::<Result<Vec<_>>>()?;
    Ok(Measured {
        structural: orders == [4, 2, 4, 2, 4, 2],
        deviation: 0.0,
        detail: format!("orders {orders:?}"),
    })
}

fn shor_a14(_: u64) -> Result<Measured> {
    let round = classical_postprocess(14, 15, 64, 32)?;
    Ok(Measured {
        structural: round.candidate_r == Some(2) && round.minus_one(),
        deviation: 0.0,
        detail: format!("outcome {:?}", round.outcome),
    })
}

fn shor_nesting(_: u64) -> Result<Measured> {
    let g = shor_geometry(7, 15, 64)?;
    let v4 = g.subspace(4).map(|p| p.subspace.coordinate_support());
    let structural = g.nested(2, 4)
        && g.nested(1, 2)
        && g.nested(1, 4)
        && !g.nested(4, 2)
        && v4 == Some(Some(vec![0, 16, 32, 48]))
        && g.subspace(4).is_some_and(|p| p.contains_final);
    Ok(Measured {
        structural,
        deviation: 0.0,
        detail: format!("nesting {:?}", g.nesting),
    })
}

/// Mass within 1 of some `k * 16.5`, and the largest single outcome
/// probability outside that set.
pub fn non_exact_masses(probs: &[f64], spacing: f64) -> (f64, f64, f64) {
    let near = |y: usize| {
        (0..=((probs.len() as f64 / spacing).ceil() as usize))
            .any(|k| (y as f64 - k as f64 * spacing).abs() <= 1.0)
    };
    let mut near_mass = 0.0;
    let mut far_mass = 0.0;
    let mut far_max: f64 = 0.0;
    for (y, &p) in probs.iter().enumerate() {
        if near(y) {
            near_mass += p;
        } else {
            far_mass += p;
            far_max = far_max.max(p);
        }
    }
    (near_mass, far_mass, far_max)
}

fn shor_non_exact(_: u64) -> Result<Measured> {
    let probs = PeriodFinder::new(15, 66, OutputRegister::PowerOfTwo)?.input_distribution(7)?;
    let (near, far, _) = non_exact_masses(&probs, 16.5);
    Ok(Measured {
        structural: near >= NON_EXACT_THRESHOLD && near > far,
        deviation: (near - NON_EXACT_NEAR_MASS).abs(),
        detail: format!("near mass {near:.12}, elsewhere {far:.12}"),
    })
}
