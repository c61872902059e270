mod common;

use qlogic::algorithms::deutsch::{
    deutsch_cleve, deutsch_jozsa, deutsch_measurement_planes, deutsch_xor, deutsch_xor_final_state,
};
use qlogic::algorithms::shor::{shor_factor, OutputRegister, PeriodFinder, ShorOptions};
use qlogic::algorithms::simon::{simon, simon_period_subspace};
use qlogic::algorithms::Verdict;
use qlogic::oracles::{
    brute_force_simon_period, classify_constant_balanced, make_simon_instance, Balance,
    NamedOracle, TruthTable,
};
use qlogic::statevector::{basis_vector, marginal_distribution, TOLERANCE};
use qlogic::subspace::{subspace_distinguisher, Distinction};
use qlogic::SimRng;
use rand::seq::SliceRandom;

use common::{order_by_iteration, parity};

#[test]
fn deutsch_outcome_10_never_occurs_and_00_is_half() {
    for oracle in NamedOracle::ALL {
        let probs = deutsch_xor_final_state(&oracle.table())
            .unwrap()
            .amplitudes()
            .iter()
            .map(|a| a.norm_sqr())
            .collect::<Vec<_>>();
        assert!(probs[0b10] <= TOLERANCE);
        assert!((probs[0b00] - 0.5).abs() <= TOLERANCE);
    }
}

#[test]
fn deutsch_measurement_matches_geometric_distinguisher() {
    let (constant, balanced) = deutsch_measurement_planes().unwrap();
    let planes = [constant, balanced];
    for oracle in NamedOracle::ALL {
        let f = oracle.table();
        for seed in 0..200 {
            let rep = deutsch_xor(&f, &mut SimRng::new(seed)).unwrap();
            let outcome = rep.trace[0].outcome * 2 + rep.trace[1].outcome;
            let geometric = subspace_distinguisher(&planes, &basis_vector(4, outcome)).unwrap();
            let expected = match rep.verdict {
                Verdict::Constant => Distinction::Unique(0),
                Verdict::Balanced => Distinction::Unique(1),
                _ => Distinction::Inconclusive,
            };
            assert_eq!(geometric, expected, "{} seed {seed}", oracle.name());
        }
    }
}

#[test]
fn cleve_and_dj_agree_with_classifier_exhaustively() {
    for n in 1..=3u32 {
        let d = 1usize << n;
        for mask in 0u32..1 << d {
            let f = TruthTable::from_fn(d, 2, |x| (mask >> x & 1) as usize).unwrap();
            let truth = classify_constant_balanced(&f).unwrap();
            if truth == Balance::Neither {
                assert!(deutsch_jozsa(&f, n, &mut SimRng::new(0)).is_err());
                continue;
            }
            let rep = deutsch_jozsa(&f, n, &mut SimRng::new(mask as u64)).unwrap();
            assert_eq!(rep.verdict == Verdict::Balanced, truth == Balance::Balanced);
            if n == 1 {
                let rep = deutsch_cleve(&f, &mut SimRng::new(mask as u64)).unwrap();
                assert_eq!(rep.verdict == Verdict::Balanced, truth == Balance::Balanced);
            }
        }
    }
}

#[test]
fn dj_random_balanced_n5() {
    let mut rng = SimRng::new(55);
    let mut values: Vec<usize> = (0..32).map(|x| usize::from(x < 16)).collect();
    for seed in 0..500 {
        values.shuffle(&mut rng);
        let f = TruthTable::new(32, 2, values.clone()).unwrap();
        let rep = deutsch_jozsa(&f, 5, &mut SimRng::new(seed)).unwrap();
        assert_eq!(rep.verdict, Verdict::Balanced);
        assert_ne!(rep.trace[0].outcome, 0);
    }
}

#[test]
fn simon_recovery_over_many_seeds() {
    let mut gen = SimRng::new(21);
    for n in 1..=4u32 {
        for r in 1..1usize << n {
            let f = make_simon_instance(n, r, &mut gen).unwrap();
            assert_eq!(brute_force_simon_period(&f), Some(r));
            for seed in 0..1000 {
                let rep = simon(&f, n, &mut SimRng::new(seed), 10 * n as usize).unwrap();
                for t in &rep.trace {
                    assert_eq!(parity(t.outcome & r), 0);
                }
                if rep.conclusive {
                    assert_eq!(
                        rep.verdict,
                        Verdict::Period {
                            r: r as u64,
                            bits: format!("{r:0width$b}", width = n as usize),
                        }
                    );
                }
            }
        }
    }
}

#[test]
fn simon_n2_single_outcome_matches_distinguisher() {
    let planes: Vec<_> = (1..4)
        .map(|r| simon_period_subspace(2, r).unwrap())
        .collect();
    let mut gen = SimRng::new(8);
    for r in 1..4usize {
        let f = make_simon_instance(2, r, &mut gen).unwrap();
        for seed in 0..100 {
            let rep = simon(&f, 2, &mut SimRng::new(seed), 1).unwrap();
            let y = rep.trace[0].outcome;
            let geometric = subspace_distinguisher(&planes, &basis_vector(4, y)).unwrap();
            match geometric {
                Distinction::Unique(i) => {
                    assert!(rep.conclusive);
                    assert_eq!(i + 1, r);
                }
                Distinction::Inconclusive => {
                    assert_eq!(y, 0);
                    assert!(!rep.conclusive);
                }
            }
        }
    }
}

#[test]
fn shor_exact_division_grid() {
    for (n, s) in [(15u64, 64usize), (15, 32), (21, 64), (33, 40)] {
        let finder = PeriodFinder::new(n, s, OutputRegister::Exact).unwrap();
        for a in 2..n {
            if common::factor_pairs(n)
                .iter()
                .any(|[p, q]| a % p == 0 || a % q == 0)
            {
                continue;
            }
            let r = order_by_iteration(a, n) as usize;
            if s % r != 0 {
                continue;
            }
            let probs = finder.input_distribution(a).unwrap();
            for (y, p) in probs.iter().enumerate() {
                let expect = if y % (s / r) == 0 {
                    1.0 / r as f64
                } else {
                    0.0
                };
                assert!((p - expect).abs() <= TOLERANCE, "a={a} N={n} s={s} y={y}");
            }
        }
    }
}

#[test]
fn shor_marginals_sum_to_one_and_outputs_are_powers() {
    let finder = PeriodFinder::new(21, 512, OutputRegister::PowerOfTwo).unwrap();
    let st = finder.stages(2).unwrap();
    let out = marginal_distribution(&st.after_oracle, 1).unwrap();
    let mut powers = vec![];
    let mut v = 1;
    for _ in 0..6 {
        powers.push(v);
        v = v * 2 % 21;
    }
    for (y, p) in out.iter().enumerate() {
        if !powers.contains(&y) {
            assert!(*p <= TOLERANCE);
        }
    }
    let total: f64 = marginal_distribution(&st.after_qft, 0)
        .unwrap()
        .iter()
        .sum();
    assert!((total - 1.0).abs() <= TOLERANCE);
}

#[test]
fn shor_random_seed_factors_15() {
    for seed in 0..10 {
        let rep = shor_factor(15, &mut SimRng::new(seed), ShorOptions::default()).unwrap();
        assert!(rep.conclusive, "seed {seed}");
        assert!(matches!(
            rep.verdict,
            Verdict::Factors {
                factors: [3, 5],
                ..
            }
        ));
        assert_eq!(rep.trials_used, rep.rounds.len());
    }
}

#[test]
fn shor_reports_are_reproducible() {
    let a = shor_factor(21, &mut SimRng::new(99), ShorOptions::default()).unwrap();
    let b = shor_factor(21, &mut SimRng::new(99), ShorOptions::default()).unwrap();
    assert_eq!(a.to_json(), b.to_json());
}
