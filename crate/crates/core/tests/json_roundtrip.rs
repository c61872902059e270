use proptest::prelude::*;
use qlogic::algorithms::deutsch::{deutsch_jozsa, deutsch_xor};
use qlogic::algorithms::shor::{shor_factor, ShorOptions};
use qlogic::algorithms::simon::simon;
use qlogic::algorithms::RunReport;
use qlogic::oracles::{make_simon_instance, NamedOracle, TruthTable};
use qlogic::reproduce::{reproduce, ReproduceReport};
use qlogic::statevector::TOLERANCE;
use qlogic::SimRng;

fn round_trips(report: &RunReport) {
    let text = report.to_json();
    let back = RunReport::from_json(&text).unwrap();
    assert_eq!(&back, report);
    assert_eq!(back.to_json(), text);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn algorithm_reports_round_trip(seed in any::<u64>(), which in 0usize..4) {
        let mut rng = SimRng::new(seed);
        let report = match which {
            0 => deutsch_xor(&NamedOracle::ALL[(seed % 4) as usize].table(), &mut rng).unwrap(),
            1 => {
                let f = TruthTable::new(4, 2, vec![0, 1, 1, 0]).unwrap();
                deutsch_jozsa(&f, 2, &mut rng).unwrap()
            }
            2 => {
                let f = make_simon_instance(3, (seed % 7 + 1) as usize, &mut SimRng::new(seed)).unwrap();
                simon(&f, 3, &mut rng, 30).unwrap()
            }
            _ => {
                let opts = ShorOptions { s: Some(64), ..ShorOptions::default() };
                shor_factor(15, &mut rng, opts).unwrap()
            }
        };
        round_trips(&report);
    }

    #[test]
    fn truth_tables_round_trip(values in proptest::collection::vec(0usize..5, 1..20)) {
        let f = TruthTable::new(values.len(), 5, values).unwrap();
        prop_assert_eq!(TruthTable::from_json(&f.to_json()).unwrap(), f);
    }
}

#[test]
fn reproduce_report_round_trips() {
    let r = reproduce(TOLERANCE, 3);
    let back: ReproduceReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
}
