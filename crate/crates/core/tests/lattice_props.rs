mod common;

use proptest::prelude::*;
use qlogic::statevector::TOLERANCE;
use qlogic::subspace::{commutes, join, max_entry, meet, orthocomplement, Subspace};
use qlogic::SimRng;

use common::{random_coordinate_subspace, random_generic_subspace, random_orthonormal_basis};

fn triple(seed: u64, d: usize, commuting: bool) -> (Subspace, Subspace, Subspace) {
    let mut rng = SimRng::new(seed);
    if commuting {
        let basis = random_orthonormal_basis(d, &mut rng);
        (
            random_coordinate_subspace(&basis, &mut rng),
            random_coordinate_subspace(&basis, &mut rng),
            random_coordinate_subspace(&basis, &mut rng),
        )
    } else {
        (
            random_generic_subspace(d, &mut rng),
            random_generic_subspace(d, &mut rng),
            random_generic_subspace(d, &mut rng),
        )
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lattice_laws(seed in any::<u64>(), d in 1usize..=8, commuting in any::<bool>()) {
        let (a, b, c) = triple(seed, d, commuting);
        let ab = meet(&a, &b).unwrap();
        let a_or_b = join(&a, &b).unwrap();
        prop_assert!(ab.same_as(&meet(&b, &a).unwrap()));
        prop_assert!(a_or_b.same_as(&join(&b, &a).unwrap()));
        prop_assert!(meet(&ab, &c).unwrap().same_as(&meet(&a, &meet(&b, &c).unwrap()).unwrap()));
        prop_assert!(join(&a_or_b, &c).unwrap().same_as(&join(&a, &join(&b, &c).unwrap()).unwrap()));
        prop_assert!(meet(&a, &a_or_b).unwrap().same_as(&a));
        prop_assert!(join(&a, &ab).unwrap().same_as(&a));
        prop_assert!(meet(&a, &a).unwrap().same_as(&a));
        prop_assert!(join(&a, &Subspace::zero(d)).unwrap().same_as(&a));
    }

    #[test]
    fn orthocomplement_laws(seed in any::<u64>(), d in 1usize..=8, commuting in any::<bool>()) {
        let (a, b, _) = triple(seed, d, commuting);
        let ac = orthocomplement(&a);
        prop_assert_eq!(ac.dimension(), d - a.dimension());
        for u in ac.basis() {
            prop_assert!(a.residual(u) >= 1.0 - 1e-9);
        }
        prop_assert!(orthocomplement(&ac).same_as(&a));
        prop_assert!(commutes(&a, &ac).unwrap());
        let lhs = orthocomplement(&join(&a, &b).unwrap());
        let rhs = meet(&ac, &orthocomplement(&b)).unwrap();
        prop_assert!(lhs.same_as(&rhs));
        let lhs = orthocomplement(&meet(&a, &b).unwrap());
        let rhs = join(&ac, &orthocomplement(&b)).unwrap();
        prop_assert!(lhs.same_as(&rhs));
    }

    #[test]
    fn commuting_pairs_obey_projector_algebra(seed in any::<u64>(), d in 1usize..=8) {
        let (a, b, _) = triple(seed, d, true);
        prop_assert!(commutes(&a, &b).unwrap());
        let m = meet(&a, &b).unwrap();
        let j = join(&a, &b).unwrap();
        prop_assert_eq!(m.dimension() + j.dimension(), a.dimension() + b.dimension());
        let (pa, pb, pm) = (a.projector(), b.projector(), m.projector());
        let prod = pa.matrix() * pb.matrix();
        prop_assert!(max_entry(&(&prod - pm.matrix())) <= TOLERANCE);
        for p in [&pa, &pb, &pm, &j.projector()] {
            prop_assert!(p.idempotence_defect() <= TOLERANCE);
            prop_assert!(p.hermiticity_defect() <= TOLERANCE);
        }
        prop_assert!((pm.trace() - m.dimension() as f64).abs() <= TOLERANCE);
    }
}
