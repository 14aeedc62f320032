mod common;

use diverse_lattice::diversity::maximize_diversity;
use diverse_lattice::matching::MatchingLattice;
use diverse_lattice::mincut::{FlowNetwork, MinCutLattice};
use diverse_lattice::random::{random_poset, random_profile, random_submodular, rng};
use diverse_lattice::sfm::{minimize, minimize_exhaustive, minimize_mnp, PenalizedObjective, SubmodularObjective};
use diverse_lattice::{Measure, Poset, Solver};
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn mnp_matches_exhaustive(seed in any::<u64>(), m in 0usize..13, density in 0.0f64..0.4) {
        let mut r = rng(seed);
        let host = random_poset(&mut r, m, density);
        let obj = random_submodular(&mut r, host);
        let ex = minimize_exhaustive(&obj, 1 << 13).unwrap();
        let mnp = minimize_mnp(&obj).unwrap();
        prop_assert_eq!(mnp.value, ex.value);
        prop_assert!(obj.host().validate_ideal(&mnp.ideal).is_ok());
        prop_assert_eq!(obj.evaluate(&mnp.ideal), mnp.value);
        prop_assert_eq!(mnp.solver, Solver::Mnp);
        let auto = minimize(&obj, Solver::Auto).unwrap();
        prop_assert_eq!(auto, ex);
    }

    #[test]
    fn penalized_objective_prefers_closures(seed in any::<u64>(), m in 1usize..10) {
        let mut r = rng(seed);
        let host = random_poset(&mut r, m, 0.3);
        let obj = random_submodular(&mut r, host);
        let g = PenalizedObjective::new(&obj);
        prop_assert!(g.verify_submodular_sample(300, seed));
        for _ in 0..20 {
            let s: Vec<usize> = (0..m).filter(|_| r.random_bool(0.5)).collect();
            let closure = obj.host().down_closure(&s).unwrap().to_vec();
            prop_assert!(g.evaluate(&closure).unwrap() <= g.evaluate(&s).unwrap());
            prop_assert_eq!(g.evaluate(&closure).unwrap(), obj.evaluate(&obj.host().down_closure(&s).unwrap()));
        }
    }
}

#[test]
fn exhaustive_prefers_small_ideals_on_ties() {
    let host = Poset::new(3, [(0, 1)]).unwrap();
    let obj = SubmodularObjective::new(host, 0, 0, |_| 0).unwrap();
    let min = minimize_exhaustive(&obj, 100).unwrap();
    assert!(min.ideal.is_empty());
    assert!(minimize_mnp(&obj).unwrap().ideal.is_empty());
}

#[test]
fn diamond_sum_objective_reaches_zero() {
    let net = FlowNetwork::new(4, vec![(0, 1), (1, 3), (0, 2), (2, 3)], 0, 3).unwrap();
    let mc = MinCutLattice::build(&net).unwrap();
    for solver in [Solver::Exhaustive, Solver::Mnp] {
        let best = maximize_diversity(mc.lattice(), mc.decomposition(), 2, &Measure::sum(), solver).unwrap();
        assert_eq!(best.diversity, 4);
        assert_eq!(Measure::sum().objective(mc.decomposition(), best.solutions.solutions()).unwrap(), 0);
    }
}

#[test]
fn matching_mnp_matches_exhaustive() {
    let mut r = rng(99);
    for _ in 0..15 {
        let ml = MatchingLattice::build(&random_profile(&mut r, 4)).unwrap();
        for measure in [Measure::sum(), Measure::cov(), Measure::abs(None)] {
            let ex = maximize_diversity(ml.lattice(), ml.decomposition(), 3, &measure, Solver::Exhaustive).unwrap();
            let mnp = maximize_diversity(ml.lattice(), ml.decomposition(), 3, &measure, Solver::Mnp).unwrap();
            assert_eq!(ex.diversity, mnp.diversity, "{measure:?}");
        }
    }
}

#[test]
fn mnp_matches_exhaustive_on_larger_hosts() {
    let mut r = rng(2024);
    let mut compared = 0;
    while compared < 25 {
        let m = r.random_range(14..=20);
        let host = random_poset(&mut r, m, 0.15);
        if host.count_ideals_up_to(1 << 15) > 1 << 15 {
            continue;
        }
        let obj = random_submodular(&mut r, host);
        let ex = minimize_exhaustive(&obj, 1 << 15).unwrap();
        let mnp = minimize_mnp(&obj).unwrap();
        assert_eq!(mnp.value, ex.value, "m = {m}");
        compared += 1;
    }
}
