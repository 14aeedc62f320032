mod common;

use common::*;
use diverse_lattice::diversity::{
    d_abs, d_cov, d_sum, d_sum_via_multiplicity, dhat_cov, dhat_sum, multiplicity, rank_values,
};
use diverse_lattice::lattice::{build_product_irreducibles, lro};
use diverse_lattice::random::rng;
use diverse_lattice::{LrTuple, Measure};
use proptest::prelude::*;

// Hamming distance computed straight from element sets.
fn pairwise_hamming(sets: &[Vec<usize>]) -> usize {
    let mut total = 0;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            total += sets[i].iter().filter(|e| !sets[j].contains(e)).count();
            total += sets[j].iter().filter(|e| !sets[i].contains(e)).count();
        }
    }
    total
}

fn join_meet(c: &LrTuple, d: &LrTuple) -> (LrTuple, LrTuple) {
    (c.join(d).unwrap(), c.meet(d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn multiplicity_is_modular_and_bounded(seed in any::<u64>(), k in 1usize..5) {
        let (l, d) = sample_lattice(seed);
        let prod = build_product_irreducibles(&l, k).unwrap();
        let mut r = rng(seed ^ 10);
        for _ in 0..10 {
            let (c, e) = (random_lr_tuple(&prod, &mut r), random_lr_tuple(&prod, &mut r));
            let (j, m) = join_meet(&c, &e);
            let (mc, me) = (multiplicity(&d, c.solutions()), multiplicity(&d, e.solutions()));
            let (mj, mm) = (multiplicity(&d, j.solutions()), multiplicity(&d, m.solutions()));
            for x in 0..d.ground_size() {
                prop_assert_eq!(mj.get(x) + mm.get(x), mc.get(x) + me.get(x));
                prop_assert!(mc.get(x) <= k);
                prop_assert!(mj.get(x).max(mm.get(x)) <= mc.get(x).max(me.get(x)));
            }
            prop_assert!(mj.support() + mm.support() >= mc.support() + me.support());
            // each solution holds exactly one element per chain
            prop_assert_eq!(mc.counts().iter().sum::<usize>(), k * d.chain_count());
        }
    }

    #[test]
    fn objectives_are_submodular_on_lr_tuples(seed in any::<u64>(), k in 2usize..5) {
        let (l, d) = sample_lattice(seed);
        let prod = build_product_irreducibles(&l, k).unwrap();
        let values = rank_values(&d);
        let mut r = rng(seed ^ 11);
        for _ in 0..10 {
            let (c, e) = (random_lr_tuple(&prod, &mut r), random_lr_tuple(&prod, &mut r));
            let (j, m) = join_meet(&c, &e);
            let f = |t: &LrTuple| dhat_sum(&d, t.solutions());
            prop_assert!(f(&j) + f(&m) <= f(&c) + f(&e));
            let g = |t: &LrTuple| dhat_cov(&d, t.solutions());
            prop_assert!(g(&j) + g(&m) <= g(&c) + g(&e));
            let h = |t: &LrTuple| d_abs(&d, t.solutions(), &values).unwrap();
            prop_assert_eq!(h(&j) + h(&m), h(&c) + h(&e));
        }
    }

    #[test]
    fn measures_agree_with_direct_definitions(seed in any::<u64>(), k in 1usize..6) {
        let (l, d) = sample_lattice(seed);
        let mut r = rng(seed ^ 12);
        let rr = d.chain_count();
        for _ in 0..10 {
            let t = random_tuple(&l, k, &mut r);
            let sets: Vec<Vec<usize>> = t.iter().map(|x| d.elements_of(x)).collect();
            prop_assert_eq!(d_sum(&d, &t), pairwise_hamming(&sets));
            prop_assert_eq!(d_sum(&d, &t), d_sum_via_multiplicity(&d, &t));
            prop_assert_eq!(d_sum(&d, &t), 2 * (rr * k * (k - 1) / 2 - dhat_sum(&d, &t)));
            let mut union: Vec<usize> = sets.concat();
            union.sort_unstable();
            union.dedup();
            prop_assert_eq!(d_cov(&d, &t), union.len());
            prop_assert_eq!(d_cov(&d, &t), k * rr - dhat_cov(&d, &t));

            // lro changes nothing any measure can see
            let o = lro(&t).unwrap();
            let o = o.solutions();
            prop_assert_eq!(d_sum(&d, &t), d_sum(&d, o));
            prop_assert_eq!(d_cov(&d, &t), d_cov(&d, o));
            for m in [Measure::sum(), Measure::cov()] {
                prop_assert_eq!(m.objective(&d, &t).unwrap(), m.objective(&d, o).unwrap());
            }
            let abs = Measure::abs(None);
            prop_assert_eq!(abs.diversity(&d, o).unwrap(), -abs.objective(&d, o).unwrap());
        }
    }

    #[test]
    fn d_abs_matches_pairwise_value_gaps(seed in any::<u64>(), k in 1usize..5) {
        let (l, d) = sample_lattice(seed);
        let prod = build_product_irreducibles(&l, k).unwrap();
        let values = rank_values(&d);
        let mut r = rng(seed ^ 13);
        let t = random_lr_tuple(&prod, &mut r);
        let t = t.solutions();
        let mut expected = 0i64;
        for i in 0..k {
            for j in i + 1..k {
                for c in 0..d.chain_count() {
                    let (a, b) = (d.element(c, t[i].ranks()[c]), d.element(c, t[j].ranks()[c]));
                    expected += (values[a] - values[b]).abs();
                }
            }
        }
        prop_assert_eq!(d_abs(&d, t, &values).unwrap(), expected);
    }
}

#[test]
fn objective_cross_check_on_every_ideal() {
    for seed in 0..6 {
        let (l, d) = sample_lattice(seed);
        let prod = build_product_irreducibles(&l, 2).unwrap();
        for ideal in prod.poset().enumerate_ideals(20_000).unwrap() {
            let t = prod.decode_tuple(&ideal).unwrap();
            let t = t.solutions();
            let sets: Vec<Vec<usize>> = t.iter().map(|x| d.elements_of(x)).collect();
            assert_eq!(Measure::sum().diversity(&d, t).unwrap() as usize, pairwise_hamming(&sets));
            assert_eq!(
                Measure::sum().objective(&d, t).unwrap(),
                d.chain_count() as i64 - Measure::sum().diversity(&d, t).unwrap() / 2
            );
        }
    }
}
