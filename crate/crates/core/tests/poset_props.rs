mod common;

use diverse_lattice::random::{random_poset, rng};
use diverse_lattice::{ChainDecomposition, Poset};
use proptest::prelude::*;
use rand::Rng;

fn subset(m: usize, r: &mut impl Rng) -> Vec<usize> {
    (0..m).filter(|_| r.random_bool(0.4)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn down_closure_distributes_over_union(seed in any::<u64>(), m in 1usize..14) {
        let mut r = rng(seed);
        let p = random_poset(&mut r, m, 0.25);
        let s = subset(m, &mut r);
        let t = subset(m, &mut r);
        let union: Vec<usize> = s.iter().chain(&t).copied().collect();
        let both: Vec<usize> = s.iter().filter(|e| t.contains(e)).copied().collect();
        let (ds, dt) = (p.down_closure(&s).unwrap(), p.down_closure(&t).unwrap());
        prop_assert_eq!(p.down_closure(&union).unwrap(), ds.union(&dt));
        prop_assert!(p.down_closure(&both).unwrap().is_subset(&ds.intersection(&dt)));
        prop_assert!(p.is_ideal(&ds.to_vec()).unwrap());
        prop_assert_eq!(p.down_closure(&ds.to_vec()).unwrap(), ds);
    }

    #[test]
    fn ideals_of_disjoint_chains(lengths in prop::collection::vec(1usize..4, 1..5)) {
        let mut chains = Vec::new();
        let mut next = 0;
        for &len in &lengths {
            chains.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
        let d = ChainDecomposition::new(next, chains).unwrap();
        let expected: usize = lengths.iter().map(|c| c + 1).product();
        prop_assert_eq!(d.as_poset().enumerate_ideals(10_000).unwrap().len(), expected);
    }

    #[test]
    fn enumerated_ideals_are_distinct_ideals(seed in any::<u64>(), m in 0usize..10) {
        let mut r = rng(seed);
        let p = random_poset(&mut r, m, 0.3);
        let ideals = p.enumerate_ideals(1 << 10).unwrap();
        prop_assert_eq!(ideals.len(), p.count_ideals_up_to(1 << 10));
        let mut seen = std::collections::HashSet::new();
        for i in &ideals {
            prop_assert!(p.validate_ideal(i).is_ok());
            prop_assert!(seen.insert(i.clone()));
        }
        // every subset that is down-closed shows up
        let closed = (0u32..1 << m)
            .filter(|mask| p.is_ideal(&(0..m).filter(|&e| mask & (1 << e) != 0).collect::<Vec<_>>()).unwrap())
            .count();
        prop_assert_eq!(closed, ideals.len());
    }

    #[test]
    fn induced_subposet_restricts_order(seed in any::<u64>(), m in 1usize..10) {
        let mut r = rng(seed);
        let p = random_poset(&mut r, m, 0.3);
        let keep = subset(m, &mut r);
        let (sub, ids) = p.induced_subposet(&keep).unwrap();
        for i in 0..sub.len() {
            for j in 0..sub.len() {
                prop_assert_eq!(sub.leq(i, j), p.leq(ids[i], ids[j]));
            }
        }
        for &(u, v) in sub.hasse_edges() {
            prop_assert!(!(0..sub.len()).any(|w| sub.lt(u, w) && sub.lt(w, v)));
        }
    }
}

#[test]
fn small_poset_induced_antichain() {
    let p = Poset::new(3, [(1, 2)]).unwrap();
    let (sub, ids) = p.induced_subposet(&[0, 2]).unwrap();
    assert_eq!(ids, vec![0, 2]);
    assert!(sub.hasse_edges().is_empty());
    let (same, _) = p.induced_subposet(&[0, 1, 2]).unwrap();
    assert_eq!(same, p);
}
