#![allow(dead_code)]

use diverse_lattice::matching::MatchingLattice;
use diverse_lattice::mincut::MinCutLattice;
use diverse_lattice::random::{random_layered_network, random_network, random_profile, random_rich_profile, rng};
use diverse_lattice::{ChainDecomposition, CompactLattice, Ideal, LrTuple, Poset, ProductLattice, SolutionVector};
use rand::Rng;

/// Cycles through uniform networks, uniform profiles, layered networks and
/// profiles with several stable matchings.
pub fn sample_lattice(seed: u64) -> (CompactLattice, ChainDecomposition) {
    let mut r = rng(seed);
    let from_net = |net| {
        let mc = MinCutLattice::build(&net).unwrap();
        (mc.lattice().clone(), mc.decomposition().clone())
    };
    let from_profile = |p| {
        let ml = MatchingLattice::build(&p).unwrap();
        (ml.lattice().clone(), ml.decomposition().clone())
    };
    match seed % 4 {
        0 => from_net(random_network(&mut r)),
        1 => {
            let n = r.random_range(3..=5);
            from_profile(random_profile(&mut r, n))
        }
        2 => from_net(random_layered_network(&mut r)),
        _ => from_profile(random_rich_profile(&mut r, 3..=5, 3)),
    }
}

pub fn random_ideal(p: &Poset, r: &mut impl Rng) -> Ideal {
    let density: f64 = r.random();
    let picks: Vec<usize> = (0..p.len()).filter(|_| r.random_bool(density)).collect();
    p.down_closure(&picks).unwrap()
}

pub fn random_element(l: &CompactLattice, r: &mut impl Rng) -> SolutionVector {
    l.decode(&random_ideal(l.poset(), r)).unwrap()
}

pub fn random_tuple(l: &CompactLattice, k: usize, r: &mut impl Rng) -> Vec<SolutionVector> {
    (0..k).map(|_| random_element(l, r)).collect()
}

pub fn random_lr_tuple(prod: &ProductLattice, r: &mut impl Rng) -> LrTuple {
    prod.decode_tuple(&random_ideal(prod.poset(), r)).unwrap()
}
