//! Seeded instance generators for tests and the self-test command.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matching::PreferenceProfile;
use crate::mincut::FlowNetwork;
use crate::poset::{Ideal, Poset};
use crate::sfm::SubmodularObjective;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// 4–8 vertices, 6–16 arcs (no loops, parallel arcs allowed), `s = 0`,
/// `t = n − 1`, resampled until `t` is reachable from `s`.
pub fn random_network(rng: &mut impl Rng) -> FlowNetwork {
    loop {
        let n = rng.random_range(4..=8);
        let m = rng.random_range(6..=16);
        let arcs = (0..m)
            .map(|_| {
                let u = rng.random_range(0..n);
                let v = (u + rng.random_range(1..n)) % n;
                (u, v)
            })
            .collect();
        let net = FlowNetwork::new(n, arcs, 0, n - 1).expect("endpoints in range");
        if net.connected_without(&[]) {
            return net;
        }
    }
}

/// Hubs `s = 0, 1, …, L = t` joined by two routes per stage, each a direct arc or a
/// detour through a fresh vertex, plus a few backward arcs. Every stage is a
/// minimum cut candidate, so these networks have many minimum cuts. At most
/// 12 vertices.
pub fn random_layered_network(rng: &mut impl Rng) -> FlowNetwork {
    let stages = rng.random_range(2..=4);
    let mut arcs = Vec::new();
    let mut next = stages + 1;
    for i in 0..stages {
        for _ in 0..2 {
            if next < 12 && rng.random_bool(0.6) {
                arcs.push((i, next));
                arcs.push((next, i + 1));
                next += 1;
            } else {
                arcs.push((i, i + 1));
            }
        }
    }
    for _ in 0..rng.random_range(0..=2) {
        let v = rng.random_range(1..next);
        let u = rng.random_range(0..v);
        arcs.push((v, u));
    }
    // relabel so the sink is the last vertex
    let t = stages;
    let relabel = |v: usize| match v {
        v if v == t => next - 1,
        v if v == next - 1 => t,
        v => v,
    };
    let arcs = arcs.into_iter().map(|(u, v)| (relabel(u), relabel(v))).collect();
    FlowNetwork::new(next, arcs, 0, next - 1).expect("endpoints in range")
}

/// Uniformly random complete preferences on `n + n` vertices.
pub fn random_profile(rng: &mut impl Rng, n: usize) -> PreferenceProfile {
    let mut side = || {
        (0..n)
            .map(|_| {
                let mut row: Vec<usize> = (0..n).collect();
                row.shuffle(rng);
                row
            })
            .collect::<Vec<_>>()
    };
    let a = side();
    let b = side();
    PreferenceProfile::new(a, b).expect("rows are permutations")
}

/// A random profile with at least `min_matchings` stable matchings, by
/// rejection; `n` is drawn from `sizes`.
pub fn random_rich_profile(rng: &mut impl Rng, sizes: std::ops::RangeInclusive<usize>, min_matchings: usize) -> PreferenceProfile {
    loop {
        let n = rng.random_range(sizes.clone());
        let p = random_profile(rng, n);
        let count = crate::matching::MatchingLattice::build(&p)
            .map(|ml| ml.lattice().poset().count_ideals_up_to(min_matchings))
            .unwrap_or(0);
        if count >= min_matchings {
            return p;
        }
    }
}

/// A random order on `m` elements: `i < j` is related with probability `density`.
pub fn random_poset(rng: &mut impl Rng, m: usize, density: f64) -> Poset {
    let mut ids: Vec<usize> = (0..m).collect();
    ids.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if rng.random_bool(density) {
                pairs.push((ids[i], ids[j]));
            }
        }
    }
    Poset::new(m, pairs).expect("pairs follow a total order")
}

/// A random submodular set function restricted to the ideals of `host`:
/// a modular part, capped-cardinality terms and a directed cut function.
pub fn random_submodular(rng: &mut impl Rng, host: Poset) -> SubmodularObjective<'static> {
    let m = host.len();
    let weights: Vec<i64> = (0..m).map(|_| rng.random_range(-8..=6)).collect();
    let caps: Vec<(Vec<bool>, usize, i64)> = (0..rng.random_range(1..=3))
        .map(|_| {
            let members: Vec<bool> = (0..m).map(|_| rng.random_bool(0.5)).collect();
            (members, rng.random_range(1..=3), rng.random_range(1..=4))
        })
        .collect();
    let edges: Vec<(usize, usize, i64)> = if m < 2 {
        Vec::new()
    } else {
        (0..rng.random_range(0..=2 * m))
            .map(|_| (rng.random_range(0..m), rng.random_range(0..m), rng.random_range(1..=3)))
            .filter(|e| e.0 != e.1)
            .collect()
    };
    let lower = weights.iter().filter(|&&w| w < 0).sum();
    let upper = weights.iter().filter(|&&w| w > 0).sum::<i64>()
        + caps.iter().map(|(s, c, w)| w * (*c).min(s.iter().filter(|&&x| x).count()) as i64).sum::<i64>()
        + edges.iter().map(|e| e.2).sum::<i64>();
    SubmodularObjective::new(host, lower, upper, move |ideal: &Ideal| {
        let modular: i64 = ideal.iter().map(|e| weights[e]).sum();
        let capped: i64 = caps
            .iter()
            .map(|(s, c, w)| w * (*c).min(ideal.iter().filter(|&e| s[e]).count()) as i64)
            .sum();
        let cut: i64 = edges.iter().filter(|e| ideal.contains(e.0) && !ideal.contains(e.1)).map(|e| e.2).sum();
        modular + capped + cut
    })
    .expect("bounds are ordered")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn networks_are_connected_and_sized() {
        let mut r = rng(7);
        for _ in 0..50 {
            let net = random_network(&mut r);
            assert!((4..=8).contains(&net.vertex_count()));
            assert!((6..=16).contains(&net.arc_count()));
            assert!(net.connected_without(&[]));
        }
    }

    #[test]
    fn layered_networks_have_several_cuts() {
        let mut r = rng(5);
        let mut several = 0;
        for _ in 0..50 {
            let net = random_layered_network(&mut r);
            assert!(net.vertex_count() <= 12);
            let mc = crate::mincut::MinCutLattice::build(&net).unwrap();
            assert_eq!(mc.lambda(), 2);
            several += usize::from(mc.lattice().poset().count_ideals_up_to(3) >= 3);
        }
        assert!(several >= 45, "{several}");
    }

    #[test]
    fn same_seed_same_instance() {
        assert_eq!(random_network(&mut rng(3)), random_network(&mut rng(3)));
        assert_eq!(random_profile(&mut rng(3), 4), random_profile(&mut rng(3), 4));
    }

    #[test]
    fn random_objectives_are_submodular_and_bounded() {
        let mut r = rng(11);
        for _ in 0..20 {
            let host = random_poset(&mut r, 8, 0.2);
            let obj = random_submodular(&mut r, host);
            assert!(obj.verify_submodular_sample(200, 5));
            for ideal in obj.host().enumerate_ideals(1 << 8).unwrap() {
                let v = obj.evaluate(&ideal);
                assert!(obj.lower_bound() <= v && v <= obj.upper_bound());
            }
        }
    }
}
