//! Exhaustive reference answers for small instances. Nothing here uses the
//! lattice machinery: cuts come from vertex subsets, matchings from
//! permutations, and optima from full enumeration.

use std::fmt;

use itertools::Itertools;

use crate::diversity::{Measure, MeasureKind};
use crate::disjoint::DisjointOracles;
use crate::error::{contract, Error, Result};
use crate::lattice::SolutionVector;
use crate::matching::PreferenceProfile;
use crate::mincut::FlowNetwork;
use crate::poset::ChainDecomposition;

pub const MAX_CUT_VERTICES: usize = 12;
pub const MAX_MATCHING_N: usize = 6;
pub const MAX_MULTISETS: u128 = 1_000_000;
pub const MAX_DISJOINT_FAMILY: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    MinCut,
    Matching,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::MinCut => "mincut",
            Problem::Matching => "matching",
        })
    }
}

/// Distinct feasible solutions, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedSolutionSet {
    pub solutions: Vec<SolutionVector>,
    pub source: Problem,
}

/// All minimum cuts as sorted arc-id sets, from every source set `S ∋ s`, `t ∉ S`.
pub fn min_cut_arc_sets(net: &FlowNetwork) -> Result<Vec<Vec<usize>>> {
    let n = net.vertex_count();
    if n > MAX_CUT_VERTICES {
        return Err(Error::Resource(format!("{n} vertices exceed the brute-force limit of {MAX_CUT_VERTICES}")));
    }
    let (s, t) = (net.source(), net.sink());
    let mut best = usize::MAX;
    let mut cuts: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & (1 << s) == 0 || mask & (1 << t) != 0 {
            continue;
        }
        let cut: Vec<usize> = (0..net.arc_count())
            .filter(|&i| {
                let (u, v) = net.arcs()[i];
                mask & (1 << u) != 0 && mask & (1 << v) == 0
            })
            .collect();
        if cut.len() < best {
            best = cut.len();
            cuts.clear();
        }
        if cut.len() == best {
            cuts.push(cut);
        }
    }
    if best == 0 {
        return Err(Error::Infeasible("the sink is not reachable from the source".into()));
    }
    cuts.sort();
    cuts.dedup();
    Ok(cuts)
}

/// Minimum cuts expressed in a chain decomposition of the arcs.
pub fn enumerate_min_cuts(net: &FlowNetwork, decomp: &ChainDecomposition) -> Result<EnumeratedSolutionSet> {
    let mut solutions = min_cut_arc_sets(net)?
        .iter()
        .map(|cut| decomp.vector_from_elements(cut))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Contract(format!("a minimum cut misses the chain structure: {e}")))?;
    solutions.sort_by(|a, b| a.ranks().cmp(b.ranks()));
    Ok(EnumeratedSolutionSet { solutions, source: Problem::MinCut })
}

/// All stable matchings, as A-side ranks, from all `n!` perfect matchings.
pub fn enumerate_stable_matchings(p: &PreferenceProfile) -> Result<EnumeratedSolutionSet> {
    let n = p.n();
    if n > MAX_MATCHING_N {
        return Err(Error::Resource(format!("n = {n} exceeds the brute-force limit of {MAX_MATCHING_N}")));
    }
    let mut solutions = Vec::new();
    for perm in (0..n).permutations(n) {
        let mut b_partner = vec![0; n];
        for (a, &b) in perm.iter().enumerate() {
            b_partner[b] = a;
        }
        let blocked = (0..n).any(|a| {
            (0..n).any(|b| {
                p.a_rank(a, b) < p.a_rank(a, perm[a]) && p.b_rank(b, a) < p.b_rank(b, b_partner[b])
            })
        });
        if !blocked {
            solutions.push(p.vector_from_partners(&perm));
        }
    }
    solutions.sort_by(|a, b| a.ranks().cmp(b.ranks()));
    Ok(EnumeratedSolutionSet { solutions, source: Problem::Matching })
}

fn multiset_count(n: usize, k: usize) -> u128 {
    // C(n + k − 1, k)
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * (n as u128 + i) / (i + 1);
        if c > u64::MAX as u128 {
            break;
        }
    }
    c
}

fn direct_value(
    decomp: &ChainDecomposition,
    kind: MeasureKind,
    values: &[i64],
    sets: &[&Vec<usize>],
) -> i64 {
    match kind {
        MeasureKind::Sum => {
            let mut total = 0;
            for (i, x) in sets.iter().enumerate() {
                for y in &sets[i + 1..] {
                    total += x.iter().filter(|e| !y.contains(e)).count() + y.iter().filter(|e| !x.contains(e)).count();
                }
            }
            total as i64
        }
        MeasureKind::Cov => sets.iter().flat_map(|x| x.iter()).unique().count() as i64,
        MeasureKind::Abs => {
            // pair up the elements of two solutions chain by chain
            let by_chain = |x: &Vec<usize>| {
                let mut v = vec![0i64; decomp.chain_count()];
                for &e in x {
                    v[decomp.position(e).0] = values[e];
                }
                v
            };
            let vecs: Vec<Vec<i64>> = sets.iter().map(|x| by_chain(x)).collect();
            let mut total = 0;
            for (i, x) in vecs.iter().enumerate() {
                for y in &vecs[i + 1..] {
                    total += x.iter().zip(y).map(|(a, b)| (a - b).abs()).sum::<i64>();
                }
            }
            total
        }
    }
}

/// The best k-multiset of `set` under `measure`, by trying all of them.
pub fn best_diverse_multiset(
    set: &EnumeratedSolutionSet,
    decomp: &ChainDecomposition,
    k: usize,
    measure: &Measure,
) -> Result<(Vec<SolutionVector>, i64)> {
    if k == 0 {
        return Err(Error::Input("k must be at least 1".into()));
    }
    let count = multiset_count(set.solutions.len(), k);
    if count > MAX_MULTISETS {
        return Err(Error::Resource(format!("{count} multisets exceed the brute-force limit of {MAX_MULTISETS}")));
    }
    let values = measure.element_values(decomp)?;
    let sets: Vec<Vec<usize>> = set.solutions.iter().map(|x| decomp.elements_of(x)).collect();
    let mut best: Option<(Vec<usize>, i64)> = None;
    for combo in (0..sets.len()).combinations_with_replacement(k) {
        let chosen: Vec<&Vec<usize>> = combo.iter().map(|&i| &sets[i]).collect();
        let v = direct_value(decomp, measure.kind, &values, &chosen);
        if best.as_ref().is_none_or(|(_, b)| v > *b) {
            best = Some((combo, v));
        }
    }
    let (combo, value) = best.ok_or_else(|| Error::Input("no solutions to choose from".into()))?;
    Ok((combo.iter().map(|&i| set.solutions[i].clone()).collect(), value))
}

/// Largest pairwise-disjoint subfamily.
pub fn max_disjoint_bruteforce(set: &EnumeratedSolutionSet, decomp: &ChainDecomposition) -> Result<usize> {
    let m = set.solutions.len();
    if m > MAX_DISJOINT_FAMILY {
        return Err(Error::Resource(format!("{m} solutions exceed the brute-force limit of {MAX_DISJOINT_FAMILY}")));
    }
    let sets: Vec<Vec<usize>> = set.solutions.iter().map(|x| decomp.elements_of(x)).collect();
    let disjoint = |i: usize, j: usize| sets[i].iter().all(|e| !sets[j].contains(e));
    let mut best = 0;
    for mask in 1u32..(1 << m) {
        let members: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) != 0).collect();
        if members.len() > best && members.iter().tuple_combinations().all(|(&i, &j)| disjoint(i, j)) {
            best = members.len();
        }
    }
    Ok(best)
}

/// Reference oracles over a fully enumerated lattice: `o_next_disjoint(X)`
/// materializes the disjoint successors `Γ(X)` and returns their least element.
pub struct ExplicitOracles {
    solutions: Vec<SolutionVector>,
    ground_size: usize,
}

impl ExplicitOracles {
    pub fn new(set: &EnumeratedSolutionSet, ground_size: usize) -> Result<Self> {
        if set.solutions.is_empty() {
            return Err(Error::Input("empty solution set".into()));
        }
        Ok(ExplicitOracles { solutions: set.solutions.clone(), ground_size })
    }

    /// Componentwise minimum of a family; must itself be a member.
    fn least(&self, family: &[&SolutionVector]) -> Result<SolutionVector> {
        let mut lo = family[0].clone();
        for x in &family[1..] {
            lo = lo.meet(x)?;
        }
        if !family.contains(&&lo) {
            return contract(format!("the family has no least element (meet {lo} missing)"));
        }
        Ok(lo)
    }

    /// `Γ(X)`: solutions above `x` sharing no element with it.
    pub fn disjoint_successors(&self, x: &SolutionVector) -> Vec<&SolutionVector> {
        self.solutions.iter().filter(|y| x.precedes(y) && x.is_disjoint(y)).collect()
    }
}

impl DisjointOracles for ExplicitOracles {
    fn o_min(&self) -> Result<SolutionVector> {
        self.least(&self.solutions.iter().collect::<Vec<_>>())
    }

    fn o_max(&self) -> Result<SolutionVector> {
        let mut hi = self.solutions[0].clone();
        for x in &self.solutions[1..] {
            hi = hi.join(x)?;
        }
        if !self.solutions.contains(&hi) {
            return contract("the solution set has no greatest element");
        }
        Ok(hi)
    }

    fn o_next_disjoint(&self, x: &SolutionVector) -> Result<Option<SolutionVector>> {
        let gamma = self.disjoint_successors(x);
        if gamma.is_empty() {
            return Ok(None);
        }
        self.least(&gamma).map(Some)
    }

    fn ground_size(&self) -> usize {
        self.ground_size
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mincut::{chain_decomposition, max_flow};

    fn diamond() -> FlowNetwork {
        FlowNetwork::new(4, vec![(0, 1), (1, 3), (0, 2), (2, 3)], 0, 3).unwrap()
    }

    fn path3() -> FlowNetwork {
        FlowNetwork::new(4, vec![(0, 1), (1, 2), (2, 3)], 0, 3).unwrap()
    }

    fn cut_set(net: &FlowNetwork) -> (EnumeratedSolutionSet, ChainDecomposition) {
        let d = chain_decomposition(net, &max_flow(net).unwrap());
        (enumerate_min_cuts(net, &d).unwrap(), d)
    }

    #[test]
    fn min_cut_counts() {
        assert_eq!(min_cut_arc_sets(&diamond()).unwrap().len(), 4);
        assert_eq!(min_cut_arc_sets(&FlowNetwork::new(2, vec![(0, 1)], 0, 1).unwrap()).unwrap().len(), 1);
        assert_eq!(min_cut_arc_sets(&path3()).unwrap(), vec![vec![0], vec![1], vec![2]]);
        let big = FlowNetwork::new(13, vec![(0, 12)], 0, 12).unwrap();
        assert!(matches!(min_cut_arc_sets(&big), Err(Error::Resource(_))));
    }

    #[test]
    fn stable_matching_counts() {
        let one = PreferenceProfile::new(vec![vec![0]], vec![vec![0]]).unwrap();
        assert_eq!(enumerate_stable_matchings(&one).unwrap().solutions.len(), 1);
        let two = PreferenceProfile::new(vec![vec![0, 1], vec![1, 0]], vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(enumerate_stable_matchings(&two).unwrap().solutions.len(), 2);
    }

    #[test]
    fn best_multiset_examples() {
        let (set, d) = cut_set(&diamond());
        assert_eq!(best_diverse_multiset(&set, &d, 1, &Measure::sum()).unwrap().1, 0);
        assert_eq!(best_diverse_multiset(&set, &d, 2, &Measure::sum()).unwrap().1, 4);
        assert_eq!(best_diverse_multiset(&set, &d, 2, &Measure::cov()).unwrap().1, 4);
        assert_eq!(best_diverse_multiset(&set, &d, 3, &Measure::sum()).unwrap().1, 8);
    }

    #[test]
    fn disjoint_examples() {
        let (set, d) = cut_set(&path3());
        assert_eq!(max_disjoint_bruteforce(&set, &d).unwrap(), 3);
        let (set, d) = cut_set(&diamond());
        assert_eq!(max_disjoint_bruteforce(&set, &d).unwrap(), 2);
        let single = FlowNetwork::new(2, vec![(0, 1)], 0, 1).unwrap();
        let (set, d) = cut_set(&single);
        assert_eq!(max_disjoint_bruteforce(&set, &d).unwrap(), 1);
    }

    #[test]
    fn explicit_oracles_on_diamond() {
        let (set, d) = cut_set(&diamond());
        let o = ExplicitOracles::new(&set, d.ground_size()).unwrap();
        let lo = o.o_min().unwrap();
        assert_eq!(d.elements_of(&lo), vec![0, 2]);
        let next = o.o_next_disjoint(&lo).unwrap().unwrap();
        assert_eq!(d.elements_of(&next), vec![1, 3]);
        assert_eq!(o.o_next_disjoint(&next).unwrap(), None);
    }
}
