//! Finite posets over dense element ids, their ideals, and chain decompositions.
//!
//! Elements are `0..len`. A [`Poset`] is built from any acyclic precedence
//! relation; the transitive reduction (the Hasse diagram) is recomputed on
//! construction, so redundant input pairs are accepted and dropped.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::cmp::Reverse;

use fixedbitset::FixedBitSet;

use crate::error::{contract, input, Error, Result};
use crate::lattice::SolutionVector;

/// Default upper bound on the number of ideals `enumerate_ideals` will materialise.
pub const DEFAULT_IDEAL_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    len: usize,
    hasse: Vec<(usize, usize)>,
    // strict predecessors / successors of each element
    below: Vec<FixedBitSet>,
    above: Vec<FixedBitSet>,
    topo: Vec<usize>,
}

impl Poset {
    /// Builds a poset from pairs `(lower, upper)`. The relation must be acyclic;
    /// it need not be transitively reduced.
    pub fn new(len: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); len];
        let mut indegree = vec![0usize; len];
        let mut succs: Vec<Vec<usize>> = vec![Vec::new(); len];
        for (lo, hi) in relations {
            if lo >= len || hi >= len {
                return input(format!("relation ({lo}, {hi}) references an element outside 0..{len}"));
            }
            if lo == hi {
                return input(format!("element {lo} is related to itself"));
            }
            preds[hi].push(lo);
            succs[lo].push(hi);
            indegree[hi] += 1;
        }

        // Kahn's algorithm, smallest id first for a deterministic linear extension.
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..len).filter(|&v| indegree[v] == 0).map(Reverse).collect();
        let mut topo = Vec::with_capacity(len);
        while let Some(Reverse(v)) = heap.pop() {
            topo.push(v);
            for &w in &succs[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        if topo.len() != len {
            return input("precedence relation contains a cycle");
        }

        let mut below = vec![FixedBitSet::with_capacity(len); len];
        for &v in &topo {
            let mut acc = FixedBitSet::with_capacity(len);
            for &u in &preds[v] {
                acc.union_with(&below[u]);
                acc.insert(u);
            }
            below[v] = acc;
        }
        let mut above = vec![FixedBitSet::with_capacity(len); len];
        for (v, b) in below.iter().enumerate() {
            for u in b.ones() {
                above[u].insert(v);
            }
        }

        let mut hasse = Vec::new();
        for v in 0..len {
            let mut implied = FixedBitSet::with_capacity(len);
            for u in below[v].ones() {
                implied.union_with(&below[u]);
            }
            for u in below[v].difference(&implied) {
                hasse.push((u, v));
            }
        }
        hasse.sort_unstable();

        Ok(Poset { len, hasse, below, above, topo })
    }

    pub fn antichain(len: usize) -> Self {
        Self::new(len, std::iter::empty()).expect("an antichain is always a poset")
    }

    pub fn chain(len: usize) -> Self {
        Self::new(len, (1..len).map(|i| (i - 1, i))).expect("a chain is always a poset")
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Covering pairs `(lower, upper)`, sorted.
    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    /// A linear extension of the order (smallest id first among available elements).
    pub fn linear_extension(&self) -> &[usize] {
        &self.topo
    }

    /// `u ⪯ v`.
    pub fn leq(&self, u: usize, v: usize) -> bool {
        u == v || self.below[v].contains(u)
    }

    /// `u ≺ v`.
    pub fn lt(&self, u: usize, v: usize) -> bool {
        self.below[v].contains(u)
    }

    pub fn strictly_below(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[v].ones()
    }

    pub fn strictly_above(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.above[v].ones()
    }

    fn check_ids(&self, members: &[usize]) -> Result<FixedBitSet> {
        let mut bits = FixedBitSet::with_capacity(self.len);
        for &m in members {
            if m >= self.len {
                return input(format!("element {m} is not in a poset of {} elements", self.len));
            }
            bits.insert(m);
        }
        Ok(bits)
    }

    pub(crate) fn is_down_closed(&self, bits: &FixedBitSet) -> bool {
        bits.ones().all(|u| self.below[u].is_subset(bits))
    }

    pub(crate) fn closure_bits(&self, bits: &FixedBitSet) -> FixedBitSet {
        let mut out = bits.clone();
        for u in bits.ones() {
            out.union_with(&self.below[u]);
        }
        out
    }

    /// True iff `members` is down-closed.
    pub fn is_ideal(&self, members: &[usize]) -> Result<bool> {
        let bits = self.check_ids(members)?;
        Ok(self.is_down_closed(&bits))
    }

    /// Smallest ideal containing `members`.
    pub fn down_closure(&self, members: &[usize]) -> Result<Ideal> {
        let bits = self.check_ids(members)?;
        Ok(Ideal { members: self.closure_bits(&bits) })
    }

    /// Wraps `members` as an [`Ideal`], failing if the set is not down-closed.
    pub fn ideal(&self, members: &[usize]) -> Result<Ideal> {
        let bits = self.check_ids(members)?;
        if !self.is_down_closed(&bits) {
            return contract(format!("{members:?} is not an ideal"));
        }
        Ok(Ideal { members: bits })
    }

    pub fn empty_ideal(&self) -> Ideal {
        Ideal { members: FixedBitSet::with_capacity(self.len) }
    }

    pub fn full_ideal(&self) -> Ideal {
        let mut members = FixedBitSet::with_capacity(self.len);
        members.insert_range(..);
        Ideal { members }
    }

    /// The principal ideal `↓v`.
    pub fn principal_ideal(&self, v: usize) -> Ideal {
        let mut members = self.below[v].clone();
        members.insert(v);
        Ideal { members }
    }

    /// Checks that `ideal` was built for a poset of this size and is down-closed here.
    pub fn validate_ideal(&self, ideal: &Ideal) -> Result<()> {
        if ideal.members.len() != self.len {
            return contract(format!(
                "ideal over {} elements used with a poset of {} elements",
                ideal.members.len(),
                self.len
            ));
        }
        if !self.is_down_closed(&ideal.members) {
            return contract("set is not down-closed in this poset");
        }
        Ok(())
    }

    /// All ideals, depth-first along the linear extension (the empty ideal comes first).
    /// Fails with a resource error once more than `cap` ideals have been produced.
    pub fn enumerate_ideals(&self, cap: usize) -> Result<Vec<Ideal>> {
        let mut out = Vec::new();
        let mut current = FixedBitSet::with_capacity(self.len);
        let mut count = 0;
        self.expand(0, &mut current, cap, &mut count, &mut |bits| {
            out.push(Ideal { members: bits.clone() })
        })?;
        Ok(out)
    }

    /// Counts ideals, stopping early: returns `limit + 1` if there are more than `limit`.
    pub fn count_ideals_up_to(&self, limit: usize) -> usize {
        let mut count = 0usize;
        let mut current = FixedBitSet::with_capacity(self.len);
        match self.expand(0, &mut current, limit, &mut count, &mut |_| {}) {
            Ok(()) => count,
            Err(_) => limit + 1,
        }
    }

    fn expand(
        &self,
        depth: usize,
        current: &mut FixedBitSet,
        cap: usize,
        count: &mut usize,
        emit: &mut dyn FnMut(&FixedBitSet),
    ) -> Result<()> {
        if depth == self.len {
            *count += 1;
            if *count > cap {
                return Err(Error::Resource(format!("poset has more than {cap} ideals")));
            }
            emit(current);
            return Ok(());
        }
        let v = self.topo[depth];
        self.expand(depth + 1, current, cap, count, emit)?;
        if self.below[v].is_subset(current) {
            current.insert(v);
            let res = self.expand(depth + 1, current, cap, count, emit);
            current.set(v, false);
            res?;
        }
        Ok(())
    }

    /// The subposet induced by `keep`. Element `i` of the result is `keep_sorted[i]`
    /// of `self`; the returned vector is that mapping.
    pub fn induced_subposet(&self, keep: &[usize]) -> Result<(Poset, Vec<usize>)> {
        let bits = self.check_ids(keep)?;
        let ids: Vec<usize> = bits.ones().collect();
        let mut pairs = Vec::new();
        for (i, &u) in ids.iter().enumerate() {
            for (j, &v) in ids.iter().enumerate() {
                if self.lt(u, v) {
                    pairs.push((i, j));
                }
            }
        }
        Ok((Poset::new(ids.len(), pairs)?, ids))
    }
}

/// A down-closed set of elements of some [`Poset`]. Compared by content.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    members: FixedBitSet,
}

impl Ideal {
    pub(crate) fn from_bits(members: FixedBitSet) -> Self {
        Ideal { members }
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    /// Size of the host poset.
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &Ideal) -> Ideal {
        let mut members = self.members.clone();
        members.union_with(&other.members);
        Ideal { members }
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ideal { members }
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(&self, other: &Ideal) -> Ordering {
        self.members.ones().cmp(other.members.ones())
    }
}

/// Partition of a ground set `0..n` into `r` chains. Every feasible solution
/// picks exactly one element per chain, so a solution is a vector of ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    chains: Vec<Vec<usize>>,
    position: Vec<(usize, usize)>,
}

impl ChainDecomposition {
    /// `chains[l]` lists the ground elements of chain `l` from bottom to top.
    pub fn new(ground_size: usize, chains: Vec<Vec<usize>>) -> Result<Self> {
        let mut position = vec![(usize::MAX, usize::MAX); ground_size];
        for (l, chain) in chains.iter().enumerate() {
            if chain.is_empty() {
                return input(format!("chain {l} is empty"));
            }
            for (rank, &e) in chain.iter().enumerate() {
                if e >= ground_size {
                    return input(format!("chain element {e} is outside the ground set 0..{ground_size}"));
                }
                if position[e].0 != usize::MAX {
                    return input(format!("element {e} appears in more than one chain position"));
                }
                position[e] = (l, rank);
            }
        }
        if let Some(e) = position.iter().position(|p| p.0 == usize::MAX) {
            return input(format!("element {e} is not covered by any chain"));
        }
        Ok(ChainDecomposition { chains, position })
    }

    /// Number of chains, `r`.
    pub fn chain_count(&self) -> usize {
        self.chains.len()
    }

    /// Size of the ground set, `n`.
    pub fn ground_size(&self) -> usize {
        self.position.len()
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn chain(&self, l: usize) -> &[usize] {
        &self.chains[l]
    }

    pub fn element(&self, chain: usize, rank: usize) -> usize {
        self.chains[chain][rank]
    }

    /// `(chain, rank)` of a ground element.
    pub fn position(&self, e: usize) -> (usize, usize) {
        self.position[e]
    }

    /// Checks a rank vector against the chain lengths.
    pub fn validate(&self, x: &SolutionVector) -> Result<()> {
        if x.len() != self.chains.len() {
            return input(format!("solution has {} components, expected {}", x.len(), self.chains.len()));
        }
        for (l, &rank) in x.ranks().iter().enumerate() {
            if rank >= self.chains[l].len() {
                return input(format!("rank {rank} out of range for chain {l}"));
            }
        }
        Ok(())
    }

    /// Ground elements of a solution, one per chain, sorted.
    pub fn elements_of(&self, x: &SolutionVector) -> Vec<usize> {
        let mut out: Vec<usize> =
            x.ranks().iter().enumerate().map(|(l, &rank)| self.chains[l][rank]).collect();
        out.sort_unstable();
        out
    }

    /// Inverse of [`elements_of`](Self::elements_of): fails unless `elements` hits every chain exactly once.
    pub fn vector_from_elements(&self, elements: &[usize]) -> Result<SolutionVector> {
        let mut ranks = vec![usize::MAX; self.chains.len()];
        for &e in elements {
            if e >= self.position.len() {
                return input(format!("element {e} is outside the ground set"));
            }
            let (l, rank) = self.position[e];
            if ranks[l] != usize::MAX {
                return Err(Error::Input(format!("two elements on chain {l}")));
            }
            ranks[l] = rank;
        }
        if let Some(l) = ranks.iter().position(|&r| r == usize::MAX) {
            return input(format!("no element on chain {l}"));
        }
        Ok(SolutionVector::new(ranks))
    }

    /// The ground set as a disjoint union of chains.
    pub fn as_poset(&self) -> Poset {
        let pairs = self.chains.iter().flat_map(|c| c.windows(2).map(|w| (w[0], w[1])));
        Poset::new(self.position.len(), pairs).expect("disjoint chains form a poset")
    }
}
