//! Stable matchings of a complete bipartite preference profile as a
//! distributive lattice.
//!
//! Chain `a` is the list of edges `(a, b)` in `a`'s preference order, so a
//! matching is the vector of ranks its A-side vertices get. The A-optimal
//! matching is the bottom. The compact representation is the rotation poset.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::disjoint::DisjointOracles;
use crate::error::{contract, input, Error, Result};
use crate::lattice::{CompactLattice, SolutionVector};
use crate::poset::{ChainDecomposition, Ideal, Poset};

/// Strict complete preferences; vertices are 0-based, most preferred first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreferenceProfile {
    a_prefs: Vec<Vec<usize>>,
    b_prefs: Vec<Vec<usize>>,
    a_rank: Vec<Vec<usize>>,
    b_rank: Vec<Vec<usize>>,
}

fn ranks_of(prefs: &[Vec<usize>], side: &str) -> Result<Vec<Vec<usize>>> {
    let n = prefs.len();
    let mut out = vec![vec![usize::MAX; n]; n];
    for (v, row) in prefs.iter().enumerate() {
        if row.len() != n {
            return input(format!("{side}-side row {} has {} entries, expected {n}", v + 1, row.len()));
        }
        for (r, &u) in row.iter().enumerate() {
            if u >= n || out[v][u] != usize::MAX {
                return input(format!("{side}-side row {} is not a permutation", v + 1));
            }
            out[v][u] = r;
        }
    }
    Ok(out)
}

impl PreferenceProfile {
    pub fn new(a_prefs: Vec<Vec<usize>>, b_prefs: Vec<Vec<usize>>) -> Result<Self> {
        if a_prefs.is_empty() || a_prefs.len() != b_prefs.len() {
            return input("both sides need the same positive number of vertices");
        }
        let a_rank = ranks_of(&a_prefs, "A")?;
        let b_rank = ranks_of(&b_prefs, "B")?;
        Ok(PreferenceProfile { a_prefs, b_prefs, a_rank, b_rank })
    }

    /// Parses `n`, then `n` A-side rows and `n` B-side rows of 1-based ids.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or_default().trim();
            if line.is_empty() {
                continue;
            }
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Input(format!("line {}: bad number '{t}'", no + 1))))
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        let Some((first, rest)) = rows.split_first() else {
            return input("empty preference file");
        };
        if first.len() != 1 || first[0] == 0 {
            return input("first line must hold the positive number of vertices per side");
        }
        let n = first[0];
        if rest.len() != 2 * n {
            return input(format!("expected {} preference rows, found {}", 2 * n, rest.len()));
        }
        let zero_based = |rows: &[Vec<usize>]| -> Result<Vec<Vec<usize>>> {
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| if v == 0 { input("vertex ids are 1-based") } else { Ok(v - 1) })
                        .collect()
                })
                .collect()
        };
        PreferenceProfile::new(zero_based(&rest[..n])?, zero_based(&rest[n..])?)
    }

    pub fn n(&self) -> usize {
        self.a_prefs.len()
    }

    pub fn a_prefs(&self) -> &[Vec<usize>] {
        &self.a_prefs
    }

    pub fn b_prefs(&self) -> &[Vec<usize>] {
        &self.b_prefs
    }

    /// Position of `b` in `a`'s list.
    pub fn a_rank(&self, a: usize, b: usize) -> usize {
        self.a_rank[a][b]
    }

    /// Position of `a` in `b`'s list.
    pub fn b_rank(&self, b: usize, a: usize) -> usize {
        self.b_rank[b][a]
    }

    /// Ground element id of the edge `(a, b)`.
    pub fn edge_id(&self, a: usize, b: usize) -> usize {
        a * self.n() + b
    }

    /// `(a, b)` pairs of a matching given as A-side ranks.
    pub fn pairs(&self, x: &SolutionVector) -> Vec<(usize, usize)> {
        x.ranks().iter().enumerate().map(|(a, &r)| (a, self.a_prefs[a][r])).collect()
    }

    /// A-side ranks of a matching given as `partner[a]`.
    pub fn vector_from_partners(&self, partner: &[usize]) -> SolutionVector {
        SolutionVector::new(partner.iter().enumerate().map(|(a, &b)| self.a_rank[a][b]).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Side::A),
            "b" | "B" => Ok(Side::B),
            _ => Err(Error::Config(format!("unknown side '{s}'"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Side::A { "A" } else { "B" })
    }
}

// Deferred acceptance with `proposers` proposing down their lists; `accept(r, p)`
// is false for pairs removed from the instance. Returns `partner[p]`, or None
// if some proposer runs out of acceptable partners.
fn deferred_acceptance(
    proposers: &[Vec<usize>],
    receiver_rank: &[Vec<usize>],
    accept: impl Fn(usize, usize) -> bool,
    start: &[usize],
) -> Option<Vec<usize>> {
    let n = proposers.len();
    let mut next = start.to_vec();
    let mut held: Vec<Option<usize>> = vec![None; n];
    let mut free: VecDeque<usize> = (0..n).collect();
    while let Some(p) = free.pop_front() {
        loop {
            let r = *proposers[p].get(next[p])?;
            next[p] += 1;
            if !accept(r, p) {
                continue;
            }
            match held[r] {
                None => {
                    held[r] = Some(p);
                    break;
                }
                Some(q) if receiver_rank[r][p] < receiver_rank[r][q] => {
                    held[r] = Some(p);
                    free.push_back(q);
                    break;
                }
                Some(_) => {}
            }
        }
    }
    let mut partner = vec![0; n];
    for (r, p) in held.iter().enumerate() {
        partner[p.expect("every proposer is held")] = r;
    }
    Some(partner)
}

/// The proposing side's optimal stable matching, as A-side ranks.
pub fn gale_shapley(p: &PreferenceProfile, proposing: Side) -> SolutionVector {
    let n = p.n();
    let zeros = vec![0; n];
    match proposing {
        Side::A => {
            let partner = deferred_acceptance(&p.a_prefs, &p.b_rank, |_, _| true, &zeros).expect("complete lists");
            p.vector_from_partners(&partner)
        }
        Side::B => {
            let b_partner = deferred_acceptance(&p.b_prefs, &p.a_rank, |_, _| true, &zeros).expect("complete lists");
            let mut partner = vec![0; n];
            for (b, &a) in b_partner.iter().enumerate() {
                partner[a] = b;
            }
            p.vector_from_partners(&partner)
        }
    }
}

/// Perfect and without a blocking pair.
pub fn is_stable(p: &PreferenceProfile, x: &SolutionVector) -> bool {
    let n = p.n();
    if x.len() != n || x.ranks().iter().any(|&r| r >= n) {
        return false;
    }
    let mut b_partner = vec![usize::MAX; n];
    for (a, b) in p.pairs(x) {
        if b_partner[b] != usize::MAX {
            return false;
        }
        b_partner[b] = a;
    }
    (0..n).all(|a| {
        let mine = x.ranks()[a];
        p.a_prefs[a][..mine].iter().all(|&b| p.b_rank[b][b_partner[b]] < p.b_rank[b][a])
    })
}

/// Chain `a` holds the edges `(a, b)` in `a`'s preference order; edge `(a, b)` has id `a·n + b`.
pub fn chain_decomposition(p: &PreferenceProfile) -> ChainDecomposition {
    let chains = (0..p.n()).map(|a| p.a_prefs[a].iter().map(|&b| p.edge_id(a, b)).collect()).collect();
    ChainDecomposition::new(p.n() * p.n(), chains).expect("rows are permutations")
}

/// Each A-vertex's worse and better partner. Both are stable for stable inputs.
pub fn join_meet_matchings(
    p: &PreferenceProfile,
    x: &SolutionVector,
    y: &SolutionVector,
) -> Result<(SolutionVector, SolutionVector)> {
    if !is_stable(p, x) || !is_stable(p, y) {
        return input("join and meet need two stable matchings");
    }
    let join = x.join(y)?;
    let meet = x.meet(y)?;
    if !is_stable(p, &join) || !is_stable(p, &meet) {
        return contract("join or meet of stable matchings is unstable");
    }
    Ok((join, meet))
}

/// Rotation `i` is a cycle `(a_0, b_0), …, (a_{r−1}, b_{r−1})` of matched
/// pairs; eliminating it gives `a_j` the partner `b_{j+1}`. Rotation ids follow
/// elimination order, which is a linear extension of the precedence poset.
#[derive(Clone, Debug)]
pub struct RotationPoset {
    profile: PreferenceProfile,
    rotations: Vec<Vec<(usize, usize)>>,
    precedence: Poset,
    base: SolutionVector,
}

impl RotationPoset {
    pub fn rotations(&self) -> &[Vec<(usize, usize)>] {
        &self.rotations
    }

    pub fn precedence(&self) -> &Poset {
        &self.precedence
    }

    pub fn base_matching(&self) -> &SolutionVector {
        &self.base
    }

    /// The rotation containing the pair `(a, b)`, if any.
    pub fn rotation_with_pair(&self, a: usize, b: usize) -> Option<usize> {
        self.rotations.iter().position(|rot| rot.contains(&(a, b)))
    }
}

pub fn build_rotation_poset(p: &PreferenceProfile) -> Result<RotationPoset> {
    let n = p.n();
    let base = gale_shapley(p, Side::A);
    let mut partner: Vec<usize> = p.pairs(&base).into_iter().map(|(_, b)| b).collect();
    let mut b_partner = vec![0; n];
    for (a, &b) in partner.iter().enumerate() {
        b_partner[b] = a;
    }
    let top: Vec<usize> = p.pairs(&gale_shapley(p, Side::B)).into_iter().map(|(_, b)| b).collect();
    // s(a): first b after a's partner that prefers a to its own partner. Only
    // vertices short of their B-optimal partner take part; a walk among them
    // never leaves them, so it closes into a rotation.
    let second = |partner: &[usize], b_partner: &[usize], a: usize| {
        if partner[a] == top[a] {
            return None;
        }
        p.a_prefs[a][p.a_rank[a][partner[a]] + 1..]
            .iter()
            .copied()
            .find(|&b| p.b_rank[b][a] < p.b_rank[b][b_partner[b]])
    };

    let mut rotations: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut producer = vec![vec![None; n]; n];
    let mut raiser = vec![vec![None; n]; n];
    let mut pairs = Vec::new();
    while let Some(start) = (0..n).find(|&a| second(&partner, &b_partner, a).is_some()) {
        // walk a -> partner of s(a) until a vertex repeats
        let mut seen = vec![usize::MAX; n];
        let mut walk = Vec::new();
        let mut a = start;
        while seen[a] == usize::MAX {
            seen[a] = walk.len();
            walk.push(a);
            let s = second(&partner, &b_partner, a)
                .ok_or_else(|| Error::Contract("rotation walk reached a finished vertex".into()))?;
            a = b_partner[s];
        }
        let mut cycle = walk[seen[a]..].to_vec();
        let lowest = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
        cycle.rotate_left(lowest);
        let rot: Vec<(usize, usize)> = cycle.iter().map(|&a| (a, partner[a])).collect();
        let id = rotations.len();
        let len = rot.len();
        for i in 0..len {
            let (a, b) = rot[i];
            let b_next = rot[(i + 1) % len].1;
            if let Some(q) = producer[a][b] {
                pairs.push((q, id));
            }
            for &mid in &p.a_prefs[a][p.a_rank[a][b] + 1..p.a_rank[a][b_next]] {
                if let Some(q) = raiser[a][mid] {
                    pairs.push((q, id));
                }
            }
        }
        for i in 0..len {
            let (a, _) = rot[i];
            let (old, b_new) = rot[(i + 1) % len];
            producer[a][b_new] = Some(id);
            // b_new trades `old` for `a`, overtaking everyone it ranks in between
            for &mid in &p.b_prefs[b_new][p.b_rank[b_new][a] + 1..p.b_rank[b_new][old]] {
                raiser[mid][b_new] = Some(id);
            }
        }
        for i in 0..len {
            let (a, _) = rot[i];
            partner[a] = rot[(i + 1) % len].1;
            b_partner[partner[a]] = a;
        }
        rotations.push(rot);
    }
    if partner != top {
        return contract("rotation elimination did not reach the B-optimal matching");
    }
    let precedence = Poset::new(rotations.len(), pairs)?;
    Ok(RotationPoset { profile: p.clone(), rotations, precedence, base })
}

/// Eliminates the rotations of `ideal` from the A-optimal matching.
pub fn decode_matching(rp: &RotationPoset, ideal: &Ideal) -> Result<SolutionVector> {
    rp.precedence.validate_ideal(ideal)?;
    Ok(apply_rotations(rp, ideal.iter()))
}

fn apply_rotations(rp: &RotationPoset, order: impl IntoIterator<Item = usize>) -> SolutionVector {
    let mut ranks = rp.base.ranks().to_vec();
    for id in order {
        let rot = &rp.rotations[id];
        for i in 0..rot.len() {
            let a = rot[i].0;
            ranks[a] = rp.profile.a_rank[a][rot[(i + 1) % rot.len()].1];
        }
    }
    SolutionVector::new(ranks)
}

/// The lattice of stable matchings of one profile.
#[derive(Clone, Debug)]
pub struct MatchingLattice {
    profile: PreferenceProfile,
    decomposition: ChainDecomposition,
    rotations: RotationPoset,
    lattice: CompactLattice,
}

impl MatchingLattice {
    pub fn build(p: &PreferenceProfile) -> Result<Self> {
        let rotations = build_rotation_poset(p)?;
        let irreducibles = (0..rotations.rotations.len())
            .map(|r| decode_matching(&rotations, &rotations.precedence.principal_ideal(r)))
            .collect::<Result<Vec<_>>>()?;
        let lattice = CompactLattice::new(rotations.precedence.clone(), irreducibles, rotations.base.clone())?;
        Ok(MatchingLattice { profile: p.clone(), decomposition: chain_decomposition(p), rotations, lattice })
    }

    pub fn profile(&self) -> &PreferenceProfile {
        &self.profile
    }

    pub fn rotation_poset(&self) -> &RotationPoset {
        &self.rotations
    }

    pub fn lattice(&self) -> &CompactLattice {
        &self.lattice
    }

    pub fn decomposition(&self) -> &ChainDecomposition {
        &self.decomposition
    }

    pub fn oracles(&self) -> MatchingOracles<'_> {
        MatchingOracles { lattice: self }
    }

    /// Least stable matching above `x` in which every A-vertex has a new
    /// partner: `x`'s rotations plus, for each `a`, the rotation that moves `a`
    /// off `x(a)` and everything below it.
    pub fn next_disjoint_by_rotations(&self, x: &SolutionVector) -> Result<Option<SolutionVector>> {
        if !is_stable(&self.profile, x) {
            return input("not a stable matching of this profile");
        }
        let poset = self.lattice.poset();
        let mut members = self.lattice.encode(x)?.to_vec();
        for (a, b) in self.profile.pairs(x) {
            match self.rotations.rotation_with_pair(a, b) {
                Some(r) => members.push(r),
                None => return Ok(None),
            }
        }
        Ok(Some(self.lattice.decode(&poset.down_closure(&members)?)?))
    }

    /// A-optimal stable matching of the profile truncated to strict successors
    /// of `x` on the A side (with the symmetric deletions on the B side), kept
    /// only if it is stable in the original profile.
    ///
    /// Not used by the oracles: the truncated instance's A-optimal matching can
    /// be unstable in the original profile even when a disjoint successor
    /// exists, so this may wrongly report none.
    pub fn next_disjoint_by_truncation(&self, x: &SolutionVector) -> Result<Option<SolutionVector>> {
        let p = &self.profile;
        if !is_stable(p, x) {
            return input("not a stable matching of this profile");
        }
        let start: Vec<usize> = x.ranks().iter().map(|&r| r + 1).collect();
        let allowed = |b: usize, a: usize| p.a_rank[a][b] > x.ranks()[a];
        let Some(partner) = deferred_acceptance(&p.a_prefs, &p.b_rank, allowed, &start) else {
            return Ok(None);
        };
        let y = p.vector_from_partners(&partner);
        Ok(is_stable(p, &y).then_some(y))
    }
}

pub fn diverse_stable_matchings(
    p: &PreferenceProfile,
    k: usize,
    measure: &crate::diversity::Measure,
    solver: crate::sfm::Solver,
) -> Result<crate::diversity::DiverseSolutions> {
    let ml = MatchingLattice::build(p)?;
    crate::diversity::maximize_diversity(ml.lattice(), ml.decomposition(), k, measure, solver)
}

pub struct MatchingOracles<'a> {
    lattice: &'a MatchingLattice,
}

impl DisjointOracles for MatchingOracles<'_> {
    fn o_min(&self) -> Result<SolutionVector> {
        Ok(self.lattice.lattice.bottom().clone())
    }

    fn o_max(&self) -> Result<SolutionVector> {
        Ok(self.lattice.lattice.top().clone())
    }

    fn o_next_disjoint(&self, x: &SolutionVector) -> Result<Option<SolutionVector>> {
        self.lattice.next_disjoint_by_rotations(x)
    }

    fn ground_size(&self) -> usize {
        self.lattice.decomposition.ground_size()
    }
}
