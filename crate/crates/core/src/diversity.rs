//! Diversity measures on k-tuples of solutions and their SFM objectives.
//!
//! Every measure is a function of element multiplicities. Maximizing `d_sum`
//! is the same as minimizing `Σ_e C(μ_e, 2)`, maximizing `d_cov` the same as
//! minimizing `Σ_e max(μ_e − 1, 0)`, and `d_abs` is modular on left-right
//! ordered tuples, so all three go through one submodular minimization.

use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error, Result};
use crate::lattice::{build_product_irreducibles, CompactLattice, LrTuple, SolutionVector};
use crate::poset::ChainDecomposition;
use crate::sfm::{self, Solver, SubmodularObjective};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    Sum,
    Cov,
    Abs,
}

impl MeasureKind {
    pub fn name(self) -> &'static str {
        match self {
            MeasureKind::Sum => "sum",
            MeasureKind::Cov => "cov",
            MeasureKind::Abs => "abs",
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum" => Ok(MeasureKind::Sum),
            "cov" => Ok(MeasureKind::Cov),
            "abs" => Ok(MeasureKind::Abs),
            _ => Err(Error::Config(format!("unknown measure '{s}' (expected sum, cov or abs)"))),
        }
    }
}

/// A diversity measure. `values` (one integer per ground element) is only
/// read by `abs`; without it the chain rank of an element is its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measure {
    pub kind: MeasureKind,
    pub values: Option<Vec<i64>>,
}

impl Measure {
    pub fn sum() -> Self {
        Measure { kind: MeasureKind::Sum, values: None }
    }

    pub fn cov() -> Self {
        Measure { kind: MeasureKind::Cov, values: None }
    }

    pub fn abs(values: Option<Vec<i64>>) -> Self {
        Measure { kind: MeasureKind::Abs, values }
    }

    /// Values used by `abs`: the supplied ones or the chain ranks.
    pub fn element_values(&self, decomp: &ChainDecomposition) -> Result<Vec<i64>> {
        match &self.values {
            Some(v) if v.len() != decomp.ground_size() => Err(Error::Config(format!(
                "{} element values for a ground set of {}",
                v.len(),
                decomp.ground_size()
            ))),
            Some(v) => Ok(v.clone()),
            None => Ok(rank_values(decomp)),
        }
    }

    /// The measure itself (larger is more diverse).
    pub fn diversity(&self, decomp: &ChainDecomposition, tuple: &[SolutionVector]) -> Result<i64> {
        check(decomp, tuple)?;
        Ok(match self.kind {
            MeasureKind::Sum => d_sum(decomp, tuple) as i64,
            MeasureKind::Cov => d_cov(decomp, tuple) as i64,
            MeasureKind::Abs => d_abs(decomp, tuple, &self.element_values(decomp)?)?,
        })
    }

    /// The quantity minimized by SFM: `dhat_sum`, `dhat_cov` or `−d_abs`.
    pub fn objective(&self, decomp: &ChainDecomposition, tuple: &[SolutionVector]) -> Result<i64> {
        check(decomp, tuple)?;
        Ok(match self.kind {
            MeasureKind::Sum => dhat_sum(decomp, tuple) as i64,
            MeasureKind::Cov => dhat_cov(decomp, tuple) as i64,
            MeasureKind::Abs => -d_abs(decomp, tuple, &self.element_values(decomp)?)?,
        })
    }
}

pub fn rank_values(decomp: &ChainDecomposition) -> Vec<i64> {
    (0..decomp.ground_size()).map(|e| decomp.position(e).1 as i64).collect()
}

fn check(decomp: &ChainDecomposition, tuple: &[SolutionVector]) -> Result<()> {
    if tuple.is_empty() {
        return input("a tuple needs at least one solution");
    }
    tuple.iter().try_for_each(|x| decomp.validate(x))
}

/// Per-element counts `μ_e(C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    counts: Vec<usize>,
}

impl MultiplicityProfile {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn get(&self, e: usize) -> usize {
        self.counts[e]
    }

    /// `E(C)`: elements used at least once.
    pub fn support(&self) -> usize {
        self.counts.iter().filter(|&&c| c >= 1).count()
    }

    /// `E_shr(C)`: elements used at least twice.
    pub fn shared(&self) -> usize {
        self.counts.iter().filter(|&&c| c >= 2).count()
    }
}

pub fn multiplicity(decomp: &ChainDecomposition, tuple: &[SolutionVector]) -> MultiplicityProfile {
    let mut counts = vec![0; decomp.ground_size()];
    for x in tuple {
        for (l, &rank) in x.ranks().iter().enumerate() {
            counts[decomp.element(l, rank)] += 1;
        }
    }
    MultiplicityProfile { counts }
}

fn choose2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Sum of pairwise Hamming distances `|X_i Δ X_j|` over `i < j`.
pub fn d_sum(decomp: &ChainDecomposition, tuple: &[SolutionVector]) -> usize {
    let sets: Vec<Vec<usize>> = tuple.iter().map(|x| decomp.elements_of(x)).collect();
    let mut total = 0;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            total += symmetric_difference(&sets[i], &sets[j]);
        }
    }
    total
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    a.len() + b.len() - 2 * common
}

/// `2·[r·C(k,2) − Σ_e C(μ_e,2)]`.
pub fn d_sum_via_multiplicity(decomp: &ChainDecomposition, tuple: &[SolutionVector]) -> usize {
    2 * (decomp.chain_count() * choose2(tuple.len()) - dhat_sum(decomp, tuple))
}

/// `Σ_e C(μ_e, 2)`.
pub fn dhat_sum(decomp: &ChainDecomposition, tuple: &[SolutionVector]) -> usize {
    multiplicity(decomp, tuple).counts.iter().map(|&m| choose2(m)).sum()
}

/// Number of distinct elements used, `|⋃ X_i|`.
pub fn d_cov(decomp: &ChainDecomposition, tuple: &[SolutionVector]) -> usize {
    let mut all: Vec<usize> = tuple.iter().flat_map(|x| decomp.elements_of(x)).collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// `Σ_{μ_e ≥ 2} (μ_e − 1)`, so that `d_cov = k·r − dhat_cov`.
pub fn dhat_cov(decomp: &ChainDecomposition, tuple: &[SolutionVector]) -> usize {
    multiplicity(decomp, tuple).counts.iter().map(|&m| m.saturating_sub(1)).sum()
}

/// `Σ_{i<j} Σ_ℓ |v(x_i(ℓ)) − v(x_j(ℓ))|` with one value per ground element.
pub fn d_abs(decomp: &ChainDecomposition, tuple: &[SolutionVector], values: &[i64]) -> Result<i64> {
    if values.len() != decomp.ground_size() {
        return Err(Error::Config(format!(
            "{} element values for a ground set of {}",
            values.len(),
            decomp.ground_size()
        )));
    }
    let value = |x: &SolutionVector, l: usize| values[decomp.element(l, x.ranks()[l])];
    let mut total = 0i64;
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            for l in 0..decomp.chain_count() {
                total += (value(&tuple[i], l) - value(&tuple[j], l)).abs();
            }
        }
    }
    Ok(total)
}

/// Result of [`maximize_diversity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiverseSolutions {
    pub solutions: LrTuple,
    pub diversity: i64,
    /// `|J(L*)|`.
    pub num_irreducibles: usize,
    pub solver: Solver,
}

/// Ranks of chain `l` that some lattice element takes.
fn reachable_ranks(lattice: &CompactLattice, l: usize) -> Vec<usize> {
    let mut ranks: Vec<usize> =
        std::iter::once(lattice.bottom()).chain(lattice.irreducibles()).map(|x| x.ranks()[l]).collect();
    ranks.sort_unstable();
    ranks.dedup();
    ranks
}

/// Finds a k-multiset of lattice elements maximizing `measure`, as a
/// left-right ordered tuple, by minimizing the measure's objective over the
/// ideals of `J(L*)`.
pub fn maximize_diversity(
    lattice: &CompactLattice,
    decomp: &ChainDecomposition,
    k: usize,
    measure: &Measure,
    solver: Solver,
) -> Result<DiverseSolutions> {
    if lattice.width() != decomp.chain_count() {
        return input("lattice and chain decomposition disagree on the number of chains");
    }
    let product = build_product_irreducibles(lattice, k)?;
    let r = decomp.chain_count() as i64;
    let pairs = (k * k.saturating_sub(1) / 2) as i64;
    let values = measure.element_values(decomp)?;
    let (lower, upper) = match measure.kind {
        MeasureKind::Sum => (0, r * pairs),
        MeasureKind::Cov => (0, r * (k as i64 - 1)),
        MeasureKind::Abs => {
            let mut span = 0;
            for l in 0..decomp.chain_count() {
                let vs: Vec<i64> = reachable_ranks(lattice, l).iter().map(|&q| values[decomp.element(l, q)]).collect();
                if vs.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::Config(format!("element values must increase along chain {l}")));
                }
                span += vs[vs.len() - 1] - vs[0];
            }
            (-pairs * span, 0)
        }
    };
    let measure = Measure { kind: measure.kind, values: Some(values) };
    let objective = SubmodularObjective::new(product.poset().clone(), lower, upper, |ideal| {
        let tuple = product.decode_unchecked(ideal);
        measure.objective(decomp, tuple.solutions()).expect("decoded tuples are valid")
    })?;
    let min = sfm::minimize(&objective, solver)?;
    let solutions = product.decode_tuple(&min.ideal)?;
    let diversity = measure.diversity(decomp, solutions.solutions())?;
    Ok(DiverseSolutions { solutions, diversity, num_irreducibles: product.irreducible_count(), solver: min.solver })
}
