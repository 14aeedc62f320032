//! Distributive lattices of feasible solutions.
//!
//! A feasible solution is a [`SolutionVector`]: one rank per chain of a
//! [`ChainDecomposition`](crate::poset::ChainDecomposition). Join and meet are
//! componentwise max and min. A lattice is handled through its Birkhoff
//! representation, the poset of join-irreducibles ([`CompactLattice`]); the
//! lattice of left-right ordered k-tuples is represented by [`ProductLattice`].

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{contract, input, Result};
use crate::poset::{Ideal, Poset};

/// Ranks of the chosen element on each chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SolutionVector(Vec<usize>);

impl SolutionVector {
    pub fn new(ranks: Vec<usize>) -> Self {
        SolutionVector(ranks)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn same_host(&self, other: &Self) -> Result<()> {
        if self.0.len() != other.0.len() {
            return input(format!(
                "solutions over {} and {} chains cannot be combined",
                self.0.len(),
                other.0.len()
            ));
        }
        Ok(())
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.same_host(other)?;
        Ok(SolutionVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect()))
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.same_host(other)?;
        Ok(SolutionVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect()))
    }

    /// `self ⪯ other` componentwise. Vectors of different length are incomparable.
    pub fn precedes(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Strictly smaller on every chain.
    pub fn strictly_precedes_everywhere(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    /// No shared ground element, i.e. different ranks on every chain.
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a != b)
    }
}

impl PartialOrd for SolutionVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.precedes(other), other.precedes(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for SolutionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// A k-tuple of solutions with `solutions[i] ⪯ solutions[j]` for all `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LrTuple(Vec<SolutionVector>);

impl LrTuple {
    pub fn new(solutions: Vec<SolutionVector>) -> Result<Self> {
        if solutions.is_empty() {
            return input("a tuple needs at least one solution");
        }
        for w in solutions.windows(2) {
            w[0].same_host(&w[1])?;
            if !w[0].precedes(&w[1]) {
                return contract(format!("tuple is not left-right ordered: {} then {}", w[0], w[1]));
            }
        }
        Ok(LrTuple(solutions))
    }

    pub fn solutions(&self) -> &[SolutionVector] {
        &self.0
    }

    pub fn into_solutions(self) -> Vec<SolutionVector> {
        self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Componentwise join in the product order.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, SolutionVector::join)
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, SolutionVector::meet)
    }

    fn zip_with(
        &self,
        other: &Self,
        op: impl Fn(&SolutionVector, &SolutionVector) -> Result<SolutionVector>,
    ) -> Result<Self> {
        if self.k() != other.k() {
            return input(format!("tuples of length {} and {} cannot be combined", self.k(), other.k()));
        }
        let out = self.0.iter().zip(&other.0).map(|(x, y)| op(x, y)).collect::<Result<Vec<_>>>()?;
        Ok(LrTuple(out))
    }
}

/// Rearranges an arbitrary tuple into left-right order by pairwise meet/join
/// exchanges. Element multiplicities are unchanged.
pub fn lro(tuple: &[SolutionVector]) -> Result<LrTuple> {
    let mut xs = tuple.to_vec();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let lo = xs[i].meet(&xs[j])?;
            let hi = xs[i].join(&xs[j])?;
            xs[i] = lo;
            xs[j] = hi;
        }
    }
    LrTuple::new(xs)
}

/// Birkhoff representation of a distributive lattice of solutions: the poset of
/// its join-irreducibles, each tagged with the solution it is, plus the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactLattice {
    poset: Poset,
    irreducibles: Vec<SolutionVector>,
    bottom: SolutionVector,
    top: SolutionVector,
}

impl CompactLattice {
    /// Validates that the poset order matches the componentwise order of the
    /// tagged solutions and that every irreducible lies strictly above `bottom`.
    pub fn new(poset: Poset, irreducibles: Vec<SolutionVector>, bottom: SolutionVector) -> Result<Self> {
        if poset.len() != irreducibles.len() {
            return input(format!(
                "{} irreducible solutions for a poset of {} elements",
                irreducibles.len(),
                poset.len()
            ));
        }
        for (p, x) in irreducibles.iter().enumerate() {
            bottom.same_host(x)?;
            if !bottom.precedes(x) || *x == bottom {
                return contract(format!("irreducible {p} is not strictly above the bottom"));
            }
        }
        for p in 0..poset.len() {
            for q in 0..poset.len() {
                if p != q && poset.leq(p, q) != irreducibles[p].precedes(&irreducibles[q]) {
                    return contract(format!("order between irreducibles {p} and {q} disagrees with their solutions"));
                }
            }
        }
        let mut top = bottom.clone();
        for x in &irreducibles {
            top = top.join(x)?;
        }
        Ok(CompactLattice { poset, irreducibles, bottom, top })
    }

    /// Extracts the join-irreducibles of the image of a join- and
    /// meet-preserving map from the ideals of `source` onto a lattice of
    /// solutions. Every irreducible of the image is the image of some principal
    /// ideal; among those, an image is irreducible iff it differs from the join
    /// of the candidate images strictly below it.
    ///
    /// Returns the lattice and, for each irreducible, the smallest `source`
    /// element whose principal ideal maps to it.
    pub fn from_ideal_map(
        source: &Poset,
        decode: impl Fn(&Ideal) -> Result<SolutionVector>,
    ) -> Result<(Self, Vec<usize>)> {
        let bottom = decode(&source.empty_ideal())?;
        let mut candidates: Vec<(SolutionVector, usize)> = Vec::new();
        for p in 0..source.len() {
            let x = decode(&source.principal_ideal(p))?;
            if x != bottom && !candidates.iter().any(|(y, _)| *y == x) {
                candidates.push((x, p));
            }
        }
        let mut kept = Vec::new();
        for (x, p) in &candidates {
            let mut below = bottom.clone();
            for (y, _) in &candidates {
                if y != x && y.precedes(x) {
                    below = below.join(y)?;
                }
            }
            if below != *x {
                kept.push((x.clone(), *p));
            }
        }
        let pairs: Vec<(usize, usize)> = (0..kept.len())
            .flat_map(|i| (0..kept.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && kept[i].0.precedes(&kept[j].0))
            .collect();
        let poset = Poset::new(kept.len(), pairs)?;
        let reps = kept.iter().map(|(_, p)| *p).collect();
        let irreducibles = kept.into_iter().map(|(x, _)| x).collect();
        Ok((CompactLattice::new(poset, irreducibles, bottom)?, reps))
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn irreducible_count(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn irreducible(&self, p: usize) -> &SolutionVector {
        &self.irreducibles[p]
    }

    pub fn irreducibles(&self) -> &[SolutionVector] {
        &self.irreducibles
    }

    pub fn bottom(&self) -> &SolutionVector {
        &self.bottom
    }

    pub fn top(&self) -> &SolutionVector {
        &self.top
    }

    /// Number of chains of the underlying solutions.
    pub fn width(&self) -> usize {
        self.bottom.len()
    }

    /// Join of the bottom with every irreducible in the ideal.
    pub fn decode(&self, ideal: &Ideal) -> Result<SolutionVector> {
        self.poset.validate_ideal(ideal)?;
        Ok(self.decode_unchecked(ideal))
    }

    fn decode_unchecked(&self, ideal: &Ideal) -> SolutionVector {
        let mut ranks = self.bottom.0.clone();
        for p in ideal.iter() {
            for (r, &q) in ranks.iter_mut().zip(&self.irreducibles[p].0) {
                *r = (*r).max(q);
            }
        }
        SolutionVector(ranks)
    }

    /// `{p : irreducible(p) ⪯ x}`. For a lattice element `x`, `decode(encode(x)) == x`.
    pub fn encode(&self, x: &SolutionVector) -> Result<Ideal> {
        self.bottom.same_host(x)?;
        let mut bits = FixedBitSet::with_capacity(self.poset.len());
        for (p, y) in self.irreducibles.iter().enumerate() {
            if y.precedes(x) {
                bits.insert(p);
            }
        }
        Ok(Ideal::from_bits(bits))
    }

    /// Every lattice element, in ideal-enumeration order.
    pub fn elements(&self, cap: usize) -> Result<Vec<SolutionVector>> {
        Ok(self.poset.enumerate_ideals(cap)?.iter().map(|i| self.decode_unchecked(i)).collect())
    }
}

/// Compact representation of the lattice `L*` of left-right ordered k-tuples.
///
/// Irreducible `id = i * m + p` (positions `i` are 0-based, `m = |J(L)|`) is the
/// tuple whose first `i` entries are the bottom and whose remaining entries are
/// irreducible `p` of the base lattice. `(i, p) ⪯ (j, q)` iff `i ≥ j` and `p ⪯ q`.
#[derive(Clone, Debug)]
pub struct ProductLattice {
    base: CompactLattice,
    k: usize,
    poset: Poset,
}

pub fn build_product_irreducibles(base: &CompactLattice, k: usize) -> Result<ProductLattice> {
    if k == 0 {
        return input("k must be at least 1");
    }
    let m = base.irreducible_count();
    let mut pairs = Vec::new();
    for i in 0..k {
        for &(p, q) in base.poset().hasse_edges() {
            pairs.push((i * m + p, i * m + q));
        }
        if i > 0 {
            for p in 0..m {
                pairs.push((i * m + p, (i - 1) * m + p));
            }
        }
    }
    let poset = Poset::new(k * m, pairs)?;
    Ok(ProductLattice { base: base.clone(), k, poset })
}

impl ProductLattice {
    pub fn base(&self) -> &CompactLattice {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn irreducible_count(&self) -> usize {
        self.poset.len()
    }

    /// `(position, base irreducible)` of a product irreducible.
    pub fn split(&self, id: usize) -> (usize, usize) {
        let m = self.base.irreducible_count();
        (id / m, id % m)
    }

    /// The explicit tuple `(0_L, …, 0_L, p, …, p)` for an irreducible id.
    pub fn irreducible_tuple(&self, id: usize) -> LrTuple {
        let (i, p) = self.split(id);
        let x = self.base.irreducible(p);
        let sols = (0..self.k).map(|t| if t < i { self.base.bottom().clone() } else { x.clone() }).collect();
        LrTuple(sols)
    }

    /// Entry `t` is the bottom joined with every `p` such that `(t, p)` is in the ideal.
    pub fn decode_tuple(&self, ideal: &Ideal) -> Result<LrTuple> {
        self.poset.validate_ideal(ideal)?;
        Ok(self.decode_unchecked(ideal))
    }

    pub(crate) fn decode_unchecked(&self, ideal: &Ideal) -> LrTuple {
        let m = self.base.irreducible_count();
        let mut sols = vec![self.base.bottom.0.clone(); self.k];
        for id in ideal.iter() {
            let (t, p) = (id / m, id % m);
            for (r, &q) in sols[t].iter_mut().zip(&self.base.irreducibles[p].0) {
                *r = (*r).max(q);
            }
        }
        LrTuple(sols.into_iter().map(SolutionVector).collect())
    }

    /// `{(i, p) : irreducible(p) ⪯ tuple[i]}`.
    pub fn encode_tuple(&self, tuple: &LrTuple) -> Result<Ideal> {
        if tuple.k() != self.k {
            return input(format!("tuple of length {} for a product of {} copies", tuple.k(), self.k));
        }
        let m = self.base.irreducible_count();
        let mut bits = FixedBitSet::with_capacity(self.k * m);
        for (i, x) in tuple.solutions().iter().enumerate() {
            for p in self.base.encode(x)?.iter() {
                bits.insert(i * m + p);
            }
        }
        Ok(Ideal::from_bits(bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(r: &[usize]) -> SolutionVector {
        SolutionVector::new(r.to_vec())
    }

    // The 2x3 grid realised on two chains: x2 = (1,0), x3 = (0,1), x5 = (0,2).
    pub(crate) fn grid() -> CompactLattice {
        let poset = Poset::new(3, [(1, 2)]).unwrap();
        CompactLattice::new(poset, vec![sv(&[1, 0]), sv(&[0, 1]), sv(&[0, 2])], sv(&[0, 0])).unwrap()
    }

    #[test]
    fn join_meet_examples() {
        let x = sv(&[0, 1]);
        assert_eq!(x.join(&x).unwrap(), x);
        assert_eq!(x.meet(&x).unwrap(), x);
        let y = sv(&[1, 0]);
        assert_eq!(x.join(&y).unwrap(), sv(&[1, 1]));
        assert_eq!(x.meet(&y).unwrap(), sv(&[0, 0]));
        assert!(x.join(&sv(&[1])).is_err());
        assert_eq!(x.partial_cmp(&y), None);
        assert!(sv(&[0, 0]) < x);
    }

    #[test]
    fn grid_join_meet_via_ideals() {
        let cl = grid();
        let p = cl.poset();
        let x2 = cl.decode(&p.ideal(&[0]).unwrap()).unwrap();
        let x3 = cl.decode(&p.ideal(&[1]).unwrap()).unwrap();
        let x4 = cl.decode(&p.ideal(&[0, 1]).unwrap()).unwrap();
        let x1 = cl.decode(&p.empty_ideal()).unwrap();
        assert_eq!(x2.join(&x3).unwrap(), x4);
        assert_eq!(x2.meet(&x3).unwrap(), x1);
    }

    #[test]
    fn lro_examples() {
        let ordered = vec![sv(&[0, 0]), sv(&[1, 1])];
        assert_eq!(lro(&ordered).unwrap().solutions(), &ordered[..]);
        let t = lro(&[sv(&[1, 0]), sv(&[0, 1])]).unwrap();
        assert_eq!(t.solutions(), &[sv(&[0, 0]), sv(&[1, 1])]);
    }

    #[test]
    fn lr_tuple_rejects_unordered() {
        assert!(LrTuple::new(vec![sv(&[1, 0]), sv(&[0, 1])]).is_err());
        assert!(LrTuple::new(vec![]).is_err());
    }

    #[test]
    fn decode_examples() {
        let cl = grid();
        let p = cl.poset();
        assert_eq!(cl.decode(&p.empty_ideal()).unwrap(), *cl.bottom());
        assert_eq!(cl.decode(&p.ideal(&[1, 2]).unwrap()).unwrap(), sv(&[0, 2]));
        assert_eq!(cl.decode(&p.full_ideal()).unwrap(), *cl.top());
        assert_eq!(*cl.top(), sv(&[1, 2]));
    }

    #[test]
    fn birkhoff_roundtrip_grid() {
        let cl = grid();
        for ideal in cl.poset().enumerate_ideals(100).unwrap() {
            let x = cl.decode(&ideal).unwrap();
            assert_eq!(cl.encode(&x).unwrap(), ideal);
        }
    }

    #[test]
    fn compact_lattice_rejects_inconsistent_order() {
        let poset = Poset::antichain(2);
        // (0,1) ⪯ (0,2) but the poset says they are incomparable
        let bad = CompactLattice::new(poset, vec![sv(&[0, 1]), sv(&[0, 2])], sv(&[0, 0]));
        assert!(bad.is_err());
    }

    #[test]
    fn from_ideal_map_drops_reducibles() {
        // a 2x2 grid of ideals of an antichain, mapped identically: two irreducibles
        let src = Poset::antichain(2);
        let (cl, reps) = CompactLattice::from_ideal_map(&src, |i| {
            Ok(sv(&[usize::from(i.contains(0)), usize::from(i.contains(1))]))
        })
        .unwrap();
        assert_eq!(cl.irreducible_count(), 2);
        assert_eq!(reps, vec![0, 1]);

        // collapse element 1 onto element 0: only one irreducible survives
        let src = Poset::new(2, [(0, 1)]).unwrap();
        let (cl, reps) =
            CompactLattice::from_ideal_map(&src, |i| Ok(sv(&[usize::from(!i.is_empty())]))).unwrap();
        assert_eq!(cl.irreducible_count(), 1);
        assert_eq!(reps, vec![0]);
    }

    #[test]
    fn product_k1_is_copy() {
        let cl = grid();
        let prod = build_product_irreducibles(&cl, 1).unwrap();
        assert_eq!(prod.poset(), cl.poset());
        assert!(build_product_irreducibles(&cl, 0).is_err());
    }

    #[test]
    fn product_sizes_and_grid_pair_count() {
        let cl = grid();
        let prod = build_product_irreducibles(&cl, 2).unwrap();
        assert_eq!(prod.irreducible_count(), 6);
        // brute force: ordered pairs X ⪯ Y of the six lattice elements. The
        // lattice is a 2x3 grid, so this is 3 · 6.
        let elems = cl.elements(100).unwrap();
        assert_eq!(elems.len(), 6);
        let pairs = elems.iter().flat_map(|x| elems.iter().filter(move |y| x.precedes(y))).count();
        assert_eq!(pairs, 18);
        assert_eq!(prod.poset().enumerate_ideals(1000).unwrap().len(), pairs);
    }

    #[test]
    fn product_decode_and_order() {
        let cl = grid();
        let prod = build_product_irreducibles(&cl, 3).unwrap();
        let p = prod.poset();
        let all_bottom = prod.decode_tuple(&p.empty_ideal()).unwrap();
        assert!(all_bottom.solutions().iter().all(|x| x == cl.bottom()));
        let all_top = prod.decode_tuple(&p.full_ideal()).unwrap();
        assert!(all_top.solutions().iter().all(|x| x == cl.top()));
        // the derived order agrees with the componentwise order of the explicit tuples
        for a in 0..p.len() {
            for b in 0..p.len() {
                let ta = prod.irreducible_tuple(a);
                let tb = prod.irreducible_tuple(b);
                let componentwise = ta.solutions().iter().zip(tb.solutions()).all(|(x, y)| x.precedes(y));
                assert_eq!(p.leq(a, b), componentwise, "{a} vs {b}");
                assert_eq!(prod.decode_tuple(&p.principal_ideal(a)).unwrap(), ta);
            }
        }
    }

    #[test]
    fn product_encode_decode_roundtrip() {
        let cl = grid();
        let prod = build_product_irreducibles(&cl, 2).unwrap();
        let elems = cl.elements(100).unwrap();
        for x in &elems {
            for y in elems.iter().filter(|y| x.precedes(y)) {
                let t = LrTuple::new(vec![x.clone(), y.clone()]).unwrap();
                let ideal = prod.encode_tuple(&t).unwrap();
                assert!(prod.poset().validate_ideal(&ideal).is_ok());
                assert_eq!(prod.decode_tuple(&ideal).unwrap(), t);
            }
        }
    }
}
