//! Submodular minimization over the ideals of a poset.
//!
//! Two solvers: exhaustive enumeration (exact, exponential) and Wolfe's
//! minimum-norm-point algorithm run on a penalized extension of the objective
//! to all subsets. The MNP answer is always re-evaluated exactly and certified
//! against the dual bound before it is returned.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{contract, input, Error, Result};
use crate::poset::{Ideal, Poset, DEFAULT_IDEAL_CAP};

/// Auto mode enumerates when the lattice has at most this many ideals.
pub const AUTO_EXHAUSTIVE_LIMIT: usize = 4096;

const MNP_TOLERANCE: f64 = 1e-9;
const MNP_MAX_MAJOR: usize = 20_000;
const CERTIFY_SLACK: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Solver {
    Auto,
    Exhaustive,
    Mnp,
}

impl Solver {
    pub fn name(self) -> &'static str {
        match self {
            Solver::Auto => "auto",
            Solver::Exhaustive => "exhaustive",
            Solver::Mnp => "mnp",
        }
    }
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solver {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Solver::Auto),
            "exhaustive" => Ok(Solver::Exhaustive),
            "mnp" => Ok(Solver::Mnp),
            _ => Err(Error::Config(format!("unknown solver '{s}' (expected auto, exhaustive or mnp)"))),
        }
    }
}

/// An integer-valued function on the ideals of `host`, assumed submodular,
/// with `lower ≤ f(I) ≤ upper` for every ideal.
pub struct SubmodularObjective<'a> {
    host: Poset,
    eval: Box<dyn Fn(&Ideal) -> i64 + 'a>,
    lower: i64,
    upper: i64,
}

impl<'a> SubmodularObjective<'a> {
    pub fn new(host: Poset, lower: i64, upper: i64, eval: impl Fn(&Ideal) -> i64 + 'a) -> Result<Self> {
        if lower > upper {
            return input(format!("objective bounds are reversed: {lower} > {upper}"));
        }
        Ok(SubmodularObjective { host, eval: Box::new(eval), lower, upper })
    }

    pub fn host(&self) -> &Poset {
        &self.host
    }

    pub fn lower_bound(&self) -> i64 {
        self.lower
    }

    pub fn upper_bound(&self) -> i64 {
        self.upper
    }

    pub fn evaluate(&self, ideal: &Ideal) -> i64 {
        (self.eval)(ideal)
    }

    fn checked(&self, ideal: &Ideal) -> Result<i64> {
        let v = self.evaluate(ideal);
        if v < self.lower || v > self.upper {
            return contract(format!("objective value {v} outside declared bounds [{}, {}]", self.lower, self.upper));
        }
        Ok(v)
    }

    /// Samples pairs of random ideals and checks `f(A ∩ B) + f(A ∪ B) ≤ f(A) + f(B)`.
    pub fn verify_submodular_sample(&self, trials: usize, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..trials).all(|_| {
            let a = random_ideal(&self.host, &mut rng);
            let b = random_ideal(&self.host, &mut rng);
            self.evaluate(&a.intersection(&b)) + self.evaluate(&a.union(&b)) <= self.evaluate(&a) + self.evaluate(&b)
        })
    }
}

fn random_ideal(host: &Poset, rng: &mut ChaCha8Rng) -> Ideal {
    let p: f64 = rng.random();
    let picks: Vec<usize> = (0..host.len()).filter(|_| rng.random_bool(p * p)).collect();
    host.down_closure(&picks).expect("ids are in range")
}

/// `g(S) = f(dcl S) + M·(|dcl S| − |S|)` on arbitrary subsets of the host.
/// With `M = 2·(upper − lower) + 1`, `g` is submodular, agrees with `f` on
/// ideals, and `g(dcl S) ≤ g(S)`.
pub struct PenalizedObjective<'o, 'a> {
    base: &'o SubmodularObjective<'a>,
    penalty: i64,
}

impl<'o, 'a> PenalizedObjective<'o, 'a> {
    pub fn new(base: &'o SubmodularObjective<'a>) -> Self {
        let penalty = 2 * (base.upper - base.lower) + 1;
        PenalizedObjective { base, penalty }
    }

    pub fn penalty(&self) -> i64 {
        self.penalty
    }

    pub fn base(&self) -> &SubmodularObjective<'a> {
        self.base
    }

    /// `g` on a subset given by member ids.
    pub fn evaluate(&self, set: &[usize]) -> Result<i64> {
        let n = self.base.host.len();
        let mut bits = FixedBitSet::with_capacity(n);
        for &e in set {
            if e >= n {
                return input(format!("element {e} is not in a poset of {n} elements"));
            }
            bits.insert(e);
        }
        Ok(self.eval_bits(&bits))
    }

    fn eval_bits(&self, bits: &FixedBitSet) -> i64 {
        let closed = self.base.host.closure_bits(bits);
        let extra = (closed.count_ones(..) - bits.count_ones(..)) as i64;
        self.base.evaluate(&Ideal::from_bits(closed)) + self.penalty * extra
    }

    /// Samples pairs of arbitrary subsets and checks the submodular inequality for `g`.
    pub fn verify_submodular_sample(&self, trials: usize, seed: u64) -> bool {
        let n = self.base.host.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let subset = |rng: &mut ChaCha8Rng| {
            let p: f64 = rng.random();
            let mut b = FixedBitSet::with_capacity(n);
            for e in 0..n {
                if rng.random_bool(p) {
                    b.insert(e);
                }
            }
            b
        };
        (0..trials).all(|_| {
            let s = subset(&mut rng);
            let t = subset(&mut rng);
            let mut cap = s.clone();
            cap.intersect_with(&t);
            let mut cup = s.clone();
            cup.union_with(&t);
            self.eval_bits(&cap) + self.eval_bits(&cup) <= self.eval_bits(&s) + self.eval_bits(&t)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimum {
    pub ideal: Ideal,
    pub value: i64,
    /// The solver that actually ran (never `Auto`).
    pub solver: Solver,
}

// Smaller value first, then fewer members, then lexicographically smaller members.
fn better(a: (&Ideal, i64), b: (&Ideal, i64)) -> bool {
    a.1.cmp(&b.1).then(a.0.len().cmp(&b.0.len())).then_with(|| a.0.lex_cmp(b.0)) == Ordering::Less
}

/// Evaluates every ideal. Ties are broken toward fewer members, then the
/// lexicographically smallest member list.
pub fn minimize_exhaustive(obj: &SubmodularObjective, cap: usize) -> Result<Minimum> {
    let mut best: Option<(Ideal, i64)> = None;
    for ideal in obj.host.enumerate_ideals(cap)? {
        let v = obj.checked(&ideal)?;
        if best.as_ref().is_none_or(|(b, bv)| better((&ideal, v), (b, *bv))) {
            best = Some((ideal, v));
        }
    }
    let (ideal, value) = best.expect("the empty ideal always exists");
    Ok(Minimum { ideal, value, solver: Solver::Exhaustive })
}

/// Wolfe's minimum-norm-point algorithm on the base polytope of the
/// normalized penalized objective.
pub fn minimize_mnp(obj: &SubmodularObjective) -> Result<Minimum> {
    let n = obj.host.len();
    let empty = obj.host.empty_ideal();
    let f0 = obj.checked(&empty)?;
    if n == 0 {
        return Ok(Minimum { ideal: empty, value: f0, solver: Solver::Mnp });
    }
    let g = PenalizedObjective::new(obj);
    let wolfe = Wolfe::new(&g, f0);
    let (x, iterations) = wolfe.run();

    // Candidate minimizers: down-closures of the prefixes of x in ascending order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));
    let mut bits = FixedBitSet::with_capacity(n);
    let mut best = (empty.clone(), f0);
    for &e in &order {
        bits.insert(e);
        let ideal = Ideal::from_bits(obj.host.closure_bits(&bits));
        let v = obj.checked(&ideal)?;
        if better((&ideal, v), (&best.0, best.1)) {
            best = (ideal, v);
        }
    }
    let best = local_descent(obj, best)?;

    let dual: f64 = x.iter().map(|&v| v.min(0.0)).sum();
    if ((best.1 - f0) as f64) < dual + 1.0 - CERTIFY_SLACK {
        Ok(Minimum { ideal: best.0, value: best.1, solver: Solver::Mnp })
    } else {
        Err(Error::Solver { iterations, best_value: best.1 })
    }
}

// Moves to a neighbouring ideal (one element added or removed) while that
// improves the value or keeps it and shrinks the ideal.
fn local_descent(obj: &SubmodularObjective, start: (Ideal, i64)) -> Result<(Ideal, i64)> {
    let host = &obj.host;
    let (mut cur, mut val) = start;
    loop {
        let mut moved = false;
        for e in 0..host.len() {
            let mut bits = cur.bits().clone();
            if cur.contains(e) {
                if host.strictly_above(e).any(|u| cur.contains(u)) {
                    continue;
                }
                bits.set(e, false);
            } else {
                if !host.strictly_below(e).all(|u| cur.contains(u)) {
                    continue;
                }
                bits.insert(e);
            }
            let cand = Ideal::from_bits(bits);
            let v = obj.checked(&cand)?;
            if v < val || (v == val && cand.len() < cur.len()) {
                cur = cand;
                val = v;
                moved = true;
            }
        }
        if !moved {
            return Ok((cur, val));
        }
    }
}

/// Exhaustive when the host has at most [`AUTO_EXHAUSTIVE_LIMIT`] ideals, MNP otherwise.
pub fn minimize(obj: &SubmodularObjective, solver: Solver) -> Result<Minimum> {
    match solver {
        Solver::Exhaustive => minimize_exhaustive(obj, DEFAULT_IDEAL_CAP),
        Solver::Mnp => minimize_mnp(obj),
        Solver::Auto => {
            if obj.host.count_ideals_up_to(AUTO_EXHAUSTIVE_LIMIT) <= AUTO_EXHAUSTIVE_LIMIT {
                minimize_exhaustive(obj, AUTO_EXHAUSTIVE_LIMIT)
            } else {
                minimize_mnp(obj)
            }
        }
    }
}

struct Wolfe<'g, 'o, 'a> {
    g: &'g PenalizedObjective<'o, 'a>,
    offset: i64,
    n: usize,
}

impl Wolfe<'_, '_, '_> {
    fn new<'g, 'o, 'a>(g: &'g PenalizedObjective<'o, 'a>, offset: i64) -> Wolfe<'g, 'o, 'a> {
        let n = g.base.host.len();
        Wolfe { g, offset, n }
    }

    // Vertex of the base polytope minimizing <w, q>: sort ascending by (w, id).
    fn greedy(&self, w: &DVector<f64>) -> DVector<f64> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| w[a].total_cmp(&w[b]).then(a.cmp(&b)));
        let mut q = DVector::zeros(self.n);
        let mut bits = FixedBitSet::with_capacity(self.n);
        let mut prev = 0i64;
        for &e in &order {
            bits.insert(e);
            let cur = self.g.eval_bits(&bits) - self.offset;
            q[e] = (cur - prev) as f64;
            prev = cur;
        }
        q
    }

    // Minimizer of the norm over the affine hull of `pts`, as barycentric coefficients.
    fn affine_min(pts: &[DVector<f64>]) -> DVector<f64> {
        let m = pts.len();
        let mut a = DMatrix::zeros(m + 1, m + 1);
        for i in 0..m {
            for j in 0..m {
                a[(i, j)] = pts[i].dot(&pts[j]);
            }
            a[(i, m)] = 1.0;
            a[(m, i)] = 1.0;
        }
        let mut b = DVector::zeros(m + 1);
        b[m] = 1.0;
        let sol = a
            .clone()
            .lu()
            .solve(&b)
            .filter(|s| s.iter().all(|v| v.is_finite()))
            .or_else(|| a.svd(true, true).solve(&b, 1e-12).ok())
            .unwrap_or_else(|| {
                let mut s = DVector::zeros(m + 1);
                s[m - 1] = 1.0;
                s
            });
        sol.rows(0, m).into_owned()
    }

    fn combine(pts: &[DVector<f64>], coef: &DVector<f64>, n: usize) -> DVector<f64> {
        let mut x = DVector::zeros(n);
        for (p, &c) in pts.iter().zip(coef.iter()) {
            x.axpy(c, p, 1.0);
        }
        x
    }

    fn run(&self) -> (DVector<f64>, usize) {
        let mut pts = vec![self.greedy(&DVector::zeros(self.n))];
        let mut lambda = DVector::from_element(1, 1.0);
        let mut x = pts[0].clone();
        let mut max_norm = x.norm_squared();
        for major in 0..MNP_MAX_MAJOR {
            let q = self.greedy(&x);
            max_norm = max_norm.max(q.norm_squared());
            let gap = x.norm_squared() - x.dot(&q);
            if gap <= MNP_TOLERANCE * max_norm.max(1.0) || pts.iter().any(|p| p == &q) {
                return (x, major);
            }
            pts.push(q);
            lambda = lambda.push(0.0);
            loop {
                let alpha = Self::affine_min(&pts);
                if alpha.iter().all(|&a| a > 1e-12) {
                    x = Self::combine(&pts, &alpha, self.n);
                    lambda = alpha;
                    break;
                }
                let mut theta = 1.0f64;
                for i in 0..pts.len() {
                    if alpha[i] <= 1e-12 {
                        let d = lambda[i] - alpha[i];
                        if d > 0.0 {
                            theta = theta.min(lambda[i] / d);
                        }
                    }
                }
                lambda = &lambda * (1.0 - theta) + &alpha * theta;
                let keep: Vec<usize> = (0..pts.len()).filter(|&i| lambda[i] > 1e-12).collect();
                let keep = if keep.is_empty() {
                    vec![(0..pts.len()).max_by(|&a, &b| lambda[a].total_cmp(&lambda[b])).unwrap()]
                } else {
                    keep
                };
                pts = keep.iter().map(|&i| pts[i].clone()).collect();
                let total: f64 = keep.iter().map(|&i| lambda[i]).sum();
                lambda = DVector::from_iterator(keep.len(), keep.iter().map(|&i| lambda[i] / total));
                x = Self::combine(&pts, &lambda, self.n);
                if pts.len() == 1 {
                    break;
                }
            }
        }
        (x, MNP_MAX_MAJOR)
    }
}
