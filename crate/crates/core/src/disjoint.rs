//! Maximum families of pairwise-disjoint solutions.
//!
//! Start at the bottom, repeatedly jump to the least solution that is disjoint
//! from and above the current one, and stop as soon as the current solution
//! shares an element with the top (then it shares it with every later one).

use crate::error::{contract, Result};
use crate::lattice::SolutionVector;

/// Problem-specific access to a solution lattice.
pub trait DisjointOracles {
    /// Bottom element.
    fn o_min(&self) -> Result<SolutionVector>;
    /// Top element.
    fn o_max(&self) -> Result<SolutionVector>;
    /// The least solution that shares no element with `x` and lies above it, if any.
    fn o_next_disjoint(&self, x: &SolutionVector) -> Result<Option<SolutionVector>>;
    /// Size of the ground set; bounds the number of oracle calls.
    fn ground_size(&self) -> usize;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointSolutions {
    /// Pairwise disjoint, strictly increasing on every chain.
    pub solutions: Vec<SolutionVector>,
    pub oracle_calls: usize,
}

pub fn max_disjoint(oracles: &dyn DisjointOracles) -> Result<DisjointSolutions> {
    let top = oracles.o_max()?;
    let mut x = oracles.o_min()?;
    let mut calls = 2;
    let mut solutions = Vec::new();
    loop {
        let shares_with_top = x.ranks().iter().zip(top.ranks()).any(|(a, b)| a == b);
        solutions.push(x.clone());
        if shares_with_top {
            break;
        }
        calls += 1;
        let next = match oracles.o_next_disjoint(&x)? {
            Some(y) => y,
            None => return contract(format!("no disjoint successor of {x}, although the top {top} is one")),
        };
        if !x.strictly_precedes_everywhere(&next) {
            return contract(format!("oracle returned {next}, which is not a disjoint successor of {x}"));
        }
        x = next;
    }
    if calls > oracles.ground_size() + 2 {
        return contract(format!("{calls} oracle calls exceed the bound of {}", oracles.ground_size() + 2));
    }
    Ok(DisjointSolutions { solutions, oracle_calls: calls })
}
