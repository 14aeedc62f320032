//! Maximum-diversity k-multisets and maximum disjoint families of solutions
//! over distributive lattices, instantiated for minimum s-t cuts and stable
//! matchings.
//!
//! A problem module supplies a chain decomposition of its ground set and a
//! compact (Birkhoff) representation of its solution lattice. Diversity
//! maximization then becomes submodular minimization over the ideals of the
//! product lattice's join-irreducibles.

pub mod bruteforce;
pub mod disjoint;
pub mod diversity;
pub mod error;
pub mod lattice;
pub mod matching;
pub mod mincut;
pub mod poset;
pub mod random;
pub mod sfm;

pub use disjoint::{max_disjoint, DisjointOracles, DisjointSolutions};
pub use diversity::{maximize_diversity, DiverseSolutions, Measure, MeasureKind};
pub use error::{Error, Result};
pub use lattice::{CompactLattice, LrTuple, ProductLattice, SolutionVector};
pub use matching::{MatchingLattice, PreferenceProfile};
pub use mincut::{FlowNetwork, MinCutLattice};
pub use poset::{ChainDecomposition, Ideal, Poset};
pub use sfm::Solver;
