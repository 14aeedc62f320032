//! Minimum s-t cuts of a unit-capacity digraph as a distributive lattice.
//!
//! A maximum flow splits into `λ` arc-disjoint s-t paths; every minimum cut
//! takes exactly one arc from each path, so the paths are the chains. The
//! residual graph's condensation (Picard–Queyranne) gives the compact
//! representation: residual-closed vertex sets between the source side and
//! the sink side are exactly the source sides of minimum cuts.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::disjoint::DisjointOracles;
use crate::error::{input, Error, Result};
use crate::lattice::{CompactLattice, SolutionVector};
use crate::poset::{ChainDecomposition, Ideal, Poset};

/// Unit-capacity digraph; arc `i` is `arcs[i]`. Vertices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowNetwork {
    vertices: usize,
    arcs: Vec<(usize, usize)>,
    source: usize,
    sink: usize,
}

impl FlowNetwork {
    pub fn new(vertices: usize, arcs: Vec<(usize, usize)>, source: usize, sink: usize) -> Result<Self> {
        if source >= vertices || sink >= vertices {
            return input(format!("terminals {source}, {sink} out of range for {vertices} vertices"));
        }
        if source == sink {
            return input("source and sink coincide");
        }
        if let Some(i) = arcs.iter().position(|&(u, v)| u >= vertices || v >= vertices) {
            return input(format!("arc {i} has an endpoint out of range"));
        }
        Ok(FlowNetwork { vertices, arcs, source, sink })
    }

    /// Parses `p <n> <m> <s> <t>` followed by `m` lines `a <u> <v>` (1-based vertices).
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize, usize, usize)> = None;
        let mut arcs = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tok = line.split_whitespace();
            let tag = tok.next().unwrap_or_default();
            let nums: Vec<usize> = tok
                .map(|t| t.parse::<usize>().map_err(|_| Error::Input(format!("line {}: bad number '{t}'", no + 1))))
                .collect::<Result<_>>()?;
            match (tag, header.is_some()) {
                ("p", false) if nums.len() == 4 => header = Some((nums[0], nums[1], nums[2], nums[3])),
                ("p", true) => return input(format!("line {}: second problem line", no + 1)),
                ("a", true) if nums.len() == 2 => {
                    let n = header.map_or(0, |h| h.0);
                    if nums.iter().any(|&v| v == 0 || v > n) {
                        return input(format!("line {}: vertex out of range 1..{n}", no + 1));
                    }
                    arcs.push((nums[0] - 1, nums[1] - 1));
                }
                ("a", false) => return input(format!("line {}: arc before the problem line", no + 1)),
                _ => return input(format!("line {}: cannot parse '{line}'", no + 1)),
            }
        }
        let (n, m, s, t) = header.ok_or_else(|| Error::Input("missing problem line".into()))?;
        if arcs.len() != m {
            return input(format!("problem line declares {m} arcs but {} were given", arcs.len()));
        }
        if s == 0 || t == 0 || s > n || t > n {
            return input(format!("terminals out of range 1..{n}"));
        }
        FlowNetwork::new(n, arcs, s - 1, t - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// Arc ids leaving the vertex set `side`, sorted.
    pub fn cut_arcs(&self, side: &FixedBitSet) -> Vec<usize> {
        (0..self.arcs.len()).filter(|&i| side.contains(self.arcs[i].0) && !side.contains(self.arcs[i].1)).collect()
    }

    /// Whether `t` is reachable from `s` after deleting `removed` arcs.
    pub fn connected_without(&self, removed: &[usize]) -> bool {
        let mut gone = vec![false; self.arcs.len()];
        for &i in removed {
            gone[i] = true;
        }
        let mut seen = vec![false; self.vertices];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for (i, &(a, b)) in self.arcs.iter().enumerate() {
                if a == u && !gone[i] && !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        seen[self.sink]
    }
}

/// An integral maximum flow, cancelled down to `value` arc-disjoint paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: usize,
    /// Arc ids carrying one unit.
    pub flow: Vec<bool>,
    /// Path `i` as arc ids from `s` to `t`.
    pub paths: Vec<Vec<usize>>,
}

/// Dinic's algorithm on unit capacities, then greedy path extraction (smallest
/// arc id first, cycles cancelled). Fails with an infeasible error if `t` is
/// unreachable from `s`.
pub fn max_flow(net: &FlowNetwork) -> Result<MaxFlow> {
    let n = net.vertices;
    // residual edge 2i is arc i forward, 2i+1 its reverse
    let mut cap: Vec<u8> = net.arcs.iter().flat_map(|_| [1u8, 0u8]).collect();
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in net.arcs.iter().enumerate() {
        adj[u].push(2 * i);
        adj[v].push(2 * i + 1);
    }
    let head = |e: usize| if e.is_multiple_of(2) { net.arcs[e / 2].1 } else { net.arcs[e / 2].0 };
    loop {
        let mut level = vec![usize::MAX; n];
        level[net.source] = 0;
        let mut queue = VecDeque::from([net.source]);
        while let Some(u) = queue.pop_front() {
            for &e in &adj[u] {
                let v = head(e);
                if cap[e] > 0 && level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if level[net.sink] == usize::MAX {
            break;
        }
        let mut next = vec![0usize; n];
        while let Some(path) = blocking_path(net.source, net.sink, &adj, &cap, &level, &mut next, &head) {
            for e in path {
                cap[e] -= 1;
                cap[e ^ 1] += 1;
            }
        }
    }
    let mut flow: Vec<bool> = (0..net.arcs.len()).map(|i| cap[2 * i + 1] > 0).collect();
    let value = (0..net.arcs.len()).filter(|&i| flow[i] && net.arcs[i].0 == net.source).count()
        - (0..net.arcs.len()).filter(|&i| flow[i] && net.arcs[i].1 == net.source).count();
    if value == 0 {
        return Err(Error::Infeasible("the sink is not reachable from the source".into()));
    }
    let paths = extract_paths(net, &mut flow, value);
    Ok(MaxFlow { value, flow, paths })
}

fn blocking_path(
    s: usize,
    t: usize,
    adj: &[Vec<usize>],
    cap: &[u8],
    level: &[usize],
    next: &mut [usize],
    head: &impl Fn(usize) -> usize,
) -> Option<Vec<usize>> {
    let mut path = Vec::new();
    let mut u = s;
    while u != t {
        let mut advanced = false;
        while next[u] < adj[u].len() {
            let e = adj[u][next[u]];
            let v = head(e);
            if cap[e] > 0 && level[v] == level[u] + 1 {
                path.push(e);
                u = v;
                advanced = true;
                break;
            }
            next[u] += 1;
        }
        if !advanced {
            if u == s {
                return None;
            }
            // dead end: retreat and never try this edge again
            let e = path.pop().expect("non-source vertex has an incoming path edge");
            u = head(e ^ 1);
            next[u] += 1;
        }
    }
    Some(path)
}

fn extract_paths(net: &FlowNetwork, flow: &mut [bool], value: usize) -> Vec<Vec<usize>> {
    let mut paths = Vec::with_capacity(value);
    while paths.len() < value {
        let mut path: Vec<usize> = Vec::new();
        let mut at = vec![usize::MAX; net.vertices];
        let mut u = net.source;
        at[u] = 0;
        while u != net.sink {
            let i = (0..net.arcs.len()).find(|&i| flow[i] && net.arcs[i].0 == u).expect("flow is conserved");
            let v = net.arcs[i].1;
            path.push(i);
            if at[v] != usize::MAX {
                // cycle through v: cancel it and continue from v
                for &c in &path[at[v]..] {
                    flow[c] = false;
                    at[net.arcs[c].1] = usize::MAX;
                }
                path.truncate(at[v]);
                at[v] = path.len();
            } else {
                at[v] = path.len();
            }
            u = v;
        }
        for &i in &path {
            flow[i] = false;
        }
        paths.push(path);
    }
    // whatever is left is a union of cycles
    flow.iter_mut().for_each(|f| *f = false);
    for p in &paths {
        for &i in p {
            flow[i] = true;
        }
    }
    paths
}

/// Chain `i` is path `i` in traversal order; arcs on no path sit below path 0
/// on chain 0, in arc-id order.
pub fn chain_decomposition(net: &FlowNetwork, mf: &MaxFlow) -> ChainDecomposition {
    let mut chains = mf.paths.clone();
    let mut first: Vec<usize> = (0..net.arcs.len()).filter(|&i| !mf.flow[i]).collect();
    first.extend(&chains[0]);
    chains[0] = first;
    ChainDecomposition::new(net.arcs.len(), chains).expect("paths are arc-disjoint")
}

fn residual_adjacency(net: &FlowNetwork, flow: &[bool]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); net.vertices];
    for (i, &(u, v)) in net.arcs.iter().enumerate() {
        if flow[i] {
            adj[v].push(u);
        } else {
            adj[u].push(v);
        }
    }
    adj
}

fn closure(adj: &[Vec<usize>], start: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut seen = FixedBitSet::with_capacity(adj.len());
    let mut stack: Vec<usize> = Vec::new();
    for v in start {
        if !seen.put(v) {
            stack.push(v);
        }
    }
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen.put(v) {
                stack.push(v);
            }
        }
    }
    seen
}

/// Picard–Queyranne representation, reduced to the join-irreducibles of the
/// cut lattice (distinct vertex closures can induce the same arc cut).
#[derive(Clone, Debug)]
pub struct PQRepresentation {
    net: FlowNetwork,
    decomposition: ChainDecomposition,
    lattice: CompactLattice,
    node_vertices: Vec<Vec<usize>>,
    closure_vertices: Vec<FixedBitSet>,
    source_side: FixedBitSet,
    sink_side: FixedBitSet,
    flow_value: usize,
}

/// Condenses the residual graph of `mf` and extracts the join-irreducible cuts.
pub fn build_pq(net: &FlowNetwork, mf: &MaxFlow, decomposition: &ChainDecomposition) -> Result<PQRepresentation> {
    let adj = residual_adjacency(net, &mf.flow);
    let source_side = closure(&adj, [net.source]);
    let mut reverse = vec![Vec::new(); net.vertices];
    for (u, outs) in adj.iter().enumerate() {
        for &v in outs {
            reverse[v].push(u);
        }
    }
    let sink_side = closure(&reverse, [net.sink]);
    let middle: Vec<usize> =
        (0..net.vertices).filter(|&v| !source_side.contains(v) && !sink_side.contains(v)).collect();

    let reach: Vec<FixedBitSet> = (0..net.vertices).map(|v| closure(&adj, [v])).collect();
    let mut comp_of = vec![usize::MAX; net.vertices];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for &v in &middle {
        if comp_of[v] == usize::MAX {
            let members: Vec<usize> =
                middle.iter().copied().filter(|&u| reach[v].contains(u) && reach[u].contains(v)).collect();
            for &u in &members {
                comp_of[u] = comps.len();
            }
            comps.push(members);
        }
    }
    let pairs: Vec<(usize, usize)> = (0..comps.len())
        .flat_map(|a| (0..comps.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && reach[comps[b][0]].contains(comps[a][0]))
        .collect();
    let comp_poset = Poset::new(comps.len(), pairs)?;

    let side_of = |ideal: &Ideal| {
        let mut side = source_side.clone();
        for c in ideal.iter() {
            for &v in &comps[c] {
                side.insert(v);
            }
        }
        side
    };
    let (lattice, reps) = CompactLattice::from_ideal_map(&comp_poset, |ideal| {
        decomposition.vector_from_elements(&net.cut_arcs(&side_of(ideal)))
    })?;
    let node_vertices = reps.iter().map(|&c| comps[c].clone()).collect();
    let closure_vertices = reps
        .iter()
        .map(|&c| {
            let mut side = side_of(&comp_poset.principal_ideal(c));
            side.difference_with(&source_side);
            side
        })
        .collect();
    Ok(PQRepresentation {
        net: net.clone(),
        decomposition: decomposition.clone(),
        lattice,
        node_vertices,
        closure_vertices,
        source_side,
        sink_side,
        flow_value: mf.value,
    })
}

impl PQRepresentation {
    pub fn node_poset(&self) -> &Poset {
        self.lattice.poset()
    }

    pub fn lattice(&self) -> &CompactLattice {
        &self.lattice
    }

    pub fn decomposition(&self) -> &ChainDecomposition {
        &self.decomposition
    }

    /// Vertices of the strongly connected component behind each node.
    pub fn node_vertices(&self, p: usize) -> &[usize] {
        &self.node_vertices[p]
    }

    /// Vertices that must move to the source side together with node `p`.
    pub fn closure_vertices(&self, p: usize) -> Vec<usize> {
        self.closure_vertices[p].ones().collect()
    }

    /// Vertices residual-reachable from `s` (the source side of the bottom cut).
    pub fn source_side(&self) -> Vec<usize> {
        self.source_side.ones().collect()
    }

    /// Vertices that residual-reach `t`.
    pub fn sink_side(&self) -> Vec<usize> {
        self.sink_side.ones().collect()
    }

    pub fn flow_value(&self) -> usize {
        self.flow_value
    }

    /// Source set of the cut encoded by `ideal`.
    pub fn source_set(&self, ideal: &Ideal) -> Result<Vec<usize>> {
        self.node_poset().validate_ideal(ideal)?;
        let mut side = self.source_side.clone();
        for p in ideal.iter() {
            side.union_with(&self.closure_vertices[p]);
        }
        Ok(side.ones().collect())
    }
}

/// The cut leaving `S = source side ∪ closures of the ideal's nodes`, as chain ranks.
pub fn decode_cut(pq: &PQRepresentation, ideal: &Ideal) -> Result<SolutionVector> {
    let mut side = FixedBitSet::with_capacity(pq.net.vertices);
    for v in pq.source_set(ideal)? {
        side.insert(v);
    }
    pq.decomposition.vector_from_elements(&pq.net.cut_arcs(&side))
}

/// Everything needed to solve diverse and disjoint problems on one network.
#[derive(Clone, Debug)]
pub struct MinCutLattice {
    flow: MaxFlow,
    pq: PQRepresentation,
}

impl MinCutLattice {
    pub fn build(net: &FlowNetwork) -> Result<Self> {
        let flow = max_flow(net)?;
        let decomposition = chain_decomposition(net, &flow);
        let pq = build_pq(net, &flow, &decomposition)?;
        Ok(MinCutLattice { flow, pq })
    }

    pub fn network(&self) -> &FlowNetwork {
        &self.pq.net
    }

    pub fn flow(&self) -> &MaxFlow {
        &self.flow
    }

    pub fn lambda(&self) -> usize {
        self.flow.value
    }

    pub fn pq(&self) -> &PQRepresentation {
        &self.pq
    }

    pub fn lattice(&self) -> &CompactLattice {
        &self.pq.lattice
    }

    pub fn decomposition(&self) -> &ChainDecomposition {
        &self.pq.decomposition
    }

    /// Arc ids of a cut, sorted.
    pub fn arcs_of(&self, x: &SolutionVector) -> Vec<usize> {
        self.pq.decomposition.elements_of(x)
    }

    pub fn oracles(&self) -> MinCutOracles<'_> {
        MinCutOracles { lattice: self, residual: residual_adjacency(&self.pq.net, &self.flow.flow) }
    }
}

pub fn diverse_min_cuts(
    net: &FlowNetwork,
    k: usize,
    measure: &crate::diversity::Measure,
    solver: crate::sfm::Solver,
) -> Result<crate::diversity::DiverseSolutions> {
    let mc = MinCutLattice::build(net)?;
    crate::diversity::maximize_diversity(mc.lattice(), mc.decomposition(), k, measure, solver)
}

/// `o_next_disjoint(X)` is the residual closure of `s` and every endpoint of
/// `X`'s arcs: the smallest source set putting each path's cut arc strictly
/// after `X`'s. It fails exactly when that closure swallows `t`.
pub struct MinCutOracles<'a> {
    lattice: &'a MinCutLattice,
    residual: Vec<Vec<usize>>,
}

impl DisjointOracles for MinCutOracles<'_> {
    fn o_min(&self) -> Result<SolutionVector> {
        Ok(self.lattice.lattice().bottom().clone())
    }

    fn o_max(&self) -> Result<SolutionVector> {
        Ok(self.lattice.lattice().top().clone())
    }

    fn o_next_disjoint(&self, x: &SolutionVector) -> Result<Option<SolutionVector>> {
        let net = self.lattice.network();
        self.lattice.decomposition().validate(x)?;
        let arcs = self.lattice.arcs_of(x);
        let start = std::iter::once(net.source).chain(arcs.iter().flat_map(|&i| [net.arcs[i].0, net.arcs[i].1]));
        let side = closure(&self.residual, start);
        if side.contains(net.sink) {
            return Ok(None);
        }
        Ok(Some(self.lattice.decomposition().vector_from_elements(&net.cut_arcs(&side))?))
    }

    fn ground_size(&self) -> usize {
        self.lattice.network().arc_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disjoint::max_disjoint;

    // vertices s=0, a=1, b=2, t=3; arcs sa=0, at=1, sb=2, bt=3
    pub(crate) fn diamond() -> FlowNetwork {
        FlowNetwork::new(4, vec![(0, 1), (1, 3), (0, 2), (2, 3)], 0, 3).unwrap()
    }

    fn path3() -> FlowNetwork {
        FlowNetwork::new(4, vec![(0, 1), (1, 2), (2, 3)], 0, 3).unwrap()
    }

    fn all_cuts(mc: &MinCutLattice) -> Vec<Vec<usize>> {
        let mut cuts: Vec<Vec<usize>> = mc
            .lattice()
            .elements(10_000)
            .unwrap()
            .iter()
            .map(|x| mc.arcs_of(x))
            .collect();
        cuts.sort();
        cuts
    }

    #[test]
    fn flow_values() {
        assert_eq!(max_flow(&FlowNetwork::new(2, vec![(0, 1)], 0, 1).unwrap()).unwrap().value, 1);
        assert_eq!(max_flow(&diamond()).unwrap().value, 2);
        assert_eq!(max_flow(&FlowNetwork::new(2, vec![(0, 1); 3], 0, 1).unwrap()).unwrap().value, 3);
        let none = FlowNetwork::new(3, vec![(0, 1), (2, 1)], 0, 2).unwrap();
        assert!(matches!(max_flow(&none), Err(Error::Infeasible(_))));
    }

    #[test]
    fn diamond_chains() {
        let net = diamond();
        let mf = max_flow(&net).unwrap();
        let d = chain_decomposition(&net, &mf);
        assert_eq!(d.chains(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn single_path_one_chain() {
        let net = FlowNetwork::new(3, vec![(0, 1), (1, 2)], 0, 2).unwrap();
        let d = chain_decomposition(&net, &max_flow(&net).unwrap());
        assert_eq!(d.chains(), &[vec![0, 1]]);
    }

    #[test]
    fn dead_end_arc_never_cut() {
        // s=0, d=1, t=2: s→t plus dead end s→d
        let net = FlowNetwork::new(3, vec![(0, 1), (0, 2)], 0, 2).unwrap();
        let mc = MinCutLattice::build(&net).unwrap();
        assert_eq!(mc.decomposition().chains(), &[vec![0, 1]]);
        assert!(all_cuts(&mc).iter().all(|c| !c.contains(&0)));
    }

    #[test]
    fn pq_examples() {
        let single = MinCutLattice::build(&FlowNetwork::new(2, vec![(0, 1)], 0, 1).unwrap()).unwrap();
        assert_eq!(single.lattice().irreducible_count(), 0);
        assert_eq!(all_cuts(&single), vec![vec![0]]);

        let mc = MinCutLattice::build(&diamond()).unwrap();
        assert_eq!(all_cuts(&mc), vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);

        let mc = MinCutLattice::build(&path3()).unwrap();
        assert_eq!(mc.lattice().irreducible_count(), 2);
        assert!(mc.pq().node_poset().leq(0, 1) || mc.pq().node_poset().leq(1, 0));
        assert_eq!(all_cuts(&mc), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn decode_cut_extremes() {
        let mc = MinCutLattice::build(&diamond()).unwrap();
        let pq = mc.pq();
        let bottom = decode_cut(pq, &pq.node_poset().empty_ideal()).unwrap();
        assert_eq!(mc.arcs_of(&bottom), vec![0, 2]);
        let top = decode_cut(pq, &pq.node_poset().full_ideal()).unwrap();
        assert_eq!(mc.arcs_of(&top), vec![1, 3]);
        for ideal in pq.node_poset().enumerate_ideals(100).unwrap() {
            assert_eq!(decode_cut(pq, &ideal).unwrap(), mc.lattice().decode(&ideal).unwrap());
        }
    }

    #[test]
    fn closures_that_share_a_cut_are_merged() {
        // s=0, w=1, v=2, t=3: s→w, w→v, v→s, w→t. Three closed sets, two cuts.
        let net = FlowNetwork::new(4, vec![(0, 1), (1, 2), (2, 0), (1, 3)], 0, 3).unwrap();
        let mc = MinCutLattice::build(&net).unwrap();
        assert_eq!(all_cuts(&mc), vec![vec![0], vec![3]]);
        assert_eq!(mc.lattice().irreducible_count(), 1);
    }

    #[test]
    fn cycles_in_flow_are_cancelled() {
        // s=0, a=1, b=2, t=3; a⇄b cycle next to the path
        let net = FlowNetwork::new(4, vec![(0, 1), (1, 2), (2, 1), (1, 3)], 0, 3).unwrap();
        let mf = max_flow(&net).unwrap();
        assert_eq!(mf.paths, vec![vec![0, 3]]);
        assert_eq!(mf.flow, vec![true, false, false, true]);
    }

    #[test]
    fn parse_format() {
        let net = FlowNetwork::parse("# diamond\np 4 4 1 4\na 1 2\na 2 4\na 1 3\na 3 4\n").unwrap();
        assert_eq!(net, diamond());
        assert!(FlowNetwork::parse("p 2 2 1 2\na 1 2\n").is_err());
        assert!(FlowNetwork::parse("p 2 1 1 2\na 1 3\n").is_err());
        assert!(FlowNetwork::parse("a 1 2\n").is_err());
        assert!(FlowNetwork::parse("p 2 1 1 1\na 1 2\n").is_err());
    }

    #[test]
    fn oracles_examples() {
        let single = MinCutLattice::build(&FlowNetwork::new(2, vec![(0, 1)], 0, 1).unwrap()).unwrap();
        let o = single.oracles();
        assert_eq!(o.o_min().unwrap(), o.o_max().unwrap());
        assert_eq!(o.o_next_disjoint(&o.o_min().unwrap()).unwrap(), None);

        let mc = MinCutLattice::build(&path3()).unwrap();
        let res = max_disjoint(&mc.oracles()).unwrap();
        let cuts: Vec<Vec<usize>> = res.solutions.iter().map(|x| mc.arcs_of(x)).collect();
        assert_eq!(cuts, vec![vec![0], vec![1], vec![2]]);

        let mc = MinCutLattice::build(&diamond()).unwrap();
        let res = max_disjoint(&mc.oracles()).unwrap();
        let cuts: Vec<Vec<usize>> = res.solutions.iter().map(|x| mc.arcs_of(x)).collect();
        assert_eq!(cuts, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn diverse_examples() {
        use crate::diversity::Measure;
        use crate::sfm::Solver;
        let r = diverse_min_cuts(&diamond(), 2, &Measure::sum(), Solver::Auto).unwrap();
        assert_eq!(r.diversity, 4);
        assert_eq!(r.solutions.solutions()[0], SolutionVector::new(vec![0, 0]));
        assert_eq!(diverse_min_cuts(&diamond(), 3, &Measure::sum(), Solver::Auto).unwrap().diversity, 8);
        assert_eq!(diverse_min_cuts(&path3(), 1, &Measure::sum(), Solver::Auto).unwrap().diversity, 0);
        assert_eq!(diverse_min_cuts(&diamond(), 2, &Measure::sum(), Solver::Mnp).unwrap().diversity, 4);
    }
}
