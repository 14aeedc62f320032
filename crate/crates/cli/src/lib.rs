//! Batch front end: read an instance, run one mode, build a report.

use std::fmt::Write as _;
use std::path::PathBuf;

use diverse_lattice::bruteforce::{best_diverse_multiset, enumerate_min_cuts, enumerate_stable_matchings};
use diverse_lattice::matching::is_stable;
use diverse_lattice::random::{random_network, random_poset, random_profile, random_submodular, rng};
use diverse_lattice::sfm::{minimize_exhaustive, minimize_mnp, PenalizedObjective};
use diverse_lattice::{
    max_disjoint, maximize_diversity, ChainDecomposition, CompactLattice, DisjointSolutions, Error, FlowNetwork,
    MatchingLattice, Measure, MeasureKind, MinCutLattice, PreferenceProfile, Result, SolutionVector, Solver,
};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Diverse,
    Disjoint,
    Enumerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    Mincut,
    Matching,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub problem: ProblemKind,
    pub mode: Mode,
    pub k: usize,
    pub measure: MeasureKind,
    pub solver: Solver,
    pub input: PathBuf,
    pub values: Option<PathBuf>,
    pub output: Output,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub num_irreducibles: usize,
    pub oracle_calls: Option<usize>,
    pub solver: Option<String>,
}

/// `k` is the number of solutions listed and `diversity` the chosen measure
/// evaluated on them, whatever the mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub problem: ProblemKind,
    pub mode: String,
    pub k: usize,
    pub measure: String,
    pub diversity: i64,
    pub solutions: Vec<Vec<Vec<usize>>>,
    pub stats: Stats,
}

impl Report {
    pub fn render(&self, output: Output) -> String {
        match output {
            Output::Json => serde_json::to_string(self).expect("reports serialize") + "\n",
            Output::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let problem = match self.problem {
            ProblemKind::Mincut => "mincut",
            ProblemKind::Matching => "matching",
        };
        let _ = writeln!(s, "{problem} {}: {} solution(s), {} = {}", self.mode, self.k, self.measure, self.diversity);
        for (i, sol) in self.solutions.iter().enumerate() {
            let elems: Vec<String> = sol
                .iter()
                .map(|e| match e.as_slice() {
                    [u, v, idx] => format!("{u}->{v}#{idx}"),
                    [a, b] => format!("{a}-{b}"),
                    _ => format!("{e:?}"),
                })
                .collect();
            let _ = writeln!(s, "  {}: {}", i + 1, elems.join(" "));
        }
        let opt = |v: &Option<String>| v.clone().unwrap_or_else(|| "-".into());
        let _ = writeln!(
            s,
            "irreducibles {}, oracle calls {}, solver {}",
            self.stats.num_irreducibles,
            opt(&self.stats.oracle_calls.map(|c| c.to_string())),
            opt(&self.stats.solver)
        );
        s
    }
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Config(_) => 1,
        Error::Infeasible(_) => 2,
        Error::Resource(_) => 3,
        Error::Contract(_) | Error::Solver { .. } => 4,
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

/// Whitespace-separated integers, `#` comments.
pub fn parse_values(text: &str) -> Result<Vec<i64>> {
    text.lines()
        .flat_map(|l| l.split('#').next().unwrap_or_default().split_whitespace())
        .map(|t| t.parse().map_err(|_| Error::Input(format!("bad element value '{t}'"))))
        .collect()
}

type Describe = Box<dyn Fn(&SolutionVector) -> Vec<Vec<usize>>>;

// One solved instance, problem-agnostic from here on.
struct Instance {
    lattice: CompactLattice,
    decomposition: ChainDecomposition,
    describe: Describe,
    feasible: Box<dyn Fn(&SolutionVector) -> bool>,
    disjoint: Box<dyn Fn() -> Result<DisjointSolutions>>,
}

fn mincut_instance(net: FlowNetwork) -> Result<Instance> {
    let mc = MinCutLattice::build(&net)?;
    let lambda = mc.lambda();
    let (d1, d2) = (mc.decomposition().clone(), mc.decomposition().clone());
    let (n1, n2) = (net.clone(), net);
    let inst = Instance {
        lattice: mc.lattice().clone(),
        decomposition: mc.decomposition().clone(),
        describe: Box::new(move |x| {
            d1.elements_of(x)
                .into_iter()
                .map(|i| {
                    let (u, v) = n1.arcs()[i];
                    vec![u + 1, v + 1, i + 1]
                })
                .collect()
        }),
        feasible: Box::new(move |x| {
            let arcs = d2.elements_of(x);
            arcs.len() == lambda && !n2.connected_without(&arcs)
        }),
        disjoint: Box::new(move || max_disjoint(&mc.oracles())),
    };
    Ok(inst)
}

fn matching_instance(p: PreferenceProfile) -> Result<Instance> {
    let ml = MatchingLattice::build(&p)?;
    let p2 = p.clone();
    let inst = Instance {
        lattice: ml.lattice().clone(),
        decomposition: ml.decomposition().clone(),
        describe: Box::new(move |x| p.pairs(x).into_iter().map(|(a, b)| vec![a + 1, b + 1]).collect()),
        feasible: Box::new(move |x| is_stable(&p2, x)),
        disjoint: Box::new(move || max_disjoint(&ml.oracles())),
    };
    Ok(inst)
}

pub fn run(config: &RunConfig) -> Result<Report> {
    if config.k == 0 {
        return Err(Error::Config("k must be at least 1".into()));
    }
    let text = read(&config.input)?;
    let values = match (&config.values, config.measure) {
        (None, _) => None,
        (Some(path), MeasureKind::Abs) => Some(parse_values(&read(path)?)?),
        (Some(_), m) => return Err(Error::Config(format!("--values only applies to measure abs, not {m}"))),
    };
    let measure = Measure { kind: config.measure, values };
    let inst = match config.problem {
        ProblemKind::Mincut => mincut_instance(FlowNetwork::parse(&text)?)?,
        ProblemKind::Matching => matching_instance(PreferenceProfile::parse(&text)?)?,
    };
    // values are checked up front so every mode reports the same configuration errors
    measure.element_values(&inst.decomposition)?;

    let (solutions, num_irreducibles, oracle_calls, solver) = match config.mode {
        Mode::Diverse => {
            let best = maximize_diversity(&inst.lattice, &inst.decomposition, config.k, &measure, config.solver)?;
            (best.solutions.into_solutions(), best.num_irreducibles, None, Some(best.solver.name().to_string()))
        }
        Mode::Disjoint => {
            let found = (inst.disjoint)()?;
            (found.solutions, inst.lattice.irreducible_count(), Some(found.oracle_calls), None)
        }
        Mode::Enumerate => {
            let mut all = inst.lattice.elements(diverse_lattice::poset::DEFAULT_IDEAL_CAP)?;
            // a linear extension of the lattice order
            all.sort_by_key(|x| (x.ranks().iter().sum::<usize>(), x.ranks().to_vec()));
            (all, inst.lattice.irreducible_count(), None, None)
        }
    };
    for x in &solutions {
        if !(inst.feasible)(x) {
            return Err(Error::Contract(format!("reported solution {x} failed re-validation")));
        }
    }
    Ok(Report {
        problem: config.problem,
        mode: format!("{:?}", config.mode).to_lowercase(),
        k: solutions.len(),
        measure: config.measure.name().to_string(),
        diversity: measure.diversity(&inst.decomposition, &solutions)?,
        solutions: solutions.iter().map(|x| (inst.describe)(x)).collect(),
        stats: Stats { num_irreducibles, oracle_calls, solver },
    })
}

/// Seeded spot checks against the brute-force oracles: (check, passed).
pub fn selftest(seed: u64, rounds: usize) -> Result<Vec<(String, bool)>> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    let mut cuts_ok = true;
    let mut matchings_ok = true;
    let mut sfm_ok = true;
    for _ in 0..rounds {
        let net = random_network(&mut r);
        let mc = MinCutLattice::build(&net)?;
        let brute = enumerate_min_cuts(&net, mc.decomposition())?;
        let (_, best) = best_diverse_multiset(&brute, mc.decomposition(), 2, &Measure::sum())?;
        let got = maximize_diversity(mc.lattice(), mc.decomposition(), 2, &Measure::sum(), Solver::Auto)?;
        cuts_ok &= got.diversity == best && mc.lattice().elements(1 << 16)?.len() == brute.solutions.len();

        let p = random_profile(&mut r, 4);
        let ml = MatchingLattice::build(&p)?;
        let brute = enumerate_stable_matchings(&p)?;
        let (_, best) = best_diverse_multiset(&brute, ml.decomposition(), 2, &Measure::cov())?;
        let got = maximize_diversity(ml.lattice(), ml.decomposition(), 2, &Measure::cov(), Solver::Auto)?;
        matchings_ok &= got.diversity == best && ml.lattice().elements(1 << 16)?.len() == brute.solutions.len();

        let host = random_poset(&mut r, 10, 0.2);
        let obj = random_submodular(&mut r, host);
        sfm_ok &= minimize_mnp(&obj)?.value == minimize_exhaustive(&obj, 1 << 10)?.value
            && PenalizedObjective::new(&obj).verify_submodular_sample(100, seed);
    }
    out.push(("mincut diversity vs brute force".into(), cuts_ok));
    out.push(("matching diversity vs brute force".into(), matchings_ok));
    out.push(("mnp vs exhaustive".into(), sfm_ok));
    Ok(out)
}
