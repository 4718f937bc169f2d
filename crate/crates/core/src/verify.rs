//! Invariant checks shared by the test suite and the `verify` subcommand.
//!
//! Each check returns a [`Check`] rather than panicking so a whole corpus can
//! be audited in one pass.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algos::{Algorithm, AlgorithmConfig};
use crate::cuts::enumerate_cut_sets;
use crate::error::{Error, Result};
use crate::exact::{self, DominationInstance};
use crate::gen::minor::{certify_class, DEFAULT_MINOR_CAP};
use crate::gen::GeneratorSpec;
use crate::graph::{closed_neighborhood, Graph, VertexSet};

/// Outcome of one named invariant on one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub subject: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(subject: &str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { subject: subject.to_string(), name: name.into(), passed, detail: detail.into() }
    }
}

/// Both exact routes agree on MDS and MVC sizes. Returns the agreed pair.
pub fn oracles_agree(g: &Graph) -> Result<std::result::Result<(usize, usize), String>> {
    let mds = (exact::mds_exact(g)?.len(), exact::mds_exact_enum(g)?.len());
    let mvc = (exact::mvc_exact(g)?.len(), exact::mvc_exact_enum(g)?.len());
    if mds.0 != mds.1 || mvc.0 != mvc.1 {
        return Ok(Err(format!("mds b&b {} vs enum {}, mvc b&b {} vs enum {}", mds.0, mds.1, mvc.0, mvc.1)));
    }
    Ok(Ok((mds.0, mvc.0)))
}

/// `2·γ(G) ≤ n` for graphs without isolated vertices; `None` when the
/// hypothesis fails.
pub fn ore_bound(g: &Graph, mds: usize) -> Option<bool> {
    (g.n() > 0 && g.vertices().all(|v| g.degree(v) > 0)).then_some(2 * mds <= g.n())
}

/// Samples `R_0, …, R_k` with pairwise disjoint closed neighbourhoods.
pub fn sample_disjoint_family(g: &Graph, seed: u64) -> Vec<VertexSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<_> = g.vertices().collect();
    order.shuffle(&mut rng);
    let mut used = vec![false; g.n()];
    let mut family = Vec::new();
    let mut current = Vec::new();
    let mut current_nbhd: Vec<usize> = Vec::new();
    for v in order {
        let nv = g.closed_nbhd(v);
        // a new vertex may overlap the set being built but not earlier sets
        if nv.iter().any(|&w| used[w] && !current_nbhd.contains(&w)) {
            continue;
        }
        current.push(v);
        for &w in &nv {
            if !used[w] {
                used[w] = true;
                current_nbhd.push(w);
            }
        }
        if rng.gen_bool(0.4) {
            family.push(current.drain(..).collect());
            current_nbhd.clear();
        }
    }
    if !current.is_empty() {
        family.push(current.into_iter().collect());
    }
    family
}

/// `Σ MDS(G, R_i) ≤ γ(G)` for one sampled family. Returns `(lhs, rhs)`.
pub fn union_bound(g: &Graph, mds: usize, seed: u64) -> Result<(usize, usize)> {
    let family = sample_disjoint_family(g, seed);
    let mut seen = VertexSet::new();
    let mut lhs = 0;
    for r in &family {
        let nr = closed_neighborhood(g, r)?;
        if seen.union(&nr).len() != seen.len() + nr.len() {
            return Err(Error::Invariant("sampled family overlaps".into()));
        }
        seen = seen.union(&nr);
        lhs += exact::mds_subset_exact(&DominationInstance::restricted(g, r.clone())?)?.len();
    }
    Ok((lhs, mds))
}

/// `|X| ≤ 6·γ` and `|I| ≤ 44·γ` at the given radii. Returns `(|X|, |I|)`.
pub fn counting_bounds(g: &Graph, cfg: &AlgorithmConfig) -> Result<(usize, usize)> {
    let (x, i) = enumerate_cut_sets(g, cfg)?;
    Ok((x.len(), i.len()))
}

/// Runs `alg` on `g` and on `g` plus a disjoint path; the outputs on `g`'s
/// own vertices must coincide since no view of `g` can see the padding.
pub fn padded_locality(g: &Graph, alg: Algorithm, cfg: &AlgorithmConfig) -> Result<bool> {
    if alg == Algorithm::BaselineDegree2 {
        return Ok(true);
    }
    let n = g.n();
    let mut edges = g.edges();
    edges.extend((n..n + 4).map(|v| (v, v + 1)));
    let padded = Graph::from_edges(n + 5, &edges)?;
    let a = alg.run(g, cfg)?;
    let b = alg.run(&padded, cfg)?;
    let restricted: VertexSet = b.chosen.iter().filter(|&v| v < n).collect();
    Ok(a.chosen == restricted)
}

/// Upper bound on the 3-round output in terms of the certified `t`.
pub fn three_round_bound(t: usize) -> usize {
    2 * t - 1
}

/// Constant for the cut-based pipeline at dimension 1.
pub const ALGO1_RATIO_BOUND: usize = 51;

/// Expected values stored next to a corpus graph.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Expectation {
    pub mds: Option<usize>,
    pub mvc: Option<usize>,
    pub certified_t: Option<usize>,
    /// Output size per algorithm name.
    pub sizes: BTreeMap<String, usize>,
    pub one_cuts: Option<Vec<usize>>,
    pub interesting: Option<Vec<usize>>,
}

/// JSON sidecar written by `gen` and read by `verify`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Sidecar {
    pub family: Option<String>,
    pub spec: Option<GeneratorSpec>,
    pub n: usize,
    pub m: usize,
    pub certified_t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<AlgorithmConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expectation>,
}

/// Path of the sidecar belonging to an edge-list file.
pub fn sidecar_path(graph_file: &Path) -> PathBuf {
    graph_file.with_extension("json")
}

pub struct SuiteOptions {
    pub config: AlgorithmConfig,
    pub exact_cap: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { config: AlgorithmConfig::default(), exact_cap: exact::DEFAULT_EXACT_CAP, seed: 0 }
    }
}

/// Every invariant that applies to `g` at its size.
pub fn run_suite(subject: &str, g: &Graph, expect: Option<&Expectation>, opts: &SuiteOptions) -> Result<Vec<Check>> {
    let cfg = &opts.config;
    let mut out = Vec::new();
    let mut results = BTreeMap::new();
    for alg in Algorithm::ALL.into_iter().filter(|a| a.applies_to(g)) {
        let res = alg.run(g, cfg)?;
        out.push(Check::new(subject, format!("validity/{alg}"), res.is_valid(g), format!("size {}", res.size())));
        out.push(Check::new(subject, format!("locality/{alg}"), padded_locality(g, alg, cfg)?, ""));
        results.insert(alg, res);
    }
    let three = &results[&Algorithm::ThreeRound];
    out.push(Check::new(
        subject,
        "rounds/algo_3round",
        three.rounds.rounds_used == 3,
        format!("{} rounds", three.rounds.rounds_used),
    ));

    let small = g.n() <= opts.exact_cap;
    let mds = if small { Some(exact::mds_exact_with_cap(g, opts.exact_cap)?.len()) } else { None };
    let mvc = if small { Some(exact::mvc_exact_with_cap(g, opts.exact_cap)?.len()) } else { None };
    if g.n() <= exact::DEFAULT_ENUM_CAP {
        let agree = oracles_agree(g)?;
        out.push(Check::new(subject, "oracle", agree.is_ok(), agree.err().unwrap_or_default()));
    }
    let t = if g.n() <= DEFAULT_MINOR_CAP { Some(certify_class(g)?) } else { None };

    if let Some(mds) = mds {
        if let Some(ok) = ore_bound(g, mds) {
            out.push(Check::new(subject, "ore", ok, format!("mds {mds}, n {}", g.n())));
        }
        for k in 0..4 {
            let (lhs, rhs) = union_bound(g, mds, opts.seed.wrapping_add(k))?;
            out.push(Check::new(subject, format!("union/{k}"), lhs <= rhs, format!("{lhs} ≤ {rhs}")));
        }
        let (x, i) = counting_bounds(g, cfg)?;
        out.push(Check::new(subject, "counting/one_cuts", x <= 6 * mds, format!("|X| {x}, mds {mds}")));
        out.push(Check::new(subject, "counting/interesting", i <= 44 * mds, format!("|I| {i}, mds {mds}")));
        for alg in [Algorithm::Algo1, Algorithm::Algo2] {
            let res = &results[&alg];
            let ok = res.fallback_used || res.size() <= ALGO1_RATIO_BOUND * mds;
            out.push(Check::new(subject, format!("ratio/{alg}"), ok, format!("{} vs mds {mds}", res.size())));
        }
        if let Some(t) = t {
            let bound = three_round_bound(t) * mds;
            out.push(Check::new(
                subject,
                "ratio/algo_3round",
                three.size() <= bound,
                format!("{} ≤ (2·{t}−1)·{mds}", three.size()),
            ));
        }
    }

    if let Some(e) = expect {
        let mut expect_eq = |name: &str, want: Option<usize>, got: Option<usize>| {
            if let Some(want) = want {
                out.push(Check::new(
                    subject,
                    format!("expect/{name}"),
                    got == Some(want),
                    format!("want {want}, got {got:?}"),
                ));
            }
        };
        expect_eq("mds", e.mds, mds);
        expect_eq("mvc", e.mvc, mvc);
        expect_eq("certified_t", e.certified_t, t);
        for (name, &want) in &e.sizes {
            let alg: Algorithm = name.parse()?;
            expect_eq(name, Some(want), results.get(&alg).map(|r| r.size()));
        }
        let algo1 = &results[&Algorithm::Algo1];
        for (name, want, got) in
            [("one_cuts", &e.one_cuts, &algo1.one_cuts), ("interesting", &e.interesting, &algo1.interesting)]
        {
            if let Some(want) = want {
                let passed = got.as_slice() == want.as_slice();
                out.push(Check::new(
                    subject,
                    format!("expect/{name}"),
                    passed,
                    format!("want {want:?}, got {:?}", got.as_slice()),
                ));
            }
        }
    }
    Ok(out)
}

/// Result of auditing a directory.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CorpusReport {
    pub files: usize,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

impl CorpusReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Audits every `*.edges` file in `dir`. A missing directory is an IO error;
/// unparsable files become failed checks.
pub fn verify_corpus(dir: &Path, opts: &SuiteOptions) -> Result<CorpusReport> {
    let io = |source| Error::Io { path: dir.to_path_buf(), source };
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "edges"))
        .collect();
    files.sort();
    let mut report = CorpusReport { files: files.len(), ..Default::default() };
    if files.is_empty() {
        report.warnings.push(format!("no .edges files in {}", dir.display()));
    }
    for file in files {
        let subject = file.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let g = match crate::edgelist::read(&file) {
            Ok(g) => g,
            Err(e) => {
                report.checks.push(Check::new(&subject, "parse", false, e.to_string()));
                continue;
            }
        };
        let side = sidecar_path(&file);
        let sidecar: Option<Sidecar> = if side.exists() {
            let text = fs::read_to_string(&side).map_err(|source| Error::Io { path: side.clone(), source })?;
            match serde_json::from_str(&text) {
                Ok(s) => Some(s),
                Err(e) => {
                    report.checks.push(Check::new(&subject, "sidecar", false, e.to_string()));
                    continue;
                }
            }
        } else {
            None
        };
        let mut file_opts = SuiteOptions { config: opts.config.clone(), ..*opts };
        if let Some(cfg) = sidecar.as_ref().and_then(|s| s.config.clone()) {
            file_opts.config = cfg;
        }
        let expect = sidecar.as_ref().and_then(|s| s.expect.as_ref());
        report.checks.extend(run_suite(&subject, &g, expect, &file_opts)?);
    }
    Ok(report)
}
