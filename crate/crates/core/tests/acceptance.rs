//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout.

mod common;

use std::path::Path;
use std::process::Command;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use local_mds::algos::{algo_3round, Algorithm, AlgorithmConfig};
use local_mds::exact;
use local_mds::gen::minor::{certify_class_with_cap, DEFAULT_MINOR_CAP};
use local_mds::gen::GeneratorSpec;
use local_mds::harness::{ExperimentPlan, Instance};
use local_mds::local::{collect_view, verify_locality, FnProgram, NodeView};
use local_mds::verify::{self, counting_bounds, ore_bound, union_bound, SuiteOptions};
use local_mds::Graph;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

/// 1: every algorithm returns a valid solution on 2000+ instances.
fn validity() -> Outcome {
    let cfg = AlgorithmConfig::default();
    let cfg = &cfg;
    let corpus = common::corpus(2100, 60, 1);
    let runs = AtomicUsize::new(0);
    let bad: Vec<String> = corpus
        .par_iter()
        .flat_map_iter(|(spec, g)| {
            let runs = &runs;
            Algorithm::ALL.into_iter().filter(|a| a.applies_to(g)).filter_map(move |a| {
                runs.fetch_add(1, Ordering::Relaxed);
                let r = a.run(g, cfg).expect("run");
                (!r.is_valid(g)).then(|| format!("{a} on {spec:?}"))
            })
        })
        .collect();
    let families: std::collections::BTreeSet<_> = corpus.iter().map(|(s, _)| s.family()).collect();
    outcome(
        bad.is_empty(),
        format!(
            "{} instances from {} families, {} runs, {} invalid {:?}",
            corpus.len(),
            families.len(),
            runs.into_inner(),
            bad.len(),
            bad.first()
        ),
    )
}

struct Certified {
    spec: GeneratorSpec,
    graph: Graph,
    t: usize,
    mds: usize,
}

fn certified_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Certified> {
    common::corpus(count, max_n, seed)
        .into_par_iter()
        .map(|(spec, graph)| {
            let t = certify_class_with_cap(&graph, max_n.max(DEFAULT_MINOR_CAP)).expect("within cap");
            let mds = exact::mds_exact(&graph).expect("within cap").len();
            Certified { spec, graph, t, mds }
        })
        .collect()
}

/// 2: `|3-round| ≤ (2t − 1)·γ` with `t` certified, and exactly 3 rounds.
fn three_round(corpus: &[Certified]) -> Outcome {
    let mut worst = Ratio::new(0u64, 1);
    let mut bad = Vec::new();
    for c in corpus {
        let r = algo_3round(&c.graph);
        if r.size() > (2 * c.t - 1) * c.mds || r.rounds.rounds_used != 3 {
            bad.push(format!("{:?}", c.spec));
        }
        if c.mds > 0 {
            worst = worst.max(Ratio::new(r.size() as u64, c.mds as u64));
        }
    }
    outcome(
        bad.is_empty() && corpus.len() >= 500,
        format!("{} certified instances, max ratio {worst}, {} violations {:?}", corpus.len(), bad.len(), bad.first()),
    )
}

/// 3: `|algo1| ≤ 51·γ` at default radii.
fn algo1_ratio(corpus: &[Certified]) -> Outcome {
    let cfg = AlgorithmConfig::default();
    let results: Vec<(Ratio<u64>, bool, bool)> = corpus
        .par_iter()
        .map(|c| {
            let r = Algorithm::Algo1.run(&c.graph, &cfg).expect("run");
            let ratio = Ratio::new(r.size() as u64, c.mds.max(1) as u64);
            (ratio, r.size() <= verify::ALGO1_RATIO_BOUND * c.mds, r.fallback_used)
        })
        .collect();
    let worst = results.iter().map(|r| r.0).max().unwrap_or_default();
    let violations = results.iter().filter(|r| !r.1).count();
    let fallbacks = results.iter().filter(|r| r.2).count();
    outcome(
        violations == 0,
        format!(
            "{} instances, n ≤ 25, max ratio {worst}, {violations} violations, {fallbacks} fallbacks",
            corpus.len()
        ),
    )
}

/// 4: `|X| ≤ 6·γ` and `|I| ≤ 44·γ` at default radii.
fn counting(corpus: &[Certified]) -> Outcome {
    let cfg = AlgorithmConfig::default();
    let sizes: Vec<(usize, usize, usize)> = corpus
        .par_iter()
        .map(|c| {
            let (x, i) = counting_bounds(&c.graph, &cfg).expect("counting");
            (x, i, c.mds)
        })
        .collect();
    let bad = sizes.iter().filter(|&&(x, i, m)| x > 6 * m || i > 44 * m).count();
    let max_x = sizes.iter().filter(|s| s.2 > 0).map(|&(x, _, m)| Ratio::new(x, m)).max().unwrap_or_default();
    let max_i = sizes.iter().filter(|s| s.2 > 0).map(|&(_, i, m)| Ratio::new(i, m)).max().unwrap_or_default();
    outcome(bad == 0, format!("{} instances, max |X|/γ {max_x}, max |I|/γ {max_i}, {bad} violations", sizes.len()))
}

/// 5: branch-and-bound and enumeration agree on 10⁴ random graphs.
fn oracles() -> Outcome {
    let disagreements: Vec<String> = (0..10_000u64)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(i);
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.1..0.7);
            let g = common::gnp(n, p, &mut rng);
            verify::oracles_agree(&g).expect("within cap").err().map(|e| format!("seed {i}: {e}"))
        })
        .collect();
    outcome(
        disagreements.is_empty(),
        format!("10000 graphs, n ≤ 12, {} disagreements {:?}", disagreements.len(), disagreements.first()),
    )
}

/// 6: Ore's bound and the union bound on sampled cases.
fn structural() -> Outcome {
    let corpus = common::corpus(1500, 20, 6);
    let results: Vec<(Option<bool>, bool)> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, (_, g))| {
            let mds = exact::mds_exact(g).expect("cap").len();
            let (lhs, rhs) = union_bound(g, mds, i as u64).expect("union");
            (ore_bound(g, mds), lhs <= rhs)
        })
        .collect();
    let ore_cases = results.iter().filter(|r| r.0.is_some()).count();
    let ore_bad = results.iter().filter(|r| r.0 == Some(false)).count();
    let union_bad = results.iter().filter(|r| !r.1).count();
    outcome(
        ore_cases >= 1000 && results.len() >= 1000 && ore_bad + union_bad == 0,
        format!("Ore: {ore_cases} cases, {ore_bad} violations; union: {} cases, {union_bad} violations", results.len()),
    )
}

/// 7: golden micro-instances match their recorded values.
fn golden() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/golden");
    let report = verify::verify_corpus(&dir, &SuiteOptions::default()).expect("golden corpus readable");
    let expectations = report.checks.iter().filter(|c| c.name.starts_with("expect/")).count();
    let failed: Vec<String> = report.failures().map(|c| format!("{} {}: {}", c.subject, c.name, c.detail)).collect();
    outcome(
        failed.is_empty() && report.files >= 4,
        format!(
            "{} files, {} checks ({} expectations), failures {:?}",
            report.files,
            report.checks.len(),
            expectations,
            failed
        ),
    )
}

/// 8: ID-isomorphic views give equal outputs; reruns are byte-identical.
fn locality() -> Outcome {
    let mut pairs = 0;
    let mut view_failures = 0;
    let r = 2;
    let prog = FnProgram::new(r, |view: &NodeView| {
        let root = view.root();
        (view.graph().degree(root), view.len(), view.labelled_edges().len())
    });
    for (i, (_, g)) in common::corpus(60, 20, 8).iter().enumerate() {
        // hang a long path off the last vertex: views of far-away vertices
        // are unchanged
        let n = g.n();
        let mut edges = g.edges();
        edges.push((n - 1, n));
        edges.extend((n..n + 5).map(|v| (v, v + 1)));
        let g2 = Graph::from_edges(n + 6, &edges).expect("edges");
        for v in g.vertices() {
            let d = g.distance(v, n - 1);
            if d.is_some_and(|d| d <= r) {
                continue;
            }
            let (a, b) = (collect_view(g, v, r).unwrap(), collect_view(&g2, v, r).unwrap());
            assert_eq!(a.labels(), b.labels(), "instance {i} vertex {v}: pair is not ID-isomorphic");
            pairs += 1;
            if !verify_locality(&prog, g, v, &g2, v) {
                view_failures += 1;
            }
        }
    }
    let cfg = AlgorithmConfig::default();
    let padded = common::corpus(120, 20, 9);
    let padded_failures = padded
        .par_iter()
        .flat_map_iter(|(_, g)| Algorithm::ALL.into_iter().map(move |a| (g, a)))
        .filter(|(g, a)| !verify::padded_locality(g, *a, &cfg).expect("run"))
        .count();

    let dir = tempfile::tempdir().expect("tempdir");
    let specs: Vec<_> = common::corpus(30, 20, 10).into_iter().map(|(s, _)| s).collect();
    let mut plan = ExperimentPlan::grid(&specs, &Algorithm::ALL, &cfg);
    plan.certify = true;
    let plan_path = dir.path().join("plan.json");
    std::fs::write(&plan_path, serde_json::to_string(&plan).unwrap()).unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_local-mds"))
            .args(["run", "--no-timestamp", "--plan"])
            .arg(&plan_path)
            .output()
            .expect("binary runs")
    };
    let (first, second) = (run(), run());
    let identical = first.status.success() && first.stdout == second.stdout && !first.stdout.is_empty();
    outcome(
        pairs >= 100 && view_failures == 0 && padded_failures == 0 && identical,
        format!(
            "{pairs} view pairs ({view_failures} failures), {} padded runs ({padded_failures} failures), \
             rerun byte-identical: {identical} ({} bytes)",
            padded.len() * Algorithm::ALL.len(),
            first.stdout.len()
        ),
    )
}

/// 9: oversized residual components trigger the fallback, which stays valid
/// and is flagged in the report.
fn fallback() -> Outcome {
    let cfg = AlgorithmConfig { r1: 2, r2: 2, diam_cap: 3, ..AlgorithmConfig::default() };
    let instances: Vec<Instance> =
        (24..=60).step_by(4).map(|n| Instance::generated(&GeneratorSpec::CyclePower { n, k: 3 }).unwrap()).collect();
    let report =
        local_mds::harness::run_instances(&instances, &[Algorithm::Algo1, Algorithm::Mvc], &cfg, &Default::default())
            .expect("valid outputs");
    let flagged = report.rows.iter().filter(|r| r.fallback && r.guarantee_void && r.valid).count();
    outcome(
        flagged == report.rows.len() && report.summary.fallback == report.rows.len(),
        format!("{} rows on long cycle powers, {flagged} flagged fallback with valid output", report.rows.len()),
    )
}

fn main() {
    // the libtest harness is off, so honour `cargo test -- --list` and filters
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let start = Instant::now();
    let certified_small = certified_corpus(520, 20, 2);
    let certified_25 = certified_corpus(300, 25, 3);
    let criteria: Vec<Criterion> = vec![
        ("validity", Box::new(validity)),
        ("3-round ratio", Box::new(|| three_round(&certified_small))),
        ("algorithm 1 ratio", Box::new(|| algo1_ratio(&certified_25))),
        ("counting bounds", Box::new(|| counting(&certified_25))),
        ("oracle equivalence", Box::new(oracles)),
        ("Ore and union bounds", Box::new(structural)),
        ("golden instances", Box::new(golden)),
        ("locality and determinism", Box::new(locality)),
        ("fallback accounting", Box::new(fallback)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = check();
        failed += usize::from(!o.passed);
        println!(
            "criterion {} {name}: {} ({:.1}s) {}",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!(
        "acceptance: {}/{} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
