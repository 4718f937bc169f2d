//! Batch experiments: instances × algorithms → JSON-lines report.
//!
//! A report is a header line, one row per (instance, algorithm) in plan
//! order, and a summary line. Every line carries a `kind` tag. Apart from the
//! optional timestamp in the header, the output is a pure function of the
//! plan.

use std::collections::{BTreeMap, HashMap};
use std::io::Write;
use std::path::{Path, PathBuf};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algos::{Algorithm, AlgorithmConfig, Problem, RatioRepr};
use crate::error::{Error, Result};
use crate::exact;
use crate::gen::minor::{certify_class, DEFAULT_MINOR_CAP};
use crate::gen::{generate, GeneratorSpec};
use crate::graph::Graph;
use crate::verify::{sidecar_path, Sidecar};

/// A graph plus where it came from.
#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub family: String,
    pub spec: Option<GeneratorSpec>,
    pub graph: Graph,
}

impl Instance {
    pub fn generated(spec: &GeneratorSpec) -> Result<Self> {
        Ok(Instance {
            id: spec_id(spec),
            family: spec.family().to_string(),
            spec: Some(spec.clone()),
            graph: generate(spec)?,
        })
    }

    /// Reads an edge list; the family comes from the sidecar when one exists.
    pub fn from_file(path: &Path) -> Result<Self> {
        let graph = crate::edgelist::read(path)?;
        let side = sidecar_path(path);
        let sidecar: Option<Sidecar> = match std::fs::read_to_string(&side) {
            Ok(text) => Some(serde_json::from_str(&text)?),
            Err(_) => None,
        };
        let family = sidecar.as_ref().and_then(|s| s.family.clone()).unwrap_or_else(|| "file".into());
        let id = path.file_name().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        Ok(Instance { id, family, spec: sidecar.and_then(|s| s.spec), graph })
    }

    pub fn from_graph(id: &str, family: &str, graph: Graph) -> Self {
        Instance { id: id.into(), family: family.into(), spec: None, graph }
    }
}

/// `cycle_power/k=3,n=36`: the family followed by the spec's parameters.
pub fn spec_id(spec: &GeneratorSpec) -> String {
    let value = serde_json::to_value(spec).expect("specs serialize");
    let params: Vec<String> = value
        .as_object()
        .into_iter()
        .flatten()
        .filter(|(k, _)| k.as_str() != "family")
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    format!("{}/{}", spec.family(), params.join(","))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlannedRun {
    pub spec: GeneratorSpec,
    pub algorithm: Algorithm,
    #[serde(default)]
    pub config: AlgorithmConfig,
}

fn default_exact_cap() -> usize {
    exact::DEFAULT_EXACT_CAP
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentPlan {
    pub runs: Vec<PlannedRun>,
    #[serde(default)]
    pub out: Option<PathBuf>,
    /// Instances up to this size are compared against the exact optimum.
    #[serde(default = "default_exact_cap")]
    pub exact_cap: usize,
    /// Certify the excluded `K_{2,t}` of instances within the checker's cap.
    #[serde(default)]
    pub certify: bool,
}

impl ExperimentPlan {
    /// Every algorithm on every spec, one shared config.
    pub fn grid(specs: &[GeneratorSpec], algorithms: &[Algorithm], config: &AlgorithmConfig) -> Self {
        let runs = specs
            .iter()
            .flat_map(|s| {
                algorithms.iter().map(|&algorithm| PlannedRun { spec: s.clone(), algorithm, config: config.clone() })
            })
            .collect();
        ExperimentPlan { runs, out: None, exact_cap: exact::DEFAULT_EXACT_CAP, certify: false }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
        let plan: ExperimentPlan = serde_json::from_str(&text)?;
        plan.validate()?;
        Ok(plan)
    }

    pub fn validate(&self) -> Result<()> {
        if self.exact_cap > exact::HARD_CAP {
            return Err(Error::InvalidArgument(format!(
                "exact_cap {} is above the solver limit {}",
                self.exact_cap,
                exact::HARD_CAP
            )));
        }
        for run in &self.runs {
            run.spec.check()?;
            run.config.validate()?;
        }
        Ok(())
    }

    pub fn options(&self) -> RunOptions {
        RunOptions { exact_cap: self.exact_cap, certify: self.certify }
    }

    /// Generates each distinct spec once, then runs the plan.
    pub fn execute(&self) -> Result<Report> {
        self.validate()?;
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut specs = Vec::new();
        let mut jobs = Vec::new();
        for run in &self.runs {
            let key = serde_json::to_string(&run.spec)?;
            let next = specs.len();
            let i = *index.entry(key).or_insert(next);
            if i == next {
                specs.push(&run.spec);
            }
            jobs.push(Job { instance: i, algorithm: run.algorithm, config: run.config.clone() });
        }
        let instances = specs.par_iter().map(|s| Instance::generated(s)).collect::<Result<Vec<_>>>()?;
        execute_jobs(&instances, &jobs, &self.options())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunOptions {
    pub exact_cap: usize,
    pub certify: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { exact_cap: exact::DEFAULT_EXACT_CAP, certify: false }
    }
}

/// Runs every algorithm on every instance, in instance-major order.
pub fn run_instances(
    instances: &[Instance],
    algorithms: &[Algorithm],
    config: &AlgorithmConfig,
    opts: &RunOptions,
) -> Result<Report> {
    config.validate()?;
    let jobs: Vec<Job> = (0..instances.len())
        .flat_map(|i| algorithms.iter().map(move |&algorithm| (i, algorithm)))
        .map(|(instance, algorithm)| Job { instance, algorithm, config: config.clone() })
        .collect();
    execute_jobs(instances, &jobs, opts)
}

struct Job {
    instance: usize,
    algorithm: Algorithm,
    config: AlgorithmConfig,
}

#[derive(Default)]
struct Facts {
    mds: Option<usize>,
    mvc: Option<usize>,
    t: Option<usize>,
}

fn execute_jobs(instances: &[Instance], jobs: &[Job], opts: &RunOptions) -> Result<Report> {
    let wants = |i: usize, p: Problem| jobs.iter().any(|j| j.instance == i && j.algorithm.problem() == p);
    let facts = instances
        .par_iter()
        .enumerate()
        .map(|(i, inst)| {
            let g = &inst.graph;
            let small = g.n() <= opts.exact_cap;
            Ok(Facts {
                mds: (small && wants(i, Problem::DominatingSet))
                    .then(|| exact::mds_exact_with_cap(g, opts.exact_cap).map(|s| s.len()))
                    .transpose()?,
                mvc: (small && wants(i, Problem::VertexCover))
                    .then(|| exact::mvc_exact_with_cap(g, opts.exact_cap).map(|s| s.len()))
                    .transpose()?,
                t: (opts.certify && g.n() <= DEFAULT_MINOR_CAP).then(|| certify_class(g)).transpose()?,
            })
        })
        .collect::<Result<Vec<Facts>>>()?;

    let rows = jobs
        .par_iter()
        .map(|job| {
            let inst = &instances[job.instance];
            let g = &inst.graph;
            if !job.algorithm.applies_to(g) {
                return Ok(None);
            }
            let res = job.algorithm.run(g, &job.config)?;
            if !res.is_valid(g) {
                return Err(Error::Invariant(format!("{} returned an invalid solution on {}", job.algorithm, inst.id)));
            }
            let f = &facts[job.instance];
            let exact_size = match job.algorithm.problem() {
                Problem::DominatingSet => f.mds,
                Problem::VertexCover => f.mvc,
            };
            let res = match exact_size {
                Some(e) => res.with_exact(e),
                None => res,
            };
            Ok(Some(ReportRow {
                instance: inst.id.clone(),
                family: inst.family.clone(),
                n: g.n(),
                m: g.m(),
                t: f.t,
                algorithm: job.algorithm,
                chosen: res.size(),
                exact: exact_size,
                ratio: res.ratio_vs_exact.map(RatioRepr::from),
                rounds: res.rounds.rounds_used,
                fallback: res.fallback_used,
                guarantee_void: res.fallback_used,
                valid: true,
            }))
        })
        .collect::<Result<Vec<Option<ReportRow>>>>()?;
    let skipped = rows.iter().filter(|r| r.is_none()).count();
    let rows: Vec<ReportRow> = rows.into_iter().flatten().collect();
    let mut summary = Summary::from_rows(&rows);
    summary.skipped = skipped;
    Ok(Report {
        header: Header {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            timestamp: None,
            instances: instances.len(),
            options: *opts,
        },
        rows,
        summary,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub instance: String,
    pub family: String,
    pub n: usize,
    pub m: usize,
    /// Smallest `t` with no `K_{2,t}` minor, when certified.
    pub t: Option<usize>,
    pub algorithm: Algorithm,
    pub chosen: usize,
    pub exact: Option<usize>,
    pub ratio: Option<RatioRepr>,
    pub rounds: usize,
    pub fallback: bool,
    /// Set when an oversized residual component forced the fallback rule, so
    /// the approximation guarantee does not apply to this row.
    pub guarantee_void: bool,
    pub valid: bool,
}

impl ReportRow {
    pub fn exact_ratio(&self) -> Option<Ratio<u64>> {
        self.exact.filter(|&e| e > 0).map(|e| Ratio::new(self.chosen as u64, e as u64))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub tool: String,
    pub version: String,
    /// Seconds since the epoch; omitted with `--no-timestamp`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timestamp: Option<u64>,
    pub instances: usize,
    pub options: RunOptions,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub rows: usize,
    pub valid: usize,
    pub fallback: usize,
    /// Runs not attempted because the algorithm does not accept the input.
    pub skipped: usize,
    /// Largest observed ratio, by family then algorithm.
    pub max_ratio: BTreeMap<String, BTreeMap<String, RatioRepr>>,
}

impl Summary {
    pub fn from_rows(rows: &[ReportRow]) -> Self {
        let mut best: BTreeMap<String, BTreeMap<String, Ratio<u64>>> = BTreeMap::new();
        for row in rows {
            if let Some(r) = row.exact_ratio() {
                let slot = best.entry(row.family.clone()).or_default().entry(row.algorithm.to_string()).or_insert(r);
                *slot = (*slot).max(r);
            }
        }
        Summary {
            rows: rows.len(),
            valid: rows.iter().filter(|r| r.valid).count(),
            fallback: rows.iter().filter(|r| r.fallback).count(),
            skipped: 0,
            max_ratio: best
                .into_iter()
                .map(|(f, per)| (f, per.into_iter().map(|(a, r)| (a, RatioRepr::from(r))).collect()))
                .collect(),
        }
    }
}

/// One line of a report file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Line {
    Header(Header),
    Row(ReportRow),
    Summary(Summary),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub header: Header,
    pub rows: Vec<ReportRow>,
    pub summary: Summary,
}

impl Report {
    pub fn to_jsonl(&self, timestamp: Option<u64>) -> String {
        let header = Header { timestamp, ..self.header.clone() };
        let lines = std::iter::once(Line::Header(header))
            .chain(self.rows.iter().cloned().map(Line::Row))
            .chain(std::iter::once(Line::Summary(self.summary.clone())));
        let mut out = String::new();
        for line in lines {
            out.push_str(&serde_json::to_string(&line).expect("report lines serialize"));
            out.push('\n');
        }
        out
    }

    pub fn write(&self, out: &mut impl Write, timestamp: Option<u64>) -> std::io::Result<()> {
        out.write_all(self.to_jsonl(timestamp).as_bytes())
    }
}

/// Parses a report back; blank lines are ignored.
pub fn parse_jsonl(text: &str) -> Result<Vec<Line>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() }))
        .collect()
}

/// Per (family, algorithm) statistics over report rows.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Aggregate {
    pub family: String,
    pub algorithm: String,
    pub rows: usize,
    pub valid: usize,
    pub fallback: usize,
    pub max_ratio: Option<RatioRepr>,
    pub mean_ratio: Option<f64>,
}

pub fn aggregate(rows: &[ReportRow]) -> Vec<Aggregate> {
    let mut groups: BTreeMap<(String, String), Vec<&ReportRow>> = BTreeMap::new();
    for row in rows {
        groups.entry((row.family.clone(), row.algorithm.to_string())).or_default().push(row);
    }
    groups
        .into_iter()
        .map(|((family, algorithm), rs)| {
            let ratios: Vec<Ratio<u64>> = rs.iter().filter_map(|r| r.exact_ratio()).collect();
            let mean = (!ratios.is_empty()).then(|| {
                ratios.iter().map(|r| *r.numer() as f64 / *r.denom() as f64).sum::<f64>() / ratios.len() as f64
            });
            Aggregate {
                family,
                algorithm,
                rows: rs.len(),
                valid: rs.iter().filter(|r| r.valid).count(),
                fallback: rs.iter().filter(|r| r.fallback).count(),
                max_ratio: ratios.iter().max().copied().map(RatioRepr::from),
                mean_ratio: mean,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row_for(spec: GeneratorSpec, alg: Algorithm) -> ReportRow {
        let plan = ExperimentPlan::grid(&[spec], &[alg], &AlgorithmConfig::default());
        let report = plan.execute().unwrap();
        assert_eq!(report.rows.len(), 1);
        report.rows[0].clone()
    }

    #[test]
    fn plan_examples() {
        let c6 = row_for(GeneratorSpec::Cycle { n: 6 }, Algorithm::ThreeRound);
        assert_eq!((c6.chosen, c6.exact, c6.rounds), (6, Some(2), 3));
        assert_eq!(c6.ratio.unwrap().decimal, 3.0);
        let k6 = row_for(GeneratorSpec::Complete { n: 6 }, Algorithm::Algo1);
        assert_eq!((k6.chosen, k6.ratio.unwrap().fraction.as_str()), (1, "1/1"));
        let p7 = row_for(GeneratorSpec::Path { n: 7 }, Algorithm::BaselineDegree2);
        assert_eq!((p7.chosen, p7.exact), (5, Some(3)));
    }

    #[test]
    fn report_round_trips() {
        let specs = [GeneratorSpec::Cycle { n: 6 }, GeneratorSpec::Tree { n: 9, seed: 3 }];
        let mut plan = ExperimentPlan::grid(&specs, &Algorithm::ALL, &AlgorithmConfig::default());
        plan.certify = true;
        let report = plan.execute().unwrap();
        assert_eq!(report.summary.skipped, 1, "degree-2 baseline skips the cycle");
        let text = report.to_jsonl(None);
        assert!(!text.contains("timestamp"));
        let lines = parse_jsonl(&text).unwrap();
        assert_eq!(lines.len(), report.rows.len() + 2);
        assert_eq!(lines[0], Line::Header(report.header.clone()));
        let rows: Vec<ReportRow> = lines
            .into_iter()
            .filter_map(|l| match l {
                Line::Row(r) => Some(r),
                _ => None,
            })
            .collect();
        assert_eq!(rows, report.rows);
        assert_eq!(Summary::from_rows(&rows).max_ratio, report.summary.max_ratio);
        assert_eq!(rows[0].t, Some(3));
    }

    #[test]
    fn spec_ids_are_readable() {
        assert_eq!(spec_id(&GeneratorSpec::CyclePower { n: 36, k: 3 }), "cycle_power/k=3,n=36");
    }
}
