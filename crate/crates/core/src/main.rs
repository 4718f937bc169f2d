use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use local_mds::algos::{Algorithm, AlgorithmConfig};
use local_mds::gen::{certify_class, generate, GeneratorSpec};
use local_mds::harness::{aggregate, parse_jsonl, run_instances, ExperimentPlan, Instance, Line};
use local_mds::verify::{sidecar_path, verify_corpus, Sidecar, SuiteOptions};
use local_mds::{edgelist, exact, Error, Result};

/// Distributed dominating set experiments on K_{2,t}-minor-free graphs.
#[derive(Parser)]
#[command(name = "local-mds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one instance as an edge list (plus a JSON sidecar with --out).
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record the smallest t with no K_{2,t} minor in the sidecar.
        #[arg(long)]
        certify: bool,
    },
    /// Run algorithms on edge-list files or on a JSON plan; writes JSON lines.
    Run {
        files: Vec<PathBuf>,
        #[arg(long, conflicts_with = "files")]
        plan: Option<PathBuf>,
        /// Algorithms to run on the files (repeatable); default all.
        #[arg(long = "algo")]
        algorithms: Vec<Algorithm>,
        #[command(flatten)]
        radii: RadiusArgs,
        #[arg(long)]
        exact_cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_timestamp: bool,
        #[arg(long)]
        certify: bool,
    },
    /// Exact optimum of one graph.
    Exact {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ProblemArg::Mds)]
        problem: ProblemArg,
        #[arg(long, default_value_t = exact::DEFAULT_EXACT_CAP)]
        exact_cap: usize,
    },
    /// Check every invariant on each `.edges` file of a directory.
    Verify {
        dir: PathBuf,
        #[command(flatten)]
        radii: RadiusArgs,
        #[arg(long, default_value_t = exact::DEFAULT_EXACT_CAP)]
        exact_cap: usize,
    },
    /// Summarise a report file by family and algorithm.
    Report {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RadiusArgs {
    #[arg(long)]
    r1: Option<usize>,
    #[arg(long)]
    r2: Option<usize>,
    #[arg(long)]
    diam_cap: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

impl RadiusArgs {
    fn apply(&self, cfg: &mut AlgorithmConfig) {
        cfg.r1 = self.r1.unwrap_or(cfg.r1);
        cfg.r2 = self.r2.unwrap_or(cfg.r2);
        cfg.diam_cap = self.diam_cap.unwrap_or(cfg.diam_cap);
        cfg.seed = self.seed.unwrap_or(cfg.seed);
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Mds,
    Mvc,
}

/// A failure already reported; carries the exit code.
struct Failed(u8);

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        eprintln!("error: {e}");
        Failed(if matches!(e, Error::Invariant(_)) { 1 } else { 2 })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failed(code)) => ExitCode::from(code),
    }
}

fn dispatch(cmd: Command) -> std::result::Result<(), Failed> {
    match cmd {
        Command::Gen { family, params, seed, out, certify } => {
            cmd_gen(&family, &params, seed, out.as_deref(), certify)?
        }
        Command::Run { files, plan, algorithms, radii, exact_cap, out, no_timestamp, certify } => {
            let mut plan = match plan {
                Some(p) => ExperimentPlan::load(&p)?,
                None if files.is_empty() => {
                    eprintln!("error: give edge-list files or --plan");
                    return Err(Failed(2));
                }
                None => ExperimentPlan { runs: Vec::new(), out: None, exact_cap: exact::DEFAULT_EXACT_CAP, certify },
            };
            for run in &mut plan.runs {
                radii.apply(&mut run.config);
            }
            plan.exact_cap = exact_cap.unwrap_or(plan.exact_cap);
            plan.certify |= certify;
            let report = if files.is_empty() {
                plan.execute()?
            } else {
                plan.validate()?;
                let mut cfg = AlgorithmConfig::default();
                radii.apply(&mut cfg);
                let instances = files.iter().map(|f| Instance::from_file(f)).collect::<Result<Vec<_>>>()?;
                let algorithms = if algorithms.is_empty() { Algorithm::ALL.to_vec() } else { algorithms };
                run_instances(&instances, &algorithms, &cfg, &plan.options())?
            };
            let stamp =
                (!no_timestamp).then(|| SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()));
            let text = report.to_jsonl(stamp);
            emit(out.as_deref().or(plan.out.as_deref()), &text)?;
            let s = &report.summary;
            eprintln!("{} rows, {} valid, {} fallback, {} skipped", s.rows, s.valid, s.fallback, s.skipped);
        }
        Command::Exact { file, problem, exact_cap } => {
            let g = edgelist::read(&file)?;
            let (name, set) = match problem {
                ProblemArg::Mds => ("mds", exact::mds_exact_with_cap(&g, exact_cap)?),
                ProblemArg::Mvc => ("mvc", exact::mvc_exact_with_cap(&g, exact_cap)?),
            };
            let value = serde_json::json!({ "problem": name, "n": g.n(), "m": g.m(), "size": set.len(), "set": set });
            println!("{value}");
        }
        Command::Verify { dir, radii, exact_cap } => {
            let mut opts = SuiteOptions { exact_cap, ..SuiteOptions::default() };
            radii.apply(&mut opts.config);
            opts.seed = opts.config.seed;
            if !dir.is_dir() {
                eprintln!("error: {} is not a directory", dir.display());
                return Err(Failed(2));
            }
            let report = verify_corpus(&dir, &opts)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            for c in report.failures() {
                println!("FAIL {} {}: {}", c.subject, c.name, c.detail);
            }
            let failed = report.failures().count();
            println!("{} files, {} checks, {} failed", report.files, report.checks.len(), failed);
            if failed > 0 {
                return Err(Failed(1));
            }
        }
        Command::Report { file, out } => {
            let text = std::fs::read_to_string(&file).map_err(|source| Error::Io { path: file.clone(), source })?;
            let rows: Vec<_> = parse_jsonl(&text)?
                .into_iter()
                .filter_map(|l| match l {
                    Line::Row(r) => Some(r),
                    _ => None,
                })
                .collect();
            let agg = aggregate(&rows);
            println!(
                "{:<20} {:<18} {:>6} {:>6} {:>9} {:>10} {:>8}",
                "family", "algorithm", "rows", "valid", "fallback", "max ratio", "mean"
            );
            for a in &agg {
                let max = a.max_ratio.as_ref().map_or("-".to_string(), |r| r.fraction.clone());
                let mean = a.mean_ratio.map_or("-".to_string(), |m| format!("{m:.3}"));
                println!(
                    "{:<20} {:<18} {:>6} {:>6} {:>9} {:>10} {:>8}",
                    a.family, a.algorithm, a.rows, a.valid, a.fallback, max, mean
                );
            }
            if let Some(path) = out {
                let mut json = serde_json::to_string_pretty(&agg).map_err(Error::from)?;
                json.push('\n');
                emit(Some(&path), &json)?;
            }
            if agg.iter().any(|a| a.valid < a.rows) {
                return Err(Failed(1));
            }
        }
    }
    Ok(())
}

fn cmd_gen(family: &str, params: &[usize], seed: u64, out: Option<&Path>, certify: bool) -> Result<()> {
    let spec = GeneratorSpec::from_args(family, params, seed)?;
    let g = generate(&spec)?;
    let Some(path) = out else {
        print!("{}", edgelist::to_string(&g));
        return Ok(());
    };
    edgelist::write(path, &g)?;
    let sidecar = Sidecar {
        family: Some(spec.family().to_string()),
        spec: Some(spec),
        n: g.n(),
        m: g.m(),
        certified_t: if certify { Some(certify_class(&g)?) } else { None },
        ..Sidecar::default()
    };
    let mut json = serde_json::to_string_pretty(&sidecar)?;
    json.push('\n');
    emit(Some(&sidecar_path(path)), &json)
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| Error::Io { path: p.to_path_buf(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
