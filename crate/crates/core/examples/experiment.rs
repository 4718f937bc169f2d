//! A small experiment: a grid of specs and algorithms, reported as JSON lines.

use local_mds::algos::{Algorithm, AlgorithmConfig};
use local_mds::gen::GeneratorSpec;
use local_mds::harness::{aggregate, ExperimentPlan};

fn main() {
    let specs: Vec<GeneratorSpec> = (0..4)
        .flat_map(|seed| {
            [
                GeneratorSpec::Outerplanar { n: 14, seed },
                GeneratorSpec::Type1 { n: 16, seed },
                GeneratorSpec::Tree { n: 12, seed },
            ]
        })
        .collect();
    let algorithms = [Algorithm::Algo1, Algorithm::ThreeRound, Algorithm::BaselineDegree2, Algorithm::BaselineAll];
    let mut plan = ExperimentPlan::grid(&specs, &algorithms, &AlgorithmConfig::default());
    plan.certify = true;
    let report = plan.execute().unwrap();

    print!("{}", report.to_jsonl(None).lines().take(3).map(|l| format!("{l}\n")).collect::<String>());
    println!("...");
    for a in aggregate(&report.rows) {
        let max = a.max_ratio.map(|r| r.fraction).unwrap_or_default();
        println!(
            "{:<12} {:<17} rows {:>2}  max ratio {max:>5}  mean {:.2}",
            a.family,
            a.algorithm,
            a.rows,
            a.mean_ratio.unwrap_or(0.0)
        );
    }
    println!("skipped (degree-2 baseline needs a tree): {}", report.summary.skipped);
}
