//! Vertex cover with the same cut-then-solve structure.

use local_mds::algos::{algo_mvc, AlgorithmConfig, Phase};
use local_mds::exact;
use local_mds::gen::families;

fn main() {
    let cfg = AlgorithmConfig::default();
    for (name, g) in [
        ("P7", families::path(7)),
        ("C8", families::cycle(8)),
        ("fan(6)", families::fan(6)),
        ("strip(4,5)", families::strip(4, 5, 2).unwrap()),
    ] {
        let res = algo_mvc(&g, &cfg).unwrap();
        let opt = exact::mvc_exact(&g).unwrap().len();
        println!(
            "{name:>10}: {} chosen (1-cuts {}, 2-cuts {}, solved {}), optimum {opt}, valid {}",
            res.size(),
            res.count_phase(Phase::OneCut),
            res.count_phase(Phase::TwoCut),
            res.count_phase(Phase::Brute),
            res.is_valid(&g)
        );
    }
}
