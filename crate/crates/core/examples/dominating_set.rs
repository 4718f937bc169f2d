//! The cut-based dominating set pipeline and its dimension-driven variant,
//! compared against the exact optimum.

use local_mds::algos::{algo1_mds, algo2_mds, AlgorithmConfig, AsdimConfig, ControlFunction, Phase};
use local_mds::exact;
use local_mds::gen::families;

fn main() {
    let cfg = AlgorithmConfig::default();
    let g = families::type1(18, 4);
    let res = algo1_mds(&g, &cfg).unwrap();
    let opt = exact::mds_exact(&g).unwrap().len();
    println!("type1(18): chose {:?} (optimum {opt})", res.chosen.as_slice());
    for phase in [Phase::OneCut, Phase::Interesting, Phase::Brute, Phase::Fallback] {
        println!("  {phase:?}: {}", res.count_phase(phase));
    }
    println!("  rounds {} in phases {:?}", res.rounds.rounds_used, res.rounds.phases);
    println!("  valid: {}", res.is_valid(&g));

    let c6 = families::cycle(6);
    let res = algo1_mds(&c6, &cfg).unwrap().with_exact(2);
    println!("C6: {} chosen, ratio {}", res.size(), res.ratio_vs_exact.unwrap());

    // the same radii from a control function f(r) = r + 3
    let asdim = AsdimConfig {
        dimension: 1,
        control: ControlFunction::Affine { slope: 1, intercept: 3 },
        diam_cap: 40,
        brute_cap: 64,
    };
    println!("radii from f: {:?}, guarantee {}", asdim.radii(), asdim.ratio_bound());
    let res = algo2_mds(&g, &asdim).unwrap();
    println!("dimension-driven variant on type1(18): {} chosen", res.size());

    // tiny radii on a long cycle power: components are too wide for the
    // exact phase, so the fallback fires and the guarantee is void
    let tight = AlgorithmConfig { r1: 2, r2: 2, diam_cap: 3, ..cfg };
    let cp = families::cycle_power(40, 3);
    let res = algo1_mds(&cp, &tight).unwrap();
    println!("cycle_power(40, 3): {} chosen, fallback {}, valid {}", res.size(), res.fallback_used, res.is_valid(&cp));
}
