#![allow(dead_code)]

use local_mds::gen::{generate, GeneratorSpec};
use local_mds::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random spec from any family whose instances stay within `max_n`
/// vertices (give or take the fixed-size families).
pub fn random_spec(rng: &mut impl Rng, max_n: usize) -> GeneratorSpec {
    let n = |rng: &mut dyn rand::RngCore, lo: usize| rng.gen_range(lo..=max_n.max(lo));
    let seed = rng.gen();
    match rng.gen_range(0..14) {
        0 => GeneratorSpec::Path { n: n(rng, 1) },
        1 => GeneratorSpec::Cycle { n: n(rng, 3) },
        2 => GeneratorSpec::Star { leaves: n(rng, 2) - 1 },
        3 => GeneratorSpec::Complete { n: rng.gen_range(1..=max_n.min(8)) },
        4 => GeneratorSpec::CompleteBipartite { a: 2, b: rng.gen_range(1..=(max_n - 2).min(8)) },
        5 => GeneratorSpec::CyclePower { n: n(rng, 7), k: rng.gen_range(2..=3) },
        6 => GeneratorSpec::Tree { n: n(rng, 1), seed },
        7 => GeneratorSpec::Outerplanar { n: n(rng, 3), seed },
        8 => GeneratorSpec::Fan { length: n(rng, 3) - 2 },
        9 => {
            let half = (max_n / 2).max(3);
            GeneratorSpec::Strip { p: rng.gen_range(1..half), q: rng.gen_range(1..half), seed }
        }
        10 => GeneratorSpec::Type1 { n: n(rng, 3), seed },
        11 => GeneratorSpec::Augmentation {
            base: rng.gen_range(4..=(max_n / 3).max(4)),
            pieces: rng.gen_range(1..=3),
            seed,
        },
        12 => GeneratorSpec::CliquePendant { k: rng.gen_range(2..=max_n.div_ceil(2).min(8)) },
        _ => GeneratorSpec::RandomFiltered {
            t: rng.gen_range(3..=5),
            n: rng.gen_range(5..=max_n.min(16)),
            p: 0.25,
            seed,
        },
    }
}

/// `count` generated instances with at most `max_n` vertices, deterministic
/// in `seed`.
pub fn corpus(count: usize, max_n: usize, seed: u64) -> Vec<(GeneratorSpec, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let spec = random_spec(&mut rng, max_n);
        if let Ok(g) = generate(&spec) {
            if g.n() <= max_n && g.n() > 0 {
                out.push((spec, g));
            }
        }
    }
    out
}

/// Erdős–Rényi graph.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}
