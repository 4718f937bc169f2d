//! Every generator family, built from specs.

use local_mds::edgelist;
use local_mds::gen::families::{augment, Attachment, PieceSpec};
use local_mds::gen::{generate, GeneratorSpec};

fn main() {
    let specs = [
        GeneratorSpec::Path { n: 5 },
        GeneratorSpec::Cycle { n: 6 },
        GeneratorSpec::Tree { n: 10, seed: 7 },
        GeneratorSpec::Outerplanar { n: 10, seed: 1 },
        GeneratorSpec::Fan { length: 4 },
        GeneratorSpec::Strip { p: 3, q: 4, seed: 2 },
        GeneratorSpec::Type1 { n: 12, seed: 3 },
        GeneratorSpec::Augmentation { base: 6, pieces: 2, seed: 5 },
        GeneratorSpec::CliquePendant { k: 6 },
        GeneratorSpec::CyclePower { n: 12, k: 3 },
        GeneratorSpec::RandomFiltered { t: 3, n: 12, p: 0.25, seed: 9 },
    ];
    for spec in &specs {
        let g = generate(spec).unwrap();
        println!("{:<60} n = {:>2}, m = {:>2}", serde_json::to_string(spec).unwrap(), g.n(), g.m());
    }

    print!("fan(4) as an edge list:\n{}", edgelist::to_string(&generate(&specs[4]).unwrap()));

    // two corners on one base vertex are only allowed if one is a fan centre
    let base = generate(&GeneratorSpec::Path { n: 4 }).unwrap();
    let fan = |at: Vec<usize>| Attachment { piece: PieceSpec::Fan { length: 3 }, at };
    println!("fan glued at 0,1,2: {:?}", augment(&base, &[fan(vec![0, 1, 2])]).map(|g| g.n()));
    println!("fan sides on one vertex: {:?}", augment(&base, &[fan(vec![0, 1, 1])]).map(|g| g.n()));
}
