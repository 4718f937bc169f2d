//! The exact oracles: branch-and-bound and plain enumeration, both returning
//! the lexicographically smallest optimum.

use local_mds::exact::{self, gamma, DominationInstance};
use local_mds::gen::families;
use local_mds::VertexSet;

fn main() {
    let p7 = families::path(7);
    let mds = exact::mds_exact(&p7).unwrap();
    println!("P7: minimum dominating set {:?}", mds.as_slice());
    println!("     enumeration agrees: {}", exact::mds_exact_enum(&p7).unwrap() == mds);
    println!("     minimum vertex cover {:?}", exact::mvc_exact(&p7).unwrap().as_slice());

    // dominate only the ends of the path, from their closed neighbourhoods
    let ends = DominationInstance::restricted(&p7, VertexSet::from([0, 6])).unwrap();
    println!("MDS(P7, {{0, 6}}) = {:?}", exact::mds_subset_exact(&ends).unwrap().as_slice());

    let star = families::star(4);
    for v in [0, 1] {
        println!("star: gamma({v}) = {:?}", gamma(&star, v).unwrap());
    }

    let big = families::cycle(40);
    match exact::mds_exact(&big) {
        Ok(s) => println!("C40: {}", s.len()),
        Err(e) => println!("C40 refused: {e}"),
    }
    println!("C40 with a raised cap: {}", exact::mds_exact_with_cap(&big, 40).unwrap().len());
}
