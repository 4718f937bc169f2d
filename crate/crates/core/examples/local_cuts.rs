//! Local 1-cuts, minimal local 2-cuts and interesting vertices.

use local_mds::algos::AlgorithmConfig;
use local_mds::cuts::{enumerate_cut_sets, is_local_1_cut, is_r_interesting, local_2_cuts_at};
use local_mds::gen::families;

fn main() {
    let p7 = families::path(7);
    for v in p7.vertices() {
        let cut = is_local_1_cut(&p7, v, 2).unwrap();
        println!("P7 vertex {v}: local 1-cut = {}", cut.is_some());
    }

    let c6 = families::cycle(6);
    for cut in local_2_cuts_at(&c6, 0, 3).unwrap() {
        println!("C6 minimal 2-cut {:?}, components {:?}", cut.members, cut.attached_components);
    }
    if let Some(w) = is_r_interesting(&c6, 0, 3).unwrap() {
        println!("vertex 0 is interesting via partner {} (private neighbour {})", w.partner, w.private_neighbor);
    }

    // in a clique with pendants every pendant is dominated by the clique,
    // so no vertex is interesting
    let cp = families::clique_pendant(6);
    let (x, i) = enumerate_cut_sets(&cp, &AlgorithmConfig::default()).unwrap();
    println!("clique_pendant(6): X = {:?}, I = {:?}", x.as_slice(), i.as_slice());
}
