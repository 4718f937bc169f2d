//! The exhaustive K_{2,t} minor test and class certification.

use local_mds::gen::{certify_class, contains_k2t_minor, families};
use local_mds::Graph;

fn main() {
    let k23 = families::complete_bipartite(2, 3);
    let w = contains_k2t_minor(&k23, 3).unwrap().unwrap();
    println!("K_2,3: hubs {:?}, spokes {:?}, valid {}", w.hubs, w.spokes, w.validate(&k23));

    // a wheel has a K_2,3 minor even though no three rim vertices share two
    // common neighbours: one hub has to be a contracted arc of the rim
    let mut edges: Vec<_> = (1..8).map(|i| (i, i % 7 + 1)).collect();
    edges.extend((1..8).map(|i| (0, i)));
    let wheel = Graph::from_edges(8, &edges).unwrap();
    let w = contains_k2t_minor(&wheel, 3).unwrap().unwrap();
    println!("wheel W7: hubs {:?}, spokes {:?}", w.hubs, w.spokes);

    for (name, g) in [
        ("tree", families::tree(15, 2)),
        ("C6", families::cycle(6)),
        ("outerplanar", families::outerplanar(15, 4)),
        ("strip(5,6)", families::strip(5, 6, 1).unwrap()),
        ("K_2,4", families::complete_bipartite(2, 4)),
    ] {
        println!("{name:>12}: smallest excluded K_2,t has t = {}", certify_class(&g).unwrap());
    }

    println!("n = 30: {:?}", contains_k2t_minor(&families::path(30), 2).map(|w| w.is_some()));
}
