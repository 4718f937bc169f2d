//! The 3-round algorithm: twin reduction, then every vertex whose closed
//! neighbourhood is not inside a neighbour's.

use local_mds::algos::algo_3round;
use local_mds::exact;
use local_mds::gen::{certify_class, families};

fn main() {
    let graphs = [
        ("star K_1,5", families::star(5)),
        ("C6", families::cycle(6)),
        ("K6", families::complete(6)),
        ("outerplanar(14)", families::outerplanar(14, 1)),
        ("K_2,3", families::complete_bipartite(2, 3)),
    ];
    for (name, g) in graphs {
        let res = algo_3round(&g);
        let opt = exact::mds_exact(&g).unwrap().len();
        let t = certify_class(&g).unwrap();
        println!(
            "{name:>16}: {} chosen, optimum {opt}, no K_2,{t} minor, bound (2t-1)·opt = {}, rounds {}",
            res.size(),
            (2 * t - 1) * opt,
            res.rounds.rounds_used
        );
    }
}
