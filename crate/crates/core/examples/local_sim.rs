//! Node programs in the LOCAL model: a vertex's output may depend only on
//! the ball of radius `r` around it, with original IDs as labels.

use local_mds::gen::families;
use local_mds::local::{collect_view, run_local, verify_locality, FnProgram, NodeView};
use local_mds::Graph;

fn main() {
    let g = families::path(7);

    // two rounds: each vertex learns its 2-ball and reports its size
    let ball_size = FnProgram::new(2, |view: &NodeView| view.len());
    let (sizes, transcript) = run_local(&g, &ball_size);
    println!("ball sizes on P7: {sizes:?}");
    println!("rounds used: {}", transcript.rounds_used);

    // is the root the smallest ID it can see?
    let local_min = FnProgram::new(1, |view: &NodeView| view.labels().iter().all(|&w| w >= view.root_id()));
    let (minima, _) = run_local(&families::cycle(6), &local_min);
    println!("local minima on C6: {minima:?}");

    let view = collect_view(&g, 3, 1).unwrap();
    println!("view of vertex 3 at radius 1: labels {:?}, edges {:?}", view.labels(), view.labelled_edges());

    // attaching something far away leaves vertex 0's 2-ball unchanged, so
    // any 2-round program must answer the same there
    let mut edges = g.edges();
    edges.push((6, 7));
    let longer = Graph::from_edges(8, &edges).unwrap();
    println!("locality holds at vertex 0: {}", verify_locality(&ball_size, &g, 0, &longer, 0));
}
