// Evaluates the graph condition and its two matrix-rank forms, with sampled
// channel ranks confirming the matching predictions.
//
// $ cargo run --example rank_conditions

use backhaul_dof::channel::ChannelRealization;
use backhaul_dof::graph::check_ehc;
use backhaul_dof::rank::{
    check_condition_b, check_condition_c, matching_predicts_rank, numeric_rank,
};
use backhaul_dof::NetworkTopology;

fn main() {
    let seed = 42;
    let topologies = [
        ("fully K=4", NetworkTopology::fully_connected(4, 2).unwrap()),
        ("identity K=4", NetworkTopology::identity(4, 2).unwrap()),
        (
            "banded K=5",
            NetworkTopology::from_fn(5, 1, |rx, tx| (tx + 5 - rx) % 5 <= 2).unwrap(),
        ),
    ];
    for (name, topo) in &topologies {
        let b = check_condition_b(topo, 10, seed).unwrap();
        let c = check_condition_c(topo, 10, seed).unwrap();
        println!(
            "{name:<13} a={} b={} c={} spot checks={} violations={}",
            check_ehc(topo),
            b.holds,
            c.holds,
            b.spot_checks + c.spot_checks,
            b.violations.len() + c.violations.len()
        );
    }

    let topo = &topologies[2].1;
    let check = matching_predicts_rank(topo, &[0, 1], &[3, 4], 5, seed).unwrap();
    println!(
        "block H_QS for Q={{3,4}}, S={{0,1}}: matching {} ranks {:?}",
        check.matching, check.ranks
    );

    let h = ChannelRealization::sample(topo, seed).super_matrix();
    println!(
        "super matrix rank {} of {}",
        numeric_rank(&h, 1e-9).unwrap(),
        h.nrows()
    );
}
