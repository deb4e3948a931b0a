// Converse bound from two-group partitions for several backhaul graphs with
// the same total capacity.
//
// $ cargo run --example converse_partition

use backhaul_dof::dof::{converse_enumerate, partition_bound, tradeoff_bounds};
use backhaul_dof::format::fmt_num;
use backhaul_dof::BackhaulGraph;

fn main() {
    let (k, m) = (6, 1);
    let graphs = [
        ("complete", BackhaulGraph::complete(k, 0.2).unwrap()),
        ("star", BackhaulGraph::star(k, 0, 0.6).unwrap()),
        ("ring", BackhaulGraph::ring(k, 0.5).unwrap()),
    ];
    for (name, bh) in &graphs {
        let alpha = bh.per_user_load();
        let (lower, upper) = tradeoff_bounds(k, m, alpha).unwrap();
        println!(
            "{name:<9} alpha={} converse={} closed form [{}, {}]",
            fmt_num(alpha),
            fmt_num(converse_enumerate(k, m, bh).unwrap()),
            fmt_num(lower),
            fmt_num(upper)
        );
    }

    let ring = &graphs[2].1;
    for group in [[0, 1, 2], [0, 2, 4]] {
        println!(
            "ring split {group:?}: sum bound {}",
            fmt_num(partition_bound(k, m, ring, &group).unwrap())
        );
    }
}
