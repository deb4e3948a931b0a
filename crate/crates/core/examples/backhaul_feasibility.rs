// Closeness centrality and centralized-scheme feasibility of common backhaul
// layouts.
//
// $ cargo run --example backhaul_feasibility

use backhaul_dof::format::fmt_num;
use backhaul_dof::graph::{
    check_feasibility, closeness_centrality, min_centralized_load, FeasibilityMode,
};
use backhaul_dof::BackhaulGraph;

fn main() {
    let (k, m) = (7, 1);
    let graphs = [
        ("complete", BackhaulGraph::complete(k, 1.0).unwrap()),
        ("star", BackhaulGraph::star(k, 3, 1.0).unwrap()),
        ("ring", BackhaulGraph::ring(k, 1.0).unwrap()),
        ("path", BackhaulGraph::path(k, 1.0).unwrap()),
    ];
    for (name, bh) in &graphs {
        let closeness: Vec<f64> = (0..k)
            .map(|i| closeness_centrality(bh, i).unwrap())
            .collect();
        let best = (0..k)
            .max_by(|&a, &b| closeness[a].total_cmp(&closeness[b]))
            .unwrap();
        let finite = check_feasibility(bh, FeasibilityMode::Finite, 0.0).unwrap();
        let asymptotic = check_feasibility(bh, FeasibilityMode::Asymptotic, 0.5).unwrap();
        println!(
            "{name:<9} finite={:<5} asymptotic(eps=0.5)={:<5} best center={best} closeness={} load={}",
            finite.feasible,
            asymptotic.feasible,
            fmt_num(closeness[best]),
            fmt_num(min_centralized_load(bh, m, best).unwrap())
        );
    }
}
