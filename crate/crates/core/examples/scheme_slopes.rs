// High-SNR rates of centralized zero-forcing and quantize-and-forward on
// fully connected channels, with fitted DoF slopes.
//
// $ cargo run --release --example scheme_slopes

use backhaul_dof::channel::ChannelRealization;
use backhaul_dof::format::fmt_num;
use backhaul_dof::sim::{account_backhaul_load, scheme_dof, Scheme, DEFAULT_POWER_GRID};
use backhaul_dof::NetworkTopology;

fn main() {
    for scheme in [Scheme::ZfCentralized, Scheme::QuantizeForward] {
        for (k, m) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
            let topo = NetworkTopology::fully_connected(k, m).unwrap();
            let slopes: Vec<f64> = (0..10)
                .map(|seed| {
                    let ch = ChannelRealization::sample(&topo, seed);
                    scheme_dof(scheme, &ch, &DEFAULT_POWER_GRID).unwrap().slope
                })
                .collect();
            let mean = slopes.iter().sum::<f64>() / slopes.len() as f64;
            println!(
                "{scheme:?} K={k} M={m}: per-user DoF {} at load {}",
                fmt_num(mean),
                fmt_num(account_backhaul_load(scheme, k, m).unwrap())
            );
        }
    }
}
