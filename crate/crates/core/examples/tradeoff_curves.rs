// Prints the DoF vs per-user backhaul load curves for a few network sizes.
//
// $ cargo run --example tradeoff_curves

use backhaul_dof::dof::{alpha_min_converse, centralized_load, tradeoff_asymptotic, TradeoffCurve};
use backhaul_dof::format::fmt_num;

fn main() {
    let m = 1;
    for k in [2, 3, 4, 5, 8] {
        let curve = TradeoffCurve::sample(k, m, 2.0, 9).unwrap();
        print!(
            "K={k}: centralized load {}",
            fmt_num(centralized_load(k, m).unwrap())
        );
        if k % 2 == 1 {
            print!(
                ", full DoF impossible below {}",
                fmt_num(alpha_min_converse(k, m).unwrap())
            );
        }
        println!();
        for p in &curve.points {
            println!(
                "  alpha={:<5} lower={:<9} upper={:<9} K->inf={}",
                fmt_num(p.alpha),
                fmt_num(p.dof_lower),
                fmt_num(p.dof_upper),
                fmt_num(tradeoff_asymptotic(m, p.alpha).unwrap())
            );
        }
    }
}
