// Sum-DoF bounds of two-user channels with unequal antenna counts and
// asymmetric backhaul.
//
// $ cargo run --example two_user_region

use backhaul_dof::dof::{two_user_region_bounds, two_user_tradeoff};
use backhaul_dof::format::fmt_num;
use backhaul_dof::TwoUserConfig;

fn main() {
    for (m1, n1, m2, n2, c12, c21) in [
        (1, 1, 1, 1, 0.0, 0.0),
        (1, 1, 1, 1, 1.0, 1.0),
        (3, 2, 2, 3, 0.5, 0.0),
        (4, 4, 2, 2, 0.0, 2.0),
    ] {
        let cfg = TwoUserConfig::new(m1, n1, m2, n2, c12, c21).unwrap();
        let (b1, b2) = two_user_region_bounds(&cfg);
        println!(
            "M=({m1},{m2}) N=({n1},{n2}) C=({c12},{c21}): sum DoF <= {} and <= {}",
            fmt_num(b1),
            fmt_num(b2)
        );
    }

    for alpha in [0.0, 0.5, 1.0, 1.5, 2.0] {
        println!(
            "M1=2 M2=1 alpha={}: per-user DoF {}",
            fmt_num(alpha),
            fmt_num(two_user_tradeoff(2, 1, alpha).unwrap())
        );
    }
}
