// Fitted high-SNR slopes of the two log-det expressions used in the
// achievability proofs.
//
// $ cargo run --release --example logdet_slopes

use backhaul_dof::format::fmt_num;
use backhaul_dof::sim::{
    check_logdet_interference_slope, check_logdet_sum_slope, DEFAULT_POWER_GRID,
};

fn main() {
    let grid = DEFAULT_POWER_GRID;
    for (n, ms) in [
        (2, vec![1, 2]),
        (3, vec![1]),
        (2, vec![2, 2]),
        (4, vec![1, 1]),
    ] {
        let c = check_logdet_sum_slope(n, &ms, &grid, 10, 42).unwrap();
        println!(
            "sum     N={n} M={ms:?}: slope {} target {} pass={}",
            fmt_num(c.slope),
            fmt_num(c.target),
            c.passed
        );
    }
    for (ni, mi, nj) in [(2, 3, 2), (1, 1, 1), (2, 4, 1), (3, 3, 1)] {
        let c = check_logdet_interference_slope(ni, mi, nj, &grid, 10, 42).unwrap();
        println!(
            "interf  Ni={ni} Mi={mi} Nj={nj}: slope {} target {} pass={}",
            fmt_num(c.slope),
            fmt_num(c.target),
            c.passed
        );
    }
}
