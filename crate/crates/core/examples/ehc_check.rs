// Checks the Extended Hall Condition on a few topologies with the flow
// algorithm and compares it against subset enumeration.
//
// $ cargo run --example ehc_check

use backhaul_dof::graph::{check_ehc, check_ehc_bruteforce, max_pis, max_pis_global};
use backhaul_dof::NetworkTopology;

fn report(name: &str, topo: &NetworkTopology) {
    let pis = max_pis_global(topo);
    let members: Vec<String> = pis.members.iter().map(ToString::to_string).collect();
    println!(
        "{name:<14} K={} EHC={:<5} brute={:<5} max PIS={} {{{}}}",
        topo.k(),
        check_ehc(topo),
        check_ehc_bruteforce(topo).unwrap(),
        pis.size,
        members.join(", ")
    );
}

fn main() {
    report("fully", &NetworkTopology::fully_connected(5, 1).unwrap());
    report("identity", &NetworkTopology::identity(4, 1).unwrap());

    // each receiver hears its own transmitter and the next three
    let banded = NetworkTopology::from_fn(6, 1, |rx, tx| (tx + 6 - rx) % 6 <= 3).unwrap();
    report("banded", &banded);

    // each receiver hears only its own transmitter and the next one
    let cyclic = NetworkTopology::from_fn(6, 1, |rx, tx| (tx + 6 - rx) % 6 <= 1).unwrap();
    report("cyclic", &cyclic);

    // the largest PIS through a fixed (transmitter, receiver) pair
    let pair = max_pis(&cyclic, 0, 3).unwrap();
    println!("cyclic through (t0, r3): size {}", pair.size);
}
