//! Decides periodicity for the twin and flip graphs and for a random graph.
//!
//! `cargo run --example periodicity -- [kmax]`

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twograph::periodicity::{decide_periodicity, verify_period, PeriodicityVerdict};
use twograph::{ThetaGraph, ThetaSpec};

fn main() -> twograph::Result<()> {
    let kmax: u32 = std::env::args().nth(1).map_or(Ok(3), |s| s.parse()).expect("kmax is an integer");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let graphs = [
        ("twin 2x2", ThetaSpec::twin(2)),
        ("flip 2x2", ThetaSpec::flip(2, 2)),
        ("random 2x4", ThetaSpec::random(2, 4, &mut rng)),
        ("flip 2x3", ThetaSpec::flip(2, 3)),
    ];
    for (name, spec) in graphs {
        let g = ThetaGraph::new(spec)?;
        match decide_periodicity(&g, kmax)? {
            PeriodicityVerdict::Periodic { witness } => {
                println!("{name}: periodic at {:?}, verified = {}", witness.degree(), verify_period(&g, &witness));
                for (mu, nu) in witness.table() {
                    println!("    {mu} -> {nu}");
                }
            }
            other => println!("{name}: {other:?}"),
        }
    }
    Ok(())
}
