//! Builds the doubled graph and reads off simplicity of the crossed product.
//!
//! `cargo run --example crossed_product -- [spec.json]`

use twograph::doubling::{crossed_product_verdict, double};
use twograph::periodicity::DEFAULT_KMAX;
use twograph::{validate_theta, ThetaGraph, ThetaSpec};

fn main() -> twograph::Result<()> {
    let specs = match std::env::args().nth(1) {
        Some(path) => vec![ThetaSpec::load(path)?],
        None => vec![ThetaSpec::twin(2), ThetaSpec::flip(2, 2), ThetaSpec::flip(2, 3)],
    };
    for spec in specs {
        let g = ThetaGraph::new(spec)?;
        let d = double(&g)?;
        validate_theta(d.graph().spec())?;
        println!("{}x{} doubles to {}x{}", g.n1(), g.n2(), d.graph().n1(), d.graph().n2());
        // one commutation of the doubled graph, as pairs of original edges
        let (red, blue) = d.eta((0, 1), (1, 0))?;
        println!("  (b0 b1)(r1 r0) = (r{} r{})(b{} b{})", red.0, red.1, blue.0, blue.1);
        let report = crossed_product_verdict(&g, DEFAULT_KMAX)?;
        println!(
            "  doubled: {}, simple: {:?}, purely infinite: {:?}, conclusive: {}",
            report.doubled.label(),
            report.simple,
            report.purely_infinite,
            report.conclusive
        );
        println!("  {}", report.reason);
    }
    Ok(())
}
