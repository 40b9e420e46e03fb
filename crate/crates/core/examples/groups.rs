//! Kernel and index arithmetic and the classification of group systems.
//!
//! `cargo run --example groups -- [group.json]`

use twograph::groups::{classify, image_index, ker_size, GroupSpec, DEFAULT_TEST_RANGE};

fn main() -> twograph::Result<()> {
    let groups = match std::env::args().nth(1) {
        Some(path) => vec![GroupSpec::load(path)?],
        None => vec![
            GroupSpec::Torus { rank: 2 },
            GroupSpec::from_json(r#"{"kind":"solenoid","finite":{"3":2},"infinite":[2]}"#)?,
            GroupSpec::Padic { p: 3 },
            GroupSpec::Finite { factors: vec![2] },
            GroupSpec::Finite { factors: vec![4] },
        ],
    };
    for g in groups {
        println!("{}", g.to_json());
        let kers: Vec<String> = (1..=8).map(|a| ker_size(&g, a).map(|k| k.to_string())).collect::<Result<_, _>>()?;
        let idx: Vec<String> = (1..=8).map(|a| image_index(&g, a).map(|k| k.to_string())).collect::<Result<_, _>>()?;
        println!("  |ker|  for a = 1..8: {}", kers.join(" "));
        println!("  index  for a = 1..8: {}", idx.join(" "));
        let report = classify(&g, DEFAULT_TEST_RANGE)?;
        println!("  multiplicative kernel: {:?}", report.conditions.multiplicative_kernel);
        println!("  {:?}: {}", report.verdict, report.reason);
    }
    Ok(())
}
