//! Unique factorization in a θ-graph: a word is rewritten into every colour
//! pattern, then cut into segments and glued back together.
//!
//! `cargo run --example factorization -- [spec.json] [word]`

use twograph::theta::{parse_word, WordDisplay};
use twograph::{Color, Degree, ThetaGraph, ThetaSpec};

fn main() -> twograph::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = match args.next() {
        Some(path) => ThetaSpec::load(path)?,
        None => ThetaSpec::load(concat!(env!("CARGO_MANIFEST_DIR"), "/data/shuffle_2x3.json"))?,
    };
    let word = parse_word(&args.next().unwrap_or_else(|| "r1 b0 r2 b1".into()))?;
    let g = ThetaGraph::new(spec)?;
    println!("{g}");

    let lam = g.path_from_word(&word)?;
    let d = lam.degree();
    println!("{} = {lam} (degree {d})", WordDisplay(&word));

    let n = d.blue + d.red;
    for mask in (0u32..1 << n).filter(|m| m.count_ones() as usize == d.blue) {
        let pattern: Vec<Color> = (0..n).map(|i| if mask >> i & 1 == 1 { Color::Blue } else { Color::Red }).collect();
        println!("  {}", WordDisplay(&g.reorder(&lam, &pattern)?));
    }

    for q in d.below().filter(|q| *q != Degree::ZERO && *q != d) {
        let head = g.segment(&lam, Degree::ZERO, q)?;
        let tail = g.segment(&lam, q, d)?;
        assert_eq!(g.compose(&head, &tail)?, lam);
        println!("cut at {q}: {head} | {tail}");
    }
    Ok(())
}
