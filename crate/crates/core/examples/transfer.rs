//! Transfer operators on a finite cyclic group and on the circle's dual.
//!
//! `cargo run --example transfer -- [n] [a]`

use twograph::algebra::{rational, Coeff};
use twograph::groups::{alpha_pullback, dual_transfer, transfer_eval, FiniteGroup};

fn show(f: &[Coeff]) -> String {
    f.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn main() -> twograph::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(6);
    let a = args.next().unwrap_or(2);
    let g = FiniteGroup::cyclic(n)?;

    let f: Vec<Coeff> = (0..n as i64).map(|i| rational(i, 1)).collect();
    let lf = transfer_eval(&g, a, &f)?;
    println!("Z/{n}, a = {a}");
    println!("  f          {}", show(&f));
    println!("  L_a f      {}", show(&lf));
    println!("  alpha_a f  {}", show(&alpha_pullback(&g, a, &f)?));

    let one = vec![rational(1, 1); n as usize];
    let l1 = transfer_eval(&g, a, &one)?;
    let back = transfer_eval(&g, a, &alpha_pullback(&g, a, &f)?)?;
    let expected: Vec<Coeff> = f.iter().zip(&l1).map(|(x, y)| x * y).collect();
    assert_eq!(back, expected);
    println!("  L_a 1      {}  (indicator of the image)", show(&l1));
    println!("  L_a(alpha_a f) = f . L_a 1");

    println!("characters of the circle, a = {a}");
    for x in -4..=4 {
        match dual_transfer(a, &[x]) {
            Some(y) => println!("  L_a chi_{x} = chi_{}", y[0]),
            None => println!("  L_a chi_{x} = 0"),
        }
    }
    Ok(())
}
