//! Independent oracles shared by the integration tests. None of them calls
//! the library's rewriting code: they work from the raw θ table.

#![allow(dead_code)]

use std::collections::HashMap;

use twograph::{Degree, Path, ThetaSpec};

/// The full commuting-square grid of a path of degree `(m, n)`.
///
/// `h[j][i]` is the blue edge from `(i, j)` to `(i+1, j)` and `v[i][j]` the
/// red edge from `(i, j)` to `(i, j+1)`. Square `(i, j)` reads
/// `h[j][i] v[i+1][j] = v[i][j] h[j+1][i]`.
pub struct Grid {
    pub h: Vec<Vec<u32>>,
    pub v: Vec<Vec<u32>>,
}

pub fn theta_map(spec: &ThetaSpec) -> HashMap<(u32, u32), (u32, u32)> {
    spec.theta.iter().map(|r| ((r.blue, r.red), (r.red_out, r.blue_out))).collect()
}

/// Fill the grid from the blue-first factorization: bottom row then right
/// column, solving squares from the bottom-right corner outwards.
pub fn grid(spec: &ThetaSpec, path: &Path) -> Grid {
    let d = path.degree();
    let (m, n) = (d.blue, d.red);
    let mut h = vec![vec![u32::MAX; m]; n + 1];
    let mut v = vec![vec![u32::MAX; n]; m + 1];
    h[0].copy_from_slice(path.blue());
    v[m].copy_from_slice(path.red());
    // the bottom and right edges of a square give its left and top through θ
    let forward = theta_map(spec);
    for j in 0..n {
        for i in (0..m).rev() {
            let (left, top) = forward[&(h[j][i], v[i + 1][j])];
            v[i][j] = left;
            h[j + 1][i] = top;
        }
    }
    Grid { h, v }
}

impl Grid {
    /// `λ(p, q)` in blue-first form: along row `p.red`, then up column `q.blue`.
    pub fn segment(&self, p: Degree, q: Degree) -> Path {
        let blue = (p.blue..q.blue).map(|i| self.h[p.red][i]).collect();
        let red = (p.red..q.red).map(|j| self.v[q.blue][j]).collect();
        Path::new(blue, red)
    }

    /// The word read along the lattice path with the given colour pattern,
    /// as `(is_blue, id)` pairs.
    pub fn read(&self, pattern: &[bool]) -> Vec<(bool, u32)> {
        let (mut i, mut j) = (0, 0);
        pattern
            .iter()
            .map(|&blue| {
                if blue {
                    i += 1;
                    (true, self.h[j][i - 1])
                } else {
                    j += 1;
                    (false, self.v[i][j - 1])
                }
            })
            .collect()
    }
}

/// Every path of degree `d`, built directly as (blue word, red word).
pub fn all_paths(n1: usize, n2: usize, d: Degree) -> Vec<Path> {
    let words = |k: usize, len: usize| -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..k as u32).map(move |e| {
                        let mut w = w.clone();
                        w.push(e);
                        w
                    })
                })
                .collect();
        }
        out
    };
    let reds = words(n2, d.red);
    words(n1, d.blue)
        .into_iter()
        .flat_map(|b| reds.iter().map(move |r| Path::new(b.clone(), r.clone())))
        .collect()
}

/// Brute force: every `λ` of degree `(2a, 2b)` has
/// `λ((a,0), (2a,b)) = λ((0,b), (a,2b))`. This decides periodicity at `(a, b)`.
pub fn is_periodic_at(spec: &ThetaSpec, a: usize, b: usize) -> bool {
    let d = Degree::new(2 * a, 2 * b);
    all_paths(spec.n1, spec.n2, d).iter().all(|lam| {
        let g = grid(spec, lam);
        g.segment(Degree::new(a, 0), Degree::new(2 * a, b)) == g.segment(Degree::new(0, b), Degree::new(a, 2 * b))
    })
}

/// `L_a χ_x`, computed by summing `χ_x` over the `a`-th roots inside the
/// subgroup of order `M = a·K` of each circle, in exact arithmetic in
/// `ℤ[ζ_M]`. Returns `None` when the result vanishes at every sample point
/// and `Some(y)` when it equals `χ_y` there; panics otherwise.
pub fn dual_transfer_oracle(a: u64, x: &[i64], k: u64) -> Option<Vec<i64>> {
    let m = (a * k) as usize;
    let phi = cyclotomic(m);
    let l = x.len();
    // points g = ζ_M^{a·t}, t ∈ (ℤ/K)^l; preimages h = ζ_M^{t + K j}
    let mut result: Option<Option<Vec<i64>>> = None;
    for t in 0..(k as usize).pow(l as u32) {
        let coords: Vec<usize> = (0..l).map(|i| (t / (k as usize).pow(i as u32)) % k as usize).collect();
        let mut sum = vec![0i64; m];
        for js in 0..(a as usize).pow(l as u32) {
            let mut exp = 0i64;
            for i in 0..l {
                let j = (js / (a as usize).pow(i as u32)) % a as usize;
                let h = (coords[i] + k as usize * j) as i64;
                exp += h * x[i];
            }
            sum[exp.rem_euclid(m as i64) as usize] += 1;
        }
        let sum = reduce(&sum, &phi);
        // |ker ω_a| = a^l; compare a^l·χ_y(g) against the sum
        let scale = (a as i64).pow(l as u32);
        let this = if sum.iter().all(|&c| c == 0) {
            None
        } else {
            let y: Vec<i64> = x.iter().map(|v| v.div_euclid(a as i64)).collect();
            let mut target = vec![0i64; m];
            let e: i64 = (0..l).map(|i| (a as usize * coords[i]) as i64 * y[i]).sum();
            target[e.rem_euclid(m as i64) as usize] = scale;
            assert_eq!(reduce(&target, &phi), sum, "L_a χ_x is not a character at t = {coords:?}");
            Some(y)
        };
        match &result {
            None => result = Some(this),
            Some(r) => assert_eq!(*r, this, "L_a χ_x vanishes at some sample points only"),
        }
    }
    result.flatten()
}

/// Integer coefficients, lowest degree first.
fn poly_divmod(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "monic divisor");
    if r.len() <= dd {
        return (vec![0], r);
    }
    let mut q = vec![0i64; r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd];
        q[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            r[i + j] -= c * dj;
        }
    }
    r.truncate(dd.max(1));
    (q, r)
}

fn cyclotomic(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        let (q, r) = poly_divmod(&p, &cyclotomic(d));
        assert!(r.iter().all(|&c| c == 0));
        p = q;
    }
    p
}

fn reduce(f: &[i64], phi: &[i64]) -> Vec<i64> {
    let (_, mut r) = poly_divmod(f, phi);
    r.resize(phi.len() - 1, 0);
    r
}

/// Exact rationals as (numerator, denominator) with a positive denominator,
/// kept small enough for `i64`.
pub type Q = (i64, i64);

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

pub fn q(n: i64, d: i64) -> Q {
    let g = gcd(n, d).max(1) * d.signum();
    (n / g, d / g)
}

/// `L_a f` on `ℤ/n` by direct summation over preimages, with the kernel
/// counted rather than computed.
pub fn cyclic_transfer(n: u64, a: u64, f: &[Q]) -> Vec<Q> {
    let ker = (0..n).filter(|h| a * h % n == 0).count() as i64;
    (0..n)
        .map(|g| {
            let (mut num, mut den) = (0i64, 1i64);
            for h in (0..n).filter(|h| a * h % n == g) {
                let (fn_, fd) = f[h as usize];
                num = num * fd + fn_ * den;
                den *= fd;
                let r = q(num, den);
                (num, den) = r;
            }
            q(num, den * ker)
        })
        .collect()
}

pub fn cyclic_alpha(n: u64, a: u64, f: &[Q]) -> Vec<Q> {
    (0..n).map(|x| f[(a * x % n) as usize]).collect()
}

pub fn pointwise(f: &[Q], g: &[Q]) -> Vec<Q> {
    f.iter().zip(g).map(|(x, y)| q(x.0 * y.0, x.1 * y.1)).collect()
}

pub fn indicator(n: u64, i: u64) -> Vec<Q> {
    (0..n).map(|j| q((i == j) as i64, 1)).collect()
}
