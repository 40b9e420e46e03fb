mod common;

use common::{all_paths, dual_transfer_oracle, grid, is_periodic_at, theta_map};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twograph::doubling::double;
use twograph::groups::dual_transfer;
use twograph::periodicity::{decide_periodicity, PeriodWitness, PeriodicityVerdict};
use twograph::{Color, Degree, Edge, Path, ThetaGraph, ThetaSpec};

/// Every bijection on `n1 x n2` squares.
fn all_specs(n1: usize, n2: usize) -> Vec<ThetaSpec> {
    let targets: Vec<(u32, u32)> = (0..n2 as u32).flat_map(|f| (0..n1 as u32).map(move |e| (f, e))).collect();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..targets.len()).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut it = p.iter().map(|&i| targets[i]);
        out.push(ThetaSpec::from_fn(n1, n2, |_, _| it.next().unwrap()));
    });
    out
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

fn to_edges(word: &[(bool, u32)]) -> Vec<Edge> {
    word.iter().map(|&(b, id)| if b { Edge::Blue(id) } else { Edge::Red(id) }).collect()
}

fn patterns(d: Degree) -> Vec<Vec<bool>> {
    let n = d.blue + d.red;
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == d.blue)
        .map(|m| (0..n).map(|i| m >> i & 1 == 1).collect())
        .collect()
}

#[test]
fn factorization_matches_grid_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (n1, n2) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let spec = ThetaSpec::random(n1, n2, &mut rng);
        let g = ThetaGraph::new(spec.clone()).unwrap();
        for d in Degree::new(2, 2).below() {
            for lam in g.enumerate_paths(d).unwrap() {
                let grid = grid(&spec, &lam);
                for pat in patterns(d) {
                    let colors: Vec<Color> = pat.iter().map(|&b| if b { Color::Blue } else { Color::Red }).collect();
                    assert_eq!(g.reorder(&lam, &colors).unwrap(), to_edges(&grid.read(&pat)));
                }
                for q in d.below() {
                    for p in q.below() {
                        assert_eq!(g.segment(&lam, p, q).unwrap(), grid.segment(p, q));
                    }
                }
            }
        }
    }
}

fn expected_verdict(spec: &ThetaSpec, a0: usize, b0: usize, kmax: usize) -> Option<(u32, u32)> {
    (1..=kmax).map(|k| (k * a0, k * b0)).find(|&(a, b)| is_periodic_at(spec, a, b)).map(|(a, b)| (a as u32, b as u32))
}

fn check_against_oracle(spec: &ThetaSpec, a0: usize, b0: usize, kmax: u32) {
    let g = ThetaGraph::new(spec.clone()).unwrap();
    let verdict = decide_periodicity(&g, kmax).unwrap();
    match (expected_verdict(spec, a0, b0, kmax as usize), &verdict) {
        (Some(ab), PeriodicityVerdict::Periodic { witness }) => {
            assert_eq!(witness.degree(), ab);
            check_witness(spec, witness);
        }
        (None, PeriodicityVerdict::Aperiodic { checked }) => assert_eq!(checked.len(), kmax as usize),
        (e, v) => panic!("oracle says {e:?}, decision says {v:?} for {spec:?}"),
    }
}

/// `γ(μ)` is the red prefix of every red-first refactorization of `μβ`,
/// independent of `β`, and `αβ = γ^{-1}(α) γ(β)`.
fn check_witness(spec: &ThetaSpec, w: &PeriodWitness) {
    let (a, b) = (w.a as usize, w.b as usize);
    let red_first: Vec<bool> = (0..a + b).map(|i| i >= b).collect();
    let blues = all_paths(spec.n1, spec.n2, Degree::new(a, 0));
    let reds = all_paths(spec.n1, spec.n2, Degree::new(0, b));
    for mu in &blues {
        for beta in &reds {
            let word = grid(spec, &Path::new(mu.blue().to_vec(), beta.red().to_vec())).read(&red_first);
            let prefix: Vec<u32> = word[..b].iter().map(|&(_, id)| id).collect();
            assert_eq!(w.gamma(mu).unwrap().red(), &prefix[..]);
        }
    }
    for alpha in &reds {
        for beta in &blues {
            let lhs = Path::new(w.gamma_inverse(alpha).unwrap().blue().to_vec(), w.gamma(beta).unwrap().red().to_vec());
            let word = grid(spec, &lhs).read(&red_first);
            let expected: Vec<(bool, u32)> =
                alpha.red().iter().map(|&r| (false, r)).chain(beta.blue().iter().map(|&e| (true, e))).collect();
            assert_eq!(word, expected);
        }
    }
}

#[test]
fn periodicity_agrees_with_brute_force_on_every_2x2_theta() {
    let specs = all_specs(2, 2);
    assert_eq!(specs.len(), 24);
    let mut periodic = 0;
    for spec in &specs {
        check_against_oracle(spec, 1, 1, 2);
        periodic += is_periodic_at(spec, 1, 1) as usize;
    }
    assert!(periodic > 0 && periodic < 24);
}

#[test]
fn periodicity_agrees_with_brute_force_2x4() {
    // 2^2 = 4^1, so candidates are (2k, k)
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        check_against_oracle(&ThetaSpec::random(2, 4, &mut rng), 2, 1, 1);
    }
    // red edge x<<1|y behaves like the blue pair x y: b_e r_(x,y) = r_(e,x) b_y
    let spec = ThetaSpec::from_fn(2, 4, |e, f| (e << 1 | f >> 1, f & 1));
    assert!(is_periodic_at(&spec, 2, 1));
    check_against_oracle(&spec, 2, 1, 1);
}

#[test]
fn doubled_theta_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (n1, n2) in [(2, 2), (2, 3), (3, 3)] {
        let spec = ThetaSpec::random(n1, n2, &mut rng);
        let t = theta_map(&spec);
        let d = double(&ThetaGraph::new(spec).unwrap()).unwrap();
        let dt = theta_map(d.graph().spec());
        for e in 0..n1 as u32 {
            for f in 0..n1 as u32 {
                for g in 0..n2 as u32 {
                    for h in 0..n2 as u32 {
                        let (g2, e2) = t[&(e, g)];
                        let (h2, f2) = t[&(f, h)];
                        let (r, b) = dt[&(e * n1 as u32 + f, g * n2 as u32 + h)];
                        assert_eq!((r, b), (g2 * n2 as u32 + h2, e2 * n1 as u32 + f2));
                    }
                }
            }
        }
    }
}

#[test]
fn dual_transfer_matches_character_sums() {
    for a in 1..=6u64 {
        for x in -12..=12i64 {
            assert_eq!(dual_transfer(a, &[x]), dual_transfer_oracle(a, &[x], 25), "a={a} x={x}");
        }
    }
    for a in 1..=4u64 {
        for x in -6..=6i64 {
            for y in -6..=6i64 {
                assert_eq!(dual_transfer(a, &[x, y]), dual_transfer_oracle(a, &[x, y], 5), "a={a} x=({x},{y})");
            }
        }
    }
}
