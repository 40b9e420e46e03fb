//! Periodicity of a single-vertex 2-graph.
//!
//! `Λ` is periodic iff for some positive `(a, b)` there is a bijection `γ`
//! from blue paths of degree `(a,0)` onto red paths of degree `(0,b)` with
//! `μν = γ(μ) γ^{-1}(ν)` for every blue `μ` and red `ν`. Any such `γ` is
//! forced: `γ(μ)` must be the red prefix of `μβ` for every red `β`. So we
//! never search over bijections; we build that canonical candidate and
//! verify it.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::theta::{Color, Edge, Path, ThetaGraph};

pub const DEFAULT_KMAX: u32 = 4;

/// A bijection `γ: Λ^{(a,0)} → Λ^{(0,b)}` witnessing periodicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodWitness {
    pub a: u32,
    pub b: u32,
    gamma: BTreeMap<Path, Path>,
    inverse: BTreeMap<Path, Path>,
}

impl PeriodWitness {
    /// Returns `None` unless `gamma` is injective.
    pub fn new(a: u32, b: u32, gamma: BTreeMap<Path, Path>) -> Option<Self> {
        let mut inverse = BTreeMap::new();
        for (mu, nu) in &gamma {
            if inverse.insert(nu.clone(), mu.clone()).is_some() {
                return None;
            }
        }
        Some(PeriodWitness { a, b, gamma, inverse })
    }

    pub fn degree(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    pub fn gamma(&self, mu: &Path) -> Option<&Path> {
        self.gamma.get(mu)
    }

    pub fn gamma_inverse(&self, nu: &Path) -> Option<&Path> {
        self.inverse.get(nu)
    }

    pub fn table(&self) -> impl Iterator<Item = (&Path, &Path)> {
        self.gamma.iter()
    }

    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }
}

impl Serialize for PeriodWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            blue: &'a Path,
            red: &'a Path,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            a: u32,
            b: u32,
            gamma: Vec<Row<'a>>,
        }
        Repr {
            a: self.a,
            b: self.b,
            gamma: self.gamma.iter().map(|(blue, red)| Row { blue, red }).collect(),
        }
        .serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PeriodicityVerdict {
    /// A verified witness at `(k a0, k b0)`.
    Periodic { witness: PeriodWitness },
    /// No period at any of the listed exponent pairs `(k a0, k b0)`,
    /// `k = 1..=kmax`. Larger multiples were not examined.
    Aperiodic { checked: Vec<(u32, u32)> },
    /// `N1^a = N2^b` has no positive solution, so the graph is aperiodic.
    NoCandidatePairs,
    /// The multiples in `checked` failed, but the path cap stopped the search
    /// before `kmax` was reached.
    Unknown { kmax: u32, checked: Vec<(u32, u32)> },
}

impl PeriodicityVerdict {
    pub fn is_periodic(&self) -> bool {
        matches!(self, PeriodicityVerdict::Periodic { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            PeriodicityVerdict::Periodic { .. } => "periodic",
            PeriodicityVerdict::Aperiodic { .. } => "aperiodic",
            PeriodicityVerdict::NoCandidatePairs => "no_candidate_pairs",
            PeriodicityVerdict::Unknown { .. } => "unknown",
        }
    }
}

fn factorize(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2;
    while p * p <= n {
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

/// The least positive `(a0, b0)` with `N1^{a0} = N2^{b0}`; every solution is
/// a multiple of it.
pub fn minimal_exponents(n1: usize, n2: usize) -> Result<Option<(u32, u32)>> {
    if n1 < 2 || n2 < 2 {
        return Err(Error::DegenerateCounts { n1, n2 });
    }
    let f1 = factorize(n1 as u64);
    let f2 = factorize(n2 as u64);
    if !f1.keys().eq(f2.keys()) {
        return Ok(None);
    }
    // need e1 * a = e2 * b for every prime, i.e. a/b = e2/e1 constant
    let mut ratio: Option<(u32, u32)> = None;
    for (p, &e1) in &f1 {
        let e2 = f2[p];
        let g = e1.gcd(&e2);
        let r = (e2 / g, e1 / g);
        match ratio {
            None => ratio = Some(r),
            Some(prev) if prev != r => return Ok(None),
            Some(_) => {}
        }
    }
    Ok(ratio)
}

fn check_exponents(graph: &ThetaGraph, a: u32, b: u32) -> Result<()> {
    let blue = graph.path_count(Degree::new(a as usize, 0));
    let red = graph.path_count(Degree::new(0, b as usize));
    if a == 0 || b == 0 || blue.is_none() || blue != red {
        return Err(Error::ExponentMismatch { a, b });
    }
    Ok(())
}

/// `γ_β(μ)`: the red prefix of degree `(0,b)` in the red-first form of `μβ`.
fn red_prefix(graph: &ThetaGraph, mu: &Path, beta: &Path, pattern: &[Color]) -> Path {
    let mut w: Vec<Edge> = mu.word();
    w.extend(beta.word());
    graph.refactor_in_place(&mut w, pattern);
    Path::new(Vec::new(), w[..beta.red().len()].iter().map(|e| e.id()).collect())
}

fn red_first(a: u32, b: u32) -> Vec<Color> {
    let mut pat = vec![Color::Red; b as usize];
    pat.extend(std::iter::repeat(Color::Blue).take(a as usize));
    pat
}

/// The canonical candidate `γ(μ) := (μβ)((0,0),(0,b))`, built from the
/// lexicographically least red `β` and kept only if it does not depend on
/// `β` and is a bijection.
pub fn candidate_gamma(graph: &ThetaGraph, a: u32, b: u32) -> Result<Option<PeriodWitness>> {
    check_exponents(graph, a, b)?;
    let blues = graph.enumerate_paths(Degree::new(a as usize, 0))?;
    let reds = graph.enumerate_paths(Degree::new(0, b as usize))?;
    let pattern = red_first(a, b);
    let beta0 = &reds[0];
    let table: Option<Vec<(Path, Path)>> = blues
        .par_iter()
        .map(|mu| {
            let g = red_prefix(graph, mu, beta0, &pattern);
            reds[1..]
                .iter()
                .all(|beta| red_prefix(graph, mu, beta, &pattern) == g)
                .then(|| (mu.clone(), g))
        })
        .collect();
    Ok(table.and_then(|t| PeriodWitness::new(a, b, t.into_iter().collect())))
}

/// `true` iff the red-first refactorization of every `μν` is `γ(μ) γ^{-1}(ν)`.
pub fn verify_period(graph: &ThetaGraph, witness: &PeriodWitness) -> bool {
    let (a, b) = witness.degree();
    if check_exponents(graph, a, b).is_err() {
        return false;
    }
    let (Ok(blues), Ok(reds)) = (
        graph.enumerate_paths(Degree::new(a as usize, 0)),
        graph.enumerate_paths(Degree::new(0, b as usize)),
    ) else {
        return false;
    };
    if witness.len() != blues.len() {
        return false;
    }
    let pattern = red_first(a, b);
    blues.par_iter().all(|mu| {
        let Some(g) = witness.gamma(mu) else {
            return false;
        };
        reds.iter().all(|nu| {
            let Some(d) = witness.gamma_inverse(nu) else {
                return false;
            };
            let mut w = mu.word();
            w.extend(nu.word());
            graph.refactor_in_place(&mut w, &pattern);
            let expect = g.word().into_iter().chain(d.word());
            w.into_iter().eq(expect)
        })
    })
}

/// Decide periodicity, examining the exponent pairs `(k a0, k b0)` for
/// `k = 1..=kmax`.
pub fn decide_periodicity(graph: &ThetaGraph, kmax: u32) -> Result<PeriodicityVerdict> {
    let Some((a0, b0)) = minimal_exponents(graph.n1(), graph.n2())? else {
        return Ok(PeriodicityVerdict::NoCandidatePairs);
    };
    let mut checked = Vec::new();
    for k in 1..=kmax.max(1) {
        let (a, b) = (k * a0, k * b0);
        match candidate_gamma(graph, a, b) {
            Ok(Some(w)) if verify_period(graph, &w) => {
                return Ok(PeriodicityVerdict::Periodic { witness: w });
            }
            Ok(_) => checked.push((a, b)),
            Err(Error::SizeLimitExceeded { .. }) if k > 1 => {
                return Ok(PeriodicityVerdict::Unknown { kmax, checked });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(PeriodicityVerdict::Aperiodic { checked })
}
