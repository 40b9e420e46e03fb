//! The identity suite: the structural laws of the endomorphism and
//! transfer-operator action on the core, checked exactly on basis words
//! up to a degree bound.

use std::fmt::Debug;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::element::GradedElement;
use super::module::{check_covariance, rank_one, ModuleVector};
use crate::degree::Degree;
use crate::doubling::double;
use crate::error::Result;
use crate::theta::{Path, ThetaGraph};

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    /// Bound on every degree that appears in a check.
    pub max_degree: Degree,
    pub seed: u64,
    /// Sample size for the randomized `*`-algebra axioms.
    pub random_cases: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_degree: Degree::new(2, 2), seed: 0, random_cases: 500 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub n1: usize,
    pub n2: usize,
    pub max_degree: Degree,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

/// Runs `law` over every case in parallel. The outcome does not depend on
/// scheduling: the reported failure is the first by case index.
fn check<C, F>(name: &'static str, cases: Vec<C>, law: F) -> Result<CheckOutcome>
where
    C: Debug + Send + Sync,
    F: Fn(&C) -> Result<bool> + Sync,
{
    let results: Vec<bool> = cases.par_iter().map(&law).collect::<Result<_>>()?;
    let failures = results.iter().filter(|ok| !**ok).count();
    let first_failure = results.iter().position(|ok| !ok).map(|i| format!("{:?}", cases[i]));
    Ok(CheckOutcome { name, cases: cases.len(), failures, first_failure })
}

/// All `(μ, ν)` with `d(μ) = d(ν) = d`.
pub fn core_words(graph: &ThetaGraph, d: Degree) -> Result<Vec<(Path, Path)>> {
    let paths = graph.enumerate_paths(d)?;
    Ok(paths
        .iter()
        .flat_map(|mu| paths.iter().map(move |nu| (mu.clone(), nu.clone())))
        .collect())
}

/// All core words of degree `<= bound`.
pub fn core_words_below(graph: &ThetaGraph, bound: Degree) -> Result<Vec<(Path, Path)>> {
    let mut out = Vec::new();
    for d in bound.below() {
        out.extend(core_words(graph, d)?);
    }
    Ok(out)
}

fn element(g: &Arc<ThetaGraph>, w: &(Path, Path)) -> Result<GradedElement> {
    GradedElement::word(g, &w.0, &w.1)
}

fn degree_pairs(bound: Degree) -> Vec<(Degree, Degree)> {
    bound
        .below()
        .flat_map(|s| s.below().map(move |m| (m, s - m)))
        .collect()
}

pub fn transfer_unital(g: &Arc<ThetaGraph>, bound: Degree) -> Result<CheckOutcome> {
    let one = GradedElement::one(g);
    check("transfer_unital", bound.below().collect(), |&n| one.transfer(n)?.equals(&one))
}

pub fn alpha_unital(g: &Arc<ThetaGraph>, bound: Degree) -> Result<CheckOutcome> {
    let one = GradedElement::one(g);
    check("alpha_unital", bound.below().collect(), |&n| one.alpha_endo(n)?.equals(&one))
}

/// `L_n(α_n(a) b) = a L_n(b)` for core words `a, b` with `n + d(a)` and
/// `n + d(b)` inside the bound.
pub fn transfer_identity(g: &Arc<ThetaGraph>, bound: Degree) -> Result<CheckOutcome> {
    let mut cases = Vec::new();
    for n in bound.below() {
        let words = core_words_below(g, bound - n)?;
        for a in &words {
            for b in &words {
                cases.push((n, a.clone(), b.clone()));
            }
        }
    }
    check("transfer_identity", cases, |(n, a, b)| {
        let (a, b) = (element(g, a)?, element(g, b)?);
        let lhs = a.alpha_endo(*n)?.multiply(&b)?.transfer(*n)?;
        let rhs = a.multiply(&b.transfer(*n)?)?;
        lhs.equals(&rhs)
    })
}

/// `L_m ∘ L_n = L_{m+n}` on core words.
pub fn transfer_semigroup(g: &Arc<ThetaGraph>, bound: Degree) -> Result<CheckOutcome> {
    let words = core_words_below(g, bound)?;
    let mut cases = Vec::new();
    for (m, n) in degree_pairs(bound) {
        for w in &words {
            cases.push((m, n, w.clone()));
        }
    }
    check("transfer_semigroup", cases, |(m, n, w)| {
        let a = element(g, w)?;
        a.transfer(*n)?.transfer(*m)?.equals(&a.transfer(*m + *n)?)
    })
}

/// `L_n ∘ α_n = id` on core words.
pub fn transfer_left_inverse(g: &Arc<ThetaGraph>, bound: Degree) -> Result<CheckOutcome> {
    let words = core_words_below(g, bound)?;
    let cases: Vec<_> = bound.below().flat_map(|n| words.iter().map(move |w| (n, w.clone()))).collect();
    check("transfer_left_inverse", cases, |(n, w)| {
        let a = element(g, w)?;
        a.alpha_endo(*n)?.transfer(*n)?.equals(&a)
    })
}

/// `⟨m^n_{μν}, m^n_{αβ}⟩ = δ_{(μ,ν),(α,β)}`.
pub fn orthonormal_basis(g: &Arc<ThetaGraph>, bound: Degree) -> Result<CheckOutcome> {
    let mut cases = Vec::new();
    for n in bound.below() {
        let words = core_words(g, n)?;
        for x in &words {
            for y in &words {
                cases.push((x.clone(), y.clone()));
            }
        }
    }
    let one = GradedElement::one(g);
    let zero = GradedElement::zero(g);
    check("orthonormal_basis", cases, |(x, y)| {
        let ip = ModuleVector::basis(g, &x.0, &x.1)?.inner_product(&ModuleVector::basis(g, &y.0, &y.1)?)?;
        ip.equals(if x == y { &one } else { &zero })
    })
}

/// `m^m_{μν} m^n_{αβ} = m^{m+n}_{(μα)(νβ)}`.
pub fn basis_product_rule(g: &Arc<ThetaGraph>, bound: Degree) -> Result<CheckOutcome> {
    let mut cases = Vec::new();
    for (m, n) in degree_pairs(bound) {
        let left = core_words(g, m)?;
        let right = core_words(g, n)?;
        for x in &left {
            for y in &right {
                cases.push((x.clone(), y.clone()));
            }
        }
    }
    check("basis_product_rule", cases, |((mu, nu), (alpha, beta))| {
        let lhs = ModuleVector::basis(g, mu, nu)?.product(&ModuleVector::basis(g, alpha, beta)?)?;
        let rhs = ModuleVector::basis(g, &g.compose(mu, alpha)?, &g.compose(nu, beta)?)?;
        lhs.equals(&rhs)
    })
}

fn blue_pair_vector(g: &Arc<ThetaGraph>, (e, f): (u32, u32)) -> Result<ModuleVector> {
    ModuleVector::basis(g, &Path::blue_edge(e), &Path::blue_edge(f))
}

fn red_pair_vector(g: &Arc<ThetaGraph>, (e, f): (u32, u32)) -> Result<ModuleVector> {
    ModuleVector::basis(g, &Path::red_edge(e), &Path::red_edge(f))
}

fn pairs(n: usize) -> Vec<(u32, u32)> {
    let n = n as u32;
    (0..n).flat_map(|e| (0..n).map(move |f| (e, f))).collect()
}

/// `T_{ef} T_{gh} = T_{η1((ef)(gh))} T_{η2((ef)(gh))}` for every blue pair
/// `ef` and red pair `gh`.
pub fn commutation_relation(g: &Arc<ThetaGraph>) -> Result<CheckOutcome> {
    let eta = double(g)?;
    let mut cases = Vec::new();
    for ef in pairs(g.n1()) {
        for gh in pairs(g.n2()) {
            cases.push((ef, gh));
        }
    }
    check("commutation_relation", cases, |&(ef, gh)| {
        let (red, blue) = eta.eta(ef, gh)?;
        let lhs = blue_pair_vector(g, ef)?.product(&red_pair_vector(g, gh)?)?;
        let rhs = red_pair_vector(g, red)?.product(&blue_pair_vector(g, blue)?)?;
        lhs.equals(&rhs)
    })
}

/// Each `T` is an isometry, `⟨T, T⟩ = 1`, and `Σ Θ_{T,T}` is the identity
/// on every basis vector of its level.
pub fn cuntz_family(g: &Arc<ThetaGraph>) -> Result<CheckOutcome> {
    let one = GradedElement::one(g);
    let mut cases = Vec::new();
    for level in [Degree::BLUE, Degree::RED] {
        for w in core_words(g, level)? {
            cases.push((level, w));
        }
    }
    check("cuntz_family", cases, |(level, (mu, nu))| {
        let family = core_words(g, *level)?
            .into_iter()
            .map(|(x, y)| ModuleVector::basis(g, &x, &y))
            .collect::<Result<Vec<_>>>()?;
        let m = ModuleVector::basis(g, mu, nu)?;
        if !m.inner_product(&m)?.equals(&one)? {
            return Ok(false);
        }
        let mut acc = rank_one(&family[0], &family[0], &m)?;
        for t in &family[1..] {
            acc = acc.add(&rank_one(t, t, &m)?)?;
        }
        acc.equals(&m)
    })
}

/// Left multiplication by `s_μ s_ν^*` agrees with `Σ_λ Θ_{m_{μλ}, m_{νλ}}`.
/// Levels are capped at `(1,1)`: the check costs `N^{5n}` products.
pub fn covariance(g: &Arc<ThetaGraph>, bound: Degree) -> Result<CheckOutcome> {
    let mut cases = Vec::new();
    for n in bound.meet(Degree::new(1, 1)).below() {
        cases.extend(core_words(g, n)?);
    }
    check("covariance", cases, |(mu, nu)| check_covariance(g, mu, nu))
}

/// All words `s_μ s_ν^*` (not necessarily balanced) with degrees `<= bound`.
fn all_words(g: &ThetaGraph, bound: Degree) -> Result<Vec<(Path, Path)>> {
    let mut paths = Vec::new();
    for d in bound.below() {
        paths.extend(g.enumerate_paths(d)?);
    }
    Ok(paths
        .iter()
        .flat_map(|mu| paths.iter().map(move |nu| (mu.clone(), nu.clone())))
        .collect())
}

fn sample<T: Clone>(items: &[T], k: usize, rng: &mut ChaCha8Rng) -> Vec<T> {
    (0..k).map(|_| items.choose(rng).expect("nonempty").clone()).collect()
}

/// `(xy)z = x(yz)` on random triples of words.
pub fn associativity(g: &Arc<ThetaGraph>, bound: Degree, seed: u64, k: usize) -> Result<CheckOutcome> {
    let words = all_words(g, bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs = sample(&words, k, &mut rng);
    let ys = sample(&words, k, &mut rng);
    let zs = sample(&words, k, &mut rng);
    let cases: Vec<_> = xs.into_iter().zip(ys).zip(zs).map(|((x, y), z)| (x, y, z)).collect();
    check("associativity", cases, |(x, y, z)| {
        let (x, y, z) = (element(g, x)?, element(g, y)?, element(g, z)?);
        x.multiply(&y)?.multiply(&z)?.equals(&x.multiply(&y.multiply(&z)?)?)
    })
}

/// `(xy)^* = y^* x^*` and `x^{**} = x` on random pairs of words.
pub fn adjoint_laws(g: &Arc<ThetaGraph>, bound: Degree, seed: u64, k: usize) -> Result<CheckOutcome> {
    let words = all_words(g, bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let xs = sample(&words, k, &mut rng);
    let ys = sample(&words, k, &mut rng);
    let cases: Vec<_> = xs.into_iter().zip(ys).collect();
    check("adjoint_laws", cases, |(x, y)| {
        let (x, y) = (element(g, x)?, element(g, y)?);
        let anti = x.multiply(&y)?.adjoint().equals(&y.adjoint().multiply(&x.adjoint())?)?;
        Ok(anti && x.adjoint().adjoint().equals(&x)?)
    })
}

pub fn run_identity_suite(g: &Arc<ThetaGraph>, config: SuiteConfig) -> Result<SuiteReport> {
    let d = config.max_degree;
    let checks = vec![
        transfer_unital(g, d)?,
        alpha_unital(g, d)?,
        transfer_identity(g, d)?,
        transfer_semigroup(g, d)?,
        transfer_left_inverse(g, d)?,
        orthonormal_basis(g, d)?,
        basis_product_rule(g, d)?,
        commutation_relation(g)?,
        cuntz_family(g)?,
        covariance(g, d)?,
        associativity(g, d, config.seed, config.random_cases)?,
        adjoint_laws(g, d, config.seed, config.random_cases)?,
    ];
    Ok(SuiteReport { n1: g.n1(), n2: g.n2(), max_degree: d, checks })
}
