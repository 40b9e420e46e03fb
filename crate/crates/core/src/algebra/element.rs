use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::theta::{Path, ThetaGraph};

pub type Coeff = BigRational;

pub fn rational(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A finite rational combination of words `s_μ s_ν^*`, keyed by `(μ, ν)`.
///
/// Stored terms are whatever the operations produced; equality compares
/// after expanding each graded component to a common level with
/// `s_μ s_ν^* = Σ_{d(λ)=k} s_{μλ} s_{νλ}^*`, where the words form a basis.
#[derive(Clone)]
pub struct GradedElement {
    graph: Arc<ThetaGraph>,
    terms: BTreeMap<(Path, Path), Coeff>,
}

/// `(d(μ) - d(ν))`, the gauge degree of a word.
type Grade = (i64, i64);

fn grade(mu: &Path, nu: &Path) -> Grade {
    let (m, n) = (mu.degree(), nu.degree());
    (m.blue as i64 - n.blue as i64, m.red as i64 - n.red as i64)
}

impl GradedElement {
    pub fn zero(graph: &Arc<ThetaGraph>) -> Self {
        GradedElement { graph: graph.clone(), terms: BTreeMap::new() }
    }

    /// The unit `s_∅ s_∅^*`.
    pub fn one(graph: &Arc<ThetaGraph>) -> Self {
        Self::scalar(graph, Coeff::one())
    }

    pub fn scalar(graph: &Arc<ThetaGraph>, c: Coeff) -> Self {
        let mut x = Self::zero(graph);
        x.add_term(Path::empty(), Path::empty(), c);
        x
    }

    /// `s_μ s_ν^*`.
    pub fn word(graph: &Arc<ThetaGraph>, mu: &Path, nu: &Path) -> Result<Self> {
        graph.check_path(mu)?;
        graph.check_path(nu)?;
        let mut x = Self::zero(graph);
        x.add_term(mu.clone(), nu.clone(), Coeff::one());
        Ok(x)
    }

    /// `s_μ`.
    pub fn isometry(graph: &Arc<ThetaGraph>, mu: &Path) -> Result<Self> {
        Self::word(graph, mu, &Path::empty())
    }

    pub fn graph(&self) -> &Arc<ThetaGraph> {
        &self.graph
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Path, Path), &Coeff)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, mu: Path, nu: Path, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((mu, nu)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_graph(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.graph, &other.graph) || *self.graph == *other.graph {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    /// Every term has `d(μ) = d(ν)`: the element lies in the core.
    pub fn is_balanced(&self) -> bool {
        self.terms.keys().all(|(mu, nu)| mu.degree() == nu.degree())
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero(&self.graph);
        for ((mu, nu), v) in &self.terms {
            out.add_term(mu.clone(), nu.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_graph(other)?;
        let mut out = self.clone();
        for ((mu, nu), c) in &other.terms {
            out.add_term(mu.clone(), nu.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Coeff::one()))
    }

    /// The `*`-operation: `(s_μ s_ν^*)^* = s_ν s_μ^*`.
    pub fn adjoint(&self) -> Self {
        GradedElement {
            graph: self.graph.clone(),
            terms: self.terms.iter().map(|((mu, nu), c)| ((nu.clone(), mu.clone()), c.clone())).collect(),
        }
    }

    /// Bilinear extension of the word product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_graph(other)?;
        let mut out = Self::zero(&self.graph);
        let mut cache = PathCache::default();
        for ((mu, nu), c) in &self.terms {
            for ((alpha, beta), d) in &other.terms {
                let c = c * d;
                for (x, y) in word_product(&self.graph, mu, nu, alpha, beta, &mut cache)? {
                    out.add_term(x, y, c.clone());
                }
            }
        }
        Ok(out)
    }

    /// `α_n(a) = Σ_{d(λ)=n} s_λ a s_λ^*`.
    pub fn alpha_endo(&self, n: Degree) -> Result<Self> {
        let g = &self.graph;
        let lambdas = g.enumerate_paths(n)?;
        let mut out = Self::zero(g);
        for lam in &lambdas {
            for ((mu, nu), c) in &self.terms {
                out.add_term(g.compose_unchecked(lam, mu), g.compose_unchecked(lam, nu), c.clone());
            }
        }
        Ok(out)
    }

    /// `L_n(a) = N^{-n} Σ_{d(λ)=n} s_λ^* a s_λ`.
    pub fn transfer(&self, n: Degree) -> Result<Self> {
        let g = &self.graph;
        let lambdas = g.enumerate_paths(n)?;
        let weight = BigRational::new(BigInt::one(), BigInt::from(lambdas.len()));
        let empty = Path::empty();
        let mut cache = PathCache::default();
        let mut out = Self::zero(g);
        for lam in &lambdas {
            for ((mu, nu), c) in &self.terms {
                let c = c * &weight;
                // (s_λ^*)(s_μ s_ν^*)(s_λ)
                for (x, y) in word_product(g, &empty, lam, mu, nu, &mut cache)? {
                    for (u, v) in word_product(g, &x, &y, lam, &empty, &mut cache)? {
                        out.add_term(u, v, c.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Canonical form: each graded component is expanded to the join of the
    /// source degrees occurring in it.
    pub fn expanded(&self) -> Result<BTreeMap<(Path, Path), Coeff>> {
        let g = &self.graph;
        let mut targets: HashMap<Grade, Degree> = HashMap::new();
        for (mu, nu) in self.terms.keys() {
            let t = targets.entry(grade(mu, nu)).or_insert(nu.degree());
            *t = t.join(nu.degree());
        }
        let mut cache = PathCache::default();
        let mut out = Self::zero(g);
        for ((mu, nu), c) in &self.terms {
            let k = targets[&grade(mu, nu)] - nu.degree();
            if k.is_zero() {
                out.add_term(mu.clone(), nu.clone(), c.clone());
                continue;
            }
            for lam in cache.paths(g, k)?.iter() {
                out.add_term(g.compose_unchecked(mu, lam), g.compose_unchecked(nu, lam), c.clone());
            }
        }
        Ok(out.terms)
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.terms.is_empty() || self.expanded()?.is_empty())
    }

    /// Exact equality modulo the Cuntz-Krieger relations.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.sub(other)?.is_zero()
    }

    /// Coefficient of the identity after full reduction, if `self` is a
    /// scalar multiple of `1`.
    pub fn as_scalar(&self) -> Result<Option<Coeff>> {
        let expanded = self.expanded()?;
        let Some(((mu, nu), c)) = expanded.iter().next() else {
            return Ok(Some(Coeff::zero()));
        };
        if mu != nu {
            return Ok(None);
        }
        let c = c.clone();
        let residual = self.sub(&Self::scalar(&self.graph, c.clone()))?;
        Ok(residual.is_zero()?.then_some(c))
    }
}

/// Panics if an expansion would exceed the graph's path cap; use
/// [`GradedElement::equals`] to handle that case.
impl PartialEq for GradedElement {
    fn eq(&self, other: &Self) -> bool {
        match self.equals(other) {
            Ok(b) => b,
            Err(Error::SpecMismatch) => false,
            Err(e) => panic!("cannot compare elements: {e}"),
        }
    }
}

impl fmt::Debug for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((mu, nu), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let c = c.abs();
            if !c.is_one() {
                write!(f, "{c}·")?;
            }
            write!(f, "s[{mu}]s[{nu}]*")?;
        }
        Ok(())
    }
}

/// Enumerations reused within one operation.
#[derive(Default)]
pub(crate) struct PathCache {
    by_degree: HashMap<Degree, Arc<Vec<Path>>>,
}

impl PathCache {
    pub(crate) fn paths(&mut self, g: &ThetaGraph, d: Degree) -> Result<Arc<Vec<Path>>> {
        if let Some(p) = self.by_degree.get(&d) {
            return Ok(p.clone());
        }
        let p = Arc::new(g.enumerate_paths(d)?);
        self.by_degree.insert(d, p.clone());
        Ok(p)
    }
}

/// `(s_μ s_ν^*)(s_α s_β^*)` as a list of words, each with coefficient one.
///
/// Uses `s_ν^* s_α = Σ s_x s_y^*` over the minimal common extensions
/// `νx = αy` of degree `d(ν) ∨ d(α)`.
pub(crate) fn word_product(
    g: &ThetaGraph,
    mu: &Path,
    nu: &Path,
    alpha: &Path,
    beta: &Path,
    cache: &mut PathCache,
) -> Result<Vec<(Path, Path)>> {
    let (dn, da) = (nu.degree(), alpha.degree());
    if da.le(dn) {
        // ν = α y
        if g.segment_unchecked(nu, Degree::ZERO, da) != *alpha {
            return Ok(Vec::new());
        }
        let y = g.segment_unchecked(nu, da, dn);
        return Ok(vec![(mu.clone(), g.compose_unchecked(beta, &y))]);
    }
    if dn.le(da) {
        // α = ν x
        if g.segment_unchecked(alpha, Degree::ZERO, dn) != *nu {
            return Ok(Vec::new());
        }
        let x = g.segment_unchecked(alpha, dn, da);
        return Ok(vec![(g.compose_unchecked(mu, &x), beta.clone())]);
    }
    let m = dn.join(da);
    let mut out = Vec::new();
    for x in cache.paths(g, m - dn)?.iter() {
        let lam = g.compose_unchecked(nu, x);
        if g.segment_unchecked(&lam, Degree::ZERO, da) == *alpha {
            let y = g.segment_unchecked(&lam, da, m);
            out.push((g.compose_unchecked(mu, x), g.compose_unchecked(beta, &y)));
        }
    }
    Ok(out)
}
