use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::Coeff;
use crate::error::{Error, Result};

/// A group element as a tuple of residues, one per invariant factor.
pub type Element = Vec<u64>;

/// Largest group that will be enumerated.
const MAX_ORDER: u64 = 1 << 24;

/// `ℤ/d1 × … × ℤ/dk`, enumerated in mixed radix with the last coordinate
/// fastest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    factors: Vec<u64>,
    order: u64,
}

impl FiniteGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.iter().any(|&d| d == 0) {
            return Err(Error::InvalidGroup("invariant factors must be at least 1".into()));
        }
        let order = factors
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d).filter(|&o| o <= MAX_ORDER))
            .ok_or_else(|| Error::SizeLimitExceeded { requested: format!("group of type {factors:?}"), cap: MAX_ORDER })?;
        Ok(FiniteGroup { factors, order })
    }

    /// `ℤ/n`.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn zero(&self) -> Element {
        vec![0; self.factors.len()]
    }

    pub fn element(&self, mut index: usize) -> Element {
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = index as u64 % d;
            index /= d as usize;
        }
        out
    }

    pub fn index(&self, x: &[u64]) -> usize {
        x.iter().zip(&self.factors).fold(0, |acc, (&v, &d)| acc * d as usize + (v % d) as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Element {
        x.iter().zip(y).zip(&self.factors).map(|((a, b), d)| (a + b) % d).collect()
    }

    /// `ω_a(x) = a·x`.
    pub fn scale(&self, a: u64, x: &[u64]) -> Element {
        x.iter()
            .zip(&self.factors)
            .map(|(&v, &d)| ((a as u128 * v as u128) % d as u128) as u64)
            .collect()
    }

    fn scale_index(&self, a: u64, i: usize) -> usize {
        self.index(&self.scale(a, &self.element(i)))
    }

    pub fn ker_size(&self, a: u64) -> u64 {
        self.factors.iter().map(|&d| a.gcd(&d)).product()
    }

    fn check_table(&self, f: &[Coeff]) -> Result<()> {
        if f.len() == self.order() {
            Ok(())
        } else {
            Err(Error::TableSizeMismatch { got: f.len(), expected: self.order() })
        }
    }
}

fn check_multiplier(a: u64) -> Result<()> {
    if a == 0 {
        Err(Error::InvalidGroup("multiplier must be positive".into()))
    } else {
        Ok(())
    }
}

/// `L_a f(g) = |ker ω_a|^{-1} Σ_{a·h = g} f(h)`, zero off `a·Γ`.
pub fn transfer_eval(g: &FiniteGroup, a: u64, f: &[Coeff]) -> Result<Vec<Coeff>> {
    check_multiplier(a)?;
    g.check_table(f)?;
    let mut out = vec![Coeff::zero(); g.order()];
    for (h, v) in f.iter().enumerate() {
        out[g.scale_index(a, h)] += v;
    }
    let k = BigRational::from_integer(BigInt::from(g.ker_size(a)));
    Ok(out.into_iter().map(|v| v / &k).collect())
}

/// `α_a f(x) = f(a·x)`.
pub fn alpha_pullback(g: &FiniteGroup, a: u64, f: &[Coeff]) -> Result<Vec<Coeff>> {
    check_multiplier(a)?;
    g.check_table(f)?;
    Ok((0..g.order()).map(|x| f[g.scale_index(a, x)].clone()).collect())
}

/// The transfer operator `L_a` of the torus `T^l` on characters:
/// `χ_x ↦ χ_{x/a}` when `a` divides every coordinate of `x`, and `0`
/// otherwise.
pub fn dual_transfer(a: u64, x: &[i64]) -> Option<Vec<i64>> {
    let a = i64::try_from(a).ok().filter(|&a| a > 0)?;
    x.iter().all(|v| v % a == 0).then(|| x.iter().map(|v| v / a).collect())
}

/// An edge of the topological graph of `Γ`: degree `a`, range `x`, source
/// `a·x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LambdaEdge {
    pub degree: u64,
    pub range: Element,
}

impl LambdaEdge {
    pub fn source(&self, g: &FiniteGroup) -> Element {
        g.scale(self.degree, &self.range)
    }

    /// `(a, x)(b, a·x) = (ab, x)`; `None` when the edges are not composable.
    pub fn compose(&self, g: &FiniteGroup, next: &LambdaEdge) -> Option<LambdaEdge> {
        (self.source(g) == next.range).then(|| LambdaEdge { degree: self.degree * next.degree, range: self.range.clone() })
    }

    /// The unique factorization `(ab, x) = (a, x)(b, a·x)`.
    pub fn factor(&self, g: &FiniteGroup, a: u64) -> Result<(LambdaEdge, LambdaEdge)> {
        if a == 0 || self.degree % a != 0 {
            return Err(Error::NotDivisible { a, b: self.degree });
        }
        let first = LambdaEdge { degree: a, range: self.range.clone() };
        let second = LambdaEdge { degree: self.degree / a, range: first.source(g) };
        Ok((first, second))
    }
}

impl fmt::Display for LambdaEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?})", self.degree, self.range)
    }
}

/// The path `μ_x(a, b) = (b/a, a·x)` of the infinite path `μ_x`.
pub fn mu_path(g: &FiniteGroup, x: &[u64], a: u64, b: u64) -> Result<LambdaEdge> {
    if a == 0 || b % a != 0 {
        return Err(Error::NotDivisible { a, b });
    }
    Ok(LambdaEdge { degree: b / a, range: g.scale(a, x) })
}

/// Every edge `(a, x)` with `a` in `degrees`, in the order given.
pub fn build_lambda_gamma(g: &FiniteGroup, degrees: &[u64]) -> Vec<LambdaEdge> {
    degrees
        .iter()
        .flat_map(|&a| g.elements().map(move |x| LambdaEdge { degree: a, range: x }))
        .collect()
}

/// Whether every `h` satisfies `a·h = b·x` for some `a, b <= |Γ|`.
pub fn minimality_check(g: &FiniteGroup, x: &[u64]) -> bool {
    let n = g.order() as u64;
    let multiples: std::collections::HashSet<Element> = (1..=n).map(|b| g.scale(b, x)).collect();
    g.elements().all(|h| (1..=n).any(|a| multiples.contains(&g.scale(a, &h))))
}
