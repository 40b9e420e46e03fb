use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::element::{Coeff, GradedElement};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::theta::{Path, ThetaGraph};

/// A vector `c · q_n(x)` of the level-`n` module `M_n`, with the scalar kept
/// as its square `c²` so that normalizations like `N^{n/2}` stay rational.
///
/// The inner product is `⟨x, y⟩ = L_n(x^* y)`, the right action is
/// `q_n(x)·a = q_n(x α_n(a))` and the product of levels is
/// `q_m(x) q_n(y) = q_{m+n}(x α_m(y))`.
#[derive(Clone)]
pub struct ModuleVector {
    level: Degree,
    scale_sq: Coeff,
    payload: GradedElement,
}

/// `sqrt(r)` when `r` is the square of a non-negative rational.
pub fn rational_sqrt(r: &Coeff) -> Option<Coeff> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

fn exact_sqrt(r: &Coeff) -> Result<Coeff> {
    rational_sqrt(r).ok_or_else(|| Error::IrrationalScale(r.to_string()))
}

impl ModuleVector {
    /// `q_n(x)` with unit scale.
    pub fn new(level: Degree, payload: GradedElement) -> Self {
        ModuleVector { level, scale_sq: Coeff::one(), payload }
    }

    /// `m^n_{μν} = N^{n/2} q_n(s_μ s_ν^*)` for `d(μ) = d(ν) = n`.
    pub fn basis(graph: &Arc<ThetaGraph>, mu: &Path, nu: &Path) -> Result<Self> {
        let level = mu.degree();
        if nu.degree() != level {
            return Err(Error::LevelMismatch(level, nu.degree()));
        }
        let count = graph
            .path_count(level)
            .ok_or_else(|| Error::SizeLimitExceeded { requested: format!("N^{level}"), cap: u64::MAX })?;
        Ok(ModuleVector {
            level,
            scale_sq: BigRational::from_integer(BigInt::from(count)),
            payload: GradedElement::word(graph, mu, nu)?,
        })
    }

    /// The unit `q_0(1)` of `M_0 = A`.
    pub fn unit(graph: &Arc<ThetaGraph>) -> Self {
        Self::new(Degree::ZERO, GradedElement::one(graph))
    }

    pub fn level(&self) -> Degree {
        self.level
    }

    pub fn payload(&self) -> &GradedElement {
        &self.payload
    }

    pub fn scale_squared(&self) -> &Coeff {
        &self.scale_sq
    }

    fn check_level(&self, other: &Self) -> Result<()> {
        if self.level == other.level {
            Ok(())
        } else {
            Err(Error::LevelMismatch(self.level, other.level))
        }
    }

    /// `⟨x, y⟩ = c_x c_y L_n(x^* y)`.
    pub fn inner_product(&self, other: &Self) -> Result<GradedElement> {
        self.check_level(other)?;
        let scale = exact_sqrt(&(&self.scale_sq * &other.scale_sq))?;
        let ip = self.payload.adjoint().multiply(&other.payload)?.transfer(self.level)?;
        Ok(ip.scale(&scale))
    }

    /// The product `M_m × M_n → M_{m+n}`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let payload = self.payload.multiply(&other.payload.alpha_endo(self.level)?)?;
        Ok(ModuleVector {
            level: self.level + other.level,
            scale_sq: &self.scale_sq * &other.scale_sq,
            payload,
        })
    }

    /// `x · a` for `a` in the core.
    pub fn right_action(&self, a: &GradedElement) -> Result<Self> {
        Ok(ModuleVector {
            level: self.level,
            scale_sq: self.scale_sq.clone(),
            payload: self.payload.multiply(&a.alpha_endo(self.level)?)?,
        })
    }

    /// `φ_n(a) x = a · x`.
    pub fn left_action(&self, a: &GradedElement) -> Result<Self> {
        Ok(ModuleVector {
            level: self.level,
            scale_sq: self.scale_sq.clone(),
            payload: a.multiply(&self.payload)?,
        })
    }

    /// Express `other`'s payload at `self`'s scale: `c_o p_o = c_s (r p_o)`
    /// with `r = c_o / c_s`, or `None` if `r` is irrational.
    fn rescaled_payload(&self, other: &Self) -> Result<Option<GradedElement>> {
        if self.scale_sq.is_zero() {
            return Err(Error::IrrationalScale("0".into()));
        }
        Ok(rational_sqrt(&(&other.scale_sq / &self.scale_sq)).map(|r| other.payload.scale(&r)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        let p = self
            .rescaled_payload(other)?
            .ok_or_else(|| Error::IrrationalScale((&other.scale_sq / &self.scale_sq).to_string()))?;
        Ok(ModuleVector {
            level: self.level,
            scale_sq: self.scale_sq.clone(),
            payload: self.payload.add(&p)?,
        })
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.scale_sq.is_zero() || self.payload.is_zero()?)
    }

    /// Exact equality. Vectors whose scales differ by an irrational factor
    /// are equal only when both vanish.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        if self.level != other.level {
            return Ok(false);
        }
        if self.scale_sq.is_zero() || other.scale_sq.is_zero() {
            return Ok(self.is_zero()? && other.is_zero()?);
        }
        match self.rescaled_payload(other)? {
            Some(p) => self.payload.equals(&p),
            None => Ok(self.is_zero()? && other.is_zero()?),
        }
    }
}

/// The rank-one operator `Θ_{ξ,η}(ζ) = ξ · ⟨η, ζ⟩`.
pub fn rank_one(xi: &ModuleVector, eta: &ModuleVector, zeta: &ModuleVector) -> Result<ModuleVector> {
    xi.right_action(&eta.inner_product(zeta)?)
}

/// Checks `φ_n(s_μ s_ν^*) = Σ_{d(λ)=n} Θ_{m_{μλ}, m_{νλ}}` on every basis
/// vector `m^n_{αβ}`.
pub fn check_covariance(graph: &Arc<ThetaGraph>, mu: &Path, nu: &Path) -> Result<bool> {
    let n = mu.degree();
    if nu.degree() != n {
        return Err(Error::LevelMismatch(n, nu.degree()));
    }
    let a = GradedElement::word(graph, mu, nu)?;
    let paths = graph.enumerate_paths(n)?;
    for alpha in &paths {
        for beta in &paths {
            let m = ModuleVector::basis(graph, alpha, beta)?;
            let lhs = m.left_action(&a)?;
            let mut rhs: Option<ModuleVector> = None;
            for lam in &paths {
                let term = rank_one(
                    &ModuleVector::basis(graph, mu, lam)?,
                    &ModuleVector::basis(graph, nu, lam)?,
                    &m,
                )?;
                rhs = Some(match rhs {
                    None => term,
                    Some(acc) => acc.add(&term)?,
                });
            }
            let rhs = rhs.expect("at least one path of each degree");
            if !lhs.equals(&rhs)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({})·q_{}({})", self.scale_sq, self.level, self.payload)
    }
}
