//! Compact abelian groups under the multiplicative action `ω_a(x) = a·x`:
//! kernel and index arithmetic, the three conditions that make the
//! averaging maps a semigroup of transfer operators, and the
//! classification of the resulting crossed products.

mod finite;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path as FsPath;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use finite::{
    alpha_pullback, build_lambda_gamma, dual_transfer, minimality_check, mu_path, transfer_eval, Element,
    FiniteGroup, LambdaEdge,
};

/// Default bound on `a` and `b` when conditions are checked by search.
pub const DEFAULT_TEST_RANGE: u64 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    /// `ℤ/d1 × … × ℤ/dk` with `d1 | d2 | … | dk`.
    Finite { factors: Vec<u64> },
    /// `T^rank`.
    Torus { rank: u32 },
    /// The solenoid of a prime sequence, given by how often each prime
    /// occurs. Primes in `infinite` recur infinitely often.
    Solenoid {
        #[serde(default, deserialize_with = "prime_map")]
        finite: BTreeMap<u64, u32>,
        #[serde(default)]
        infinite: BTreeSet<u64>,
    },
    /// The additive group of `p`-adic integers.
    Padic { p: u64 },
}

/// JSON object keys are strings; inside a tagged enum serde does not
/// coerce them back to integers.
fn prime_map<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<u64, u32>, D::Error> {
    let raw = BTreeMap::<String, u32>::deserialize(d)?;
    raw.into_iter()
        .map(|(k, v)| k.trim().parse().map(|p| (p, v)).map_err(serde::de::Error::custom))
        .collect()
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn positive(a: u64) -> Result<()> {
    if a == 0 {
        Err(Error::InvalidGroup("multiplier must be positive".into()))
    } else {
        Ok(())
    }
}

/// Largest power of `p` dividing `a`.
fn p_part(a: u64, p: u64) -> u64 {
    let mut out = 1;
    let mut a = a;
    while a % p == 0 {
        a /= p;
        out *= p;
    }
    out
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Finite { factors } => {
                if factors.iter().any(|&d| d == 0) {
                    return Err(Error::InvalidGroup("invariant factors must be at least 1".into()));
                }
                if let Some(w) = factors.windows(2).find(|w| w[1] % w[0] != 0) {
                    return Err(Error::InvalidGroup(format!("invariant factor {} does not divide {}", w[0], w[1])));
                }
            }
            GroupSpec::Torus { rank } => {
                if *rank == 0 {
                    return Err(Error::InvalidGroup("torus rank must be at least 1".into()));
                }
            }
            GroupSpec::Solenoid { finite, infinite } => {
                for p in finite.keys().chain(infinite) {
                    if !is_prime(*p) {
                        return Err(Error::InvalidGroup(format!("{p} is not prime")));
                    }
                }
                if let Some(p) = finite.keys().find(|p| infinite.contains(p)) {
                    return Err(Error::InvalidGroup(format!("prime {p} has both finite and infinite multiplicity")));
                }
                if let Some((p, _)) = finite.iter().find(|(_, m)| **m == 0) {
                    return Err(Error::InvalidGroup(format!("prime {p} has multiplicity 0")));
                }
            }
            GroupSpec::Padic { p } => {
                if !is_prime(*p) {
                    return Err(Error::InvalidGroup(format!("{p} is not prime")));
                }
            }
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: GroupSpec = serde_json::from_str(s)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn load(path: impl AsRef<FsPath>) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group specs serialize")
    }

    /// The group as an enumerable finite group, if it is one.
    pub fn as_finite(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Finite { factors } => FiniteGroup::new(factors.clone()),
            _ => Err(Error::InvalidGroup("not a finite group".into())),
        }
    }

    fn is_trivial(&self) -> bool {
        matches!(self, GroupSpec::Finite { factors } if factors.iter().all(|&d| d == 1))
    }
}

/// `|ker ω_a|`. Every supported group has finite kernels.
pub fn ker_size(g: &GroupSpec, a: u64) -> Result<BigUint> {
    positive(a)?;
    Ok(match g {
        GroupSpec::Finite { factors } => factors.iter().map(|&d| BigUint::from(a.gcd(&d))).product(),
        GroupSpec::Torus { rank } => BigUint::from(a).pow(*rank),
        GroupSpec::Solenoid { infinite, .. } => {
            // a = b·c with c supported on the infinitely recurring primes
            let b = infinite.iter().fold(a, |b, &p| b / p_part(b, p));
            BigUint::from(b)
        }
        GroupSpec::Padic { .. } => BigUint::one(),
    })
}

/// `|Γ : ω_a(Γ)|`.
pub fn image_index(g: &GroupSpec, a: u64) -> Result<BigUint> {
    positive(a)?;
    Ok(match g {
        // |Γ/aΓ| = |ker ω_a| for finite Γ
        GroupSpec::Finite { .. } => ker_size(g, a)?,
        // connected compact abelian groups are divisible
        GroupSpec::Torus { .. } | GroupSpec::Solenoid { .. } => BigUint::one(),
        GroupSpec::Padic { p } => BigUint::from(p_part(a, *p)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ConditionStatus {
    /// Holds for every multiplier, by a closed-form argument.
    Holds,
    /// No failure among multipliers up to `max`.
    HoldsOnRange { max: u64 },
    /// `witness` is `[a]` or `[a, b]`.
    Fails { witness: Vec<u64> },
}

impl ConditionStatus {
    pub fn fails(&self) -> bool {
        matches!(self, ConditionStatus::Fails { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conditions {
    /// `ω_a(Γ)` has finite index.
    pub finite_index: ConditionStatus,
    /// `ker ω_a` is finite.
    pub finite_kernel: ConditionStatus,
    /// `|ker ω_{ab}| = |ker ω_a| |ker ω_b|`.
    pub multiplicative_kernel: ConditionStatus,
}

/// First pair `(a, b)` in `1..=max` (row-major) where kernel sizes are not
/// multiplicative.
pub fn kernel_multiplicativity_witness(g: &GroupSpec, max: u64) -> Result<Option<(u64, u64)>> {
    for a in 1..=max {
        for b in 1..=max {
            if ker_size(g, a * b)? != ker_size(g, a)? * ker_size(g, b)? {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

pub fn check_conditions(g: &GroupSpec, max: u64) -> Result<Conditions> {
    g.validate()?;
    // finite groups trivially have finite index and kernels; the other
    // families have the closed forms in ker_size and image_index
    let multiplicative_kernel = match g {
        GroupSpec::Finite { .. } => match kernel_multiplicativity_witness(g, max)? {
            Some((a, b)) => ConditionStatus::Fails { witness: vec![a, b] },
            None => ConditionStatus::HoldsOnRange { max },
        },
        _ => ConditionStatus::Holds,
    };
    Ok(Conditions {
        finite_index: ConditionStatus::Holds,
        finite_kernel: ConditionStatus::Holds,
        multiplicative_kernel,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    PurelyInfiniteSimple,
    NotSimple,
    NoClaim,
}

#[derive(Debug, Clone, Serialize)]
pub struct SystemReport {
    pub group: GroupSpec,
    pub conditions: Conditions,
    pub connected: bool,
    /// The torsion subgroup has empty interior.
    pub torsion_interior_empty: bool,
    pub verdict: Verdict,
    /// `false` when the verdict is quoted rather than derived from the
    /// fields above.
    pub computed: bool,
    pub reason: String,
}

pub fn classify(g: &GroupSpec, max: u64) -> Result<SystemReport> {
    let conditions = check_conditions(g, max)?;
    let (connected, torsion_interior_empty) = match g {
        GroupSpec::Torus { .. } | GroupSpec::Solenoid { .. } => (true, true),
        GroupSpec::Padic { .. } => (false, true),
        GroupSpec::Finite { .. } => (g.is_trivial(), false),
    };
    let (verdict, computed, reason) = match g {
        GroupSpec::Torus { .. } | GroupSpec::Solenoid { .. } => (
            Verdict::PurelyInfiniteSimple,
            true,
            "connected, torsion subgroup has empty interior, and all three kernel conditions hold".to_string(),
        ),
        GroupSpec::Padic { p } => (
            Verdict::NotSimple,
            false,
            format!(
                "not computed: by the literature, C_0(Z_{p} \\ {{0}}) generates a proper ideal \
                 with quotient C*(N^x) = C(T^inf)"
            ),
        ),
        GroupSpec::Finite { .. } => (
            Verdict::NoClaim,
            true,
            "aperiodicity criterion fails: the torsion subgroup is the whole group".to_string(),
        ),
    };
    Ok(SystemReport { group: g.clone(), conditions, connected, torsion_interior_empty, verdict, computed, reason })
}
