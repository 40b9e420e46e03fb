use std::fmt;
use std::fs;
use std::path::Path as FsPath;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One row `theta(e, f) = (f', e')`: blue `e` followed by red `f` equals red
/// `f'` followed by blue `e'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[u32; 4]", into = "[u32; 4]")]
pub struct ThetaRow {
    pub blue: u32,
    pub red: u32,
    pub red_out: u32,
    pub blue_out: u32,
}

impl From<[u32; 4]> for ThetaRow {
    fn from([blue, red, red_out, blue_out]: [u32; 4]) -> Self {
        ThetaRow { blue, red, red_out, blue_out }
    }
}

impl From<ThetaRow> for [u32; 4] {
    fn from(r: ThetaRow) -> Self {
        [r.blue, r.red, r.red_out, r.blue_out]
    }
}

/// Serialized description of a single-vertex 2-graph: edge counts and the
/// commutation rule, as `{"n1":…, "n2":…, "theta":[[e,f,f',e'],…]}`.
///
/// A `ThetaSpec` is unchecked data; [`crate::ThetaGraph::new`] validates it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaSpec {
    pub n1: usize,
    pub n2: usize,
    pub theta: Vec<ThetaRow>,
}

impl ThetaSpec {
    /// Build from a rule `(e, f) -> (f', e')`.
    pub fn from_fn(n1: usize, n2: usize, mut rule: impl FnMut(u32, u32) -> (u32, u32)) -> Self {
        let mut theta = Vec::with_capacity(n1 * n2);
        for e in 0..n1 as u32 {
            for f in 0..n2 as u32 {
                let (red_out, blue_out) = rule(e, f);
                theta.push(ThetaRow { blue: e, red: f, red_out, blue_out });
            }
        }
        ThetaSpec { n1, n2, theta }
    }

    /// `e f = f e`: every blue edge commutes letterwise with every red edge.
    pub fn flip(n1: usize, n2: usize) -> Self {
        Self::from_fn(n1, n2, |e, f| (f, e))
    }

    /// `b_i r_j = r_i b_j`; needs equal edge counts.
    pub fn twin(n: usize) -> Self {
        Self::from_fn(n, n, |e, f| (e, f))
    }

    /// A uniformly random bijection.
    pub fn random<R: Rng + ?Sized>(n1: usize, n2: usize, rng: &mut R) -> Self {
        let mut targets: Vec<(u32, u32)> = (0..n2 as u32)
            .flat_map(|f| (0..n1 as u32).map(move |e| (f, e)))
            .collect();
        targets.shuffle(rng);
        let mut it = targets.into_iter();
        Self::from_fn(n1, n2, |_, _| it.next().expect("n1*n2 targets"))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn load(path: impl AsRef<FsPath>) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }
}

impl fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta[{}x{}]", self.n1, self.n2)
    }
}

/// Checks that `theta` is total on the `n1*n2` blue-red pairs and injective.
/// Returns the dense tables `(blue*n2 + red) -> (red_out, blue_out)` and the
/// inverse `(red_out*n1 + blue_out) -> (blue, red)`.
pub(crate) fn build_tables(spec: &ThetaSpec) -> Result<(Vec<(u32, u32)>, Vec<(u32, u32)>)> {
    let (n1, n2) = (spec.n1, spec.n2);
    if n1 == 0 || n2 == 0 {
        return Err(Error::NotBijective(format!(
            "edge counts must be positive, got n1={n1} n2={n2}"
        )));
    }
    let check = |color: &'static str, id: u32, count: usize| {
        if (id as usize) < count {
            Ok(())
        } else {
            Err(Error::IdOutOfRange { color, id, count })
        }
    };
    let mut forward: Vec<Option<(u32, u32)>> = vec![None; n1 * n2];
    let mut inverse: Vec<Option<(u32, u32)>> = vec![None; n1 * n2];
    for row in &spec.theta {
        check("blue", row.blue, n1)?;
        check("red", row.red, n2)?;
        check("red", row.red_out, n2)?;
        check("blue", row.blue_out, n1)?;
        let src = row.blue as usize * n2 + row.red as usize;
        let dst = row.red_out as usize * n1 + row.blue_out as usize;
        if forward[src].is_some() {
            return Err(Error::NotBijective(format!(
                "pair (b{}, r{}) is listed twice",
                row.blue, row.red
            )));
        }
        if let Some((e, f)) = inverse[dst] {
            return Err(Error::NotBijective(format!(
                "(b{e}, r{f}) and (b{}, r{}) both map to (r{}, b{})",
                row.blue, row.red, row.red_out, row.blue_out
            )));
        }
        forward[src] = Some((row.red_out, row.blue_out));
        inverse[dst] = Some((row.blue, row.red));
    }
    if let Some(missing) = forward.iter().position(Option::is_none) {
        return Err(Error::NotBijective(format!(
            "no image for pair (b{}, r{})",
            missing / n2,
            missing % n2
        )));
    }
    // total + injective on a finite set of equal size => surjective
    Ok((
        forward.into_iter().map(Option::unwrap).collect(),
        inverse.into_iter().map(Option::unwrap).collect(),
    ))
}
