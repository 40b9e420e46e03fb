//! The doubled graph `Λ_η` on monochrome paths of length two, and the
//! simplicity verdict for the crossed product of the core by `N^2`.
//!
//! Doubled ids are row-major: the blue pair `(e, f)` gets id `e*N1 + f` and
//! the red pair `(g, h)` gets id `g*N2 + h`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::periodicity::{decide_periodicity, PeriodicityVerdict};
use crate::theta::{ThetaGraph, ThetaSpec};

#[derive(Debug, Clone)]
pub struct DoubledGraph {
    graph: ThetaGraph,
    n1: usize,
    n2: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    /// `blue[id] = [e, f]`
    pub blue: Vec<[u32; 2]>,
    /// `red[id] = [g, h]`
    pub red: Vec<[u32; 2]>,
}

/// JSON form of a doubled graph: the `ThetaSpec` fields plus provenance.
#[derive(Debug, Clone, Serialize)]
pub struct DoubledSpecJson<'a> {
    #[serde(flatten)]
    pub spec: &'a ThetaSpec,
    pub provenance: Provenance,
}

impl DoubledGraph {
    pub fn graph(&self) -> &ThetaGraph {
        &self.graph
    }

    pub fn into_graph(self) -> ThetaGraph {
        self.graph
    }

    pub fn blue_id(&self, e: u32, f: u32) -> u32 {
        e * self.n1 as u32 + f
    }

    pub fn red_id(&self, g: u32, h: u32) -> u32 {
        g * self.n2 as u32 + h
    }

    pub fn blue_pair(&self, id: u32) -> (u32, u32) {
        (id / self.n1 as u32, id % self.n1 as u32)
    }

    pub fn red_pair(&self, id: u32) -> (u32, u32) {
        (id / self.n2 as u32, id % self.n2 as u32)
    }

    /// `η((ef)(gh))` as `((g', h'), (e', f'))`.
    pub fn eta(&self, ef: (u32, u32), gh: (u32, u32)) -> Result<((u32, u32), (u32, u32))> {
        let (r, b) = self.graph.commute_bf(self.blue_id(ef.0, ef.1), self.red_id(gh.0, gh.1))?;
        Ok((self.red_pair(r), self.blue_pair(b)))
    }

    pub fn provenance(&self) -> Provenance {
        let blue = (0..(self.n1 * self.n1) as u32).map(|i| pair(self.blue_pair(i))).collect();
        let red = (0..(self.n2 * self.n2) as u32).map(|i| pair(self.red_pair(i))).collect();
        Provenance { blue, red }
    }

    pub fn to_json(&self) -> DoubledSpecJson<'_> {
        DoubledSpecJson { spec: self.graph.spec(), provenance: self.provenance() }
    }
}

fn pair((a, b): (u32, u32)) -> [u32; 2] {
    [a, b]
}

/// Build `Λ_η`: for blue pair `ef` and red pair `gh`, with `θ(eg) = g'e'`
/// and `θ(fh) = h'f'`, set `η((ef)(gh)) = (g'h')(e'f')`.
pub fn double(graph: &ThetaGraph) -> Result<DoubledGraph> {
    let (n1, n2) = (graph.n1(), graph.n2());
    let (w1, w2) = (n1 as u32, n2 as u32);
    let mut theta = Vec::with_capacity(n1 * n1 * n2 * n2);
    for e in 0..w1 {
        for f in 0..w1 {
            for g in 0..w2 {
                for h in 0..w2 {
                    let (g2, e2) = graph.commute_bf(e, g)?;
                    let (h2, f2) = graph.commute_bf(f, h)?;
                    theta.push([e * w1 + f, g * w2 + h, g2 * w2 + h2, e2 * w1 + f2].into());
                }
            }
        }
    }
    let spec = ThetaSpec { n1: n1 * n1, n2: n2 * n2, theta };
    let doubled = ThetaGraph::new(spec)?.with_path_cap(graph.path_cap());
    Ok(DoubledGraph { graph: doubled, n1, n2 })
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossedProductReport {
    pub n1: usize,
    pub n2: usize,
    /// Periodicity of the doubled graph.
    pub doubled: PeriodicityVerdict,
    /// `None` when undecided.
    pub simple: Option<bool>,
    pub purely_infinite: Option<bool>,
    /// `true` only when the verdict holds for every exponent pair, not just
    /// the multiples that were examined.
    pub conclusive: bool,
    pub reason: String,
}

/// Simplicity (and then pure infiniteness) of the crossed product of the
/// core by `N^2`, read off from the periodicity of the doubled graph.
pub fn crossed_product_verdict(graph: &ThetaGraph, kmax: u32) -> Result<CrossedProductReport> {
    let (n1, n2) = (graph.n1(), graph.n2());
    if n1 < 2 || n2 < 2 {
        return Err(Error::DegenerateCounts { n1, n2 });
    }
    let eta = double(graph)?;
    // N1^a = N2^b iff (N1^2)^a = (N2^2)^b, so the exponent pairs are unchanged
    let verdict = decide_periodicity(eta.graph(), kmax)?;
    let (simple, purely_infinite, conclusive, reason) = match &verdict {
        PeriodicityVerdict::NoCandidatePairs => (
            Some(true),
            Some(true),
            true,
            "ln N1 and ln N2 are not rationally related: no bijections to test, doubled graph aperiodic".to_string(),
        ),
        PeriodicityVerdict::Aperiodic { checked } => (
            Some(true),
            Some(true),
            false,
            format!("doubled graph has no period at exponent pairs {checked:?}; simple and purely infinite unless a larger multiple is a period"),
        ),
        PeriodicityVerdict::Periodic { witness } => (
            Some(false),
            None,
            true,
            format!("doubled graph is periodic at ({}, {})", witness.a, witness.b),
        ),
        PeriodicityVerdict::Unknown { kmax, checked } => (
            None,
            None,
            false,
            format!("path cap reached after {checked:?}; multiples up to {kmax} not all examined"),
        ),
    };
    Ok(CrossedProductReport { n1, n2, doubled: verdict, simple, purely_infinite, conclusive, reason })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::validate_theta;

    fn graph(spec: ThetaSpec) -> ThetaGraph {
        ThetaGraph::new(spec).unwrap()
    }

    #[test]
    fn flip_doubles_to_flip() {
        let d = double(&graph(ThetaSpec::flip(2, 3))).unwrap();
        assert_eq!(d.graph(), &graph(ThetaSpec::flip(4, 9)));
    }

    #[test]
    fn trivial_doubles_to_trivial() {
        let d = double(&graph(ThetaSpec::twin(1))).unwrap();
        assert_eq!(d.graph().n1(), 1);
        assert_eq!(d.graph().commute_bf(0, 0).unwrap(), (0, 0));
    }

    #[test]
    fn twin_doubles_to_twin() {
        let d = double(&graph(ThetaSpec::twin(2))).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        assert_eq!(d.eta((i, j), (k, l)).unwrap(), ((i, j), (k, l)));
                    }
                }
            }
        }
        assert_eq!(d.graph(), &graph(ThetaSpec::twin(4)));
    }

    #[test]
    fn doubled_is_bijective() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let g = graph(ThetaSpec::random(3, 2, &mut rng));
            assert!(validate_theta(double(&g).unwrap().graph().spec()).is_ok());
        }
    }

    #[test]
    fn verdicts() {
        let r = crossed_product_verdict(&graph(ThetaSpec::flip(2, 3)), 4).unwrap();
        assert_eq!((r.simple, r.purely_infinite, r.conclusive), (Some(true), Some(true), true));
        assert_eq!(r.doubled, PeriodicityVerdict::NoCandidatePairs);

        let r = crossed_product_verdict(&graph(ThetaSpec::flip(2, 2)), 2).unwrap();
        assert_eq!((r.simple, r.purely_infinite, r.conclusive), (Some(true), Some(true), false));

        let r = crossed_product_verdict(&graph(ThetaSpec::twin(2)), 2).unwrap();
        assert_eq!(r.simple, Some(false));
        let PeriodicityVerdict::Periodic { witness } = &r.doubled else { panic!() };
        assert_eq!(witness.degree(), (1, 1));

        assert!(matches!(
            crossed_product_verdict(&graph(ThetaSpec::twin(1)), 2),
            Err(Error::DegenerateCounts { .. })
        ));
    }

    #[test]
    fn provenance_json() {
        let d = double(&graph(ThetaSpec::flip(2, 3))).unwrap();
        let j = serde_json::to_value(d.to_json()).unwrap();
        assert_eq!(j["n1"], 4);
        assert_eq!(j["n2"], 9);
        assert_eq!(j["provenance"]["red"][5], serde_json::json!([1, 2]));
        assert_eq!(j["theta"].as_array().unwrap().len(), 36);
    }
}
