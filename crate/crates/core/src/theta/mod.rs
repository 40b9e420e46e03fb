//! Single-vertex 2-graphs `Λ_θ` and their unique factorization property.
//!
//! A path is stored in blue-first normal form. Every other colour pattern of
//! the same path is reachable by adjacent blue/red transpositions, each one
//! an application of `θ` or of its inverse.

mod path;
mod spec;

use std::fmt;

pub use path::{parse_word, Color, Edge, Path, WordDisplay};
pub use spec::{ThetaRow, ThetaSpec};

use crate::degree::Degree;
use crate::error::{Error, Result};

/// Default bound on the number of paths any single enumeration may produce.
pub const DEFAULT_PATH_CAP: u64 = 1_000_000;

/// A validated 2-graph with dense lookup tables for `θ` and `θ^{-1}`.
#[derive(Debug, Clone)]
pub struct ThetaGraph {
    spec: ThetaSpec,
    bf: Vec<(u32, u32)>,
    rb: Vec<(u32, u32)>,
    path_cap: u64,
}

impl PartialEq for ThetaGraph {
    fn eq(&self, other: &Self) -> bool {
        self.spec.n1 == other.spec.n1 && self.spec.n2 == other.spec.n2 && self.bf == other.bf
    }
}

impl Eq for ThetaGraph {}

/// Validate a spec without keeping the graph.
pub fn validate_theta(spec: &ThetaSpec) -> Result<()> {
    spec::build_tables(spec).map(|_| ())
}

impl ThetaGraph {
    pub fn new(spec: ThetaSpec) -> Result<Self> {
        let (bf, rb) = spec::build_tables(&spec)?;
        Ok(ThetaGraph { spec, bf, rb, path_cap: DEFAULT_PATH_CAP })
    }

    pub fn with_path_cap(mut self, cap: u64) -> Self {
        self.path_cap = cap;
        self
    }

    pub fn path_cap(&self) -> u64 {
        self.path_cap
    }

    pub fn spec(&self) -> &ThetaSpec {
        &self.spec
    }

    /// Blue edge count `N1`.
    pub fn n1(&self) -> usize {
        self.spec.n1
    }

    /// Red edge count `N2`.
    pub fn n2(&self) -> usize {
        self.spec.n2
    }

    pub fn count(&self, color: Color) -> usize {
        match color {
            Color::Blue => self.spec.n1,
            Color::Red => self.spec.n2,
        }
    }

    /// `N^n = N1^{n1} N2^{n2}`, or `None` on overflow.
    pub fn path_count(&self, n: Degree) -> Option<u64> {
        let b = (self.spec.n1 as u64).checked_pow(n.blue.try_into().ok()?)?;
        let r = (self.spec.n2 as u64).checked_pow(n.red.try_into().ok()?)?;
        b.checked_mul(r)
    }

    fn check_id(&self, color: Color, id: u32) -> Result<()> {
        let count = self.count(color);
        if (id as usize) < count {
            Ok(())
        } else {
            Err(Error::IdOutOfRange { color: color.name(), id, count })
        }
    }

    /// `θ(e f) = (θ1(ef), θ2(ef))`: the red-blue factorization of `e f`.
    pub fn commute_bf(&self, e: u32, f: u32) -> Result<(u32, u32)> {
        self.check_id(Color::Blue, e)?;
        self.check_id(Color::Red, f)?;
        Ok(self.bf[e as usize * self.spec.n2 + f as usize])
    }

    /// The blue-red factorization `(e', f')` of the red-blue word `f e`.
    pub fn commute_rb(&self, f: u32, e: u32) -> Result<(u32, u32)> {
        self.check_id(Color::Red, f)?;
        self.check_id(Color::Blue, e)?;
        Ok(self.rb[f as usize * self.spec.n1 + e as usize])
    }

    /// Swap the bicoloured pair at `word[k], word[k+1]` in place. Returns
    /// `false` (leaving the word alone) when both letters have the same colour.
    /// Ids are assumed in range.
    pub fn swap_adjacent(&self, word: &mut [Edge], k: usize) -> bool {
        match (word[k], word[k + 1]) {
            (Edge::Blue(e), Edge::Red(f)) => {
                let (f2, e2) = self.bf[e as usize * self.spec.n2 + f as usize];
                word[k] = Edge::Red(f2);
                word[k + 1] = Edge::Blue(e2);
                true
            }
            (Edge::Red(f), Edge::Blue(e)) => {
                let (e2, f2) = self.rb[f as usize * self.spec.n1 + e as usize];
                word[k] = Edge::Blue(e2);
                word[k + 1] = Edge::Red(f2);
                true
            }
            _ => false,
        }
    }

    fn check_word(&self, word: &[Edge]) -> Result<()> {
        word.iter().try_for_each(|e| self.check_id(e.color(), e.id()))
    }

    /// Rewrite an arbitrary coloured word into the representative of its
    /// equivalence class with the given colour pattern, by bubbling letters
    /// of the wanted colour leftwards.
    pub fn refactor(&self, word: &[Edge], pattern: &[Color]) -> Result<Vec<Edge>> {
        self.check_word(word)?;
        let have = word_degree(word);
        let want = pattern_degree(pattern);
        if have != want {
            return Err(Error::PatternDegreeMismatch { pattern: want, path: have });
        }
        let mut w = word.to_vec();
        self.refactor_in_place(&mut w, pattern);
        Ok(w)
    }

    pub(crate) fn refactor_in_place(&self, w: &mut [Edge], pattern: &[Color]) {
        for i in 0..pattern.len() {
            if w[i].color() == pattern[i] {
                continue;
            }
            let j = (i + 1..w.len())
                .find(|&j| w[j].color() == pattern[i])
                .expect("colour counts agree");
            for k in (i..j).rev() {
                self.swap_adjacent(w, k);
            }
        }
    }

    /// The representative of `path` with colour pattern `pattern`.
    pub fn reorder(&self, path: &Path, pattern: &[Color]) -> Result<Vec<Edge>> {
        self.refactor(&path.word(), pattern)
    }

    /// The normal-form path represented by an arbitrary coloured word.
    pub fn path_from_word(&self, word: &[Edge]) -> Result<Path> {
        self.check_word(word)?;
        let mut w = word.to_vec();
        let pattern = Color::normal_pattern(word_degree(word));
        self.refactor_in_place(&mut w, &pattern);
        Ok(Path::from_normal_word(&w))
    }

    pub fn check_path(&self, path: &Path) -> Result<()> {
        path.blue().iter().try_for_each(|&e| self.check_id(Color::Blue, e))?;
        path.red().iter().try_for_each(|&f| self.check_id(Color::Red, f))
    }

    /// The path `λ(p, q)` of degree `q - p`.
    pub fn segment(&self, path: &Path, p: Degree, q: Degree) -> Result<Path> {
        let d = path.degree();
        if !(p.le(q) && q.le(d)) {
            return Err(Error::BadRange { p, q, d });
        }
        self.check_path(path)?;
        Ok(self.segment_unchecked(path, p, q))
    }

    pub(crate) fn segment_unchecked(&self, path: &Path, p: Degree, q: Degree) -> Path {
        let d = path.degree();
        if p == Degree::ZERO && q == d {
            return path.clone();
        }
        let mid = q - p;
        let pattern = Color::block_pattern(&[p, mid, d - q]);
        let mut w = path.word();
        self.refactor_in_place(&mut w, &pattern);
        Path::from_normal_word(&w[p.total()..q.total()])
    }

    /// Concatenation `x y`, in normal form.
    pub fn compose(&self, x: &Path, y: &Path) -> Result<Path> {
        self.check_path(x)?;
        self.check_path(y)?;
        Ok(self.compose_unchecked(x, y))
    }

    pub(crate) fn compose_unchecked(&self, x: &Path, y: &Path) -> Path {
        if x.red().is_empty() || y.blue().is_empty() {
            let mut blue = x.blue().to_vec();
            blue.extend_from_slice(y.blue());
            let mut red = x.red().to_vec();
            red.extend_from_slice(y.red());
            return Path::new(blue, red);
        }
        // x.red followed by y.blue needs its blues moved left
        let mut w: Vec<Edge> = Vec::with_capacity(x.red().len() + y.blue().len());
        w.extend(x.red().iter().map(|&f| Edge::Red(f)));
        w.extend(y.blue().iter().map(|&e| Edge::Blue(e)));
        let pattern = Color::normal_pattern(Degree::new(y.blue().len(), x.red().len()));
        self.refactor_in_place(&mut w, &pattern);
        let mut blue = x.blue().to_vec();
        blue.extend(w[..y.blue().len()].iter().map(|e| e.id()));
        let mut red: Vec<u32> = w[y.blue().len()..].iter().map(|e| e.id()).collect();
        red.extend_from_slice(y.red());
        Path::new(blue, red)
    }

    /// Every path of degree `n` in lexicographic order of normal-form words.
    pub fn enumerate_paths(&self, n: Degree) -> Result<Vec<Path>> {
        let count = self.path_count(n).filter(|&c| c <= self.path_cap).ok_or_else(|| {
            Error::SizeLimitExceeded {
                requested: format!("{}^{}*{}^{} paths of degree {n}", self.n1(), n.blue, self.n2(), n.red),
                cap: self.path_cap,
            }
        })?;
        let (n1, n2) = (self.n1() as u32, self.n2() as u32);
        let mut out = Vec::with_capacity(count as usize);
        let mut digits = vec![0u32; n.total()];
        loop {
            out.push(Path::new(digits[..n.blue].to_vec(), digits[n.blue..].to_vec()));
            // odometer, last digit fastest
            let mut i = digits.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                let radix = if i < n.blue { n1 } else { n2 };
                digits[i] += 1;
                if digits[i] < radix {
                    break;
                }
                digits[i] = 0;
            }
        }
    }
}

impl fmt::Display for ThetaGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec.fmt(f)
    }
}

fn word_degree(word: &[Edge]) -> Degree {
    let blue = word.iter().filter(|e| e.color() == Color::Blue).count();
    Degree::new(blue, word.len() - blue)
}

fn pattern_degree(pattern: &[Color]) -> Degree {
    let blue = pattern.iter().filter(|&&c| c == Color::Blue).count();
    Degree::new(blue, pattern.len() - blue)
}
