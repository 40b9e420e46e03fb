use std::fmt;

use serde::{Serialize, Serializer};

use crate::degree::Degree;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Color::Blue => "blue",
            Color::Red => "red",
        }
    }

    /// `B^{n1} R^{n2}`.
    pub fn normal_pattern(d: Degree) -> Vec<Color> {
        Self::block_pattern(&[d])
    }

    /// `B^{p1} R^{p2} B^{q1} R^{q2} …` for blocks `p, q, …`.
    pub fn block_pattern(blocks: &[Degree]) -> Vec<Color> {
        let mut out = Vec::with_capacity(blocks.iter().map(|d| d.total()).sum());
        for d in blocks {
            out.extend(std::iter::repeat(Color::Blue).take(d.blue));
            out.extend(std::iter::repeat(Color::Red).take(d.red));
        }
        out
    }

    /// Parse a pattern such as `RB` or `B,R,B`.
    pub fn parse_pattern(s: &str) -> Result<Vec<Color>> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c.to_ascii_uppercase() {
                'B' => Ok(Color::Blue),
                'R' => Ok(Color::Red),
                other => Err(Error::Parse(format!("bad colour {other:?} in pattern"))),
            })
            .collect()
    }
}

/// A single coloured edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edge {
    Blue(u32),
    Red(u32),
}

impl Edge {
    pub fn color(self) -> Color {
        match self {
            Edge::Blue(_) => Color::Blue,
            Edge::Red(_) => Color::Red,
        }
    }

    pub fn id(self) -> u32 {
        match self {
            Edge::Blue(i) | Edge::Red(i) => i,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edge::Blue(i) => write!(f, "b{i}"),
            Edge::Red(i) => write!(f, "r{i}"),
        }
    }
}

/// Parse `b0 r1 b2` (whitespace or comma separated). `""` and `empty` give
/// the empty word.
pub fn parse_word(s: &str) -> Result<Vec<Edge>> {
    let s = s.trim();
    if s.is_empty() || s == "empty" {
        return Ok(Vec::new());
    }
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|tok| {
            let (head, tail) = tok.split_at(1);
            let id: u32 = tail
                .parse()
                .map_err(|_| Error::Parse(format!("bad edge {tok:?}, expected b<id> or r<id>")))?;
            match head {
                "b" | "B" => Ok(Edge::Blue(id)),
                "r" | "R" => Ok(Edge::Red(id)),
                _ => Err(Error::Parse(format!("bad edge {tok:?}, expected b<id> or r<id>"))),
            }
        })
        .collect()
}

/// A path in blue-first normal form. Two paths are the same morphism of the
/// 2-graph exactly when these words agree.
///
/// Paths carry no reference to their graph; operations that combine them
/// live on [`crate::ThetaGraph`], which checks ids against its edge counts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Path {
    blue: Vec<u32>,
    red: Vec<u32>,
}

impl Path {
    pub fn new(blue: Vec<u32>, red: Vec<u32>) -> Self {
        Path { blue, red }
    }

    pub fn empty() -> Self {
        Path::default()
    }

    pub fn blue_edge(e: u32) -> Self {
        Path::new(vec![e], Vec::new())
    }

    pub fn red_edge(f: u32) -> Self {
        Path::new(Vec::new(), vec![f])
    }

    /// Panics if the word is not blue-first.
    pub(crate) fn from_normal_word(w: &[Edge]) -> Self {
        let split = w.iter().take_while(|e| e.color() == Color::Blue).count();
        assert!(
            w[split..].iter().all(|e| e.color() == Color::Red),
            "word is not in normal form"
        );
        Path::new(
            w[..split].iter().map(|e| e.id()).collect(),
            w[split..].iter().map(|e| e.id()).collect(),
        )
    }

    pub fn blue(&self) -> &[u32] {
        &self.blue
    }

    pub fn red(&self) -> &[u32] {
        &self.red
    }

    pub fn degree(&self) -> Degree {
        Degree::new(self.blue.len(), self.red.len())
    }

    pub fn is_empty(&self) -> bool {
        self.blue.is_empty() && self.red.is_empty()
    }

    /// The normal-form coloured word.
    pub fn word(&self) -> Vec<Edge> {
        self.blue
            .iter()
            .map(|&e| Edge::Blue(e))
            .chain(self.red.iter().map(|&f| Edge::Red(f)))
            .collect()
    }
}

pub(crate) fn fmt_word(w: &[Edge], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if w.is_empty() {
        return f.write_str("empty");
    }
    for (i, e) in w.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.word(), f)
    }
}

impl Serialize for Path {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Display adaptor for a bare coloured word.
pub struct WordDisplay<'a>(pub &'a [Edge]);

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(self.0, f)
    }
}
