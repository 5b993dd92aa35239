//! Colorings, single-vertex recoloring steps and certified recoloring sequences.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, precondition, Error, Result};
use crate::graph::{Graph, Vertex};

/// Colors are 1-based: a `k`-coloring uses colors `1..=k`.
pub type Color = u32;

/// A total assignment of colors from `1..=palette` to the vertices of a graph.
/// Colorings are values; recoloring produces a new coloring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Color>,
    palette: Color,
}

impl Coloring {
    pub fn new(colors: Vec<Color>, palette: Color) -> Result<Self> {
        if let Some((v, &c)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > palette)
        {
            return Err(input(format!(
                "vertex {v} has color {c}, outside the palette 1..={palette}"
            )));
        }
        Ok(Coloring { colors, palette })
    }

    /// Uses the largest color present as the palette size.
    pub fn from_colors(colors: Vec<Color>) -> Result<Self> {
        let palette = colors.iter().copied().max().unwrap_or(1);
        Coloring::new(colors, palette)
    }

    /// Same colors, different palette.
    pub fn with_palette(&self, palette: Color) -> Result<Self> {
        Coloring::new(self.colors.clone(), palette)
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<Color> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// The color class `{v : color(v) = i}` in increasing vertex order.
    pub fn class(&self, i: Color) -> Vec<Vertex> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == i)
            .collect()
    }

    /// A new coloring with `v` recolored to `c`.
    pub fn recolored(&self, v: Vertex, c: Color) -> Coloring {
        let mut colors = self.colors.clone();
        colors[v] = c;
        Coloring {
            colors,
            palette: self.palette,
        }
    }

    /// Whether `v` may take color `c` without creating a monochromatic edge.
    pub fn admits(&self, g: &Graph, v: Vertex, c: Color) -> bool {
        g.neighbors(v).iter().all(|&w| self.colors[w] != c)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    if g.vertex_count() != c.len() {
        return Err(input(format!(
            "coloring has {} entries but the graph has {} vertices",
            c.len(),
            g.vertex_count()
        )));
    }
    Ok(g.edges().all(|(x, y)| c.color(x) != c.color(y)))
}

pub(crate) fn require_proper(g: &Graph, c: &Coloring, what: &str) -> Result<()> {
    if is_proper(g, c)? {
        Ok(())
    } else {
        let (x, y) = g
            .edges()
            .find(|&(x, y)| c.color(x) == c.color(y))
            .expect("improper coloring has a monochromatic edge");
        Err(precondition(format!(
            "{what} is not proper: edge ({x}, {y}) has color {}",
            c.color(x)
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RecolorStep {
    pub vertex: Vertex,
    pub color: Color,
}

impl RecolorStep {
    pub fn new(vertex: Vertex, color: Color) -> Self {
        RecolorStep { vertex, color }
    }
}

/// A start coloring followed by single-vertex recolorings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecolorSequence {
    start: Coloring,
    steps: Vec<RecolorStep>,
}

impl RecolorSequence {
    pub fn new(start: Coloring, steps: Vec<RecolorStep>) -> Self {
        RecolorSequence { start, steps }
    }

    pub fn empty(start: Coloring) -> Self {
        RecolorSequence::new(start, Vec::new())
    }

    pub fn start(&self) -> &Coloring {
        &self.start
    }

    pub fn steps(&self) -> &[RecolorStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the steps without checking them.
    pub fn end(&self) -> Coloring {
        let mut colors = self.start.colors.clone();
        for s in &self.steps {
            colors[s.vertex] = s.color;
        }
        Coloring {
            colors,
            palette: self.start.palette,
        }
    }

    /// How many times each vertex is recolored.
    pub fn recolor_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.start.len()];
        for s in &self.steps {
            counts[s.vertex] += 1;
        }
        counts
    }

    pub fn max_recolor_count(&self) -> usize {
        self.recolor_counts().into_iter().max().unwrap_or(0)
    }

    /// The same walk traversed from its end back to its start.
    pub fn reversed(&self) -> RecolorSequence {
        let mut colors = self.start.colors.clone();
        let mut previous = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            previous.push(RecolorStep::new(s.vertex, colors[s.vertex]));
            colors[s.vertex] = s.color;
        }
        previous.reverse();
        RecolorSequence {
            start: Coloring {
                colors,
                palette: self.start.palette,
            },
            steps: previous,
        }
    }

    /// Appends `other`, which must start where `self` ends.
    ///
    /// Panics on a mismatched joint.
    pub fn concat(mut self, other: RecolorSequence) -> RecolorSequence {
        assert_eq!(
            self.end().colors,
            other.start.colors,
            "spliced sequences do not meet"
        );
        self.steps.extend(other.steps);
        self
    }

    /// Removes every closed sub-walk: whenever a coloring is revisited, the
    /// steps between the two visits are dropped. The result visits a subset of
    /// the original intermediate colorings in the same order, so it stays valid.
    pub fn loop_erased(&self) -> RecolorSequence {
        let mut visited: Vec<Vec<Color>> = vec![self.start.colors.clone()];
        let mut index: HashMap<Vec<Color>, usize> = HashMap::new();
        index.insert(self.start.colors.clone(), 0);
        let mut kept: Vec<RecolorStep> = Vec::new();
        let mut current = self.start.colors.clone();
        for s in &self.steps {
            current[s.vertex] = s.color;
            if let Some(&at) = index.get(&current) {
                for dropped in visited.drain(at + 1..) {
                    index.remove(&dropped);
                }
                kept.truncate(at);
            } else {
                index.insert(current.clone(), visited.len());
                visited.push(current.clone());
                kept.push(*s);
            }
        }
        RecolorSequence {
            start: self.start.clone(),
            steps: kept,
        }
    }
}

/// Replays `seq` on `g`, checking that every step recolors one vertex to a
/// genuinely new color in the palette and that every intermediate coloring is
/// proper. Returns the final coloring.
pub fn validate_sequence(g: &Graph, seq: &RecolorSequence) -> Result<Coloring> {
    require_proper(g, &seq.start, "start coloring")?;
    let palette = seq.start.palette;
    let mut colors = seq.start.colors.clone();
    for (i, s) in seq.steps.iter().enumerate() {
        let fail = |reason: String| Error::InvalidStep { step: i, reason };
        if s.vertex >= colors.len() {
            return Err(fail(format!("vertex {} does not exist", s.vertex)));
        }
        if s.color == 0 || s.color > palette {
            return Err(fail(format!(
                "color {} is outside the palette 1..={palette}",
                s.color
            )));
        }
        if colors[s.vertex] == s.color {
            return Err(fail(format!(
                "vertex {} already has color {}",
                s.vertex, s.color
            )));
        }
        if let Some(&w) = g
            .neighbors(s.vertex)
            .iter()
            .find(|&&w| colors[w] == s.color)
        {
            return Err(fail(format!(
                "recoloring vertex {} to {} clashes with neighbor {w}",
                s.vertex, s.color
            )));
        }
        colors[s.vertex] = s.color;
    }
    Ok(Coloring { colors, palette })
}

/// Accumulates recoloring steps from a current coloring, dropping steps that
/// would not change anything.
#[derive(Debug, Clone)]
pub(crate) struct SequenceBuilder {
    start: Coloring,
    current: Vec<Color>,
    steps: Vec<RecolorStep>,
}

impl SequenceBuilder {
    pub fn new(start: &Coloring) -> Self {
        SequenceBuilder {
            start: start.clone(),
            current: start.colors.clone(),
            steps: Vec::new(),
        }
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.current[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.current
    }

    pub fn recolor(&mut self, v: Vertex, c: Color) {
        if self.current[v] != c {
            self.current[v] = c;
            self.steps.push(RecolorStep::new(v, c));
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn current(&self) -> Coloring {
        Coloring {
            colors: self.current.clone(),
            palette: self.start.palette,
        }
    }

    pub fn steps_since(&self, mark: usize) -> &[RecolorStep] {
        &self.steps[mark..]
    }

    pub fn finish(self) -> RecolorSequence {
        RecolorSequence {
            start: self.start,
            steps: self.steps,
        }
    }
}
