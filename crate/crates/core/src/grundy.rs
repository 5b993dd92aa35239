//! Greedy colorings, exact chromatic and grundy numbers, and the recoloring
//! engine that routes every coloring through a common optimal greedy coloring.
//!
//! With `k ≥ χ_g + 1` colors, any k-coloring reaches an optimal greedy coloring
//! `β` in at most `2·χ·n` recolorings, so any two k-colorings are at most
//! `4·χ_g·n` apart.

use crate::coloring::{
    require_proper, validate_sequence, Color, Coloring, RecolorSequence, SequenceBuilder,
};
use crate::error::{input, precondition, Error, Result};
use crate::graph::{Graph, Vertex};

/// Search-node budget for the exact chromatic and grundy searches.
pub const EXACT_SEARCH_BUDGET: u64 = 200_000_000;

/// A permutation of the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder(Vec<Vertex>);

impl VertexOrder {
    pub fn new(n: usize, order: Vec<Vertex>) -> Result<Self> {
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(input(format!(
                "order has {} entries for {n} vertices",
                order.len()
            )));
        }
        for &v in &order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(input(format!("vertex {v} is out of range or repeated")));
            }
        }
        Ok(VertexOrder(order))
    }

    pub fn identity(n: usize) -> Self {
        VertexOrder((0..n).collect())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }
}

/// Colors the vertices in order, each with the smallest color absent from its
/// already-colored neighbors. The palette is the number of colors used.
pub fn greedy_coloring(g: &Graph, order: &VertexOrder) -> Coloring {
    let mut colors: Vec<Color> = vec![0; g.vertex_count()];
    for &v in order.as_slice() {
        colors[v] = smallest_absent(g.neighbors(v).iter().map(|&w| colors[w]));
    }
    Coloring::from_colors(colors).expect("greedy colors are positive")
}

/// Smallest positive color not produced by `used` (zeros are ignored).
fn smallest_absent(used: impl Iterator<Item = Color>) -> Color {
    let mut seen: Vec<bool> = Vec::new();
    for c in used {
        let c = c as usize;
        if c > 0 {
            if seen.len() < c {
                seen.resize(c, false);
            }
            seen[c - 1] = true;
        }
    }
    seen.iter().position(|&s| !s).unwrap_or(seen.len()) as Color + 1
}

/// Every vertex of color `i` has neighbors of all colors `1..i`.
pub fn is_greedy(g: &Graph, c: &Coloring) -> bool {
    g.vertices().all(|v| {
        let mut seen = vec![false; c.color(v) as usize];
        for &w in g.neighbors(v) {
            let cw = c.color(w) as usize;
            if cw < seen.len() {
                seen[cw] = true;
            }
        }
        seen.iter().skip(1).all(|&s| s)
    })
}

/// Exact grundy number by branch and bound over grundy-feasible colorings:
/// proper colorings in which each vertex of color `c` sees every color below
/// `c` among its neighbors. Each such coloring is a greedy coloring for the
/// order listing color classes in increasing color.
pub fn grundy_number_exact(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    if g.max_degree() >= 63 {
        return Err(Error::Resource(
            "grundy search supports degrees below 63".into(),
        ));
    }
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut search = GrundySearch {
        g,
        order,
        color: vec![0; n],
        seen: vec![0; n],
        open: (0..n).map(|v| g.degree(v)).collect(),
        best: 1,
        ceiling: g.max_degree() + 1,
        nodes: 0,
    };
    search.descend(0)?;
    Ok(search.best)
}

struct GrundySearch<'a> {
    g: &'a Graph,
    order: Vec<Vertex>,
    color: Vec<usize>,
    /// Bit `c` set when some colored neighbor has color `c`.
    seen: Vec<u64>,
    /// Uncolored neighbors.
    open: Vec<usize>,
    best: usize,
    ceiling: usize,
    nodes: u64,
}

impl GrundySearch<'_> {
    fn missing(&self, v: Vertex) -> usize {
        let c = self.color[v];
        let need: u64 = ((1u64 << c) - 1) & !1;
        (need & !self.seen[v]).count_ones() as usize
    }

    fn feasible(&self, v: Vertex) -> bool {
        self.missing(v) <= self.open[v]
    }

    fn descend(&mut self, depth: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > EXACT_SEARCH_BUDGET {
            return Err(Error::Resource(format!(
                "grundy search exceeded {EXACT_SEARCH_BUDGET} nodes"
            )));
        }
        if self.best >= self.ceiling {
            return Ok(());
        }
        if depth == self.order.len() {
            let used = self.color.iter().copied().max().unwrap_or(0);
            self.best = self.best.max(used);
            return Ok(());
        }
        let reachable = self.color.iter().copied().max().unwrap_or(0).max(
            self.order[depth..]
                .iter()
                .map(|&v| self.g.degree(v) + 1)
                .max()
                .unwrap_or(0),
        );
        if reachable <= self.best {
            return Ok(());
        }
        let v = self.order[depth];
        for c in (1..=self.g.degree(v) + 1).rev() {
            if self.seen[v] >> c & 1 == 1 {
                continue;
            }
            self.color[v] = c;
            for &w in self.g.neighbors(v) {
                self.seen[w] |= 1 << c;
                self.open[w] -= 1;
            }
            let ok = self.feasible(v)
                && self
                    .g
                    .neighbors(v)
                    .iter()
                    .all(|&w| self.color[w] == 0 || self.feasible(w));
            if ok {
                self.descend(depth + 1)?;
            }
            for &w in self.g.neighbors(v) {
                self.open[w] += 1;
                // Recompute: another colored neighbor may also hold `c`.
                let still = self
                    .g
                    .neighbors(w)
                    .iter()
                    .any(|&x| x != v && self.color[x] == c);
                if !still {
                    self.seen[w] &= !(1 << c);
                }
            }
            self.color[v] = 0;
            if self.best >= self.ceiling {
                break;
            }
        }
        Ok(())
    }
}

/// Chromatic number with an optimal coloring that is also greedy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticInfo {
    pub chromatic_number: usize,
    pub witness: Coloring,
}

pub fn chromatic_number_exact(g: &Graph) -> Result<ChromaticInfo> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ChromaticInfo {
            chromatic_number: 0,
            witness: Coloring::new(Vec::new(), 1).expect("empty coloring"),
        });
    }
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut nodes = 0u64;
    let lower = if g.edge_count() > 0 { 2 } else { 1 };
    for k in lower..=n {
        let mut colors = vec![0 as Color; n];
        if color_with(g, &order, 0, k as Color, 0, &mut colors, &mut nodes)? {
            let witness = make_greedy(g, colors);
            debug_assert_eq!(witness.colors_used(), k);
            return Ok(ChromaticInfo {
                chromatic_number: k,
                witness,
            });
        }
    }
    unreachable!("n colors always suffice")
}

fn color_with(
    g: &Graph,
    order: &[Vertex],
    depth: usize,
    k: Color,
    used: Color,
    colors: &mut [Color],
    nodes: &mut u64,
) -> Result<bool> {
    *nodes += 1;
    if *nodes > EXACT_SEARCH_BUDGET {
        return Err(Error::Resource(format!(
            "chromatic search exceeded {EXACT_SEARCH_BUDGET} nodes"
        )));
    }
    if depth == order.len() {
        return Ok(true);
    }
    let v = order[depth];
    // Colors are interchangeable: never open more than one new color.
    for c in 1..=(used + 1).min(k) {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if color_with(g, order, depth + 1, k, used.max(c), colors, nodes)? {
                return Ok(true);
            }
        }
    }
    colors[v] = 0;
    Ok(false)
}

/// Moves vertices to the smallest color class they fit in until nothing moves.
/// The result is proper, uses no more colors, and is greedy.
fn make_greedy(g: &Graph, mut colors: Vec<Color>) -> Coloring {
    loop {
        let mut moved = false;
        for v in g.vertices() {
            let best = smallest_absent(g.neighbors(v).iter().map(|&w| colors[w]));
            if best < colors[v] {
                colors[v] = best;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    Coloring::from_colors(colors).expect("positive colors")
}

fn check_palette(g: &Graph, k: Color, c: &Coloring, what: &str) -> Result<Coloring> {
    require_proper(g, c, what)?;
    c.with_palette(k)
        .map_err(|_| precondition(format!("{what} uses colors beyond {k}")))
}

/// Recolors `a` into the optimal greedy coloring `beta` with at most
/// `2·χ·n` recolorings. Requires `k ≥ χ_g + 1`.
pub fn grundy_recolor_to_optimal(
    g: &Graph,
    k: Color,
    a: &Coloring,
    beta: &Coloring,
) -> Result<RecolorSequence> {
    let grundy = grundy_number_exact(g)?;
    if (k as usize) < grundy + 1 {
        return Err(precondition(format!(
            "k = {k} is below grundy number + 1 = {}",
            grundy + 1
        )));
    }
    let a = check_palette(g, k, a, "start coloring")?;
    let beta = check_palette(g, k, beta, "target coloring")?;
    if !is_greedy(g, &beta) {
        return Err(precondition("target coloring is not greedy"));
    }
    let chi = chromatic_number_exact(g)?.chromatic_number;
    if beta.colors_used() != chi {
        return Err(precondition(format!(
            "target coloring uses {} colors, the chromatic number is {chi}",
            beta.colors_used()
        )));
    }
    let mut builder = SequenceBuilder::new(&a);
    let all: Vec<Vertex> = g.vertices().collect();
    recolor_to_greedy(g, &all, 0, beta.colors(), &mut builder)?;
    let seq = builder.finish();
    let end = validate_sequence(g, &seq).expect("recoloring to the optimal coloring is invalid");
    assert_eq!(end, beta, "recoloring did not reach the optimal coloring");
    Ok(seq)
}

/// One level of the induction on the vertices `active`, which hold colors
/// above `offset`; colors `1..=offset` are taken by settled vertices that are
/// never touched again. `beta` is greedy on `active` after subtracting `offset`.
fn recolor_to_greedy(
    g: &Graph,
    active: &[Vertex],
    offset: Color,
    beta: &[Color],
    builder: &mut SequenceBuilder,
) -> Result<()> {
    if active.is_empty() {
        return Ok(());
    }
    let (sub, map) = g.induced(active);
    if sub.edge_count() == 0 {
        for &v in active {
            builder.recolor(v, beta[v]);
        }
        return Ok(());
    }
    let local = |builder: &SequenceBuilder, i: usize| builder.color(map[i]) - offset;

    // Greedy pass over the classes of the current coloring, lowest class first.
    let classes_top = (0..sub.vertex_count())
        .map(|i| local(builder, i))
        .max()
        .unwrap_or(0);
    let snapshot: Vec<Color> = (0..sub.vertex_count()).map(|i| local(builder, i)).collect();
    for class in 1..=classes_top {
        for i in (0..sub.vertex_count()).filter(|&i| snapshot[i] == class) {
            let c = smallest_absent(sub.neighbors(i).iter().map(|&j| local(builder, j)));
            builder.recolor(map[i], c + offset);
        }
    }

    let grundy = grundy_number_exact(&sub)? as Color;
    let spare = grundy + 1;
    assert!(
        (0..sub.vertex_count()).all(|i| local(builder, i) <= grundy),
        "greedy pass produced a color above the grundy number"
    );

    // Clear class 1 of everything outside class 1 of beta, then fill it.
    for i in 0..sub.vertex_count() {
        if local(builder, i) == 1 && beta[map[i]] - offset != 1 {
            builder.recolor(map[i], spare + offset);
        }
    }
    for i in 0..sub.vertex_count() {
        if beta[map[i]] - offset == 1 {
            builder.recolor(map[i], 1 + offset);
        }
    }

    let rest: Vec<Vertex> = active
        .iter()
        .copied()
        .filter(|&v| beta[v] - offset != 1)
        .collect();
    recolor_to_greedy(g, &rest, offset + 1, beta, builder)
}

/// Recolors `a` into `b` through a common optimal greedy coloring, in at most
/// `4·χ_g·n` recolorings. Requires `k ≥ χ_g + 1`.
/// The optimal greedy coloring both halves of [`grundy_recolor`] aim for.
pub fn greedy_target(g: &Graph, k: Color) -> Result<Coloring> {
    chromatic_number_exact(g)?.witness.with_palette(k)
}

pub fn grundy_recolor(g: &Graph, k: Color, a: &Coloring, b: &Coloring) -> Result<RecolorSequence> {
    let grundy = grundy_number_exact(g)?;
    if (k as usize) < grundy + 1 {
        return Err(precondition(format!(
            "k = {k} is too small: the grundy number is {grundy}, so at least {} colors are needed",
            grundy + 1
        )));
    }
    let beta = greedy_target(g, k)?;
    let there = grundy_recolor_to_optimal(g, k, a, &beta)?;
    let back = grundy_recolor_to_optimal(g, k, b, &beta)?.reversed();
    let seq = there.concat(back);
    validate_sequence(g, &seq).expect("grundy recoloring produced an invalid sequence");
    Ok(seq)
}
