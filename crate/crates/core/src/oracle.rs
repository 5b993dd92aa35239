//! Exhaustive exploration of the recoloring graph `R_k(G)`: its vertices are
//! the proper k-colorings of `G`, two being adjacent when they differ on
//! exactly one vertex. Colorings are not identified up to permuting colors.
//!
//! Everything here is exponential and meant as ground truth on small graphs.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::coloring::{require_proper, Color, Coloring, RecolorSequence, RecolorStep};
use crate::error::{input, precondition, Error, Result};
use crate::graph::Graph;

/// Default cap on the number of proper colorings the oracle will enumerate.
pub const DEFAULT_STATE_LIMIT: usize = 5_000_000;

/// A distance in `R_k(G)`; infinite between different components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Distance::Infinite
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// Whether `R_k(G)` is connected. A graph without proper k-colorings has an
/// empty recoloring graph, which is reported separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mixing {
    Connected,
    Disconnected,
    NoProperColoring,
}

/// Result of [`mixing_number_probe`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixingProbe {
    /// Smallest `m ≤ k_max` with `G` k-mixing for every `m ≤ k ≤ k_max`.
    Found(Color),
    /// `G` is not `k_max`-mixing.
    NotFound,
}

/// The fully enumerated recoloring graph with its connected components.
#[derive(Debug, Clone)]
pub struct RecoloringGraph {
    graph: Graph,
    palette: Color,
    radix: Vec<u64>,
    states: Vec<u64>,
    index: HashMap<u64, u32>,
    component: Vec<u32>,
    component_count: usize,
}

impl RecoloringGraph {
    /// Enumerates all proper `k`-colorings of `g` (at most `state_limit`).
    pub fn build(g: &Graph, k: Color, state_limit: usize) -> Result<Self> {
        let n = g.vertex_count();
        let radix = (0..n)
            .map(|v| (k as u64).checked_pow(v as u32))
            .collect::<Option<Vec<u64>>>()
            .filter(|_| n == 0 || (k as u64).checked_pow(n as u32).is_some())
            .ok_or_else(|| Error::Resource(format!("{k}^{n} colorings cannot be encoded")))?;

        let mut states = Vec::new();
        if k > 0 || n == 0 {
            let mut colors: Vec<Color> = vec![0; n];
            enumerate(g, k, 0, &mut colors, &radix, &mut states, state_limit)?;
        }
        let index: HashMap<u64, u32> = states
            .iter()
            .enumerate()
            .map(|(i, &s)| (s, i as u32))
            .collect();

        let mut oracle = RecoloringGraph {
            graph: g.clone(),
            palette: k,
            radix,
            states,
            index,
            component: Vec::new(),
            component_count: 0,
        };
        oracle.label_components();
        Ok(oracle)
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn mixing(&self) -> Mixing {
        match self.component_count {
            0 => Mixing::NoProperColoring,
            1 => Mixing::Connected,
            _ => Mixing::Disconnected,
        }
    }

    pub fn coloring(&self, state: usize) -> Coloring {
        Coloring::new(self.decode(self.states[state]), self.palette)
            .expect("enumerated colors are in range")
    }

    /// Index of a proper coloring among the enumerated states.
    pub fn state_of(&self, c: &Coloring) -> Result<usize> {
        require_proper(&self.graph, c, "coloring")?;
        if c.colors().iter().any(|&x| x > self.palette) {
            return Err(input(format!(
                "coloring uses colors beyond the palette {}",
                self.palette
            )));
        }
        Ok(self.index[&self.encode(c.colors())] as usize)
    }

    fn encode(&self, colors: &[Color]) -> u64 {
        colors
            .iter()
            .zip(&self.radix)
            .map(|(&c, &r)| (c as u64 - 1) * r)
            .sum()
    }

    fn decode(&self, mut code: u64) -> Vec<Color> {
        let k = self.palette as u64;
        (0..self.graph.vertex_count())
            .map(|_| {
                let c = (code % k) as Color + 1;
                code /= k;
                c
            })
            .collect()
    }

    /// Neighbors of a state in (vertex, color) lexicographic order.
    pub fn neighbors(&self, state: usize) -> Vec<usize> {
        let code = self.states[state];
        let colors = self.decode(code);
        let mut out = Vec::new();
        for v in self.graph.vertices() {
            let base = code - (colors[v] as u64 - 1) * self.radix[v];
            for c in 1..=self.palette {
                if c != colors[v] && self.graph.neighbors(v).iter().all(|&w| colors[w] != c) {
                    out.push(self.index[&(base + (c as u64 - 1) * self.radix[v])] as usize);
                }
            }
        }
        out
    }

    fn label_components(&mut self) {
        let s = self.states.len();
        let mut component = vec![u32::MAX; s];
        let mut count = 0;
        for root in 0..s {
            if component[root] != u32::MAX {
                continue;
            }
            component[root] = count;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if component[y] == u32::MAX {
                        component[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        self.component = component;
        self.component_count = count as usize;
    }

    /// BFS distances from `source` (`usize::MAX` when unreachable) and parents.
    fn bfs(&self, source: usize) -> (Vec<usize>, Vec<usize>) {
        let s = self.states.len();
        let mut dist = vec![usize::MAX; s];
        let mut parent = vec![usize::MAX; s];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        (dist, parent)
    }

    pub fn distance(&self, a: &Coloring, b: &Coloring) -> Result<Distance> {
        let (sa, sb) = (self.state_of(a)?, self.state_of(b)?);
        if self.component[sa] != self.component[sb] {
            return Ok(Distance::Infinite);
        }
        Ok(Distance::Finite(self.bfs(sa).0[sb]))
    }

    /// A shortest recoloring sequence from `a` to `b`, if one exists.
    pub fn shortest_path(&self, a: &Coloring, b: &Coloring) -> Result<Option<RecolorSequence>> {
        let (sa, sb) = (self.state_of(a)?, self.state_of(b)?);
        if self.component[sa] != self.component[sb] {
            return Ok(None);
        }
        let (_, parent) = self.bfs(sa);
        let mut path = vec![sb];
        while *path.last().expect("nonempty") != sa {
            path.push(parent[*path.last().expect("nonempty")]);
        }
        path.reverse();
        let steps = path
            .windows(2)
            .map(|w| {
                let (x, y) = (
                    self.decode(self.states[w[0]]),
                    self.decode(self.states[w[1]]),
                );
                let v = (0..x.len())
                    .find(|&v| x[v] != y[v])
                    .expect("adjacent states differ");
                RecolorStep::new(v, y[v])
            })
            .collect();
        Ok(Some(RecolorSequence::new(self.coloring(sa), steps)))
    }

    /// Largest distance between two colorings, infinite if disconnected.
    pub fn diameter(&self) -> Result<Distance> {
        match self.mixing() {
            Mixing::NoProperColoring => Err(precondition("the graph has no proper coloring")),
            Mixing::Disconnected => Ok(Distance::Infinite),
            Mixing::Connected => Ok(Distance::Finite(
                (0..self.states.len())
                    .map(|s| self.bfs(s).0.into_iter().max().unwrap_or(0))
                    .max()
                    .unwrap_or(0),
            )),
        }
    }

    /// Edges `(i, j)`, `i < j`, between state indices.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        (0..self.states.len())
            .flat_map(|i| {
                self.neighbors(i)
                    .into_iter()
                    .filter(move |&j| i < j)
                    .map(move |j| (i, j))
            })
            .collect()
    }
}

/// Lexicographic backtracking over proper colorings.
fn enumerate(
    g: &Graph,
    k: Color,
    v: usize,
    colors: &mut Vec<Color>,
    radix: &[u64],
    out: &mut Vec<u64>,
    limit: usize,
) -> Result<()> {
    if v == colors.len() {
        if out.len() >= limit {
            return Err(Error::Resource(format!(
                "more than {limit} proper {k}-colorings"
            )));
        }
        out.push(
            colors
                .iter()
                .zip(radix)
                .map(|(&c, &r)| (c as u64 - 1) * r)
                .sum(),
        );
        return Ok(());
    }
    for c in 1..=k {
        if g.neighbors(v).iter().all(|&w| w > v || colors[w] != c) {
            colors[v] = c;
            enumerate(g, k, v + 1, colors, radix, out, limit)?;
        }
    }
    Ok(())
}

pub fn oracle_distance(g: &Graph, k: Color, a: &Coloring, b: &Coloring) -> Result<Distance> {
    oracle_distance_with_limit(g, k, a, b, DEFAULT_STATE_LIMIT)
}

/// Distance by breadth-first search from `a`, generating states on the fly and
/// stopping at `b`. Only the explored part of `R_k(G)` counts toward the limit.
pub fn oracle_distance_with_limit(
    g: &Graph,
    k: Color,
    a: &Coloring,
    b: &Coloring,
    state_limit: usize,
) -> Result<Distance> {
    require_proper(g, a, "first coloring")?;
    require_proper(g, b, "second coloring")?;
    let n = g.vertex_count();
    if b.len() != n {
        return Err(input("colorings have different lengths"));
    }
    if a.colors().iter().chain(b.colors()).any(|&x| x > k) {
        return Err(input(format!(
            "coloring uses colors beyond the palette {k}"
        )));
    }
    let radix = (0..n)
        .map(|v| (k as u64).checked_pow(v as u32))
        .collect::<Option<Vec<u64>>>()
        .filter(|_| n == 0 || (k as u64).checked_pow(n as u32).is_some())
        .ok_or_else(|| Error::Resource(format!("{k}^{n} colorings cannot be encoded")))?;
    let encode = |cs: &[Color]| -> u64 {
        cs.iter()
            .zip(&radix)
            .map(|(&c, &r)| (c as u64 - 1) * r)
            .sum()
    };
    let target = encode(b.colors());
    let source = encode(a.colors());
    if source == target {
        return Ok(Distance::Finite(0));
    }
    let mut dist: HashMap<u64, u32> = HashMap::from([(source, 0)]);
    let mut queue = VecDeque::from([a.colors().to_vec()]);
    while let Some(mut colors) = queue.pop_front() {
        let code = encode(&colors);
        let d = dist[&code];
        for v in 0..n {
            let old = colors[v];
            let base = code - (old as u64 - 1) * radix[v];
            for c in 1..=k {
                if c == old || g.neighbors(v).iter().any(|&w| colors[w] == c) {
                    continue;
                }
                let next = base + (c as u64 - 1) * radix[v];
                if next == target {
                    return Ok(Distance::Finite(d as usize + 1));
                }
                if let Entry::Vacant(e) = dist.entry(next) {
                    e.insert(d + 1);
                    colors[v] = c;
                    queue.push_back(colors.clone());
                    colors[v] = old;
                }
            }
        }
        if dist.len() > state_limit {
            return Err(Error::Resource(format!(
                "explored more than {state_limit} proper {k}-colorings"
            )));
        }
    }
    Ok(Distance::Infinite)
}

pub fn is_k_mixing(g: &Graph, k: Color) -> Result<Mixing> {
    Ok(RecoloringGraph::build(g, k, DEFAULT_STATE_LIMIT)?.mixing())
}

pub fn recoloring_diameter(g: &Graph, k: Color) -> Result<Distance> {
    RecoloringGraph::build(g, k, DEFAULT_STATE_LIMIT)?.diameter()
}

/// Number of proper colorings adjacent to `c` in `R_k(G)`; zero means frozen.
pub fn frozen_degree(g: &Graph, k: Color, c: &Coloring) -> Result<usize> {
    require_proper(g, c, "coloring")?;
    Ok(g.vertices()
        .map(|v| {
            (1..=k)
                .filter(|&x| x != c.color(v) && c.admits(g, v, x))
                .count()
        })
        .sum())
}

/// Smallest `m ≤ k_max` such that `G` is k-mixing for every `k` in `m..=k_max`.
///
/// This is a probe, not the mixing number: mixing beyond `k_max` is not checked.
/// A single coloring counts as connected, so an edgeless graph probes to 1.
pub fn mixing_number_probe(g: &Graph, k_max: Color) -> Result<MixingProbe> {
    let mut smallest = None;
    for k in (1..=k_max).rev() {
        if is_k_mixing(g, k)? == Mixing::Connected {
            smallest = Some(k);
        } else {
            break;
        }
    }
    Ok(smallest.map_or(MixingProbe::NotFound, MixingProbe::Found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn col(cs: &[Color], k: Color) -> Coloring {
        Coloring::new(cs.to_vec(), k).unwrap()
    }

    #[test]
    fn single_vertex_distances() {
        let g = Graph::empty(1);
        assert_eq!(
            oracle_distance(&g, 2, &col(&[1], 2), &col(&[2], 2)).unwrap(),
            Distance::Finite(1)
        );
        assert_eq!(
            oracle_distance(&g, 2, &col(&[1], 2), &col(&[1], 2)).unwrap(),
            Distance::Finite(0)
        );
        assert_eq!(recoloring_diameter(&g, 2).unwrap(), Distance::Finite(1));
        assert_eq!(recoloring_diameter(&g, 3).unwrap(), Distance::Finite(1));
    }

    #[test]
    fn edgeless_state_count_is_k_to_the_n() {
        for (n, k) in [(1, 3), (2, 2), (3, 3), (4, 2)] {
            let o = RecoloringGraph::build(&Graph::empty(n), k, DEFAULT_STATE_LIMIT).unwrap();
            assert_eq!(o.state_count(), (k as usize).pow(n as u32));
        }
        assert_eq!(is_k_mixing(&Graph::empty(2), 2).unwrap(), Mixing::Connected);
    }

    #[test]
    fn no_coloring_is_distinguished() {
        let g = generate::complete(3).unwrap();
        assert_eq!(is_k_mixing(&g, 2).unwrap(), Mixing::NoProperColoring);
        assert!(recoloring_diameter(&g, 2).is_err());
    }

    #[test]
    fn frozen_degree_examples() {
        let g = Graph::empty(1);
        assert_eq!(frozen_degree(&g, 3, &col(&[1], 3)).unwrap(), 2);
        let k2 = generate::complete(2).unwrap();
        assert_eq!(frozen_degree(&k2, 3, &col(&[1, 2], 3)).unwrap(), 2);
        assert!(frozen_degree(&k2, 3, &col(&[1, 1], 3)).is_err());
    }

    #[test]
    fn k2_swap_takes_three_steps() {
        let g = generate::complete(2).unwrap();
        let o = RecoloringGraph::build(&g, 3, DEFAULT_STATE_LIMIT).unwrap();
        assert_eq!(o.state_count(), 6);
        let (a, b) = (col(&[1, 2], 3), col(&[2, 1], 3));
        assert_eq!(o.distance(&a, &b).unwrap(), Distance::Finite(3));
        let path = o.shortest_path(&a, &b).unwrap().unwrap();
        assert_eq!(path.len(), 3);
        assert_eq!(crate::validate_sequence(&g, &path).unwrap(), b);
    }

    #[test]
    fn lazy_distance_matches_full_graph() {
        let g = generate::cycle(5).unwrap();
        let o = RecoloringGraph::build(&g, 3, DEFAULT_STATE_LIMIT).unwrap();
        for i in 0..o.state_count() {
            for j in 0..o.state_count() {
                let (a, b) = (o.coloring(i), o.coloring(j));
                assert_eq!(
                    oracle_distance(&g, 3, &a, &b).unwrap(),
                    o.distance(&a, &b).unwrap()
                );
            }
        }
    }

    #[test]
    fn state_limit_is_enforced() {
        let g = Graph::empty(10);
        assert!(matches!(
            RecoloringGraph::build(&g, 3, 1000),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn edge_list_of_single_vertex() {
        let o = RecoloringGraph::build(&Graph::empty(1), 3, DEFAULT_STATE_LIMIT).unwrap();
        assert_eq!(o.edge_list(), vec![(0, 1), (0, 2), (1, 2)]);
    }
}
