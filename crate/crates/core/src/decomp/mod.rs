//! Tree decompositions and complete tree decompositions.
//!
//! A complete decomposition of level `l` has every bag of size `l + 1`, and the
//! bags of any two adjacent nodes differ in exactly one vertex on each side.

mod complete;
mod family;
mod treewidth;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{input, Result};
use crate::graph::{Graph, Vertex};

pub use complete::{is_minimal, make_complete, minimalize};
pub use family::{family_colors, family_partition, is_coherent, FamilyPartition};
pub use treewidth::{treewidth_exact, TREEWIDTH_MAX_VERTICES};

pub type Node = usize;

/// A tree of bags. Structural validity against a graph is checked by
/// [`validate_tree_decomposition`]; construction only checks node ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<Vertex>>,
    edges: Vec<(Node, Node)>,
    adjacency: Vec<Vec<Node>>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<Vertex>>, edges: Vec<(Node, Node)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); bags.len()];
        for &(a, b) in &edges {
            if a >= bags.len() || b >= bags.len() {
                return Err(input(format!(
                    "tree edge ({a}, {b}) refers to a missing node"
                )));
            }
            if a == b {
                return Err(input(format!("tree edge ({a}, {a}) is a loop")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for ns in &mut adjacency {
            ns.sort_unstable();
        }
        let bags = bags
            .into_iter()
            .map(|b| {
                let set: BTreeSet<Vertex> = b.into_iter().collect();
                set.into_iter().collect()
            })
            .collect();
        Ok(TreeDecomposition {
            bags,
            edges,
            adjacency,
        })
    }

    pub fn single_bag(bag: Vec<Vertex>) -> Self {
        TreeDecomposition::new(vec![bag], Vec::new()).expect("no edges")
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Sorted bag of `u`.
    pub fn bag(&self, u: Node) -> &[Vertex] {
        &self.bags[u]
    }

    pub fn bags(&self) -> &[Vec<Vertex>] {
        &self.bags
    }

    pub fn edges(&self) -> &[(Node, Node)] {
        &self.edges
    }

    pub fn neighbors(&self, u: Node) -> &[Node] {
        &self.adjacency[u]
    }

    /// Largest bag size minus one (0 for decompositions without vertices).
    pub fn size(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn bag_contains(&self, u: Node, v: Vertex) -> bool {
        self.bags[u].binary_search(&v).is_ok()
    }

    /// Nodes of degree at most one.
    pub fn leaves(&self) -> Vec<Node> {
        (0..self.node_count())
            .filter(|&u| self.adjacency[u].len() <= 1)
            .collect()
    }

    /// Union of all bags, sorted.
    pub fn vertices(&self) -> Vec<Vertex> {
        let set: BTreeSet<Vertex> = self.bags.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    pub fn is_tree(&self) -> bool {
        let n = self.node_count();
        if n == 0 || self.edges.len() != n - 1 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// The sub-decomposition on the given connected set of nodes. Node `i` of
    /// the result is `nodes[i]`.
    pub fn induced_subtree(&self, nodes: &[Node]) -> TreeDecomposition {
        let mut new_id = vec![usize::MAX; self.node_count()];
        for (i, &u) in nodes.iter().enumerate() {
            new_id[u] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| new_id[a] != usize::MAX && new_id[b] != usize::MAX)
            .map(|&(a, b)| (new_id[a], new_id[b]))
            .collect();
        TreeDecomposition::new(nodes.iter().map(|&u| self.bags[u].clone()).collect(), edges)
            .expect("induced edges are in range")
    }

    /// Nodes of the component of `T - blocked` that contains `start`.
    pub(crate) fn component(&self, start: Node, blocked: &[bool]) -> Vec<Node> {
        let mut seen = vec![false; self.node_count()];
        let mut out = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < out.len() {
            let u = out[i];
            i += 1;
            for &w in &self.adjacency[u] {
                if !seen[w] && !blocked[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out
    }
}

/// Which tree-decomposition axiom failed, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotATree,
    UnknownVertex { node: Node, vertex: Vertex },
    VertexNotCovered(Vertex),
    EdgeNotCovered(Vertex, Vertex),
    DisconnectedOccurrence(Vertex),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotATree => write!(f, "the nodes do not form a tree"),
            Violation::UnknownVertex { node, vertex } => {
                write!(f, "bag {node} contains unknown vertex {vertex}")
            }
            Violation::VertexNotCovered(v) => write!(f, "vertex {v} is in no bag"),
            Violation::EdgeNotCovered(x, y) => write!(f, "edge ({x}, {y}) is in no bag"),
            Violation::DisconnectedOccurrence(v) => {
                write!(f, "the bags containing vertex {v} do not form a subtree")
            }
        }
    }
}

/// Checks vertex coverage, edge coverage and connectivity of occurrences.
/// Returns the size (largest bag minus one) on success.
pub fn validate_tree_decomposition(
    g: &Graph,
    t: &TreeDecomposition,
) -> std::result::Result<usize, Violation> {
    if !t.is_tree() {
        return Err(Violation::NotATree);
    }
    let n = g.vertex_count();
    let mut occurrences: Vec<Vec<Node>> = vec![Vec::new(); n];
    for (u, bag) in t.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(Violation::UnknownVertex { node: u, vertex: v });
            }
            occurrences[v].push(u);
        }
    }
    if let Some(v) = occurrences.iter().position(Vec::is_empty) {
        return Err(Violation::VertexNotCovered(v));
    }
    for (x, y) in g.edges() {
        if !occurrences[x].iter().any(|&u| t.bag_contains(u, y)) {
            return Err(Violation::EdgeNotCovered(x, y));
        }
    }
    // A node set of a tree induces a subtree iff it spans |set| - 1 tree edges.
    for (v, occ) in occurrences.iter().enumerate() {
        let inner = t
            .edges
            .iter()
            .filter(|&&(a, b)| t.bag_contains(a, v) && t.bag_contains(b, v))
            .count();
        if inner + 1 != occ.len() {
            return Err(Violation::DisconnectedOccurrence(v));
        }
    }
    Ok(t.size())
}

/// Level of a complete decomposition, or a description of why it is not one.
/// Only the shape is checked, not the decomposition axioms.
pub fn complete_level(t: &TreeDecomposition) -> std::result::Result<usize, String> {
    let Some(first) = t.bags.first() else {
        return Err("decomposition has no nodes".into());
    };
    let width = first.len();
    if width == 0 {
        return Err("bags are empty".into());
    }
    if let Some(u) = t.bags.iter().position(|b| b.len() != width) {
        return Err(format!(
            "bag {u} has {} vertices, bag 0 has {width}",
            t.bags[u].len()
        ));
    }
    for &(a, b) in &t.edges {
        let shared = t.bags[a].iter().filter(|&&v| t.bag_contains(b, v)).count();
        if shared + 1 != width {
            return Err(format!(
                "adjacent bags {a} and {b} share {shared} vertices, expected {}",
                width - 1
            ));
        }
    }
    Ok(width - 1)
}

/// A tree decomposition whose bags all have `level + 1` vertices and whose
/// adjacent bags share exactly `level` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteTreeDecomposition {
    decomposition: TreeDecomposition,
    level: usize,
}

impl CompleteTreeDecomposition {
    /// Validates `t` as a complete tree decomposition of `g`.
    pub fn new(g: &Graph, t: TreeDecomposition) -> Result<Self> {
        validate_tree_decomposition(g, &t)
            .map_err(|v| input(format!("not a tree decomposition: {v}")))?;
        let level = complete_level(&t).map_err(|e| input(format!("not complete: {e}")))?;
        Ok(CompleteTreeDecomposition {
            decomposition: t,
            level,
        })
    }

    /// Wraps a decomposition whose completeness the caller has established.
    pub(crate) fn trusted(t: TreeDecomposition, level: usize) -> Self {
        debug_assert_eq!(complete_level(&t), Ok(level));
        CompleteTreeDecomposition {
            decomposition: t,
            level,
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn decomposition(&self) -> &TreeDecomposition {
        &self.decomposition
    }

    pub fn into_decomposition(self) -> TreeDecomposition {
        self.decomposition
    }

    /// For the edge `u`–`v`, the unique vertex of `B_u` missing from `B_v`.
    pub fn exclusive(&self, u: Node, v: Node) -> Vertex {
        let t = &self.decomposition;
        let mut it = t.bag(u).iter().filter(|&&x| !t.bag_contains(v, x));
        let x = *it.next().expect("adjacent complete bags differ");
        debug_assert!(it.next().is_none());
        x
    }

    /// Parent pairs: for each tree edge `uv`, `(B_u \ B_v, B_v \ B_u)`.
    pub fn parent_pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.decomposition
            .edges()
            .iter()
            .map(|&(u, v)| (self.exclusive(u, v), self.exclusive(v, u)))
            .collect()
    }
}

impl std::ops::Deref for CompleteTreeDecomposition {
    type Target = TreeDecomposition;

    fn deref(&self) -> &TreeDecomposition {
        &self.decomposition
    }
}

/// `T[V \ X]`: every bag loses `X`, and each tree edge `uv` with
/// `B_u \ X ⊆ B_v \ X` (or the reverse) is contracted. A contracted group of
/// nodes carries the union of its bags; groups are numbered by their smallest
/// original node.
pub fn restrict(t: &TreeDecomposition, removed: &[Vertex]) -> TreeDecomposition {
    restrict_with_map(t, removed).0
}

/// [`restrict`] plus, for each original node, the node of the result it was
/// contracted into.
pub(crate) fn restrict_with_map(
    t: &TreeDecomposition,
    removed: &[Vertex],
) -> (TreeDecomposition, Vec<Node>) {
    let gone: BTreeSet<Vertex> = removed.iter().copied().collect();
    let bags: Vec<Vec<Vertex>> = t
        .bags
        .iter()
        .map(|b| b.iter().copied().filter(|v| !gone.contains(v)).collect())
        .collect();
    let subset = |a: &[Vertex], b: &[Vertex]| a.iter().all(|v| b.binary_search(v).is_ok());

    let mut group: Vec<Node> = (0..t.node_count()).collect();
    fn find(group: &mut [Node], u: Node) -> Node {
        let mut r = u;
        while group[r] != r {
            r = group[r];
        }
        let mut c = u;
        while group[c] != r {
            let next = group[c];
            group[c] = r;
            c = next;
        }
        r
    }
    for &(a, b) in &t.edges {
        if subset(&bags[a], &bags[b]) || subset(&bags[b], &bags[a]) {
            let (ra, rb) = (find(&mut group, a), find(&mut group, b));
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            group[hi] = lo;
        }
    }

    let mut new_id = vec![usize::MAX; t.node_count()];
    let mut new_bags: Vec<BTreeSet<Vertex>> = Vec::new();
    let mut map = vec![0; t.node_count()];
    for u in 0..t.node_count() {
        let r = find(&mut group, u);
        if new_id[r] == usize::MAX {
            new_id[r] = new_bags.len();
            new_bags.push(BTreeSet::new());
        }
        map[u] = new_id[r];
        new_bags[new_id[r]].extend(bags[u].iter().copied());
    }
    let mut edges: Vec<(Node, Node)> = t
        .edges
        .iter()
        .map(|&(a, b)| (map[a], map[b]))
        .filter(|&(a, b)| a != b)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let restricted = TreeDecomposition::new(
        new_bags
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect(),
        edges,
    )
    .expect("contracted edges are in range");
    (restricted, map)
}

/// Vertices that occur in exactly one bag, that bag being a leaf. In a
/// single-node decomposition every vertex of the bag counts as a baby.
pub fn find_babies(t: &CompleteTreeDecomposition) -> Vec<Vertex> {
    let mut count: std::collections::BTreeMap<Vertex, usize> = Default::default();
    for bag in t.bags() {
        for &v in bag {
            *count.entry(v).or_default() += 1;
        }
    }
    let mut babies: BTreeSet<Vertex> = BTreeSet::new();
    for u in t.leaves() {
        babies.extend(t.bag(u).iter().copied().filter(|v| count[v] == 1));
    }
    babies.into_iter().collect()
}
