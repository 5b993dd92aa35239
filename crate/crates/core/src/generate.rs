//! Test-instance generators.

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Color, Coloring};
use crate::decomp::TreeDecomposition;
use crate::error::{input, precondition, Error, Result};
use crate::graph::{Graph, Vertex};

fn require_vertices(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(input(format!("{what} needs at least one vertex")))
    } else {
        Ok(())
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    require_vertices(n, "complete graph")?;
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{n,n}` minus the perfect matching `{u_i v_i}`. Vertex `u_i` is `i` and
/// `v_i` is `n + i`.
pub fn bipartite_minus_matching(n: usize) -> Result<Graph> {
    require_vertices(n, "bipartite graph")?;
    Graph::from_edges(
        2 * n,
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j))),
    )
}

pub fn path(n: usize) -> Result<Graph> {
    require_vertices(n, "path")?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(input("a cycle needs at least three vertices"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star on `n` vertices: center `0` joined to `1..n`.
pub fn star(n: usize) -> Result<Graph> {
    require_vertices(n, "star")?;
    Graph::from_edges(n, (1..n).map(|i| (0, i)))
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    check_prob(edge_prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(edge_prob) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

fn check_prob(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(input(format!("edge probability {p} is not in [0, 1]")))
    }
}

/// A random subgraph of a random `k`-tree on `n` vertices, with the `k`-tree's
/// decomposition as a witness (treewidth at most `k`). Each k-tree edge is kept
/// with probability `edge_keep_prob`; vertex labels are shuffled.
///
/// When `n ≤ k + 1` the k-tree is the clique `K_n` with a single bag.
pub fn partial_ktree(
    n: usize,
    k: usize,
    edge_keep_prob: f64,
    seed: u64,
) -> Result<(Graph, TreeDecomposition)> {
    require_vertices(n, "partial k-tree")?;
    check_prob(edge_keep_prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let base = n.min(k + 1);
    let mut bags: Vec<Vec<Vertex>> = vec![(0..base).collect()];
    let mut tree_edges = Vec::new();
    let mut edges: Vec<(Vertex, Vertex)> = (0..base)
        .flat_map(|i| (i + 1..base).map(move |j| (i, j)))
        .collect();
    for v in base..n {
        let host = rng.random_range(0..bags.len());
        let mut clique = bags[host].clone();
        if !clique.is_empty() {
            let drop = rng.random_range(0..clique.len());
            clique.remove(drop);
        }
        edges.extend(clique.iter().map(|&w| (w, v)));
        clique.push(v);
        tree_edges.push((host, bags.len()));
        bags.push(clique);
    }

    let mut label: Vec<Vertex> = (0..n).collect();
    label.shuffle(&mut rng);
    let kept: Vec<(Vertex, Vertex)> = edges
        .into_iter()
        .filter(|_| rng.random_bool(edge_keep_prob))
        .map(|(a, b)| (label[a], label[b]))
        .collect();
    let graph = Graph::from_edges(n, kept)?;
    let bags = bags
        .into_iter()
        .map(|b| b.into_iter().map(|v| label[v]).collect())
        .collect();
    let witness = TreeDecomposition::new(bags, tree_edges)?;
    Ok((graph, witness))
}

/// Backtracking budget for [`random_proper_coloring`].
pub const COLORING_SEARCH_BUDGET: u64 = 10_000_000;

/// A random proper k-coloring. Vertices follow a smallest-last order with
/// random ties and try colors in random order, backtracking when stuck; with
/// `k` above the degeneracy no backtracking happens.
pub fn random_proper_coloring(g: &Graph, k: Color, seed: u64) -> Result<Coloring> {
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = smallest_last(g, &mut rng);
    let mut colors = vec![0 as Color; n];
    let mut budget = COLORING_SEARCH_BUDGET;
    if !fill(g, k, &order, 0, &mut colors, &mut rng, &mut budget)? {
        return Err(precondition(format!(
            "the graph has no proper {k}-coloring"
        )));
    }
    Coloring::new(colors, k.max(1))
}

/// Repeatedly removes a vertex of minimum remaining degree, then reverses, so
/// each vertex has at most `degeneracy` earlier neighbors.
fn smallest_last(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let low = (0..n)
            .filter(|&v| !removed[v])
            .map(|v| degree[v])
            .min()
            .expect("a vertex remains");
        let ties: Vec<Vertex> = (0..n)
            .filter(|&v| !removed[v] && degree[v] == low)
            .collect();
        let v = ties[rng.random_range(0..ties.len())];
        removed[v] = true;
        for &w in g.neighbors(v) {
            degree[w] -= 1;
        }
        order.push(v);
    }
    order.reverse();
    order
}

fn fill(
    g: &Graph,
    k: Color,
    order: &[Vertex],
    i: usize,
    colors: &mut [Color],
    rng: &mut ChaCha8Rng,
    budget: &mut u64,
) -> Result<bool> {
    let Some(&v) = order.get(i) else {
        return Ok(true);
    };
    if *budget == 0 {
        return Err(Error::Resource(format!(
            "random coloring search exceeded {COLORING_SEARCH_BUDGET} nodes"
        )));
    }
    *budget -= 1;
    let mut palette: Vec<Color> = (1..=k).collect();
    palette.shuffle(rng);
    for c in palette {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if fill(g, k, order, i + 1, colors, rng, budget)? {
                return Ok(true);
            }
        }
    }
    colors[v] = 0;
    Ok(false)
}
