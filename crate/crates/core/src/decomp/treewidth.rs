//! Exact treewidth by dynamic programming over elimination prefixes.
//!
//! For a set `S` of vertices eliminated first, `TW(S) = min_{v ∈ S} max(TW(S \ v), |Q(S \ v, v)|)`
//! where `Q(S, v)` is the set of vertices outside `S ∪ {v}` reachable from `v`
//! through `S`. Each connected component is solved separately.

use super::{complete::minimalize, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest connected component the exact search accepts.
pub const TREEWIDTH_MAX_VERTICES: usize = 20;

/// Exact treewidth and a minimal decomposition of that size.
pub fn treewidth_exact(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok((0, TreeDecomposition::single_bag(Vec::new())));
    }
    let components = components(g);
    if let Some(c) = components.iter().find(|c| c.len() > TREEWIDTH_MAX_VERTICES) {
        return Err(Error::Resource(format!(
            "exact treewidth is limited to components of {TREEWIDTH_MAX_VERTICES} vertices, found {}",
            c.len()
        )));
    }

    let mut bags: Vec<Vec<Vertex>> = Vec::new();
    let mut edges = Vec::new();
    let mut previous_root: Option<usize> = None;
    let mut width = 0;
    for comp in &components {
        let (sub, map) = g.induced(comp);
        let order = optimal_elimination_order(&sub);
        let local = decomposition_from_order(&sub, &order);
        let root = local.root;
        width = width.max(local.width);
        let offset = bags.len();
        bags.extend(
            local
                .bags
                .into_iter()
                .map(|b| b.into_iter().map(|v| map[v]).collect()),
        );
        edges.extend(
            local
                .edges
                .into_iter()
                .map(|(a, b)| (a + offset, b + offset)),
        );
        if let Some(r) = previous_root {
            edges.push((r, root + offset));
        }
        previous_root = Some(root + offset);
    }
    let t = TreeDecomposition::new(bags, edges).expect("edges are in range");
    let t = minimalize(&t);
    debug_assert_eq!(t.size(), width);
    Ok((width, t))
}

fn components(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// An elimination order (first eliminated first) of minimum width.
fn optimal_elimination_order(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let full: u32 = (1u32 << n) - 1;

    // |Q(S, v)|: flood from v through S, count boundary outside S ∪ {v}.
    let q = |s: u32, v: usize| -> u32 {
        let mut comp = 1u32 << v;
        let mut frontier = comp;
        let mut reach = 0u32;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let w = f.trailing_zeros() as usize;
                f &= f - 1;
                reach |= adj[w];
                next |= adj[w] & s & !comp;
            }
            comp |= next;
            frontier = next;
        }
        (reach & !s & !(1u32 << v)).count_ones()
    };

    let size = 1usize << n;
    let mut tw = vec![u8::MAX; size];
    let mut choice = vec![0u8; size];
    tw[0] = 0;
    for s in 1..size as u32 {
        let mut best = u8::MAX;
        let mut best_v = 0;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let cand = tw[prev as usize].max(q(prev, v) as u8);
            if cand < best {
                best = cand;
                best_v = v;
            }
        }
        tw[s as usize] = best;
        choice[s as usize] = best_v as u8;
    }

    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    order
}

struct EliminationTree {
    bags: Vec<Vec<Vertex>>,
    edges: Vec<(usize, usize)>,
    root: usize,
    width: usize,
}

/// Bags of the elimination tree: `{v} ∪ later neighbors in the fill graph`,
/// attached to the earliest-eliminated later neighbor.
fn decomposition_from_order(g: &Graph, order: &[Vertex]) -> EliminationTree {
    let n = g.vertex_count();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut fill: Vec<std::collections::BTreeSet<Vertex>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut root = 0;
    let mut width = 0;
    for &v in order {
        let later: Vec<Vertex> = fill[v]
            .iter()
            .copied()
            .filter(|&w| position[w] > position[v])
            .collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                fill[a].insert(b);
                fill[b].insert(a);
            }
        }
        width = width.max(later.len());
        match later.iter().min_by_key(|&&w| position[w]) {
            Some(&p) => edges.push((position[v], position[p])),
            None => root = position[v],
        }
        let mut bag = later;
        bag.push(v);
        bags.push(bag);
    }
    EliminationTree {
        bags,
        edges,
        root,
        width,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{is_minimal, validate_tree_decomposition};

    fn check(g: &Graph, expected: usize) {
        let (tw, t) = treewidth_exact(g).unwrap();
        assert_eq!(tw, expected);
        assert_eq!(validate_tree_decomposition(g, &t), Ok(tw));
        assert!(is_minimal(&t));
    }

    #[test]
    fn path_has_treewidth_one() {
        check(
            &Graph::from_edges(5, (1..5).map(|i| (i - 1, i))).unwrap(),
            1,
        );
    }

    #[test]
    fn clique_has_treewidth_n_minus_one() {
        for n in 1..6 {
            let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            check(&Graph::from_edges(n, edges).unwrap(), n - 1);
        }
    }

    #[test]
    fn four_cycle_has_treewidth_two() {
        check(
            &Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
            2,
        );
    }

    #[test]
    fn edgeless_and_disconnected() {
        check(&Graph::empty(3), 0);
        check(
            &Graph::from_edges(5, [(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap(),
            2,
        );
    }

    #[test]
    fn oversized_component_is_a_resource_error() {
        let n = TREEWIDTH_MAX_VERTICES + 1;
        let g = Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap();
        assert!(matches!(treewidth_exact(&g), Err(Error::Resource(_))));
    }
}
