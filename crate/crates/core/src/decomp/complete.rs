use std::collections::BTreeSet;

use super::{
    restrict, validate_tree_decomposition, CompleteTreeDecomposition, Node, TreeDecomposition,
};
use crate::error::{precondition, Result};
use crate::graph::{Graph, Vertex};

fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// No bag is contained in an adjacent bag (hence in any other bag).
pub fn is_minimal(t: &TreeDecomposition) -> bool {
    t.edges()
        .iter()
        .all(|&(a, b)| !is_subset(t.bag(a), t.bag(b)) && !is_subset(t.bag(b), t.bag(a)))
}

/// Contracts every tree edge whose one bag contains the other, until none is left.
pub fn minimalize(t: &TreeDecomposition) -> TreeDecomposition {
    let mut bags: Vec<Option<Vec<Vertex>>> = t.bags().iter().cloned().map(Some).collect();
    let mut adjacency: Vec<BTreeSet<Node>> = (0..t.node_count())
        .map(|u| t.neighbors(u).iter().copied().collect())
        .collect();
    loop {
        let mut merged = false;
        for a in 0..bags.len() {
            let Some(bag_a) = bags[a].clone() else {
                continue;
            };
            let found = adjacency[a].iter().copied().find(|&b| {
                let bag_b = bags[b].as_ref().expect("live neighbor");
                is_subset(&bag_a, bag_b)
            });
            if let Some(b) = found {
                // Fold `a` into `b`.
                let ns: Vec<Node> = adjacency[a].iter().copied().collect();
                for w in ns {
                    adjacency[w].remove(&a);
                    if w != b {
                        adjacency[w].insert(b);
                        adjacency[b].insert(w);
                    }
                }
                adjacency[a].clear();
                bags[a] = None;
                merged = true;
            }
        }
        if !merged {
            break;
        }
    }
    let mut new_id = vec![usize::MAX; bags.len()];
    let mut kept = Vec::new();
    for (u, b) in bags.iter().enumerate() {
        if let Some(b) = b {
            new_id[u] = kept.len();
            kept.push(b.clone());
        }
    }
    let mut edges = Vec::new();
    for (u, ns) in adjacency.iter().enumerate() {
        for &w in ns {
            if u < w {
                edges.push((new_id[u], new_id[w]));
            }
        }
    }
    TreeDecomposition::new(kept, edges).expect("edges among kept nodes")
}

/// Builds a `level`-complete tree decomposition of `g` in which every bag of
/// the minimal decomposition `t` is contained in some bag.
///
/// Repeatedly peel a baby `x` off the lowest-numbered leaf `u` (lowest vertex
/// of `B_u \ B_v`), then rebuild in reverse: the node `w` hosting `B_u \ x`
/// receives a new leaf `(B_w ∪ x) \ y` for the lowest `y ∈ B_w \ B_u`.
pub fn make_complete(
    g: &Graph,
    t: &TreeDecomposition,
    level: usize,
) -> Result<CompleteTreeDecomposition> {
    let n = g.vertex_count();
    if n == 0 || level + 1 > n {
        return Err(precondition(format!(
            "level {level} is out of range for a graph on {n} vertices (need level ≤ n - 1)"
        )));
    }
    let size = validate_tree_decomposition(g, t)
        .map_err(|v| precondition(format!("not a tree decomposition: {v}")))?;
    if size > level {
        return Err(precondition(format!(
            "decomposition has size {size}, larger than level {level}"
        )));
    }
    if !is_minimal(t) {
        return Err(precondition("decomposition is not minimal"));
    }

    let mut peeled: Vec<(Vertex, Vec<Vertex>)> = Vec::new();
    let mut current = t.clone();
    let mut remaining = n;
    while remaining > level + 1 {
        let u = (0..current.node_count())
            .find(|&u| current.neighbors(u).len() == 1)
            .expect("a decomposition of more than level + 1 vertices has a leaf");
        let v = current.neighbors(u)[0];
        let x = *current
            .bag(u)
            .iter()
            .find(|&&x| !current.bag_contains(v, x))
            .ok_or_else(|| precondition("decomposition is not minimal"))?;
        let rest: Vec<Vertex> = current.bag(u).iter().copied().filter(|&y| y != x).collect();
        peeled.push((x, rest));
        current = restrict(&current, &[x]);
        remaining -= 1;
    }

    let mut bags: Vec<Vec<Vertex>> = vec![current.vertices()];
    debug_assert_eq!(bags[0].len(), level + 1);
    let mut edges: Vec<(Node, Node)> = Vec::new();
    while let Some((x, rest)) = peeled.pop() {
        let w = bags
            .iter()
            .position(|b| is_subset(&rest, b))
            .expect("every peeled bag is hosted by the rebuilt decomposition");
        let y = *bags[w]
            .iter()
            .find(|&&y| rest.binary_search(&y).is_err())
            .expect("a full bag is larger than a peeled bag");
        let mut bag: Vec<Vertex> = bags[w].iter().copied().filter(|&z| z != y).collect();
        bag.push(x);
        bag.sort_unstable();
        edges.push((w, bags.len()));
        bags.push(bag);
    }
    let out = TreeDecomposition::new(bags, edges).expect("edges are in range");
    Ok(CompleteTreeDecomposition::trusted(out, level))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{complete_level, treewidth_exact};

    fn assert_contains_all(t: &TreeDecomposition, c: &CompleteTreeDecomposition) {
        for b in t.bags() {
            assert!(
                c.bags().iter().any(|cb| is_subset(b, cb)),
                "{b:?} not hosted"
            );
        }
    }

    #[test]
    fn full_level_gives_single_bag() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let (_, t) = treewidth_exact(&g).unwrap();
        let c = make_complete(&g, &t, 2).unwrap();
        assert_eq!(c.bags(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn path_p3_level_one() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let (_, t) = treewidth_exact(&g).unwrap();
        let c = make_complete(&g, &t, 1).unwrap();
        assert_eq!(c.node_count(), 2);
        let mut bags = c.bags().to_vec();
        bags.sort();
        assert_eq!(bags, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(validate_tree_decomposition(&g, &c), Ok(1));
        assert_eq!(complete_level(&c), Ok(1));
    }

    #[test]
    fn edgeless_three_vertices_level_one() {
        let g = Graph::empty(3);
        let (_, t) = treewidth_exact(&g).unwrap();
        let c = make_complete(&g, &t, 1).unwrap();
        assert_eq!(c.node_count(), 2);
        assert_eq!(validate_tree_decomposition(&g, &c), Ok(1));
        assert_eq!(complete_level(&c), Ok(1));
        assert_contains_all(&t, &c);
    }

    #[test]
    fn level_out_of_range_is_rejected() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let (_, t) = treewidth_exact(&g).unwrap();
        assert!(make_complete(&g, &t, 3).is_err());
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let (_, t) = treewidth_exact(&tri).unwrap();
        assert!(make_complete(&tri, &t, 1).is_err());
    }

    #[test]
    fn non_minimal_input_is_rejected() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let t = TreeDecomposition::new(vec![vec![0, 1], vec![1], vec![1, 2]], vec![(0, 1), (1, 2)])
            .unwrap();
        assert!(make_complete(&g, &t, 1).is_err());
        let m = minimalize(&t);
        assert!(is_minimal(&m));
        assert_eq!(m.node_count(), 2);
        assert!(make_complete(&g, &m, 1).is_ok());
    }
}
