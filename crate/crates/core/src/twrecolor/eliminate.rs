//! Removing one color from everything outside a chosen bag.

use std::collections::VecDeque;

use crate::coloring::{
    require_proper, validate_sequence, Color, Coloring, RecolorSequence, SequenceBuilder,
};
use crate::decomp::{
    complete_level, is_coherent, restrict_with_map, CompleteTreeDecomposition, Node,
    TreeDecomposition,
};
use crate::error::{precondition, Result};
use crate::graph::{Graph, Vertex};

/// Recolors `c` so that no vertex has color `a`, touching only vertices
/// outside `B_u` and each of them at most once. Needs `k ≥ l + 2`, `a` absent
/// from `B_u`, and `c` coherent on `V \ B_u`; the result stays coherent there.
pub fn eliminate_color(
    g: &Graph,
    t: &CompleteTreeDecomposition,
    u: Node,
    c: &Coloring,
    a: Color,
    k: Color,
) -> Result<RecolorSequence> {
    let level = t.level();
    if (k as usize) < level + 2 {
        return Err(precondition(format!(
            "eliminating a color needs k >= {}, got {k}",
            level + 2
        )));
    }
    if u >= t.node_count() {
        return Err(precondition(format!("node {u} is out of range")));
    }
    if a == 0 || a > k {
        return Err(precondition(format!("color {a} is outside 1..={k}")));
    }
    let c = c.with_palette(k)?;
    require_proper(g, &c, "input coloring")?;
    if t.bag(u).iter().any(|&v| c.color(v) == a) {
        return Err(precondition(format!("color {a} occurs in bag {u}")));
    }
    let outside = outside_bag(g.vertex_count(), t.bag(u));
    if !is_coherent(g, t, &c, &outside) {
        return Err(precondition(
            "coloring is not coherent outside the root bag",
        ));
    }

    let mut builder = SequenceBuilder::new(&c);
    eliminate_in(t, level, u, a, k, &mut Vec::new(), &mut builder);
    let seq = builder.finish();
    let end = validate_sequence(g, &seq).expect("elimination produced an invalid sequence");
    assert!(
        end.colors().iter().all(|&x| x != a),
        "color {a} survived elimination"
    );
    let counts = seq.recolor_counts();
    assert!(
        t.bag(u).iter().all(|&v| counts[v] == 0),
        "elimination touched the root bag"
    );
    assert!(
        counts.iter().all(|&x| x <= 1),
        "elimination recolored a vertex twice"
    );
    assert!(
        is_coherent(g, t, &end, &outside),
        "elimination broke coherence outside the root bag"
    );
    Ok(seq)
}

pub(crate) fn outside_bag(n: usize, bag: &[Vertex]) -> Vec<Vertex> {
    (0..n).filter(|v| bag.binary_search(v).is_err()).collect()
}

/// Fathers of every node when `t` is rooted at `root`.
fn fathers(t: &TreeDecomposition, root: Node) -> Vec<Option<Node>> {
    let mut father = vec![None; t.node_count()];
    let mut seen = vec![false; t.node_count()];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(x) = queue.pop_front() {
        for &y in t.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                father[y] = Some(x);
                queue.push_back(y);
            }
        }
    }
    father
}

/// Core recursion. `t` is complete of level `level` and covers only vertices
/// whose current colors live in `builder`. Colors in `forbidden` belong to
/// vertices removed by enclosing calls and must not be used.
pub(crate) fn eliminate_in(
    t: &TreeDecomposition,
    level: usize,
    root: Node,
    a: Color,
    k: Color,
    forbidden: &mut Vec<Color>,
    builder: &mut SequenceBuilder,
) {
    let has_a: Vec<bool> = t
        .bags()
        .iter()
        .map(|bag| bag.iter().any(|&v| builder.color(v) == a))
        .collect();
    debug_assert!(!has_a[root]);
    let father = fathers(t, root);
    let tops: Vec<Node> = (0..t.node_count())
        .filter(|&v| has_a[v] && father[v].is_some_and(|f| !has_a[f]))
        .collect();

    for v in tops {
        let mut blocked = vec![false; t.node_count()];
        blocked[father[v].expect("a top has a father")] = true;
        let subtree = t.component(v, &blocked);

        let mut a_vertices: Vec<Vertex> = Vec::new();
        for &w in &subtree {
            let here: Vec<Vertex> = t
                .bag(w)
                .iter()
                .copied()
                .filter(|&x| builder.color(x) == a)
                .collect();
            assert_eq!(
                here.len(),
                1,
                "bag {w} should hold exactly one vertex of color {a}"
            );
            a_vertices.extend(here);
        }
        a_vertices.sort_unstable();
        a_vertices.dedup();

        let b = (1..=k)
            .find(|&b| {
                b != a && !forbidden.contains(&b) && t.bag(v).iter().all(|&x| builder.color(x) != b)
            })
            .expect("k >= l + 2 leaves a replacement color");

        if level > 0 {
            let sub = t.induced_subtree(&subtree);
            let (inner, map) = restrict_with_map(&sub, &a_vertices);
            debug_assert_eq!(complete_level(&inner), Ok(level - 1));
            forbidden.push(a);
            eliminate_in(&inner, level - 1, map[0], b, k, forbidden, builder);
            forbidden.pop();
        }
        for &x in &a_vertices {
            builder.recolor(x, b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::make_complete;
    use crate::generate;

    fn p4() -> (Graph, CompleteTreeDecomposition) {
        let g = generate::path(4).unwrap();
        let t = TreeDecomposition::new(
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            vec![(0, 1), (1, 2)],
        )
        .unwrap();
        let t = make_complete(&g, &t, 1).unwrap();
        (g, t)
    }

    #[test]
    fn eliminate_on_p4() {
        let (g, t) = p4();
        let u = (0..t.node_count()).find(|&u| t.bag(u) == [0, 1]).unwrap();
        let c = Coloring::new(vec![1, 2, 1, 2], 3).unwrap();
        let seq = eliminate_color(&g, &t, u, &c, 3, 3).unwrap();
        assert!(seq.is_empty());
        // Eliminate color 1 from a bag holding colors 2 and 3.
        let c = Coloring::new(vec![3, 2, 1, 2], 3).unwrap();
        let seq = eliminate_color(&g, &t, u, &c, 1, 3).unwrap();
        let end = seq.end();
        assert!(end.colors().iter().all(|&x| x != 1));
        assert_eq!(&end.colors()[..2], &[3, 2]);
        assert!(seq.len() <= 2);
    }

    #[test]
    fn color_in_root_bag_is_rejected() {
        let (g, t) = p4();
        let c = Coloring::new(vec![1, 2, 1, 2], 3).unwrap();
        let u = (0..t.node_count())
            .find(|&u| t.bag(u).contains(&0))
            .unwrap();
        assert!(eliminate_color(&g, &t, u, &c, 1, 3).is_err());
    }

    #[test]
    fn too_few_colors() {
        let (g, t) = p4();
        let c = Coloring::new(vec![1, 2, 1, 2], 2).unwrap();
        assert!(eliminate_color(&g, &t, 0, &c, 2, 2).is_err());
    }
}
