//! Sweeping a decomposition leaf by leaf until the coloring is coherent.

use crate::coloring::{
    require_proper, validate_sequence, Color, Coloring, RecolorSequence, SequenceBuilder,
};
use crate::decomp::{
    complete_level, family_partition, is_coherent, restrict, CompleteTreeDecomposition,
};
use crate::error::{precondition, Result};
use crate::graph::{Graph, Vertex};

use super::eliminate::eliminate_in;

/// Recolors `a` into a V-coherent coloring: parents share colors and every
/// bag is rainbow. Uses at most `n²` recolorings and needs `k ≥ l + 2`.
///
/// Vertices are treated one at a time. Each step peels a leaf `u` off the
/// untreated part of the tree, clears a fresh color from the nodes already
/// peeled next to `u`, and moves the leaf's exclusive vertex and its treated
/// family members onto that color. A vertex that is already coherent with the
/// treated ones is left alone.
pub fn make_coherent(
    g: &Graph,
    t: &CompleteTreeDecomposition,
    k: Color,
    a: &Coloring,
) -> Result<(RecolorSequence, Coloring)> {
    let level = t.level();
    if (k as usize) < level + 2 {
        return Err(precondition(format!(
            "making a coloring coherent needs k >= {}, got {k}",
            level + 2
        )));
    }
    let a = a.with_palette(k)?;
    require_proper(g, &a, "input coloring")?;
    let n = g.vertex_count();
    if t.vertices().len() != n {
        return Err(precondition("decomposition does not cover the graph"));
    }
    let families = family_partition(t);
    let nodes = t.node_count();

    let mut builder = SequenceBuilder::new(&a);
    let mut alive = vec![true; nodes];
    let mut alive_count = nodes;
    let mut treated = vec![false; n];
    let mut order: Vec<Vertex> = Vec::with_capacity(n);

    while order.len() < n {
        let (u, x) = if alive_count > 1 {
            let u = (0..nodes)
                .find(|&u| alive[u] && t.neighbors(u).iter().filter(|&&w| alive[w]).count() == 1)
                .expect("a tree with two nodes has a leaf");
            let v = *t
                .neighbors(u)
                .iter()
                .find(|&&w| alive[w])
                .expect("leaf has an alive neighbor");
            (u, t.exclusive(u, v))
        } else {
            let u = (0..nodes).find(|&u| alive[u]).expect("one node is alive");
            let x = *t
                .bag(u)
                .iter()
                .find(|&&x| !treated[x])
                .expect("untreated vertices remain in the last bag");
            (u, x)
        };
        debug_assert!(!treated[x]);

        let mark = builder.len();
        let mut with_x = order.clone();
        with_x.push(x);
        if !is_coherent(g, t, &builder.current(), &with_x) {
            let blocked: Vec<bool> = (0..nodes).map(|w| alive[w] && w != u).collect();
            let region = t.component(u, &blocked);
            let sub = t.induced_subtree(&region);

            let fresh = (1..=k)
                .find(|&c| t.bag(u).iter().all(|&y| builder.color(y) != c))
                .expect("k > l + 1 leaves a color free in every bag");

            eliminate_in(&sub, level, 0, fresh, k, &mut Vec::new(), &mut builder);
            let family = families.family_of(x).expect("bag vertex has a family");
            let region_vertices = sub.vertices();
            for &y in families.members(family) {
                let joins = y == x
                    || (treated[y]
                        && region_vertices.binary_search(&y).is_ok()
                        && !t.bag_contains(u, y));
                if joins {
                    builder.recolor(y, fresh);
                }
            }
        }

        treated[x] = true;
        order.push(x);
        if alive_count > 1 {
            alive[u] = false;
            alive_count -= 1;
        }
        check_step(g, t, &builder, mark, &order, &treated, x);
    }

    let seq = builder.finish();
    let end = validate_sequence(g, &seq).expect("coherence sweep produced an invalid sequence");
    Ok((seq, end))
}

fn check_step(
    g: &Graph,
    t: &CompleteTreeDecomposition,
    builder: &SequenceBuilder,
    mark: usize,
    order: &[Vertex],
    treated: &[bool],
    x: Vertex,
) {
    let n = treated.len();
    let done = order.len();
    if done < n {
        let rest = restrict(t, order);
        let expected = t.level().min(n - done - 1);
        assert_eq!(
            complete_level(&rest),
            Ok(expected),
            "untreated part is not complete after treating {done} vertices"
        );
    }
    let mut counts = vec![0usize; n];
    for s in builder.steps_since(mark) {
        assert!(
            treated[s.vertex],
            "step recolored untreated vertex {}",
            s.vertex
        );
        counts[s.vertex] += 1;
    }
    assert!(
        counts.iter().all(|&c| c <= 2),
        "a vertex was recolored three times"
    );
    assert!(counts[x] <= 1, "treated vertex {x} was recolored twice");
    assert!(
        is_coherent(g, t, &builder.current(), order),
        "coloring is not coherent on the treated vertices"
    );
}
