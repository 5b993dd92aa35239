//! Recoloring a clique with at least one spare color.

use crate::coloring::{Color, Coloring, RecolorSequence, SequenceBuilder};
use crate::error::{input, precondition, Result};
use crate::graph::Vertex;

/// Arc `x → y` when the target color of `x` is the current color of `y`:
/// `y` blocks `x`. In a clique both in- and out-degrees are at most one, so
/// the digraph is a disjoint union of directed paths and circuits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockingDigraph {
    succ: Vec<Option<Vertex>>,
    pred: Vec<Option<Vertex>>,
}

impl BlockingDigraph {
    pub fn new(current: &[Color], target: &[Color]) -> Self {
        let n = current.len();
        let mut succ = vec![None; n];
        let mut pred = vec![None; n];
        for x in 0..n {
            for y in 0..n {
                if x != y && target[x] == current[y] {
                    assert!(succ[x].is_none(), "vertex {x} has out-degree above one");
                    assert!(pred[y].is_none(), "vertex {y} has in-degree above one");
                    succ[x] = Some(y);
                    pred[y] = Some(x);
                }
            }
        }
        BlockingDigraph { succ, pred }
    }

    pub fn out_degree(&self, x: Vertex) -> usize {
        usize::from(self.succ[x].is_some())
    }

    pub fn in_degree(&self, x: Vertex) -> usize {
        usize::from(self.pred[x].is_some())
    }

    /// Circuits, each listed from its smallest vertex, ordered by that vertex.
    pub fn circuits(&self) -> Vec<Vec<Vertex>> {
        let n = self.succ.len();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if done[start] {
                continue;
            }
            let mut walk = vec![start];
            let mut x = start;
            let closed = loop {
                match self.succ[x] {
                    Some(y) if y == start => break true,
                    Some(y) if !done[y] && !walk.contains(&y) => {
                        walk.push(y);
                        x = y;
                    }
                    _ => break false,
                }
            };
            if closed {
                for &v in &walk {
                    done[v] = true;
                }
                out.push(walk);
            }
        }
        out
    }
}

fn distinct(c: &Coloring) -> bool {
    let mut cs = c.colors().to_vec();
    cs.sort_unstable();
    cs.windows(2).all(|w| w[0] != w[1])
}

/// Recolors one coloring of `K_n` into another using `k ≥ n + 1` colors,
/// recoloring every vertex at most twice.
///
/// Each circuit of the blocking digraph is broken by moving its smallest
/// vertex to the smallest unused color; afterwards any unblocked vertex can go
/// straight to its target.
pub fn clique_recolor(n: usize, k: Color, a: &Coloring, b: &Coloring) -> Result<RecolorSequence> {
    if (k as usize) < n + 1 {
        return Err(precondition(format!(
            "recoloring K_{n} needs at least {} colors, got {k}",
            n + 1
        )));
    }
    if a.len() != n || b.len() != n {
        return Err(input(format!("colorings must have {n} entries")));
    }
    if !distinct(a) || !distinct(b) {
        return Err(precondition("clique colorings must use distinct colors"));
    }
    let a = a.with_palette(k)?;
    let b = b.with_palette(k)?;
    let target = b.colors();
    let mut builder = SequenceBuilder::new(&a);

    let free_color = |current: &[Color]| {
        (1..=k)
            .find(|c| !current.contains(c))
            .expect("k > n leaves a free color")
    };
    for circuit in BlockingDigraph::new(a.colors(), target).circuits() {
        let c = free_color(builder.colors());
        builder.recolor(circuit[0], c);
    }
    loop {
        let current = builder.colors();
        let next =
            (0..n).find(|&x| current[x] != target[x] && !current.iter().any(|&c| c == target[x]));
        match next {
            Some(x) => builder.recolor(x, target[x]),
            None => break,
        }
    }
    let seq = builder.finish();
    assert_eq!(
        seq.end(),
        b,
        "clique recoloring stopped short of the target"
    );
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{generate, validate_sequence};

    fn col(cs: &[Color], k: Color) -> Coloring {
        Coloring::new(cs.to_vec(), k).unwrap()
    }

    #[test]
    fn identical_colorings_need_nothing() {
        let a = col(&[1, 2, 3], 4);
        assert!(clique_recolor(3, 4, &a, &a).unwrap().is_empty());
    }

    #[test]
    fn k2_swap() {
        let seq = clique_recolor(2, 3, &col(&[1, 2], 3), &col(&[2, 1], 3)).unwrap();
        assert_eq!(seq.len(), 3);
        assert!(seq.max_recolor_count() <= 2);
        let g = generate::complete(2).unwrap();
        assert_eq!(validate_sequence(&g, &seq).unwrap(), col(&[2, 1], 3));
    }

    #[test]
    fn k3_cyclic_shift() {
        let a = col(&[1, 2, 3], 4);
        let b = col(&[2, 3, 1], 4);
        let seq = clique_recolor(3, 4, &a, &b).unwrap();
        assert!(seq.len() <= 6);
        assert!(seq.max_recolor_count() <= 2);
        let g = generate::complete(3).unwrap();
        assert_eq!(validate_sequence(&g, &seq).unwrap(), b);
    }

    #[test]
    fn blocking_digraph_shape() {
        // 0 wants 2 (held by 1), 1 wants 1 (held by 0): a 2-circuit; 2 is a path end.
        let d = BlockingDigraph::new(&[1, 2, 3], &[2, 1, 4]);
        assert_eq!(d.circuits(), vec![vec![0, 1]]);
        assert_eq!(d.out_degree(2), 0);
        assert_eq!(d.in_degree(0), 1);
    }

    #[test]
    fn too_few_colors() {
        assert!(clique_recolor(3, 3, &col(&[1, 2, 3], 3), &col(&[1, 2, 3], 3)).is_err());
        assert!(clique_recolor(2, 3, &col(&[1, 1], 3), &col(&[1, 2], 3)).is_err());
    }
}
