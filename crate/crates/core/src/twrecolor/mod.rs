//! Recoloring with `k ≥ tw + 2` colors through coherent colorings.
//!
//! Both endpoints are first made coherent with a complete tree decomposition
//! of level `l`. A coherent coloring is constant on each of the `l + 1`
//! families, so it is a coloring of the merged graph, which is a subgraph of
//! `K_{l+1}`. The two coherent colorings are then joined by recoloring the
//! clique and replaying each step on whole families.

mod clique;
mod coherent;
mod eliminate;
mod merge;

pub use clique::{clique_recolor, BlockingDigraph};
pub use coherent::make_coherent;
pub use eliminate::eliminate_color;
pub use merge::{extend_coloring, lift_sequence, merge_families};

use crate::coloring::{require_proper, validate_sequence, Color, Coloring, RecolorSequence};
use crate::decomp::{family_colors, family_partition, CompleteTreeDecomposition};
use crate::error::{input, precondition, Result};
use crate::graph::Graph;

/// Upper bound on the length of [`tw_recolor`] output.
pub fn tw_bound(n: usize) -> usize {
    2 * (n * n + n)
}

/// The three legs of a treewidth recoloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwRecoloring {
    pub to_coherent: RecolorSequence,
    pub bridge: RecolorSequence,
    pub from_coherent: RecolorSequence,
}

impl TwRecoloring {
    pub fn sequence(&self) -> RecolorSequence {
        self.to_coherent
            .clone()
            .concat(self.bridge.clone())
            .concat(self.from_coherent.clone())
    }
}

/// Recolors `a` into `b` in at most `2(n² + n)` steps.
pub fn tw_recolor(
    g: &Graph,
    t: &CompleteTreeDecomposition,
    k: Color,
    a: &Coloring,
    b: &Coloring,
) -> Result<RecolorSequence> {
    tw_recolor_parts(g, t, k, a, b).map(|parts| parts.sequence())
}

pub fn tw_recolor_parts(
    g: &Graph,
    t: &CompleteTreeDecomposition,
    k: Color,
    a: &Coloring,
    b: &Coloring,
) -> Result<TwRecoloring> {
    let n = g.vertex_count();
    if a.len() != n || b.len() != n {
        return Err(input(format!("colorings must have {n} entries")));
    }
    if (k as usize) < t.level() + 2 {
        return Err(precondition(format!(
            "k = {k} is below tw + 2 = {} for this decomposition",
            t.level() + 2
        )));
    }
    let a = a.with_palette(k)?;
    let b = b.with_palette(k)?;
    require_proper(g, &a, "start coloring")?;
    require_proper(g, &b, "target coloring")?;
    if n == 0 {
        let empty = RecolorSequence::empty(a);
        return Ok(TwRecoloring {
            to_coherent: empty.clone(),
            bridge: empty.clone(),
            from_coherent: empty,
        });
    }

    let (to_coherent, gamma_a) = make_coherent(g, t, k, &a)?;
    let (sweep_b, gamma_b) = make_coherent(g, t, k, &b)?;

    let families = family_partition(t);
    let merged = merge_families(g, &families)?;
    let lift_start =
        family_colors(&families, &gamma_a).expect("coherent coloring is constant on families");
    let lift_end =
        family_colors(&families, &gamma_b).expect("coherent coloring is constant on families");
    let lift_start = Coloring::new(lift_start, k)?;
    let lift_end = Coloring::new(lift_end, k)?;
    assert_eq!(extend_coloring(&families, &lift_start)?, gamma_a);
    assert_eq!(extend_coloring(&families, &lift_end)?, gamma_b);

    let clique = clique_recolor(families.family_count(), k, &lift_start, &lift_end)?;
    validate_sequence(&merged, &clique).expect("clique sequence is invalid on the merged graph");
    let bridge = lift_sequence(g, &families, &clique)?;

    let parts = TwRecoloring {
        to_coherent,
        bridge,
        from_coherent: sweep_b.reversed(),
    };
    let whole = parts.sequence();
    let end = validate_sequence(g, &whole).expect("treewidth recoloring is invalid");
    assert_eq!(end, b, "treewidth recoloring missed the target");
    Ok(parts)
}
