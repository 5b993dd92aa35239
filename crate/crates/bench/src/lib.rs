//! Fixed benchmark instances.

use rekolor_core::decomp::CompleteTreeDecomposition;
use rekolor_core::generate::{partial_ktree, random_graph, random_proper_coloring};
use rekolor_core::grundy::grundy_number_exact;
use rekolor_core::{Color, Coloring, Graph};

pub struct TwCase {
    pub graph: Graph,
    pub decomposition: CompleteTreeDecomposition,
    pub k: Color,
    pub start: Coloring,
    pub target: Coloring,
}

/// A partial k-tree of the given width with two random `(width + 2)`-colorings.
pub fn tw_case(n: usize, width: usize, seed: u64) -> TwCase {
    let (graph, t) = partial_ktree(n, width, 0.8, seed).expect("valid parameters");
    let decomposition = CompleteTreeDecomposition::new(&graph, t).expect("witness is complete");
    let k = width as Color + 2;
    let start = random_proper_coloring(&graph, k, seed).expect("k exceeds the width");
    let target = random_proper_coloring(&graph, k, seed + 1).expect("k exceeds the width");
    TwCase {
        graph,
        decomposition,
        k,
        start,
        target,
    }
}

pub struct GrundyCase {
    pub graph: Graph,
    pub k: Color,
    pub start: Coloring,
    pub target: Coloring,
}

/// `G(n, p)` with two random `(χ_g + 1)`-colorings.
pub fn grundy_case(n: usize, p: f64, seed: u64) -> GrundyCase {
    let graph = random_graph(n, p, seed).expect("valid parameters");
    let k = grundy_number_exact(&graph).expect("small graph") as Color + 1;
    let start = random_proper_coloring(&graph, k, seed).expect("k exceeds the grundy number");
    let target = random_proper_coloring(&graph, k, seed + 1).expect("k exceeds the grundy number");
    GrundyCase {
        graph,
        k,
        start,
        target,
    }
}
