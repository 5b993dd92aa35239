//! Step-by-step recoloring between proper graph colorings.
//!
//! Two engines produce explicit sequences of single-vertex recolorings in
//! which every intermediate coloring is proper:
//!
//! * [`twrecolor::tw_recolor`] works with `k ≥ tw + 2` colors and emits at most
//!   `2(n² + n)` steps, going through colorings that are coherent with a
//!   complete tree decomposition.
//! * [`grundy::grundy_recolor`] works with `k ≥ χ_g + 1` colors (grundy number)
//!   and emits at most `4·χ_g·n` steps, going through an optimal greedy coloring.
//!
//! [`oracle`] enumerates the recoloring graph exhaustively and serves as
//! ground truth on small instances.

pub mod coloring;
pub mod decomp;
mod error;
pub mod generate;
pub mod graph;
pub mod grundy;
pub mod io;
pub mod oracle;
pub mod twrecolor;

pub use coloring::{is_proper, validate_sequence, Color, Coloring, RecolorSequence, RecolorStep};
pub use decomp::{
    validate_tree_decomposition, CompleteTreeDecomposition, FamilyPartition, TreeDecomposition,
};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use oracle::Distance;
