//! Contracting families to single vertices, and lifting sequences back.

use crate::coloring::{validate_sequence, Coloring, RecolorSequence, SequenceBuilder};
use crate::decomp::FamilyPartition;
use crate::error::{input, precondition, Result};
use crate::graph::Graph;

/// One vertex per family; two families are adjacent when some members are.
pub fn merge_families(g: &Graph, p: &FamilyPartition) -> Result<Graph> {
    let mut edges = Vec::new();
    for (f, members) in p.families().iter().enumerate() {
        if !g.is_stable(members) {
            return Err(precondition(format!("family {f} is not a stable set")));
        }
    }
    for (x, y) in g.edges() {
        match (p.family_of(x), p.family_of(y)) {
            (Some(fx), Some(fy)) => edges.push((fx, fy)),
            _ => return Err(input(format!("edge ({x}, {y}) leaves the partition"))),
        }
    }
    Graph::from_edges(p.family_count(), edges)
}

/// Extends a coloring of the merged graph to `g` family by family.
pub fn extend_coloring(p: &FamilyPartition, merged: &Coloring) -> Result<Coloring> {
    let n = p.families().iter().map(Vec::len).sum::<usize>();
    let colors = (0..n)
        .map(|v| {
            p.family_of(v)
                .map(|f| merged.color(f))
                .ok_or_else(|| input(format!("vertex {v} has no family")))
        })
        .collect::<Result<Vec<_>>>()?;
    Coloring::new(colors, merged.palette())
}

/// Replays each merged step on every member of the family, in id order.
/// A valid merged sequence lifts to a valid sequence of `g`.
pub fn lift_sequence(
    g: &Graph,
    p: &FamilyPartition,
    merged_seq: &RecolorSequence,
) -> Result<RecolorSequence> {
    let start = extend_coloring(p, merged_seq.start())?;
    let mut builder = SequenceBuilder::new(&start);
    for step in merged_seq.steps() {
        for &v in p.members(step.vertex) {
            builder.recolor(v, step.color);
        }
    }
    let seq = builder.finish();
    validate_sequence(g, &seq).expect("lifted sequence is invalid");
    Ok(seq)
}
