//! Parents, families and coherent colorings of complete tree decompositions.
//!
//! Across every tree edge `uv` of a complete decomposition, the vertices
//! `B_u \ B_v` and `B_v \ B_u` are parents. Families are the classes of the
//! transitive closure of that relation: there are `level + 1` of them, each
//! meets every bag exactly once, and each is a stable set.

use super::CompleteTreeDecomposition;
use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPartition {
    family: Vec<Option<usize>>,
    members: Vec<Vec<Vertex>>,
}

impl FamilyPartition {
    /// Builds a partition from explicit classes over vertices `0..n`.
    pub fn from_classes(n: usize, classes: Vec<Vec<Vertex>>) -> crate::Result<Self> {
        let mut family = vec![None; n];
        for (f, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= n || family[v].is_some() {
                    return Err(crate::Error::Input(format!(
                        "vertex {v} is out of range or in two classes"
                    )));
                }
                family[v] = Some(f);
            }
        }
        let mut members = classes;
        for m in &mut members {
            m.sort_unstable();
        }
        Ok(FamilyPartition { family, members })
    }

    pub fn family_count(&self) -> usize {
        self.members.len()
    }

    /// Family of `v`, if `v` occurs in the decomposition.
    pub fn family_of(&self, v: Vertex) -> Option<usize> {
        self.family.get(v).copied().flatten()
    }

    pub fn members(&self, f: usize) -> &[Vertex] {
        &self.members[f]
    }

    pub fn families(&self) -> &[Vec<Vertex>] {
        &self.members
    }
}

/// The unique family partition of a complete decomposition. Families are
/// numbered by their smallest member.
///
/// Panics if the result contradicts the structure (a family missing from a bag
/// or appearing twice in one), which would mean `t` is not complete.
pub fn family_partition(t: &CompleteTreeDecomposition) -> FamilyPartition {
    let vertices = t.vertices();
    let n = vertices.last().map_or(0, |&v| v + 1);
    let mut link: Vec<usize> = (0..n).collect();
    fn find(link: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while link[r] != r {
            r = link[r];
        }
        let mut c = v;
        while link[c] != r {
            let next = link[c];
            link[c] = r;
            c = next;
        }
        r
    }
    for (x, y) in t.parent_pairs() {
        let (rx, ry) = (find(&mut link, x), find(&mut link, y));
        link[rx.max(ry)] = rx.min(ry);
    }

    let mut family = vec![None; n];
    let mut members: Vec<Vec<Vertex>> = Vec::new();
    let mut id_of_root = vec![usize::MAX; n];
    for &v in &vertices {
        let r = find(&mut link, v);
        if id_of_root[r] == usize::MAX {
            id_of_root[r] = members.len();
            members.push(Vec::new());
        }
        family[v] = Some(id_of_root[r]);
        members[id_of_root[r]].push(v);
    }

    assert_eq!(
        members.len(),
        t.level() + 1,
        "a complete decomposition of level {} must have {} families",
        t.level(),
        t.level() + 1
    );
    for (u, bag) in t.bags().iter().enumerate() {
        let mut hits = vec![0usize; members.len()];
        for &v in bag {
            hits[family[v].expect("bag vertex has a family")] += 1;
        }
        assert!(
            hits.iter().all(|&h| h == 1),
            "bag {u} does not meet every family exactly once"
        );
    }
    FamilyPartition { family, members }
}

/// `c` is X-coherent when parents inside `X` share a color, and every member
/// of `X` is the only holder of its color in each bag containing it.
pub fn is_coherent(g: &Graph, t: &CompleteTreeDecomposition, c: &Coloring, x: &[Vertex]) -> bool {
    debug_assert_eq!(g.vertex_count(), c.len());
    let mut in_x = vec![false; c.len()];
    for &v in x {
        in_x[v] = true;
    }
    let parents_agree = t
        .parent_pairs()
        .into_iter()
        .all(|(a, b)| !(in_x[a] && in_x[b]) || c.color(a) == c.color(b));
    parents_agree
        && t.bags().iter().all(|bag| {
            bag.iter()
                .filter(|&&v| in_x[v])
                .all(|&v| bag.iter().all(|&w| w == v || c.color(w) != c.color(v)))
        })
}

/// Per-family colors when `c` is constant on every family.
pub fn family_colors(p: &FamilyPartition, c: &Coloring) -> Option<Vec<Color>> {
    p.families()
        .iter()
        .map(|members| {
            let first = c.color(members[0]);
            members
                .iter()
                .all(|&v| c.color(v) == first)
                .then_some(first)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::TreeDecomposition;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn path_decomposition(n: usize) -> CompleteTreeDecomposition {
        let bags = (1..n).map(|i| vec![i - 1, i]).collect();
        let edges = (1..n - 1).map(|i| (i - 1, i)).collect();
        CompleteTreeDecomposition::new(&path(n), TreeDecomposition::new(bags, edges).unwrap())
            .unwrap()
    }

    #[test]
    fn single_node_families_are_singletons() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = CompleteTreeDecomposition::new(&g, TreeDecomposition::single_bag(vec![0, 1, 2]))
            .unwrap();
        let p = family_partition(&t);
        assert_eq!(p.families(), &[vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn p3_families() {
        let p = family_partition(&path_decomposition(3));
        assert_eq!(p.families(), &[vec![0, 2], vec![1]]);
    }

    #[test]
    fn p4_families_alternate() {
        let p = family_partition(&path_decomposition(4));
        assert_eq!(p.families(), &[vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn coherence_on_p3() {
        let g = path(3);
        let t = path_decomposition(3);
        let all = [0, 1, 2];
        assert!(is_coherent(
            &g,
            &t,
            &Coloring::new(vec![1, 2, 1], 3).unwrap(),
            &[]
        ));
        assert!(is_coherent(
            &g,
            &t,
            &Coloring::new(vec![1, 2, 1], 3).unwrap(),
            &all
        ));
        // Parents 0 and 2 differ.
        let c = Coloring::new(vec![1, 2, 3], 3).unwrap();
        assert!(!is_coherent(&g, &t, &c, &all));
        assert!(is_coherent(&g, &t, &c, &[0, 1]));
    }

    #[test]
    fn coherence_needs_unique_color_in_bag() {
        // Edgeless graph on {0,1,2} with bags {0,1}-{1,2}: 0 and 2 are parents;
        // giving 1 the same color as 0 breaks the uniqueness clause.
        let g = Graph::empty(3);
        let t = CompleteTreeDecomposition::new(
            &g,
            TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]).unwrap(),
        )
        .unwrap();
        let c = Coloring::new(vec![1, 1, 1], 2).unwrap();
        assert!(!is_coherent(&g, &t, &c, &[0]));
        assert!(is_coherent(&g, &t, &c, &[]));
    }

    #[test]
    fn family_colors_requires_constant_classes() {
        let p = family_partition(&path_decomposition(3));
        let c = Coloring::new(vec![2, 1, 2], 2).unwrap();
        assert_eq!(family_colors(&p, &c), Some(vec![2, 1]));
        let c = Coloring::new(vec![2, 1, 3], 3).unwrap();
        assert_eq!(family_colors(&p, &c), None);
    }
}
