#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, RngExt};
use rekolor_core::{Color, Coloring, Graph};

/// Uniform-ish random proper k-coloring by randomized backtracking.
pub fn random_proper_coloring(g: &Graph, k: Color, rng: &mut impl Rng) -> Option<Coloring> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut colors = vec![0; n];
    if fill(g, k, &order, 0, &mut colors, rng) {
        Some(Coloring::new(colors, k).expect("colors are in range"))
    } else {
        None
    }
}

fn fill(
    g: &Graph,
    k: Color,
    order: &[usize],
    i: usize,
    colors: &mut [Color],
    rng: &mut impl Rng,
) -> bool {
    let Some(&v) = order.get(i) else {
        return true;
    };
    let mut palette: Vec<Color> = (1..=k).collect();
    palette.shuffle(rng);
    for c in palette {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if fill(g, k, order, i + 1, colors, rng) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

pub fn random_prob(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.random::<f64>()
}
