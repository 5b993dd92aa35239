//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use itertools::Itertools;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{random_prob, random_proper_coloring};
use rekolor_core::decomp::{
    complete_level, family_partition, is_coherent, make_complete, treewidth_exact,
};
use rekolor_core::generate;
use rekolor_core::grundy::{
    chromatic_number_exact, greedy_target, grundy_number_exact, grundy_recolor,
    grundy_recolor_to_optimal,
};
use rekolor_core::oracle::{
    frozen_degree, is_k_mixing, mixing_number_probe, oracle_distance, Mixing, MixingProbe,
};
use rekolor_core::twrecolor::{clique_recolor, eliminate_color, make_coherent, tw_recolor};
use rekolor_core::{
    validate_tree_decomposition, Color, Coloring, CompleteTreeDecomposition, Distance, Graph,
    RecolorSequence,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Replays a sequence without the library validator.
fn replay(g: &Graph, seq: &RecolorSequence) -> Result<Vec<Color>, String> {
    let mut c = seq.start().colors().to_vec();
    let k = seq.start().palette();
    let clash = |c: &[Color]| g.edges().find(|&(x, y)| c[x] == c[y]);
    if let Some(e) = clash(&c) {
        return Err(format!("start coloring clashes on {e:?}"));
    }
    for (i, s) in seq.steps().iter().enumerate() {
        if s.color == 0 || s.color > k || c[s.vertex] == s.color {
            return Err(format!("step {i} is out of palette or a no-op"));
        }
        if g.neighbors(s.vertex).iter().any(|&w| c[w] == s.color) {
            return Err(format!("step {i} creates a monochromatic edge"));
        }
        c[s.vertex] = s.color;
    }
    Ok(c)
}

struct TwInstance {
    g: Graph,
    t: CompleteTreeDecomposition,
    k: Color,
    a: Coloring,
    b: Coloring,
}

fn tw_instances() -> Vec<TwInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    (0..200)
        .map(|i| {
            let tw = 1 + i % 3;
            let n = rng.random_range(tw + 1..=10);
            let p = random_prob(&mut rng, 0.5, 1.0);
            let (g, witness) = generate::partial_ktree(n, tw, p, rng.random()).unwrap();
            let t = CompleteTreeDecomposition::new(&g, witness).unwrap();
            let k = (tw + 2) as Color;
            let a = random_proper_coloring(&g, k, &mut rng).unwrap();
            let b = random_proper_coloring(&g, k, &mut rng).unwrap();
            TwInstance { g, t, k, a, b }
        })
        .collect()
}

fn criterion_1(instances: &[TwInstance]) -> Outcome {
    let mut worst = 0.0f64;
    for (i, inst) in instances.iter().enumerate() {
        let n = inst.g.vertex_count();
        let seq = tw_recolor(&inst.g, &inst.t, inst.k, &inst.a, &inst.b)
            .map_err(|e| format!("instance {i}: {e}"))?;
        let end = replay(&inst.g, &seq).map_err(|e| format!("instance {i}: {e}"))?;
        ensure!(end == inst.b.colors(), "instance {i}: wrong end coloring");
        ensure!(
            rekolor_core::validate_sequence(&inst.g, &seq).is_ok(),
            "instance {i}: validator rejects the sequence"
        );
        let bound = 2 * (n * n + n);
        ensure!(seq.len() <= bound, "instance {i}: {} > {bound}", seq.len());
        let d = oracle_distance(&inst.g, inst.k, &inst.a, &inst.b)
            .map_err(|e| format!("instance {i}: oracle: {e}"))?;
        match d {
            Distance::Finite(d) => {
                ensure!(d <= seq.len(), "instance {i}: {} < oracle {d}", seq.len())
            }
            Distance::Infinite => return Err(format!("instance {i}: oracle says unreachable")),
        }
        worst = worst.max(seq.len() as f64 / bound as f64);
    }
    Ok(format!(
        "{} instances, max length/bound {worst:.3}",
        instances.len()
    ))
}

fn criterion_2(instances: &[TwInstance]) -> Outcome {
    let mut worst = 0usize;
    for (i, inst) in instances.iter().enumerate() {
        let n = inst.g.vertex_count();
        let all: Vec<usize> = (0..n).collect();
        for c in [&inst.a, &inst.b] {
            let (seq, gamma) = make_coherent(&inst.g, &inst.t, inst.k, c)
                .map_err(|e| format!("instance {i}: {e}"))?;
            let end = replay(&inst.g, &seq).map_err(|e| format!("instance {i}: {e}"))?;
            ensure!(
                end == gamma.colors(),
                "instance {i}: reported coloring differs"
            );
            ensure!(
                is_coherent(&inst.g, &inst.t, &gamma, &all),
                "instance {i}: not V-coherent"
            );
            ensure!(
                seq.len() <= n * n,
                "instance {i}: {} > n² = {}",
                seq.len(),
                n * n
            );
            worst = worst.max(seq.len());
        }
    }
    Ok(format!("{} sweeps, longest {worst}", 2 * instances.len()))
}

fn criterion_3() -> Outcome {
    let mut pairs = 0;
    for n in 2..=4usize {
        let k = (n + 1) as Color;
        let g = generate::complete(n).unwrap();
        let colorings: Vec<Coloring> = (1..=k)
            .permutations(n)
            .map(|cs| Coloring::new(cs, k).unwrap())
            .collect();
        for a in &colorings {
            for b in &colorings {
                let seq = clique_recolor(n, k, a, b).map_err(|e| e.to_string())?;
                let end = replay(&g, &seq)?;
                ensure!(
                    end == b.colors(),
                    "K_{n}: wrong end coloring from {a} to {b}"
                );
                ensure!(
                    seq.recolor_counts().iter().all(|&c| c <= 2),
                    "K_{n}: a vertex moved three times from {a} to {b}"
                );
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut worst = 0.0f64;
    for i in 0..200 {
        let n = rng.random_range(1..=9);
        let p = random_prob(&mut rng, 0.15, 0.85);
        let g = generate::random_graph(n, p, rng.random()).unwrap();
        let grundy = grundy_number_exact(&g).unwrap();
        let chi = chromatic_number_exact(&g).unwrap().chromatic_number;
        let k = (grundy + 1) as Color;
        let a = random_proper_coloring(&g, k, &mut rng).unwrap();
        let b = random_proper_coloring(&g, k, &mut rng).unwrap();
        let seq = grundy_recolor(&g, k, &a, &b).map_err(|e| format!("graph {i}: {e}"))?;
        let end = replay(&g, &seq).map_err(|e| format!("graph {i}: {e}"))?;
        ensure!(end == b.colors(), "graph {i}: wrong end coloring");
        let bound = 4 * grundy * n;
        ensure!(
            seq.len() <= bound,
            "graph {i}: {} > 4·χ_g·n = {bound}",
            seq.len()
        );
        let beta = greedy_target(&g, k).unwrap();
        for (side, c) in [("first", &a), ("second", &b)] {
            let half = grundy_recolor_to_optimal(&g, k, c, &beta)
                .map_err(|e| format!("graph {i}: {e}"))?;
            let end = replay(&g, &half).map_err(|e| format!("graph {i}: {e}"))?;
            ensure!(end == beta.colors(), "graph {i}: {side} half misses β");
            ensure!(
                half.len() <= 2 * chi * n,
                "graph {i}: {side} half {} > 2·χ·n = {}",
                half.len(),
                2 * chi * n
            );
        }
        if bound > 0 {
            worst = worst.max(seq.len() as f64 / bound as f64);
        }
    }
    Ok(format!("200 graphs, max length/bound {worst:.3}"))
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    for n in 2..=4usize {
        let g = generate::bipartite_minus_matching(n).unwrap();
        let paired: Vec<Color> = (1..=n as Color).chain(1..=n as Color).collect();
        let c = Coloring::new(paired, n as Color).unwrap();
        let frozen = frozen_degree(&g, n as Color, &c).map_err(|e| e.to_string())?;
        ensure!(frozen == 0, "n = {n}: paired coloring has {frozen} moves");
        if n <= 3 {
            let k = (n + 1) as Color;
            let mixing = is_k_mixing(&g, k).map_err(|e| e.to_string())?;
            ensure!(mixing == Mixing::Connected, "n = {n}: not {k}-mixing");
            let probe = mixing_number_probe(&g, k + 1).map_err(|e| e.to_string())?;
            ensure!(
                probe == MixingProbe::Found(k),
                "n = {n}: probe returned {probe:?}, expected {k}"
            );
            notes.push(format!("n={n}: mixing number {k}"));
        } else {
            notes.push(format!("n={n}: frozen"));
        }
    }
    Ok(notes.join(", "))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut checked = 0;
    for i in 0..100 {
        let n = rng.random_range(1..=10);
        let p = random_prob(&mut rng, 0.1, 0.9);
        let g = generate::random_graph(n, p, rng.random()).unwrap();
        let (tw, t) = treewidth_exact(&g).unwrap();
        for level in tw..n {
            let ct =
                make_complete(&g, &t, level).map_err(|e| format!("graph {i}, l = {level}: {e}"))?;
            ensure!(
                validate_tree_decomposition(&g, &ct).is_ok(),
                "graph {i}, l = {level}: not a tree decomposition"
            );
            ensure!(
                complete_level(&ct) == Ok(level),
                "graph {i}, l = {level}: not {level}-complete"
            );
            let families = family_partition(&ct);
            ensure!(
                families.family_count() == level + 1,
                "graph {i}, l = {level}: {} families",
                families.family_count()
            );
            for f in families.families() {
                ensure!(
                    g.is_stable(f),
                    "graph {i}, l = {level}: family {f:?} is not stable"
                );
                for bag in ct.bags() {
                    let hits = bag.iter().filter(|v| f.contains(v)).count();
                    ensure!(
                        hits == 1,
                        "graph {i}, l = {level}: bag {bag:?} meets {f:?} {hits} times"
                    );
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (graph, l) pairs"))
}

/// A proper coloring that is coherent outside bag `u`: each parent-connected
/// piece of a family outside `B_u` gets one color, unique in its bags.
fn coherent_outside(
    g: &Graph,
    t: &CompleteTreeDecomposition,
    u: usize,
    k: Color,
    rng: &mut ChaCha8Rng,
) -> Option<Coloring> {
    let n = g.vertex_count();
    let root = t.bag(u);
    let mut piece: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (x, y) in t.parent_pairs() {
        if !root.contains(&x) && !root.contains(&y) {
            let (rx, ry) = (find(&mut piece, x), find(&mut piece, y));
            piece[rx] = ry;
        }
    }
    'attempt: for _ in 0..50 {
        let mut colors = vec![0 as Color; n];
        for &v in root {
            let free: Vec<Color> = (1..=k)
                .filter(|&c| g.neighbors(v).iter().all(|&w| colors[w] != c))
                .collect();
            colors[v] = free[rng.random_range(0..free.len())];
        }
        let mut pieces: Vec<usize> = (0..n)
            .filter(|v| !root.contains(v))
            .map(|v| find(&mut piece, v))
            .collect();
        pieces.sort_unstable();
        pieces.dedup();
        for r in pieces {
            let members: Vec<usize> = (0..n)
                .filter(|&v| !root.contains(&v) && find(&mut piece, v) == r)
                .collect();
            let free: Vec<Color> = (1..=k)
                .filter(|&c| {
                    t.bags().iter().all(|bag| {
                        !bag.iter().any(|v| members.contains(v))
                            || bag.iter().all(|&w| members.contains(&w) || colors[w] != c)
                    })
                })
                .collect();
            if free.is_empty() {
                continue 'attempt;
            }
            let c = free[rng.random_range(0..free.len())];
            for &v in &members {
                colors[v] = c;
            }
        }
        return Some(Coloring::new(colors, k).unwrap());
    }
    None
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut done = 0;
    let mut moved = 0;
    while done < 100 {
        let level = rng.random_range(1..=3);
        let n = rng.random_range(level + 1..=10);
        let p = random_prob(&mut rng, 0.5, 1.0);
        let (g, witness) = generate::partial_ktree(n, level, p, rng.random()).unwrap();
        let t = CompleteTreeDecomposition::new(&g, witness).unwrap();
        let k = (level + 2 + rng.random_range(0..2)) as Color;
        let u = rng.random_range(0..t.node_count());
        let Some(c) = coherent_outside(&g, &t, u, k, &mut rng) else {
            continue;
        };
        let outside: Vec<usize> = (0..n).filter(|v| !t.bag(u).contains(v)).collect();
        ensure!(
            is_coherent(&g, &t, &c, &outside),
            "generator produced an incoherent coloring"
        );
        let absent: Vec<Color> = (1..=k)
            .filter(|&x| t.bag(u).iter().all(|&v| c.color(v) != x))
            .collect();
        let used: Vec<Color> = absent
            .iter()
            .copied()
            .filter(|&x| c.colors().contains(&x))
            .collect();
        let pool = if used.is_empty() { &absent } else { &used };
        let a = pool[rng.random_range(0..pool.len())];
        let seq =
            eliminate_color(&g, &t, u, &c, a, k).map_err(|e| format!("instance {done}: {e}"))?;
        let end = replay(&g, &seq).map_err(|e| format!("instance {done}: {e}"))?;
        ensure!(
            end.iter().all(|&x| x != a),
            "instance {done}: color {a} survives"
        );
        let counts = seq.recolor_counts();
        ensure!(
            t.bag(u).iter().all(|&v| counts[v] == 0),
            "instance {done}: root bag was recolored"
        );
        ensure!(
            counts.iter().all(|&x| x <= 1),
            "instance {done}: a vertex moved twice"
        );
        let end = Coloring::new(end, k).unwrap();
        ensure!(
            is_coherent(&g, &t, &end, &outside),
            "instance {done}: coherence outside the root bag is lost"
        );
        moved += seq.len();
        done += 1;
    }
    Ok(format!("100 instances, {moved} recolorings in total"))
}

/// Greedy coloring along `order`, written independently of the library.
fn greedy_max(g: &Graph, order: &[usize]) -> usize {
    let mut color = vec![0usize; g.vertex_count()];
    for &v in order {
        let mut c = 1;
        while g.neighbors(v).iter().any(|&w| color[w] == c) {
            c += 1;
        }
        color[v] = c;
    }
    color.into_iter().max().unwrap_or(0)
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for i in 0..50 {
        let n = rng.random_range(1..=8);
        let p = random_prob(&mut rng, 0.1, 0.9);
        let g = generate::random_graph(n, p, rng.random()).unwrap();
        let brute = (0..n)
            .permutations(n)
            .map(|order| greedy_max(&g, &order))
            .max()
            .unwrap_or(0);
        let grundy = grundy_number_exact(&g).unwrap();
        ensure!(
            grundy == brute,
            "graph {i}: branch and bound {grundy}, brute force {brute}"
        );
        let chi = chromatic_number_exact(&g).unwrap().chromatic_number;
        ensure!(
            chi <= grundy && grundy <= g.max_degree() + 1,
            "graph {i}: χ = {chi}, χ_g = {grundy}, Δ = {}",
            g.max_degree()
        );
    }
    Ok("50 graphs agree".into())
}

fn main() {
    let instances = tw_instances();
    let criteria: Vec<Criterion> = vec![
        (
            "tw_recolor within 2(n²+n), valid, dominates oracle",
            Box::new(|| criterion_1(&instances)),
        ),
        (
            "make_coherent reaches V-coherence within n²",
            Box::new(|| criterion_2(&instances)),
        ),
        (
            "clique recoloring moves each vertex at most twice",
            Box::new(criterion_3),
        ),
        (
            "grundy_recolor within 4·χ_g·n, halves within 2·χ·n",
            Box::new(criterion_4),
        ),
        (
            "K_{n,n} minus a matching: frozen at n, mixing at n+1",
            Box::new(criterion_5),
        ),
        (
            "make_complete gives l-complete trees with l+1 stable families",
            Box::new(criterion_6),
        ),
        ("eliminate_color properties", Box::new(criterion_7)),
        (
            "grundy branch and bound matches brute force",
            Box::new(criterion_8),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({why}; {secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
