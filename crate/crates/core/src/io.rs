//! Text formats. Vertex and node ids are 1-based in files, 0-based in memory.
//!
//! * Graphs: DIMACS `.col` (`c` comments, `p edge <n> <m>`, `e <u> <v>`).
//! * Colorings: `n` whitespace-separated colors in vertex order.
//! * Sequences: `start <c_1> ... <c_n>`, then one `<vertex> <color>` line per step.
//! * Decompositions: `td <nodes> <l>`, `b <node> <v_1> ...` per node, `e <a> <b>` per tree edge.

use std::fmt::Write as _;

use crate::coloring::{Color, Coloring, RecolorSequence, RecolorStep};
use crate::decomp::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'))
}

fn number<T: std::str::FromStr>(line: usize, token: Option<&str>, what: &str) -> Result<T> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_err(line, format!("{what} `{token}` is not a valid number")))
}

fn one_based(line: usize, id: usize, count: usize, what: &str) -> Result<usize> {
    if id == 0 || id > count {
        Err(parse_err(
            line,
            format!("{what} {id} is out of range 1..={count}"),
        ))
    } else {
        Ok(id - 1)
    }
}

pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (line, l) in content_lines(text) {
        let mut tok = l.split_whitespace();
        match tok.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                match tok.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_err(
                            line,
                            format!("expected `p edge`, found format {other:?}"),
                        ))
                    }
                }
                n = Some(number(line, tok.next(), "vertex count")?);
                let _m: usize = number(line, tok.next(), "edge count")?;
            }
            Some("e") => {
                let count = n.ok_or_else(|| parse_err(line, "edge before the problem line"))?;
                let u = one_based(line, number(line, tok.next(), "endpoint")?, count, "vertex")?;
                let v = one_based(line, number(line, tok.next(), "endpoint")?, count, "vertex")?;
                if u == v {
                    return Err(parse_err(line, format!("self-loop on vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(parse_err(line, format!("unexpected line type `{other}`"))),
            None => {}
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `p edge <n> <m>` line"))?;
    Graph::from_edges(n, edges)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (x, y) in g.edges() {
        let _ = writeln!(out, "e {} {}", x + 1, y + 1);
    }
    out
}

fn parse_colors<'a>(line: usize, tokens: impl Iterator<Item = &'a str>) -> Result<Vec<Color>> {
    tokens
        .map(|t| {
            t.parse::<Color>()
                .map_err(|_| parse_err(line, format!("color `{t}` is not a valid number")))
        })
        .collect()
}

/// Reads a coloring. With `palette = None` the largest color is the palette.
pub fn read_coloring(text: &str, palette: Option<Color>) -> Result<Coloring> {
    let mut colors = Vec::new();
    for (line, l) in content_lines(text) {
        colors.extend(parse_colors(line, l.split_whitespace())?);
    }
    match palette {
        Some(k) => Coloring::new(colors, k),
        None => Coloring::from_colors(colors),
    }
}

pub fn write_coloring(c: &Coloring) -> String {
    format!("{c}\n")
}

/// Reads a sequence file. Step colors count toward the palette when
/// `palette = None`.
pub fn read_sequence(text: &str, palette: Option<Color>) -> Result<RecolorSequence> {
    let mut lines = content_lines(text);
    let (line, first) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty sequence file"))?;
    let mut tok = first.split_whitespace();
    if tok.next() != Some("start") {
        return Err(parse_err(line, "sequence file must begin with `start`"));
    }
    let mut colors = parse_colors(line, tok)?;
    let mut rest: Vec<(usize, &str)> = lines.collect();
    if colors.is_empty() {
        if rest.is_empty() {
            return Err(parse_err(line, "missing start coloring"));
        }
        let (l2, text2) = rest.remove(0);
        colors = parse_colors(l2, text2.split_whitespace())?;
    }
    let n = colors.len();
    let mut steps = Vec::with_capacity(rest.len());
    for (line, l) in rest {
        let mut tok = l.split_whitespace();
        let v = one_based(line, number(line, tok.next(), "vertex")?, n, "vertex")?;
        let c: Color = number(line, tok.next(), "color")?;
        if tok.next().is_some() {
            return Err(parse_err(line, "expected `<vertex> <color>`"));
        }
        steps.push(RecolorStep::new(v, c));
    }
    let palette = match palette {
        Some(k) => k,
        None => colors
            .iter()
            .chain(steps.iter().map(|s| &s.color))
            .copied()
            .max()
            .unwrap_or(1),
    };
    let start = Coloring::new(colors, palette).map_err(|e| parse_err(line, e.to_string()))?;
    Ok(RecolorSequence::new(start, steps))
}

pub fn write_sequence(seq: &RecolorSequence) -> String {
    let mut out = format!("start {}\n", seq.start());
    for s in seq.steps() {
        let _ = writeln!(out, "{} {}", s.vertex + 1, s.color);
    }
    out
}

/// Reads a decomposition and its declared level/size `l`.
pub fn read_decomposition(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header: Option<(usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    for (line, l) in content_lines(text) {
        let mut tok = l.split_whitespace();
        match tok.next() {
            Some("td") => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate `td` line"));
                }
                let count: usize = number(line, tok.next(), "node count")?;
                let level: usize = number(line, tok.next(), "level")?;
                header = Some((count, level));
                bags = vec![None; count];
            }
            Some("b") => {
                let (count, _) = header.ok_or_else(|| parse_err(line, "bag before `td` line"))?;
                let node = one_based(line, number(line, tok.next(), "node id")?, count, "node")?;
                if bags[node].is_some() {
                    return Err(parse_err(line, format!("bag {} given twice", node + 1)));
                }
                let mut bag = Vec::new();
                for t in tok {
                    let v: usize = number(line, Some(t), "vertex")?;
                    if v == 0 {
                        return Err(parse_err(line, "vertex ids are 1-based"));
                    }
                    bag.push(v - 1);
                }
                bags[node] = Some(bag);
            }
            Some("e") => {
                let (count, _) = header.ok_or_else(|| parse_err(line, "edge before `td` line"))?;
                let a = one_based(line, number(line, tok.next(), "node id")?, count, "node")?;
                let b = one_based(line, number(line, tok.next(), "node id")?, count, "node")?;
                edges.push((a, b));
            }
            Some(other) => return Err(parse_err(line, format!("unexpected line type `{other}`"))),
            None => {}
        }
    }
    let (_, level) = header.ok_or_else(|| parse_err(0, "missing `td <nodes> <l>` line"))?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| parse_err(0, format!("bag {} is missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok((TreeDecomposition::new(bags, edges)?, level))
}

pub fn write_decomposition(t: &TreeDecomposition, level: usize) -> String {
    let mut out = format!("td {} {}\n", t.node_count(), level);
    for (u, bag) in t.bags().iter().enumerate() {
        let _ = write!(out, "b {}", u + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in t.edges() {
        let _ = writeln!(out, "e {} {}", a + 1, b + 1);
    }
    out
}
