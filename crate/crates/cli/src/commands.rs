use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rekolor_core::decomp::{
    complete_level, make_complete, minimalize, treewidth_exact, CompleteTreeDecomposition,
};
use rekolor_core::grundy::{chromatic_number_exact, grundy_number_exact, grundy_recolor};
use rekolor_core::oracle::{
    oracle_distance_with_limit, Mixing, RecoloringGraph, DEFAULT_STATE_LIMIT,
};
use rekolor_core::twrecolor::{tw_bound, tw_recolor};
use rekolor_core::{
    generate as gen, io, validate_sequence, validate_tree_decomposition, Color, Coloring, Distance,
    Error, Graph, RecolorSequence,
};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::report::RunReport;
use crate::{Family, Method, ReportFormat};

const STATE_LIMIT_VAR: &str = "REKOLOR_STATE_LIMIT";

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Attaches the file name to parse and input errors.
fn in_file<T>(path: &Path, r: rekolor_core::Result<T>) -> CliResult<T> {
    r.map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    let text = read_file(path)?;
    in_file(path, io::read_dimacs(&text))
}

fn state_limit() -> CliResult<usize> {
    match std::env::var(STATE_LIMIT_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{STATE_LIMIT_VAR}={v} is not a count"))),
        Err(_) => Ok(DEFAULT_STATE_LIMIT),
    }
}

pub struct RecolorArgs {
    pub graph: PathBuf,
    pub start: String,
    pub target: String,
    pub method: Method,
    pub k: Option<u32>,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub report: ReportFormat,
    pub with_oracle: bool,
    pub decomposition: Option<PathBuf>,
}

/// A coloring file or `random`, before the palette is known.
enum ColoringSource {
    File(PathBuf, Coloring),
    Random(u64),
}

impl ColoringSource {
    fn load(spec: &str, seed: u64, n: usize) -> CliResult<Self> {
        if spec == "random" {
            return Ok(ColoringSource::Random(seed));
        }
        let path = PathBuf::from(spec);
        let c = in_file(&path, io::read_coloring(&read_file(&path)?, None))?;
        if c.len() != n {
            return Err(CliError::File {
                path,
                source: Error::Input(format!("coloring has {} entries for {n} vertices", c.len())),
            });
        }
        Ok(ColoringSource::File(path, c))
    }

    fn max_color(&self) -> Option<Color> {
        match self {
            ColoringSource::File(_, c) => Some(c.max_color()),
            ColoringSource::Random(_) => None,
        }
    }

    fn resolve(self, g: &Graph, k: Color) -> CliResult<Coloring> {
        match self {
            ColoringSource::Random(seed) => Ok(gen::random_proper_coloring(g, k, seed)?),
            ColoringSource::File(path, c) => {
                if c.max_color() > k {
                    return Err(CliError::File {
                        path,
                        source: Error::Precondition(format!(
                            "coloring uses color {} but k = {k}",
                            c.max_color()
                        )),
                    });
                }
                Ok(c.with_palette(k.max(1))?)
            }
        }
    }
}

/// A complete decomposition from a file, or an exact one.
fn decomposition_for(g: &Graph, path: Option<&Path>) -> CliResult<CompleteTreeDecomposition> {
    let Some(path) = path else {
        let (tw, t) = treewidth_exact(g)?;
        return Ok(make_complete(g, &t, tw)?);
    };
    let (t, level) = in_file(path, io::read_decomposition(&read_file(path)?))?;
    let size = validate_tree_decomposition(g, &t).map_err(|v| CliError::File {
        path: path.to_path_buf(),
        source: Error::Input(format!("not a tree decomposition: {v}")),
    })?;
    if complete_level(&t) == Ok(level) {
        return Ok(CompleteTreeDecomposition::new(g, t)?);
    }
    let level = level.max(size);
    Ok(make_complete(g, &minimalize(&t), level)?)
}

pub fn recolor(args: RecolorArgs) -> CliResult<()> {
    let g = load_graph(&args.graph)?;
    let n = g.vertex_count();
    let start = ColoringSource::load(&args.start, args.seed, n)?;
    let target = ColoringSource::load(&args.target, args.seed.wrapping_add(1), n)?;
    let limit = state_limit()?;
    let clock = Instant::now();

    let mut report = RunReport {
        engine: match args.method {
            Method::Tw => "tw",
            Method::Grundy => "grundy",
            Method::Oracle => "oracle",
        },
        n,
        m: g.edge_count(),
        k: 0,
        tw: None,
        grundy_number: None,
        raw_length: None,
        elided_length: None,
        recolor_counts: None,
        max_recolor_count: None,
        bound: None,
        oracle_distance: None,
        seed: args.seed,
        wall_time_ms: 0.0,
    };

    let seq: Option<RecolorSequence> = match args.method {
        Method::Tw => {
            let t = if n == 0 {
                None
            } else {
                Some(decomposition_for(&g, args.decomposition.as_deref())?)
            };
            let level = t.as_ref().map_or(0, |t| t.level());
            let k = args.k.unwrap_or(level as Color + 2);
            let (a, b) = (start.resolve(&g, k)?, target.resolve(&g, k)?);
            report.k = k;
            report.tw = Some(level);
            report.bound = Some(tw_bound(n));
            Some(match t {
                Some(t) => tw_recolor(&g, &t, k, &a, &b)?,
                None => RecolorSequence::empty(a),
            })
        }
        Method::Grundy => {
            let grundy = grundy_number_exact(&g)?;
            let k = args.k.unwrap_or(grundy as Color + 1);
            let (a, b) = (start.resolve(&g, k)?, target.resolve(&g, k)?);
            report.k = k;
            report.grundy_number = Some(grundy);
            report.bound = Some(4 * grundy * n);
            Some(grundy_recolor(&g, k, &a, &b)?)
        }
        Method::Oracle => {
            let k = match (args.k, start.max_color(), target.max_color()) {
                (Some(k), _, _) => k,
                (None, Some(x), Some(y)) => x.max(y),
                _ => {
                    return Err(CliError::Usage(
                        "--k is required with a random coloring and --method oracle".into(),
                    ))
                }
            };
            let (a, b) = (start.resolve(&g, k)?, target.resolve(&g, k)?);
            report.k = k;
            let o = RecoloringGraph::build(&g, k, limit)?;
            let path = o.shortest_path(&a, &b)?;
            report.oracle_distance = Some(match &path {
                Some(p) => Distance::Finite(p.len()),
                None => Distance::Infinite,
            });
            path
        }
    };

    if let Some(seq) = &seq {
        validate_sequence(&g, seq).map_err(CliError::Invalid)?;
        report.record(seq);
        if args.with_oracle && report.oracle_distance.is_none() {
            report.oracle_distance = Some(oracle_distance_with_limit(
                &g,
                report.k,
                seq.start(),
                &seq.end(),
                limit,
            )?);
        }
    }
    report.wall_time_ms = clock.elapsed().as_secs_f64() * 1e3;

    let rendered = match args.report {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => report.to_json() + "\n",
    };
    let seq_text = seq.as_ref().map(io::write_sequence);
    match &args.out {
        Some(path) => {
            if let Some(text) = &seq_text {
                write_file(path, text)?;
            }
            print!("{rendered}");
        }
        None => {
            if let Some(text) = &seq_text {
                print!("{text}");
            }
            eprint!("{rendered}");
        }
    }
    Ok(())
}

#[derive(Debug, Default, Serialize)]
struct Stats {
    n: usize,
    m: usize,
    max_degree: usize,
    treewidth: Option<usize>,
    chromatic_number: Option<usize>,
    grundy_number: Option<usize>,
    tw_engine_min_k: Option<usize>,
    grundy_engine_min_k: Option<usize>,
}

pub fn stats(
    path: &Path,
    exact_tw: bool,
    exact_grundy: bool,
    exact_chromatic: bool,
    format: ReportFormat,
) -> CliResult<()> {
    let g = load_graph(path)?;
    let all = !(exact_tw || exact_grundy || exact_chromatic);
    let mut s = Stats {
        n: g.vertex_count(),
        m: g.edge_count(),
        max_degree: g.max_degree(),
        ..Stats::default()
    };
    if all || exact_tw {
        let tw = treewidth_exact(&g)?.0;
        s.treewidth = Some(tw);
        s.tw_engine_min_k = Some(tw + 2);
    }
    if all || exact_chromatic {
        s.chromatic_number = Some(chromatic_number_exact(&g)?.chromatic_number);
    }
    if all || exact_grundy {
        let grundy = grundy_number_exact(&g)?;
        s.grundy_number = Some(grundy);
        s.grundy_engine_min_k = Some(grundy + 1);
    }
    match format {
        ReportFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&s).expect("stats serialize")
            );
        }
        ReportFormat::Text => {
            let mut out = String::new();
            let mut line = |key: &str, v: Option<usize>| {
                if let Some(v) = v {
                    let _ = writeln!(out, "{key:<22} {v}");
                }
            };
            line("vertices", Some(s.n));
            line("edges", Some(s.m));
            line("max degree", Some(s.max_degree));
            line("treewidth", s.treewidth);
            line("chromatic number", s.chromatic_number);
            line("grundy number", s.grundy_number);
            line("tw engine needs k >=", s.tw_engine_min_k);
            line("grundy engine needs k >=", s.grundy_engine_min_k);
            print!("{out}");
        }
    }
    Ok(())
}

pub fn verify(graph: &Path, sequence: &Path, k: Option<u32>) -> CliResult<()> {
    let g = load_graph(graph)?;
    let seq = in_file(sequence, io::read_sequence(&read_file(sequence)?, k))?;
    if seq.start().len() != g.vertex_count() {
        return Err(CliError::File {
            path: sequence.to_path_buf(),
            source: Error::Input(format!(
                "start coloring has {} entries for {} vertices",
                seq.start().len(),
                g.vertex_count()
            )),
        });
    }
    let end = validate_sequence(&g, &seq).map_err(CliError::Invalid)?;
    println!("valid: {} steps", seq.len());
    println!("final {end}");
    Ok(())
}

#[derive(Debug, Serialize)]
struct OracleSummary {
    n: usize,
    k: u32,
    states: usize,
    components: usize,
    mixing: bool,
    diameter: Option<Distance>,
}

pub fn oracle(
    path: &Path,
    k: u32,
    diameter: bool,
    dump: Option<&Path>,
    format: ReportFormat,
) -> CliResult<()> {
    let g = load_graph(path)?;
    let o = RecoloringGraph::build(&g, k, state_limit()?)?;
    let summary = OracleSummary {
        n: g.vertex_count(),
        k,
        states: o.state_count(),
        components: o.component_count(),
        mixing: o.mixing() == Mixing::Connected,
        diameter: if diameter && o.state_count() > 0 {
            Some(o.diameter()?)
        } else {
            None
        },
    };
    if let Some(dump) = dump {
        let mut text = String::new();
        for s in 0..o.state_count() {
            let _ = writeln!(text, "s {s} {}", o.coloring(s));
        }
        for (i, j) in o.edge_list() {
            let _ = writeln!(text, "e {i} {j}");
        }
        write_file(dump, &text)?;
    }
    match format {
        ReportFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&summary).expect("summary serializes")
            )
        }
        ReportFormat::Text => {
            println!("states      {}", summary.states);
            println!("components  {}", summary.components);
            println!("mixing      {}", summary.mixing);
            if let Some(d) = summary.diameter {
                println!("diameter    {d}");
            }
        }
    }
    Ok(())
}

pub fn generate(
    family: Family,
    n: usize,
    width: usize,
    p: f64,
    seed: u64,
    out: Option<&Path>,
    decomposition: Option<&Path>,
) -> CliResult<()> {
    let mut witness = None;
    let g = match family {
        Family::Complete => gen::complete(n)?,
        Family::Path => gen::path(n)?,
        Family::Cycle => gen::cycle(n)?,
        Family::Star => gen::star(n)?,
        Family::BipartiteMinusMatching => gen::bipartite_minus_matching(n)?,
        Family::Random => gen::random_graph(n, p, seed)?,
        Family::PartialKtree => {
            let (g, t) = gen::partial_ktree(n, width, p, seed)?;
            witness = Some((t, width.min(n - 1)));
            g
        }
    };
    match (decomposition, witness) {
        (Some(path), Some((t, level))) => write_file(path, &io::write_decomposition(&t, level))?,
        (Some(_), None) => {
            return Err(CliError::Usage(
                "--decomposition is only produced for partial-ktree".into(),
            ))
        }
        _ => {}
    }
    let text = io::write_dimacs(&g);
    match out {
        Some(path) => write_file(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
