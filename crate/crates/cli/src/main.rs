//! `urvkit`: extract, synthesize, generate, audit, search and render
//! unit-square visibility layouts.
//!
//! Exit status: 0 on success, 1 when the request is well-formed but has no
//! answer (not a URVG, audit failure, search exhausted), 2 on usage, parse or
//! IO errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use urvkit_core::audit::{audit_layout, grid_search, refute_k5_random, SearchMode, SearchOutcome};
use urvkit_core::decompose::{linear_forest_bipartition, tree_caterpillar_bipartition, Decomposition};
use urvkit_core::extremal::{bounds, gen_dense_bipartite_layout, gen_dense_layout, gen_tbs, gen_trs, RootedTree};
use urvkit_core::render::render_svg;
use urvkit_core::synth::{
    classify_kmn, layout_complete, layout_cycle, layout_kmn, layout_linear_arb2, layout_tree_rooted, layout_tree_weak, KmnClass, KmnMode,
};
use urvkit_core::{Error, Graph, Layout, Rational};

const JSON_FORMAT: u32 = 1;

#[derive(Parser)]
#[command(name = "urvkit", version, about = "Unit rectangle visibility graphs: layouts, extraction and audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the visibility graph of a layout
    Extract {
        /// layout file, `-` or nothing for stdin
        layout: Option<PathBuf>,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the horizontal and vertical visibility graphs separately
    Split {
        layout: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Construct a layout for a graph family
    #[command(subcommand)]
    Synth(Synth),
    /// Generate an extremal tree or dense layout
    Gen(GenArgs),
    /// Print the edge bounds for n vertices
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check a layout against the universal bounds and impossibility results
    Audit(AuditArgs),
    /// Exhaustive grid search for a layout of a small graph
    Search(SearchArgs),
    /// Draw a layout as SVG
    Render {
        layout: Option<PathBuf>,
        /// output file, `-` for stdout
        #[arg(short, long)]
        output: PathBuf,
        /// overlay the visibility edges
        #[arg(long)]
        edges: bool,
    },
}

#[derive(Subcommand)]
enum Synth {
    /// Layout of a tree (graph file) or of a tree given with its decomposition
    Tree {
        graph: Option<PathBuf>,
        /// weak layout: extra visibilities allowed, works for every tree
        #[arg(long)]
        weak: bool,
        /// use this decomposition (`u v f1|f2 spine|leg` lines) instead of searching
        #[arg(long, conflicts_with_all = ["graph", "weak"])]
        decomposition: Option<PathBuf>,
        /// vertex placed at the origin (default: the first vertex)
        #[arg(long)]
        root: Option<String>,
    },
    /// The cycle on n vertices
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// The complete graph on n <= 4 vertices
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// The complete bipartite graph K_{m,n}
    Kmn {
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        kmn: Vec<usize>,
        #[arg(long)]
        weak: bool,
    },
    /// A graph whose edges split into two linear forests
    Linarb2 { graph: Option<PathBuf> },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Tbs,
    Trs,
    Dense,
    DenseBipartite,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    /// depth, for tbs and trs
    #[arg(long)]
    s: Option<usize>,
    /// number of squares, for dense and dense-bipartite
    #[arg(long)]
    n: Option<usize>,
    /// trs: write the decomposition to this file
    #[arg(long)]
    decomposition: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    layout: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    /// instead of auditing a layout, sample this many random five-square
    /// layouts and check that none is K5 (seed from --seed or URVKIT_SEED)
    #[arg(long, value_name = "TRIALS", conflicts_with = "layout")]
    refute_k5: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    target: PathBuf,
    /// grid step: 1, 1/2 or 1/3
    #[arg(long, default_value = "1/2")]
    step: String,
    #[arg(long, default_value_t = 6)]
    extent: i64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// accept layouts with extra visibilities
    #[arg(long)]
    weak: bool,
    #[arg(long)]
    json: bool,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn domain(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::DuplicateVertex(_) | Error::UnknownVertex(_) | Error::InvalidArgument(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn read_source(path: Option<&Path>) -> CliResult<(String, String)> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            Ok((p.display().to_string(), text))
        }
    }
}

fn read_stdin() -> CliResult<(String, String)> {
    let mut text = String::new();
    io::stdin().read_to_string(&mut text).map_err(|e| usage(format!("stdin: {e}")))?;
    Ok(("<stdin>".into(), text))
}

fn with_name<T>(name: &str, r: urvkit_core::Result<T>) -> CliResult<T> {
    r.map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{name}: {}", f.message);
        f
    })
}

fn read_layout(path: Option<&Path>) -> CliResult<Layout> {
    let (name, text) = read_source(path)?;
    with_name(&name, Layout::from_text(&text))
}

fn read_graph(path: Option<&Path>) -> CliResult<Graph> {
    let (name, text) = read_source(path)?;
    with_name(&name, Graph::from_text(&text))
}

fn write_file(path: &Path, text: &str) -> CliResult {
    if path == Path::new("-") {
        return emit(text);
    }
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str) -> CliResult {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| usage(format!("stdout: {e}")))
}

fn emit_json(v: Value) -> CliResult {
    emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("json values serialize")))
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<(String, String)> = g.labeled_edges().into_iter().collect();
    json!({ "vertices": g.vertex_labels(), "edges": edges })
}

fn require_valid(layout: &Layout) -> CliResult {
    let v = layout.validate();
    if let Some((a, b)) = v.overlaps.first() {
        return Err(domain(format!(
            "invalid layout: squares `{a}` and `{b}` overlap ({} overlapping pairs)",
            v.overlaps.len()
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Extract { layout, dot, json } => {
            let l = read_layout(layout.as_deref())?;
            require_valid(&l)?;
            let g = l.extract_graph()?;
            if dot {
                emit(&g.to_dot())
            } else if json {
                let mut v = graph_json(&g);
                v["format"] = json!(JSON_FORMAT);
                emit_json(v)
            } else {
                emit(&g.to_text())
            }
        }
        Command::Split { layout, json } => {
            let l = read_layout(layout.as_deref())?;
            require_valid(&l)?;
            let s = l.split_xy()?;
            if json {
                emit_json(json!({ "format": JSON_FORMAT, "gx": graph_json(&s.gx), "gy": graph_json(&s.gy) }))
            } else {
                emit(&format!("# gx: horizontal visibilities\n{}# gy: vertical visibilities\n{}", s.gx.to_text(), s.gy.to_text()))
            }
        }
        Command::Synth(s) => synth(s),
        Command::Gen(g) => generate(g),
        Command::Bounds { n, json } => {
            let b = bounds(n)?;
            if json {
                let mut v = serde_json::to_value(b).expect("serializable");
                v["format"] = json!(JSON_FORMAT);
                emit_json(v)
            } else {
                emit(&format!(
                    "n                                   {}\nURVG edge bound 6n-4ceil(sqrt n)+1  {}\nbipartite bound 4n-2ceil(sqrt n)+5  {}\ndense target 6n-12floor(sqrt n)+6  {}\ndense bipartite 4n-8ceil(sqrt n)+4  {}\n",
                    b.n, b.urvg_bound, b.bipartite_bound, b.dense_target, b.dense_bipartite_target
                ))
            }
        }
        Command::Audit(a) => audit(a),
        Command::Search(s) => search(s),
        Command::Render { layout, output, edges } => {
            let l = read_layout(layout.as_deref())?;
            require_valid(&l)?;
            write_file(&output, &render_svg(&l, edges))
        }
    }
}

fn synth(s: Synth) -> CliResult {
    let layout = match s {
        Synth::Tree { graph, weak, decomposition, root } => {
            let (t, d) = match decomposition {
                Some(path) => {
                    let (name, text) = read_source(Some(&path))?;
                    let (t, d) = with_name(&name, Decomposition::from_text(&text))?;
                    (t, Some(d))
                }
                None => (read_graph(graph.as_deref())?, None),
            };
            if !t.is_tree() {
                return Err(domain(format!("not a tree: {} vertices, {} edges", t.order(), t.size())));
            }
            if weak {
                layout_tree_weak(&t)?
            } else {
                let d = match d {
                    Some(d) => d,
                    None => tree_caterpillar_bipartition(&t)?.ok_or_else(|| {
                        domain(
                            "not a URVG: the tree is not the union of two subdivided caterpillar forests of maximum degree 3 \
                             (every tree has a weak layout: use --weak)",
                        )
                    })?,
                };
                let r = match root {
                    Some(label) => t.index_of(&label).ok_or_else(|| usage(format!("unknown root `{label}`")))?,
                    None => 0,
                };
                if t.order() == 0 {
                    Layout::new()
                } else {
                    layout_tree_rooted(&t, &d, r)?
                }
            }
        }
        Synth::Cycle { n } => layout_cycle(n)?,
        Synth::Complete { n } => {
            if n == 0 {
                return Err(usage("--n must be at least 1"));
            }
            layout_complete(n)?.ok_or_else(|| {
                domain(format!("K{n} is not a URVG: K_n has a layout only for n <= 4, and any graph containing K5 has none"))
            })?
        }
        Synth::Kmn { kmn, weak } => {
            let (mut m, mut n) = (kmn[0], kmn[1]);
            if m > n {
                std::mem::swap(&mut m, &mut n);
            }
            let class = classify_kmn(m, n)?;
            let mode = if weak { KmnMode::Weak } else { KmnMode::Strong };
            layout_kmn(m, n, mode)?.ok_or_else(|| {
                let why = match class {
                    KmnClass::WeakOnly => "has no layout but has a weak one: use --weak",
                    _ => "has neither a layout nor a weak layout",
                };
                domain(format!("K_{{{m},{n}}} {why}"))
            })?
        }
        Synth::Linarb2 { graph } => {
            let g = read_graph(graph.as_deref())?;
            let lf = linear_forest_bipartition(&g)
                .ok_or_else(|| domain("the edges do not split into two linear forests (linear arboricity > 2)"))?;
            layout_linear_arb2(&g, &lf)?
        }
    };
    emit(&layout.to_text())
}

fn tree_text(t: &RootedTree, what: &str) -> String {
    let mut out = format!("# {what}\n# root {}\n", t.tree.label(t.root));
    out.push_str(&t.tree.to_text());
    out
}

fn generate(g: GenArgs) -> CliResult {
    let need_s = || g.s.ok_or_else(|| usage("--s is required for tbs and trs"));
    let need_n = || g.n.ok_or_else(|| usage("--n is required for dense and dense-bipartite"));
    match g.family {
        Family::Tbs => {
            let s = need_s()?;
            let t = gen_tbs(s)?;
            emit(&tree_text(&t, &format!("depth-{s} caterpillar, {} edges", t.tree.size())))
        }
        Family::Trs => {
            let s = need_s()?;
            let (t, d) = gen_trs(s)?;
            if let Some(path) = &g.decomposition {
                write_file(path, &d.to_text(&t.tree))?;
            }
            emit(&tree_text(&t, &format!("depth-{s} two-forest tree, {} edges", t.tree.size())))
        }
        Family::Dense => emit(&gen_dense_layout(need_n()?)?.to_text()),
        Family::DenseBipartite => emit(&gen_dense_bipartite_layout(need_n()?)?.to_text()),
    }
}

fn audit(a: AuditArgs) -> CliResult {
    if let Some(trials) = a.refute_k5 {
        let seed = match a.seed {
            Some(s) => s,
            None => match std::env::var("URVKIT_SEED") {
                Ok(v) => v.trim().parse().map_err(|_| usage(format!("URVKIT_SEED must be an integer, got `{v}`")))?,
                Err(_) => 0,
            },
        };
        let r = refute_k5_random(trials, seed);
        if a.json {
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["format"] = json!(JSON_FORMAT);
            emit_json(v)?;
        } else {
            emit(&format!(
                "seed {}\ntrials {}\nK5 layouts found {}\nwithout a monotone triple {}\nwithout a blocked monotone triple {}\n",
                r.seed, r.trials, r.k5_found, r.without_monotone_triple, r.without_blocked_triple
            ))?;
        }
        return if r.passed() { Ok(()) } else { Err(domain("refutation failed")) };
    }
    let l = read_layout(a.layout.as_deref())?;
    let r = audit_layout(&l);
    if a.json {
        let mut v = serde_json::to_value(&r).expect("serializable");
        v["format"] = json!(JSON_FORMAT);
        v["passed"] = json!(r.passed());
        emit_json(v)?;
    } else {
        emit(&r.to_string())?;
    }
    if r.passed() {
        Ok(())
    } else {
        Err(domain(format!("audit failed: {}", r.failures().map(|c| c.name).collect::<Vec<_>>().join(", "))))
    }
}

fn search(s: SearchArgs) -> CliResult {
    let target = read_graph(Some(&s.target))?;
    let step: Rational = s.step.parse().map_err(|e: urvkit_core::ParseError| usage(format!("--step: {e}")))?;
    let mode = if s.weak { SearchMode::Weak } else { SearchMode::Strong };
    let r = grid_search(&target, step, s.extent, mode, s.workers)?;
    if s.json {
        let (found, layout) = match &r.outcome {
            SearchOutcome::Found(l) => (true, Some(l.to_text())),
            SearchOutcome::Exhausted => (false, None),
        };
        emit_json(json!({
            "format": JSON_FORMAT, "mode": mode, "step": step.to_string(), "extent": s.extent,
            "found": found, "layout": layout, "nodes": r.nodes,
        }))?;
    }
    match r.outcome {
        SearchOutcome::Found(l) => {
            if !s.json {
                emit(&l.to_text())?;
            }
            Ok(())
        }
        SearchOutcome::Exhausted => Err(domain(format!(
            "exhausted: no layout with corners on the {step} grid within extent {} ({} nodes); evidence only, off-grid placements are not covered",
            s.extent, r.nodes
        ))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("urvkit: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
