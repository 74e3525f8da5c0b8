mod render;
mod selfcheck;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};
use stairdec::bridge::{c4_decompositions, graph_problem_to_set_problem};
use stairdec::counting::phi_of_labels;
use stairdec::decomposer::decompositions_with_stats;
use stairdec::format::{parse_graph, parse_staircase, write_graph, write_staircase};
use stairdec::games::c4_games;
use stairdec::graph::LabeledGraph;
use stairdec::staircase::{c4_sum, canonical_graph_of, graph_of, set_of_graph, StandardSet};
use stairdec::transform::{augment_unique_max, canonicalize, transitive_closure};
use stairdec::StaircaseError;
use stairdec_oracle::{brute_c4_decompositions, brute_decompositions};

#[derive(Parser)]
#[command(name = "stairdec", version, about = "Standard decompositions of labeled graphs and staircases")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct JsonOut {
    /// Write JSON to this path (`-` for stdout instead of text).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all standard decompositions of a graph.
    DecomposeGraph {
        file: PathBuf,
        #[arg(long)]
        count_only: bool,
        /// Print the counters of every node decomposition and the 2d(k+1) check.
        #[arg(long)]
        stats: bool,
        /// Compare with the brute-force oracle.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: JsonOut,
    },
    /// Enumerate all C4 decompositions of a staircase.
    DecomposeSet {
        file: PathBuf,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: JsonOut,
    },
    /// Merge equal-label edges and drop zero-label nodes.
    Canonicalize {
        file: PathBuf,
        #[command(flatten)]
        out: JsonOut,
    },
    /// Add every reachability edge.
    Closure {
        file: PathBuf,
        #[command(flatten)]
        out: JsonOut,
    },
    /// Add a node of maximal label above every node.
    Augment {
        file: PathBuf,
        #[command(flatten)]
        out: JsonOut,
    },
    /// The height graph of a staircase.
    SetToGraph {
        file: PathBuf,
        #[command(flatten)]
        out: JsonOut,
    },
    /// The canonical graph of a staircase.
    SetToCanonicalGraph {
        file: PathBuf,
        #[command(flatten)]
        out: JsonOut,
    },
    /// Realize a canonical transitive graph with a unique maximal node as a staircase.
    GraphToSet {
        file: PathBuf,
        #[command(flatten)]
        out: JsonOut,
    },
    /// Stack two staircases.
    C4Sum {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        out: JsonOut,
    },
    /// Count decompositions with the vector partition function.
    Count {
        file: PathBuf,
        /// Also run the enumerator and compare.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: JsonOut,
    },
    /// Enumerate C4 games.
    Games {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        count_only: bool,
        #[command(flatten)]
        out: JsonOut,
    },
    /// Reduce a graph problem to a staircase problem and transport every decomposition back.
    Equiv {
        file: PathBuf,
        #[command(flatten)]
        out: JsonOut,
    },
    /// Run the bundled fixture suite.
    Selfcheck,
}

enum Failure {
    Usage(String),
    Input(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Internal(m) => m,
        }
    }
}

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn staircase_failure(e: StaircaseError) -> Failure {
    match e {
        StaircaseError::Internal(_) => Failure::Internal(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<LabeledGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_set(path: &Path) -> Result<StandardSet, Failure> {
    parse_staircase(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Text for stdout plus the JSON value written by `--json`.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

fn emit(out: Output, json: &JsonOut) -> Result<u8, Failure> {
    match &json.json {
        Some(p) if p.as_os_str() == "-" => println!("{}", out.json),
        Some(p) => {
            std::fs::write(p, format!("{}\n", out.json)).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            print!("{}", out.text);
        }
        None => print!("{}", out.text),
    }
    Ok(out.code)
}

fn decompose_graph(file: &Path, count_only: bool, stats: bool, verify: bool) -> Result<Output, Failure> {
    let g = load_graph(file)?;
    if !g.is_standard() {
        eprintln!("graph is not standard: it has no decompositions");
    }
    let e = decompositions_with_stats(&g);
    let mut text = String::new();
    let mut code = 0;
    if count_only {
        writeln!(text, "{}", e.decompositions.len()).unwrap();
    } else {
        for d in &e.decompositions {
            writeln!(text, "{}", render::decomposition(&g, d)).unwrap();
        }
    }
    if stats {
        for s in &e.stats {
            let verdict = if s.within_bound() { "PASS" } else { "FAIL" };
            writeln!(
                text,
                "stats pivot={} label={} k={} d={} tau_calls={} bound={} {verdict}",
                s.pivot, s.pivot_label, s.component_count, s.decomposition_count, s.tau_calls, s.bound()
            )
            .unwrap();
        }
        if e.stats.iter().any(|s| !s.within_bound()) {
            code = 3;
        }
    }
    if verify {
        let brute = brute_decompositions(&g).map_err(input)?;
        let found: BTreeSet<_> = e.decompositions.iter().map(|d| d.encoding(&g)).collect();
        if found == brute && found.len() == e.decompositions.len() {
            writeln!(text, "oracle={} ok", brute.len()).unwrap();
        } else {
            return Err(Failure::Internal(format!(
                "enumerator found {} decompositions, oracle found {}",
                e.decompositions.len(),
                brute.len()
            )));
        }
    }
    let json = Value::Array(e.decompositions.iter().map(|d| render::decomposition_json(&g, d)).collect());
    Ok(Output { text, json, code })
}

fn decompose_set(file: &Path, count_only: bool, verify: bool) -> Result<Output, Failure> {
    let s = load_set(file)?;
    let ds = c4_decompositions(&s).map_err(staircase_failure)?;
    let mut text = String::new();
    if count_only {
        writeln!(text, "{}", ds.len()).unwrap();
    } else {
        for d in &ds {
            writeln!(text, "{}", render::c4(d)).unwrap();
        }
    }
    if verify {
        let brute = brute_c4_decompositions(&s).map_err(input)?;
        let found: BTreeSet<Vec<BTreeSet<Vec<u32>>>> = ds
            .iter()
            .map(|d| {
                let mut ms: Vec<BTreeSet<Vec<u32>>> = d
                    .members()
                    .iter()
                    .map(|m| m.cells().iter().map(|p| p.coords().to_vec()).collect())
                    .collect();
                ms.sort();
                ms
            })
            .collect();
        if found != brute {
            return Err(Failure::Internal(format!(
                "enumerator found {} C4 decompositions, oracle found {}",
                ds.len(),
                brute.len()
            )));
        }
        writeln!(text, "oracle={} ok", brute.len()).unwrap();
    }
    Ok(Output::ok(text, Value::Array(ds.iter().map(render::c4_json).collect())))
}

fn canonicalize_cmd(file: &Path) -> Result<Output, Failure> {
    let g = load_graph(file)?;
    let c = canonicalize(&g).map_err(input)?;
    let mut text = write_graph(&c.graph);
    let mut map = Map::new();
    for (from, to) in &c.map.forward {
        match to {
            Some(t) => writeln!(text, "# map {from} -> {t}").unwrap(),
            None => writeln!(text, "# map {from} -> (deleted)").unwrap(),
        }
        map.insert(from.to_string(), to.as_ref().map_or(Value::Null, |t| json!(t.as_str())));
    }
    Ok(Output::ok(text, json!({ "graph": render::graph_json(&c.graph), "map": map })))
}

fn graph_to_set(file: &Path) -> Result<Output, Failure> {
    let g = load_graph(file)?;
    let r = set_of_graph(&g).map_err(staircase_failure)?;
    let mut text = write_staircase(&r.set);
    let mut witnesses = Map::new();
    for (id, p) in &r.witnesses {
        writeln!(text, "# witness {id} {p}").unwrap();
        witnesses.insert(id.to_string(), render::point_json(p));
    }
    Ok(Output::ok(text, json!({ "set": render::staircase_json(&r.set), "witnesses": witnesses })))
}

fn count(file: &Path, verify: bool) -> Result<Output, Failure> {
    let g = load_graph(file)?;
    let phi = phi_of_labels(&g);
    if !verify {
        return Ok(Output::ok(format!("phi={phi}\n"), json!({ "phi": phi.to_string() })));
    }
    let n = decompositions_with_stats(&g).decompositions.len();
    let ok = phi == n.into();
    let text = format!("phi={phi} enum={n} {}\n", if ok { "ok" } else { "MISMATCH" });
    let json = json!({ "phi": phi.to_string(), "enum": n, "ok": ok });
    Ok(Output { text, json, code: if ok { 0 } else { 3 } })
}

fn games(size: usize, dim: usize, count_only: bool) -> Result<Output, Failure> {
    let all = c4_games(size, dim).map_err(input)?;
    let text = if count_only {
        format!("{}\n", all.len())
    } else {
        all.iter().map(|g| format!("{}\n", render::game(g))).collect()
    };
    let json = if count_only { json!(all.len()) } else { Value::Array(all.iter().map(render::game_json).collect()) };
    Ok(Output::ok(text, json))
}

fn equiv(file: &Path) -> Result<Output, Failure> {
    let g = load_graph(file)?;
    let report = graph_problem_to_set_problem(&g).map_err(staircase_failure)?;
    let mut text = write_staircase(&report.set);
    let mut rows = Vec::new();
    for (c, d) in &report.pairs {
        writeln!(text, "# {} => {}", render::c4(c), render::decomposition(&g, d)).unwrap();
        rows.push(json!({ "c4": render::c4_json(c), "graph": render::decomposition_json(&g, d) }));
    }
    Ok(Output::ok(text, json!({ "set": render::staircase_json(&report.set), "pairs": rows })))
}

fn selfcheck() -> Output {
    let results = selfcheck::run();
    let mut text = String::new();
    let mut rows = Map::new();
    for (name, r) in &results {
        match r {
            Ok(()) => writeln!(text, "PASS {name}").unwrap(),
            Err(e) => writeln!(text, "FAIL {name}: {e}").unwrap(),
        }
        rows.insert(name.to_string(), json!(r.is_ok()));
    }
    let passed = results.iter().filter(|(_, r)| r.is_ok()).count();
    writeln!(text, "{passed}/{} passed", results.len()).unwrap();
    Output { text, json: Value::Object(rows), code: if passed == results.len() { 0 } else { 3 } }
}

fn graph_output(g: &LabeledGraph) -> Output {
    Output::ok(write_graph(g), json!({ "graph": render::graph_json(g) }))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let none = JsonOut { json: None };
    match cli.command {
        Command::DecomposeGraph { file, count_only, stats, verify, out } => {
            emit(decompose_graph(&file, count_only, stats, verify)?, &out)
        }
        Command::DecomposeSet { file, count_only, verify, out } => emit(decompose_set(&file, count_only, verify)?, &out),
        Command::Canonicalize { file, out } => emit(canonicalize_cmd(&file)?, &out),
        Command::Closure { file, out } => emit(graph_output(&transitive_closure(&load_graph(&file)?)), &out),
        Command::Augment { file, out } => {
            let (g, v) = augment_unique_max(&load_graph(&file)?);
            let text = format!("{}# added {v}\n", write_graph(&g));
            emit(Output::ok(text, json!({ "graph": render::graph_json(&g), "added": v.as_str() })), &out)
        }
        Command::SetToGraph { file, out } => {
            emit(graph_output(&graph_of(&load_set(&file)?).map_err(staircase_failure)?), &out)
        }
        Command::SetToCanonicalGraph { file, out } => {
            let s = load_set(&file)?;
            let cg = canonical_graph_of(&s).map_err(staircase_failure)?;
            emit(graph_output(&cg.graph), &out)
        }
        Command::GraphToSet { file, out } => emit(graph_to_set(&file)?, &out),
        Command::C4Sum { first, second, out } => {
            let s = c4_sum(&load_set(&first)?, &load_set(&second)?).map_err(staircase_failure)?;
            emit(Output::ok(write_staircase(&s), render::staircase_json(&s)), &out)
        }
        Command::Count { file, verify, out } => emit(count(&file, verify)?, &out),
        Command::Games { size, dim, count_only, out } => {
            if size == 0 || dim == 0 {
                return Err(Failure::Usage("--size and --dim must be positive".into()));
            }
            emit(games(size, dim, count_only)?, &out)
        }
        Command::Equiv { file, out } => emit(equiv(&file)?, &out),
        Command::Selfcheck => emit(selfcheck(), &none),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
