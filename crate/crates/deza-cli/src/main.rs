//! deza: command-line front end for Deza graph work. Every subcommand prints
//! one JSON document on stdout; domain failures print {"error", "detail"} and
//! exit 1, usage mistakes exit 2.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use deza_core::codec::{from_edge_list_text, from_graph6, to_graph6};
use deza_core::constructions::{dual_seidel_switch, find_switching_involutions, FamilySpec};
use deza_core::cyclotomic::{
    condition_certificate, lm_solutions, one_class_strictly_deza_condition, scheme,
    scheme_is_symmetric, solve_lm, two_class_strictly_deza_condition,
};
use deza_core::enumeration::{
    enumerate_circulants, enumerate_circulants_jobs, persist_census, verify_2p, CensusRecord,
};
use deza_core::field::FiniteField;
use deza_core::spectra::spectrum;
use deza_core::{classify, Graph, VertexPermutation};

#[derive(Parser)]
#[command(name = "deza", version, about = "Deza graph toolkit with JSON output")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph: regularity, common-neighbour values, Deza kind
    Analyze(GraphInput),
    /// Build a named family member and print it as graph6
    Construct {
        /// paley, lattice, triangular, lattice-c, triangular-c, hypercube-c,
        /// quasi-lattice, quasi-triangular, 2ce, kx-ym, or lex
        family: String,
        /// integer parameters; `lex` instead takes two graph6 strings
        params: Vec<String>,
    },
    /// Dual Seidel switch by an involution given in cycle notation
    Switch {
        #[command(flatten)]
        input: GraphInput,
        /// e.g. "(0 3)(1 2)"; fixed points omitted; "()" is the identity
        #[arg(long)]
        involution: Option<String>,
        /// search for all admissible switching involutions instead
        #[arg(long, conflicts_with = "involution")]
        search: bool,
    },
    /// Print the adjacency spectrum as {value, multiplicity, is_integer} lines
    Spectrum(GraphInput),
    /// Print the 3-class cyclotomic scheme data over GF(q)
    Scheme {
        #[arg(long)]
        q: u64,
    },
    /// Enumerate circulant Deza graphs on n vertices and pin the census file
    #[command(name = "enumerate-circulants")]
    EnumerateCirculants {
        #[arg(long)]
        n: usize,
        /// print only records of strictly Deza graphs
        #[arg(long)]
        strict_only: bool,
        /// worker thread count (default: rayon's choice)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Exhaustively check the strict-Deza circulant classification on 2p vertices
    #[command(name = "verify-2p")]
    Verify2p {
        #[arg(long)]
        p: u64,
    },
}

#[derive(Args)]
struct GraphInput {
    /// graph6 string
    #[arg(long)]
    graph6: Option<String>,
    /// path to an edge-list file: first line "n m", then m lines "u v"
    #[arg(long)]
    edge_list: Option<PathBuf>,
}

/// A domain failure: a stable machine tag plus a human sentence.
struct Failure {
    tag: String,
    detail: String,
}

impl From<deza_core::Error> for Failure {
    fn from(e: deza_core::Error) -> Failure {
        Failure {
            tag: e.tag().to_string(),
            detail: e.to_string(),
        }
    }
}

fn bad_input(detail: impl Into<String>) -> Failure {
    Failure {
        tag: "bad_input".to_string(),
        detail: detail.into(),
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph, Failure> {
    match (&input.graph6, &input.edge_list) {
        (Some(_), Some(_)) => Err(bad_input("give at most one of --graph6 / --edge-list")),
        (Some(g6), None) => Ok(from_graph6(g6)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| bad_input(format!("cannot read {}: {e}", path.display())))?;
            Ok(from_edge_list_text(&text)?)
        }
        (None, None) => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| bad_input(format!("cannot read stdin: {e}")))?;
            sniff_graph(&text)
        }
    }
}

/// Accept raw graph6, an edge list, or a JSON document carrying a graph6
/// field (so subcommand outputs pipe straight back in).
fn sniff_graph(text: &str) -> Result<Graph, Failure> {
    let t = text.trim();
    if t.is_empty() {
        return Err(bad_input("empty graph input"));
    }
    if t.starts_with('{') {
        let doc: Value =
            serde_json::from_str(t).map_err(|e| bad_input(format!("bad JSON input: {e}")))?;
        let g6 = doc
            .get("graph6")
            .and_then(Value::as_str)
            .ok_or_else(|| bad_input("JSON input has no \"graph6\" field"))?;
        return Ok(from_graph6(g6)?);
    }
    if t.split_whitespace().count() > 1 {
        return Ok(from_edge_list_text(t)?);
    }
    Ok(from_graph6(t)?)
}

fn run(command: Command) -> Result<Value, Failure> {
    match command {
        Command::Analyze(input) => {
            let g = load_graph(&input)?;
            Ok(serde_json::to_value(classify(&g)?).expect("report serializes"))
        }
        Command::Construct { family, params } => construct(&family, &params),
        Command::Switch {
            input,
            involution,
            search,
        } => {
            let g = load_graph(&input)?;
            if search {
                let found = find_switching_involutions(&g)?;
                let cycles: Vec<String> = found.iter().map(|p| p.cycle_string()).collect();
                return Ok(json!({"n": g.n(), "count": cycles.len(), "involutions": cycles}));
            }
            let text = involution
                .ok_or_else(|| bad_input("give --involution \"(..)..\" or --search"))?;
            let p = VertexPermutation::parse_cycles(g.n(), &text)?;
            let switched = dual_seidel_switch(&g, &p)?;
            Ok(json!({
                "n": switched.n(),
                "involution": p.cycle_string(),
                "graph6": to_graph6(&switched)?,
            }))
        }
        Command::Spectrum(input) => {
            let g = load_graph(&input)?;
            let s = spectrum(&g)?;
            Ok(serde_json::to_value(&s.lines).expect("spectrum serializes"))
        }
        Command::Scheme { q } => {
            let symmetric = scheme_is_symmetric(q, 3)?;
            let field = FiniteField::of_order(q)?;
            let sch = scheme(&field)?;
            let unique_lm = solve_lm(q).ok();
            Ok(json!({
                "q": q,
                "t": sch.t,
                "symmetric": symmetric,
                "classes": sch.classes,
                "p": sch.p,
                "r": sch.r,
                "s": sch.s,
                "l": sch.l,
                "m": sch.m_sol,
                "lm_unique": unique_lm,
                "lm_solutions": lm_solutions(q),
                "one_class_strictly_deza": one_class_strictly_deza_condition(q),
                "one_class_certificate": condition_certificate(q, 3),
                "two_class_strictly_deza": two_class_strictly_deza_condition(q),
                "two_class_certificate": condition_certificate(q, 12),
            }))
        }
        Command::EnumerateCirculants {
            n,
            strict_only,
            jobs,
        } => {
            let records = match jobs {
                Some(j) => enumerate_circulants_jobs(n, false, j)?,
                None => enumerate_circulants(n, false)?,
            };
            // the pinned file always holds the full census; strictness only
            // filters the view printed here
            let path = persist_census(n, &records)?;
            let view: Vec<&CensusRecord> = records
                .iter()
                .filter(|r| !strict_only || r.strictly_deza)
                .collect();
            Ok(json!({
                "n": n,
                "strict_only": strict_only,
                "census_path": path.display().to_string(),
                "count": view.len(),
                "records": view,
            }))
        }
        Command::Verify2p { p } => {
            Ok(serde_json::to_value(verify_2p(p)?).expect("verdict serializes"))
        }
    }
}

fn construct(family: &str, params: &[String]) -> Result<Value, Failure> {
    if family == "lex" {
        if params.len() != 2 {
            return Err(bad_input("lex takes exactly two graph6 arguments"));
        }
        let g = from_graph6(&params[0])?.lexicographic_product(&from_graph6(&params[1])?)?;
        return Ok(json!({"family": "lex", "n": g.n(), "graph6": to_graph6(&g)?}));
    }
    let nums: Vec<u64> = params
        .iter()
        .map(|p| {
            p.parse()
                .map_err(|_| bad_input(format!("parameter {p:?} is not a non-negative integer")))
        })
        .collect::<Result<_, _>>()?;
    let spec = FamilySpec::parse(family, &nums)?;
    let g = spec.build()?;
    Ok(json!({
        "family": spec.cli_name(),
        "params": nums,
        "n": g.n(),
        "graph6": to_graph6(&g)?,
    }))
}

/// Print one line, swallowing broken-pipe errors from downstream readers
/// that close early.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(doc) => {
            emit(&serde_json::to_string_pretty(&doc).expect("serializable"));
            ExitCode::SUCCESS
        }
        Err(f) => {
            emit(&json!({"error": f.tag, "detail": f.detail}).to_string());
            ExitCode::from(1)
        }
    }
}
