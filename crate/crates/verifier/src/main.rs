use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gorenstein::{
    independence_complex, parse_graph6, reduced_betti, to_graph6, Family, FieldSpec, Graph,
    SimplicialComplex,
};
use verifier::{survey, Filter, GraphRecord, SurveyOptions};

#[derive(Parser)]
#[command(
    name = "gorenstein",
    version,
    about = "Gorenstein independence complexes of triangle-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one graph and print its record as JSON.
    Check {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long = "field", value_parser = parse_field)]
        fields: Vec<FieldSpec>,
    },
    /// Classify every graph of a graph6 corpus.
    Survey {
        /// graph6 corpus, one graph per line; `-` or absent reads stdin.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Comma list of triangle-free, connected, no-isolated, girth-ge-5.
        #[arg(long, value_delimiter = ',', value_parser = parse_filter)]
        filter: Vec<Filter>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Abort on the first malformed line.
        #[arg(long)]
        strict: bool,
        #[arg(long = "field", value_parser = parse_field)]
        fields: Vec<FieldSpec>,
    },
    /// Emit a member of a named graph family.
    Family {
        #[arg(value_enum)]
        name: FamilyName,
        n: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
    },
    /// Print reduced Betti numbers and the reduced Euler characteristic.
    Homology {
        /// Facet file, one facet per line.
        #[arg(long, conflicts_with_all = ["graph6", "edges"])]
        facets: Option<PathBuf>,
        #[command(flatten)]
        graph: OptionalGraphInput,
        #[arg(long = "field", value_parser = parse_field, default_value = "q")]
        field: FieldSpec,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6.
    graph6: Option<String>,
    /// Edge-list file (`n m` then `m` lines `u v`); `-` reads stdin.
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Args)]
struct OptionalGraphInput {
    #[arg(long)]
    graph6: Option<String>,
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    PaperGn,
    Path,
    Cycle,
    Complete,
}

impl From<FamilyName> for Family {
    fn from(f: FamilyName) -> Family {
        match f {
            FamilyName::PaperGn => Family::PaperGn,
            FamilyName::Path => Family::Path,
            FamilyName::Cycle => Family::Cycle,
            FamilyName::Complete => Family::Complete,
        }
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: gorenstein::Error| e.to_string())
}

fn parse_filter(s: &str) -> Result<Filter, String> {
    s.trim()
        .parse()
        .map_err(|e: verifier::SurveyError| e.to_string())
}

/// Failure with its exit status.
struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(2, e.to_string())
    }
}

fn read_source(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
    }
}

fn load_graph(graph6: Option<&str>, edges: Option<&Path>) -> Result<Graph, Failure> {
    match (graph6, edges) {
        (Some(s), _) => Ok(parse_graph6(s)?),
        (None, Some(p)) => Ok(Graph::parse_edge_list(&read_source(p)?)?),
        (None, None) => Err(Failure(2, "no input graph".into())),
    }
}

fn default_fields(mut fields: Vec<FieldSpec>) -> Vec<FieldSpec> {
    if fields.is_empty() {
        fields.push(FieldSpec::Rationals);
    }
    fields.sort();
    fields.dedup();
    fields
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Check { input, fields } => {
            let g = load_graph(input.graph6.as_deref(), input.edges.as_deref())?;
            let record = GraphRecord::build(0, &g, &default_fields(fields))?;
            writeln!(stdout, "{}", serde_json::to_string_pretty(&record)?)?;
            Ok(if record.consistent { 0 } else { 1 })
        }
        Command::Survey {
            corpus,
            filter,
            max_n,
            jobs,
            out,
            format,
            strict,
            fields,
        } => {
            let text = read_source(corpus.as_deref().unwrap_or(Path::new("-")))?;
            let opts = SurveyOptions {
                filters: filter,
                max_n,
                fields: default_fields(fields),
                jobs,
                strict,
            };
            let (report, skipped) = survey(&text, &opts)?;
            for s in &skipped {
                eprintln!("warning: corpus line {}: {}", s.line, s.error);
            }
            let body = match format {
                ReportFormat::Json => report.to_json(),
                ReportFormat::Csv => report.to_csv(),
            };
            match out {
                Some(path) => fs::write(&path, body)
                    .map_err(|e| Failure(2, format!("{}: {e}", path.display())))?,
                None => stdout.write_all(body.as_bytes())?,
            }
            let s = &report.summary;
            eprintln!(
                "{} graphs, {} admitted, {} consistent, {} counterexamples",
                s.total, s.admitted, s.consistent, s.counterexamples
            );
            Ok(if report.counterexamples.is_empty() {
                0
            } else {
                1
            })
        }
        Command::Family { name, n, format } => {
            let g = Graph::generate(name.into(), n)?;
            match format {
                GraphFormat::Graph6 => writeln!(stdout, "{}", to_graph6(&g))?,
                GraphFormat::Edges => write!(stdout, "{}", g.to_edge_list())?,
            }
            Ok(0)
        }
        Command::Homology {
            facets,
            graph,
            field,
        } => {
            let complex = match facets {
                Some(p) => SimplicialComplex::parse_facets(&read_source(&p)?)?,
                None => independence_complex(&load_graph(
                    graph.graph6.as_deref(),
                    graph.edges.as_deref(),
                )?),
            };
            let betti = reduced_betti(&complex, field)?;
            // degree -1 only matters for {∅}
            let from = if complex.dim() < 0 { -1 } else { 0 };
            let mut parts: Vec<String> = betti
                .iter()
                .filter(|&(i, _)| i >= from)
                .map(|(i, b)| format!("H~_{i} = {b}"))
                .collect();
            parts.push(format!("chi~ = {}", betti.euler_characteristic()));
            writeln!(stdout, "{}", parts.join(", "))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
