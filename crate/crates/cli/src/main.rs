use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use matchkit::census::connected_graphs;
use matchkit::connectivity::{independence_number, vertex_connectivity, CutDecomposition};
use matchkit::constructions::{build, FamilyKind, FamilySpec};
use matchkit::decomposition::{is_efc, PropertyReport};
use matchkit::format::{emit_edge_list, emit_graph6_string, parse_edge_list, parse_graph6};
use matchkit::harness::{check_graph, stream_suite, Analysis, Budget, GraphReport, Source, SuiteOptions};
use matchkit::verdict::{StatementId, Status, Verdict};
use matchkit::{Error, Graph};

const TOOL_VERSION: &str = concat!("matchkit ", env!("CARGO_PKG_VERSION"));
const ENUMERATE_MAX: usize = 7;

#[derive(Parser)]
#[command(name = "matchkit", version, about = "Matching structure of small graphs: properties, constructions and statement checks")]
struct Cli {
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true, env = "MATCHKIT_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report ν, deficiency, α, κ, matching flags, minimum cuts and every checker verdict for one graph.
    Analyze(AnalyzeArgs),
    /// Run the statement checkers over a source of graphs; exit 1 if any check fails.
    Verify(VerifyArgs),
    /// Print a member of a named family.
    Construct(ConstructArgs),
    /// Print the connected graphs on n vertices, one per isomorphism class, as graph6.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// graph6 if the first line has no whitespace, edge list otherwise.
    Auto,
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct BudgetArgs {
    /// Wall-clock budget per graph in milliseconds; checks cut short are reported as non-exhaustive.
    #[arg(long, env = "MATCHKIT_BUDGET_MS")]
    budget_ms: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget { time_limit: self.budget_ms.map(Duration::from_millis), ..Budget::default() }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input file; standard input when omitted or `-`.
    path: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto", env = "MATCHKIT_FORMAT")]
    format: InputFormat,
    /// Only run these checkers (repeatable).
    #[arg(long = "statement", value_name = "ID")]
    statements: Vec<StatementId>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["constructions", "enumerate", "corpus"])))]
struct VerifyArgs {
    /// Every standard construction.
    #[arg(long)]
    constructions: bool,
    /// Connected graphs on 1..=N vertices up to isomorphism (N <= 10).
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// A graph6 corpus, gzip-compressed if it ends in `.gz`.
    #[arg(long, value_name = "PATH")]
    corpus: Option<PathBuf>,
    /// Only run these checkers (repeatable).
    #[arg(long = "statement", value_name = "ID")]
    statements: Vec<StatementId>,
    /// One JSON line per verdict as graphs finish, then a summary line.
    #[arg(long)]
    ndjson: bool,
    /// Include every graph's verdicts in the JSON report, not just failures.
    #[arg(long, conflicts_with = "ndjson")]
    full: bool,
    /// Also run the seeded fixture search with this many attempts per target.
    #[arg(long, value_name = "ATTEMPTS")]
    fixtures: Option<usize>,
    #[arg(long, default_value_t = 1, requires = "fixtures")]
    seed: u64,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct ConstructArgs {
    /// complete, complete_bipartite, odd_cycle, Gk, Gmn, m1, m2, cutvertex, caseb (or full names).
    #[arg(long)]
    family: FamilyKind,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Raw parameter list, overriding --k/--m/--n.
    #[arg(long, value_delimiter = ',')]
    params: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value = "graph6", env = "MATCHKIT_FORMAT")]
    format: OutputFormat,
    /// Emit one JSON object with the family, the graph and its role map.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    n: usize,
    /// Keep only equimatchable factor-critical graphs.
    #[arg(long)]
    efc: bool,
    /// Keep only graphs with this vertex connectivity.
    #[arg(long)]
    kappa: Option<usize>,
}

/// Failure of a subcommand and its exit code.
enum Failure {
    Input(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams { .. } => Failure::Usage(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Verify(args) => verify(args),
        Command::Construct(args) => construct(args),
        Command::Enumerate(args) => enumerate(args),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn statements(ids: Vec<StatementId>) -> Vec<StatementId> {
    if ids.is_empty() {
        StatementId::GRAPH_CHECKERS.to_vec()
    } else {
        ids
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<(String, String), Failure> {
    let mut text = String::new();
    let name = match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            p.display().to_string()
        }
        _ => {
            io::stdin().read_to_string(&mut text)?;
            "-".to_string()
        }
    };
    Ok((name, text))
}

fn parse_input(text: &str, format: InputFormat) -> Result<(Graph, &'static str), Failure> {
    let format = match format {
        InputFormat::Auto => {
            let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
            match first {
                None => return Err(Failure::Input("empty input".into())),
                Some(l) if l.contains(char::is_whitespace) => InputFormat::Edgelist,
                Some(_) => InputFormat::Graph6,
            }
        }
        f => f,
    };
    Ok(match format {
        InputFormat::Graph6 => {
            let line = text.lines().find(|l| !l.trim().is_empty()).ok_or(Failure::Input("empty input".into()))?;
            (parse_graph6(line.trim().as_bytes())?, "graph6")
        }
        _ => (parse_edge_list(text)?, "edgelist"),
    })
}

#[derive(Serialize)]
struct CutSummary {
    cut: matchkit::VertexSet,
    component_sizes: Vec<usize>,
    components: Vec<matchkit::VertexSet>,
}

impl From<&CutDecomposition> for CutSummary {
    fn from(c: &CutDecomposition) -> Self {
        CutSummary { cut: c.cut.clone(), component_sizes: c.component_sizes(), components: c.parts.clone() }
    }
}

#[derive(Serialize)]
struct ReportDocument {
    tool_version: &'static str,
    input: Value,
    #[serde(flatten)]
    properties: PropertyReport,
    cuts: Vec<CutSummary>,
    verdicts: Vec<Verdict>,
}

fn write_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| Failure::Input(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn analyze(args: AnalyzeArgs) -> Result<ExitCode, Failure> {
    let (name, text) = read_input(args.path.as_ref())?;
    let (g, format) = parse_input(&text, args.format)?;
    let budget = args.budget.budget();
    let mut properties = PropertyReport::matching_properties(&g);
    properties.alpha = Some(independence_number(&g).alpha);
    properties.kappa = Some(vertex_connectivity(&g));
    let cuts = Analysis::new(&g, &budget).min_cuts().iter().map(CutSummary::from).collect();
    let report = check_graph(name.clone(), &g, &statements(args.statements), &budget);
    let fails = report.verdicts.iter().any(|v| v.status == Status::Fails);
    let doc = ReportDocument {
        tool_version: TOOL_VERSION,
        input: json!({ "source": name, "format": format, "graph6": report.graph6 }),
        properties,
        cuts,
        verdicts: report.verdicts,
    };
    write_json(&doc)?;
    Ok(if fails { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let (source, descriptor) = if args.constructions {
        (Source::Constructions, json!({ "constructions": true }))
    } else if let Some(n) = args.enumerate {
        if n > 10 {
            return Err(Failure::Usage(format!("--enumerate supports N <= 10, got {n}; use --corpus for larger graphs")));
        }
        (Source::Enumeration(n), json!({ "enumerate": n }))
    } else {
        let path = args.corpus.clone().expect("source group is required");
        let descriptor = json!({ "corpus": path.display().to_string() });
        (Source::Corpus(path), descriptor)
    };
    let opts = SuiteOptions {
        statements: (!args.statements.is_empty()).then(|| args.statements.clone()),
        budget: args.budget.budget(),
        fixtures: args.fixtures.map(|attempts| (args.seed, attempts)),
    };

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut kept: Vec<GraphReport> = Vec::new();
    let mut write_err = None;
    let report = stream_suite(&source, &opts, |r| {
        if args.ndjson {
            for v in &r.verdicts {
                let line = json!({ "label": r.label, "graph6": r.graph6, "verdict": v });
                if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
                    write_err.get_or_insert(e);
                }
            }
        } else if args.full || r.verdicts.iter().any(|v| v.status == Status::Fails) {
            kept.push(r.clone());
        }
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }

    let fails = report.summary.fails;
    if args.ndjson {
        let line = json!({
            "tool_version": TOOL_VERSION,
            "input": descriptor,
            "summary": report.summary,
            "parameter_checks": report.parameter_checks,
            "fixtures": report.fixtures,
        });
        writeln!(out, "{line}")?;
    } else {
        let key = if args.full { "graphs" } else { "failures" };
        let mut doc = json!({
            "tool_version": TOOL_VERSION,
            "input": descriptor,
            "summary": report.summary,
            "parameter_checks": report.parameter_checks,
            "fixtures": report.fixtures,
        });
        doc[key] = serde_json::to_value(&kept).map_err(|e| Failure::Input(e.to_string()))?;
        serde_json::to_writer_pretty(&mut out, &doc).map_err(|e| Failure::Input(e.to_string()))?;
        writeln!(out)?;
    }
    out.flush()?;
    Ok(if fails > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn construct_params(args: &ConstructArgs) -> Result<Vec<usize>, Failure> {
    if let Some(p) = &args.params {
        return Ok(p.clone());
    }
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::Usage(format!("{} needs --{flag} (or --params)", args.family)))
    };
    Ok(match args.family {
        FamilyKind::Complete | FamilyKind::OddCycle => vec![need(args.n, "n")?],
        FamilyKind::CompleteBipartite | FamilyKind::Gmn => vec![need(args.m, "m")?, need(args.n, "n")?],
        FamilyKind::GkTight => vec![need(args.k, "k")?],
        FamilyKind::SmallComponentM1 | FamilyKind::SmallComponentM2 => vec![need(args.n, "n")?, need(args.k, "k")?],
        FamilyKind::FavaronCutvertex | FamilyKind::KCutEfcBipartiteCase => {
            return Err(Failure::Usage(format!("{} takes its parameters through --params", args.family)))
        }
    })
}

fn construct(args: ConstructArgs) -> Result<ExitCode, Failure> {
    let spec = FamilySpec::new(args.family, construct_params(&args)?);
    let built = build(&spec)?;
    let text = match args.format {
        OutputFormat::Graph6 => emit_graph6_string(&built.graph)? + "\n",
        OutputFormat::Edgelist => emit_edge_list(&built.graph),
    };
    if args.json {
        write_json(&json!({
            "family": spec.family,
            "params": spec.params,
            "n": built.graph.order(),
            "m": built.graph.size(),
            "graph": text.trim_end(),
            "roles": built.roles,
        }))?;
    } else {
        io::stdout().lock().write_all(text.as_bytes())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate(args: EnumerateArgs) -> Result<ExitCode, Failure> {
    if args.n == 0 || args.n > ENUMERATE_MAX {
        return Err(Failure::Usage(format!(
            "enumerate supports 1 <= n <= {ENUMERATE_MAX}, got {}; check larger graphs with verify --corpus",
            args.n
        )));
    }
    let mut out = BufWriter::new(io::stdout().lock());
    for g in connected_graphs(args.n)? {
        if args.kappa.is_some_and(|k| vertex_connectivity(&g) != k) || (args.efc && !is_efc(&g)) {
            continue;
        }
        writeln!(out, "{}", emit_graph6_string(&g)?)?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}
