//! `tdc`: exact solvers and verifiers for total dominator colorings.
//!
//! Every answer is backed by an exhausted search or an explicit
//! certificate; budget overruns exit with a distinct code instead of
//! degrading into estimates. Output is deterministic for fixed inputs.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use tdc_core::certificate::{
    certificate_from_coloring, coloring_from_certificate, verify_certificate, ColoringCertificate,
};
use tdc_core::coloring::{is_proper, is_total_dominator, Coloring};
use tdc_core::constructions::{canonical_optimal_coloring, construct_tdc};
use tdc_core::dimacs::{parse_dimacs, write_dimacs};
use tdc_core::graph::{complete_graph, kneser_graph, Graph};
use tdc_core::solvers::{
    chromatic_number, enumerate_proper_colorings, exists_tdc_with_k_classes, tdc_number,
    total_domination_number, Budget,
};
use tdc_core::steiner::{
    construct_sts, sts_exists, sts_nonexistence_bruteforce, verify_sts, write_triples,
};

const ENV_MAX_NODES: &str = "TDC_MAX_NODES";
const ENV_MAX_SECONDS: &str = "TDC_MAX_SECONDS";

/// Cells of the report table fall back to this node budget so that the
/// command always terminates; flags or environment variables override it.
const REPORT_DEFAULT_MAX_NODES: u64 = 400_000_000;

#[derive(Parser)]
#[command(
    name = "tdc",
    version,
    about = "Exact total dominator coloring solvers and verifiers",
    after_help = "Graphs are given as kneser:N,K, complete:N, or a DIMACS file path.\n\
                  TDC_MAX_NODES and TDC_MAX_SECONDS set default search budgets.\n\
                  Exit codes: 0 solved, 1 invalid input, 2 search budget exhausted."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a Kneser graph in DIMACS format
    Generate {
        /// Kneser parameters, e.g. 5,2
        #[arg(long, value_name = "N,K")]
        kneser: String,
        /// Output file; standard output when omitted
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Emit a built-in coloring of KG(n,2) as a JSON certificate
    Construct {
        /// Which coloring: a total dominator one, or a minimum proper one
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
        /// Output file; standard output when omitted
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Check a coloring certificate against a graph
    Verify {
        #[arg(long, value_name = "SPEC")]
        graph: String,
        /// JSON certificate file
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
    },
    /// Compute an invariant exactly, or decide an upper bound on it
    Solve(SolveArgs),
    /// List proper colorings with a fixed class count
    Enumerate {
        #[arg(long, value_name = "SPEC")]
        graph: String,
        #[arg(long)]
        classes: usize,
        /// Keep only total dominator colorings
        #[arg(long)]
        tdc_only: bool,
        /// One JSON array instead of text lines
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Steiner triple system existence, construction, and exhaustive search
    #[command(group = clap::ArgGroup::new("mode").args(["construct", "exists", "brute"]))]
    Sts {
        #[arg(long)]
        n: u32,
        /// Print a verified block list
        #[arg(long)]
        construct: bool,
        /// Answer by the divisibility criterion (default)
        #[arg(long)]
        exists: bool,
        /// Answer by exhaustive search (n <= 9)
        #[arg(long)]
        brute: bool,
    },
    /// Tabulate chi, gamma_t, and chi_td over a range of KG(n,2)
    Report {
        /// Graph family; only kneser2 is recognized
        #[arg(long, default_value = "kneser2")]
        family: String,
        #[arg(long, default_value_t = 5)]
        n_from: u32,
        #[arg(long, default_value_t = 9)]
        n_to: u32,
        /// JSON rows instead of TSV
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    invariant: Invariant,
    #[arg(long, value_name = "SPEC")]
    graph: String,
    /// Decide "invariant <= K" instead of computing the exact value
    #[arg(long, value_name = "K")]
    decision: Option<usize>,
    /// Certificate output file (JSON)
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct BudgetArgs {
    /// Search node limit (default: TDC_MAX_NODES, else unlimited)
    #[arg(long, value_name = "N")]
    max_nodes: Option<u64>,
    /// Wall-clock limit in seconds (default: TDC_MAX_SECONDS, else unlimited)
    #[arg(long, value_name = "S")]
    max_seconds: Option<u64>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Invariant {
    /// Chromatic number
    Chi,
    /// Total domination number
    GammaT,
    /// Total dominator chromatic number
    ChiTd,
}

impl Invariant {
    fn name(self) -> &'static str {
        match self {
            Invariant::Chi => "chi",
            Invariant::GammaT => "gamma-t",
            Invariant::ChiTd => "chi-td",
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Family {
    /// Total dominator coloring (tabulated for n=5,6; general for 7..=12)
    Tdc,
    /// Minimum proper coloring with n-2 classes (never total dominator)
    Optimal,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Core(#[from] tdc_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_resource_exhausted() => 2,
            _ => 1,
        }
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

// Stdout goes through these so that a closed pipe (`tdc ... | head`) ends
// the run quietly instead of panicking mid-stream.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if let Err(e) = write!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            return Err(CliError::Io(e));
        }
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            return Err(CliError::Io(e));
        }
    }};
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => return,
                _ => std::process::exit(1),
            }
        }
    };
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Generate { kneser, out } => cmd_generate(&kneser, out.as_deref()),
        Command::Construct { family, n, out } => cmd_construct(family, n, out.as_deref()),
        Command::Verify { graph, coloring } => cmd_verify(&graph, &coloring),
        Command::Solve(args) => cmd_solve(args),
        Command::Enumerate { graph, classes, tdc_only, json, budget } => {
            cmd_enumerate(&graph, classes, tdc_only, json, &budget.resolve(None)?)
        }
        Command::Sts { n, construct, exists, brute } => cmd_sts(n, construct, exists, brute),
        Command::Report { family, n_from, n_to, json, budget } => {
            let budget = budget.resolve(Some(REPORT_DEFAULT_MAX_NODES))?;
            cmd_report(&family, n_from, n_to, json, &budget)
        }
    }
}

// ============================================================
// Shared plumbing
// ============================================================

impl BudgetArgs {
    /// Flags beat environment variables; `fallback_nodes` applies only
    /// when neither source sets anything.
    fn resolve(&self, fallback_nodes: Option<u64>) -> Result<Budget, CliError> {
        let nodes = match self.max_nodes {
            Some(n) => Some(n),
            None => env_u64(ENV_MAX_NODES)?,
        };
        let seconds = match self.max_seconds {
            Some(s) => Some(s),
            None => env_u64(ENV_MAX_SECONDS)?,
        };
        let mut budget = Budget::unlimited();
        match (nodes, seconds) {
            (None, None) => {
                if let Some(n) = fallback_nodes {
                    budget = budget.with_max_nodes(n);
                }
            }
            _ => {
                if let Some(n) = nodes {
                    budget = budget.with_max_nodes(n);
                }
                if let Some(s) = seconds {
                    budget = budget.with_max_duration(std::time::Duration::from_secs(s));
                }
            }
        }
        Ok(budget)
    }
}

fn env_u64(name: &str) -> Result<Option<u64>, CliError> {
    match std::env::var(name) {
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| invalid(format!("{name} must be a non-negative integer, got {raw:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(invalid(format!("{name}: {e}"))),
    }
}

fn parse_u32_pair(text: &str) -> Result<(u32, u32), CliError> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| invalid(format!("expected N,K, got {text:?}")))?;
    let parse = |s: &str| {
        s.trim().parse::<u32>().map_err(|_| invalid(format!("expected an integer, got {s:?}")))
    };
    Ok((parse(a)?, parse(b)?))
}

fn load_graph(spec: &str) -> Result<Graph, CliError> {
    if let Some(rest) = spec.strip_prefix("kneser:") {
        let (n, k) = parse_u32_pair(rest)?;
        Ok(kneser_graph(n, k)?)
    } else if let Some(rest) = spec.strip_prefix("complete:") {
        let n = rest
            .trim()
            .parse::<usize>()
            .map_err(|_| invalid(format!("expected complete:N, got {spec:?}")))?;
        Ok(complete_graph(n)?)
    } else {
        let text = std::fs::read_to_string(spec)
            .map_err(|e| invalid(format!("cannot read graph file {spec:?}: {e}")))?;
        Ok(parse_dimacs(&text)?)
    }
}

fn nodes_word(n: u64) -> &'static str {
    if n == 1 {
        "node"
    } else {
        "nodes"
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Canonical certificate for labeled graphs; a plain index-class object
/// for graphs without pair labels.
fn coloring_json(g: &Graph, c: &Coloring) -> Result<String, CliError> {
    match certificate_from_coloring(g, c) {
        Ok(cert) => Ok(cert.to_json()),
        Err(tdc_core::Error::MissingPairLabels) => {
            let mut obj = serde_json::Map::new();
            obj.insert("order".into(), g.order().into());
            obj.insert("classes".into(), serde_json::to_value(c.classes()).expect("plain data"));
            if let Ok(tdc) = is_total_dominator(g, c) {
                obj.insert("tdc".into(), tdc.into());
            }
            Ok(serde_json::Value::Object(obj).to_string())
        }
        Err(e) => Err(e.into()),
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    let text = if text.ends_with('\n') { text.to_string() } else { format!("{text}\n") };
    std::fs::write(path, text)?;
    Ok(())
}

// ============================================================
// Subcommands
// ============================================================

fn cmd_generate(kneser: &str, out: Option<&Path>) -> Result<(), CliError> {
    let (n, k) = parse_u32_pair(kneser)?;
    let g = kneser_graph(n, k)?;
    let text = write_dimacs(&g);
    match out {
        Some(path) => {
            write_text(path, &text)?;
            outln!(
                "wrote KG({n},{k}) to {}: {} vertices, {} edges",
                path.display(),
                g.order(),
                g.size()
            );
        }
        None => out!("{text}"),
    }
    Ok(())
}

fn cmd_construct(family: Family, n: u32, out: Option<&Path>) -> Result<(), CliError> {
    let g = kneser_graph(n, 2)?;
    let c = match family {
        Family::Tdc => construct_tdc(n)?,
        Family::Optimal => canonical_optimal_coloring(n)?,
    };
    let cert = certificate_from_coloring(&g, &c)?;
    match out {
        Some(path) => {
            write_text(path, &cert.to_json())?;
            outln!(
                "wrote coloring of KG({n},2) to {}: {} classes, total dominator: {}",
                path.display(),
                c.k(),
                yn(cert.tdc)
            );
        }
        None => outln!("{}", cert.to_json()),
    }
    Ok(())
}

fn cmd_verify(graph: &str, coloring: &Path) -> Result<(), CliError> {
    let g = load_graph(graph)?;
    let text = std::fs::read_to_string(coloring)
        .map_err(|e| invalid(format!("cannot read {}: {e}", coloring.display())))?;
    let cert = ColoringCertificate::from_json(&text)?;
    let c = coloring_from_certificate(&g, &cert)?;
    let proper = is_proper(&g, &c)?;
    let tdc = proper && is_total_dominator(&g, &c)?;
    outln!("proper: {}, tdc: {}, classes: {}", yn(proper), yn(tdc), c.k());
    if !verify_certificate(&g, &cert)? {
        return Err(invalid("certificate claims do not match the graph"));
    }
    Ok(())
}

fn cmd_solve(args: SolveArgs) -> Result<(), CliError> {
    let g = load_graph(&args.graph)?;
    let budget = args.budget.resolve(None)?;
    let spec = &args.graph;
    match args.decision {
        None => {
            let (value, nodes, coloring): (usize, u64, Option<&Coloring>);
            let (chi_res, gt_res, td_res);
            match args.invariant {
                Invariant::Chi => {
                    chi_res = chromatic_number(&g, &budget)?;
                    (value, nodes) = (chi_res.value, chi_res.nodes_explored);
                    coloring = Some(&chi_res.certificate);
                }
                Invariant::GammaT => {
                    gt_res = total_domination_number(&g, &budget)?;
                    (value, nodes) = (gt_res.value, gt_res.nodes_explored);
                    coloring = None;
                    if let Some(path) = &args.out {
                        write_text(path, &domination_json(&g, &gt_res.certificate))?;
                    }
                }
                Invariant::ChiTd => {
                    td_res = tdc_number(&g, &budget)?;
                    (value, nodes) = (td_res.value, td_res.nodes_explored);
                    coloring = Some(&td_res.certificate);
                }
            }
            outln!(
                "{}({spec}) = {value} ({nodes} {}, exhaustive)",
                args.invariant.name(),
                nodes_word(nodes)
            );
            if let (Some(c), Some(path)) = (coloring, &args.out) {
                write_text(path, &coloring_json(&g, c)?)?;
            }
        }
        Some(k) => {
            let name = args.invariant.name();
            match args.invariant {
                Invariant::ChiTd => {
                    let d = exists_tdc_with_k_classes(&g, k, &budget)?;
                    outln!(
                        "{name}({spec}) <= {k}: {} ({} {}, exhaustive)",
                        yn(d.certificate.is_some()),
                        d.nodes_explored,
                        nodes_word(d.nodes_explored)
                    );
                    if let (Some(c), Some(path)) = (&d.certificate, &args.out) {
                        write_text(path, &coloring_json(&g, c)?)?;
                    }
                }
                Invariant::Chi | Invariant::GammaT => {
                    // no native decision search; answer from the exact value
                    let (value, cert_json) = match args.invariant {
                        Invariant::Chi => {
                            let res = chromatic_number(&g, &budget)?;
                            (res.value, coloring_json(&g, &res.certificate)?)
                        }
                        _ => {
                            let res = total_domination_number(&g, &budget)?;
                            (res.value, domination_json(&g, &res.certificate))
                        }
                    };
                    outln!("{name}({spec}) <= {k}: {} (exact value {value})", yn(value <= k));
                    if let Some(path) = &args.out {
                        if value <= k {
                            write_text(path, &cert_json)?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn domination_json(g: &Graph, set: &[usize]) -> String {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    let mut obj = serde_json::Map::new();
    obj.insert("order".into(), g.order().into());
    obj.insert("set".into(), serde_json::to_value(&sorted).expect("plain data"));
    if let Some(pairs) = g.pair_labels() {
        let labels: Vec<String> = sorted.iter().map(|&v| pairs[v].label()).collect();
        obj.insert("labels".into(), serde_json::to_value(labels).expect("plain data"));
    }
    serde_json::Value::Object(obj).to_string()
}

fn cmd_enumerate(
    spec: &str,
    classes: usize,
    tdc_only: bool,
    json: bool,
    budget: &Budget,
) -> Result<(), CliError> {
    let g = load_graph(spec)?;
    let mut colorings = enumerate_proper_colorings(&g, classes, budget)?;
    if tdc_only {
        let mut kept = Vec::new();
        for c in colorings {
            if is_total_dominator(&g, &c)? {
                kept.push(c);
            }
        }
        colorings = kept;
    }
    if json {
        let values: Result<Vec<serde_json::Value>, CliError> = colorings
            .iter()
            .map(|c| {
                let text = coloring_json(&g, c)?;
                serde_json::from_str(&text).map_err(|e| invalid(format!("internal: {e}")))
            })
            .collect();
        outln!("{}", serde_json::Value::Array(values?));
    } else {
        outln!("count: {}", colorings.len());
        for c in &colorings {
            let line: Vec<String> = match g.pair_labels() {
                Some(pairs) => c
                    .classes()
                    .iter()
                    .map(|class| {
                        class.iter().map(|&v| pairs[v].label()).collect::<Vec<_>>().join(" ")
                    })
                    .collect(),
                None => c
                    .classes()
                    .iter()
                    .map(|class| {
                        class.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
                    })
                    .collect(),
            };
            outln!("{}", line.join(" | "));
        }
    }
    Ok(())
}

fn cmd_sts(n: u32, construct: bool, exists: bool, brute: bool) -> Result<(), CliError> {
    if construct {
        let sys = construct_sts(n)?;
        if !verify_sts(&sys) {
            return Err(invalid(format!("constructed system for n={n} failed verification")));
        }
        out!("{}", write_triples(&sys));
    } else if brute {
        let absent = sts_nonexistence_bruteforce(n)?;
        outln!("sts({n}) exists: {} (exhaustive search)", yn(!absent));
    } else {
        let _ = exists; // the default mode
        outln!("sts({n}) exists: {} (n mod 6 = {})", yn(sts_exists(n)), n % 6);
    }
    Ok(())
}

// ============================================================
// Report
// ============================================================

struct Cell {
    value: String,
    method: &'static str,
}

fn exact_cell<C>(
    outcome: tdc_core::Result<tdc_core::solvers::SolveResult<C>>,
) -> Result<Cell, CliError> {
    match outcome {
        Ok(res) => Ok(Cell { value: res.value.to_string(), method: "exact search" }),
        Err(e) if e.is_resource_exhausted() => {
            Ok(Cell { value: "?".into(), method: "budget exhausted" })
        }
        Err(e) => Err(e.into()),
    }
}

fn chi_td_cell(g: &Graph, n: u32, budget: &Budget) -> Result<Cell, CliError> {
    match tdc_number(g, budget) {
        Ok(res) => Ok(Cell { value: res.value.to_string(), method: "exact search" }),
        Err(e) if e.is_resource_exhausted() => {
            // fall back to the verified construction and the class-count
            // lower bound; both hold regardless of the aborted search
            let c = construct_tdc(n)?;
            if !is_total_dominator(g, &c)? {
                return Err(invalid(format!("construction for n={n} failed verification")));
            }
            Ok(Cell {
                value: format!("{}..{}", n - 1, c.k()),
                method: "construction + lower bound",
            })
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_report(
    family: &str,
    n_from: u32,
    n_to: u32,
    json: bool,
    budget: &Budget,
) -> Result<(), CliError> {
    if family != "kneser2" {
        return Err(invalid(format!("unknown family {family:?}; only kneser2 is available")));
    }
    if !(5 <= n_from && n_from <= n_to && n_to <= 11) {
        return Err(invalid("the report range must satisfy 5 <= n-from <= n-to <= 11"));
    }
    let mut rows = Vec::new();
    for n in n_from..=n_to {
        let g = kneser_graph(n, 2)?;
        let chi = exact_cell(chromatic_number(&g, budget))?;
        let gamma_t = exact_cell(total_domination_number(&g, budget))?;
        let chi_td = chi_td_cell(&g, n, budget)?;
        rows.push((n, chi, gamma_t, chi_td));
    }
    if json {
        let objects: Vec<serde_json::Value> = rows
            .iter()
            .map(|(n, chi, gamma_t, chi_td)| {
                serde_json::json!({
                    "n": n,
                    "chi": chi.value,
                    "chi_method": chi.method,
                    "gamma_t": gamma_t.value,
                    "gamma_t_method": gamma_t.method,
                    "chi_td": chi_td.value,
                    "chi_td_method": chi_td.method,
                })
            })
            .collect();
        outln!("{}", serde_json::Value::Array(objects));
    } else {
        outln!("n\tchi\tchi_method\tgamma_t\tgamma_t_method\tchi_td\tchi_td_method");
        for (n, chi, gamma_t, chi_td) in &rows {
            outln!(
                "{n}\t{}\t{}\t{}\t{}\t{}\t{}",
                chi.value, chi.method, gamma_t.value, gamma_t.method, chi_td.value, chi_td.method
            );
        }
    }
    Ok(())
}
