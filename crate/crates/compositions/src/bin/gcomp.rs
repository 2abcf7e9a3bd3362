//! Command-line surface: compute composition spectra and coefficient
//! tables, dump generating-function coefficients, and run the
//! formula-vs-oracle verification suite.
//!
//! Exit codes: 0 success, 1 verification failure or internal error,
//! 2 usage error. All integers are printed as decimal strings.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use graph_compositions::formulas::{
    complete_spectrum, cycle_b_table, cycle_spectrum, deletion_spectrum, disjoint_union_spectrum,
    matching_deletion_spectrum, path_b_table, star_deletion_spectrum, tree_spectrum,
};
use graph_compositions::graph::parse_edge_list;
use graph_compositions::oracle::Oracle;
use graph_compositions::verify::{self, VerifyConfig};
use graph_compositions::{
    build_family, delete_from_complete, CoefficientTable, CompositionVector, FamilySpec, Graph,
};

#[derive(Parser)]
#[command(name = "gcomp", about = "Exact graph-composition counting", version)]
struct Cli {
    /// Worker threads for the partition oracle (never changes output)
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-k composition counts of a graph
    Spectrum(SpectrumArgs),
    /// Composition counts of a complete graph with a graph's edges removed
    Deletion(DeletionArgs),
    /// Bad-component coefficient tables (rows n,m,j,value)
    Table(TableArgs),
    /// Generating-function coefficients (rows n,m,j,coefficient)
    Series(SeriesArgs),
    /// Run the formula-vs-oracle cross-validation suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Matching,
    Tree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DeletionFamily {
    Path,
    Cycle,
    Star,
    Matching,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Formula,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    /// brute-force table of an arbitrary family graph
    B,
    /// path table via its recurrence
    P,
    /// cycle table via its recurrence
    C,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "G", alias = "g")]
    G,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    /// Edge-list file (required for --family tree; implies oracle
    /// method when no family is given)
    #[arg(long)]
    edges: Option<String>,
    #[arg(long, value_enum, default_value = "formula")]
    method: Method,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct DeletionArgs {
    #[arg(long, value_enum)]
    family: DeletionFamily,
    /// Family size parameter (ignored with --family edges)
    #[arg(long)]
    n: Option<usize>,
    /// Edge-list file for --family edges
    #[arg(long)]
    edges: Option<String>,
    /// Ambient complete-graph size
    #[arg(long = "N")]
    ambient: usize,
    /// Component count, or "all"
    #[arg(long, default_value = "all")]
    k: String,
    #[arg(long, value_enum, default_value = "formula")]
    method: Method,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: TableKind,
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long)]
    n: usize,
    #[arg(long = "n-max")]
    n_max: Option<usize>,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long)]
    order: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "n-max", default_value_t = 8)]
    n_max: usize,
    #[arg(long = "N-max", default_value_t = 9)]
    ambient_max: usize,
}

#[derive(Serialize)]
struct OutputRecord {
    request: BTreeMap<String, String>,
    method: String,
    results: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
}

enum CliError {
    Usage(String),
    Internal(String),
}

impl From<graph_compositions::Error> for CliError {
    fn from(e: graph_compositions::Error) -> Self {
        match e {
            graph_compositions::Error::Internal(msg) => CliError::Internal(msg),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let oracle = Oracle::from_env().with_threads(cli.threads);
    let outcome = match cli.command {
        Command::Spectrum(args) => run_spectrum(&oracle, &args),
        Command::Deletion(args) => run_deletion(&oracle, &args),
        Command::Table(args) => run_table(&oracle, &args),
        Command::Series(args) => run_series(&args),
        Command::Verify(args) => return run_verify(&args, cli.threads),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: usage: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("error: internal: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load_graph(args: &SpectrumArgs) -> Result<(String, Graph), CliError> {
    match (&args.family, &args.edges) {
        (Some(Family::Tree), Some(path)) => {
            let g = read_edge_graph(path)?;
            if !g.is_tree() {
                return Err(CliError::Usage(format!("{path} does not describe a tree")));
            }
            Ok(("tree".into(), g))
        }
        (Some(Family::Tree), None) => Err(CliError::Usage(
            "--family tree requires --edges (there is no canonical n-vertex tree)".into(),
        )),
        (Some(family), None) => {
            let n = args
                .n
                .ok_or_else(|| CliError::Usage("--n is required with --family".into()))?;
            let spec = family_spec(*family, n)?;
            Ok((family_name(*family).into(), build_family(&spec)?))
        }
        (None, Some(path)) => Ok(("edges".into(), read_edge_graph(path)?)),
        (Some(_), Some(_)) => Err(CliError::Usage(
            "--edges is only valid with --family tree or without --family".into(),
        )),
        (None, None) => Err(CliError::Usage("one of --family or --edges is required".into())),
    }
}

fn read_edge_graph(path: &str) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    Ok(parse_edge_list(&text)?)
}

fn family_spec(family: Family, n: usize) -> Result<FamilySpec, CliError> {
    Ok(match family {
        Family::Path => FamilySpec::Path(n),
        Family::Cycle => FamilySpec::Cycle(n),
        Family::Star => FamilySpec::Star(n),
        Family::Complete => FamilySpec::Complete(n),
        Family::Matching => FamilySpec::Matching(n),
        Family::Tree => return Err(CliError::Usage("tree requires --edges".into())),
    })
}

fn family_name(family: Family) -> &'static str {
    match family {
        Family::Path => "path",
        Family::Cycle => "cycle",
        Family::Star => "star",
        Family::Complete => "complete",
        Family::Matching => "matching",
        Family::Tree => "tree",
    }
}

/// Closed-form spectrum for a family instance.
fn formula_spectrum(name: &str, g: &Graph) -> Result<CompositionVector, CliError> {
    let n = g.vertex_count();
    Ok(match name {
        "path" | "star" | "tree" => tree_spectrum(n),
        "cycle" => cycle_spectrum(n)?,
        "complete" => complete_spectrum(n),
        "matching" => {
            // disjoint union of n/2 edges
            let edge = CompositionVector::from_fn(2, |_| BigUint::from(1u32));
            let mut acc = edge.clone();
            for _ in 1..n / 2 {
                acc = disjoint_union_spectrum(&acc, &edge);
            }
            acc
        }
        _ => {
            return Err(CliError::Usage(
                "no closed form for an arbitrary edge list; use --method oracle".into(),
            ))
        }
    })
}

fn run_spectrum(oracle: &Oracle, args: &SpectrumArgs) -> Result<(), CliError> {
    let (name, g) = load_graph(args)?;
    let method = if name == "edges" { Method::Oracle } else { args.method };
    let formula = match method {
        Method::Formula | Method::Both => Some(formula_spectrum(&name, &g)?),
        Method::Oracle => None,
    };
    let oracle_result = match method {
        Method::Oracle | Method::Both => Some(oracle.composition_spectrum(&g)?),
        Method::Formula => None,
    };
    let agreement = match (&formula, &oracle_result) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let primary = formula.as_ref().or(oracle_result.as_ref()).unwrap();

    match args.format {
        Format::Csv => println!("{}", primary.to_decimal_strings().join(",")),
        Format::Json => {
            let mut request = BTreeMap::new();
            request.insert("family".into(), name.clone());
            request.insert("n".into(), g.vertex_count().to_string());
            let results = (1..=primary.len())
                .map(|k| (k.to_string(), primary.get(k).to_string()))
                .collect();
            print_record(OutputRecord {
                request,
                method: method_name(method).into(),
                results,
                agreement,
            })?;
        }
    }
    if agreement == Some(false) {
        return Err(CliError::Internal("formula and oracle disagree".into()));
    }
    Ok(())
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Oracle => "oracle",
        Method::Formula => "formula",
        Method::Both => "both",
    }
}

fn deletion_target(args: &DeletionArgs) -> Result<(String, Graph), CliError> {
    match args.family {
        DeletionFamily::Edges => {
            let path = args
                .edges
                .as_ref()
                .ok_or_else(|| CliError::Usage("--family edges requires --edges <file>".into()))?;
            Ok(("edges".into(), read_edge_graph(path)?))
        }
        family => {
            let n = args
                .n
                .ok_or_else(|| CliError::Usage("--n is required for this family".into()))?;
            let spec = match family {
                DeletionFamily::Path => FamilySpec::Path(n),
                DeletionFamily::Cycle => FamilySpec::Cycle(n),
                DeletionFamily::Star => FamilySpec::Star(n),
                DeletionFamily::Matching => FamilySpec::Matching(n),
                DeletionFamily::Edges => unreachable!(),
            };
            let name = match family {
                DeletionFamily::Path => "path",
                DeletionFamily::Cycle => "cycle",
                DeletionFamily::Star => "star",
                DeletionFamily::Matching => "matching",
                DeletionFamily::Edges => unreachable!(),
            };
            Ok((name.into(), build_family(&spec)?))
        }
    }
}

/// Formula-route value of C^k(K_N^{-G}) for one k.
fn deletion_formula(
    oracle: &Oracle,
    name: &str,
    g: &Graph,
    ambient: usize,
    k: usize,
) -> Result<BigUint, CliError> {
    let n = g.vertex_count();
    Ok(match name {
        "path" => deletion_spectrum(ambient, &path_b_table(n), k)?,
        "cycle" => deletion_spectrum(ambient, &cycle_b_table(n)?, k)?,
        "star" => star_deletion_spectrum(ambient, n - 1, k)?,
        "matching" => matching_deletion_spectrum(ambient, n / 2, k)?,
        // generic route: brute-force table, closed-form evaluator
        _ => deletion_spectrum(ambient, &oracle.bad_coefficient_table(g)?, k)?,
    })
}

fn run_deletion(oracle: &Oracle, args: &DeletionArgs) -> Result<(), CliError> {
    let (name, g) = deletion_target(args)?;
    let ambient = args.ambient;
    if g.vertex_count() > ambient {
        return Err(CliError::Usage(format!(
            "graph on {} vertices does not fit in K_{ambient}",
            g.vertex_count()
        )));
    }
    let ks: Vec<usize> = if args.k == "all" {
        (1..=ambient).collect()
    } else {
        let k: usize = args
            .k
            .parse()
            .map_err(|_| CliError::Usage(format!("--k must be an integer or \"all\", got {:?}", args.k)))?;
        if k == 0 || k > ambient {
            return Err(CliError::Usage(format!("--k must be in 1..={ambient}")));
        }
        vec![k]
    };

    let formula: Option<Vec<BigUint>> = match args.method {
        Method::Formula | Method::Both => Some(
            ks.iter()
                .map(|&k| deletion_formula(oracle, &name, &g, ambient, k))
                .collect::<Result<_, _>>()?,
        ),
        Method::Oracle => None,
    };
    let oracle_result: Option<Vec<BigUint>> = match args.method {
        Method::Oracle | Method::Both => {
            let spectrum = oracle.composition_spectrum(&delete_from_complete(ambient, &g)?)?;
            Some(ks.iter().map(|&k| spectrum.get(k)).collect())
        }
        Method::Formula => None,
    };
    let agreement = match (&formula, &oracle_result) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let primary = formula.as_ref().or(oracle_result.as_ref()).unwrap();

    match args.format {
        Format::Csv => {
            let strings: Vec<String> = primary.iter().map(|v| v.to_string()).collect();
            println!("{}", strings.join(","));
        }
        Format::Json => {
            let mut request = BTreeMap::new();
            request.insert("family".into(), name.clone());
            request.insert("n".into(), g.vertex_count().to_string());
            request.insert("N".into(), ambient.to_string());
            request.insert("k".into(), args.k.clone());
            let results = ks
                .iter()
                .zip(primary)
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect();
            print_record(OutputRecord {
                request,
                method: method_name(args.method).into(),
                results,
                agreement,
            })?;
        }
    }
    if agreement == Some(false) {
        return Err(CliError::Internal("formula and oracle disagree".into()));
    }
    Ok(())
}

fn run_table(oracle: &Oracle, args: &TableArgs) -> Result<(), CliError> {
    let n_max = args.n_max.unwrap_or(args.n);
    if n_max < args.n {
        return Err(CliError::Usage("--n-max must be at least --n".into()));
    }
    for n in args.n..=n_max {
        let table: CoefficientTable = match args.kind {
            TableKind::P => path_b_table(n),
            TableKind::C => cycle_b_table(n)?,
            TableKind::B => {
                let family = args.family.ok_or_else(|| {
                    CliError::Usage("--kind b requires --family".into())
                })?;
                let g = build_family(&family_spec(family, n)?)?;
                oracle.bad_coefficient_table(&g)?
            }
        };
        let mut rows: Vec<(usize, usize, usize, String)> = table
            .iter()
            .map(|((j, m), v)| (n, m, j, v.to_string()))
            .collect();
        rows.sort();
        for (n, m, j, v) in rows {
            println!("{n},{m},{j},{v}");
        }
    }
    Ok(())
}

fn run_series(args: &SeriesArgs) -> Result<(), CliError> {
    let series = match args.which {
        Which::F => graph_compositions::series::path_series(args.order),
        Which::G => graph_compositions::series::cycle_series(args.order),
    };
    print!("{}", series.to_csv());
    Ok(())
}

fn run_verify(args: &VerifyArgs, threads: usize) -> ExitCode {
    let config = VerifyConfig {
        n_max: args.n_max,
        ambient_max: args.ambient_max,
        threads,
    };
    let report = verify::run(&config);
    for c in &report.checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        // timings go to stderr so stdout stays byte-identical run to run
        println!("{tag} {}: {}", c.name, c.detail);
        eprintln!("# {} took {:.2?}", c.name, c.elapsed);
    }
    if report.all_passed() {
        println!("verify: all {} checks passed", report.checks.len());
        ExitCode::SUCCESS
    } else {
        let failed = report.checks.iter().filter(|c| !c.passed).count();
        eprintln!("error: verification: {failed} check(s) failed");
        ExitCode::from(1)
    }
}

fn print_record(record: OutputRecord) -> Result<(), CliError> {
    let json = serde_json::to_string_pretty(&record)
        .map_err(|e| CliError::Internal(format!("serialization: {e}")))?;
    println!("{json}");
    Ok(())
}
