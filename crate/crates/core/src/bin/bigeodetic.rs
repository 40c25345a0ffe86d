//! Command-line front end: parsing, dispatch and formatting only.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bigeodetic::catalog::{self, CatalogError};
use bigeodetic::construct::{export_dot, star_construct};
use bigeodetic::design::{verify_design, Design, DesignParams};
use bigeodetic::search::{search_design, SearchBudget, SearchOutcome};
use bigeodetic::{analysis, numbertheory, pattern};

#[derive(Parser)]
#[command(
    name = "bigeodetic",
    version,
    about = "Block designs, star graphs and BRC checks"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a design file or catalog entry.
    Verify { source: String },
    /// Build the star graph of a design.
    Construct {
        source: String,
        /// Write Graphviz DOT here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the graph as JSON here.
        #[arg(long)]
        graph_json: Option<PathBuf>,
    },
    /// Build the star graph and report its metrics.
    Analyze { source: String },
    /// Bruck-Ryser-Chowla test for a symmetric (n, k, lambda) design.
    Brc { n: u64, k: u64, lambda: u64 },
    /// Exhaustive search for a (b, n, r, k, lambda) design.
    Search {
        b: usize,
        n: usize,
        r: usize,
        k: usize,
        lambda: usize,
        #[arg(long, default_value_t = 100_000_000)]
        max_nodes: u64,
        /// Seconds.
        #[arg(long, default_value_t = 60)]
        time_limit: u64,
    },
    /// List catalog designs and known biplane/triplane parameters.
    Catalog,
    /// Tabulate the biplane existence pattern for n in 2..=n_max.
    Scan { n_max: u64 },
    /// Print a design or its star graph in a file format.
    Export {
        source: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    GraphJson,
    DesignJson,
    DesignText,
}

/// Operational failure, with its exit code.
struct Failure {
    code: u8,
    message: String,
    usage: bool,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Self {
            code: 2,
            message: message.to_string(),
            usage: true,
        }
    }
}

impl From<bigeodetic::Error> for Failure {
    fn from(e: bigeodetic::Error) -> Self {
        Self {
            code: 1,
            message: e.to_string(),
            usage: false,
        }
    }
}

fn lib<E: Into<bigeodetic::Error>>(e: E) -> Failure {
    Failure::from(e.into())
}

macro_rules! say {
    ($out:expr) => {
        $out.push('\n')
    };
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        writeln!($out, $($arg)*).expect("writing to a String");
    }};
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    // A closed pipe downstream is not an error worth reporting.
    let _ = std::io::stdout().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            if f.usage {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            ExitCode::from(f.code)
        }
    }
}

/// A catalog name, or else a path to a design file.
fn resolve(source: &str) -> Result<Design, Failure> {
    if catalog::names().contains(&source) {
        return Ok(catalog::get_design(source).map_err(lib)?.design);
    }
    if !Path::new(source).exists() {
        return Err(Failure::usage(format!(
            "{source:?} is neither a catalog design ({}) nor a readable file",
            catalog::names().join(", ")
        )));
    }
    catalog::load_design(source).map_err(|e| match e {
        CatalogError::Io { .. } | CatalogError::Json { .. } | CatalogError::Text { .. } => {
            Failure::usage(e)
        }
        other => lib(other),
    })
}

fn print_json(out: &mut String, value: &impl serde::Serialize) {
    say!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("serializable output")
    );
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    match &cli.command {
        Command::Verify { source } => {
            let design = resolve(source)?;
            let report = verify_design(&design).map_err(lib)?;
            if cli.json {
                print_json(out, &report);
            } else if let Some(p) = report.params {
                say!(out, "valid {p} design");
            } else {
                say!(out, "invalid: {} violation(s)", report.violations.len());
                for v in &report.violations {
                    say!(out, "  - {v}");
                }
            }
        }
        Command::Construct {
            source,
            dot,
            graph_json,
        } => {
            let star = star_construct(&resolve(source)?).map_err(lib)?;
            if let Some(path) = dot {
                write_file(path, &export_dot(&star))?;
            }
            if let Some(path) = graph_json {
                let body = serde_json::to_string_pretty(&star.to_json()).expect("graph serializes");
                write_file(path, &body)?;
            }
            let g = star.graph();
            let p = star.params();
            if cli.json {
                print_json(
                    out,
                    &json!({
                        "params": p,
                        "n_vertices": g.n_vertices(),
                        "n_edges": g.n_edges(),
                    }),
                );
            } else {
                say!(
                    out,
                    "K_{}*({}, {}, {}): {} vertices, {} edges",
                    p.n,
                    p.r,
                    p.k,
                    p.lambda,
                    g.n_vertices(),
                    g.n_edges()
                );
            }
        }
        Command::Analyze { source } => {
            let star = star_construct(&resolve(source)?).map_err(lib)?;
            let report = analysis::classify(star.graph()).map_err(lib)?;
            if cli.json {
                print_json(out, &report);
            } else {
                print_report(out, star.params(), &report);
            }
        }
        Command::Brc { n, k, lambda } => {
            let verdict = numbertheory::brc_check(*n, *k, *lambda).map_err(lib)?;
            if cli.json {
                print_json(out, &verdict);
            } else {
                say!(out, "{verdict}");
            }
        }
        Command::Search {
            b,
            n,
            r,
            k,
            lambda,
            max_nodes,
            time_limit,
        } => {
            let params = DesignParams::new(*b, *n, *r, *k, *lambda);
            let budget = SearchBudget {
                max_nodes: *max_nodes,
                time_limit: Duration::from_secs(*time_limit),
            };
            let report = search_design(params, budget).map_err(lib)?;
            eprintln!(
                "{} nodes explored, {} pruned, {:.3}s",
                report.stats.explored,
                report.stats.pruned,
                report.elapsed.as_secs_f64()
            );
            let (status, design) = match &report.outcome {
                SearchOutcome::Found(d) => ("found", Some(d)),
                SearchOutcome::ExhaustedNoDesign => ("exhausted", None),
                SearchOutcome::BudgetExceeded => ("budget-exceeded", None),
            };
            if cli.json {
                let design = design.map(catalog::DesignFile::from);
                print_json(
                    out,
                    &json!({ "outcome": status, "stats": report.stats, "design": design }),
                );
            } else {
                match design {
                    Some(d) => out.push_str(&catalog::to_json_string(d)),
                    None => say!(out, "{status}: no {params} design found"),
                }
            }
        }
        Command::Catalog => {
            let entries = catalog::entries();
            if cli.json {
                let list: Vec<_> = entries
                    .iter()
                    .map(|e| json!({ "name": e.name, "params": e.params, "source": e.source }))
                    .collect();
                print_json(
                    out,
                    &json!({
                        "designs": list,
                        "known_biplanes": catalog::known_biplanes(),
                        "known_triplanes": catalog::known_triplanes(),
                    }),
                );
            } else {
                for e in &entries {
                    say!(
                        out,
                        "{:<12} {:<22} {}",
                        e.name,
                        e.params.to_string(),
                        e.source
                    );
                }
                let fmt = |v: Vec<(u64, u64, u64)>| {
                    v.iter()
                        .map(|t| format!("{t:?}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                say!(out, "known biplanes:  {}", fmt(catalog::known_biplanes()));
                say!(out, "known triplanes: {}", fmt(catalog::known_triplanes()));
            }
        }
        Command::Scan { n_max } => {
            let rows = pattern::pattern_scan(*n_max).map_err(lib)?;
            if cli.json {
                for row in &rows {
                    say!(
                        out,
                        "{}",
                        serde_json::to_string(row).expect("row serializes")
                    );
                }
            } else {
                out.push_str(&pattern::render_table(&rows));
            }
        }
        Command::Export { source, format } => {
            let design = resolve(source)?;
            match format {
                Format::DesignJson => out.push_str(&catalog::to_json_string(&design)),
                Format::DesignText => out.push_str(&catalog::to_text(&design)),
                Format::Dot => out.push_str(&export_dot(&star_construct(&design).map_err(lib)?)),
                Format::GraphJson => {
                    print_json(out, &star_construct(&design).map_err(lib)?.to_json())
                }
            }
        }
    }
    Ok(())
}

fn print_report(out: &mut String, p: DesignParams, r: &analysis::GraphReport) {
    let degrees: Vec<String> = r
        .degree_multiset
        .iter()
        .map(|(d, c)| format!("{d}x{c}"))
        .collect();
    say!(
        out,
        "graph:               K_{}*({}, {}, {})",
        p.n,
        p.r,
        p.k,
        p.lambda
    );
    say!(out, "vertices:            {}", r.n_vertices);
    say!(out, "edges:               {}", r.n_edges);
    say!(out, "degrees:             {}", degrees.join(", "));
    say!(out, "diameter:            {}", r.diameter);
    say!(out, "vertex connectivity: {}", r.vertex_connectivity);
    say!(out, "geodetic index:      {}", r.geodetic_index);
    say!(out, "block:               {}", r.is_block);
    match r.class_membership {
        Some((k, n, d)) => say!(out, "class:               B({k}, {n}, {d})"),
        None => say!(out, "class:               -"),
    }
}
