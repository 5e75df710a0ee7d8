use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lafr_core::campaign::{CampaignOptions, CampaignRegistry};
use lafr_core::constructors::{parse_graph_name, ConstructorRegistry};
use lafr_core::graph::{parse_edge_list, parse_graph6, to_graph6, Graph};
use lafr_core::report::{analyze, AnalyzeOptions, DEFAULT_TOL};
use lafr_core::spectral::SpectralContext;

/// Exact analysis of Laplacian quantum walks: fractional revival,
/// periodicity and perfect state transfer.
#[derive(Parser)]
#[command(name = "lafr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph in graph6.
    #[arg(long)]
    g6: Option<String>,
    /// Graph by name: K<n>, P<n>, C<n>, O<n>.
    #[arg(long)]
    graph: Option<String>,
    /// Read the graph from a file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide revival for all pairs (or the given ones) and report periodicity.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        /// Pairs to decide, as `a,b`.
        #[arg(long, num_args = 1.., value_parser = parse_pair)]
        pairs: Option<Vec<(usize, usize)>>,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Oracle residual tolerance.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Periodicity of a single vertex.
    Periodic {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(long)]
        vertex: usize,
    },
    /// Build a named graph and print it in graph6.
    Construct {
        /// Constructor name; `list` prints the available ones.
        name: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Run a verification campaign.
    Campaign {
        name: String,
        #[arg(long)]
        workers: Option<usize>,
        /// Write the result as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Largest tree order for the tree campaign.
        #[arg(long)]
        n_max: Option<usize>,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `a,b`, got `{s}`"))?;
    let v = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    Ok((v(a)?, v(b)?))
}

enum Failure {
    Usage(String),
    Counterexample,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load(source: &Source, format: Format) -> Result<Graph, Failure> {
    if let Some(code) = &source.g6 {
        return Ok(parse_graph6(code)?);
    }
    if let Some(name) = &source.graph {
        return Ok(parse_graph_name(name)?);
    }
    let path = source.file.as_ref().expect("clap enforces one source");
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(match format {
        Format::Graph6 => parse_graph6(text.trim())?,
        Format::Edgelist => parse_edge_list(&text)?,
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { source, format, pairs, json, tol } => {
            let g = load(&source, format)?;
            let opts = AnalyzeOptions { pairs, tol, ..Default::default() };
            let report = analyze(&g, &opts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{report}");
            }
            if !report.all_verified() {
                eprintln!("oracle residual above {tol} for a proper decision");
                return Err(Failure::Counterexample);
            }
        }
        Command::Periodic { source, format, vertex } => {
            let g = load(&source, format)?;
            let p = SpectralContext::new(&g).periodicity(vertex)?;
            match (p.periodic, p.big_g, p.minimal_period()) {
                (false, ..) => println!("vertex {vertex}: not periodic"),
                (true, Some(big_g), Some(t)) => {
                    println!("vertex {vertex}: periodic, G={big_g}, period {t} ({})", t.decimal())
                }
                (true, ..) => println!("vertex {vertex}: periodic at every time"),
            }
        }
        Command::Construct { name, params } => {
            let registry = ConstructorRegistry::default();
            if name == "list" {
                for n in registry.names() {
                    println!("{}", registry.get(n).expect("listed").usage());
                }
                return Ok(());
            }
            println!("{}", to_graph6(&registry.build(&name, &params)?));
        }
        Command::Campaign { name, workers, json, n_max } => {
            let opts = CampaignOptions { workers, tree_n_max: n_max };
            let result = CampaignRegistry::default().run(&name, &opts)?;
            println!(
                "campaign {}: {} graphs, {} positive, {} counterexample(s), {} check(s), {:.2}s",
                result.campaign,
                result.corpus_size,
                result.positive_count,
                result.counterexamples.len(),
                result.checks.len(),
                result.wall_time_secs
            );
            for c in result.checks.iter().filter(|c| !c.passed) {
                println!("  FAILED {}: {}", c.name, c.detail);
            }
            for c in &result.counterexamples {
                println!("  counterexample {}: {}", c.graph6, c.reason);
            }
            if let Some(path) = json {
                fs::write(&path, serde_json::to_string_pretty(&result)?)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            if !result.passed() {
                return Err(Failure::Counterexample);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Counterexample) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
