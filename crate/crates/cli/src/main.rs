use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use primo_core::enumeration::{
    cycle_index_connected, cycle_index_graphs, cycle_index_primes, labeled_connected_counts, labeled_prime_counts,
    render_table, run_report, unlabeled_connected_counts, unlabeled_prime_counts,
};
use primo_core::graphs::{
    aut_order, cartesian_product, decode_graph6, encode_graph6, prime_factorize, species_cycle_index, SmallGraph,
};
use primo_core::symfunc::PolyJson;
use primo_core::table1::{verify, PrimeTable, TABLE_ROWS};
use primo_core::{Error, PowerSumPoly};

const DEFAULT_MAX: &str = "16";

#[derive(Parser)]
#[command(name = "primo", version, about = "Enumerate prime graphs under the Cartesian product")]
struct Cli {
    /// Worker threads for the parallel parts of the pipeline (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a cycle index series.
    CycleIndex {
        #[arg(long, value_enum)]
        species: Species,
        #[arg(long, env = "PRIMO_MAX_DEGREE", default_value = DEFAULT_MAX,
              value_parser = clap::value_parser!(u32).range(0..=20))]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a sequence of graph counts, one row per n.
    Count {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, env = "PRIMO_MAX_DEGREE", default_value = DEFAULT_MAX,
              value_parser = clap::value_parser!(u32).range(1..=20))]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recompute the prime counts and compare them with the built-in reference table.
    Verify {
        #[arg(long, default_value = DEFAULT_MAX, value_parser = clap::value_parser!(u32).range(1..=16))]
        max_n: u32,
    },
    /// Operations on graphs given in graph6 format (arguments or stdin).
    Graph {
        #[command(subcommand)]
        op: GraphOp,
    },
    /// All count sequences and series up to max-n.
    Report {
        #[arg(long, env = "PRIMO_MAX_DEGREE", default_value = DEFAULT_MAX,
              value_parser = clap::value_parser!(u32).range(1..=20))]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum GraphOp {
    /// Prime factors of each connected graph (at most 8 vertices).
    Factor { graphs: Vec<String> },
    /// Order of the automorphism group (at most 9 vertices).
    Aut { graphs: Vec<String> },
    /// Cartesian product of all given graphs, in order.
    Product { graphs: Vec<String> },
    /// Cycle index of the species of graphs isomorphic to each input.
    CycleIndex { graphs: Vec<String> },
}

#[derive(Clone, Copy, ValueEnum)]
enum Species {
    Graphs,
    Connected,
    Primes,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    LabeledConnected,
    LabeledPrimes,
    UnlabeledConnected,
    UnlabeledPrimes,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

enum Failure {
    Domain(Error),
    Verification(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Domain(Error::Graph6 { .. }) => 2,
            Failure::Domain(
                Error::TooManyVertices { .. } | Error::Disconnected | Error::DegreeOutOfRange { .. },
            ) => 3,
            Failure::Domain(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Domain(e) => e.to_string(),
            Failure::Verification(m) | Failure::Usage(m) => m.clone(),
        }
    }
}

fn render_poly(poly: PowerSumPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{poly}\n"),
        Format::Json => {
            let json: PolyJson = poly.into();
            serde_json::to_string_pretty(&json).expect("serializable") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("weight,partition,numerator,denominator\n");
            for (lambda, c) in poly.terms() {
                let parts: Vec<String> = lambda.parts().iter().map(|p| p.to_string()).collect();
                out += &format!("{},{},{},{}\n", lambda.weight(), parts.join(" "), c.numer(), c.denom());
            }
            out
        }
    }
}

fn render_counts(name: &str, counts: &[num_bigint::BigInt], format: Format) -> String {
    match format {
        Format::Text => render_table(&["n", name], &[counts]),
        Format::Json => {
            let values: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
            let json = serde_json::json!({ "what": name, "max_n": counts.len(), "counts": values });
            serde_json::to_string_pretty(&json).expect("serializable") + "\n"
        }
        Format::Csv => {
            let mut out = format!("n,{name}\n");
            for (i, c) in counts.iter().enumerate() {
                out += &format!("{},{c}\n", i + 1);
            }
            out
        }
    }
}

fn read_graphs(args: Vec<String>) -> Result<Vec<SmallGraph>, Failure> {
    let tokens = if args.is_empty() {
        let mut input = String::new();
        io::stdin()
            .read_to_string(&mut input)
            .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        input.split_whitespace().map(str::to_string).collect()
    } else {
        args
    };
    if tokens.is_empty() {
        return Err(Failure::Usage("no graph6 input given".into()));
    }
    Ok(tokens.iter().map(|t| decode_graph6(t)).collect::<Result<_, _>>()?)
}

fn graph_command(op: GraphOp) -> Result<String, Failure> {
    let mut out = String::new();
    match op {
        GraphOp::Factor { graphs } => {
            for g in read_graphs(graphs)? {
                let factors: Vec<String> = prime_factorize(&g)?.iter().map(encode_graph6).collect();
                out += &(factors.join(" ") + "\n");
            }
        }
        GraphOp::Aut { graphs } => {
            for g in read_graphs(graphs)? {
                out += &format!("{}\n", aut_order(&g)?);
            }
        }
        GraphOp::Product { graphs } => {
            let graphs = read_graphs(graphs)?;
            let mut acc = SmallGraph::empty(1)?;
            for g in &graphs {
                acc = cartesian_product(&acc, g)?;
            }
            out += &(encode_graph6(&acc) + "\n");
        }
        GraphOp::CycleIndex { graphs } => {
            for g in read_graphs(graphs)? {
                out += &format!("{}\n", species_cycle_index(&g)?);
            }
        }
    }
    Ok(out)
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::CycleIndex {
            species,
            max_degree,
            format,
        } => {
            let poly = match species {
                Species::Graphs => cycle_index_graphs(max_degree)?,
                Species::Connected => cycle_index_connected(max_degree)?,
                Species::Primes => cycle_index_primes(max_degree)?,
            };
            Ok(render_poly(poly, format))
        }
        Command::Count { what, max_n, format } => {
            let (name, counts) = match what {
                What::LabeledConnected => ("labeled-connected", labeled_connected_counts(max_n)?),
                What::LabeledPrimes => ("labeled-primes", labeled_prime_counts(max_n)?),
                What::UnlabeledConnected => ("unlabeled-connected", unlabeled_connected_counts(max_n)?),
                What::UnlabeledPrimes => ("unlabeled-primes", unlabeled_prime_counts(max_n)?),
            };
            Ok(render_counts(name, &counts, format))
        }
        Command::Verify { max_n } => {
            let max_n = (max_n as usize).min(TABLE_ROWS) as u32;
            let labeled = labeled_prime_counts(max_n)?;
            let unlabeled = unlabeled_prime_counts(max_n)?;
            let report = verify(&PrimeTable::embedded(), &labeled, &unlabeled, max_n as usize);
            if report.passed() {
                Ok(format!("PASS: {} comparisons, n <= {}\n", report.comparisons, report.max_n))
            } else {
                let mut msg = String::new();
                for m in &report.mismatches {
                    msg += &format!("{m}\n");
                }
                msg += &format!(
                    "FAIL: {} of {} comparisons differ, n <= {}",
                    report.mismatches.len(),
                    report.comparisons,
                    report.max_n
                );
                Err(Failure::Verification(msg))
            }
        }
        Command::Graph { op } => graph_command(op),
        Command::Report { max_n, format } => {
            let report = run_report(max_n)?;
            match format {
                Format::Json => Ok(serde_json::to_string_pretty(&report).expect("serializable") + "\n"),
                Format::Text => Ok(report.full_table()),
                Format::Csv => {
                    let mut out = String::from("n,labeled_connected,labeled_prime,unlabeled_connected,unlabeled_prime\n");
                    for i in 0..report.max_n as usize {
                        out += &format!(
                            "{},{},{},{},{}\n",
                            i + 1,
                            report.labeled_connected[i],
                            report.labeled_prime[i],
                            report.unlabeled_connected[i],
                            report.unlabeled_prime[i]
                        );
                    }
                    Ok(out)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("primo: cannot configure thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("primo: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
