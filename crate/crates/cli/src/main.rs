use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use hadlab_core::classify::{bipartite_chain, bracket_label, clique_chain};
use hadlab_core::families::{CandidateStore, FamilySpec, SplitInterpretation};
use hadlab_core::hunt::{
    classify_row, corner_cut_scan, find_k_critical, identify_higher_wheels, question1_scan, ScanReport,
};
use hadlab_core::verify::Suite;
use hadlab_core::{
    chromatic_number, has_minor, is_k_colorable, is_k_critical, parse_graph6, to_graph6, Graph, Pattern,
};

mod exit;

use exit::Failure;

#[derive(Parser)]
#[command(
    name = "hadlab",
    version,
    about = "Colour-critical graphs, clique minors and exhaustive small-graph scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number, or a k-colouring if --k is given
    Color {
        /// graph6 string, or - for one graph6 per stdin line
        graph: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Edge-criticality report
    Critical {
        graph: String,
        #[arg(long)]
        k: usize,
        /// Print the full report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Minor containment with branch-set witness
    Minor {
        host: String,
        /// Pattern name (K5, K5-, K5o(1,3), K33, K33-, W4, C6+) or graph6
        #[arg(long)]
        pattern: String,
        /// Print the host as DOT with branch sets as labels
        #[arg(long)]
        dot: bool,
    },
    /// CSV summary row: colouring, free classes, brackets, tag, Hadwiger number
    Classify {
        graph: String,
        /// Print the CSV header first
        #[arg(long)]
        header: bool,
    },
    /// Minor bracket within a fixed chain
    Bracket {
        graph: String,
        #[arg(long, value_enum)]
        chain: Chain,
    },
    /// Build a named graph and print it as graph6
    Family {
        #[command(subcommand)]
        family: Family,
        #[arg(long, global = true)]
        dot: bool,
    },
    /// Run an exhaustive scan and write a JSON report
    Scan {
        #[command(subcommand)]
        scan: Scan,
        #[command(flatten)]
        out: ScanOutput,
    },
    /// Run the numbered reproduction checks and print a pass/fail table
    VerifyPaper {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Chain {
    Clique,
    Bipartite,
}

#[derive(Subcommand)]
enum Family {
    Wheel {
        i: usize,
    },
    Hypercube {
        d: usize,
    },
    /// Q_d with the listed corners cut off
    Truncate {
        d: usize,
        #[arg(required = true)]
        corners: Vec<usize>,
    },
    SplitWheel {
        i: usize,
        #[arg(long, default_value = "hajos_spoke")]
        interpretation: String,
    },
    HigherWheel {
        i: usize,
        #[arg(long)]
        store: Option<PathBuf>,
        /// graph6 of a user-supplied candidate; must pass the checklist
        #[arg(long = "override")]
        override_graph: Option<String>,
    },
}

#[derive(Subcommand)]
enum Scan {
    Critical {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        k: usize,
    },
    Question1 {
        #[arg(long)]
        n_max: usize,
    },
    Corners {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        max_cut: usize,
    },
    /// Search for higher-wheel candidates of order i; appends them to --store
    Identify {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        store: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ScanOutput {
    /// JSON report path; stdout if absent
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// CSV summary path, one row per listed graph
    #[arg(long, global = true)]
    csv: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("hadlab: {f}");
            f.exit_code()
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Color { graph, k } => batch(&graph, |g| {
            Ok(match k {
                Some(k) => match is_k_colorable(g, k) {
                    Some(c) => format!("colorable k={k} coloring={}", join(&c.colors)),
                    None => format!("not_colorable k={k}"),
                },
                None => {
                    let (chi, c) = chromatic_number(g);
                    format!("chi={chi} coloring={}", join(&c.colors))
                }
            })
        }),
        Command::Critical { graph, k, json } => batch(&graph, |g| {
            let r = is_k_critical(g, k)?;
            Ok(if json {
                serde_json::to_string(&r).expect("report is plain data")
            } else {
                format!("{} chi={}", r.verdict, r.chi)
            })
        }),
        Command::Minor { host, pattern, dot } => {
            let pattern = Pattern::parse(&pattern)?;
            batch(&host, |g| {
                Ok(match has_minor(g, &pattern.graph)? {
                    Some(model) if dot => {
                        let owner = |v: usize| model.branch_sets.iter().position(|s| s.contains(&v));
                        g.to_dot_labelled(|v| owner(v).map(|a| format!("{v}:{a}")))
                            .trim_end()
                            .to_string()
                    }
                    Some(model) => format!(
                        "minor {pattern} branch_sets={}",
                        serde_json::to_string(&model.branch_sets).expect("plain data")
                    ),
                    None => format!("no_minor {pattern}"),
                })
            })
        }
        Command::Classify { graph, header } => {
            if header {
                emit(
                    "graph6,n,m,chi,critical,free_planar,free_hadwiger4,bracket_clique,bracket_bipartite,tag,hadwiger",
                )?;
            }
            batch(&graph, |g| Ok(csv_line(g)))
        }
        Command::Bracket { graph, chain } => {
            let chain = match chain {
                Chain::Clique => clique_chain(),
                Chain::Bipartite => bipartite_chain(),
            };
            batch(&graph, |g| Ok(bracket_label(g, &chain)?))
        }
        Command::Family { family, dot } => {
            let g = build_family(family)?;
            emit(&if dot {
                g.to_dot().trim_end().to_string()
            } else {
                to_graph6(&g)
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan { scan, out } => run_scan(scan, out),
        Command::VerifyPaper { jobs } => {
            let mut suite = Suite::new(jobs);
            let outcomes = suite.run_all();
            for o in &outcomes {
                emit(&o.to_string())?;
            }
            let passed = outcomes.iter().filter(|o| o.passed).count();
            emit(&format!("{passed}/{} criteria passed", outcomes.len()))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Prints one line to stdout; a closed pipe ends the process quietly.
fn emit(line: &str) -> Result<(), Failure> {
    match writeln!(io::stdout().lock(), "{line}") {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        r => Ok(r.context("writing standard output")?),
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn csv_line(g: &Graph) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.serialize(classify_row(g)).expect("row serialises");
    String::from_utf8(w.into_inner().expect("in-memory writer"))
        .expect("csv output is utf-8")
        .trim_end()
        .to_string()
}

/// Runs `f` on one graph6 argument, or on every stdin line when the argument
/// is `-`. Batch mode prints exactly one line per input line and reports the
/// most severe failure through the exit code.
fn batch(arg: &str, f: impl Fn(&Graph) -> hadlab_core::Result<String>) -> Result<ExitCode, Failure> {
    if arg != "-" {
        let g = parse_graph6(arg)?;
        emit(&f(&g)?)?;
        return Ok(ExitCode::SUCCESS);
    }
    let stdin = io::stdin();
    let mut worst: Option<Failure> = None;
    for line in stdin.lock().lines() {
        let line = line.context("reading standard input")?;
        let result = parse_graph6(&line).and_then(|g| f(&g));
        let text = match result {
            Ok(s) => s,
            Err(e) => {
                let failure = Failure::from(e);
                let text = format!("error: {failure}");
                if worst.as_ref().map_or(true, |w| failure.severity() > w.severity()) {
                    worst = Some(failure);
                }
                text
            }
        };
        emit(&text)?;
    }
    Ok(worst.map_or(ExitCode::SUCCESS, |w| w.exit_code()))
}

fn load_store(path: Option<&Path>) -> Result<CandidateStore, Failure> {
    match path {
        Some(p) if p.exists() => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Ok(CandidateStore::parse(&text)?)
        }
        _ => Ok(CandidateStore::new()),
    }
}

fn build_family(family: Family) -> Result<Graph, Failure> {
    let store_path = match &family {
        Family::HigherWheel { store, .. } => store.clone(),
        _ => None,
    };
    let store = load_store(store_path.as_deref())?;
    let spec = match family {
        Family::Wheel { i } => FamilySpec::Wheel(i),
        Family::Hypercube { d } => FamilySpec::Hypercube(d),
        Family::Truncate { d, corners } => FamilySpec::TruncatedCube { d, corners },
        Family::SplitWheel { i, interpretation } => {
            FamilySpec::SplitSpokeWheel(i, interpretation.parse::<SplitInterpretation>()?)
        }
        Family::HigherWheel { i, override_graph, .. } => {
            let g = override_graph.as_deref().map(parse_graph6).transpose()?;
            FamilySpec::HigherWheelCandidate(i, g)
        }
    };
    Ok(spec.build(&store)?)
}

fn run_scan(scan: Scan, out: ScanOutput) -> Result<ExitCode, Failure> {
    let report: ScanReport = match scan {
        Scan::Critical { n_max, k } => find_k_critical(n_max, k, out.jobs)?,
        Scan::Question1 { n_max } => question1_scan(n_max, out.jobs)?,
        Scan::Corners { d, max_cut } => corner_cut_scan(d, max_cut, out.jobs)?,
        Scan::Identify { i, store } => {
            let mut candidates = load_store(store.as_deref())?;
            let (found, report) = identify_higher_wheels(i, &candidates, out.jobs)?;
            if let Some(path) = store {
                if !found.is_empty() {
                    candidates.insert(i, found);
                }
                std::fs::write(&path, candidates.to_text()).with_context(|| format!("writing {}", path.display()))?;
            }
            report
        }
    };
    match &out.out {
        Some(path) => {
            std::fs::write(path, report.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?
        }
        None => emit(&report.to_json())?,
    }
    if let Some(path) = &out.csv {
        let mut w = csv::Writer::from_path(path).with_context(|| format!("creating {}", path.display()))?;
        let mut listed: Vec<&str> = report.all_graph6();
        listed.sort_unstable();
        listed.dedup();
        for g6 in listed {
            w.serialize(classify_row(&parse_graph6(g6)?)).context("writing csv")?;
        }
        w.flush().context("writing csv")?;
    }
    Ok(ExitCode::SUCCESS)
}
