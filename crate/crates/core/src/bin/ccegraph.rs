//! Command-line front end: CCE/competition graphs, component analysis,
//! recognition, witness synthesis, and verification sweeps.
//!
//! Exit codes: 0 success or YES, 1 semantic NO or violations found,
//! 2 usage, parse, or I/O errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cce_graphs::verify::{run_props_sweep, run_random_props_sweep, Shard};
use cce_graphs::{
    cce, check_acyclic_props, check_structure_props, competition, has_hole_bounded_degree,
    is_interval_bounded_degree, is_minimal, recognize_22, recognize_22_interval,
    synth::synthesize_witness, to_spec, verify::enumerate, verify_small_acyclic_no_cycle,
    verify_theorem_1_3, ComponentSpec, Digraph, EnumerationConfig, UndirectedGraph,
    VerificationReport,
};

#[derive(Parser)]
#[command(name = "ccegraph", version, about = "CCE graphs of degree-bounded digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the CCE graph of a digraph file
    Cce {
        file: PathBuf,
        /// Emit DOT instead of the graph text format
        #[arg(long)]
        dot: bool,
    },
    /// Print the competition graph of a digraph file
    Competition {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Print the component multiset and interval/hole verdicts of a graph file
    Analyze { file: PathBuf },
    /// Print a digraph or graph file as DOT (format detected from the header)
    Dot { file: PathBuf },
    /// Decide whether a component multiset is realizable (exit 1 when not)
    Recognize {
        /// Multiset in the spec grammar, e.g. "C3 + 6xP1"
        spec: String,
        /// Additionally require the realization to be interval
        #[arg(long)]
        interval: bool,
    },
    /// Build a witness digraph realizing a component multiset
    Synthesize {
        spec: String,
        /// Output digraph file
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run checkers on one digraph file (all checkers when no flag is given)
    Verify {
        file: PathBuf,
        /// Single-arc-deletion minimality (needs a bounded acyclic digraph)
        #[arg(long)]
        minimal: bool,
        /// Structural properties of the CCE graph
        #[arg(long)]
        structure: bool,
        /// Properties special to bounded acyclic digraphs
        #[arg(long)]
        acyclic_props: bool,
        /// Emit JSON reports
        #[arg(long)]
        json: bool,
    },
    /// Enumerate small digraphs, optionally running a verification sweep
    Enumerate {
        /// Vertex count
        #[arg(long)]
        n: u32,
        /// Restrict to acyclic digraphs
        #[arg(long)]
        acyclic: bool,
        /// Verification sweep to run over the enumeration
        #[arg(long)]
        check: Option<CheckKind>,
        /// Enumerate labeled digraphs instead of isomorphism-class representatives
        #[arg(long)]
        no_reduction: bool,
        /// Work shard as INDEX/TOTAL, e.g. 0/4
        #[arg(long)]
        shard: Option<String>,
        /// Size of the worker thread pool
        #[arg(long)]
        workers: Option<usize>,
        /// Check this many random digraphs instead of enumerating (props only)
        #[arg(long)]
        random: Option<u64>,
        /// Seed for --random
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit JSON reports
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckKind {
    /// Components of every CCE graph are paths/cycles, never one lone
    /// nontrivial path; accepted multisets synthesize back
    Theorem13,
    /// CCE graphs of acyclic digraphs at this scale have no cycle
    NoCycle,
    /// Structural property checkers on every enumerated digraph
    Props,
}

enum CliError {
    Usage(String),
    Semantic,
}

impl From<cce_graphs::Error> for CliError {
    fn from(e: cce_graphs::Error) -> CliError {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Semantic) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn read_digraph(path: &Path) -> Result<Digraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {}", path.display(), e)))?;
    Ok(Digraph::from_text(&text)?)
}

fn parse_spec(s: &str) -> Result<ComponentSpec, CliError> {
    s.parse::<ComponentSpec>().map_err(CliError::from)
}

fn results_dir() -> PathBuf {
    std::env::var_os("CCEGRAPH_RESULTS_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("cce-results"))
}

fn emit_reports(reports: &[VerificationReport], json: bool) -> Result<(), CliError> {
    let mut clean = true;
    for rep in reports {
        if json {
            println!("{}", rep.to_json());
        } else {
            println!("{}", rep.record_line());
        }
        if !rep.passed() {
            clean = false;
            let dir = results_dir();
            match rep.write_violations(&dir) {
                Ok(files) => eprintln!(
                    "{} violating digraph(s) written to {}",
                    files.len(),
                    dir.display()
                ),
                Err(e) => eprintln!("could not write violations to {}: {}", dir.display(), e),
            }
        }
    }
    if clean {
        Ok(())
    } else {
        Err(CliError::Semantic)
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Cce { file, dot } => {
            let g = cce(&read_digraph(&file)?);
            print!("{}", if dot { g.to_dot() } else { g.to_text() });
            Ok(())
        }
        Command::Competition { file, dot } => {
            let g = competition(&read_digraph(&file)?);
            print!("{}", if dot { g.to_dot() } else { g.to_text() });
            Ok(())
        }
        Command::Analyze { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| CliError::Usage(format!("{}: {}", file.display(), e)))?;
            let g = UndirectedGraph::from_text(&text)?;
            match to_spec(&g) {
                Ok(spec) => {
                    println!("spec: {}", spec);
                    let interval = is_interval_bounded_degree(&g)
                        .expect("paths and cycles have degree at most 2");
                    let hole = has_hole_bounded_degree(&g)
                        .expect("paths and cycles have degree at most 2");
                    println!("interval: {}", if interval { "yes" } else { "no" });
                    println!("hole: {}", if hole { "yes" } else { "no" });
                    Ok(())
                }
                Err(e) => {
                    println!("spec: not paths and cycles");
                    eprintln!("{}", e);
                    Err(CliError::Semantic)
                }
            }
        }
        Command::Dot { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| CliError::Usage(format!("{}: {}", file.display(), e)))?;
            let first_word = text.split_whitespace().next().unwrap_or_default();
            match first_word {
                "digraph" => print!("{}", Digraph::from_text(&text)?.to_dot()),
                "graph" => print!("{}", UndirectedGraph::from_text(&text)?.to_dot()),
                other => {
                    return Err(CliError::Usage(format!(
                        "expected a `digraph` or `graph` header, got `{}`",
                        other
                    )))
                }
            }
            Ok(())
        }
        Command::Recognize { spec, interval } => {
            let spec = parse_spec(&spec)?;
            let result = if interval {
                recognize_22_interval(&spec)
            } else {
                recognize_22(&spec)
            };
            if result.answer {
                println!("YES");
                Ok(())
            } else {
                println!("NO ({})", result.reason);
                Err(CliError::Semantic)
            }
        }
        Command::Synthesize { spec, output } => {
            let spec = parse_spec(&spec)?;
            match synthesize_witness(&spec) {
                Ok(witness) => {
                    let text = witness.digraph.to_text();
                    let mut lines = text.splitn(2, '\n');
                    let header = lines.next().unwrap_or_default();
                    let rest = lines.next().unwrap_or_default();
                    let mut content = format!("{}\n# realizes: {}\n", header, spec);
                    for line in &witness.recipe {
                        content.push_str(&format!("# {}\n", line));
                    }
                    content.push_str(rest);
                    std::fs::write(&output, content)
                        .map_err(|e| CliError::Usage(format!("{}: {}", output.display(), e)))?;
                    eprintln!(
                        "witness with {} vertices written to {}",
                        witness.digraph.vertex_count(),
                        output.display()
                    );
                    Ok(())
                }
                Err(cce_graphs::Error::NotRealizable(reason)) => {
                    println!("NO ({})", reason);
                    Err(CliError::Semantic)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify {
            file,
            minimal,
            structure,
            acyclic_props,
            json,
        } => {
            let d = read_digraph(&file)?;
            let run_all = !minimal && !structure && !acyclic_props;
            let mut reports = Vec::new();
            let mut minimal_verdict = None;
            if minimal || run_all {
                minimal_verdict = Some(is_minimal(&d)?);
            }
            if structure || run_all {
                reports.push(check_structure_props(&d)?);
            }
            if acyclic_props || run_all {
                reports.push(check_acyclic_props(&d)?);
            }
            if let Some(v) = minimal_verdict {
                println!("minimal: {}", if v { "yes" } else { "no" });
            }
            emit_reports(&reports, json)
        }
        Command::Enumerate {
            n,
            acyclic,
            check,
            no_reduction,
            shard,
            workers,
            random,
            seed,
            json,
        } => {
            let shard = match shard {
                None => Shard::default(),
                Some(s) => {
                    let (i, t) = s
                        .split_once('/')
                        .ok_or_else(|| CliError::Usage(format!("bad shard `{}`, want I/T", s)))?;
                    let index = i
                        .parse()
                        .map_err(|_| CliError::Usage(format!("bad shard `{}`", s)))?;
                    let total = t
                        .parse()
                        .map_err(|_| CliError::Usage(format!("bad shard `{}`", s)))?;
                    Shard::new(index, total)
                }
            };
            let mut cfg = EnumerationConfig::new(n);
            cfg.acyclic = acyclic;
            cfg.isomorph_reduction = !no_reduction;
            cfg.shard = shard;
            cfg.validate()?;

            if random.is_some() && !matches!(check, Some(CheckKind::Props)) {
                return Err(CliError::Usage("--random requires --check props".into()));
            }

            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers.unwrap_or(0))
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;

            let reports: Vec<VerificationReport> = pool.install(|| -> Result<_, CliError> {
                match check {
                    None => {
                        let start = std::time::Instant::now();
                        let mut rep = VerificationReport::new("enumerate");
                        rep.instances_checked = enumerate(&cfg)?.count() as u64;
                        rep.elapsed = start.elapsed();
                        Ok(vec![rep])
                    }
                    Some(CheckKind::Theorem13) => {
                        if acyclic {
                            return Err(CliError::Usage(
                                "this sweep covers all bounded digraphs; drop --acyclic".into(),
                            ));
                        }
                        Ok(vec![verify_theorem_1_3(n)])
                    }
                    Some(CheckKind::NoCycle) => Ok(vec![verify_small_acyclic_no_cycle(n)?]),
                    Some(CheckKind::Props) => match random {
                        Some(count) => Ok(run_random_props_sweep(n, count, acyclic, seed)),
                        None => Ok(run_props_sweep(&cfg)?),
                    },
                }
            })?;
            emit_reports(&reports, json)
        }
    }
}
