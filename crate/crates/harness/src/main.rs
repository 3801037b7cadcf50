use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use collapsibility::io::parse_instance;
use collapsibility::{named, Budget, Field};
use collapsibility_harness::generate::{generate, GeneratorSpec, Kind};
use collapsibility_harness::report::{
    compute, parse_invariants, ComputeOptions, InstanceDescriptor,
};
use collapsibility_harness::search::{search, SearchOptions};
use collapsibility_harness::verify::{self, VerifyOptions, THEOREMS};
use collapsibility_harness::HarnessError;

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Collapsibility, Leray numbers and domination parameters of small
/// simplicial complexes and hypergraphs.
#[derive(Parser)]
#[command(name = "collapsibility", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Homology coefficients: rational or gfP for a prime P.
    #[arg(long, default_value = "rational")]
    field: Field,
    /// Search-node limit per invariant (compute) or per trial.
    #[arg(long, default_value_t = Budget::DEFAULT_NODES)]
    budget: u64,
    /// Write the JSON output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate invariants of a complex or hypergraph file.
    Compute {
        file: PathBuf,
        /// Comma-separated names, or "all". See `collapsibility list`.
        #[arg(long, default_value = "all")]
        invariants: String,
        #[command(flatten)]
        common: Common,
    },
    /// Emit a generated instance in its file format.
    Generate {
        #[arg(long)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 7)]
        vertices: u32,
        #[arg(long, default_value_t = 2)]
        min_vertices: u32,
        /// Largest number of facets or edges.
        #[arg(long, default_value_t = 8)]
        count: usize,
        /// Largest facet or edge size.
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Decomposability parameter for random-kvd.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Leaves per star for star-family.
        #[arg(long, value_delimiter = ',', default_value = "1,1,1")]
        leaves: Vec<u32>,
        /// Example name for named-example.
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a statement on random instances.
    Verify {
        /// Theorem name, or "all".
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 7)]
        max_vertices: u32,
        /// Directory receiving one file per counterexample.
        #[arg(long, default_value = "counterexamples")]
        counterexamples: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Look for complexes with M_k < M_(k-1).
    Search {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 7)]
        max_vertices: u32,
        #[arg(long, default_value_t = 8)]
        max_facets: usize,
        #[arg(long, default_value_t = Budget::DEFAULT_NODES)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List invariants, theorems, generator kinds and named examples.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = e
                .downcast_ref::<HarnessError>()
                .is_some_and(HarnessError::is_usage)
                || e.downcast_ref::<collapsibility::Error>().is_some()
                || e.downcast_ref::<std::io::Error>().is_some();
            ExitCode::from(if usage { EXIT_USAGE } else { 1 })
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes") + "\n"
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Compute {
            file,
            invariants,
            common,
        } => {
            let text =
                fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let (instance, load) =
                parse_instance(&text).with_context(|| format!("parsing {}", file.display()))?;
            let list = parse_invariants(&invariants, &instance)?;
            let opts = ComputeOptions {
                field: common.field,
                budget: common.budget,
            };
            let desc = InstanceDescriptor::new(&instance, load, Vec::new());
            let report = compute(&instance, &list, opts, desc, None);
            emit(common.out.as_deref(), &report.to_json())?;
            Ok(if report.any_budget_exhausted() {
                EXIT_BUDGET
            } else {
                0
            })
        }
        Command::Generate {
            kind,
            seed,
            vertices,
            min_vertices,
            count,
            max_size,
            k,
            leaves,
            name,
            out,
        } => {
            let spec = GeneratorSpec {
                kind,
                vertices,
                min_vertices,
                count,
                max_size,
                k,
                leaves,
                name,
                seed,
            };
            let generated = generate(&spec)?;
            for note in &generated.notes {
                eprintln!("note: {note}");
            }
            emit(out.as_deref(), &(generated.instance.to_json() + "\n"))?;
            Ok(0)
        }
        Command::Verify {
            theorem,
            trials,
            seed,
            max_vertices,
            counterexamples,
            common,
        } => {
            let selected: Vec<&'static verify::Theorem> = if theorem == "all" {
                THEOREMS.iter().collect()
            } else {
                theorem
                    .split(',')
                    .map(|name| verify::theorem(name.trim()))
                    .collect::<Result<_, _>>()?
            };
            let opts = VerifyOptions {
                trials,
                seed,
                max_vertices,
                budget: common.budget,
                field: common.field,
            };
            let mut summaries = Vec::new();
            for t in selected {
                let s = verify::run(t, &opts);
                eprintln!("{}", s.line());
                for c in &s.counterexamples {
                    fs::create_dir_all(&counterexamples)
                        .with_context(|| format!("creating {}", counterexamples.display()))?;
                    let path = counterexamples.join(format!("{}-trial{}.json", s.theorem, c.index));
                    if let Some(instance) = &c.instance {
                        emit(Some(&path), &to_json(instance))?;
                        eprintln!("  counterexample written to {}", path.display());
                    }
                }
                summaries.push(s);
            }
            emit(common.out.as_deref(), &to_json(&summaries))?;
            Ok(if summaries.iter().any(|s| s.fail > 0 || s.errors > 0) {
                EXIT_COUNTEREXAMPLE
            } else if summaries.iter().any(|s| s.budget_exhausted > 0) {
                EXIT_BUDGET
            } else {
                0
            })
        }
        Command::Search {
            k,
            trials,
            seed,
            max_vertices,
            max_facets,
            budget,
            out,
        } => {
            let summary = search(&SearchOptions {
                k,
                trials,
                seed,
                max_vertices,
                max_facets,
                budget,
            })?;
            eprintln!(
                "examined {}, {} confirmed candidates, {} budget-exhausted",
                summary.examined,
                summary.candidates.len(),
                summary.budget_exhausted
            );
            emit(out.as_deref(), &to_json(&summary))?;
            Ok(
                if summary.candidates.is_empty() && summary.budget_exhausted > 0 {
                    EXIT_BUDGET
                } else {
                    0
                },
            )
        }
        Command::List => {
            println!("invariants: C, M<k>, M'<k>, d, leray, betti, cm, cm-induced, shellable, kvd<k>, dim, f-vector,");
            println!("            gamma_i, gamma_si, gamma_tilde, gamma_E, nc-bound, all");
            println!("theorems:");
            for t in THEOREMS {
                println!("  {:<20} {}", t.name, t.summary);
            }
            let kinds: Vec<&str> = Kind::ALL.iter().map(|k| k.name()).collect();
            println!("generators: {}", kinds.join(", "));
            println!("named examples: {}", named::NAMES.join(", "));
            Ok(0)
        }
    }
}
