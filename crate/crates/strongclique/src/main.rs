use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use strongclique::clique;
use strongclique::corpus::{build_corpus, CorpusSpec};
use strongclique::families;
use strongclique::io as gio;
use strongclique::report::{emit_reports, Analysis};
use strongclique::strong;
use strongclique::verify::{SuiteOptions, Verifier};

/// Strong-clique analysis for vertex-transitive graphs.
#[derive(Parser)]
#[command(name = "strongclique", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Dimacs,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph and print it to standard output.
    ///
    /// Families: k N | c N | cbar N | kb A B | empty N | path N | petersen |
    /// l I | h N | johnson N K I | circulant N D1,D2,... | family-l1 A|B|C|D N |
    /// line-k N | line-kb A B | k3-2k1 | c4-k2 | c3xc N | k3xk4 | k5xk2
    Gen {
        /// Family name.
        family: String,
        /// Family parameters.
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Analyze a graph file (graph6 or DIMACS; `-` reads standard input)
    /// and print its invariants as a JSON object.
    Analyze {
        /// Path to the graph file.
        graphfile: String,
        /// Emit one JSON line per maximal clique with its strong verdict
        /// and witness instead of the summary report.
        #[arg(long)]
        strong: bool,
    },
    /// Run a verification suite (or `all`) and print its result lines.
    ///
    /// Suites: thm-3.1 prop-2.2 cor-3.2 cor-3.3 cor-3.4 prop-3.6 lem-3.8
    /// ex-3.5 lem-4.2 thm-4.3 thm-5.1 thm-5.3 prop-5.5 lem-5.8 lem-5.9
    /// lem-5.10 lem-5.11 ex-5.12 prop-5.13 prop-5.14
    Verify {
        /// Suite id, e.g. thm-4.3, thm-5.1, prop-5.14, or `all`.
        suite: String,
        /// Override the corpus order bound.
        #[arg(long)]
        corpus_max: Option<usize>,
        /// Write the per-graph JSON-lines reports to this file.
        #[arg(long)]
        out: Option<String>,
    },
    /// Enumerate the corpus of connected vertex-transitive graphs with the
    /// given valency and print them as graph6 lines.
    Corpus {
        #[arg(long)]
        valency: usize,
        #[arg(long)]
        max_order: usize,
        /// Prefix each line with the graph id and a tab.
        #[arg(long)]
        ids: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen {
            family,
            params,
            format,
        } => {
            let (g, _id) = families::by_name(&family, &params)
                .with_context(|| format!("generating family '{family}'"))?;
            match format {
                Format::Graph6 => println!("{}", gio::to_graph6(&g)),
                Format::Dimacs => print!("{}", gio::to_dimacs(&g)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { graphfile, strong } => {
            let text = if graphfile == "-" {
                let mut buf = String::new();
                io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                fs::read_to_string(&graphfile)
                    .with_context(|| format!("reading {graphfile}"))?
            };
            let g = gio::from_text(&text).context("parsing graph")?;
            if strong {
                let mis = clique::maximal_independent_sets(&g);
                for c in clique::maximal_cliques(&g).iter() {
                    let verdict = strong::is_strong_clique_with(&g, c, &mis)
                        .expect("enumerated cliques are cliques");
                    let obj = serde_json::json!({
                        "clique": c.members(),
                        "is_strong": verdict.is_strong,
                        "witness": verdict.witness.as_ref().map(|w| w.members().to_vec()),
                    });
                    println!("{obj}");
                }
            } else {
                let id = if graphfile == "-" { "stdin" } else { &graphfile };
                let report = Analysis::run(id, &g).report();
                println!("{}", report.to_json_line());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            corpus_max,
            out,
        } => {
            let verifier = Verifier::new();
            let opts = SuiteOptions { corpus_max };
            let outcomes = if suite == "all" {
                verifier.run_all(&opts)?
            } else {
                vec![verifier.run(&suite, &opts)?]
            };
            let mut all_passed = true;
            let mut reports = Vec::new();
            for oc in &outcomes {
                for line in &oc.lines {
                    println!("[{}] {}", oc.id, line);
                }
                println!("[{}] {}", oc.id, if oc.passed { "PASS" } else { "FAIL" });
                all_passed &= oc.passed;
                reports.extend(oc.reports.iter().cloned());
            }
            if let Some(path) = out {
                let file = fs::File::create(&path).with_context(|| format!("creating {path}"))?;
                emit_reports(&reports, io::BufWriter::new(file))?;
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Corpus {
            valency,
            max_order,
            ids,
        } => {
            let spec = CorpusSpec::standard(&[valency], max_order);
            let members = build_corpus(&spec)?;
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for m in &members {
                if ids {
                    writeln!(out, "{}\t{}", m.id, gio::to_graph6(&m.graph))?;
                } else {
                    writeln!(out, "{}", gio::to_graph6(&m.graph))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
