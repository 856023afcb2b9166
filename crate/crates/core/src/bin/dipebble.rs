use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dipebble::census::{run_census, verify_theorem, CensusFilter};
use dipebble::constructions::{
    build_layered, build_mixed2, ConstructionOutput, ConstructionSidecar,
};
use dipebble::digraph::parse_digraph;
use dipebble::family_f::{check_family_f, member_records, search_family_f, FamilyFLabeling};
use dipebble::pebbling::{classify, is_solvable, pebbling_number, pebbling_number_rooted};
use dipebble::{Configuration, Digraph, Error};

#[derive(Parser)]
#[command(
    name = "dipebble",
    version,
    about = "Exact pebbling computations on small digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Expect {
    Solvable,
    Unsolvable,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a configuration can put a pebble on the root.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        root: usize,
        /// `[0,3,0]` or `1:3,2:1`.
        #[arg(long)]
        config: String,
        /// Exit with status 1 when the verdict differs.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Pebbling number with the per-root table.
    Number {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        root: Option<usize>,
    },
    /// Class0, Class1 or Above(k).
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Write an extremal construction and its sidecar `<out>.meta.json`.
    Construct {
        #[command(subcommand)]
        family: Construction,
    },
    #[command(name = "family-f", subcommand)]
    FamilyF(FamilyCommand),
    /// Enumerate isomorphism classes and write one record per line.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        oriented: bool,
        /// Comma-separated: strongly-connected, diameter=K, connectivity=K.
        #[arg(long)]
        filter: Option<String>,
        /// Allow n = 7.
        #[arg(long)]
        long_running: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check one theorem over a census file.
    Verify {
        #[arg(long)]
        records: PathBuf,
        #[arg(long)]
        theorem: String,
    },
}

#[derive(Subcommand)]
enum Construction {
    Mixed2 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    Layered {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Check membership under a labelling `p,q,a,b,c,r`.
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labels: FamilyFLabeling,
    },
    /// Exhaustive member search; one record per member.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Outcome {
    Pass,
    Violation,
}

fn read_graph(path: &Path) -> Result<Digraph, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.into(),
        source: e,
    })?;
    parse_digraph(&text)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    fs::write(path, contents).map_err(|e| Error::Io {
        path: path.into(),
        source: e,
    })
}

/// Ignores write failures so a closed pipe does not abort the process.
fn print_json<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

fn write_construction(c: &ConstructionOutput, out: &Path) -> Result<Outcome, Error> {
    write_file(out, &c.graph.to_graph_file())?;
    let meta = serde_json::to_string(&ConstructionSidecar::from(c)).expect("serializable") + "\n";
    let meta_path = sidecar_path(out);
    write_file(&meta_path, &meta)?;
    println!("wrote {} and {}", out.display(), meta_path.display());
    Ok(Outcome::Pass)
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Solve {
            graph,
            root,
            config,
            expect,
        } => {
            let g = read_graph(&graph)?;
            let config = Configuration::parse_spec(&config, g.n())?;
            let result = is_solvable(&g, &config, root)?;
            print_json(&result);
            let ok = match expect {
                Some(Expect::Solvable) => result.solvable,
                Some(Expect::Unsolvable) => !result.solvable,
                None => true,
            };
            Ok(if ok {
                Outcome::Pass
            } else {
                Outcome::Violation
            })
        }
        Command::Number { graph, root } => {
            let g = read_graph(&graph)?;
            match root {
                Some(r) => {
                    let pi = pebbling_number_rooted(&g, r)?;
                    print_json(&serde_json::json!({ "root": r, "rooted_pi": pi }));
                }
                None => print_json(&pebbling_number(&g)?),
            }
            Ok(Outcome::Pass)
        }
        Command::Classify { graph } => {
            println!("{}", classify(&read_graph(&graph)?)?);
            Ok(Outcome::Pass)
        }
        Command::Construct { family } => match family {
            Construction::Mixed2 { k, out } => write_construction(&build_mixed2(k)?, &out),
            Construction::Layered { d, k, out } => write_construction(&build_layered(d, k)?, &out),
        },
        Command::FamilyF(FamilyCommand::Check { graph, labels }) => {
            let report = check_family_f(&read_graph(&graph)?, &labels)?;
            print_json(&report);
            Ok(if report.member {
                Outcome::Pass
            } else {
                Outcome::Violation
            })
        }
        Command::FamilyF(FamilyCommand::Search { n, limit, out }) => {
            let members = search_family_f(n, limit)?;
            let records = member_records(&members, Default::default())?;
            let text: String = records
                .iter()
                .map(|r| serde_json::to_string(r).expect("serializable") + "\n")
                .collect();
            write_file(&out, &text)?;
            let all_ok = records.iter().all(|r| r.verified());
            println!(
                "{} members on {n} vertices written to {}",
                records.len(),
                out.display()
            );
            Ok(if all_ok {
                Outcome::Pass
            } else {
                Outcome::Violation
            })
        }
        Command::Census {
            n,
            oriented,
            filter,
            long_running,
            out,
        } => {
            let filters = match filter {
                Some(f) => CensusFilter::parse_list(&f)?,
                None => Vec::new(),
            };
            let count = run_census(n, oriented, &filters, long_running, &out)?;
            println!("{count} records written to {}", out.display());
            Ok(Outcome::Pass)
        }
        Command::Verify { records, theorem } => {
            let report = verify_theorem(&records, &theorem)?;
            print_json(&report);
            Ok(if report.pass {
                Outcome::Pass
            } else {
                Outcome::Violation
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e @ Error::BudgetExceeded(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
