//! Certificate runner: checks, classification, and object dumps for the
//! Heawood graph, or for an edge-list override graph (negative controls).
//!
//! Exit codes: 0 when every executed check is VERIFIED (and, for
//! `classify`, the final list is emitted), 1 when a check FAILED, 2 for
//! usage or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use heawood_core::certificates::{CertifyOptions, CheckId, Session};
use heawood_core::graph::{LabelingMap, SimpleGraph};

#[derive(Parser)]
#[command(name = "heawood-cert", version)]
#[command(
    about = "Machine-checks the combinatorics behind the Heawood graph's symmetry classification"
)]
struct Cli {
    /// Verify an edge-list file instead of the built-in Heawood graph
    #[arg(long, global = true, value_name = "FILE")]
    graph: Option<PathBuf>,

    /// Report format for check/all/classify
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Vertex labels used by dump output
    #[arg(long, global = true, value_enum, default_value_t = Labeling::Figure1)]
    labeling: Labeling,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Labeling {
    /// Circular labels 1..14
    Figure1,
    /// Labels 1..12 along a twelve-cycle plus off-cycle vertices v, w
    Derived12,
}

#[derive(Subcommand)]
enum Command {
    /// Run one check (K1..K16)
    Check { id: String },
    /// Run every check and the derivation replay
    All,
    /// Run everything and require a sound final group list
    Classify,
    /// Print computed objects
    Dump {
        #[command(subcommand)]
        what: DumpWhat,
    },
}

#[derive(Subcommand)]
enum DumpWhat {
    /// Canonical cycles of one length, one per line
    Cycles {
        #[arg(long)]
        length: usize,
    },
    /// Automorphism group data
    Group {
        #[command(flatten)]
        table: GroupTable,
    },
    /// The canonical edge list
    Graph,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupTable {
    /// Element-order histogram
    #[arg(long)]
    spectrum: bool,
    /// Conjugacy classes with representatives
    #[arg(long)]
    conjugacy: bool,
    /// Subgroup census summary
    #[arg(long)]
    subgroups: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let graph = match &cli.graph {
        None => SimpleGraph::heawood_standard(),
        Some(path) => {
            let text = match fs::read_to_string(path) {
                Ok(text) => text,
                Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
            };
            match SimpleGraph::from_edge_list_str(&text) {
                Ok(graph) => graph,
                Err(e) => return usage_error(&format!("{}: {e}", path.display())),
            }
        }
    };
    let session = Session::new(graph);

    let labeling = match cli.labeling {
        Labeling::Figure1 => LabelingMap::figure1(session.graph().vertex_count()),
        Labeling::Derived12 => match LabelingMap::derived12(session.graph()) {
            Ok(map) => map,
            Err(e) => return usage_error(&e.to_string()),
        },
    };

    let (output, code) = match &cli.command {
        Command::Check { id } => {
            let id: CheckId = match id.parse() {
                Ok(id) => id,
                Err(e) => return usage_error(&e.to_string()),
            };
            let result = session.run_check(id);
            let text = match cli.format {
                Format::Machine => {
                    let mut s = serde_json::to_string_pretty(&result).expect("serializable");
                    s.push('\n');
                    s
                }
                Format::Text => {
                    let mut s = format!("{}  {}  {}\n", result.id, result.status, result.statement);
                    for (key, value) in &result.witness {
                        s.push_str(&format!("    {key}: {value}\n"));
                    }
                    s
                }
            };
            (
                text,
                if result.verified() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                },
            )
        }
        Command::All => {
            let report = session.run_all(&CertifyOptions::default());
            let text = match cli.format {
                Format::Machine => report.to_machine_string(),
                Format::Text => report.to_text_string(),
            };
            let ok = report.all_verified();
            (
                text,
                if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                },
            )
        }
        Command::Classify => {
            let report = session.run_all(&CertifyOptions::default());
            let text = match cli.format {
                Format::Machine => report.to_machine_string(),
                Format::Text => report.to_text_string(),
            };
            let ok = report.all_verified() && report.final_groups.is_some();
            if !ok {
                eprintln!("classification incomplete: a cited check failed");
            }
            (
                text,
                if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                },
            )
        }
        Command::Dump { what } => match dump(&session, what, &labeling) {
            Ok(text) => (text, ExitCode::SUCCESS),
            Err(message) => return usage_error(&message),
        },
    };

    match &cli.out {
        None => print!("{output}"),
        Some(path) => {
            if let Err(e) = fs::write(path, &output) {
                return usage_error(&format!("cannot write {}: {e}", path.display()));
            }
        }
    }
    code
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    eprintln!("run with --help for usage");
    ExitCode::from(2)
}

fn dump(session: &Session, what: &DumpWhat, labeling: &LabelingMap) -> Result<String, String> {
    match what {
        DumpWhat::Cycles { length } => {
            let cycles = session
                .graph()
                .enumerate_cycles(*length)
                .map_err(|e| e.to_string())?;
            let mut out = String::new();
            for cycle in &cycles {
                out.push_str(&format!("{}\n", cycle.display(labeling)));
            }
            Ok(out)
        }
        DumpWhat::Group { table } => {
            let aut = session.aut();
            let mut out = String::new();
            if table.spectrum {
                for (order, count) in aut.order_spectrum() {
                    out.push_str(&format!("order {order}: {count}\n"));
                }
            } else if table.conjugacy {
                for class in aut.conjugacy_classes() {
                    let rep = &class[0];
                    out.push_str(&format!(
                        "size {} order {} rep {}\n",
                        class.len(),
                        rep.order(),
                        rep.format_cycles(labeling)
                    ));
                }
            } else if table.subgroups {
                let census = session.census().map_err(|e| e.to_string())?;
                let mut counts: Vec<(heawood_core::IsoType, usize, usize)> = Vec::new();
                for record in census {
                    match counts
                        .iter_mut()
                        .find(|(t, o, _)| *t == record.iso_type && *o == record.order)
                    {
                        Some(entry) => entry.2 += 1,
                        None => counts.push((record.iso_type, record.order, 1)),
                    }
                }
                counts.sort_by_key(|&(t, o, _)| (t, o));
                for (iso, order, count) in counts {
                    out.push_str(&format!("{iso} order {order}: {count}\n"));
                }
            }
            Ok(out)
        }
        DumpWhat::Graph => Ok(edge_list_with_labels(session.graph(), labeling)),
    }
}

/// Numeric labels sort numerically, named labels (v, w) after them.
type LabelRank = (u8, usize, String);

fn edge_list_with_labels(graph: &SimpleGraph, labeling: &LabelingMap) -> String {
    let rank = |label: &str| -> LabelRank {
        match label.parse::<usize>() {
            Ok(n) => (0, n, String::new()),
            Err(_) => (1, 0, label.to_string()),
        }
    };
    let mut lines: Vec<(LabelRank, LabelRank, String)> = graph
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (la, lb) = (labeling.label(a).to_string(), labeling.label(b).to_string());
            let (ra, rb) = (rank(&la), rank(&lb));
            if ra <= rb {
                (ra, rb, format!("{la} {lb}\n"))
            } else {
                (rb, ra, format!("{lb} {la}\n"))
            }
        })
        .collect();
    lines.sort();
    lines.into_iter().map(|(_, _, line)| line).collect()
}
