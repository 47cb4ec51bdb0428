use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qfw::field::build_tower;
use qfw::graph::{find_graph_embedding, graph_automorphisms, is_isomorphic, random_ct_tree, Graph};
use qfw::io::{parse_graph, parse_ld_tables, parse_table, write_graph, write_ld, write_table, write_tower};
use qfw::ldmonoid::{check_group, check_ld_monoid, conjugation_ld_monoid, LdError};
use qfw::quandle::{build_quandle, find_quandle_embedding, quandle_automorphisms, quandle_isomorphism};
use qfw::workbench::{self, CampaignReport, ReportFormat};

#[derive(Parser)]
#[command(name = "qfw", version, about = "Graph, quandle and field-tower workbench")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Campaign or generator seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest vertex count in a campaign (default depends on the command).
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Random cases in a campaign (default depends on the command).
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Report format for verify-* commands.
    #[arg(long, global = true, default_value = "text")]
    format: ReportFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Print a random tree without a complete vertex.
    GenTree {
        #[arg(short, long)]
        n: usize,
    },
    /// Print the quandle table of a graph.
    BuildQuandle {
        graph: Option<PathBuf>,
    },
    /// Decide S ⊑ T on the graph side and on the quandle side.
    Embed {
        source: PathBuf,
        target: PathBuf,
    },
    /// Decide S ≅ T on the graph side and on the quandle side.
    Iso {
        source: PathBuf,
        target: PathBuf,
    },
    /// List the automorphisms of Q_T.
    Aut {
        graph: Option<PathBuf>,
    },
    /// Check an `ld n` table pair, or build and check the conjugation LD-monoid of a `g n` table.
    LdCheck {
        table: Option<PathBuf>,
    },
    /// Print the tower presentation of a tree.
    Tower {
        tree: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        root_depth: u32,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    VerifyEmbedding {
        /// Sample graphs without a complete vertex instead of trees.
        #[arg(long)]
        general: bool,
    },
    VerifyIso,
    VerifyAut {
        tree: Option<PathBuf>,
        /// Use the built-in rigid tree on 7 vertices.
        #[arg(long, conflicts_with = "tree")]
        rigid7: bool,
    },
    VerifyField,
}

/// Failures mapped to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, UsageError> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| UsageError(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&PathBuf>) -> Result<Graph, UsageError> {
    let src = read_input(path)?;
    parse_graph(&src).map_err(|e| match path {
        Some(p) => UsageError(format!("{}: {e}", p.display())),
        None => UsageError(format!("<stdin>: {e}")),
    })
}

/// Prints both verdicts; disagreement exits with 1.
fn both_sides(graph: Option<String>, quandle: Option<String>) -> u8 {
    println!("graph    {}", graph.as_deref().map_or("no".to_string(), |m| format!("yes {m}")));
    println!("quandle  {}", quandle.as_deref().map_or("no".to_string(), |m| format!("yes {m}")));
    u8::from(graph.is_some() != quandle.is_some())
}

fn emit(report: CampaignReport, format: ReportFormat) -> u8 {
    print!("{}", report.render(format));
    u8::from(!report.all_agree())
}

fn run(cli: Cli) -> Result<u8, UsageError> {
    let o = cli.opts;
    let max_n = |default| o.max_n.unwrap_or(default);
    let trials = |default| o.trials.unwrap_or(default);
    Ok(match cli.command {
        Command::GenTree { n } => {
            print!("{}", write_graph(&random_ct_tree(n, o.seed)?));
            0
        }
        Command::BuildQuandle { graph } => {
            print!("{}", write_table("q", build_quandle(&read_graph(graph.as_ref())?).table()));
            0
        }
        Command::Embed { source, target } => {
            let (s, t) = (read_graph(Some(&source))?, read_graph(Some(&target))?);
            let f = find_graph_embedding(&s, &t).map(|f| f.to_string());
            let rho = find_quandle_embedding(&build_quandle(&s), &build_quandle(&t)).map(|r| r.to_string());
            both_sides(f, rho)
        }
        Command::Iso { source, target } => {
            let (s, t) = (read_graph(Some(&source))?, read_graph(Some(&target))?);
            let g = is_isomorphic(&s, &t).map(|g| g.to_string());
            let rho = quandle_isomorphism(&build_quandle(&s), &build_quandle(&t)).map(|r| r.to_string());
            both_sides(g, rho)
        }
        Command::Aut { graph } => {
            let g = read_graph(graph.as_ref())?;
            let auts = quandle_automorphisms(&build_quandle(&g));
            println!("|Aut(T)| = {}", graph_automorphisms(&g).len());
            println!("|Aut(Q_T)| = {}", auts.len());
            for rho in auts {
                println!("{rho}");
            }
            0
        }
        Command::LdCheck { table } => {
            let src = read_input(table.as_ref())?;
            let is_group = src.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
            let (comp, star) = if is_group.is_some_and(|l| l.starts_with("g ")) {
                let g = parse_table(&src, "g")?;
                match conjugation_ld_monoid(&g) {
                    Ok(m) => {
                        print!("{}", write_ld(&m));
                        (m.comp().clone(), m.star().clone())
                    }
                    Err(LdError::NotAGroup(v)) => {
                        println!("not a group: {v}");
                        return Ok(1);
                    }
                    Err(e) => return Err(e.into()),
                }
            } else {
                let (comp, star) = parse_ld_tables(&src)?;
                if let Err(v) = check_group(&comp) {
                    println!("note: composition table is not a group ({v})");
                }
                (comp, star)
            };
            match check_ld_monoid(&comp, &star) {
                Ok(()) => {
                    println!("sigma holds");
                    0
                }
                Err(v) => {
                    println!("sigma fails: {v}");
                    1
                }
            }
        }
        Command::Tower { tree, depth, root_depth, characteristic } => {
            let t = read_graph(tree.as_ref())?;
            print!("{}", write_tower(&build_tower(&t, depth, root_depth, characteristic)?));
            0
        }
        Command::VerifyEmbedding { general } => {
            let report = if general {
                workbench::explore_embedding_general(max_n(6), trials(200), o.seed)?
            } else {
                workbench::verify_embedding_theorem(max_n(5), trials(200), o.seed)?
            };
            emit(report, o.format)
        }
        Command::VerifyIso => emit(workbench::verify_iso_theorem(max_n(4), trials(200), o.seed)?, o.format),
        Command::VerifyAut { tree, rigid7 } => {
            let t = if rigid7 { Graph::rigid_seven() } else { read_graph(tree.as_ref())? };
            emit(workbench::verify_aut_structure(&t)?, o.format)
        }
        Command::VerifyField => emit(workbench::verify_field_layer(max_n(6), trials(50), o.seed)?, o.format),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
