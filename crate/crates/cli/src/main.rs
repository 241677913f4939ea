use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fpncw::format::{self, Model};
use fpncw::net::DEFAULT_REACHABILITY_BUDGET;
use fpncw::{dot, extend, facw_to_fpncw, fpncw_to_facw, Fpn, Fpncw, RuleBase, WordString};

#[derive(Parser)]
#[command(name = "fpncw", version, about = "Fuzzy Petri nets for computing with words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a model file and report structural violations.
    Validate { model: PathBuf },
    /// Fire one transition.
    Fire {
        net: PathBuf,
        /// Marking to fire from, e.g. "[0.9, 1, 0, 0, 0]". Defaults to m0.
        #[arg(short, long)]
        marking: Option<String>,
        #[arg(short, long)]
        transition: String,
    },
    /// Fire a whitespace-separated transition sequence.
    Run {
        net: PathBuf,
        #[arg(short, long)]
        marking: Option<String>,
        #[arg(short, long)]
        sequence: String,
    },
    /// List the markings reachable from m0 in discovery order.
    Reach {
        net: PathBuf,
        #[arg(long, default_value_t = DEFAULT_REACHABILITY_BUDGET)]
        budget: usize,
    },
    /// Degree to which a word string is accepted.
    Accept {
        model: PathBuf,
        #[arg(short, long)]
        words: String,
    },
    /// Tabulate the language up to a string length.
    Table {
        model: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Print the rule base of a labeled net.
    Rules { net: PathBuf },
    /// Extend a labeled net with new words.
    Extend {
        net: PathBuf,
        words: PathBuf,
        #[command(flatten)]
        out: Output,
        /// Print the provenance of each synthesized transition.
        #[arg(long)]
        explain: bool,
    },
    /// Convert between labeled nets and automata.
    Convert {
        model: PathBuf,
        #[arg(long, conflicts_with = "to_fpncw", required_unless_present = "to_fpncw")]
        to_facw: bool,
        #[arg(long)]
        to_fpncw: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Render a model as Graphviz DOT.
    ExportDot { model: PathBuf },
}

#[derive(Args)]
struct Output {
    /// Write the result here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

type CliResult<T> = Result<T, String>;

fn load(path: &Path) -> CliResult<Model> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    format::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn net_of(model: &Model) -> CliResult<&Fpn> {
    match model {
        Model::Fpn(n) => Ok(n),
        Model::WeightedFpn(w) => Ok(w.net()),
        Model::Fpncw(n) => Ok(n.net()),
        Model::Fpncmw(e) => Ok(e.net().net()),
        other => Err(format!("expected a net, found kind `{}`", other.kind())),
    }
}

fn labeled_of(model: &Model) -> CliResult<&Fpncw> {
    match model {
        Model::Fpncw(n) => Ok(n),
        Model::Fpncmw(e) => Ok(e.net()),
        other => Err(format!("expected a labeled net, found kind `{}`", other.kind())),
    }
}

fn emit(out: &Output, text: &str) -> CliResult<()> {
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Validate { model } => {
            let model = load(&model)?;
            let violations = match &model {
                Model::WeightedFpn(w) => w.validate(),
                Model::Facw(_) | Model::Words(_) => Vec::new(),
                other => net_of(other)?.validate(),
            };
            if violations.is_empty() {
                println!("ok");
                Ok(())
            } else {
                for v in &violations {
                    println!("{v}");
                }
                Err(format!("{} violation(s)", violations.len()))
            }
        }
        Command::Fire {
            net,
            marking,
            transition,
        } => {
            let model = load(&net)?;
            let net = net_of(&model)?;
            let m = match marking {
                Some(text) => net.parse_marking(&text).map_err(err)?,
                None => net.initial_marking().clone(),
            };
            let t = net.transition_id(&transition).map_err(err)?;
            let next = match &model {
                Model::WeightedFpn(w) => w.fire(&m, t),
                _ => net.fire(&m, t),
            }
            .map_err(err)?;
            println!("{next}");
            Ok(())
        }
        Command::Run {
            net,
            marking,
            sequence,
        } => {
            let model = load(&net)?;
            let net = net_of(&model)?;
            let m = match marking {
                Some(text) => net.parse_marking(&text).map_err(err)?,
                None => net.initial_marking().clone(),
            };
            let seq = net.parse_sequence(&sequence).map_err(err)?;
            match net.fire_seq(&m, &seq).map_err(err)? {
                Some(end) => println!("{end}"),
                None => println!("undefined"),
            }
            Ok(())
        }
        Command::Reach { net, budget } => {
            let model = load(&net)?;
            let graph = net_of(&model)?.reachability_graph(budget).map_err(err)?;
            for m in &graph.markings {
                println!("{m}");
            }
            Ok(())
        }
        Command::Accept { model, words } => {
            let model = load(&model)?;
            let s = WordString::parse(&words);
            let d = match &model {
                Model::Facw(m) => m.accept(&s),
                other => labeled_of(other)?.accept(&s),
            }
            .map_err(err)?;
            println!("{d}");
            Ok(())
        }
        Command::Table { model, max_len } => {
            let model = load(&model)?;
            let table = match &model {
                Model::Facw(m) => m.language_table(max_len),
                other => labeled_of(other)?.language_table(max_len),
            };
            for (s, d) in table {
                println!("{s}\t{d}");
            }
            Ok(())
        }
        Command::Rules { net } => {
            let model = load(&net)?;
            print!("{}", RuleBase::from_net(labeled_of(&model)?));
            Ok(())
        }
        Command::Extend {
            net,
            words,
            out,
            explain,
        } => {
            let model = load(&net)?;
            let n = labeled_of(&model)?;
            let new_words = match load(&words)? {
                Model::Words(a) => a,
                other => return Err(format!("expected kind `words`, found `{}`", other.kind())),
            };
            let extended = extend(n, new_words.words()).map_err(err)?;
            if explain {
                let text = extended.explanation();
                if out.output.is_some() {
                    print!("{text}");
                } else {
                    eprint!("{text}");
                }
            }
            emit(&out, &format::serialize(&Model::Fpncmw(extended)))
        }
        Command::Convert {
            model,
            to_facw,
            to_fpncw: _,
            out,
        } => {
            let model = load(&model)?;
            let converted = if to_facw {
                Model::Facw(fpncw_to_facw(labeled_of(&model)?).map_err(err)?)
            } else {
                match &model {
                    Model::Facw(m) => Model::Fpncw(facw_to_fpncw(m).map_err(err)?),
                    other => {
                        return Err(format!("expected kind `facw`, found `{}`", other.kind()))
                    }
                }
            };
            emit(&out, &format::serialize(&converted))
        }
        Command::ExportDot { model } => {
            let model = load(&model)?;
            let text = match &model {
                Model::Facw(m) => dot::facw_to_dot(m),
                Model::Fpncw(_) | Model::Fpncmw(_) => dot::fpncw_to_dot(labeled_of(&model)?),
                Model::Words(_) => return Err("kind `words` has no graph".to_string()),
                other => dot::fpn_to_dot(net_of(other)?),
            };
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
