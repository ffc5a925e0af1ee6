//! Command-line front end: translate automata to clause sets and back,
//! decide satisfiability and emptiness, check models, and generate seeded
//! corpora. Verdicts travel through the exit code: 0 for a positive
//! verdict, 1 for a negative one (unsatisfiable or empty), 2 for input
//! errors, 3 when a round trip disagrees with itself.

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bnftree::automata::{find_accepting_run_bounded, is_empty, validate_automaton};
use bnftree::bnf::renormalize;
use bnftree::corpus;
use bnftree::encode::{
    characteristic_clause_set, characteristic_clause_set_with_labels, LabelMap, TranMode,
};
use bnftree::model::check_clause_set;
use bnftree::tableau::{augment, build_tableau, extract_automaton};
use bnftree::text;

#[derive(Parser)]
#[command(name = "bnftree", version, about = "clausal normal form and tree automata toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TranModeArg {
    Successor,
    Positional,
}

impl From<TranModeArg> for TranMode {
    fn from(m: TranModeArg) -> TranMode {
        match m {
            TranModeArg::Successor => TranMode::Successor,
            TranModeArg::Positional => TranMode::Positional,
        }
    }
}

#[derive(Args)]
struct EncodeOpts {
    /// How transition tuples become indexed step clauses.
    #[arg(long = "tran-mode", value_enum, default_value = "successor")]
    tran_mode: TranModeArg,
    /// Labels file (`state : p q` per line) overriding the derived labels.
    #[arg(long)]
    labels: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Translate an automaton document into its characteristic clause set.
    A2bnf {
        #[command(flatten)]
        opts: EncodeOpts,
        /// Automaton document path, `-` for stdin.
        input: String,
    },
    /// Decide a clause document and print the extracted automaton.
    Bnf2a {
        /// Write the reduced tableau listing to stderr.
        #[arg(long = "dump-tableau")]
        dump_tableau: bool,
        /// Clause document path, `-` for stdin.
        input: String,
    },
    /// Decide satisfiability of a clause document.
    Sat {
        #[arg(long = "dump-tableau")]
        dump_tableau: bool,
        /// Also search for a model with at most this many states and print it.
        #[arg(long = "max-model-states", default_value_t = 0)]
        max_model_states: usize,
        input: String,
    },
    /// Decide language emptiness of an automaton document.
    Empty {
        input: String,
    },
    /// Check a model document against a clause document.
    Mc {
        model: String,
        clauses: String,
    },
    /// Automaton -> clauses -> automaton, reporting every verdict.
    Roundtrip {
        #[command(flatten)]
        opts: EncodeOpts,
        #[arg(long = "dump-tableau")]
        dump_tableau: bool,
        input: String,
    },
    /// Print a seeded random corpus of documents.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// Arbitrary automata, up to four states.
    Automata,
    /// Automata in the translation-faithful class.
    Encodable,
    /// Clause sets, up to eight clauses.
    Clauses,
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn fail(message: String) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn load_automaton(path: &str) -> Result<bnftree::automata::BuchiTreeAutomaton, String> {
    let text = read_input(path)?;
    let a = text::parse_automaton(&text).map_err(|e| e.to_string())?;
    let report = validate_automaton(&a);
    if !report.is_clean() {
        return Err(format!("invalid automaton:\n{report}"));
    }
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    Ok(a)
}

fn encode(
    a: &bnftree::automata::BuchiTreeAutomaton,
    opts: &EncodeOpts,
) -> Result<bnftree::encode::Encoded, String> {
    let mode = TranMode::from(opts.tran_mode);
    match &opts.labels {
        None => characteristic_clause_set(a, mode).map_err(|e| e.to_string()),
        Some(path) => {
            let text = read_input(path)?;
            let positive: BTreeMap<_, _> =
                text::parse_label_file(&text).map_err(|e| e.to_string())?;
            let labels = LabelMap::from_positive_parts(a, &positive).map_err(|e| e.to_string())?;
            characteristic_clause_set_with_labels(a, mode, labels).map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::A2bnf { opts, input } => {
            let a = match load_automaton(&input) {
                Ok(a) => a,
                Err(e) => return fail(e),
            };
            match encode(&a, &opts) {
                Ok(encoded) => {
                    print!("{}", text::print_clauses(&encoded.clauses));
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Command::Bnf2a { dump_tableau, input } => {
            let source = match read_input(&input) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let cs = match text::parse_clauses(&source) {
                Ok(cs) => cs,
                Err(e) => return fail(e.to_string()),
            };
            let aug = augment(&renormalize(&cs));
            let reduced = build_tableau(&aug.clauses).reduce();
            if dump_tableau {
                eprint!("{}", reduced.dump());
            }
            if reduced.initial_states().is_empty() {
                if reduced.is_empty() {
                    println!("unsatisfiable (empty reduced tableau)");
                } else {
                    println!("unsatisfiable (no state satisfies the initial clauses)");
                }
                return ExitCode::from(1);
            }
            match extract_automaton(&reduced, &aug.clauses) {
                Ok(a) => {
                    println!("satisfiable");
                    print!("{}", text::print_automaton(&a));
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e.to_string()),
            }
        }
        Command::Sat { dump_tableau, max_model_states, input } => {
            let source = match read_input(&input) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let cs = match text::parse_clauses(&source) {
                Ok(cs) => cs,
                Err(e) => return fail(e.to_string()),
            };
            let aug = augment(&renormalize(&cs));
            let reduced = build_tableau(&aug.clauses).reduce();
            if dump_tableau {
                eprint!("{}", reduced.dump());
            }
            let sat = !reduced.initial_states().is_empty();
            println!("{}", if sat { "satisfiable" } else { "unsatisfiable" });
            if max_model_states > 0 {
                match bnftree::model::enumerate_models(&cs, max_model_states) {
                    Ok(Some(m)) => {
                        println!("model with {} state(s):", m.state_count());
                        print!("{}", text::print_model(&m));
                    }
                    Ok(None) => println!("no model within {max_model_states} state(s)"),
                    Err(e) => println!("model search gave up: {e}"),
                }
            }
            if sat {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Empty { input } => {
            let a = match load_automaton(&input) {
                Ok(a) => a,
                Err(e) => return fail(e),
            };
            if is_empty(&a) {
                println!("empty");
                ExitCode::from(1)
            } else {
                println!("non-empty");
                match find_accepting_run_bounded(&a, 2 * a.state_count().max(1)) {
                    Some(run) => print!("{run}"),
                    None => println!("(no lasso witness within the default bound)"),
                }
                ExitCode::SUCCESS
            }
        }
        Command::Mc { model, clauses } => {
            let model_text = match read_input(&model) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let m = match text::parse_model(&model_text) {
                Ok(m) => m,
                Err(e) => return fail(e.to_string()),
            };
            let report = m.validate();
            if !report.is_clean() {
                return fail(format!("invalid model:\n{report}"));
            }
            let clause_text = match read_input(&clauses) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let cs = match text::parse_clauses(&clause_text) {
                Ok(cs) => cs,
                Err(e) => return fail(e.to_string()),
            };
            match check_clause_set(&m, &cs) {
                Ok(true) => {
                    println!("holds");
                    ExitCode::SUCCESS
                }
                Ok(false) => {
                    println!("fails");
                    ExitCode::from(1)
                }
                Err(e) => fail(e.to_string()),
            }
        }
        Command::Roundtrip { opts, dump_tableau, input } => {
            let a = match load_automaton(&input) {
                Ok(a) => a,
                Err(e) => return fail(e),
            };
            let input_empty = is_empty(&a);
            println!("input: {}", if input_empty { "empty" } else { "non-empty" });
            let encoded = match encode(&a, &opts) {
                Ok(e) => e,
                Err(e) => return fail(e),
            };
            let aug = augment(&encoded.clauses);
            let reduced = build_tableau(&aug.clauses).reduce();
            if dump_tableau {
                eprint!("{}", reduced.dump());
            }
            let sat = !reduced.initial_states().is_empty();
            println!("clauses: {}", if sat { "satisfiable" } else { "unsatisfiable" });
            let output_empty = if sat {
                match extract_automaton(&reduced, &aug.clauses) {
                    Ok(back) => is_empty(&back),
                    Err(e) => return fail(e.to_string()),
                }
            } else {
                true
            };
            println!("output: {}", if output_empty { "empty" } else { "non-empty" });
            let agree = input_empty == !sat && input_empty == output_empty;
            println!("agreement: {}", if agree { "yes" } else { "no" });
            if !agree {
                ExitCode::from(3)
            } else if input_empty {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Gen { kind, seed, count } => {
            let mut r = corpus::rng(seed);
            for i in 0..count {
                if i > 0 {
                    println!("---");
                }
                match kind {
                    GenKind::Automata => {
                        print!("{}", text::print_automaton(&corpus::random_automaton(&mut r, 4)));
                    }
                    GenKind::Encodable => {
                        print!(
                            "{}",
                            text::print_automaton(&corpus::random_encodable_automaton(&mut r))
                        );
                    }
                    GenKind::Clauses => {
                        print!("{}", text::print_clauses(&corpus::random_clause_set(&mut r, 8)));
                    }
                }
            }
            ExitCode::SUCCESS
        }
    }
}
