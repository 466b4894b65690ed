//! `neutro` — command-line front end for the set library: evaluate `.ns`
//! scripts, poke at sets interactively, or classify a single record.

use std::io::{BufRead, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use neutrosophic::dsl::{self, Diagnostic, Evaluator, Output, Value};
use neutrosophic::{classify_triple, NeutroTriple};

#[derive(Parser)]
#[command(name = "neutro", version, about = "Work with sets whose elements carry membership, indeterminacy and non-membership components")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a script file and print each statement's result.
    Eval {
        /// Path to the script (conventionally *.ns).
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Reject literals outside the unit range instead of clamping them.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        strict_literals: bool,
    },
    /// Read statements interactively, one per line; 'exit' quits.
    Repl {
        /// Reject literals outside the unit range instead of clamping them.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        strict_literals: bool,
    },
    /// Classify a single record given its three component literals.
    Classify {
        /// Membership component, e.g. '0.5' or '[0.20,0.30]'.
        t: String,
        /// Indeterminacy component, e.g. '[0.40,0.45]|[0.50,0.51]'.
        i: String,
        /// Non-membership component, e.g. '{0.20,0.24,0.28}'.
        f: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Reject literals outside the unit range instead of clamping them.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        strict_literals: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Eval { input, format, strict_literals } => run_eval(&input, format, strict_literals),
        Command::Repl { strict_literals } => run_repl(strict_literals),
        Command::Classify { t, i, f, format, strict_literals } => {
            run_classify(&t, &i, &f, format, strict_literals)
        }
    }
}

fn report(file: &str, diag: &Diagnostic) {
    eprintln!("{file}:{diag}");
}

fn run_eval(path: &PathBuf, format: Format, strict: bool) -> ExitCode {
    let file = path.display().to_string();
    let source = match std::fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{file}: {e}");
            return ExitCode::from(2);
        }
    };
    let script = match dsl::parse_script(&source) {
        Ok(s) => s,
        Err(diag) => {
            report(&file, &diag);
            return ExitCode::from(1);
        }
    };
    let mut evaluator = Evaluator::new(strict);
    let outputs = match evaluator.eval_script(&script) {
        Ok(outputs) => outputs,
        Err(diag) => {
            for warning in evaluator.take_warnings() {
                report(&file, &warning);
            }
            report(&file, &diag);
            return ExitCode::from(2);
        }
    };
    for warning in evaluator.take_warnings() {
        report(&file, &warning);
    }
    match format {
        Format::Table => print!("{}", render_table(&outputs)),
        Format::Json => println!("{}", render_json(&outputs)),
    }
    ExitCode::SUCCESS
}

fn run_repl(strict: bool) -> ExitCode {
    let stdin = std::io::stdin();
    let interactive = stdin.is_terminal();
    let mut evaluator = Evaluator::new(strict);
    let mut session_line: u32 = 0;

    loop {
        if interactive {
            print!("ns> ");
            let _ = std::io::stdout().flush();
        }
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) | Err(_) => break,
            Ok(_) => {}
        }
        session_line += 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "exit" {
            break;
        }
        let script = match dsl::parse_script(trimmed) {
            Ok(s) => s,
            Err(diag) => {
                report_repl(session_line, &diag);
                continue;
            }
        };
        match evaluator.eval_script(&script) {
            Ok(outputs) => {
                for warning in evaluator.take_warnings() {
                    report_repl(session_line, &warning);
                }
                for output in outputs {
                    println!("{}", dsl::format_value(&output.value));
                }
            }
            Err(diag) => {
                for warning in evaluator.take_warnings() {
                    report_repl(session_line, &warning);
                }
                report_repl(session_line, &diag);
            }
        }
    }
    ExitCode::SUCCESS
}

fn report_repl(session_line: u32, diag: &Diagnostic) {
    // single-line inputs: the session line replaces the parser's line 1
    let mut diag = diag.clone();
    diag.line = session_line;
    report("repl", &diag);
}

fn run_classify(t: &str, i: &str, f: &str, format: Format, strict: bool) -> ExitCode {
    let mut components = Vec::with_capacity(3);
    for (slot, src) in [("T", t), ("I", i), ("F", f)] {
        match dsl::parse_component(src, strict) {
            Ok(u) => components.push(u),
            Err(diag) => {
                report(slot, &diag);
                return ExitCode::from(1);
            }
        }
    }
    let f_comp = components.pop().expect("three components");
    let i_comp = components.pop().expect("three components");
    let t_comp = components.pop().expect("three components");
    let triple = NeutroTriple::strict(t_comp, i_comp, f_comp)
        .expect("components already range-checked or clamped");
    let classification = classify_triple(&triple);
    match format {
        Format::Table => println!("{classification}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&classification).expect("classification serializes")
        ),
    }
    ExitCode::SUCCESS
}

fn value_kind(value: &Value) -> &'static str {
    match value {
        Value::Set(_) => "set",
        Value::Product(_) => "product",
        Value::Bool(_) => "bool",
        Value::Classification(_) => "classification",
    }
}

fn render_table(outputs: &[Output]) -> String {
    if outputs.is_empty() {
        return String::new();
    }
    let rows: Vec<(String, String, String)> = outputs
        .iter()
        .map(|o| (o.line.to_string(), value_kind(&o.value).to_string(), dsl::format_value(&o.value)))
        .collect();
    let w0 = rows.iter().map(|r| r.0.len()).chain(["line".len()]).max().unwrap();
    let w1 = rows.iter().map(|r| r.1.len()).chain(["kind".len()]).max().unwrap();
    let mut out = format!("{:<w0$}  {:<w1$}  result\n", "line", "kind");
    for (line, kind, result) in rows {
        out.push_str(&format!("{line:<w0$}  {kind:<w1$}  {result}\n"));
    }
    out
}

fn render_json(outputs: &[Output]) -> String {
    let values: Vec<serde_json::Value> = outputs
        .iter()
        .map(|o| {
            let value = match &o.value {
                Value::Set(s) => serde_json::to_value(s).expect("set serializes"),
                Value::Bool(b) => serde_json::Value::Bool(*b),
                Value::Classification(c) => serde_json::to_value(c).expect("classification serializes"),
                Value::Product(p) => {
                    let tuples: Vec<serde_json::Value> = p
                        .tuples()
                        .into_iter()
                        .map(|(names, triples)| {
                            serde_json::json!({
                                "names": names,
                                "triples": triples,
                            })
                        })
                        .collect();
                    serde_json::json!({
                        "domains": p.factors().iter().map(|s| s.universe()).collect::<Vec<_>>(),
                        "tuples": tuples,
                    })
                }
            };
            serde_json::json!({
                "line": o.line,
                "kind": value_kind(&o.value),
                "value": value,
            })
        })
        .collect();
    serde_json::to_string_pretty(&values).expect("results serialize")
}
