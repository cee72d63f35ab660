mod commands;
mod corpus;
mod report;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use report::{error_json, CliError, Report};

/// Exact algebra of bivariate linear partial differential operators.
///
/// Operators are written with Dx, Dy, x, y, integers, + - * / ^ and
/// parentheses; `*` is composition. When the operator argument is omitted it
/// is read from standard input.
#[derive(Parser)]
#[command(name = "lpdo", version)]
struct Cli {
    /// Print a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an operator and print it in canonical form
    Echo { operator: Option<String> },
    /// Compose operators left to right
    Compose {
        #[arg(required = true)]
        operators: Vec<String>,
    },
    /// Principal symbol
    Symbol { operator: Option<String> },
    /// Generating invariants q, I1..I5 of a hyperbolic third-order operator
    Invariants { operator: Option<String> },
    /// Conjugate by a nonzero function g: g^-1 * L * g
    Gauge {
        #[arg(long = "g")]
        g: String,
        operator: Option<String>,
    },
    /// Divide by a first-order factor on the left
    DivideLeft {
        #[arg(long)]
        left: String,
        operator: Option<String>,
    },
    /// Divide by a first-order factor on the right
    DivideRight {
        #[arg(long)]
        right: String,
        operator: Option<String>,
    },
    /// Evaluate the invariant conditions of the twelve factorization types
    Types {
        #[arg(long = "type")]
        ftype: Option<String>,
        operator: Option<String>,
    },
    /// Build F1 * T * F2 from a left factor F1 and a right factor F2
    Triple {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        operator: Option<String>,
    },
    /// Factor a second-order operator whose symbol is the product of the
    /// symbols of --left and --right
    Order2Factor {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        operator: Option<String>,
    },
    /// Check complete reducibility by the given right factors
    Reducible {
        #[arg(long)]
        right: Vec<String>,
        operator: Option<String>,
    },
    /// Evaluate the complete-reducibility group conditions
    Groups {
        #[arg(long)]
        group: Option<String>,
        operator: Option<String>,
    },
    /// Run the built-in corpus of worked examples
    Examples,
}

fn input(arg: Option<String>) -> Result<String, CliError> {
    if let Some(s) = arg {
        return Ok(s);
    }
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
    let s = buf.trim();
    if s.is_empty() {
        return Err(CliError::Usage("no operator given".into()));
    }
    Ok(s.to_string())
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Echo { .. } => "echo",
        Command::Compose { .. } => "compose",
        Command::Symbol { .. } => "symbol",
        Command::Invariants { .. } => "invariants",
        Command::Gauge { .. } => "gauge",
        Command::DivideLeft { .. } => "divide-left",
        Command::DivideRight { .. } => "divide-right",
        Command::Types { .. } => "types",
        Command::Triple { .. } => "triple",
        Command::Order2Factor { .. } => "order2-factor",
        Command::Reducible { .. } => "reducible",
        Command::Groups { .. } => "groups",
        Command::Examples => "examples",
    }
}

fn run(c: Command, raw: &mut Value) -> Result<Report, CliError> {
    use commands as cmd;
    let mut read = |arg: Option<String>| -> Result<String, CliError> {
        let s = input(arg)?;
        *raw = Value::String(s.clone());
        Ok(s)
    };
    match c {
        Command::Echo { operator } => cmd::echo(&read(operator)?),
        Command::Compose { operators } => {
            *raw = operators.clone().into();
            cmd::compose(&operators)
        }
        Command::Symbol { operator } => cmd::symbol(&read(operator)?),
        Command::Invariants { operator } => cmd::invariants(&read(operator)?),
        Command::Gauge { g, operator } => cmd::gauge(&read(operator)?, &g),
        Command::DivideLeft { left, operator } => cmd::divide(&read(operator)?, &left, true),
        Command::DivideRight { right, operator } => cmd::divide(&read(operator)?, &right, false),
        Command::Types { ftype, operator } => cmd::types(&read(operator)?, ftype.as_deref()),
        Command::Triple {
            left,
            right,
            operator,
        } => cmd::triple(&read(operator)?, &left, &right),
        Command::Order2Factor {
            left,
            right,
            operator,
        } => cmd::order2_factor(&read(operator)?, &left, &right),
        Command::Reducible { right, operator } => cmd::reducible(&read(operator)?, &right),
        Command::Groups { group, operator } => cmd::groups(&read(operator)?, group.as_deref()),
        Command::Examples => Ok(corpus::report()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = name(&cli.command);
    let mut raw = Value::Null;
    match run(cli.command, &mut raw) {
        Ok(r) => {
            if cli.json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.to_text());
            }
            ExitCode::from(r.exit as u8)
        }
        Err(e) => {
            if cli.json {
                println!("{}", error_json(command, &raw, &e));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit() as u8)
        }
    }
}
