//! Command-line driver.
//!
//! Exit status: 0 success, 1 unreadable or unparsable input, 2 scope
//! errors found by `let check`, 3 fuel exhausted, 4 any other rewrite
//! failure, 64 bad command line.
//!
//! Input is source text, or an exported AST when the first non-blank
//! character is `{`.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::letlang::{self, Root};
use crate::smells::{self, MExp};
use crate::strategies::{Fuel, Schedule, StrategyError};
use crate::zipper::{to_zipper, Dyn, Language, Term};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_SCOPE: u8 = 2;
pub const EXIT_FUEL: u8 = 3;
pub const EXIT_REWRITE: u8 = 4;
pub const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(name = "zipstrat", version, about = "Strategic rewriting and attribute grammars over zippers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Debug, Args)]
struct Opts {
    /// Input file, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    input: PathBuf,
    /// Traversal scheme for rewriting.
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Innermost)]
    strategy: StrategyArg,
    /// Maximum number of rewrites.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    fuel: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Innermost,
    Outermost,
    FullTd,
    FullBu,
}

impl From<StrategyArg> for Schedule {
    fn from(s: StrategyArg) -> Schedule {
        match s {
            StrategyArg::Innermost => Schedule::Innermost,
            StrategyArg::Outermost => Schedule::Outermost,
            StrategyArg::FullTd => Schedule::FullTd,
            StrategyArg::FullBu => Schedule::FullBu,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Ast,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Programs in the Let language.
    Let {
        #[command(subcommand)]
        action: LetAction,
    },
    /// Expressions in the smell-elimination language.
    Smell {
        #[command(subcommand)]
        action: SmellAction,
    },
}

#[derive(Debug, Subcommand)]
enum LetAction {
    /// Declared names, one per line, in source order.
    Names,
    /// Scope errors, one per line.
    Check,
    /// Optimized program.
    Opt,
    /// Canonical layout.
    Pretty,
}

#[derive(Debug, Subcommand)]
enum SmellAction {
    /// Expression with all smells eliminated.
    Fix,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<StrategyError> for Failure {
    fn from(e: StrategyError) -> Failure {
        let code = match e {
            StrategyError::FuelExhausted { .. } => EXIT_FUEL,
            _ => EXIT_REWRITE,
        };
        Failure::new(code, e.to_string())
    }
}

/// Runs the driver on `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let (out, code): (&mut dyn Write, u8) = if e.use_stderr() {
                (stderr, EXIT_USAGE)
            } else {
                (stdout, EXIT_OK)
            };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let mut text = String::new();
    let code = match execute(&cli, stdin, &mut text) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            return f.code;
        }
    };
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        let _ = writeln!(stderr, "error: cannot write output");
        return EXIT_INPUT;
    }
    code
}

fn read_input(opts: &Opts, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if opts.input.as_os_str() == "-" {
        stdin.read_to_string(&mut text).map(|_| text)
    } else {
        fs::read_to_string(&opts.input)
    };
    result.map_err(|e| Failure::new(EXIT_INPUT, format!("cannot read {}: {e}", opts.input.display())))
}

fn is_ast(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn import<T: Term>(lang: &Language, text: &str) -> Result<T, Failure> {
    let d = lang
        .import_json(text)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("invalid AST: {e}")))?;
    d.cast::<T>().ok_or_else(|| {
        Failure::new(
            EXIT_INPUT,
            format!("invalid AST: expected a {} at the root, found {}", T::TYPE_NAME, d.type_name()),
        )
    })
}

fn read_let(opts: &Opts, stdin: &mut dyn Read) -> Result<Root, Failure> {
    let text = read_input(opts, stdin)?;
    if is_ast(&text) {
        import(&letlang::language(), &text)
    } else {
        letlang::parse(&text).map_err(|e| Failure::new(EXIT_INPUT, e.to_string()))
    }
}

fn read_smell(opts: &Opts, stdin: &mut dyn Read) -> Result<MExp, Failure> {
    let text = read_input(opts, stdin)?;
    if is_ast(&text) {
        import(&smells::language(), &text)
    } else {
        smells::parse_m(&text).map_err(|e| Failure::new(EXIT_INPUT, e.to_string()))
    }
}

fn emit(out: &mut String, format: OutputArg, lang: &Language, tree: &Dyn, text: impl FnOnce() -> String) {
    match format {
        OutputArg::Text => out.push_str(&text()),
        OutputArg::Ast => out.push_str(&lang.export_json(tree)),
    }
    out.push('\n');
}

fn lines(out: &mut String, items: &[String]) {
    for item in items {
        out.push_str(item);
        out.push('\n');
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut String) -> Result<u8, Failure> {
    let opts = &cli.opts;
    let fuel = Fuel::limit(opts.fuel);
    match &cli.command {
        Command::Let { action } => {
            let root = read_let(opts, stdin)?;
            match action {
                LetAction::Names => {
                    lines(out, &letlang::names(&to_zipper(&root))?);
                    Ok(EXIT_OK)
                }
                LetAction::Check => {
                    let errs = letlang::errors_strat(&to_zipper(&root))?;
                    lines(out, &errs);
                    Ok(if errs.is_empty() { EXIT_OK } else { EXIT_SCOPE })
                }
                LetAction::Opt => {
                    let done = letlang::optimize(&root, opts.strategy.into(), fuel)?;
                    emit(out, opts.output, &letlang::language(), &done.to_dyn(), || letlang::pretty(&done));
                    Ok(EXIT_OK)
                }
                LetAction::Pretty => {
                    emit(out, opts.output, &letlang::language(), &root.to_dyn(), || letlang::pretty(&root));
                    Ok(EXIT_OK)
                }
            }
        }
        Command::Smell {
            action: SmellAction::Fix,
        } => {
            let e = read_smell(opts, stdin)?;
            let done = smells::fix(&e, opts.strategy.into(), fuel)?;
            emit(out, opts.output, &smells::language(), &done.to_dyn(), || smells::pretty_m(&done));
            Ok(EXIT_OK)
        }
    }
}
