//! `gradarg` command-line front end.

mod commands;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gradarg::ranking::TripleScope;
use gradarg::{Mode, Semantics};

use crate::commands::Report;

#[derive(Parser, Debug)]
#[command(name = "gradarg", version, about = "Graded argumentation solver")]
struct Cli {
    /// Framework file format. `auto` picks apx when the input starts with `arg(`.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded extensions of a framework.
    Solve(SolveArgs),
    /// Contextual or absolute ranking of the arguments of a framework.
    Rank(RankArgs),
    /// Run the postulate checkers and compare with the expected verdicts.
    Postulates(PostulateArgs),
    /// Defeat graphs and inference over a stratified knowledge base.
    Instantiate(InstantiateArgs),
}

#[derive(Args, Debug)]
struct Grades {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    l: u32,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Framework file; stdin when absent or `-`.
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    semantics: SemanticsArg,
    #[command(flatten)]
    grades: Grades,
    /// Also report the credulously or sceptically justified arguments.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("kind").required(true).args(["contextual", "absolute"]))]
struct RankArgs {
    input: Option<PathBuf>,
    /// Rank by iterated defense from this context: comma-separated labels, `""` for none.
    #[arg(long, value_name = "SET")]
    contextual: Option<String>,
    /// Rank by justification over all grade triples; needs `--semantics`.
    #[arg(long, requires = "semantics")]
    absolute: bool,
    #[arg(long, value_enum)]
    semantics: Option<SemanticsArg>,
    #[arg(long, value_enum, default_value_t = ScopeArg::All)]
    scope: ScopeArg,
}

#[derive(Args, Debug)]
struct PostulateArgs {
    /// Number of random frameworks added to the fixtures.
    #[arg(long, default_value_t = 50)]
    corpus: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = ScopeArg::All)]
    scope: ScopeArg,
}

#[derive(Args, Debug)]
struct InstantiateArgs {
    /// Knowledge base file, `-` for stdin.
    #[arg(long)]
    kb: PathBuf,
    #[arg(long, value_enum)]
    emit: Emit,
    /// Formula to test with `--emit infer`.
    #[arg(long, required_if_eq("emit", "infer"))]
    goal: Option<String>,
    #[command(flatten)]
    grades: Grades,
    #[arg(long, value_enum, default_value_t = ModeArg::Sceptical)]
    mode: ModeArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InputFormat {
    Tgf,
    Apx,
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SemanticsArg {
    Admissible,
    Complete,
    Grounded,
    Preferred,
    Stable,
}

impl From<SemanticsArg> for Semantics {
    fn from(s: SemanticsArg) -> Self {
        match s {
            SemanticsArg::Admissible => Semantics::Admissible,
            SemanticsArg::Complete => Semantics::Complete,
            SemanticsArg::Grounded => Semantics::Grounded,
            SemanticsArg::Preferred => Semantics::Preferred,
            SemanticsArg::Stable => Semantics::Stable,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Credulous,
    #[value(alias = "skeptical")]
    Sceptical,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Credulous => Mode::Credulous,
            ModeArg::Sceptical => Mode::Sceptical,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScopeArg {
    All,
    Constrained,
}

impl From<ScopeArg> for TripleScope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::All => TripleScope::All,
            ScopeArg::Constrained => TripleScope::Constrained,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Emit {
    Graph,
    Ps,
    Check,
    Infer,
}

/// Exit status 1 for domain negatives and bounds, 2 for usage and input errors.
pub enum Failure {
    Domain(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl From<gradarg::Error> for Failure {
    fn from(e: gradarg::Error) -> Self {
        use gradarg::Error::*;
        match e {
            TooLarge { .. }
            | AtomBound { .. }
            | KnowledgeBaseTooLarge { .. }
            | TooManyArguments { .. }
            | NoCompleteSuperset(_) => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        None => read_stdin(),
        Some(p) if p.as_os_str() == "-" => read_stdin(),
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
    Ok(s)
}

fn load_framework(path: Option<&Path>, format: InputFormat) -> Result<gradarg::ArgumentationFramework, Failure> {
    let text = read_input(path)?;
    let format = match format {
        InputFormat::Tgf => gradarg::io::Format::Tgf,
        InputFormat::Apx => gradarg::io::Format::Apx,
        InputFormat::Auto => gradarg::io::detect_format(&text),
    };
    Ok(gradarg::io::parse(&text, format)?)
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    if cli.output == Output::Dot && !matches!(cli.command, Command::Rank(_)) {
        return Err(Failure::Usage("--output dot is only available for `rank`".into()));
    }
    match &cli.command {
        Command::Solve(a) => {
            let af = load_framework(a.input.as_deref(), cli.format)?;
            commands::solve(
                &af,
                a.semantics.into(),
                grade_params(&a.grades)?,
                a.mode.map(Into::into),
            )
        }
        Command::Rank(a) => {
            let af = load_framework(a.input.as_deref(), cli.format)?;
            match (&a.contextual, a.semantics) {
                (Some(context), _) => commands::rank_contextual(&af, context),
                (None, Some(sem)) => commands::rank_absolute(&af, sem.into(), a.scope.into()),
                (None, None) => Err(Failure::Usage("--absolute needs --semantics".into())),
            }
        }
        Command::Postulates(a) => commands::postulates(a.corpus, a.seed, a.scope.into()),
        Command::Instantiate(a) => {
            let kb = gradarg::instantiate::KnowledgeBase::parse(&read_input(Some(&a.kb))?)?;
            let graph_format = match cli.format {
                InputFormat::Tgf => gradarg::io::Format::Tgf,
                InputFormat::Apx | InputFormat::Auto => gradarg::io::Format::Apx,
            };
            match a.emit {
                Emit::Graph => commands::emit_graph(&kb, graph_format),
                Emit::Ps => commands::emit_ps(&kb),
                Emit::Check => commands::emit_check(&kb),
                Emit::Infer => {
                    let goal = a.goal.as_deref().unwrap_or_default();
                    commands::emit_infer(&kb, goal, grade_params(&a.grades)?, a.mode.into())
                }
            }
        }
    }
}

fn grade_params(g: &Grades) -> Result<gradarg::GradeParams, Failure> {
    Ok(gradarg::GradeParams::new(g.l as usize, g.m as usize, g.n as usize)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let body = match cli.output {
                Output::Text => report.text.clone(),
                Output::Json => {
                    let mut s = serde_json::to_string_pretty(&report.json()).expect("report serializes");
                    s.push('\n');
                    s
                }
                Output::Dot => report.dot.clone().unwrap_or_default(),
            };
            let mut out = io::stdout().lock();
            if out.write_all(body.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(report.code)
        }
        Err(f) => {
            match &f {
                Failure::Domain(m) | Failure::Usage(m) => eprintln!("gradarg: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
