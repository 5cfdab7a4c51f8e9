//! `artinlab`: analyze zero-dimensional quotients and hypersurface germs from
//! the command line.

use std::io::Read;
use std::process::ExitCode;
use std::time::Duration;

use artinlab::groebner::CancelToken;
use artinlab_cli::fixtures::{fixture, FIXTURES};
use artinlab_cli::{render, run_with_cancel, CliError, Format, JobFile, JobSpec, Mode, Overrides};
use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Analyze,
    Moduli,
    Groebner,
    Derivations,
    Split,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Analyze => Mode::Analyze,
            ModeArg::Moduli => Mode::Moduli,
            ModeArg::Groebner => Mode::Groebner,
            ModeArg::Derivations => Mode::Derivations,
            ModeArg::Split => Mode::Split,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Structured => Format::Structured,
        }
    }
}

/// Exact analysis of K[x]/I: Gröbner bases, local factors, derivation
/// algebras, solvability criteria and hypersurface moduli algebras.
///
/// Input comes from positional polynomials, --file, --fixture, or stdin when
/// none of these is given. Flags override declarations in a job file.
///
/// Exit status: 0 success, 1 other failure, 2 parse or usage error,
/// 3 infinite-dimensional quotient, 4 irrational points, 5 non-isolated
/// singularity, 6 internal invariant violation. A run stopped by --timeout
/// exits with 1.
#[derive(Debug, Parser)]
#[command(name = "artinlab", version)]
struct Args {
    /// Comma-separated variable names, e.g. `x,y,z`.
    #[arg(long)]
    vars: Option<String>,

    /// Monomial order `{lex|deglex|degrevlex}[:priority]`, e.g. `deglex:y,x`.
    #[arg(long)]
    order: Option<String>,

    #[arg(long, value_enum)]
    mode: Option<ModeArg>,

    #[arg(long, value_enum)]
    format: Option<FormatArg>,

    /// Largest truncation exponent tried when localizing.
    #[arg(long, value_name = "N")]
    truncation_cap: Option<u32>,

    /// Cancel localization after this many seconds (exit status 1).
    #[arg(long, value_name = "SECS")]
    timeout: Option<u64>,

    /// Run a bundled fixture by name.
    #[arg(long, value_name = "NAME", conflicts_with = "file")]
    fixture: Option<String>,

    /// Read a job file; `-` reads stdin.
    #[arg(long, value_name = "PATH")]
    file: Option<String>,

    /// Print the names of the bundled fixtures and exit.
    #[arg(long)]
    list_fixtures: bool,

    /// Polynomials, joined with commas; replaces the body of a job file.
    polynomials: Vec<String>,
}

fn read_source(path: &str) -> Result<String, CliError> {
    let io = |e: std::io::Error| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn execute(args: Args) -> Result<String, CliError> {
    let mut file = match (&args.fixture, &args.file, args.polynomials.is_empty()) {
        (Some(name), _, _) => JobFile::parse(fixture(name)?)?,
        (None, Some(path), _) => JobFile::parse(&read_source(path)?)?,
        (None, None, false) => JobFile::default(),
        (None, None, true) => JobFile::parse(&read_source("-")?)?,
    };
    if !args.polynomials.is_empty() {
        file.body = args.polynomials.join(", ");
    }
    let overrides = Overrides {
        vars: args.vars,
        order: args.order,
        mode: args.mode.map(Into::into),
        format: args.format.map(Into::into),
        truncation_cap: args.truncation_cap,
    };
    let job = JobSpec::resolve(&file, &overrides)?;
    let cancel = args.timeout.map(|secs| {
        let token = CancelToken::new();
        let remote = token.clone();
        std::thread::spawn(move || {
            std::thread::sleep(Duration::from_secs(secs));
            remote.cancel();
        });
        token
    });
    let report = run_with_cancel(&job, cancel)?;
    Ok(render(&report, job.format))
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_fixtures {
        for (name, _) in FIXTURES {
            println!("{name}");
        }
        return ExitCode::SUCCESS;
    }
    match execute(args) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("artinlab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
