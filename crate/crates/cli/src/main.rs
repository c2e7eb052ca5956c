use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use moyal_clifford_cli::{commands, CliError, Format, StarKind};

/// Exact Moyal-Clifford algebra on phase space.
#[derive(Parser)]
#[command(name = "mcga", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Moyal,
    Clifford,
    Mc,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Star product of two expressions; `-` reads one operand from stdin.
    Star {
        kind: Kind,
        lhs: String,
        rhs: String,
        /// Number of generators e1..en for clifford and mc products.
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Star-factorize the supersymmetric system of a superpotential W(q).
    Factorize {
        /// Superpotential, or `-` for stdin.
        #[arg(short = 'W', allow_hyphen_values = true)]
        w: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Check the oscillator star-genvalue ladder up to level n.
    Genvalue {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 6)]
        max_level: u32,
        /// Inject a wrong eigenvalue to exercise the failure path.
        #[arg(long)]
        tamper: bool,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Run the built-in identity suite.
    Verify {
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
}

fn format(f: OutFormat) -> Format {
    match f {
        OutFormat::Text => Format::Text,
        OutFormat::Json => Format::Json,
    }
}

fn read_stdin() -> Result<String, CliError> {
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
    Ok(s.trim().to_string())
}

fn resolve(arg: String) -> Result<String, CliError> {
    if arg == "-" {
        read_stdin()
    } else {
        Ok(arg)
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let (report, fmt) = match cli.command {
        Command::Star { kind, lhs, rhs, dim } => {
            if lhs == "-" && rhs == "-" {
                return Err(CliError::Usage("at most one operand can come from stdin".into()));
            }
            let kind = match kind {
                Kind::Moyal => StarKind::Moyal,
                Kind::Clifford => StarKind::Clifford,
                Kind::Mc => StarKind::Mc,
            };
            println!("{}", commands::star(kind, &resolve(lhs)?, &resolve(rhs)?, dim)?);
            return Ok(0);
        }
        Command::Factorize { w, format: f } => (commands::factorize(&resolve(w)?)?, f),
        Command::Genvalue {
            n,
            max_level,
            tamper,
            format: f,
        } => (commands::genvalue(n, max_level, tamper)?, f),
        Command::Verify { format: f } => (commands::verify()?, f),
    };
    print!("{}", report.render(format(fmt)));
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
