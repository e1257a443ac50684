use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use frobgrann_cli::golden::run_golden;
use frobgrann_cli::{execute, parse_session, CliError, ExecOptions};
use frobgrann_core::suite::{Suite, SuiteConfig};
use frobgrann_core::Budget;

#[derive(Parser)]
#[command(
    name = "frobgrann",
    version,
    about = "Graded annihilators and special ideals over R[x,f]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run a session script and print its report.
    Run {
        script: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Step budget for each Groebner basis computation.
        #[arg(long, default_value_t = Budget::default().steps)]
        budget_steps: u64,
        /// Round budget for each special-submodule fixed point.
        #[arg(long, default_value_t = Budget::default().rounds)]
        budget_rounds: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the built-in verification suite.
    VerifyAll {
        /// Fewer random instances.
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn run(script: PathBuf, format: Format, options: ExecOptions) -> Result<i32, CliError> {
    let text = std::fs::read_to_string(&script).map_err(|source| CliError::Io {
        path: script.display().to_string(),
        source,
    })?;
    let session = parse_session(&text)?;
    let doc = execute(&session, &options);
    match format {
        Format::Json => print!("{}", doc.to_json_string()),
        Format::Text => print!("{}", doc.to_text()),
    }
    Ok(doc.exit_code())
}

fn verify_all(quick: bool, seed: u64) -> i32 {
    let mut suite = Suite::new(SuiteConfig { quick, seed });
    let mut ok = true;
    for outcome in suite.run_all() {
        ok &= outcome.pass;
        println!("{outcome}");
    }
    let golden = run_golden();
    let failing: Vec<&str> = golden
        .iter()
        .filter(|g| !g.pass())
        .map(|g| g.name)
        .collect();
    ok &= failing.is_empty();
    println!(
        "[{}] criterion 10: golden scripts are deterministic ({} scripts) {}",
        if failing.is_empty() { "PASS" } else { "FAIL" },
        golden.len(),
        if failing.is_empty() {
            String::new()
        } else {
            format!("failing: {}", failing.join(", "))
        }
    );
    if ok {
        0
    } else {
        1
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run {
            script,
            format,
            budget_steps,
            budget_rounds,
            seed,
        } => {
            let options = ExecOptions {
                budget: Budget {
                    steps: budget_steps,
                    rounds: budget_rounds,
                },
                seed,
            };
            let shown = script.display().to_string();
            run(script, format, options).unwrap_or_else(|e| {
                match e {
                    CliError::Io { .. } => eprintln!("error: {e}"),
                    _ => eprintln!("error: {shown}:{e}"),
                }
                2
            })
        }
        Command::VerifyAll { quick, seed } => verify_all(quick, seed),
    };
    ExitCode::from(code as u8)
}
