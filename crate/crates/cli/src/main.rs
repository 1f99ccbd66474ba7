use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;

use report::Outcome;

#[derive(Debug, Parser)]
#[command(
    name = "fiberscope",
    version,
    about = "Persistence fibers on graphs: exact checks and certificates"
)]
struct Cli {
    /// Output format. DOT is available for `str` (Hasse diagram) and `star` (nerve graph).
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// PH0 (and PH1 on cycles) of a vertex function given as JSON.
    Persistence {
        /// `{"shape": .., "params": [..], "values": [..]}`; stdin when absent or `-`.
        input: Option<PathBuf>,
    },
    /// The cellular string poset Str(N, M).
    Str {
        n: usize,
        m: usize,
        /// Betti numbers of the order complex of Str(N, M).
        #[arg(long)]
        homology: bool,
        /// Sub-poset whose Betti numbers to report, e.g. Str00, closure11, level2.
        #[arg(long = "subposet", value_name = "SEL")]
        subposets: Vec<String>,
        /// Convergence of the F1 move on Str00 and Str0X.
        #[arg(long)]
        moves: bool,
        /// Emit the Hasse diagram (same as `--format dot`).
        #[arg(long)]
        dot: bool,
    },
    /// Components of the fiber over the N-gon with N = 2M + 1.
    Ngon {
        #[arg(long)]
        n: Option<usize>,
        /// Number of diagram points; the default diagram is used unless `--diagram` is given.
        #[arg(long)]
        m: Option<usize>,
        /// PH0 diagram JSON file.
        #[arg(long)]
        diagram: Option<PathBuf>,
        /// Global maximum of the function, e.g. `5` or `11/2`.
        #[arg(long)]
        max: Option<String>,
    },
    /// Fiber over {(0, inf), (1, 4)} on a star tree.
    Star {
        /// Branch lengths, comma separated, e.g. `2,2,2`.
        lengths: String,
        /// Nerve graph metrics (the default when no other check is requested).
        #[arg(long)]
        nerve: bool,
        /// Build and verify the K-turn loop on branches 0, 1, 2.
        #[arg(long)]
        kturn: bool,
        /// Check the cover on this many sampled fiber points.
        #[arg(long, value_name = "K")]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run every acceptance check.
    VerifyAll {
        #[arg(long, default_value_t = 10_000)]
        cover_samples: usize,
        #[arg(long, default_value_t = 10_000)]
        lemma_samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut format = cli.format;
    let outcome = match cli.command {
        Command::Persistence { input } => commands::persistence(input.as_deref()),
        Command::Str {
            n,
            m,
            homology,
            subposets,
            moves,
            dot,
        } => {
            if dot {
                format = Format::Dot;
            }
            commands::strings(n, m, homology, &subposets, moves)
        }
        Command::Ngon { n, m, diagram, max } => {
            commands::ngon(n, m, diagram.as_deref(), max.as_deref())
        }
        Command::Star {
            lengths,
            nerve,
            kturn,
            sample,
            seed,
        } => commands::star(&lengths, nerve, kturn, sample, seed),
        Command::VerifyAll {
            cover_samples,
            lemma_samples,
        } => commands::verify_all(cover_samples, lemma_samples),
    };
    match outcome {
        Ok(out) => emit(&out, format),
        Err(e) => {
            eprintln!("fiberscope: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Outcome, format: Format) -> ExitCode {
    let report = &out.report;
    let text = match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Text => report.to_text(),
        Format::Dot => match &out.dot {
            Some(d) => d.clone(),
            None => {
                eprintln!("fiberscope: `{}` has no DOT output", report.command);
                return ExitCode::from(2);
            }
        },
    };
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = stdout.write_all(text.as_bytes());
    if report.pass {
        ExitCode::SUCCESS
    } else {
        for f in report.failures() {
            eprintln!("fiberscope: assertion failed: {f}");
        }
        ExitCode::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
