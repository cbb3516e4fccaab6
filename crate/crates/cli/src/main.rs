use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyperderiv::suite::{export, run_suite, ExportKind, Format, Mode, PitConfig};

#[derive(Parser)]
#[command(name = "hyperderiv", version, about = "Verify and export the hyperelliptic polynomial Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = ["1", "2", "3", "all"])]
        genus: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        /// Seed of the random evaluation points (pit mode).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random points per identity (pit mode).
        #[arg(long, default_value_t = 3)]
        samples: u32,
        /// Coordinates are drawn from [-bound, bound] (pit mode).
        #[arg(long, default_value_t = 1 << 20)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = ReportArg::Text)]
        report: ReportArg,
    },
    /// Print fields, the map, bracket tables or matrices.
    Export {
        #[arg(long, value_enum)]
        what: WhatArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
        genus: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Pit,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    Fields,
    Map,
    Brackets,
    Matrices,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Latex,
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { genus, mode, seed, samples, bound, report } => {
            let mode = match mode {
                ModeArg::Exact => Mode::Exact,
                ModeArg::Pit => Mode::Pit,
            };
            let pit = match PitConfig::new(samples, bound, seed) {
                Ok(p) => p,
                Err(e) => return usage_error(e),
            };
            let genera: Vec<u32> = match genus.as_str() {
                "all" => vec![1, 2, 3],
                g => vec![g.parse().expect("validated by clap")],
            };
            let mut reports = Vec::new();
            for g in genera {
                match run_suite(g, mode, pit) {
                    Ok(r) => reports.push(r),
                    Err(e) => return usage_error(e),
                }
            }
            match report {
                ReportArg::Text => {
                    for r in &reports {
                        emit(&r.to_text());
                    }
                }
                ReportArg::Json => {
                    let doc = if reports.len() == 1 {
                        serde_json::to_string_pretty(&reports[0])
                    } else {
                        serde_json::to_string_pretty(&reports)
                    };
                    emit(&format!("{}\n", doc.expect("reports serialize")));
                }
            }
            if reports.iter().all(|r| r.passed()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Export { what, genus, format } => {
            let what = match what {
                WhatArg::Fields => ExportKind::Fields,
                WhatArg::Map => ExportKind::Map,
                WhatArg::Brackets => ExportKind::Brackets,
                WhatArg::Matrices => ExportKind::Matrices,
            };
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Latex => Format::Latex,
            };
            match export(what, genus, format) {
                Ok(mut doc) => {
                    if !doc.ends_with('\n') {
                        doc.push('\n');
                    }
                    emit(&doc);
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
    }
}
