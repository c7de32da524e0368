use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use qonsager_core::arith::Rational;
use qonsager_verify::output::{to_json, to_text};
use qonsager_verify::{cap_hit, run, Format, SeedChoice, Suite, SuiteConfig};

/// Exit status when a check fails.
const EXIT_FAIL: u8 = 1;
/// Exit status for an invalid configuration (clap uses the same).
const EXIT_USAGE: u8 = 2;
/// Exit status when a resource cap stopped a check.
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "qonsager", version, about = "Exact verification of reflection-equation and q-Onsager identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print or write a report.
    Run {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Number of dressing sites.
        #[arg(long, default_value_t = 1)]
        sites: usize,
        /// `2j` of each site, comma separated; cycled over the sites.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        spins: Vec<u32>,
        /// Largest mode index k (and l) checked.
        #[arg(long, default_value_t = 2)]
        order: usize,
        /// `identity` or `solved(i)`.
        #[arg(long, default_value = "identity")]
        seed: SeedChoice,
        /// A rational value of q, a perfect square, for the degree diagnostic.
        #[arg(long)]
        numeric_q: Option<Rational>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value = "text", value_parser = ["text", "json"])]
        format: String,
        #[arg(long, default_value_t = qonsager_verify::config::DEFAULT_MAX_SITES)]
        max_sites: usize,
        /// Largest operator dimension a check may build.
        #[arg(long, default_value_t = 64)]
        max_dim: usize,
    },
}

fn main() -> anyhow::Result<ExitCode> {
    let Command::Run { suite, sites, spins, order, seed, numeric_q, output, format, max_sites, max_dim } =
        Cli::parse().command;
    let format: Format = format.parse().map_err(anyhow::Error::msg)?;
    let cfg = SuiteConfig { suite, sites, spins, order, seed, numeric_q, output, format, max_sites, max_dim };
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return Ok(ExitCode::from(EXIT_USAGE));
    }
    let report = run(&cfg);
    let text = match cfg.format {
        Format::Text => to_text(&report),
        Format::Json => to_json(&cfg, &report),
    };
    match &cfg.output {
        Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::from(if cap_hit(&report) {
        EXIT_CAP
    } else if report.all_passed() {
        0
    } else {
        EXIT_FAIL
    }))
}
