//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage error, 3 capacity limit.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::config::{default_max_order_from_env, RunConfig};
use crate::error::Result;
use crate::group::GroupSpec;
use crate::oracle::verify::run_verification;
use crate::report;

#[derive(Parser, Debug)]
#[command(
    name = "fuzdeg",
    version,
    about = "Distinct fuzzy subgroup counting and commutativity degree for small finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Subgroup lattice, class census, and commutativity degree of a group.
    Analyze {
        /// Group spec: cyclic:n, dihedral:2n, symmetric:n, klein,
        /// product:<spec>,<spec>, file:<path>
        spec: String,
        /// Output format: json, csv, or markdown.
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        class_cap: Option<u64>,
        #[arg(long)]
        pair_cap: Option<u64>,
    },
    /// Re-derive every result from enumerated membership maps and report
    /// each checked claim as pass/fail.
    Verify {
        spec: String,
        /// Membership grid depth (defaults to the longest chain length).
        #[arg(long)]
        oracle_depth: Option<usize>,
        /// Output format: text or json.
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        class_cap: Option<u64>,
        #[arg(long)]
        pair_cap: Option<u64>,
        /// Seed for sampled pair checks on order-7.. groups.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Table of reference values from the literature with match flags.
    PaperTable {
        /// Output format: markdown, csv, or json.
        #[arg(long, default_value = "markdown")]
        format: String,
    },
    /// Hasse diagram of the subgroup lattice.
    ExportLattice {
        spec: String,
        /// Output format: dot or json.
        #[arg(long, default_value = "dot")]
        format: String,
    },
}

fn build_config(
    format: &str,
    max_order: Option<usize>,
    class_cap: Option<u64>,
    pair_cap: Option<u64>,
    oracle_depth: Option<usize>,
    seed: Option<u64>,
) -> Result<RunConfig> {
    let mut config = RunConfig {
        max_order: max_order.unwrap_or_else(default_max_order_from_env),
        oracle_depth,
        format: format.parse()?,
        ..RunConfig::default()
    };
    if let Some(cap) = class_cap {
        config.class_cap = cap;
    }
    if let Some(cap) = pair_cap {
        config.pair_cap = cap;
    }
    if let Some(seed) = seed {
        config.seed = seed;
    }
    Ok(config)
}

/// Dispatch a parsed command; returns the output document and an exit code.
fn dispatch(command: Command) -> Result<(String, i32)> {
    match command {
        Command::Analyze {
            spec,
            format,
            max_order,
            class_cap,
            pair_cap,
        } => {
            let config = build_config(&format, max_order, class_cap, pair_cap, None, None)?;
            let spec = GroupSpec::parse(&spec)?;
            let report = report::analyze(&spec, &config)?;
            Ok((report::render_analyze(&report, config.format)?, 0))
        }
        Command::Verify {
            spec,
            oracle_depth,
            format,
            max_order,
            class_cap,
            pair_cap,
            seed,
        } => {
            let config = build_config(&format, max_order, class_cap, pair_cap, oracle_depth, seed)?;
            let spec = GroupSpec::parse(&spec)?;
            let group = spec.build(config.max_order)?;
            let lat = crate::lattice::SubgroupLattice::new(group);
            let report = run_verification(
                &lat,
                config.oracle_depth,
                config.class_cap,
                config.pair_cap,
                config.seed,
            )?;
            let code = if report.all_passed { 0 } else { 1 };
            Ok((report::render_verification(&report, config.format)?, code))
        }
        Command::PaperTable { format } => {
            let config = build_config(&format, None, None, None, None, None)?;
            let rows =
                crate::reference::paper_table(config.max_order, config.class_cap, config.pair_cap)?;
            Ok((report::render_paper_table(&rows, config.format)?, 0))
        }
        Command::ExportLattice { spec, format } => {
            let config = build_config(&format, None, None, None, None, None)?;
            let spec = GroupSpec::parse(&spec)?;
            Ok((report::render_lattice(&spec, &config)?, 0))
        }
    }
}

/// Parse args, run, print the document to stdout, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((output, code)) => {
            print!("{output}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
