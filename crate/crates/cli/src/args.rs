use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "qrac",
    version,
    about = "Evaluate, refute and search quantum random access codings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SchemeSource {
    /// Built-in scheme: ambainis2, chuang3, hinry7, example3.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Scheme JSON file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exhaustive success table of a scheme.
    Eval {
        #[command(flatten)]
        source: SchemeSource,
        /// Also write the per-cell table as CSV.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        #[arg(long)]
        full_precision: bool,
    },
    /// Refute a claimed success probability via the halfspace argument.
    Nogo {
        #[command(flatten)]
        source: SchemeSource,
        #[arg(long, allow_negative_numbers = true)]
        claimed_p: f64,
        #[arg(long)]
        full_precision: bool,
    },
    /// Region counts of hyperplane arrangements.
    Regions {
        #[arg(long, requires = "d", conflicts_with = "from_scheme")]
        k: Option<u64>,
        #[arg(long, requires = "k")]
        d: Option<u64>,
        /// Built-in name or scheme file.
        #[arg(long, value_name = "NAME|PATH", required_unless_present = "k")]
        from_scheme: Option<String>,
        #[arg(long, default_value_t = 1e-7)]
        margin_eps: f64,
        #[arg(long)]
        full_precision: bool,
    },
    /// See-saw search for good codings.
    Optimize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, env = "QRAC_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        #[arg(long, default_value_t = 500)]
        max_iters: usize,
        #[arg(long, default_value_t = 20)]
        reweight_rounds: usize,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Weighted)]
        objective: ObjectiveArg,
        /// Directory for scheme.json, report.json and trace.csv.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        full_precision: bool,
    },
    /// Worked examples.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
        #[arg(long)]
        full_precision: bool,
    },
    /// Write a built-in scheme as JSON to stdout.
    Export { name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Average,
    Weighted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoName {
    Example3,
    Hinry7,
    Nayak,
}
