use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod adl;
mod commands;
mod config;
mod render;

/// Exact computations with algebras, bimodules, defects and sectors.
#[derive(Parser)]
#[command(name = "comalg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate every object in a definition file
    Validate { file: PathBuf },
    /// Basis of the center of an algebra
    Center { file: PathBuf, algebra: String },
    /// Basis of the commutant of a subspace (a morphism name, or vectors joined by `;`)
    Commutant { file: PathBuf, algebra: String, subspace: String },
    /// The opposite algebra
    Opposite { file: PathBuf, algebra: String },
    /// Tensor product, optionally balanced: `tensor <file> <a> <b> over <c> <ja> <jb>`
    Tensor {
        file: PathBuf,
        a: String,
        b: String,
        #[arg(num_args = 0..)]
        over: Vec<String>,
    },
    /// Fuse two defects along their shared net
    FuseDefects { file: PathBuf, d: String, e: String },
    /// Check that fusing defects over a net is the balanced tensor product
    VerifyFusion { file: PathBuf, d: String, b: String, e: String },
    /// Report the axioms of a sector
    SectorCheck { file: PathBuf, sector: String },
    /// Vertical fusion of two sectors
    Vfuse { file: PathBuf, x: String, y: String },
    /// Horizontal fusion of two sectors
    Hfuse { file: PathBuf, x: String, y: String },
    /// Seeded coherence suites
    Coherence {
        /// A suite kind or `all`
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Check isotony, locality and strong additivity of a defect on an interval configuration
    NetAxioms {
        file: PathBuf,
        defect: String,
        #[arg(long)]
        config: PathBuf,
    },
}

fn run(cmd: Command) -> Result<commands::Report, commands::InputError> {
    match cmd {
        Command::Validate { file } => commands::validate(&file),
        Command::Center { file, algebra } => commands::center(&file, &algebra),
        Command::Commutant { file, algebra, subspace } => commands::commutant(&file, &algebra, &subspace),
        Command::Opposite { file, algebra } => commands::opposite(&file, &algebra),
        Command::Tensor { file, a, b, over } => commands::tensor(&file, &a, &b, &over),
        Command::FuseDefects { file, d, e } => commands::fuse(&file, &d, &e),
        Command::VerifyFusion { file, d, b, e } => commands::verify_fusion(&file, &d, &b, &e),
        Command::SectorCheck { file, sector } => commands::sector_check(&file, &sector),
        Command::Vfuse { file, x, y } => commands::fuse_sectors(&file, &x, &y, false),
        Command::Hfuse { file, x, y } => commands::fuse_sectors(&file, &x, &y, true),
        Command::Coherence { suite, seed, cases, max_dim } => commands::coherence(&suite, seed, cases, max_dim),
        Command::NetAxioms { file, defect, config } => commands::net_axioms(&file, &defect, &config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(report.text.as_bytes());
            let _ = stdout.flush();
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
