use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use bousfield_cli::{run, CliError, Command, Format, Verb};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bousfield", version, about = "Bousfield-lattice calculator")]
struct Cli {
    #[command(subcommand)]
    verb: VerbArg,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// ambient, harmonic, E(n), K(n), HFp, I or BP
    #[arg(long, global = true)]
    category: Option<String>,
    #[arg(long, global = true, default_value_t = 3)]
    max_n: u32,
    /// Truncation depth for lattices and inverse limits
    #[arg(long, global = true)]
    depth: Option<u32>,
    /// Largest index listed in infinite registries
    #[arg(long, global = true, default_value_t = bousfield_core::localization::DEFAULT_CAP)]
    cap: u32,
    /// text, json or dot
    #[arg(long, global = true, default_value = "text")]
    format: String,
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerbArg {
    /// Normal form, or the image in --category
    Eval { expr: String },
    /// Decide ⟨a⟩ ≤ ⟨b⟩
    Leq { a: String, b: String },
    /// Decide ⟨a⟩ = ⟨b⟩
    Eq { a: String, b: String },
    /// Bounds on supp = {i | X ^ K(i) ≠ 0}
    Support { expr: String },
    /// Telescope-conjecture verdict table
    Report,
    /// Recomputed Bousfield lattice of --category
    Lattice,
    /// Smashing localizations of --category
    Registry,
    /// Inverse limit of the truncation tower up to --depth
    Invlimit,
    /// Implication graph up to --max-n
    Graph,
}

fn command(cli: Cli) -> Result<Command, CliError> {
    let (verb, exprs) = match cli.verb {
        VerbArg::Eval { expr } => (Verb::Eval, vec![expr]),
        VerbArg::Leq { a, b } => (Verb::Leq, vec![a, b]),
        VerbArg::Eq { a, b } => (Verb::Eq, vec![a, b]),
        VerbArg::Support { expr } => (Verb::Support, vec![expr]),
        VerbArg::Report => (Verb::Report, vec![]),
        VerbArg::Lattice => (Verb::Lattice, vec![]),
        VerbArg::Registry => (Verb::Registry, vec![]),
        VerbArg::Invlimit => (Verb::Invlimit, vec![]),
        VerbArg::Graph => (Verb::Graph, vec![]),
    };
    let o = cli.opts;
    let mut cmd = Command::new(verb, &exprs)?.category(o.category.as_deref())?;
    cmd.max_n = o.max_n;
    cmd.depth = o.depth;
    cmd.cap = o.cap;
    cmd.format = o.format.parse::<Format>()?;
    Ok(cmd)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.opts.output.clone();
    let result = command(cli).and_then(|c| run(&c));
    let text = match result {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let written = match output {
        Some(path) => std::fs::write(&path, &text)
            .with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
