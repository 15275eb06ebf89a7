//! Argument parsing. Precedence, lowest first: built-in defaults, `--config` file,
//! `AFFINE_*` environment variables, flags.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::commands::{self, Listing};
use crate::config::{Overrides, RunConfig};
use crate::json::parse_coweight;
use crate::{corpus, suites, CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "affine", version, about = "Spherical functions and Hecke algebra identities for untwisted affine types")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Flat `key = value` file with type, depth, vmin, vmax, shells, q, seed, out.
    #[arg(long, global = true, env = "AFFINE_CONFIG")]
    pub config: Option<PathBuf>,
    /// Cartan type such as A1, A2, D4.
    #[arg(long = "type", global = true, env = "AFFINE_TYPE")]
    pub cartan_type: Option<String>,
    /// Depth of the window below the anchor, in ρ-height.
    #[arg(long, global = true, env = "AFFINE_DEPTH")]
    pub depth: Option<u32>,
    /// `vmin:vmax` or `vmax`.
    #[arg(long, global = true, env = "AFFINE_VWINDOW", allow_hyphen_values = true)]
    pub vwindow: Option<String>,
    /// `sym` or a positive rational.
    #[arg(long, global = true, env = "AFFINE_Q")]
    pub q: Option<String>,
    /// Shell budget for stabilization.
    #[arg(long, global = true, env = "AFFINE_SHELLS")]
    pub shells: Option<u32>,
    #[arg(long, global = true, env = "AFFINE_SEED")]
    pub seed: Option<u64>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true, env = "AFFINE_OUT")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum What {
    Weyl,
    Roots,
    Affroots,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Spherical image of a dominant λ by both routes, with their difference.
    Satake {
        /// `{"c": .., "fin": [..], "d": ..}`
        #[arg(long)]
        lambda: String,
    },
    /// `J_w(λ)` by the recursion and by Demazure–Lusztig operators.
    Jfun {
        #[arg(long)]
        lambda: String,
        /// Comma-separated simple indices, e.g. `1,2`.
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Run identity suites.
    Identities {
        /// One of cb, quadratic, assoc, bernstein, hplus, proportionality, h0, theta, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Deterministic listings.
    Enumerate {
        what: What,
        /// Length for `weyl`, δ-level for `roots`.
        #[arg(long, default_value_t = 2)]
        bound: u32,
        /// Finite part of the element for `affroots`.
        #[arg(long, default_value = "")]
        word: String,
        /// Translation part for `affroots`.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Build θ_μ two ways and compare with Θ_μ.
    Theta {
        #[arg(long)]
        mu: String,
        #[arg(long, default_value_t = 64)]
        budget: usize,
    },
    /// Recompute every golden file in a directory and compare bytes.
    CorpusCheck {
        dir: PathBuf,
        #[arg(long)]
        regenerate: bool,
    },
}

impl Global {
    pub fn config(&self) -> Result<RunConfig, CliError> {
        let over = Overrides {
            cartan_type: self.cartan_type.clone(),
            depth: self.depth,
            vwindow: self.vwindow.clone(),
            q: self.q.clone(),
            shells: self.shells,
            seed: self.seed,
            out: self.out.clone(),
        };
        RunConfig::load(self.config.as_deref(), &over)
    }
}

pub fn execute(cli: &Cli) -> Result<(RunConfig, Outcome), CliError> {
    let cfg = cli.global.config()?;
    let rank = || commands::group(&cfg).map(|g| g.rank());
    let outcome = match &cli.command {
        Command::Satake { lambda } => commands::satake(&cfg, &parse_coweight(lambda, rank()?, "lambda")?)?,
        Command::Jfun { lambda, word } => commands::jfun(&cfg, &parse_coweight(lambda, rank()?, "lambda")?, word)?,
        Command::Identities { suite, samples } => suites::run(&cfg, suite, *samples)?,
        Command::Enumerate { what, bound, word, lambda } => {
            let lam = lambda.as_deref().map(|s| parse_coweight(s, rank()?, "lambda")).transpose()?;
            let what = match what {
                What::Weyl => Listing::Weyl,
                What::Roots => Listing::Roots,
                What::Affroots => Listing::AffRoots,
            };
            commands::enumerate(&cfg, what, *bound, word, lam.as_ref())?
        }
        Command::Theta { mu, budget } => commands::theta(&cfg, &parse_coweight(mu, rank()?, "mu")?, *budget)?,
        Command::CorpusCheck { dir, regenerate } => corpus::check(dir, *regenerate)?,
    };
    Ok((cfg, outcome))
}

/// Runs a command line and returns the exit code, the report (if any) and an error message.
pub fn run_args<I, T>(args: I) -> (i32, Option<Value>, Option<String>)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, None, Some(e.to_string()));
        }
    };
    match execute(&cli) {
        Ok((_, o)) => (o.exit_code(), Some(o.report), None),
        Err(e) => (e.exit_code(), None, Some(e.to_string())),
    }
}
