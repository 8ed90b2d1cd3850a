use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "zonalkit",
    version,
    about = "Exact computations with zonal polynomials, zonal characters and Kerov polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Output format (text for everything except `kerov`, which defaults to json)
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Directory of the result cache
    #[arg(long, global = true, env = "ZONALKIT_CACHE")]
    pub cache_dir: Option<PathBuf>,

    /// Ignore the cache for this run
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Worker threads for the parallel sums
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Zonal polynomial Z_lambda in the power-sum basis
    Zonal {
        #[arg(long)]
        lambda: String,
        /// Use the Gram-Schmidt Jack construction instead of the matching sum
        #[arg(long)]
        oracle: bool,
    },
    /// Value of the character Sigma_mu at a diagram
    Character {
        #[arg(long)]
        mu: String,
        /// A partition such as 4,2,1 or rectangles such as p=1,1;q=4,2
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "2")]
        alpha: String,
        #[arg(long, value_enum, default_value_t = CharacterMethod::Direct)]
        method: CharacterMethod,
    },
    /// Sigma_mu as a polynomial in Stanley coordinates p, q
    Stanley {
        #[arg(long)]
        mu: String,
        /// Number of rectangles (defaults to |mu|)
        #[arg(long)]
        rectangles: Option<usize>,
    },
    /// Free cumulants R_1..R_n of a diagram
    Cumulants {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 6)]
        upto: usize,
        /// Anisotropic cumulants R_k^(alpha)
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Kerov polynomial K_mu in the anisotropic free cumulants
    Kerov {
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = KerovMethod::Count)]
        method: KerovMethod,
        #[arg(long, default_value = "2")]
        alpha: String,
    },
    /// Run the built-in verification suite
    Selftest {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
    /// Vertices, edges, faces and topology of the surface glued from S0
    MapStats {
        #[arg(long)]
        mu: String,
        /// Pairs as JSON, e.g. [[1,3],[2,4]]
        #[arg(long)]
        s0: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharacterMethod {
    Direct,
    Oracle,
    Orbit,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KerovMethod {
    Count,
    Oracle,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
        }
    }
}

impl CharacterMethod {
    pub fn name(self) -> &'static str {
        match self {
            CharacterMethod::Direct => "direct",
            CharacterMethod::Oracle => "oracle",
            CharacterMethod::Orbit => "orbit",
        }
    }
}

impl KerovMethod {
    pub fn name(self) -> &'static str {
        match self {
            KerovMethod::Count => "count",
            KerovMethod::Oracle => "oracle",
        }
    }
}
