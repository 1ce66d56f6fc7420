use std::num::NonZeroUsize;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "tractlab",
    version,
    about = "Bounded exhaustive checks for tracts, hyperfields and matroids over tracts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "TRACTLAB_JOBS")]
    pub jobs: Option<NonZeroUsize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check tract, hyperfield or F-matroid axioms.
    Axioms(AxiomsArgs),
    /// Fusion closure of the norm-≤3 pasture of a tract.
    Closure(TractArgs),
    /// σ-closure of a tract's null set.
    Sigma(TractArgs),
    /// Stringency of a hyperfield against strong fusion.
    Stringent(HyperfieldArgs),
    /// Fusion closure of a hyperfield's pasture against its tract.
    Hap(HyperfieldArgs),
    /// Certify perfection (coordinate bound 1).
    Perfect(MatroidArgs),
    /// Certify strong perfection up to a coordinate bound.
    StrongPerfect(MatroidArgs),
    /// Check that wedges of covectors are generalized covectors.
    WedgeCheck(MatroidArgs),
    /// Check the minor propositions and the support lemma.
    MinorsCheck(MinorsArgs),
    /// Rerun every acceptance criterion and print a scorecard.
    Demo(DemoArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["tract", "hyperfield", "fmatroid"])))]
pub struct AxiomsArgs {
    /// `builtin:<name>` or a JSON file.
    #[arg(long)]
    pub tract: Option<String>,
    /// `builtin:<name>` or a JSON file.
    #[arg(long)]
    pub hyperfield: Option<String>,
    /// `fixture:<name>` or a JSON file.
    #[arg(long)]
    pub fmatroid: Option<String>,
    /// Norm bound for the exhaustive scan.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    pub bound: u32,
    /// Axioms to check, comma separated (default: all that apply).
    #[arg(long, value_delimiter = ',')]
    pub check: Vec<String>,
}

#[derive(Debug, Args)]
pub struct TractArgs {
    /// `builtin:<name>` or a JSON file.
    #[arg(long)]
    pub tract: String,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    pub bound: u32,
}

#[derive(Debug, Args)]
pub struct HyperfieldArgs {
    /// `builtin:<name>` or a JSON file.
    #[arg(long)]
    pub hyperfield: String,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub bound: u32,
}

#[derive(Debug, Args)]
pub struct MatroidArgs {
    /// `fixture:<name>` or a JSON file.
    #[arg(long)]
    pub fmatroid: String,
    /// Largest norm of a single coordinate.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub coord_bound: u32,
}

#[derive(Debug, Args)]
pub struct MinorsArgs {
    #[command(flatten)]
    pub matroid: MatroidArgs,
    /// Checks to run, comma separated: minors, supp, lower-term.
    #[arg(long, value_delimiter = ',', default_values_t = [MinorCheck::Minors, MinorCheck::Supp])]
    pub check: Vec<MinorCheck>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MinorCheck {
    Minors,
    Supp,
    LowerTerm,
}

impl std::fmt::Display for MinorCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = self
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        f.write_str(&name)
    }
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    /// Run only these criteria (1-13), comma separated.
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=13))]
    pub criterion: Vec<u8>,
}
