use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "intmetric", version, about = "Finite metric spaces with distances in {1, ..., r}")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    pub threads: usize,
    /// Search node budget for exhaustive enumeration.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Drop elapsed times so reruns are byte-identical.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Jsonl,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyArg {
    Metric,
    Cr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleArg {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AmalgamKind {
    Cr,
    Mr,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact |M_r(n)|, |C_r(n)| and the lower bound m(r)^C(n,2).
    Count(RN),
    /// List M_r(n), or C_r(n) with --cr.
    Enumerate(EnumerateArgs),
    /// Uniform samples from M_r(n).
    Sample(SampleArgs),
    /// Structural profile of M_r(n), exact or sampled.
    Stats(StatsArgs),
    /// C_r membership certificate for a coloring.
    Membership(InArg),
    /// Distance to the nearest member of C_r(n).
    Nearest(InArg),
    /// Canonically ordered (m(r)-1)-component decomposition.
    Components(InArg),
    /// Exhaustive lemma checks.
    #[command(subcommand)]
    Verify(Verify),
    /// Apply the injection f to a member of C_r(n) (odd r).
    Inject(InArg),
    /// Apply f to all of C_r(n) and summarize preimages.
    Preimages(RN),
    /// The gadget H for a given r.
    GadgetH(RArg),
    /// Amalgamate two colorings over a shared set.
    Amalgamate(AmalgamateArgs),
    /// Evaluate an extension axiom on a coloring.
    AxiomEval(AxiomEvalArgs),
    /// Empirical probability of an extension axiom as n grows.
    AxiomCurve(AxiomCurveArgs),
    /// Size of the matching family A(S) (odd r).
    MatchingBound(RN),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Count(_) => "count",
            Command::Enumerate(_) => "enumerate",
            Command::Sample(_) => "sample",
            Command::Stats(_) => "stats",
            Command::Membership(_) => "membership",
            Command::Nearest(_) => "nearest",
            Command::Components(_) => "components",
            Command::Verify(v) => match v {
                Verify::SizeLemma(_) => "verify size-lemma",
                Verify::TriangleClass(_) => "verify triangle-class",
                Verify::WeightBound(_) => "verify weight-bound",
                Verify::Importantcor(_) => "verify importantcor",
                Verify::AmalgamMr(_) => "verify amalgam-mr",
            },
            Command::Inject(_) => "inject",
            Command::Preimages(_) => "preimages",
            Command::GadgetH(_) => "gadget-h",
            Command::Amalgamate(_) => "amalgamate",
            Command::AxiomEval(_) => "axiom-eval",
            Command::AxiomCurve(_) => "axiom-curve",
            Command::MatchingBound(_) => "matching-bound",
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct RN {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct RArg {
    #[arg(long)]
    pub r: u32,
}

#[derive(Debug, Args, Serialize)]
pub struct RMax {
    #[arg(long, default_value_t = 5)]
    pub r_max: u32,
}

#[derive(Debug, Args, Serialize)]
pub struct InArg {
    /// Coloring as JSON: {"r": .., "n": .., "d": [..]} in row-major pair order.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct EnumerateArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub rn: RN,
    /// Enumerate C_r(n) instead of M_r(n).
    #[arg(long)]
    pub cr: bool,
    /// Refuse to list more than this many colorings.
    #[arg(long, default_value_t = 1_000_000)]
    pub max_items: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct SampleArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub rn: RN,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct StatsArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub rn: RN,
    /// Sample this many colorings instead of enumerating.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Hub threshold, as p/q.
    #[arg(long, default_value = "1/4")]
    pub epsilon: String,
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// Size lemma for subset triples, r = 3..=r_max.
    SizeLemma(RMax),
    /// Triangle color-set classification, r = 3..=r_max.
    TriangleClass(RMax),
    /// Weight bound on metric r-graphs on t vertices.
    WeightBound(WeightArgs),
    /// Corollary on maximal triangles of color sets, r = 3..=r_max.
    Importantcor(RMax),
    /// Exhaustive soundness of the M_r amalgam on small factors.
    AmalgamMr(AmalgamCheckArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct WeightArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long, default_value_t = 3)]
    pub t: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct AmalgamCheckArgs {
    #[arg(long, default_value_t = 3)]
    pub r: u32,
    /// Largest factor size.
    #[arg(long, default_value_t = 3)]
    pub max_factor: usize,
    #[arg(long, value_enum, default_value_t = RuleArg::Min)]
    pub rule: RuleArg,
}

#[derive(Debug, Args, Serialize)]
pub struct AmalgamateArgs {
    /// JSON: {"a": coloring, "b": coloring, "shared": [[a_vertex, b_vertex], ..]} (1-based).
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = AmalgamKind::Mr)]
    pub kind: AmalgamKind,
    #[arg(long, value_enum, default_value_t = RuleArg::Min)]
    pub rule: RuleArg,
}

#[derive(Debug, Args, Serialize)]
pub struct AxiomEvalArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Axiom as JSON {"base": coloring, "extended": coloring}; defaults to the r = 4 (3 -> 2,2) axiom.
    #[arg(long)]
    pub axiom: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct AxiomCurveArgs {
    #[arg(long)]
    pub axiom: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FamilyArg::Cr)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 4)]
    pub n_min: usize,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    #[arg(long, default_value_t = 2000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
