use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "polycover", version, about = "Branched covers of finite posets and metric graphs")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Poset construction and queries.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Properties of a poset morphism.
    #[command(subcommand)]
    Morphism(MorphismCmd),
    /// Balancing, covers and degrees.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Extend an index map to a larger up-set.
    Extend(ExtendArgs),
    /// Lift paths from the target to the source.
    #[command(subcommand)]
    Lift(LiftCmd),
    /// Connectivity checks and connectivity lifting.
    #[command(subcommand)]
    Connect(ConnectCmd),
    /// Chain posets and stellar subdivisions.
    #[command(subcommand)]
    Subdivide(SubdivideCmd),
    /// Metric graph morphisms.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Diagram export.
    #[command(subcommand)]
    Export(ExportCmd),
    /// The bundled examples.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Args, Debug)]
pub struct PosetInput {
    /// Poset file, or FIXTURE:source / FIXTURE:target.
    pub poset: String,
}

#[derive(Subcommand, Debug)]
pub enum PosetCmd {
    Validate(PosetInput),
    Stats(PosetInput),
    Upsets {
        #[command(flatten)]
        input: PosetInput,
        /// Only non-empty connected up-sets.
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        oracle_limit: Option<usize>,
    },
}

#[derive(Args, Debug)]
pub struct MorphismInput {
    /// Morphism file or fixture name.
    #[arg(long)]
    pub morphism: String,
}

#[derive(Args, Debug)]
pub struct CoverInput {
    #[command(flatten)]
    pub morphism: MorphismInput,
    /// Index map file or fixture name.
    #[arg(long)]
    pub index: String,
}

#[derive(Subcommand, Debug)]
pub enum MorphismCmd {
    /// Monotone, combinatorial and open.
    Check(MorphismInput),
}

#[derive(Subcommand, Debug)]
pub enum CoverCmd {
    Balanced(CoverInput),
    Ibc(CoverInput),
    IbcOracle {
        #[command(flatten)]
        input: CoverInput,
        #[arg(long)]
        oracle_limit: Option<usize>,
    },
    Degree(CoverInput),
    /// Search for a balanced total index map with values up to a bound.
    Search {
        #[command(flatten)]
        morphism: MorphismInput,
        #[arg(long, default_value_t = 8)]
        bound: u64,
        #[arg(long)]
        oracle_limit: Option<usize>,
    },
}

#[derive(Args, Debug)]
pub struct ExtendArgs {
    #[command(flatten)]
    pub input: CoverInput,
    /// Generators of the up-set to extend to; the whole source by default.
    #[arg(long)]
    pub upset: Option<String>,
}

#[derive(Args, Debug)]
pub struct LiftArgs {
    #[command(flatten)]
    pub input: CoverInput,
    /// Source element the lift starts from.
    #[arg(long)]
    pub from: String,
    /// Target path, comma separated.
    #[arg(long)]
    pub path: String,
}

#[derive(Subcommand, Debug)]
pub enum LiftCmd {
    /// A strictly increasing path.
    Up(LiftArgs),
    /// Any path in the image of the index map's domain.
    Path(LiftArgs),
}

#[derive(Subcommand, Debug)]
pub enum ConnectCmd {
    Codimk {
        #[command(flatten)]
        input: PosetInput,
        #[arg(long)]
        k: usize,
    },
    Strong(PosetInput),
    /// Connectivity of the source from connectivity of the target; the
    /// codimension form with `--k`.
    Lifting {
        #[command(flatten)]
        input: CoverInput,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum SubdivideCmd {
    /// Chain poset of a poset, or the induced map of a morphism.
    #[command(group(ArgGroup::new("object").required(true).args(["poset", "morphism"])))]
    Bcs {
        poset: Option<String>,
        #[arg(long)]
        morphism: Option<String>,
        #[arg(long)]
        limit: Option<usize>,
    },
    #[command(group(ArgGroup::new("object").required(true).args(["complex", "simplex"])))]
    Stellar {
        /// Complex file.
        complex: Option<String>,
        /// Use the full simplex on these vertices instead.
        #[arg(long)]
        simplex: Option<String>,
        #[arg(long)]
        face: String,
        #[arg(long, default_value = "v")]
        vertex: String,
    },
}

#[derive(Args, Debug)]
pub struct GraphInput {
    /// Metric morphism file or fixture name.
    #[arg(long)]
    pub morphism: String,
}

#[derive(Subcommand, Debug)]
pub enum GraphCmd {
    Refine(GraphInput),
    /// Compare geometric and face-poset fibre counts.
    Sample {
        #[command(flatten)]
        input: GraphInput,
        /// `vertex` or `edge:position`; random points when absent.
        #[arg(long)]
        point: Option<String>,
        /// Sample the refined morphism.
        #[arg(long)]
        refine: bool,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The induced face-poset morphism.
    Poset(GraphInput),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DotKindArg {
    Comparability,
    Covering,
    Hasse,
}

#[derive(Subcommand, Debug)]
pub enum ExportCmd {
    #[command(group(ArgGroup::new("object").required(true).args(["poset", "morphism"])))]
    Dot {
        poset: Option<String>,
        #[arg(long)]
        morphism: Option<String>,
        #[arg(long, value_enum, default_value_t = DotKindArg::Hasse)]
        kind: DotKindArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum FixturesCmd {
    List,
    /// Summarize every bundled morphism.
    Run,
}
