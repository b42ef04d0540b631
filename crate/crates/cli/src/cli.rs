use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(name = "pentaseries", version, about = "Expand (1-x)(1-x^2)(1-x^3)... exactly, four ways")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print the expanded series up to x^N.
    Expand(ExpandArgs),
    /// Print partition numbers p(n).
    Partition(PartitionArgs),
    /// Check stage identities, iterated division and root multiplicities.
    Verify(VerifyArgs),
    /// Time the product and both partition routes.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExpandMethod {
    Product,
    Method1,
    Method2,
    Closed,
    All,
}

impl ExpandMethod {
    pub fn name(self) -> &'static str {
        match self {
            ExpandMethod::Product => "product",
            ExpandMethod::Method1 => "method1",
            ExpandMethod::Method2 => "method2",
            ExpandMethod::Closed => "closed",
            ExpandMethod::All => "all",
        }
    }

    /// The four concrete methods, in report order.
    pub const CONCRETE: [ExpandMethod; 4] = [
        ExpandMethod::Product,
        ExpandMethod::Method1,
        ExpandMethod::Method2,
        ExpandMethod::Closed,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct ExpandArgs {
    #[arg(long, value_enum)]
    pub method: ExpandMethod,
    #[arg(long)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// List emitted terms instead of the summed series (method1, method2, closed).
    #[arg(long)]
    pub terms: bool,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false, id = "which")]
pub struct PartitionSelect {
    /// p(0) through p(N).
    #[arg(long, group = "which")]
    pub upto: Option<usize>,
    /// p(N) alone.
    #[arg(long, group = "which")]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct PartitionArgs {
    #[command(flatten)]
    pub select: PartitionSelect,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Highest stage checked for both telescoping methods.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub depth: u64,
    #[arg(long)]
    pub order: usize,
    /// Number of factors in the partial product whose roots are checked.
    #[arg(long, default_value_t = 10)]
    pub roots: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}
