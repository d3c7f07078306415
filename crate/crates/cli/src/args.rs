use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "skewcode",
    version,
    about = "Workbench for skew constacyclic codes over F_q and over F_q^t"
)]
pub struct Cli {
    /// Base field as `p`, `p,r` or `p,r,[modulus coefficients]`.
    #[arg(long, global = true, default_value = "2")]
    pub field: String,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Codeword budget for exhaustive distance searches.
    #[arg(long, global = true, default_value_t = skewcode::distance::DEFAULT_BUDGET)]
    pub budget: u128,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    /// JSON.
    Struct,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Describe the field, optionally evaluating one operation.
    Field(FieldArgs),
    /// Skew polynomial arithmetic in F_q[x; theta].
    #[command(subcommand)]
    Skew(SkewCmd),
    /// Linear codes over F_q.
    #[command(subcommand)]
    Code(CodeCmd),
    /// The product ring R = F_q^t.
    #[command(subcommand)]
    Ring(RingCmd),
    /// Linear codes over R.
    #[command(subcommand)]
    Ringcode(RingcodeCmd),
    /// Maps from codes over R to codes over F_q.
    #[command(subcommand)]
    Maps(MapsCmd),
    /// Rebuild every published example and compare with the claims.
    VerifyPaper(VerifyArgs),
    /// Rank all skew constacyclic codes of a given length.
    Search(SearchArgs),
}

#[derive(Args, Debug)]
pub struct FieldArgs {
    /// Show power-basis names (q <= 16).
    #[arg(long)]
    pub pretty: bool,
    /// One of add, sub, mul, div, pow.
    #[arg(long, requires_all = ["a", "b"])]
    pub op: Option<String>,
    #[arg(long)]
    pub a: Option<u64>,
    #[arg(long)]
    pub b: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct Twist {
    /// Frobenius exponent of theta.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub theta: i64,
    /// Element code of lambda.
    #[arg(long, default_value_t = 1)]
    pub lambda: u64,
}

#[derive(Args, Debug, Clone)]
pub struct Modulus {
    #[command(flatten)]
    pub twist: Twist,
    /// Length n of x^n - lambda.
    #[arg(long)]
    pub n: usize,
}

#[derive(Subcommand, Debug)]
pub enum SkewCmd {
    /// All factorizations f = h g with g monic.
    Factor {
        #[arg(long)]
        poly: String,
        /// Frobenius exponent of theta.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        theta: i64,
        #[arg(long, default_value_t = skewcode::skew::DEFAULT_DIVISOR_CAP)]
        cap: u128,
    },
    /// Right division f = q g + r.
    Divmod {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        by: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        theta: i64,
    },
    /// Monic right divisors of x^n - lambda.
    Divisors {
        #[command(flatten)]
        modulus: Modulus,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = skewcode::skew::DEFAULT_DIVISOR_CAP)]
        cap: u128,
    },
    /// Generator of the dual of the code generated by g.
    Dualgen {
        #[command(flatten)]
        modulus: Modulus,
        #[arg(long)]
        g: String,
    },
    /// Dual-containing / self-orthogonal test for the code generated by g.
    Contain {
        #[command(flatten)]
        modulus: Modulus,
        #[arg(long)]
        g: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CodeInput {
    /// Code file (JSON).
    #[arg(long = "in", conflicts_with = "matrix")]
    pub input: Option<PathBuf>,
    /// Plain matrix file: one row of element codes per line (uses --field).
    #[arg(long)]
    pub matrix: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CodeCmd {
    /// Exact minimum distance.
    Mindist {
        #[command(flatten)]
        input: CodeInput,
    },
    /// Dual code.
    Dual {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closure under the twisted shift; generator skew polynomial if closed.
    Check {
        #[command(flatten)]
        input: CodeInput,
        #[command(flatten)]
        twist: Twist,
        /// Also test quasi-twistedness of this index.
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Canonical (row-reduced) code file.
    Canon {
        #[command(flatten)]
        input: CodeInput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum RingCmd {
    /// Enumerate Aut(F_q^t).
    Aut {
        #[arg(long)]
        t: usize,
    },
    /// The 2^t ideals of F_q^t.
    Ideals {
        #[arg(long)]
        t: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct RingTwistArgs {
    /// Automorphism, e.g. "perm:[2,1] exps:[0,0]" (1-based permutation).
    #[arg(long)]
    pub theta: String,
    /// Unit of R, e.g. "[1,2]".
    #[arg(long)]
    pub lambda: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum RingcodeCmd {
    /// Characterization test, checked against direct closure.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        twist: RingTwistArgs,
    },
    /// Build the theta-cyclic code with a given first component (full-cycle theta).
    Build {
        /// Code file of the first component.
        #[arg(long)]
        c1: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        theta: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Number of theta-cyclic codes for a full-cycle theta and gcd(t, n) = 1.
    Count {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        theta: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct MapOutput {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also compute the minimum distance of the image.
    #[arg(long)]
    pub distance: bool,
}

#[derive(Subcommand, Debug)]
pub enum MapsCmd {
    /// phi: concatenation of the components.
    Phi {
        #[command(flatten)]
        io: MapOutput,
    },
    /// eta_M for an invertible t x t matrix.
    Eta {
        #[arg(long = "M")]
        m: String,
        #[command(flatten)]
        io: MapOutput,
    },
    /// Psi: sum of the components.
    Psi {
        #[command(flatten)]
        io: MapOutput,
    },
    /// diag(scalars) * Vandermonde(roots).
    Vandermonde {
        #[arg(long)]
        roots: String,
        #[arg(long)]
        scalars: String,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Also write the JSON report here.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[command(flatten)]
    pub modulus: Modulus,
    /// Search codes over R = F_q^t instead of F_q.
    #[arg(long, requires_all = ["t", "ring_theta"])]
    pub ring: bool,
    #[arg(long)]
    pub t: Option<usize>,
    /// Ring automorphism for --ring, e.g. "perm:[1,2] exps:[0,0]".
    #[arg(long)]
    pub ring_theta: Option<String>,
    /// Ring unit for --ring (default 1).
    #[arg(long)]
    pub ring_lambda: Option<String>,
    /// Candidate cap per divisor degree.
    #[arg(long, default_value_t = 1 << 20)]
    pub cap: u128,
    /// Also write the JSON table here.
    #[arg(long)]
    pub json: Option<PathBuf>,
}
