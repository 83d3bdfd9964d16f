use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "edvar", version, about = "Exact Euclidean distance polynomials of real varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Seed for every random choice
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    /// S-pair budget for each Groebner computation (default: `EDVAR_BUDGET`,
    /// then 200000)
    #[arg(long, global = true)]
    pub budget: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Report `timing_ms` as null so that reruns are byte-identical
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A variety spec from a file or inline text.
#[derive(Debug, Clone, Args)]
pub struct Input {
    /// Spec file
    #[arg(long, conflicts_with = "inline")]
    pub input: Option<PathBuf>,

    /// Spec text, e.g. "vars x,y; gens x^2+y^2-1; codim 1"
    #[arg(long)]
    pub inline: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct Other {
    /// Second spec file
    #[arg(long, conflicts_with = "other_inline")]
    pub other_input: Option<PathBuf>,

    /// Second spec text
    #[arg(long)]
    pub other_inline: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct PointArg {
    /// Data point: comma-separated rationals or `symbolic`
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct SpecAt {
    #[command(flatten)]
    pub input: Input,
    #[command(flatten)]
    pub point: PointArg,
}

#[derive(Debug, Clone, Args)]
pub struct CmArg {
    /// Chern-Mather data, e.g. "m=1;n=3;deg=2,2"
    #[arg(long, conflicts_with = "entry")]
    pub cm: Option<String>,

    /// Name of a bundled table entry
    #[arg(long)]
    pub entry: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct MatrixArg {
    /// Rows separated by `;`, entries by `,`
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuadricArg {
    Generic,
    Frobenius,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// ED polynomial of a variety at a data point
    Edpoly(SpecAt),
    /// ED degree from seeded random data points
    Eddegree {
        #[command(flatten)]
        input: Input,
        /// Skip counting critical points
        #[arg(long)]
        no_cross_check: bool,
    },
    /// Dual variety of a homogeneous variety
    Dual(Input),
    /// Reflection identity between a variety and its dual
    #[command(name = "duality-check")]
    DualityCheck {
        #[command(flatten)]
        spec: SpecAt,
        /// The dual, computed when absent
        #[command(flatten)]
        dual: Other,
    },
    /// Discriminant in s of the ED polynomial
    Discriminant(SpecAt),
    /// Factor structure of the lowest term (symbolic data point)
    #[command(name = "lowest-term")]
    LowestTerm(Input),
    /// ED polynomial of a union against the product
    #[command(name = "union-check")]
    UnionCheck {
        #[command(flatten)]
        spec: SpecAt,
        #[command(flatten)]
        other: Other,
    },
    /// Orthogonal, scaling or translation equivariance
    #[command(name = "invariance-check")]
    InvarianceCheck {
        #[command(flatten)]
        spec: SpecAt,
        /// Orthogonal matrix, rows separated by `;`
        #[arg(long, allow_hyphen_values = true, group = "transform")]
        orthogonal: Option<String>,
        #[arg(long, allow_hyphen_values = true, group = "transform")]
        scale: Option<String>,
        #[arg(long, allow_hyphen_values = true, group = "transform")]
        translate: Option<String>,
    },
    /// ED polynomial at the origin against the projective closure
    #[command(name = "closure-check")]
    ClosureCheck(Input),

    /// s - q(π(u)) for an affine subspace
    #[command(name = "closed-form:affine")]
    Affine {
        #[arg(long, allow_hyphen_values = true)]
        base: String,
        /// Direction vector; repeat for each one
        #[arg(long = "dir", allow_hyphen_values = true)]
        dirs: Vec<String>,
        #[command(flatten)]
        point: PointArg,
    },
    /// Discriminant of the conic pencil
    #[command(name = "closed-form:conic")]
    Conic {
        /// Coefficients a,b,c,d,e,f of ax²+bxy+cy²+dx+ey+f, or `general`
        #[arg(long, allow_hyphen_values = true)]
        conic: String,
        #[command(flatten)]
        point: PointArg,
    },
    /// Matrices of bounded rank
    #[command(name = "closed-form:rank")]
    Rank {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        rank: usize,
    },
    /// Singular symmetric matrices, det(U² - sI)
    #[command(name = "closed-form:symmetric")]
    Symmetric(MatrixArg),
    /// ED degree of a general hypersurface
    #[command(name = "closed-form:hypersurface")]
    Hypersurface {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    /// Generic count minus singular-point contributions
    #[command(name = "closed-form:singular")]
    Singular {
        #[arg(long)]
        generic: u64,
        /// Contributions, comma-separated
        #[arg(long, value_delimiter = ',')]
        e: Vec<u64>,
    },
    /// d² - 2δ - 3κ
    #[command(name = "closed-form:plane-curve")]
    PlaneCurve {
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 0)]
        nodes: u64,
        #[arg(long, default_value_t = 0)]
        cusps: u64,
    },
    /// Veronese varieties
    #[command(name = "closed-form:veronese")]
    Veronese {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum, default_value_t = QuadricArg::Generic)]
        quadric: QuadricArg,
    },
    /// Lowest terms for the essential variety at a 3×3 matrix
    #[command(name = "closed-form:essential")]
    Essential(MatrixArg),

    /// ED degree from Chern-Mather degrees
    #[command(name = "chern:eddegree")]
    ChernEddegree(CmArg),
    /// Polar classes
    #[command(name = "chern:polar")]
    ChernPolar(CmArg),
    /// Degree of the dual
    #[command(name = "chern:dual-degree")]
    ChernDualDegree(CmArg),
    /// Chern-Mather degrees of a quadric section
    #[command(name = "chern:quadric-section")]
    ChernQuadricSection(CmArg),
    /// 2·EDdegree identity from the data of X∨
    #[command(name = "chern:two-eddegree")]
    ChernTwoEddegree {
        #[command(flatten)]
        cm: CmArg,
        #[arg(long)]
        x_degree: Option<i64>,
        #[arg(long)]
        hypersurface: bool,
    },
    /// Both sides of the power-of-two sum identity
    #[command(name = "chern:lemma")]
    ChernLemma {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        i: usize,
    },
    /// Every identity on the bundled table
    #[command(name = "chern:table")]
    ChernTable {
        /// Table file in place of the bundled one
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Edpoly(_) => "edpoly",
            Command::Eddegree { .. } => "eddegree",
            Command::Dual(_) => "dual",
            Command::DualityCheck { .. } => "duality-check",
            Command::Discriminant(_) => "discriminant",
            Command::LowestTerm(_) => "lowest-term",
            Command::UnionCheck { .. } => "union-check",
            Command::InvarianceCheck { .. } => "invariance-check",
            Command::ClosureCheck(_) => "closure-check",
            Command::Affine { .. } => "closed-form:affine",
            Command::Conic { .. } => "closed-form:conic",
            Command::Rank { .. } => "closed-form:rank",
            Command::Symmetric(_) => "closed-form:symmetric",
            Command::Hypersurface { .. } => "closed-form:hypersurface",
            Command::Singular { .. } => "closed-form:singular",
            Command::PlaneCurve { .. } => "closed-form:plane-curve",
            Command::Veronese { .. } => "closed-form:veronese",
            Command::Essential(_) => "closed-form:essential",
            Command::ChernEddegree(_) => "chern:eddegree",
            Command::ChernPolar(_) => "chern:polar",
            Command::ChernDualDegree(_) => "chern:dual-degree",
            Command::ChernQuadricSection(_) => "chern:quadric-section",
            Command::ChernTwoEddegree { .. } => "chern:two-eddegree",
            Command::ChernLemma { .. } => "chern:lemma",
            Command::ChernTable { .. } => "chern:table",
        }
    }
}

/// Library operation behind each command.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("edpoly", "ed_polynomial"),
    ("eddegree", "ed_degree"),
    ("dual", "dual_variety"),
    ("duality-check", "duality_reflection_check"),
    ("discriminant", "ed_poly_discriminant"),
    ("lowest-term", "lowest_term_factor_check"),
    ("union-check", "union_check"),
    ("invariance-check", "invariance_suite"),
    ("closure-check", "projective_closure_check"),
    ("closed-form:affine", "affine_subspace_edpoly"),
    ("closed-form:conic", "conic_edpoly_salmon"),
    ("closed-form:rank", "rank_variety_edpoly"),
    ("closed-form:symmetric", "symmetric_matrix_edpoly"),
    ("closed-form:hypersurface", "generic_hypersurface_ed_degree"),
    ("closed-form:singular", "singular_hypersurface_ed_degree"),
    ("closed-form:plane-curve", "plane_curve_ed_degree"),
    ("closed-form:veronese", "veronese_ed_degree"),
    ("closed-form:essential", "essential_lowest_terms"),
    ("chern:eddegree", "ed_degree_cm"),
    ("chern:polar", "polar_classes"),
    ("chern:dual-degree", "dual_degree_cm"),
    ("chern:quadric-section", "quadric_section_cm"),
    ("chern:two-eddegree", "check_two_eddegree"),
    ("chern:lemma", "lemma_two_sum"),
    ("chern:table", "CMTable::run_case"),
];
