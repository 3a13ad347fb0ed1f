use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

#[derive(Debug, Parser)]
#[command(
    name = "qcs",
    version,
    about = "Evaluate, verify and export q-deformed coherent-state quantities",
    after_help = "Exit codes: 0 success, 1 failed verification, 2 domain or parameter error, \
                  3 convergence failure, 4 IO error.\n\
                  Output goes to --out, else to <--out-dir>/<default name>, else stdout."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Deformation parameter, 0 < q < 1 [eval/export default: 0.5]
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub q: Option<f64>,
    /// Second parameter, -1 < alpha < q [eval/export default: 0]
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Truncation order (verify: highest basis index, default 10)
    #[arg(long, global = true)]
    pub nmax: Option<usize>,
    /// Relative tolerance for series and products
    #[arg(long, global = true, default_value_t = 1e-13)]
    pub tol: f64,
    /// Gauss-Legendre order for integrals over the interval
    #[arg(long, global = true, default_value_t = 400)]
    pub quad_order: usize,
    /// Bound on the discarded mass of the radial measure
    #[arg(long, global = true, default_value_t = 1e-15)]
    pub atoms_tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Directory for output files when --out is not given
    #[arg(long, global = true, env = "QCS_OUT_DIR")]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a single quantity
    #[command(after_help = EVAL_COLUMNS)]
    Eval(EvalArgs),
    /// Run verification suites; exit 1 if any check fails
    #[command(after_help = "Columns: suite, check, residual, threshold, passed.\n\
                            Footer: failed (count), passed.\n\
                            --q/--alpha restrict the default grid \
                            q in {0.3, 0.5, 0.8} x alpha in {-0.5, 0, 0.25}.")]
    Verify(VerifyArgs),
    /// Write tables for plotting or further processing
    #[command(after_help = EXPORT_COLUMNS)]
    Export(ExportArgs),
}

const EVAL_COLUMNS: &str = "Columns by subject:\n  \
    bracket        n, value                      ([n]_q)\n  \
    factorial      n, q_factorial, x_factorial\n  \
    pochhammer     n, re, im                     (n = -1 for the infinite product)\n  \
    qexp           series_re, series_im, product_re, product_im\n  \
    phi            n, x, value\n  \
    asc            n, x, recurrence, three_phi2  (three_phi2 = nan at alpha = 0)\n  \
    kernel         re, im\n  \
    normalization  r2, value\n  \
    wavefunction   x, closed_re, closed_im, series_re, series_im\n  \
    weight         x, value\n\
    Footers report the tolerance used (rel_tol) or the series tail estimate.\n\
    Complex arguments are written a+bi, e.g. 0.8+0.3i, -2i, 1.5.";

const EXPORT_COLUMNS: &str = "Columns by subject:\n  \
    atoms              index, radius, weight   (footer: sum_weight, tail_bound)\n  \
    quadrature         index, node, weight     (node is theta; footer: order, sum_weight)\n  \
    weight-curve       x, omega\n  \
    wavefunction-grid  x, re, im\n  \
    sweep              q, error                (footer: strictly_decreasing)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalSubject {
    Bracket,
    Factorial,
    Pochhammer,
    Qexp,
    Phi,
    Asc,
    Kernel,
    Normalization,
    Wavefunction,
    Weight,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub subject: EvalSubject,
    /// Index or degree (phi/asc default to --nmax)
    #[arg(long)]
    pub n: Option<u32>,
    /// Position in the support interval
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<f64>,
    /// Pochhammer base
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub a: Option<Complex64>,
    /// q-exponential argument
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub xi: Option<Complex64>,
    /// Coherent-state label
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub z: Option<Complex64>,
    /// Second kernel argument
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub w: Option<Complex64>,
    /// Squared modulus for the normalization
    #[arg(long)]
    pub r2: Option<f64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`
    pub suite: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportSubject {
    Atoms,
    Quadrature,
    WeightCurve,
    WavefunctionGrid,
    Sweep,
}

impl ExportSubject {
    pub fn file_stem(self) -> &'static str {
        match self {
            ExportSubject::Atoms => "atoms",
            ExportSubject::Quadrature => "quadrature",
            ExportSubject::WeightCurve => "weight-curve",
            ExportSubject::WavefunctionGrid => "wavefunction-grid",
            ExportSubject::Sweep => "sweep",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightRoute {
    /// Product formula for general alpha
    General,
    /// q-Gaussian formula, alpha = 0 only
    Qgauss,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(value_enum)]
    pub subject: ExportSubject,
    /// Number of sample points on curves and grids
    #[arg(long, default_value_t = 201)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = WeightRoute::General)]
    pub route: WeightRoute,
    /// Label for wavefunction-grid, and the limit label for sweep
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub z: Option<Complex64>,
    /// Order nu > 0 of the limit (sweep)
    #[arg(long, default_value_t = 1.0)]
    pub nu: f64,
    /// Position of the limit wavefunction (sweep)
    #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
    pub x: f64,
    /// Comma-separated q values approaching 1 (sweep)
    #[arg(long, value_delimiter = ',', default_values_t = [0.9, 0.99, 0.999])]
    pub q_list: Vec<f64>,
}

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .parse::<Complex64>()
        .map_err(|_| format!("`{s}` is not a complex number of the form a+bi"))
}
