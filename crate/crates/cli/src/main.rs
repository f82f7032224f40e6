mod format;
mod suites;

use std::fs;
use std::hash::Hasher;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eigensum_core::averaged::PairStrategy;
use eigensum_core::basis::SubsetStrategy;
use eigensum_core::graph::io::{parse_edge_list, parse_lattice_file, parse_pairs, write_edge_list, write_lattice_file};
use eigensum_core::graph::{
    gen_complete, gen_cycle, gen_grid, gen_join, gen_lattice_cluster, gen_path, gen_random_connected, gen_star,
};
use eigensum_core::lattice_bounds::{
    embeddability_certificate, karamata_transform_bound, verify_embedding, DimensionCertificate, EmbedVerdict,
    TransformFn,
};
use eigensum_core::report::DEFAULT_TOLERANCE;
use eigensum_core::spectra::{spectrum_with, trace_identity_report};
use eigensum_core::{BoundName, BoundReport, Graph, LatticeEmbedding, Solver, SpectrumKind, Tolerance, Verdict};
use serde::Serialize;

use crate::format::{g17, reports_csv, to_json, values_csv};
use crate::suites::{Spectra, SuiteOptions};

const LARGE_N: usize = 2000;

#[derive(Parser, Debug)]
#[command(
    name = "eigensum",
    version,
    about = "Eigenvalue sums of graph matrices and the bounds they obey"
)]
struct Cli {
    /// Relative tolerance: a bound holds when slack >= -tol*(1+|bound|).
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,

    /// Seed for `gen random` and `gen cluster`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Eigensolver: `tridiagonal` or `jacobi`.
    #[arg(long, global = true, default_value = "tridiagonal")]
    solver: Solver,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph in edge-list format (lattice format for `grid` and `cluster`).
    Gen(GenArgs),
    /// Eigenvalues in canonical order as `index,value` CSV.
    Spectrum(SpectrumArgs),
    /// Evaluate a bound suite and print a JSON array of reports.
    Bounds(BoundsArgs),
    /// Bounds for graphs with a known embedding in the cubic lattice.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Spectral obstructions to embedding the graph in Z^nu.
    EmbedCert(EmbedCertArgs),
    /// Every applicable suite, trace checks and a run manifest.
    Report(ReportArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Join,
    Random,
    Grid,
    Cluster,
}

#[derive(Args, Debug)]
struct GenArgs {
    family: Family,
    /// Vertex count, or `AxBxC` side lengths for `grid`.
    size: String,
    /// `p` for `join`, the edge probability for `random`.
    param: Option<String>,
    /// Lattice dimension for `cluster`.
    #[arg(long, default_value_t = 2)]
    nu: usize,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    /// Edge-list file, or `-` for stdin.
    #[arg(long)]
    file: PathBuf,
    #[arg(long, default_value = "laplacian")]
    kind: SpectrumKind,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Fiedler,
    Lsum,
    LaplacianPairs,
    Normalized,
    Adjacency,
    All,
}

#[derive(Args, Debug)]
struct SuiteFlags {
    /// Restrict the k-sweep to one value.
    #[arg(long)]
    k: Option<usize>,
    /// Restrict the L-sweep of `lsum` to one value.
    #[arg(long = "L", id = "L")]
    l: Option<usize>,
    /// Vertex subset choice for `lsum`: greedy-degree, degree-sorted or exhaustive.
    #[arg(long, default_value = "greedy-degree")]
    strategy: SubsetStrategy,
    /// Pair-set choice: greedy or exhaustive.
    #[arg(long, default_value = "greedy")]
    pair_strategy: PairStrategy,
    /// Explicit pair set, one `u v` per line (needs --k).
    #[arg(long)]
    pairs_file: Option<PathBuf>,
    /// Add the squared-eigenvalue bounds.
    #[arg(long)]
    squares: bool,
    /// Also evaluate the printed variants of corrected bounds (never asserted).
    #[arg(long)]
    paper_verbatim: bool,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    suite: Suite,
    /// Edge-list file, or `-` for stdin.
    #[arg(long)]
    file: PathBuf,
    #[command(flatten)]
    flags: SuiteFlags,
}

#[derive(Subcommand, Debug)]
enum LatticeCommand {
    /// Check every lattice bound against a lattice file.
    Check(LatticeCheckArgs),
}

#[derive(Args, Debug)]
struct LatticeCheckArgs {
    /// Lattice file, or `-` for stdin.
    #[arg(long)]
    file: PathBuf,
    /// Majorization transfers to evaluate: identity, sqrt, exp-neg:T, riesz:T:P.
    #[arg(long = "transform", default_values = ["sqrt", "exp-neg:1"])]
    transforms: Vec<TransformFn>,
    #[arg(long)]
    paper_verbatim: bool,
}

#[derive(Args, Debug)]
struct EmbedCertArgs {
    /// Edge-list file, or `-` for stdin.
    #[arg(long)]
    file: PathBuf,
    #[arg(long, default_value_t = 3)]
    max_dim: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// Edge-list file (lattice file with --lattice), or `-` for stdin.
    #[arg(long)]
    file: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
    /// Read a lattice file and add the lattice suite.
    #[arg(long)]
    lattice: bool,
    /// Largest dimension for the embeddability certificate.
    #[arg(long, default_value_t = 3)]
    max_dim: usize,
    #[command(flatten)]
    flags: SuiteFlags,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] eigensum_core::Error),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write output: {0}")]
    Write(io::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(eigensum_core::Error::NoConvergence { .. }) => 3,
            _ => 2,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Whether any asserted bound failed.
struct Outcome {
    failed: bool,
}

impl Outcome {
    fn from_reports(reports: &[BoundReport]) -> Self {
        Outcome {
            failed: reports.iter().any(BoundReport::is_failure),
        }
    }

    fn clean() -> Self {
        Outcome { failed: false }
    }
}

struct Ctx {
    tol: Tolerance,
    seed: u64,
    solver: Solver,
    out: Option<PathBuf>,
}

impl Ctx {
    fn emit(&self, text: &str) -> CliResult<()> {
        match &self.out {
            Some(path) => fs::write(path, text).map_err(CliError::Write),
            None => {
                let mut stdout = io::stdout().lock();
                stdout.write_all(text.as_bytes()).map_err(CliError::Write)?;
                stdout.flush().map_err(CliError::Write)
            }
        }
    }
}

fn read_input(path: &Path) -> CliResult<String> {
    let err = |source| CliError::Read {
        path: path.to_path_buf(),
        source,
    };
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(err)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(err)
    }
}

fn with_path(path: &Path, e: eigensum_core::Error) -> CliError {
    CliError::Usage(format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    let g = parse_edge_list(&read_input(path)?).map_err(|e| with_path(path, e))?;
    warn_if_large(&g);
    Ok(g)
}

fn load_lattice(path: &Path) -> CliResult<(Graph, LatticeEmbedding)> {
    let (g, emb) = parse_lattice_file(&read_input(path)?).map_err(|e| with_path(path, e))?;
    warn_if_large(&g);
    Ok((g, emb))
}

fn warn_if_large(g: &Graph) {
    if g.n() > LARGE_N {
        eprintln!(
            "warning: n = {} exceeds {LARGE_N}; dense eigensolves and pair sweeps may be slow",
            g.n()
        );
    }
}

fn suite_options(flags: &SuiteFlags, tol: Tolerance, n: usize) -> CliResult<SuiteOptions> {
    let pairs = match &flags.pairs_file {
        Some(path) => Some(parse_pairs(&read_input(path)?, n).map_err(|e| with_path(path, e))?),
        None => None,
    };
    Ok(SuiteOptions {
        k: flags.k,
        l: flags.l,
        subset_strategy: flags.strategy,
        pair_strategy: flags.pair_strategy,
        pairs,
        squares: flags.squares,
        verbatim: flags.paper_verbatim,
        tol,
    })
}

fn parse_count(text: &str, what: &str) -> CliResult<usize> {
    text.parse()
        .map_err(|_| CliError::Usage(format!("{what} must be a nonnegative integer, got `{text}`")))
}

fn cmd_gen(ctx: &Ctx, args: &GenArgs) -> CliResult<Outcome> {
    let param = |what: &str| {
        args.param
            .as_deref()
            .ok_or_else(|| CliError::Usage(format!("`gen {:?}` needs {what}", args.family).to_lowercase()))
    };
    let text = match args.family {
        Family::Grid => {
            let dims = args
                .size
                .split('x')
                .map(|d| parse_count(d, "grid side"))
                .collect::<CliResult<Vec<_>>>()?;
            let (g, emb) = gen_grid(&dims)?;
            write_lattice_file(&g, &emb)
        }
        Family::Cluster => {
            let n = parse_count(&args.size, "n")?;
            let (g, emb) = gen_lattice_cluster(args.nu, n, ctx.seed)?;
            write_lattice_file(&g, &emb)
        }
        family => {
            let n = parse_count(&args.size, "n")?;
            let g = match family {
                Family::Path => gen_path(n)?,
                Family::Cycle => gen_cycle(n)?,
                Family::Complete => gen_complete(n)?,
                Family::Star => gen_star(n)?,
                Family::Join => gen_join(n, parse_count(param("p")?, "p")?)?,
                Family::Random => {
                    let text = param("an edge probability")?;
                    let p: f64 = text
                        .parse()
                        .map_err(|_| CliError::Usage(format!("edge probability must be a number, got `{text}`")))?;
                    gen_random_connected(n, p, ctx.seed)?
                }
                Family::Grid | Family::Cluster => unreachable!("handled above"),
            };
            write_edge_list(&g)
        }
    };
    ctx.emit(&text)?;
    Ok(Outcome::clean())
}

fn cmd_spectrum(ctx: &Ctx, args: &SpectrumArgs) -> CliResult<Outcome> {
    let g = load_graph(&args.file)?;
    let s = spectrum_with(&g, args.kind, false, ctx.solver)?;
    ctx.emit(&values_csv(&s.values))?;
    Ok(Outcome::clean())
}

fn run_suite(suite: Suite, g: &Graph, sp: &mut Spectra, opts: &SuiteOptions) -> CliResult<Vec<BoundReport>> {
    let mut reports = match suite {
        Suite::Fiedler => suites::fiedler(g, sp, opts)?,
        Suite::Lsum => suites::lsum(g, sp, opts)?,
        Suite::LaplacianPairs => suites::laplacian_pairs(g, sp, opts)?,
        Suite::Normalized => suites::normalized(g, sp, opts)?,
        Suite::Adjacency => suites::adjacency(g, sp, opts)?,
        Suite::All => suites::all(g, sp, opts)?,
    };
    suites::mark_disconnected(g, &mut reports);
    Ok(reports)
}

fn cmd_bounds(ctx: &Ctx, args: &BoundsArgs) -> CliResult<Outcome> {
    let g = load_graph(&args.file)?;
    let opts = suite_options(&args.flags, ctx.tol, g.n())?;
    let mut sp = Spectra::new(&g, ctx.solver);
    let reports = run_suite(args.suite, &g, &mut sp, &opts)?;
    ctx.emit(&to_json(&reports))?;
    Ok(Outcome::from_reports(&reports))
}

fn lattice_reports(
    g: &Graph,
    emb: &LatticeEmbedding,
    sp: &mut Spectra,
    transforms: &[TransformFn],
    verbatim: bool,
    tol: Tolerance,
) -> CliResult<Vec<BoundReport>> {
    let lap = sp.get(SpectrumKind::Laplacian)?;
    let mut reports = verify_embedding(g, emb, lap, verbatim, tol)?;
    for &f in transforms {
        for k in 1..=g.n() {
            reports.push(karamata_transform_bound(lap, g.m(), emb.nu(), f, k, tol)?);
        }
    }
    Ok(reports)
}

fn cmd_lattice(ctx: &Ctx, cmd: &LatticeCommand) -> CliResult<Outcome> {
    let LatticeCommand::Check(args) = cmd;
    let (g, emb) = load_lattice(&args.file)?;
    let mut sp = Spectra::new(&g, ctx.solver);
    let reports = lattice_reports(&g, &emb, &mut sp, &args.transforms, args.paper_verbatim, ctx.tol)?;
    ctx.emit(&to_json(&reports))?;
    Ok(Outcome::from_reports(&reports))
}

/// One line of `embed-cert` output.
#[derive(Serialize)]
struct CertRow {
    nu: usize,
    verdict: &'static str,
    first_violation_k: Option<usize>,
    bound: Option<BoundName>,
    slack: Option<f64>,
    implied_by: Option<usize>,
}

impl From<&DimensionCertificate> for CertRow {
    fn from(c: &DimensionCertificate) -> Self {
        match c.verdict {
            EmbedVerdict::Excluded {
                k,
                bound,
                slack,
                implied_by,
            } => CertRow {
                nu: c.nu,
                verdict: "EXCLUDED",
                first_violation_k: Some(k),
                bound: Some(bound),
                slack: Some(slack),
                implied_by,
            },
            EmbedVerdict::NotExcluded => CertRow {
                nu: c.nu,
                verdict: "NOT_EXCLUDED",
                first_violation_k: None,
                bound: None,
                slack: None,
                implied_by: None,
            },
        }
    }
}

fn certificate_rows(g: &Graph, sp: &mut Spectra, max_dim: usize, tol: Tolerance) -> CliResult<Vec<CertRow>> {
    let lap = sp.get(SpectrumKind::Laplacian)?;
    Ok(embeddability_certificate(g, lap, max_dim, tol)?
        .iter()
        .map(CertRow::from)
        .collect())
}

fn cmd_embed_cert(ctx: &Ctx, args: &EmbedCertArgs) -> CliResult<Outcome> {
    let g = load_graph(&args.file)?;
    let mut sp = Spectra::new(&g, ctx.solver);
    let rows = certificate_rows(&g, &mut sp, args.max_dim, ctx.tol)?;
    ctx.emit(&to_json(&rows))?;
    Ok(Outcome::clean())
}

#[derive(Serialize)]
struct RunManifest {
    tool: &'static str,
    version: &'static str,
    input_digest: String,
    seed: u64,
    tolerance: f64,
    solver: &'static str,
    command_line: Vec<String>,
}

#[derive(Serialize)]
struct GraphSummary {
    n: usize,
    m: usize,
    connected: bool,
    min_degree: usize,
    max_degree: usize,
    lattice_dimension: Option<usize>,
}

#[derive(Serialize, Default)]
struct Summary {
    reports: usize,
    pass: usize,
    equality: usize,
    fail: usize,
    not_applicable: usize,
    informational: usize,
    asserted_failures: usize,
}

impl Summary {
    fn of(reports: &[BoundReport]) -> Self {
        let mut s = Summary {
            reports: reports.len(),
            ..Summary::default()
        };
        for r in reports {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Equality => s.equality += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::NotApplicable => s.not_applicable += 1,
            }
            s.informational += usize::from(!r.asserted);
            s.asserted_failures += usize::from(r.is_failure());
        }
        s
    }
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    manifest: RunManifest,
    graph: GraphSummary,
    summary: Summary,
    reports: &'a [BoundReport],
    embedding: Vec<CertRow>,
}

/// 64-bit FNV-1a of the canonical re-serialization of the input.
fn input_digest(canonical: &str) -> String {
    let mut h = fnv::FnvHasher::default();
    h.write(canonical.as_bytes());
    format!("fnv1a64:{:016x}", h.finish())
}

fn solver_name(s: Solver) -> &'static str {
    match s {
        Solver::Tridiagonal => "tridiagonal",
        Solver::Jacobi => "jacobi",
    }
}

fn cmd_report(ctx: &Ctx, args: &ReportArgs) -> CliResult<Outcome> {
    let (g, emb) = if args.lattice {
        let (g, emb) = load_lattice(&args.file)?;
        (g, Some(emb))
    } else {
        (load_graph(&args.file)?, None)
    };
    let canonical = match &emb {
        Some(e) => write_lattice_file(&g, e),
        None => write_edge_list(&g),
    };
    let opts = suite_options(&args.flags, ctx.tol, g.n())?;
    let mut sp = Spectra::new(&g, ctx.solver);

    let mut reports: Vec<BoundReport> = trace_identity_report(&g, sp.get(SpectrumKind::Laplacian)?, ctx.tol)?.into();
    reports.extend(run_suite(Suite::All, &g, &mut sp, &opts)?);
    if let Some(e) = &emb {
        let transforms = [TransformFn::Sqrt, TransformFn::ExpNeg { t: 1.0 }];
        reports.extend(lattice_reports(&g, e, &mut sp, &transforms, opts.verbatim, ctx.tol)?);
    }
    let embedding = if g.is_connected() {
        certificate_rows(&g, &mut sp, args.max_dim, ctx.tol)?
    } else {
        eprintln!("warning: graph is not connected; skipping the embeddability certificate");
        Vec::new()
    };

    let manifest = RunManifest {
        tool: "eigensum",
        version: env!("CARGO_PKG_VERSION"),
        input_digest: input_digest(&canonical),
        seed: ctx.seed,
        tolerance: ctx.tol.0,
        solver: solver_name(ctx.solver),
        command_line: std::iter::once("eigensum".to_string())
            .chain(std::env::args().skip(1))
            .collect(),
    };
    let text = match args.format {
        OutFormat::Json => to_json(&ReportDocument {
            manifest,
            graph: GraphSummary {
                n: g.n(),
                m: g.m(),
                connected: g.is_connected(),
                min_degree: g.min_degree(),
                max_degree: g.max_degree(),
                lattice_dimension: emb.as_ref().map(LatticeEmbedding::nu),
            },
            summary: Summary::of(&reports),
            reports: &reports,
            embedding,
        }),
        OutFormat::Csv => {
            let mut head = String::new();
            head.push_str(&format!("# tool={} version={}\n", manifest.tool, manifest.version));
            head.push_str(&format!("# input_digest={}\n", manifest.input_digest));
            head.push_str(&format!(
                "# seed={} tolerance={} solver={}\n",
                manifest.seed,
                g17(manifest.tolerance),
                manifest.solver
            ));
            head.push_str(&format!("# command_line={}\n", manifest.command_line.join(" ")));
            for row in &embedding {
                head.push_str(&format!("# embed nu={} verdict={}", row.nu, row.verdict));
                if let (Some(k), Some(b), Some(s)) = (row.first_violation_k, row.bound, row.slack) {
                    head.push_str(&format!(" k={k} bound={b} slack={}", g17(s)));
                }
                head.push('\n');
            }
            head + &reports_csv(&reports)
        }
    };
    ctx.emit(&text)?;
    Ok(Outcome::from_reports(&reports))
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    if !(cli.tolerance >= 0.0 && cli.tolerance.is_finite()) {
        return Err(CliError::Usage(format!(
            "tolerance must be finite and >= 0, got {}",
            cli.tolerance
        )));
    }
    let ctx = Ctx {
        tol: Tolerance(cli.tolerance),
        seed: cli.seed,
        solver: cli.solver,
        out: cli.out.clone(),
    };
    match &cli.command {
        Command::Gen(a) => cmd_gen(&ctx, a),
        Command::Spectrum(a) => cmd_spectrum(&ctx, a),
        Command::Bounds(a) => cmd_bounds(&ctx, a),
        Command::Lattice(c) => cmd_lattice(&ctx, c),
        Command::EmbedCert(a) => cmd_embed_cert(&ctx, a),
        Command::Report(a) => cmd_report(&ctx, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome { failed: false }) => ExitCode::SUCCESS,
        Ok(Outcome { failed: true }) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
