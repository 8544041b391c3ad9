//! The `turan` command line. Output is TSV (`key<TAB>value`) unless
//! `--human` is given; files use the formats of [`crate::format`].

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use turan_core::certificate::{Rejection, Verdict};
use turan_core::constructions::{
    b_rec, density_report, fact21_check_with, ConstructionSpec, Fact21Center, LimitDensity,
};
use turan_core::density::{edge_density, p};
use turan_core::enumerate::SIZE_GUARD;
use turan_core::numeric::{
    brec_split_ratio, parse_rational, ratio, to_decimal, two_sqrt3_minus_3, REPORT_DIGITS,
};
use turan_core::partition::{
    bad_missing, degree_gap_check, is_locally_maximal, lemma22_gap, low_degree_set, prop33_expr, side_of,
    DEFAULT_RESTARTS,
};
use turan_core::sdp::{default_denominator_bound, round_float, round_solution};
use turan_core::{CanonKey, Rational, Vertex};

use crate::cache::DiskCache;
use crate::config::{Config, TypeSelection};
use crate::error::{Error, Result};
use crate::format::certificate::{certificate_to_string, parse_certificate};
use crate::format::graph::{enumeration_to_string, graph_to_string, read_graph};
use crate::format::sdp::{parse_sdp, sdp_to_string, Values};
use crate::format::solution::parse_solution;
use crate::format::table::table_to_string;
use crate::format::{read_file, write_file};
use crate::par;
use crate::resolve::{resolve_family, resolve_graph};

/// Largest graph for which `partition --analyze` also reports the exact
/// max-cut by trying every bipartition.
pub const EXACT_MU_LIMIT: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "turan", version, about = "Turán density toolkit for 3-uniform hypergraphs")]
pub struct Cli {
    /// `key = value` settings file; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Aligned `key: value` output instead of TSV.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List family-free graphs on m vertices up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Build or report an extremal construction, or audit the split inequalities.
    Construct(ConstructArgs),
    /// Densities in a graph, or a pair-density table.
    Density(DensityArgs),
    /// Write the flag-algebra SDP in SDPA sparse form.
    EmitSdp(EmitSdpArgs),
    /// Round a floating solver solution to an exact certificate.
    Round(RoundArgs),
    /// Check a certificate exactly.
    Verify(VerifyArgs),
    /// Bipartition diagnostics and max-cut search.
    Partition(PartitionArgs),
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    m: Option<usize>,
    /// Forbidden family, e.g. `C4_3,induced:F32_BAR` or graph file paths.
    #[arg(long)]
    forbid: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Allow m above the size guard of 7.
    #[arg(long)]
    unbounded: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Brec,
    Partite3,
    K4,
    Semibipartite,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Center {
    Printed,
    Optimizer,
}

impl From<Center> for Fact21Center {
    fn from(c: Center) -> Self {
        match c {
            Center::Printed => Fact21Center::AsPrinted,
            Center::Optimizer => Fact21Center::Optimizer,
        }
    }
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long, value_enum, required_unless_present_any = ["fact21_grid", "fact21_point"])]
    kind: Option<Kind>,
    /// Vertex count; parts are balanced when `--sizes` is absent.
    #[arg(long)]
    n: Option<usize>,
    /// Part sizes (3 for partite3, 4 for k4, 2 for semibipartite).
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// BRec level sizes; default the optimal splits.
    #[arg(long, value_delimiter = ',')]
    splits: Option<Vec<usize>>,
    /// Write the graph here.
    #[arg(long)]
    emit: Option<PathBuf>,
    /// Print the density report.
    #[arg(long)]
    report: bool,
    /// Check freeness of this family by scanning vertex subsets.
    #[arg(long)]
    check: Option<String>,
    /// Audit both split inequalities on x1 = k/STEPS.
    #[arg(long, conflicts_with = "kind")]
    fact21_grid: Option<u64>,
    /// Check both split inequalities at one x1 (x2 = 1 - x1 unless `--x2`).
    #[arg(long, conflicts_with = "kind")]
    fact21_point: Option<String>,
    #[arg(long, requires = "fact21_point")]
    x2: Option<String>,
    /// Center of the quadratic term in the second inequality.
    #[arg(long, value_enum, default_value = "printed")]
    center: Center,
}

#[derive(Debug, Args)]
struct DensityArgs {
    /// Host graph file.
    #[arg(long, required_unless_present = "type_key")]
    graph: Option<PathBuf>,
    /// p(F, H) for this graph (file or built-in name).
    #[arg(long)]
    of: Option<String>,
    /// Target size; with `--graph`, p(F, H) for every admissible F.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    forbid: Option<String>,
    /// Pair-density table for this type (canonical key, hex).
    #[arg(long = "type", requires = "flag_size")]
    type_key: Option<String>,
    #[arg(long)]
    flag_size: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EmitSdpArgs {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    forbid: Option<String>,
    /// `default`, `none`, or `key:flag_size,k<size>:flag_size,...`.
    #[arg(long)]
    types: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Decimal values for solvers that cannot read `p/q`.
    #[arg(long)]
    decimal: bool,
}

#[derive(Debug, Args)]
struct RoundArgs {
    /// Model written by `emit-sdp` (rational values).
    #[arg(long, required_unless_present = "value")]
    sdp: Option<PathBuf>,
    /// Solver output: floats in block order.
    #[arg(long, requires = "sdp")]
    solution: Option<PathBuf>,
    /// Round a single number instead.
    #[arg(long, conflicts_with = "sdp", allow_hyphen_values = true)]
    value: Option<f64>,
    /// Largest denominator (default 2^32).
    #[arg(long)]
    denominator: Option<BigInt>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    cert: PathBuf,
    /// Family to check against instead of the one the certificate names.
    #[arg(long)]
    forbid: Option<String>,
}

#[derive(Debug, Args)]
struct PartitionArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Full diagnostics of the partition.
    #[arg(long)]
    analyze: bool,
    /// Vertices of V1 (V2 is the rest); default the best local-search cut.
    #[arg(long, value_delimiter = ',')]
    v1: Option<Vec<Vertex>>,
    /// Slack of the structural inequality (rational).
    #[arg(long, default_value = "0")]
    xi: String,
    #[arg(long)]
    restarts: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Low-degree set parameter (rational, positive).
    #[arg(long)]
    delta: Option<String>,
    /// Density used by the low-degree threshold; default 2 sqrt 3 - 3.
    #[arg(long)]
    pi: Option<String>,
    /// Also list every bad and missing edge.
    #[arg(long)]
    list: bool,
}

/// Collected output rows.
struct Report {
    human: bool,
    rows: Vec<(String, String)>,
}

impl Report {
    fn new(human: bool) -> Self {
        Report { human, rows: Vec::new() }
    }

    fn kv(&mut self, key: impl Into<String>, value: impl ToString) {
        self.rows.push((key.into(), value.to_string()));
    }

    fn render(&self) -> String {
        let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut s = String::new();
        for (k, v) in &self.rows {
            if self.human {
                writeln!(s, "{:width$}  {v}", format!("{k}:"), width = width + 1).unwrap();
            } else {
                writeln!(s, "{k}\t{v}").unwrap();
            }
        }
        s
    }
}

fn print(text: &str) {
    // A closed pipe is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn rational_arg(name: &str, v: &str) -> Result<Rational> {
    parse_rational(v).ok_or_else(|| Error::Usage(format!("--{name}: expected a rational, got `{v}`")))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn edge_str(e: &[Vertex; 3]) -> String {
    format!("{} {} {}", e[0], e[1], e[2])
}

/// Writes `text` to `out`, or prints it when there is no path.
fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => write_file(p, text),
        None => {
            print(text);
            Ok(())
        }
    }
}

struct Ctx {
    config: Config,
    human: bool,
    disk: Option<DiskCache>,
}

impl Ctx {
    fn family(&self) -> Result<turan_core::Family> {
        resolve_family(self.config.family.as_deref().unwrap_or("none"))
    }

    fn m(&self) -> Result<usize> {
        self.config.m.ok_or_else(|| Error::Usage("`--m` is required (or `m` in the config file)".into()))
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code: 0 on success, 1 on domain errors and rejected
/// certificates, 2 on usage errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli) -> Result<i32> {
    let file = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let mut flags = Config {
        jobs: cli.jobs,
        ..Config::default()
    };
    match &cli.command {
        Command::Enumerate(a) => {
            flags.m = a.m;
            flags.family = a.forbid.clone();
            flags.out = a.out.clone();
        }
        Command::Density(a) => {
            flags.m = a.m;
            flags.family = a.forbid.clone();
            flags.out = a.out.clone();
        }
        Command::EmitSdp(a) => {
            flags.m = a.m;
            flags.family = a.forbid.clone();
            flags.out = a.out.clone();
            flags.types = a.types.as_deref().map(str::parse).transpose()?;
        }
        Command::Round(a) => {
            flags.denominator = a.denominator.clone();
            flags.out = a.out.clone();
        }
        Command::Verify(a) => flags.family = a.forbid.clone(),
        Command::Partition(a) => {
            flags.restarts = a.restarts;
            flags.seed = a.seed;
        }
        Command::Construct(a) => flags.out = a.emit.clone(),
    }
    let ctx = Ctx {
        config: file.overridden_by(flags),
        human: cli.human,
        disk: DiskCache::from_env(),
    };
    let jobs = ctx.config.jobs;
    par::with_jobs(jobs, || match &cli.command {
        Command::Enumerate(a) => enumerate(&ctx, a),
        Command::Construct(a) => construct(&ctx, a),
        Command::Density(a) => density(&ctx, a),
        Command::EmitSdp(a) => emit_sdp(&ctx, a),
        Command::Round(a) => round(&ctx, a),
        Command::Verify(a) => verify(&ctx, &a.cert),
        Command::Partition(a) => partition(&ctx, a),
    })
}

fn enumerate(ctx: &Ctx, a: &EnumerateArgs) -> Result<i32> {
    let m = ctx.m()?;
    if m > SIZE_GUARD && !a.unbounded {
        return Err(turan_core::Error::SizeGuard(m).into());
    }
    let family = ctx.family()?;
    let graphs = par::enumerate(m, &family);
    emit(ctx.config.out.as_deref(), &enumeration_to_string(&graphs))?;
    Ok(0)
}

fn spec_from(a: &ConstructArgs, kind: Kind) -> Result<ConstructionSpec> {
    let need = |k: usize| -> Result<Vec<usize>> {
        if !a.sizes.is_empty() {
            if a.sizes.len() != k {
                return Err(Error::Usage(format!("--sizes needs {k} values for this kind")));
            }
            if a.n.is_some_and(|n| n != a.sizes.iter().sum::<usize>()) {
                return Err(Error::Usage("--n disagrees with the sum of --sizes".into()));
            }
            return Ok(a.sizes.clone());
        }
        let n = a.n.ok_or_else(|| Error::Usage("give --n or --sizes".into()))?;
        Ok((0..k).map(|i| n / k + usize::from(i < n % k)).collect())
    };
    Ok(match kind {
        Kind::Brec => {
            let n = a.n.ok_or_else(|| Error::Usage("--kind brec needs --n".into()))?;
            match &a.splits {
                Some(s) => ConstructionSpec::BRec { n, splits: s.clone() },
                None => ConstructionSpec::brec_optimal(n),
            }
        }
        Kind::Partite3 => {
            let s = need(3)?;
            ConstructionSpec::Partite3([s[0], s[1], s[2]])
        }
        Kind::K4 => {
            let s = need(4)?;
            ConstructionSpec::K4Blowup([s[0], s[1], s[2], s[3]])
        }
        Kind::Semibipartite => {
            if a.sizes.is_empty() {
                // V1 gets about two thirds, where 3 x1^2 x2 peaks.
                let n = a.n.ok_or_else(|| Error::Usage("give --n or --sizes".into()))?;
                let n1 = (2 * n + 1) / 3;
                ConstructionSpec::SemiBipartite(n1, n - n1)
            } else {
                let s = need(2)?;
                ConstructionSpec::SemiBipartite(s[0], s[1])
            }
        }
    })
}

fn dec(r: &Rational) -> String {
    to_decimal(r, REPORT_DIGITS)
}

fn construct(ctx: &Ctx, a: &ConstructArgs) -> Result<i32> {
    let mut rep = Report::new(ctx.human);
    if let Some(steps) = a.fact21_grid {
        if steps == 0 {
            return Err(Error::Usage("--fact21-grid needs at least one step".into()));
        }
        let g = par::fact21_grid(steps, a.center.into())?;
        let bound = two_sqrt3_minus_3() / ratio(6, 1);
        rep.kv("points", g.points);
        rep.kv("max_first_lhs", dec(&g.max_first_lhs));
        rep.kv("first_bound", dec(&bound));
        rep.kv("argmax_x1", &g.argmax_x1);
        rep.kv("argmax_x1_decimal", dec(&g.argmax_x1));
        rep.kv("first_violations", g.first_violations);
        rep.kv("second_violations", g.second_violations);
        if let Some(x) = &g.first_second_violation {
            rep.kv("first_second_violation_x1", x);
        }
        print(&rep.render());
        return Ok(0);
    }
    if let Some(x1) = &a.fact21_point {
        let x1 = rational_arg("fact21-point", x1)?;
        let x2 = match &a.x2 {
            Some(v) => rational_arg("x2", v)?,
            None => ratio(1, 1) - &x1,
        };
        let r = fact21_check_with(&x1, &x2, a.center.into())?;
        rep.kv("first_lhs", dec(&r.first.lhs));
        rep.kv("first_bound", dec(&r.first.bound));
        rep.kv("first_holds", r.first.holds);
        match &r.second {
            Some(s) => {
                rep.kv("second_lhs", dec(&s.lhs));
                rep.kv("second_bound", dec(&s.bound));
                rep.kv("second_holds", s.holds);
            }
            None => rep.kv("second_holds", "n/a (x1 < 1/2)"),
        }
        print(&rep.render());
        return Ok(0);
    }

    let kind = a.kind.expect("clap requires a kind");
    let spec = spec_from(a, kind)?;
    spec.validate()?;
    let wants_graph = a.emit.is_some() || a.check.is_some() || !a.report;
    let graph = if wants_graph {
        Some(turan_core::constructions::build(&spec)?)
    } else {
        None
    };
    if let (Some(path), Some(g)) = (&ctx.config.out, &graph) {
        write_file(path, &graph_to_string(g))?;
    }
    if a.report {
        let r = density_report(&spec)?;
        rep.kv("kind", format!("{kind:?}").to_lowercase());
        rep.kv("n", r.n);
        rep.kv("edges", r.edges);
        if let ConstructionSpec::BRec { n, splits } = &spec {
            let opt = b_rec(*n);
            rep.kv("b_rec", opt.value);
            rep.kv("splits", join(splits));
            rep.kv("optimal", *splits == opt.splits);
            if let Some(&n1) = splits.first() {
                let share = ratio(n1 as i64, *n as i64);
                rep.kv("first_split_ratio", dec(&share));
                rep.kv("first_split_ratio_limit", dec(&brec_split_ratio()));
            }
        }
        if let Some(d) = &r.density {
            rep.kv("density", d);
            rep.kv("density_decimal", dec(d));
        }
        rep.kv("normalized", &r.normalized);
        rep.kv("normalized_decimal", dec(&r.normalized));
        match &r.limit {
            Some(LimitDensity::Exact(x)) => rep.kv("limit", x),
            Some(LimitDensity::Decimal(x)) => rep.kv("limit", x),
            None => rep.kv("limit", "n/a"),
        }
    }
    if let (Some(fam), Some(g)) = (&a.check, &graph) {
        let family = resolve_family(fam)?;
        let v = par::scan_violation(g, &family);
        rep.kv("family", family.key());
        rep.kv("free", v.is_none());
        if let Some((i, set)) = v {
            rep.kv("violation_member", &family.members()[i].name);
            rep.kv("violation_vertices", join(&set));
        }
    }
    if !a.report && a.check.is_none() && a.emit.is_none() {
        print(&graph_to_string(graph.as_ref().expect("built")));
    }
    print(&rep.render());
    Ok(0)
}

fn density(ctx: &Ctx, a: &DensityArgs) -> Result<i32> {
    let family = ctx.family()?;
    if let Some(hex) = &a.type_key {
        let sigma = CanonKey::from_hex(hex)?.to_graph()?;
        let flag_size = a.flag_size.expect("clap requires --flag-size");
        let m = ctx.m()?;
        let targets = par::enumerate(m, &family);
        let table = par::table(&sigma, flag_size, &targets, &family, ctx.disk.as_ref())?;
        emit(ctx.config.out.as_deref(), &table_to_string(&table))?;
        return Ok(0);
    }
    let h = read_graph(a.graph.as_deref().expect("clap requires --graph"))?;
    let mut rep = Report::new(ctx.human);
    rep.kv("n", h.n());
    rep.kv("edges", h.edge_count());
    if h.n() >= 3 {
        let d = edge_density(&h)?;
        rep.kv("edge_density", &d);
        rep.kv("edge_density_decimal", dec(&d));
    }
    if let Some(f) = &a.of {
        let f = resolve_graph(f)?;
        if f.n() > h.n() {
            return Err(Error::Usage("--of graph has more vertices than --graph".into()));
        }
        rep.kv("p", p(&f, &h));
    }
    if let Some(m) = a.m {
        if m > h.n() {
            return Err(Error::Usage("--m exceeds the host graph size".into()));
        }
        for (i, f) in par::enumerate(m, &family).iter().enumerate() {
            rep.kv(format!("p\t{i}\t{}", f.canon_key()), p(f, &h));
        }
    }
    let text = rep.render();
    emit(ctx.config.out.as_deref(), &text)?;
    Ok(0)
}

fn emit_sdp(ctx: &Ctx, a: &EmitSdpArgs) -> Result<i32> {
    let m = ctx.m()?;
    let family = ctx.family()?;
    let types = ctx.config.types.clone().unwrap_or(TypeSelection::Default).resolve(m, &family);
    let model = par::assemble(m, &family, &types, ctx.disk.as_ref())?;
    let mode = if a.decimal { Values::Decimal } else { Values::Rational };
    let text = sdp_to_string(&model, mode);
    match &ctx.config.out {
        Some(path) => {
            write_file(path, &text)?;
            let mut rep = Report::new(ctx.human);
            rep.kv("constraints", model.constraint_count());
            let dims: Vec<i64> = model
                .blocks
                .iter()
                .map(|b| b.dim as i64)
                .chain([-(model.constraint_count() as i64 + 1)])
                .collect();
            rep.kv("block_sizes", join(&dims));
            rep.kv("solution_len", model.solution_len());
            rep.kv("lp_bound", model.lp_bound());
            print(&rep.render());
        }
        None => print(&text),
    }
    Ok(0)
}

fn round(ctx: &Ctx, a: &RoundArgs) -> Result<i32> {
    let bound = ctx.config.denominator.clone().unwrap_or_else(default_denominator_bound);
    if bound <= BigInt::from(0) {
        return Err(Error::Usage("--denominator must be positive".into()));
    }
    if let Some(x) = a.value {
        let r = round_float(x, &bound).ok_or(turan_core::Error::NonFinite(0))?;
        print(&format!("{r}\n"));
        return Ok(0);
    }
    let model = parse_sdp(&read_file(a.sdp.as_deref().expect("clap requires --sdp"))?)?;
    let sol_path = a
        .solution
        .as_deref()
        .ok_or_else(|| Error::Usage("--solution is required with --sdp".into()))?;
    let floats = parse_solution(&read_file(sol_path)?)?;
    let cert = round_solution(&model, &floats, &bound)?;
    let text = certificate_to_string(&cert);
    match &ctx.config.out {
        Some(path) => {
            write_file(path, &text)?;
            let mut rep = Report::new(ctx.human);
            rep.kv("bound", &cert.bound);
            rep.kv("bound_decimal", dec(&cert.bound));
            print(&rep.render());
        }
        None => print(&text),
    }
    Ok(0)
}

fn verify(ctx: &Ctx, cert_path: &Path) -> Result<i32> {
    let cert = parse_certificate(&read_file(cert_path)?)?;
    let family = resolve_family(ctx.config.family.as_deref().unwrap_or(&cert.family_key))?;
    let mut rep = Report::new(ctx.human);
    match par::verify(&cert, &family, ctx.disk.as_ref())? {
        Verdict::Verified(v) => {
            print(&format!("VERIFIED bound={}\n", v.bound));
            rep.kv("min_slack", &v.min_slack);
            rep.kv("slack_mismatches", v.slack_mismatches);
            print(&rep.render());
            Ok(0)
        }
        Verdict::Rejected(r) => {
            let why = match r {
                Rejection::NegativeSlack { index } => format!("negative slack at target {index}"),
                Rejection::NotPsd { block } => format!("block {block} is not PSD"),
                Rejection::ConstraintViolated { index, key, deficit } => {
                    format!("constraint {index} ({key}) violated by {deficit}")
                }
            };
            print(&format!("REJECTED {why}\n"));
            Ok(1)
        }
    }
}

fn partition(ctx: &Ctx, a: &PartitionArgs) -> Result<i32> {
    let h = read_graph(&a.graph)?;
    let n = h.n();
    let restarts = ctx.config.restarts.unwrap_or(DEFAULT_RESTARTS);
    let seed = ctx.config.seed.unwrap_or(0);
    let mut rep = Report::new(ctx.human);
    let best = par::maxcut_local_search(&h, restarts, seed);
    let (v1, v2): (Vec<Vertex>, Vec<Vertex>) = match &a.v1 {
        Some(v1) => {
            let v2: Vec<Vertex> = (0..n as Vertex).filter(|v| !v1.contains(v)).collect();
            side_of(n, v1, &v2)?;
            (v1.clone(), v2)
        }
        None => (best.v1.clone(), best.v2.clone()),
    };
    rep.kv("n", n);
    rep.kv("edges", h.edge_count());
    rep.kv("v1", join(&v1));
    rep.kv("v2", join(&v2));
    rep.kv("mu_lower", &best.mu_lower);
    rep.kv("mu_lower_decimal", dec(&best.mu_lower));
    rep.kv("best_cross", best.cross);
    if !a.analyze {
        print(&rep.render());
        return Ok(0);
    }
    let st = bad_missing(&h, &v1, &v2)?;
    rep.kv("cross_present", st.cross_present);
    rep.kv("bad", st.bad.len());
    rep.kv("missing", st.missing.len());
    rep.kv("inner2", st.inner2);
    rep.kv("locally_maximal", is_locally_maximal(&h, &v1, &v2)?);
    rep.kv("prop33", prop33_expr(&h, &v1, &v2)?);
    let xi = rational_arg("xi", &a.xi)?;
    let gap = lemma22_gap(&h, &v1, &v2, &xi)?;
    rep.kv("lemma22_lhs", gap.lhs);
    rep.kv("lemma22_rhs", &gap.rhs);
    rep.kv("lemma22_holds", gap.holds);
    if n <= EXACT_MU_LIMIT {
        let exact = par::maxcut_exhaustive(&h)?;
        rep.kv("mu_exact", &exact.mu_lower);
        rep.kv("mu_exact_decimal", dec(&exact.mu_lower));
    }
    let dg = degree_gap_check(&h);
    rep.kv("degree_gap", dg.gap);
    rep.kv("degree_gap_bound", dg.bound);
    rep.kv("degree_gap_within", dg.within);
    if let Some(delta) = &a.delta {
        let delta = rational_arg("delta", delta)?;
        let pi = match &a.pi {
            Some(v) => rational_arg("pi", v)?,
            None => parse_rational(&to_decimal(&two_sqrt3_minus_3(), REPORT_DIGITS)).expect("decimal"),
        };
        let z = low_degree_set(&h, &delta, &pi)?;
        rep.kv("low_degree_threshold", dec(&z.threshold));
        rep.kv("low_degree_vertices", join(&z.vertices));
        rep.kv("low_degree_precondition", z.precondition);
        rep.kv("low_degree_within_size_bound", z.within_size_bound);
    }
    if a.list {
        for e in &st.bad {
            rep.kv("bad_edge", edge_str(e));
        }
        for e in &st.missing {
            rep.kv("missing_edge", edge_str(e));
        }
    }
    print(&rep.render());
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["turan", "frobnicate"]), 2);
        assert_eq!(run(["turan", "enumerate"]), 2);
        assert_eq!(run(["turan", "construct", "--kind", "k4"]), 2);
    }

    #[test]
    fn spec_defaults() {
        let a = ConstructArgs::parse_from_args(&["--kind", "partite3", "--n", "10"]);
        assert_eq!(spec_from(&a, Kind::Partite3).unwrap(), ConstructionSpec::Partite3([4, 3, 3]));
    }

    impl ConstructArgs {
        fn parse_from_args(args: &[&str]) -> ConstructArgs {
            let cli = Cli::try_parse_from(["turan", "construct"].iter().chain(args)).unwrap();
            match cli.command {
                Command::Construct(a) => a,
                _ => unreachable!(),
            }
        }
    }
}
