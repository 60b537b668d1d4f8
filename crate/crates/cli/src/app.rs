use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sgdl_core::balance::{
    closed_form_det, distance_determinants, enumerate_spanning_1forests, forest_det,
    is_balanced_det, is_balanced_forest, is_balanced_switching, DetKind, Shape,
};
use sgdl_core::distance::{associated_complete, distance_table, DistanceKind};
use sgdl_core::generate::{generate, GraphKind, SignSpec, DEFAULT_DENSITY};
use sgdl_core::io::{parse_edge_list, serialize_signed};
use sgdl_core::laplacian::{
    adjacency_matrix, distance_laplacian_from_table, incidence_matrix, weighted_degree_matrix,
    weighted_laplacian,
};
use sgdl_core::spectra::{
    formula_vs_eigensolver_report, spectral_deviation, sym_eig, transmission_regular_shift_check,
    unsigned_distance_laplacian,
};
use sgdl_core::verify::{run_suite, Suite, VerifyOptions, SPECTRAL_TOL};
use sgdl_core::{Orientation, Sign, SignedGraph, Spectrum, WeightedSignedGraph};

#[derive(Debug, Parser)]
#[command(
    name = "sgdl",
    version,
    about = "Signed distance matrices, signed distance Laplacians and balance of signed graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Summary of a graph: size, components, compatibility, transmissions, balance.
    Info {
        /// Edge-list file.
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Print a matrix built from the graph.
    Matrix {
        #[arg(long, value_enum)]
        kind: MatrixKind,
        /// Edge-list file.
        file: PathBuf,
        /// Edge orientation for `--kind incidence`.
        #[arg(long, value_enum, default_value = "canonical")]
        orientation: OrientationArg,
        /// Seed for `--orientation random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Decide balance.
    Balance {
        #[arg(long, value_enum, default_value = "both")]
        method: BalanceMethod,
        /// Edge-list file.
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Eigenvalues of a matrix, with optional spectral checks.
    Spectrum {
        #[arg(long, value_enum, default_value = "lpm")]
        kind: MatrixKind,
        /// Edge-list file (not needed with --odd-cycle-report).
        file: Option<PathBuf>,
        /// Compare the spectrum with the distance Laplacian of the unsigned graph.
        #[arg(long)]
        cospectral: bool,
        /// Check the transmission-regular shift eig(L) = t - eig(D).
        #[arg(long)]
        shift: bool,
        /// Tolerance for --cospectral and --shift.
        #[arg(long, default_value_t = SPECTRAL_TOL)]
        tolerance: f64,
        /// Compare the odd-cycle closed form with the eigensolver for k in RANGE (e.g. 1-7).
        #[arg(long, value_name = "RANGE")]
        odd_cycle_report: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Spanning 1-forests and the forest expansion of det L.
    Forests {
        /// Edge-list file.
        file: PathBuf,
        /// List every spanning 1-forest, not only contrabalanced ones.
        #[arg(long)]
        all: bool,
        /// Use the associated signed complete graph (weights = distances) instead of the graph.
        #[arg(long, value_enum)]
        complete: Option<CompleteKind>,
        #[command(flatten)]
        output: Output,
    },
    /// Run a seeded property suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Largest vertex count of the random instances.
        #[arg(long = "n", default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random instances per suite (default depends on the suite).
        #[arg(long)]
        instances: Option<usize>,
        /// Directory of edge-list files (*.sg) checked in addition to random instances.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Write a generated graph in edge-list format.
    Gen {
        /// Generator, e.g. cycle:5:allneg, path:3:+-, complete:4:neg=1-2, random:8:p=0.4:seed=3.
        spec: String,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Output {
    /// Output encoding.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the result to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    Dmax,
    Dmin,
    Dpm,
    Lmax,
    Lmin,
    Lpm,
    Transmission,
    Adjacency,
    Degree,
    Laplacian,
    Incidence,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrientationArg {
    Canonical,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BalanceMethod {
    Switching,
    DetMax,
    DetMin,
    DetPm,
    DetAll,
    Forest,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CompleteKind {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    ForestTheorem,
    BalanceEquivalence,
    Cospectrality,
    TransmissionShift,
    IncidenceFactorization,
    All,
}

/// Failure classes mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    /// Bad usage or unreadable input: exit 2.
    Usage(String),
    /// Computation failed or a verified property was violated: exit 1.
    Compute(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Compute(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Compute(m) => f.write_str(m),
        }
    }
}

impl From<sgdl_core::Error> for Failure {
    fn from(e: sgdl_core::Error) -> Self {
        use sgdl_core::Error as E;
        match e {
            E::Parse { .. }
            | E::InvalidGraph(_)
            | E::InvalidArgument(_)
            | E::TooLarge { .. }
            | E::LengthMismatch { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

/// Parses `args` and runs the command. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.exit_code()
        }
    }
}

fn read_graph(path: &Path) -> CliResult<WeightedSignedGraph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str, out: &mut dyn Write) -> CliResult<()> {
    match output {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Compute(format!("write failed: {e}"))),
    }
}

fn emit_json(output: &Output, value: &Value, out: &mut dyn Write) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    emit(output.out.as_deref(), &text, out)
}

fn unsupported(format: Format, verb: &str) -> Failure {
    Failure::Usage(format!(
        "--format {} is not supported by '{verb}'",
        format.to_possible_value().unwrap().get_name()
    ))
}

/// Rounds to 10 decimals so values that are integers up to solver noise print as integers.
fn tidy(x: f64) -> f64 {
    let r = (x * 1e10).round() / 1e10;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Info { file, output } => info(&file, &output, out),
        Command::Matrix {
            kind,
            file,
            orientation,
            seed,
            output,
        } => matrix(kind, &file, orientation, seed, &output, out),
        Command::Balance {
            method,
            file,
            output,
        } => balance(method, &file, &output, out),
        Command::Spectrum {
            kind,
            file,
            cospectral,
            shift,
            tolerance,
            odd_cycle_report,
            output,
        } => match odd_cycle_report {
            Some(range) => formula_report(&range, file.is_some(), &output, out),
            None => {
                let file = file.ok_or_else(|| Failure::Usage("missing graph file".into()))?;
                spectrum(kind, &file, cospectral, shift, tolerance, &output, out)
            }
        },
        Command::Forests {
            file,
            all,
            complete,
            output,
        } => forests(&file, all, complete, &output, out),
        Command::Verify {
            suite,
            max_n,
            seed,
            instances,
            corpus,
            output,
        } => verify(
            suite,
            max_n,
            seed,
            instances,
            corpus.as_deref(),
            &output,
            out,
        ),
        Command::Gen { spec, out: path } => {
            let g = parse_generator(&spec)?;
            emit(path.as_deref(), &serialize_signed(&g), out)?;
            Ok(0)
        }
    }
}

fn info(file: &Path, output: &Output, out: &mut dyn Write) -> CliResult<i32> {
    if output.format != Format::Json {
        return Err(unsupported(output.format, "info"));
    }
    let wg = read_graph(file)?;
    let g = wg.graph();
    let connected = g.is_connected();
    let components: Vec<Vec<usize>> = g
        .components()
        .into_iter()
        .map(|c| c.into_iter().map(|v| v + 1).collect())
        .collect();
    let mut value = json!({
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "connected": connected,
        "components": components,
        "integer_weights": wg.has_integer_weights(),
        "negative_edges": g.edges().iter().filter(|e| e.sign == Sign::Negative).count(),
    });
    if connected {
        let table = distance_table(g)?;
        let tr = table.transmission();
        let regular = tr.windows(2).all(|w| w[0] == w[1]);
        value["compatible"] = json!(table.is_compatible());
        value["incompatible_pair"] = json!(table.incompatible_pair().map(|(u, v)| [u + 1, v + 1]));
        value["transmission"] = json!(tr);
        value["transmission_regular"] = json!(regular);
        value["balanced"] = json!(is_balanced_switching(g)?.balanced);
    }
    if let Some(cf) = closed_form_det(&wg) {
        let shape = match cf.shape {
            Shape::Tree => "tree",
            Shape::Forest => "forest",
            Shape::Cycle => "cycle",
            Shape::Unicyclic => "unicyclic",
            Shape::OneForest => "1-forest",
        };
        value["closed_form_det"] = json!({"shape": shape, "determinant": cf.value.to_string()});
    }
    emit_json(output, &value, out)?;
    Ok(0)
}

fn matrix(
    kind: MatrixKind,
    file: &Path,
    orientation: OrientationArg,
    seed: u64,
    output: &Output,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let wg = read_graph(file)?;
    let g = wg.graph();
    let name = kind.to_possible_value().unwrap().get_name().to_string();
    let distance_kind = |k: MatrixKind| match k {
        MatrixKind::Dmax | MatrixKind::Lmax => DistanceKind::Max,
        MatrixKind::Dmin | MatrixKind::Lmin => DistanceKind::Min,
        _ => DistanceKind::Pm,
    };
    let (csv, json_value) = match kind {
        MatrixKind::Dmax | MatrixKind::Dmin | MatrixKind::Dpm => {
            let m = distance_table(g)?.distance_matrix(distance_kind(kind))?;
            (m.to_csv(), m.to_json(&name))
        }
        MatrixKind::Lmax | MatrixKind::Lmin | MatrixKind::Lpm => {
            let m = distance_laplacian_from_table(&distance_table(g)?, distance_kind(kind))?;
            (m.to_csv(), m.to_json(&name))
        }
        MatrixKind::Transmission => {
            let tr = distance_table(g)?.transmission();
            let line: Vec<String> = tr.iter().map(|t| t.to_string()).collect();
            (
                format!("{}\n", line.join(",")),
                json!({"n": tr.len(), "kind": name, "values": tr}),
            )
        }
        MatrixKind::Adjacency => {
            let m = adjacency_matrix(&wg);
            (m.to_csv(), m.to_json(&name))
        }
        MatrixKind::Degree => {
            let m = weighted_degree_matrix(&wg);
            (m.to_csv(), m.to_json(&name))
        }
        MatrixKind::Laplacian => {
            let m = weighted_laplacian(&wg);
            (m.to_csv(), m.to_json(&name))
        }
        MatrixKind::Incidence => {
            let o = match orientation {
                OrientationArg::Canonical => Orientation::canonical(g),
                OrientationArg::Random => {
                    Orientation::random(g, &mut sgdl_core::generate::seeded_rng(seed))
                }
            };
            let h = incidence_matrix(&wg, &o)?;
            (h.to_csv(), h.to_json())
        }
        MatrixKind::Table => {
            let t = distance_table(g)?;
            (t.to_csv(), t.to_json())
        }
    };
    match output.format {
        Format::Json => emit_json(output, &json_value, out)?,
        Format::Csv => emit(output.out.as_deref(), &csv, out)?,
        f => return Err(unsupported(f, "matrix")),
    }
    Ok(0)
}

fn balance(
    method: BalanceMethod,
    file: &Path,
    output: &Output,
    out: &mut dyn Write,
) -> CliResult<i32> {
    if output.format != Format::Json {
        return Err(unsupported(output.format, "balance"));
    }
    let wg = read_graph(file)?;
    let g = wg.graph();
    let value = match method {
        BalanceMethod::Both => {
            let dets = distance_determinants(g)?;
            let sw = is_balanced_switching(g)?;
            json!({
                "balanced": sw.balanced,
                "det_lmax": dets.det_max.to_string(),
                "det_lmin": dets.det_min.to_string(),
                "switching": if sw.balanced { "balanced" } else { "unbalanced" },
            })
        }
        BalanceMethod::Switching => is_balanced_switching(g)?.to_json(),
        BalanceMethod::DetMax => is_balanced_det(g, DetKind::Max)?.to_json(),
        BalanceMethod::DetMin => is_balanced_det(g, DetKind::Min)?.to_json(),
        BalanceMethod::DetPm => is_balanced_det(g, DetKind::Pm)?.to_json(),
        BalanceMethod::DetAll => is_balanced_det(g, DetKind::All)?.to_json(),
        BalanceMethod::Forest => is_balanced_forest(&wg)?.to_json(),
    };
    emit_json(output, &value, out)?;
    Ok(0)
}

fn spectrum_matrix(
    kind: MatrixKind,
    wg: &WeightedSignedGraph,
) -> CliResult<sgdl_core::SquareMatrix> {
    let g = wg.graph();
    Ok(match kind {
        MatrixKind::Dmax => distance_table(g)?.distance_matrix(DistanceKind::Max)?,
        MatrixKind::Dmin => distance_table(g)?.distance_matrix(DistanceKind::Min)?,
        MatrixKind::Dpm => distance_table(g)?.distance_matrix(DistanceKind::Pm)?,
        MatrixKind::Lmax => distance_laplacian_from_table(&distance_table(g)?, DistanceKind::Max)?,
        MatrixKind::Lmin => distance_laplacian_from_table(&distance_table(g)?, DistanceKind::Min)?,
        MatrixKind::Lpm => distance_laplacian_from_table(&distance_table(g)?, DistanceKind::Pm)?,
        MatrixKind::Adjacency => adjacency_matrix(wg),
        MatrixKind::Degree => weighted_degree_matrix(wg),
        MatrixKind::Laplacian => weighted_laplacian(wg),
        MatrixKind::Transmission | MatrixKind::Incidence | MatrixKind::Table => {
            return Err(Failure::Usage(
                "spectrum needs a square symmetric matrix kind".into(),
            ))
        }
    })
}

fn spectrum(
    kind: MatrixKind,
    file: &Path,
    cospectral: bool,
    shift: bool,
    tolerance: f64,
    output: &Output,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let wg = read_graph(file)?;
    let m = spectrum_matrix(kind, &wg)?;
    let s = sym_eig(&m)?;
    let shown = Spectrum::from_values(s.eigenvalues.iter().map(|&x| tidy(x)).collect());
    let shown = Spectrum {
        eigenvalues: shown.eigenvalues,
        groups: s
            .groups
            .iter()
            .map(|g| sgdl_core::spectra::EigenGroup {
                value: tidy(g.value),
                multiplicity: g.multiplicity,
            })
            .collect(),
    };
    match output.format {
        Format::Csv if !cospectral && !shift => {
            let line: Vec<String> = shown
                .eigenvalues
                .iter()
                .map(|&x| sgdl_core::matrix::format_entry(x))
                .collect();
            emit(output.out.as_deref(), &format!("{}\n", line.join(",")), out)?;
        }
        Format::Json => {
            let mut value = shown.to_json();
            if cospectral {
                let dev = spectral_deviation(&m, &unsigned_distance_laplacian(wg.graph())?)?;
                value["cospectral_with_unsigned"] = json!(dev <= tolerance);
                value["cospectral_deviation"] = json!(dev);
            }
            if shift {
                let dk = match kind {
                    MatrixKind::Lmin | MatrixKind::Dmin => DistanceKind::Min,
                    MatrixKind::Lpm | MatrixKind::Dpm => DistanceKind::Pm,
                    _ => DistanceKind::Max,
                };
                let r = transmission_regular_shift_check(wg.graph(), dk)?;
                value["shift"] = json!({
                    "is_transmission_regular": r.is_transmission_regular,
                    "t": r.t,
                    "max_deviation": r.max_deviation,
                    "holds": r.is_transmission_regular && r.max_deviation <= tolerance,
                });
            }
            emit_json(output, &value, out)?;
        }
        f => return Err(unsupported(f, "spectrum")),
    }
    Ok(0)
}

fn parse_range(range: &str) -> CliResult<Vec<u32>> {
    let bad = || Failure::Usage(format!("invalid range '{range}', expected e.g. 1-7 or 3"));
    let (lo, hi) = match range.split_once('-') {
        Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
        None => {
            let k: u32 = range.parse().map_err(|_| bad())?;
            (k, k)
        }
    };
    if lo < 1 || hi < lo || hi > 60 {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn formula_report(
    range: &str,
    has_file: bool,
    output: &Output,
    out: &mut dyn Write,
) -> CliResult<i32> {
    if has_file {
        return Err(Failure::Usage(
            "--odd-cycle-report does not take a graph file".into(),
        ));
    }
    let report = formula_vs_eigensolver_report(&parse_range(range)?)?;
    match output.format {
        Format::Markdown => emit(output.out.as_deref(), &report.to_markdown(), out)?,
        Format::Csv => emit(output.out.as_deref(), &report.to_csv(), out)?,
        Format::Json => emit_json(output, &serde_json::to_value(&report).unwrap(), out)?,
        f => return Err(unsupported(f, "spectrum --odd-cycle-report")),
    }
    Ok(0)
}

fn forests(
    file: &Path,
    all: bool,
    complete: Option<CompleteKind>,
    output: &Output,
    out: &mut dyn Write,
) -> CliResult<i32> {
    if output.format != Format::Json {
        return Err(unsupported(output.format, "forests"));
    }
    let mut wg = read_graph(file)?;
    if let Some(kind) = complete {
        let kind = match kind {
            CompleteKind::Max => DistanceKind::Max,
            CompleteKind::Min => DistanceKind::Min,
        };
        let table = distance_table(wg.graph())?;
        wg = associated_complete(wg.graph(), &table, kind)?;
    }
    let listed = enumerate_spanning_1forests(&wg, !all)?;
    let edges = wg.graph().edges();
    let forests_json: Vec<Value> = listed
        .iter()
        .map(|f| {
            json!({
                "edges": f.edges.iter().map(|&i| [edges[i].u + 1, edges[i].v + 1]).collect::<Vec<_>>(),
                "weight": f.edges.iter().map(|&i| wg.weight(i)).product::<f64>(),
                "contrabalanced": f.is_contrabalanced(),
                "components": f.components.iter().map(|c| json!({
                    "vertices": c.vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    "cycle": c.cycle.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    "cycle_sign": c.cycle_sign.to_string(),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let value = json!({
        "n": wg.vertex_count(),
        "m": wg.edge_count(),
        "listed": if all { "all" } else { "contrabalanced" },
        "count": listed.len(),
        "forest_det": forest_det(&wg)?.to_string(),
        "forests": forests_json,
    });
    emit_json(output, &value, out)?;
    Ok(0)
}

fn load_corpus(dir: &Path) -> CliResult<Vec<WeightedSignedGraph>> {
    let entries = fs::read_dir(dir)
        .map_err(|e| Failure::Usage(format!("cannot read corpus {}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "sg"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(Failure::Usage(format!(
            "corpus {} contains no .sg files",
            dir.display()
        )));
    }
    paths.iter().map(|p| read_graph(p)).collect()
}

fn verify(
    suite: SuiteArg,
    max_n: usize,
    seed: u64,
    instances: Option<usize>,
    corpus: Option<&Path>,
    output: &Output,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let suites: Vec<Suite> = match suite {
        SuiteArg::ForestTheorem => vec![Suite::ForestTheorem],
        SuiteArg::BalanceEquivalence => vec![Suite::BalanceEquivalence],
        SuiteArg::Cospectrality => vec![Suite::Cospectrality],
        SuiteArg::TransmissionShift => vec![Suite::TransmissionShift],
        SuiteArg::IncidenceFactorization => vec![Suite::IncidenceFactorization],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let mut opts = VerifyOptions::new(max_n, seed);
    opts.instances = instances;
    if let Some(dir) = corpus {
        opts.corpus = load_corpus(dir)?;
    }
    let reports = suites
        .iter()
        .map(|&s| run_suite(s, &opts))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = reports.iter().all(|r| r.passed);
    match output.format {
        Format::Text => {
            let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
            emit(output.out.as_deref(), &text, out)?;
        }
        Format::Json => emit_json(
            output,
            &json!({"passed": passed, "seed": seed, "n": max_n, "suites": reports}),
            out,
        )?,
        f => return Err(unsupported(f, "verify")),
    }
    Ok(if passed { 0 } else { 1 })
}

/// Parses `kind:n[:signs][:key=value...]`.
///
/// `signs` is `allpos`, `allneg`, a `+`/`-` string with one symbol per edge, or
/// `neg=u-v,u-v` (1-based pairs). Keys: `p` (probability an edge is negative),
/// `d` (edge density, random only), `seed`.
pub fn parse_generator(spec: &str) -> CliResult<SignedGraph> {
    let bad = |msg: String| Failure::Usage(format!("generator '{spec}': {msg}"));
    let mut parts = spec.split(':');
    let kind_tok = parts.next().unwrap_or("");
    let n: usize = parts
        .next()
        .ok_or_else(|| bad("missing vertex count".into()))?
        .parse()
        .map_err(|_| bad("invalid vertex count".into()))?;
    let mut density = DEFAULT_DENSITY;
    let mut seed = 0u64;
    let mut prob: Option<f64> = None;
    let mut signs: Option<SignSpec> = None;
    for part in parts {
        if let Some(list) = part.strip_prefix("neg=") {
            let pairs = list
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|pair| {
                    let (a, b) = pair
                        .split_once('-')
                        .ok_or_else(|| bad(format!("invalid pair '{pair}'")))?;
                    let a: usize = a
                        .parse()
                        .map_err(|_| bad(format!("invalid pair '{pair}'")))?;
                    let b: usize = b
                        .parse()
                        .map_err(|_| bad(format!("invalid pair '{pair}'")))?;
                    if a == 0 || b == 0 {
                        return Err(bad("vertices are 1-based".into()));
                    }
                    Ok((a - 1, b - 1))
                })
                .collect::<CliResult<Vec<_>>>()?;
            signs = Some(SignSpec::NegativeEdges(pairs));
        } else if let Some((key, val)) = part.split_once('=') {
            let num = |v: &str| -> CliResult<f64> {
                v.parse()
                    .map_err(|_| bad(format!("invalid value for {key}")))
            };
            match key {
                "p" => prob = Some(num(val)?),
                "d" => density = num(val)?,
                "seed" => seed = val.parse().map_err(|_| bad("invalid seed".into()))?,
                _ => return Err(bad(format!("unknown key '{key}'"))),
            }
        } else if part == "allpos" {
            signs = Some(SignSpec::AllPositive);
        } else if part == "allneg" {
            signs = Some(SignSpec::AllNegative);
        } else if !part.is_empty() && part.chars().all(|c| c == '+' || c == '-') {
            signs = Some(SignSpec::Explicit(
                part.chars()
                    .map(|c| {
                        if c == '+' {
                            Sign::Positive
                        } else {
                            Sign::Negative
                        }
                    })
                    .collect(),
            ));
        } else {
            return Err(bad(format!("unrecognised field '{part}'")));
        }
    }
    let kind = match kind_tok {
        "cycle" => GraphKind::Cycle,
        "path" => GraphKind::Path,
        "complete" => GraphKind::Complete,
        "random" => GraphKind::Random { density },
        other => return Err(bad(format!("unknown kind '{other}'"))),
    };
    let signs = match (signs, prob) {
        (Some(_), Some(_)) => return Err(bad("give either a sign pattern or p, not both".into())),
        (Some(s), None) => s,
        (None, Some(p)) => SignSpec::Probability(p),
        (None, None) if kind_tok == "random" => SignSpec::Probability(0.5),
        (None, None) => SignSpec::AllPositive,
    };
    if let SignSpec::Explicit(s) = &signs {
        let expected = match kind {
            GraphKind::Cycle => n,
            GraphKind::Path => n.saturating_sub(1),
            GraphKind::Complete => n * n.saturating_sub(1) / 2,
            GraphKind::Random { .. } => {
                return Err(bad("explicit sign strings need a fixed edge set".into()))
            }
        };
        if s.len() != expected {
            return Err(bad(format!(
                "sign string has {} symbols, expected {expected}",
                s.len()
            )));
        }
    }
    Ok(generate(kind, n, &signs, seed)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_specs() {
        let g = parse_generator("cycle:5:allneg").unwrap();
        assert_eq!(g.edge_count(), 5);
        let g = parse_generator("path:3:+-").unwrap();
        assert_eq!(g.sign_between(1, 2), Some(Sign::Negative));
        assert!(parse_generator("path:3:++").is_ok());
        assert!(parse_generator("path:3:+++").is_err());
        assert!(parse_generator("path:3:+x").is_err());
        let g = parse_generator("cycle:4:neg=4-1").unwrap();
        assert_eq!(g.sign_between(0, 3), Some(Sign::Negative));
        assert_eq!(
            parse_generator("random:8:p=0.4:seed=3").unwrap(),
            parse_generator("random:8:p=0.4:seed=3").unwrap()
        );
        assert!(parse_generator("random:6:d=0.3:seed=2")
            .unwrap()
            .is_connected());
        assert!(parse_generator("star:4").is_err());
        assert!(parse_generator("cycle").is_err());
        assert!(parse_generator("cycle:4:p=0.2:allneg").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1-3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_range("4").unwrap(), vec![4]);
        assert!(parse_range("0-2").is_err());
        assert!(parse_range("3-1").is_err());
    }

    #[test]
    fn tidy_rounds_noise() {
        assert_eq!(tidy(0.9999999999999998), 1.0);
        assert_eq!(tidy(-1e-15), 0.0);
        assert!(tidy(-1e-15).is_sign_positive());
    }
}
