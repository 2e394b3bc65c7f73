use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pfp_netlab::io::{
    parse_peering_list, read_report, write_distribution_csv, write_peering_list, write_report,
};
use pfp_netlab::metrics::{
    coreness, degree_distribution, knn_by_degree, rich_club_by_degree, rich_club_by_rank,
    shortest_path_stats, triangle_summaries,
};
use pfp_netlab::viz::{layout, render_svg, RenderOptions};
use pfp_netlab::{
    average_reports, full_report, grow_ensemble, Error, Graph, MetricValue, Params, Report,
};

#[derive(Parser)]
#[command(name = "pfp-netlab", version, about = "Grow and analyze Internet-like topologies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grow an ensemble of networks and write peering lists plus reports
    Generate(GenerateArgs),
    /// Compute the full metric report (and optionally distribution CSVs) for a peering list
    Analyze(AnalyzeArgs),
    /// Print reports side by side; with --tolerances, gate the first against the rest
    Compare(CompareArgs),
    /// Render the k-core shell structure of a peering list as SVG
    KcoreSvg(KcoreSvgArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Number of nodes per network
    #[arg(long)]
    nodes: usize,
    /// Probability of the one-host growth branch
    #[arg(long, default_value_t = 0.4)]
    p: f64,
    /// Preference feedback strength
    #[arg(long, default_value_t = 0.048)]
    delta: f64,
    /// Ensemble size
    #[arg(long, default_value_t = 10)]
    runs: usize,
    /// RNG seed; each run derives its own stream from (seed, run index)
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input peering list (.asl)
    input: PathBuf,
    /// Output report path
    #[arg(long)]
    report: PathBuf,
    /// Directory for distribution CSVs (written only when given)
    #[arg(long)]
    dists: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// Two or more report files; the first is the candidate
    #[arg(required = true, num_args = 2..)]
    reports: Vec<PathBuf>,
    /// Tolerance file: `<metric> abs|rel <value>` per line; turns compare into a gate
    #[arg(long)]
    tolerances: Option<PathBuf>,
}

#[derive(Args)]
struct KcoreSvgArgs {
    /// Input peering list (.asl)
    input: PathBuf,
    /// Output SVG path
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 1000)]
    width: u32,
    #[arg(long, default_value_t = 1000)]
    height: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("pfp-netlab: {msg}");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Compare(args) => cmd_compare(args),
        Command::KcoreSvg(args) => cmd_kcore_svg(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("pfp-netlab: {err}");
            match err {
                CliError::Usage(_) => ExitCode::from(2),
                CliError::Data(_) => ExitCode::from(1),
            }
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Data(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) => CliError::Usage(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("PFP_NETLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .map_err(|_| format!("PFP_NETLAB_THREADS must be a non-negative integer, got {raw:?}"))?;
    if n == 0 {
        return Ok(()); // 0 = automatic sizing
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| format!("thread pool: {e}"))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    parse_peering_list(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode, CliError> {
    let mut params = Params::new(args.nodes, args.seed);
    params.p = args.p;
    params.delta = args.delta;
    if args.runs == 0 {
        return Err(CliError::Usage("--runs must be at least 1".into()));
    }
    let graphs = grow_ensemble(&params, args.runs)?;
    fs::create_dir_all(&args.out_dir)
        .map_err(|e| CliError::Data(format!("{}: {e}", args.out_dir.display())))?;
    let mut reports = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        write_file(&args.out_dir.join(format!("run_{i}.asl")), &write_peering_list(g))?;
        let report: Report = full_report(g)?;
        write_file(&args.out_dir.join(format!("run_{i}.report")), &write_report(&report))?;
        reports.push(report);
    }
    let ensemble = average_reports(&reports)?;
    write_file(&args.out_dir.join("ensemble.report"), &write_report(&ensemble))?;
    Ok(ExitCode::SUCCESS)
}

const DIST_FILES: [&str; 9] = [
    "degree_pdf",
    "degree_ccd",
    "knn",
    "richclub_degree",
    "richclub_rank",
    "triangle_ccd",
    "triangle_by_degree",
    "pathlen_ccd",
    "pathlen_by_degree",
];

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode, CliError> {
    let g = load_graph(&args.input)?;
    let report: Report = full_report(&g)?;
    write_file(&args.report, &write_report(&report))?;
    let Some(dir) = args.dists else {
        return Ok(ExitCode::SUCCESS);
    };
    fs::create_dir_all(&dir).map_err(|e| CliError::Data(format!("{}: {e}", dir.display())))?;
    let (degree_pdf, degree_ccd) = degree_distribution::<f64>(&g)?;
    let knn = knn_by_degree::<f64>(&g)?;
    let triangles = triangle_summaries::<f64>(&g)?;
    let paths = shortest_path_stats::<f64>(&g)?;
    let tables = [
        &degree_pdf,
        &degree_ccd,
        &knn,
        &rich_club_by_degree::<f64>(&g),
        &rich_club_by_rank::<f64>(&g),
        &triangles.ccd,
        &triangles.by_degree,
        &paths.ccd,
        &paths.by_degree,
    ];
    for (name, table) in DIST_FILES.iter().zip(tables) {
        write_file(&dir.join(format!("{name}.csv")), &write_distribution_csv(table))?;
    }
    Ok(ExitCode::SUCCESS)
}

const METRIC_KEYS: [&str; 10] = [
    "n",
    "l",
    "k_max",
    "gamma",
    "alpha",
    "n_clique",
    "theta",
    "mean_triangle",
    "ell_star",
    "c_max",
];

fn metric(report: &Report, key: &str) -> MetricValue<f64> {
    match key {
        "n" => MetricValue::Defined(report.n),
        "l" => MetricValue::Defined(report.l),
        "k_max" => MetricValue::Defined(report.k_max),
        "gamma" => report.gamma,
        "alpha" => report.alpha,
        "n_clique" => MetricValue::Defined(report.n_clique),
        "theta" => report.theta,
        "mean_triangle" => MetricValue::Defined(report.mean_triangle),
        "ell_star" => report.ell_star,
        "c_max" => MetricValue::Defined(report.c_max),
        _ => unreachable!("metric key {key}"),
    }
}

fn metric_cell(v: MetricValue<f64>) -> String {
    match v {
        MetricValue::Defined(x) => format!("{x:.4}"),
        MetricValue::Undefined(reason) => format!("undefined({})", reason.code()),
    }
}

enum Tolerance {
    Abs(f64),
    Rel(f64),
}

fn parse_tolerances(text: &str) -> Result<Vec<(String, Tolerance)>, CliError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let usage = || {
            CliError::Usage(format!(
                "tolerances line {}: expected `<metric> abs|rel <value>`, got {line:?}",
                i + 1
            ))
        };
        let [key, kind, value] = parts[..] else {
            return Err(usage());
        };
        if !METRIC_KEYS.contains(&key) {
            return Err(CliError::Usage(format!(
                "tolerances line {}: unknown metric `{key}`",
                i + 1
            )));
        }
        let value: f64 = value.parse().map_err(|_| usage())?;
        let tol = match kind {
            "abs" => Tolerance::Abs(value),
            "rel" => Tolerance::Rel(value),
            _ => return Err(usage()),
        };
        out.push((key.to_string(), tol));
    }
    Ok(out)
}

fn within(candidate: MetricValue<f64>, target: MetricValue<f64>, tol: &Tolerance) -> bool {
    match (candidate, target) {
        (MetricValue::Defined(c), MetricValue::Defined(t)) => {
            let allowed = match tol {
                Tolerance::Abs(a) => *a,
                Tolerance::Rel(r) => r * t.abs(),
            };
            (c - t).abs() <= allowed
        }
        (MetricValue::Undefined(a), MetricValue::Undefined(b)) => a == b,
        _ => false,
    }
}

fn cmd_compare(args: CompareArgs) -> Result<ExitCode, CliError> {
    let mut reports: Vec<(String, Report)> = Vec::with_capacity(args.reports.len());
    for path in &args.reports {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        let report =
            read_report(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        reports.push((name, report));
    }

    let width = reports
        .iter()
        .map(|(name, _)| name.len())
        .chain(std::iter::once(13))
        .max()
        .unwrap()
        + 2;
    print!("{:14}", "metric");
    for (name, _) in &reports {
        print!("{name:>width$}");
    }
    println!();
    for key in METRIC_KEYS {
        print!("{key:14}");
        for (_, report) in &reports {
            print!("{:>width$}", metric_cell(metric(report, key)));
        }
        println!();
    }

    let Some(path) = args.tolerances else {
        return Ok(ExitCode::SUCCESS);
    };
    let text = fs::read_to_string(&path)
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    let tolerances = parse_tolerances(&text)?;
    let (candidate_name, candidate) = &reports[0];
    let mut ok = true;
    for (target_name, target) in &reports[1..] {
        for (key, tol) in &tolerances {
            let c = metric(candidate, key);
            let t = metric(target, key);
            if !within(c, t, tol) {
                ok = false;
                println!(
                    "gate: {key} of {candidate_name} = {} outside tolerance of {target_name} = {}",
                    metric_cell(c),
                    metric_cell(t)
                );
            }
        }
    }
    println!("gate: {}", if ok { "pass" } else { "fail" });
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_kcore_svg(args: KcoreSvgArgs) -> Result<ExitCode, CliError> {
    let g = load_graph(&args.input)?;
    let (core, _) = coreness(&g).map_err(CliError::from)?;
    let shell = layout::<f64>(&g, &core)?;
    let opts = RenderOptions {
        width: args.width,
        height: args.height,
    };
    let svg = render_svg(&shell, &g, &opts)?;
    write_file(&args.out, &svg)?;
    Ok(ExitCode::SUCCESS)
}
