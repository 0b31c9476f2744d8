//! `ugc`: analyze a single modulus, sweep a range, or export the graph and
//! code matrices in plain text formats.
//!
//! Exit codes: 0 when everything checked out, 1 when any verification
//! check failed, 2 for usage errors (bad arguments, oversized exports,
//! unwritable output).

use std::fs::File;
use std::io::{BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use unitgraph_core::code_builder::{code_from_incidence, incidence_matrix};
use unitgraph_core::gf_linalg::{MatrixGF, PrimeField};
use unitgraph_core::report::{CheckStatus, MetricValue, ReportRecord};
use unitgraph_core::unit_graph::{build, UnitGraph};
use unitgraph_core::verify::{canonical_q, sweep, verify_one, Budgets, SweepSummary};

#[derive(Parser)]
#[command(
    name = "ugc",
    version,
    about = "Unit graphs over Z_n and the codes spanned by their incidence matrices"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify one modulus and print the full report.
    Analyze(AnalyzeArgs),
    /// Verify every modulus in a range, one JSON record per line.
    Sweep(SweepArgs),
    /// Write the graph or one of the code matrices as plain text.
    Export(ExportArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Modulus of the ring Z_n (must be at least 2).
    #[arg(long)]
    n: u64,
    /// Field order; defaults to 2 for odd n and 3 for even n.
    #[arg(long)]
    q: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exhaustive distance search runs only when q^k is at most this.
    #[arg(long, default_value_t = 1 << 26)]
    distance_budget: u64,
    /// Worker threads for the exhaustive distance search.
    #[arg(long, default_value_t = default_parallelism())]
    threads: usize,
}

#[derive(Args)]
struct SweepArgs {
    /// First modulus, inclusive (must be at least 2).
    #[arg(long)]
    from: u64,
    /// Last modulus, inclusive.
    #[arg(long)]
    to: u64,
    /// Field order applied to every n; defaults per n (2 odd, 3 even).
    #[arg(long)]
    q: Option<u64>,
    /// Parallel verification jobs; output is identical for any value.
    #[arg(long, default_value_t = default_parallelism())]
    jobs: usize,
    /// Destination file for the JSON lines (stdout when omitted).
    #[arg(long)]
    out: Option<String>,
    /// Exhaustive distance search runs only when q^k is at most this.
    #[arg(long, default_value_t = 1 << 26)]
    distance_budget: u64,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(value_enum)]
    kind: ExportKind,
    /// Modulus of the ring Z_n (must be at least 2).
    #[arg(long)]
    n: u64,
    /// Field order for matrix exports; defaults to 2 for odd n, 3 for even.
    #[arg(long)]
    q: Option<u64>,
    /// Destination file (stdout when omitted).
    #[arg(long)]
    out: Option<String>,
    /// Refuse to write matrices or edge lists with more cells than this.
    #[arg(long, default_value_t = 10_000_000)]
    max_cells: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    /// Vertex count, edge count, and one edge per line.
    Graph,
    /// The unoriented incidence matrix over F_q.
    Incidence,
    /// A generator matrix of the incidence code (reduced echelon rows).
    Generator,
    /// A parity-check matrix of the incidence code.
    Paritycheck,
}

fn default_parallelism() -> usize {
    std::thread::available_parallelism().map_or(1, |p| p.get())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Analyze(args) => run_analyze(args),
        Cmd::Sweep(args) => run_sweep(args),
        Cmd::Export(args) => run_export(args),
    }
}

fn validate_n(n: u64) -> anyhow::Result<()> {
    if n < 2 {
        bail!("n must be ≥ 2");
    }
    Ok(())
}

fn validate_q(q: Option<u64>) -> anyhow::Result<()> {
    if let Some(q) = q {
        PrimeField::new(q).map_err(|_| anyhow!("q must be a prime (got {q})"))?;
    }
    Ok(())
}

fn run_analyze(args: AnalyzeArgs) -> anyhow::Result<ExitCode> {
    validate_n(args.n)?;
    validate_q(args.q)?;
    let budgets = Budgets {
        distance_enum: args.distance_budget,
        threads: args.threads.max(1),
        ..Budgets::default()
    };
    let started = Instant::now();
    let mut rec = verify_one(args.n, args.q, &budgets)?;
    rec.elapsed_ms = Some(started.elapsed().as_millis() as u64);

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match args.format {
        Format::Json => writeln!(out, "{}", rec.to_json_line())?,
        Format::Csv => write_csv(&mut out, &rec)?,
        Format::Text => write_text(&mut out, &rec)?,
    }
    Ok(if rec.failed_checks().is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_sweep(args: SweepArgs) -> anyhow::Result<ExitCode> {
    validate_n(args.from)?;
    validate_q(args.q)?;
    let budgets = Budgets {
        distance_enum: args.distance_budget,
        threads: 1, // parallelism comes from --jobs
        ..Budgets::default()
    };
    let mut sink: BufWriter<Box<dyn Write>> = BufWriter::new(match &args.out {
        Some(path) => Box::new(
            File::create(path).with_context(|| format!("cannot create {path}"))?,
        ),
        None => Box::new(std::io::stdout()),
    });
    let mut write_error = None;
    let summary = sweep(
        args.from,
        args.to,
        args.q,
        args.jobs.max(1),
        &budgets,
        |rec| {
            if write_error.is_none() {
                if let Err(e) = writeln!(sink, "{}", rec.to_json_line()) {
                    write_error = Some(e);
                }
            }
        },
    )?;
    sink.flush()?;
    if let Some(e) = write_error {
        return Err(e.into());
    }
    print_summary(&summary);
    Ok(if summary.failed_records == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_summary(summary: &SweepSummary) {
    eprintln!(
        "sweep: {} records, {} failed; checks: {} passed, {} skipped, {} failed",
        summary.records,
        summary.failed_records,
        summary.passed_checks,
        summary.skipped_checks,
        summary.failures.len(),
    );
    for (n, q, name) in &summary.failures {
        eprintln!("FAIL n={n} q={q} check={name}");
    }
}

fn run_export(args: ExportArgs) -> anyhow::Result<ExitCode> {
    validate_n(args.n)?;
    validate_q(args.q)?;
    let q = args.q.unwrap_or_else(|| canonical_q(args.n));
    let g = build(args.n)?;

    let guard = |rows: u64, cols: u64| -> anyhow::Result<()> {
        let cells = rows.saturating_mul(cols);
        if cells > args.max_cells {
            bail!(
                "export too large: {rows} x {cols} = {cells} cells exceeds \
                 --max-cells {} ",
                args.max_cells
            );
        }
        Ok(())
    };

    let text = match args.kind {
        ExportKind::Graph => {
            guard(g.edge_count() as u64, 2)?;
            g.to_text()
        }
        ExportKind::Incidence => {
            guard(g.vertex_count() as u64, g.edge_count() as u64)?;
            let field = PrimeField::new(q)?;
            incidence_matrix(&g, field)?.to_text()
        }
        ExportKind::Generator => {
            export_code_matrix(&g, q, args.max_cells, |c| c.generator().clone())?
        }
        ExportKind::Paritycheck => {
            export_code_matrix(&g, q, args.max_cells, |c| c.parity_check().clone())?
        }
    };

    match &args.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("cannot write {path}"))?
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn export_code_matrix(
    g: &UnitGraph,
    q: u64,
    max_cells: u64,
    pick: impl Fn(&unitgraph_core::code_builder::LinearCode) -> MatrixGF,
) -> anyhow::Result<String> {
    // Both code matrices have at most E columns and E rows; bound the
    // worst case before running elimination on a huge incidence matrix.
    let e = g.edge_count() as u64;
    if e.saturating_mul(e) > max_cells {
        bail!(
            "export too large: up to {e} x {e} cells exceeds --max-cells {max_cells}"
        );
    }
    let code = code_from_incidence(g, q)?;
    let m = pick(&code);
    let cells = (m.row_count() as u64).saturating_mul(m.col_count() as u64);
    if cells > max_cells {
        bail!(
            "export too large: {} x {} = {cells} cells exceeds --max-cells {max_cells}",
            m.row_count(),
            m.col_count()
        );
    }
    Ok(m.to_text())
}

fn metric(v: &Option<MetricValue>) -> String {
    match v {
        Some(m) => m.to_string(),
        None => "-".to_string(),
    }
}

fn opt(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn write_text(out: &mut impl Write, rec: &ReportRecord) -> anyhow::Result<()> {
    writeln!(out, "G(Z_{}) over F_{}  shape {}", rec.n, rec.q, rec.shape)?;
    writeln!(out)?;
    writeln!(out, "{:<16}{:<16}{}", "", "predicted", "computed")?;
    let p = &rec.predicted;
    let c = &rec.computed;
    writeln!(out, "{:<16}{:<16}{}", "edges", p.edges, c.edges)?;
    writeln!(out, "{:<16}{:<16}{}", "min degree", "-", c.min_degree)?;
    writeln!(out, "{:<16}{:<16}{}", "connected", "true", c.connected)?;
    writeln!(
        out,
        "{:<16}{:<16}{}",
        "diameter",
        p.diam_bound.map_or_else(|| "-".to_string(), |b| format!("<= {b}")),
        metric(&c.diameter)
    )?;
    writeln!(out, "{:<16}{:<16}{}", "girth", opt(p.girth), metric(&c.girth))?;
    writeln!(out, "{:<16}{:<16}{}", "lambda", opt(p.lambda), opt(c.lambda))?;
    writeln!(out, "{:<16}{:<16}{}", "bipartite", "-", c.bipartite)?;
    let pred_code = p.code.as_ref().map_or_else(
        || "-".to_string(),
        |pc| format!("[{}, {}, {}]", pc.length, pc.dim, pc.d),
    );
    let comp_code = format!(
        "[{}, {}, {}]{}",
        c.code.length,
        c.code.dim,
        metric(&c.code.d),
        c.code
            .d_upper_bound
            .map_or_else(String::new, |ub| format!(" (witness weight {ub})")),
    );
    writeln!(out, "{:<16}{:<16}{}", "code", pred_code, comp_code)?;
    let pred_dual = p.dual.as_ref().map_or_else(
        || "-".to_string(),
        |pd| format!("[{}, {}, {}]", p.edges, pd.dim, opt(pd.d)),
    );
    let comp_dual = format!("[{}, {}, {}]", c.edges, c.dual.dim, metric(&c.dual.d));
    writeln!(out, "{:<16}{:<16}{}", "dual code", pred_dual, comp_dual)?;
    writeln!(out)?;
    writeln!(out, "checks:")?;
    for check in &rec.checks {
        let status = match check.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "SKIP",
        };
        writeln!(out, "  {:<5}{:<28}{}", status, check.name, check.detail)?;
    }
    if !rec.conjecture_flags.is_empty() {
        writeln!(out)?;
        writeln!(
            out,
            "conjectural predictions: {}",
            rec.conjecture_flags.join(", ")
        )?;
    }
    if let Some(ms) = rec.elapsed_ms {
        writeln!(out)?;
        writeln!(out, "elapsed: {ms} ms")?;
    }
    Ok(())
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn write_csv(out: &mut impl Write, rec: &ReportRecord) -> anyhow::Result<()> {
    writeln!(out, "n,q,shape,check,status,detail")?;
    for check in &rec.checks {
        let status = match check.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "SKIPPED",
        };
        writeln!(
            out,
            "{},{},{},{},{},{}",
            rec.n,
            rec.q,
            rec.shape,
            check.name,
            status,
            csv_quote(&check.detail)
        )?;
    }
    Ok(())
}
