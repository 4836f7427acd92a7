use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knightpaths::asymptotics::{convergence_report, ExactSource, FormulaId};
use knightpaths::bijections::{phi, phi_inv, psi, psi_inv, tube_phi, tube_phi_inv, CompositionPair};
use knightpaths::enumerate::{AltitudeFilter, CountQuery};
use knightpaths::series::CoefficientExport;
use knightpaths::{path_of_string, Composition, Direction};
use knightpaths_cli::checks::{self, Level};
use knightpaths_cli::engine::{self, Engine, GfParams};
use knightpaths_cli::{CliError, CliResult};
use num_bigint::BigUint;

#[derive(Parser)]
#[command(name = "knightpaths", version, about = "Exact counts of grand knight's paths and grand zigzag knight's paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count paths of one size
    Count(CountArgs),
    /// Counts by size and final altitude, as CSV
    Table(TableArgs),
    /// Coefficients of a named generating function
    Gf(GfArgs),
    /// Apply a composition encoding to each line of input
    Biject(BijectArgs),
    /// Compare exact values with an asymptotic estimate
    Asym(AsymArgs),
    /// Check the engines against published values and each other
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Up,
    Down,
}

impl From<Dir> for Direction {
    fn from(d: Dir) -> Direction {
        match d {
            Dir::Up => Direction::Up,
            Dir::Down => Direction::Down,
        }
    }
}

#[derive(Args)]
struct ShapeArgs {
    /// Only zigzag paths (directions alternate)
    #[arg(long)]
    zigzag: bool,
    /// Lowest allowed y (at most 0)
    #[arg(long, allow_hyphen_values = true)]
    min_y: Option<i64>,
    /// Highest allowed y (at least 0)
    #[arg(long, allow_hyphen_values = true)]
    max_y: Option<i64>,
    /// Exact number of steps
    #[arg(long)]
    steps: Option<usize>,
    /// Direction of the first step
    #[arg(long)]
    first: Option<Dir>,
    /// Direction of the last step
    #[arg(long)]
    last: Option<Dir>,
}

impl ShapeArgs {
    fn constraints(&self) -> CliResult<knightpaths::PathConstraints> {
        engine::constraints(
            self.zigzag,
            self.min_y,
            self.max_y,
            self.steps,
            self.first.map(Into::into),
            self.last.map(Into::into),
        )
    }
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    size: usize,
    /// Final altitude
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["all", "nonneg"])]
    altitude: Option<i64>,
    /// Any final altitude (the default)
    #[arg(long, conflicts_with = "nonneg")]
    all: bool,
    /// Final altitude at least 0
    #[arg(long)]
    nonneg: bool,
    #[command(flatten)]
    shape: ShapeArgs,
    /// dp, gf, closed, or all
    #[arg(long, default_value = "dp")]
    engine: String,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Header line for CSV output
    #[arg(long)]
    header: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    n_max: usize,
    #[arg(long, allow_hyphen_values = true)]
    k_max: i64,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    k_min: i64,
    #[command(flatten)]
    shape: ShapeArgs,
    /// dp, gf, closed, or all
    #[arg(long, default_value = "dp")]
    engine: String,
    /// One row per altitude (k) or per size (n)
    #[arg(long, default_value = "k", value_parser = ["k", "n"])]
    rows: String,
    #[arg(long)]
    header: bool,
}

#[derive(Args)]
struct GfArgs {
    #[arg(long)]
    name: String,
    /// Number of coefficients; defaults to $KNIGHTPATHS_ORDER or 64
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    big_m: Option<u32>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[arg(long)]
    header: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapName {
    Phi,
    PhiInv,
    Psi,
    PsiInv,
    TubePhi,
    TubePhiInv,
}

#[derive(Args)]
struct BijectArgs {
    #[arg(long, value_enum)]
    map: MapName,
    /// Single input instead of reading lines from stdin
    #[arg(long)]
    input: Option<String>,
}

#[derive(Args)]
struct AsymArgs {
    /// Formula name, for example grand-nonneg or above-line-prob:1
    #[arg(long)]
    formula: String,
    /// Exact values from dp, gf or closed
    #[arg(long, default_value = "dp")]
    source: String,
    /// Ascending sizes, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    header: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum Only {
    Fixtures,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "quick")]
    level: LevelArg,
    #[arg(long, value_enum)]
    only: Option<Only>,
    /// Print a JSON summary instead of one line per criterion
    #[arg(long)]
    json: bool,
}

fn engines(spec: &str) -> CliResult<Option<Engine>> {
    if spec == "all" {
        Ok(None)
    } else {
        spec.parse().map(Some)
    }
}

fn cmd_count(a: &CountArgs, out: &mut impl Write) -> CliResult<()> {
    let c = a.shape.constraints()?;
    let altitude = match (a.altitude, a.nonneg) {
        (Some(k), _) => AltitudeFilter::Exact(k),
        (None, true) => AltitudeFilter::NonNegative,
        (None, false) => AltitudeFilter::All,
    };
    let q = CountQuery::new(a.size, c, altitude);
    let results = match engines(&a.engine)? {
        Some(e) => match engine::count_with(e, &q)? {
            Some(v) => vec![(e, v)],
            None => return Err(CliError::Usage(format!("engine {e} has no formula for this query"))),
        },
        None => engine::count_all(&q)?,
    };
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    match a.format {
        Format::Plain if results.len() == 1 => writeln!(out, "{}", results[0].1)?,
        Format::Plain => {
            for (e, v) in &results {
                writeln!(out, "{e}: {v}")?;
            }
        }
        Format::Csv => {
            if a.header {
                writeln!(out, "engine,count")?;
            }
            for (e, v) in &results {
                writeln!(out, "{e},{v}")?;
            }
        }
        Format::Json => {
            let counts: serde_json::Map<String, serde_json::Value> =
                results.iter().map(|(e, v)| (e.to_string(), v.to_string().into())).collect();
            let doc = serde_json::json!({ "size": a.size, "counts": counts, "agree": agree });
            writeln!(out, "{doc}")?;
        }
    }
    if !agree {
        let detail: Vec<String> = results.iter().map(|(e, v)| format!("{e}={v}")).collect();
        return Err(CliError::Disagreement(detail.join(", ")));
    }
    Ok(())
}

fn cmd_table(a: &TableArgs, out: &mut impl Write) -> CliResult<()> {
    let c = a.shape.constraints()?;
    if a.k_min > a.k_max {
        return Err(CliError::Usage(format!("--k-min {} exceeds --k-max {}", a.k_min, a.k_max)));
    }
    let chosen: Vec<Engine> = match engines(&a.engine)? {
        Some(e) => vec![e],
        None => Engine::ALL.to_vec(),
    };
    let ks: Vec<i64> = (a.k_min..=a.k_max).collect();
    let mut grid: Option<Vec<Vec<BigUint>>> = None;
    for e in chosen {
        let mut rows = Vec::with_capacity(ks.len());
        for &k in &ks {
            match engine::altitude_row(e, &c, k, a.n_max)? {
                Some(r) => rows.push(r),
                None if a.engine == "all" => break,
                None => return Err(CliError::Usage(format!("engine {e} has no formula for these constraints"))),
            }
        }
        if rows.len() < ks.len() {
            continue;
        }
        match &grid {
            Some(g) if *g != rows => return Err(CliError::Disagreement(format!("engine {e} differs from dp"))),
            Some(_) => {}
            None => grid = Some(rows),
        }
    }
    let grid = grid.expect("dp always applies");
    if a.rows == "k" {
        if a.header {
            let cols: Vec<String> = (0..=a.n_max).map(|n| format!("n={n}")).collect();
            writeln!(out, "k,{}", cols.join(","))?;
        }
        for (k, row) in ks.iter().zip(&grid) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{k},{}", cells.join(","))?;
        }
    } else {
        if a.header {
            let cols: Vec<String> = ks.iter().map(|k| format!("k={k}")).collect();
            writeln!(out, "n,{}", cols.join(","))?;
        }
        for n in 0..=a.n_max {
            let cells: Vec<String> = grid.iter().map(|row| row[n].to_string()).collect();
            writeln!(out, "{n},{}", cells.join(","))?;
        }
    }
    Ok(())
}

fn cmd_gf(a: &GfArgs, out: &mut impl Write) -> CliResult<()> {
    let order = match a.order {
        Some(o) => o,
        None => engine::default_order()?,
    };
    if order == 0 {
        return Err(CliError::Usage("--order must be positive".into()));
    }
    let params = GfParams {
        k: a.k,
        m: a.m,
        big_m: a.big_m,
    };
    let coeffs = engine::named_gf(&a.name, params, order)?;
    let export = CoefficientExport::new(&a.name, &coeffs);
    match a.format {
        Format::Plain => writeln!(out, "{}", export.coeffs.join(", "))?,
        Format::Csv => write!(out, "{}", export.to_csv(a.header))?,
        Format::Json => writeln!(out, "{}", export.to_json())?,
    }
    Ok(())
}

fn parse_pair(s: &str) -> CliResult<CompositionPair> {
    let (x, y) = s
        .split_once(';')
        .ok_or_else(|| CliError::Usage(format!("expected 'X=.. ; Y=..', got {s:?}")))?;
    let strip = |t: &str, key: &str| {
        let t = t.trim();
        t.strip_prefix(key).unwrap_or(t).trim().to_string()
    };
    let x: Composition = strip(x, "X=").parse()?;
    let y: Composition = strip(y, "Y=").parse()?;
    Ok(CompositionPair::new(x, y)?)
}

fn apply_map(map: MapName, line: &str) -> CliResult<String> {
    Ok(match map {
        MapName::Phi => phi(&parse_pair(line)?).to_string(),
        MapName::Psi => psi(&parse_pair(line)?).to_string(),
        MapName::PhiInv => phi_inv(&path_of_string(line)?)?.to_string(),
        MapName::PsiInv => psi_inv(&path_of_string(line)?)?.to_string(),
        MapName::TubePhi => tube_phi(&line.parse()?)?.to_string(),
        MapName::TubePhiInv => tube_phi_inv(&path_of_string(line)?)?.to_string(),
    })
}

fn cmd_biject(a: &BijectArgs, out: &mut impl Write) -> CliResult<()> {
    let lines: Vec<String> = match &a.input {
        Some(s) => vec![s.clone()],
        None => io::stdin().lock().lines().collect::<io::Result<_>>()?,
    };
    for line in lines.iter().map(|l| l.trim()).filter(|l| !l.is_empty()) {
        writeln!(out, "{}", apply_map(a.map, line)?)?;
    }
    Ok(())
}

fn cmd_asym(a: &AsymArgs, out: &mut impl Write) -> CliResult<()> {
    let id: FormulaId = a.formula.parse()?;
    let source: ExactSource = a.source.parse()?;
    if a.n.contains(&0) {
        return Err(CliError::Usage("sizes must be at least 1".into()));
    }
    let report = convergence_report(id, source, &a.n)?;
    match a.format {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        Format::Csv | Format::Plain => write!(out, "{}", report.to_csv(a.header))?,
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs, out: &mut impl Write) -> CliResult<()> {
    let level = match (a.only, a.level) {
        (Some(Only::Fixtures), _) => Level::Fixtures,
        (None, LevelArg::Quick) => Level::Quick,
        (None, LevelArg::Full) => Level::Full,
    };
    let outcomes = checks::run_level(level);
    if a.json {
        writeln!(out, "{}", checks::summary_json(&outcomes))?;
    } else {
        for o in &outcomes {
            writeln!(out, "{}", o.summary_line())?;
        }
    }
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.criterion.to_string())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("criteria: {}", failed.join(", "))))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Count(a) => cmd_count(a, &mut out),
        Command::Table(a) => cmd_table(a, &mut out),
        Command::Gf(a) => cmd_gf(a, &mut out),
        Command::Biject(a) => cmd_biject(a, &mut out),
        Command::Asym(a) => cmd_asym(a, &mut out),
        Command::Verify(a) => cmd_verify(a, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("knightpaths: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
