//! Command-line front end: `list`, `verify`, `density`, `optimize`, `sweep`
//! and `table`.
//!
//! Exit codes: 0 on success, 1 when a verification or admissibility check
//! fails, 2 for usage and input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algexpr::AlgExpr;
use crate::catalog::{self, CoxeterSimplex, VerificationReport};
use crate::error::Error;
use crate::horoball::Horoball;
use crate::packing::{self, DensityCurve, HoroballConfig, OptimizeOptions, Optimum, PackingReport};

/// Upper bound on the optimal horoball packing density in H⁵ carried as a
/// reported constant.
pub const UPPER_BOUND: f64 = 0.60695;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "horopack", version, about = "Horoball packings of asymptotic Coxeter simplices in H⁵")]
pub struct Cli {
    /// Decimal digits for exact constants.
    #[arg(long, global = true, default_value_t = 30)]
    pub precision: u32,
    /// Relative tolerance for classification, incidence and admissibility.
    #[arg(long, global = true, default_value_t = crate::lorentz::DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One row per builtin simplex.
    List,
    /// Structural checks for a builtin symbol or a catalog file.
    Verify { target: String },
    /// Density of an explicit configuration, or the optimum without `--set`.
    Density {
        target: String,
        /// Ball parameter as `<vertex>=<algexpr>`, e.g. `--set 2=133/205`.
        #[arg(long = "set", value_name = "V=EXPR")]
        set: Vec<String>,
    },
    /// Extremal configurations and the optimal density.
    Optimize { target: String },
    /// Density along the transition from a pivot's extremal configuration.
    Sweep {
        target: String,
        #[arg(long)]
        pivot: usize,
        #[arg(long, default_value_t = 100)]
        grid: usize,
        /// Write the `x,delta` curve here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Optimal densities of all builtins and the resulting bounds.
    Table,
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

fn usage(e: impl ToString) -> Failure {
    Failure { code: 2, message: e.to_string() }
}

fn check_failed(e: impl ToString) -> Failure {
    Failure { code: 1, message: e.to_string() }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    if !(cli.tol > 0.0 && cli.tol < 1.0) {
        return Err(usage(format!("--tol must be in (0, 1), got {}", cli.tol)));
    }
    if cli.precision == 0 || cli.precision > 2000 {
        return Err(usage(format!("--precision must be in 1..=2000, got {}", cli.precision)));
    }
    match &cli.command {
        Command::List => cmd_list(cli, out),
        Command::Verify { target } => cmd_verify(cli, target, out),
        Command::Density { target, set } => cmd_density(cli, target, set, out),
        Command::Optimize { target } => cmd_density(cli, target, &[], out),
        Command::Sweep { target, pivot, grid, out: path } => {
            cmd_sweep(cli, target, *pivot, *grid, path.as_deref(), out)
        }
        Command::Table => cmd_table(cli, out),
    }
}

fn io(e: std::io::Error) -> Failure {
    usage(format!("i/o error: {e}"))
}

fn meta(cli: &Cli) -> serde_json::Value {
    json!({
        "tool": "horopack",
        "version": env!("CARGO_PKG_VERSION"),
        "schema": SCHEMA_VERSION,
        "precision": cli.precision,
        "tol": cli.tol,
    })
}

fn write_json(out: &mut dyn Write, value: &serde_json::Value) -> CmdResult {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| usage(e.to_string()))?;
    writeln!(out).map_err(io)
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(out)
}

fn csv_err(e: csv::Error) -> Failure {
    usage(format!("csv error: {e}"))
}

/// Resolves a builtin symbol or a catalog file path.
pub fn resolve(target: &str) -> Result<CoxeterSimplex, Error> {
    match catalog::builtin(target) {
        Ok(s) => Ok(s),
        Err(not_found) => {
            if Path::new(target).is_file() {
                catalog::load(target)
            } else {
                Err(not_found)
            }
        }
    }
}

fn resolve_cli(target: &str) -> std::result::Result<CoxeterSimplex, Failure> {
    resolve(target).map_err(usage)
}

fn optimize_cli(cli: &Cli, s: &CoxeterSimplex) -> std::result::Result<Optimum, Failure> {
    let opts = OptimizeOptions { tol: cli.tol, ..OptimizeOptions::default() };
    packing::optimize(s, &opts).map_err(|e| match e {
        Error::Inadmissible(_) => check_failed(e),
        other => usage(other),
    })
}

fn optimize_all(cli: &Cli) -> Vec<(CoxeterSimplex, std::result::Result<Optimum, Failure>)> {
    let simplices = catalog::builtins();
    let results: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = simplices.iter().map(|s| scope.spawn(|| optimize_cli(cli, s))).collect();
        handles.into_iter().map(|h| h.join().expect("optimizer thread panicked")).collect()
    });
    simplices.into_iter().zip(results).collect()
}

fn fmt_fraction(f: Option<packing::Fraction>) -> String {
    f.map_or_else(|| "-".to_string(), |q| q.to_string())
}

fn cmd_list(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let mut rows = Vec::new();
    for (s, opt) in optimize_all(cli) {
        let opt = opt?;
        let volume = s.exact_volume(cli.precision).map_err(usage)?;
        rows.push((s, volume, opt.density));
    }
    match cli.format {
        Format::Text => {
            writeln!(out, "{:<4} {:<18} {:>1}  {:<26} {:<22} {:>10}", "witt", "coxeter", "m", "volume", "", "density")
                .map_err(io)?;
            for (s, v, d) in &rows {
                let expr = s.volume.as_ref().map(ToString::to_string).unwrap_or_default();
                writeln!(
                    out,
                    "{:<4} {:<18} {:>1}  {:<26} {:<22} {:>10.8}",
                    s.witt,
                    s.coxeter_symbol,
                    s.ideal_count(),
                    expr,
                    format!("{:.20}", v.to_f64()),
                    d
                )
                .map_err(io)?;
            }
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(s, v, d)| {
                    json!({
                        "witt": s.witt,
                        "coxeter": s.coxeter_symbol,
                        "m": s.ideal_count(),
                        "volume_expr": s.volume.as_ref().map(ToString::to_string),
                        "volume": v.to_decimal(cli.precision as usize),
                        "density": d,
                    })
                })
                .collect();
            write_json(out, &json!({ "simplices": items, "meta": meta(cli) }))?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["witt", "coxeter", "m", "volume_expr", "volume", "density"]).map_err(csv_err)?;
            for (s, v, d) in &rows {
                w.write_record([
                    s.witt.clone(),
                    s.coxeter_symbol.clone(),
                    s.ideal_count().to_string(),
                    s.volume.as_ref().map(ToString::to_string).unwrap_or_default(),
                    v.to_decimal(cli.precision as usize),
                    d.to_string(),
                ])
                .map_err(csv_err)?;
            }
            w.flush().map_err(io)?;
        }
    }
    Ok(())
}

fn print_verify(cli: &Cli, r: &VerificationReport, out: &mut dyn Write) -> CmdResult {
    match cli.format {
        Format::Text => {
            writeln!(out, "{}: {}", r.witt, if r.passed() { "PASS" } else { "FAIL" }).map_err(io)?;
            for c in &r.checks {
                writeln!(
                    out,
                    "  {:<13} {:<4} residual {:.3e}",
                    c.name,
                    if c.passed { "ok" } else { "FAIL" },
                    c.residual
                )
                .map_err(io)?;
                for d in &c.details {
                    writeln!(out, "      {d}").map_err(io)?;
                }
            }
        }
        Format::Json => {
            write_json(out, &json!({ "witt": r.witt, "passed": r.passed(), "checks": r.checks, "meta": meta(cli) }))?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["check", "passed", "residual", "details"]).map_err(csv_err)?;
            for c in &r.checks {
                w.write_record([
                    c.name.to_string(),
                    c.passed.to_string(),
                    c.residual.to_string(),
                    c.details.join("; "),
                ])
                .map_err(csv_err)?;
            }
            w.flush().map_err(io)?;
        }
    }
    Ok(())
}

fn cmd_verify(cli: &Cli, target: &str, out: &mut dyn Write) -> CmdResult {
    let s = resolve_cli(target)?;
    let r = catalog::verify(&s, cli.tol);
    print_verify(cli, &r, out)?;
    if r.passed() {
        Ok(())
    } else {
        let names: Vec<_> = r.failures().map(|c| c.name).collect();
        Err(check_failed(format!("{} failed checks: {}", r.witt, names.join(", "))))
    }
}

fn parse_set(cli: &Cli, s: &CoxeterSimplex, raw: &[String]) -> std::result::Result<HoroballConfig, Failure> {
    let mut config = HoroballConfig::new();
    for item in raw {
        let (v, e) =
            item.split_once('=').ok_or_else(|| usage(format!("--set `{item}`: expected <vertex>=<algexpr>")))?;
        let v: usize = v.trim().parse().map_err(|_| usage(format!("--set `{item}`: bad vertex index")))?;
        if !s.is_ideal(v) {
            return Err(usage(format!("--set `{item}`: A{v} is not an ideal vertex of {}", s.witt)));
        }
        if config.get(v).is_some() {
            return Err(usage(format!("--set `{item}`: vertex {v} given twice")));
        }
        let value = AlgExpr::parse(e)
            .and_then(|x| x.eval(cli.precision))
            .map_err(|err| usage(format!("--set `{item}`: {err}")))?
            .to_f64();
        let center = s.vertex(v).map_err(usage)?;
        let ball = Horoball::from_s(center, value, cli.tol).map_err(|err| usage(format!("--set `{item}`: {err}")))?;
        config.insert(v, ball);
    }
    Ok(config)
}

#[derive(Serialize)]
struct ConfigJson {
    pivot: Option<usize>,
    params: BTreeMap<String, f64>,
    piece_volumes: Vec<f64>,
    fractions: Vec<Option<String>>,
    density: f64,
    tangent_pairs: Vec<(usize, usize)>,
}

fn config_json(r: &PackingReport) -> ConfigJson {
    ConfigJson {
        pivot: r.pivot,
        params: r.balls.iter().map(|b| (b.vertex.to_string(), b.s)).collect(),
        piece_volumes: r.piece_volumes(),
        fractions: r.fractions().into_iter().map(|f| f.map(|q| q.to_string())).collect(),
        density: r.density,
        tangent_pairs: r.tangent_pairs.clone(),
    }
}

fn print_reports(cli: &Cli, witt: &str, density: f64, reports: &[&PackingReport], out: &mut dyn Write) -> CmdResult {
    match cli.format {
        Format::Text => {
            writeln!(out, "{witt}: density {density:.10}").map_err(io)?;
            for (k, r) in reports.iter().enumerate() {
                let head = match r.pivot {
                    Some(p) => format!("config {k} (pivot A{p})"),
                    None => format!("config {k}"),
                };
                writeln!(out, "  {head}: density {:.10}", r.density).map_err(io)?;
                for b in &r.balls {
                    writeln!(
                        out,
                        "    B{}  s = {:>14.10}  piece = {:.10e}  fraction = {}",
                        b.vertex,
                        b.s,
                        b.piece_volume,
                        fmt_fraction(b.fraction)
                    )
                    .map_err(io)?;
                }
                if !r.tangent_pairs.is_empty() {
                    let pairs: Vec<_> = r.tangent_pairs.iter().map(|(i, j)| format!("({i},{j})")).collect();
                    writeln!(out, "    tangent pairs: {}", pairs.join(" ")).map_err(io)?;
                }
            }
        }
        Format::Json => {
            let configs: Vec<_> = reports.iter().map(|r| config_json(r)).collect();
            write_json(out, &json!({ "witt": witt, "density": density, "configs": configs, "meta": meta(cli) }))?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["config", "vertex", "s", "piece_volume", "fraction", "density"]).map_err(csv_err)?;
            for (k, r) in reports.iter().enumerate() {
                for b in &r.balls {
                    w.write_record([
                        k.to_string(),
                        b.vertex.to_string(),
                        b.s.to_string(),
                        b.piece_volume.to_string(),
                        b.fraction.map(|q| q.to_string()).unwrap_or_default(),
                        r.density.to_string(),
                    ])
                    .map_err(csv_err)?;
                }
            }
            w.flush().map_err(io)?;
        }
    }
    Ok(())
}

fn cmd_density(cli: &Cli, target: &str, set: &[String], out: &mut dyn Write) -> CmdResult {
    let s = resolve_cli(target)?;
    if set.is_empty() {
        let opt = optimize_cli(cli, &s)?;
        let reports: Vec<&PackingReport> = opt.reports.iter().collect();
        return print_reports(cli, &s.witt, opt.density, &reports, out);
    }
    let config = parse_set(cli, &s, set)?;
    let report = packing::density(&s, &config, cli.tol).map_err(|e| match e {
        Error::Inadmissible(_) => check_failed(e),
        other => usage(other),
    })?;
    print_reports(cli, &s.witt, report.density, &[&report], out)
}

fn write_curve_csv(curve: &DensityCurve, out: &mut dyn Write) -> CmdResult {
    let mut w = csv_writer(out);
    w.write_record(["x", "delta"]).map_err(csv_err)?;
    for p in &curve.samples {
        w.write_record([p.x.to_string(), p.delta.to_string()]).map_err(csv_err)?;
    }
    w.flush().map_err(io)
}

fn cmd_sweep(
    cli: &Cli,
    target: &str,
    pivot: usize,
    grid: usize,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let s = resolve_cli(target)?;
    let curve = packing::sweep(&s, pivot, grid, cli.tol).map_err(usage)?;
    if let Some(path) = path {
        let mut file = std::fs::File::create(path).map_err(io)?;
        write_curve_csv(&curve, &mut file)?;
    }
    match cli.format {
        Format::Text => {
            let coupled: Vec<_> = curve.coupled.iter().map(|v| format!("A{v}")).collect();
            writeln!(out, "{} sweep from pivot A{} (coupled: {})", curve.witt, curve.pivot, coupled.join(" "))
                .map_err(io)?;
            writeln!(out, "  x range      [0, {:.12}]", curve.x_max).map_err(io)?;
            writeln!(out, "  delta(0)     {:.10}", curve.start().delta).map_err(io)?;
            writeln!(out, "  delta(x_max) {:.10}", curve.end().delta).map_err(io)?;
            writeln!(out, "  minimum      {:.10} at x = {:.10}", curve.minimum.delta, curve.minimum.x).map_err(io)?;
            if let Some(p) = path {
                writeln!(out, "  wrote {} samples to {}", curve.samples.len(), p.display()).map_err(io)?;
            }
        }
        Format::Json => {
            let samples: Vec<_> = curve.samples.iter().map(|p| json!({ "x": p.x, "delta": p.delta })).collect();
            write_json(
                out,
                &json!({
                    "witt": curve.witt,
                    "pivot": curve.pivot,
                    "coupled": curve.coupled,
                    "x_max": curve.x_max,
                    "start": curve.start().delta,
                    "end": curve.end().delta,
                    "minimum": { "x": curve.minimum.x, "delta": curve.minimum.delta },
                    "samples": samples,
                    "meta": meta(cli),
                }),
            )?;
        }
        Format::Csv => {
            if path.is_none() {
                write_curve_csv(&curve, out)?;
            }
        }
    }
    Ok(())
}

/// Truncates to five decimals, the precision the bounds are quoted at.
fn five_digits(x: f64) -> String {
    format!("{:.5}", (x * 1e5).floor() / 1e5)
}

fn cmd_table(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let mut rows = Vec::new();
    for (s, opt) in optimize_all(cli) {
        rows.push((s, opt?.density));
    }
    let lower = rows.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
    let bounds = format!("{} ≤ δ_opt(H⁵) ≤ {}", five_digits(lower), five_digits(UPPER_BOUND));
    let commensurable = rows.iter().filter(|r| (r.1 - lower).abs() < 1e-6).count();
    match cli.format {
        Format::Text => {
            writeln!(out, "{:<4} {:<18} {:>1}  {:>10}", "witt", "coxeter", "m", "density").map_err(io)?;
            for (s, d) in &rows {
                writeln!(out, "{:<4} {:<18} {:>1}  {:>10.8}", s.witt, s.coxeter_symbol, s.ideal_count(), d)
                    .map_err(io)?;
            }
            writeln!(out, "{commensurable} simplices attain {:.8}", lower).map_err(io)?;
            writeln!(out, "{bounds}").map_err(io)?;
        }
        Format::Json => {
            let items: Vec<_> = rows.iter().map(|(s, d)| json!({ "witt": s.witt, "density": d })).collect();
            write_json(
                out,
                &json!({ "densities": items, "attaining": commensurable, "bounds": bounds, "meta": meta(cli) }),
            )?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["witt", "coxeter", "m", "density"]).map_err(csv_err)?;
            for (s, d) in &rows {
                w.write_record([s.witt.clone(), s.coxeter_symbol.clone(), s.ideal_count().to_string(), d.to_string()])
                    .map_err(csv_err)?;
            }
            w.flush().map_err(io)?;
        }
    }
    Ok(())
}
