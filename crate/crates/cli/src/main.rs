//! lwb — command-line driver for the Dirichlet L-function workbench.
//!
//! Verbs: `characters`, `scan-zeros`, `verify <kind>`, `selftest`,
//! `export-plotdata`. Configuration is flat key=value with dotted sections;
//! every key can be overridden on the command line either as `--set key=val`
//! or directly as a dotted flag of the same name, e.g. `--bump.a=0.25`.
//!
//! Exit codes: 0 pass, 2 verification-threshold failure, 1 error.

use clap::{Parser, Subcommand};
use lwb_core::arith::EllSieve;
use lwb_core::characters::conductor_and_primitive_part;
use lwb_core::config::Config;
use lwb_core::report::{load_report, write_plotdata, write_report};
use lwb_core::selftest::run_selftest;
use lwb_core::sums::{
    compare_ultraclean_ii, compare_ultraclean_iii, eureka_residual, meowing_check,
    twist_smoothed_report, twist_t_report, Rational, ReportKind, VerificationReport,
};
use lwb_core::zeros::{cache_path, export_zeros, fetch_zeros, import_zeros, scan_zeros, ZeroList};
use lwb_core::{Character, Error, EvalParams};
use std::f64::consts::TAU;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lwb",
    version,
    about = "Numerical workbench for Dirichlet L-functions: characters, zeros, twisted ell-sums"
)]
struct Cli {
    /// config file (flat key=value, dotted sections)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// override a config key (repeatable): --set bump.a=0.25
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    set: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the characters mod q in enumeration order
    Characters {
        /// modulus
        q: u64,
    },
    /// Scan critical-line zeros up to height T and cache them as CSV
    ScanZeros {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        index: u64,
        /// scan window start
        #[arg(long, default_value_t = 0.05)]
        t0: f64,
        /// scan window end (≤ 300)
        #[arg(long)]
        t1: f64,
        /// ingest from the configured zeros.source_url instead of scanning
        #[arg(long, default_value_t = false)]
        from_url: bool,
    },
    /// Run one verification kind and write its JSON/CSV report
    Verify {
        /// ultraclean_ii | ultraclean_iii | twist_T | twist_smoothed | eureka | meowing
        kind: String,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        index: u64,
        /// rational twist h/k
        #[arg(long, default_value = "1/1")]
        xi: String,
    },
    /// Run the property suite; exits 2 if any check fails
    Selftest,
    /// Emit X-vs-residual plot data (log-log ready) from a stored report
    ExportPlotdata {
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    // dotted flags mirror config keys exactly; peel them off before clap
    let mut overrides: Vec<(String, String)> = Vec::new();
    let mut rest: Vec<String> = Vec::new();
    let mut args = std::env::args().peekable();
    while let Some(arg) = args.next() {
        if let Some(body) = arg.strip_prefix("--") {
            let key_part = body.split('=').next().unwrap_or("");
            if key_part.contains('.') {
                if let Some((k, v)) = body.split_once('=') {
                    overrides.push((k.to_string(), v.to_string()));
                } else if let Some(v) = args.next() {
                    overrides.push((body.to_string(), v));
                } else {
                    eprintln!("error: flag --{body} needs a value");
                    return ExitCode::from(1);
                }
                continue;
            }
        }
        rest.push(arg);
    }

    let cli = Cli::parse_from(rest);
    match run(cli, overrides) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli, overrides: Vec<(String, String)>) -> Result<ExitCode, Error> {
    let mut cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::new(),
    };
    for (k, v) in &overrides {
        cfg.set(k, v);
    }
    for pair in &cli.set {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("--set needs KEY=VALUE, got '{pair}'")))?;
        cfg.set(k, v);
    }
    let threads = cfg.parallelism()?;
    if threads > 0 {
        // best effort; the global pool may already exist
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }

    match cli.command {
        Command::Characters { q } => cmd_characters(q),
        Command::ScanZeros {
            q,
            index,
            t0,
            t1,
            from_url,
        } => cmd_scan_zeros(&cfg, q, index, t0, t1, from_url),
        Command::Verify { kind, q, index, xi } => cmd_verify(&cfg, &kind, q, index, &xi),
        Command::Selftest => cmd_selftest(&cfg),
        Command::ExportPlotdata { report, out } => cmd_export_plotdata(&report, out),
    }
}

fn cmd_characters(q: u64) -> Result<ExitCode, Error> {
    let chars = lwb_core::enumerate_characters(q)?;
    println!("q={q}: {} characters", chars.len());
    println!(
        "{:<18} {:>9} {:>6} {:>5} {:>9}",
        "name", "conductor", "parity", "order", "principal"
    );
    for chi in &chars {
        println!(
            "{:<18} {:>9} {:>6} {:>5} {:>9}",
            chi.id(),
            chi.conductor(),
            chi.parity(),
            chi.order(),
            if chi.is_principal() { "yes" } else { "no" }
        );
    }
    Ok(ExitCode::SUCCESS)
}

/// resolve a (q, index) selector to the primitive character that carries its
/// critical-strip zeros
fn primitive_for_scan(q: u64, index: u64) -> Result<Character, Error> {
    let chi = Character::from_index(q, index)?;
    if chi.is_primitive() || chi.modulus() == 1 {
        return Ok(chi);
    }
    let (f, prim) = conductor_and_primitive_part(&chi);
    eprintln!(
        "note: {} is induced from {}; scanning the primitive character mod {f}",
        chi.id(),
        prim.id()
    );
    Ok(prim)
}

fn cmd_scan_zeros(
    cfg: &Config,
    q: u64,
    index: u64,
    t0: f64,
    t1: f64,
    from_url: bool,
) -> Result<ExitCode, Error> {
    let chi = primitive_for_scan(q, index)?;
    let p = cfg.eval_params()?;
    let cache = cfg.cache_dir();
    let list = if from_url {
        let url = cfg
            .zero_source_url()
            .ok_or_else(|| Error::Config("zeros.source_url is not configured".into()))?
            .to_string();
        fetch_zeros(&url, &chi, t1, &p, &cache)?
    } else {
        let list = scan_zeros(&chi, t0, t1, &p)?;
        export_zeros(&list, &cache_path(&cache, &chi, t1))?;
        list
    };
    println!(
        "{}: {} zeros in ({t0}, {t1}], complete={}",
        chi.id(),
        list.len(),
        list.complete
    );
    for z in list.zeros.iter().take(5) {
        println!("  gamma = {:.12}  |L'| = {:.6e}", z.gamma, z.lprime.norm());
    }
    if list.len() > 5 {
        println!("  ... ({} more)", list.len() - 5);
    }
    println!("cached: {}", cache_path(&cache, &chi, t1).display());
    Ok(ExitCode::SUCCESS)
}

fn parse_xi(text: &str) -> Result<Rational, Error> {
    let (h, k) = match text.split_once('/') {
        Some((h, k)) => (h.trim(), k.trim()),
        None => (text.trim(), "1"),
    };
    let h: u64 = h
        .parse()
        .map_err(|e| Error::Config(format!("bad xi numerator: {e}")))?;
    let k: u64 = k
        .parse()
        .map_err(|e| Error::Config(format!("bad xi denominator: {e}")))?;
    Rational::new(h, k)
}

/// scanned-or-cached zeros for a primitive character, covering (0, t_needed]
fn zeros_with_cache(
    cfg: &Config,
    prim: &Character,
    t_needed: f64,
    p: &EvalParams,
) -> Result<ZeroList, Error> {
    let t = t_needed.ceil();
    if t > 300.0 {
        return Err(Error::Domain(format!(
            "needed zero coverage T = {t} exceeds the scan ceiling 300; \
             shrink the bump support or the X grid"
        )));
    }
    let cache = cfg.cache_dir();
    let path = cache_path(&cache, prim, t);
    if path.exists() {
        let list = import_zeros(&path, prim, p)?;
        if list.complete && list.t_max >= t_needed {
            return Ok(list);
        }
    }
    let list = scan_zeros(prim, 0.05, t, p)?;
    export_zeros(&list, &path)?;
    Ok(list)
}

fn require_primitive(chi: &Character) -> Result<Character, Error> {
    if chi.is_primitive() || chi.modulus() == 1 {
        Ok(chi.clone())
    } else {
        let (f, prim) = conductor_and_primitive_part(chi);
        eprintln!(
            "note: {} is imprimitive; using its primitive part {} mod {f}",
            chi.id(),
            prim.id()
        );
        Ok(prim)
    }
}

fn cmd_verify(
    cfg: &Config,
    kind_name: &str,
    q: u64,
    index: u64,
    xi_text: &str,
) -> Result<ExitCode, Error> {
    let kind = ReportKind::parse(kind_name).ok_or_else(|| {
        Error::Config(format!(
            "unknown verify kind '{kind_name}' (expected ultraclean_ii, ultraclean_iii, \
             twist_T, twist_smoothed, eureka, meowing)"
        ))
    })?;
    let xi = parse_xi(xi_text)?;
    let p = cfg.eval_params()?;
    let chi = Character::from_index(q, index)?;
    let cap = cfg.sieve_cap()?;

    let report: VerificationReport = match kind {
        ReportKind::UltracleanII => {
            let grid = cfg.get_grid("verify.x_grid", &[1e3, 1e4, 1e5, 1e6])?;
            let max_x = grid.iter().cloned().fold(0.0, f64::max);
            let sieve = EllSieve::new(max_x.ceil() as u64, cap)?;
            compare_ultraclean_ii(&chi, &grid, &sieve)?
        }
        ReportKind::UltracleanIII => {
            let grid = cfg.get_grid("verify.x_grid", &[1e3, 1e4, 1e5, 1e6])?;
            let bump = cfg.bump_or((0.5, 2.0))?;
            let max_x = grid.iter().cloned().fold(0.0, f64::max);
            let sieve = EllSieve::new((bump.support().1 * max_x).ceil() as u64, cap)?;
            compare_ultraclean_iii(&chi, &bump, &grid, &sieve)?
        }
        ReportKind::TwistT => {
            let prim = require_primitive(&chi)?;
            let grid = cfg.get_grid("verify.t_grid", &[20.0, 40.0, 80.0, 160.0])?;
            let t_max = grid.iter().cloned().fold(0.0, f64::max);
            let zeros = zeros_with_cache(cfg, &prim, t_max, &p)?;
            let n_max = prim.modulus() as f64 * t_max / (TAU * xi.value());
            let sieve = EllSieve::new(n_max.ceil() as u64 + 1, cap)?;
            twist_t_report(&prim, xi, &grid, &zeros, &sieve)?
        }
        ReportKind::TwistSmoothed | ReportKind::Eureka => {
            let prim = require_primitive(&chi)?;
            let grid = cfg.get_grid("verify.x_grid", &[20.0, 40.0, 80.0, 160.0])?;
            // zero-side default support keeps 2πξXb within the scan ceiling
            let bump = cfg.bump_or((0.125, 0.25))?;
            let max_x = grid.iter().cloned().fold(0.0, f64::max);
            let t_needed = TAU * xi.value() * max_x * bump.support().1;
            let zeros = zeros_with_cache(cfg, &prim, t_needed, &p)?;
            let n_max = prim.modulus() as f64 * max_x * bump.support().1;
            let sieve = EllSieve::new(n_max.ceil() as u64 + 1, cap)?;
            if kind == ReportKind::TwistSmoothed {
                twist_smoothed_report(&prim, xi, &bump, &grid, &zeros, &sieve)?
            } else {
                eureka_residual(&prim, xi, &bump, &grid, &zeros)?
            }
        }
        ReportKind::Meowing => {
            let prim = require_primitive(&chi)?;
            let grid = cfg.get_grid("verify.x_grid", &[1e3, 1e4, 1e5])?;
            let bump = cfg.bump_or((0.5, 2.0))?;
            let max_x = grid.iter().cloned().fold(0.0, f64::max);
            let n_max = prim.modulus() as f64 * xi.k() as f64 * max_x * bump.support().1;
            let sieve = EllSieve::new(n_max.ceil() as u64 + 1, cap)?;
            meowing_check(&prim, xi, &bump, &grid, &sieve)?
        }
    };

    let out_dir = cfg.out_dir();
    let (json_path, csv_path) = write_report(&out_dir, &report)?;
    println!(
        "{} for {} (xi = {}):",
        report.kind.dir_name(),
        report.inputs.character,
        xi
    );
    println!(
        "{:>12} {:>14} {:>14} {:>12}",
        "X", "|lhs|", "|rhs|", "residual"
    );
    for pt in &report.points {
        let lhs = (pt.lhs_re * pt.lhs_re + pt.lhs_im * pt.lhs_im).sqrt();
        let rhs = (pt.rhs_re * pt.rhs_re + pt.rhs_im * pt.rhs_im).sqrt();
        println!(
            "{:>12.4} {:>14.6e} {:>14.6e} {:>12.4e}",
            pt.x, lhs, rhs, pt.residual
        );
    }
    println!(
        "fitted exponent: {:.4} (stderr {:.4}, {} points used, {} dropped)",
        report.fitted_exponent, report.fit_stderr, report.fit_points_used, report.fit_points_dropped
    );
    if let Some(alt) = &report.alt_phase {
        println!(
            "alt phase {}: fitted exponent {:.4}",
            alt.phase, alt.fitted_exponent
        );
    }
    println!("report: {}", json_path.display());
    println!("grid:   {}", csv_path.display());

    let threshold = cfg.get_f64("verify.max_exponent", 0.75)?;
    if report.fitted_exponent <= threshold {
        println!(
            "PASS (exponent {:.4} <= {threshold})",
            report.fitted_exponent
        );
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAIL (exponent {:.4} > {threshold})", report.fitted_exponent);
        Ok(ExitCode::from(2))
    }
}

fn cmd_selftest(cfg: &Config) -> Result<ExitCode, Error> {
    let results = run_selftest(cfg)?;
    let mut all_ok = true;
    for r in &results {
        println!(
            "{} {} — {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
        all_ok &= r.passed;
    }
    if all_ok {
        println!("selftest: all {} checks passed", results.len());
        Ok(ExitCode::SUCCESS)
    } else {
        println!("selftest: FAILURES present");
        Ok(ExitCode::from(2))
    }
}

fn cmd_export_plotdata(report: &PathBuf, out: Option<PathBuf>) -> Result<ExitCode, Error> {
    let rep = load_report(report)?;
    let out = out.unwrap_or_else(|| report.with_extension("plot.csv"));
    write_plotdata(&rep, &out)?;
    println!("plot data: {}", out.display());
    Ok(ExitCode::SUCCESS)
}
