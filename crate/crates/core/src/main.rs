use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qtheta::expr;
use qtheta::numeric::{self, EvalConfig, EvalPoint, C64};
use qtheta::registry::{self, Filter, Mode, Overrides, Status, SECTIONS};
use qtheta::report::Report;

#[derive(Parser)]
#[command(name = "qtheta", version, about = "Theta functions, eta quotients and identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog records.
    List {
        /// Section slug, or its 1-based position.
        #[arg(long)]
        section: Option<String>,
        #[arg(long)]
        mode: Option<Mode>,
        #[arg(long)]
        json: bool,
    },
    /// Print the q-expansion of an expression through `valuation + order`.
    Expand {
        expr: String,
        /// Also accepted positionally, as `order N` or `N`.
        #[arg(long)]
        order: Option<i64>,
        #[arg(hide = true)]
        rest: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a builtin (theta1..theta4, eta, wp, wp_prime, rrcf) or an expression.
    Eval {
        what: String,
        #[arg(long, default_value = "0")]
        z: String,
        #[arg(long, default_value = "i")]
        tau: String,
    },
    /// Verify catalog records.
    Verify {
        ids: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        section: Option<String>,
        #[arg(long)]
        mode: Option<Mode>,
        /// Exact order, or coefficient range for arithmetic records.
        #[arg(long)]
        order: Option<i64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write the JSON report to this path.
        #[arg(long)]
        json: Option<String>,
        /// Keep wall-clock times in the report.
        #[arg(long)]
        timings: bool,
        /// Perturb each check; every record should then fail.
        #[arg(long)]
        mutate: bool,
    },
    /// Rogers–Ramanujan continued fraction at τ.
    Rrcf {
        #[arg(long)]
        tau: String,
        /// Also print the radical value, where one is known.
        #[arg(long)]
        closed_form: bool,
    },
}

/// `println!` that exits quietly when stdout is closed early (`| head`).
macro_rules! emit {
    ($($arg:tt)*) => {
        if let Err(e) = writeln!(io::stdout().lock(), $($arg)*) {
            if e.kind() == io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            return Err(UsageError(format!("cannot write to stdout: {e}")));
        }
    };
}

/// Usage and domain problems; reported with exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Parse `a`, `bi`, `a+bi`, `a-bi`; a bare `i` means `1i`.
fn parse_complex(s: &str) -> Result<C64, UsageError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || UsageError(format!("cannot parse complex number `{s}`"));
    let imag = |part: &str| -> Result<f64, UsageError> {
        match part {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            p => p.parse::<f64>().map_err(|_| bad()),
        }
    };
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(C64::new(t.parse::<f64>().map_err(|_| bad())?, 0.0));
    };
    // Split at the last sign that is neither leading nor part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(C64::new(body[..k].parse::<f64>().map_err(|_| bad())?, imag(&body[k..])?)),
        None => Ok(C64::new(0.0, imag(body)?)),
    }
}

fn format_complex(c: C64) -> String {
    let clean = |x: f64| if x == 0.0 { 0.0 } else { x };
    let (re, im) = (clean(c.re), clean(c.im));
    if im == 0.0 {
        format!("{re}")
    } else if re == 0.0 {
        format!("{im}i")
    } else {
        format!("{re}{}{}i", if im < 0.0 { "-" } else { "+" }, im.abs())
    }
}

fn section_slug(s: &str) -> Result<String, UsageError> {
    if let Ok(k) = s.parse::<usize>() {
        return SECTIONS
            .get(k.wrapping_sub(1))
            .map(|x| x.to_string())
            .ok_or_else(|| UsageError(format!("section index {k} is out of range 1..={}", SECTIONS.len())));
    }
    if SECTIONS.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(UsageError(format!("unknown section `{s}`; expected one of {}", SECTIONS.join(", "))))
    }
}

fn cmd_list(section: Option<String>, mode: Option<Mode>, json: bool) -> Result<ExitCode, UsageError> {
    let filter = Filter { ids: vec![], section: section.as_deref().map(section_slug).transpose()?, mode };
    let rows = registry::registry_list(&filter);
    if json {
        emit!("{}", serde_json::to_string_pretty(&rows)?);
    } else {
        for r in rows {
            emit!("{:<24} {:<16} {:<20} {}", r.id, r.mode, r.section, r.paper_label);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn expand_order(flag: Option<i64>, rest: &[String]) -> Result<i64, UsageError> {
    let positional = match rest {
        [] => None,
        [n] => Some(n),
        [word, n] if word == "order" => Some(n),
        _ => return Err(UsageError(format!("unexpected arguments: {}", rest.join(" ")))),
    };
    match (flag, positional) {
        (Some(_), Some(_)) => Err(UsageError("order given twice".into())),
        (Some(o), None) => Ok(o),
        (None, Some(n)) => n.parse().map_err(|_| UsageError(format!("order `{n}` is not an integer"))),
        (None, None) => Ok(10),
    }
}

fn cmd_expand(src: &str, order: i64, json: bool) -> Result<ExitCode, UsageError> {
    if order < 0 {
        return Err(UsageError("order must be non-negative".into()));
    }
    let e = expr::parse(src)?;
    let s = expr::expand_relative(&e, order)?;
    if json {
        let terms: Vec<(String, String)> = s.terms().map(|(e, c)| (e.to_string(), c.to_string())).collect();
        emit!("{}", serde_json::json!({ "expr": e.to_string(), "order": order, "terms": terms }));
    } else {
        emit!("{}", expr::listing(&s));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_eval(what: &str, z: &str, tau: &str) -> Result<ExitCode, UsageError> {
    let cfg = EvalConfig::default();
    let (z, tau) = (parse_complex(z)?, parse_complex(tau)?);
    let p = EvalPoint::new(z, tau);
    let value = match what {
        "theta1" | "theta2" | "theta3" | "theta4" => numeric::theta(what.as_bytes()[5] - b'0', p, &cfg)?,
        "wp" => numeric::wp(p, &cfg)?,
        "wp_prime" => numeric::wp_prime(p, &cfg)?,
        "rrcf" => numeric::rrcf(tau, &cfg)?,
        other => expr::evaluate(&expr::parse(other)?, tau, &cfg)?,
    };
    emit!("{}", format_complex(value));
    Ok(ExitCode::SUCCESS)
}

fn cmd_rrcf(tau: &str, closed_form: bool) -> Result<ExitCode, UsageError> {
    let tau = parse_complex(tau)?;
    let value = numeric::rrcf(tau, &EvalConfig::default())?;
    if !closed_form {
        emit!("{}", format_complex(value));
        return Ok(ExitCode::SUCCESS);
    }
    let exact = numeric::rrcf_closed_form(tau)
        .ok_or_else(|| UsageError("closed forms are known at τ = i, √5·i and i/√5 only".into()))?;
    emit!("product:     {}", format_complex(value));
    emit!("closed form: {exact}");
    emit!("difference:  {:e}", (value - C64::new(exact, 0.0)).norm());
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    ids: Vec<String>,
    all: bool,
    section: Option<String>,
    mode: Option<Mode>,
    order: Option<i64>,
    samples: Option<usize>,
    tol: Option<f64>,
    seed: u64,
    json: Option<String>,
    timings: bool,
    mutate: bool,
) -> Result<ExitCode, UsageError> {
    if ids.is_empty() && !all && section.is_none() && mode.is_none() {
        return Err(UsageError("name at least one identity, or pass --all, --section or --mode".into()));
    }
    if all && !ids.is_empty() {
        return Err(UsageError("--all cannot be combined with identity names".into()));
    }
    for id in &ids {
        if registry::find(id).is_none() {
            return Err(UsageError(format!("unknown identity `{id}`")));
        }
    }
    if order.is_some_and(|o| o < 0) {
        return Err(UsageError("order must be non-negative".into()));
    }
    if samples == Some(0) {
        return Err(UsageError("samples must be positive".into()));
    }
    let mut cfg = EvalConfig { seed, ..EvalConfig::default() };
    if let Some(t) = tol {
        cfg.comparison_tolerance = t;
    }
    cfg.validate()?;
    let filter = Filter { ids, section: section.as_deref().map(section_slug).transpose()?, mode };
    let report = registry::verify_all(&filter, &Overrides { order, samples, mutate }, &cfg);
    let report = if timings { report } else { report.without_timings() };
    print_report(&report)?;
    if let Some(path) = json {
        fs::write(&path, report.to_json() + "\n").map_err(|e| UsageError(format!("cannot write {path}: {e}")))?;
    }
    Ok(if report.succeeded() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn print_report(report: &Report) -> Result<(), UsageError> {
    for r in &report.results {
        let detail = match (&r.first_mismatch_exponent, r.max_abs_residual) {
            (Some(e), _) => format!("first mismatch at q^{e}"),
            (None, Some(x)) => format!("residual {x:.3e}"),
            _ => String::new(),
        };
        let note = if r.status == Status::Error { r.note.clone().unwrap_or_default() } else { String::new() };
        let line = format!("{:<24} {:<16} {:<9} {detail}{note}", r.id, r.mode, r.status);
        emit!("{}", line.trim_end());
    }
    emit!(
        "{} records: {} pass, {} evidence, {} fail, {} error",
        report.results.len(),
        report.count(Status::Pass),
        report.count(Status::Evidence),
        report.count(Status::Fail),
        report.count(Status::Error)
    );
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::List { section, mode, json } => cmd_list(section, mode, json),
        Command::Expand { expr, order, rest, json } => cmd_expand(&expr, expand_order(order, &rest)?, json),
        Command::Eval { what, z, tau } => cmd_eval(&what, &z, &tau),
        Command::Rrcf { tau, closed_form } => cmd_rrcf(&tau, closed_form),
        Command::Verify { ids, all, section, mode, order, samples, tol, seed, json, timings, mutate } => {
            cmd_verify(ids, all, section, mode, order, samples, tol, seed, json, timings, mutate)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        let ok = |s: &str| parse_complex(s).ok().unwrap();
        assert_eq!(ok("i"), C64::new(0.0, 1.0));
        assert_eq!(ok("-i"), C64::new(0.0, -1.0));
        assert_eq!(ok("1.0i"), C64::new(0.0, 1.0));
        assert_eq!(ok("0.25+1.5i"), C64::new(0.25, 1.5));
        assert_eq!(ok("-0.25-i"), C64::new(-0.25, -1.0));
        assert_eq!(ok("1e-3+2e+0i"), C64::new(1e-3, 2.0));
        assert_eq!(ok("3"), C64::new(3.0, 0.0));
        assert!(parse_complex("1+").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn section_indices() {
        assert_eq!(section_slug("3").ok().unwrap(), "quintuple");
        assert!(section_slug("0").is_err());
        assert!(section_slug("nowhere").is_err());
    }
}
