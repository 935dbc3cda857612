//! The `stieltjes` command line: `compute`, `table` and `verify`.
//!
//! Exit codes are 0 on success, 1 when a verification check fails and 2
//! for any usage or input error. Values are printed as decimal strings at
//! the requested precision, never as binary floats.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{domain, Error, Result};
use crate::numeric::ext::{tol_digits, MAX_DIGITS};
use crate::numeric::{ExtReal, SeriesValue, DEFAULT_DIGITS};
use crate::related::{
    delta, digamma, digamma_rational, dilcher_log_gamma_k, dilcher_series61, eta, log_gamma,
    EtaRoute,
};
use crate::stieltjes::{gamma1_alt, gamma1_rational, gamma_n, Method, RationalArg, StieltjesQuery};
use crate::verify::{run_suite, TolPolicy, VerifyReport};
use crate::zeta::{zeta_deriv0, zeta_deriv0_diff};

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code when a verification check fails.
pub const EXIT_FAILED: i32 = 1;
/// Exit code for invalid usage or input.
pub const EXIT_USAGE: i32 = 2;

/// Largest number of cells `table` will compute.
const MAX_GRID: usize = 10_000;

#[derive(Parser, Debug)]
#[command(
    name = "stieltjes",
    version,
    about = "Generalized Stieltjes constants and related constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Working precision in decimal digits.
    #[arg(long, global = true, env = "STIELTJES_PREC_DIGITS")]
    prec_digits: Option<u32>,
    /// Absolute error target.
    #[arg(long, global = true, default_value = "1e-12")]
    tol: String,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one constant.
    Compute(ComputeArgs),
    /// Compute a constant over a grid of orders and arguments.
    Table(TableArgs),
    /// Run identity checks.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Constant {
    Gamma,
    #[value(name = "zeta_deriv0", alias = "zeta-deriv0")]
    ZetaDeriv0,
    Eta,
    Delta,
    Digamma,
    #[value(name = "loggamma", alias = "log-gamma")]
    Loggamma,
    Dilcher,
}

impl Constant {
    fn name(self) -> &'static str {
        match self {
            Constant::Gamma => "gamma",
            Constant::ZetaDeriv0 => "zeta_deriv0",
            Constant::Eta => "eta",
            Constant::Delta => "delta",
            Constant::Digamma => "digamma",
            Constant::Loggamma => "loggamma",
            Constant::Dilcher => "dilcher",
        }
    }

    fn uses_n(self) -> bool {
        !matches!(self, Constant::Digamma | Constant::Loggamma)
    }

    fn uses_x(self) -> bool {
        !matches!(self, Constant::Eta | Constant::Delta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
struct Params {
    /// Order `n` (for `dilcher`, the index `k`).
    #[arg(long)]
    n: Option<String>,
    /// Argument: decimal, `p/q`, `pi` or `e`.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Numerator of a rational argument.
    #[arg(long)]
    p: Option<u64>,
    /// Denominator of a rational argument.
    #[arg(long)]
    q: Option<u64>,
    /// Evaluation route; the accepted names depend on the constant.
    #[arg(long)]
    method: Option<String>,
    /// Term budget for the `limit` and von Mangoldt `series` routes.
    #[arg(long)]
    terms: Option<u64>,
    /// Shift parameter of the Coffey series.
    #[arg(long, default_value_t = 0)]
    m: u64,
    /// Cut-off of the Euler-Maclaurin evaluation of `delta`.
    #[arg(long = "big-n", default_value_t = 1000)]
    big_n: u64,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(value_enum)]
    constant: Constant,
    #[command(flatten)]
    params: Params,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(value_enum)]
    constant: Constant,
    /// With `table`, `--n` takes `a..b`, `a,b,c` or a single order, and
    /// `--x` a comma-separated list.
    #[command(flatten)]
    params: Params,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Comma-separated check ids, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Write the full report sequence as JSON to this path.
    #[arg(long)]
    report: Option<std::path::PathBuf>,
}

/// Settings shared by every subcommand, validated.
#[derive(Clone, Copy, Debug)]
struct Config {
    digits: u32,
    tol: f64,
}

impl Config {
    fn from_common(c: &Common) -> Result<Config> {
        let tol: f64 = c
            .tol
            .trim()
            .parse()
            .map_err(|_| Error::Parse(c.tol.clone()))?;
        if !(tol > 0.0 && tol <= 1.0) {
            return Err(domain(format!("--tol must lie in (0, 1], got {}", c.tol)));
        }
        let digits = c.prec_digits.unwrap_or(DEFAULT_DIGITS);
        if digits > MAX_DIGITS {
            return Err(domain(format!(
                "--prec-digits {digits} exceeds {MAX_DIGITS}"
            )));
        }
        let need = 2 * tol_digits(tol);
        if digits < need {
            return Err(domain(format!(
                "precision {digits} digits is below twice the digits of tol {} (need >= {need})",
                c.tol
            )));
        }
        Ok(Config { digits, tol })
    }
}

/// One computed cell with its parameters.
struct Cell {
    constant: Constant,
    params: BTreeMap<&'static str, Value>,
    value: SeriesValue,
}

impl Cell {
    fn payload(&self, digits: u32) -> Value {
        json!({
            "constant": self.constant.name(),
            "params": self.params,
            "value": self.value.value.to_decimal(digits as usize),
            "abs_err": self.value.abs_err.to_decimal(6),
            "terms_used": self.value.terms_used,
            "method": self.value.method,
        })
    }

    fn param(&self, key: &str) -> String {
        match self.params.get(key) {
            Some(Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
            None => String::new(),
        }
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let config = match Config::from_common(&cli.common) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = match &cli.command {
        Command::Compute(a) => compute(a, config, cli.common.format.unwrap_or(Format::Json), out),
        Command::Table(a) => table(a, config, cli.common.format.unwrap_or(Format::Csv), out),
        Command::Verify(a) => verify(a, config, cli.common.format.unwrap_or(Format::Text), out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io(e: impl std::fmt::Display) -> Error {
    Error::Unsupported(format!("output failed: {e}"))
}

fn parse_order(s: &str) -> Result<u32> {
    s.trim().parse().map_err(|_| Error::Parse(s.to_string()))
}

fn gamma_method(name: &str, terms: Option<u64>, m: u64) -> Result<Option<Method>> {
    Ok(Some(match name {
        "series-b" | "b" => Method::SeriesB,
        "series-c" | "c" => Method::SeriesC,
        "limit" => Method::Limit {
            terms: terms.ok_or_else(|| domain("--method limit needs --terms"))?,
        },
        "coffey" => Method::Coffey { m },
        "rational" | "alternating" => return Ok(None),
        other => return Err(domain(format!("unknown gamma method `{other}`"))),
    }))
}

fn rational_arg(p: &Params, x: Option<&str>) -> Result<RationalArg> {
    if let (Some(p), Some(q)) = (p.p, p.q) {
        return RationalArg::new(p, q);
    }
    let x = x.ok_or_else(|| domain("a rational argument needs --p and --q or --x p/q"))?;
    let (a, b) = x
        .split_once('/')
        .ok_or_else(|| domain(format!("`{x}` is not of the form p/q")))?;
    let a = a.trim().parse().map_err(|_| Error::Parse(x.to_string()))?;
    let b = b.trim().parse().map_err(|_| Error::Parse(x.to_string()))?;
    RationalArg::new(a, b)
}

/// Evaluates one cell.
fn evaluate(
    constant: Constant,
    n: Option<u32>,
    x: Option<&str>,
    p: &Params,
    cfg: Config,
) -> Result<Cell> {
    let method = p
        .method
        .as_deref()
        .map(|m| m.trim().to_ascii_lowercase().replace('_', "-"));
    let method = method.as_deref();
    let mut params: BTreeMap<&'static str, Value> = BTreeMap::new();
    let rational = p.p.is_some() && p.q.is_some();
    let x_text: Option<String> = match (x, rational) {
        (Some(x), _) => Some(x.to_string()),
        (None, true) => Some(format!("{}/{}", p.p.unwrap_or(0), p.q.unwrap_or(0))),
        (None, false) => None,
    };
    let arg = || -> Result<ExtReal> {
        let s = x_text
            .as_deref()
            .ok_or_else(|| domain(format!("{} needs --x", constant.name())))?;
        ExtReal::parse(s, cfg.digits)
    };
    let need_n = || n.ok_or_else(|| domain(format!("{} needs --n", constant.name())));
    if constant.uses_n() {
        params.insert("n", json!(need_n()?));
    }
    if constant.uses_x() {
        params.insert("x", json!(x_text.clone().unwrap_or_default()));
    }
    let value = match constant {
        Constant::Gamma => {
            let n = need_n()?;
            match gamma_method(method.unwrap_or("series-b"), p.terms, p.m)? {
                Some(m) => gamma_n(&StieltjesQuery::new(n, arg()?, m, cfg.tol)?)?,
                None if n != 1 => {
                    return Err(domain(
                        "the rational and alternating routes compute gamma_1 only",
                    ))
                }
                None if method == Some("rational") => {
                    gamma1_rational(rational_arg(p, x_text.as_deref())?, cfg.tol)?
                }
                None => {
                    if arg()? != 1 {
                        return Err(domain("the alternating route computes gamma_1(1) only"));
                    }
                    gamma1_alt(cfg.tol)?
                }
            }
        }
        Constant::ZetaDeriv0 => {
            let n = need_n()?;
            match method.unwrap_or("full") {
                "full" => zeta_deriv0(n, &arg()?, cfg.tol)?.value,
                "diff" => {
                    if n == 0 {
                        return Err(domain("--method diff needs n >= 1"));
                    }
                    zeta_deriv0_diff(n - 1, &arg()?, cfg.tol)?
                }
                other => {
                    return Err(domain(format!(
                        "unknown zeta_deriv0 method `{other}` (full, diff)"
                    )))
                }
            }
        }
        Constant::Eta => {
            let n = need_n()?;
            let route = match method.unwrap_or("from-gamma") {
                "from-gamma" => EtaRoute::FromGamma,
                "series" => EtaRoute::Series {
                    terms: p
                        .terms
                        .ok_or_else(|| domain("--method series needs --terms"))?,
                },
                other => {
                    return Err(domain(format!(
                        "unknown eta method `{other}` (from-gamma, series)"
                    )))
                }
            };
            if let EtaRoute::Series { terms } = route {
                params.insert("terms", json!(terms));
            }
            eta(n, route, cfg.tol)?
        }
        Constant::Delta => {
            params.insert("N", json!(p.big_n));
            delta(need_n()?, p.big_n, cfg.tol)?
        }
        Constant::Digamma => match method.unwrap_or("series") {
            "series" => digamma(&arg()?, cfg.tol)?,
            "gauss" => digamma_rational(rational_arg(p, x_text.as_deref())?, cfg.tol)?,
            other => {
                return Err(domain(format!(
                    "unknown digamma method `{other}` (series, gauss)"
                )))
            }
        },
        Constant::Loggamma => log_gamma(&arg()?, cfg.tol)?,
        Constant::Dilcher => match method.unwrap_or("series") {
            "series" => dilcher_log_gamma_k(need_n()?, &arg()?, cfg.tol)?,
            "power-series" => {
                if need_n()? != 1 {
                    return Err(domain("the power series route is for k = 1"));
                }
                dilcher_series61(&arg()?, cfg.tol)?
            }
            other => {
                return Err(domain(format!(
                    "unknown dilcher method `{other}` (series, power-series)"
                )))
            }
        },
    };
    Ok(Cell {
        constant,
        params,
        value,
    })
}

fn write_cells(
    cells: &[Cell],
    format: Format,
    digits: u32,
    single: bool,
    out: &mut dyn Write,
) -> Result<()> {
    match format {
        Format::Json => {
            let payloads: Vec<Value> = cells.iter().map(|c| c.payload(digits)).collect();
            let doc = if single {
                payloads[0].clone()
            } else {
                Value::Array(payloads)
            };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(io)?;
            writeln!(out).map_err(io)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "constant",
                "n",
                "x",
                "value",
                "abs_err",
                "terms_used",
                "method",
            ])
            .map_err(io)?;
            for c in cells {
                w.write_record([
                    c.constant.name().to_string(),
                    c.param("n"),
                    c.param("x"),
                    c.value.value.to_decimal(digits as usize),
                    c.value.abs_err.to_decimal(6),
                    c.value.terms_used.to_string(),
                    c.value.method.clone(),
                ])
                .map_err(io)?;
            }
            w.flush().map_err(io)?;
        }
        Format::Text => {
            for c in cells {
                let params: Vec<String> = c
                    .params
                    .keys()
                    .map(|k| format!("{k}={}", c.param(k)))
                    .collect();
                writeln!(
                    out,
                    "{}({}) = {} ± {}  [{}, {} terms]",
                    c.constant.name(),
                    params.join(", "),
                    c.value.value.to_decimal(digits as usize),
                    c.value.abs_err.to_decimal(3),
                    c.value.method,
                    c.value.terms_used
                )
                .map_err(io)?;
            }
        }
    }
    Ok(())
}

fn compute(a: &ComputeArgs, cfg: Config, format: Format, out: &mut dyn Write) -> Result<i32> {
    let n = match (&a.params.n, a.constant.uses_n()) {
        (Some(s), true) => Some(parse_order(s)?),
        _ => None,
    };
    let cell = evaluate(a.constant, n, a.params.x.as_deref(), &a.params, cfg)?;
    write_cells(&[cell], format, cfg.digits, true, out)?;
    Ok(EXIT_OK)
}

/// Parses `a..b`, `a..=b`, `a,b,c` or `a`.
fn parse_orders(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    let range = |lo: &str, hi: &str| -> Result<RangeInclusive<u32>> {
        Ok(parse_order(lo)?..=parse_order(hi)?)
    };
    let orders: Vec<u32> = if let Some((lo, hi)) = s.split_once("..=") {
        range(lo, hi)?.collect()
    } else if let Some((lo, hi)) = s.split_once("..") {
        range(lo, hi)?.collect()
    } else {
        s.split(',').map(parse_order).collect::<Result<_>>()?
    };
    if orders.is_empty() {
        return Err(domain(format!("order range `{s}` is empty")));
    }
    Ok(orders)
}

fn table(a: &TableArgs, cfg: Config, format: Format, out: &mut dyn Write) -> Result<i32> {
    let c = a.constant;
    let orders: Vec<Option<u32>> = if c.uses_n() {
        let spec = a
            .params
            .n
            .as_deref()
            .ok_or_else(|| domain(format!("table {} needs --n", c.name())))?;
        parse_orders(spec)?.into_iter().map(Some).collect()
    } else {
        vec![None]
    };
    let xs: Vec<Option<String>> = if c.uses_x() {
        let spec = match (&a.params.x, a.params.p, a.params.q) {
            (Some(x), _, _) => x.clone(),
            (None, Some(p), Some(q)) => format!("{p}/{q}"),
            _ => return Err(domain(format!("table {} needs --x", c.name()))),
        };
        let xs: Vec<Option<String>> = spec
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Some(s.to_string()))
            .collect();
        if xs.is_empty() {
            return Err(domain("the x grid is empty"));
        }
        xs
    } else {
        vec![None]
    };
    let cells: Vec<(Option<u32>, Option<String>)> = orders
        .iter()
        .flat_map(|n| xs.iter().map(move |x| (*n, x.clone())))
        .collect();
    if cells.len() > MAX_GRID {
        return Err(domain(format!(
            "table has {} cells, more than {MAX_GRID}",
            cells.len()
        )));
    }
    let mut params = a.params.clone();
    params.p = None;
    params.q = None;
    let computed = cells
        .par_iter()
        .map(|(n, x)| evaluate(c, *n, x.as_deref(), &params, cfg))
        .collect::<Result<Vec<Cell>>>()?;
    write_cells(&computed, format, cfg.digits, false, out)?;
    Ok(EXIT_OK)
}

fn verify(a: &VerifyArgs, cfg: Config, format: Format, out: &mut dyn Write) -> Result<i32> {
    let ids: Vec<&str> = a
        .suite
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let policy = TolPolicy::new(cfg.tol, cfg.digits)?;
    let reports = run_suite(&ids, &policy)?;
    if let Some(path) = &a.report {
        let file = std::fs::File::create(path).map_err(io)?;
        serde_json::to_writer_pretty(std::io::BufWriter::new(file), &reports).map_err(io)?;
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &reports).map_err(io)?;
            writeln!(out).map_err(io)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "check_id",
                "inputs",
                "residual",
                "tolerance",
                "passed",
                "elapsed_ms",
            ])
            .map_err(io)?;
            for r in &reports {
                w.write_record([
                    r.check_id.clone(),
                    render_inputs(r),
                    r.residual.to_decimal(6),
                    r.tolerance.to_decimal(6),
                    r.passed.to_string(),
                    format!("{:.1}", r.elapsed.as_secs_f64() * 1e3),
                ])
                .map_err(io)?;
            }
            w.flush().map_err(io)?;
        }
        Format::Text => {
            for r in &reports {
                writeln!(
                    out,
                    "{} {} {} residual={} tol={}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.check_id,
                    render_inputs(r),
                    r.residual.to_decimal(3),
                    r.tolerance.to_decimal(3)
                )
                .map_err(io)?;
                if !r.passed {
                    if let Some(note) = &r.annotation {
                        writeln!(out, "     {note}").map_err(io)?;
                    }
                }
            }
            writeln!(
                out,
                "{} of {} checks passed",
                reports.len() - failed,
                reports.len()
            )
            .map_err(io)?;
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
}

fn render_inputs(r: &VerifyReport) -> String {
    let parts: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{{{}}}", parts.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["stieltjes"];
        full.extend_from_slice(args);
        let code = run_with(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn orders() {
        assert_eq!(parse_orders("0..2").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_orders("1,3").unwrap(), vec![1, 3]);
        assert_eq!(parse_orders("4").unwrap(), vec![4]);
        assert!(parse_orders("3..1").is_err());
    }

    #[test]
    fn precision_precondition() {
        let (code, _, err) = call(&[
            "compute",
            "digamma",
            "--x",
            "1",
            "--prec-digits",
            "20",
            "--tol",
            "1e-12",
        ]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("precision"));
    }

    #[test]
    fn compute_json() {
        let (code, out, _) = call(&["compute", "digamma", "--x", "1"]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["value"]
            .as_str()
            .unwrap()
            .starts_with("-0.57721566490153"));
        assert_eq!(v["constant"], "digamma");
    }
}
