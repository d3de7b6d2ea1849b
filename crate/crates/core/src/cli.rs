//! Command-line front end. `run` returns the process exit code: 0 on
//! success, 2 for usage errors, 1 for computational failures.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::cache::LCache;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::field::{FieldTag, QuadInt};
use crate::gauss::gauss_sum_g;
use crate::lfunc::{dirichlet_l_central, functional_equation_residual, hecke_l_central, DEFAULT_THRESHOLD};
use crate::moments::{constant_table, moment, patterson_diagnostic, MomentOptions, SCHEMA_VERSION};
use crate::primes::{enumerate_prime_elements, PrimeElement};
use crate::symbols::{induced_dirichlet_character, residue_symbol};

#[derive(Debug, Parser)]
#[command(name = "hecke-moments", version, about = "Residue symbols, Gauss sums and central L-values over Z[i] and Z[w]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List prime elements up to a norm bound, optionally in a class `1 mod c`.
    Primes(PrimesArgs),
    /// Evaluate the n-th power residue symbol (a / m)_n.
    Symbol(SymbolArgs),
    /// Evaluate the Gauss sum g_n(r, c).
    Gauss(GaussArgs),
    /// Central value L(1/2, chi) of one family member.
    Lvalue(LvalueArgs),
    /// Weighted first moment over a family of prime moduli.
    Moment(MomentArgs),
    /// Main-term constants of the moment asymptotics.
    Constants(OutputArgs),
    /// Partial sums of Gauss sums over primes at dyadic x.
    Diagnose(DiagnoseArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Qi,
    Qw,
}

impl From<FieldArg> for FieldTag {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Qi => FieldTag::GaussianQi,
            FieldArg::Qw => FieldTag::EisensteinQw,
        }
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct PrimesArgs {
    #[arg(long, value_enum)]
    field: FieldArg,
    #[arg(long)]
    max_norm: u64,
    /// Keep only primes congruent to 1 modulo this element.
    #[arg(long)]
    class: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SymbolArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
    order: u8,
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long = "mod", allow_hyphen_values = true)]
    modulus: String,
    #[arg(long, value_enum)]
    field: Option<FieldArg>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct GaussArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
    order: u8,
    #[arg(long, allow_hyphen_values = true)]
    r: String,
    #[arg(long = "mod", allow_hyphen_values = true)]
    modulus: String,
    #[arg(long, value_enum)]
    field: Option<FieldArg>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct LvalueArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, allow_hyphen_values = true)]
    pi: String,
    /// x for Hecke families, A for Dirichlet ones; default is the symmetric point.
    #[arg(long)]
    balance: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct MomentArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, conflicts_with = "q")]
    y: Option<f64>,
    #[arg(long = "Q")]
    q: Option<f64>,
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Line-oriented L-value cache, created if missing.
    #[arg(long)]
    cache: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct DiagnoseArgs {
    #[arg(long, value_enum)]
    field: FieldArg,
    #[arg(long, value_parser = clap::value_parser!(u8).range(3..=4))]
    order: u8,
    #[arg(long)]
    x_max: f64,
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[command(flatten)]
    output: OutputArgs,
}

/// Accepts full family names and the short forms used by `moment`.
fn parse_family(s: &str) -> std::result::Result<Family, String> {
    let alias = match s {
        "quad-qw" => Some(Family::QuadHeckeQw),
        "quad-qi" => Some(Family::QuadHeckeQi),
        "cubic" => Some(Family::CubicHecke),
        "quartic" => Some(Family::QuarticHecke),
        "dirichlet3" => Some(Family::DirichletCubic),
        "dirichlet4" => Some(Family::DirichletQuartic),
        _ => None,
    };
    alias.map_or_else(|| s.parse::<Family>().map_err(|e| e.to_string()), Ok)
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            e => Failure::Compute(e),
        }
    }
}

/// Parse two elements that must share a ring; bare integers take the ring
/// of the other argument, then `--field`, then the default for the order.
fn parse_pair(x: &str, y: &str, field: Option<FieldArg>, order: u8) -> Result<(QuadInt, QuadInt)> {
    let hint = field.map(FieldTag::from).or_else(|| x.parse::<QuadInt>().ok().map(|z| z.field)).or_else(|| {
        y.parse::<QuadInt>().ok().map(|z| z.field)
    });
    let tag = hint.unwrap_or(if order == 4 { FieldTag::GaussianQi } else { FieldTag::EisensteinQw });
    Ok((QuadInt::parse_in(x, tag)?, QuadInt::parse_in(y, tag)?))
}

fn emit(out: &OutputArgs, body: &str, stdout: &mut dyn Write) -> Result<()> {
    match &out.out {
        Some(path) => std::fs::write(path, body).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => stdout.write_all(body.as_bytes()).map_err(|e| Error::Io(e.to_string())),
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(|e| Error::Internal(e.to_string()))
}

fn sibling_csv(path: &Path) -> PathBuf {
    path.with_extension("csv")
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> std::result::Result<(), Failure> {
    match cli.command {
        Command::Primes(a) => {
            let field = FieldTag::from(a.field);
            let class = match &a.class {
                Some(c) => QuadInt::parse_in(c, field)?,
                None => QuadInt::one(field),
            };
            let primes = enumerate_prime_elements(field, a.max_norm, &class)?;
            let body = match a.output.format.unwrap_or(Format::Csv) {
                Format::Csv => {
                    let mut s = String::from("norm,a,b,split_type\n");
                    for p in &primes {
                        s.push_str(&format!("{},{},{},{}\n", p.norm, p.value.a, p.value.b, p.split_type.as_str()));
                    }
                    s
                }
                Format::Json => {
                    let rows: Vec<_> = primes
                        .iter()
                        .map(|p| json!({"norm": p.norm, "a": p.value.a, "b": p.value.b, "split_type": p.split_type}))
                        .collect();
                    to_json(&json!({"schema_version": SCHEMA_VERSION, "field": field.short_name(), "primes": rows}))?
                }
            };
            emit(&a.output, &body, stdout)?;
        }
        Command::Symbol(a) => {
            let (x, m) = parse_pair(&a.a, &a.modulus, a.field, a.order)?;
            let s = residue_symbol(&x, &m, a.order)?;
            let body = match a.output.format.unwrap_or(Format::Csv) {
                Format::Csv => format!("{s}\n"),
                Format::Json => to_json(&json!({"schema_version": SCHEMA_VERSION, "a": x.to_string(), "mod": m.to_string(), "symbol": s}))?,
            };
            emit(&a.output, &body, stdout)?;
        }
        Command::Gauss(a) => {
            let (r, c) = parse_pair(&a.r, &a.modulus, a.field, a.order)?;
            let g = gauss_sum_g(a.order, &r, &c)?;
            let body = match a.output.format.unwrap_or(Format::Csv) {
                Format::Csv => format!("re,im,err\n{:?},{:?},{:?}\n", g.re, g.im, g.err),
                Format::Json => to_json(&json!({"schema_version": SCHEMA_VERSION, "re": g.re, "im": g.im, "err": g.err}))?,
            };
            emit(&a.output, &body, stdout)?;
        }
        Command::Lvalue(a) => {
            let pi = PrimeElement::new(QuadInt::parse_in(&a.pi, a.family.field())?)?;
            let rec = if a.family.is_dirichlet() {
                a.family.check_member(&pi.value)?;
                let chi = induced_dirichlet_character(&pi, a.family.order())?;
                dirichlet_l_central(&chi, a.balance)?
            } else {
                hecke_l_central(a.family, &pi, a.balance, DEFAULT_THRESHOLD)?
            };
            let residual = functional_equation_residual(&rec);
            let body = match a.output.format.unwrap_or(Format::Csv) {
                Format::Csv => format!(
                    "re,im,residual,truncation\n{:?},{:?},{:?},{}\n",
                    rec.value.re, rec.value.im, residual, rec.truncation
                ),
                Format::Json => to_json(&json!({"schema_version": SCHEMA_VERSION, "record": rec, "residual": residual}))?,
            };
            emit(&a.output, &body, stdout)?;
        }
        Command::Moment(a) => {
            let y = match (a.y, a.q) {
                (Some(y), None) if !a.family.is_dirichlet() => y,
                (None, Some(q)) if a.family.is_dirichlet() => q,
                (Some(y), None) => y,
                (None, Some(q)) => q,
                _ => return Err(Failure::Usage("moment needs one of --y or --Q".into())),
            };
            let mut cache = match &a.cache {
                Some(p) => Some(LCache::load(p)?),
                None => None,
            };
            let report = moment(a.family, y, MomentOptions { workers: a.workers }, cache.as_mut())?;
            match a.output.format.unwrap_or(Format::Json) {
                Format::Json => {
                    emit(&a.output, &to_json(&report)?, stdout)?;
                    if let Some(path) = &a.output.out {
                        let csv = sibling_csv(path);
                        std::fs::write(&csv, report.contributions_csv()).map_err(|e| Error::Io(format!("{}: {e}", csv.display())))?;
                    }
                }
                Format::Csv => emit(&a.output, &report.contributions_csv(), stdout)?,
            }
        }
        Command::Constants(o) => {
            let table = constant_table();
            let body = match o.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&json!({"schema_version": SCHEMA_VERSION, "constants": table}))?,
                Format::Csv => {
                    let mut s = String::from("name,value,formula\n");
                    for c in &table {
                        s.push_str(&format!("{},{:?},\"{}\"\n", c.name, c.value, c.formula));
                    }
                    s
                }
            };
            emit(&o, &body, stdout)?;
        }
        Command::Diagnose(a) => {
            let rows = patterson_diagnostic(a.field.into(), a.order, a.x_max, MomentOptions { workers: a.workers })?;
            let body = match a.output.format.unwrap_or(Format::Csv) {
                Format::Csv => {
                    let mut s = String::from("x,S_re,S_im,abs_S,prime_count,x^(27/32),x^(19/20)\n");
                    for r in &rows {
                        s.push_str(&format!(
                            "{:?},{:?},{:?},{:?},{},{:?},{:?}\n",
                            r.x, r.s_re, r.s_im, r.abs_s, r.prime_count, r.x_27_32, r.x_19_20
                        ));
                    }
                    s
                }
                Format::Json => to_json(&json!({"schema_version": SCHEMA_VERSION, "rows": rows}))?,
            };
            emit(&a.output, &body, stdout)?;
        }
    }
    Ok(())
}

/// Run the command line `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    match execute(cli, stdout) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}\n\nFor more information, try '--help'.");
            2
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}
