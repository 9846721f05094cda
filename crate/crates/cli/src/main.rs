use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qmock::mock::{Family, MockSpec};
use qmock::partitions::{self, PartFamily};
use qmock::qkit::{self, Params, QStep};
use qmock::registry::{self, Outcome, VerifyReport};
use qmock::ring::{Monomial, QSeries};
use qmock::Error;

const SCHEMA: &str = "qmock/1";
const EXPAND_ORDER: i64 = 20;

const MONOMIAL_HELP: &str = "\
Monomial arguments use the grammar

    monomial := ['-'] factor (('*' | '/') factor)*
    factor   := integer | var ['^' ['-'] integer]
    var      := 'z' | 'a' | 'q'

so `-z*q^2/a`, `2*z^-1*a` and `q` are all valid. Division is allowed only by
a unit monomial.

Exit codes: 0 success, 1 verification mismatch, 2 usage or unknown name,
3 illegal series specification, 4 accuracy error.";

#[derive(Parser)]
#[command(name = "qmock", version, about = "Exact q-series expansion and identity verification", after_help = MONOMIAL_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<std::path::PathBuf>,
    /// Leave timings out so output is byte-identical across runs.
    #[arg(long, global = true)]
    stable: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a mock theta family or both sides of a classical identity.
    Expand {
        name: String,
        /// Comma-separated `name=monomial` bindings, e.g. `a=a,z=-z*q`.
        #[arg(long, default_value = "")]
        args: String,
        /// Expand through q^ORDER. Defaults to QMOCK_DEFAULT_ORDER or 20.
        #[arg(long)]
        order: Option<i64>,
        /// Evaluate at -q when -1.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        qsign: i64,
        /// Base q^STEP for families that take one.
        #[arg(long)]
        step: Option<i64>,
    },
    /// Verify catalog identities coefficientwise.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        /// Compare through q^ORDER. Defaults to QMOCK_DEFAULT_ORDER, then each entry's own default.
        #[arg(long)]
        order: Option<i64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Fault injection: add z*q^K to the right side of ID, given as `ID:K`.
        #[arg(long, hide = true)]
        perturb: Option<String>,
    },
    /// Count (and optionally list) the partitions of N in a family.
    Enumerate {
        family: String,
        n: i64,
        #[arg(long)]
        list: bool,
    },
    /// Compare an enumerator with its generating function through q^MAX_N.
    Crosscheck {
        family: String,
        #[arg(long, default_value_t = 20)]
        max_n: i64,
    },
    /// Print the machine-readable catalog.
    Catalog,
}

/// An error carrying the process exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::IllegalSpec(_)
            | Error::NotInvertible(_)
            | Error::NonTerminating { .. }
            | Error::ParityViolation { .. } => 3,
            Error::AccuracyTooLow { .. } | Error::InsufficientAccuracy { .. } => 4,
            _ => 2,
        };
        Fail(code, e.to_string())
    }
}

fn env_order() -> Result<Option<i64>, Fail> {
    match std::env::var("QMOCK_DEFAULT_ORDER") {
        Ok(v) => v
            .trim()
            .parse::<i64>()
            .ok()
            .filter(|&o| o >= 0)
            .map(Some)
            .ok_or_else(|| {
                Fail(
                    2,
                    format!("QMOCK_DEFAULT_ORDER must be a non-negative integer, got `{v}`"),
                )
            }),
        Err(_) => Ok(None),
    }
}

fn check_order(o: i64) -> Result<i64, Fail> {
    if o < 0 {
        return Err(Fail(2, format!("order must be non-negative, got {o}")));
    }
    Ok(o)
}

fn parse_bindings(s: &str) -> Result<Vec<(String, Monomial)>, Fail> {
    s.split(',')
        .map(str::trim)
        .filter(|b| !b.is_empty())
        .map(|b| {
            let (k, v) = b
                .split_once('=')
                .ok_or_else(|| Fail(2, format!("expected name=monomial, got `{b}`")))?;
            Ok((k.trim().to_string(), v.parse::<Monomial>()?))
        })
        .collect()
}

/// Unbound `z`/`x` default to `z` and `a`/`y` to `a`.
fn default_arg(name: &str) -> Option<Monomial> {
    match name {
        "z" | "x" => Some(Monomial::z()),
        "a" | "y" => Some(Monomial::a()),
        _ => None,
    }
}

fn series_text(s: &QSeries) -> String {
    format!("{s}\n")
}

fn expand(
    name: &str,
    args: &str,
    order: i64,
    qsign: i64,
    step: Option<i64>,
    format: Format,
) -> Result<String, Fail> {
    let bound = parse_bindings(args)?;
    if qsign != 1 && qsign != -1 {
        return Err(Fail(2, format!("qsign must be 1 or -1, got {qsign}")));
    }
    if let Ok(f) = Family::from_name(name) {
        for (k, _) in &bound {
            if !f.params().contains(&k.as_str()) {
                return Err(Fail(2, format!("{name} has no argument `{k}`")));
            }
        }
        let args = f
            .params()
            .iter()
            .map(|p| {
                bound
                    .iter()
                    .find(|(k, _)| k == p)
                    .map(|(_, m)| m.clone())
                    .or_else(|| default_arg(p))
                    .ok_or_else(|| Fail(2, format!("{name} needs a value for `{p}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut spec = MockSpec::new(f, args).qsign(qsign);
        if let Some(t) = step {
            spec = spec.step(QStep::new(t)?);
        }
        let s = spec.build(order)?;
        return Ok(match format {
            Format::Text => series_text(&s),
            Format::Json => {
                json_line(json!({ "schema": SCHEMA, "name": name, "series": s.to_json() }))
            }
        });
    }
    if qkit::classical::lookup(name).is_ok() {
        let mut params: Params = bound.into_iter().collect();
        if let Some(t) = step {
            params.insert("base".to_string(), Monomial::q(t));
        }
        let inst = qkit::classical(name, &params, order)?;
        let (l, r) = if qsign < 0 {
            (inst.lhs.q_negate(), inst.rhs.q_negate())
        } else {
            (inst.lhs, inst.rhs)
        };
        return Ok(match format {
            Format::Text => format!("lhs:\n{}rhs:\n{}", series_text(&l), series_text(&r)),
            Format::Json => json_line(
                json!({ "schema": SCHEMA, "name": name, "lhs": l.to_json(), "rhs": r.to_json() }),
            ),
        });
    }
    Err(Error::UnknownName(name.to_string()).into())
}

fn json_line(v: Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(&v).expect("values serialize")
    )
}

fn report_text(r: &VerifyReport, stable: bool) -> String {
    let status = match r.status {
        Outcome::ExpectedFail => "fail (expected)",
        s => s.as_str(),
    };
    let mut out = format!("{:<20} {:<16} order {}", r.id, status, r.order);
    if !stable {
        out.push_str(&format!("  {} ms", r.elapsed_ms));
    }
    out.push('\n');
    if let Some(m) = &r.first_mismatch {
        out.push_str(&format!(
            "    first mismatch at q^{}: lhs {} | rhs {}\n",
            m.q_exp, m.lhs, m.rhs
        ));
    }
    if let Some(e) = &r.error {
        out.push_str(&format!("    error: {e}\n"));
    }
    out
}

fn parse_perturb(s: &str) -> Result<(String, i64), Fail> {
    let (id, k) = s
        .rsplit_once(':')
        .ok_or_else(|| Fail(2, format!("expected ID:K, got `{s}`")))?;
    let k = k
        .parse()
        .map_err(|_| Fail(2, format!("bad exponent in `{s}`")))?;
    Ok((id.to_string(), k))
}

fn verify(
    id: Option<String>,
    order: Option<i64>,
    workers: usize,
    perturb: Option<String>,
    format: Format,
    stable: bool,
) -> Result<(String, u8), Fail> {
    if workers == 0 {
        return Err(Fail(2, "workers must be at least 1".into()));
    }
    let order = match order {
        Some(o) => Some(check_order(o)?),
        None => env_order()?,
    };
    let perturb = perturb.as_deref().map(parse_perturb).transpose()?;
    let reports = match id {
        Some(id) => {
            let e = registry::lookup(&id)?;
            let k = perturb.filter(|(p, _)| *p == id).map(|(_, k)| k);
            vec![registry::verify_perturbed(
                e.id,
                order.unwrap_or_else(|| e.default_acc()),
                k,
            )?]
        }
        None => {
            if let Some((p, _)) = &perturb {
                registry::lookup(p)?;
            }
            registry::verify_all_perturbed(
                order,
                workers,
                perturb.as_ref().map(|(p, k)| (p.as_str(), *k)),
            )
        }
    };
    let code = if reports.iter().all(VerifyReport::ok) {
        0
    } else if reports.iter().any(|r| r.status == Outcome::Fail) {
        1
    } else {
        // Only errors remain; report the first one's class.
        let e = reports
            .iter()
            .find_map(|r| r.error.clone())
            .expect("an error report");
        Fail::from(e).0
    };
    let out = match format {
        Format::Text => {
            let mut s: String = reports.iter().map(|r| report_text(r, stable)).collect();
            let passed = reports.iter().filter(|r| r.ok()).count();
            s.push_str(&format!(
                "{passed}/{} entries met expectation\n",
                reports.len()
            ));
            s
        }
        Format::Json => json_line(json!({
            "schema": SCHEMA,
            "reports": reports.iter().map(|r| r.to_json(!stable)).collect::<Vec<_>>(),
        })),
    };
    Ok((out, code))
}

fn enumerate(family: &str, n: i64, list: bool, format: Format) -> Result<String, Fail> {
    let f = PartFamily::from_name(family)?;
    let (count, items) = if list {
        partitions::listing(f, n)?
    } else {
        (partitions::count(f, n)?, Vec::new())
    };
    Ok(match format {
        Format::Text => {
            let mut s = format!("{family}({n}) = {count}\n");
            for (t, _) in &items {
                s.push_str(t);
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let mut v = json!({ "schema": SCHEMA, "family": family, "n": n, "count": count });
            if list {
                v["items"] = Value::Array(items.into_iter().map(|(_, j)| j).collect());
            }
            json_line(v)
        }
    })
}

fn crosscheck(family: &str, max_n: i64, format: Format) -> Result<(String, u8), Fail> {
    let f = PartFamily::from_name(family)?;
    let c = partitions::crosscheck(f, max_n)?;
    let code = if c.ok() { 0 } else { 1 };
    let out = match format {
        Format::Text => match &c.first_mismatch {
            None => format!("{family}: enumerator matches generating function through q^{max_n}\n"),
            Some((n, e, s)) => {
                format!("{family}: mismatch at n = {n}: enumerated {e}, series coefficient {s}\n")
            }
        },
        Format::Json => json_line(json!({
            "schema": SCHEMA,
            "family": family,
            "max_n": max_n,
            "status": if c.ok() { "pass" } else { "fail" },
            "first_mismatch": c.first_mismatch.map(|(n, e, s)| json!({ "n": n, "enumerated": e, "series": s })),
        })),
    };
    Ok((out, code))
}

fn run(cli: Cli) -> Result<(String, u8), Fail> {
    let format = cli.format;
    match cli.command {
        Command::Expand {
            name,
            args,
            order,
            qsign,
            step,
        } => {
            let order = match order {
                Some(o) => check_order(o)?,
                None => env_order()?.unwrap_or(EXPAND_ORDER),
            };
            Ok((expand(&name, &args, order, qsign, step, format)?, 0))
        }
        Command::Verify {
            id,
            all: _,
            order,
            workers,
            perturb,
        } => verify(id, order, workers, perturb, format, cli.stable),
        Command::Enumerate { family, n, list } => Ok((enumerate(&family, n, list, format)?, 0)),
        Command::Crosscheck { family, max_n } => crosscheck(&family, max_n, format),
        Command::Catalog => Ok((json_line(registry::full_catalog()), 0)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let output = cli.output.clone();
    let (text, code) = match run(cli) {
        Ok(r) => r,
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(code);
        }
    };
    let written = match output {
        Some(p) => std::fs::write(&p, text.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
