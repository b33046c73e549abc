//! Command-line front end: `parteng <verb> [flags]`.

use std::io::Write;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::bijection::{bijection, BIJECTIONS};
use crate::enumeration::{count_table_dp, enumerate, CountTable};
use crate::error::{invalid, Error, Result};
use crate::family::{family, slater_sum, FAMILIES};
use crate::glaisher::BijectionTrace;
use crate::partition::Partition;
use crate::qseries::{jacobi_triple, theta_gauss, theta_pentagonal, TruncatedSeries};
use crate::registry::Params;
use crate::report::render_table;
use crate::verify::{suite, verify_all, VerifyConfig, DEFAULT_ENUM_CAP, DEFAULT_ORDER, SUITES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// DP where available, enumeration otherwise
    Auto,
    Enumerate,
    Dp,
    /// coefficient of the family's generating function
    Series,
}

#[derive(Debug, Parser)]
#[command(name = "parteng", version, about = "Count, enumerate and map integer partitions; expand q-series; verify identities")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Args)]
struct Shared {
    #[arg(long, value_enum, env = "PARTENG_FORMAT", default_value = "plain")]
    format: Format,
    /// print partitions without exponent shorthand
    #[arg(long)]
    expanded: bool,
}

#[derive(Debug, Args, Default)]
struct ParamArgs {
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    mu: Option<u32>,
    #[arg(long)]
    gamma: Option<u32>,
    #[arg(long)]
    alpha: Option<u32>,
    #[arg(long)]
    i: Option<u32>,
    #[arg(long)]
    ell: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    modulus: Option<u32>,
    /// comma-separated residues for the `avoid` family
    #[arg(long, value_delimiter = ',')]
    residues: Option<Vec<u32>>,
    /// sign of w = ±q^m in `jacobi`
    #[arg(long)]
    negative: bool,
}

impl ParamArgs {
    fn params(&self) -> Params {
        Params {
            p: self.p,
            k: self.k,
            t: self.t,
            mu: self.mu,
            gamma: self.gamma,
            alpha: self.alpha,
            i: self.i,
            ell: self.ell,
            m: self.m,
            modulus: self.modulus,
            residues: self.residues.clone(),
            negative: self.negative,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Number of partitions of n in a family
    Count {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        /// counts for every weight 0..=n
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        shared: Shared,
    },
    /// Partitions of n in a family, lexicographically decreasing
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        shared: Shared,
    },
    /// Apply a bijection to one partition, or to every domain member of weight n
    Map {
        #[arg(long)]
        bijection: String,
        #[arg(long, required_unless_present = "n", conflicts_with = "n")]
        partition: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        inverse: bool,
        /// include the rewriting steps
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        shared: Shared,
    },
    /// Expand a generating function or theta series
    Series {
        /// a family name, or theta-pentagonal, theta-gauss, jacobi, slater-even, slater-odd
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// number of terms shown in plain output
        #[arg(long, default_value_t = 20)]
        display: usize,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        shared: Shared,
    },
    /// Extract the subseries of exponents d·n + r
    Dissect {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 20)]
        display: usize,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        shared: Shared,
    },
    /// Run verification suites; exits 1 if any check fails
    Verify {
        /// a suite name or `all`
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        enum_cap: u32,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        shared: Shared,
    },
}

fn catalogue() -> String {
    let mut out = String::from("Families:\n");
    for (name, summary) in FAMILIES.describe() {
        out.push_str(&format!("  {name:<18} {summary}\n"));
    }
    out.push_str("Bijections:\n");
    for (name, summary) in BIJECTIONS.describe() {
        out.push_str(&format!("  {name:<18} {summary}\n"));
    }
    out.push_str("Suites:\n");
    for (name, summary) in SUITES.describe() {
        out.push_str(&format!("  {name:<22} {summary}\n"));
    }
    out.push_str(
        "CSV columns:\n  count: n,count\n  enumerate: partition\n  map: input,output\n  series, dissect: exponent,coefficient\n  verify: identity,params,from,to,comparisons,status,failure_check,failure_n,lhs,rhs\n",
    );
    out.push_str("Partitions use comma-separated decreasing parts with optional exponents, e.g. 4,2^2,1^2.\n");
    out
}

fn show(lambda: &Partition, expanded: bool) -> String {
    if expanded {
        lambda.to_string()
    } else {
        lambda.to_shorthand()
    }
}

/// Runs the CLI with `argv` (program name first) and returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let command = Cli::command().after_long_help(catalogue());
    let cli = match command.try_get_matches_from(argv).and_then(|m| Cli::from_arg_matches(&m)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    match dispatch(cli.verb, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    invalid("output", e.to_string())
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("json renders")).map_err(io)
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

fn csv_err(e: csv::Error) -> Error {
    invalid("output", e.to_string())
}

fn dispatch(verb: Verb, out: &mut dyn Write) -> Result<i32> {
    match verb {
        Verb::Count {
            family: name,
            n,
            table,
            method,
            params,
            shared,
        } => {
            let fam = family(&name, &params.params())?;
            let spec = fam.spec();
            let counts: Vec<BigInt> = match method {
                Method::Auto => fam.count_table(n).counts.into_iter().map(BigInt::from).collect(),
                Method::Dp => count_table_dp(n, &spec)
                    .ok_or_else(|| invalid("method", format!("no DP for family {name}")))?
                    .into_iter()
                    .map(BigInt::from)
                    .collect(),
                Method::Enumerate => (0..=n).map(|w| BigInt::from(enumerate(w, &spec).count())).collect(),
                Method::Series => fam.generating_function(n as usize).int_coeffs(),
            };
            let counts = if table { counts } else { counts[n as usize..].to_vec() };
            let first = if table { 0 } else { n };
            match shared.format {
                Format::Plain if table => {
                    for (w, c) in counts.iter().enumerate() {
                        writeln!(out, "{w} {c}").map_err(io)?;
                    }
                }
                Format::Plain => writeln!(out, "{}", counts[0]).map_err(io)?,
                Format::Json if table => {
                    let t = CountTable {
                        family: name,
                        params: fam.params(),
                        counts: counts.iter().map(|c| c.to_biguint().expect("counts are nonnegative")).collect(),
                    };
                    emit_json(out, &t.to_json())?;
                }
                Format::Json => emit_json(
                    out,
                    &json!({"family": name, "params": fam.params(), "n": n, "count": counts[0].to_string()}),
                )?,
                Format::Csv => {
                    let mut w = csv_writer(out);
                    w.write_record(["n", "count"]).map_err(csv_err)?;
                    for (i, c) in counts.iter().enumerate() {
                        w.write_record([(first as usize + i).to_string(), c.to_string()]).map_err(csv_err)?;
                    }
                    w.flush().map_err(io)?;
                }
            }
            Ok(0)
        }
        Verb::Enumerate {
            family: name,
            n,
            params,
            shared,
        } => {
            let spec = family(&name, &params.params())?.spec();
            let all: Vec<String> = enumerate(n, &spec).map(|l| show(&l, shared.expanded)).collect();
            match shared.format {
                Format::Plain => {
                    for l in &all {
                        writeln!(out, "{l}").map_err(io)?;
                    }
                }
                Format::Json => emit_json(out, &json!(all))?,
                Format::Csv => {
                    let mut w = csv_writer(out);
                    w.write_record(["partition"]).map_err(csv_err)?;
                    for l in &all {
                        w.write_record([l]).map_err(csv_err)?;
                    }
                    w.flush().map_err(io)?;
                }
            }
            Ok(0)
        }
        Verb::Map {
            bijection: name,
            partition,
            n,
            inverse,
            trace,
            params,
            shared,
        } => {
            let b = bijection(&name, &params.params())?;
            let inputs: Vec<Partition> = match (partition, n) {
                (Some(text), _) => vec![text.parse()?],
                (None, Some(n)) => {
                    let domain = if inverse { b.codomain() } else { b.domain() };
                    enumerate(n, &domain).collect()
                }
                (None, None) => return Err(Error::MissingParameter("partition")),
            };
            let mut rows = Vec::new();
            for input in inputs {
                let mut steps = BijectionTrace::default();
                let recorder = trace.then_some(&mut steps);
                let output = if inverse {
                    b.inverse_traced(&input, recorder)?
                } else {
                    b.forward_traced(&input, recorder)?
                };
                rows.push((input, output, steps));
            }
            let single = rows.len() == 1;
            match shared.format {
                Format::Plain => {
                    for (input, output, steps) in &rows {
                        for s in &steps.steps {
                            writeln!(out, "  {}: {} -> {}", s.rule, show(&s.before, shared.expanded), show(&s.after, shared.expanded))
                                .map_err(io)?;
                        }
                        if single {
                            writeln!(out, "{}", show(output, shared.expanded)).map_err(io)?;
                        } else {
                            writeln!(out, "{} -> {}", show(input, shared.expanded), show(output, shared.expanded)).map_err(io)?;
                        }
                    }
                }
                Format::Json => {
                    let items: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(input, output, steps)| {
                            let mut v = json!({
                                "bijection": name,
                                "direction": if inverse { "inverse" } else { "forward" },
                                "input": show(input, shared.expanded),
                                "output": show(output, shared.expanded),
                            });
                            if trace {
                                v["trace"] = serde_json::to_value(&steps.steps).expect("trace serializes");
                            }
                            v
                        })
                        .collect();
                    if single {
                        emit_json(out, &items[0])?;
                    } else {
                        emit_json(out, &json!(items))?;
                    }
                }
                Format::Csv => {
                    let mut w = csv_writer(out);
                    w.write_record(["input", "output"]).map_err(csv_err)?;
                    for (input, output, _) in &rows {
                        w.write_record([show(input, shared.expanded), show(output, shared.expanded)]).map_err(csv_err)?;
                    }
                    w.flush().map_err(io)?;
                }
            }
            Ok(0)
        }
        Verb::Series {
            family: name,
            order,
            display,
            params,
            shared,
        } => {
            let s = named_series(&name, &params.params(), order)?;
            emit_series(out, &s, display, shared.format)?;
            Ok(0)
        }
        Verb::Dissect {
            family: name,
            order,
            d,
            r,
            display,
            params,
            shared,
        } => {
            let s = named_series(&name, &params.params(), order)?.dissect(d, r)?;
            emit_series(out, &s, display, shared.format)?;
            Ok(0)
        }
        Verb::Verify {
            suite: name,
            order,
            enum_cap,
            params,
            shared,
        } => {
            let cfg = VerifyConfig {
                order,
                enum_cap,
                overrides: params.params(),
            };
            let reports = if name == "all" { verify_all(&cfg)? } else { suite(&name)?.run(&cfg)? };
            match shared.format {
                Format::Plain => write!(out, "{}", render_table(&reports)).map_err(io)?,
                Format::Json => emit_json(out, &serde_json::to_value(&reports).expect("reports serialize"))?,
                Format::Csv => {
                    let mut w = csv_writer(out);
                    w.write_record([
                        "identity", "params", "from", "to", "comparisons", "status", "failure_check", "failure_n", "lhs", "rhs",
                    ])
                    .map_err(csv_err)?;
                    for r in &reports {
                        let f = r.first_failure.as_ref();
                        w.write_record([
                            r.identity.clone(),
                            r.param_string(),
                            r.range.from.to_string(),
                            r.range.to.to_string(),
                            r.comparisons.to_string(),
                            if r.passed() { "pass" } else { "fail" }.to_string(),
                            f.map_or(String::new(), |f| f.check.clone()),
                            f.map_or(String::new(), |f| f.n.to_string()),
                            f.map_or(String::new(), |f| f.lhs.clone()),
                            f.map_or(String::new(), |f| f.rhs.clone()),
                        ])
                        .map_err(csv_err)?;
                    }
                    w.flush().map_err(io)?;
                }
            }
            Ok(if reports.iter().all(|r| r.passed()) { 0 } else { 1 })
        }
    }
}

fn named_series(name: &str, params: &Params, order: usize) -> Result<TruncatedSeries> {
    Ok(match name {
        "theta-pentagonal" => theta_pentagonal(order),
        "theta-gauss" => theta_gauss(order),
        "jacobi" => jacobi_triple(params.m()?, params.negative, order),
        "slater-even" => slater_sum(2, 0, 0, order),
        "slater-odd" => slater_sum(2, 2, 1, order),
        _ => family(name, params)?.generating_function(order),
    })
}

fn emit_series(out: &mut dyn Write, s: &TruncatedSeries, display: usize, format: Format) -> Result<()> {
    match format {
        Format::Plain => writeln!(out, "{}", s.format_terms(display.min(s.order()))).map_err(io),
        Format::Json => emit_json(out, &s.to_json()),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["exponent", "coefficient"]).map_err(csv_err)?;
            for (e, c) in s.int_coeffs().iter().enumerate() {
                w.write_record([e.to_string(), c.to_string()]).map_err(csv_err)?;
            }
            w.flush().map_err(io)
        }
    }
}
