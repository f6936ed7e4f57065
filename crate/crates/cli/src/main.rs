//! Command-line surface: multiplicity tables, verification suites, and
//! brute-force oracle comparisons over small general linear groups.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use unitensor_core::combinatorics::multipartitions;
use unitensor_core::exactalg::TPoly;
use unitensor_core::kernel::KernelContext;
use unitensor_core::quiver::{self, RootClass};
use unitensor_core::suites::{self, SuiteOptions};
use unitensor_core::{oracle, MultiPartition};

#[derive(Parser)]
#[command(
    name = "unitensor",
    about = "Tensor-product multiplicity polynomials of unipotent characters of finite general linear groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print V, U, A polynomials with root data for every multipartition.
    Table {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        g: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Override the feasibility guard (n <= 6).
        #[arg(long)]
        force: bool,
        /// Restrict to a single multipartition, e.g. "1^3|1^3|1^3".
        #[arg(long)]
        mu: Option<String>,
    },
    /// Run a named verification suite.
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        samples: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Compare the pipeline against brute-force inner products.
    Oracle {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u8,
        #[arg(long, default_value_t = 0)]
        g: u32,
        /// Use the twisted (generic) inner product instead of the plain one.
        #[arg(long)]
        generic: bool,
        /// Emit machine-readable oracle records.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Table {
            n,
            k,
            g,
            format,
            force,
            mu,
        } => {
            if n < 1 || k < 1 {
                return Err("n and k must be at least 1".to_string());
            }
            if n > 6 && !force {
                return Err(format!(
                    "n = {n} exceeds the default feasibility bound 6; pass --force to override"
                ));
            }
            let rows = match mu {
                Some(text) => {
                    let mu: MultiPartition = text
                        .parse()
                        .map_err(|e| format!("cannot parse --mu: {e}"))?;
                    if mu.size() != n || mu.arity() != k {
                        return Err(format!(
                            "--mu must have size {n} and {k} components, got {mu}"
                        ));
                    }
                    vec![mu]
                }
                None => multipartitions(n, k), // total order, largest first
            };
            let ctx = KernelContext::new(n, k, g);
            let mut table = Vec::with_capacity(rows.len());
            for mu in rows {
                table.push(table_row(&ctx, &mu, g)?);
            }
            print_table(n, k, g, &table, format)?;
            Ok(true)
        }
        Command::Check {
            suite,
            max_n,
            samples,
            seed,
        } => {
            let options = SuiteOptions {
                max_n,
                samples,
                seed,
            };
            let report = suites::run_suite(&suite, options).ok_or_else(|| {
                format!(
                    "unknown suite {suite:?}; available: {}",
                    suites::SUITE_NAMES.join(", ")
                )
            })?;
            let verdict = if report.passed() { "pass" } else { "FAIL" };
            println!("{}: {} ({} cases)", report.name, verdict, report.cases);
            for failure in &report.failures {
                println!("  {failure}");
            }
            Ok(report.passed())
        }
        Command::Oracle {
            n,
            q,
            g,
            generic,
            json,
        } => {
            if generic {
                if n != 2 {
                    return Err("the generic oracle supports --n 2 only".to_string());
                }
            } else if n > 3 {
                return Err("the oracle supports n <= 3".to_string());
            }
            if json {
                let records = oracle::oracle_records(n, 3, g, q).map_err(|e| e.to_string())?;
                println!(
                    "{}",
                    serde_json::to_string_pretty(&records).map_err(|e| e.to_string())?
                );
                return Ok(true);
            }
            let report = suites::oracle_comparison(n, g, q, generic).map_err(|e| e.to_string())?;
            let verdict = if report.passed() { "pass" } else { "FAIL" };
            println!(
                "{} (n={n}, q={q}, g={g}): {} ({} comparisons)",
                report.name, verdict, report.cases
            );
            for failure in &report.failures {
                println!("  {failure}");
            }
            Ok(report.passed())
        }
    }
}

struct TableRow {
    mu: MultiPartition,
    v: TPoly,
    u: TPoly,
    a: TPoly,
    d: i64,
    delta: i64,
    root_class: &'static str,
}

fn table_row(ctx: &KernelContext, mu: &MultiPartition, g: u32) -> Result<TableRow, String> {
    let v = ctx.v_poly(mu).map_err(|e| e.to_string())?;
    let u = ctx.u_poly(mu).map_err(|e| e.to_string())?;
    let a = ctx.a_poly(mu).map_err(|e| e.to_string())?;
    let (quiver, vec) = quiver::build_quiver(mu, g);
    let root_class = match quiver.classify_root(&vec) {
        RootClass::RealRoot { .. } => "real",
        RootClass::ImaginaryRoot { .. } => "imaginary",
        RootClass::NotRoot => "none",
    };
    Ok(TableRow {
        mu: mu.clone(),
        v,
        u,
        a,
        d: quiver::d_mu(mu, g),
        delta: quiver::delta(mu, g),
        root_class,
    })
}

fn coeffs_json(poly: &TPoly) -> Result<serde_json::Value, String> {
    let ints = poly
        .int_coeffs()
        .ok_or_else(|| "polynomial with non-integer coefficients at the boundary".to_string())?;
    let nums = ints
        .into_iter()
        .map(|c| {
            i64::try_from(&c)
                .map(serde_json::Value::from)
                .map_err(|_| "coefficient exceeds the JSON integer range".to_string())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(serde_json::json!({ "coeffs": nums }))
}

fn print_table(n: u32, k: usize, g: u32, rows: &[TableRow], format: Format) -> Result<(), String> {
    match format {
        Format::Text => {
            println!(
                "{:<24} {:<16} {:<20} {:<16} {:>4} {:>6}  root",
                "mu", "V", "U", "A", "d", "delta"
            );
            for row in rows {
                println!(
                    "{:<24} {:<16} {:<20} {:<16} {:>4} {:>6}  {}",
                    row.mu.to_string(),
                    row.v.render(),
                    row.u.render(),
                    row.a.render(),
                    row.d,
                    row.delta,
                    row.root_class
                );
            }
        }
        Format::Json => {
            let rows = rows
                .iter()
                .map(|row| {
                    Ok(serde_json::json!({
                        "mu": row.mu.to_string(),
                        "v": coeffs_json(&row.v)?,
                        "u": coeffs_json(&row.u)?,
                        "a": coeffs_json(&row.a)?,
                        "d": row.d,
                        "delta": row.delta,
                        "root_class": row.root_class,
                    }))
                })
                .collect::<Result<Vec<_>, String>>()?;
            let doc = serde_json::json!({ "n": n, "k": k, "g": g, "rows": rows });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?
            );
        }
        Format::Csv => {
            // Ascending integer coefficients, space separated; empty for 0.
            let coeffs = |poly: &TPoly| -> Result<String, String> {
                let ints = poly.int_coeffs().ok_or_else(|| {
                    "polynomial with non-integer coefficients at the boundary".to_string()
                })?;
                Ok(ints
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" "))
            };
            println!("mu,v,u,a,d,delta,root_class");
            for row in rows {
                println!(
                    "\"{}\",{},{},{},{},{},{}",
                    row.mu,
                    coeffs(&row.v)?,
                    coeffs(&row.u)?,
                    coeffs(&row.a)?,
                    row.d,
                    row.delta,
                    row.root_class
                );
            }
        }
    }
    Ok(())
}
