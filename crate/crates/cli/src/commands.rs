use crate::literal::ComplexLiteral;
use crate::output::{self, Cell, Table};
use crate::CliError;
use borelwkb::frak_a::frak_a;
use borelwkb::geometry::{airy_domain_contains, DomainSpec};
use borelwkb::oracle::{compare, eta_oracle, perron_coeff, w0_oracle, PipelineOptions};
use borelwkb::potential::airy_family;
use borelwkb::summation::{assemble_w, default_omega, resum, Method};
use borelwkb::wkb::{compute_coefficients, default_budget};
use borelwkb::{CoefficientTable, Complex64, PotentialSpec, SheetPoint};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

/// Borel-summable WKB coefficients, resummation and the Airy-type oracle.
#[derive(Debug, Parser)]
#[command(name = "borelwkb", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Table of the roots 𝔞ₙ with their brackets and residuals.
    AnTable {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Coefficient table A_{j,m} as JSON.
    Coeffs {
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        j: usize,
        #[arg(long)]
        orders: usize,
        /// Potential specification (JSON) used instead of a named family.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Saddle-point coefficients a_m of the Airy-type integral.
    Perron {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        orders: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Evaluate W_j = e^{ω^j uξ}(1 + η_j) by one summation method.
    Resummation {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long, default_value_t = 0)]
        j: usize,
        #[command(flatten)]
        pipeline: PipelineArgs,
        /// Coefficient table written by `coeffs`; replaces the built-in Airy family.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reference value of W₀ from contour quadrature.
    Oracle {
        #[command(flatten)]
        point: PointArgs,
    },
    /// Every requested method against the oracle.
    Compare {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_enum, value_delimiter = ',', required = true)]
        methods: Vec<MethodArg>,
        #[command(flatten)]
        pipeline: PipelineArgs,
        /// Include wall-clock times, which makes the output nondeterministic.
        #[arg(long)]
        timing: bool,
    },
    /// Membership grid of the sector domain Γ_j(d).
    Stokes {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        j: usize,
        #[arg(long)]
        d: f64,
        #[arg(long)]
        eps: f64,
        /// `RE0,RE1,IM0,IM1,STEPS`; STEPS intervals per axis.
        #[arg(long)]
        grid: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct PointArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    u: ComplexLiteral,
    #[arg(long, allow_hyphen_values = true)]
    xi: ComplexLiteral,
}

#[derive(Debug, Args)]
struct PipelineArgs {
    #[arg(long)]
    orders: Option<usize>,
    #[arg(long)]
    omega: Option<f64>,
    #[arg(long)]
    pade: Option<usize>,
    /// Terms kept by truncation; defaults to the smallest-term rule.
    #[arg(long)]
    terms: Option<usize>,
}

impl PipelineArgs {
    fn options(&self) -> Result<PipelineOptions, CliError> {
        let mut opts = PipelineOptions::default();
        if let Some(o) = self.orders {
            opts.orders = o;
        }
        if let Some(p) = self.pade {
            opts.pade_order = p;
        }
        if let Some(w) = self.omega {
            if !(w > 0.0 && w.is_finite()) {
                return Err(CliError::Usage(format!("--omega must be positive, got {w}")));
            }
        }
        opts.omega = self.omega;
        opts.truncate_terms = self.terms;
        Ok(opts)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Airy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Truncate,
    BorelPade,
    Factorial,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Truncate => Method::Truncate,
            MethodArg::BorelPade => Method::BorelPade,
            MethodArg::Factorial => Method::Factorial,
        }
    }
}

pub fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::AnTable { n_max, format } => emit_table(&an_table(n_max)?, format),
        Command::Coeffs {
            family,
            n,
            j,
            orders,
            spec,
            budget,
            out,
        } => {
            let spec = load_potential(family, n, spec.as_deref())?;
            let budget = budget.unwrap_or_else(|| default_budget(spec.n, orders));
            let table = compute_coefficients(&spec, j, orders, budget)?;
            let text = serde_json::to_string_pretty(&table).expect("tables serialize") + "\n";
            write_or_print(out.as_deref(), &text)
        }
        Command::Perron { n, orders, format } => {
            let t = perron_coeff(n, orders)?;
            let rows =
                t.a.iter()
                    .enumerate()
                    .map(|(m, &a)| vec![Cell::Int(n as i64), Cell::Int(m as i64), Cell::Float(a)])
                    .collect();
            emit_table(
                &Table {
                    header: vec!["n", "m", "a_m"],
                    rows,
                },
                format,
            )
        }
        Command::Resummation {
            point,
            method,
            j,
            pipeline,
            table,
            out,
        } => {
            let value = resummation(&point, method.into(), j, &pipeline, table.as_deref())?;
            write_or_print(out.as_deref(), &output::pretty(&value))
        }
        Command::Oracle { point } => {
            let n = require_n(point.n)?;
            let (u, xi) = (point.u.value, point.xi.sheet());
            let value = json!({
                "n": n,
                "u": output::complex(u),
                "xi": output::sheet(xi),
                "w0": output::complex(w0_oracle(n, u, xi)?),
                "eta": output::complex(eta_oracle(n, u, xi)?),
            });
            print!("{}", output::pretty(&value));
            Ok(())
        }
        Command::Compare {
            point,
            methods,
            pipeline,
            timing,
        } => {
            let n = require_n(point.n)?;
            let opts = pipeline.options()?;
            let (u, xi) = (point.u.value, point.xi.sheet());
            let methods: Vec<Method> = methods.into_iter().map(Method::from).collect();
            let rows: Vec<Value> = methods
                .par_iter()
                .map(|&m| compare(n, u, xi, &[m], &opts).remove(0))
                .collect::<Vec<_>>()
                .into_iter()
                .map(|row| {
                    let mut v = match &row.outcome {
                        Ok(c) => json!({
                            "method": row.method.name(),
                            "value": output::complex(c.value),
                            "deviation": c.deviation,
                            "error_estimate": c.error_estimate,
                        }),
                        Err(e) => json!({ "method": row.method.name(), "error": e.to_string() }),
                    };
                    if timing {
                        v["wall_time_s"] = json!(row.wall_time.as_secs_f64());
                    }
                    v
                })
                .collect();
            let value = json!({ "n": n, "u": output::complex(u), "xi": output::sheet(xi), "rows": rows });
            print!("{}", output::pretty(&value));
            Ok(())
        }
        Command::Stokes {
            n,
            j,
            d,
            eps,
            grid,
            format,
        } => {
            let spec = DomainSpec::new(n, j, d, eps)?;
            emit_table(&stokes_grid(&spec, &parse_grid(&grid)?)?, format)
        }
    }
}

fn require_n(n: Option<usize>) -> Result<usize, CliError> {
    n.ok_or_else(|| CliError::Usage("--n is required".into()))
}

fn emit_table(table: &Table, format: Format) -> Result<(), CliError> {
    match format {
        Format::Csv => print!("{}", table.to_csv()),
        Format::Json => print!("{}", output::pretty(&table.to_json())),
    }
    Ok(())
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn an_table(n_max: usize) -> Result<Table, CliError> {
    if n_max < 2 {
        return Err(borelwkb::Error::Precondition(format!("--n-max must be at least 2, got {n_max}")).into());
    }
    let rows = (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let e = frak_a(n);
            vec![
                Cell::Int(n as i64),
                Cell::Float(e.value),
                Cell::Float(e.lower_bound),
                Cell::Float(e.upper_bound),
                Cell::Float(e.residual),
            ]
        })
        .collect();
    Ok(Table {
        header: vec!["n", "frak_a", "lower_bound", "upper_bound", "residual"],
        rows,
    })
}

fn load_potential(family: Option<Family>, n: Option<usize>, spec: Option<&Path>) -> Result<PotentialSpec, CliError> {
    match (family, spec) {
        (Some(_), Some(_)) => Err(CliError::Usage("--family and --spec are mutually exclusive".into())),
        (_, Some(path)) => {
            let spec: PotentialSpec = read_json(path)?;
            if let Some(n) = n.filter(|&n| n != spec.n) {
                return Err(borelwkb::Error::Precondition(format!(
                    "--n {n} disagrees with the potential file's n = {}",
                    spec.n
                ))
                .into());
            }
            Ok(spec)
        }
        (_, None) => {
            let n = require_n(n)?;
            Ok(airy_family(n, n)?)
        }
    }
}

/// Keeps `A_0..=A_orders` of a loaded table.
fn restrict(mut table: CoefficientTable, orders: usize) -> Result<CoefficientTable, CliError> {
    if orders > table.order {
        return Err(borelwkb::Error::OrderOverflow {
            requested: orders,
            available: table.order,
        }
        .into());
    }
    table.a.truncate(orders + 1);
    table.order = orders;
    Ok(table)
}

fn resummation(
    point: &PointArgs,
    method: Method,
    j: usize,
    pipeline: &PipelineArgs,
    table_path: Option<&Path>,
) -> Result<Value, CliError> {
    let mut opts = pipeline.options()?;
    let table = match table_path {
        Some(path) => {
            let table: CoefficientTable = read_json(path)?;
            if let Some(n) = point.n.filter(|&n| n != table.n) {
                return Err(borelwkb::Error::Precondition(format!(
                    "--n {n} disagrees with the table's n = {}",
                    table.n
                ))
                .into());
            }
            if j != 0 && j != table.j {
                return Err(borelwkb::Error::Precondition(format!(
                    "--j {j} disagrees with the table's j = {}",
                    table.j
                ))
                .into());
            }
            let orders = pipeline.orders.unwrap_or(table.order);
            opts.orders = orders;
            restrict(table, orders)?
        }
        None => {
            let n = require_n(point.n)?;
            let spec = airy_family(n, n)?;
            compute_coefficients(&spec, j, opts.orders, default_budget(n, opts.orders))?
        }
    };
    let (u, xi) = (point.u.value, point.xi.sheet());
    let result = resum(&table, u, xi, method, &opts)?;
    let w = assemble_w(&table, u, xi.value(), result.value)?;
    let omega =
        (method == Method::Factorial).then(|| opts.omega.unwrap_or_else(|| default_omega(table.n, table.j, xi)));
    Ok(json!({
        "method": method.name(),
        "value": output::complex(w.value),
        "log_magnitude": w.log_magnitude,
        "eta": output::complex(result.value),
        "error_estimate": result.error_estimate,
        "converged": result.converged,
        "n": table.n,
        "j": table.j,
        "orders": table.order,
        "u": output::complex(u),
        "xi": output::sheet(xi),
        "omega": omega,
        "diagnostics": result.diagnostics,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Grid {
    re: (f64, f64),
    im: (f64, f64),
    steps: usize,
}

fn parse_grid(text: &str) -> Result<Grid, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    let bad = || CliError::Usage(format!("--grid expects RE0,RE1,IM0,IM1,STEPS, got `{text}`"));
    if parts.len() != 5 {
        return Err(bad());
    }
    let f = |s: &str| s.trim().parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
    let steps: usize = parts[4].trim().parse().map_err(|_| bad())?;
    if steps == 0 {
        return Err(bad());
    }
    Ok(Grid {
        re: (f(parts[0])?, f(parts[1])?),
        im: (f(parts[2])?, f(parts[3])?),
        steps,
    })
}

fn stokes_grid(spec: &DomainSpec, grid: &Grid) -> Result<Table, CliError> {
    let at = |(lo, hi): (f64, f64), k: usize| lo + (hi - lo) * k as f64 / grid.steps as f64;
    let rows: Result<Vec<Vec<Vec<Cell>>>, borelwkb::Error> = (0..=grid.steps)
        .into_par_iter()
        .map(|row| {
            let im = at(grid.im, row);
            (0..=grid.steps)
                .map(|col| {
                    let re = at(grid.re, col);
                    let z = Complex64::new(re, im);
                    let inside =
                        z != Complex64::new(0.0, 0.0) && airy_domain_contains(spec, SheetPoint::from_complex(z))?;
                    Ok(vec![Cell::Float(re), Cell::Float(im), Cell::Int(inside as i64)])
                })
                .collect()
        })
        .collect();
    Ok(Table {
        header: vec!["re", "im", "inside"],
        rows: rows?.into_iter().flatten().collect(),
    })
}
