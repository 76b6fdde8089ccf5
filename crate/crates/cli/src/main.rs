mod verify;

use std::io::Read as _;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qblocks::blocks::{
    asymptotic_grid, expected_wedge_limit, ode_residual, residual_grid, wedge_asymptotic, BlockContext, GRID_KAPPAS,
    GRID_LAMBDAS, GRID_Z, ODE_STEP, SHAPES,
};
use qblocks::dyck::{enumerate_paths, DyckPath, LocalShape};
use qblocks::qfield::{eval_at_kappa, ratq_from_json, QNumeric};
use qblocks::qmatrix::{build_m, build_m_recursive, build_minv_tilings, export, invert_by_elimination, QMatrix};
use qblocks::tilings::{enumerate_cover_inclusive, nested_tiling, render_ascii, Tiling};
use qblocks::uqsl2::{build_u, pi_hat, verify_projections, ProjectionCase};
use qblocks::Exec;
use serde_json::{json, Value};

/// Tolerance for the numeric block checks.
const BLOCK_TOLERANCE: f64 = 1e-6;

#[derive(Parser)]
#[command(name = "qblocks", version, about = "Dyck tilings, q-deformed incidence matrices and conformal-block vectors")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized verification suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Tiling,
    Recursive,
    Eliminate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Shape {
    Uw,
    Dw,
    Us,
    Ds,
}

impl From<Shape> for LocalShape {
    fn from(s: Shape) -> Self {
        match s {
            Shape::Uw => LocalShape::UpWedge,
            Shape::Dw => LocalShape::DownWedge,
            Shape::Us => LocalShape::UpSlope,
            Shape::Ds => LocalShape::DownSlope,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the Dyck paths of size N in canonical order.
    Paths {
        #[arg(long)]
        n: usize,
    },
    /// The weighted incidence matrix or its inverse.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value_t = Method::Tiling)]
        method: Method,
        /// Evaluation point for CSV output.
        #[arg(long)]
        kappa: Option<f64>,
    },
    /// Tilings of the skew shape between two paths.
    Tilings {
        #[arg(long)]
        low: String,
        #[arg(long)]
        high: String,
        /// Only the nested tiling instead of all cover-inclusive ones.
        #[arg(long)]
        nested: bool,
    },
    /// The conformal-block vector of a path.
    Ublock {
        #[arg(long)]
        path: String,
    },
    /// Projection of a block vector at one column, checked against the
    /// expected smaller vector.
    Project {
        #[arg(long)]
        path: String,
        #[arg(long)]
        j: usize,
    },
    /// Run the invariant suites.
    Verify(VerifyArgs),
    /// Numeric checks of the two-point blocks.
    Blocks {
        #[command(subcommand)]
        command: BlocksCommand,
    },
    /// Evaluate exact values read as JSON from standard input at
    /// q = exp(4 pi i / kappa). Every {"num", "den"} object is replaced by
    /// {"re", "im"}.
    Eval {
        #[arg(long)]
        kappa: f64,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every suite.
    #[arg(long, conflicts_with = "suite")]
    all: bool,
    /// Run a single suite by name.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(verify::SUITE_NAMES))]
    suite: Option<String>,
    #[arg(long, default_value_t = 4)]
    n_max: usize,
}

#[derive(Subcommand)]
enum BlocksCommand {
    /// ODE residuals and, for wedges, the z -> 1 limit.
    Check {
        #[arg(long, required_unless_present = "grid")]
        kappa: Option<f64>,
        #[arg(long, required_unless_present = "grid")]
        lambda: Option<u32>,
        #[arg(long, value_enum, required_unless_present = "grid")]
        shape: Option<Shape>,
        /// Sweep the full parameter grid instead.
        #[arg(long)]
        grid: bool,
    },
}

fn parse_path(s: &str) -> Result<DyckPath> {
    s.parse::<DyckPath>().with_context(|| format!("invalid path {s:?}"))
}

fn unsupported(what: &str, format: Format) -> anyhow::Error {
    let name = match format {
        Format::Text => "text",
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Latex => "latex",
    };
    anyhow::anyhow!("{what} has no {name} output")
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn build_matrix(n: usize, inverse: bool, method: Method) -> Result<QMatrix> {
    let exec = Exec::default();
    Ok(match (inverse, method) {
        (false, Method::Tiling) => build_m(n, exec)?,
        (false, Method::Recursive) => build_m_recursive(n, exec)?,
        (false, Method::Eliminate) => invert_by_elimination(&build_minv_tilings(n, exec)?)?,
        (true, Method::Tiling) => build_minv_tilings(n, exec)?,
        (true, Method::Recursive) => invert_by_elimination(&build_m_recursive(n, exec)?)?,
        (true, Method::Eliminate) => invert_by_elimination(&build_m(n, exec)?)?,
    })
}

fn matrix_text(m: &QMatrix) -> String {
    let mut out = String::new();
    for (i, a) in m.order().iter().enumerate() {
        for (j, b) in m.order().iter().enumerate() {
            let x = m.get(i, j);
            if !x.is_zero() {
                out.push_str(&format!("{} {}  {}\n", a.steps(), b.steps(), x));
            }
        }
    }
    out
}

fn tilings_output(tilings: &[Tiling], format: Format) -> Result<()> {
    match format {
        Format::Text => {
            for (k, t) in tilings.iter().enumerate() {
                if k > 0 {
                    println!();
                }
                print!("{}", render_ascii(t));
            }
            eprintln!("{} tiling(s)", tilings.len());
        }
        Format::Json => print_json(&Value::Array(tilings.iter().map(Tiling::to_json).collect())),
        other => return Err(unsupported("tilings", other)),
    }
    Ok(())
}

fn eval_json(v: &Value, ctx: &QNumeric) -> Result<Value> {
    Ok(match v {
        Value::Object(map) if map.contains_key("num") && map.contains_key("den") => {
            let z = eval_at_kappa(&ratq_from_json(v)?, ctx)?;
            json!({ "re": z.re, "im": z.im })
        }
        Value::Object(map) => {
            Value::Object(map.iter().map(|(k, x)| Ok((k.clone(), eval_json(x, ctx)?))).collect::<Result<_>>()?)
        }
        Value::Array(xs) => Value::Array(xs.iter().map(|x| eval_json(x, ctx)).collect::<Result<_>>()?),
        other => other.clone(),
    })
}

fn blocks_check(kappa: f64, lambda: u32, shape: LocalShape, format: Format) -> Result<bool> {
    let ctx = BlockContext::new(kappa, lambda, shape)?;
    let mut ok = true;
    let mut residuals = Vec::new();
    for z in GRID_Z {
        let (r1, r2) = ode_residual(&ctx, z, ODE_STEP)?;
        ok &= r1.abs() < BLOCK_TOLERANCE && r2.abs() < BLOCK_TOLERANCE;
        residuals.push((z, r1, r2));
    }
    let limit = if shape.is_wedge() {
        let got = wedge_asymptotic(&ctx)?;
        let expected = expected_wedge_limit(&ctx)?;
        ok &= (got - expected).abs() < BLOCK_TOLERANCE;
        Some((got, expected))
    } else {
        None
    };
    match format {
        Format::Text => {
            for (z, r1, r2) in &residuals {
                println!("z = {z}: residuals {r1:.3e} {r2:.3e}");
            }
            if let Some((got, expected)) = limit {
                println!("limit at z = 1: {got:.12} (expected {expected:.12})");
            }
            println!("{}", if ok { "PASS" } else { "FAIL" });
        }
        Format::Json => print_json(&json!({
            "kappa": kappa,
            "lambda": lambda,
            "residuals": residuals.iter().map(|(z, a, b)| json!({ "z": z, "ode1": a, "ode2": b })).collect::<Vec<_>>(),
            "limit": limit.map(|(g, e)| json!({ "value": g, "expected": e })),
            "ok": ok,
        })),
        other => return Err(unsupported("blocks check", other)),
    }
    Ok(ok)
}

fn blocks_grid(format: Format) -> Result<bool> {
    let exec = Exec::default();
    let res = residual_grid(&GRID_KAPPAS, &GRID_LAMBDAS, &SHAPES, &GRID_Z, ODE_STEP, exec)?;
    let asy = asymptotic_grid(&GRID_KAPPAS, &GRID_LAMBDAS, exec)?;
    let worst_res = res.iter().map(|r| r.ode1.abs().max(r.ode2.abs())).fold(0.0, f64::max);
    let worst_asy = asy.iter().map(|r| r.error()).fold(0.0, f64::max);
    let ok = worst_res < BLOCK_TOLERANCE && worst_asy < BLOCK_TOLERANCE;
    match format {
        Format::Text => {
            println!("{} residual points, max residual {worst_res:.3e}", res.len());
            println!("{} wedge limits, max error {worst_asy:.3e}", asy.len());
            println!("{}", if ok { "PASS" } else { "FAIL" });
        }
        Format::Csv => {
            println!("kappa,lambda,shape,z,ode1,ode2");
            for r in &res {
                println!("{},{},{:?},{},{:.6e},{:.6e}", r.kappa, r.lambda, r.shape, r.z, r.ode1, r.ode2);
            }
        }
        Format::Json => print_json(&json!({
            "max_residual": worst_res,
            "max_limit_error": worst_asy,
            "limits": asy.iter().map(|r| json!({
                "kappa": r.kappa, "lambda": r.lambda, "shape": format!("{:?}", r.shape),
                "value": r.limit, "expected": r.expected,
            })).collect::<Vec<_>>(),
            "ok": ok,
        })),
        other => return Err(unsupported("blocks check --grid", other)),
    }
    Ok(ok)
}

/// `Ok(false)` is a verification failure.
fn run(cli: Cli) -> Result<bool> {
    let format = cli.format;
    match cli.command {
        Command::Paths { n } => {
            let paths = enumerate_paths(n)?;
            match format {
                Format::Text => paths.iter().for_each(|p| println!("{}", p.steps())),
                Format::Json => print_json(&json!(paths.iter().map(DyckPath::steps).collect::<Vec<_>>())),
                Format::Csv => {
                    println!("index,steps,heights");
                    for (i, p) in paths.iter().enumerate() {
                        let h: Vec<String> = p.heights().iter().map(i32::to_string).collect();
                        println!("{i},{},{}", p.steps(), h.join(" "));
                    }
                }
                other => return Err(unsupported("paths", other)),
            }
        }
        Command::Matrix { n, inverse, method, kappa } => {
            if format == Format::Csv && kappa.is_none() {
                bail!("csv output needs --kappa");
            }
            let m = build_matrix(n, inverse, method)?;
            match format {
                Format::Text => print!("{}", matrix_text(&m)),
                Format::Json => print_json(&export::to_json(&m)),
                Format::Csv => print!("{}", export::to_csv(&m, &QNumeric::new(kappa.unwrap())?)?),
                Format::Latex => print!("{}", export::to_latex(&m)),
            }
        }
        Command::Tilings { low, high, nested } => {
            let (low, high) = (parse_path(&low)?, parse_path(&high)?);
            if low.n() != high.n() {
                bail!("paths have different sizes");
            }
            let tilings = if nested {
                nested_tiling(&low, &high)?.into_iter().collect()
            } else {
                enumerate_cover_inclusive(&low, &high)?
            };
            tilings_output(&tilings, format)?;
        }
        Command::Ublock { path } => {
            let u = build_u(&parse_path(&path)?)?;
            match format {
                Format::Text => {
                    println!("normalization {}", u.normalization());
                    println!("{}", u.vec());
                }
                Format::Json => print_json(&json!({
                    "path": u.path().steps(),
                    "normalization": qblocks::qfield::ratq_to_json(u.normalization()),
                    "vector": u.vec().to_json(),
                })),
                other => return Err(unsupported("ublock", other)),
            }
        }
        Command::Project { path, j } => {
            let alpha = parse_path(&path)?;
            alpha.local_shape(j)?;
            let u = build_u(&alpha)?;
            let got = pi_hat(u.vec(), j)?;
            let report = verify_projections(&alpha)?;
            let check = report.checks.iter().find(|c| c.j == j).expect("one check per column");
            let case = match &check.case {
                ProjectionCase::Slope => "slope: expected 0".to_string(),
                ProjectionCase::UpWedge => "up-wedge: expected the smaller block vector".to_string(),
                ProjectionCase::DownWedge(f) => format!("down-wedge: expected {f} times the smaller block vector"),
            };
            match format {
                Format::Text => {
                    println!("{got}");
                    println!("{case}: {}", if check.ok { "PASS" } else { "FAIL" });
                }
                Format::Json => print_json(&json!({ "projection": got.to_json(), "case": case, "ok": check.ok })),
                other => return Err(unsupported("project", other)),
            }
            return Ok(check.ok);
        }
        Command::Verify(args) => {
            let suites: Vec<&str> = match (&args.suite, args.all) {
                (Some(s), _) => vec![s.as_str()],
                (None, _) => verify::SUITE_NAMES.to_vec(),
            };
            let reports = verify::run_suites(&suites, args.n_max, cli.seed);
            let ok = reports.iter().all(|r| r.ok);
            match format {
                Format::Text => {
                    for r in &reports {
                        println!("{:<16} {} {}", r.name, if r.ok { "PASS" } else { "FAIL" }, r.detail);
                    }
                    println!("{} of {} suites passed", reports.iter().filter(|r| r.ok).count(), reports.len());
                }
                Format::Json => print_json(&json!({
                    "n_max": args.n_max,
                    "seed": cli.seed,
                    "suites": reports.iter().map(|r| json!({ "name": r.name, "ok": r.ok, "detail": r.detail })).collect::<Vec<_>>(),
                    "ok": ok,
                })),
                other => return Err(unsupported("verify", other)),
            }
            return Ok(ok);
        }
        Command::Blocks { command: BlocksCommand::Check { kappa, lambda, shape, grid } } => {
            if grid {
                return blocks_grid(format);
            }
            let (kappa, lambda, shape) = (kappa.unwrap(), lambda.unwrap(), shape.unwrap());
            return blocks_check(kappa, lambda, shape.into(), format);
        }
        Command::Eval { kappa } => {
            let ctx = QNumeric::new(kappa)?;
            let mut input = String::new();
            std::io::stdin().read_to_string(&mut input).context("reading standard input")?;
            let v: Value = serde_json::from_str(&input).context("standard input is not JSON")?;
            match format {
                Format::Json | Format::Text => print_json(&eval_json(&v, &ctx)?),
                other => return Err(unsupported("eval", other)),
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
