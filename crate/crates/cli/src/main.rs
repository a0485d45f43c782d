//! `moyal-cli`: run the workspace's solvers from the shell.
//!
//! Exit codes: 0 success, 2 accuracy failure, 3 domain/usage error.

use clap::{Args, Parser, Subcommand};
use cli::commands::{self, EpsMode};
use cli::params::{resolve, sweep, Config, Param};
use cli::table::{Table, Value};
use cli::CliError;
use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "moyal-cli",
    version,
    about = "Noncommutative field-theory toolkit"
)]
struct Cli {
    /// `key = value` configuration file; flags override it
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file; default $MOYAL_OUT_DIR/<subcommand>.{csv,json}, else stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

/// Numeric parameter flags are strings so that each may be a single value
/// or a `start:stop:step` sweep range.
#[derive(Subcommand)]
enum Cmd {
    /// Diagonal vacuum of the broken-phase self-dual scalar model
    VacuumScalar(VacuumScalarArgs),
    /// Symmetric gauge vacuum sequence (2D branches or the 4D closed form)
    VacuumGauge(VacuumGaugeArgs),
    /// One-loop divergent-sector coefficients and assembly defect
    EffectiveAction(EffectiveActionArgs),
    /// Topology and divergence degrees of a ribbon graph
    Ribbon(RibbonArgs),
    /// Validate a commutation factor and report graded-structure data
    EpsCheck(EpsCheckArgs),
    /// Run the full acceptance suite
    Verify,
}

#[derive(Args)]
struct VacuumScalarArgs {
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    dim: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    trunc: Option<String>,
}

#[derive(Args)]
struct VacuumGaugeArgs {
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    dim: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    omega2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<String>,
    /// Homogeneous-part scale (2D)
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Boundary value v_1 (4D)
    #[arg(long, allow_hyphen_values = true)]
    v1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mmax: Option<String>,
}

#[derive(Args)]
struct EffectiveActionArgs {
    #[arg(long, allow_hyphen_values = true)]
    omega2: Option<String>,
}

#[derive(Args)]
struct RibbonArgs {
    /// Graph file (`v:`/`e:` lines); `-` reads stdin
    #[arg(long, allow_hyphen_values = true)]
    graph: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    dim: Option<String>,
}

#[derive(Args)]
struct EpsCheckArgs {
    /// Grading group, e.g. `Z2` or `Z2xZ2`
    #[arg(long, allow_hyphen_values = true)]
    group: String,
    /// Generator table of the factor as a JSON array of arrays; entries are
    /// ±1, "i", "-i", or [num, den] for e^{2πi num/den}
    #[arg(long, allow_hyphen_values = true)]
    table: String,
    /// Also analyze the associated fine (crossed-product) algebra
    #[arg(long)]
    fine: bool,
    /// Degree map φ of an elementary algebra as a JSON array of degree
    /// vectors; adds its ε-center and trace weights
    #[arg(long, allow_hyphen_values = true)]
    elementary: Option<String>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success codes itself
            if e.use_stderr() {
                eprint!("{e}");
                std::process::exit(3);
            }
            e.exit();
        }
    };
    match run(&cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code() as i32);
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let cfg = match &cli.config {
        Some(path) => Config::parse(&std::fs::read_to_string(path)?)?,
        None => Config::default(),
    };
    match &cli.cmd {
        Cmd::VacuumScalar(a) => {
            let t = swept_table(
                &cfg,
                &[
                    ("theta", &a.theta, "1"),
                    ("mu2", &a.mu2, "24"),
                    ("lambda", &a.lambda, "1"),
                    ("dim", &a.dim, "2"),
                    ("trunc", &a.trunc, "16"),
                ],
                |v| {
                    commands::vacuum_scalar_table(
                        v["theta"],
                        v["mu2"],
                        v["lambda"],
                        v["dim"],
                        v["trunc"],
                    )
                },
            )?;
            write_out(cli, "vacuum-scalar.csv", &t.to_csv())
        }
        Cmd::VacuumGauge(a) => {
            let t = swept_table(
                &cfg,
                &[
                    ("theta", &a.theta, "1"),
                    ("dim", &a.dim, "2"),
                    ("omega2", &a.omega2, "0.25"),
                    ("kappa", &a.kappa, "-1"),
                    ("alpha", &a.alpha, "0"),
                    ("v1", &a.v1, "1"),
                    ("mmax", &a.mmax, "30"),
                ],
                |v| {
                    commands::vacuum_gauge_table(
                        v["theta"],
                        v["dim"],
                        v["omega2"],
                        v["kappa"],
                        v["alpha"],
                        v["v1"],
                        v["mmax"],
                    )
                },
            )?;
            write_out(cli, "vacuum-gauge.csv", &t.to_csv())
        }
        Cmd::EffectiveAction(a) => {
            let t = swept_table(&cfg, &[("omega2", &a.omega2, "0.25")], |v| {
                commands::effective_action_row(v["omega2"])
            })?;
            write_out(cli, "effective-action.csv", &t.to_csv())
        }
        Cmd::Ribbon(a) => {
            cfg.check_known(&["dim"])?;
            let text = if a.graph.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(&a.graph)?
            };
            let dim = Param::parse("dim", &resolve(&a.dim, "dim", &cfg, "4"))?;
            let dim = match dim {
                Param::Scalar(v) => v,
                _ => return Err(CliError::Domain("`dim` cannot be a sweep range".into())),
            };
            write_out(cli, "ribbon.json", &commands::ribbon_json(&text, dim)?)
        }
        Cmd::EpsCheck(a) => {
            cfg.check_known(&[])?;
            let table: serde_json::Value = serde_json::from_str(&a.table)
                .map_err(|e| CliError::Domain(format!("--table is not valid JSON: {e}")))?;
            let mode = match (&a.elementary, a.fine) {
                (Some(_), true) => {
                    return Err(CliError::Domain(
                        "--fine and --elementary are mutually exclusive".into(),
                    ))
                }
                (Some(phi), false) => {
                    let phi: Vec<Vec<i64>> = serde_json::from_str(phi).map_err(|e| {
                        CliError::Domain(format!("--elementary is not a JSON degree list: {e}"))
                    })?;
                    EpsMode::Elementary(phi)
                }
                (None, true) => EpsMode::Fine,
                (None, false) => EpsMode::ReportOnly,
            };
            write_out(
                cli,
                "eps-check.json",
                &commands::eps_check_json(&a.group, &table, mode)?,
            )
        }
        Cmd::Verify => {
            let mut failed = 0usize;
            let mut report = String::new();
            for c in cli::verify::all() {
                match (c.run)() {
                    Ok(detail) => {
                        report.push_str(&format!(
                            "criterion {:2} ({}): PASS — {detail}\n",
                            c.index, c.name
                        ));
                    }
                    Err(why) => {
                        failed += 1;
                        report.push_str(&format!(
                            "criterion {:2} ({}): FAIL — {why}\n",
                            c.index, c.name
                        ));
                    }
                }
            }
            print!("{report}");
            if failed > 0 {
                return Err(CliError::Accuracy(format!("{failed} criteria failed")));
            }
            Ok(())
        }
    }
}

/// Resolve each named parameter (flag > config > default), expand sweep
/// ranges, evaluate the body once per point, and stitch the results into a
/// single table with the sweep coordinates prefixed.
fn swept_table(
    cfg: &Config,
    spec: &[(&str, &Option<String>, &str)],
    body: impl Fn(&BTreeMap<String, f64>) -> Result<Table, CliError>,
) -> Result<Table, CliError> {
    let known: Vec<&str> = spec.iter().map(|(n, _, _)| *n).collect();
    cfg.check_known(&known)?;
    let params: Vec<(&str, Param)> = spec
        .iter()
        .map(|(name, flag, default)| {
            Param::parse(name, &resolve(flag, name, cfg, default)).map(|p| (*name, p))
        })
        .collect::<Result<_, _>>()?;
    let mut parts = Vec::new();
    for (coords, assign) in sweep(&params)? {
        let prefix: Vec<(String, Value)> = coords
            .into_iter()
            .map(|(n, v)| (n, Value::Float(v)))
            .collect();
        parts.push(body(&assign)?.with_prefix(&prefix));
    }
    Ok(Table::concat(parts))
}

fn write_out(cli: &Cli, default_name: &str, content: &str) -> Result<(), CliError> {
    if let Some(path) = &cli.out {
        std::fs::write(path, content)?;
    } else if let Ok(dir) = std::env::var("MOYAL_OUT_DIR") {
        std::fs::write(PathBuf::from(dir).join(default_name), content)?;
    } else {
        print!("{content}");
    }
    Ok(())
}
