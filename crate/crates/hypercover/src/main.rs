//! Command-line front end: measures, intervals, index complexity, cover
//! construction, exact verification, brute-force oracles, and the
//! `reproduce` harness.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure,
//! 3 discrepancy outside the quarantined suites.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hypercover::block::{self, BlockSymmetricSet, OrderChoice};
use hypercover::cert::{emit_report, Certificate, ReportFormat, Status};
use hypercover::covers::{self, CoverSpec, PdcVariant, TargetSet, Witness};
use hypercover::oracle::{self, OracleOptions};
use hypercover::suites::{self, SuiteBounds, QUARANTINED, SUITES};
use hypercover::sym::{self, PointSet, SymmetricSet};
use hypercover::{Error, Result};

#[derive(Parser)]
#[command(
    name = "hypercover",
    about = "Exact hyperplane and polynomial covers of hypercube subsets: \
             measures, constructions, verifiers, and brute-force oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SetArg {
    /// Set descriptor: inline JSON or a path to a JSON file.
    #[arg(long)]
    set: String,
}

#[derive(Subcommand)]
enum Command {
    /// Weight-set measures of a symmetric set.
    Measure {
        /// One of: mu, lambda, mu-bar, lambda-bar, inn, out.
        op: String,
        #[command(flatten)]
        set: SetArg,
    },
    /// Inner or outer peripheral interval of a symmetric set.
    Interval {
        /// One of: inner, outer.
        which: String,
        #[command(flatten)]
        set: SetArg,
    },
    /// Index complexity: symmetric formula, exhaustive search, or blockwise.
    Index {
        /// One of: symmetric, bruteforce, block.
        method: String,
        #[command(flatten)]
        set: SetArg,
        /// Order choice for the block method, e.g. {"orders":["asc","desc"]}.
        #[arg(long)]
        orders: Option<String>,
    },
    /// Build one of the explicit cover constructions.
    Construct {
        #[command(subcommand)]
        recipe: Recipe,
    },
    /// Verify a witness against a cover spec, or re-verify a certificate.
    Verify {
        /// Witness JSON (hyperplane family or polynomial): inline or a path.
        #[arg(long)]
        witness: Option<String>,
        /// Cover spec JSON: inline or a path.
        #[arg(long)]
        spec: Option<String>,
        /// Certificate JSON to re-verify standalone: inline or a path.
        #[arg(long)]
        cert: Option<String>,
    },
    /// Brute-force minimum cover degree or size.
    Oracle {
        /// One of: epc, bepc, ehc.
        which: String,
        /// Cover spec JSON: inline or a path.
        #[arg(long)]
        spec: String,
        /// Ceiling for the degree ascent.
        #[arg(long)]
        max_degree: Option<u32>,
        /// Ceiling for the family-size search.
        #[arg(long)]
        max_size: Option<u32>,
    },
    /// Re-derive a theorem suite at desk scale and emit certificates.
    Reproduce {
        /// A suite name, or "all".
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_t: Option<u32>,
        /// Output format: json or table.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Render previously emitted certificates.
    Report {
        /// Certificate array JSON: inline or a path.
        #[arg(long)]
        certs: String,
        /// Output format: json or table.
        #[arg(long, default_value = "table")]
        format: String,
    },
}

#[derive(Subcommand)]
enum Recipe {
    /// The layer planes sum(X) - w for each listed weight.
    Hprime {
        #[arg(long)]
        n: usize,
        /// Comma-separated weights.
        #[arg(long)]
        weights: String,
    },
    /// The exact cover of T_{n,i} from the fundamental family.
    Hstar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
    /// m copies each of X1 and X1 - 1.
    Hcirc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Hyperplane cover of the complement of a symmetric set at (t, t-1).
    SymmetricCover {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, default_value_t = 1)]
        t: u32,
    },
    /// Block-exact hyperplane cover of the complement of a k-wise grid.
    GridCover {
        /// Block set descriptor of the grid: {"sizes":[...],"tuples":[...]}.
        #[command(flatten)]
        set: SetArg,
        #[arg(long, default_value_t = 1)]
        t: u32,
    },
    /// Block-exact polynomial cover of a k-wise grid itself.
    GridSelfCover {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, default_value_t = 1)]
        t: u32,
    },
    /// Block-exact polynomial cover of the complement of a PDC set.
    PdcCover {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, default_value_t = 1)]
        t: u32,
        /// innext (default) or literal-outext.
        #[arg(long, default_value = "innext")]
        variant: String,
    },
    /// Symmetrized cover of the ball of weights [0, w-1] at (t, 0).
    HammingBall {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        t: u32,
    },
    /// The power (sum(X) - w)^t covering a single layer at (t, 0).
    LayerPower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        t: u32,
    },
    /// View a family on n-m variables as one on n variables.
    Lift {
        #[arg(long)]
        witness: String,
        #[arg(long)]
        m: usize,
    },
    /// Substitute 0 for the first m variables of every member.
    Restrict {
        #[arg(long)]
        witness: String,
        #[arg(long)]
        m: usize,
    },
}

/// Inline JSON (starts with '{' or '[') or the contents of a file.
fn read_json_arg(arg: &str) -> Result<serde_json::Value> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Error::parse(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::parse(format!("invalid JSON: {e}")))
}

fn parse_symmetric(arg: &str) -> Result<SymmetricSet> {
    let v = read_json_arg(arg)?;
    serde_json::from_value(v).map_err(|e| Error::parse(format!("symmetric set: {e}")))
}

fn parse_point_set(arg: &str) -> Result<PointSet> {
    let v = read_json_arg(arg)?;
    serde_json::from_value(v).map_err(|e| Error::parse(format!("point set: {e}")))
}

fn parse_block_set(arg: &str) -> Result<BlockSymmetricSet> {
    let v = read_json_arg(arg)?;
    serde_json::from_value(v).map_err(|e| Error::parse(format!("block set: {e}")))
}

fn parse_weights(arg: &str) -> Result<Vec<usize>> {
    arg.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|e| Error::parse(format!("weight {s:?}: {e}")))
        })
        .collect()
}

fn grid_blocks(set: &BlockSymmetricSet) -> Result<Vec<SymmetricSet>> {
    if !set.is_grid() {
        return Err(Error::domain("descriptor is not a k-wise grid"));
    }
    Ok((0..set.structure().k()).map(|j| set.projection(j)).collect())
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn report_format(name: &str) -> Result<ReportFormat> {
    match name {
        "json" => Ok(ReportFormat::Json),
        "table" => Ok(ReportFormat::Table),
        other => Err(Error::parse(format!("unknown format {other:?}"))),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Measure { op, set } => {
            let s = parse_symmetric(&set.set)?;
            let value = match op.as_str() {
                "mu" => sym::mu(&s),
                "lambda" => sym::lambda_measure(&s),
                "mu-bar" => sym::mu_bar(&s),
                "lambda-bar" => sym::lambda_bar(&s),
                "inn" => sym::inn_measure(&s),
                "out" => sym::out_measure(&s),
                other => return Err(Error::parse(format!("unknown measure {other:?}"))),
            };
            print_json(&serde_json::json!({"measure": op, "value": value}));
            Ok(ExitCode::SUCCESS)
        }
        Command::Interval { which, set } => {
            let s = parse_symmetric(&set.set)?;
            let j = match which.as_str() {
                "inner" => sym::inner_interval(&s),
                "outer" => sym::outer_interval(&s),
                other => return Err(Error::parse(format!("unknown interval {other:?}"))),
            };
            print_json(&serde_json::json!({
                "interval": which,
                "n": j.n,
                "a": j.a,
                "b": j.b,
                "weights": j.weight_set().weights(),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Index { method, set, orders } => {
            let out = match method.as_str() {
                "symmetric" => {
                    let s = parse_symmetric(&set.set)?;
                    let (r, w) = sym::index_complexity_symmetric(&s)?;
                    serde_json::json!({"r": r, "point": w.point, "coords": w.coords})
                }
                "bruteforce" => {
                    let s = parse_point_set(&set.set)?;
                    let (r, w) = sym::index_complexity_bruteforce(&s)?;
                    serde_json::json!({"r": r, "point": w.point, "coords": w.coords})
                }
                "block" => {
                    let s = parse_block_set(&set.set)?;
                    let cert = match orders {
                        Some(o) => {
                            let oc: OrderChoice = serde_json::from_value(read_json_arg(&o)?)
                                .map_err(|e| Error::parse(format!("orders: {e}")))?;
                            block::pdc_under(&s, &oc).ok_or_else(|| {
                                Error::domain("set is not PDC under the given orders")
                            })?
                        }
                        None => block::pdc_check(&s)
                            .ok_or_else(|| Error::domain("set is not PDC under any orders"))?,
                    };
                    let r = block::block_index_complexity(&s, &cert)?;
                    serde_json::json!({
                        "r": r,
                        "orders": serde_json::to_value(&cert.orders).expect("orders"),
                    })
                }
                other => return Err(Error::parse(format!("unknown index method {other:?}"))),
            };
            print_json(&out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { recipe } => {
            let out = match recipe {
                Recipe::Hprime { n, weights } => {
                    covers::family_hprime(n, &parse_weights(&weights)?).to_json()
                }
                Recipe::Hstar { n, i } => covers::family_hstar(n, i)?.to_json(),
                Recipe::Hcirc { n, m } => covers::family_hcirc(n, m).to_json(),
                Recipe::SymmetricCover { set, t } => {
                    let s = parse_symmetric(&set.set)?;
                    covers::construct_symmetric_cover(&s, t)?.to_json()
                }
                Recipe::GridCover { set, t } => {
                    let g = parse_block_set(&set.set)?;
                    let blocks = grid_blocks(&g)?;
                    covers::construct_grid_cover(g.structure(), &blocks, t)?.to_json()
                }
                Recipe::GridSelfCover { set, t } => {
                    let g = parse_block_set(&set.set)?;
                    let blocks = grid_blocks(&g)?;
                    covers::construct_grid_self_cover(g.structure(), &blocks, t)?.to_json()
                }
                Recipe::PdcCover { set, t, variant } => {
                    let s = parse_block_set(&set.set)?;
                    let cert = block::pdc_check(&s)
                        .ok_or_else(|| Error::domain("set is not PDC under any orders"))?;
                    let variant = match variant.as_str() {
                        "innext" => PdcVariant::Innext,
                        "literal-outext" => PdcVariant::LiteralOutext,
                        other => {
                            return Err(Error::parse(format!("unknown variant {other:?}")))
                        }
                    };
                    let built = covers::construct_pdc_polynomial_cover(&s, &cert, t, variant)?;
                    serde_json::json!({
                        "polynomial": built.polynomial.to_json(),
                        "formula-degree": built.formula_degree,
                        "verified": built.report.ok,
                        "violations": serde_json::to_value(&built.report.violations)
                            .expect("violations"),
                    })
                }
                Recipe::HammingBall { n, w, t } => {
                    let hole = vec![1u8; w];
                    let pts = sym::cube_points(w).into_iter().filter(|x| *x != hole);
                    let base_spec = CoverSpec::exact(
                        TargetSet::Points(PointSet::new(w, pts)?),
                        t,
                        0,
                    )?;
                    let base = oracle::epc_oracle(&base_spec, &OracleOptions::default())?;
                    let Witness::Polynomial(base_poly) = &base.witness else {
                        return Err(Error::internal("degree oracle returns polynomials"));
                    };
                    covers::construct_hamming_ball_cover(n, w, t, base_poly)?.to_json()
                }
                Recipe::LayerPower { n, w, t } => {
                    covers::construct_layer_power_cover(n, w, t)?.to_json()
                }
                Recipe::Lift { witness, m } => {
                    let fam = match Witness::from_json(&read_json_arg(&witness)?)? {
                        Witness::Family(f) => f,
                        Witness::Polynomial(_) => {
                            return Err(Error::domain("lift acts on hyperplane families"))
                        }
                    };
                    covers::lift_subcube_cover(&fam, m).to_json()
                }
                Recipe::Restrict { witness, m } => {
                    let fam = match Witness::from_json(&read_json_arg(&witness)?)? {
                        Witness::Family(f) => f,
                        Witness::Polynomial(_) => {
                            return Err(Error::domain("restrict acts on hyperplane families"))
                        }
                    };
                    covers::restrict_subcube_cover(&fam, m)?.to_json()
                }
            };
            print_json(&out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { witness, spec, cert } => {
            if let Some(cert) = cert {
                let c = Certificate::from_json(&read_json_arg(&cert)?)?;
                let ok = c.reverify()?;
                print_json(&serde_json::json!({"ok": ok, "claim": c.claim}));
                return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) });
            }
            let (Some(witness), Some(spec)) = (witness, spec) else {
                return Err(Error::parse(
                    "verify requires --witness and --spec, or --cert",
                ));
            };
            let w = Witness::from_json(&read_json_arg(&witness)?)?;
            let s = CoverSpec::from_json(&read_json_arg(&spec)?)?;
            let report = covers::verify_cover(&w, &s);
            print_json(&serde_json::to_value(&report).expect("report serializes"));
            Ok(if report.ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Oracle { which, spec, max_degree, max_size } => {
            let s = CoverSpec::from_json(&read_json_arg(&spec)?)?;
            let options = OracleOptions { max_degree, max_size, ..OracleOptions::default() };
            let result = match which.as_str() {
                "epc" => oracle::epc_oracle(&s, &options)?,
                "bepc" => oracle::bepc_oracle(&s, &options)?,
                "ehc" => oracle::ehc_oracle(&s, &options)?,
                other => return Err(Error::parse(format!("unknown oracle {other:?}"))),
            };
            print_json(&result.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Reproduce { suite, max_n, max_t, format } => {
            let format = report_format(&format)?;
            let mut bounds = SuiteBounds::default();
            if let Some(n) = max_n {
                bounds.max_n = n;
            }
            if let Some(t) = max_t {
                bounds.max_t = t;
            }
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else if let Some(pos) = SUITES.iter().position(|s| *s == suite) {
                vec![SUITES[pos]]
            } else {
                return Err(Error::parse(format!(
                    "unknown suite {suite:?}; expected one of {SUITES:?} or \"all\""
                )));
            };
            let mut certs = Vec::new();
            for name in &names {
                certs.extend(suites::reproduce(name, bounds)?);
            }
            print!("{}", emit_report(&certs, format));
            let failing = certs.iter().any(|c| {
                c.status == Status::Discrepancy && !QUARANTINED.contains(&c.claim.as_str())
            });
            Ok(if failing { ExitCode::from(3) } else { ExitCode::SUCCESS })
        }
        Command::Report { certs, format } => {
            let format = report_format(&format)?;
            let v = read_json_arg(&certs)?;
            let arr = v
                .as_array()
                .ok_or_else(|| Error::parse("report expects a JSON array of certificates"))?;
            let parsed: Result<Vec<Certificate>> =
                arr.iter().map(Certificate::from_json).collect();
            print!("{}", emit_report(&parsed?, format));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version requests are not usage errors
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
