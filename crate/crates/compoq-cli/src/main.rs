//! compoq: series printing, identity verification, counting tables, zeta
//! evaluation and asymptotic reports, with JSON/CSV output for scripting.
//!
//! Exit codes: 0 success, 1 identity verification failure, 2 usage or
//! validation error, 3 infeasible computation size.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use compoq::asymptotics::{self, AsymptoticId};
use compoq::compositions::{self, StatKind, WeightRule};
use compoq::dirichlet;
use compoq::partitions;
use compoq::partsets::{self, PartSet};
use compoq::powerseries::{product_expand, PochhammerFactor, ProductSpec, TruncatedSeries};
use compoq::qgen::{self, GfName, ThetaSpec};
use compoq::verify::{self, IdentityReport, OracleMode, VerifyConfig};

/// Hard cap on exact-computation sizes; beyond it the tool refuses with
/// exit code 3 rather than grinding.
const MAX_EXACT: u64 = 100_000;
/// Cap on the number of compositions materialized by an enumeration.
const MAX_ENUMERATED: usize = 200_000;

#[derive(Parser)]
#[command(
    name = "compoq",
    version,
    about = "Exact q-series, composition identities, and their verification",
    after_help = "The COMPOQ_ORDER environment variable overrides the default \
                  truncation order (200)."
)]
struct Cli {
    /// Truncation order for series output.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Output format (tables default to csv, everything else to json).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Dump golden fixture files (series expansions, verification reports)
    /// into a directory and exit.
    #[arg(long, value_name = "DIR")]
    seed_corpus: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    Brute,
    Dp,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ZetaKind {
    /// 1 / (1 - z * sum n^-s) against the composition-side Dirichlet sum.
    Comp,
    /// The Euler product against the partitions-by-norm Dirichlet sum.
    Partition,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named series (dense or sparse coefficients as JSON).
    Series {
        /// psi | phi | euler | partition | p-sk | pod | overpartition | p3 |
        /// r | s | rr | rr-gf | rr-theta | jacobi-cube |
        /// pentagonal-weighted | u-weighted
        name: String,
        #[arg(long)]
        k: Option<u64>,
        /// Print only the nonzero terms.
        #[arg(long)]
        sparse: bool,
    },
    /// Verify an identity (or `all`) along every available path.
    Verify {
        /// all | even-k | odd-k | pod | overpartition | pofn2 | general-ab |
        /// p3 | r | s | rr
        id: String,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        alpha: Option<u64>,
        #[arg(long)]
        beta: Option<u64>,
        /// Largest n to check (defaults to the identity's standard range).
        #[arg(long)]
        max_n: Option<u64>,
        /// Largest n for the brute-force enumeration path.
        #[arg(long, default_value_t = 25)]
        brute_max_n: u64,
        #[arg(long, value_enum, default_value_t = OracleArg::Both)]
        oracle: OracleArg,
    },
    /// Tabulate a counting function as (n, value) rows.
    Table {
        /// p | p-sk | pod | overpartition | p3 | colored | rr | r | s
        function: String,
        #[arg(long)]
        max_n: u64,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, default_value_t = 3)]
        colors: u32,
    },
    /// Enumerate the compositions of n over a part set, or compute a
    /// weighted composition sum.
    Compositions {
        /// `naturals | n-star | p<k> | pstar<k> | s<k> | phat | hex2 | u |
        /// primes | rr-residues | mult:<m> | r:<a>:<b> | t:<a>:<b> |
        /// explicit:<v1>,<v2>,...`
        #[arg(long)]
        set: String,
        #[arg(long)]
        n: u64,
        /// `ell | ell-z:<z> | ell-star:<k> | ell-hat | p3 | r | s`
        #[arg(long)]
        weight: Option<String>,
    },
    /// Mobius function by the composition recurrence vs trial factorization.
    Mu {
        #[arg(long)]
        max_n: u64,
    },
    /// Composition or partition zeta evaluation with a tail bound.
    Zeta {
        /// Part set (must not contain 1), e.g. n-star, primes, explicit:2,3
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 1)]
        z: i64,
        #[arg(long)]
        s: f64,
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = ZetaKind::Comp)]
        kind: ZetaKind,
    },
    /// Exact counts against the closed-form growth rate.
    Asymptotic {
        /// p-sk | p3 | r | s | rr
        id: String,
        /// Comma-separated list of n values.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u64>,
        #[arg(long)]
        k: Option<u64>,
    },
}

enum AppError {
    Usage(String),
    Infeasible(String),
}

impl From<compoq::Error> for AppError {
    fn from(e: compoq::Error) -> AppError {
        AppError::Usage(e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match execute(cli) {
        Ok(code) => code,
        Err(AppError::Usage(msg)) => {
            eprintln!("{}", json!({ "error": msg }));
            2
        }
        Err(AppError::Infeasible(msg)) => {
            eprintln!("{}", json!({ "error": format!("infeasible: {msg}") }));
            3
        }
    };
    std::process::exit(code);
}

fn default_order() -> usize {
    std::env::var("COMPOQ_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(200)
}

fn check_feasible(n: u64, what: &str) -> Result<(), AppError> {
    if n > MAX_EXACT {
        Err(AppError::Infeasible(format!("{what} = {n} exceeds the limit {MAX_EXACT}")))
    } else {
        Ok(())
    }
}

fn emit(cli_output: &Option<PathBuf>, text: &str) -> Result<(), AppError> {
    match cli_output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| AppError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.write_all(b"\n"))
                .map_err(|e| AppError::Usage(format!("cannot write to stdout: {e}")))
        }
    }
}

fn execute(cli: Cli) -> Result<i32, AppError> {
    if let Some(dir) = &cli.seed_corpus {
        if cli.command.is_some() {
            return Err(AppError::Usage(
                "--seed-corpus runs on its own, without a subcommand".into(),
            ));
        }
        return seed_corpus(dir);
    }
    let Some(command) = cli.command else {
        return Err(AppError::Usage("a subcommand is required (see --help)".into()));
    };
    let order = cli.order.unwrap_or_else(default_order);
    check_feasible(order as u64, "order")?;

    match command {
        Command::Series { name, k, sparse } => {
            let series = resolve_series(&name, k, order)?;
            let text = series_json(&name, &series, sparse).to_string();
            emit(&cli.output, &text)?;
            Ok(0)
        }
        Command::Verify { id, k, alpha, beta, max_n, brute_max_n, oracle } => {
            if let Some(n) = max_n {
                check_feasible(n, "max-n")?;
            }
            let cfg = VerifyConfig {
                n_max: max_n,
                brute_n_max: brute_max_n,
                oracle: match oracle {
                    OracleArg::Brute => OracleMode::Brute,
                    OracleArg::Dp => OracleMode::Dp,
                    OracleArg::Both => OracleMode::Both,
                },
            };
            let reports = run_verify(&id, k, alpha, beta, &cfg)?;
            let pass = reports.iter().all(|r| r.pass);
            let value = if reports.len() == 1 {
                report_json(&reports[0])
            } else {
                json!({ "pass": pass, "reports": reports.iter().map(report_json).collect::<Vec<_>>() })
            };
            emit(&cli.output, &value.to_string())?;
            Ok(if pass { 0 } else { 1 })
        }
        Command::Table { function, max_n, k, colors } => {
            check_feasible(max_n, "max-n")?;
            let values = table_values(&function, max_n, k, colors)?;
            let text = match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => {
                    let mut out = String::from("n,value\n");
                    for (n, v) in values.iter().enumerate() {
                        out.push_str(&format!("{n},{v}\n"));
                    }
                    out.pop();
                    out
                }
                Format::Json => json!({
                    "function": function,
                    "max_n": max_n,
                    "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                })
                .to_string(),
            };
            emit(&cli.output, &text)?;
            Ok(0)
        }
        Command::Compositions { set, n, weight } => {
            check_feasible(n, "n")?;
            let set = parse_set(&set, n.max(1))?;
            match weight {
                Some(kind) => {
                    let rule = parse_weight(&kind, n)?;
                    let dp = compositions::weighted_sum_dp(&set, &rule, n)?;
                    let value = json!({
                        "set": set.name(),
                        "members": set.members_up_to(n),
                        "n": n,
                        "weight": kind,
                        "weighted_sum": dp[n as usize].to_string(),
                    });
                    emit(&cli.output, &value.to_string())?;
                }
                None => {
                    let mut listed: Vec<Vec<u64>> = Vec::new();
                    for c in compositions::compositions(&set, n)? {
                        if listed.len() >= MAX_ENUMERATED {
                            return Err(AppError::Infeasible(format!(
                                "more than {MAX_ENUMERATED} compositions; use --weight for sums"
                            )));
                        }
                        listed.push(c.parts().to_vec());
                    }
                    let value = json!({
                        "set": set.name(),
                        "members": set.members_up_to(n),
                        "n": n,
                        "count": listed.len(),
                        "compositions": listed,
                    });
                    emit(&cli.output, &value.to_string())?;
                }
            }
            Ok(0)
        }
        Command::Mu { max_n } => {
            check_feasible(max_n, "max-n")?;
            let set = partsets::naturals_ge2(max_n.max(2))?;
            let d = dirichlet::comp_zeta_coeffs(&set, -1, max_n.max(1))?;
            let mut out = String::from("n,mu_compositions,mu_trial,ok\n");
            let mut all_ok = true;
            for n in 1..=max_n {
                let via_comp = d.d(n);
                let via_trial = BigInt::from(dirichlet::mobius_trial(n));
                let ok = *via_comp == via_trial;
                all_ok &= ok;
                out.push_str(&format!(
                    "{n},{via_comp},{via_trial},{}\n",
                    if ok { "ok" } else { "MISMATCH" }
                ));
            }
            out.pop();
            emit(&cli.output, &out)?;
            Ok(if all_ok { 0 } else { 1 })
        }
        Command::Zeta { set, z, s, bound, kind } => {
            check_feasible(bound, "bound")?;
            let set = parse_set(&set, bound)?;
            let eval = match kind {
                ZetaKind::Comp => dirichlet::comp_zeta_value(&set, z, s, bound)?,
                ZetaKind::Partition => dirichlet::partition_zeta_value(&set, s, bound)?,
            };
            let value = json!({
                "set": set.name(),
                "z": z,
                "s": s,
                "bound": bound,
                "closed_form": eval.closed_form,
                "partial_sum": eval.partial_sum,
                "difference": eval.difference,
                "tail_bound": eval.tail_bound,
                "within_bound": eval.difference <= eval.tail_bound,
            });
            emit(&cli.output, &value.to_string())?;
            Ok(0)
        }
        Command::Asymptotic { id, n, k } => {
            let id = parse_asymptotic_id(&id, k)?;
            for &v in &n {
                check_feasible(v, "n")?;
            }
            let rows = asymptotics::ratio_report(&id, &n)?;
            let mut out = String::from("n,exact,asymptotic,ratio\n");
            for row in rows {
                out.push_str(&format!("{},{},{},{:.6}\n", row.n, row.exact, row.asymptotic, row.ratio));
            }
            out.pop();
            emit(&cli.output, &out)?;
            Ok(0)
        }
    }
}

fn resolve_series(name: &str, k: Option<u64>, order: usize) -> Result<TruncatedSeries, AppError> {
    let need_k = || k.ok_or_else(|| AppError::Usage(format!("series `{name}` needs --k")));
    let series = match name {
        "psi" => qgen::theta_sum(&ThetaSpec::psi(), order),
        "phi" => qgen::theta_sum(&ThetaSpec::phi(), order),
        "euler" => qgen::theta_sum(&ThetaSpec::euler(), order),
        "partition" => qgen::named_gf(GfName::Partition, order)?,
        "p-sk" => qgen::named_gf(GfName::PSk(need_k()?), order)?,
        "pod" => qgen::named_gf(GfName::Pod, order)?,
        "overpartition" => qgen::named_gf(GfName::Overpartition, order)?,
        "p3" => qgen::named_gf(GfName::P3, order)?,
        "r" => qgen::named_gf(GfName::R, order)?,
        "s" => qgen::named_gf(GfName::S, order)?,
        // the Rogers-Ramanujan product itself; its reciprocal is rr-gf
        "rr" => product_expand(
            &ProductSpec::new()
                .factor(PochhammerFactor::new(1, 1, 5), 1)
                .factor(PochhammerFactor::new(1, 4, 5), 1),
            order,
        )?,
        "rr-gf" => qgen::named_gf(GfName::Rr, order)?,
        "rr-theta" => qgen::rr_theta_factor(order),
        "jacobi-cube" => qgen::jacobi_cube(order),
        "pentagonal-weighted" => qgen::pentagonal_weighted_series(order),
        "u-weighted" => qgen::u_weighted_series(order),
        _ => return Err(AppError::Usage(format!("unknown series name `{name}`"))),
    };
    Ok(series)
}

fn series_json(name: &str, series: &TruncatedSeries, sparse: bool) -> Value {
    if sparse {
        let terms: Vec<Value> = series
            .support()
            .into_iter()
            .map(|e| json!({ "exp": e, "coeff": series.coeff(e).to_string() }))
            .collect();
        json!({ "name": name, "order": series.order(), "terms": terms })
    } else {
        let coeffs: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
        json!({ "name": name, "order": series.order(), "coeffs": coeffs })
    }
}

fn run_verify(
    id: &str,
    k: Option<u64>,
    alpha: Option<u64>,
    beta: Option<u64>,
    cfg: &VerifyConfig,
) -> Result<Vec<IdentityReport>, AppError> {
    let need = |opt: Option<u64>, flag: &str| {
        opt.ok_or_else(|| AppError::Usage(format!("verify {id} needs --{flag}")))
    };
    let reports = match id {
        "all" => verify::verify_all(cfg)?,
        "even-k" => vec![verify::verify_even_k(need(k, "k")?, cfg)?],
        "odd-k" => vec![verify::verify_odd_k(need(k, "k")?, cfg)?],
        "pod" => vec![verify::verify_pod(cfg)?],
        "overpartition" => vec![verify::verify_overpartition(cfg)?],
        "pofn2" => vec![verify::verify_pofn2(cfg)?],
        "general-ab" => {
            vec![verify::verify_general_ab(need(alpha, "alpha")?, need(beta, "beta")?, cfg)?]
        }
        "p3" => vec![verify::verify_p3(cfg)?],
        "r" => vec![verify::verify_r(cfg)?],
        "s" => vec![verify::verify_s(cfg)?],
        "rr" => vec![verify::verify_rr(cfg)?],
        _ => return Err(AppError::Usage(format!("unknown identity `{id}`"))),
    };
    Ok(reports)
}

fn report_json(report: &IdentityReport) -> Value {
    let params: serde_json::Map<String, Value> = report
        .params
        .iter()
        .map(|(name, v)| (name.clone(), json!(v)))
        .collect();
    let cells: Vec<Value> = report
        .cells
        .iter()
        .map(|cell| {
            let values: serde_json::Map<String, Value> = cell
                .values
                .iter()
                .map(|(path, v)| (path.clone(), json!(v.to_string())))
                .collect();
            json!({ "n": cell.n, "pass": cell.pass, "values": values })
        })
        .collect();
    json!({
        "id": report.id,
        "params": params,
        "n_max": report.n_max,
        "pass": report.pass,
        "cells": cells,
    })
}

fn table_values(
    function: &str,
    max_n: u64,
    k: Option<u64>,
    colors: u32,
) -> Result<Vec<BigInt>, AppError> {
    let values = match function {
        "p" | "partition" => partitions::partition_table(max_n),
        "p-sk" => {
            let k = k.ok_or_else(|| AppError::Usage("table p-sk needs --k".into()))?;
            let set = partsets::residue_set_sk(k, max_n.max(1))?;
            partitions::count_ps_table(&set, max_n)?
        }
        "pod" => partitions::count_pod_table(max_n),
        "overpartition" => partitions::overpartition_table(max_n),
        "p3" => partitions::colored_table(max_n, 3),
        "colored" => partitions::colored_table(max_n, colors),
        "rr" => partitions::rr_table(max_n),
        "r" => qgen::named_gf(GfName::R, max_n as usize)?.coeffs().to_vec(),
        "s" => qgen::named_gf(GfName::S, max_n as usize)?.coeffs().to_vec(),
        _ => return Err(AppError::Usage(format!("unknown table function `{function}`"))),
    };
    Ok(values)
}

fn parse_set(name: &str, bound: u64) -> Result<PartSet, AppError> {
    let set = match name {
        "naturals" | "n" => partsets::naturals(bound)?,
        "n-star" | "nstar" => partsets::naturals_ge2(bound)?,
        "phat" => partsets::pentagonal_hat_set(bound)?,
        "hex2" => partsets::second_hexagonal_set(bound)?,
        "u" => partsets::u_set(bound)?,
        "primes" => partsets::primes_set(bound)?,
        "rr-residues" => partsets::rr_residue_set(bound)?,
        _ => {
            if let Some(rest) = name.strip_prefix("pstar") {
                let k = parse_u64(rest, name)?;
                partsets::polygonal_star_set(k, bound)?
            } else if let Some(rest) = name.strip_prefix("mult:") {
                partsets::multiples_set(parse_u64(rest, name)?, bound)?
            } else if let Some(rest) = name.strip_prefix("explicit:") {
                let values: Vec<u64> = rest
                    .split(',')
                    .filter(|part| !part.is_empty())
                    .map(|part| parse_u64(part, name))
                    .collect::<Result<_, _>>()?;
                partsets::explicit_set("explicit", &values, bound)?
            } else if let Some(rest) = name.strip_prefix("r:") {
                let (a, b) = parse_pair(rest, name)?;
                partsets::general_r_set(a, b, bound)?
            } else if let Some(rest) = name.strip_prefix("t:") {
                let (a, b) = parse_pair(rest, name)?;
                partsets::general_t_set(a, b, bound)?
            } else if let Some(rest) = name.strip_prefix('p') {
                partsets::polygonal_set(parse_u64(rest, name)?, bound)?
            } else if let Some(rest) = name.strip_prefix('s') {
                partsets::residue_set_sk(parse_u64(rest, name)?, bound)?
            } else {
                return Err(AppError::Usage(format!("unknown set name `{name}`")));
            }
        }
    };
    Ok(set)
}

fn parse_u64(text: &str, context: &str) -> Result<u64, AppError> {
    text.parse()
        .map_err(|_| AppError::Usage(format!("cannot parse `{text}` in `{context}`")))
}

fn parse_pair(text: &str, context: &str) -> Result<(u64, u64), AppError> {
    let (a, b) = text
        .split_once(':')
        .ok_or_else(|| AppError::Usage(format!("expected `a:b` in `{context}`")))?;
    Ok((parse_u64(a, context)?, parse_u64(b, context)?))
}

fn parse_weight(kind: &str, bound: u64) -> Result<WeightRule, AppError> {
    let stat = match kind {
        "ell" => StatKind::Length,
        "ell-hat" => StatKind::HatLength,
        "p3" => StatKind::P3,
        "r" => StatKind::R,
        "s" => StatKind::S,
        _ => {
            if let Some(rest) = kind.strip_prefix("ell-z:") {
                let z: i64 = rest
                    .parse()
                    .map_err(|_| AppError::Usage(format!("cannot parse weight `{kind}`")))?;
                StatKind::Scaled(z)
            } else if let Some(rest) = kind.strip_prefix("ell-star:") {
                StatKind::StarLength(parse_u64(rest, kind)?)
            } else {
                return Err(AppError::Usage(format!("unknown weight kind `{kind}`")));
            }
        }
    };
    Ok(compositions::stat_weight(stat, bound)?)
}

fn parse_asymptotic_id(id: &str, k: Option<u64>) -> Result<AsymptoticId, AppError> {
    match id {
        "p-sk" => {
            let k = k.ok_or_else(|| AppError::Usage("asymptotic p-sk needs --k".into()))?;
            Ok(AsymptoticId::PSk(k))
        }
        "p3" => Ok(AsymptoticId::P3),
        "r" => Ok(AsymptoticId::R),
        "s" => Ok(AsymptoticId::S),
        "rr" => Ok(AsymptoticId::Rr),
        _ => Err(AppError::Usage(format!("unknown asymptotic id `{id}`"))),
    }
}

/// Write the golden fixture files used as regression anchors.
fn seed_corpus(dir: &PathBuf) -> Result<i32, AppError> {
    std::fs::create_dir_all(dir)
        .map_err(|e| AppError::Usage(format!("cannot create {}: {e}", dir.display())))?;
    let write = |file: &str, text: &str| -> Result<(), AppError> {
        std::fs::write(dir.join(file), text)
            .map_err(|e| AppError::Usage(format!("cannot write {file}: {e}")))
    };

    let rr = resolve_series("rr", None, 30)?;
    write("series_rr_product_30.json", &series_json("rr", &rr, false).to_string())?;
    let partition = resolve_series("partition", None, 50)?;
    write("series_partition_50.json", &series_json("partition", &partition, false).to_string())?;
    let psi = resolve_series("psi", None, 50)?;
    write("series_psi_50.json", &series_json("psi", &psi, true).to_string())?;

    let cfg = VerifyConfig::default();
    let reports = verify::verify_all(&cfg)?;
    let pass = reports.iter().all(|r| r.pass);
    let value = json!({
        "pass": pass,
        "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
    });
    write("verify_all.json", &value.to_string())?;

    let pod = table_values("pod", 60, None, 3)?;
    let mut csv = String::from("n,value\n");
    for (n, v) in pod.iter().enumerate() {
        csv.push_str(&format!("{n},{v}\n"));
    }
    write("table_pod_60.csv", &csv)?;

    Ok(if pass { 0 } else { 1 })
}
