use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use rigidlab_core::chartab::character_table;
use rigidlab_core::intrep::sigma_coinvariants;
use rigidlab_core::registry::{coefficient_modules, h1_solvers};
use rigidlab_core::report::{run_report, Format, ReportConfig, MAX_REPORT_RANK};
use rigidlab_core::semidirect::{build_group, gamma_presentation, little_groups_irreps_capped, verify_torsion_claim, Case};
use rigidlab_core::semidirect::MAX_LITTLE_GROUPS_ORDER;

#[derive(Parser)]
#[command(name = "rigidlab", version, about = "Exact checks for rigid local systems on Γ_r = Λ_r ⋊ S_{r+1}")]
struct Cli {
    /// Also write the output to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check and print a rigidity report.
    Report {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "quasi")]
        case: Case,
        /// Modulus of the torsion check (default r + 1).
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        allow_odd: bool,
        /// Largest finite quotient enumerated by the little-groups method.
        #[arg(long, default_value_t = MAX_LITTLE_GROUPS_ORDER)]
        max_order: u64,
        /// Random pairs per cocycle in the cocycle-condition check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Character table of S_n.
    Chartable { n: usize },
    /// Irreducible representations of (Z/m)^k ⋊ S_{r+1}.
    Irreps {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "quasi")]
        case: Case,
        /// Default r + 1.
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long, default_value_t = MAX_LITTLE_GROUPS_ORDER)]
        max_order: u64,
    },
    /// First cohomology of Γ_r with coefficients pulled back from S_{r+1}.
    H1 {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "quasi")]
        case: Case,
        #[arg(long, default_value = "end0")]
        module: String,
        /// A registered method name, or "both".
        #[arg(long, default_value = "both")]
        method: String,
    },
    /// Elementary divisors of ρ_r(σ) - 1.
    Coinvariants {
        #[arg(long)]
        rank: usize,
    },
    /// Orbit analysis of the dual characters of (Z/m)^k.
    Torsion {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        modulus: u64,
        #[arg(long, default_value = "quasi")]
        case: Case,
    },
}

/// Rendered output and the first failed check, if any.
struct Outcome {
    text: String,
    failure: Option<String>,
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Report {
            rank,
            case,
            modulus,
            format,
            seed,
            allow_odd,
            max_order,
            samples,
        } => {
            let config = ReportConfig {
                rank,
                case,
                modulus,
                format,
                seed,
                allow_odd,
                max_little_groups_order: max_order,
                cocycle_samples: samples,
            };
            let report = run_report(&config)?;
            let failure = report
                .first_failure()
                .map(|c| format!("claim {} ({}): {}", c.id, c.value, c.statement));
            Ok(Outcome {
                text: report.render(config.format),
                failure,
            })
        }
        Command::Chartable { n } => {
            let table = character_table(n)?;
            let failure = table.check_orthogonality().err().map(|e| format!("orthogonality: {e}"));
            let mut v = table.to_json();
            v["schema"] = json!(1);
            Ok(Outcome {
                text: pretty(&v),
                failure,
            })
        }
        Command::Irreps {
            rank,
            case,
            modulus,
            max_order,
        } => {
            let m = modulus.unwrap_or(rank as u64 + 1);
            let group = build_group(rank, case, m)?;
            let irreps = little_groups_irreps_capped(&group, max_order)?;
            let order = group.order().context("modulus must be at least 1")?;
            let rank_r = irreps.iter().filter(|d| d.degree == rank as u64).count();
            let v = json!({
                "schema": 1,
                "rank": rank.to_string(),
                "case": case.name(),
                "modulus": m.to_string(),
                "order": order.to_string(),
                "irreps": irreps.len().to_string(),
                "rank_r_irreps": rank_r.to_string(),
                "sum_of_squares": irreps.iter().map(|d| u128::from(d.degree).pow(2)).sum::<u128>().to_string(),
                "descriptors": irreps.iter().map(|d| d.to_json()).collect::<Vec<_>>(),
            });
            Ok(Outcome {
                text: pretty(&v),
                failure: None,
            })
        }
        Command::H1 {
            rank,
            case,
            module,
            method,
        } => {
            if rank > MAX_REPORT_RANK {
                bail!("rank {rank} exceeds the limit {MAX_REPORT_RANK}");
            }
            let p = gamma_presentation(rank, case)?;
            let m = coefficient_modules().get(&module)?.build(&p)?;
            let solvers = h1_solvers();
            let names = if method == "both" { solvers.names() } else { vec![solvers.get(&method)?.name()] };
            let mut results = Vec::new();
            for name in &names {
                results.push(solvers.get(name)?.solve(&p, &m)?);
            }
            let dims: Vec<usize> = results.iter().map(|r| r.dimension).collect();
            let agree = dims.windows(2).all(|w| w[0] == w[1]);
            let v = json!({
                "schema": 1,
                "rank": rank.to_string(),
                "case": case.name(),
                "module": module,
                "dim": if agree { Value::String(dims[0].to_string()) } else { Value::Null },
                "agree": agree,
                "results": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            });
            Ok(Outcome {
                text: pretty(&v),
                failure: (!agree).then(|| format!("H1 methods disagree: {}", strings(&dims).join(" vs "))),
            })
        }
        Command::Coinvariants { rank } => {
            let c = sigma_coinvariants(rank)?;
            let divisors = c.elementary_divisors();
            let non_units: Vec<String> = divisors.iter().filter(|d| **d != 1.into()).map(ToString::to_string).collect();
            let ok = non_units == [(rank + 1).to_string()];
            let v = json!({
                "schema": 1,
                "rank": rank.to_string(),
                "divisors": strings(divisors),
                "quotient_order": c.quotient_order().to_string(),
                "determinant": c.determinant.to_string(),
            });
            Ok(Outcome {
                text: pretty(&v),
                failure: (!ok).then(|| format!("coinvariants: expected a single divisor {}", rank + 1)),
            })
        }
        Command::Torsion { rank, modulus, case } => {
            let t = verify_torsion_claim(rank, case, modulus)?;
            let v = json!({
                "schema": 1,
                "rank": rank.to_string(),
                "case": case.name(),
                "modulus": modulus.to_string(),
                "pass": t.pass,
                "order_bound": t.order_bound.to_string(),
                "orbit_sizes": strings(&t.orbit_sizes),
                "sigma_fixed": t.sigma_fixed.iter().map(|(c, orbit)| json!({
                    "character": strings(&c.exponents),
                    "order": c.order().to_string(),
                    "orbit_size": orbit.to_string(),
                })).collect::<Vec<_>>(),
                "small_orbit_violations": t.small_orbit_violations.iter().map(|c| strings(&c.exponents)).collect::<Vec<_>>(),
                "order_violations": t.order_violations.iter().map(|c| strings(&c.exponents)).collect::<Vec<_>>(),
            });
            Ok(Outcome {
                text: pretty(&v),
                failure: (!t.pass).then(|| "torsion claim".to_string()),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    print!("{}", outcome.text);
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, &outcome.text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    match outcome.failure {
        None => ExitCode::SUCCESS,
        Some(claim) => {
            eprintln!("FAILED: {claim}");
            ExitCode::from(1)
        }
    }
}
