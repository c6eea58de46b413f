use std::fmt::Write as _;
use std::process::ExitCode;

use aurif_core::cyclotomic::phi_moebius;
use aurif_core::factorizer::{
    default_precision, factor_by_polynomials, factor_by_rounding_with, full_factorization,
    FactorList, DEFAULT_TRIAL_LIMIT,
};
use aurif_core::gauss::{algorithm_d, gauss_identity_holds};
use aurif_core::lucas::{algorithm_l, lucas_identity_holds};
use aurif_core::numthy::{class_number_neg, fundamental_unit, is_squarefree};
use aurif_core::series::{gauss_via_series, lucas_via_series};
use aurif_core::{Error, Rational};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(
    name = "aurif",
    version,
    about = "Cyclotomic and Aurifeuillian factorization tools"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the cyclotomic polynomial Φ_n.
    Phi { n: u64 },
    /// Print A_n, B_n with 4Φ_n = A_n² - (±n)·B_n² and check the identity.
    Gauss { n: u64 },
    /// Print C_n, D_n with F_n = C_n² - n·x·D_n² and check the identity.
    Lucas { n: u64 },
    /// Split F_n(m²n) and factor m^{2n}·n^n ± 1.
    Factor {
        n: u64,
        /// Integer point m; use --rational for a fraction.
        #[arg(required_unless_present = "rational", conflicts_with = "rational")]
        m: Option<u64>,
        /// Rational point p/q.
        #[arg(long, value_name = "P/Q")]
        rational: Option<Rational>,
        #[arg(long)]
        json: bool,
        /// Significant bits for the rounding estimate.
        #[arg(long, value_name = "BITS", env = "AURIF_PRECISION_BITS")]
        precision: Option<u64>,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_TRIAL_LIMIT)]
        trial_limit: u64,
    },
    /// Check the Gauss and Aurifeuillian identities for one n or a range.
    Verify {
        #[arg(required_unless_present = "range", conflicts_with = "range")]
        n: Option<u64>,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        range: Option<Vec<u64>>,
        /// Also compare against the power-series construction.
        #[arg(long)]
        oracle: bool,
    },
    /// Class number h(-n) for n ≡ 3 (mod 4), fundamental unit for n ≡ 1 (mod 4).
    Classnum { n: u64 },
}

#[derive(Serialize, Deserialize)]
struct FactorReport {
    target: String,
    aurifeuillian: Split,
    factors: Vec<(String, u32)>,
    complete: bool,
}

#[derive(Serialize, Deserialize)]
#[allow(non_snake_case)]
struct Split {
    F_minus: String,
    F_plus: String,
}

/// Rendered output and whether every check it ran passed.
struct Outcome {
    text: String,
    ok: bool,
}

fn ok_word(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "FAILED"
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Phi { n } => {
            if n == 0 {
                return Err(Error::InvalidArgument("n must be positive".into()));
            }
            Ok(Outcome {
                text: format!("{}\n", phi_moebius(n)),
                ok: true,
            })
        }
        Command::Gauss { n } => {
            let pair = algorithm_d(n)?;
            let ok = gauss_identity_holds(&pair);
            let text = format!(
                "A = {}\nB = {}\nidentity: {}\n",
                pair.a_poly(),
                pair.b_poly(),
                ok_word(ok)
            );
            Ok(Outcome { text, ok })
        }
        Command::Lucas { n } => {
            let pair = algorithm_l(n)?;
            let ok = lucas_identity_holds(&pair)?;
            let text = format!(
                "C = {}\nD = {}\nidentity: {}\n",
                pair.c_poly(),
                pair.d_poly(),
                ok_word(ok)
            );
            Ok(Outcome { text, ok })
        }
        Command::Factor {
            n,
            m,
            rational,
            json,
            precision,
            trial_limit,
        } => factor(n, m, rational, json, precision, trial_limit),
        Command::Verify { n, range, oracle } => {
            let (lo, hi) = match (n, range.as_deref()) {
                (Some(n), _) => (n, n),
                (None, Some([a, b])) => (*a, *b),
                _ => unreachable!("clap enforces one of n or --range"),
            };
            verify(lo, hi, oracle)
        }
        Command::Classnum { n } => classnum(n),
    }
}

fn factor(
    n: u64,
    m: Option<u64>,
    rational: Option<Rational>,
    json: bool,
    precision: Option<u64>,
    trial_limit: u64,
) -> Result<Outcome, Error> {
    let point = match (m, &rational) {
        (Some(m), _) => Rational::from_integer(m.into()),
        (None, Some(r)) => r.clone(),
        (None, None) => unreachable!("clap enforces one of m or --rational"),
    };
    let exact = factor_by_polynomials(n, &point)?;
    let (lo, hi) = exact.integer_factors();
    let list = full_factorization(n, &point, trial_limit)?;
    let mut ok = list.product() == list.target;

    // The rounding estimate only applies to integer m.
    let rounded = match m {
        Some(m) => {
            let bits = match precision {
                Some(bits) => bits,
                None => default_precision(n, m)?,
            };
            let r = factor_by_rounding_with(n, m, bits)?;
            let agree = r.f_minus == exact.f_minus && r.f_plus == exact.f_plus;
            ok &= agree;
            Some((r, agree))
        }
        None if precision.is_some() => {
            return Err(Error::InvalidArgument(
                "--precision needs an integer m".into(),
            ));
        }
        None => None,
    };

    let mut text = String::new();
    if json {
        let report = FactorReport {
            target: list.target.to_string(),
            aurifeuillian: Split {
                F_minus: lo.to_string(),
                F_plus: hi.to_string(),
            },
            factors: list
                .factors
                .iter()
                .map(|(p, e)| (p.to_string(), *e))
                .collect(),
            complete: list.complete,
        };
        text = serde_json::to_string(&report).expect("plain data serializes");
        text.push('\n');
    } else {
        writeln!(text, "target = {}", list.target).unwrap();
        if let Some((r, agree)) = &rounded {
            writeln!(
                text,
                "hat F = {:.10}",
                r.hat_f.as_ref().expect("rounding path")
            )
            .unwrap();
            writeln!(
                text,
                "rounding agrees with polynomials: {}",
                ok_word(*agree)
            )
            .unwrap();
        }
        writeln!(text, "F- = {lo}").unwrap();
        writeln!(text, "F+ = {hi}").unwrap();
        writeln!(text, "factors = {}", render_factors(&list)).unwrap();
        writeln!(
            text,
            "complete: {}",
            if list.complete { "yes" } else { "no" }
        )
        .unwrap();
    }
    Ok(Outcome { text, ok })
}

fn render_factors(list: &FactorList) -> String {
    if list.factors.is_empty() {
        return "1".into();
    }
    list.factors
        .iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

type Checks = Vec<(&'static str, bool)>;

/// Checks for one `n`; `None` when `n` is outside every suite.
fn verify_one(n: u64, oracle: bool) -> Option<Result<Checks, Error>> {
    if n < 2 || !is_squarefree(n) {
        return None;
    }
    let run = || -> Result<Checks, Error> {
        let mut checks = Vec::new();
        if n % 2 == 1 {
            let pair = algorithm_d(n)?;
            checks.push(("gauss", gauss_identity_holds(&pair)));
            if oracle && n > 3 {
                checks.push(("gauss-series", gauss_via_series(n)? == pair));
            }
        }
        let pair = algorithm_l(n)?;
        checks.push(("lucas", lucas_identity_holds(&pair)?));
        if oracle {
            checks.push(("lucas-series", lucas_via_series(n)? == pair));
        }
        Ok(checks)
    };
    Some(run())
}

fn verify(lo: u64, hi: u64, oracle: bool) -> Result<Outcome, Error> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty range {lo}..{hi}")));
    }
    let results: Vec<(u64, Result<Checks, Error>)> = (lo..=hi)
        .into_par_iter()
        .filter_map(|n| verify_one(n, oracle).map(|r| (n, r)))
        .collect();
    if results.is_empty() && lo == hi {
        return Err(Error::NotSquareFree(lo));
    }

    let mut text = String::new();
    let mut ok = true;
    let mut count = 0;
    for (n, result) in results {
        match result {
            Ok(checks) => {
                let line: Vec<String> = checks
                    .iter()
                    .map(|(name, pass)| format!("{name} {}", ok_word(*pass)))
                    .collect();
                ok &= checks.iter().all(|(_, pass)| *pass);
                count += checks.len();
                writeln!(text, "n = {n}: {}", line.join(", ")).unwrap();
            }
            Err(e) => {
                ok = false;
                writeln!(text, "n = {n}: error {e}").unwrap();
            }
        }
    }
    writeln!(
        text,
        "{count} checks, {}",
        if ok { "all passed" } else { "some failed" }
    )
    .unwrap();
    Ok(Outcome { text, ok })
}

fn classnum(n: u64) -> Result<Outcome, Error> {
    let text = match n % 4 {
        3 => {
            let c = class_number_neg(n)?;
            format!("sigma = {}\nh(-{n}) = {}\nw = {}\n", c.sigma, c.h, c.w)
        }
        1 => {
            let e = fundamental_unit(n)?;
            format!(
                "u = {}\nv = {}\nepsilon = ({} + {}*sqrt({n}))/2\n",
                e.u, e.v, e.u, e.v
            )
        }
        _ => {
            return Err(Error::BadResidueClass { n, expected: 3 });
        }
    };
    Ok(Outcome { text, ok: true })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
