//! Argument parsing and subcommand dispatch for the `lchi` binary.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lchi::congruence::{chi_name, congruence_scan, terms_needed};
use lchi::exact::QPoly;
use lchi::numeric::{continuation_eval, ComplexVal, ContinuationPlan, DEFAULT_MAX_TERMS, DEFAULT_TAIL_EPSILON};
use lchi::output::{render, Format, OutputRecord};
use lchi::special::{family_pm_sequence, l_negative, LValueRequest};
use lchi::{psi_table, Error, ErrorClass, PeriodicFunction, Result};

#[derive(Parser, Debug)]
#[command(name = "lchi", version, about = "Special values and continuation of L-series with periodic coefficients")]
pub struct Cli {
    /// Output format: text, json or csv.
    #[arg(long, global = true, default_value = "text")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct ChiArg {
    /// `chi3`, `chi4`, `one`, or `period=N;values=v1,...,vN`.
    #[arg(long)]
    pub chi: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Psi_chi(X^m) for m = 0..=max-degree.
    Psi {
        #[command(flatten)]
        chi: ChiArg,
        #[arg(long)]
        max_degree: usize,
    },
    /// Exact L_{A,chi,P}(1 - m).
    Lneg {
        #[command(flatten)]
        chi: ChiArg,
        /// Coefficients, lowest degree first, e.g. `0,1,1` for X(X+1).
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, conflicts_with = "m_range")]
        m: Option<u32>,
        /// Inclusive range `a..b`.
        #[arg(long)]
        m_range: Option<String>,
        #[arg(long = "A", default_value_t = 1)]
        offset: u64,
    },
    /// The family p_m(u) = Psi_chi((X(X+u))^m) / m.
    Family {
        #[command(flatten)]
        chi: ChiArg,
        #[arg(long)]
        m_max: u32,
    },
    /// Numeric L_{chi,P}(s) anywhere in the plane.
    Eval {
        #[command(flatten)]
        chi: ChiArg,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "roots")]
        poly: Option<String>,
        /// Roots of P as complex numbers, e.g. `i,-i`; bypasses root finding.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "poly")]
        roots: Option<String>,
        /// Leading coefficient when --roots is used.
        #[arg(long, default_value_t = 1.0)]
        lead: f64,
        /// Evaluation point(s), `a+bi`; repeat for several.
        #[arg(long, allow_hyphen_values = true, required = true)]
        s: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_TAIL_EPSILON)]
        eps: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
        max_terms: u64,
    },
    /// Reduce the family modulo p and look for a period.
    Congruence {
        #[command(flatten)]
        chi: ChiArg,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        periods: usize,
    },
}

fn parse_chi(arg: &ChiArg) -> Result<PeriodicFunction> {
    PeriodicFunction::parse(&arg.chi)
}

fn parse_complex(text: &str) -> Result<ComplexVal> {
    ComplexVal::parse(text).ok_or_else(|| Error::Parse(format!("`{text}` is not a complex number")))
}

fn parse_m_range(text: &str) -> Result<(u32, u32)> {
    let bad = || Error::Parse(format!("`{text}` is not a range a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || b < a {
        return Err(Error::Domain(format!("range {text} must satisfy 1 <= a <= b")));
    }
    Ok((a, b))
}

pub fn run(cli: &Cli) -> Result<String> {
    let records = match &cli.command {
        Command::Psi { chi, max_degree } => {
            let chi = parse_chi(chi)?;
            let name = chi_name(&chi);
            let table = psi_table(&chi, *max_degree);
            table.moments().iter().enumerate().map(|(m, v)| OutputRecord::psi_moment(&name, m, v)).collect()
        }
        Command::Lneg { chi, poly, m, m_range, offset } => {
            let chi = parse_chi(chi)?;
            let poly = QPoly::parse_coeffs(poly)?;
            let (lo, hi) = match (m, m_range) {
                (Some(m), _) => (*m, *m),
                (None, Some(r)) => parse_m_range(r)?,
                (None, None) => return Err(Error::Parse("one of --m or --m-range is required".into())),
            };
            if lo == 0 {
                return Err(Error::Domain("m must be a positive integer".into()));
            }
            let degree = poly.degree().unwrap_or(0);
            let table = psi_table(&chi, degree * hi as usize);
            let name = chi_name(&chi);
            (lo..=hi)
                .map(|m| {
                    let req = LValueRequest::new(chi.clone(), poly.clone(), m).with_offset(*offset);
                    l_negative(&req, &table).map(|v| OutputRecord::l_negative(&name, &poly, *offset, m, &v))
                })
                .collect::<Result<Vec<_>>>()?
        }
        Command::Family { chi, m_max } => {
            let chi = parse_chi(chi)?;
            let table = psi_table(&chi, 2 * *m_max as usize);
            let name = chi_name(&chi);
            family_pm_sequence(&table, *m_max)?
                .iter()
                .map(|f| OutputRecord::family_poly(&name, f.m, &f.value))
                .collect()
        }
        Command::Eval { chi, poly, roots, lead, s, eps, max_terms } => {
            let chi = parse_chi(chi)?;
            if eps.is_nan() || *eps <= 0.0 || *max_terms == 0 {
                return Err(Error::Domain("--eps and --max-terms must be positive".into()));
            }
            let plan = match (poly, roots) {
                (Some(p), _) => ContinuationPlan::from_poly(&chi, &QPoly::parse_coeffs(p)?)?,
                (None, Some(r)) => {
                    let roots = r.split(',').map(parse_complex).collect::<Result<Vec<_>>>()?;
                    ContinuationPlan::from_roots(&chi, &roots, *lead)?
                }
                (None, None) => return Err(Error::Parse("one of --poly or --roots is required".into())),
            }
            .with_tolerance(*eps, *max_terms);
            let name = chi_name(&chi);
            s.iter()
                .map(|text| {
                    let s = parse_complex(text)?;
                    let value = continuation_eval(&plan, s)?;
                    Ok(OutputRecord::EvalPoint {
                        chi: name.clone(),
                        s,
                        value,
                        taylor_order: plan.taylor_order_at(s),
                        offset: plan.offset(),
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
        Command::Congruence { chi, p, periods } => {
            let chi = parse_chi(chi)?;
            if *p < 5 {
                return Err(Error::Domain(format!("p = {p} must be a prime greater than 3")));
            }
            let table = psi_table(&chi, 2 * terms_needed(*p, *periods));
            vec![OutputRecord::CongruenceReport(congruence_scan(&chi, *p, *periods, &table)?)]
        }
    };
    Ok(render(&records, cli.format))
}

/// Writes the error record to stderr and maps the error class to an exit code.
pub fn report_failure(e: &Error) -> ExitCode {
    let record = serde_json::to_string(&OutputRecord::error(e)).expect("error record serializes");
    eprintln!("{record}");
    ExitCode::from(match e.class() {
        ErrorClass::Parse => 1,
        ErrorClass::Domain => 2,
        ErrorClass::Budget => 3,
    })
}
