//! Reduction of the family `p_m(u)` into F_p[u]/(u^p - u) and detection of
//! periodicity in `m`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{fpu_reduce, is_prime, FpuElement};
use crate::periodic::PeriodicFunction;
use crate::psi::PsiTable;
use crate::special::{family_pm_sequence, FamilyPolynomial};

/// Outcome of one scan. A missing period is a result, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub prime: u64,
    pub chi_name: String,
    /// Reductions of `p_1, p_2, ...` (index 0 holds `p_1`).
    pub terms: Vec<FpuElement>,
    /// Minimal period from the second term on, if one validates.
    pub period_detected: Option<usize>,
    pub preperiod: usize,
    pub periods_checked: usize,
    /// Whether `p - 1` itself is a period from the second term on.
    pub p_minus_one_is_period: bool,
}

impl CongruenceReport {
    /// Terms in display form, e.g. `3u, 4u, 3u^3, u`.
    pub fn display_terms(&self) -> Vec<String> {
        self.terms.iter().map(ToString::to_string).collect()
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    prime: u64,
    chi: &'a str,
    terms: Vec<String>,
    period_detected: Option<usize>,
    preperiod: usize,
    periods_checked: usize,
    p_minus_one_is_period: bool,
}

impl Serialize for CongruenceReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ReportJson {
            prime: self.prime,
            chi: &self.chi_name,
            terms: self.display_terms(),
            period_detected: self.period_detected,
            preperiod: self.preperiod,
            periods_checked: self.periods_checked,
            p_minus_one_is_period: self.p_minus_one_is_period,
        }
        .serialize(serializer)
    }
}

/// Short name for the built-in characters, the table form otherwise.
pub fn chi_name(chi: &PeriodicFunction) -> String {
    if *chi == PeriodicFunction::chi3() {
        "chi3".into()
    } else if *chi == PeriodicFunction::chi4() {
        "chi4".into()
    } else if *chi == PeriodicFunction::one() {
        "one".into()
    } else {
        chi.to_string()
    }
}

/// Number of family terms a scan over `periods` periods needs.
pub fn terms_needed(p: u64, periods: usize) -> usize {
    1 + (periods + 1) * (p as usize - 1)
}

/// Smallest `T >= 1` with `terms[i] == terms[i + T]` for every valid
/// `i >= preperiod`, searching `T <= (len - preperiod) / 2`.
pub fn period_detect(terms: &[FpuElement], preperiod: usize) -> Option<usize> {
    let window = terms.len().checked_sub(preperiod)?;
    (1..=window / 2).find(|&t| has_period(terms, preperiod, t))
}

fn has_period(terms: &[FpuElement], preperiod: usize, t: usize) -> bool {
    (preperiod..terms.len().saturating_sub(t)).all(|i| terms[i] == terms[i + t])
}

fn check_prime(p: u64) -> Result<()> {
    if p <= 3 || !is_prime(p) {
        return Err(Error::Domain(format!("p = {p} must be a prime greater than 3")));
    }
    Ok(())
}

/// Scan using precomputed family polynomials (`family[k]` is `p_{k+1}`), so
/// several primes can share one family.
pub fn congruence_scan_with_family(
    name: &str,
    p: u64,
    periods: usize,
    family: &[FamilyPolynomial],
) -> Result<CongruenceReport> {
    check_prime(p)?;
    if periods == 0 {
        return Err(Error::Domain("periods must be positive".into()));
    }
    let count = terms_needed(p, periods);
    if family.len() < count {
        return Err(Error::DegreeOverflow { degree: count, max_degree: family.len() });
    }
    let terms = family[..count].iter().map(|f| fpu_reduce(&f.value, p)).collect::<Result<Vec<_>>>()?;
    let preperiod = 1;
    Ok(CongruenceReport {
        prime: p,
        chi_name: name.to_string(),
        period_detected: period_detect(&terms, preperiod),
        p_minus_one_is_period: has_period(&terms, preperiod, p as usize - 1),
        terms,
        preperiod,
        periods_checked: periods,
    })
}

/// Reduce `p_1 .. p_{1 + (periods + 1)(p - 1)}` for `X (X + u)` modulo `p`.
pub fn congruence_scan(chi: &PeriodicFunction, p: u64, periods: usize, table: &PsiTable) -> Result<CongruenceReport> {
    if table.chi() != chi {
        return Err(Error::Domain("table was built for a different chi".into()));
    }
    check_prime(p)?;
    let family = family_pm_sequence(table, terms_needed(p, periods) as u32)?;
    congruence_scan_with_family(&chi_name(chi), p, periods, &family)
}
