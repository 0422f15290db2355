//! The linear form Psi_chi on polynomials, defined through the generating
//! identity
//!
//! ```text
//! t * sum_{n=1}^{N} chi(n) e^{nt} / (1 - e^{Nt}) = - sum_m Psi_chi(X^m) t^m / m!
//! ```
//!
//! Its moments Psi_chi(X^m) play the role of Bernoulli numbers for chi.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{exp_series, rat, series_divide, PolyRing, QPoly, QuPoly, Rational, Ring, TruncatedSeries, Q};
use crate::periodic::PeriodicFunction;

/// Moments Psi_chi(X^m) for m = 0..=max_degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiTable {
    chi: PeriodicFunction,
    moments: Vec<Rational>,
}

/// Expands the generating identity to order `max_degree`.
pub fn psi_table(chi: &PeriodicFunction, max_degree: usize) -> PsiTable {
    let order = max_degree + 1;
    let n_period = chi.period();

    let mut sum = TruncatedSeries::zero(order);
    for (i, c) in chi.values().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = exp_series(&rat(i as i64 + 1, 1), order);
        sum = sum.add(&e.scale(c));
    }
    let numerator = TruncatedSeries::t(order).mul(&sum);
    let one = TruncatedSeries::new(order, vec![rat(1, 1)]);
    let denominator = one.sub(&exp_series(&rat(n_period as i64, 1), order));

    // valuation(den) = 1 <= valuation(num), so the quotient has order max_degree
    let q = series_divide(&numerator, &denominator).expect("denominator has valuation 1");

    let mut factorial = BigInt::from(1);
    let moments = (0..=max_degree)
        .map(|m| {
            if m > 0 {
                factorial *= m;
            }
            -(q.coeff(m) * Rational::from_integer(factorial.clone()))
        })
        .collect();
    PsiTable { chi: chi.clone(), moments }
}

impl PsiTable {
    pub fn chi(&self) -> &PeriodicFunction {
        &self.chi
    }

    pub fn max_degree(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn moments(&self) -> &[Rational] {
        &self.moments
    }

    /// Psi_chi(X^m).
    pub fn moment(&self, m: usize) -> Result<&Rational> {
        self.moments.get(m).ok_or(Error::DegreeOverflow { degree: m, max_degree: self.max_degree() })
    }

    fn check_degree(&self, degree: Option<usize>) -> Result<()> {
        match degree {
            Some(d) if d > self.max_degree() => Err(Error::DegreeOverflow { degree: d, max_degree: self.max_degree() }),
            _ => Ok(()),
        }
    }

    /// Psi_chi(q) by linearity.
    pub fn apply(&self, q: &QPoly) -> Result<Rational> {
        self.check_degree(q.degree())?;
        Ok(q.coeffs()
            .iter()
            .zip(&self.moments)
            .filter(|(c, _)| !c.is_zero())
            .fold(Rational::zero(), |acc, (c, m)| acc + c * m))
    }

    /// Psi_chi applied in X to a polynomial with coefficients in Q[u].
    pub fn apply_qu(&self, q: &QuPoly) -> Result<QPoly> {
        self.check_degree(q.degree())?;
        let qu = PolyRing::new(Q);
        Ok(q.coeffs().iter().zip(&self.moments).fold(qu.zero(), |acc, (c, m)| acc.add(&c.scale(m, &Q), &Q)))
    }

    /// Both sides of `Psi(E(N + X)) - Psi(E) = sum_{n=1}^{N} chi(n) E'(n)`.
    pub fn shift_identity_sides(&self, e: &QPoly) -> Result<(Rational, Rational)> {
        let n_period = Q.integer(self.chi.period() as i64);
        let lhs = self.apply(&e.shift(&n_period, &Q))? - self.apply(e)?;
        let de = e.derivative(&Q);
        let rhs = (1..=self.chi.period() as u64)
            .map(|n| self.chi.at(n) * de.eval(&Q.integer(n as i64), &Q))
            .fold(Rational::zero(), |acc, x| acc + x);
        Ok((lhs, rhs))
    }
}

/// Psi_chi(q); `q` must fit in the table.
pub fn psi_apply(table: &PsiTable, q: &QPoly) -> Result<Rational> {
    table.apply(q)
}

/// Exact check of the one-period shift identity.
pub fn check_shift_identity(table: &PsiTable, e: &QPoly) -> Result<bool> {
    let (lhs, rhs) = table.shift_identity_sides(e)?;
    Ok(lhs == rhs)
}
