//! Hurwitz zeta by Euler-Maclaurin summation, and the continued Dirichlet
//! series `L_chi(s) = N^{-s} sum_{a=1}^{N} chi(a) zeta(s, a/N)`.
//!
//! For `Re s < -1/2` the L-function is obtained from Hurwitz's formula,
//! which trades the huge cancelling sums of the Euler-Maclaurin route for
//! convergent ones at `1 - s`.

use super::bernoulli::even_bernoulli_over_factorial;
use super::complex::{Cdd, ComplexVal};
use super::dd::{Dd, TWO_PI};
use super::gamma::gamma_dd;
use super::rational_to_dd;
use crate::error::{Error, Result};
use crate::periodic::PeriodicFunction;

/// Relative size of the first omitted Euler-Maclaurin term.
const EM_TOLERANCE: f64 = 1e-33;
/// Below this real part L_chi goes through the reflection formula.
const REFLECTION_BELOW: f64 = -0.5;

fn is_one(s: Cdd) -> bool {
    (s - Cdd::ONE).abs_f64() < 1e-14
}

/// Number of explicit terms before switching to the asymptotic tail.
fn em_cutoff(s: Cdd) -> usize {
    (s.abs_f64() + 25.0).ceil() as usize
}

/// `(e^z - 1) / z`, accurate near zero.
fn expm1_over(z: Cdd) -> Cdd {
    if z.abs_f64() > 0.5 {
        return (z.exp() - Cdd::ONE) / z;
    }
    let mut term = Cdd::ONE;
    let mut sum = Cdd::ONE;
    for k in 2..40 {
        term = term * z.scale(Dd::ONE / Dd::from(k as f64));
        sum += term;
        if term.abs_f64() < 1e-34 {
            break;
        }
    }
    sum
}

/// Euler-Maclaurin pieces of `zeta(s, a)` with the pole term left out:
/// `sum_{n<K} (n+a)^{-s} + (K+a)^{-s}/2 + sum_j B_2j/(2j)! (s)_{2j-1} (K+a)^{-s-2j+1}`.
/// Also returns `x = K + a` so the caller can add the pole term.
fn em_regular_part(s: Cdd, a: Dd, cutoff: usize) -> (Cdd, Dd) {
    let mut sum = Cdd::ZERO;
    for n in 0..cutoff {
        sum += Cdd::real_pow(Dd::from(n as f64) + a, -s);
    }
    let x = Dd::from(cutoff as f64) + a;
    let x_pow = Cdd::real_pow(x, -s);
    sum += x_pow.scale(Dd::from(0.5));
    let inv_x = Dd::ONE / x;
    let inv_x2 = inv_x.sqr();
    let coeffs = even_bernoulli_over_factorial();
    // poch = (s)_{2j-1}, pw = x^{-s-2j+1}
    let mut poch = s;
    let mut pw = x_pow.scale(inv_x);
    for (j, &coeff) in coeffs.iter().enumerate().skip(1) {
        if j > 1 {
            let k = (2 * j) as f64;
            poch = poch * (s + Cdd::real(Dd::from(k - 3.0))) * (s + Cdd::real(Dd::from(k - 2.0)));
            pw = pw.scale(inv_x2);
        }
        let term = (poch * pw).scale(coeff);
        sum += term;
        if term.abs_f64() <= EM_TOLERANCE * sum.abs_f64() {
            break;
        }
    }
    (sum, x)
}

/// Hurwitz zeta `zeta(s, a)` for `s != 1`, any real `a > 0`.
pub(crate) fn hurwitz_dd(s: Cdd, a: Dd) -> Result<Cdd> {
    if is_one(s) {
        return Err(Error::Pole("Hurwitz zeta at s = 1".into()));
    }
    let (sum, x) = em_regular_part(s, a, em_cutoff(s));
    let s_minus_1 = s - Cdd::ONE;
    Ok(sum + Cdd::real_pow(x, -s_minus_1) / s_minus_1)
}

/// Hurwitz zeta `zeta(s, a)` with `a` in `(0, 1]`.
pub fn hurwitz_zeta(s: ComplexVal, a: f64) -> Result<ComplexVal> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!("Hurwitz parameter a = {a} outside (0, 1]")));
    }
    hurwitz_dd(Cdd::from(s), Dd::from(a)).map(Into::into)
}

/// A periodic function prepared for repeated numeric evaluation.
#[derive(Clone, Debug)]
pub(crate) struct NumericChi {
    pub values: Vec<Dd>,
    pub zero_sum: bool,
    pub max_abs: f64,
}

impl NumericChi {
    pub fn new(chi: &PeriodicFunction) -> Self {
        let values: Vec<Dd> = chi.values().iter().map(rational_to_dd).collect();
        let max_abs = values.iter().map(|v| v.abs().to_f64()).fold(0.0, f64::max);
        NumericChi { values, zero_sum: chi.is_zero_sum(), max_abs }
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    /// chi(n), n >= 1.
    pub fn at(&self, n: u64) -> Dd {
        self.values[((n - 1) % self.values.len() as u64) as usize]
    }

    /// Continued `L_chi(s)`.
    pub fn l_value(&self, s: Cdd) -> Result<Cdd> {
        if s.re.hi < REFLECTION_BELOW {
            return Ok(self.l_reflected(Cdd::ONE - s));
        }
        if is_one(s) && !self.zero_sum {
            return Err(Error::Pole("L_chi at s = 1 (chi has nonzero sum over a period)".into()));
        }
        let n = self.period();
        let n_dd = Dd::from(n as f64);
        let cutoff = em_cutoff(s);
        let s_minus_1 = s - Cdd::ONE;
        let mut total = Cdd::ZERO;
        for (i, &c) in self.values.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let a = Dd::from((i + 1) as f64) / n_dd;
            let (regular, x) = em_regular_part(s, a, cutoff);
            // x^{1-s}/(s-1); for zero-sum chi the 1/(s-1) parts cancel across a,
            // leaving -ln(x) (e^{-(s-1) ln x} - 1) / (-(s-1) ln x)
            let pole = if self.zero_sum {
                let lx = x.ln();
                -expm1_over(-s_minus_1.scale(lx)).scale(lx)
            } else {
                Cdd::real_pow(x, -s_minus_1) / s_minus_1
            };
            total += (regular + pole).scale(c);
        }
        Ok(total * Cdd::real_pow(n_dd, -s))
    }

    /// `L_chi(1 - z)` for `Re z > 1` by Hurwitz's formula:
    /// `Gamma(z) / (N (2 pi)^z) sum_b zeta(z, b/N) [e^{-i pi z/2} X+(b) + e^{i pi z/2} X-(b)]`
    /// with `X±(b) = sum_a chi(a) e^{±2 pi i a b / N}`.
    fn l_reflected(&self, z: Cdd) -> Cdd {
        let n = self.period();
        let n_dd = Dd::from(n as f64);
        let rot_minus = Cdd::exp_i_half_pi(-z);
        let rot_plus = Cdd::exp_i_half_pi(z);
        let mut total = Cdd::ZERO;
        for b in 1..=n {
            let mut plus = Cdd::ZERO;
            for (i, &c) in self.values.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let k = ((i + 1) * b) % n;
                let angle = TWO_PI * Dd::from(k as f64) / n_dd;
                let (sin, cos) = angle.sin_cos();
                plus += Cdd::new(cos, sin).scale(c);
            }
            let minus = plus.conj();
            let weight = rot_minus * plus + rot_plus * minus;
            if weight.abs_f64() == 0.0 {
                continue;
            }
            let zeta = hurwitz_dd(z, Dd::from(b as f64) / n_dd).expect("Re z > 1 is pole-free");
            total += weight * zeta;
        }
        let scale = gamma_dd(z) / (Cdd::real_pow(TWO_PI, z).scale(n_dd));
        total * scale
    }
}

/// Continued `L_chi(s)`; `s = 1` is allowed only for zero-sum `chi`.
pub fn l_chi_numeric(chi: &PeriodicFunction, s: ComplexVal) -> Result<ComplexVal> {
    NumericChi::new(chi).l_value(Cdd::from(s)).map(Into::into)
}
