//! `L_{chi,P}(s)` for arbitrary complex `s`.
//!
//! For `n >= A` write `P(n) = c n^d prod_j (1 - a_j / n)`. Then
//! `P'(n) / P(n)^s = c^{1-s} n^{-w_0} sum_j prod_i (1 - a_i / n)^{-f_j(s)_i}`
//! with `w_l = d s - (d - 1) + l`, and expanding the product in `1/n` gives
//!
//! `L_{A,chi,P}(s) = c^{1-s} [ sum_{l<=N} C_l L_{A,chi}(w_l)
//!                    + sum_{n>=A} chi(n) n^{-w_{N+1}} R_N(1/n) ]`
//!
//! where `C_l = sum_j c_l(f_j(s))` and `R_N(x) = sum_k C_{N+1+k} x^k` is the
//! summed Taylor remainder.

use super::complex::{Cdd, ComplexVal};
use super::dd::Dd;
use super::hurwitz::NumericChi;
use super::rational_to_dd;
use super::roots::roots_dd;
use super::taylor::summed_shifted_coefficients;
use crate::error::{Error, Result};
use crate::exact::{QPoly, Q};
use crate::periodic::PeriodicFunction;
use crate::special::validate_poly;

/// Default absolute bound on the truncated remainder n-sum.
pub const DEFAULT_TAIL_EPSILON: f64 = 1e-13;
/// Default cap on the number of summed terms.
pub const DEFAULT_MAX_TERMS: u64 = 20_000_000;

const MAX_REMAINDER_LEN: usize = 4096;

/// Everything needed to evaluate one `L_{chi,P}` at many points.
#[derive(Clone, Debug)]
pub struct ContinuationPlan {
    chi: PeriodicFunction,
    numeric_chi: NumericChi,
    roots: Vec<Cdd>,
    leading_coeff: Dd,
    offset_a: u64,
    min_offset: u64,
    taylor_order: Option<usize>,
    tail_epsilon: f64,
    tail_max_terms: u64,
    // coefficients of P / c and (P / c)', when P is known exactly
    monic: Option<(Vec<Dd>, Vec<Dd>)>,
}

impl ContinuationPlan {
    /// Plan for an exact polynomial; roots are computed numerically.
    pub fn from_poly(chi: &PeriodicFunction, poly: &QPoly) -> Result<Self> {
        validate_poly(poly, 1)?;
        let lead = poly.leading().expect("validated nonzero").clone();
        let monic = poly.scale(&(num_rational::BigRational::from_integer(1.into()) / &lead), &Q);
        let coeffs: Vec<Dd> = monic.coeffs().iter().map(rational_to_dd).collect();
        let deriv: Vec<Dd> = monic.derivative(&Q).coeffs().iter().map(rational_to_dd).collect();
        let roots = roots_dd(poly)?;
        let mut plan = Self::build(chi, roots, rational_to_dd(&lead))?;
        plan.monic = Some((coeffs, deriv));
        Ok(plan)
    }

    /// Plan for `P = c prod_j (X - a_j)` with the roots supplied directly.
    pub fn from_roots(chi: &PeriodicFunction, roots: &[ComplexVal], leading_coeff: f64) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidPolynomial("at least one root is required".into()));
        }
        if !(leading_coeff > 0.0 && leading_coeff.is_finite()) {
            return Err(Error::InvalidPolynomial("leading coefficient must be positive".into()));
        }
        for r in roots {
            if !(r.re.is_finite() && r.im.is_finite()) {
                return Err(Error::InvalidPolynomial(format!("root {r} is not finite")));
            }
            if r.im == 0.0 && r.re >= 1.0 && r.re.fract() == 0.0 {
                return Err(Error::InvalidPolynomial(format!("P vanishes at n = {}", r.re)));
            }
        }
        Self::build(chi, roots.iter().map(|&r| r.into()).collect(), Dd::from(leading_coeff))
    }

    fn build(chi: &PeriodicFunction, roots: Vec<Cdd>, leading_coeff: Dd) -> Result<Self> {
        let min_offset = minimal_offset(&roots);
        Ok(ContinuationPlan {
            chi: chi.clone(),
            numeric_chi: NumericChi::new(chi),
            roots,
            leading_coeff,
            offset_a: min_offset,
            min_offset,
            taylor_order: None,
            tail_epsilon: DEFAULT_TAIL_EPSILON,
            tail_max_terms: DEFAULT_MAX_TERMS,
            monic: None,
        })
    }

    /// Use a larger offset `A`; must be at least [`Self::minimal_offset`].
    pub fn with_offset(mut self, offset_a: u64) -> Result<Self> {
        if offset_a < self.min_offset {
            return Err(Error::Domain(format!(
                "offset {offset_a} is below the admissible minimum {}",
                self.min_offset
            )));
        }
        self.offset_a = offset_a;
        Ok(self)
    }

    /// Fix `N` instead of choosing it from `s`.
    pub fn with_taylor_order(mut self, n: usize) -> Self {
        self.taylor_order = Some(n);
        self
    }

    pub fn with_tolerance(mut self, epsilon: f64, max_terms: u64) -> Self {
        self.tail_epsilon = epsilon;
        self.tail_max_terms = max_terms;
        self
    }

    pub fn chi(&self) -> &PeriodicFunction {
        &self.chi
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> Vec<ComplexVal> {
        self.roots.iter().map(|&r| r.into()).collect()
    }

    pub fn leading_coeff(&self) -> f64 {
        self.leading_coeff.to_f64()
    }

    pub fn offset(&self) -> u64 {
        self.offset_a
    }

    pub fn minimal_offset(&self) -> u64 {
        self.min_offset
    }

    /// `N` used at `s`: the fixed one, or `d (ceil(max(0, 2 - Re s)) + 2)`.
    pub fn taylor_order_at(&self, s: ComplexVal) -> usize {
        let d = self.degree();
        self.taylor_order.unwrap_or_else(|| d * ((2.0 - s.re).max(0.0).ceil() as usize + 2))
    }

    /// `L_{A,chi,P}(s)`, the sum starting at the plan's offset.
    pub fn eval_offset(&self, s: ComplexVal) -> Result<ComplexVal> {
        self.offset_value(Cdd::from(s), self.taylor_order_at(s)).map(Into::into)
    }

    /// `sum_{from <= n < to} chi(n) P'(n) / P(n)^s`.
    pub fn finite_sum(&self, s: ComplexVal, from: u64, to: u64) -> ComplexVal {
        let s = Cdd::from(s);
        let scale = Cdd::real_pow(self.leading_coeff, Cdd::ONE - s);
        (self.monic_prefix(s, from, to) * scale).into()
    }

    fn monic_values(&self, n: u64) -> (Cdd, Cdd) {
        let x = Dd::from(n as f64);
        match &self.monic {
            Some((p, dp)) => {
                let horner = |c: &[Dd]| c.iter().rev().fold(Dd::ZERO, |acc, &k| acc * x + k);
                (Cdd::real(horner(p)), Cdd::real(horner(dp)))
            }
            None => {
                let xc = Cdd::real(x);
                let factors: Vec<Cdd> = self.roots.iter().map(|&a| xc - a).collect();
                let value = factors.iter().fold(Cdd::ONE, |acc, &f| acc * f);
                let deriv = (0..factors.len()).fold(Cdd::ZERO, |acc, j| {
                    acc + factors.iter().enumerate().filter(|&(i, _)| i != j).fold(Cdd::ONE, |p, (_, &f)| p * f)
                });
                (value, deriv)
            }
        }
    }

    // sum over from <= n < to of chi(n) Q'(n) / Q(n)^s for the monic Q
    fn monic_prefix(&self, s: Cdd, from: u64, to: u64) -> Cdd {
        let mut total = Cdd::ZERO;
        for n in from.max(1)..to {
            let c = self.numeric_chi.at(n);
            if c.is_zero() {
                continue;
            }
            let (value, deriv) = self.monic_values(n);
            total += (deriv * value.powc(-s)).scale(c);
        }
        total
    }

    fn check_poles(&self, s: Cdd, order: usize) -> Result<()> {
        if self.numeric_chi.zero_sum {
            return Ok(());
        }
        let d = self.degree() as f64;
        let w0 = s.scale(Dd::from(d)) - Cdd::real(Dd::from(d - 1.0));
        for l in 0..=order {
            let w = w0 + Cdd::real(Dd::from(l as f64));
            if (w.re - Dd::ONE).abs().to_f64() < 1e-14 && w.im.abs().to_f64() < 1e-14 {
                return Err(Error::Pole(format!(
                    "s = {} hits the pole of L_chi at argument {} (index {l})",
                    ComplexVal::from(s),
                    ComplexVal::from(w)
                )));
            }
        }
        Ok(())
    }

    fn offset_value(&self, s: Cdd, order: usize) -> Result<Cdd> {
        self.check_poles(s, order)?;
        let d = self.degree();
        let a = self.offset_a;
        let w0 = s.scale(Dd::from(d as f64)) - Cdd::real(Dd::from(d as f64 - 1.0));
        let e_r = w0.re.to_f64() + order as f64 + 1.0;
        if e_r < 2.0 {
            return Err(Error::Domain(format!("taylor order {order} too small for Re s = {}", s.re.to_f64())));
        }
        let coeffs = self.remainder_coefficients(s, order)?;

        let mut main = Cdd::ZERO;
        for (l, &c) in coeffs.iter().take(order + 1).enumerate() {
            if c.abs_f64() == 0.0 {
                continue;
            }
            let w = w0 + Cdd::real(Dd::from(l as f64));
            let mut lw = self.numeric_chi.l_value(w)?;
            for n in 1..a {
                lw -= Cdd::real_pow(Dd::from(n as f64), -w).scale(self.numeric_chi.at(n));
            }
            main += c * lw;
        }

        let tail = self.remainder_sum(&coeffs[order + 1..], w0 + Cdd::real(Dd::from(order as f64 + 1.0)), e_r)?;
        Ok((main + tail) * Cdd::real_pow(self.leading_coeff, Cdd::ONE - s))
    }

    // C_0 .. C_{N+K}, with K large enough that R_N(1/A) is converged.
    fn remainder_coefficients(&self, s: Cdd, order: usize) -> Result<Vec<Cdd>> {
        let x = 1.0 / self.offset_a as f64;
        let mut extra = 64;
        loop {
            let coeffs = summed_shifted_coefficients(&self.roots, s, order + 1 + extra);
            let tail = &coeffs[order + 1..];
            let weights: Vec<f64> = tail.iter().enumerate().map(|(k, c)| c.abs_f64() * x.powi(k as i32)).collect();
            let total: f64 = weights.iter().sum();
            let last: f64 = weights[weights.len() - 8..].iter().cloned().fold(0.0, f64::max);
            if total == 0.0 || last <= 1e-34 * total {
                return Ok(coeffs);
            }
            if order + 1 + 2 * extra > MAX_REMAINDER_LEN {
                return Err(Error::Convergence("remainder series did not converge at the chosen offset".into()));
            }
            extra *= 2;
        }
    }

    // sum_{n >= A} chi(n) n^{-w} R(1/n), stopped once the majorant
    // max|chi| sum_k |R_k| n^{-k} * n^{1 - e_r} / (e_r - 1) drops below eps
    fn remainder_sum(&self, tail: &[Cdd], w: Cdd, e_r: f64) -> Result<Cdd> {
        let bound_coeffs: Vec<f64> = tail.iter().map(|c| c.abs_f64()).collect();
        if bound_coeffs.iter().all(|&c| c == 0.0) || self.numeric_chi.max_abs == 0.0 {
            return Ok(Cdd::ZERO);
        }
        let mut total = Cdd::ZERO;
        let mut n = self.offset_a;
        let mut count = 0u64;
        loop {
            let c = self.numeric_chi.at(n);
            if !c.is_zero() {
                let x = Dd::ONE / Dd::from(n as f64);
                let r = tail.iter().rev().fold(Cdd::ZERO, |acc, &k| acc.scale(x) + k);
                total += (Cdd::real_pow(Dd::from(n as f64), -w) * r).scale(c);
            }
            count += 1;
            let nf = n as f64;
            let c_rho: f64 = bound_coeffs.iter().rev().fold(0.0, |acc, &k| acc / nf + k);
            let bound = self.numeric_chi.max_abs * c_rho * nf.powf(1.0 - e_r) / (e_r - 1.0);
            if bound < self.tail_epsilon {
                return Ok(total);
            }
            if count >= self.tail_max_terms {
                return Err(Error::BudgetExceeded { max_terms: self.tail_max_terms });
            }
            n += 1;
        }
    }
}

/// Smallest `A >= max(1, 2 max |a_j|)` with `sum_j asin(|a_j| / A) < pi / 2`.
/// Then `sum_j |arg(1 - a_j / n)| < pi / 2` for all `n >= A`, so `Re P(n) > 0`
/// and `P(n)^s` splits into the product of the per-root powers.
fn minimal_offset(roots: &[Cdd]) -> u64 {
    let mags: Vec<f64> = roots.iter().map(|a| a.abs_f64()).collect();
    let max = mags.iter().cloned().fold(0.0, f64::max);
    let mut a = (2.0 * max).ceil().max(1.0) as u64;
    loop {
        let angle: f64 = mags.iter().map(|&m| (m / a as f64).min(1.0).asin()).sum();
        if angle < std::f64::consts::FRAC_PI_2 * (1.0 - 1e-12) {
            return a;
        }
        a += 1;
    }
}

/// `L_{chi,P}(s)` for any complex `s` (the sum from `n = 1`).
pub fn continuation_eval(plan: &ContinuationPlan, s: ComplexVal) -> Result<ComplexVal> {
    let sd = Cdd::from(s);
    let order = plan.taylor_order_at(s);
    let offset = plan.offset_value(sd, order)?;
    let prefix = plan.monic_prefix(sd, 1, plan.offset_a) * Cdd::real_pow(plan.leading_coeff, Cdd::ONE - sd);
    Ok((offset + prefix).into())
}

/// Stopping rule and budget for [`direct_sum`].
#[derive(Clone, Copy, Debug)]
pub struct DirectSumOptions {
    pub epsilon: f64,
    pub max_terms: u64,
    /// Required distance of `Re s` above 1.
    pub margin: f64,
}

impl Default for DirectSumOptions {
    fn default() -> Self {
        DirectSumOptions { epsilon: 1e-10, max_terms: DEFAULT_MAX_TERMS, margin: 0.1 }
    }
}

#[derive(Clone, Copy)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn mul(self, o: C64) -> C64 {
        C64 { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
    fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
    fn pow(self, s: C64) -> C64 {
        let (lr, li) = (self.abs().ln(), self.im.atan2(self.re));
        let er = s.re * lr - s.im * li;
        let ei = s.re * li + s.im * lr;
        let m = er.exp();
        C64 { re: m * ei.cos(), im: m * ei.sin() }
    }
}

/// `sum_{n >= A} chi(n) P'(n) / P(n)^s` by plain summation, for `Re s > 1 + margin`.
///
/// Terms are computed in f64 and accumulated in double-double. The tail after
/// `n` is estimated by comparison with `K n^{-e}`, `e = d Re s - (d - 1)`,
/// where `K` is the largest observed `|term| n^e`; for zero-sum `chi` a
/// summation-by-parts estimate is also used and the smaller bound wins.
pub fn direct_sum(
    chi: &PeriodicFunction,
    poly_coeffs: &[f64],
    offset_a: u64,
    s: ComplexVal,
    options: DirectSumOptions,
) -> Result<ComplexVal> {
    if s.re <= 1.0 + options.margin {
        return Err(Error::Convergence(format!(
            "direct summation needs Re s > {}, got {}",
            1.0 + options.margin,
            s.re
        )));
    }
    let degree = poly_coeffs
        .iter()
        .rposition(|&c| c != 0.0)
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::InvalidPolynomial("degree must be at least 1".into()))?;
    let coeffs = &poly_coeffs[..=degree];
    if coeffs[degree] <= 0.0 {
        return Err(Error::InvalidPolynomial("leading coefficient must be positive".into()));
    }
    if offset_a == 0 {
        return Err(Error::Domain("offset must be at least 1".into()));
    }
    let values = chi.values_f64();
    let period = values.len() as u64;
    let max_chi = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if max_chi == 0.0 {
        return Ok(ComplexVal::real(0.0));
    }
    let partial_max = if chi.is_zero_sum() {
        let mut run = 0.0f64;
        let mut best = 0.0f64;
        for v in &values {
            run += v;
            best = best.max(run.abs());
        }
        Some(best)
    } else {
        None
    };
    let d = degree as f64;
    let e = d * s.re - (d - 1.0);
    let lead = coeffs[degree];
    let mut k_bound = d * lead.powf(1.0 - s.re);
    let mut k_var = 0.0f64;
    let sc = C64 { re: -s.re, im: -s.im };

    let term_at = |n: u64| -> Result<C64> {
        let x = n as f64;
        let p = coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c);
        let dp = coeffs.iter().enumerate().skip(1).rev().fold(0.0, |acc, (k, &c)| acc * x + k as f64 * c);
        if p <= 0.0 {
            return Err(Error::Domain(format!("P({n}) = {p} is not positive")));
        }
        Ok(C64 { re: dp, im: 0.0 }.mul(C64 { re: p, im: 0.0 }.pow(sc)))
    };

    let mut total = Cdd::ZERO;
    let mut n = offset_a;
    let mut g = term_at(n)?;
    let mut count = 0u64;
    loop {
        let v = values[((n - 1) % period) as usize];
        if v != 0.0 {
            total += Cdd::from(ComplexVal::new(g.re * v, g.im * v));
        }
        count += 1;
        let nf = n as f64;
        let next = term_at(n + 1)?;
        k_bound = k_bound.max(g.abs() * nf.powf(e));
        let diff = C64 { re: g.re - next.re, im: g.im - next.im };
        k_var = k_var.max(diff.abs() * nf.powf(e + 1.0));
        let safety = 2.0;
        let mut bound = safety * max_chi * k_bound * nf.powf(1.0 - e) / (e - 1.0);
        if let Some(smax) = partial_max {
            let abel = safety * smax * (next.abs() + k_var * nf.powf(-e) / e);
            bound = bound.min(abel);
        }
        if bound < options.epsilon {
            return Ok(total.into());
        }
        if count >= options.max_terms {
            return Err(Error::BudgetExceeded { max_terms: options.max_terms });
        }
        g = next;
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::l_chi_numeric;

    fn c(re: f64, im: f64) -> ComplexVal {
        ComplexVal::new(re, im)
    }

    fn close(a: ComplexVal, b: ComplexVal, tol: f64) -> bool {
        (a.re - b.re).hypot(a.im - b.im) < tol
    }

    #[test]
    fn offsets() {
        let chi = PeriodicFunction::chi3();
        let plan = ContinuationPlan::from_poly(&chi, &QPoly::from_ints(&[0, 1, 1])).unwrap();
        assert_eq!(plan.minimal_offset(), 2);
        let plan = ContinuationPlan::from_poly(&chi, &QPoly::from_ints(&[0, 0, 2])).unwrap();
        assert_eq!(plan.minimal_offset(), 1);
        assert!(plan.clone().with_offset(0).is_err());
        // many roots of modulus 1: 2 * asin(1/2) * 6 > pi/2 forces a larger A
        assert!(minimal_offset(&[Cdd::ONE; 6]) > 2);
    }

    #[test]
    fn worked_example_at_minus_one() {
        let chi = PeriodicFunction::chi3();
        let plan = ContinuationPlan::from_poly(&chi, &QPoly::from_ints(&[0, 1, 1])).unwrap();
        let v = continuation_eval(&plan, c(-1.0, 0.0)).unwrap();
        assert!(close(v, c(-2.0 / 3.0, 0.0), 1e-12), "{v}");
    }

    #[test]
    fn agrees_with_direct_sum_at_two() {
        let chi = PeriodicFunction::chi3();
        let plan = ContinuationPlan::from_poly(&chi, &QPoly::from_ints(&[0, 1, 1])).unwrap();
        let v = continuation_eval(&plan, c(2.0, 0.0)).unwrap();
        let opts = DirectSumOptions { epsilon: 1e-11, ..Default::default() };
        let w = direct_sum(&chi, &[0.0, 1.0, 1.0], 1, c(2.0, 0.0), opts).unwrap();
        assert!(close(v, w, 1e-10), "{v} vs {w}");
    }

    #[test]
    fn high_precision_reference_value() {
        // chi3, X(X+1), s = 3 + i, summed to 30 digits elsewhere
        let chi = PeriodicFunction::chi3();
        let plan = ContinuationPlan::from_poly(&chi, &QPoly::from_ints(&[0, 1, 1])).unwrap();
        let reference = c(0.292_782_596_581_904, -0.217_260_631_166_613_04);
        let v = continuation_eval(&plan, c(3.0, 1.0)).unwrap();
        assert!(close(v, reference, DEFAULT_TAIL_EPSILON), "{v}");
        let tight = plan.with_tolerance(1e-17, DEFAULT_MAX_TERMS);
        let v = continuation_eval(&tight, c(3.0, 1.0)).unwrap();
        assert!(close(v, reference, 2e-16), "{v}");
    }

    #[test]
    fn direct_sum_with_p_equal_x() {
        let chi = PeriodicFunction::chi3();
        let opts = DirectSumOptions { epsilon: 1e-12, ..Default::default() };
        let w = direct_sum(&chi, &[0.0, 1.0], 1, c(2.0, 0.0), opts).unwrap();
        let l = l_chi_numeric(&chi, c(2.0, 0.0)).unwrap();
        assert!(close(w, l, 1e-11), "{w} vs {l}");
        let zero = PeriodicFunction::parse("period=2;values=0,0").unwrap();
        assert_eq!(direct_sum(&zero, &[0.0, 1.0], 1, c(2.0, 0.0), opts).unwrap(), c(0.0, 0.0));
        assert!(matches!(direct_sum(&chi, &[0.0, 1.0], 1, c(1.05, 0.0), opts), Err(Error::Convergence(_))));
    }

    #[test]
    fn monomial_reduction() {
        let chi = PeriodicFunction::chi4();
        let plan = ContinuationPlan::from_poly(&chi, &QPoly::from_ints(&[0, 0, 2])).unwrap();
        for s in [c(-0.5, 0.0), c(0.0, 0.0), c(2.0, 0.0), c(1.0, 2.0)] {
            let v = continuation_eval(&plan, s).unwrap();
            let w = l_chi_numeric(&chi, c(2.0 * s.re - 1.0, 2.0 * s.im)).unwrap();
            let k = c(2.0, 0.0).powc(c(1.0 - s.re, -s.im));
            let expected = c(2.0 * (k.re * w.re - k.im * w.im), 2.0 * (k.re * w.im + k.im * w.re));
            assert!(close(v, expected, 1e-12), "{s}: {v} vs {expected}");
        }
    }

    #[test]
    fn independent_of_taylor_order_and_offset() {
        let chi = PeriodicFunction::chi3();
        let plan = ContinuationPlan::from_poly(&chi, &QPoly::from_ints(&[5, 2, 0, 1])).unwrap();
        let s = c(-0.7, 1.3);
        let n = plan.taylor_order_at(s);
        let base = plan.eval_offset(s).unwrap();
        let more = plan.clone().with_taylor_order(n + 3).eval_offset(s).unwrap();
        assert!(close(base, more, 1e-11), "{base} vs {more}");
        let a = plan.offset();
        let shifted = plan.clone().with_offset(a + 5).unwrap().eval_offset(s).unwrap();
        let diff = plan.finite_sum(s, a, a + 5);
        assert!(close(c(base.re - shifted.re, base.im - shifted.im), diff, 1e-11));
    }

    #[test]
    fn roots_and_poly_plans_agree() {
        let chi = PeriodicFunction::chi3();
        let poly = QPoly::from_ints(&[1, 0, 1]);
        let by_poly = ContinuationPlan::from_poly(&chi, &poly).unwrap();
        let by_roots = ContinuationPlan::from_roots(&chi, &[c(0.0, 1.0), c(0.0, -1.0)], 1.0).unwrap();
        for s in [c(-2.0, 0.0), c(0.5, 0.5), c(2.5, 0.0)] {
            let a = continuation_eval(&by_poly, s).unwrap();
            let b = continuation_eval(&by_roots, s).unwrap();
            assert!(close(a, b, 1e-12), "{a} vs {b}");
        }
    }

    #[test]
    fn pole_refused_for_nonzero_sum() {
        let one = PeriodicFunction::one();
        let plan = ContinuationPlan::from_poly(&one, &QPoly::from_ints(&[0, 1])).unwrap();
        assert!(matches!(continuation_eval(&plan, c(1.0, 0.0)), Err(Error::Pole(_))));
        // w_l = s + l with N = 5 reaches 1 at s = -1
        assert!(matches!(continuation_eval(&plan, c(-1.0, 0.0)), Err(Error::Pole(_))));
        let v = continuation_eval(&plan, c(-0.5, 0.0)).unwrap();
        assert!(close(v, c(-0.207_886_224_977_354_57, 0.0), 1e-14), "{v}");
    }
}
