//! Taylor expansion of `prod_j (1 - x a_j)^{-s_j}` around `x = 0`:
//!
//! ```text
//! prod_j (1 - x a_j)^{-s_j} = sum_{l=0}^{N} c_l(s) x^l + x^{N+1} rho_N(x; s)
//! c_l(s) = (-1)^l sum_{|alpha| = l} a^alpha prod_j binom(-s_j, alpha_j)
//! ```

use super::complex::{Cdd, ComplexVal};
use super::dd::Dd;
use crate::error::{Error, Result};

/// `binom(-s, k)` as a generalized binomial coefficient.
fn binom_neg(s: Cdd, k: usize) -> Cdd {
    let mut acc = Cdd::ONE;
    for i in 0..k {
        acc = acc * (-s - Cdd::real(Dd::from(i as f64))).scale(Dd::ONE / Dd::from((i + 1) as f64));
    }
    acc
}

fn for_each_composition(total: usize, parts: usize, prefix: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if parts == 1 {
        prefix.push(total);
        f(prefix);
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        for_each_composition(total - first, parts - 1, prefix, f);
        prefix.pop();
    }
}

/// `c_l(s)` by summing over all compositions of `l` into `d` parts.
pub(crate) fn taylor_coefficient_dd(ell: usize, roots: &[Cdd], svec: &[Cdd]) -> Cdd {
    assert_eq!(roots.len(), svec.len(), "one exponent per root");
    if roots.is_empty() {
        return if ell == 0 { Cdd::ONE } else { Cdd::ZERO };
    }
    let mut total = Cdd::ZERO;
    for_each_composition(ell, roots.len(), &mut Vec::with_capacity(roots.len()), &mut |alpha| {
        let mut term = Cdd::ONE;
        for ((&k, &a), &s) in alpha.iter().zip(roots).zip(svec) {
            term = term * a.powi(k as u32) * binom_neg(s, k);
        }
        total += term;
    });
    if ell % 2 == 1 {
        -total
    } else {
        total
    }
}

/// `c_l(s)` for roots `a` and exponents `s` (one per root).
pub fn taylor_coefficient(ell: usize, roots: &[ComplexVal], svec: &[ComplexVal]) -> ComplexVal {
    let roots: Vec<Cdd> = roots.iter().map(|&a| a.into()).collect();
    let svec: Vec<Cdd> = svec.iter().map(|&s| s.into()).collect();
    taylor_coefficient_dd(ell, &roots, &svec).into()
}

/// Coefficients of `(1 - x a)^{-s} = sum_k (s)_k / k! a^k x^k` up to `len`.
fn scalar_series(a: Cdd, s: Cdd, len: usize) -> Vec<Cdd> {
    let mut out = Vec::with_capacity(len);
    let mut term = Cdd::ONE;
    for k in 0..len {
        out.push(term);
        term = term * (s + Cdd::real(Dd::from(k as f64))) * a.scale(Dd::ONE / Dd::from((k + 1) as f64));
    }
    out
}

fn truncated_product(a: &[Cdd], b: &[Cdd]) -> Vec<Cdd> {
    let len = a.len().min(b.len());
    (0..len).map(|k| (0..=k).fold(Cdd::ZERO, |acc, i| acc + a[i] * b[k - i])).collect()
}

/// `c_0 .. c_{len-1}` by multiplying the one-root series; equal to
/// [`taylor_coefficient_dd`] term by term.
pub(crate) fn taylor_coefficients(roots: &[Cdd], svec: &[Cdd], len: usize) -> Vec<Cdd> {
    let mut acc = vec![Cdd::ZERO; len];
    if len > 0 {
        acc[0] = Cdd::ONE;
    }
    for (&a, &s) in roots.iter().zip(svec) {
        acc = truncated_product(&acc, &scalar_series(a, s, len));
    }
    acc
}

/// `sum_j c_l(f_j(s))` for l < len, where `f_j(s)` puts `s` in slot j and
/// `s - 1` everywhere else.
pub(crate) fn summed_shifted_coefficients(roots: &[Cdd], s: Cdd, len: usize) -> Vec<Cdd> {
    let d = roots.len();
    let base = taylor_coefficients(roots, &vec![s - Cdd::ONE; d], len);
    // raising one exponent by 1 multiplies by 1/(1 - x a_j)
    let mut total = vec![Cdd::ZERO; len];
    for &a in roots {
        let mut h = Cdd::ZERO;
        for (k, g) in base.iter().enumerate() {
            h = *g + if k == 0 { Cdd::ZERO } else { a * h };
            total[k] += h;
        }
    }
    total
}

/// `1 / (2 max |a_j|)`, or infinity when every root is zero.
pub(crate) fn delta(roots: &[Cdd]) -> f64 {
    let m = roots.iter().map(|a| a.abs_f64()).fold(0.0, f64::max);
    if m == 0.0 {
        f64::INFINITY
    } else {
        0.5 / m
    }
}

/// `rho_N(x; s)` from the defining relation
/// `(prod_j (1 - x a_j)^{-s_j} - sum_{l<=N} c_l x^l) / x^{N+1}`.
pub(crate) fn taylor_remainder_dd(x: Dd, roots: &[Cdd], svec: &[Cdd], order: usize) -> Result<Cdd> {
    let dl = delta(roots);
    if x.is_zero() || x.abs().to_f64() > dl {
        return Err(Error::Domain(format!("x = {x} must satisfy 0 < |x| <= {dl}")));
    }
    let xc = Cdd::real(x);
    let mut product = Cdd::ONE;
    for (&a, &s) in roots.iter().zip(svec) {
        product = product * (Cdd::ONE - a * xc).powc(-s);
    }
    let coeffs = taylor_coefficients(roots, svec, order + 1);
    let partial = coeffs.iter().rev().fold(Cdd::ZERO, |acc, &c| acc * xc + c);
    Ok((product - partial).scale(Dd::ONE / x.powi(order as i32 + 1)))
}

/// Remainder `rho_N(x; s)` of the order-`N` Taylor expansion.
pub fn taylor_remainder(x: f64, roots: &[ComplexVal], svec: &[ComplexVal], order: usize) -> Result<ComplexVal> {
    let roots: Vec<Cdd> = roots.iter().map(|&a| a.into()).collect();
    let svec: Vec<Cdd> = svec.iter().map(|&s| s.into()).collect();
    if roots.len() != svec.len() {
        return Err(Error::Domain("one exponent per root is required".into()));
    }
    taylor_remainder_dd(Dd::from(x), &roots, &svec, order).map(Into::into)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexVal {
        ComplexVal::new(re, im)
    }

    fn cd(re: f64, im: f64) -> Cdd {
        c(re, im).into()
    }

    #[test]
    fn zeroth_and_first_coefficients() {
        let roots = [c(1.5, -0.5), c(-2.0, 0.25), c(0.3, 0.0)];
        let svec = [c(0.7, 1.0), c(-1.2, 0.0), c(2.0, -0.5)];
        assert_eq!(taylor_coefficient(0, &roots, &svec), ComplexVal::real(1.0));
        let expected = roots.iter().zip(&svec).fold(Cdd::ZERO, |acc, (&a, &s)| acc + Cdd::from(a) * Cdd::from(s));
        let got: Cdd = taylor_coefficient(1, &roots, &svec).into();
        assert!((got - expected).abs_f64() < 1e-15);
    }

    #[test]
    fn single_root_matches_numeric_taylor_fit() {
        // coefficients of (1 - x a)^{-s} recovered from samples on a small circle
        let a = cd(0.8, -0.3);
        let s = cd(1.7, 0.4);
        let radius = 0.5f64;
        let samples = 128;
        for ell in 0..6 {
            let mut acc = Cdd::ZERO;
            for k in 0..samples {
                let theta = std::f64::consts::TAU * k as f64 / samples as f64;
                let x = Cdd::from(ComplexVal::new(radius * theta.cos(), radius * theta.sin()));
                let f = (Cdd::ONE - a * x).powc(-s);
                let phase = Cdd::from(ComplexVal::new((ell as f64 * theta).cos(), -(ell as f64 * theta).sin()));
                acc += f * phase;
            }
            let fit = acc.scale(Dd::ONE / Dd::from(samples as f64 * radius.powi(ell as i32)));
            let direct = taylor_coefficient_dd(ell, &[a], &[s]);
            assert!((fit - direct).abs_f64() < 1e-12, "ell = {ell}");
        }
    }

    #[test]
    fn series_product_matches_composition_sum() {
        let roots = [cd(1.0, 2.0), cd(-0.5, 0.0), cd(0.25, -1.0)];
        let svec = [cd(-2.5, 1.0), cd(3.0, 0.0), cd(0.5, 0.5)];
        let fast = taylor_coefficients(&roots, &svec, 9);
        for (ell, f) in fast.iter().enumerate() {
            let slow = taylor_coefficient_dd(ell, &roots, &svec);
            assert!((*f - slow).abs_f64() <= 1e-28 * slow.abs_f64().max(1.0));
        }
        let s = cd(1.3, -0.7);
        let summed = summed_shifted_coefficients(&roots, s, 7);
        for (ell, v) in summed.iter().enumerate() {
            let mut slow = Cdd::ZERO;
            for j in 0..3 {
                let mut sv = vec![s - Cdd::ONE; 3];
                sv[j] = s;
                slow += taylor_coefficient_dd(ell, &roots, &sv);
            }
            assert!((*v - slow).abs_f64() <= 1e-28 * slow.abs_f64().max(1.0));
        }
    }

    #[test]
    fn remainder_with_a_zero_root_reduces_to_scalar_case() {
        let a = c(1.2, 0.4);
        let s = c(0.6, -1.1);
        let zero = c(0.0, 0.0);
        let x = 0.3;
        let two = taylor_remainder(x, &[a, zero], &[s, c(2.0, 3.0)], 4).unwrap();
        let one = taylor_remainder(x, &[a], &[s], 4).unwrap();
        assert!((two.re - one.re).abs() < 1e-13 && (two.im - one.im).abs() < 1e-13);
    }

    #[test]
    fn remainder_vanishes_for_terminating_series() {
        // exponents -2 and -3: the product is a polynomial of degree 5
        let roots = [c(1.5, 0.0), c(-0.7, 0.2)];
        let svec = [c(-2.0, 0.0), c(-3.0, 0.0)];
        for x in [0.1, -0.2, 0.3] {
            let r = taylor_remainder(x, &roots, &svec, 5).unwrap();
            assert!(r.abs() < 1e-25, "rho = {r}");
        }
    }

    #[test]
    fn remainder_bounded_on_a_compact_set() {
        let roots = [c(2.0, 1.0), c(-1.0, 0.5), c(0.5, -2.0)];
        let dl = 0.5 / roots.iter().map(|a| a.abs()).fold(0.0, f64::max);
        let mut worst = 0.0f64;
        for i in 0..=8 {
            let x = dl * (i as f64 / 4.0 - 1.0);
            if x == 0.0 {
                continue;
            }
            for re in [-2.0, 0.0, 2.0] {
                for im in [-2.0, 0.0, 2.0] {
                    let s = c(re, im);
                    let r = taylor_remainder(x, &roots, &[s, s, s], 3).unwrap();
                    assert!(r.re.is_finite() && r.im.is_finite());
                    worst = worst.max(r.abs());
                }
            }
        }
        assert!(worst < 1e6, "remainder grew to {worst}");
    }

    #[test]
    fn remainder_domain() {
        let roots = [c(2.0, 0.0)];
        let s = [c(1.0, 0.0)];
        assert!(taylor_remainder(0.3, &roots, &s, 2).is_err());
        assert!(taylor_remainder(0.0, &roots, &s, 2).is_err());
        assert!(taylor_remainder(0.25, &roots, &s, 2).is_ok());
    }
}
