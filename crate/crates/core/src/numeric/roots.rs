//! Simultaneous root finding by the Aberth-Ehrlich iteration, followed by a
//! Newton polish in double-double.

use super::complex::{Cdd, ComplexVal};
use super::dd::Dd;
use super::rational_to_dd;
use crate::error::{Error, Result};
use crate::exact::QPoly;

const MAX_ITERATIONS: usize = 500;
const RESIDUAL_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn add(self, o: C64) -> C64 {
        C64 { re: self.re + o.re, im: self.im + o.im }
    }
    fn sub(self, o: C64) -> C64 {
        C64 { re: self.re - o.re, im: self.im - o.im }
    }
    fn mul(self, o: C64) -> C64 {
        C64 { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
    fn div(self, o: C64) -> C64 {
        let d = o.re * o.re + o.im * o.im;
        C64 { re: (self.re * o.re + self.im * o.im) / d, im: (self.im * o.re - self.re * o.im) / d }
    }
    fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// `(p(z), p'(z))` by Horner.
fn horner(coeffs: &[f64], z: C64) -> (C64, C64) {
    let mut p = C64 { re: 0.0, im: 0.0 };
    let mut dp = C64 { re: 0.0, im: 0.0 };
    for &c in coeffs.iter().rev() {
        dp = dp.mul(z).add(p);
        p = p.mul(z).add(C64 { re: c, im: 0.0 });
    }
    (p, dp)
}

fn horner_dd(coeffs: &[Dd], z: Cdd) -> (Cdd, Cdd) {
    let mut p = Cdd::ZERO;
    let mut dp = Cdd::ZERO;
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + Cdd::real(c);
    }
    (p, dp)
}

/// Aberth-Ehrlich on a polynomial with nonzero constant term.
fn aberth(coeffs: &[f64]) -> Vec<C64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    // start on a circle of radius (|c_0 / c_n|)^(1/n), the geometric mean of |roots|
    let radius = (coeffs[0] / lead).abs().powf(1.0 / n as f64).max(1e-3);
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            C64 { re: radius * theta.cos(), im: radius * theta.sin() }
        })
        .collect();
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let (p, dp) = horner(coeffs, z[k]);
            if p.abs() == 0.0 {
                continue;
            }
            let ratio = p.div(dp);
            let mut repulsion = C64 { re: 0.0, im: 0.0 };
            for j in 0..n {
                if j != k {
                    repulsion = repulsion.add(C64 { re: 1.0, im: 0.0 }.div(z[k].sub(z[j])));
                }
            }
            let denom = C64 { re: 1.0, im: 0.0 }.sub(ratio.mul(repulsion));
            let step = ratio.div(denom);
            if step.re.is_finite() && step.im.is_finite() {
                z[k] = z[k].sub(step);
                max_step = max_step.max(step.abs() / z[k].abs().max(1e-300));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

/// All complex roots of `P` with multiplicity. Zero roots are split off
/// exactly; the others are refined in double-double and must satisfy
/// `|P(a)| < 1e-12 * sum_k |c_k| |a|^k`.
pub(crate) fn roots_dd(poly: &QPoly) -> Result<Vec<Cdd>> {
    let degree = poly
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::InvalidPolynomial("root finding needs degree >= 1".into()))?;
    let zeros = poly.coeffs().iter().take_while(|c| num_traits::Zero::is_zero(*c)).count();
    let mut roots = vec![Cdd::ZERO; zeros];
    let rest: Vec<Dd> = poly.coeffs()[zeros..].iter().map(rational_to_dd).collect();
    let n = degree - zeros;
    if n == 0 {
        return Ok(roots);
    }
    if n == 1 {
        roots.push(Cdd::real(-rest[0] / rest[1]));
        return Ok(roots);
    }
    let lead = rest[n];
    let monic: Vec<Dd> = rest.iter().map(|&c| c / lead).collect();
    let monic_f64: Vec<f64> = monic.iter().map(|c| c.to_f64()).collect();
    for z in aberth(&monic_f64) {
        let mut root = Cdd::from(ComplexVal::new(z.re, z.im));
        for _ in 0..4 {
            let (p, dp) = horner_dd(&monic, root);
            if dp.abs_f64() == 0.0 || p.abs_f64() == 0.0 {
                break;
            }
            let step = p / dp;
            if !step.is_finite() {
                break;
            }
            root -= step;
        }
        // real polynomial: snap negligible imaginary parts
        if root.im.abs().to_f64() < 1e-30 * root.abs_f64().max(1.0) {
            root.im = Dd::ZERO;
        }
        let (p, _) = horner_dd(&monic, root);
        let scale: f64 = monic.iter().enumerate().map(|(k, c)| c.abs().to_f64() * root.abs_f64().powi(k as i32)).sum();
        if p.abs_f64() > RESIDUAL_TOLERANCE * scale {
            return Err(Error::RootFinding(format!(
                "residual {:e} at {} exceeds tolerance",
                p.abs_f64(),
                ComplexVal::from(root)
            )));
        }
        roots.push(root);
    }
    Ok(roots)
}

/// Complex roots of a rational polynomial, with multiplicity.
pub fn find_roots(poly: &QPoly) -> Result<Vec<ComplexVal>> {
    Ok(roots_dd(poly)?.into_iter().map(Into::into).collect())
}
