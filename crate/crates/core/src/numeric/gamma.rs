use super::bernoulli::even_bernoulli;
use super::complex::{Cdd, ComplexVal};
use super::dd::{Dd, TWO_PI};
use crate::error::{Error, Result};

/// Real part below which the argument is shifted before applying Stirling.
const STIRLING_SHIFT: f64 = 40.0;

/// Gamma function for `Re z > 0`, by Stirling's series after an upward shift.
pub(crate) fn gamma_dd(z: Cdd) -> Cdd {
    let shift = (STIRLING_SHIFT - z.re.hi).ceil().max(0.0) as u32;
    let mut prod = Cdd::ONE;
    for k in 0..shift {
        prod = prod * (z + Cdd::real(Dd::from(k as f64)));
    }
    let w = z + Cdd::real(Dd::from(shift as f64));
    let half_ln_two_pi = TWO_PI.ln().ldexp(-1);
    let mut ln_gamma = (w - Cdd::real(Dd::from(0.5))) * w.ln() - w + Cdd::real(half_ln_two_pi);
    let inv_w = w.recip();
    let inv_w2 = inv_w * inv_w;
    let mut pow = inv_w;
    let b = even_bernoulli();
    for (k, &bk) in b.iter().enumerate().skip(1) {
        let denom = Dd::from((2 * k * (2 * k - 1)) as f64);
        let term = pow.scale(bk / denom);
        ln_gamma += term;
        if term.abs_f64() < 1e-34 * ln_gamma.abs_f64() {
            break;
        }
        pow = pow * inv_w2;
    }
    ln_gamma.exp() / prod
}

/// Gamma function on the right half-plane.
pub fn gamma(z: ComplexVal) -> Result<ComplexVal> {
    if z.re <= 0.0 {
        return Err(Error::Domain(format!("gamma is only provided for Re z > 0, got {z}")));
    }
    Ok(gamma_dd(Cdd::from(z)).into())
}
