//! Numerical evaluation of `L_{chi,P}(s)` for complex `s`.
//!
//! Public entry points take and return [`ComplexVal`] (f64 pairs); the work
//! is done in double-double arithmetic ([`dd`]), because the special values
//! at negative integers arise from sums whose terms are many orders of
//! magnitude larger than the result.

mod bernoulli;
pub mod complex;
mod continuation;
pub mod dd;
mod gamma;
mod hurwitz;
mod roots;
mod taylor;

pub use complex::{Cdd, ComplexVal};
pub use continuation::{
    continuation_eval, direct_sum, ContinuationPlan, DirectSumOptions, DEFAULT_MAX_TERMS, DEFAULT_TAIL_EPSILON,
};
pub use dd::Dd;
pub use gamma::gamma;
pub use hurwitz::{hurwitz_zeta, l_chi_numeric};
pub use roots::find_roots;
pub use taylor::{taylor_coefficient, taylor_remainder};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, ToPrimitive};

use crate::exact::Rational;

pub(crate) fn bigint_to_dd(n: &BigInt) -> Dd {
    let hi = n.to_f64().unwrap_or(f64::NAN);
    match BigInt::from_f64(hi) {
        Some(hi_exact) => Dd::from(hi) + Dd::from((n - hi_exact).to_f64().unwrap_or(0.0)),
        None => Dd::from(hi),
    }
}

/// Nearest double-double to a rational.
pub fn rational_to_dd(q: &Rational) -> Dd {
    bigint_to_dd(q.numer()) / bigint_to_dd(q.denom())
}
