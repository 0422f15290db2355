//! Dirichlet-like L-functions `L_{chi,P}(s) = sum_n chi(n) P'(n) / P(n)^s`
//! attached to a periodic function `chi` and a polynomial `P`.
//!
//! * [`psi`] computes the linear form `Psi_chi` whose values on powers of `P`
//!   give the exact special values at non-positive integers ([`special`]).
//! * [`numeric`] evaluates the analytic continuation anywhere in the plane.
//! * [`congruence`] reduces the parametric family `p_m(u)` modulo primes and
//!   looks for periodicity in `m`.

pub mod congruence;
pub mod error;
pub mod exact;
pub mod numeric;
pub mod output;
pub mod periodic;
pub mod psi;
pub mod special;

pub use error::{Error, ErrorClass, Result};
pub use periodic::PeriodicFunction;
pub use psi::{check_shift_identity, psi_apply, psi_table, PsiTable};
