//! Exact arithmetic: rationals, rings of coefficients, dense polynomials,
//! truncated power series and the finite ring F_p[u]/(u^p - u).

mod fpu;
mod poly;
mod rational;
mod ring;
mod series;

pub use fpu::{fpu_reduce, fpu_reduce_x_poly, is_prime, FpuElement, FpuRing, PrimeField};
pub use poly::{poly_power, Polynomial, QPoly, QuPoly};
pub use rational::{bernoulli_numbers, format_rational, parse_rational, rat, Rational};
pub use ring::{PolyRing, RationalField, Ring, Q, QU};
pub use series::{exp_series, series_divide, TruncatedSeries};
