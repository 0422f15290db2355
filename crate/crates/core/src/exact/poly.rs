use std::fmt;

use super::rational::{format_rational, parse_rational, Rational};
use super::ring::{PolyRing, RationalField, Ring};
use crate::error::Result;

/// Dense univariate polynomial, lowest degree first, without trailing zeros.
/// The zero polynomial has no coefficients.
///
/// Arithmetic takes the coefficient ring as an explicit argument.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

/// Polynomial over Q.
pub type QPoly = Polynomial<Rational>;
/// Polynomial in X whose coefficients are polynomials in u over Q.
pub type QuPoly = Polynomial<QPoly>;

impl<T> Polynomial<T> {
    pub const fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&T> {
        self.coeffs.get(k)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }
}

impl<T: Clone + PartialEq> Polynomial<T> {
    pub fn new<R: Ring<Elem = T>>(ring: &R, mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant<R: Ring<Elem = T>>(ring: &R, c: T) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c X^k`
    pub fn monomial<R: Ring<Elem = T>>(ring: &R, c: T, k: usize) -> Self {
        let mut coeffs = vec![ring.zero(); k];
        coeffs.push(c);
        Self::new(ring, coeffs)
    }

    pub fn add<R: Ring<Elem = T>>(&self, other: &Self, ring: &R) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = ring.zero();
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).unwrap_or(&zero);
                let b = other.coeffs.get(k).unwrap_or(&zero);
                ring.add(a, b)
            })
            .collect();
        Self::new(ring, coeffs)
    }

    pub fn neg<R: Ring<Elem = T>>(&self, ring: &R) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(|c| ring.neg(c)).collect() }
    }

    pub fn sub<R: Ring<Elem = T>>(&self, other: &Self, ring: &R) -> Self {
        self.add(&other.neg(ring), ring)
    }

    pub fn mul<R: Ring<Elem = T>>(&self, other: &Self, ring: &R) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = ring.add(&coeffs[i + j], &ring.mul(a, b));
            }
        }
        Self::new(ring, coeffs)
    }

    pub fn scale<R: Ring<Elem = T>>(&self, c: &T, ring: &R) -> Self {
        Self::new(ring, self.coeffs.iter().map(|a| ring.mul(a, c)).collect())
    }

    pub fn derivative<R: Ring<Elem = T>>(&self, ring: &R) -> Self {
        let coeffs =
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| ring.mul(&ring.integer(k as i64), c)).collect();
        Self::new(ring, coeffs)
    }

    /// Horner evaluation at a ring element.
    pub fn eval<R: Ring<Elem = T>>(&self, x: &T, ring: &R) -> T {
        self.coeffs.iter().rev().fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
    }

    /// Composition `self(q(X))`.
    pub fn compose<R: Ring<Elem = T>>(&self, q: &Self, ring: &R) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(q, ring).add(&Self::constant(ring, c.clone()), ring))
    }

    /// `self(c + X)`.
    pub fn shift<R: Ring<Elem = T>>(&self, c: &T, ring: &R) -> Self {
        let linear = Self::new(ring, vec![c.clone(), ring.one()]);
        self.compose(&linear, ring)
    }

    /// Applies a map to every coefficient, landing in another ring.
    pub fn map_coeffs<S: Ring>(&self, target: &S, f: impl FnMut(&T) -> S::Elem) -> Polynomial<S::Elem> {
        Polynomial::new(target, self.coeffs.iter().map(f).collect())
    }
}

/// `p^m` by binary powering. `p^0` is the constant one, including for p = 0.
pub fn poly_power<R: Ring>(p: &Polynomial<R::Elem>, m: u32, ring: &R) -> Polynomial<R::Elem> {
    let mut result = Polynomial::constant(ring, ring.one());
    let mut base = p.clone();
    let mut e = m;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base, ring);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base, ring);
        }
    }
    result
}

impl QPoly {
    /// Builds a polynomial over Q from small integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        let q = RationalField;
        Polynomial::new(&q, coeffs.iter().map(|&c| q.integer(c)).collect())
    }

    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        Polynomial::new(&RationalField, coeffs)
    }

    /// Parses comma-separated coefficients, lowest degree first: `0,1,1` is `X^2 + X`.
    pub fn parse_coeffs(text: &str) -> Result<Self> {
        let coeffs = text.split(',').map(|c| parse_rational(c.trim())).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_rationals(coeffs))
    }

    /// Renders in a variable, highest degree first, e.g. `-1/3 u^3 + u`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let negative = c < &Rational::from_integer(0.into());
            let mag = if negative { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit = num_traits::One::is_one(&mag);
            match k {
                0 => out.push_str(&format_rational(&mag)),
                _ => {
                    if !unit {
                        out.push_str(&format_rational(&mag));
                        out.push(' ');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("X"))
    }
}

impl QuPoly {
    /// `X (X + u)`, the shape of the parametric family.
    pub fn x_times_x_plus_u() -> Self {
        let qu = PolyRing::new(RationalField);
        Polynomial::new(&qu, vec![qu.zero(), qu.indeterminate(), qu.one()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use crate::exact::ring::{Q, QU};
    use proptest::prelude::*;

    fn u_mono(c: i64, k: usize) -> QPoly {
        Polynomial::monomial(&Q, rat(c, 1), k)
    }

    #[test]
    fn coefficient_lists() {
        assert_eq!(QPoly::parse_coeffs("0,1,1").unwrap(), QPoly::from_ints(&[0, 1, 1]));
        assert_eq!(QPoly::parse_coeffs(" -1/2 , 0 ").unwrap(), QPoly::from_rationals(vec![rat(-1, 2)]));
        assert!(QPoly::parse_coeffs("1,x").is_err());
    }

    #[test]
    fn zero_has_no_coeffs() {
        let p = QPoly::from_ints(&[0, 0, 0]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
    }

    #[test]
    fn power_of_x() {
        let x = QPoly::from_ints(&[0, 1]);
        assert_eq!(poly_power(&x, 3, &Q), QPoly::from_ints(&[0, 0, 0, 1]));
    }

    #[test]
    fn power_of_x_squared_plus_x() {
        let p = QPoly::from_ints(&[0, 1, 1]);
        assert_eq!(poly_power(&p, 2, &Q), QPoly::from_ints(&[0, 0, 1, 2, 1]));
    }

    #[test]
    fn power_over_q_u_matches_binomial_theorem() {
        let base = QuPoly::x_times_x_plus_u();
        let got = poly_power(&base, 4, &QU);
        // (X^2 + uX)^4 = sum_k C(4,k) u^k X^(8-k)
        let binom = [1, 4, 6, 4, 1];
        let mut coeffs = vec![QPoly::zero(); 9];
        for (k, &b) in binom.iter().enumerate() {
            coeffs[8 - k] = u_mono(b, k);
        }
        assert_eq!(got, Polynomial::new(&QU, coeffs));
    }

    #[test]
    fn zeroth_power_is_one() {
        assert_eq!(poly_power(&QPoly::zero(), 0, &Q), QPoly::from_ints(&[1]));
    }

    #[test]
    fn shift_and_display() {
        let p = QPoly::from_ints(&[0, 0, 1]);
        let shifted = p.shift(&rat(3, 1), &Q);
        assert_eq!(shifted, QPoly::from_ints(&[9, 6, 1]));
        assert_eq!(shifted.display_in("X"), "X^2 + 6 X + 9");
        let q = QPoly::from_rationals(vec![rat(0, 1), rat(98, 3), rat(0, 1), rat(-10, 3)]);
        assert_eq!(q.display_in("u"), "-10/3 u^3 + 98/3 u");
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec((-9i64..=9, 1i64..=4), 0..6)
            .prop_map(|v| QPoly::from_rationals(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn power_equals_repeated_product(p in small_poly(), m in 0u32..=6) {
            let mut expected = QPoly::from_ints(&[1]);
            for _ in 0..m {
                expected = expected.mul(&p, &Q);
            }
            let got = poly_power(&p, m, &Q);
            if let Some(d) = p.degree() {
                prop_assert_eq!(got.degree(), Some(d * m as usize));
            }
            prop_assert_eq!(got, expected);
        }

        #[test]
        fn leibniz_rule(p in small_poly(), q in small_poly()) {
            let lhs = p.mul(&q, &Q).derivative(&Q);
            let rhs = p.derivative(&Q).mul(&q, &Q).add(&p.mul(&q.derivative(&Q), &Q), &Q);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn degree_is_additive(p in small_poly(), q in small_poly()) {
            if let (Some(a), Some(b)) = (p.degree(), q.degree()) {
                prop_assert_eq!(p.mul(&q, &Q).degree(), Some(a + b));
            }
        }
    }
}
