use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::rational::Rational;

/// A commutative ring, given as a context object that knows how to combine
/// its elements.
///
/// Elements do not carry their ring, so a single runtime value (for instance
/// a prime modulus) can parametrise the whole arithmetic.
pub trait Ring: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn integer(&self, n: i64) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

#[allow(non_upper_case_globals)]
pub const Q: RationalField = RationalField;

impl Ring for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn integer(&self, n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}

/// Univariate polynomials over a base ring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyRing<R> {
    pub base: R,
}

impl<R: Ring> PolyRing<R> {
    pub const fn new(base: R) -> Self {
        PolyRing { base }
    }

    /// The indeterminate itself.
    pub fn indeterminate(&self) -> Polynomial<R::Elem> {
        Polynomial::monomial(&self.base, self.base.one(), 1)
    }
}

/// Q[u], the coefficient ring of the parametric families.
pub const QU: PolyRing<RationalField> = PolyRing::new(RationalField);

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Polynomial<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Polynomial::zero()
    }
    fn one(&self) -> Self::Elem {
        Polynomial::constant(&self.base, self.base.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b, &self.base)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.sub(b, &self.base)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b, &self.base)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg(&self.base)
    }
    fn integer(&self, n: i64) -> Self::Elem {
        Polynomial::constant(&self.base, self.base.integer(n))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
}
