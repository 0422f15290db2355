use num_bigint::BigInt;
use num_traits::Zero;

use super::rational::Rational;
use crate::error::{Error, Result};

/// Power series over Q known up to and including `t^order`.
///
/// Binary operations carry the smaller of the operand orders. Division
/// additionally loses the divisor's valuation, since that many leading
/// coefficients are consumed by the cancellation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads with zeros or drops terms beyond `order`.
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    /// The series `t` at the given order.
    pub fn t(order: usize) -> Self {
        Self::new(order, vec![Rational::zero(), Rational::from_integer(1.into())])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// Index of the first nonzero coefficient, `None` if all known
    /// coefficients vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        TruncatedSeries { order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect();
        TruncatedSeries { order, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k)
                    .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[k - i].is_zero())
                    .map(|i| &self.coeffs[i] * &other.coeffs[k - i])
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .collect();
        TruncatedSeries { order, coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries { order: self.order, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }
}

/// `e^{k t}` truncated at `order`, built from the factorial recurrence.
pub fn exp_series(k: &Rational, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::from_integer(1.into());
    coeffs.push(term.clone());
    for n in 1..=order {
        term = term * k / Rational::from_integer(BigInt::from(n));
        coeffs.push(term.clone());
    }
    TruncatedSeries { order, coeffs }
}

/// Quotient `num / den` as a genuine power series.
///
/// The result order is `min(num.order, den.order) - valuation(den)`.
pub fn series_divide(num: &TruncatedSeries, den: &TruncatedSeries) -> Result<TruncatedSeries> {
    let v = den.valuation().ok_or(Error::DivisionByZeroSeries)?;
    if let Some(vn) = num.valuation() {
        if vn < v {
            return Err(Error::Valuation { num: vn, den: v });
        }
    }
    let order = num.order.min(den.order);
    if v > order {
        return Err(Error::DivisionByZeroSeries);
    }
    let order = order - v;
    let a = &num.coeffs[v..=v + order];
    let b = &den.coeffs[v..=v + order];
    let lead = &b[0];
    let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
    for i in 0..=order {
        let mut acc = a[i].clone();
        for (j, qj) in q.iter().enumerate() {
            let bij = &b[i - j];
            if !qj.is_zero() && !bij.is_zero() {
                acc -= qj * bij;
            }
        }
        q.push(acc / lead);
    }
    Ok(TruncatedSeries { order, coeffs: q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use proptest::prelude::*;

    fn one_minus_exp(k: i64, order: usize) -> TruncatedSeries {
        let one = TruncatedSeries::new(order, vec![rat(1, 1)]);
        one.sub(&exp_series(&rat(k, 1), order))
    }

    #[test]
    fn t_over_t_is_one() {
        let t = TruncatedSeries::t(5);
        let q = series_divide(&t, &t).unwrap();
        assert_eq!(q, TruncatedSeries::new(4, vec![rat(1, 1)]));
    }

    #[test]
    fn t_over_one_minus_exp3t() {
        let q = series_divide(&TruncatedSeries::t(4), &one_minus_exp(3, 4)).unwrap();
        // long division of 1 by -3 - 9/2 t - 9/2 t^2 - 27/8 t^3
        assert_eq!(q.order(), 3);
        assert_eq!(q.coeffs()[..3], [rat(-1, 3), rat(1, 2), rat(-1, 4)]);
    }

    #[test]
    fn division_errors() {
        let t = TruncatedSeries::t(4);
        let one = TruncatedSeries::new(4, vec![rat(1, 1)]);
        assert_eq!(series_divide(&t, &TruncatedSeries::zero(4)), Err(Error::DivisionByZeroSeries));
        assert_eq!(series_divide(&one, &t), Err(Error::Valuation { num: 0, den: 1 }));
        assert_eq!(series_divide(&TruncatedSeries::zero(4), &t).unwrap(), TruncatedSeries::zero(3));
    }

    #[test]
    fn exp_series_coefficients() {
        let e = exp_series(&rat(2, 1), 4);
        assert_eq!(e.coeffs(), [rat(1, 1), rat(2, 1), rat(2, 1), rat(4, 3), rat(2, 3)]);
    }

    #[test]
    fn orders_take_minimum() {
        let a = exp_series(&rat(1, 1), 3);
        let b = exp_series(&rat(1, 1), 6);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).order(), 3);
        // e^t e^t = e^{2t}
        assert_eq!(b.mul(&b), exp_series(&rat(2, 1), 6));
    }

    fn series(order: usize, min_val: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-6i64..=6, 1i64..=3), order + 1).prop_map(move |v| {
            let mut c: Vec<Rational> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
            for x in c.iter_mut().take(min_val) {
                *x = rat(0, 1);
            }
            TruncatedSeries::new(order, c)
        })
    }

    proptest! {
        #[test]
        fn quotient_times_divisor_recovers_dividend(
            a in series(8, 2),
            b in series(8, 1),
        ) {
            prop_assume!(b.valuation().is_some_and(|v| v <= 2));
            let v = b.valuation().unwrap();
            let q = series_divide(&a, &b).unwrap();
            let back = q.mul(&b);
            // q is known to order 8 - v; q*b then recovers a through t^(8-v)
            let upto = 8 - v;
            prop_assert_eq!(&back.coeffs()[..=upto], &a.coeffs()[..=upto]);
        }
    }
}
