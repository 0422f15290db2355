//! Periodic functions chi: N* -> Q given by one period of values.

use std::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, rat, Rational};

/// A periodic function with rational values, `chi(n) = values[(n - 1) mod N]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicFunction {
    values: Vec<Rational>,
    zero_sum: bool,
}

impl PeriodicFunction {
    /// Builds chi from its values on `1..=period`.
    pub fn from_table(period: usize, values: Vec<Rational>) -> Result<Self> {
        if period == 0 || values.len() != period {
            return Err(Error::LengthMismatch { period, len: values.len() });
        }
        let zero_sum = values.iter().fold(Rational::zero(), |acc, v| acc + v).is_zero();
        Ok(PeriodicFunction { values, zero_sum })
    }

    /// The non-trivial character mod 3: 1, -1, 0.
    pub fn chi3() -> Self {
        Self::from_table(3, vec![rat(1, 1), rat(-1, 1), rat(0, 1)]).unwrap()
    }

    /// The non-trivial character mod 4: 1, 0, -1, 0.
    pub fn chi4() -> Self {
        Self::from_table(4, vec![rat(1, 1), rat(0, 1), rat(-1, 1), rat(0, 1)]).unwrap()
    }

    /// The constant function 1 (period 1, not zero-sum).
    pub fn one() -> Self {
        Self::from_table(1, vec![rat(1, 1)]).unwrap()
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_zero_sum(&self) -> bool {
        self.zero_sum
    }

    /// chi(n) for n >= 1.
    pub fn eval(&self, n: u64) -> Result<&Rational> {
        if n < 1 {
            return Err(Error::Domain("chi is defined on positive integers only".into()));
        }
        Ok(self.at(n))
    }

    /// chi(n) without the domain check; `n` must be positive.
    pub fn at(&self, n: u64) -> &Rational {
        let period = self.values.len() as u64;
        &self.values[((n - 1) % period) as usize]
    }

    /// Values as floats, for the numeric engine.
    pub fn values_f64(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// The same function described with period `k * N`.
    pub fn replicate(&self, k: usize) -> Self {
        let values = (0..k.max(1)).flat_map(|_| self.values.iter().cloned()).collect();
        PeriodicFunction { values, zero_sum: self.zero_sum }
    }

    /// Parses `chi3`, `chi4`, `one`, or `period=N;values=v1,...,vN`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        match text {
            "chi3" => return Ok(Self::chi3()),
            "chi4" => return Ok(Self::chi4()),
            "one" => return Ok(Self::one()),
            _ => {}
        }
        let mut period = None;
        let mut values = None;
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in chi description, got {part:?}")))?;
            match key.trim() {
                "period" => {
                    let n: usize = val.trim().parse().map_err(|_| Error::Parse(format!("bad period {val:?}")))?;
                    period = Some(n);
                }
                "values" => {
                    let v = val.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
                    values = Some(v);
                }
                other => return Err(Error::Parse(format!("unknown chi description key {other:?}"))),
            }
        }
        let values = values.ok_or_else(|| Error::Parse(format!("chi description {text:?} has no values")))?;
        let period = period.unwrap_or(values.len());
        Self::from_table(period, values)
    }
}

impl fmt::Display for PeriodicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(format_rational).collect();
        write!(f, "period={};values={}", self.period(), vals.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn named_characters() {
        let c3 = PeriodicFunction::chi3();
        assert!(c3.is_zero_sum());
        assert_eq!(c3.period(), 3);
        assert!(PeriodicFunction::chi4().is_zero_sum());
        assert!(!PeriodicFunction::one().is_zero_sum());
    }

    #[test]
    fn evaluation() {
        let c3 = PeriodicFunction::chi3();
        assert_eq!(c3.eval(5).unwrap(), &rat(-1, 1));
        assert_eq!(c3.eval(300).unwrap(), &rat(0, 1));
        assert_eq!(PeriodicFunction::one().eval(7).unwrap(), &rat(1, 1));
        assert!(matches!(c3.eval(0), Err(Error::Domain(_))));
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(PeriodicFunction::from_table(3, vec![rat(1, 1)]), Err(Error::LengthMismatch { period: 3, len: 1 }));
        assert!(PeriodicFunction::from_table(0, vec![]).is_err());
    }

    #[test]
    fn parse_specs() {
        assert_eq!(PeriodicFunction::parse("chi3").unwrap(), PeriodicFunction::chi3());
        assert_eq!(PeriodicFunction::parse("period=4;values=1,0,-1,0").unwrap(), PeriodicFunction::chi4());
        let half = PeriodicFunction::parse("period=2;values=1/2,-1/2").unwrap();
        assert!(half.is_zero_sum());
        assert_eq!(half.to_string(), "period=2;values=1/2,-1/2");
        assert!(matches!(PeriodicFunction::parse("period=3;values=1,2"), Err(Error::LengthMismatch { .. })));
        assert!(matches!(PeriodicFunction::parse("bogus"), Err(Error::Parse(_))));
        assert!(matches!(PeriodicFunction::parse("period=x;values=1"), Err(Error::Parse(_))));
    }

    proptest! {
        #[test]
        fn periodicity(vals in prop::collection::vec(-5i64..=5, 1..8), n in 1u64..1000) {
            let chi = PeriodicFunction::from_table(vals.len(), vals.iter().map(|&v| rat(v, 1)).collect()).unwrap();
            let period = chi.period() as u64;
            prop_assert_eq!(chi.eval(n + period).unwrap(), chi.eval(n).unwrap());
            let sum: i64 = vals.iter().sum();
            prop_assert_eq!(chi.is_zero_sum(), sum == 0);
        }
    }
}
