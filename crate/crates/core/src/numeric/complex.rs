use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use super::dd::{Dd, HALF_PI, PI};

/// Double-precision complex number: the public scalar of the numeric engine.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ComplexVal {
    pub re: f64,
    pub im: f64,
}

impl ComplexVal {
    pub const fn new(re: f64, im: f64) -> Self {
        ComplexVal { re, im }
    }

    pub const fn real(re: f64) -> Self {
        ComplexVal { re, im: 0.0 }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// `self^s` on the principal branch, evaluated in extended precision.
    pub fn powc(self, s: ComplexVal) -> ComplexVal {
        Cdd::from(self).powc(Cdd::from(s)).into()
    }

    /// Parses `a`, `bi`, `a+bi`, `a-bi`, `a+i` (whitespace ignored).
    pub fn parse(text: &str) -> Option<ComplexVal> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return None;
        }
        let Some(body) = t.strip_suffix(['i', 'j']) else {
            return t.parse().ok().map(ComplexVal::real);
        };
        // split at the last sign that is not part of an exponent
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => 1.0,
            "-" => -1.0,
            s => s.parse().ok()?,
        };
        Some(ComplexVal::new(re.parse().ok()?, im))
    }
}

impl fmt::Display for ComplexVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// Complex double-double, used internally by every numeric routine.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: Cdd = Cdd { re: Dd::ONE, im: Dd::ZERO };
    pub const I: Cdd = Cdd { re: Dd::ZERO, im: Dd::ONE };

    pub const fn new(re: Dd, im: Dd) -> Self {
        Cdd { re, im }
    }

    pub fn real(re: Dd) -> Self {
        Cdd { re, im: Dd::ZERO }
    }

    pub fn conj(self) -> Self {
        Cdd { re: self.re, im: -self.im }
    }

    pub fn norm_sqr(self) -> Dd {
        self.re.sqr() + self.im.sqr()
    }

    pub fn abs(self) -> Dd {
        self.norm_sqr().sqrt()
    }

    /// Magnitude as f64, for error estimates.
    pub fn abs_f64(self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn scale(self, k: Dd) -> Self {
        Cdd { re: self.re * k, im: self.im * k }
    }

    pub fn exp(self) -> Self {
        let r = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Cdd { re: r * c, im: r * s }
    }

    /// Principal logarithm, imaginary part in (-pi, pi].
    pub fn ln(self) -> Self {
        if self.im.is_zero() && self.re.hi > 0.0 {
            return Cdd::real(self.re.ln());
        }
        Cdd { re: self.norm_sqr().ln().ldexp(-1), im: Dd::atan2(self.im, self.re) }
    }

    /// `self^s = exp(s log self)` on the principal branch; `0^s = 0`.
    pub fn powc(self, s: Cdd) -> Self {
        if self.re.is_zero() && self.im.is_zero() {
            return Cdd::ZERO;
        }
        (s * self.ln()).exp()
    }

    /// `x^s` for a positive real base.
    pub fn real_pow(x: Dd, s: Cdd) -> Self {
        s.scale(x.ln()).exp()
    }

    pub fn powi(self, n: u32) -> Self {
        let mut base = self;
        let mut e = n;
        let mut acc = Cdd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    pub fn recip(self) -> Self {
        Cdd::ONE / self
    }

    /// `e^{i pi z / 2}`.
    pub fn exp_i_half_pi(z: Cdd) -> Self {
        (Cdd::I * z.scale(HALF_PI)).exp()
    }

    pub fn pi() -> Dd {
        PI
    }
}

impl From<ComplexVal> for Cdd {
    fn from(z: ComplexVal) -> Self {
        Cdd { re: Dd::from(z.re), im: Dd::from(z.im) }
    }
}

impl From<Cdd> for ComplexVal {
    fn from(z: Cdd) -> Self {
        ComplexVal { re: z.re.to_f64(), im: z.im.to_f64() }
    }
}

impl From<Dd> for Cdd {
    fn from(x: Dd) -> Self {
        Cdd::real(x)
    }
}

impl Add for Cdd {
    type Output = Cdd;
    #[inline]
    fn add(self, b: Cdd) -> Cdd {
        Cdd { re: self.re + b.re, im: self.im + b.im }
    }
}

impl Sub for Cdd {
    type Output = Cdd;
    #[inline]
    fn sub(self, b: Cdd) -> Cdd {
        Cdd { re: self.re - b.re, im: self.im - b.im }
    }
}

impl Neg for Cdd {
    type Output = Cdd;
    #[inline]
    fn neg(self) -> Cdd {
        Cdd { re: -self.re, im: -self.im }
    }
}

impl Mul for Cdd {
    type Output = Cdd;
    #[inline]
    fn mul(self, b: Cdd) -> Cdd {
        Cdd { re: self.re * b.re - self.im * b.im, im: self.re * b.im + self.im * b.re }
    }
}

impl Div for Cdd {
    type Output = Cdd;
    fn div(self, b: Cdd) -> Cdd {
        let d = b.norm_sqr();
        let n = self * b.conj();
        Cdd { re: n.re / d, im: n.im / d }
    }
}

impl AddAssign for Cdd {
    fn add_assign(&mut self, b: Cdd) {
        *self = *self + b;
    }
}

impl SubAssign for Cdd {
    fn sub_assign(&mut self, b: Cdd) {
        *self = *self - b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(ComplexVal::parse("-1"), Some(ComplexVal::real(-1.0)));
        assert_eq!(ComplexVal::parse("3+i"), Some(ComplexVal::new(3.0, 1.0)));
        assert_eq!(ComplexVal::parse("3+1i"), Some(ComplexVal::new(3.0, 1.0)));
        assert_eq!(ComplexVal::parse("1-2i"), Some(ComplexVal::new(1.0, -2.0)));
        assert_eq!(ComplexVal::parse("2.5i"), Some(ComplexVal::new(0.0, 2.5)));
        assert_eq!(ComplexVal::parse("-i"), Some(ComplexVal::new(0.0, -1.0)));
        assert_eq!(ComplexVal::parse("1e-3+2e+1i"), Some(ComplexVal::new(1e-3, 20.0)));
        assert_eq!(ComplexVal::parse(" -0.5 - 0.25i "), Some(ComplexVal::new(-0.5, -0.25)));
        assert_eq!(ComplexVal::parse("abc"), None);
        assert_eq!(ComplexVal::parse(""), None);
    }

    #[test]
    fn principal_branch_powers() {
        // i^i = e^{-pi/2}
        let z = Cdd::I.powc(Cdd::I);
        assert!((z.re.to_f64() - (-std::f64::consts::FRAC_PI_2).exp()).abs() < 1e-16);
        assert!(z.im.to_f64().abs() < 1e-30);
        // (-1)^{1/2} = i
        let w = Cdd::real(Dd::from(-1.0)).powc(Cdd::real(Dd::from(0.5)));
        assert!((w - Cdd::I).abs_f64() < 1e-30);
        let v = ComplexVal::new(2.0, 0.0).powc(ComplexVal::new(3.0, 0.0));
        assert!((v.re - 8.0).abs() < 1e-14 && v.im.abs() < 1e-14);
    }

    #[test]
    fn division_and_log() {
        let a = Cdd::new(Dd::from(1.5), Dd::from(-2.0));
        let b = Cdd::new(Dd::from(-0.25), Dd::from(3.0));
        assert!(((a / b) * b - a).abs_f64() < 1e-30);
        assert!((a.ln().exp() - a).abs_f64() < 1e-30);
    }
}
