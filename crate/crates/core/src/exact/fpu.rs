use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::poly::{Polynomial, QPoly, QuPoly};
use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{p} is not prime")))
    }
}

/// The prime field F_p with residues stored in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        let g = (a as i128).extended_gcd(&(self.p as i128));
        Some(g.x.rem_euclid(self.p as i128) as u64)
    }

    pub fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits in u64")
    }

    /// Image of a rational; fails when p divides the denominator.
    pub fn from_rational(&self, q: &Rational) -> Result<u64> {
        let den = self.from_bigint(q.denom());
        let inv = self.inv(den).ok_or(Error::BadPrime { p: self.p })?;
        Ok(self.mul(&self.from_bigint(q.numer()), &inv))
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - (*b % self.p) as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn integer(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

/// Element of F_p[u]/(u^p - u): residues of u^0..u^(p-1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpuElement {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpuElement {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Paper-style rendering, highest power first: `4u^5 + 2u`.
impl fmt::Display for FpuElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("u")?,
                (1, _) => write!(f, "{c}u")?,
                (_, 1) => write!(f, "u^{k}")?,
                _ => write!(f, "{c}u^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The ring F_p[u]/(u^p - u).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FpuRing {
    field: PrimeField,
}

impl FpuRing {
    pub fn new(p: u64) -> Result<Self> {
        Ok(FpuRing { field: PrimeField::new(p)? })
    }

    pub fn prime(&self) -> u64 {
        self.field.p
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    /// Exponent of u after applying u^p = u.
    pub fn reduce_exponent(&self, k: usize) -> usize {
        let p = self.field.p as usize;
        if k < p {
            k
        } else {
            (k - 1) % (p - 1) + 1
        }
    }

    /// Builds an element from residues of u^0, u^1, ... of any length,
    /// folding high powers.
    pub fn element(&self, residues: &[u64]) -> FpuElement {
        let mut coeffs = vec![0u64; self.field.p as usize];
        for (k, &c) in residues.iter().enumerate() {
            let e = self.reduce_exponent(k);
            coeffs[e] = self.field.add(&coeffs[e], &(c % self.field.p));
        }
        FpuElement { p: self.field.p, coeffs }
    }
}

impl Ring for FpuRing {
    type Elem = FpuElement;

    fn zero(&self) -> FpuElement {
        self.element(&[])
    }
    fn one(&self) -> FpuElement {
        self.element(&[1])
    }
    fn add(&self, a: &FpuElement, b: &FpuElement) -> FpuElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.field.add(x, y)).collect();
        FpuElement { p: self.field.p, coeffs }
    }
    fn sub(&self, a: &FpuElement, b: &FpuElement) -> FpuElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.field.sub(x, y)).collect();
        FpuElement { p: self.field.p, coeffs }
    }
    fn mul(&self, a: &FpuElement, b: &FpuElement) -> FpuElement {
        let p = self.field.p as usize;
        let mut wide = vec![0u64; 2 * p - 1];
        for (i, x) in a.coeffs.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, y) in b.coeffs.iter().enumerate() {
                wide[i + j] = self.field.add(&wide[i + j], &self.field.mul(x, y));
            }
        }
        self.element(&wide)
    }
    fn neg(&self, a: &FpuElement) -> FpuElement {
        let coeffs = a.coeffs.iter().map(|x| self.field.neg(x)).collect();
        FpuElement { p: self.field.p, coeffs }
    }
    fn integer(&self, n: i64) -> FpuElement {
        self.element(&[self.field.integer(n)])
    }
}

/// Image of a polynomial in u over Q in F_p[u]/(u^p - u).
pub fn fpu_reduce(q: &QPoly, p: u64) -> Result<FpuElement> {
    let ring = FpuRing::new(p)?;
    let residues = q.coeffs().iter().map(|c| ring.field.from_rational(c)).collect::<Result<Vec<_>>>()?;
    Ok(ring.element(&residues))
}

/// Coefficient-wise reduction of a polynomial in X over Q[u].
pub fn fpu_reduce_x_poly(q: &QuPoly, p: u64) -> Result<Polynomial<FpuElement>> {
    let ring = FpuRing::new(p)?;
    let coeffs = q.coeffs().iter().map(|c| fpu_reduce(c, p)).collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(&ring, coeffs))
}
