//! Exact values of `L_{A,chi,P}` at non-positive integers and the parametric
//! family `p_m(u) = Psi_chi((X (X + u))^m) / m`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{poly_power, QPoly, QuPoly, Rational, Ring, Q, QU};
use crate::periodic::PeriodicFunction;
use crate::psi::PsiTable;

/// Inputs of an exact special value `L_{A,chi,P}(1 - m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LValueRequest {
    pub chi: PeriodicFunction,
    pub poly: QPoly,
    pub offset_a: u64,
    pub m: u32,
}

impl LValueRequest {
    pub fn new(chi: PeriodicFunction, poly: QPoly, m: u32) -> Self {
        LValueRequest { chi, poly, offset_a: 1, m }
    }

    pub fn with_offset(mut self, offset_a: u64) -> Self {
        self.offset_a = offset_a;
        self
    }
}

/// `p_m(u)` for one `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPolynomial {
    pub m: u32,
    pub value: QPoly,
}

fn small_int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rejects a non-positive leading coefficient and any zero of P at a
/// positive integer up to `max(A, bound)`, where the bound comes from the
/// rational root theorem applied to an integer multiple of P.
pub fn validate_poly(poly: &QPoly, offset_a: u64) -> Result<()> {
    let lead = poly.leading().ok_or_else(|| Error::InvalidPolynomial("P is the zero polynomial".into()))?;
    if !lead.is_positive() {
        return Err(Error::InvalidPolynomial(format!("leading coefficient {lead} is not positive")));
    }
    if poly.degree() == Some(0) {
        return Err(Error::InvalidPolynomial("P must have degree at least 1".into()));
    }
    if offset_a == 0 {
        return Err(Error::Domain("offset A must be a positive integer".into()));
    }
    // a positive integer root of P divides the lowest nonzero coefficient of
    // the integer-scaled polynomial and is below the Cauchy bound
    let lcm = poly.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let lowest = poly
        .coeffs()
        .iter()
        .find(|c| !c.is_zero())
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer().abs())
        .unwrap_or_default();
    let lead_f = lead.to_f64().unwrap_or(f64::MAX);
    let cauchy =
        poly.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::MAX).abs() / lead_f).fold(0.0f64, f64::max) + 1.0;
    let root_bound = lowest.to_u64().unwrap_or(u64::MAX).min(cauchy.ceil().min(u64::MAX as f64) as u64);
    let vanishes_at = |n: u64| poly.eval(&small_int(n), &Q).is_zero();
    for n in 1..=root_bound.max(offset_a) {
        let candidate = n <= root_bound && (&lowest % BigInt::from(n)).is_zero();
        if (candidate || n <= offset_a) && vanishes_at(n) {
            return Err(Error::InvalidPolynomial(format!("P vanishes at n = {n}")));
        }
    }
    Ok(())
}

fn check_same_chi(chi: &PeriodicFunction, table: &PsiTable) -> Result<()> {
    if chi != table.chi() {
        return Err(Error::Domain(format!("Psi table was built for {} but chi is {chi}", table.chi())));
    }
    Ok(())
}

/// `sum_{n=from}^{to-1} chi(n) P'(n) P(n)^(m-1)`.
pub fn finite_correction(chi: &PeriodicFunction, poly: &QPoly, m: u32, from: u64, to: u64) -> Rational {
    let dp = poly.derivative(&Q);
    (from.max(1)..to)
        .filter(|&n| !chi.at(n).is_zero())
        .map(|n| {
            let x = small_int(n);
            chi.at(n) * dp.eval(&x, &Q) * num_traits::pow(poly.eval(&x, &Q), m as usize - 1)
        })
        .fold(Rational::zero(), |acc, v| acc + v)
}

/// `L_{A,chi,P}(1 - m) = -Psi_chi(P^m) / m - sum_{n<A} chi(n) P'(n) P(n)^(m-1)`.
pub fn l_negative(req: &LValueRequest, table: &PsiTable) -> Result<Rational> {
    check_same_chi(&req.chi, table)?;
    if req.m == 0 {
        return Err(Error::Domain("m must be a positive integer".into()));
    }
    validate_poly(&req.poly, req.offset_a)?;
    let power = poly_power(&req.poly, req.m, &Q);
    let psi = table.apply(&power)?;
    let main = -psi / small_int(req.m as u64);
    Ok(main - finite_correction(&req.chi, &req.poly, req.m, 1, req.offset_a))
}

/// Checks `L_{A1}(1-m) = L_{A2}(1-m) + sum_{n=A1}^{A2-1} chi(n) P'(n) P(n)^(m-1)`.
pub fn a_offset_consistency(
    chi: &PeriodicFunction,
    poly: &QPoly,
    table: &PsiTable,
    m: u32,
    a1: u64,
    a2: u64,
) -> Result<bool> {
    if a1 > a2 {
        return Err(Error::Domain(format!("offsets must satisfy A1 <= A2, got {a1} > {a2}")));
    }
    let l1 = l_negative(&LValueRequest::new(chi.clone(), poly.clone(), m).with_offset(a1), table)?;
    let l2 = l_negative(&LValueRequest::new(chi.clone(), poly.clone(), m).with_offset(a2), table)?;
    Ok(l1 == l2 + finite_correction(chi, poly, m, a1, a2))
}

/// Checks `L_{chi,cQ}(1-m) = c^m L_{chi,Q}(1-m)` for a positive rational c.
pub fn scaling_identity_check(
    chi: &PeriodicFunction,
    poly: &QPoly,
    c: &Rational,
    m: u32,
    table: &PsiTable,
) -> Result<bool> {
    if !c.is_positive() {
        return Err(Error::Domain(format!("scale {c} must be positive")));
    }
    let scaled = poly.scale(c, &Q);
    let lhs = l_negative(&LValueRequest::new(chi.clone(), scaled, m), table)?;
    let rhs = l_negative(&LValueRequest::new(chi.clone(), poly.clone(), m), table)?;
    Ok(lhs == num_traits::pow(c.clone(), m as usize) * rhs)
}

/// Both sides of the telescoped identity
/// `Psi(P(lN + X)^m) - Psi(P^m) = m sum_{n=1}^{lN} chi(n) P'(n) P(n)^(m-1)`.
pub fn telescoping_sides(table: &PsiTable, poly: &QPoly, m: u32, ell: u64) -> Result<(Rational, Rational)> {
    let chi = table.chi();
    let span = ell * chi.period() as u64;
    let shifted = poly.shift(&small_int(span), &Q);
    let lhs = table.apply(&poly_power(&shifted, m, &Q))? - table.apply(&poly_power(poly, m, &Q))?;
    let rhs = small_int(m as u64) * finite_correction(chi, poly, m, 1, span + 1);
    Ok((lhs, rhs))
}

/// `Psi_chi(shape^m) / m` for a polynomial in X over Q[u].
pub fn family_for_shape(shape: &QuPoly, m: u32, table: &PsiTable) -> Result<FamilyPolynomial> {
    if m == 0 {
        return Err(Error::Domain("m must be a positive integer".into()));
    }
    let power = poly_power(shape, m, &QU);
    let value = table.apply_qu(&power)?.scale(&small_int(m as u64).recip(), &Q);
    Ok(FamilyPolynomial { m, value })
}

/// `p_m(u) = Psi_chi((X (X + u))^m) / m`.
///
/// Uses `(X (X + u))^m = sum_k C(m, k) u^{m-k} X^{m+k}`, so the coefficient of
/// `u^{m-k}` is `C(m, k) Psi(X^{m+k}) / m`.
pub fn family_pm(table: &PsiTable, m: u32) -> Result<FamilyPolynomial> {
    if m == 0 {
        return Err(Error::Domain("m must be a positive integer".into()));
    }
    let m_us = m as usize;
    if 2 * m_us > table.max_degree() {
        return Err(Error::DegreeOverflow { degree: 2 * m_us, max_degree: table.max_degree() });
    }
    let mut coeffs = vec![Rational::zero(); m_us + 1];
    let mut binom = BigInt::one();
    for k in 0..=m_us {
        coeffs[m_us - k] = Rational::from_integer(binom.clone()) * table.moment(m_us + k)?;
        binom = binom * BigInt::from(m_us - k) / BigInt::from(k + 1);
    }
    let value = QPoly::from_rationals(coeffs).scale(&small_int(m as u64).recip(), &Q);
    Ok(FamilyPolynomial { m, value })
}

/// `p_1, ..., p_{m_max}`.
pub fn family_pm_sequence(table: &PsiTable, m_max: u32) -> Result<Vec<FamilyPolynomial>> {
    (1..=m_max).map(|m| family_pm(table, m)).collect()
}

/// `p_1, ..., p_{m_max}` for a shape, reusing each power for the next.
pub fn family_sequence(shape: &QuPoly, m_max: u32, table: &PsiTable) -> Result<Vec<FamilyPolynomial>> {
    if let Some(d) = shape.degree() {
        let needed = d * m_max as usize;
        if needed > table.max_degree() {
            return Err(Error::DegreeOverflow { degree: needed, max_degree: table.max_degree() });
        }
    }
    let mut power = QuPoly::constant(&QU, QU.one());
    (1..=m_max)
        .map(|m| {
            power = power.mul(shape, &QU);
            let value = table.apply_qu(&power)?.scale(&small_int(m as u64).recip(), &Q);
            Ok(FamilyPolynomial { m, value })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{bernoulli_numbers, rat};
    use crate::psi::psi_table;

    fn x_x1() -> QPoly {
        QPoly::from_ints(&[0, 1, 1])
    }

    #[test]
    fn worked_example_chi3() {
        let t = psi_table(&PeriodicFunction::chi3(), 20);
        let req = LValueRequest::new(PeriodicFunction::chi3(), x_x1(), 2);
        assert_eq!(l_negative(&req, &t).unwrap(), rat(-2, 3));
        let req = LValueRequest::new(PeriodicFunction::chi3(), QPoly::from_ints(&[0, 1]), 2);
        assert_eq!(l_negative(&req, &t).unwrap(), rat(0, 1));
    }

    #[test]
    fn riemann_zeta_at_negative_odd_integers() {
        let one = PeriodicFunction::one();
        let t = psi_table(&one, 8);
        let b = bernoulli_numbers(6);
        for m in [2u32, 4, 6] {
            let req = LValueRequest::new(one.clone(), QPoly::from_ints(&[0, 1]), m);
            let expected = -b[m as usize].clone() / rat(m as i64, 1);
            assert_eq!(l_negative(&req, &t).unwrap(), expected);
        }
        let req = LValueRequest::new(one.clone(), QPoly::from_ints(&[0, 1]), 2);
        assert_eq!(l_negative(&req, &t).unwrap(), rat(-1, 12));
    }

    #[test]
    fn invalid_polynomials() {
        let chi = PeriodicFunction::chi3();
        let t = psi_table(&chi, 10);
        let neg = LValueRequest::new(chi.clone(), QPoly::from_ints(&[0, 1, -1]), 1);
        assert!(matches!(l_negative(&neg, &t), Err(Error::InvalidPolynomial(_))));
        // (X - 2)(X + 1)
        let root2 = LValueRequest::new(chi.clone(), QPoly::from_ints(&[-2, -1, 1]), 1);
        assert!(matches!(l_negative(&root2, &t), Err(Error::InvalidPolynomial(_))));
        // X - 7/2 has no integer root
        let half = LValueRequest::new(chi.clone(), QPoly::from_rationals(vec![rat(-7, 2), rat(1, 1)]), 1);
        assert!(l_negative(&half, &t).is_ok());
        let big = LValueRequest::new(chi.clone(), x_x1(), 6);
        assert!(matches!(l_negative(&big, &t), Err(Error::DegreeOverflow { .. })));
        let wrong_chi = LValueRequest::new(PeriodicFunction::chi4(), x_x1(), 1);
        assert!(matches!(l_negative(&wrong_chi, &t), Err(Error::Domain(_))));
    }

    #[test]
    fn offset_consistency_examples() {
        let c3 = PeriodicFunction::chi3();
        let t3 = psi_table(&c3, 12);
        assert!(a_offset_consistency(&c3, &x_x1(), &t3, 2, 1, 4).unwrap());
        assert!(a_offset_consistency(&c3, &x_x1(), &t3, 2, 3, 3).unwrap());
        let c4 = PeriodicFunction::chi4();
        let t4 = psi_table(&c4, 12);
        assert!(a_offset_consistency(&c4, &QPoly::from_ints(&[1, 0, 1]), &t4, 3, 1, 5).unwrap());
    }

    #[test]
    fn offset_changes_value_by_prefix() {
        let c3 = PeriodicFunction::chi3();
        let t3 = psi_table(&c3, 12);
        let base = l_negative(&LValueRequest::new(c3.clone(), x_x1(), 2), &t3).unwrap();
        let shifted = l_negative(&LValueRequest::new(c3.clone(), x_x1(), 2).with_offset(3), &t3).unwrap();
        // chi(1) P'(1) P(1) + chi(2) P'(2) P(2) = 3*2 - 5*6 = -24
        assert_eq!(base - shifted, rat(-24, 1));
    }

    #[test]
    fn scaling_examples() {
        let c3 = PeriodicFunction::chi3();
        let t3 = psi_table(&c3, 12);
        assert!(scaling_identity_check(&c3, &x_x1(), &rat(1, 1), 2, &t3).unwrap());
        assert!(scaling_identity_check(&c3, &x_x1(), &rat(2, 1), 2, &t3).unwrap());
        let c4 = PeriodicFunction::chi4();
        let t4 = psi_table(&c4, 12);
        assert!(scaling_identity_check(&c4, &QPoly::from_ints(&[0, 1]), &rat(3, 1), 3, &t4).unwrap());
    }

    #[test]
    fn family_examples_follow_the_sign_convention() {
        let t = psi_table(&PeriodicFunction::chi3(), 16);
        let u = |c: &[(i64, i64)]| QPoly::from_rationals(c.iter().map(|&(n, d)| rat(n, d)).collect());
        assert_eq!(family_pm(&t, 1).unwrap().value, u(&[(0, 1), (-1, 3)]));
        assert_eq!(family_pm(&t, 2).unwrap().value, u(&[(0, 1), (2, 3)]));
        assert_eq!(family_pm(&t, 4).unwrap().value, u(&[(0, 1), (98, 3), (0, 1), (-10, 3)]));
    }

    #[test]
    fn family_sequence_matches_single_terms() {
        let t = psi_table(&PeriodicFunction::chi4(), 20);
        let seq = family_sequence(&QuPoly::x_times_x_plus_u(), 10, &t).unwrap();
        for f in &seq {
            assert_eq!(f, &family_pm(&t, f.m).unwrap());
        }
        assert!(matches!(family_sequence(&QuPoly::x_times_x_plus_u(), 11, &t), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn family_is_minus_l_value_at_integer_u() {
        // p_m(u) is the negative of L_{chi, X(X+u)}(1-m)
        let chi = PeriodicFunction::chi3();
        let t = psi_table(&chi, 12);
        for m in 1..=5u32 {
            let p = family_pm(&t, m).unwrap().value;
            for uval in 1..4i64 {
                let req = LValueRequest::new(chi.clone(), QPoly::from_ints(&[0, uval, 1]), m);
                assert_eq!(-p.eval(&rat(uval, 1), &Q), l_negative(&req, &t).unwrap());
            }
        }
    }
}
