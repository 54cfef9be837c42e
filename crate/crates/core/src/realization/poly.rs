//! Sparse integer polynomials in one and two variables.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    /// The divisor's leading coefficient does not divide the running
    /// remainder's leading coefficient, so the quotient leaves `Z[t]`.
    #[error("quotient is not integral at degree {degree}")]
    NotIntegral { degree: u32 },
}

/// `C(n, k)` by exact multiplicative accumulation.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, value: BigInt) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        btree_map::Entry::Vacant(e) => {
            e.insert(value);
        }
        btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += value;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// The variable has no name of its own; [`IntPolynomial::display`] picks one
/// when printing (`t` for Poincaré polynomials, `x` for the formal identity).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: BTreeMap<u32, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: u32) -> Self {
        let mut p = Self::zero();
        accumulate(&mut p.coeffs, exp, coeff.into());
        p
    }

    /// Dense constructor, lowest degree first.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().zip(0u32..).map(|(c, e)| (e, c.into())))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            accumulate(&mut p.coeffs, e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coefficient(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    fn leading(&self) -> Option<(u32, &BigInt)> {
        self.coeffs.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `t = 1`, the sum of all coefficients.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Schoolbook long division over `Z`, returning `(quotient, remainder)`.
    ///
    /// Fails unless every step's quotient coefficient is an integer; with a
    /// divisor whose leading coefficient is `±1` it always succeeds.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Result<(Self, Self), PolyError> {
        let (dd, lc) = divisor.leading().ok_or(PolyError::DivisionByZero)?;
        let mut quotient = Self::zero();
        let mut rem = self.clone();
        while let Some((rd, rc)) = rem.leading() {
            if rd < dd {
                break;
            }
            if !(rc % lc).is_zero() {
                return Err(PolyError::NotIntegral { degree: rd });
            }
            let q = rc / lc;
            let shift = rd - dd;
            for (e, c) in divisor.terms() {
                accumulate(&mut rem.coeffs, e + shift, -(c * &q));
            }
            accumulate(&mut quotient.coeffs, shift, q);
        }
        Ok((quotient, rem))
    }

    pub fn display(&self, var: char) -> DisplayPoly<'_> {
        DisplayPoly { poly: self, var }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            accumulate(&mut out.coeffs, *e, c.clone());
        }
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        for (k, c) in &rhs.coeffs {
            accumulate(&mut self.coeffs, *k, c.clone());
        }
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                accumulate(&mut out.coeffs, ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

pub struct DisplayPoly<'a> {
    poly: &'a IntPolynomial,
    var: char,
}

impl fmt::Display for DisplayPoly<'_> {
    /// Increasing degree, e.g. `1 + t^2 + 4t^3 - t^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.poly.terms().enumerate() {
            let mag = c.magnitude();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{e}", self.var)?,
            }
        }
        Ok(())
    }
}

/// Bivariate polynomial in `(u, v)`; the coefficient of `u^p v^q` is the
/// Hodge number `h^{p,q}` for realized motives.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPolynomial {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl BiPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, p: u32, q: u32) -> Self {
        let mut out = Self::zero();
        accumulate(&mut out.coeffs, (p, q), coeff.into());
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            accumulate(&mut out.coeffs, k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, p: u32, q: u32) -> BigInt {
        self.coeffs.get(&(p, q)).cloned().unwrap_or_default()
    }

    /// Nonzero terms ordered by `(p, q)`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// Largest `p` or `q` occurring, i.e. the side length of the diamond.
    pub fn dimension(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(p, q)| p.max(q)).max()
    }

    /// Total degree `p + q` of the top term.
    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(p, q)| p + q).max()
    }

    /// `h^{p,q} = h^{q,p}` for every pair.
    pub fn is_conjugation_symmetric(&self) -> bool {
        self.terms()
            .all(|((p, q), c)| self.coeffs.get(&(q, p)) == Some(c))
    }

    /// `h^{p,q} = h^{n-p,n-q}` for every pair (Serre/Poincaré duality).
    pub fn is_dual_symmetric(&self, n: u32) -> bool {
        self.terms()
            .all(|((p, q), c)| p <= n && q <= n && self.coeffs.get(&(n - p, n - q)) == Some(c))
    }

    /// Substitutes `u = v = t`.
    pub fn specialize_diagonal(&self) -> IntPolynomial {
        IntPolynomial::from_terms(self.terms().map(|((p, q), c)| (p + q, c.clone())))
    }

    pub fn times_uv_power(&self, c: u32) -> Self {
        BiPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(p, q), v)| ((p + c, q + c), v.clone()))
                .collect(),
        }
    }
}

impl Add for &BiPolynomial {
    type Output = BiPolynomial;

    fn add(self, rhs: &BiPolynomial) -> BiPolynomial {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            accumulate(&mut out.coeffs, *k, c.clone());
        }
        out
    }
}

impl Add for BiPolynomial {
    type Output = BiPolynomial;

    fn add(mut self, rhs: BiPolynomial) -> BiPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&BiPolynomial> for BiPolynomial {
    fn add_assign(&mut self, rhs: &BiPolynomial) {
        for (k, c) in &rhs.coeffs {
            accumulate(&mut self.coeffs, *k, c.clone());
        }
    }
}

impl Mul for &BiPolynomial {
    type Output = BiPolynomial;

    fn mul(self, rhs: &BiPolynomial) -> BiPolynomial {
        let mut out = BiPolynomial::zero();
        for (&(pa, qa), ca) in &self.coeffs {
            for (&(pb, qb), cb) in &rhs.coeffs {
                accumulate(&mut out.coeffs, (pa + pb, qa + qb), ca * cb);
            }
        }
        out
    }
}

impl Mul for BiPolynomial {
    type Output = BiPolynomial;

    fn mul(self, rhs: BiPolynomial) -> BiPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for BiPolynomial {
    /// Terms by increasing total degree, then decreasing power of `u`:
    /// `1 + 2*u + 2*v + u*v`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&((p, q), _)| (p + q, core::cmp::Reverse(p)));
        for (n, ((p, q), c)) in terms.into_iter().enumerate() {
            let mag = c.magnitude();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut first = true;
            if (p, q) == (0, 0) || !mag.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for (var, e) in [('u', p), ('v', q)] {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().copied())
    }

    /// Pascal's rule, independent of the multiplicative formula.
    fn pascal_row(n: usize) -> Vec<u128> {
        let mut row = alloc::vec![1u128];
        for _ in 0..n {
            let mut next = alloc::vec![1u128; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row
    }

    #[test]
    fn binomial_matches_pascal() {
        for n in 0..=60u32 {
            let row = pascal_row(n as usize);
            for k in 0..=n {
                assert_eq!(binomial(n, k), BigUint::from(row[k as usize]), "C({n},{k})");
            }
            assert!(binomial(n, n + 1).is_zero());
        }
        // C(60, 30) = 118264581564861424
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
        assert_eq!(binomial(4, 5), BigUint::zero());
    }

    #[test]
    fn arithmetic_drops_cancelled_terms() {
        let a = poly(&[1, 1]);
        let b = poly(&[1, -1]);
        assert_eq!(&a * &b, poly(&[1, 0, -1]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!((&a + &b).degree(), Some(0));
        assert_eq!(a.pow(3), poly(&[1, 3, 3, 1]));
        assert_eq!(a.pow(0), IntPolynomial::one());
    }

    #[test]
    fn long_division_exact_and_inexact() {
        // (1 - t^2)(1 - t^4) = 1 - t^2 - t^4 + t^6
        let den = &poly(&[1, 0, -1]) * &poly(&[1, 0, 0, 0, -1]);
        let q = poly(&[3, -1, 4, 1, 5]);
        let (quot, rem) = (&q * &den).div_rem(&den).unwrap();
        assert_eq!(quot, q);
        assert!(rem.is_zero());

        let (quot, rem) = poly(&[1, 0, 0, 1]).div_rem(&poly(&[1, 1])).unwrap();
        assert_eq!(quot, poly(&[1, -1, 1]));
        assert!(rem.is_zero());

        let (quot, rem) = poly(&[2, 0, 1]).div_rem(&poly(&[1, 1])).unwrap();
        assert_eq!(quot, poly(&[-1, 1]));
        assert_eq!(rem, poly(&[3]));

        assert_eq!(
            poly(&[0, 1]).div_rem(&IntPolynomial::zero()),
            Err(PolyError::DivisionByZero)
        );
        assert_eq!(
            poly(&[0, 0, 1]).div_rem(&poly(&[0, 2])),
            Err(PolyError::NotIntegral { degree: 2 })
        );
    }

    #[test]
    fn display_univariate() {
        assert_eq!(
            poly(&[1, 0, 1, 4, 1, 0, 1]).display('t').to_string(),
            "1 + t^2 + 4t^3 + t^4 + t^6"
        );
        assert_eq!(poly(&[0, -1, 0, 2]).display('x').to_string(), "-x + 2x^3");
        assert_eq!(poly(&[-3]).display('x').to_string(), "-3");
        assert_eq!(IntPolynomial::zero().display('t').to_string(), "0");
    }

    #[test]
    fn display_bivariate() {
        assert_eq!(BiPolynomial::monomial(1, 1, 1).to_string(), "u*v");
        let p = BiPolynomial::from_terms([
            ((0, 0), BigInt::from(1)),
            ((1, 0), BigInt::from(2)),
            ((0, 1), BigInt::from(2)),
            ((1, 1), BigInt::from(1)),
            ((2, 3), BigInt::from(-7)),
        ]);
        assert_eq!(p.to_string(), "1 + 2*u + 2*v + u*v - 7*u^2*v^3");
        assert_eq!(BiPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn bivariate_symmetries() {
        let p = BiPolynomial::from_terms([
            ((0, 0), BigInt::from(1)),
            ((1, 0), BigInt::from(2)),
            ((0, 1), BigInt::from(2)),
            ((1, 1), BigInt::from(1)),
        ]);
        assert!(p.is_conjugation_symmetric());
        assert!(p.is_dual_symmetric(1));
        assert!(!p.is_dual_symmetric(2));
        assert_eq!(p.dimension(), Some(1));
        assert_eq!(p.specialize_diagonal(), poly(&[1, 4, 1]));
        assert_eq!(p.times_uv_power(2).coefficient(3, 2), BigInt::from(2));
    }
}
