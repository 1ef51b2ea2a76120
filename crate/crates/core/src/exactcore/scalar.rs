use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `a + b·√2` of the quadratic field ℚ(√2).
///
/// Both parts are reduced arbitrary-precision fractions, so derived equality
/// is exact field equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    rational: BigRational,
    root2: BigRational,
}

impl Scalar {
    pub fn new(rational: BigRational, root2: BigRational) -> Self {
        Scalar { rational, root2 }
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(v)), BigRational::zero())
    }

    /// The rational number `num/den`.
    pub fn frac(num: i64, den: i64) -> Self {
        Scalar::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::new(r, BigRational::zero())
    }

    pub fn sqrt2() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        Scalar::new(
            BigRational::zero(),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        )
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn root2_part(&self) -> &BigRational {
        &self.root2
    }

    pub fn is_rational(&self) -> bool {
        self.root2.is_zero()
    }

    /// The Galois conjugate `a − b·√2`.
    pub fn conjugate(&self) -> Self {
        Scalar::new(self.rational.clone(), -self.root2.clone())
    }

    /// The field norm `a² − 2b²`.
    pub fn norm(&self) -> BigRational {
        let two = BigRational::from_integer(BigInt::from(2));
        &self.rational * &self.rational - two * &self.root2 * &self.root2
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // √2 is irrational, so the norm of a nonzero element never vanishes.
        let norm = self.norm();
        Some(Scalar::new(&self.rational / &norm, -&self.root2 / &norm))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        let inv = rhs.inverse().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact integer value, if this scalar is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_rational() && self.rational.is_integer() {
            Some(self.rational.to_integer())
        } else {
            None
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.root2.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.rational + &rhs.rational, &self.root2 + &rhs.root2)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.rational - &rhs.rational, &self.root2 - &rhs.root2)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        let two = BigInt::from(2);
        let rational = &self.rational * &rhs.rational
            + (&self.root2 * &rhs.root2) * BigRational::from_integer(two);
        let root2 = &self.rational * &rhs.root2 + &self.root2 * &rhs.rational;
        Scalar::new(rational, root2)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero in ℚ(√2)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar { (&self).$method(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar { (&self).$method(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar { self.$method(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.rational, -self.root2)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.rational.clone(), -self.root2.clone())
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.rational += &rhs.rational;
        self.root2 += &rhs.root2;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.rational -= &rhs.rational;
        self.root2 -= &rhs.root2;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders `p/q`, `r/s√2` or `p/q+r/s√2`; integers drop the denominator.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.root2.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.rational)),
            (true, false) => write!(f, "{}√2", fmt_rational(&self.root2)),
            (false, false) => {
                let sign = if self.root2.is_negative() { "-" } else { "+" };
                write!(
                    f,
                    "{}{}{}√2",
                    fmt_rational(&self.rational),
                    sign,
                    fmt_rational(&self.root2.abs())
                )
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        let s = s.trim();
        let Some(body) = s.strip_suffix("√2") else {
            return Ok(Scalar::from_rational(parse_rational(s)?));
        };
        // The separator is the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => {
                let rational = parse_rational(&body[..i])?;
                let mut root2 = parse_rational(&body[i + 1..])?;
                if body[i..].starts_with('-') {
                    root2 = -root2;
                }
                Ok(Scalar::new(rational, root2))
            }
            None => Ok(Scalar::new(BigRational::zero(), parse_rational(body)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(Scalar::sqrt2() * Scalar::sqrt2(), Scalar::from_int(2));
        assert_eq!(Scalar::inv_sqrt2() * Scalar::sqrt2(), Scalar::one());
    }

    #[test]
    fn inverse_of_mixed_element() {
        let a = Scalar::from_int(3) + Scalar::sqrt2();
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Scalar::one());
        // 1/(3+√2) = (3−√2)/7
        assert_eq!(inv, (Scalar::from_int(3) - Scalar::sqrt2()) * Scalar::frac(1, 7));
        assert!(Scalar::zero().inverse().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::frac(-3, 16).to_string(), "-3/16");
        assert_eq!(Scalar::from_int(4).to_string(), "4");
        assert_eq!(Scalar::inv_sqrt2().to_string(), "1/2√2");
        let mixed = Scalar::frac(1, 3) - Scalar::sqrt2() * Scalar::frac(2, 5);
        assert_eq!(mixed.to_string(), "1/3-2/5√2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["-3/16", "0", "7", "1/2√2", "-1/2√2", "1/3-2/5√2", "-4+3√2"] {
            let v: Scalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }
}
