//! Exact rational arithmetic and falling-factorial binomial coefficients.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// `numer/denom` for small literals. Panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_int(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The value as a `BigInt` when it is integral.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational::from_int(v)
    }
}

impl From<u32> for Rational {
    fn from(v: u32) -> Self {
        Rational::from_int(v)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::from_int(v)
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse =
            |t: &str| t.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("invalid rational `{s}`")));
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse(n)?, parse(d)?),
            None => Ok(Rational::from_int(parse(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// `m!` as a big integer.
pub fn factorial(m: u32) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Falling-factorial binomial `ℓ(ℓ-1)…(ℓ-m+1)/m!`, defined for every integer
/// `ℓ` including negative ones. `binom_int(ℓ, 0) = 1`.
pub fn binom_int(ell: i64, m: i64) -> Result<Rational> {
    binom_rational(&Rational::from_int(ell), m)
}

/// [`binom_int`] with a rational top argument.
pub fn binom_rational(ell: &Rational, m: i64) -> Result<Rational> {
    if m < 0 {
        return Err(Error::Domain(format!("binomial with negative bottom index {m}")));
    }
    let mut acc = Rational::one();
    for j in 0..m {
        acc = acc * (ell - Rational::from_int(j));
    }
    Ok(acc / Rational::from_int(factorial(m as u32)))
}

/// Integer-valued binomial as a `BigInt`. Only for integral top arguments.
pub fn binom_big(ell: i64, m: i64) -> Result<BigInt> {
    let b = binom_int(ell, m)?;
    Ok(b.to_integer().expect("integer binomial is integral"))
}

/// `binom(L, m) = L(L-1)…(L-m+1)/m!` expanded as a polynomial.
///
/// The product is accumulated as `binom(L, j+1) = binom(L, j)·(L-j)/(j+1)`, so
/// every intermediate stays a normalized binomial polynomial.
pub fn binom_poly(arg: &MultiPoly, m: i64) -> Result<MultiPoly> {
    if m < 0 {
        return Err(Error::Domain(format!("binomial with negative bottom index {m}")));
    }
    let nvars = arg.nvars();
    let mut acc = MultiPoly::constant(nvars, Rational::one());
    for j in 0..m {
        let factor = arg.add_constant(&Rational::from_int(-j));
        acc = acc.mul(&factor)?;
        acc.scale_in_place(&Rational::frac(1, j + 1));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_small_values() {
        assert_eq!(binom_int(5, 3).unwrap(), Rational::from(10));
        assert_eq!(binom_int(-3, 2).unwrap(), Rational::from(6));
        assert_eq!(binom_int(-3, 2).unwrap(), binom_int(3 + 2 - 1, 2).unwrap());
        assert_eq!(binom_int(2, 5).unwrap(), Rational::zero());
        assert_eq!(binom_int(-7, 0).unwrap(), Rational::one());
        assert!(matches!(binom_int(3, -1), Err(Error::Domain(_))));
    }

    #[test]
    fn sign_identity_exhaustive() {
        for ell in -50i64..=50 {
            for m in 0..=12i64 {
                let lhs = binom_int(-ell, m).unwrap();
                let sign = if m % 2 == 0 { 1 } else { -1 };
                let rhs = binom_int(ell + m - 1, m).unwrap() * Rational::from(sign);
                assert_eq!(lhs, rhs, "ell={ell} m={m}");
                assert!(lhs.is_integer());
            }
        }
    }

    #[test]
    fn pascal_recurrence() {
        for ell in -30i64..=30 {
            for m in 1..=10i64 {
                let lhs = binom_int(ell, m).unwrap();
                let rhs = binom_int(ell - 1, m).unwrap() + binom_int(ell - 1, m - 1).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn rational_normalizes() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::new(0, -9).unwrap(), Rational::zero());
        assert_eq!(Rational::zero().denom(), &BigInt::one());
        assert!(Rational::new(1, 0).is_err());
        assert_eq!("-10/4".parse::<Rational>().unwrap(), Rational::frac(-5, 2));
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn binom_poly_examples() {
        let x1 = MultiPoly::var(1, 0);
        let got = binom_poly(&x1, 2).unwrap();
        let expected: MultiPoly = "1/2 * x1^2 + -1/2 * x1".parse().unwrap();
        assert_eq!(got, expected);

        let c = MultiPoly::constant(3, Rational::from(-4));
        let got = binom_poly(&c, 3).unwrap();
        assert_eq!(got, MultiPoly::constant(3, binom_int(-4, 3).unwrap()));

        let lin: MultiPoly = "x1 + x2 + -1".parse().unwrap();
        assert_eq!(binom_poly(&lin, 1).unwrap(), lin);
        assert_eq!(binom_poly(&lin, 5).unwrap().total_degree(), Some(5));
    }
}
