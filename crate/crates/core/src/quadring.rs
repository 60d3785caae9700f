//! Exact arithmetic in the field Q(sqrt 2).
//!
//! A [`QuadRat`] is stored as `(u + v*sqrt2) / den` with `den > 0` and
//! `gcd(u, v, den) = 1`, so two values are equal exactly when their fields
//! are equal. Ordering is decided by sign casework on the integer parts;
//! nothing here ever touches floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRat {
    u: BigInt,
    v: BigInt,
    den: BigInt,
}

impl QuadRat {
    /// Builds `(u + v*sqrt2) / den` and brings it to canonical form.
    pub fn new(u: impl Into<BigInt>, v: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(u.into(), v.into(), den))
    }

    /// `u + v*sqrt2` with unit denominator.
    pub fn integral(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Self {
        Self { u: u.into(), v: v.into(), den: BigInt::one() }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::integral(n, 0)
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        Self::canonical(r.numer().clone(), BigInt::zero(), r.denom().clone())
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt2() -> Self {
        Self::integral(0, 1)
    }

    /// The fundamental unit `1 + sqrt2`.
    pub fn unit() -> Self {
        Self::integral(1, 1)
    }

    fn canonical(mut u: BigInt, mut v: BigInt, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            u = -u;
            v = -v;
            den = -den;
        }
        let g = u.gcd(&v).gcd(&den);
        if !g.is_one() {
            u /= &g;
            v /= &g;
            den /= &g;
        }
        Self { u, v, den }
    }

    pub fn u(&self) -> &BigInt {
        &self.u
    }

    pub fn v(&self) -> &BigInt {
        &self.v
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// Re-canonicalizes; a no-op on any value produced by this module.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.u.clone(), self.v.clone(), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    /// The value as a rational, if the sqrt2 part vanishes.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.u.clone(), self.den.clone()))
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.u.clone())
    }

    /// Rational and sqrt2 coefficients: `self = rational + irrational * sqrt2`.
    pub fn parts(&self) -> (BigRational, BigRational) {
        (
            BigRational::new(self.u.clone(), self.den.clone()),
            BigRational::new(self.v.clone(), self.den.clone()),
        )
    }

    pub fn conj(&self) -> Self {
        Self { u: self.u.clone(), v: -&self.v, den: self.den.clone() }
    }

    /// Field norm `self * conj(self) = (u^2 - 2v^2) / den^2`.
    pub fn norm(&self) -> BigRational {
        let num = &self.u * &self.u - BigInt::from(2) * &self.v * &self.v;
        BigRational::new(num, &self.den * &self.den)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/x = conj(x) / norm(x) = den * (u - v sqrt2) / (u^2 - 2v^2)
        let n = &self.u * &self.u - BigInt::from(2) * &self.v * &self.v;
        Ok(Self::canonical(&self.den * &self.u, -(&self.den * &self.v), n))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    /// Exact integer power; negative exponents go through [`QuadRat::inverse`].
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Exact sign of the real number this value denotes.
    pub fn signum(&self) -> Ordering {
        // den > 0, so the sign is that of u + v sqrt2.
        sign_of_surd(&self.u, &self.v)
    }

    pub fn compare(&self, rhs: &Self) -> Ordering {
        (self - rhs).signum()
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }
}

/// Sign of `a + b*sqrt2` for integers `a`, `b`.
pub(crate) fn sign_of_surd(a: &BigInt, b: &BigInt) -> Ordering {
    let sa = a.sign_cmp();
    let sb = b.sign_cmp();
    match (sa, sb) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        // mixed signs: compare a^2 against 2b^2
        (Ordering::Greater, Ordering::Less) => (a * a).cmp(&(BigInt::from(2) * b * b)),
        (Ordering::Less, Ordering::Greater) => (BigInt::from(2) * b * b).cmp(&(a * a)),
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl PartialOrd for QuadRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadRat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl Add for &QuadRat {
    type Output = QuadRat;

    fn add(self, rhs: &QuadRat) -> QuadRat {
        if self.den == rhs.den {
            return QuadRat::canonical(&self.u + &rhs.u, &self.v + &rhs.v, self.den.clone());
        }
        QuadRat::canonical(
            &self.u * &rhs.den + &rhs.u * &self.den,
            &self.v * &rhs.den + &rhs.v * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &QuadRat {
    type Output = QuadRat;

    fn sub(self, rhs: &QuadRat) -> QuadRat {
        self + &(-rhs)
    }
}

impl Mul for &QuadRat {
    type Output = QuadRat;

    fn mul(self, rhs: &QuadRat) -> QuadRat {
        let u = &self.u * &rhs.u + BigInt::from(2) * &self.v * &rhs.v;
        let v = &self.u * &rhs.v + &self.v * &rhs.u;
        QuadRat::canonical(u, v, &self.den * &rhs.den)
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;

    fn neg(self) -> QuadRat {
        QuadRat { u: -&self.u, v: -&self.v, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: QuadRat) -> QuadRat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: &QuadRat) -> QuadRat {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for QuadRat {
    type Output = QuadRat;

    fn neg(self) -> QuadRat {
        -&self
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match (self.u.is_zero(), self.v.is_zero()) {
            (_, true) => self.u.to_string(),
            (true, false) => surd_term(&self.v, false),
            (false, false) => format!("{}{}", self.u, surd_term(&self.v, true)),
        };
        if self.den.is_one() {
            f.write_str(&body)
        } else if self.v.is_zero() {
            write!(f, "{}/{}", body, self.den)
        } else {
            write!(f, "({})/{}", body, self.den)
        }
    }
}

fn surd_term(v: &BigInt, signed: bool) -> String {
    let sign = if v.is_negative() { "-" } else if signed { "+" } else { "" };
    let mag = v.abs();
    if mag.is_one() {
        format!("{sign}√2")
    } else {
        format!("{sign}{mag}√2")
    }
}
