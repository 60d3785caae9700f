//! Generator pairs `(r, s)` and Pythagorean triples with a fixed leg gap.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pell::{exact_sqrt, PellSolution};

/// Euclid generator pair; the triple has legs `r^2 - s^2`, `2rs` and hypotenuse `r^2 + s^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamPair {
    pub r: BigInt,
    pub s: BigInt,
}

impl ParamPair {
    pub fn new(r: impl Into<BigInt>, s: impl Into<BigInt>) -> Self {
        Self { r: r.into(), s: s.into() }
    }

    /// Coprime with opposite parity; only meaningful for positive pairs.
    pub fn is_euclid_primitive(&self) -> bool {
        self.r.gcd(&self.s).is_one() && (&self.r + &self.s).is_odd()
    }
}

/// Leg-sorted triple `(x, y, z)` with `y - x = gap`.
///
/// `is_virtual` marks a non-positive smaller leg, e.g. `(-4, 3, 5)` for gap 7.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PythTriple {
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
    pub gap: u64,
    pub is_virtual: bool,
}

impl PythTriple {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>, gap: u64) -> Result<Self> {
        let (x, y, z) = (x.into(), y.into(), z.into());
        if &y - &x != BigInt::from(gap) {
            return Err(Error::GapMismatch { a: x, b: y, gap });
        }
        debug_assert_eq!(&x * &x + &y * &y, &z * &z);
        let is_virtual = !x.is_positive();
        Ok(Self { x, y, z, gap, is_virtual })
    }

    /// Has a zero leg, like `(0, 1, 1)`.
    pub fn is_degenerate(&self) -> bool {
        self.x.is_zero() || self.y.is_zero()
    }
}

impl fmt::Display for PythTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// `(r, s) = (p + q, q)`.
pub fn pell_to_params(sol: &PellSolution) -> ParamPair {
    ParamPair { r: sol.p() + sol.q(), s: sol.q().clone() }
}

/// The triple generated by `pair`, with legs sorted so that `y = x + gap`.
///
/// When both legs come out negative (orbit points left of the virtual
/// anchor) they are reflected to the positive triple with the same `z`.
pub fn params_to_triple(pair: &ParamPair, gap: u64) -> Result<PythTriple> {
    let (r, s) = (&pair.r, &pair.s);
    let mut a = r * r - s * s;
    let mut b = BigInt::from(2) * r * s;
    let z = r * r + s * s;
    if (&a - &b).abs() != BigInt::from(gap) {
        return Err(Error::GapMismatch { a, b, gap });
    }
    if a.is_negative() && b.is_negative() {
        a = -a;
        b = -b;
    }
    let (x, y) = if a < b { (a, b) } else { (b, a) };
    PythTriple::new(x, y, z, gap)
}

/// Real (positive smaller leg) and `gcd(x, y, z) = 1`.
pub fn is_primitive_triple(t: &PythTriple) -> bool {
    t.x >= BigInt::one() && t.x.gcd(&t.y).gcd(&t.z).is_one()
}

/// Companion square root for a hypotenuse candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Companion {
    /// `d` with `d^2 = 2z^2 - gap^2`.
    pub d: BigInt,
    /// Smaller leg `(d - gap) / 2`.
    pub smaller_leg: BigInt,
}

/// `d = sqrt(2z^2 - gap^2)` when that is a perfect square exceeding `gap`.
pub fn companion_square(z: &BigInt, gap: u64) -> Option<Companion> {
    let g = BigInt::from(gap);
    let d = exact_sqrt(&(BigInt::from(2) * z * z - &g * &g))?;
    if d <= g {
        return None;
    }
    let smaller_leg = (&d - &g) / 2;
    Some(Companion { d, smaller_leg })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(pair: (i64, i64), gap: u64) -> PythTriple {
        params_to_triple(&ParamPair::new(pair.0, pair.1), gap).unwrap()
    }

    #[test]
    fn pell_to_params_examples() {
        for ((p, q), (r, s)) in [((1, 2), (3, 2)), ((3, 1), (4, 1)), ((5, 3), (8, 3))] {
            let sol = PellSolution::new(p, q, 7, 1).unwrap();
            assert_eq!(pell_to_params(&sol), ParamPair::new(r, s));
        }
    }

    #[test]
    fn params_to_triple_examples() {
        assert_eq!(triple((3, 2), 7).to_string(), "(5,12,13)");
        assert_eq!(triple((8, 3), 7).to_string(), "(48,55,73)");
        let v = triple((2, -1), 7);
        assert_eq!(v.to_string(), "(-4,3,5)");
        assert!(v.is_virtual);
        assert!(!triple((3, 2), 7).is_virtual);
    }

    #[test]
    fn negative_legs_are_reflected() {
        // (p, q) = (-5, 4) sits at k = -1 on the seed-13 orbit
        let t = triple((-1, 4), 7);
        assert_eq!(t.to_string(), "(8,15,17)");
        assert!(!t.is_virtual);
        let dual = triple((1, 2), 7);
        assert_eq!(dual.to_string(), "(-3,4,5)");
    }

    #[test]
    fn gap_mismatch_is_an_error() {
        assert!(matches!(
            params_to_triple(&ParamPair::new(2, 1), 7),
            Err(Error::GapMismatch { .. })
        ));
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive_triple(&PythTriple::new(5, 12, 13, 7).unwrap()));
        assert!(!is_primitive_triple(&PythTriple::new(-4, 3, 5, 7).unwrap()));
        assert!(!is_primitive_triple(&PythTriple::new(21, 28, 35, 7).unwrap()));
        assert!(!is_primitive_triple(&PythTriple::new(0, 1, 1, 1).unwrap()));
    }

    #[test]
    fn companion_examples() {
        let c = companion_square(&13.into(), 7).unwrap();
        assert_eq!((c.d, c.smaller_leg), (17.into(), 5.into()));
        let c = companion_square(&73.into(), 7).unwrap();
        assert_eq!((c.d, c.smaller_leg), (103.into(), 48.into()));
        assert_eq!(companion_square(&14.into(), 7), None);
        // d = 1 is a square but not above the gap
        assert_eq!(companion_square(&5.into(), 7), None);
        assert_eq!(companion_square(&1.into(), 1), None);
    }

    #[test]
    fn euclid_primitive_pairs() {
        assert!(ParamPair::new(3, 2).is_euclid_primitive());
        assert!(!ParamPair::new(3, 1).is_euclid_primitive());
        assert!(!ParamPair::new(6, 4).is_euclid_primitive());
    }
}
