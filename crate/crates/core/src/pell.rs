//! Solutions of `p^2 - 2q^2 = +-N`.
//!
//! Every solution with `p + q*sqrt2 > 0` lies on the orbit of exactly one
//! fundamental solution under multiplication by the unit `1 + sqrt2`. The
//! fundamental solutions are the ones in the half-open interval
//! `[1 + sqrt2, (1 + sqrt2)^2)`; they carry orbit index `k = 1`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::quadring::QuadRat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormSign {
    Plus,
    Minus,
}

impl NormSign {
    pub fn flip(self) -> Self {
        match self {
            NormSign::Plus => NormSign::Minus,
            NormSign::Minus => NormSign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            NormSign::Plus => 1,
            NormSign::Minus => -1,
        }
    }
}

impl fmt::Display for NormSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormSign::Plus => "+",
            NormSign::Minus => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// A point `(p, q)` on an orbit of `p^2 - 2q^2 = +-n`, with `p + q*sqrt2 > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PellSolution {
    p: BigInt,
    q: BigInt,
    norm_sign: NormSign,
    k: i64,
    n: u64,
}

impl PellSolution {
    /// Checks both invariants and derives the norm sign.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, n: u64, k: i64) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        let norm = &p * &p - BigInt::from(2) * &q * &q;
        let target = BigInt::from(n);
        let norm_sign = if norm == target {
            NormSign::Plus
        } else if norm == -&target {
            NormSign::Minus
        } else {
            return Err(Error::NotASolution { p, q, n });
        };
        if !QuadRat::integral(p.clone(), q.clone()).is_positive() {
            return Err(Error::NotASolution { p, q, n });
        }
        Ok(Self { p, q, norm_sign, k, n })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn norm_sign(&self) -> NormSign {
        self.norm_sign
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `p + q*sqrt2`.
    pub fn value(&self) -> QuadRat {
        QuadRat::integral(self.p.clone(), self.q.clone())
    }

    /// Multiplies (forward) or divides (backward) by `1 + sqrt2`.
    pub fn step(&self, direction: Direction) -> Self {
        let (p, q, k) = match direction {
            Direction::Forward => (&self.p + BigInt::from(2) * &self.q, &self.p + &self.q, self.k + 1),
            Direction::Backward => (BigInt::from(2) * &self.q - &self.p, &self.p - &self.q, self.k - 1),
        };
        let next = Self { p, q, norm_sign: self.norm_sign.flip(), k, n: self.n };
        debug_assert!(next.holds());
        next
    }

    fn holds(&self) -> bool {
        let norm = &self.p * &self.p - BigInt::from(2) * &self.q * &self.q;
        norm == BigInt::from(self.n) * BigInt::from(self.norm_sign.as_i8()) && self.value().is_positive()
    }

    /// The solution at orbit index `k`, reached by stepping from `self`.
    pub fn at(&self, k: i64) -> Self {
        let dir = if k >= self.k { Direction::Forward } else { Direction::Backward };
        let mut cur = self.clone();
        while cur.k != k {
            cur = cur.step(dir);
        }
        cur
    }
}

impl fmt::Display for PellSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

fn check_gap(n: u64) -> Result<()> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::InvalidGap(n));
    }
    Ok(())
}

/// Every solution of `p^2 - 2q^2 = +-n` with `1 + sqrt2 <= p + q*sqrt2 < 3 + 2*sqrt2`,
/// one per orbit, ascending by `p + q*sqrt2`, each with `k = 1`.
pub fn fundamental_solutions(n: u64) -> Result<Vec<PellSolution>> {
    check_gap(n)?;
    let lower = QuadRat::unit();
    let upper = QuadRat::integral(3, 2);
    let down = QuadRat::integral(-1, 1);

    let mut found: Vec<PellSolution> = Vec::new();
    for q in 0..=search_bound(n) {
        let q = BigInt::from(q);
        let two_q2 = BigInt::from(2) * &q * &q;
        for rhs in [&two_q2 + BigInt::from(n), &two_q2 - BigInt::from(n)] {
            let Some(p) = exact_sqrt(&rhs) else { continue };
            for (p, q) in signed_variants(&p, &q) {
                let mut x = QuadRat::integral(p, q);
                if !x.is_positive() {
                    continue;
                }
                while x < lower {
                    x = &x * &lower;
                }
                while x >= upper {
                    x = &x * &down;
                }
                let sol = PellSolution::new(x.u().clone(), x.v().clone(), n, 1)
                    .expect("unit multiples of a solution remain solutions");
                if !found.contains(&sol) {
                    found.push(sol);
                }
            }
        }
    }
    found.sort_by_key(PellSolution::value);
    Ok(found)
}

/// Smallest `B` with `2*sqrt2*B >= (3 + 2*sqrt2) + n*(sqrt2 - 1)`.
///
/// A fundamental solution `x` has `|conj x| = n / x <= n / (1 + sqrt2)`, and
/// `q = (x - conj x) / (2*sqrt2)`, so `|q| <= B` for every one of them.
fn search_bound(n: u64) -> u64 {
    let n_big = BigInt::from(n);
    let reach = QuadRat::integral(BigInt::from(3) - &n_big, BigInt::from(2) + &n_big);
    let mut b = 0u64;
    while QuadRat::integral(0, 2 * b) < reach {
        b += 1;
    }
    b
}

fn signed_variants(p: &BigInt, q: &BigInt) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::with_capacity(4);
    for sp in [p.clone(), -p] {
        for sq in [q.clone(), -q] {
            if !out.contains(&(sp.clone(), sq.clone())) {
                out.push((sp.clone(), sq));
            }
        }
    }
    out
}

pub(crate) fn exact_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

/// Contiguous orbit slice covering indices `k_min..=k_max`.
pub fn orbit(seed: &PellSolution, k_min: i64, k_max: i64) -> Vec<PellSolution> {
    if k_min > k_max {
        return Vec::new();
    }
    let mut cur = seed.at(k_min);
    let mut out = Vec::with_capacity((k_max - k_min + 1) as usize);
    loop {
        assert!(cur.holds(), "orbit left the solution set at k = {}", cur.k);
        let k = cur.k;
        let next = cur.step(Direction::Forward);
        out.push(cur);
        if k == k_max {
            break;
        }
        cur = next;
    }
    out
}

/// Sign of `p*q`.
pub fn product_sign(sol: &PellSolution) -> Ordering {
    let pq = sol.p() * sol.q();
    if pq.is_zero() {
        Ordering::Equal
    } else if pq.is_negative() {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}
