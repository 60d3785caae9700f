//! Brute-force ground truth.
//!
//! [`enumerate`] scans the smaller leg directly and tests `m^2 + (m+gap)^2`
//! for a perfect square with machine integers. It shares nothing with the
//! Pell or recurrence code; [`cross_check`] is the only place the two meet.

use std::collections::BTreeSet;
use std::thread;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::pell::fundamental_solutions;
use crate::sequence::orbit_rows_up_to;
use crate::triples::PythTriple;

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub gap: u64,
    pub z_max: u64,
    /// Strictly ascending by `z`, all real and primitive.
    pub triples: Vec<PythTriple>,
    pub elapsed: Duration,
}

impl OracleReport {
    pub fn hypotenuses(&self) -> BTreeSet<BigInt> {
        self.triples.iter().map(|t| t.z.clone()).collect()
    }
}

/// Largest smaller leg `m` with `m^2 + (m + gap)^2 <= z_max^2`, or 0 if none.
pub fn max_leg(gap: u64, z_max: u64) -> u64 {
    let (g, z2) = (gap as u128, (z_max as u128) * (z_max as u128));
    let fits = |m: u128| m * m + (m + g) * (m + g) <= z2;
    // m <= z_max / sqrt2; start at the float-free estimate isqrt(z^2 / 2)
    let mut m = (z2 / 2).isqrt();
    while m > 0 && !fits(m) {
        m -= 1;
    }
    while fits(m + 1) {
        m += 1;
    }
    if m == 0 || !fits(m) {
        0
    } else {
        m as u64
    }
}

/// Hits in the smaller-leg range `m_lo..=m_hi`, ascending.
pub fn scan_range(gap: u64, m_lo: u64, m_hi: u64) -> Vec<PythTriple> {
    let g = gap as u128;
    let mut out = Vec::new();
    for m in m_lo.max(1)..=m_hi {
        let mm = m as u128;
        let sum = mm * mm + (mm + g) * (mm + g);
        let z = sum.isqrt();
        // gcd(m, m + gap, z) = gcd(m, gap) once the triple exists
        if z * z == sum && m.gcd(&gap) == 1 {
            let t = PythTriple::new(m, m + gap, BigInt::from(z), gap).expect("y - x = gap by construction");
            out.push(t);
        }
    }
    out
}

/// All primitive triples with leg gap `gap` and `z <= z_max`, single-threaded.
pub fn enumerate(gap: u64, z_max: u64) -> Result<OracleReport> {
    enumerate_chunked(gap, z_max, 1)
}

/// Same as [`enumerate`], splitting the leg range across `workers` threads.
/// The merged output does not depend on the worker count.
pub fn enumerate_chunked(gap: u64, z_max: u64, workers: usize) -> Result<OracleReport> {
    if gap == 0 || gap.is_multiple_of(2) {
        return Err(Error::InvalidGap(gap));
    }
    let start = Instant::now();
    let m_hi = max_leg(gap, z_max);
    let workers = workers.max(1) as u64;
    let chunk = m_hi.div_ceil(workers).max(1);

    let mut triples: Vec<PythTriple> = if workers == 1 {
        scan_range(gap, 1, m_hi)
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let lo = w * chunk + 1;
                    let hi = ((w + 1) * chunk).min(m_hi);
                    scope.spawn(move || if lo > hi { Vec::new() } else { scan_range(gap, lo, hi) })
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("oracle worker panicked")).collect()
        })
    };
    triples.sort_by(|a, b| a.z.cmp(&b.z));
    triples.dedup_by(|a, b| a.z == b.z);
    Ok(OracleReport { gap, z_max, triples, elapsed: start.elapsed() })
}

#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub gap: u64,
    pub z_max: u64,
    pub oracle: BTreeSet<BigInt>,
    pub sequence: BTreeSet<BigInt>,
    /// In the oracle set but not produced by the sequences.
    pub missing: Vec<BigInt>,
    /// Produced by the sequences but not found by the oracle.
    pub extra: Vec<BigInt>,
    pub oracle_elapsed: Duration,
}

impl CrossCheck {
    pub fn is_equal(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// Oracle hypotenuses against the real rows of the two-sided orbits, up to `z_max`.
///
/// For gaps 1 and 7 the single stitched orbit already covers every
/// fundamental solution; gaps with more orbit pairs (119, ...) need the union.
pub fn cross_check(gap: u64, z_max: u64) -> Result<CrossCheck> {
    cross_check_chunked(gap, z_max, 1)
}

pub fn cross_check_chunked(gap: u64, z_max: u64, workers: usize) -> Result<CrossCheck> {
    let report = enumerate_chunked(gap, z_max, workers)?;
    let oracle = report.hypotenuses();
    let bound = BigInt::from(z_max);
    let mut sequence = BTreeSet::new();
    for seed in fundamental_solutions(gap)? {
        let rows = orbit_rows_up_to(&seed, &bound)?;
        sequence.extend(rows.into_iter().filter(|row| !row.is_virtual).map(|row| row.z));
    }
    let missing = oracle.difference(&sequence).cloned().collect();
    let extra = sequence.difference(&oracle).cloned().collect();
    Ok(CrossCheck { gap, z_max, oracle, sequence, missing, extra, oracle_elapsed: report.elapsed })
}
