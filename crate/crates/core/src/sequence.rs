//! Second-order recurrences `a_{n+1} = A a_n + B a_{n-1}` over the triple
//! hypotenuses: coefficient prediction, closed forms in Q(sqrt 2), two-sided
//! iteration and the stitched orbit table.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pell::{self, exact_sqrt, PellSolution};
use crate::quadring::QuadRat;
use crate::triples::{params_to_triple, pell_to_params};

/// Horizon used by [`validate_candidate`] when the caller has no preference.
pub const DEFAULT_HORIZON: i64 = 16;

fn ratio(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec {
    a: BigRational,
    b: BigRational,
    a0: BigInt,
    a1: BigInt,
    offset: BigInt,
}

impl RecurrenceSpec {
    pub fn new(
        a: BigRational,
        b: BigRational,
        a0: impl Into<BigInt>,
        a1: impl Into<BigInt>,
        offset: impl Into<BigInt>,
    ) -> Result<Self> {
        let disc = &a * &a + ratio(4) * &b;
        if !disc.is_positive() {
            return Err(Error::DegenerateRecurrence(disc));
        }
        Ok(Self { a, b, a0: a0.into(), a1: a1.into(), offset: offset.into() })
    }

    /// `a_{n+1} = 6a_n - a_{n-1}` with the given seeds.
    pub fn six(a0: impl Into<BigInt>, a1: impl Into<BigInt>, gap: u64) -> Self {
        let g = BigInt::from(gap);
        Self::new(ratio(6), ratio(-1), a0, a1, &g * &g).expect("A = 6, B = -1 has distinct roots")
    }

    /// Gap 7, seeds 5 and 13.
    pub fn seed13() -> Self {
        Self::six(5, 13, 7)
    }

    /// Gap 7, seeds 5 and 17.
    pub fn seed17() -> Self {
        Self::six(5, 17, 7)
    }

    /// Gap 1, seeds 1 and 5.
    pub fn cimmino() -> Self {
        Self::six(1, 5, 1)
    }

    /// The hypotenuse recurrence of the orbit through `seed`: `a_0`, `a_1` are
    /// the hypotenuses at orbit indices 0 and 1.
    pub fn from_seed(seed: &PellSolution) -> Result<Self> {
        let z = |k| -> Result<BigInt> {
            let sol = seed.at(k);
            Ok(params_to_triple(&pell_to_params(&sol), sol.n())?.z)
        };
        Ok(Self::six(z(0)?, z(1)?, seed.n()))
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn a0(&self) -> &BigInt {
        &self.a0
    }

    pub fn a1(&self) -> &BigInt {
        &self.a1
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }
}

/// Terms `a_n` for `n_from..=n_to` as exact rationals.
///
/// Indices above 1 use the forward recurrence; indices below 0 use
/// `a_{n-1} = (a_{n+1} - A a_n) / B`.
pub fn terms_rational(spec: &RecurrenceSpec, n_from: i64, n_to: i64) -> Result<Vec<BigRational>> {
    if n_from > n_to {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity((n_to - n_from + 1) as usize);

    if n_from < 0 {
        if spec.b.is_zero() {
            return Err(Error::NotReversible);
        }
        // walk down from (a_1, a_0) to a_{n_from}
        let mut back = Vec::with_capacity((-n_from) as usize);
        let (mut hi, mut lo) = (ratio(spec.a1.clone()), ratio(spec.a0.clone()));
        for _ in n_from..0 {
            let next = (&hi - &spec.a * &lo) / &spec.b;
            hi = lo;
            lo = next.clone();
            back.push(next);
        }
        // back[i] holds a_{-(i+1)}
        let upto = (n_to.min(-1) - n_from + 1) as usize;
        out.extend(back.into_iter().rev().take(upto));
    }

    if n_to >= 0 {
        let start = n_from.max(0);
        let (mut prev, mut cur) = (ratio(spec.a0.clone()), ratio(spec.a1.clone()));
        for n in 0..=n_to {
            if n >= start {
                out.push(prev.clone());
            }
            let next = &spec.a * &cur + &spec.b * &prev;
            prev = std::mem::replace(&mut cur, next);
        }
    }
    Ok(out)
}

/// Integer terms `a_n` for `n_from..=n_to`.
pub fn iterate(spec: &RecurrenceSpec, n_from: i64, n_to: i64) -> Result<Vec<BigInt>> {
    terms_rational(spec, n_from, n_to)?
        .into_iter()
        .zip(n_from..)
        .map(|(t, n)| {
            if t.is_integer() {
                Ok(t.to_integer())
            } else {
                Err(Error::NonIntegralTerm { n, value: t })
            }
        })
        .collect()
}

/// Rational roots `A` (ascending) of the condition that, with `B = -1`,
/// `2a_n^2 - offset` is the square of the conjugate combination for every `n`.
///
/// Clearing denominators in `2(a0^2 (A^2-4) - (A a0 - 2a1)^2) / (A^2-4) = offset`
/// leaves `offset*A^2 - 8 a0 a1 A + (8a0^2 + 8a1^2 - 4 offset) = 0`.
pub fn predict_recurrence(a0: &BigInt, a1: &BigInt, offset: &BigInt) -> Result<Vec<BigRational>> {
    if !(a0 >= &BigInt::one() && a1 > a0) {
        return Err(Error::InvalidSeeds { a0: a0.clone(), a1: a1.clone() });
    }
    let two = BigInt::from(2);
    let lead = offset.clone();
    let mid = -(BigInt::from(8) * a0 * a1);
    let tail = BigInt::from(8) * (a0 * a0 + a1 * a1) - BigInt::from(4) * offset;

    let disc = &mid * &mid - BigInt::from(4) * &lead * &tail;
    let Some(root) = exact_sqrt(&disc) else {
        return Ok(Vec::new());
    };
    let mut roots: Vec<BigRational> = [-&mid - &root, -&mid + &root]
        .into_iter()
        .map(|num| BigRational::new(num, &two * &lead))
        .filter(|a| a * a != ratio(4))
        .collect();
    roots.sort();
    roots.dedup();
    Ok(roots)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RejectReason {
    NonInteger,
    NonPositive,
    NotCompanionSquare,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub n: i64,
    pub reason: RejectReason,
    /// `a_n` from the recurrence.
    pub value: BigRational,
    /// `a_n` from the closed form, when `sqrt(A^2 - 4)` lies in Q(sqrt 2).
    pub closed_form: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(Rejection),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

/// Runs `a_{n+1} = A a_n - a_{n-1}` to `horizon` and checks each `a_n`,
/// `n >= 2`, is a positive integer with `2a_n^2 - offset` an odd square
/// above `offset`.
pub fn validate_candidate(a: &BigRational, a0: &BigInt, a1: &BigInt, offset: &BigInt, horizon: i64) -> Verdict {
    let (mut prev, mut cur) = (ratio(a0.clone()), ratio(a1.clone()));
    for n in 2..=horizon {
        let next = a * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
        let reject = |reason| {
            Verdict::Reject(Rejection {
                n,
                reason,
                value: cur.clone(),
                closed_form: closed_form_value(a, a0, a1, n),
            })
        };
        if !cur.is_integer() {
            return reject(RejectReason::NonInteger);
        }
        let term = cur.to_integer();
        if !term.is_positive() {
            return reject(RejectReason::NonPositive);
        }
        let dd = BigInt::from(2) * &term * &term - offset;
        match exact_sqrt(&dd) {
            Some(d) if d.is_odd() && dd > *offset => {}
            _ => return reject(RejectReason::NotCompanionSquare),
        }
    }
    Verdict::Accept
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CandidateStatus {
    Accept,
    /// Integral to the horizon, but its terms are a proper subset of the
    /// smallest accepted candidate's terms.
    AcceptSubsequence,
    Reject,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assessment {
    pub a: BigRational,
    pub verdict: Verdict,
    pub status: CandidateStatus,
}

/// Predicts, validates and ranks every candidate `A` for the given seeds.
pub fn assess_candidates(a0: &BigInt, a1: &BigInt, offset: &BigInt, horizon: i64) -> Result<Vec<Assessment>> {
    let candidates = predict_recurrence(a0, a1, offset)?;
    let verdicts: Vec<Verdict> = candidates
        .iter()
        .map(|a| validate_candidate(a, a0, a1, offset, horizon))
        .collect();

    let terms = |a: &BigRational| -> Result<Vec<BigInt>> {
        let spec = RecurrenceSpec::new(a.clone(), ratio(-1), a0.clone(), a1.clone(), offset.clone())?;
        iterate(&spec, 1, horizon)
    };
    let primary = candidates.iter().zip(&verdicts).find(|(_, v)| v.is_accept()).map(|(a, _)| a.clone());
    let primary_terms: BTreeSet<BigInt> = match &primary {
        Some(a) => terms(a)?.into_iter().collect(),
        None => BTreeSet::new(),
    };
    let bound = primary_terms.iter().next_back().cloned().unwrap_or_default();

    let mut out = Vec::with_capacity(candidates.len());
    for (a, verdict) in candidates.into_iter().zip(verdicts) {
        let status = if !verdict.is_accept() {
            CandidateStatus::Reject
        } else if primary.as_ref() == Some(&a) {
            CandidateStatus::Accept
        } else {
            let own: BTreeSet<BigInt> = terms(&a)?.into_iter().filter(|t| *t <= bound).collect();
            if own.is_subset(&primary_terms) && own.len() < primary_terms.len() {
                CandidateStatus::AcceptSubsequence
            } else {
                CandidateStatus::Accept
            }
        };
        out.push(Assessment { a, verdict, status });
    }
    Ok(out)
}

/// `sqrt(r)` inside Q(sqrt 2), when it lives there.
fn sqrt_in_field(r: &BigRational) -> Option<QuadRat> {
    if !r.is_positive() {
        return None;
    }
    // sqrt(n/d) = sqrt(n d) / d
    let nd = r.numer() * r.denom();
    if let Some(s) = exact_sqrt(&nd) {
        return QuadRat::new(s, 0, r.denom().clone()).ok();
    }
    if nd.is_even() {
        if let Some(t) = exact_sqrt(&(&nd / 2)) {
            return QuadRat::new(0, t, r.denom().clone()).ok();
        }
    }
    None
}

/// Closed-form pieces for `B = -1`: `a_n = c x_+^n + (a0 - c) x_-^n`.
struct ClosedForm {
    c_plus: QuadRat,
    c_minus: QuadRat,
    root_plus: QuadRat,
    root_minus: QuadRat,
}

impl ClosedForm {
    fn new(a: &BigRational, a0: &BigInt, a1: &BigInt) -> Option<Self> {
        let sqrt_d = sqrt_in_field(&(a * a - ratio(4)))?;
        let half = QuadRat::from_ratio(&BigRational::new(1.into(), 2.into()));
        let a_q = QuadRat::from_ratio(a);
        let a0_q = QuadRat::from_int(a0.clone());
        let root_plus = &(&a_q + &sqrt_d) * &half;
        let root_minus = &(&a_q - &sqrt_d) * &half;
        // c = (2a1 - A a0 + a0 sqrt D) / (2 sqrt D)
        let numer = &(&QuadRat::from_int(BigInt::from(2) * a1) - &(&a_q * &a0_q)) + &(&a0_q * &sqrt_d);
        let c_plus = numer.div(&(&sqrt_d * &QuadRat::from_int(2))).ok()?;
        let c_minus = &a0_q - &c_plus;
        Some(Self { c_plus, c_minus, root_plus, root_minus })
    }

    fn term(&self, n: i64) -> (QuadRat, QuadRat) {
        let plus = &self.c_plus * &self.root_plus.pow(n).expect("roots are nonzero");
        let minus = &self.c_minus * &self.root_minus.pow(n).expect("roots are nonzero");
        let a_n = &plus + &minus;
        let d_n = &QuadRat::sqrt2() * &(&plus - &minus);
        (a_n, d_n)
    }
}

/// `a_n` of `a_{n+1} = A a_n - a_{n-1}` evaluated through the closed form.
pub fn closed_form_value(a: &BigRational, a0: &BigInt, a1: &BigInt, n: i64) -> Option<BigRational> {
    let (a_n, _) = ClosedForm::new(a, a0, a1)?.term(n);
    a_n.to_rational()
}

/// `(a_n, d_n)` from the closed form, with `d_n^2 = 2a_n^2 - offset`.
pub fn closed_form_term(spec: &RecurrenceSpec, n: i64) -> Result<(BigInt, BigInt)> {
    if spec.b != ratio(-1) {
        return Err(Error::NoClosedForm);
    }
    let cf = ClosedForm::new(&spec.a, &spec.a0, &spec.a1).ok_or(Error::NoClosedForm)?;
    let (a_n, d_n) = cf.term(n);
    let a_int = a_n.to_integer().ok_or_else(|| Error::ClosedFormInconsistent { n, value: a_n.to_string() })?;
    let d_int = d_n
        .to_integer()
        .ok_or_else(|| Error::ClosedFormInconsistent { n, value: d_n.to_string() })?
        .abs();
    if &d_int * &d_int != BigInt::from(2) * &a_int * &a_int - &spec.offset {
        return Err(Error::ClosedFormInconsistent { n, value: d_n.to_string() });
    }
    Ok((a_int, d_int))
}

/// One row of an orbit table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SequenceRow {
    pub k: i64,
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub s: BigInt,
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
    pub d: BigInt,
    pub is_virtual: bool,
}

impl SequenceRow {
    pub fn from_solution(sol: &PellSolution) -> Result<Self> {
        let pair = pell_to_params(sol);
        let t = params_to_triple(&pair, sol.n())?;
        let d = (&t.x + &t.y).abs();
        let g = BigInt::from(sol.n());
        assert_eq!(&pair.r * &pair.r + &pair.s * &pair.s, t.z);
        assert_eq!(&d * &d, BigInt::from(2) * &t.z * &t.z - &g * &g);
        Ok(Self {
            k: sol.k(),
            p: sol.p().clone(),
            q: sol.q().clone(),
            r: pair.r,
            s: pair.s,
            x: t.x,
            y: t.y,
            z: t.z,
            d,
            is_virtual: t.is_virtual,
        })
    }

    /// Has a zero leg, like the gap-1 anchor `(0, 1, 1)`.
    pub fn is_degenerate(&self) -> bool {
        self.x.is_zero() || self.y.is_zero()
    }
}

/// Rows for orbit indices `k_min..=k_max` through `seed`.
pub fn orbit_rows(seed: &PellSolution, k_min: i64, k_max: i64) -> Result<Vec<SequenceRow>> {
    pell::orbit(seed, k_min, k_max).iter().map(SequenceRow::from_solution).collect()
}

/// The two-sided orbit through the smallest fundamental solution of `gap`.
///
/// For gap 7 the positive side runs 13, 73, 425, ... and the negative side
/// 17, 97, 565, ..., with the virtual `z = 5` row at `k = 0`. Empty when the
/// gap has no fundamental solutions.
pub fn stitched_sequence(gap: u64, k_min: i64, k_max: i64) -> Result<Vec<SequenceRow>> {
    match pell::fundamental_solutions(gap)?.first() {
        Some(seed) => orbit_rows(seed, k_min, k_max),
        None => Ok(Vec::new()),
    }
}

/// Every row of the stitched orbit with `z <= z_max`, in index order.
pub fn stitched_up_to(gap: u64, z_max: &BigInt) -> Result<Vec<SequenceRow>> {
    match pell::fundamental_solutions(gap)?.first() {
        Some(seed) => orbit_rows_up_to(seed, z_max),
        None => Ok(Vec::new()),
    }
}

/// Every row of the two-sided orbit through `seed` with `z <= z_max`, in index order.
pub fn orbit_rows_up_to(seed: &PellSolution, z_max: &BigInt) -> Result<Vec<SequenceRow>> {
    let anchor = seed.at(0);
    let mut rows = Vec::new();
    let mut collect = |dir| -> Result<()> {
        let mut sol = anchor.clone();
        let mut prev: Option<BigInt> = None;
        loop {
            let row = SequenceRow::from_solution(&sol)?;
            // z along an orbit is convex in k: once it grows past z_max
            // moving outward it never comes back
            if &row.z > z_max && prev.as_ref().is_some_and(|p| row.z > *p) {
                return Ok(());
            }
            prev = Some(row.z.clone());
            if &row.z <= z_max {
                rows.push(row);
            }
            sol = sol.step(dir);
        }
    };
    collect(pell::Direction::Backward)?;
    collect(pell::Direction::Forward)?;
    rows.sort_by_key(|r| r.k);
    rows.dedup_by_key(|r| r.k);
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Independent check: substitute `A` back into the uncleared equation.
    fn satisfies(a: &BigRational, a0: i64, a1: i64, offset: i64) -> bool {
        let d = a * a - ratio(4);
        if d.is_zero() {
            return false;
        }
        let lhs = ratio(2) * (ratio(a0 * a0) * &d - (a * ratio(a0) - ratio(2 * a1)).pow(2)) / d;
        lhs == ratio(offset)
    }

    /// Brute force over `A = j / offset`; the rational root theorem puts
    /// every rational root on this grid.
    fn brute_roots(a0: i64, a1: i64, offset: i64) -> Vec<BigRational> {
        let lim = 100 * offset;
        (-lim..=lim).map(|j| r(j, offset)).filter(|a| satisfies(a, a0, a1, offset)).collect::<BTreeSet<_>>().into_iter().collect()
    }

    #[test]
    fn predict_examples() {
        let p = |a0: i64, a1: i64, off: i64| predict_recurrence(&a0.into(), &a1.into(), &off.into()).unwrap();
        assert_eq!(brute_roots(5, 13, 49), vec![r(226, 49), r(6, 1)]);
        assert_eq!(p(5, 13, 49), vec![r(226, 49), r(6, 1)]);
        assert_eq!(brute_roots(5, 17, 49), vec![r(6, 1), r(386, 49)]);
        assert_eq!(p(5, 17, 49), vec![r(6, 1), r(386, 49)]);
        assert_eq!(brute_roots(1, 5, 1), vec![r(6, 1), r(34, 1)]);
        assert_eq!(p(1, 5, 1), vec![r(6, 1), r(34, 1)]);
    }

    #[test]
    fn predict_matches_brute_force_on_a_grid() {
        for a0 in 1..6 {
            for a1 in (a0 + 1)..12 {
                for off in [1, 9, 25, 49] {
                    let got = predict_recurrence(&a0.into(), &a1.into(), &off.into()).unwrap();
                    assert_eq!(got, brute_roots(a0, a1, off), "({a0}, {a1}, {off})");
                }
            }
        }
    }

    #[test]
    fn predict_rejects_bad_seeds() {
        assert!(predict_recurrence(&5.into(), &5.into(), &49.into()).is_err());
        assert!(predict_recurrence(&0.into(), &5.into(), &49.into()).is_err());
    }

    #[test]
    fn validate_examples() {
        let v = validate_candidate(&r(226, 49), &5.into(), &13.into(), &49.into(), DEFAULT_HORIZON);
        let Verdict::Reject(rej) = v else { panic!("226/49 accepted") };
        assert_eq!((rej.n, rej.reason, rej.value.clone()), (2, RejectReason::NonInteger, r(2693, 49)));
        assert_eq!(rej.closed_form, Some(r(2693, 49)));

        let v = validate_candidate(&r(386, 49), &5.into(), &17.into(), &49.into(), DEFAULT_HORIZON);
        let Verdict::Reject(rej) = v else { panic!("386/49 accepted") };
        assert_eq!(rej.n, 2);
        assert_eq!(rej.closed_form, Some(r(309533, 2401)));

        assert!(validate_candidate(&r(6, 1), &5.into(), &13.into(), &49.into(), 10).is_accept());
        assert!(validate_candidate(&r(34, 1), &1.into(), &5.into(), &1.into(), 10).is_accept());
    }

    #[test]
    fn assess_flags_subsequence() {
        let got = assess_candidates(&1.into(), &5.into(), &1.into(), DEFAULT_HORIZON).unwrap();
        let st: Vec<_> = got.iter().map(|a| (a.a.clone(), a.status)).collect();
        assert_eq!(st, vec![(r(6, 1), CandidateStatus::Accept), (r(34, 1), CandidateStatus::AcceptSubsequence)]);

        let got = assess_candidates(&5.into(), &13.into(), &49.into(), DEFAULT_HORIZON).unwrap();
        let st: Vec<_> = got.iter().map(|a| a.status).collect();
        assert_eq!(st, vec![CandidateStatus::Reject, CandidateStatus::Accept]);
    }

    #[test]
    fn closed_form_examples() {
        let t = |spec: &RecurrenceSpec, n| {
            let (a, d) = closed_form_term(spec, n).unwrap();
            (i64::try_from(a).unwrap(), i64::try_from(d).unwrap())
        };
        assert_eq!(t(&RecurrenceSpec::seed13(), 2), (73, 103));
        assert_eq!(t(&RecurrenceSpec::seed17(), 2), (97, 137));
        assert_eq!(t(&RecurrenceSpec::seed13(), 0), (5, 1));
        assert_eq!(t(&RecurrenceSpec::seed13(), -1), (17, 23));
        assert_eq!(t(&RecurrenceSpec::cimmino(), 3), (169, 239));
    }

    #[test]
    fn closed_form_needs_b_minus_one() {
        let spec = RecurrenceSpec::new(ratio(1), ratio(1), 0, 1, 1).unwrap();
        assert_eq!(closed_form_term(&spec, 3), Err(Error::NoClosedForm));
        // right shape, wrong offset: d_n^2 = 2a_n^2 - offset fails
        let spec = RecurrenceSpec::six(5, 13, 5);
        assert!(matches!(closed_form_term(&spec, 1), Err(Error::ClosedFormInconsistent { .. })));
    }

    #[test]
    fn degenerate_spec_rejected() {
        assert!(RecurrenceSpec::new(ratio(2), ratio(-1), 1, 2, 1).is_err());
    }

    #[test]
    fn iterate_examples() {
        assert_eq!(iterate(&RecurrenceSpec::seed13(), 0, 4).unwrap(), ints(&[5, 13, 73, 425, 2477]));
        assert_eq!(iterate(&RecurrenceSpec::seed17(), 0, 4).unwrap(), ints(&[5, 17, 97, 565, 3293]));
        assert_eq!(iterate(&RecurrenceSpec::seed13(), -4, 0).unwrap(), ints(&[3293, 565, 97, 17, 5]));
        assert_eq!(iterate(&RecurrenceSpec::seed13(), -2, 2).unwrap(), ints(&[97, 17, 5, 13, 73]));
        assert_eq!(iterate(&RecurrenceSpec::seed13(), 3, 3).unwrap(), ints(&[425]));
        assert_eq!(iterate(&RecurrenceSpec::seed13(), -3, -2).unwrap(), ints(&[565, 97]));
        assert!(iterate(&RecurrenceSpec::seed13(), 1, 0).unwrap().is_empty());
    }

    #[test]
    fn iterate_reports_non_integral_terms() {
        let spec = RecurrenceSpec::new(r(226, 49), ratio(-1), 5, 13, 49).unwrap();
        assert_eq!(iterate(&spec, 0, 3), Err(Error::NonIntegralTerm { n: 2, value: r(2693, 49) }));
    }

    #[test]
    fn from_seed_recovers_both_gap7_specs() {
        let fund = pell::fundamental_solutions(7).unwrap();
        assert_eq!(RecurrenceSpec::from_seed(&fund[0]).unwrap(), RecurrenceSpec::seed13());
        assert_eq!(RecurrenceSpec::from_seed(&fund[1]).unwrap(), RecurrenceSpec::seed17());
        let fund = pell::fundamental_solutions(1).unwrap();
        assert_eq!(RecurrenceSpec::from_seed(&fund[0]).unwrap(), RecurrenceSpec::cimmino());
    }

    fn zs(rows: &[SequenceRow]) -> Vec<i64> {
        rows.iter().map(|r| i64::try_from(&r.z).unwrap()).collect()
    }

    #[test]
    fn stitched_examples() {
        assert_eq!(zs(&stitched_sequence(7, -2, 2).unwrap()), vec![97, 17, 5, 13, 73]);
        assert_eq!(zs(&stitched_sequence(1, 1, 4).unwrap()), vec![5, 29, 169, 985]);
        let anchor = stitched_sequence(7, 0, 0).unwrap();
        assert_eq!(zs(&anchor), vec![5]);
        assert!(anchor[0].is_virtual);
        assert!(stitched_sequence(3, -3, 3).unwrap().is_empty());
    }

    #[test]
    fn stitched_rows_carry_consistent_columns() {
        let rows = stitched_sequence(7, -2, 2).unwrap();
        let row = &rows[1];
        assert_eq!(
            (row.k, &row.p, &row.q, &row.r, &row.s, &row.x, &row.y, &row.d),
            (-1, &(-5).into(), &4.into(), &(-1).into(), &4.into(), &8.into(), &15.into(), &23.into())
        );
        assert!(!row.is_virtual);
        assert!(rows.iter().filter(|r| r.is_virtual).count() == 1);
    }

    #[test]
    fn stitched_up_to_covers_both_sides() {
        assert_eq!(zs(&stitched_up_to(7, &100.into()).unwrap()), vec![97, 17, 5, 13, 73]);
        let cim = stitched_up_to(1, &200.into()).unwrap();
        assert_eq!(zs(&cim), vec![169, 29, 5, 1, 1, 5, 29, 169]);
        assert_eq!(cim.iter().filter(|r| r.is_degenerate()).count(), 2);
        assert!(stitched_up_to(3, &1000.into()).unwrap().is_empty());
    }
}
