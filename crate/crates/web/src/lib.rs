//! Browser bindings for the demo page in `www/`.
//!
//! Every function returns a JSON string. Integers are encoded as decimal
//! strings so values past 2^53 reach JavaScript intact.

use std::str::FromStr;

use num_bigint::BigInt;
use pythgap_core::sequence::{self, assess_candidates, CandidateStatus, Verdict, DEFAULT_HORIZON};
use pythgap_core::triples::{params_to_triple, pell_to_params};
use pythgap_core::{fundamental_solutions, SequenceRow};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn row_json(row: &SequenceRow) -> Value {
    json!({
        "k": row.k,
        "p": row.p.to_string(),
        "q": row.q.to_string(),
        "r": row.r.to_string(),
        "s": row.s.to_string(),
        "x": row.x.to_string(),
        "y": row.y.to_string(),
        "z": row.z.to_string(),
        "d": row.d.to_string(),
        "virtual": row.is_virtual,
    })
}

fn parse(name: &str, s: &str) -> Result<BigInt, String> {
    BigInt::from_str(s.trim()).map_err(|_| format!("{name}: `{s}` is not an integer"))
}

/// Fundamental solutions of `p^2 - 2q^2 = +-n` with the triple each one yields.
///
/// # Errors
///
/// Returns an error for a zero or even `n`.
#[wasm_bindgen]
pub fn pell_solutions(n: u32) -> Result<String, String> {
    let gap = u64::from(n);
    let sols = fundamental_solutions(gap).map_err(|e| e.to_string())?;
    let out = sols
        .iter()
        .map(|sol| {
            let t = params_to_triple(&pell_to_params(sol), gap).map_err(|e| e.to_string())?;
            Ok(json!({
                "p": sol.p().to_string(),
                "q": sol.q().to_string(),
                "norm": format!("{}{gap}", if sol.norm_sign().as_i8() > 0 { '+' } else { '-' }),
                "triple": [t.x.to_string(), t.y.to_string(), t.z.to_string()],
            }))
        })
        .collect::<Result<Vec<Value>, String>>()?;
    Ok(Value::Array(out).to_string())
}

/// Rows `from..=to` of one orbit. `seed` 0 selects the stitched sequence,
/// `seed` i >= 1 the i-th fundamental solution.
///
/// # Errors
///
/// Returns an error for an invalid gap, an unknown seed, or `from > to`.
#[wasm_bindgen]
pub fn orbit_table(gap: u32, seed: u32, from: i32, to: i32) -> Result<String, String> {
    if from > to {
        return Err(format!("from {from} is after to {to}"));
    }
    let gap = u64::from(gap);
    let (from, to) = (i64::from(from), i64::from(to));
    let rows = if seed == 0 {
        sequence::stitched_sequence(gap, from, to)
    } else {
        let fund = fundamental_solutions(gap).map_err(|e| e.to_string())?;
        let sol = fund
            .get(seed as usize - 1)
            .ok_or_else(|| format!("gap {gap} has {} fundamental solutions", fund.len()))?;
        sequence::orbit_rows(sol, from, to)
    }
    .map_err(|e| e.to_string())?;
    Ok(Value::Array(rows.iter().map(row_json).collect()).to_string())
}

/// Candidate coefficients `A` for `a_{n+1} = A a_n - a_{n-1}` from two seeds,
/// each with its verdict.
///
/// # Errors
///
/// Returns an error for non-integer input, a non-positive offset, or seeds the
/// prediction cannot use.
#[wasm_bindgen]
pub fn predict(a0: &str, a1: &str, offset: &str) -> Result<String, String> {
    let (a0, a1, offset) = (parse("a0", a0)?, parse("a1", a1)?, parse("offset", offset)?);
    if offset <= BigInt::from(0) {
        return Err("offset must be positive".into());
    }
    let found = assess_candidates(&a0, &a1, &offset, DEFAULT_HORIZON).map_err(|e| e.to_string())?;
    let out = found
        .iter()
        .map(|c| {
            let status = match c.status {
                CandidateStatus::Accept => "ACCEPT",
                CandidateStatus::AcceptSubsequence => "ACCEPT-SUBSEQUENCE",
                CandidateStatus::Reject => "REJECT",
            };
            let (n, value) = match &c.verdict {
                Verdict::Accept => (Value::Null, Value::Null),
                Verdict::Reject(r) => (json!(r.n), json!(r.value.to_string())),
            };
            json!({ "a": c.a.to_string(), "status": status, "n": n, "value": value })
        })
        .collect();
    Ok(Value::Array(out).to_string())
}
