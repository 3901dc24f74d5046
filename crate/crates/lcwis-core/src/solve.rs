//! Exact LCWIS / WLCWIS solvers plus exponential brute-force oracles.
//!
//! The solver is a row-by-row quadratic DP in the style of the classic
//! common-increasing-subsequence algorithms, with the strict comparison
//! relaxed to `<=` and each matched cell gaining the symbol's weight:
//!
//! `dp[j]` holds the heaviest common weakly increasing subsequence of the
//! rows consumed so far and the column sequence that ends exactly at column
//! `j`. When row symbol `a` equals column symbol `b[j]`, the cell becomes
//! `best + w(a)` where `best` ranges over previous-row cells at `j' < j`
//! with `b[j'] <= a`. Folding each cell's pre-update value into `best`
//! keeps the scan single-row and in-place without ever chaining two matches
//! of the same row element.
//!
//! Value-only mode uses one DP row over the shorter input. Witness mode
//! additionally stores, for every matching cell `(i, j)`, the heaviest
//! subsequence that *starts* there (the same DP run on reversed inputs
//! under the reversed order) and then replays the chain front-to-back,
//! which yields the witness whose positions in `a` are lexicographically
//! earliest among all optimal witnesses.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::seq::{self, SeqError, Sequence, Symbol, WeightedAlphabet};

/// Inputs longer than this are rejected by the brute-force oracles; `2^14`
/// candidate subsequences keep a trial well under a second.
pub const ORACLE_MAX_LEN: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Seq(#[from] SeqError),
    #[error("oracle input length {len} exceeds the {max}-symbol cutoff")]
    OracleTooLong { len: usize, max: usize },
}

/// Solver output: the optimal value (length for LCWIS, total weight for
/// WLCWIS) and, on request, one optimal witness subsequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: i64,
    pub witness: Option<Sequence>,
}

/// Length of the longest common weakly increasing subsequence of `a` and
/// `b`, in `O(|a| * |b|)` time.
pub fn lcwis(a: &Sequence, b: &Sequence, want_witness: bool) -> SolveResult {
    solve(a, b, &|_| 1, want_witness)
}

/// Maximum total weight of a common weakly increasing subsequence. Every
/// symbol of both inputs must be weighted.
pub fn wlcwis(
    a: &Sequence,
    b: &Sequence,
    w: &WeightedAlphabet,
    want_witness: bool,
) -> Result<SolveResult, SolveError> {
    // Validates coverage and the 2^62 budget up front; the DP values are
    // bounded by these totals and cannot overflow afterwards.
    seq::total_weight(a, w)?;
    seq::total_weight(b, w)?;
    Ok(solve(a, b, &|s| w.weight(s).unwrap_or(0), want_witness))
}

fn solve(
    a: &Sequence,
    b: &Sequence,
    weight: &dyn Fn(Symbol) -> i64,
    want_witness: bool,
) -> SolveResult {
    if want_witness {
        let (value, symbols) = witness_dp(a.symbols(), b.symbols(), weight);
        SolveResult {
            value,
            witness: Some(Sequence::new(symbols)),
        }
    } else {
        // Keep the DP row over the shorter side; the value is symmetric.
        let (rows, cols) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        SolveResult {
            value: value_dp(rows.symbols(), cols.symbols(), weight),
            witness: None,
        }
    }
}

fn value_dp(rows: &[Symbol], cols: &[Symbol], weight: &dyn Fn(Symbol) -> i64) -> i64 {
    let mut dp = vec![0i64; cols.len()];
    for &a in rows {
        let gain = weight(a);
        let mut best = 0i64;
        for (cell, &b) in dp.iter_mut().zip(cols) {
            // `prev` is the previous-row value; folding it (and never the
            // freshly written one) into `best` prevents matching the same
            // row element twice when `b == a` satisfies `b <= a`.
            let prev = *cell;
            if b == a && best + gain > prev {
                *cell = best + gain;
            }
            if b <= a && prev > best {
                best = prev;
            }
        }
    }
    dp.into_iter().max().unwrap_or(0)
}

/// Exact-value witness search; `O(|a| * |b|)` time and memory.
fn witness_dp(
    a: &[Symbol],
    b: &[Symbol],
    weight: &dyn Fn(Symbol) -> i64,
) -> (i64, Vec<Symbol>) {
    let (n, m) = (a.len(), b.len());
    if n == 0 || m == 0 {
        return (0, Vec::new());
    }

    // start[i*m + j]: heaviest common weakly increasing subsequence whose
    // first match is exactly (a[i], b[j]); 0 where a[i] != b[j]. Computed by
    // the row DP on reversed inputs under the reversed order.
    let mut start = vec![0i64; n * m];
    let mut dp = vec![0i64; m];
    for i in (0..n).rev() {
        let ai = a[i];
        let gain = weight(ai);
        let mut best = 0i64;
        for j in (0..m).rev() {
            let prev = dp[j];
            if b[j] == ai {
                let cand = best + gain;
                start[i * m + j] = cand;
                if cand > prev {
                    dp[j] = cand;
                }
            }
            if b[j] >= ai && prev > best {
                best = prev;
            }
        }
    }

    let value = start.iter().copied().max().unwrap_or(0);
    if value == 0 {
        return (0, Vec::new());
    }

    // Replay the chain front-to-back. Taking at every step the smallest
    // feasible row (then column) yields the lexicographically earliest
    // witness positions in `a`; rows are scanned at most once overall.
    let (mut ci, mut cj) = (0, 0);
    'first: for i in 0..n {
        for j in 0..m {
            if start[i * m + j] == value {
                (ci, cj) = (i, j);
                break 'first;
            }
        }
    }

    let mut symbols = vec![a[ci]];
    let mut remaining = value - weight(a[ci]);
    let mut i = ci + 1;
    while remaining > 0 {
        let mut advanced = false;
        while i < n {
            let ai = a[i];
            if ai >= b[cj] {
                if let Some(j) =
                    (cj + 1..m).find(|&j| b[j] == ai && start[i * m + j] == remaining)
                {
                    symbols.push(ai);
                    remaining -= weight(ai);
                    cj = j;
                    i += 1;
                    advanced = true;
                    break;
                }
            }
            i += 1;
        }
        assert!(advanced, "witness reconstruction lost the optimal chain");
    }
    (value, symbols)
}

/// Brute-force LCWIS ground truth: enumerates every subsequence of the
/// shorter input and keeps the longest weakly increasing one that embeds in
/// the other. Rejects inputs with `min(|a|, |b|) > 14`.
pub fn lcwis_oracle(a: &Sequence, b: &Sequence) -> Result<i64, SolveError> {
    oracle(a, b, &|_| 1)
}

/// Weighted variant of [`lcwis_oracle`], maximizing total weight.
pub fn wlcwis_oracle(
    a: &Sequence,
    b: &Sequence,
    w: &WeightedAlphabet,
) -> Result<i64, SolveError> {
    seq::total_weight(a, w)?;
    seq::total_weight(b, w)?;
    oracle(a, b, &|s| w.weight(s).unwrap_or(0))
}

fn oracle(a: &Sequence, b: &Sequence, weight: &dyn Fn(Symbol) -> i64) -> Result<i64, SolveError> {
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let k = short.len();
    if k > ORACLE_MAX_LEN {
        return Err(SolveError::OracleTooLong {
            len: k,
            max: ORACLE_MAX_LEN,
        });
    }

    let mut candidate = Vec::with_capacity(k);
    let mut best = 0i64;
    for mask in 0u32..1 << k {
        candidate.clear();
        for (idx, &sym) in short.iter().enumerate() {
            if mask >> idx & 1 == 1 {
                candidate.push(sym);
            }
        }
        let cand = Sequence::new(core::mem::take(&mut candidate));
        if seq::is_weakly_increasing(&cand) && seq::is_subsequence(&cand, long) {
            let score = cand.iter().map(|&s| weight(s)).sum();
            if score > best {
                best = score;
            }
        }
        candidate = cand.into_symbols();
    }
    Ok(best)
}
